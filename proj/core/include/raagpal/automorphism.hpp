#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raagpal/graph.hpp"
#include "raagpal/word.hpp"

namespace raagpal {

enum class Species { Diagram, Inversion, Transvection, PartialConjugation, ElemPalindromic };

/// One generator of Aut(A_Gamma), or its formal inverse.
///
/// Field use by species:
///   Diagram            perm (perm[v] is the image of v)
///   Inversion          i
///   Transvection       v_i -> v_i v_j
///   PartialConjugation d -> v_i d v_i^-1 for d in `component`
///   ElemPalindromic    v_i -> v_j v_i v_j
struct GeneratorSymbol {
  Species species = Species::Inversion;
  Vertex i = 0;
  Vertex j = 0;
  VertexSet component;
  std::vector<Vertex> perm;
  bool inverted = false;

  static GeneratorSymbol diagram(std::vector<Vertex> perm);
  static GeneratorSymbol inversion(Vertex i);
  static GeneratorSymbol transvection(Vertex i, Vertex j, bool inverted = false);
  static GeneratorSymbol partial_conjugation(Vertex i, VertexSet component, bool inverted = false);
  static GeneratorSymbol elem_palindromic(Vertex i, Vertex j, bool inverted = false);

  GeneratorSymbol inverse() const;
  /// True when the symbol's action leaves v fixed.
  bool fixes(Vertex v) const;
  bool operator==(const GeneratorSymbol&) const = default;
};

using SymbolWord = std::vector<GeneratorSymbol>;

/// Throws IllegalGenerator naming the violated condition.
void validate_symbol(const Graph& g, const GeneratorSymbol& s);

/// An automorphism of A_Gamma held as its vertex images, optionally with the
/// generator word (outermost first) that produced it.
class Automorphism {
 public:
  static Automorphism identity(GraphPtr graph);
  /// Checks that the images respect every edge relation (NotHomomorphism).
  static Automorphism from_images(GraphPtr graph, std::vector<Word> images);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const Word& image(Vertex v) const { return images_.at(v); }
  const std::vector<Word>& images() const { return images_; }
  const std::optional<SymbolWord>& provenance() const { return provenance_; }
  bool is_identity() const;
  std::size_t total_length() const;

  Word apply(const Word& w) const;
  /// Pointwise equality of images; provenance is ignored.
  bool operator==(const Automorphism& other) const;

  /// Canonical text key of the images, usable for hashing.
  std::string key() const;

 private:
  Automorphism(GraphPtr graph, std::vector<Word> images, std::optional<SymbolWord> provenance);

  GraphPtr graph_;
  std::vector<Word> images_;
  std::optional<SymbolWord> provenance_;

  friend Automorphism make_generator(const GraphPtr&, const GeneratorSymbol&);
  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism with_provenance(Automorphism, SymbolWord);
};

Automorphism make_generator(const GraphPtr& graph, const GeneratorSymbol& s);
/// s_1 o s_2 o ... o s_k; the empty word gives the identity.
Automorphism compose_word(const GraphPtr& graph, std::span<const GeneratorSymbol> word);
Automorphism iota(const GraphPtr& graph);
/// (a o b)(v) = a(b(v)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Word apply(const Automorphism& a, const Word& w);
/// Inverse through the recorded provenance; NoProvenance without one.
Automorphism invert(const Automorphism& a);
/// Attaches a provenance after checking that it reproduces the images.
Automorphism with_provenance(Automorphism a, SymbolWord word);
SymbolWord inverse_word(std::span<const GeneratorSymbol> word);

struct Predicates {
  bool in_centralizer = false;
  bool palindromic = false;
  bool pure = false;
  bool torelli = false;
  bool simple = false;
  VertexSet non_simple;
};

Predicates predicates(const Automorphism& a);
/// Every image is a palindrome whose unique odd-exponent letter is v itself.
bool pure_by_middle_letter(const Automorphism& a);
/// Exponent vector of every image is congruent to its basis vector mod 2.
bool phi2_is_identity(const Automorphism& a);
bool phi_is_identity(const Automorphism& a);

struct DiagramSplit {
  Automorphism delta;
  Automorphism gamma;
  std::vector<Vertex> perm;
};
/// a = delta o gamma with delta a diagram automorphism and gamma pure.
DiagramSplit split_diagram_pure(const Automorphism& a);

SymbolWord chi1_word(const Graph& g, Vertex i, Vertex j, Vertex k);
SymbolWord chi2_word(const Graph& g, Vertex i, Vertex j, Vertex k);
/// [P_ij, P_ik] with [A,B] = A B A^-1 B^-1.
Automorphism chi1(const GraphPtr& graph, Vertex i, Vertex j, Vertex k);
/// (P_jk P_ik^-1 P_ki P_kj P_ij P_ji^-1)^2.
Automorphism chi2(const GraphPtr& graph, Vertex i, Vertex j, Vertex k);
bool chi1_defined(const Graph& g, Vertex i, Vertex j, Vertex k);
bool chi2_defined(const Graph& g, Vertex i, Vertex j, Vertex k);

/// Grammar: whitespace separated terms `P(a,b)`, `inv(c)`, `tau(a,c)`,
/// `pc(a;c)` or `pc(a;c,d)`, `diag(a:c,c:a)`, each optionally suffixed `^-1`.
SymbolWord parse_symbols(const Graph& g, std::string_view text);
std::string format_symbol(const Graph& g, const GeneratorSymbol& s);
std::string format_symbols(const Graph& g, std::span<const GeneratorSymbol> word);

}  // namespace raagpal
