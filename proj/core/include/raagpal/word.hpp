#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raagpal/graph.hpp"

namespace raagpal {

/// A generator or its inverse. Ordered by vertex, then positive before
/// negative, which is the letter order of canonical forms.
struct Letter {
  Vertex vertex = 0;
  bool inverse = false;

  constexpr Letter inverted() const { return {vertex, !inverse}; }
  constexpr int sign() const { return inverse ? -1 : 1; }
  constexpr auto operator<=>(const Letter&) const = default;
};

using LetterSeq = std::vector<Letter>;

/// An element of A_Gamma, held as the lexicographically least reduced word
/// of its shuffle class. Two Words are equal as group elements exactly when
/// their letter sequences coincide.
class Word {
 public:
  explicit Word(GraphPtr graph);

  /// Reduce and canonicalise an arbitrary letter sequence.
  static Word reduce(GraphPtr graph, std::span<const Letter> raw);
  static Word generator(GraphPtr graph, Vertex v, long long power = 1);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word operator*(const Word& rhs) const;
  Word inverse() const;
  Word pow(long long exponent) const;

  /// Group equality; throws GraphMismatch across graphs.
  bool operator==(const Word& rhs) const;

 private:
  Word(GraphPtr graph, LetterSeq canonical);

  GraphPtr graph_;
  LetterSeq letters_;
};

/// Free/shuffle reduction followed by the greedy lexicographic normal form.
LetterSeq reduce_letters(const Graph& g, std::span<const Letter> raw);
/// Lexicographic normal form of an already reduced sequence.
LetterSeq lex_normal_form(const Graph& g, std::span<const Letter> reduced);
/// Letters of u and v commute: same vertex or adjacent vertices.
inline bool letters_commute(const Graph& g, Letter u, Letter v) {
  return u.vertex == v.vertex || g.adjacent(u.vertex, v.vertex);
}

Word reduce(const GraphPtr& graph, std::span<const Letter> raw);
bool equal(const Word& a, const Word& b);
Word reverse(const Word& w);
bool is_reverse_invariant(const Word& w);
bool is_palindrome(const Word& w);
bool commute(const Word& a, const Word& b);

struct WordStats {
  VertexSet support;
  std::size_t length = 0;
  std::vector<long long> exponents;
};
WordStats support_length_exponents(const Word& w);
VertexSet support(const Word& w);
std::vector<long long> exponent_vector(const Word& w);

struct CyclicReduction {
  Word conjugator;
  Word core;
};
/// w = conjugator * core * conjugator^-1 with core cyclically reduced.
CyclicReduction cyclically_reduce(const Word& w);

struct BasicFactor {
  Word root;
  long long exponent = 0;
};

struct BasicForm {
  std::vector<BasicFactor> factors;
  Word conjugator;
  /// Product of root^exponent over the factors.
  Word core() const;
};

inline constexpr std::size_t kDefaultRootBudget = 200000;

BasicForm basic_form(const Word& w, std::size_t root_budget = kDefaultRootBudget);

struct CentralizerData {
  std::size_t rank = 0;
  std::vector<Word> factors;
  VertexSet link;
  Word conjugator;
};
/// Centraliser of w is conjugator * (<f_1> x ... x <f_k> x <link>) * conjugator^-1.
CentralizerData rank_and_centralizer(const Word& w, std::size_t root_budget = kDefaultRootBudget);
/// Rank of a single generator: 1 + |lk(v)|.
std::size_t vertex_rank(const Graph& g, Vertex v);

struct CliquePalindromicForm {
  std::vector<Word> pieces;
  /// w_1 ... w_{k-1} w_k w_{k-1} ... w_1
  Word recompose() const;
};
CliquePalindromicForm clique_palindromic_form(const Word& w);

bool is_clique(const Graph& g, VertexSet s);

/// Text format: whitespace separated tokens `name` or `name^k`, "1" for the
/// identity.
Word parse_word(const GraphPtr& graph, std::string_view text);
LetterSeq parse_letters(const Graph& g, std::string_view text);
/// Canonical form with runs of equal letters folded into powers.
std::string format_word(const Word& w);
std::string format_letters(const Graph& g, std::span<const Letter> letters);

}  // namespace raagpal
