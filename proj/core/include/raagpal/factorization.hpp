#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raagpal/automorphism.hpp"
#include "raagpal/matrix.hpp"

namespace raagpal {

struct FactorizationResult {
  SymbolWord word;
  /// Unset when compose_word(word) reproduces the input exactly.
  std::optional<Automorphism> residual;
  std::size_t nodes = 0;
  std::size_t depth = 0;
};

struct FactorOptions {
  std::size_t torelli_depth = 4;
  std::size_t node_cap = 1'000'000;
  std::size_t conjugator_radius = 1;
  std::size_t descent_rounds = 100'000;
};

/// Sum of |a(x)| over x in xv.
std::size_t collins_length(const Automorphism& a, VertexSet xv);

/// True when L(ai^ei aj^ej) <= L(ai) + L(aj) - 2(floor(L(ai)/2) + 1).
bool cancellation_violation(const Word& ai, const Word& aj, int ei, int ej);

/// Factors an automorphism that is pure palindromic on H = <Gamma^v> and the
/// identity on every non-free factor of H, using inversions of X_v and
/// P(s,t) with s in X_v, t in Gamma^v. The residual carries the action on
/// vertices outside Gamma^v.
FactorizationResult factor_stabilizer_Y(const GraphPtr& graph, Vertex v, const Automorphism& a);

struct SimpleReduction {
  /// a o compose_word(theta) == simple.
  SymbolWord theta;
  Automorphism simple;
};
SimpleReduction make_simple(const Automorphism& a);

FactorizationResult factor_pure_palindromic(const Automorphism& a, const FactorOptions& opts = {});
FactorizationResult factor_palindromic(const Automorphism& a, const FactorOptions& opts = {});
FactorizationResult factor_centralizer_iota(const Automorphism& a, const FactorOptions& opts = {});
FactorizationResult factor_with_fixed(const Automorphism& a, std::span<const Vertex> fixed,
                                      const FactorOptions& opts = {});

/// c o chi^{+-1} o c^-1 for a chi1 or chi2 instance and a conjugating word c.
struct TorelliSymbol {
  enum class Kind { Chi1, Chi2 };
  Kind kind = Kind::Chi1;
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;
  bool inverted = false;
  SymbolWord conjugator;

  SymbolWord expand(const Graph& g) const;
};

std::string format_torelli(const Graph& g, const TorelliSymbol& s);

struct TorelliSearch {
  std::vector<TorelliSymbol> word;
  std::size_t nodes = 0;
  std::size_t depth = 0;
};

/// All well-defined chi1/chi2 instances conjugated by the ball of the given
/// radius in the palindromic generators, with inverses, deduplicated by
/// their action.
std::vector<TorelliSymbol> torelli_generators(const GraphPtr& graph, std::size_t radius);

/// Bidirectional breadth-first search for t with compose(t) == tau.
/// Throws TorelliBudget when depth or node budget is exhausted.
TorelliSearch factor_torelli_bfs(const Automorphism& tau, const FactorOptions& opts = {});

SymbolWord expand_torelli(const Graph& g, std::span<const TorelliSymbol> word);

/// Automorphism obtained by replacing Z_i by inv(v_i) and S_ij by P(v_j,v_i).
Automorphism lift_relator(const GraphPtr& graph, const Relator& r);

/// Inverse through provenance, falling back to factorization in the
/// centraliser of iota. NoProvenance when neither applies.
Automorphism invert_any(const Automorphism& a, const FactorOptions& opts = {});

}  // namespace raagpal
