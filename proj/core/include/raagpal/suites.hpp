#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raagpal/factorization.hpp"

namespace raagpal {

/// Outcome of one verification suite. `witnesses` names every failing case;
/// `details_json` is a JSON object with suite specific counters.
struct SuiteReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> witnesses;
  std::string details_json = "{}";
};

/// Every relator instance in dimension n evaluates to the identity.
SuiteReport verify_relators(std::size_t n);
/// Block structure and free-block parity of sampled Aut^0 centraliser elements.
SuiteReport verify_blocks(const GraphPtr& graph, std::size_t count, std::uint64_t seed);
/// Purity agrees with triviality mod 2, and every mod 2 image lies in the
/// group generated by graph symmetries and adjacent transvections.
SuiteReport verify_exact_sequence(const GraphPtr& graph, std::size_t count, std::uint64_t seed);
/// Adjacent domination exactly when some centraliser generator is not palindromic.
SuiteReport verify_adjacent_domination(const GraphPtr& graph);
/// Diagram/pure splitting round trips and the elementary/inversion intersection.
SuiteReport verify_splittings(const GraphPtr& graph, std::size_t count, std::uint64_t seed);
/// chi1/chi2 and relator lifts act trivially on H_1; nontrivial lifts are
/// recovered by the Torelli search.
SuiteReport verify_torelli(const GraphPtr& graph, const FactorOptions& opts);

/// Closure of the mod 2 images of graph symmetries and adjacent
/// transvections, by breadth-first search up to `cap` elements.
std::vector<Mod2Matrix> mod2_symmetry_closure(const Graph& g, std::size_t cap = 1'000'000);

}  // namespace raagpal
