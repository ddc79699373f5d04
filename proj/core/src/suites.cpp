#include "raagpal/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "raagpal/error.hpp"
#include "raagpal/sampling.hpp"

namespace raagpal {

using nlohmann::json;

namespace {

void fail(SuiteReport& r, std::string witness) {
  r.passed = false;
  if (r.witnesses.size() < 20) r.witnesses.push_back(std::move(witness));
}

std::string describe(const Automorphism& a) {
  if (a.provenance()) return format_symbols(a.graph(), *a.provenance());
  std::string out;
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    if (!out.empty()) out += ", ";
    out += a.graph().name(v) + " -> " + format_word(a.image(v));
  }
  return out;
}

}  // namespace

SuiteReport verify_relators(std::size_t n) {
  SuiteReport r;
  r.name = "relators";
  std::vector<std::size_t> per_family(11, 0);
  for (const auto& rel : relator_suite(n)) {
    ++r.checked;
    ++per_family[static_cast<std::size_t>(rel.family)];
    if (!evaluate(n, rel.word).is_identity()) fail(r, rel.name());
  }
  json families = json::object();
  for (int f = 1; f <= 10; ++f) families[std::to_string(f)] = per_family[static_cast<std::size_t>(f)];
  r.details_json = json{{"n", n}, {"instances", families}}.dump();
  return r;
}

SuiteReport verify_blocks(const GraphPtr& graph, std::size_t count, std::uint64_t seed) {
  SuiteReport r;
  r.name = "blocks";
  std::mt19937_64 rng(seed);
  const SymbolWord gens = generator_family(*graph, Family::Aut0Centralizer);
  std::size_t violations = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Automorphism a = random_product(graph, gens, uniform_index(rng, 9), rng);
    const IntMatrix m = phi(a);
    const auto bd = block_decompose(m, *graph);
    violations += bd.violations.size();
    ++r.checked;
    if (!bd.violations.empty()) fail(r, "block violation: " + describe(a));
    if (!free_block_check(m, *graph)) fail(r, "free block parity: " + describe(a));
  }
  r.details_json = json{{"samples", count}, {"violations", violations}}.dump();
  return r;
}

std::vector<Mod2Matrix> mod2_symmetry_closure(const Graph& g, std::size_t cap) {
  std::vector<Mod2Matrix> gens;
  for (const auto& perm : graph_automorphisms(g)) {
    Mod2Matrix p(g.size());
    for (Vertex v = 0; v < g.size(); ++v) p.set(perm[v], v, true);
    gens.push_back(p);
  }
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s == t || !g.adjacent(s, t) || !g.dominated_by(s, t)) continue;
      Mod2Matrix m = Mod2Matrix::identity(g.size());
      m.set(t, s, true);
      gens.push_back(m);
    }
  }
  std::set<Mod2Matrix> seen{Mod2Matrix::identity(g.size())};
  std::vector<Mod2Matrix> order{Mod2Matrix::identity(g.size())};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& x : gens) {
      Mod2Matrix y = order[head] * x;
      if (seen.insert(y).second) order.push_back(std::move(y));
    }
    if (order.size() > cap) throw Error(ErrorCode::SizeLimit, "mod 2 closure exceeds the cap");
  }
  return order;
}

SuiteReport verify_exact_sequence(const GraphPtr& graph, std::size_t count, std::uint64_t seed) {
  SuiteReport r;
  r.name = "exactseq";
  const auto closure = mod2_symmetry_closure(*graph);
  const std::set<Mod2Matrix> members(closure.begin(), closure.end());
  const Corpus corpus = random_suite(graph, SuiteKind::Centralizer, count, seed);
  std::size_t pure = 0;
  for (const auto& a : corpus.automorphisms) {
    ++r.checked;
    const Predicates p = predicates(a);
    const bool trivial_mod2 = phi2(a).is_identity();
    pure += p.pure ? 1 : 0;
    if (!p.in_centralizer) fail(r, "sample outside the centraliser: " + describe(a));
    if (p.pure != trivial_mod2) fail(r, "purity disagrees with the mod 2 image: " + describe(a));
    if (members.count(phi2(a)) == 0) fail(r, "mod 2 image outside the symmetry group: " + describe(a));
  }
  r.details_json = json{{"samples", count}, {"pure", pure}, {"mod2_group_order", closure.size()}}.dump();
  return r;
}

SuiteReport verify_adjacent_domination(const GraphPtr& graph) {
  SuiteReport r;
  r.name = "adjdom";
  const Graph& g = *graph;
  const bool adjacent = has_adjacent_domination(g);
  json details{{"has_adjacent_domination", adjacent}};
  if (adjacent) {
    std::optional<GeneratorSymbol> witness;
    for (Vertex s = 0; s < g.size() && !witness; ++s) {
      for (Vertex t = 0; t < g.size() && !witness; ++t) {
        if (s == t || !g.adjacent(s, t) || !g.dominated_by(s, t)) continue;
        const auto sym = GeneratorSymbol::transvection(s, t);
        const Predicates p = predicates(make_generator(graph, sym));
        ++r.checked;
        if (p.in_centralizer && !p.palindromic) witness = sym;
      }
    }
    if (witness) {
      details["witness"] = format_symbol(g, *witness);
    } else {
      fail(r, "no adjacent transvection is a non-palindromic centraliser element");
    }
  } else {
    for (const auto& sym : generator_family(g, Family::Centralizer)) {
      ++r.checked;
      if (!predicates(make_generator(graph, sym)).palindromic) fail(r, "non-palindromic " + format_symbol(g, sym));
    }
  }
  r.details_json = details.dump();
  return r;
}

SuiteReport verify_splittings(const GraphPtr& graph, std::size_t count, std::uint64_t seed) {
  SuiteReport r;
  r.name = "splittings";
  std::mt19937_64 rng(seed);
  const SymbolWord pal = generator_family(*graph, Family::Palindromic);
  for (std::size_t k = 0; k < count; ++k) {
    const Automorphism a = random_product(graph, pal, uniform_index(rng, 9), rng);
    const DiagramSplit split = split_diagram_pure(a);
    ++r.checked;
    if (!(compose(split.delta, split.gamma) == a)) fail(r, "split does not recompose: " + describe(a));
    if (!predicates(split.gamma).pure) fail(r, "gamma is not pure: " + describe(a));
    if (predicates(a).pure != split.delta.is_identity()) fail(r, "delta trivial iff pure fails: " + describe(a));
  }
  SymbolWord elementary;
  SymbolWord inversions;
  for (const auto& s : generator_family(*graph, Family::Pure)) {
    (s.species == Species::Inversion ? inversions : elementary).push_back(s);
  }
  std::size_t collisions = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Automorphism e = random_product(graph, elementary, 1 + uniform_index(rng, 8), rng);
    const Automorphism i = random_product(graph, inversions, 1 + uniform_index(rng, 8), rng);
    ++r.checked;
    if (e == i) {
      ++collisions;
      if (!e.is_identity()) fail(r, "elementary product equals an inversion product: " + describe(e));
    }
  }
  r.details_json = json{{"samples", count}, {"identity_collisions", collisions}}.dump();
  return r;
}

SuiteReport verify_torelli(const GraphPtr& graph, const FactorOptions& opts) {
  SuiteReport r;
  r.name = "torelli";
  const Graph& g = *graph;
  std::size_t chi_count = 0;
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = 0; j < g.size(); ++j) {
      for (Vertex k = 0; k < g.size(); ++k) {
        if (chi1_defined(g, i, j, k)) {
          ++chi_count;
          ++r.checked;
          if (!phi_is_identity(chi1(graph, i, j, k))) fail(r, "chi1 not Torelli");
        }
        if (chi2_defined(g, i, j, k)) {
          ++chi_count;
          ++r.checked;
          if (!phi_is_identity(chi2(graph, i, j, k))) fail(r, "chi2 not Torelli");
        }
      }
    }
  }
  std::size_t lifts = 0;
  std::size_t nontrivial = 0;
  std::size_t max_depth = 0;
  json failures = json::array();
  for (const auto& rel : relator_suite(g)) {
    ++lifts;
    ++r.checked;
    const Automorphism lift = lift_relator(graph, rel);
    if (!phi_is_identity(lift)) {
      fail(r, "lift of " + rel.name() + " is not Torelli");
      continue;
    }
    if (lift.is_identity()) continue;
    ++nontrivial;
    try {
      const TorelliSearch s = factor_torelli_bfs(lift, opts);
      const Automorphism back = compose_word(graph, expand_torelli(g, s.word));
      if (!(back == lift)) fail(r, "search witness for " + rel.name() + " does not recompose");
      max_depth = std::max(max_depth, s.depth);
    } catch (const Error& e) {
      fail(r, "lift of " + rel.name() + ": " + e.what());
    }
  }
  r.details_json =
      json{{"chi_instances", chi_count}, {"lifts", lifts}, {"nontrivial_lifts", nontrivial}, {"max_depth", max_depth}}
          .dump();
  return r;
}

}  // namespace raagpal
