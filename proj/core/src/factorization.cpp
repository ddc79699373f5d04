#include "raagpal/factorization.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "raagpal/error.hpp"

namespace raagpal {

namespace {

SymbolWord concat(SymbolWord a, std::span<const GeneratorSymbol> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SymbolWord repeat(const GeneratorSymbol& s, long long times) {
  const GeneratorSymbol unit = times < 0 ? s.inverse() : s;
  return SymbolWord(static_cast<std::size_t>(times < 0 ? -times : times), unit);
}

bool fixes_all(const GeneratorSymbol& s, std::span<const Vertex> fixed) {
  return std::all_of(fixed.begin(), fixed.end(), [&](Vertex f) { return s.fixes(f); });
}

FactorizationResult finish(const Automorphism& input, SymbolWord word, std::size_t nodes = 0,
                           std::size_t depth = 0) {
  FactorizationResult out;
  const Automorphism product = compose_word(input.graph_ptr(), word);
  out.word = std::move(word);
  if (!(product == input)) out.residual = compose(invert(product), input);
  out.nodes = nodes;
  out.depth = depth;
  return out;
}

// Greedy length descent over P(s,t)^{+-1} with s not fixed. On success the
// returned word w satisfies compose_word(w) == a and uses only inversions
// and elementary palindromic symbols.
std::optional<SymbolWord> length_descent(const Automorphism& a, std::span<const Vertex> fixed, std::size_t rounds) {
  const GraphPtr& graph = a.graph_ptr();
  const Graph& g = *graph;
  std::vector<GeneratorSymbol> moves;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (std::find(fixed.begin(), fixed.end(), s) != fixed.end()) continue;
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s == t || !g.dominated_by(s, t)) continue;
      moves.push_back(GeneratorSymbol::elem_palindromic(s, t));
      moves.push_back(GeneratorSymbol::elem_palindromic(s, t, true));
    }
  }
  std::vector<Automorphism> move_aut;
  for (const auto& m : moves) move_aut.push_back(make_generator(graph, m));

  Automorphism cur = a;
  SymbolWord applied;
  for (std::size_t round = 0; round < rounds && cur.total_length() > g.size(); ++round) {
    std::size_t best = moves.size();
    std::size_t best_len = cur.total_length();
    std::optional<Automorphism> best_aut;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      // Only the image of moves[m].i changes.
      const Vertex s = moves[m].i;
      const Word next = cur.apply(move_aut[m].image(s));
      const std::size_t len = cur.total_length() - cur.image(s).length() + next.length();
      if (len < best_len) {
        best_len = len;
        best = m;
      }
    }
    if (best == moves.size()) return std::nullopt;
    cur = compose(cur, move_aut[best]);
    applied.push_back(moves[best]);
  }
  if (cur.total_length() != g.size()) return std::nullopt;
  SymbolWord word;
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto l = cur.image(v).letters();
    if (l[0].vertex != v) return std::nullopt;
    if (l[0].inverse) {
      if (std::find(fixed.begin(), fixed.end(), v) != fixed.end()) return std::nullopt;
      word.push_back(GeneratorSymbol::inversion(v));
    }
  }
  return concat(word, inverse_word(applied));
}

struct TorelliGen {
  TorelliSymbol symbol;
  Automorphism aut;
};

std::vector<TorelliGen> build_torelli_generators(const GraphPtr& graph, std::size_t radius) {
  const Graph& g = *graph;
  std::vector<TorelliSymbol> base;
  for (Vertex i = 0; i < g.size(); ++i) {
    for (Vertex j = 0; j < g.size(); ++j) {
      for (Vertex k = 0; k < g.size(); ++k) {
        if (chi1_defined(g, i, j, k)) base.push_back({TorelliSymbol::Kind::Chi1, i, j, k, false, {}});
        if (chi2_defined(g, i, j, k)) base.push_back({TorelliSymbol::Kind::Chi2, i, j, k, false, {}});
      }
    }
  }
  std::vector<GeneratorSymbol> letters;
  for (const auto& perm : graph_automorphisms(g)) {
    bool id = true;
    for (Vertex v = 0; v < perm.size(); ++v) id = id && perm[v] == v;
    if (!id) letters.push_back(GeneratorSymbol::diagram(perm));
  }
  for (Vertex v = 0; v < g.size(); ++v) letters.push_back(GeneratorSymbol::inversion(v));
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s == t || !g.dominated_by(s, t)) continue;
      letters.push_back(GeneratorSymbol::elem_palindromic(s, t));
      letters.push_back(GeneratorSymbol::elem_palindromic(s, t, true));
    }
  }
  // Ball of conjugating words, deduplicated by action.
  std::vector<std::pair<SymbolWord, Automorphism>> ball{{{}, Automorphism::identity(graph)}};
  std::unordered_map<std::string, bool> seen{{ball[0].second.key(), true}};
  std::size_t layer_begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    const std::size_t layer_end = ball.size();
    for (std::size_t b = layer_begin; b < layer_end; ++b) {
      for (const auto& l : letters) {
        Automorphism next = compose(ball[b].second, make_generator(graph, l));
        if (seen.emplace(next.key(), true).second) ball.emplace_back(concat(ball[b].first, SymbolWord{l}), next);
      }
    }
    layer_begin = layer_end;
  }

  std::vector<TorelliGen> out;
  std::unordered_map<std::string, bool> have;
  for (const auto& b : base) {
    for (const auto& [conj, conj_aut] : ball) {
      for (bool inv : {false, true}) {
        TorelliSymbol s = b;
        s.inverted = inv;
        s.conjugator = conj;
        Automorphism aut = compose_word(graph, s.expand(g));
        if (aut.is_identity()) continue;
        if (have.emplace(aut.key(), true).second) out.push_back({std::move(s), std::move(aut)});
      }
    }
  }
  return out;
}

}  // namespace

std::size_t collins_length(const Automorphism& a, VertexSet xv) {
  std::size_t total = 0;
  for (Vertex x : xv) total += a.image(x).length();
  return total;
}

bool cancellation_violation(const Word& ai, const Word& aj, int ei, int ej) {
  if (ai == aj) throw Error(ErrorCode::PreconditionFailed, "cancellation test needs distinct words");
  const Word lhs = ai.pow(ei) * aj.pow(ej);
  const long long li = static_cast<long long>(ai.length());
  const long long lj = static_cast<long long>(aj.length());
  return static_cast<long long>(lhs.length()) <= li + lj - 2 * (li / 2 + 1);
}

FactorizationResult factor_stabilizer_Y(const GraphPtr& graph, Vertex v, const Automorphism& a) {
  const Graph& g = *graph;
  const auto part = gamma_v_partition(g, v);
  const VertexSet xv = part.x_v;
  for (const VertexSet f : part.factors) {
    for (Vertex u : f) {
      if (!(a.image(u) == Word::generator(graph, u))) {
        throw Error(ErrorCode::PreconditionFailed, "automorphism moves " + g.name(u) + " in a non-free factor");
      }
    }
  }
  for (Vertex x : xv) {
    if (!support(a.image(x)).subset_of(part.gamma_v) || !is_palindrome(a.image(x))) {
      throw Error(ErrorCode::PreconditionFailed, "image of " + g.name(x) + " is not a palindrome over Gamma^v");
    }
  }

  const std::vector<Vertex> gv = part.gamma_v.to_vector();
  Automorphism cur = a;
  SymbolWord applied;
  std::size_t length = collins_length(cur, xv);
  while (length > xv.size()) {
    bool progressed = false;
    for (Vertex i : gv) {
      for (Vertex j : xv) {
        if (i == j || cur.image(i) == cur.image(j)) continue;
        for (auto [ei, ej] : {std::pair{1, 1}, std::pair{-1, -1}, std::pair{1, -1}, std::pair{-1, 1}}) {
          if (!cancellation_violation(cur.image(i), cur.image(j), ei, ej)) continue;
          using S = GeneratorSymbol;
          const S p = S::elem_palindromic(j, i);
          std::vector<SymbolWord> candidates;
          if (ei == 1 && ej == 1) {
            candidates = {{p}, {S::inversion(j), p.inverse()}, {S::inversion(j), p}, {p.inverse()}};
          } else if (ei == -1 && ej == -1) {
            candidates = {{S::inversion(j), p.inverse()}, {p}, {S::inversion(j), p}, {p.inverse()}};
          } else {
            candidates = {{S::inversion(j), p}, {p}, {S::inversion(j), p.inverse()}, {p.inverse()}};
          }
          std::stable_sort(candidates.begin(), candidates.end(),
                           [](const SymbolWord& l, const SymbolWord& r) { return l.size() < r.size(); });
          for (const auto& m : candidates) {
            Automorphism next = compose(cur, compose_word(graph, m));
            const std::size_t next_len = collins_length(next, xv);
            if (next_len < length) {
              cur = std::move(next);
              applied = concat(std::move(applied), m);
              length = next_len;
              progressed = true;
              break;
            }
          }
          if (progressed) break;
        }
        if (progressed) break;
      }
      if (progressed) break;
    }
    if (!progressed) {
      throw Error(ErrorCode::DescentStall, "no length-reducing move at length " + std::to_string(length));
    }
  }
  SymbolWord word;
  for (Vertex x : xv) {
    const auto l = cur.image(x).letters();
    if (l.size() != 1 || l[0].vertex != x) {
      throw Error(ErrorCode::DescentStall, "minimal image of " + g.name(x) + " is not a generator");
    }
    if (l[0].inverse) word.push_back(GeneratorSymbol::inversion(x));
  }
  return finish(a, concat(word, inverse_word(applied)));
}

SimpleReduction make_simple(const Automorphism& a) {
  const GraphPtr& graph = a.graph_ptr();
  const Graph& g = *graph;
  const auto& adj = g.domination().adjacent_class_of;
  Automorphism cur = a;
  SymbolWord theta;
  auto fail = [](const std::string& why) { throw Error(ErrorCode::AssumptionFailed, why); };

  for (std::size_t iteration = 0; iteration <= 2 * g.size(); ++iteration) {
    std::optional<Vertex> pick;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (complement_components(g, support(cur.image(v))).size() <= 1) continue;
      if (!pick || vertex_rank(g, v) > vertex_rank(g, *pick)) pick = v;
    }
    if (!pick) return {theta, cur};
    const Vertex v = *pick;

    const BasicForm bf = basic_form(cur.image(v));
    if (!bf.conjugator.empty()) fail("palindromic image of " + g.name(v) + " is not cyclically reduced");
    for (const auto& f : bf.factors) {
      if (support(f.root).contains(v)) continue;
      if (f.root.length() != 1) fail("non-central factor of the image of " + g.name(v) + " is not a generator");
      const Vertex w = f.root.letters()[0].vertex;
      if (f.exponent % 2 != 0) fail("odd exponent of " + g.name(w) + " in a palindromic image");
      if (adj[w] == adj[v]) continue;
      if (!g.dominated_by(v, w)) fail(g.name(w) + " does not dominate " + g.name(v));
      const auto wl = cur.image(w).letters();
      if (wl.size() != 1 || wl[0].vertex != w) fail("image of " + g.name(w) + " is not " + g.name(w) + "^{+-1}");
      const long long ell = wl[0].inverse ? -1 : 1;
      const SymbolWord step = repeat(GeneratorSymbol::elem_palindromic(v, w), -ell * f.exponent / 2);
      cur = compose(cur, compose_word(graph, step));
      theta = concat(std::move(theta), step);
    }
    if (complement_components(g, support(cur.image(v))).size() <= 1) continue;

    const VertexSet cls = g.domination().adjacent_classes[adj[v]];
    for (Vertex u : cls) {
      if (!support(cur.image(u)).subset_of(cls)) fail("image of " + g.name(u) + " leaves its adjacent class");
    }
    const auto idx = cls.to_vector();
    ThetaWord local = factor_lambda(phi(cur).submatrix(idx));
    for (auto& s : local) {
      s.i = idx[s.i];
      s.j = idx[s.j];
    }
    const SymbolWord clear = inverse_word(lift_word(local));
    cur = compose(cur, compose_word(graph, clear));
    theta = concat(std::move(theta), clear);
    if (complement_components(g, support(cur.image(v))).size() > 1) fail("vertex " + g.name(v) + " stays non-simple");
  }
  fail("simplification did not terminate");
  return {theta, cur};
}

SymbolWord TorelliSymbol::expand(const Graph& g) const {
  SymbolWord core = kind == Kind::Chi1 ? chi1_word(g, i, j, k) : chi2_word(g, i, j, k);
  if (inverted) core = inverse_word(core);
  SymbolWord out = conjugator;
  out = concat(std::move(out), core);
  return concat(std::move(out), inverse_word(conjugator));
}

std::string format_torelli(const Graph& g, const TorelliSymbol& s) {
  std::string core = std::string(s.kind == TorelliSymbol::Kind::Chi1 ? "chi1(" : "chi2(") + g.name(s.i) + "," +
                     g.name(s.j) + "," + g.name(s.k) + ")";
  if (s.inverted) core += "^-1";
  if (s.conjugator.empty()) return core;
  return "conj[" + format_symbols(g, s.conjugator) + "](" + core + ")";
}

SymbolWord expand_torelli(const Graph& g, std::span<const TorelliSymbol> word) {
  SymbolWord out;
  for (const auto& t : word) out = concat(std::move(out), t.expand(g));
  return out;
}

std::vector<TorelliSymbol> torelli_generators(const GraphPtr& graph, std::size_t radius) {
  std::vector<TorelliSymbol> out;
  for (auto& gen : build_torelli_generators(graph, radius)) out.push_back(std::move(gen.symbol));
  return out;
}

TorelliSearch factor_torelli_bfs(const Automorphism& tau, const FactorOptions& opts) {
  if (!phi_is_identity(tau)) throw Error(ErrorCode::PreconditionFailed, "automorphism acts nontrivially on H_1");
  if (tau.is_identity()) return {};
  const GraphPtr& graph = tau.graph_ptr();
  const auto gens = build_torelli_generators(graph, opts.conjugator_radius);
  std::unordered_map<std::string, std::size_t> gen_index;
  for (std::size_t t = 0; t < gens.size(); ++t) gen_index.emplace(gens[t].aut.key(), t);
  std::vector<std::size_t> inverse_of(gens.size(), gens.size());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    TorelliSymbol s = gens[t].symbol;
    s.inverted = !s.inverted;
    const auto it = gen_index.find(compose_word(graph, s.expand(*graph)).key());
    if (it == gen_index.end()) throw Error(ErrorCode::AssumptionFailed, "generator set not closed under inverses");
    inverse_of[t] = it->second;
  }

  struct Node {
    std::string parent;
    std::size_t gen = 0;
  };
  struct Side {
    std::unordered_map<std::string, Node> nodes;
    std::vector<Automorphism> frontier;
    std::size_t depth = 0;
  };
  Side fwd;
  Side bwd;
  const Automorphism id = Automorphism::identity(graph);
  fwd.nodes.emplace(id.key(), Node{});
  fwd.frontier.push_back(id);
  bwd.nodes.emplace(tau.key(), Node{});
  bwd.frontier.push_back(tau);

  auto path = [](const Side& side, std::string key) {
    std::vector<std::size_t> gens_out;
    while (true) {
      const Node& n = side.nodes.at(key);
      if (n.parent.empty()) break;
      gens_out.push_back(n.gen);
      key = n.parent;
    }
    std::reverse(gens_out.begin(), gens_out.end());
    return gens_out;
  };
  auto assemble = [&](const std::string& meet) {
    TorelliSearch out;
    for (std::size_t t : path(fwd, meet)) out.word.push_back(gens[t].symbol);
    const auto back = path(bwd, meet);
    for (auto it = back.rbegin(); it != back.rend(); ++it) out.word.push_back(gens[inverse_of[*it]].symbol);
    out.nodes = fwd.nodes.size() + bwd.nodes.size();
    out.depth = out.word.size();
    return out;
  };
  // The root keys are nonempty strings; an empty parent marks a root.
  if (fwd.nodes.count(tau.key()) != 0) return {};

  while (fwd.depth + bwd.depth < opts.torelli_depth) {
    Side& side = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    const Side& other = &side == &fwd ? bwd : fwd;
    std::vector<Automorphism> next_frontier;
    for (const auto& node : side.frontier) {
      const std::string node_key = node.key();
      for (std::size_t t = 0; t < gens.size(); ++t) {
        Automorphism child = compose(node, gens[t].aut);
        std::string key = child.key();
        if (side.nodes.count(key) != 0) continue;
        side.nodes.emplace(key, Node{node_key, t});
        if (other.nodes.count(key) != 0) return assemble(key);
        if (fwd.nodes.size() + bwd.nodes.size() > opts.node_cap) {
          throw Error(ErrorCode::TorelliBudget, "node cap of " + std::to_string(opts.node_cap) + " reached");
        }
        next_frontier.push_back(std::move(child));
      }
    }
    side.frontier = std::move(next_frontier);
    ++side.depth;
    if (side.frontier.empty()) break;
  }
  throw Error(ErrorCode::TorelliBudget,
              "no product of at most " + std::to_string(opts.torelli_depth) + " Torelli generators found");
}

namespace {

std::optional<SymbolWord> torelli_quick_hit(const Automorphism& tau, const FactorOptions& opts) {
  FactorOptions quick = opts;
  quick.torelli_depth = std::min<std::size_t>(opts.torelli_depth, 1);
  try {
    return expand_torelli(tau.graph(), factor_torelli_bfs(tau, quick).word);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TorelliBudget) throw;
  }
  return std::nullopt;
}

// The abelianisation forgets everything a free class does beyond exponent
// sums, so a lift can differ from the input by a very long Torelli element.
bool residual_tractable(const Automorphism& a, const Automorphism& tau) {
  return tau.total_length() <= 4 * a.total_length() + 8 * a.graph().size();
}

void require_palindromic(const Automorphism& a) {
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    if (!is_palindrome(a.image(v))) {
      throw Error(ErrorCode::NotPalindromic, "image of " + a.graph().name(v) + " is not a palindrome");
    }
  }
}

}  // namespace

FactorizationResult factor_pure_palindromic(const Automorphism& a, const FactorOptions& opts) {
  require_palindromic(a);
  const GraphPtr& graph = a.graph_ptr();
  if (auto down = length_descent(a, {}, opts.descent_rounds)) return finish(a, *down);

  const SymbolWord lift = lift_word(factor_theta(phi(a), *graph));
  const Automorphism tau = compose(invert(compose_word(graph, lift)), a);
  if (tau.is_identity()) return finish(a, lift);
  if (!residual_tractable(a, tau)) {
    throw Error(ErrorCode::TorelliBudget, "Torelli residual of the lift has length " +
                                              std::to_string(tau.total_length()));
  }
  if (auto hit = torelli_quick_hit(tau, opts)) return finish(a, concat(lift, *hit), 0, 1);
  if (auto down = length_descent(tau, {}, opts.descent_rounds)) return finish(a, concat(lift, *down));
  const TorelliSearch search = factor_torelli_bfs(tau, opts);
  return finish(a, concat(lift, expand_torelli(*graph, search.word)), search.nodes, search.depth);
}

FactorizationResult factor_palindromic(const Automorphism& a, const FactorOptions& opts) {
  require_palindromic(a);
  const DiagramSplit split = split_diagram_pure(a);
  FactorizationResult pure = factor_pure_palindromic(split.gamma, opts);
  SymbolWord word;
  if (!split.delta.is_identity()) word.push_back(GeneratorSymbol::diagram(split.perm));
  return finish(a, concat(word, pure.word), pure.nodes, pure.depth);
}

FactorizationResult factor_centralizer_iota(const Automorphism& a, const FactorOptions& opts) {
  const GraphPtr& graph = a.graph_ptr();
  const Graph& g = *graph;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!is_reverse_invariant(a.image(v))) {
      throw Error(ErrorCode::NotInCentralizer, "image of " + g.name(v) + " is not reverse invariant");
    }
  }
  std::vector<GeneratorSymbol> moves;
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s != t && g.adjacent(s, t) && g.dominated_by(s, t)) moves.push_back(GeneratorSymbol::transvection(s, t, true));
    }
  }
  for (const auto& perm : graph_automorphisms(g)) moves.push_back(GeneratorSymbol::diagram(perm));
  std::vector<Mod2Matrix> images;
  for (const auto& m : moves) images.push_back(phi2(make_generator(graph, m)));

  const Mod2Matrix start = phi2(a);
  std::map<Mod2Matrix, std::pair<Mod2Matrix, std::size_t>> parent;
  std::deque<Mod2Matrix> queue{start};
  parent.emplace(start, std::make_pair(start, moves.size()));
  const Mod2Matrix target = Mod2Matrix::identity(g.size());
  bool found = start == target;
  while (!queue.empty() && !found) {
    const Mod2Matrix x = queue.front();
    queue.pop_front();
    for (std::size_t m = 0; m < moves.size() && !found; ++m) {
      Mod2Matrix y = x * images[m];
      if (!parent.emplace(y, std::make_pair(x, m)).second) continue;
      if (y == target) found = true;
      queue.push_back(std::move(y));
    }
    if (parent.size() > opts.node_cap) break;
  }
  if (!found && parent.size() > opts.node_cap) {
    throw Error(ErrorCode::SizeLimit, "mod 2 search exceeded " + std::to_string(opts.node_cap) + " nodes");
  }
  if (!found) throw Error(ErrorCode::NotInCentralizer, "mod 2 image is not reachable by graph symmetries and adjacent transvections");
  SymbolWord path;
  for (Mod2Matrix x = target; !(x == start);) {
    const auto& [prev, m] = parent.at(x);
    path.push_back(moves[m]);
    x = prev;
  }
  std::reverse(path.begin(), path.end());
  const Automorphism pure = compose(a, compose_word(graph, path));
  if (!predicates(pure).pure) throw Error(ErrorCode::AssumptionFailed, "mod 2 kernel element is not pure palindromic");
  FactorizationResult inner = factor_pure_palindromic(pure, opts);
  return finish(a, concat(inner.word, inverse_word(path)), inner.nodes, inner.depth);
}

FactorizationResult factor_with_fixed(const Automorphism& a, std::span<const Vertex> fixed, const FactorOptions& opts) {
  const GraphPtr& graph = a.graph_ptr();
  const Graph& g = *graph;
  require_palindromic(a);
  for (Vertex f : fixed) {
    g.check_vertex(f);
    if (!(a.image(f) == Word::generator(graph, f))) {
      throw Error(ErrorCode::PreconditionFailed, "automorphism moves fixed vertex " + g.name(f));
    }
  }
  const DiagramSplit split = split_diagram_pure(a);
  SymbolWord word;
  if (!split.delta.is_identity()) word.push_back(GeneratorSymbol::diagram(split.perm));
  std::optional<SymbolWord> pure = length_descent(split.gamma, fixed, opts.descent_rounds);
  if (!pure) {
    const SymbolWord lift = lift_word(factor_theta(phi(split.gamma), g));
    const Automorphism tau = compose(invert(compose_word(graph, lift)), split.gamma);
    if (tau.is_identity()) {
      pure = lift;
    } else if (residual_tractable(split.gamma, tau)) {
      if (auto down = length_descent(tau, fixed, opts.descent_rounds)) pure = concat(lift, *down);
    }
  }
  if (!pure) throw Error(ErrorCode::FixedSetViolated, "descent stalled under the fixed-vertex filter");
  word = concat(std::move(word), *pure);
  for (const auto& s : word) {
    if (!fixes_all(s, fixed)) {
      throw Error(ErrorCode::FixedSetViolated, "symbol " + format_symbol(g, s) + " moves a fixed vertex");
    }
  }
  return finish(a, std::move(word));
}

Automorphism lift_relator(const GraphPtr& graph, const Relator& r) {
  return compose_word(graph, lift_word(r.word));
}

Automorphism invert_any(const Automorphism& a, const FactorOptions& opts) {
  if (a.provenance()) return invert(a);
  try {
    const FactorizationResult f = factor_centralizer_iota(a, opts);
    if (!f.residual) return compose_word(a.graph_ptr(), inverse_word(f.word));
  } catch (const Error& e) {
    throw Error(ErrorCode::NoProvenance, std::string("no generator word and factorization failed: ") + e.what());
  }
  throw Error(ErrorCode::NoProvenance, "no generator word and factorization left a residual");
}

}  // namespace raagpal
