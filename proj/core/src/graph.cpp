#include "raagpal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "raagpal/error.hpp"

namespace raagpal {

namespace {

struct RawGraph {
  std::vector<std::string> names;
  std::vector<VertexSet> adjacency;
};

bool raw_dominated(const RawGraph& g, std::size_t u, std::size_t v) {
  VertexSet star_v = g.adjacency[v] | VertexSet::single(static_cast<Vertex>(v));
  return g.adjacency[u].subset_of(star_v);
}

// Topological order of the ~-classes, ties by least vertex name.
std::vector<std::size_t> canonical_order(const RawGraph& g) {
  const std::size_t n = g.names.size();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    if (class_of[u] != n) continue;
    classes.push_back({u});
    class_of[u] = classes.size() - 1;
    for (std::size_t v = u + 1; v < n; ++v) {
      if (class_of[v] == n && raw_dominated(g, u, v) && raw_dominated(g, v, u)) {
        classes.back().push_back(v);
        class_of[v] = classes.size() - 1;
      }
    }
  }
  for (auto& c : classes) {
    std::sort(c.begin(), c.end(), [&](std::size_t a, std::size_t b) { return g.names[a] < g.names[b]; });
  }

  const std::size_t k = classes.size();
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < k; ++step) {
    std::size_t best = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (placed[c]) continue;
      bool ready = true;
      for (std::size_t d = 0; d < k && ready; ++d) {
        if (d != c && !placed[d] && raw_dominated(g, classes[d][0], classes[c][0])) ready = false;
      }
      if (!ready) continue;
      if (best == k || g.names[classes[c][0]] < g.names[classes[best][0]]) best = c;
    }
    placed[best] = true;
    order.insert(order.end(), classes[best].begin(), classes[best].end());
  }
  return order;
}

}  // namespace

bool valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c == '^' ||
           c == '(' || c == ')' || c == ',' || c == ':' || c == ';';
  });
}

std::shared_ptr<const Graph> Graph::create(std::vector<std::string> vertices, const EdgeList& edges) {
  if (vertices.size() > kMaxVertices) {
    throw Error(ErrorCode::SizeLimit, "at most 64 vertices are supported");
  }
  RawGraph raw;
  raw.names = vertices;
  raw.adjacency.assign(vertices.size(), VertexSet{});
  std::set<std::string> seen;
  for (const auto& name : vertices) {
    if (!valid_vertex_name(name)) throw Error(ErrorCode::InvalidGraph, "invalid vertex name '" + name + "'");
    if (!seen.insert(name).second) throw Error(ErrorCode::InvalidGraph, "duplicate vertex '" + name + "'");
  }
  auto index_of = [&](const std::string& name) -> Vertex {
    auto it = std::find(vertices.begin(), vertices.end(), name);
    if (it == vertices.end()) throw Error(ErrorCode::UnknownVertex, "edge endpoint '" + name + "'");
    return static_cast<Vertex>(it - vertices.begin());
  };
  for (const auto& [a, b] : edges) {
    Vertex u = index_of(a);
    Vertex v = index_of(b);
    if (u == v) throw Error(ErrorCode::InvalidGraph, "loop at '" + a + "'");
    if (raw.adjacency[u].contains(v)) {
      throw Error(ErrorCode::InvalidGraph, "duplicate edge " + a + "-" + b);
    }
    raw.adjacency[u].insert(v);
    raw.adjacency[v].insert(u);
  }

  const std::vector<std::size_t> order = canonical_order(raw);
  std::vector<Vertex> new_index(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) new_index[order[pos]] = static_cast<Vertex>(pos);

  auto g = std::shared_ptr<Graph>(new Graph());
  g->declared_ = std::move(vertices);
  const std::size_t n = order.size();
  g->names_.resize(n);
  g->adjacency_.assign(n, VertexSet{});
  for (std::size_t old = 0; old < n; ++old) {
    g->names_[new_index[old]] = raw.names[old];
    for (Vertex nb : raw.adjacency[old]) g->adjacency_[new_index[old]].insert(new_index[nb]);
  }

  DominationData& dd = g->domination_;
  dd.dominators.assign(n, VertexSet{});
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g->adjacency_[u].subset_of(g->star(v))) dd.dominators[u].insert(v);
    }
  }
  dd.class_of.assign(n, 0);
  dd.adjacent_class_of.assign(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (u > 0 && dd.dominators[u].contains(u - 1) && dd.dominators[u - 1].contains(u)) {
      dd.classes.back().insert(u);
    } else {
      dd.classes.push_back(VertexSet::single(u));
    }
    dd.class_of[u] = dd.classes.size() - 1;
  }
  for (VertexSet c : dd.classes) {
    Vertex first = c.front();
    bool complete = c.size() == 1 || g->adjacent(first, first + 1);
    for (Vertex u : c) {
      for (Vertex v : c) {
        if (u != v && g->adjacent(u, v) != complete) {
          throw Error(ErrorCode::InvalidGraph, "domination class is neither free nor abelian");
        }
      }
    }
    // A singleton spans K_1 and is recorded as abelian ([v] = [v]').
    dd.class_kind.push_back(complete ? ClassKind::Abelian : ClassKind::Free);
    if (complete) {
      dd.adjacent_classes.push_back(c);
      for (Vertex u : c) dd.adjacent_class_of[u] = dd.adjacent_classes.size() - 1;
    } else {
      for (Vertex u : c) {
        dd.adjacent_classes.push_back(VertexSet::single(u));
        dd.adjacent_class_of[u] = dd.adjacent_classes.size() - 1;
      }
    }
  }
  return g;
}

const std::string& Graph::name(Vertex v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Vertex Graph::vertex(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "no vertex named '" + std::string(name) + "'");
}

void Graph::check_vertex(Vertex v) const {
  if (v >= names_.size()) throw Error(ErrorCode::UnknownVertex, "vertex index " + std::to_string(v));
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex v, NeighborhoodKind kind) {
  g.check_vertex(v);
  return kind == NeighborhoodKind::Link ? g.link(v) : g.star(v);
}

bool dominates(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return g.dominated_by(u, v);
}

const DominationData& domination_data(const Graph& g) { return g.domination(); }

bool has_adjacent_domination(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.dominated_by(u, v) || g.dominated_by(v, u)) return true;
  }
  return false;
}

std::vector<VertexSet> induced_components(const Graph& g, VertexSet s, bool in_complement) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex u : frontier) {
        VertexSet nbrs = in_complement ? (s - g.star(u)) : (g.link(u) & s);
        next |= nbrs;
      }
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

std::vector<VertexSet> components_excluding_star(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return induced_components(g, g.all() - g.star(v), false);
}

std::vector<VertexSet> complement_components(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.all())) throw Error(ErrorCode::UnknownVertex, "vertex set exceeds the graph");
  return induced_components(g, s, true);
}

GammaVPartition gamma_v_partition(const Graph& g, Vertex v) {
  g.check_vertex(v);
  GammaVPartition p;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.dominated_by(v, u) && !g.adjacent(u, v)) p.gamma_v.insert(u);
  }
  for (Vertex u : p.gamma_v) {
    if (g.dominated_by(u, v)) p.x_v.insert(u);
  }
  for (VertexSet comp : induced_components(g, p.gamma_v, false)) {
    if (!comp.intersects(p.x_v)) {
      p.factors.push_back(comp);
    } else if (comp.size() != 1) {
      // Members of X_v share v's link, which excludes every other vertex of Gamma^v.
      throw Error(ErrorCode::AssumptionFailed, "X_v member is not isolated in Gamma^v");
    }
  }
  return p;
}

std::vector<std::vector<Vertex>> graph_automorphisms(const Graph& g, std::size_t bound) {
  const std::size_t n = g.size();
  if (n > bound) {
    throw Error(ErrorCode::SizeLimit,
                "automorphism enumeration capped at " + std::to_string(bound) + " vertices");
  }
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::vector<Vertex>> out;
  const auto edges = g.edges();
  do {
    bool ok = std::all_of(edges.begin(), edges.end(),
                          [&](const auto& e) { return g.adjacent(perm[e.first], perm[e.second]); });
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace raagpal
