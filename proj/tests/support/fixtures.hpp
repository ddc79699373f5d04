#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "raagpal/graph.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  raagpal::GraphPtr graph() const { return raagpal::Graph::create(vertices, edges); }
};

inline void PrintTo(const Fixture& f, std::ostream* os) { *os << f.name; }

inline Fixture path() { return {"path", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}}; }
inline Fixture edgeless() { return {"edgeless", {"x", "y", "z"}, {}}; }
inline Fixture triangle() { return {"triangle", {"p", "q", "r"}, {{"p", "q"}, {"q", "r"}, {"p", "r"}}}; }
inline Fixture square() { return {"square", {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}}; }
inline Fixture square_diag() {
  return {"square_diag", {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"a", "c"}}};
}
/// Five vertices: a path d-a-b-c with a pendant e on b.
inline Fixture tree5() { return {"tree5", {"a", "b", "c", "d", "e"}, {{"d", "a"}, {"a", "b"}, {"b", "c"}, {"b", "e"}}}; }

inline std::vector<Fixture> all() { return {path(), edgeless(), triangle(), square(), square_diag()}; }
inline std::vector<Fixture> with_five_vertices() {
  auto out = all();
  out.push_back(tree5());
  return out;
}

}  // namespace fixtures
