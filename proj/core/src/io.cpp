#include "raagpal/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "raagpal/error.hpp"

namespace raagpal {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json images_json(const Automorphism& a) {
  json images = json::object();
  for (Vertex v = 0; v < a.graph().size(); ++v) images[a.graph().name(v)] = format_word(a.image(v));
  return images;
}

}  // namespace

GraphPtr parse_graph(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    Graph::EdgeList edges;
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::InvalidGraph, "edges must be vertex pairs");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Graph::create(std::move(vertices), edges);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GraphPtr load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return json{{"vertices", g.declared_vertices()}, {"edges", edges}}.dump();
}

Automorphism parse_automorphism(const GraphPtr& graph, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos || text[first] != '{') {
    return compose_word(graph, parse_symbols(*graph, text));
  }
  const json j = parse_json(text);
  try {
    if (j.contains("generators")) return compose_word(graph, parse_symbols(*graph, j.at("generators").get<std::string>()));
    if (j.contains("images")) {
      std::vector<Word> images;
      for (Vertex v = 0; v < graph->size(); ++v) images.push_back(Word::generator(graph, v));
      for (const auto& [name, word] : j.at("images").items()) {
        images[graph->vertex(name)] = parse_word(graph, word.get<std::string>());
      }
      return Automorphism::from_images(graph, std::move(images));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  throw Error(ErrorCode::ParseError, "automorphism needs \"images\" or \"generators\"");
}

std::string automorphism_to_json(const Automorphism& a) {
  json out{{"images", images_json(a)}};
  if (a.provenance()) out["generators"] = format_symbols(a.graph(), *a.provenance());
  return out.dump();
}

std::string matrix_to_json(const Graph& g, const IntMatrix& m) {
  return json{{"order", g.names()}, {"rows", m.rows()}}.dump();
}

std::string mod2_matrix_to_json(const Graph& g, const Mod2Matrix& m) {
  std::vector<std::vector<int>> rows(m.size(), std::vector<int>(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) rows[r][c] = m.at(r, c) ? 1 : 0;
  }
  return json{{"order", g.names()}, {"rows", rows}}.dump();
}

std::string factorization_to_json(const Graph& g, const FactorizationResult& r) {
  json word = json::array();
  for (const auto& s : r.word) word.push_back(format_symbol(g, s));
  json out{{"word", word}, {"residual", nullptr}, {"nodes", r.nodes}, {"depth", r.depth}};
  if (r.residual) out["residual"] = json{{"images", images_json(*r.residual)}};
  return out.dump();
}

}  // namespace raagpal
