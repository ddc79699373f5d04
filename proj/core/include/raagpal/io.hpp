#pragma once

#include <string>
#include <string_view>

#include "raagpal/automorphism.hpp"
#include "raagpal/factorization.hpp"
#include "raagpal/matrix.hpp"

namespace raagpal {

/// {"vertices":[...],"edges":[[u,v],...]}
GraphPtr parse_graph(std::string_view json_text);
GraphPtr load_graph(const std::string& path);
std::string graph_to_json(const Graph& g);

/// Accepts {"images":{...}}, {"generators":"..."}, or a bare generator
/// expression. Vertices missing from "images" are fixed.
Automorphism parse_automorphism(const GraphPtr& graph, std::string_view text);
/// {"images":{...}} plus "generators" when a provenance is recorded.
std::string automorphism_to_json(const Automorphism& a);

/// {"order":[...],"rows":[[...],...]}
std::string matrix_to_json(const Graph& g, const IntMatrix& m);
std::string mod2_matrix_to_json(const Graph& g, const Mod2Matrix& m);

/// {"word":[...],"residual":null|{...},"nodes":N,"depth":d}
std::string factorization_to_json(const Graph& g, const FactorizationResult& r);

std::string read_text_file(const std::string& path);

}  // namespace raagpal
