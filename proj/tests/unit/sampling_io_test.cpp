#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "raagpal/error.hpp"
#include "raagpal/factorization.hpp"
#include "raagpal/io.hpp"
#include "raagpal/matrix.hpp"
#include "raagpal/sampling.hpp"

namespace {

using namespace raagpal;
using nlohmann::json;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Overflow;
}

TEST(Sampling, CorporaAreReproducible) {
  const auto g = fixtures::square().graph();
  for (auto kind : {SuiteKind::Words, SuiteKind::Centralizer, SuiteKind::Pure, SuiteKind::Palindromic}) {
    const Corpus a = random_suite(g, kind, 50, 7);
    const Corpus b = random_suite(g, kind, 50, 7);
    EXPECT_EQ(a.words, b.words);
    EXPECT_EQ(a.automorphisms, b.automorphisms);
    EXPECT_EQ(a.words.size() + a.automorphisms.size(), 50U);
  }
  EXPECT_NE(random_suite(g, SuiteKind::Words, 50, 7).words, random_suite(g, SuiteKind::Words, 50, 8).words);
}

TEST(Sampling, UniformIndexUsesModulo) {
  std::mt19937_64 a(3);
  std::mt19937_64 b(3);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(uniform_index(a, 7), b() % 7);
}

TEST(Sampling, RawWordsRespectLengthBound) {
  const auto g = fixtures::path().graph();
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) EXPECT_LE(random_raw_word(*g, 8, rng).size(), 8U);
}

TEST(Sampling, SuiteKindsParse) {
  EXPECT_EQ(parse_suite_kind("pure"), SuiteKind::Pure);
  EXPECT_EQ(parse_suite_kind("words"), SuiteKind::Words);
  EXPECT_EQ(code_of([] { parse_suite_kind("torelli"); }), ErrorCode::ParseError);
}

TEST(Sampling, FamiliesMatchTheirPredicates) {
  for (const auto& f : fixtures::all()) {
    const auto g = f.graph();
    for (const auto& s : generator_family(*g, Family::Pure)) EXPECT_TRUE(predicates(make_generator(g, s)).pure);
    for (const auto& s : generator_family(*g, Family::Palindromic))
      EXPECT_TRUE(predicates(make_generator(g, s)).palindromic);
    for (const auto& s : generator_family(*g, Family::Centralizer))
      EXPECT_TRUE(predicates(make_generator(g, s)).in_centralizer);
  }
}

TEST(Sampling, FixedFamilyAvoidsFixedVertices) {
  const auto g = fixtures::edgeless().graph();
  const std::vector<Vertex> fixed{g->vertex("z")};
  const auto gens = generator_family(*g, Family::Palindromic, fixed);
  EXPECT_FALSE(gens.empty());
  for (const auto& s : gens) EXPECT_EQ(make_generator(g, s).image(fixed[0]), parse_word(g, "z"));
}

TEST(GraphJson, RoundTrip) {
  const auto g = parse_graph(R"j({"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})j");
  EXPECT_EQ(g->names(), (std::vector<std::string>{"a", "c", "b"}));
  const auto back = parse_graph(graph_to_json(*g));
  EXPECT_EQ(*back, *g);
  EXPECT_EQ(code_of([] { parse_graph("{not json"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph(R"j({"vertices":["a"],"edges":[["a"]]})j"); }), ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { parse_graph(R"j({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})j"); }),
            ErrorCode::InvalidGraph);
  EXPECT_EQ(code_of([] { load_graph("/nonexistent/graph.json"); }), ErrorCode::ParseError);
}

TEST(AutomorphismJson, AcceptedForms) {
  const auto g = fixtures::path().graph();
  const auto from_images = parse_automorphism(g, R"j({"images":{"a":"b a b","b":"b","c":"c"}})j");
  const auto from_gens = parse_automorphism(g, R"j({"generators":"P(a,b)"})j");
  const auto bare = parse_automorphism(g, "P(a,b)");
  EXPECT_EQ(from_images, from_gens);
  EXPECT_EQ(bare, from_gens);
  EXPECT_EQ(parse_automorphism(g, R"j({"images":{"a":"a^-1"}})j"), parse_automorphism(g, "inv(a)"));
  EXPECT_EQ(code_of([&] { parse_automorphism(g, R"j({"other":1})j"); }), ErrorCode::ParseError);

  const json j = json::parse(automorphism_to_json(from_gens));
  EXPECT_EQ(j["images"]["a"], "a b^2");
  EXPECT_EQ(j["images"]["c"], "c");
  EXPECT_EQ(j["generators"], "P(a,b)");
  EXPECT_EQ(parse_automorphism(g, automorphism_to_json(from_gens)), from_gens);
  EXPECT_FALSE(json::parse(automorphism_to_json(from_images)).contains("generators"));
}

TEST(MatrixJson, RecordsVertexOrder) {
  const auto g = fixtures::path().graph();
  const json j = json::parse(matrix_to_json(*g, phi(parse_automorphism(g, "P(a,b)"))));
  EXPECT_EQ(j["order"], json({"a", "c", "b"}));
  EXPECT_EQ(j["rows"], json::parse("[[1,0,0],[0,1,0],[2,0,1]]"));
  const json m2 = json::parse(mod2_matrix_to_json(*g, phi2(parse_automorphism(g, "diag(a:c,c:a)"))));
  EXPECT_EQ(m2["rows"], json::parse("[[0,1,0],[1,0,0],[0,0,1]]"));
}

TEST(FactorizationJson, Shape) {
  const auto g = fixtures::path().graph();
  const auto r = factor_pure_palindromic(parse_automorphism(g, "P(a,b) inv(c)"));
  const json j = json::parse(factorization_to_json(*g, r));
  ASSERT_TRUE(j["word"].is_array());
  EXPECT_EQ(j["word"].size(), 2U);
  EXPECT_TRUE(j["residual"].is_null());
  EXPECT_TRUE(j["nodes"].is_number_unsigned());
  EXPECT_TRUE(j["depth"].is_number_unsigned());
}

}  // namespace
