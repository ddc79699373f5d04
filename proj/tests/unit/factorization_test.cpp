#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "raagpal/error.hpp"
#include "raagpal/factorization.hpp"
#include "raagpal/matrix.hpp"
#include "raagpal/sampling.hpp"

namespace {

using namespace raagpal;

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

Automorphism reproduce(const GraphPtr& g, const FactorizationResult& r) {
  Automorphism out = compose_word(g, r.word);
  if (r.residual) out = compose(out, *r.residual);
  return out;
}

bool pure_symbols_only(const SymbolWord& w) {
  return std::all_of(w.begin(), w.end(), [](const GeneratorSymbol& s) {
    return s.species == Species::Inversion || s.species == Species::ElemPalindromic;
  });
}

class Factorization : public ::testing::Test {
 protected:
  fixtures::Fixture ef = fixtures::edgeless();
  fixtures::Fixture pf = fixtures::path();
  GraphPtr e = ef.graph();
  GraphPtr p = pf.graph();
  Vertex x = e->vertex("x");
  Vertex y = e->vertex("y");
  Vertex z = e->vertex("z");

  Automorphism on_e(const char* expr) const { return compose_word(e, parse_symbols(*e, expr)); }
  Automorphism on_p(const char* expr) const { return compose_word(p, parse_symbols(*p, expr)); }
  Word ew(const char* text) const { return parse_word(e, text); }
  void expect_round_trip(const fixtures::Fixture& f, const GraphPtr& g, const FactorizationResult& r,
                         const Automorphism& a) const {
    EXPECT_TRUE(oracle::same_automorphism(oracle::Commutation(f, *g), reproduce(g, r), a))
        << format_symbols(*g, r.word);
  }
};

TEST_F(Factorization, CollinsLength) {
  EXPECT_EQ(collins_length(Automorphism::identity(e), e->all()), 3U);
  EXPECT_EQ(collins_length(on_e("P(x,y)"), e->all()), 5U);
  EXPECT_EQ(collins_length(on_e("inv(x)"), e->all()), 3U);
}

TEST_F(Factorization, CancellationInequality) {
  EXPECT_FALSE(cancellation_violation(ew("y x y"), ew("y"), 1, 1));
  EXPECT_TRUE(cancellation_violation(ew("y x y"), ew("y^-1 x^-1 y^-1 z"), 1, 1));
  EXPECT_EQ(code_of([&] { cancellation_violation(ew("y x y"), ew("y x y"), 1, -1); }), ErrorCode::PreconditionFailed);
}

TEST_F(Factorization, StabiliserDescent) {
  const auto id = factor_stabilizer_Y(e, x, Automorphism::identity(e));
  EXPECT_TRUE(id.word.empty());

  const auto a = on_e("P(x,y) inv(z)");
  const auto r = factor_stabilizer_Y(e, x, a);
  EXPECT_EQ(r.word.size(), 2U);
  expect_round_trip(ef, e, r, a);

  std::mt19937_64 rng(51);
  const auto gens = generator_family(*e, Family::Pure);
  for (int k = 0; k < 100; ++k) {
    const auto b = random_product(e, gens, 6, rng);
    const auto rb = factor_stabilizer_Y(e, x, b);
    EXPECT_TRUE(pure_symbols_only(rb.word));
    expect_round_trip(ef, e, rb, b);
  }
}

TEST_F(Factorization, Simplification) {
  const auto s = make_simple(on_p("P(a,b)"));
  EXPECT_TRUE(s.simple.is_identity());
  EXPECT_EQ(compose(on_p("P(a,b)"), compose_word(p, s.theta)), s.simple);
  const auto id = make_simple(Automorphism::identity(p));
  EXPECT_TRUE(id.theta.empty());
  EXPECT_TRUE(id.simple.is_identity());
  const auto already = make_simple(on_p("inv(c)"));
  EXPECT_TRUE(already.theta.empty());
}

TEST_F(Factorization, PurePalindromic) {
  const auto a = on_p("P(a,b) inv(c)");
  const auto r = factor_pure_palindromic(a);
  EXPECT_EQ(r.word.size(), 2U);
  EXPECT_FALSE(r.residual.has_value());
  expect_round_trip(pf, p, r, a);

  const auto c = chi1(e, x, y, z);
  const auto rc = factor_pure_palindromic(c);
  EXPECT_FALSE(rc.word.empty());
  EXPECT_TRUE(pure_symbols_only(rc.word));
  expect_round_trip(ef, e, rc, c);

  EXPECT_TRUE(factor_pure_palindromic(Automorphism::identity(p)).word.empty());
}

TEST_F(Factorization, PalindromicAndCentraliser) {
  const auto a = on_p("diag(a:c,c:a) P(a,b)");
  const auto r = factor_palindromic(a);
  ASSERT_FALSE(r.word.empty());
  EXPECT_EQ(r.word.front().species, Species::Diagram);
  expect_round_trip(pf, p, r, a);

  const auto t = on_p("tau(a,b)");
  const auto rt = factor_centralizer_iota(t);
  expect_round_trip(pf, p, rt, t);
  EXPECT_EQ(code_of([&] { factor_palindromic(t); }), ErrorCode::NotPalindromic);
  EXPECT_TRUE(factor_centralizer_iota(Automorphism::identity(p)).word.empty());

  const auto outside = on_p("pc(a;c)");
  EXPECT_EQ(code_of([&] { factor_centralizer_iota(outside); }), ErrorCode::NotInCentralizer);
}

TEST_F(Factorization, FixedVertices) {
  const auto a = on_e("P(x,y)");
  const std::vector<Vertex> fixed{z};
  const auto r = factor_with_fixed(a, fixed);
  for (const auto& s : r.word) {
    const auto g = make_generator(e, s);
    EXPECT_EQ(g.image(z), ew("z")) << format_symbols(*e, SymbolWord{s});
  }
  expect_round_trip(ef, e, r, a);

  const std::vector<Vertex> all{x, y, z};
  EXPECT_TRUE(factor_with_fixed(Automorphism::identity(e), all).word.empty());
  EXPECT_EQ(code_of([&] { factor_with_fixed(on_e("inv(z)"), fixed); }), ErrorCode::PreconditionFailed);
}

TEST_F(Factorization, TorelliSearch) {
  EXPECT_TRUE(factor_torelli_bfs(Automorphism::identity(e)).word.empty());

  const auto one = factor_torelli_bfs(chi1(e, x, y, z));
  ASSERT_EQ(one.word.size(), 1U);
  EXPECT_EQ(compose_word(e, expand_torelli(*e, one.word)), chi1(e, x, y, z));

  EXPECT_TRUE(compose(chi1(e, x, y, z), chi1(e, x, z, y)).is_identity());
  const auto two = compose(chi1(e, x, y, z), chi1(e, y, x, z));
  const auto found = factor_torelli_bfs(two);
  EXPECT_LE(found.word.size(), 2U);
  EXPECT_EQ(compose_word(e, expand_torelli(*e, found.word)), two);

  EXPECT_EQ(code_of([&] { factor_torelli_bfs(on_e("P(x,y)")); }), ErrorCode::PreconditionFailed);
  FactorOptions tight;
  tight.torelli_depth = 1;
  EXPECT_EQ(code_of([&] { factor_torelli_bfs(two, tight); }), ErrorCode::TorelliBudget);
}

TEST_F(Factorization, RelatorLifts) {
  const auto suite = relator_suite(*e);
  bool saw_family_eight = false;
  for (const auto& r : suite) {
    const auto lifted = lift_relator(e, r);
    EXPECT_TRUE(phi(lifted).is_identity()) << r.name();
    if (r.family == 1) EXPECT_TRUE(lifted.is_identity());
    if (r.family == 8 && r.indices == std::vector<std::size_t>{x, y, z}) {
      saw_family_eight = true;
      EXPECT_EQ(lifted, chi1(e, x, y, z));
    }
  }
  EXPECT_TRUE(saw_family_eight);
}

TEST_F(Factorization, ElementaryPalindromicMeetsInversionsTrivially) {
  std::mt19937_64 rng(52);
  SymbolWord gens;
  for (const auto& s : generator_family(*e, Family::Pure))
    if (s.species == Species::ElemPalindromic) gens.push_back(s);
  std::size_t diagonal = 0;
  for (int k = 0; k < 2000; ++k) {
    const auto a = random_product(e, gens, 2 * uniform_index(rng, 4), rng);
    bool signed_identity = true;
    for (Vertex v = 0; v < e->size(); ++v) {
      const auto l = a.image(v).letters();
      signed_identity = signed_identity && l.size() == 1 && l[0].vertex == v;
    }
    if (!signed_identity) continue;
    ++diagonal;
    EXPECT_TRUE(a.is_identity());
  }
  EXPECT_GT(diagonal, 0U);
}

class FactorProperties : public ::testing::TestWithParam<fixtures::Fixture> {};

TEST_P(FactorProperties, PureInputsUseOnlyPureSymbols) {
  const auto f = GetParam();
  const auto g = f.graph();
  const oracle::Commutation c(f, *g);
  const Corpus corpus = random_suite(g, SuiteKind::Pure, 60, 53);
  for (const auto& a : corpus.automorphisms) {
    const auto r = factor_pure_palindromic(a);
    EXPECT_TRUE(pure_symbols_only(r.word));
    EXPECT_TRUE(oracle::same_automorphism(c, reproduce(g, r), a));
  }
}

TEST_P(FactorProperties, CentraliserRoundTrip) {
  const auto f = GetParam();
  const auto g = f.graph();
  const oracle::Commutation c(f, *g);
  const Corpus corpus = random_suite(g, SuiteKind::Centralizer, 60, 54);
  for (const auto& a : corpus.automorphisms) {
    const auto r = factor_centralizer_iota(a);
    EXPECT_TRUE(oracle::same_automorphism(c, reproduce(g, r), a));
  }
}

TEST_P(FactorProperties, SimplificationProducesSimpleAutomorphisms) {
  const auto g = GetParam().graph();
  const Corpus corpus = random_suite(g, SuiteKind::Pure, 60, 55);
  for (const auto& a : corpus.automorphisms) {
    const auto s = make_simple(a);
    EXPECT_TRUE(predicates(s.simple).simple);
    EXPECT_EQ(compose(a, compose_word(g, s.theta)), s.simple);
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FactorProperties, ::testing::ValuesIn(fixtures::all()),
                         [](const auto& info) { return info.param.name; });

}  // namespace
