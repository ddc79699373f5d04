// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "raagpal/error.hpp"
#include "raagpal/factorization.hpp"
#include "raagpal/matrix.hpp"
#include "raagpal/sampling.hpp"

namespace {

using namespace raagpal;
using oracle::Seq;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

Seq random_seq(std::size_t n, std::size_t max_len, std::mt19937_64& rng) {
  const std::size_t len = rng() % (max_len + 1);
  Seq s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<std::uint8_t>(rng() % (2 * n)));
  return s;
}

/// Random sequence of shuffles and inserted or deleted cancelling pairs, so
/// the result names the same element, kept within max_len letters.
Seq perturb(const oracle::Commutation& c, Seq s, std::size_t max_len, std::mt19937_64& rng) {
  for (int step = 0; step < 6; ++step) {
    const auto move = rng() % 3;
    if (move == 0 && s.size() >= 2) {
      const std::size_t i = rng() % (s.size() - 1);
      if (s[i] != s[i + 1] && c.letters_commute(s[i], s[i + 1])) std::swap(s[i], s[i + 1]);
    } else if (move == 1 && s.size() + 2 <= max_len) {
      const std::size_t i = rng() % (s.size() + 1);
      const auto x = static_cast<std::uint8_t>(rng() % (2 * c.size()));
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), {x, static_cast<std::uint8_t>(x ^ 1U)});
    } else if (move == 2) {
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if ((s[i] ^ 1U) == s[i + 1]) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          break;
        }
      }
    }
  }
  return s;
}

Word to_word(const GraphPtr& g, const Seq& s) {
  const LetterSeq letters = oracle::decode(s);
  return Word::reduce(g, letters);
}

std::string show(const GraphPtr& g, const Seq& s) { return format_letters(*g, oracle::decode(s)); }

Verdict word_problem() {
  Verdict v;
  std::size_t agree = 0;
  std::size_t equal_pairs = 0;
  std::size_t total = 0;
  for (const auto& f : fixtures::with_five_vertices()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    std::mt19937_64 rng(1001);
    for (int k = 0; k < 1000; ++k) {
      const Seq u = random_seq(g->size(), 8, rng);
      const Seq w = (rng() % 2) ? perturb(c, u, 8, rng) : random_seq(g->size(), 8, rng);
      const bool expected = oracle::equal(c, u, w);
      const bool got = equal(to_word(g, u), to_word(g, w));
      const auto reduced = oracle::reduced_class(c, u);
      const bool canonical_ok = reduced.count(oracle::encode(to_word(g, u).letters())) > 0;
      ++total;
      equal_pairs += expected ? 1 : 0;
      if (expected == got && canonical_ok) {
        ++agree;
      } else {
        v.fail(f.name + ": " + show(g, u) + " vs " + show(g, w));
      }
    }
  }
  v.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(equal_pairs) +
             " equal pairs";
  return v;
}

Verdict palindromes() {
  Verdict v;
  std::size_t total = 0;
  std::size_t positives = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    std::mt19937_64 rng(2002);
    std::size_t accepted = 0;
    while (accepted < 500) {
      Seq s;
      if (rng() % 2) {
        const Seq u = random_seq(g->size(), 3, rng);
        const Seq m = random_seq(g->size(), 2, rng);
        s = perturb(c, oracle::concat(oracle::concat(u, m), oracle::reversed(u)), 8, rng);
      } else {
        s = random_seq(g->size(), 8, rng);
      }
      if (!oracle::reverse_invariant(c, s)) continue;
      ++accepted;
      ++total;
      const bool expected = oracle::literal_palindrome(c, s);
      positives += expected ? 1 : 0;
      if (is_palindrome(to_word(g, s)) != expected) v.fail(f.name + ": " + show(g, s));
    }
  }
  v.detail = std::to_string(total) + " reverse-invariant words, " + std::to_string(positives) + " palindromes";
  return v;
}

Verdict clique_palindromic_forms() {
  Verdict v;
  std::size_t images = 0;
  std::size_t deep = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    const Corpus corpus = random_suite(g, SuiteKind::Centralizer, 500, 3003);
    for (const auto& a : corpus.automorphisms) {
      for (Vertex x = 0; x < g->size(); ++x) {
        const Word& w = a.image(x);
        const CliquePalindromicForm form = clique_palindromic_form(w);
        ++images;
        const auto& pieces = form.pieces;
        Seq recomposed;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
          recomposed = oracle::concat(recomposed, oracle::encode(pieces[i].letters()));
        }
        for (std::size_t i = pieces.size() - 1; i-- > 0;) {
          recomposed = oracle::concat(recomposed, oracle::encode(pieces[i].letters()));
        }
        bool ok = oracle::fast_equal(c, recomposed, oracle::encode(w.letters()));
        for (const auto& p : pieces) {
          std::vector<std::size_t> verts;
          for (auto code : oracle::encode(p.letters())) verts.push_back(code / 2);
          ok = ok && oracle::clique(c, verts);
        }
        if (pieces.size() >= 3) {
          ++deep;
          for (std::size_t i = 0; i + 2 < pieces.size(); ++i) {
            const Seq a1 = oracle::encode(pieces[i].letters());
            const Seq a2 = oracle::encode(pieces[i + 1].letters());
            const Seq comm = oracle::concat(oracle::concat(a1, a2), oracle::concat(oracle::inverse(a1), oracle::inverse(a2)));
            ok = ok && !oracle::fast_reduce(c, comm).empty();
          }
        }
        if (!ok) v.fail(f.name + ": " + format_word(w));
      }
    }
  }
  v.detail = std::to_string(images) + " images, " + std::to_string(deep) + " with k >= 3";
  return v;
}

using Matrix = std::vector<std::vector<long long>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), std::vector<long long>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t j = 0; j < a.size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Matrix theta_matrix(std::size_t n, const ThetaSymbol& s) {
  Matrix m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  if (s.kind == ThetaSymbol::Kind::Z) {
    m[s.i][s.i] = -1;
  } else {
    m[s.i][s.j] = s.inverse ? -2 : 2;
  }
  return m;
}

Verdict relators() {
  Verdict v;
  std::size_t total = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto suite = relator_suite(n);
    std::vector<std::size_t> per_family(11, 0);
    for (const auto& r : suite) {
      ++per_family[static_cast<std::size_t>(r.family)];
      Matrix m(n, std::vector<long long>(n, 0));
      for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
      for (const auto& s : r.word) m = mat_mul(m, theta_matrix(n, s));
      if (!oracle::is_identity(m) || !evaluate(n, r.word).is_identity()) v.fail(r.name());
      ++total;
    }
    const std::size_t p2 = n * (n - 1);
    const std::size_t p3 = p2 * (n - 2);
    const std::size_t p4 = p3 * (n >= 3 ? n - 3 : 0);
    const std::vector<std::size_t> expected{0, n, p2, p2, p2, p3, p3, p4, p3, p3, p3};
    if (per_family != expected) v.fail("instance counts for n = " + std::to_string(n));
  }
  v.detail = std::to_string(total) + " instances for n = 2..6";
  return v;
}

Verdict exact_sequence() {
  Verdict v;
  std::size_t samples = 0;
  std::size_t pure = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    const auto group = oracle::generated_group(oracle::symmetry_generators(c), g->size());
    const Corpus corpus = random_suite(g, SuiteKind::Centralizer, 500, 5005);
    for (const auto& a : corpus.automorphisms) {
      ++samples;
      const oracle::Bits m2 = oracle::abelianise_mod2(a);
      oracle::Bits id(g->size(), 0);
      for (std::size_t i = 0; i < g->size(); ++i) id[i] = 1U << i;
      const bool trivial = m2 == id;
      const bool is_pure = predicates(a).pure;
      pure += is_pure ? 1 : 0;
      if (is_pure != trivial) v.fail(f.name + " purity: " + format_symbols(*g, *a.provenance()));
      if (group.count(m2) == 0) v.fail(f.name + " mod 2 image: " + format_symbols(*g, *a.provenance()));
    }
  }
  v.detail = std::to_string(samples) + " samples, " + std::to_string(pure) + " pure";
  return v;
}

Verdict adjacent_domination() {
  Verdict v;
  const std::vector<std::pair<std::string, bool>> known{{"path", true}, {"edgeless", false}, {"triangle", true}};
  std::string summary;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    bool expected = false;
    for (std::size_t s = 0; s < c.size(); ++s)
      for (std::size_t t = 0; t < c.size(); ++t)
        if (s != t && c.adjacent(s, t) && oracle::dominated(c, s, t)) expected = true;
    for (const auto& [name, value] : known)
      if (name == f.name && value != expected) v.fail(f.name + ": oracle disagrees with the reference value");
    const bool got = has_adjacent_domination(*g);
    if (got != expected) v.fail(f.name + ": has_adjacent_domination");
    summary += f.name + "=" + (got ? "true" : "false") + " ";
    if (got) {
      bool found = false;
      for (Vertex s = 0; s < g->size() && !found; ++s) {
        for (Vertex t = 0; t < g->size() && !found; ++t) {
          if (s == t || !g->adjacent(s, t) || !g->dominated_by(s, t)) continue;
          const Automorphism tau = make_generator(g, GeneratorSymbol::transvection(s, t));
          const Predicates p = predicates(tau);
          const Seq image = oracle::encode(tau.image(s).letters());
          found = p.in_centralizer && !p.palindromic && oracle::reverse_invariant(c, image) &&
                  !oracle::literal_palindrome(c, image);
        }
      }
      if (!found) v.fail(f.name + ": no witnessing adjacent transvection");
    } else {
      for (const auto& sym : generator_family(*g, Family::Centralizer)) {
        const Automorphism a = make_generator(g, sym);
        for (const auto& image : oracle::images(a)) {
          if (!oracle::literal_palindrome(c, image)) v.fail(f.name + ": " + format_symbol(*g, sym));
        }
      }
    }
  }
  v.detail = summary.substr(0, summary.size() - 1);
  return v;
}

bool composes_to(const GraphPtr& g, const oracle::Commutation& c, const FactorizationResult& r,
                 const Automorphism& a) {
  if (r.residual && !r.residual->is_identity()) return false;
  return oracle::same_automorphism(c, compose_word(g, r.word), a);
}

Verdict factorization() {
  Verdict v;
  std::size_t runs = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    std::mt19937_64 rng(7007);
    const SymbolWord pure_gens = generator_family(*g, Family::Pure);
    const SymbolWord pal_gens = generator_family(*g, Family::Palindromic);
    for (int k = 0; k < 200; ++k) {
      const Automorphism a = random_product(g, pure_gens, uniform_index(rng, 9), rng);
      const Automorphism b = random_product(g, pal_gens, uniform_index(rng, 9), rng);
      const Vertex fixed = static_cast<Vertex>(uniform_index(rng, g->size()));
      const std::vector<Vertex> fixed_set{fixed};
      const Automorphism d = random_product(g, generator_family(*g, Family::Palindromic, fixed_set),
                                            uniform_index(rng, 9), rng);
      runs += 3;
      try {
        const auto ra = factor_pure_palindromic(a);
        bool symbols_ok = true;
        for (const auto& s : ra.word)
          symbols_ok = symbols_ok && (s.species == Species::Inversion || s.species == Species::ElemPalindromic);
        if (!composes_to(g, c, ra, a) || !symbols_ok) v.fail(f.name + " pure: " + format_symbols(*g, *a.provenance()));
      } catch (const Error& e) {
        v.fail(f.name + " pure: " + format_symbols(*g, *a.provenance()) + ": " + e.what());
      }
      try {
        if (!composes_to(g, c, factor_palindromic(b), b))
          v.fail(f.name + " palindromic: " + format_symbols(*g, *b.provenance()));
      } catch (const Error& e) {
        v.fail(f.name + " palindromic: " + format_symbols(*g, *b.provenance()) + ": " + e.what());
      }
      try {
        const auto rd = factor_with_fixed(d, fixed_set);
        bool audit = true;
        for (const auto& s : rd.word) audit = audit && make_generator(g, s).image(fixed) == Word::generator(g, fixed);
        if (!composes_to(g, c, rd, d) || !audit)
          v.fail(f.name + " fixed " + g->name(fixed) + ": " + format_symbols(*g, *d.provenance()));
      } catch (const Error& e) {
        v.fail(f.name + " fixed " + g->name(fixed) + ": " + format_symbols(*g, *d.provenance()) + ": " + e.what());
      }
    }
  }
  v.detail = std::to_string(runs) + " factorizations";
  return v;
}

Verdict torelli() {
  Verdict v;
  std::size_t chis = 0;
  std::size_t lifts = 0;
  std::size_t nontrivial = 0;
  std::size_t deepest = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    for (Vertex i = 0; i < g->size(); ++i) {
      for (Vertex j = 0; j < g->size(); ++j) {
        for (Vertex k = 0; k < g->size(); ++k) {
          if (chi1_defined(*g, i, j, k)) {
            ++chis;
            if (!oracle::is_identity(oracle::abelianise(chi1(g, i, j, k)))) v.fail(f.name + ": chi1 not Torelli");
          }
          if (chi2_defined(*g, i, j, k)) {
            ++chis;
            if (!oracle::is_identity(oracle::abelianise(chi2(g, i, j, k)))) v.fail(f.name + ": chi2 not Torelli");
          }
        }
      }
    }
    for (const auto& rel : relator_suite(*g)) {
      ++lifts;
      const Automorphism lift = lift_relator(g, rel);
      if (!oracle::is_identity(oracle::abelianise(lift))) v.fail(f.name + ": lift of " + rel.name());
      if (lift.is_identity()) continue;
      ++nontrivial;
      try {
        const TorelliSearch s = factor_torelli_bfs(lift);
        deepest = std::max(deepest, s.depth);
        const Automorphism back = compose_word(g, expand_torelli(*g, s.word));
        if (s.depth > 4 || !oracle::same_automorphism(c, back, lift)) v.fail(f.name + ": search for " + rel.name());
      } catch (const Error& e) {
        v.fail(f.name + ": search for " + rel.name() + ": " + e.what());
      }
    }
  }
  const auto e = fixtures::edgeless();
  const GraphPtr g = e.graph();
  const oracle::Commutation c(e, *g);
  const Automorphism x = chi1(g, g->vertex("x"), g->vertex("y"), g->vertex("z"));
  const Seq image = oracle::encode(x.image(g->vertex("x")).letters());
  if (oracle::fast_equal(c, image, oracle::encode(Word::generator(g, g->vertex("x")).letters())))
    v.fail("edgeless: chi1(x,y,z) fixes x");
  v.detail = std::to_string(chis) + " chi instances, " + std::to_string(lifts) + " lifts, " +
             std::to_string(nontrivial) + " nontrivial, max depth " + std::to_string(deepest) +
             ", chi1(x,y,z)(x) = " + format_word(x.image(g->vertex("x")));
  return v;
}

Verdict blocks() {
  Verdict v;
  std::size_t samples = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    const std::size_t n = g->size();
    std::mt19937_64 rng(9009);
    const SymbolWord gens = generator_family(*g, Family::Aut0Centralizer);
    for (int k = 0; k < 200; ++k) {
      const Automorphism a = random_product(g, gens, uniform_index(rng, 9), rng);
      const auto m = oracle::abelianise(a);
      ++samples;
      bool ok = true;
      for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
          const bool same_class = oracle::dominated(c, row, col) && oracle::dominated(c, col, row);
          if (!same_class && m[row][col] != 0 && !oracle::dominated(c, col, row)) ok = false;
        }
      }
      for (std::size_t u = 0; u < n; ++u) {
        std::vector<std::size_t> cls;
        for (std::size_t w = 0; w < n; ++w)
          if (oracle::dominated(c, u, w) && oracle::dominated(c, w, u)) cls.push_back(w);
        if (cls.size() < 2 || c.adjacent(cls[0], cls[1])) continue;
        for (std::size_t r : cls) {
          std::size_t odd_row = 0;
          std::size_t odd_col = 0;
          for (std::size_t s : cls) {
            odd_row += (m[r][s] % 2 != 0) ? 1 : 0;
            odd_col += (m[s][r] % 2 != 0) ? 1 : 0;
          }
          if (odd_row != 1 || odd_col != 1) ok = false;
        }
      }
      const IntMatrix lib = phi(a);
      const bool lib_ok = block_decompose(lib, *g).violations.empty() && free_block_check(lib, *g);
      if (!ok || !lib_ok) v.fail(f.name + ": " + format_symbols(*g, *a.provenance()));
    }
  }
  v.detail = std::to_string(samples) + " samples";
  return v;
}

Verdict splittings() {
  Verdict v;
  std::size_t splits = 0;
  std::size_t collisions = 0;
  for (const auto& f : fixtures::all()) {
    const GraphPtr g = f.graph();
    const oracle::Commutation c(f, *g);
    const std::size_t n = g->size();
    std::mt19937_64 rng(1010);
    const SymbolWord pal = generator_family(*g, Family::Palindromic);
    for (int k = 0; k < 200; ++k) {
      const Automorphism a = random_product(g, pal, uniform_index(rng, 9), rng);
      const DiagramSplit s = split_diagram_pure(a);
      ++splits;
      bool ok = oracle::same_automorphism(c, compose(s.delta, s.gamma), a);
      oracle::Bits id(n, 0);
      for (std::size_t i = 0; i < n; ++i) id[i] = 1U << i;
      ok = ok && oracle::abelianise_mod2(s.gamma) == id && predicates(s.gamma).pure;
      std::set<std::uint8_t> targets;
      for (const auto& image : oracle::images(s.delta)) {
        ok = ok && image.size() == 1 && image[0] % 2 == 0;
        if (!image.empty()) targets.insert(image[0]);
      }
      ok = ok && targets.size() == n;
      if (!ok) v.fail(f.name + ": " + format_symbols(*g, *a.provenance()));
    }
    SymbolWord elementary;
    SymbolWord inversions;
    for (const auto& s : generator_family(*g, Family::Pure))
      (s.species == Species::Inversion ? inversions : elementary).push_back(s);
    for (int k = 0; k < 200; ++k) {
      const Automorphism e = random_product(g, elementary, 1 + uniform_index(rng, 8), rng);
      const Automorphism i = random_product(g, inversions, 1 + uniform_index(rng, 8), rng);
      const bool same = oracle::same_automorphism(c, e, i);
      if (same != (e == i)) v.fail(f.name + ": equality disagrees with the oracle");
      if (same) {
        ++collisions;
        if (!e.is_identity()) v.fail(f.name + ": " + format_symbols(*g, *e.provenance()));
      }
    }
  }
  v.detail = std::to_string(splits) + " splits, 1000 collision attempts, " + std::to_string(collisions) +
             " identity coincidences";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"word problem matches shuffle/cancellation closure", word_problem},
      {"palindrome decision matches shuffle-class search", palindromes},
      {"clique-palindromic normal forms of centraliser images", clique_palindromic_forms},
      {"level 2 congruence relators evaluate to I for n = 2..6", relators},
      {"purity iff trivial mod 2, images in the symmetry group", exact_sequence},
      {"adjacent domination criterion", adjacent_domination},
      {"factorization round trips", factorization},
      {"Torelli generators and relator lifts", torelli},
      {"block structure of Aut^0 centraliser elements", blocks},
      {"diagram/pure splitting and elementary/inversion intersection", splittings},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s [%s] (%.2fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    if (!v.pass) {
      std::printf("     first witness: %s\n", v.witness.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
