#include "raagpal/sampling.hpp"

#include <algorithm>

#include "raagpal/error.hpp"

namespace raagpal {

SymbolWord generator_family(const Graph& g, Family family, std::span<const Vertex> fixed) {
  SymbolWord out;
  for (Vertex v = 0; v < g.size(); ++v) out.push_back(GeneratorSymbol::inversion(v));
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex t = 0; t < g.size(); ++t) {
      if (s == t || !g.dominated_by(s, t)) continue;
      out.push_back(GeneratorSymbol::elem_palindromic(s, t));
      out.push_back(GeneratorSymbol::elem_palindromic(s, t, true));
    }
  }
  if (family == Family::Palindromic || family == Family::Centralizer) {
    for (const auto& perm : graph_automorphisms(g)) {
      bool identity = true;
      for (Vertex v = 0; v < perm.size(); ++v) identity = identity && perm[v] == v;
      if (!identity) out.push_back(GeneratorSymbol::diagram(perm));
    }
  }
  if (family == Family::Centralizer || family == Family::Aut0Centralizer) {
    for (Vertex s = 0; s < g.size(); ++s) {
      for (Vertex t = 0; t < g.size(); ++t) {
        if (s == t || !g.adjacent(s, t) || !g.dominated_by(s, t)) continue;
        out.push_back(GeneratorSymbol::transvection(s, t));
        out.push_back(GeneratorSymbol::transvection(s, t, true));
      }
    }
  }
  std::erase_if(out, [&](const GeneratorSymbol& s) {
    return std::any_of(fixed.begin(), fixed.end(), [&](Vertex f) { return !s.fixes(f); });
  });
  return out;
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

LetterSeq random_raw_word(const Graph& g, std::size_t max_length, std::mt19937_64& rng) {
  LetterSeq out;
  if (g.size() == 0) return out;
  const std::size_t len = uniform_index(rng, max_length + 1);
  for (std::size_t k = 0; k < len; ++k) {
    const auto v = static_cast<Vertex>(uniform_index(rng, g.size()));
    out.push_back({v, uniform_index(rng, 2) == 1});
  }
  return out;
}

Automorphism random_product(const GraphPtr& graph, std::span<const GeneratorSymbol> gens, std::size_t length,
                            std::mt19937_64& rng) {
  SymbolWord word;
  if (!gens.empty()) {
    for (std::size_t k = 0; k < length; ++k) word.push_back(gens[uniform_index(rng, gens.size())]);
  }
  return compose_word(graph, word);
}

SuiteKind parse_suite_kind(std::string_view name) {
  if (name == "words") return SuiteKind::Words;
  if (name == "centralizer") return SuiteKind::Centralizer;
  if (name == "pure") return SuiteKind::Pure;
  if (name == "palindromic") return SuiteKind::Palindromic;
  throw Error(ErrorCode::ParseError, "unknown suite kind '" + std::string(name) + "'");
}

Corpus random_suite(const GraphPtr& graph, SuiteKind kind, std::size_t count, std::uint64_t seed,
                    std::size_t max_length) {
  std::mt19937_64 rng(seed);
  Corpus out;
  if (kind == SuiteKind::Words) {
    for (std::size_t k = 0; k < count; ++k) out.words.push_back(Word::reduce(graph, random_raw_word(*graph, max_length, rng)));
    return out;
  }
  const Family family = kind == SuiteKind::Pure ? Family::Pure
                        : kind == SuiteKind::Palindromic ? Family::Palindromic
                                                         : Family::Centralizer;
  const SymbolWord gens = generator_family(*graph, family);
  for (std::size_t k = 0; k < count; ++k) {
    out.automorphisms.push_back(random_product(graph, gens, uniform_index(rng, max_length + 1), rng));
  }
  return out;
}

}  // namespace raagpal
