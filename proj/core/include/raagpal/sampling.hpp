#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "raagpal/automorphism.hpp"

namespace raagpal {

/// Generating sets used for random products.
///   Pure            inversions and dominated P_ij
///   Palindromic     Pure plus nontrivial diagram automorphisms
///   Centralizer     Palindromic plus adjacent dominated transvections
///   Aut0Centralizer Pure plus adjacent dominated transvections
enum class Family { Pure, Palindromic, Centralizer, Aut0Centralizer };

/// Every generator of the family together with its inverse, restricted to
/// symbols fixing each vertex of `fixed`.
SymbolWord generator_family(const Graph& g, Family family, std::span<const Vertex> fixed = {});

/// Uniform index in [0, bound) drawn as rng() % bound so streams are
/// identical across standard libraries.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound);

/// Raw letter sequence of length uniform in [0, max_length].
LetterSeq random_raw_word(const Graph& g, std::size_t max_length, std::mt19937_64& rng);

/// Product of `length` symbols drawn uniformly from `gens`, with provenance.
Automorphism random_product(const GraphPtr& graph, std::span<const GeneratorSymbol> gens, std::size_t length,
                            std::mt19937_64& rng);

enum class SuiteKind { Words, Centralizer, Pure, Palindromic };
SuiteKind parse_suite_kind(std::string_view name);

struct Corpus {
  std::vector<Word> words;
  std::vector<Automorphism> automorphisms;
};

/// Seeded corpus: raw words of length at most max_length for Words, or
/// products of at most max_length generators of the matching family.
Corpus random_suite(const GraphPtr& graph, SuiteKind kind, std::size_t count, std::uint64_t seed,
                    std::size_t max_length = 8);

}  // namespace raagpal
