#include "raagpal/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "raagpal/error.hpp"

namespace raagpal {

namespace {

void check_same_graph(const Graph& a, const Graph& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorCode::GraphMismatch, "words live over different graphs");
}

LetterSeq inverse_letters(std::span<const Letter> w) {
  LetterSeq out(w.rbegin(), w.rend());
  for (auto& l : out) l = l.inverted();
  return out;
}

// Positions that can be shuffled to the front of a reduced word.
std::vector<std::size_t> front_positions(const Graph& g, std::span<const Letter> w) {
  std::vector<std::size_t> out;
  VertexSet seen;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen.subset_of(g.star(w[i].vertex))) out.push_back(i);
    seen.insert(w[i].vertex);
  }
  return out;
}

std::vector<std::size_t> back_positions(const Graph& g, std::span<const Letter> w) {
  std::vector<std::size_t> out;
  VertexSet seen;
  for (std::size_t i = w.size(); i-- > 0;) {
    if (seen.subset_of(g.star(w[i].vertex))) out.push_back(i);
    seen.insert(w[i].vertex);
  }
  return out;
}

VertexSet letters_support(std::span<const Letter> w) {
  VertexSet s;
  for (auto l : w) s.insert(l.vertex);
  return s;
}

// Search for p with p^m == target among length-(|target|/m) prefixes of the
// shuffle class of target. Prefix traces are enumerated as downsets of the
// dependency order, so each trace is visited once.
class RootSearch {
 public:
  RootSearch(const Graph& g, std::span<const Letter> target, std::size_t budget)
      : g_(g), target_(target.begin(), target.end()), budget_(budget) {}

  std::optional<LetterSeq> find(std::size_t m) {
    prefix_len_ = target_.size() / m;
    power_ = m;
    visited_.clear();
    std::vector<bool> taken(target_.size(), false);
    LetterSeq prefix;
    return dfs(taken, prefix);
  }

 private:
  bool available(const std::vector<bool>& taken, std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j) {
      if (taken[j]) continue;
      if (target_[j].vertex == target_[i].vertex || !g_.adjacent(target_[j].vertex, target_[i].vertex)) {
        return false;
      }
    }
    return true;
  }

  std::optional<LetterSeq> dfs(std::vector<bool>& taken, LetterSeq& prefix) {
    if (++steps_ > budget_) {
      throw Error(ErrorCode::RootSearchBudget, "root search exceeded " + std::to_string(budget_) + " states");
    }
    if (!visited_.insert(taken).second) return std::nullopt;
    if (prefix.size() == prefix_len_) {
      LetterSeq candidate = reduce_letters(g_, prefix);
      LetterSeq powered;
      for (std::size_t k = 0; k < power_; ++k) powered.insert(powered.end(), candidate.begin(), candidate.end());
      if (reduce_letters(g_, powered) == target_) return candidate;
      return std::nullopt;
    }
    for (std::size_t i = 0; i < target_.size(); ++i) {
      if (taken[i] || !available(taken, i)) continue;
      taken[i] = true;
      prefix.push_back(target_[i]);
      auto found = dfs(taken, prefix);
      prefix.pop_back();
      taken[i] = false;
      if (found) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  LetterSeq target_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  std::size_t prefix_len_ = 0;
  std::size_t power_ = 1;
  std::set<std::vector<bool>> visited_;
};

BasicFactor extract_root(const GraphPtr& graph, VertexSet component, LetterSeq u, std::size_t budget) {
  const Graph& g = *graph;
  if (component.size() == 1) {
    long long e = 0;
    for (auto l : u) e += l.sign();
    return {Word::generator(graph, component.front()), e};
  }
  std::vector<long long> occurrences(g.size(), 0);
  std::vector<long long> exponents(g.size(), 0);
  for (auto l : u) {
    ++occurrences[l.vertex];
    exponents[l.vertex] += l.sign();
  }
  long long d = 0;
  for (Vertex v : component) d = std::gcd(d, occurrences[v]);
  RootSearch search(g, u, budget);
  for (long long m = d; m > 1; --m) {
    if (d % m != 0 || static_cast<std::size_t>(m) > u.size()) continue;
    bool divisible = true;
    for (Vertex v : component) divisible = divisible && exponents[v] % m == 0;
    if (!divisible) continue;
    if (auto root = search.find(static_cast<std::size_t>(m))) {
      return {Word::reduce(graph, *root), m};
    }
  }
  return {Word::reduce(graph, u), 1};
}

}  // namespace

LetterSeq lex_normal_form(const Graph& g, std::span<const Letter> reduced) {
  LetterSeq rest(reduced.begin(), reduced.end());
  LetterSeq out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    VertexSet seen;
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const Letter c = rest[i];
      if (seen.subset_of(g.star(c.vertex)) && (best == rest.size() || c < rest[best])) best = i;
      seen.insert(c.vertex);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

LetterSeq reduce_letters(const Graph& g, std::span<const Letter> raw) {
  LetterSeq out;
  out.reserve(raw.size());
  for (const Letter x : raw) {
    g.check_vertex(x.vertex);
    bool cancelled = false;
    for (std::size_t i = out.size(); i-- > 0;) {
      const Letter y = out[i];
      if (y.vertex == x.vertex) {
        if (y.inverse != x.inverse) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          cancelled = true;
        }
        break;
      }
      if (!g.adjacent(y.vertex, x.vertex)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return lex_normal_form(g, out);
}

Word::Word(GraphPtr graph) : graph_(std::move(graph)) {}

Word::Word(GraphPtr graph, LetterSeq canonical) : graph_(std::move(graph)), letters_(std::move(canonical)) {}

Word Word::reduce(GraphPtr graph, std::span<const Letter> raw) {
  LetterSeq canonical = reduce_letters(*graph, raw);
  return Word(std::move(graph), std::move(canonical));
}

Word Word::generator(GraphPtr graph, Vertex v, long long power) {
  graph->check_vertex(v);
  LetterSeq seq(static_cast<std::size_t>(power < 0 ? -power : power), Letter{v, power < 0});
  return Word(std::move(graph), std::move(seq));
}

Word Word::operator*(const Word& rhs) const {
  check_same_graph(*graph_, *rhs.graph_);
  if (rhs.empty()) return *this;
  if (empty()) return rhs;
  LetterSeq cat(letters_);
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(graph_, reduce_letters(*graph_, cat));
}

Word Word::inverse() const { return Word(graph_, lex_normal_form(*graph_, inverse_letters(letters_))); }

Word Word::pow(long long exponent) const {
  Word base = exponent < 0 ? inverse() : *this;
  unsigned long long e = static_cast<unsigned long long>(exponent < 0 ? -exponent : exponent);
  Word result(graph_);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Word::operator==(const Word& rhs) const {
  check_same_graph(*graph_, *rhs.graph_);
  return letters_ == rhs.letters_;
}

Word reduce(const GraphPtr& graph, std::span<const Letter> raw) { return Word::reduce(graph, raw); }

bool equal(const Word& a, const Word& b) { return a == b; }

Word reverse(const Word& w) {
  LetterSeq rev(w.letters().rbegin(), w.letters().rend());
  return Word::reduce(w.graph_ptr(), rev);
}

bool is_reverse_invariant(const Word& w) { return reverse(w) == w; }

bool commute(const Word& a, const Word& b) { return a * b == b * a; }

bool is_palindrome(const Word& w) {
  if (!is_reverse_invariant(w)) return false;
  if (w.empty()) return true;
  const Word center = clique_palindromic_form(w).pieces.back();
  std::size_t odd = 0;
  for (long long e : exponent_vector(center)) odd += (e % 2 != 0) ? 1 : 0;
  return odd <= 1;
}

VertexSet support(const Word& w) { return letters_support(w.letters()); }

std::vector<long long> exponent_vector(const Word& w) {
  std::vector<long long> e(w.graph().size(), 0);
  for (auto l : w.letters()) e[l.vertex] += l.sign();
  return e;
}

WordStats support_length_exponents(const Word& w) { return {support(w), w.length(), exponent_vector(w)}; }

CyclicReduction cyclically_reduce(const Word& w) {
  const Graph& g = w.graph();
  LetterSeq cur(w.letters().begin(), w.letters().end());
  LetterSeq conj;
  bool peeled = true;
  while (peeled) {
    peeled = false;
    const auto fronts = front_positions(g, cur);
    const auto backs = back_positions(g, cur);
    for (std::size_t i : fronts) {
      for (std::size_t j : backs) {
        if (j > i && cur[j] == cur[i].inverted()) {
          conj.push_back(cur[i]);
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(j));
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i));
          peeled = true;
          break;
        }
      }
      if (peeled) break;
    }
  }
  return {Word::reduce(w.graph_ptr(), conj), Word::reduce(w.graph_ptr(), cur)};
}

Word BasicForm::core() const {
  Word out(conjugator.graph_ptr());
  for (const auto& f : factors) out = out * f.root.pow(f.exponent);
  return out;
}

BasicForm basic_form(const Word& w, std::size_t root_budget) {
  auto [conjugator, core] = cyclically_reduce(w);
  BasicForm bf{{}, conjugator};
  const Graph& g = w.graph();
  for (VertexSet comp : complement_components(g, support(core))) {
    LetterSeq projected;
    for (auto l : core.letters()) {
      if (comp.contains(l.vertex)) projected.push_back(l);
    }
    bf.factors.push_back(extract_root(w.graph_ptr(), comp, reduce_letters(g, projected), root_budget));
  }
  return bf;
}

std::size_t vertex_rank(const Graph& g, Vertex v) { return 1 + g.link(v).size(); }

CentralizerData rank_and_centralizer(const Word& w, std::size_t root_budget) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "rank is not defined for the identity");
  BasicForm bf = basic_form(w, root_budget);
  const Graph& g = w.graph();
  VertexSet link = g.all();
  for (const auto& f : bf.factors) {
    for (Vertex v : support(f.root)) link &= g.link(v);
  }
  CentralizerData out{bf.factors.size() + link.size(), {}, link, bf.conjugator};
  for (const auto& f : bf.factors) out.factors.push_back(f.root);
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s) {
    if (!s.subset_of(g.star(v))) return false;
  }
  return true;
}

Word CliquePalindromicForm::recompose() const {
  Word out = pieces.back();
  for (std::size_t i = pieces.size() - 1; i-- > 0;) out = pieces[i] * out * pieces[i];
  return out;
}

CliquePalindromicForm clique_palindromic_form(const Word& w) {
  if (!is_reverse_invariant(w)) throw Error(ErrorCode::NotReverseInvariant, format_word(w));
  const Graph& g = w.graph();
  CliquePalindromicForm form;
  Word a = w;
  while (true) {
    const VertexSet supp = support(a);
    if (is_clique(g, supp)) {
      form.pieces.push_back(a);
      break;
    }
    VertexSet z;
    for (Vertex v : supp) {
      if (supp.subset_of(g.star(v))) z.insert(v);
    }
    LetterSeq piece;
    const auto letters = a.letters();
    for (std::size_t i : front_positions(g, letters)) {
      if (!z.contains(letters[i].vertex)) piece.push_back(letters[i]);
    }
    if (piece.empty()) throw Error(ErrorCode::AssumptionFailed, "empty clique-palindromic piece");
    Word wi = Word::reduce(w.graph_ptr(), piece);
    Word next = wi.inverse() * a * wi.inverse();
    if (next.length() + 2 * wi.length() != a.length()) {
      throw Error(ErrorCode::AssumptionFailed, "piece " + format_word(wi) + " does not peel from both ends");
    }
    form.pieces.push_back(wi);
    a = next;
  }
  return form;
}

LetterSeq parse_letters(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  LetterSeq out;
  std::vector<std::string> tokens;
  while (in >> token) tokens.push_back(token);
  if (tokens.size() == 1 && tokens[0] == "1" && !g.find("1")) return out;
  for (const auto& tok : tokens) {
    const auto caret = tok.find('^');
    const std::string name = tok.substr(0, caret);
    long long power = 1;
    if (caret != std::string::npos) {
      const std::string exp = tok.substr(caret + 1);
      const char* first = exp.data();
      const char* last = exp.data() + exp.size();
      if (!exp.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, power);
      if (ec != std::errc{} || ptr != last || power == 0) {
        throw Error(ErrorCode::ParseError, "bad exponent in token '" + tok + "'");
      }
    }
    const Vertex v = g.vertex(name);
    const Letter l{v, power < 0};
    for (long long k = 0; k < (power < 0 ? -power : power); ++k) out.push_back(l);
  }
  return out;
}

Word parse_word(const GraphPtr& graph, std::string_view text) {
  return Word::reduce(graph, parse_letters(*graph, text));
}

std::string format_letters(const Graph& g, std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long long run = static_cast<long long>(j - i) * letters[i].sign();
    if (!out.empty()) out += ' ';
    out += g.name(letters[i].vertex);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_word(const Word& w) { return format_letters(w.graph(), w.letters()); }

}  // namespace raagpal
