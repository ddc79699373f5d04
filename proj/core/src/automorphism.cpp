#include "raagpal/automorphism.hpp"

#include <algorithm>
#include <sstream>

#include "raagpal/error.hpp"

namespace raagpal {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IllegalGenerator, what);
}

std::vector<Vertex> inverse_perm(const std::vector<Vertex>& perm) {
  std::vector<Vertex> inv(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) inv[perm[v]] = static_cast<Vertex>(v);
  return inv;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void parse_error(const std::string& term, const std::string& why) {
  throw Error(ErrorCode::ParseError, "term '" + term + "': " + why);
}

}  // namespace

GeneratorSymbol GeneratorSymbol::diagram(std::vector<Vertex> perm) {
  GeneratorSymbol s;
  s.species = Species::Diagram;
  s.perm = std::move(perm);
  return s;
}

GeneratorSymbol GeneratorSymbol::inversion(Vertex i) {
  GeneratorSymbol s;
  s.species = Species::Inversion;
  s.i = i;
  return s;
}

GeneratorSymbol GeneratorSymbol::transvection(Vertex i, Vertex j, bool inverted) {
  GeneratorSymbol s;
  s.species = Species::Transvection;
  s.i = i;
  s.j = j;
  s.inverted = inverted;
  return s;
}

GeneratorSymbol GeneratorSymbol::partial_conjugation(Vertex i, VertexSet component, bool inverted) {
  GeneratorSymbol s;
  s.species = Species::PartialConjugation;
  s.i = i;
  s.component = component;
  s.inverted = inverted;
  return s;
}

GeneratorSymbol GeneratorSymbol::elem_palindromic(Vertex i, Vertex j, bool inverted) {
  GeneratorSymbol s;
  s.species = Species::ElemPalindromic;
  s.i = i;
  s.j = j;
  s.inverted = inverted;
  return s;
}

GeneratorSymbol GeneratorSymbol::inverse() const {
  GeneratorSymbol s = *this;
  switch (species) {
    case Species::Inversion:
      break;
    case Species::Diagram:
      s.perm = inverse_perm(perm);
      break;
    default:
      s.inverted = !inverted;
  }
  return s;
}

bool GeneratorSymbol::fixes(Vertex v) const {
  switch (species) {
    case Species::Diagram: return perm.at(v) == v;
    case Species::PartialConjugation: return !component.contains(v);
    default: return i != v;
  }
}

void validate_symbol(const Graph& g, const GeneratorSymbol& s) {
  const std::size_t n = g.size();
  switch (s.species) {
    case Species::Diagram: {
      require(s.perm.size() == n, "diagram permutation must list every vertex");
      std::vector<bool> hit(n, false);
      for (Vertex v : s.perm) {
        require(v < n && !hit[v], "diagram map is not a permutation");
        hit[v] = true;
      }
      for (auto [u, v] : g.edges()) {
        require(g.adjacent(s.perm[u], s.perm[v]),
                "diagram map sends edge " + g.name(u) + "-" + g.name(v) + " to a non-edge");
      }
      break;
    }
    case Species::Inversion:
      g.check_vertex(s.i);
      break;
    case Species::Transvection:
    case Species::ElemPalindromic:
      g.check_vertex(s.i);
      g.check_vertex(s.j);
      require(s.i != s.j, "indices must be distinct");
      require(g.dominated_by(s.i, s.j), g.name(s.i) + " not dominated by " + g.name(s.j));
      break;
    case Species::PartialConjugation: {
      g.check_vertex(s.i);
      const auto comps = components_excluding_star(g, s.i);
      require(std::find(comps.begin(), comps.end(), s.component) != comps.end(),
              "partial conjugation set is not a component of the graph minus st(" + g.name(s.i) + ")");
      break;
    }
  }
}

Automorphism::Automorphism(GraphPtr graph, std::vector<Word> images, std::optional<SymbolWord> provenance)
    : graph_(std::move(graph)), images_(std::move(images)), provenance_(std::move(provenance)) {}

Automorphism Automorphism::identity(GraphPtr graph) {
  std::vector<Word> images;
  for (Vertex v = 0; v < graph->size(); ++v) images.push_back(Word::generator(graph, v));
  return Automorphism(std::move(graph), std::move(images), SymbolWord{});
}

Automorphism Automorphism::from_images(GraphPtr graph, std::vector<Word> images) {
  if (images.size() != graph->size()) {
    throw Error(ErrorCode::NotHomomorphism, "expected one image per vertex");
  }
  for (const auto& w : images) {
    if (&w.graph() != graph.get() && !(w.graph() == *graph)) {
      throw Error(ErrorCode::GraphMismatch, "image word over another graph");
    }
  }
  for (auto [u, v] : graph->edges()) {
    if (!commute(images[u], images[v])) {
      throw Error(ErrorCode::NotHomomorphism,
                  "images of adjacent " + graph->name(u) + " and " + graph->name(v) + " do not commute");
    }
  }
  return Automorphism(std::move(graph), std::move(images), std::nullopt);
}

bool Automorphism::is_identity() const {
  for (Vertex v = 0; v < images_.size(); ++v) {
    const auto l = images_[v].letters();
    if (l.size() != 1 || l[0].vertex != v || l[0].inverse) return false;
  }
  return true;
}

std::size_t Automorphism::total_length() const {
  std::size_t total = 0;
  for (const auto& w : images_) total += w.length();
  return total;
}

Word Automorphism::apply(const Word& w) const {
  if (&w.graph() != graph_.get() && !(w.graph() == *graph_)) {
    throw Error(ErrorCode::GraphMismatch, "word over another graph");
  }
  LetterSeq raw;
  for (const Letter l : w.letters()) {
    const auto img = images_[l.vertex].letters();
    if (l.inverse) {
      for (auto it = img.rbegin(); it != img.rend(); ++it) raw.push_back(it->inverted());
    } else {
      raw.insert(raw.end(), img.begin(), img.end());
    }
  }
  return Word::reduce(graph_, raw);
}

bool Automorphism::operator==(const Automorphism& other) const {
  if (&other.graph() != graph_.get() && !(other.graph() == *graph_)) {
    throw Error(ErrorCode::GraphMismatch, "automorphisms over different graphs");
  }
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (!std::equal(images_[v].letters().begin(), images_[v].letters().end(), other.images_[v].letters().begin(),
                    other.images_[v].letters().end())) {
      return false;
    }
  }
  return true;
}

std::string Automorphism::key() const {
  std::string k;
  for (const auto& w : images_) {
    for (const Letter l : w.letters()) k.push_back(static_cast<char>(l.vertex * 2 + (l.inverse ? 1 : 0)));
    k.push_back(static_cast<char>(0xFF));
  }
  return k;
}

Automorphism make_generator(const GraphPtr& graph, const GeneratorSymbol& s) {
  validate_symbol(*graph, s);
  Automorphism a = Automorphism::identity(graph);
  auto& img = a.images_;
  const bool inv = s.inverted;
  switch (s.species) {
    case Species::Diagram:
      for (Vertex v = 0; v < graph->size(); ++v) img[v] = Word::generator(graph, s.perm[v]);
      break;
    case Species::Inversion:
      img[s.i] = Word::generator(graph, s.i, -1);
      break;
    case Species::Transvection:
      img[s.i] = img[s.i] * Word::generator(graph, s.j, inv ? -1 : 1);
      break;
    case Species::ElemPalindromic: {
      const Word t = Word::generator(graph, s.j, inv ? -1 : 1);
      img[s.i] = t * img[s.i] * t;
      break;
    }
    case Species::PartialConjugation: {
      const Word c = Word::generator(graph, s.i, inv ? -1 : 1);
      for (Vertex d : s.component) img[d] = c * img[d] * c.inverse();
      break;
    }
  }
  a.provenance_ = SymbolWord{s};
  return a;
}

Automorphism compose_word(const GraphPtr& graph, std::span<const GeneratorSymbol> word) {
  Automorphism out = Automorphism::identity(graph);
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = compose(make_generator(graph, *it), out);
  return out;
}

Automorphism iota(const GraphPtr& graph) {
  SymbolWord word;
  for (Vertex v = 0; v < graph->size(); ++v) word.push_back(GeneratorSymbol::inversion(v));
  return compose_word(graph, word);
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (&a.graph() != &b.graph() && !(a.graph() == b.graph())) {
    throw Error(ErrorCode::GraphMismatch, "cannot compose automorphisms of different graphs");
  }
  std::vector<Word> images;
  images.reserve(b.images_.size());
  for (const auto& w : b.images_) images.push_back(a.apply(w));
  std::optional<SymbolWord> prov;
  if (a.provenance_ && b.provenance_) {
    prov = *a.provenance_;
    prov->insert(prov->end(), b.provenance_->begin(), b.provenance_->end());
  }
  return Automorphism(a.graph_, std::move(images), std::move(prov));
}

Word apply(const Automorphism& a, const Word& w) { return a.apply(w); }

SymbolWord inverse_word(std::span<const GeneratorSymbol> word) {
  SymbolWord out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Automorphism invert(const Automorphism& a) {
  if (!a.provenance()) throw Error(ErrorCode::NoProvenance, "automorphism has no generator word");
  return compose_word(a.graph_ptr(), inverse_word(*a.provenance()));
}

Automorphism with_provenance(Automorphism a, SymbolWord word) {
  const Automorphism check = compose_word(a.graph_ptr(), word);
  if (!(check == a)) throw Error(ErrorCode::AssumptionFailed, "generator word does not reproduce the images");
  a.provenance_ = std::move(word);
  return a;
}

bool phi2_is_identity(const Automorphism& a) {
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    const auto e = exponent_vector(a.image(v));
    for (Vertex u = 0; u < e.size(); ++u) {
      if ((e[u] % 2 != 0) != (u == v)) return false;
    }
  }
  return true;
}

bool phi_is_identity(const Automorphism& a) {
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    const auto e = exponent_vector(a.image(v));
    for (Vertex u = 0; u < e.size(); ++u) {
      if (e[u] != (u == v ? 1 : 0)) return false;
    }
  }
  return true;
}

bool pure_by_middle_letter(const Automorphism& a) {
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    const Word& w = a.image(v);
    if (!is_palindrome(w)) return false;
    const auto center = exponent_vector(clique_palindromic_form(w).pieces.back());
    for (Vertex u = 0; u < center.size(); ++u) {
      if ((center[u] % 2 != 0) != (u == v)) return false;
    }
  }
  return true;
}

Predicates predicates(const Automorphism& a) {
  Predicates p;
  p.in_centralizer = true;
  p.palindromic = true;
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    const Word& w = a.image(v);
    if (!is_reverse_invariant(w)) {
      p.in_centralizer = false;
      p.palindromic = false;
    } else if (!is_palindrome(w)) {
      p.palindromic = false;
    }
    if (complement_components(a.graph(), support(w)).size() > 1) p.non_simple.insert(v);
  }
  p.pure = p.palindromic && pure_by_middle_letter(a);
  p.torelli = p.palindromic && phi_is_identity(a);
  p.simple = p.non_simple.empty();
  return p;
}

DiagramSplit split_diagram_pure(const Automorphism& a) {
  const Graph& g = a.graph();
  std::vector<Vertex> perm(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    const Word& w = a.image(v);
    if (!is_palindrome(w)) throw Error(ErrorCode::NotPalindromic, "image of " + g.name(v) + " is not a palindrome");
    const auto e = exponent_vector(w);
    std::vector<Vertex> odd;
    for (Vertex u = 0; u < e.size(); ++u) {
      if (e[u] % 2 != 0) odd.push_back(u);
    }
    if (odd.size() != 1) {
      throw Error(ErrorCode::NotGraphAutomorphism, "image of " + g.name(v) + " has no middle letter");
    }
    perm[v] = odd[0];
  }
  const auto delta_symbol = GeneratorSymbol::diagram(perm);
  try {
    validate_symbol(g, delta_symbol);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotGraphAutomorphism, e.what());
  }
  Automorphism delta = make_generator(a.graph_ptr(), delta_symbol);
  Automorphism gamma = compose(make_generator(a.graph_ptr(), delta_symbol.inverse()), a);
  return {std::move(delta), std::move(gamma), std::move(perm)};
}

bool chi1_defined(const Graph& g, Vertex i, Vertex j, Vertex k) {
  return i != j && j != k && i != k && i < g.size() && j < g.size() && k < g.size() && g.dominated_by(i, j) &&
         g.dominated_by(i, k);
}

bool chi2_defined(const Graph& g, Vertex i, Vertex j, Vertex k) {
  if (i == j || j == k || i == k || i >= g.size() || j >= g.size() || k >= g.size()) return false;
  const auto& cls = g.domination().class_of;
  return cls[i] == cls[j] && cls[j] == cls[k];
}

SymbolWord chi1_word(const Graph& g, Vertex i, Vertex j, Vertex k) {
  if (!chi1_defined(g, i, j, k)) {
    throw Error(ErrorCode::IllegalGenerator, "chi1 needs distinct " + g.name(i) + " dominated by both " +
                                                 g.name(j) + " and " + g.name(k));
  }
  using S = GeneratorSymbol;
  return {S::elem_palindromic(i, j), S::elem_palindromic(i, k), S::elem_palindromic(i, j, true),
          S::elem_palindromic(i, k, true)};
}

SymbolWord chi2_word(const Graph& g, Vertex i, Vertex j, Vertex k) {
  if (!chi2_defined(g, i, j, k)) {
    throw Error(ErrorCode::IllegalGenerator, "chi2 needs distinct " + g.name(i) + ", " + g.name(j) + ", " +
                                                 g.name(k) + " in one domination class");
  }
  using S = GeneratorSymbol;
  const SymbolWord base{S::elem_palindromic(j, k),       S::elem_palindromic(i, k, true), S::elem_palindromic(k, i),
                        S::elem_palindromic(k, j),       S::elem_palindromic(i, j),       S::elem_palindromic(j, i, true)};
  SymbolWord out = base;
  out.insert(out.end(), base.begin(), base.end());
  return out;
}

Automorphism chi1(const GraphPtr& graph, Vertex i, Vertex j, Vertex k) {
  return compose_word(graph, chi1_word(*graph, i, j, k));
}

Automorphism chi2(const GraphPtr& graph, Vertex i, Vertex j, Vertex k) {
  return compose_word(graph, chi2_word(*graph, i, j, k));
}

SymbolWord parse_symbols(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string term;
  SymbolWord out;
  while (in >> term) {
    const auto open = term.find('(');
    const auto close = term.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) parse_error(term, "expected name(args)");
    const std::string head = term.substr(0, open);
    const std::string args = term.substr(open + 1, close - open - 1);
    const std::string suffix = term.substr(close + 1);
    bool inverted = false;
    if (suffix == "^-1") {
      inverted = true;
    } else if (!suffix.empty() && suffix != "^1") {
      parse_error(term, "only ^-1 or ^1 may follow a generator");
    }

    GeneratorSymbol s;
    if (head == "P" || head == "tau") {
      const auto parts = split(args, ',');
      if (parts.size() != 2) parse_error(term, "expected two vertices");
      const Vertex i = g.vertex(parts[0]);
      const Vertex j = g.vertex(parts[1]);
      s = head == "P" ? GeneratorSymbol::elem_palindromic(i, j) : GeneratorSymbol::transvection(i, j);
    } else if (head == "inv") {
      s = GeneratorSymbol::inversion(g.vertex(trim(args)));
    } else if (head == "pc") {
      const auto semi = args.find(';');
      if (semi == std::string::npos) parse_error(term, "expected pc(v;d,...)");
      const Vertex i = g.vertex(trim(args.substr(0, semi)));
      VertexSet named;
      for (const auto& d : split(args.substr(semi + 1), ',')) named.insert(g.vertex(d));
      if (named.empty()) parse_error(term, "pc needs a component member");
      VertexSet component;
      for (VertexSet c : components_excluding_star(g, i)) {
        if (c.contains(named.front())) component = c;
      }
      if (component.empty() || !named.subset_of(component)) {
        throw Error(ErrorCode::IllegalGenerator,
                    "named vertices do not lie in one component of the graph minus st(" + g.name(i) + ")");
      }
      s = GeneratorSymbol::partial_conjugation(i, component);
    } else if (head == "diag") {
      std::vector<Vertex> perm(g.size());
      for (Vertex v = 0; v < g.size(); ++v) perm[v] = v;
      if (!trim(args).empty()) {
        for (const auto& pair : split(args, ',')) {
          const auto colon = pair.find(':');
          if (colon == std::string::npos) parse_error(term, "expected v:image pairs");
          perm[g.vertex(trim(pair.substr(0, colon)))] = g.vertex(trim(pair.substr(colon + 1)));
        }
      }
      s = GeneratorSymbol::diagram(std::move(perm));
    } else {
      parse_error(term, "unknown generator '" + head + "'");
    }
    validate_symbol(g, s);
    out.push_back(inverted ? s.inverse() : s);
  }
  return out;
}

std::string format_symbol(const Graph& g, const GeneratorSymbol& s) {
  std::string out;
  switch (s.species) {
    case Species::Diagram: {
      out = "diag(";
      bool first = true;
      for (Vertex v = 0; v < s.perm.size(); ++v) {
        if (s.perm[v] == v) continue;
        if (!first) out += ',';
        out += g.name(v) + ":" + g.name(s.perm[v]);
        first = false;
      }
      return out + ")";
    }
    case Species::Inversion:
      return "inv(" + g.name(s.i) + ")";
    case Species::Transvection:
      out = "tau(" + g.name(s.i) + "," + g.name(s.j) + ")";
      break;
    case Species::ElemPalindromic:
      out = "P(" + g.name(s.i) + "," + g.name(s.j) + ")";
      break;
    case Species::PartialConjugation: {
      out = "pc(" + g.name(s.i) + ";";
      bool first = true;
      for (Vertex d : s.component) {
        if (!first) out += ',';
        out += g.name(d);
        first = false;
      }
      out += ")";
      break;
    }
  }
  return s.inverted ? out + "^-1" : out;
}

std::string format_symbols(const Graph& g, std::span<const GeneratorSymbol> word) {
  std::string out;
  for (const auto& s : word) {
    if (!out.empty()) out += ' ';
    out += format_symbol(g, s);
  }
  return out;
}

}  // namespace raagpal
