#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raagpal/error.hpp"
#include "raagpal/factorization.hpp"
#include "raagpal/io.hpp"
#include "raagpal/matrix.hpp"
#include "raagpal/suites.hpp"
#include "raagpal/word.hpp"

namespace {

using nlohmann::json;
using namespace raagpal;

constexpr const char* kSchema = "raagpal/1";

enum Exit { kOk = 0, kViolated = 1, kInvalid = 2 };

struct Inputs {
  std::string graph_path;
  std::string word;
  std::vector<std::string> auts;
  std::size_t n = 4;
  std::uint64_t seed = 0;
  std::size_t count = 200;
  std::optional<std::size_t> budget_depth;
  std::vector<std::string> fixed;
  std::string out;
  bool json_output = false;
};

/// What a command hands back: machine-readable result, a human rendering, and
/// whether the checked property held.
struct Outcome {
  json result = json::object();
  std::string text;
  bool holds = true;
  std::vector<std::string> witnesses;
};

GraphPtr require_graph(const Inputs& in) {
  if (in.graph_path.empty()) throw Error(ErrorCode::ParseError, "--graph is required");
  return load_graph(in.graph_path);
}

Word require_word(const Inputs& in, const GraphPtr& g) {
  if (in.word.empty()) throw Error(ErrorCode::ParseError, "--word is required");
  return parse_word(g, in.word);
}

/// --aut accepts inline JSON, a bare generator expression, or a file path.
Automorphism load_aut(const GraphPtr& g, const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good() && arg.find_first_of("({") == std::string::npos) return parse_automorphism(g, read_text_file(arg));
  return parse_automorphism(g, arg);
}

Automorphism require_aut(const Inputs& in, const GraphPtr& g) {
  if (in.auts.empty()) throw Error(ErrorCode::ParseError, "--aut is required");
  return load_aut(g, in.auts.front());
}

std::string images_text(const Automorphism& a) {
  std::ostringstream out;
  for (Vertex v = 0; v < a.graph().size(); ++v) {
    out << a.graph().name(v) << " -> " << format_word(a.image(v)) << '\n';
  }
  return out.str();
}

std::string set_text(const Graph& g, VertexSet s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + g.name(v);
  return out + "}";
}

std::string matrix_text(const Graph& g, const std::vector<std::vector<long long>>& rows) {
  std::ostringstream out;
  out << "order:";
  for (Vertex v = 0; v < g.size(); ++v) out << ' ' << g.name(v);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c];
    out << '\n';
  }
  return out.str();
}

Outcome graph_info(const Inputs& in) {
  const GraphPtr g = require_graph(in);
  const DominationData& d = domination_data(*g);
  Outcome o;
  json order = json::array();
  for (Vertex v = 0; v < g->size(); ++v) order.push_back(g->name(v));
  json classes = json::array();
  std::ostringstream text;
  text << "vertices: " << g->size() << "\nedges: " << g->edges().size() << "\nclasses:";
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    const char* kind = d.class_kind[c] == ClassKind::Free ? "free" : "abelian";
    json members = json::array();
    for (Vertex v : d.classes[c]) members.push_back(g->name(v));
    classes.push_back({{"vertices", members}, {"kind", kind}});
    text << ' ' << set_text(*g, d.classes[c]) << ':' << kind;
  }
  const bool adj = has_adjacent_domination(*g);
  json symmetries = nullptr;
  try {
    symmetries = graph_automorphisms(*g).size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SizeLimit) throw;
  }
  text << "\nadjacent domination: " << (adj ? "yes" : "no")
       << "\ngraph automorphisms: " << (symmetries.is_null() ? "not enumerated" : symmetries.dump()) << '\n';
  o.result = {{"graph", json::parse(graph_to_json(*g))},
              {"order", order},
              {"classes", classes},
              {"has_adjacent_domination", adj},
              {"graph_automorphisms", symmetries}};
  o.text = text.str();
  return o;
}

Outcome word_command(const std::string& op, const Inputs& in) {
  const GraphPtr g = require_graph(in);
  const Word w = require_word(in, g);
  Outcome o;
  if (op == "reduce") {
    o.text = format_word(w);
    o.result = {{"word", o.text}, {"length", w.length()}};
  } else if (op == "reverse") {
    o.text = format_word(reverse(w));
    o.result = {{"word", o.text}};
  } else if (op == "palindrome") {
    const bool p = is_palindrome(w);
    o.text = p ? "true" : "false";
    o.result = {{"word", format_word(w)}, {"reverse_invariant", is_reverse_invariant(w)}, {"palindrome", p}};
  } else if (op == "basicform") {
    const BasicForm b = basic_form(w);
    json factors = json::array();
    std::string text = "conjugator: " + format_word(b.conjugator) + "\nfactors:";
    for (const auto& f : b.factors) {
      factors.push_back({{"root", format_word(f.root)}, {"exponent", f.exponent}});
      text += " (" + format_word(f.root) + ")^" + std::to_string(f.exponent);
    }
    o.text = text;
    o.result = {{"conjugator", format_word(b.conjugator)}, {"factors", factors}};
  } else if (op == "rank") {
    const CentralizerData c = rank_and_centralizer(w);
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(format_word(f));
    json link = json::array();
    for (Vertex v : c.link) link.push_back(g->name(v));
    o.text = std::to_string(c.rank);
    o.result = {{"rank", c.rank}, {"factors", factors}, {"link", link}, {"conjugator", format_word(c.conjugator)}};
  } else if (op == "cpnf") {
    const CliquePalindromicForm f = clique_palindromic_form(w);
    json pieces = json::array();
    for (const auto& p : f.pieces) pieces.push_back(format_word(p));
    o.text = pieces.dump();
    o.result = {{"pieces", pieces}};
  }
  return o;
}

json predicates_json(const Graph& g, const Predicates& p) {
  json non_simple = json::array();
  for (Vertex v : p.non_simple) non_simple.push_back(g.name(v));
  return {{"in_centralizer", p.in_centralizer}, {"palindromic", p.palindromic}, {"pure", p.pure},
          {"torelli", p.torelli},               {"simple", p.simple},           {"non_simple", non_simple}};
}

FactorizationResult factor_dispatch(const Automorphism& a, const Inputs& in) {
  FactorOptions opts;
  if (in.budget_depth) opts.torelli_depth = *in.budget_depth;
  if (!in.fixed.empty()) {
    std::vector<Vertex> fixed;
    for (const auto& name : in.fixed) fixed.push_back(a.graph().vertex(name));
    return factor_with_fixed(a, fixed, opts);
  }
  if (predicates(a).palindromic) return factor_palindromic(a, opts);
  return factor_centralizer_iota(a, opts);
}

Outcome aut_command(const std::string& op, const Inputs& in) {
  const GraphPtr g = require_graph(in);
  Outcome o;
  if (op == "compose") {
    if (in.auts.empty()) throw Error(ErrorCode::ParseError, "--aut is required");
    Automorphism acc = Automorphism::identity(g);
    for (const auto& arg : in.auts) acc = compose(acc, load_aut(g, arg));
    o.result = json::parse(automorphism_to_json(acc));
    o.text = images_text(acc);
    return o;
  }
  const Automorphism a = require_aut(in, g);
  if (op == "new") {
    o.result = json::parse(automorphism_to_json(a));
    o.text = images_text(a);
  } else if (op == "apply") {
    const Word w = require_word(in, g);
    o.text = format_word(apply(a, w));
    o.result = {{"word", format_word(w)}, {"image", o.text}};
  } else if (op == "check") {
    const Predicates p = predicates(a);
    o.result = predicates_json(*g, p);
    std::ostringstream text;
    for (const auto& [key, value] : o.result.items()) text << key << ": " << value.dump() << '\n';
    o.text = text.str();
  } else if (op == "phi") {
    const IntMatrix m = phi(a);
    o.result = json::parse(matrix_to_json(*g, m));
    o.text = matrix_text(*g, m.rows());
  } else if (op == "phi2") {
    const Mod2Matrix m = phi2(a);
    o.result = json::parse(mod2_matrix_to_json(*g, m));
    o.text = matrix_text(*g, o.result.at("rows").get<std::vector<std::vector<long long>>>());
  } else if (op == "split") {
    const DiagramSplit s = split_diagram_pure(a);
    json perm = json::object();
    for (Vertex v = 0; v < g->size(); ++v) perm[g->name(v)] = g->name(s.perm[v]);
    o.result = {{"delta", perm}, {"gamma", json::parse(automorphism_to_json(s.gamma))}};
    o.text = "delta: " + perm.dump() + "\ngamma:\n" + images_text(s.gamma);
  } else if (op == "factor") {
    const FactorizationResult r = factor_dispatch(a, in);
    o.result = json::parse(factorization_to_json(*g, r));
    o.text = format_symbols(*g, r.word);
    if (r.residual) {
      o.holds = false;
      o.witnesses.push_back("residual:\n" + images_text(*r.residual));
      o.text += "\nresidual:\n" + images_text(*r.residual);
    }
  }
  return o;
}

Outcome verify_command(const std::string& op, const Inputs& in) {
  SuiteReport report;
  if (op == "relators") {
    report = verify_relators(in.n);
  } else {
    const GraphPtr g = require_graph(in);
    if (op == "blocks") report = verify_blocks(g, in.count, in.seed);
    if (op == "exactseq") report = verify_exact_sequence(g, in.count, in.seed);
    if (op == "adjdom") report = verify_adjacent_domination(g);
    if (op == "splittings") report = verify_splittings(g, in.count, in.seed);
    if (op == "torelli") {
      FactorOptions opts;
      if (in.budget_depth) opts.torelli_depth = *in.budget_depth;
      report = verify_torelli(g, opts);
    }
  }
  Outcome o;
  o.holds = report.passed;
  o.witnesses = report.witnesses;
  o.result = {{"suite", report.name},
              {"passed", report.passed},
              {"checked", report.checked},
              {"details", json::parse(report.details_json)}};
  o.text = report.name + ": " + (report.passed ? "PASS" : "FAIL") + " (" + std::to_string(report.checked) + " checks)";
  for (const auto& w : report.witnesses) o.text += "\n  " + w;
  return o;
}

json echo_inputs(const std::string& command, const Inputs& in) {
  json args = json::object();
  if (!in.graph_path.empty()) args["graph"] = in.graph_path;
  if (!in.word.empty()) args["word"] = in.word;
  if (!in.auts.empty()) args["aut"] = in.auts;
  if (command == "verify relators") args["n"] = in.n;
  if (command.rfind("verify", 0) == 0) args["count"] = in.count;
  if (in.budget_depth) args["budget_depth"] = *in.budget_depth;
  if (!in.fixed.empty()) args["fixed"] = in.fixed;
  return args;
}

int run(const std::string& command, const std::function<Outcome()>& body, const Inputs& in) {
  json report{{"schema", kSchema}, {"command", command}, {"args", echo_inputs(command, in)}, {"seed", in.seed}};
  const auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string text;
  try {
    Outcome o = body();
    report["result"] = std::move(o.result);
    report["holds"] = o.holds;
    report["witnesses"] = o.witnesses;
    code = o.holds ? kOk : kViolated;
    text = o.text;
  } catch (const Error& e) {
    report["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    code = kInvalid;
    text = std::string("error: ") + e.what();
  }
  report["timing_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const bool verify = command.rfind("verify", 0) == 0;
  if (in.json_output || verify) {
    std::cout << report.dump(2) << '\n';
  } else {
    (code == kInvalid ? std::cerr : std::cout) << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }
  if (!in.out.empty()) {
    std::ofstream file(in.out);
    if (!file) {
      std::cerr << "error: cannot write " << in.out << '\n';
      return kInvalid;
    }
    file << report.dump(2) << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Palindromic automorphisms of right-angled Artin groups"};
  app.require_subcommand(1);
  Inputs in;
  app.add_option("--graph", in.graph_path, "Graph JSON file");
  app.add_option("--word", in.word, "Word, e.g. \"b a b^-1\"");
  app.add_option("--aut", in.auts, "Automorphism: JSON, generator expression or file (repeatable)");
  app.add_option("--n", in.n, "Matrix dimension for verify relators");
  app.add_option("--seed", in.seed, "Seed for every random choice");
  app.add_option("--count", in.count, "Number of samples for sampled suites");
  app.add_option("--budget-depth", in.budget_depth, "Torelli search depth");
  app.add_option("--fixed", in.fixed, "Vertices that factorization symbols must fix");
  app.add_option("--out", in.out, "Write the JSON report to this file");
  app.add_flag("--json", in.json_output, "Print the JSON report instead of text");

  std::string command;
  std::function<Outcome()> body;
  const auto group = [&](const std::string& name, const std::string& description,
                         const std::vector<std::string>& ops,
                         const std::function<Outcome(const std::string&)>& handler) {
    CLI::App* parent = app.add_subcommand(name, description);
    parent->require_subcommand(1);
    parent->fallthrough();
    for (const auto& op : ops) {
      CLI::App* leaf = parent->add_subcommand(op);
      leaf->fallthrough();
      leaf->callback([&command, &body, handler, name, op] {
        command = name + " " + op;
        body = [handler, op] { return handler(op); };
      });
    }
  };
  group("graph", "Domination classes and symmetries of a graph", {"info"}, [&](const std::string&) { return graph_info(in); });
  group("word", "Word problem, palindromes and normal forms", {"reduce", "reverse", "palindrome", "basicform", "rank", "cpnf"},
        [&](const std::string& op) { return word_command(op, in); });
  group("aut", "Build, inspect and factor automorphisms", {"new", "apply", "compose", "check", "phi", "phi2", "split", "factor"},
        [&](const std::string& op) { return aut_command(op, in); });
  group("verify", "Seeded verification suites with JSON reports", {"relators", "blocks", "exactseq", "adjdom", "splittings", "torelli"},
        [&](const std::string& op) { return verify_command(op, in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }
  return run(command, body, in);
}
