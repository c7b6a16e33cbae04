// Command-line surface for the Gauss-diagram parity library.
//
// Subcommands: parse, invariants, pairing-matrix, derived, verify, biquandle,
// functor, corpus.  Exit codes: 0 success, 1 input error, 2 property
// violation.  All output is deterministic for a fixed seed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpar/biquandle.hpp"
#include "kpar/derived.hpp"
#include "kpar/functors.hpp"
#include "kpar/gauss.hpp"
#include "kpar/groups.hpp"
#include "kpar/links.hpp"
#include "kpar/moves.hpp"
#include "kpar/parity.hpp"
#include "kpar/surface.hpp"

using json = nlohmann::ordered_json;
using namespace kpar;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool looks_like_code(const std::string& s) {
  return s.find('O') != std::string::npos && s.find('U') != std::string::npos;
}

GaussDiagram resolve_diagram(const std::string& arg, const std::string& corpus_path) {
  if (looks_like_code(arg)) {
    try {
      return parse_gauss_code(arg);
    } catch (const ParseError& e) {
      throw InputError(std::string("bad Gauss code: ") + e.what());
    }
  }
  std::map<std::string, GaussDiagram> corpus;
  try {
    corpus = load_corpus(corpus_path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  auto it = corpus.find(arg);
  if (it == corpus.end()) throw InputError("unknown corpus entry: " + arg);
  return it->second;
}

std::string kind_of(const GaussDiagram& d) {
  if (d.long_knot) return "long knot";
  if (d.ncomps() > 1) return "link";
  return "knot";
}

std::string mod_render(ll m) {
  if (m == 0) return "Z";
  if (m == 1) return "-";
  return "Z_" + std::to_string(m);
}

json int_map_json(const std::map<int, ll>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

json matrix_json(const Mat& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

int cmd_parse(const std::string& arg, const std::string& corpus_path) {
  GaussDiagram d = resolve_diagram(arg, corpus_path);
  json out;
  out["code"] = emit_gauss_code(d);
  out["kind"] = kind_of(d);
  out["flat"] = d.flat;
  out["nchords"] = d.nchords();
  out["ncomps"] = d.ncomps();
  out["narcs"] = d.narcs();
  json signs = json::object();
  for (int v : d.chords()) signs[std::to_string(v)] = d.sign(v);
  out["signs"] = signs;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_invariants(const std::string& arg, const std::string& corpus_path) {
  GaussDiagram d = resolve_diagram(arg, corpus_path);
  json out;
  out["writhe"] = writhe(d);
  json signs = json::object();
  for (int v : d.chords()) signs[std::to_string(v)] = d.sign(v);
  out["signs"] = signs;
  std::map<int, ll> gp, ip;
  for (int v : d.chords()) {
    if (!d.is_self(v)) continue;  // links: self-crossings only
    gp[v] = d.long_knot ? pmod(gp_count(d, v), 2) : gp_count(d, v);
    ip[v] = d.long_knot ? long_ip(d, v) : ip_walk(d, v);
  }
  out["gp"] = int_map_json(gp);
  out["ip"] = int_map_json(ip);
  if (d.is_knot()) {
    out["almost_classical"] = is_almost_classical(d);
    ll sigma = 0;
    for (int v : d.chords()) sigma -= d.sign(v) * ip.at(v) * ip.at(v);
    out["sigma"] = sigma;
    out["lk"] = linking_invariant(d, rule_ip(), LinkingMode::Plain).first;
    out["lk_poly"] = ring_render(odd_index_polynomial(d, rule_ip()));
  } else if (d.ncomps() > 1) {
    out["almost_classical"] = nullptr;
    out["sigma"] = nullptr;
    ll lk = 0;
    for (int v : d.chords())
      if (!d.is_self(v)) lk += d.sign(v);
    out["lk"] = lk;  // mixed-crossing index: the classical linking number
    out["lk_poly"] = nullptr;
  } else {  // long knot: invariants of the closure
    out["almost_classical"] = nullptr;
    ll sigma = 0, lk = 0;
    for (int v : d.chords()) {
      sigma -= d.sign(v) * ip.at(v) * ip.at(v);
      lk += d.sign(v) * ip.at(v);
    }
    out["sigma"] = sigma;
    out["lk"] = lk;
    out["lk_poly"] = nullptr;
  }
  out["pairing_matrix"] = matrix_json(pairing_matrix(d));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_pairing_matrix(const std::string& arg, const std::string& corpus_path,
                       const std::string& format) {
  GaussDiagram d = resolve_diagram(arg, corpus_path);
  Mat m = pairing_matrix(d);
  if (format == "json") {
    std::cout << matrix_json(m).dump(2) << "\n";
  } else {  // csv
    for (const auto& row : m) {
      for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_derived(const std::string& arg, const std::string& corpus_path, int max_n,
                const std::string& format) {
  GaussDiagram d = resolve_diagram(arg, corpus_path);
  if (!d.is_knot()) throw InputError("derived series needs a closed knot diagram");
  DerivedReport rep = derived_series(d, max_n);
  std::string cls = class_name(rep.cls);
  if (format == "json") {
    json out;
    json steps = json::array();
    for (const DerivedStep& st : rep.steps) {
      json s;
      s["n"] = st.n;
      s["group"] = mod_render(st.mod);
      if (st.mod == 1) {
        s["p"] = nullptr;
        s["sigma"] = nullptr;
        s["lk"] = nullptr;
      } else {
        s["p"] = st.p;
        s["sigma"] = st.sigma;
        s["lk"] = ring_render(st.lk_poly);
      }
      steps.push_back(s);
    }
    out["steps"] = steps;
    out["class"] = cls;
    if (rep.cls == DerivedClass::Periodicity || rep.cls == DerivedClass::Growth)
      out["period"] = rep.period;
    if (rep.cls == DerivedClass::Growth) out["ratio"] = rep.ratio;
    std::cout << out.dump(2) << "\n";
  } else {
    auto cell = [](const DerivedStep& st, const std::string& s) {
      return st.mod == 1 ? std::string("-") : s;
    };
    std::cout << "n    ";
    for (const DerivedStep& st : rep.steps) std::cout << "\t" << st.n;
    std::cout << "\nA    ";
    for (const DerivedStep& st : rep.steps) std::cout << "\t" << mod_render(st.mod);
    std::cout << "\np    ";
    for (const DerivedStep& st : rep.steps) {
      std::ostringstream os;
      os << "(";
      for (size_t i = 0; i < st.p.size(); ++i) os << (i ? "," : "") << st.p[i];
      os << ")";
      std::cout << "\t" << cell(st, os.str());
    }
    std::cout << "\nsigma";
    for (const DerivedStep& st : rep.steps)
      std::cout << "\t" << cell(st, std::to_string(st.sigma));
    std::cout << "\nLK   ";
    for (const DerivedStep& st : rep.steps)
      std::cout << "\t" << cell(st, ring_render(st.lk_poly));
    std::cout << "\nclass\t" << cls;
    if (rep.cls == DerivedClass::Periodicity || rep.cls == DerivedClass::Growth)
      std::cout << " (period " << rep.period << ")";
    if (rep.cls == DerivedClass::Growth) std::cout << " (ratio " << rep.ratio << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& arg, const std::string& corpus_path, int moves, unsigned seed,
               const std::string& allowed_csv, const std::string& rule_name) {
  GaussDiagram d = resolve_diagram(arg, corpus_path);
  if (!d.is_knot()) throw InputError("verify needs a closed knot diagram");
  std::vector<std::string> allowed;
  {
    std::stringstream ss(allowed_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) {
        if (tok != "r1" && tok != "r2" && tok != "r3")
          throw InputError("unknown move class: " + tok);
        allowed.push_back(tok);
      }
  }
  std::vector<Rule> rules;
  if (rule_name == "gp") {
    rules.push_back(rule_gp());
  } else if (rule_name == "ip") {
    rules.push_back(rule_ip());
  } else if (rule_name == "all") {
    rules.push_back(rule_gp());
    rules.push_back(rule_ip());
  } else if (rule_name.rfind("derived", 0) == 0) {
    int level = std::stoi(rule_name.substr(7));
    rules.push_back(derived_rule(d, level));
  } else {
    throw InputError("unknown rule: " + rule_name);
  }
  bool bad = false;
  for (const Rule& r : rules) {
    AxiomReport rep = verify_parity_axioms(r, d, moves, seed, 12, allowed);
    std::cout << r.name << ": " << rep.steps << " steps, " << rep.violations.size()
              << " violations\n";
    for (const std::string& v : rep.violations) std::cout << "  " << v << "\n";
    if (!rep.ok()) bad = true;
  }
  return bad ? 2 : 0;
}

int cmd_biquandle(const std::string& path, const std::string& diagram_arg,
                  const std::string& corpus_path) {
  std::vector<ll> theta;
  Biquandle b;
  try {
    b = load_biquandle(path, &theta);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  json out;
  out["m"] = b.m;
  auto ax = biquandle_axiom_violations(b);
  out["axioms_ok"] = ax.empty();
  if (!ax.empty()) out["axiom_violations"] = ax;
  bool bad = !ax.empty();
  if (!theta.empty()) {
    ll mod = b.m;
    bool coc = theta_is_cocycle(b, theta, mod);
    out["theta"] = theta;
    out["theta_is_cocycle"] = coc;
    bad = bad || !coc;
    out["index_conditions_ok"] = index_condition_violations(b, theta, mod).empty();
    if (!diagram_arg.empty()) {
      GaussDiagram d = resolve_diagram(diagram_arg, corpus_path);
      if (!d.is_knot()) throw InputError("biquandle colourings need a closed knot diagram");
      auto cols = colourings(d, b);
      out["colourings"] = (ll)cols.size();
      bool all_match = true;
      json sigmas = json::array();
      for (const Coloring& col : cols) {
        auto cyc = theta_cycle(d, col, theta, mod);
        ll sg = sigma_theta(d, cyc, mod);
        sigmas.push_back(sg);
        if (sg != pmod(boltzmann_phi(d, col, b, theta, mod), mod)) all_match = false;
      }
      out["sigma_theta"] = sigmas;
      out["sigma_equals_boltzmann"] = all_match;
      bad = bad || !all_match;
    }
  }
  std::cout << out.dump(2) << "\n";
  return bad ? 2 : 0;
}

int cmd_functor(const std::string& arg, const std::string& corpus_path, int depth) {
  GaussDiagram d = resolve_diagram(arg, corpus_path);
  if (!d.is_knot()) throw InputError("functor view needs a closed knot diagram");
  Rule ip = rule_ip();
  ExtendedView view = extended_group_view(d, ip);
  json out;
  out["abar_mod"] = view.abar_mod;
  json delta = json::array();
  for (const QIValue& q : view.delta) delta.push_back(json::array({q.x, q.y}));
  out["delta"] = delta;
  json pi = json::object();
  for (const auto& [v, q] : view.pi) pi[std::to_string(v)] = json::array({q.x, q.y});
  out["pi"] = pi;
  out["ok"] = view.ok();
  if (!view.ok()) out["violations"] = view.violations;
  if (depth > 0) {
    std::set<ll> mon = monodromy_search(ip, d, depth);
    out["monodromy_shifts"] = std::vector<ll>(mon.begin(), mon.end());
  }
  std::cout << out.dump(2) << "\n";
  return view.ok() ? 0 : 2;
}

int cmd_corpus(const std::string& corpus_path) {
  std::vector<std::string> errors;
  std::map<std::string, GaussDiagram> corpus;
  try {
    corpus = load_corpus(corpus_path, &errors);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  for (const auto& [name, d] : corpus) std::cout << name << "\t" << emit_gauss_code(d) << "\n";
  for (const std::string& e : errors) std::cerr << "skipped: " << e << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity invariants of virtual knots and links from Gauss diagrams"};
  app.require_subcommand(1);
  std::string corpus_path = "data/corpus.tsv";
  app.add_option("--corpus", corpus_path, "Corpus file (name<TAB>code per line)");

  std::string arg, format = "text", allowed = "", rule = "all", biq_path, biq_diagram;
  int max_n = 8, moves = 200, depth = 0;
  unsigned seed = 1;

  auto* parse_cmd = app.add_subcommand("parse", "Parse a Gauss code or corpus entry");
  parse_cmd->add_option("diagram", arg, "Gauss code or corpus name")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Basic invariants as JSON");
  inv_cmd->add_option("diagram", arg)->required();

  auto* pm_cmd = app.add_subcommand("pairing-matrix", "Half-cycle pairing matrix");
  pm_cmd->add_option("diagram", arg)->required();
  pm_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* der_cmd = app.add_subcommand("derived", "Derived-parity series table");
  der_cmd->add_option("diagram", arg)->required();
  der_cmd->add_option("--max-n", max_n, "Levels to compute");
  der_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ver_cmd = app.add_subcommand("verify", "Random-walk axiom verification");
  ver_cmd->add_option("diagram", arg)->required();
  ver_cmd->add_option("--moves", moves, "Walk length");
  ver_cmd->add_option("--seed", seed, "RNG seed");
  ver_cmd->add_option("--allowed", allowed, "Comma list of move classes (r1,r2,r3)");
  ver_cmd->add_option("--rule", rule, "gp | ip | all | derived<N>");

  auto* biq_cmd = app.add_subcommand("biquandle", "Biquandle file checks and colour counts");
  biq_cmd->add_option("file", biq_path, "Biquandle table file")->required();
  biq_cmd->add_option("--diagram", biq_diagram, "Diagram to colour");

  auto* fun_cmd = app.add_subcommand("functor", "Extended-diagram functor view");
  fun_cmd->add_option("diagram", arg)->required();
  fun_cmd->add_option("--monodromy-depth", depth, "BFS depth for remainder monodromy");

  auto* cor_cmd = app.add_subcommand("corpus", "List the corpus");
  (void)cor_cmd;

  std::string fmt_default_csv = "csv";
  pm_cmd->parse_complete_callback([&] {
    if (!pm_cmd->count("--format")) format = fmt_default_csv;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(arg, corpus_path);
    if (inv_cmd->parsed()) return cmd_invariants(arg, corpus_path);
    if (pm_cmd->parsed()) return cmd_pairing_matrix(arg, corpus_path, format);
    if (der_cmd->parsed()) return cmd_derived(arg, corpus_path, max_n, format);
    if (ver_cmd->parsed()) return cmd_verify(arg, corpus_path, moves, seed, allowed, rule);
    if (biq_cmd->parsed()) return cmd_biquandle(biq_path, biq_diagram, corpus_path);
    if (fun_cmd->parsed()) return cmd_functor(arg, corpus_path, depth);
    if (cor_cmd->parsed()) return cmd_corpus(corpus_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
