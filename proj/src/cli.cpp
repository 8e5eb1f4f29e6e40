#include "lincomb/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/graph_io.hpp"
#include "lincomb/spectrum.hpp"
#include "lincomb/suites.hpp"

namespace lincomb {

namespace {

using ojson = nlohmann::ordered_json;

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Text:
      return "text";
  }
  return "json";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Artifacts land in c.out_dir when set.
class Artifacts {
 public:
  explicit Artifacts(const RunConfig& c) : dir_(c.out_dir) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }
  void write(const std::string& name, const std::string& content) const {
    if (dir_.empty()) return;
    std::ofstream f(std::filesystem::path(dir_) / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write artifact " + name);
    f << content;
  }

 private:
  std::string dir_;
};

Graph input_graph(const RunConfig& c) {
  if (c.in_path.empty()) throw std::invalid_argument(c.command + " needs --in <graph file>");
  return read_graph_file(c.in_path);
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, const Artifacts& art) {
  const Graph g = input_graph(c);
  const Spectrum s = eigenvalues(g);
  std::ostringstream body;
  if (c.output == OutputFormat::Text) {
    body << format_spectrum_text(s.values()) << '\n';
  } else if (c.output == OutputFormat::Csv) {
    body << "index,mu\n";
    for (std::size_t i = 1; i <= s.size(); ++i) body << i << ',' << ojson(s.mu(i)).dump() << '\n';
  } else {
    ojson j;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["graph6"] = to_graph6(g);
    j["values"] = s.values();
    j["tol"] = s.tol();
    j["sound"] = spectrum_sound(s, g.edge_count());
    body << j.dump() << '\n';
  }
  out << body.str();
  art.write("spectrum." + format_name(c.output), body.str());
  return kExitPass;
}

int cmd_construct(const RunConfig& c, std::ostream& out, const Artifacts& art) {
  const GernertParams p(c.k, c.n == 0 ? 21 * c.k : c.n);
  const GernertCertificate cert = gernert_certificate(p, c.solver_budget);
  std::ostringstream body;
  if (c.output == OutputFormat::Text) {
    char line[256];
    std::snprintf(line, sizeof line, "k=%zu n=%zu mu1+mu2=%.10f predicted=%.10f exceeds %zu: %s\n", p.k, p.n,
                  cert.value, cert.predicted, p.core(), cert.value > static_cast<double>(p.core()) ? "yes" : "no");
    body << line << "witness " << cert.witness_graph6 << '\n' << (cert.report.passed ? "PASS" : "FAIL") << '\n';
  } else {
    body << to_json(cert).dump() << '\n';
  }
  out << body.str();
  art.write("certificate.json", to_json(cert).dump(2) + "\n");
  return cert.report.passed && cert.sound ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const RunConfig& c, std::ostream& out, const Artifacts& art) {
  std::vector<Suite> suites;
  if (c.suite == "all") {
    suites = all_suites();
  } else {
    suites.push_back(parse_suite(c.suite));
  }
  SuiteOptions opts;
  opts.seed = c.seed;
  opts.trials = c.trials;
  opts.max_order = c.max_order;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t warnings = 0;
  std::ostringstream lines;
  for (Suite s : suites) {
    for (const auto& r : run_suite(s, opts)) {
      ++total;
      const bool ok = record_passed(r);
      passed += ok ? 1 : 0;
      warnings += record_warning(r) ? 1 : 0;
      if (c.output == OutputFormat::Text) {
        const ojson j = record_json(r);
        lines << (ok ? "pass " : "FAIL ") << suite_name(s) << ' ' << j.value("subject", std::string()) << '\n';
      } else {
        ojson j;
        j["suite"] = suite_name(s);
        j["passed"] = ok;
        j["report"] = record_json(r);
        lines << j.dump() << '\n';
      }
    }
  }
  std::ostringstream summary;
  summary << (passed == total ? "PASS " : "FAIL ") << passed << '/' << total;
  if (warnings > 0) summary << " (" << warnings << " within numerical slack)";
  out << lines.str() << summary.str() << '\n';
  art.write("verify.jsonl", lines.str());
  art.write("summary.txt", summary.str() + "\n");
  return passed == total ? kExitPass : kExitCheckFailed;
}

void emit_records(const RunConfig& c, const std::vector<ExtremalRecord>& records, std::ostream& out,
                  const Artifacts& art, const std::string& stem) {
  std::ostringstream csv;
  write_phi_csv(csv, records);
  std::ostringstream json;
  for (const auto& r : records) json << to_json(r).dump() << '\n';
  if (c.output == OutputFormat::Csv) {
    out << csv.str();
  } else if (c.output == OutputFormat::Text) {
    for (const auto& r : records) {
      char line[160];
      std::snprintf(line, sizeof line, "n=%zu value=%.10f phi=%.10f %s ", r.n, r.value, r.phi(),
                    method_name(r.method).c_str());
      out << line << to_graph6(r.witness) << '\n';
    }
  } else {
    out << json.str();
  }
  art.write(stem + ".csv", csv.str());
  art.write(stem + ".jsonl", json.str());
}

int cmd_search(const RunConfig& c, std::ostream& out, const Artifacts& art) {
  const LinearForm f = resolve_form(c);
  const FamilyPredicate p = FamilyPredicate::parse(c.family);
  const std::size_t n = c.n == 0 ? c.n_max : c.n;
  ExtremalRecord rec;
  const bool use_exhaustive = c.method == "exhaustive" || (c.method == "auto" && n <= c.exhaustive_cap);
  if (c.method != "auto" && c.method != "exhaustive" && c.method != "stochastic") {
    throw std::invalid_argument("unknown method '" + c.method + "'");
  }
  if (use_exhaustive) {
    rec = exhaustive(n, f, p, c.exhaustive_cap);
  } else {
    StochasticOptions o;
    o.seed = c.seed;
    o.restarts = c.restarts;
    o.steps = c.steps;
    if (c.seed_gernert && n >= 21) {
      Graph g = gernert_graph(GernertParams::for_order(n));
      if (member(p, g)) o.initial = std::move(g);
    }
    rec = stochastic(n, f, p, o);
  }
  validate_record(rec);
  emit_records(c, {rec}, out, art, "search");
  return kExitPass;
}

int cmd_phi(const RunConfig& c, std::ostream& out, const Artifacts& art) {
  if (c.n_min < 1 || c.n_max < c.n_min) throw std::invalid_argument("phi needs 1 <= --n-min <= --n-max");
  const LinearForm f = resolve_form(c);
  const FamilyPredicate p = FamilyPredicate::parse(c.family);
  std::vector<std::size_t> orders;
  for (std::size_t n = std::max(c.n_min, f.k()); n <= c.n_max; ++n) orders.push_back(n);
  if (orders.empty()) throw OrderTooSmall("no order in range reaches k = " + std::to_string(f.k()));
  PhiPolicy policy;
  policy.exhaustive_cap = c.exhaustive_cap;
  policy.seed = c.seed;
  policy.restarts = c.restarts;
  policy.steps = c.steps;
  policy.seed_with_gernert = c.seed_gernert;
  emit_records(c, phi_table(f, p, orders, policy), out, art, "phi");
  return kExitPass;
}

int cmd_amplify(const RunConfig& c, std::ostream& out, const Artifacts& art) {
  const Graph g = input_graph(c);
  const LinearForm f = resolve_form(c);
  const FamilyPredicate p = FamilyPredicate::parse(c.family);
  const std::size_t big_n = c.big_n == 0 ? 2 * g.order() : c.big_n;
  const double c_ref = c.c_ref_set ? c.c_ref : evaluate(f, g) / static_cast<double>(g.order());
  const AmplificationReport r = amplify(g, f, p, big_n, c_ref, c.eps);
  const std::string body = to_json(r).dump();
  if (c.output == OutputFormat::Text) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.subject << '\n';
  } else {
    out << body << '\n';
  }
  art.write("amplify.json", body + "\n");
  return r.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace

std::string format_spectrum_text(const std::vector<double>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    char buf[32];
    double v = values[i];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    if (std::string(buf) == "-0") std::snprintf(buf, sizeof buf, "0");
    if (i) s += ", ";
    s += buf;
  }
  return s + "]";
}

LinearForm resolve_form(const RunConfig& c) {
  const bool inline_given = !c.alpha.empty() || !c.beta.empty() || !c.gamma.empty() || !c.delta.empty();
  const int sources = (c.form_file.empty() ? 0 : 1) + (inline_given ? 1 : 0) + (c.preset.empty() ? 0 : 1);
  if (sources > 1) throw std::invalid_argument("give only one of --preset, --form-file, or inline coefficients");
  if (!c.form_file.empty()) return parse_form(read_text_file(c.form_file));
  if (inline_given) return LinearForm::from_parts(c.alpha, c.beta, c.gamma, c.delta);
  const std::string name = c.preset.empty() ? "mu1+mu2" : c.preset;
  if (auto f = preset_form(name, c.preset_i)) return *f;
  throw std::invalid_argument("unknown preset '" + name + "'");
}

ojson run_header(const RunConfig& c) {
  ojson h;
  h["tool"] = "lincomb";
  h["version"] = LINCOMB_VERSION;
  h["command"] = c.command;
  h["seed"] = c.seed;
  ojson cfg;
  cfg["family"] = c.family;
  cfg["output"] = format_name(c.output);
  if (!c.in_path.empty()) cfg["in"] = c.in_path;
  if (!c.out_dir.empty()) cfg["out"] = c.out_dir;
  cfg["exhaustive_cap"] = c.exhaustive_cap;
  cfg["solver_budget"] = c.solver_budget;
  if (c.command == "search" || c.command == "phi" || c.command == "amplify") {
    cfg["form"] = ojson::parse(form_to_json(resolve_form(c)));
  }
  if (c.command == "construct") {
    cfg["k"] = c.k;
    cfg["n"] = c.n == 0 ? 21 * c.k : c.n;
  } else if (c.command == "verify") {
    cfg["suite"] = c.suite;
    cfg["trials"] = c.trials;
    cfg["max_order"] = c.max_order;
  } else if (c.command == "search" || c.command == "phi") {
    cfg["method"] = c.method;
    if (c.command == "search") {
      cfg["n"] = c.n == 0 ? c.n_max : c.n;
    } else {
      cfg["n_min"] = c.n_min;
      cfg["n_max"] = c.n_max;
    }
    cfg["restarts"] = c.restarts;
    cfg["steps"] = c.steps;
    cfg["seed_gernert"] = c.seed_gernert;
  } else if (c.command == "amplify") {
    cfg["N"] = c.big_n;
    if (c.c_ref_set) cfg["c_ref"] = c.c_ref;
    cfg["eps"] = c.eps;
  }
  h["config"] = cfg;
  ojson tol;
  tol["off_diagonal_per_vertex"] = kOffTolerancePerVertex;
  tol["trace_per_vertex"] = kTraceTolerancePerVertex;
  tol["energy_per_vertex_sq"] = kEnergyTolerancePerVertexSq;
  tol["min_inequality_slack"] = kMinInequalitySlack;
  tol["blowup_match_per_unit"] = kBlowupMatchPerUnit;
  tol["ranking_grid"] = kRankingGrid;
  tol["improvement_threshold"] = kImprovementThreshold;
  tol["witness_slack"] = kMinWitnessSlack;
  h["tolerances"] = tol;
  return h;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.exhaustive_cap == 0 || c.solver_budget == 0) throw std::invalid_argument("caps must be positive");
    const ojson header = run_header(c);
    err << header.dump() << '\n';
    const Artifacts art(c);
    art.write("header.json", header.dump(2) + "\n");
    if (c.command == "spectrum") return cmd_spectrum(c, out, art);
    if (c.command == "construct") return cmd_construct(c, out, art);
    if (c.command == "verify") return cmd_verify(c, out, art);
    if (c.command == "search") return cmd_search(c, out, art);
    if (c.command == "phi") return cmd_phi(c, out, art);
    if (c.command == "amplify") return cmd_amplify(c, out, art);
    throw std::invalid_argument("unknown command '" + c.command + "'");
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Linear combinations of adjacency eigenvalues: spectra, certificates, checks, searches"};
  app.set_version_flag("--version", std::string(LINCOMB_VERSION));
  app.require_subcommand(1);

  std::string output = "json";
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Root seed for every random stream")->capture_default_str();
    sub->add_option("--output", output, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--out", c.out_dir, "Directory for artifacts");
  };
  auto form_opts = [&](CLI::App* sub) {
    sub->add_option("--preset", c.preset, "mu1, mu1+mun, mu1-mun, mu1+mu2, mu1+cmu1, mui+cmui");
    sub->add_option("--i", c.preset_i, "Index for the mui+cmui preset")->capture_default_str();
    sub->add_option("--alpha", c.alpha, "Top coefficients of G")->delimiter(',');
    sub->add_option("--beta", c.beta, "Bottom coefficients of G")->delimiter(',');
    sub->add_option("--gamma", c.gamma, "Top coefficients of the complement")->delimiter(',');
    sub->add_option("--delta", c.delta, "Bottom coefficients of the complement")->delimiter(',');
    sub->add_option("--form-file", c.form_file, "Coefficient file (JSON or key = values lines)");
    sub->add_option("--family", c.family, "all, kr-free:r or r-partite:r")->capture_default_str();
  };
  auto search_opts = [&](CLI::App* sub) {
    sub->add_option("--method", c.method, "auto, exhaustive or stochastic")->capture_default_str();
    sub->add_option("--exhaustive-cap", c.exhaustive_cap, "Largest order searched exhaustively")
        ->capture_default_str();
    sub->add_option("--restarts", c.restarts, "Hill-climb restarts")->capture_default_str();
    sub->add_option("--steps", c.steps, "Accepted flips per restart")->capture_default_str();
    sub->add_flag("--seed-gernert", c.seed_gernert, "Start one restart from the Gernert graph (n >= 21)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum of a graph file");
  spectrum->add_option("--in", c.in_path, "Graph file (.g6 or edge list)")->required();
  common(spectrum);

  auto* construct = app.add_subcommand("construct", "Certificate for the K_{5k} v 2K_{8k} family");
  construct->add_option("--k", c.k, "Family parameter")->capture_default_str();
  construct->add_option("--n", c.n, "Order (default 21k)");
  construct->add_option("--solver-budget", c.solver_budget, "Largest order solved")->capture_default_str();
  common(construct);

  auto* verify = app.add_subcommand("verify", "Run seeded check suites");
  verify->add_option("--suite", c.suite, "Suite name or all")->capture_default_str();
  verify->add_option("--trials", c.trials, "Instances per suite (0: suite default)")->capture_default_str();
  verify->add_option("--max-order", c.max_order, "Largest random order (0: suite default)")->capture_default_str();
  common(verify);

  auto* search = app.add_subcommand("search", "Maximize an objective at one order");
  search->add_option("--n", c.n, "Order")->required();
  form_opts(search);
  search_opts(search);
  common(search);

  auto* phi = app.add_subcommand("phi", "Table of max F(G)/n over a range of orders");
  phi->add_option("--n-min", c.n_min, "Smallest order")->capture_default_str();
  phi->add_option("--n-max", c.n_max, "Largest order")->capture_default_str();
  form_opts(phi);
  search_opts(phi);
  common(phi);

  auto* amp = app.add_subcommand("amplify", "One instance of the blow-up amplification step");
  amp->add_option("--in", c.in_path, "Graph file (.g6 or edge list)")->required();
  amp->add_option("--N", c.big_n, "Target order (default 2n)");
  amp->add_option("--c-ref", c.c_ref, "Reference limit (default F(G)/n)");
  amp->add_option("--eps", c.eps, "Tolerance around c_ref")->capture_default_str();
  form_opts(amp);
  common(amp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  c.output = output == "csv" ? OutputFormat::Csv : output == "text" ? OutputFormat::Text : OutputFormat::Json;
  c.c_ref_set = amp->count("--c-ref") > 0;
  return run(c, out, err);
}

}  // namespace lincomb
