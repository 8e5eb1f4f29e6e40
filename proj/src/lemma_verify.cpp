#include "lincomb/lemma_verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lincomb/graph_io.hpp"
#include "lincomb/spectrum.hpp"

namespace lincomb {

namespace {

class ReportBuilder {
 public:
  ReportBuilder(std::string name, std::string subject, double numerical_slack) {
    report_.name = std::move(name);
    report_.subject = std::move(subject);
    report_.numerical_slack = numerical_slack;
  }

  // lhs <= rhs
  void le(std::string label, std::size_t index, double lhs, double rhs, bool strict) {
    report_.details.push_back({std::move(label), index, lhs, rhs, rhs - lhs, strict});
  }
  // lhs >= rhs
  void ge(std::string label, std::size_t index, double lhs, double rhs, bool strict) {
    le(std::move(label), index, rhs, lhs, strict);
  }

  CheckReport finish() && {
    double margin = std::numeric_limits<double>::infinity();
    bool warning = false;
    for (const auto& d : report_.details) {
      margin = std::min(margin, d.slack);
      if (d.strict && std::fabs(d.slack) <= report_.numerical_slack) warning = true;
    }
    if (report_.details.empty()) margin = 0.0;
    report_.margin = margin;
    report_.passed = margin >= -report_.numerical_slack;
    report_.warning = report_.passed && warning;
    return std::move(report_);
  }

 private:
  CheckReport report_;
};

double inequality_slack(std::initializer_list<double> tols) {
  double sum = 0.0;
  for (double t : tols) sum += t;
  return std::max(sum, kMinInequalitySlack);
}

std::string subject_of(const Graph& g) { return "g6=" + to_graph6(g); }

CheckReport multiset_check(std::string name, const Graph& g, std::size_t t, const Graph& blown,
                           double scale_shift, double filler) {
  if (t < 1) throw std::invalid_argument(name + ": t must be >= 1");
  if (g.order() < 1) throw std::invalid_argument(name + ": graph must be non-empty");
  const Spectrum base = eigenvalues(g);
  const Spectrum big = eigenvalues(blown);
  const double td = static_cast<double>(t);
  std::vector<double> predicted;
  predicted.reserve(big.size());
  for (double mu : base.values()) predicted.push_back(td * mu + scale_shift);
  predicted.insert(predicted.end(), g.order() * (t - 1), filler);
  std::sort(predicted.begin(), predicted.end(), std::greater<>());

  const double allowance = std::max(kBlowupMatchPerUnit * td * static_cast<double>(g.order()),
                                    base.tol() * td + big.tol());
  ReportBuilder b(std::move(name), subject_of(g) + " t=" + std::to_string(t), allowance);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    b.le("match", i + 1, std::fabs(big.values()[i] - predicted[i]), 0.0, false);
  }
  return std::move(b).finish();
}

}  // namespace

CheckReport check_blowup_spectrum_independent(const Graph& g, std::size_t t) {
  if (t < 1) throw std::invalid_argument("blowup_spectrum_independent: t must be >= 1");
  return multiset_check("blowup_spectrum_independent", g, t, blowup_independent(g, t), 0.0, 0.0);
}

CheckReport check_blowup_spectrum_clique(const Graph& g, std::size_t t) {
  if (t < 1) throw std::invalid_argument("blowup_spectrum_clique: t must be >= 1");
  const double td = static_cast<double>(t);
  return multiset_check("blowup_spectrum_clique", g, t, blowup_clique(g, t), td - 1.0, -1.0);
}

CheckReport check_lemma_blowup_bounds(const Graph& g, std::size_t t, std::size_t k) {
  const std::size_t n = g.order();
  if (t < 2) throw std::invalid_argument("lemma_blowup_bounds: t must be >= 2");
  if (k < 1 || k >= n) throw std::invalid_argument("lemma_blowup_bounds: need 1 <= k < n");
  const Spectrum base = eigenvalues(g);
  const Spectrum ind = eigenvalues(blowup_independent(g, t));
  const Spectrum cli = eigenvalues(blowup_clique(g, t));
  const double td = static_cast<double>(t);
  const double err = td * static_cast<double>(n) / std::sqrt(static_cast<double>(n - k));
  const double slack = inequality_slack({base.tol() * td, ind.tol(), cli.tol()});

  ReportBuilder b("lemma_blowup_bounds", subject_of(g) + " t=" + std::to_string(t) + " k=" + std::to_string(k),
                  slack);
  for (std::size_t s = 1; s <= k; ++s) {
    const double top = ind.mu(s) - td * base.mu(s);
    b.ge("i1.lower", s, top, 0.0, false);
    b.le("i1.upper", s, top, err, true);

    const double bottom = ind.mu_tail(s) - td * base.mu_tail(s);
    b.le("i2.upper", s, bottom, 0.0, false);
    b.ge("i2.lower", s, bottom, -err, true);

    // Differences against the shifted eigenvalue t*mu + t - 1 from the
    // clique blow-up spectrum.
    const double ctop = cli.mu(s) - (td * base.mu(s) + td - 1.0);
    b.ge("i3.lower", s, ctop, 0.0, false);
    b.le("i3.upper", s, ctop, td + err, true);

    const double cbottom = cli.mu_tail(s) - (td * base.mu_tail(s) + td - 1.0);
    b.le("i4.upper", s, cbottom, 0.0, false);
    b.ge("i4.lower", s, cbottom, -td - err, true);
  }
  return std::move(b).finish();
}

std::size_t max_deletion_index(std::size_t n) { return 3 * n / 4; }

std::size_t max_subset_deletion_index(std::size_t n, std::size_t l) { return l >= n ? 0 : 3 * (n - l) / 4; }

CheckReport check_vertex_deletion_bounds(const Graph& g, Vertex v, std::span<const std::size_t> s_values) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("vertex_deletion_bounds: need n >= 2");
  if (v >= n) throw std::out_of_range("vertex_deletion_bounds: vertex out of range");
  if (s_values.empty()) throw std::invalid_argument("vertex_deletion_bounds: no indices requested");
  const std::size_t smax = max_deletion_index(n);
  for (std::size_t s : s_values) {
    if (s < 1 || s > smax) {
      throw std::out_of_range("vertex_deletion_bounds: s = " + std::to_string(s) + " outside [1, " +
                              std::to_string(smax) + "]");
    }
  }
  const Graph h = induced_subgraph(g, VertexSet{v}.complement_in(n));
  const Spectrum sg = eigenvalues(g);
  const Spectrum sh = eigenvalues(h);
  const double bound = 3.0 * std::sqrt(static_cast<double>(n));
  ReportBuilder b("vertex_deletion_bounds", subject_of(g) + " v=" + std::to_string(v),
                  inequality_slack({sg.tol(), sh.tol()}));
  for (std::size_t s : s_values) {
    const double top = sg.mu(s) - sh.mu(s);
    b.ge("win1.lower", s, top, 0.0, false);
    b.le("win1.upper", s, top, bound, true);
    // mu_{n-s+1}(G) - mu_{n-s}(H): both are the s-th value from the bottom.
    const double bottom = sg.mu_tail(s) - sh.mu_tail(s);
    b.le("win2.upper", s, bottom, 0.0, false);
    b.ge("win2.lower", s, bottom, -bound, true);
  }
  return std::move(b).finish();
}

CheckReport check_subset_deletion_bounds(const Graph& g, const VertexSet& removed,
                                         std::span<const std::size_t> s_values) {
  const std::size_t n = g.order();
  const std::size_t l = removed.size();
  if (l < 1) throw std::invalid_argument("subset_deletion_bounds: need at least one removed vertex");
  for (Vertex v : removed.members()) {
    if (v >= n) throw std::out_of_range("subset_deletion_bounds: vertex out of range");
  }
  if (s_values.empty()) throw std::invalid_argument("subset_deletion_bounds: no indices requested");
  const std::size_t smax = max_subset_deletion_index(n, l);
  for (std::size_t s : s_values) {
    if (s < 1 || s > smax) {
      throw std::out_of_range("subset_deletion_bounds: s = " + std::to_string(s) + " outside [1, " +
                              std::to_string(smax) + "]");
    }
  }
  const Graph h = induced_subgraph(g, removed.complement_in(n));
  const Spectrum sg = eigenvalues(g);
  const Spectrum sh = eigenvalues(h);
  const double bound = 3.0 * static_cast<double>(l) * std::sqrt(static_cast<double>(n));
  std::string subject = subject_of(g) + " S=";
  for (std::size_t i = 0; i < l; ++i) subject += (i ? "," : "") + std::to_string(removed.members()[i]);
  ReportBuilder b("subset_deletion_bounds", std::move(subject), inequality_slack({sg.tol(), sh.tol()}));
  for (std::size_t s : s_values) {
    b.le("top", s, std::fabs(sg.mu(s) - sh.mu(s)), bound, true);
    // mu_{n-l-s+1}(G2) is the s-th value from the bottom of G2.
    b.le("bottom", s, std::fabs(sg.mu_tail(s) - sh.mu_tail(s)), bound, true);
  }
  return std::move(b).finish();
}

CheckReport check_interlacing(const Graph& g, Vertex v) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("interlacing: need n >= 2");
  if (v >= n) throw std::out_of_range("interlacing: vertex out of range");
  const Graph h = induced_subgraph(g, VertexSet{v}.complement_in(n));
  const Spectrum sg = eigenvalues(g);
  const Spectrum sh = eigenvalues(h);
  ReportBuilder b("interlacing", subject_of(g) + " v=" + std::to_string(v), inequality_slack({sg.tol(), sh.tol()}));
  for (std::size_t s = 1; s < n; ++s) {
    b.le("upper", s, sh.mu(s), sg.mu(s), false);
    b.ge("lower", s, sh.mu(s), sg.mu(s + 1), false);
  }
  return std::move(b).finish();
}

CheckReport cross_check_interlacing(const CheckReport& deletion, const CheckReport& interlacing, std::size_t n) {
  if (deletion.name != "vertex_deletion_bounds" || interlacing.name != "interlacing") {
    throw std::invalid_argument("cross_check_interlacing: wrong report kinds");
  }
  if (deletion.subject != interlacing.subject) {
    throw std::invalid_argument("cross_check_interlacing: reports are about different inputs");
  }
  auto find = [&](const std::string& label, std::size_t index) -> const CheckRecord& {
    for (const auto& d : interlacing.details) {
      if (d.label == label && d.index == index) return d;
    }
    throw std::invalid_argument("cross_check_interlacing: no " + label + " record at " + std::to_string(index));
  };
  ReportBuilder b("interlacing_cross", deletion.subject,
                  std::max(deletion.numerical_slack, interlacing.numerical_slack));
  for (const auto& d : deletion.details) {
    if (d.label == "win1.lower") {
      b.le("win1_vs_upper", d.index, std::fabs(d.slack - find("upper", d.index).slack), 0.0, false);
    } else if (d.label == "win2.upper") {
      b.le("win2_vs_lower", d.index, std::fabs(d.slack - find("lower", n - d.index).slack), 0.0, false);
    }
  }
  return std::move(b).finish();
}

CheckReport check_prop1_chain(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("prop1_chain: need n >= 2");
  const Spectrum sg = eigenvalues(g);
  const Spectrum sc = eigenvalues(complement(g));
  const double mu1 = sg.mu(1);
  const double mu2 = sg.mu(2);
  const double cmin = sc.mu_tail(1);
  const double m = static_cast<double>(g.edge_count());
  const double nd = static_cast<double>(n);
  // Squared quantities carry the eigenvalue error times twice the magnitude.
  const double scale = std::max(1.0, 2.0 * nd);
  ReportBuilder b("prop1_chain", subject_of(g), inequality_slack({sg.tol() * scale, sc.tol() * scale}));
  b.le("energy", 1, mu1 * mu1 + mu2 * mu2, 2.0 * m, false);
  b.le("weyl_complement", 2, mu2 + cmin, -1.0, false);
  b.le("second_vs_complement", 3, mu2 * mu2, cmin * cmin + 1.0, false);
  b.le("headline", 4, mu1 + mu2, 2.0 * nd / std::sqrt(3.0), false);
  return std::move(b).finish();
}

AmplificationReport amplify(const Graph& g, const LinearForm& f, const FamilyPredicate& p, std::size_t big_n,
                            double c_ref, double eps) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("amplify: empty graph");
  if (3 * n <= 4 * f.k()) throw std::invalid_argument("amplify: need n > 4k/3");
  if (big_n < 2 * n) throw std::invalid_argument("amplify: need N >= 2n");
  if (!member(p, g)) throw std::invalid_argument("amplify: graph is not in family " + p.name());

  AmplificationReport r;
  r.subject = subject_of(g) + " family=" + p.name() + " N=" + std::to_string(big_n);
  r.n = n;
  r.big_n = big_n;
  r.t = big_n / n;
  r.padding = big_n - r.t * n;
  r.c_ref = c_ref;
  r.eps = eps;
  r.coefficient_norm = coefficient_norm(f);

  const Graph g1 = add_isolated(blowup_independent(g, r.t), r.padding);
  r.member_amplified = member(p, g1);

  auto solve_pair = [&](const Graph& x, double& value, double& tol) {
    std::optional<Spectrum> a;
    std::optional<Spectrum> c;
    tol = 0.0;
    if (f.uses_graph()) {
      a = eigenvalues(x);
      tol += a->tol();
    }
    if (f.uses_complement()) {
      c = eigenvalues(complement(x));
      tol += c->tol();
    }
    value = evaluate(f, a ? &*a : nullptr, c ? &*c : nullptr);
  };
  double fg = 0.0;
  double fg_tol = 0.0;
  double fg1 = 0.0;
  double fg1_tol = 0.0;
  solve_pair(g, fg, fg_tol);
  solve_pair(g1, fg1, fg1_tol);

  const double nd = static_cast<double>(n);
  const double td = static_cast<double>(r.t);
  const double m = r.coefficient_norm;
  r.f_over_n = fg / nd;
  r.f1_over_big_n = fg1 / static_cast<double>(big_n);
  r.error_terms = {nd * (std::fabs(c_ref) + std::fabs(eps)) / td, 3.0 * m / std::sqrt(nd), 3.0 * m * std::sqrt(nd / td)};
  r.numerical_slack = std::max(m * (fg_tol / nd + fg1_tol / static_cast<double>(big_n)), kMinInequalitySlack);
  r.hypothesis_holds = std::fabs(r.f_over_n) <= std::fabs(c_ref) + std::fabs(eps);
  const double floor_value = r.f_over_n - (r.error_terms[0] + r.error_terms[1] + r.error_terms[2]);
  r.chain_holds = r.f1_over_big_n >= floor_value - r.numerical_slack;
  return r;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["subject"] = r.subject;
  j["passed"] = r.passed;
  j["warning"] = r.warning;
  j["margin"] = r.margin;
  j["numerical_slack"] = r.numerical_slack;
  auto& details = j["details"] = nlohmann::ordered_json::array();
  for (const auto& d : r.details) {
    nlohmann::ordered_json e;
    e["label"] = d.label;
    e["index"] = d.index;
    e["lhs"] = d.lhs;
    e["rhs"] = d.rhs;
    e["slack"] = d.slack;
    e["strict"] = d.strict;
    details.push_back(std::move(e));
  }
  return j;
}

nlohmann::ordered_json to_json(const AmplificationReport& r) {
  nlohmann::ordered_json j;
  j["name"] = "amplify";
  j["subject"] = r.subject;
  j["passed"] = r.passed();
  j["n"] = r.n;
  j["N"] = r.big_n;
  j["t"] = r.t;
  j["padding"] = r.padding;
  j["c_ref"] = r.c_ref;
  j["eps"] = r.eps;
  j["M"] = r.coefficient_norm;
  j["f_over_n"] = r.f_over_n;
  j["f1_over_N"] = r.f1_over_big_n;
  j["error_terms"] = r.error_terms;
  j["numerical_slack"] = r.numerical_slack;
  j["hypothesis_holds"] = r.hypothesis_holds;
  j["member_amplified"] = r.member_amplified;
  j["chain_holds"] = r.chain_holds;
  return j;
}

}  // namespace lincomb
