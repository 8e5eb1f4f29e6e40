#include "lincomb/functional.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lincomb/errors.hpp"

namespace lincomb {

namespace {

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

std::vector<double> parse_list(std::string_view text, std::size_t line) {
  std::vector<double> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t\r");
    if (b == std::string::npos) throw ParseError("empty coefficient", line);
    const auto e = item.find_last_not_of(" \t\r");
    const std::string tok = item.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + tok + "'", line);
    }
    if (used != tok.size()) throw ParseError("bad coefficient '" + tok + "'", line);
    out.push_back(v);
  }
  return out;
}

LinearForm assemble(std::optional<std::size_t> k, std::map<std::string, std::vector<double>> parts) {
  std::size_t len = k.value_or(0);
  for (const auto& [name, v] : parts) len = std::max(len, v.size());
  if (len == 0) throw ParseError("coefficient block has no terms");
  if (k && *k != len) throw ParseError("k = " + std::to_string(*k) + " disagrees with coefficient lengths");
  auto take = [&](const char* name) {
    auto it = parts.find(name);
    if (it == parts.end()) return std::vector<double>(len, 0.0);
    if (it->second.size() != len) {
      throw ParseError(std::string(name) + " has length " + std::to_string(it->second.size()) +
                       ", expected " + std::to_string(len));
    }
    return it->second;
  };
  try {
    return LinearForm(take("alpha"), take("beta"), take("gamma"), take("delta"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

LinearForm::LinearForm(std::vector<double> alpha, std::vector<double> beta, std::vector<double> gamma,
                       std::vector<double> delta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), delta_(std::move(delta)) {
  const std::size_t k = alpha_.size();
  if (k == 0) throw std::invalid_argument("linear form needs k >= 1");
  if (beta_.size() != k || gamma_.size() != k || delta_.size() != k) {
    throw std::invalid_argument("alpha, beta, gamma, delta must all have length k");
  }
  for (const auto* v : {&alpha_, &beta_, &gamma_, &delta_}) {
    for (double x : *v) {
      if (!std::isfinite(x)) throw std::invalid_argument("linear form coefficients must be finite");
    }
  }
}

LinearForm LinearForm::from_parts(std::vector<double> alpha, std::vector<double> beta,
                                  std::vector<double> gamma, std::vector<double> delta) {
  const std::size_t k = std::max({alpha.size(), beta.size(), gamma.size(), delta.size()});
  for (auto* v : {&alpha, &beta, &gamma, &delta}) {
    if (v->empty()) v->assign(k, 0.0);
  }
  return LinearForm(std::move(alpha), std::move(beta), std::move(gamma), std::move(delta));
}

bool LinearForm::uses_graph() const { return !all_zero(alpha_) || !all_zero(beta_); }

bool LinearForm::uses_complement() const { return !all_zero(gamma_) || !all_zero(delta_); }

LinearForm LinearForm::swapped() const { return LinearForm(gamma_, delta_, alpha_, beta_); }

LinearForm combine(double a, const LinearForm& f, double b, const LinearForm& h) {
  if (f.k() != h.k()) throw std::invalid_argument("cannot combine linear forms with different k");
  auto mix = [&](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
    return out;
  };
  return LinearForm(mix(f.alpha(), h.alpha()), mix(f.beta(), h.beta()), mix(f.gamma(), h.gamma()),
                    mix(f.delta(), h.delta()));
}

double coefficient_norm(const LinearForm& f) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.k(); ++i) {
    m += std::fabs(f.alpha()[i]) + std::fabs(f.beta()[i]) + std::fabs(f.gamma()[i]) + std::fabs(f.delta()[i]);
  }
  return m;
}

double evaluate(const LinearForm& f, const Spectrum* graph, const Spectrum* complement_graph) {
  double value = 0.0;
  for (std::size_t i = 1; i <= f.k(); ++i) {
    const double a = f.alpha()[i - 1];
    const double b = f.beta()[i - 1];
    const double c = f.gamma()[i - 1];
    const double d = f.delta()[i - 1];
    if (a != 0.0 || b != 0.0) {
      if (graph == nullptr) throw std::invalid_argument("evaluate: graph spectrum required");
      value += a * graph->mu(i) + b * graph->mu_tail(i);
    }
    if (c != 0.0 || d != 0.0) {
      if (complement_graph == nullptr) throw std::invalid_argument("evaluate: complement spectrum required");
      value += c * complement_graph->mu(i) + d * complement_graph->mu_tail(i);
    }
  }
  return value;
}

double evaluate(const LinearForm& f, const Graph& g) {
  if (g.order() < f.k()) {
    throw OrderTooSmall("functional with k = " + std::to_string(f.k()) + " needs order >= k, got " +
                        std::to_string(g.order()));
  }
  std::optional<Spectrum> sg;
  std::optional<Spectrum> sc;
  if (f.uses_graph()) sg = eigenvalues(g);
  if (f.uses_complement()) sc = eigenvalues(complement(g));
  return evaluate(f, sg ? &*sg : nullptr, sc ? &*sc : nullptr);
}

std::optional<LinearForm> preset_form(std::string_view name, std::size_t i) {
  if (name == "mu1") return LinearForm::from_parts({1.0});
  if (name == "mu1+mun") return LinearForm::from_parts({1.0}, {1.0});
  if (name == "mu1-mun") return LinearForm::from_parts({1.0}, {-1.0});
  if (name == "mu1+mu2") return LinearForm::from_parts({1.0, 1.0});
  if (name == "mu1+cmu1") return LinearForm::from_parts({1.0}, {}, {1.0});
  if (name == "mui+cmui") {
    if (i == 0) throw std::invalid_argument("mui+cmui needs i >= 1");
    std::vector<double> unit(i, 0.0);
    unit[i - 1] = 1.0;
    return LinearForm::from_parts(unit, {}, unit);
  }
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  return {"mu1", "mu1+mun", "mu1-mun", "mu1+mu2", "mu1+cmu1", "mui+cmui"};
}

std::string form_to_json(const LinearForm& f) {
  nlohmann::ordered_json j;
  j["k"] = f.k();
  j["alpha"] = f.alpha();
  j["beta"] = f.beta();
  j["gamma"] = f.gamma();
  j["delta"] = f.delta();
  return j.dump();
}

LinearForm parse_form(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty coefficient block");
  std::optional<std::size_t> k;
  std::map<std::string, std::vector<double>> parts;
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("coefficient JSON: ") + e.what());
    }
    for (const auto& [key, value] : j.items()) {
      if (key == "k") {
        if (!value.is_number_integer() || value.get<long long>() < 1) throw ParseError("k must be a positive integer");
        k = value.get<std::size_t>();
      } else if (key == "alpha" || key == "beta" || key == "gamma" || key == "delta") {
        if (!value.is_array()) throw ParseError(key + " must be an array");
        std::vector<double> v;
        for (const auto& x : value) {
          if (!x.is_number()) throw ParseError(key + " must hold numbers");
          v.push_back(x.get<double>());
        }
        parts[key] = std::move(v);
      } else {
        throw ParseError("unknown coefficient key '" + key + "'");
      }
    }
    return assemble(k, std::move(parts));
  }

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto eq = line.find_first_of("=:");
    if (eq == std::string::npos) throw ParseError("expected 'key = values'", lineno);
    std::string key = line.substr(b, eq - b);
    key.erase(key.find_last_not_of(" \t") + 1);
    const std::string_view rest = std::string_view(line).substr(eq + 1);
    if (key == "k") {
      const auto vals = parse_list(rest, lineno);
      if (vals.size() != 1 || vals[0] < 1 || vals[0] != std::floor(vals[0])) {
        throw ParseError("k must be a positive integer", lineno);
      }
      k = static_cast<std::size_t>(vals[0]);
    } else if (key == "alpha" || key == "beta" || key == "gamma" || key == "delta") {
      parts[key] = parse_list(rest, lineno);
    } else {
      throw ParseError("unknown coefficient key '" + key + "'", lineno);
    }
  }
  return assemble(k, std::move(parts));
}

FamilyPredicate FamilyPredicate::kr_free(std::size_t r) {
  if (r < 3) throw std::invalid_argument("K_r-free family needs r >= 3");
  return FamilyPredicate(Kind::KrFree, r);
}

FamilyPredicate FamilyPredicate::r_partite(std::size_t r) {
  if (r < 1) throw std::invalid_argument("r-partite family needs r >= 1");
  return FamilyPredicate(Kind::RPartite, r);
}

std::string FamilyPredicate::name() const {
  switch (kind_) {
    case Kind::All:
      return "all";
    case Kind::KrFree:
      return "kr-free:" + std::to_string(r_);
    case Kind::RPartite:
      return "r-partite:" + std::to_string(r_);
  }
  return "all";
}

FamilyPredicate FamilyPredicate::parse(std::string_view text) {
  if (text == "all") return all();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("unknown family '" + std::string(text) + "'");
  const std::string head(text.substr(0, colon));
  const std::string tail(text.substr(colon + 1));
  std::size_t used = 0;
  unsigned long r = 0;
  try {
    r = std::stoul(tail, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tail.size()) throw std::invalid_argument("bad family parameter in '" + std::string(text) + "'");
  if (head == "kr-free") return kr_free(r);
  if (head == "r-partite") return r_partite(r);
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

bool member(const FamilyPredicate& p, const Graph& g) {
  switch (p.kind()) {
    case FamilyPredicate::Kind::All:
      return true;
    case FamilyPredicate::Kind::KrFree:
      return is_kr_free(g, p.r());
    case FamilyPredicate::Kind::RPartite:
      return is_r_partite(g, p.r());
  }
  return false;
}

}  // namespace lincomb
