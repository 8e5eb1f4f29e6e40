#include "lincomb/suites.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <numeric>
#include <stdexcept>

#include "lincomb/extremal_search.hpp"
#include "lincomb/random.hpp"
#include "parallel_for.hpp"

namespace lincomb {

namespace {

constexpr std::array kSuites{
    Suite::BlowupIndependent, Suite::BlowupClique, Suite::BlowupBounds, Suite::VertexDeletion, Suite::SubsetDeletion,
    Suite::Interlacing,       Suite::Amplify,      Suite::Prop1,        Suite::Gernert,
};

constexpr std::size_t kGernertSuiteMaxK = 5;

std::size_t draw(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(uniform_int(rng, lo, hi));
}

Graph draw_graph(Rng& rng, std::size_t lo, std::size_t hi) {
  const std::size_t n = draw(rng, lo, hi);
  const double p = uniform01(rng);
  return random_graph(n, p, rng);
}

std::vector<std::size_t> one_to(std::size_t m) {
  std::vector<std::size_t> s(m);
  std::iota(s.begin(), s.end(), std::size_t{1});
  return s;
}

VertexSet draw_subset(Rng& rng, std::size_t n, std::size_t l) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t i = 0; i < l; ++i) std::swap(all[i], all[draw(rng, i, n - 1)]);
  all.resize(l);
  std::sort(all.begin(), all.end());
  return VertexSet(std::move(all));
}

LinearForm draw_form(Rng& rng) {
  static constexpr std::array<double, 5> kSteps{-1.0, -0.5, 0.0, 0.5, 1.0};
  const std::size_t k = draw(rng, 1, 2);
  for (;;) {
    std::array<std::vector<double>, 4> parts;
    for (auto& v : parts) {
      for (std::size_t i = 0; i < k; ++i) v.push_back(kSteps[draw(rng, 0, kSteps.size() - 1)]);
    }
    LinearForm f(parts[0], parts[1], parts[2], parts[3]);
    if (coefficient_norm(f) > 0.0) return f;
  }
}

FamilyPredicate amplify_family(std::size_t i) {
  switch (i % 3) {
    case 0:
      return FamilyPredicate::all();
    case 1:
      return FamilyPredicate::kr_free(3);
    default:
      return FamilyPredicate::r_partite(2);
  }
}

// Appends the records of instance i.
void run_instance(Suite s, std::size_t i, std::size_t max_order, const SeedStream& stream,
                  std::vector<VerifyRecord>& out) {
  Rng rng = stream.engine();
  switch (s) {
    case Suite::BlowupIndependent: {
      const Graph g = draw_graph(rng, 1, max_order);
      out.emplace_back(check_blowup_spectrum_independent(g, draw(rng, 2, 4)));
      return;
    }
    case Suite::BlowupClique: {
      const Graph g = draw_graph(rng, 1, max_order);
      out.emplace_back(check_blowup_spectrum_clique(g, draw(rng, 2, 4)));
      return;
    }
    case Suite::BlowupBounds: {
      const Graph g = draw_graph(rng, 2, max_order);
      const std::size_t t = draw(rng, 2, 3);
      const std::size_t k = draw(rng, 1, std::min<std::size_t>(4, g.order() - 1));
      out.emplace_back(check_lemma_blowup_bounds(g, t, k));
      return;
    }
    case Suite::VertexDeletion: {
      const Graph g = draw_graph(rng, 2, max_order);
      const Vertex v = draw(rng, 0, g.order() - 1);
      const auto s_values = one_to(max_deletion_index(g.order()));
      out.emplace_back(check_vertex_deletion_bounds(g, v, s_values));
      return;
    }
    case Suite::SubsetDeletion: {
      const Graph g = draw_graph(rng, 3, max_order);
      const std::size_t l = draw(rng, 1, std::min<std::size_t>(4, g.order() - 2));
      const VertexSet removed = draw_subset(rng, g.order(), l);
      const auto s_values = one_to(max_subset_deletion_index(g.order(), l));
      out.emplace_back(check_subset_deletion_bounds(g, removed, s_values));
      return;
    }
    case Suite::Interlacing: {
      const Graph g = draw_graph(rng, 2, max_order);
      const Vertex v = draw(rng, 0, g.order() - 1);
      CheckReport inter = check_interlacing(g, v);
      const auto s_values = one_to(max_deletion_index(g.order()));
      CheckReport cross = cross_check_interlacing(check_vertex_deletion_bounds(g, v, s_values), inter, g.order());
      out.emplace_back(std::move(inter));
      out.emplace_back(std::move(cross));
      return;
    }
    case Suite::Amplify: {
      const FamilyPredicate p = amplify_family(i);
      const LinearForm f = draw_form(rng);
      const std::size_t n = draw(rng, 3, max_order);
      const Graph g = sample_member(n, p, rng);
      const std::size_t big_n = draw(rng, 2 * n, std::max(2 * n, std::min<std::size_t>(6 * n, kPredicateMaxOrder)));
      const double c_ref = evaluate(f, g) / static_cast<double>(n);
      out.emplace_back(amplify(g, f, p, big_n, c_ref, 0.05));
      return;
    }
    case Suite::Prop1: {
      out.emplace_back(check_prop1_chain(draw_graph(rng, 2, max_order)));
      return;
    }
    case Suite::Gernert:
      out.emplace_back(gernert_certificate(i + 1));
      return;
  }
}

}  // namespace

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::BlowupIndependent:
      return "blowup-independent";
    case Suite::BlowupClique:
      return "blowup-clique";
    case Suite::BlowupBounds:
      return "blowup-bounds";
    case Suite::VertexDeletion:
      return "vertex-deletion";
    case Suite::SubsetDeletion:
      return "subset-deletion";
    case Suite::Interlacing:
      return "interlacing";
    case Suite::Amplify:
      return "amplify";
    case Suite::Prop1:
      return "prop1";
    case Suite::Gernert:
      return "gernert";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : kSuites) {
    if (suite_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> all_suites() { return {kSuites.begin(), kSuites.end()}; }

std::size_t default_trials(Suite s) {
  switch (s) {
    case Suite::BlowupIndependent:
    case Suite::BlowupClique:
      return 100;
    case Suite::BlowupBounds:
    case Suite::SubsetDeletion:
      return 200;
    case Suite::VertexDeletion:
    case Suite::Interlacing:
      return 500;
    case Suite::Amplify:
      return 50;
    case Suite::Prop1:
      return 1000;
    case Suite::Gernert:
      return kGernertSuiteMaxK;
  }
  return 0;
}

std::size_t default_max_order(Suite s) {
  switch (s) {
    case Suite::BlowupIndependent:
    case Suite::BlowupClique:
    case Suite::BlowupBounds:
      return 12;
    case Suite::VertexDeletion:
    case Suite::SubsetDeletion:
      return 40;
    case Suite::Interlacing:
      return 60;
    case Suite::Amplify:
      return 10;
    case Suite::Prop1:
      return 100;
    case Suite::Gernert:
      return 21 * kGernertSuiteMaxK;
  }
  return 0;
}

std::vector<VerifyRecord> run_suite(Suite s, const SuiteOptions& opts) {
  std::size_t trials = opts.trials == 0 ? default_trials(s) : opts.trials;
  std::size_t max_order = opts.max_order == 0 ? default_max_order(s) : opts.max_order;
  if (s == Suite::Gernert) {
    trials = kGernertSuiteMaxK;
    max_order = default_max_order(s);
  }
  if (s == Suite::Amplify) max_order = std::clamp<std::size_t>(max_order, 3, kPredicateMaxOrder / 2);
  const std::size_t floor_order = s == Suite::SubsetDeletion ? 3 : 2;
  if (max_order < floor_order) throw std::invalid_argument(suite_name(s) + ": max order too small");

  const SeedStream root = SeedStream(opts.seed).child(suite_name(s));
  std::vector<std::vector<VerifyRecord>> per(trials);
  std::vector<std::exception_ptr> errors(trials);
  detail::parallel_for(static_cast<std::ptrdiff_t>(trials), opts.parallel && trials > 1, [&](std::ptrdiff_t t) {
    const auto i = static_cast<std::size_t>(t);
    try {
      run_instance(s, i, max_order, root.child(i), per[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<VerifyRecord> out;
  for (auto& v : per) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  return out;
}

bool record_passed(const VerifyRecord& r) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CheckReport>) {
          return x.passed;
        } else if constexpr (std::is_same_v<T, AmplificationReport>) {
          return x.passed();
        } else {
          return x.report.passed && x.sound;
        }
      },
      r);
}

bool record_warning(const VerifyRecord& r) {
  if (const auto* c = std::get_if<CheckReport>(&r)) return c->warning;
  if (const auto* g = std::get_if<GernertCertificate>(&r)) return g->report.warning;
  return false;
}

nlohmann::ordered_json record_json(const VerifyRecord& r) {
  return std::visit([](const auto& x) { return to_json(x); }, r);
}

}  // namespace lincomb
