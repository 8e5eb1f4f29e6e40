#include "lincomb/extremal_search.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "lincomb/constructions.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/graph_io.hpp"
#include "parallel_for.hpp"

namespace lincomb {

namespace {

constexpr double kNotMember = -std::numeric_limits<double>::infinity();

struct Candidate {
  double key = kNotMember;
  double value = kNotMember;
  std::uint64_t mask = 0;
  bool found = false;
};

// Larger key first, then smaller mask.
bool better(const Candidate& a, const Candidate& b) {
  if (!b.found) return a.found;
  if (!a.found) return false;
  if (a.key != b.key) return a.key > b.key;
  return a.mask < b.mask;
}

void check_exhaustive_args(std::size_t n, const LinearForm& f, std::size_t cap) {
  if (n > cap) {
    throw BudgetExceeded("exhaustive search at order " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                         " (2^" + std::to_string(pair_count(n)) + " labeled graphs)");
  }
  if (n < f.k()) {
    throw OrderTooSmall("exhaustive search needs n >= k = " + std::to_string(f.k()));
  }
  if (pair_count(n) >= 63) throw BudgetExceeded("labeled masks do not fit in 64 bits");
}

Candidate scan_masks(std::size_t n, const LinearForm& f, const FamilyPredicate& p, std::uint64_t lo,
                     std::uint64_t hi, std::uint64_t& evaluations) {
  Candidate best;
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const Graph g = labeled_graph(n, mask);
    if (!member(p, g)) continue;
    ++evaluations;
    const double v = evaluate(f, g);
    const Candidate c{ranking_key(v), v, mask, true};
    if (better(c, best)) best = c;
  }
  return best;
}

ExtremalRecord make_record(std::size_t n, const LinearForm& f, const FamilyPredicate& p, const Candidate& best,
                           std::uint64_t evaluations) {
  if (!best.found) throw SamplingError("no member graph of order " + std::to_string(n) + " in " + p.name());
  ExtremalRecord r;
  r.n = n;
  r.family = p;
  r.form = f;
  r.value = best.value;
  r.witness = labeled_graph(n, best.mask);
  r.method = SearchMethod::Exhaustive;
  r.seed = 0;
  r.evaluations = evaluations;
  return r;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string method_name(SearchMethod m) { return m == SearchMethod::Exhaustive ? "exhaustive" : "stochastic"; }

double ranking_key(double value) { return std::round(value / kRankingGrid); }

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  GraphBuilder b(n);
  std::size_t e = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++e) {
      if ((mask >> e) & 1U) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::uint64_t labeled_mask(const Graph& g) {
  if (pair_count(g.order()) > 64) throw std::invalid_argument("graph too large for a 64-bit mask");
  std::uint64_t mask = 0;
  std::size_t e = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u, ++e) {
      if (g.adjacent(u, v)) mask |= std::uint64_t{1} << e;
    }
  }
  return mask;
}

ExtremalRecord exhaustive_serial(std::size_t n, const LinearForm& f, const FamilyPredicate& p, std::size_t cap) {
  check_exhaustive_args(n, f, cap);
  std::uint64_t evaluations = 0;
  const Candidate best = scan_masks(n, f, p, 0, std::uint64_t{1} << pair_count(n), evaluations);
  return make_record(n, f, p, best, evaluations);
}

ExtremalRecord exhaustive(std::size_t n, const LinearForm& f, const FamilyPredicate& p, std::size_t cap) {
  check_exhaustive_args(n, f, cap);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const std::uint64_t shards = std::min<std::uint64_t>(total, 1024);
  std::vector<Candidate> best(shards);
  std::vector<std::uint64_t> evals(shards, 0);
  const bool parallel = total >= 4096;
  detail::parallel_for(static_cast<std::ptrdiff_t>(shards), parallel, [&](std::ptrdiff_t s) {
    const auto i = static_cast<std::uint64_t>(s);
    const std::uint64_t lo = total * i / shards;
    const std::uint64_t hi = total * (i + 1) / shards;
    best[i] = scan_masks(n, f, p, lo, hi, evals[i]);
  });
  Candidate winner;
  std::uint64_t evaluations = 0;
  for (std::uint64_t i = 0; i < shards; ++i) {
    if (better(best[i], winner)) winner = best[i];
    evaluations += evals[i];
  }
  return make_record(n, f, p, winner, evaluations);
}

ClimbResult hill_climb(const Graph& start, const LinearForm& f, const FamilyPredicate& p, Rng& rng,
                       std::size_t max_moves) {
  if (!member(p, start)) throw std::invalid_argument("hill_climb: start graph is not in " + p.name());
  const std::size_t n = start.order();
  ClimbResult res;
  res.best = start;
  res.value = evaluate(f, start);
  res.evaluations = 1;
  res.accepted_values.push_back(res.value);

  std::vector<Edge> pairs;
  pairs.reserve(pair_count(n));
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  const bool parallel = n >= 16 && !omp_in_parallel() && omp_get_max_threads() > 1;
  const std::size_t block = parallel ? static_cast<std::size_t>(omp_get_max_threads()) : 1;
  std::vector<double> cand(block);

  std::size_t moves = 0;
  while (moves < max_moves && !pairs.empty()) {
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[uniform_int(rng, 0, i - 1)]);
    bool improved = false;
    for (std::size_t b0 = 0; b0 < pairs.size() && !improved; b0 += block) {
      const std::size_t len = std::min(block, pairs.size() - b0);
      detail::parallel_for(static_cast<std::ptrdiff_t>(len), parallel && len > 1, [&](std::ptrdiff_t i) {
        const auto& [u, v] = pairs[b0 + static_cast<std::size_t>(i)];
        const Graph g = res.best.toggled(u, v);
        cand[static_cast<std::size_t>(i)] = member(p, g) ? evaluate(f, g) : kNotMember;
      });
      for (std::size_t i = 0; i < len; ++i) {
        // Counted in scan order so the tally does not depend on the block size.
        if (cand[i] != kNotMember) ++res.evaluations;
        if (cand[i] > res.value + kImprovementThreshold) {
          const auto& [u, v] = pairs[b0 + i];
          res.best = res.best.toggled(u, v);
          res.value = cand[i];
          res.accepted_values.push_back(res.value);
          improved = true;
          ++moves;
          break;
        }
      }
    }
    if (!improved) break;
  }
  return res;
}

Graph sample_member(std::size_t n, const FamilyPredicate& p, Rng& rng) {
  switch (p.kind()) {
    case FamilyPredicate::Kind::RPartite: {
      Graph g = random_r_partite(n, p.r(), 0.5, rng);
      if (!member(p, g)) throw SamplingError("r-partite sampler produced a non-member");
      return g;
    }
    case FamilyPredicate::Kind::KrFree: {
      Graph g = random_kr_free(n, p.r(), 0.5, rng);
      if (!member(p, g)) throw SamplingError("K_r-free sampler produced a non-member");
      return g;
    }
    case FamilyPredicate::Kind::All:
      break;
  }
  for (std::size_t draw = 0; draw < kMaxMemberDraws; ++draw) {
    Graph g = random_graph(n, 0.5, rng);
    if (member(p, g)) return g;
  }
  throw SamplingError("no member of " + p.name() + " after " + std::to_string(kMaxMemberDraws) + " draws");
}

ExtremalRecord stochastic(std::size_t n, const LinearForm& f, const FamilyPredicate& p,
                          const StochasticOptions& opts) {
  if (n < f.k()) throw OrderTooSmall("stochastic search needs n >= k = " + std::to_string(f.k()));
  if (opts.restarts < 1 || opts.steps < 1) throw std::invalid_argument("stochastic search needs restarts, steps >= 1");
  if (opts.initial && (opts.initial->order() != n || !member(p, *opts.initial))) {
    throw std::invalid_argument("initial graph must be a member of order n");
  }
  const SeedStream root = SeedStream(opts.seed).child("stochastic");
  std::vector<ClimbResult> climbs(opts.restarts);
  std::vector<std::string> codes(opts.restarts);
  const bool parallel = opts.restarts > 1 && omp_get_max_threads() > 1;
  detail::parallel_for(static_cast<std::ptrdiff_t>(opts.restarts), parallel, [&](std::ptrdiff_t r) {
    const auto i = static_cast<std::size_t>(r);
    Rng rng = root.child(i).engine();
    const Graph start = (i == 0 && opts.initial) ? *opts.initial : sample_member(n, p, rng);
    climbs[i] = hill_climb(start, f, p, rng, opts.steps);
    codes[i] = to_graph6(climbs[i].best);
  });

  std::size_t win = 0;
  std::uint64_t evaluations = 0;
  for (std::size_t i = 0; i < climbs.size(); ++i) {
    evaluations += climbs[i].evaluations;
    const double ki = ranking_key(climbs[i].value);
    const double kw = ranking_key(climbs[win].value);
    if (ki > kw || (ki == kw && codes[i] < codes[win])) win = i;
  }
  ExtremalRecord rec;
  rec.n = n;
  rec.family = p;
  rec.form = f;
  rec.value = climbs[win].value;
  rec.witness = climbs[win].best;
  rec.method = SearchMethod::Stochastic;
  rec.seed = opts.seed;
  rec.evaluations = evaluations;
  return rec;
}

std::vector<ExtremalRecord> phi_table(const LinearForm& f, const FamilyPredicate& p,
                                      const std::vector<std::size_t>& orders, const PhiPolicy& policy) {
  if (orders.empty()) throw std::invalid_argument("phi_table needs at least one order");
  std::vector<ExtremalRecord> out;
  out.reserve(orders.size());
  for (std::size_t n : orders) {
    if (n <= policy.exhaustive_cap) {
      out.push_back(exhaustive(n, f, p, policy.exhaustive_cap));
    } else {
      StochasticOptions opts;
      opts.seed = policy.seed;
      opts.restarts = policy.restarts;
      opts.steps = policy.steps;
      if (policy.seed_with_gernert && n >= 21) {
        Graph g = gernert_graph(GernertParams::for_order(n));
        if (member(p, g)) opts.initial = std::move(g);
      }
      out.push_back(stochastic(n, f, p, opts));
    }
    validate_record(out.back());
  }
  return out;
}

void validate_record(const ExtremalRecord& r) {
  if (r.witness.order() != r.n) throw std::logic_error("witness order differs from record order");
  if (!member(r.family, r.witness)) throw std::logic_error("witness is not a member of " + r.family.name());
  const double again = evaluate(r.form, r.witness);
  if (std::fabs(again - r.value) > kMinWitnessSlack) {
    throw std::logic_error("witness re-evaluates to " + format_double(again) + ", record says " +
                           format_double(r.value));
  }
}

void write_phi_csv(std::ostream& out, const std::vector<ExtremalRecord>& records) {
  out << "n,value,phi,method,seed,witness_graph6\n";
  for (const auto& r : records) {
    out << r.n << ',' << format_double(r.value) << ',' << format_double(r.phi()) << ',' << method_name(r.method)
        << ',' << r.seed << ',' << to_graph6(r.witness) << '\n';
  }
}

nlohmann::ordered_json to_json(const ExtremalRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["family"] = r.family.name();
  j["form"] = nlohmann::ordered_json::parse(form_to_json(r.form));
  j["value"] = r.value;
  j["phi"] = r.phi();
  j["method"] = method_name(r.method);
  j["seed"] = r.seed;
  j["evaluations"] = r.evaluations;
  j["witness_graph6"] = to_graph6(r.witness);
  return j;
}

}  // namespace lincomb
