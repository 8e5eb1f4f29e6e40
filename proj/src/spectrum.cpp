#include "lincomb/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "lincomb/jacobi.hpp"

namespace lincomb {

namespace {

std::atomic<std::uint64_t> g_solves{0};
std::atomic<std::uint64_t> g_violations{0};
std::atomic<double> g_worst_trace{0.0};
std::atomic<double> g_worst_energy{0.0};

void raise_to(std::atomic<double>& slot, double v) {
  double cur = slot.load(std::memory_order_relaxed);
  while (v > cur && !slot.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

double trace_ratio(const Spectrum& s) {
  const double n = static_cast<double>(s.size());
  return std::fabs(s.trace()) / (kTraceTolerancePerVertex * n);
}

double energy_ratio(const Spectrum& s, std::size_t edges) {
  const double n = static_cast<double>(s.size());
  return std::fabs(s.sum_of_squares() - 2.0 * static_cast<double>(edges)) /
         (kEnergyTolerancePerVertexSq * n * n);
}

using Kernel = JacobiResult (*)(std::vector<double>, std::size_t, const JacobiOptions&);

Spectrum solve(const Graph& g, Kernel kernel) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("spectrum of the empty (order 0) graph is undefined");
  JacobiOptions opts;
  opts.off_tolerance = kOffTolerancePerVertex * static_cast<double>(n);
  JacobiResult r = kernel(g.adjacency_matrix(), n, opts);
  std::sort(r.diagonal.begin(), r.diagonal.end(), std::greater<>());
  // Weyl: the dropped off-diagonal part moves each eigenvalue by at most its
  // norm; the rest covers accumulated rounding of the rotations.
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol = r.off_norm + static_cast<double>(std::max(r.sweeps, 1)) *
                                      static_cast<double>(n) * eps * std::max(r.frobenius, 1.0);
  Spectrum s(std::move(r.diagonal), tol);

  g_solves.fetch_add(1, std::memory_order_relaxed);
  const double tr = trace_ratio(s);
  const double en = energy_ratio(s, g.edge_count());
  raise_to(g_worst_trace, tr);
  raise_to(g_worst_energy, en);
  if (tr > 1.0 || en > 1.0) g_violations.fetch_add(1, std::memory_order_relaxed);
  return s;
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values, double tol) : values_(std::move(values)), tol_(tol) {
  if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>())) {
    throw std::invalid_argument("spectrum values must be sorted non-increasing");
  }
  if (!(tol_ >= 0.0)) throw std::invalid_argument("spectrum tolerance must be non-negative");
}

double Spectrum::mu(std::size_t i) const {
  if (i < 1 || i > values_.size()) {
    throw std::out_of_range("eigenvalue index " + std::to_string(i) + " outside [1, " +
                            std::to_string(values_.size()) + "]");
  }
  return values_[i - 1];
}

double Spectrum::mu_tail(std::size_t s) const {
  if (s < 1 || s > values_.size()) {
    throw std::out_of_range("tail index " + std::to_string(s) + " outside [1, " +
                            std::to_string(values_.size()) + "]");
  }
  return values_[values_.size() - s];
}

double Spectrum::trace() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum;
}

double Spectrum::sum_of_squares() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return sum;
}

Spectrum eigenvalues(const Graph& g, SolverKernel kernel) {
  switch (kernel) {
    case SolverKernel::CyclicSerial:
      return solve(g, &jacobi_cyclic_serial);
    case SolverKernel::RoundRobin:
      return solve(g, &jacobi_round_robin);
    case SolverKernel::Automatic:
      break;
  }
  return solve(g, g.order() < kRoundRobinMinOrder ? &jacobi_cyclic_serial : &jacobi_round_robin);
}

SolverAudit solver_audit() {
  SolverAudit a;
  a.solves = g_solves.load();
  a.violations = g_violations.load();
  a.worst_trace_ratio = g_worst_trace.load();
  a.worst_energy_ratio = g_worst_energy.load();
  return a;
}

void reset_solver_audit() {
  g_solves = 0;
  g_violations = 0;
  g_worst_trace = 0.0;
  g_worst_energy = 0.0;
}

bool spectrum_sound(const Spectrum& s, std::size_t edges) {
  return trace_ratio(s) <= 1.0 && energy_ratio(s, edges) <= 1.0;
}

}  // namespace lincomb
