#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lincomb/graph.hpp"

namespace lincomb {

/// Adjacency eigenvalues sorted non-increasing, plus the error bound the
/// solver actually achieved.
class Spectrum {
 public:
  Spectrum(std::vector<double> values, double tol);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double tol() const { return tol_; }

  /// mu_i, 1-based from the top. Throws std::out_of_range.
  double mu(std::size_t i) const;
  /// mu_{n-s+1}: the s-th value counted from the bottom. Throws std::out_of_range.
  double mu_tail(std::size_t s) const;

  double trace() const;
  double sum_of_squares() const;

 private:
  std::vector<double> values_;
  double tol_;
};

/// Solver convergence target: off-diagonal Frobenius norm <= kOffTolerancePerVertex * n.
inline constexpr double kOffTolerancePerVertex = 1e-12;
/// Soundness envelopes checked on every solve.
inline constexpr double kTraceTolerancePerVertex = 1e-9;
inline constexpr double kEnergyTolerancePerVertexSq = 1e-7;

enum class SolverKernel {
  Automatic,     // by order only: cyclic below kRoundRobinMinOrder, else round-robin
  CyclicSerial,  // reference kernel
  RoundRobin,    // OpenMP kernel
};

inline constexpr std::size_t kRoundRobinMinOrder = 256;

/// Full adjacency spectrum by Jacobi rotations. Deterministic, and the kernel
/// choice never depends on the thread count. Throws std::invalid_argument for
/// n = 0.
Spectrum eigenvalues(const Graph& g, SolverKernel kernel = SolverKernel::Automatic);

/// Running soundness statistics over every solve in the process. Trace and
/// energy residuals are normalized by their envelopes, so a ratio above 1 is a
/// violation.
struct SolverAudit {
  std::uint64_t solves = 0;
  std::uint64_t violations = 0;
  double worst_trace_ratio = 0.0;
  double worst_energy_ratio = 0.0;
};

SolverAudit solver_audit();
void reset_solver_audit();

/// Checks the trace and energy identities for a spectrum of a graph with
/// `edges` edges. Returns true when both hold.
bool spectrum_sound(const Spectrum& s, std::size_t edges);

}  // namespace lincomb
