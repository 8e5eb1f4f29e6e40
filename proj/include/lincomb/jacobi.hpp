#pragma once

#include <cstddef>
#include <vector>

namespace lincomb {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is at or below this.
  double off_tolerance = 0.0;
  int max_sweeps = 100;
};

struct JacobiResult {
  std::vector<double> diagonal;  // unsorted eigenvalue approximations
  double off_norm = 0.0;         // achieved off-diagonal Frobenius norm
  double frobenius = 0.0;        // Frobenius norm of the input
  int sweeps = 0;
};

/// Reference kernel: classical cyclic-by-row Jacobi, one rotation at a time.
/// `a` is a dense row-major symmetric n x n matrix. Throws std::runtime_error
/// when max_sweeps is exhausted.
JacobiResult jacobi_cyclic_serial(std::vector<double> a, std::size_t n, const JacobiOptions& opts);

/// Round-robin (tournament-ordered) Jacobi: each round applies n/2 disjoint
/// rotations at once, row pass and column pass parallelized with OpenMP. Every
/// matrix entry is written by exactly one thread per pass, so the result is
/// bitwise independent of the thread count.
JacobiResult jacobi_round_robin(std::vector<double> a, std::size_t n, const JacobiOptions& opts);

/// Matrices at least this large use the OpenMP passes.
inline constexpr std::size_t kJacobiParallelMinOrder = 96;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n);

}  // namespace lincomb
