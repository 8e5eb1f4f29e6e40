#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lincomb/jacobi.hpp"
#include "parallel_for.hpp"

namespace lincomb {

namespace {

struct Rotation {
  std::size_t p = 0;
  std::size_t q = 0;
  double c = 1.0;
  double s = 0.0;
  double new_pp = 0.0;
  double new_qq = 0.0;
};

double frobenius_norm(const std::vector<double>& a) {
  double sum = 0.0;
  for (double x : a) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

JacobiResult jacobi_round_robin(std::vector<double> a, std::size_t n, const JacobiOptions& opts) {
  JacobiResult res;
  res.frobenius = frobenius_norm(a);
  const bool parallel = n >= kJacobiParallelMinOrder;
  // Odd orders get a phantom player n whose pairings are skipped.
  const std::size_t m = n + (n % 2);
  std::vector<std::size_t> players(m);
  std::iota(players.begin(), players.end(), std::size_t{0});
  std::vector<Rotation> rots;
  rots.reserve(m / 2);

  double off = off_diagonal_norm(a, n);
  while (off > opts.off_tolerance) {
    if (res.sweeps == opts.max_sweeps) {
      throw std::runtime_error("round-robin Jacobi did not converge in " +
                               std::to_string(opts.max_sweeps) + " sweeps");
    }
    ++res.sweeps;
    for (std::size_t round = 0; round + 1 < m; ++round) {
      rots.clear();
      for (std::size_t i = 0; i < m / 2; ++i) {
        std::size_t p = players[i];
        std::size_t q = players[m - 1 - i];
        if (p >= n || q >= n) continue;
        if (p > q) std::swap(p, q);
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double g = 100.0 * std::fabs(apq);
        if (res.sweeps > 4 && std::fabs(app) + g == std::fabs(app) && std::fabs(aqq) + g == std::fabs(aqq)) {
          a[p * n + q] = 0.0;
          a[q * n + p] = 0.0;
          continue;
        }
        const double theta = 0.5 * (aqq - app) / apq;
        double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        rots.push_back({p, q, c, t * c, app - t * apq, aqq + t * apq});
      }

      // Rows p and q belong to exactly one rotation.
      detail::parallel_for(static_cast<std::ptrdiff_t>(rots.size()), parallel, [&](std::ptrdiff_t r) {
        const Rotation& rot = rots[static_cast<std::size_t>(r)];
        double* rp = a.data() + rot.p * n;
        double* rq = a.data() + rot.q * n;
        for (std::size_t j = 0; j < n; ++j) {
          const double x = rp[j];
          const double y = rq[j];
          rp[j] = rot.c * x - rot.s * y;
          rq[j] = rot.s * x + rot.c * y;
        }
      });
      // Columns: each thread owns whole rows.
      detail::parallel_for(static_cast<std::ptrdiff_t>(n), parallel, [&](std::ptrdiff_t i) {
        double* row = a.data() + static_cast<std::size_t>(i) * n;
        for (const Rotation& rot : rots) {
          const double x = row[rot.p];
          const double y = row[rot.q];
          row[rot.p] = rot.c * x - rot.s * y;
          row[rot.q] = rot.s * x + rot.c * y;
        }
      });
      // The (p, q) block is touched only by its own rotation; set it exactly.
      for (const Rotation& rot : rots) {
        a[rot.p * n + rot.p] = rot.new_pp;
        a[rot.q * n + rot.q] = rot.new_qq;
        a[rot.p * n + rot.q] = 0.0;
        a[rot.q * n + rot.p] = 0.0;
      }
      // Circle method: player 0 fixed, the rest rotate one seat.
      if (m > 2) {
        const std::size_t last = players[m - 1];
        for (std::size_t i = m - 1; i > 1; --i) players[i] = players[i - 1];
        players[1] = last;
      }
    }
    // Row and column passes round differently; drop the antisymmetric drift.
    detail::parallel_for(static_cast<std::ptrdiff_t>(n), parallel, [&](std::ptrdiff_t i) {
      const auto ui = static_cast<std::size_t>(i);
      for (std::size_t j = ui + 1; j < n; ++j) {
        const double v = 0.5 * (a[ui * n + j] + a[j * n + ui]);
        a[ui * n + j] = v;
        a[j * n + ui] = v;
      }
    });
    off = off_diagonal_norm(a, n);
  }
  res.off_norm = off;
  res.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.diagonal[i] = a[i * n + i];
  return res;
}

}  // namespace lincomb
