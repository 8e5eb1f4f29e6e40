#include <cmath>
#include <stdexcept>
#include <string>

#include "lincomb/jacobi.hpp"

namespace lincomb {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = a.data() + i * n;
    for (std::size_t j = i + 1; j < n; ++j) sum += row[j] * row[j];
  }
  return std::sqrt(2.0 * sum);
}

namespace {

double frobenius_norm(const std::vector<double>& a) {
  double sum = 0.0;
  for (double x : a) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

JacobiResult jacobi_cyclic_serial(std::vector<double> a, std::size_t n, const JacobiOptions& opts) {
  JacobiResult res;
  res.frobenius = frobenius_norm(a);
  // Only the upper triangle is kept current from here on.
  double off = off_diagonal_norm(a, n);
  while (off > opts.off_tolerance) {
    if (res.sweeps == opts.max_sweeps) {
      throw std::runtime_error("cyclic Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                               " sweeps");
    }
    ++res.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      double* rp = a.data() + p * n;
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = rp[q];
        if (apq == 0.0) continue;
        double* rq = a.data() + q * n;
        const double app = rp[p];
        const double aqq = rq[q];
        const double g = 100.0 * std::fabs(apq);
        if (res.sweeps > 4 && std::fabs(app) + g == std::fabs(app) && std::fabs(aqq) + g == std::fabs(aqq)) {
          rp[q] = 0.0;
          continue;
        }
        const double theta = 0.5 * (aqq - app) / apq;
        double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const auto rotate = [s, tau](double& x, double& y) {
          const double u = x;
          const double v = y;
          x = u - s * (v + u * tau);
          y = v + s * (u - v * tau);
        };
        for (std::size_t j = 0; j < p; ++j) rotate(a[j * n + p], a[j * n + q]);
        for (std::size_t j = p + 1; j < q; ++j) rotate(rp[j], a[j * n + q]);
        for (std::size_t j = q + 1; j < n; ++j) rotate(rp[j], rq[j]);
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = 0.0;
      }
    }
    off = off_diagonal_norm(a, n);
  }
  res.off_norm = off;
  res.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.diagonal[i] = a[i * n + i];
  return res;
}

}  // namespace lincomb
