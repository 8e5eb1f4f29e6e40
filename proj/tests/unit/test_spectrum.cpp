#include <gtest/gtest.h>
#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>

#include "lincomb/jacobi.hpp"
#include "lincomb/random.hpp"
#include "lincomb/spectrum.hpp"

using namespace lincomb;

namespace {

// Independent oracle: Eigen's tridiagonal QR solver, sorted descending.
std::vector<double> oracle(const Graph& g) {
  const std::size_t n = g.order();
  const auto a = g.adjacency_matrix();
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i * n + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

void expect_matches_oracle(const Graph& g, SolverKernel kernel) {
  const Spectrum s = eigenvalues(g, kernel);
  const auto ref = oracle(g);
  const double tol = 1e-9 * std::max<double>(1.0, static_cast<double>(g.order()));
  ASSERT_EQ(s.size(), ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(s.values()[i], ref[i], tol) << "i=" << i;
}

}  // namespace

TEST(Spectrum, KnownSpectra) {
  const Spectrum k3 = eigenvalues(complete(3));
  EXPECT_NEAR(k3.mu(1), 2.0, 1e-9);
  EXPECT_NEAR(k3.mu(2), -1.0, 1e-9);
  EXPECT_NEAR(k3.mu(3), -1.0, 1e-9);

  const Spectrum star = eigenvalues(join(empty(1), empty(2)));
  EXPECT_NEAR(star.mu(1), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(star.mu(2), 0.0, 1e-9);
  EXPECT_NEAR(star.mu(3), -std::sqrt(2.0), 1e-9);

  const Spectrum c4 = eigenvalues(blowup_independent(complete(2), 2));
  const std::vector<double> expect{2, 0, 0, -2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(c4.values()[i], expect[i], 1e-9);
  EXPECT_NEAR(c4.mu_tail(1), -2.0, 1e-9);

  EXPECT_NEAR(eigenvalues(complete(4)).mu(2), -1.0, 1e-9);
  EXPECT_EQ(eigenvalues(empty(1)).values(), std::vector<double>{0.0});
}

TEST(Spectrum, Accessors) {
  const Spectrum s({3.0, 1.0, -4.0}, 1e-12);
  EXPECT_EQ(s.mu(1), 3.0);
  EXPECT_EQ(s.mu(3), -4.0);
  EXPECT_EQ(s.mu_tail(1), -4.0);
  EXPECT_EQ(s.mu_tail(3), 3.0);
  EXPECT_EQ(s.trace(), 0.0);
  EXPECT_EQ(s.sum_of_squares(), 26.0);
  EXPECT_THROW(s.mu(0), std::out_of_range);
  EXPECT_THROW(s.mu(4), std::out_of_range);
  EXPECT_THROW(s.mu_tail(0), std::out_of_range);
  EXPECT_THROW(Spectrum({1.0, 2.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(eigenvalues(empty(0)), std::invalid_argument);
}

TEST(Spectrum, BothKernelsMatchOracleOnRandomGraphs) {
  Rng rng = SeedStream(3).child("spectrum").engine();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + uniform_int(rng, 0, 39);
    const Graph g = random_graph(n, uniform01(rng), rng);
    expect_matches_oracle(g, SolverKernel::CyclicSerial);
    expect_matches_oracle(g, SolverKernel::RoundRobin);
  }
}

TEST(Spectrum, LargerOrdersMatchOracle) {
  Rng rng = SeedStream(4).engine();
  for (std::size_t n : {97, 130, 260}) {
    const Graph g = random_graph(n, 0.5, rng);
    expect_matches_oracle(g, SolverKernel::Automatic);
    expect_matches_oracle(g, SolverKernel::RoundRobin);
  }
  // Structured matrices with large eigenvalue clusters.
  expect_matches_oracle(complete(150), SolverKernel::RoundRobin);
  expect_matches_oracle(blowup_independent(complete(5), 30), SolverKernel::RoundRobin);
}

TEST(Spectrum, RoundRobinIgnoresThreadCount) {
  Rng rng = SeedStream(5).engine();
  const Graph g = random_graph(140, 0.5, rng);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = eigenvalues(g, SolverKernel::RoundRobin).values();
  omp_set_num_threads(4);
  const auto four = eigenvalues(g, SolverKernel::RoundRobin).values();
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}

TEST(Spectrum, AuditCountsSolves) {
  reset_solver_audit();
  Rng rng = SeedStream(6).engine();
  for (int i = 0; i < 10; ++i) eigenvalues(random_graph(20, 0.5, rng));
  const SolverAudit a = solver_audit();
  EXPECT_EQ(a.solves, 10u);
  EXPECT_EQ(a.violations, 0u);
  EXPECT_LE(a.worst_trace_ratio, 1.0);
  EXPECT_LE(a.worst_energy_ratio, 1.0);
}

TEST(Spectrum, SoundnessDetectsWrongSpectrum) {
  const Spectrum good = eigenvalues(complete(3));
  EXPECT_TRUE(spectrum_sound(good, 3));
  EXPECT_FALSE(spectrum_sound(good, 4));
  EXPECT_FALSE(spectrum_sound(Spectrum({2.0, -0.9, -1.0}, 0.0), 3));
}

TEST(Jacobi, ReportsNonConvergence) {
  Rng rng = SeedStream(8).engine();
  const Graph g = random_graph(30, 0.5, rng);
  JacobiOptions opts;
  opts.off_tolerance = 0.0;
  opts.max_sweeps = 1;
  EXPECT_THROW(jacobi_cyclic_serial(g.adjacency_matrix(), 30, opts), std::runtime_error);
  EXPECT_THROW(jacobi_round_robin(g.adjacency_matrix(), 30, opts), std::runtime_error);
}

TEST(Jacobi, OffDiagonalNorm) {
  const std::vector<double> a{1, 2, 0, 2, 1, 3, 0, 3, 1};
  EXPECT_DOUBLE_EQ(off_diagonal_norm(a, 3), std::sqrt(2.0 * (4.0 + 9.0)));
}
