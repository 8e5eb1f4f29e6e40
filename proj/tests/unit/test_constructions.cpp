#include <gtest/gtest.h>

#include <cmath>

#include "lincomb/constructions.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/graph_io.hpp"
#include "lincomb/spectrum.hpp"

using namespace lincomb;

namespace {
const double kSqrt329 = std::sqrt(329.0);
}

TEST(Gernert, GraphShape) {
  const Graph g = gernert_graph(GernertParams(1, 21));
  EXPECT_EQ(g.order(), 21u);
  EXPECT_EQ(g.edge_count(), 146u);
  EXPECT_EQ(g, join(complete(5), disjoint_union(complete(8), complete(8))));
  const Graph padded = gernert_graph(GernertParams(1, 25));
  EXPECT_EQ(padded, add_isolated(g, 4));
  const Graph g2 = gernert_graph(GernertParams(2));
  EXPECT_EQ(g2.order(), 42u);
  EXPECT_EQ(g2, join(complete(10), disjoint_union(complete(16), complete(16))));
  EXPECT_THROW(GernertParams(0, 21), std::invalid_argument);
  EXPECT_THROW(GernertParams(2, 41), std::invalid_argument);
  EXPECT_EQ(GernertParams::for_order(64).k, 3u);
  EXPECT_THROW(GernertParams::for_order(20), std::invalid_argument);
}

TEST(Gernert, ClosedForms) {
  EXPECT_NEAR(gernert_predicted_value(1), (25.0 + kSqrt329) / 2.0, 1e-12);
  EXPECT_NEAR(gernert_predicted_value(1), 21.5691785736, 1e-9);
  EXPECT_NEAR(gernert_predicted_value(2), 27.0 + kSqrt329, 1e-12);
  EXPECT_NEAR(gernert_predicted_value(3), (83.0 + 3.0 * kSqrt329) / 2.0, 1e-12);
  for (std::size_t k = 1; k <= 10; ++k) {
    EXPECT_NEAR(gernert_quadratic(k, gernert_quotient_root(k)), 0.0, 1e-9 * static_cast<double>(k * k));
    EXPECT_NEAR(gernert_predicted_value(k), gernert_quotient_root(k) + 8.0 * static_cast<double>(k) - 1.0, 1e-12);
  }
  EXPECT_NEAR(gernert_rate(), (29.0 + kSqrt329) / 42.0, 1e-15);
  EXPECT_NEAR(gernert_rate(), 1.1223418368, 1e-10);
  EXPECT_LT(gernert_rate(), 1.1223541);
}

TEST(Gernert, Bounds) {
  EXPECT_NEAR(lower_bound(42), 4.0 + kSqrt329, 1e-12);
  EXPECT_EQ(lower_bound(0), -25.0);
  EXPECT_NEAR(upper_bound(21), 24.2487113, 1e-7);
  EXPECT_EQ(upper_bound(0), 0.0);
}

TEST(Gernert, RatioIncreasesToRate) {
  double prev = 0.0;
  for (std::size_t k = 1; k <= 20; ++k) {
    const double ratio = gernert_predicted_value(k) / (21.0 * static_cast<double>(k));
    EXPECT_NEAR(ratio, gernert_rate() - 2.0 / (21.0 * static_cast<double>(k)), 1e-12);
    EXPECT_GT(ratio, prev);
    EXPECT_LT(ratio, 1.1223541);
    prev = ratio;
  }
}

TEST(Gernert, Certificates) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const GernertCertificate c = gernert_certificate(k);
    EXPECT_TRUE(c.report.passed) << k;
    EXPECT_TRUE(c.sound);
    EXPECT_TRUE(c.mu2_equals_bound);
    EXPECT_NEAR(c.value, gernert_predicted_value(k), 1e-7 * static_cast<double>(k));
    EXPECT_GT(c.value, 21.0 * static_cast<double>(k));
    EXPECT_EQ(from_graph6(c.witness_graph6), gernert_graph(GernertParams(k)));
  }
  EXPECT_NEAR(gernert_certificate(3).value, 68.708, 1e-3);
  const GernertCertificate padded = gernert_certificate(GernertParams(1, 30));
  EXPECT_NEAR(padded.value, gernert_predicted_value(1), 1e-7);
  EXPECT_THROW(gernert_certificate(GernertParams(1, 30), 29), BudgetExceeded);
}

TEST(Gernert, CertificateJson) {
  const auto j = to_json(gernert_certificate(1));
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["n"], 21);
  EXPECT_TRUE(j["exceeds_order"].get<bool>());
  EXPECT_TRUE(j["certificate"]["passed"].get<bool>());
}
