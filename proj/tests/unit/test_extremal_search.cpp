#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lincomb/constructions.hpp"
#include "lincomb/errors.hpp"
#include "lincomb/extremal_search.hpp"
#include "lincomb/graph_io.hpp"

using namespace lincomb;

namespace {

const LinearForm kTop2 = LinearForm::from_parts({1, 1});
const LinearForm kTop1 = LinearForm::from_parts({1});

// max mu1 + mu2 over all labeled graphs, from a numpy brute force
// (numpy.linalg.eigvalsh over every adjacency mask).
constexpr double kMaxTop2[] = {0.0, 0.0, 0.0, 1.4142135623730954, 2.5615528128088316,
                               3.6813306436049795, 4.828427124746192, 6.0000000000000036};

}  // namespace

TEST(LabeledGraphs, MaskRoundTrip) {
  EXPECT_EQ(pair_count(0), 0u);
  EXPECT_EQ(pair_count(1), 0u);
  EXPECT_EQ(pair_count(7), 21u);
  EXPECT_EQ(labeled_graph(3, 0b111), complete(3));
  EXPECT_EQ(labeled_graph(3, 0b001), Graph::from_edges(3, {{0, 1}}));
  EXPECT_EQ(labeled_graph(3, 0b100), Graph::from_edges(3, {{1, 2}}));
  for (std::uint64_t m = 0; m < 64; ++m) EXPECT_EQ(labeled_mask(labeled_graph(4, m)), m);
}

TEST(Exhaustive, MatchesBruteForceOracle) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const ExtremalRecord r = exhaustive(n, kTop2, FamilyPredicate::all());
    EXPECT_NEAR(r.value, kMaxTop2[n], 1e-9) << n;
    EXPECT_LE(r.value, static_cast<double>(n) + 1e-9);
    EXPECT_EQ(r.evaluations, std::uint64_t{1} << pair_count(n));
    EXPECT_NO_THROW(validate_record(r));
  }
}

TEST(Exhaustive, ClosedFormsAndWitnesses) {
  const ExtremalRecord four = exhaustive(4, kTop2, FamilyPredicate::all());
  EXPECT_NEAR(four.value, (1.0 + std::sqrt(17.0)) / 2.0, 1e-9);
  EXPECT_EQ(degree_multiset(four.witness), (std::vector<std::size_t>{2, 2, 3, 3}));
  const ExtremalRecord two = exhaustive(2, kTop1, FamilyPredicate::all());
  EXPECT_NEAR(two.value, 1.0, 1e-12);
  EXPECT_EQ(two.witness, complete(2));
  for (std::size_t n = 2; n <= 6; ++n) {
    const ExtremalRecord r = exhaustive(n, kTop1, FamilyPredicate::all());
    EXPECT_NEAR(r.phi(), (static_cast<double>(n) - 1.0) / static_cast<double>(n), 1e-9);
    EXPECT_EQ(r.witness, complete(n));
  }
}

TEST(Exhaustive, ParallelEqualsSerial) {
  for (const auto& p : {FamilyPredicate::all(), FamilyPredicate::kr_free(3), FamilyPredicate::r_partite(2)}) {
    const ExtremalRecord a = exhaustive(6, kTop2, p);
    const ExtremalRecord b = exhaustive_serial(6, kTop2, p);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.evaluations, b.evaluations);
  }
}

TEST(Exhaustive, FamiliesRestrictWitnesses) {
  const ExtremalRecord r = exhaustive(6, kTop1, FamilyPredicate::kr_free(3));
  EXPECT_TRUE(is_kr_free(r.witness, 3));
  EXPECT_NEAR(r.value, 3.0, 1e-9);  // K_{3,3}
}

TEST(Exhaustive, Limits) {
  EXPECT_THROW(exhaustive(8, kTop2, FamilyPredicate::all()), BudgetExceeded);
  EXPECT_THROW(exhaustive(1, kTop2, FamilyPredicate::all()), OrderTooSmall);
}

TEST(Stochastic, MatchesExhaustiveOnSmallOrders) {
  const double best = exhaustive(4, kTop2, FamilyPredicate::all()).value;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    StochasticOptions o;
    o.seed = seed;
    o.restarts = 4;
    EXPECT_NEAR(stochastic(4, kTop2, FamilyPredicate::all(), o).value, best, 1e-8) << seed;
  }
}

TEST(Stochastic, KeepsFamilyMembership) {
  StochasticOptions o;
  o.seed = 3;
  const ExtremalRecord r = stochastic(10, LinearForm::from_parts({1}, {1}), FamilyPredicate::kr_free(3), o);
  EXPECT_TRUE(is_kr_free(r.witness, 3));
  EXPECT_NO_THROW(validate_record(r));
}

TEST(Stochastic, ReachesAboveOrderAt21) {
  StochasticOptions o;
  o.seed = 1;
  o.restarts = 8;
  const ExtremalRecord r = stochastic(21, kTop2, FamilyPredicate::all(), o);
  EXPECT_GT(r.value, 21.0);
  EXPECT_EQ(r.method, SearchMethod::Stochastic);
}

TEST(Stochastic, Deterministic) {
  StochasticOptions o;
  o.seed = 77;
  o.restarts = 3;
  const auto a = to_json(stochastic(12, kTop2, FamilyPredicate::all(), o)).dump();
  const auto b = to_json(stochastic(12, kTop2, FamilyPredicate::all(), o)).dump();
  EXPECT_EQ(a, b);
  o.seed = 78;
  EXPECT_NE(to_json(stochastic(12, kTop2, FamilyPredicate::all(), o))["seed"], 77);
}

TEST(Stochastic, RejectsBadInitialGraph) {
  StochasticOptions o;
  o.initial = complete(5);
  EXPECT_THROW(stochastic(5, kTop2, FamilyPredicate::kr_free(3), o), std::invalid_argument);
  o.initial = complete(4);
  EXPECT_THROW(stochastic(5, kTop2, FamilyPredicate::all(), o), std::invalid_argument);
}

TEST(HillClimb, AcceptsOnlyImprovements) {
  Rng rng = SeedStream(4).engine();
  const ClimbResult r = hill_climb(empty(9), kTop2, FamilyPredicate::all(), rng, 1000);
  ASSERT_GE(r.accepted_values.size(), 2u);
  for (std::size_t i = 1; i < r.accepted_values.size(); ++i) {
    EXPECT_GT(r.accepted_values[i], r.accepted_values[i - 1] + kImprovementThreshold);
  }
  EXPECT_EQ(r.value, r.accepted_values.back());
  Rng again = SeedStream(4).engine();
  const ClimbResult capped = hill_climb(empty(9), kTop2, FamilyPredicate::all(), again, 2);
  EXPECT_EQ(capped.accepted_values.size(), 3u);
  EXPECT_THROW(hill_climb(complete(3), kTop2, FamilyPredicate::kr_free(3), rng, 5), std::invalid_argument);
}

TEST(SampleMember, AllFamilies) {
  Rng rng = SeedStream(5).engine();
  for (const auto& p : {FamilyPredicate::all(), FamilyPredicate::kr_free(3), FamilyPredicate::kr_free(4),
                        FamilyPredicate::r_partite(2), FamilyPredicate::r_partite(3)}) {
    for (std::size_t n : {1, 5, 20, 40}) {
      const Graph g = sample_member(n, p, rng);
      EXPECT_EQ(g.order(), n);
      EXPECT_TRUE(member(p, g)) << p.name();
    }
  }
}

TEST(PhiTable, SmallOrdersStayBelowOne) {
  PhiPolicy policy;
  const auto rows = phi_table(kTop2, FamilyPredicate::all(), {3, 4, 5, 6, 7}, policy);
  ASSERT_EQ(rows.size(), 5u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.method, SearchMethod::Exhaustive);
    EXPECT_LE(r.phi(), 1.0 + 1e-9);
  }
  EXPECT_THROW(phi_table(kTop2, FamilyPredicate::all(), {}, policy), std::invalid_argument);
}

TEST(PhiTable, GernertSeededOrders) {
  PhiPolicy policy;
  policy.seed = 1;
  policy.restarts = 1;
  policy.steps = 2;
  policy.seed_with_gernert = true;
  const auto rows = phi_table(kTop2, FamilyPredicate::all(), {21, 42, 63}, policy);
  // closed-form ratios rounded to four places
  const double expect[] = {1.0271, 1.0747, 1.0906};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    EXPECT_GE(rows[i].phi(), gernert_rate() - 2.0 / (21.0 * k) - 1e-9);
    EXPECT_NEAR(rows[i].phi(), expect[i], 5e-5);
  }
}

TEST(Records, ValidationAndCsv) {
  ExtremalRecord r = exhaustive(3, kTop2, FamilyPredicate::all());
  std::ostringstream csv;
  write_phi_csv(csv, {r});
  std::string header;
  std::istringstream in(csv.str());
  std::getline(in, header);
  EXPECT_EQ(header, "n,value,phi,method,seed,witness_graph6");
  std::string row;
  std::getline(in, row);
  EXPECT_EQ(row.substr(0, 2), "3,");
  EXPECT_NE(row.find(",exhaustive,0," + to_graph6(r.witness)), std::string::npos);

  r.value += 1e-3;
  EXPECT_THROW(validate_record(r), std::logic_error);
  r = exhaustive(3, kTop2, FamilyPredicate::all());
  r.family = FamilyPredicate::r_partite(1);
  EXPECT_THROW(validate_record(r), std::logic_error);
}
