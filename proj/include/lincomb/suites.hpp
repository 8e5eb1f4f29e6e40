#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lincomb/constructions.hpp"
#include "lincomb/lemma_verify.hpp"

namespace lincomb {

/// Seeded batches of checks over random instances.
enum class Suite {
  BlowupIndependent,
  BlowupClique,
  BlowupBounds,
  VertexDeletion,
  SubsetDeletion,
  Interlacing,
  Amplify,
  Prop1,
  Gernert,
};

std::string suite_name(Suite s);
/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

/// Instances per suite when SuiteOptions::trials is 0.
std::size_t default_trials(Suite s);
/// Largest graph order drawn when SuiteOptions::max_order is 0.
std::size_t default_max_order(Suite s);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 0;     // 0: default_trials
  std::size_t max_order = 0;  // 0: default_max_order
  bool parallel = true;
};

using VerifyRecord = std::variant<CheckReport, AmplificationReport, GernertCertificate>;

/// Runs one suite. Instance i draws from SeedStream(seed).child(suite).child(i),
/// so the output depends only on the options. Records come back in instance
/// order. The gernert suite ignores trials and max_order and certifies k = 1..5.
/// The interlacing suite emits two records per instance: the interlacing report
/// and its cross-check against the vertex-deletion bounds on the same input.
std::vector<VerifyRecord> run_suite(Suite s, const SuiteOptions& opts);

bool record_passed(const VerifyRecord& r);
bool record_warning(const VerifyRecord& r);
nlohmann::ordered_json record_json(const VerifyRecord& r);

}  // namespace lincomb
