#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json_io.hpp"

#include "invform/corpus.hpp"
#include "invform/oracle.hpp"

namespace invform::cli {

struct SelftestOptions {
  std::uint64_t seed = CorpusOptions{}.seed;
  std::size_t count = 500;
  unsigned jobs = 1;
  unsigned trials = OracleOptions{}.trials;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  json details = json::object();
};

/// Per-instance outcome on the random corpus; index 0 is symmetric, 1 skew.
struct InstanceRecord {
  std::size_t index = 0;
  Setting setting = Setting::Invariant;
  std::string field;
  std::string recipe;
  std::size_t n = 0;
  bool decision[2] = {false, false};
  bool oracle[2] = {false, false};
  std::size_t space_dim[2] = {0, 0};
  /// -1 not attempted (no form), 0 failed, 1 verified.
  int witness[2] = {-1, -1};
  std::string routes[2];
  /// -1 ineligible, 0 failed, 1 verified.
  int converter[2] = {-1, -1};
  std::string error;
};

[[nodiscard]] std::vector<InstanceRecord> run_corpus(const SelftestOptions& options);

[[nodiscard]] CriterionResult criterion_oracle_agreement(const std::vector<InstanceRecord>& records);
[[nodiscard]] CriterionResult criterion_witness_completeness(const std::vector<InstanceRecord>& records);
[[nodiscard]] CriterionResult criterion_parity_cases();
[[nodiscard]] CriterionResult criterion_dual_algebra(std::uint64_t seed);
[[nodiscard]] CriterionResult criterion_level_bounds(std::uint64_t seed);
[[nodiscard]] CriterionResult criterion_orthogonal_decomposition(std::uint64_t seed);
[[nodiscard]] CriterionResult criterion_reality(std::uint64_t seed);
[[nodiscard]] CriterionResult criterion_converter(const std::vector<InstanceRecord>& records);

struct SelftestReport {
  std::vector<CriterionResult> criteria;
  std::vector<InstanceRecord> records;
  [[nodiscard]] bool passed() const;
};

[[nodiscard]] SelftestReport run_selftest(const SelftestOptions& options);
[[nodiscard]] json selftest_json(const SelftestReport& report, const SelftestOptions& options);

}  // namespace invform::cli
