#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "splitcomp/biject.hpp"
#include "splitcomp/enumerate.hpp"

namespace splitcomp {

struct SuiteFailure {
  /// Hex key of the offending input, plus its serialization for replay.
  std::string input;
  std::string object;
  std::string expectation;
  std::string observed;
};

struct SuiteResult {
  std::string suite;
  nlohmann::ordered_json params;
  std::size_t checked = 0;
  std::vector<SuiteFailure> failures;
  /// Informational suites never fail.
  bool asserting = true;
  /// Extra suite-specific output (count table, agreement figures).
  nlohmann::ordered_json details;

  bool passed() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  int workers = 1;
};

/// inverse(forward(o)) and forward(inverse(o)) against the input key, over the
/// full censuses at 0..max_n. The shift pair pairs XY(n) with unbalanced
/// split(n+1).
SuiteResult verify_roundtrip(const MapPair& pair, int max_n, const VerifyOptions& opts = {});
/// Balance of every object equals the balance of its image, both directions.
SuiteResult verify_balance(const MapPair& pair, int max_n, const VerifyOptions& opts = {});
/// For n = 1..max_n: compile-down is a key-level bijection from unbalanced
/// objects on n points onto all objects on fewer points, compile-up inverts it.
SuiteResult verify_compilation(ClassTag tag, int max_n, const VerifyOptions& opts = {});
/// Every admissible choice sequence yields the default output key.
SuiteResult verify_choice_independence(MapId map, int max_n, const VerifyOptions& opts = {});
/// Count table against the embedded sequence and across classes.
SuiteResult verify_counts(int max_n, const VerifyOptions& opts = {});
/// split->cover->poset versus split->poset; reported only.
SuiteResult verify_triangle(int max_n, const VerifyOptions& opts = {});

/// The unbalanced split counts for n = 1..8.
inline constexpr std::size_t kUnbalancedSplitSequence[] = {1, 2, 4, 8, 17, 38, 94, 258};

/// Suite names: roundtrip, balance, compilation, choice, counts, triangle,
/// and "all" for every asserting suite. UsageError for anything else.
std::vector<SuiteResult> run_suite(std::string_view name, int max_n, const VerifyOptions& opts = {});

}  // namespace splitcomp
