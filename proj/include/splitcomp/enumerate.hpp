#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "splitcomp/canon.hpp"
#include "splitcomp/types.hpp"

namespace splitcomp {

/// Largest order the enumerators accept.
inline constexpr int kMaxEnumerationOrder = 8;
/// Largest orders the naive oracle accepts.
inline constexpr int kMaxOracleOrderSmall = 5;  // split graphs, covers
inline constexpr int kMaxOracleOrderLarge = 6;  // XY-graphs, posets

struct CensusEntry {
  CanonicalKey key;
  /// Canonically labeled representative.
  Object object;
  /// Whether the class defines balance for this object (false only for
  /// XY-graphs with Y-isolates).
  bool in_domain = true;
  Balance balance;
};

struct Census {
  ClassTag class_tag = ClassTag::split;
  int n = 0;
  /// Sorted by key, keys distinct.
  std::vector<CensusEntry> entries;

  std::size_t size() const { return entries.size(); }
  std::size_t balanced() const;
  std::size_t unbalanced() const;
  std::size_t out_of_domain() const;
  std::vector<CanonicalKey> keys() const;
  /// "# class=<tag> n=<n> count=<c> balanced=<b> unbalanced=<u>"
  std::string header() const;
};

struct EnumerateOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  int workers = 1;
};

Census enumerate_xy(int n, bool require_no_y_isolates, const EnumerateOptions& opts = {});
Census enumerate_split(int n, const EnumerateOptions& opts = {});
Census enumerate_cover(int n, const EnumerateOptions& opts = {});
Census enumerate_poset(int n, const EnumerateOptions& opts = {});
/// XY-graphs are enumerated without the Y-isolate filter.
Census enumerate(ClassTag tag, int n, const EnumerateOptions& opts = {});
/// As `enumerate`, but XY-graphs are restricted to those without Y-isolates,
/// the domain the pairwise bijections act on.
Census enumerate_domain(ClassTag tag, int n, const EnumerateOptions& opts = {});

/// Streams the census in generation order without materializing it. The
/// callback sees each unlabeled object exactly once; returning false stops
/// the walk. Single-threaded.
void visit(ClassTag tag, int n, bool require_no_y_isolates, const std::function<bool(const CensusEntry&)>& fn);

/// Generate-all-labeled, canonicalize, deduplicate, classify natively.
/// Shares nothing with the orderly generator except canonical forms.
Census naive_oracle(ClassTag tag, int n);
int naive_oracle_bound(ClassTag tag);

struct CountRow {
  int n = 0;
  /// Indexed by class: split, cover, xy (no Y-isolates), poset.
  struct ClassCounts {
    std::size_t total = 0;
    std::size_t balanced = 0;
    std::size_t unbalanced = 0;
  };
  ClassCounts split, cover, xy, poset;
  /// XY-graphs with Y-isolates allowed.
  std::size_t xy_all = 0;
  /// Sum of split totals over t < n.
  std::size_t cumulative = 0;
};

std::vector<CountRow> count_table(int max_n, const EnumerateOptions& opts = {});

}  // namespace splitcomp
