#pragma once

#include <cstdint>
#include <string_view>

// Process-wide hit counters for the classification and bijection operations.
// The test harness resets them, runs the verification suites and checks that
// every operation was reached.
namespace splitcomp::coverage {

enum class Op : int {
  is_split,
  omega_alpha,
  s_max_partition,
  k_max_partition,
  trichotomy,
  swing_vertices,
  balance_split,
  loyal_vertices_split,
  loyal_elements,
  is_minimal,
  balance_cover,
  xy_isolates_universals,
  balance_xy,
  poset_support,
  balance_poset,
  split_to_cover,
  cover_to_split,
  split_to_xy,
  xy_to_split,
  split_to_poset,
  poset_to_split,
  xy_to_unbalanced_split,
  unbalanced_split_to_xy,
  cover_to_poset,
  poset_to_cover,
  xy_to_cover,
  cover_to_xy,
  xy_to_poset,
  poset_to_xy,
  compile_split_down,
  compile_split_up,
  compile_cover_down,
  compile_cover_up,
  compile_xy_down,
  compile_xy_up,
  compile_poset_down,
  compile_poset_up,
  count_
};

void touch(Op op);
std::uint64_t hits(Op op);
void reset();
std::string_view name(Op op);

}  // namespace splitcomp::coverage
