#include "splitcomp/coverage.hpp"

#include <array>
#include <atomic>

namespace splitcomp::coverage {

namespace {

constexpr auto kOps = static_cast<std::size_t>(Op::count_);

std::array<std::atomic<std::uint64_t>, kOps>& counters() {
  static std::array<std::atomic<std::uint64_t>, kOps> c{};
  return c;
}

constexpr std::array<std::string_view, kOps> kNames = {
    "is_split",           "omega_alpha",          "s_max_partition",        "k_max_partition",
    "trichotomy",         "swing_vertices",       "balance_split",          "loyal_vertices_split",
    "loyal_elements",     "is_minimal",           "balance_cover",          "xy_isolates_universals",
    "balance_xy",         "poset_support",        "balance_poset",          "split_to_cover",
    "cover_to_split",     "split_to_xy",          "xy_to_split",            "split_to_poset",
    "poset_to_split",     "xy_to_unbalanced_split", "unbalanced_split_to_xy", "cover_to_poset",
    "poset_to_cover",     "xy_to_cover",          "cover_to_xy",            "xy_to_poset",
    "poset_to_xy",        "compile_split_down",   "compile_split_up",       "compile_cover_down",
    "compile_cover_up",   "compile_xy_down",      "compile_xy_up",          "compile_poset_down",
    "compile_poset_up",
};

}  // namespace

void touch(Op op) { counters()[static_cast<std::size_t>(op)].fetch_add(1, std::memory_order_relaxed); }

std::uint64_t hits(Op op) { return counters()[static_cast<std::size_t>(op)].load(std::memory_order_relaxed); }

void reset() {
  for (auto& c : counters()) c.store(0, std::memory_order_relaxed);
}

std::string_view name(Op op) { return kNames[static_cast<std::size_t>(op)]; }

}  // namespace splitcomp::coverage
