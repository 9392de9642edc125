#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "splitcomp/canon.hpp"
#include "splitcomp/chooser.hpp"
#include "splitcomp/types.hpp"

namespace splitcomp {

/// Audit trail of one map application. Replaying `choices` on the canonically
/// labeled input reproduces the same labeled output.
struct MapReport {
  CanonicalKey input_key;
  CanonicalKey output_key;
  std::vector<Choice> choices;
};

template <class T>
struct Mapped {
  T object;
  MapReport report;
};

enum class MapId {
  split_to_cover,
  cover_to_split,
  split_to_xy,
  xy_to_split,
  split_to_poset,
  poset_to_split,
  xy_to_shift_split,
  shift_split_to_xy,
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
};

struct MapInfo {
  MapId id;
  std::string_view name;
  ClassTag from;
  ClassTag to;
  MapId inverse;
  /// Compilation up-maps take the order of the object they build.
  bool takes_target_order;
  bool has_choice_points;
};

std::span<const MapInfo> all_maps();
const MapInfo& map_info(MapId id);
/// Names look like "split->cover", "xy->split-shift", "split-shift->xy",
/// "compile-poset-down". UsageError for unknown names.
MapId parse_map_name(std::string_view name);

/// The seven bijection pairs (forward, inverse): six pairwise class bijections
/// plus the XY(n) -> unbalanced split(n+1) shift.
struct MapPair {
  std::string_view name;
  MapId forward;
  MapId inverse;
  bool balance_preserving;
};
std::span<const MapPair> bijection_pairs();
const MapPair& parse_pair_name(std::string_view name);

// Labeled constructions. Every "choose one"
// step goes through `ch`; vertex ids of the input are used as given.
namespace construct {

SetCover split_to_cover(const Graph& g, Chooser& ch);
Graph cover_to_split(const SetCover& c, Chooser& ch);
XYGraph split_to_xy(const Graph& g, Chooser& ch);
Graph xy_to_split(const XYGraph& h);
BipartitePoset split_to_poset(const Graph& g, Chooser& ch);
Graph poset_to_split(const BipartitePoset& p);
Graph xy_to_unbalanced_split(const XYGraph& g);
XYGraph unbalanced_split_to_xy(const Graph& h, Chooser& ch);
BipartitePoset cover_to_poset(const SetCover& c, Chooser& ch);
SetCover poset_to_cover(const BipartitePoset& p);
SetCover xy_to_cover(const XYGraph& g);
XYGraph cover_to_xy(const SetCover& c, Chooser& ch);
BipartitePoset xy_to_poset(const XYGraph& g);
XYGraph poset_to_xy(const BipartitePoset& p);

Graph compile_split_down(const Graph& g, Chooser& ch);
Graph compile_split_up(const Graph& h, int n, Chooser& ch);
SetCover compile_cover_down(const SetCover& c, Chooser& ch);
SetCover compile_cover_up(const SetCover& c, int n, Chooser& ch);
XYGraph compile_xy_down(const XYGraph& g, Chooser& ch);
XYGraph compile_xy_up(const XYGraph& h, int n);
BipartitePoset compile_poset_down(const BipartitePoset& p, Chooser& ch);
BipartitePoset compile_poset_up(const BipartitePoset& q, int n, Chooser& ch);

/// Dispatches on `id`; no canonicalization.
Object apply(MapId id, const Object& in, Chooser& ch, int target_order = -1);

}  // namespace construct

/// Canonically relabels the input, runs the construction with `ch`, and
/// returns the canonically labeled output with its report.
Mapped<Object> apply_map(MapId id, const Object& in, Chooser& ch, int target_order = -1);
/// Default choices: option 0 at every choice point of the canonical input.
Mapped<Object> apply_map(MapId id, const Object& in, int target_order = -1);

/// Output keys of every admissible combination of choices, in odometer order.
std::vector<CanonicalKey> sweep_choices(MapId id, const Object& in, int target_order = -1);

Mapped<SetCover> split_to_cover(const Graph& g);
Mapped<Graph> cover_to_split(const SetCover& c);
Mapped<XYGraph> split_to_xy(const Graph& g);
Mapped<Graph> xy_to_split(const XYGraph& h);
Mapped<BipartitePoset> split_to_poset(const Graph& g);
Mapped<Graph> poset_to_split(const BipartitePoset& p);
Mapped<Graph> xy_to_unbalanced_split(const XYGraph& g);
Mapped<XYGraph> unbalanced_split_to_xy(const Graph& h);
Mapped<BipartitePoset> cover_to_poset(const SetCover& c);
Mapped<SetCover> poset_to_cover(const BipartitePoset& p);
Mapped<SetCover> xy_to_cover(const XYGraph& g);
Mapped<XYGraph> cover_to_xy(const SetCover& c);
Mapped<BipartitePoset> xy_to_poset(const XYGraph& g);
Mapped<XYGraph> poset_to_xy(const BipartitePoset& p);
Mapped<Graph> compile_split_down(const Graph& g);
Mapped<Graph> compile_split_up(const Graph& h, int n);
Mapped<SetCover> compile_cover_down(const SetCover& c);
Mapped<SetCover> compile_cover_up(const SetCover& c, int n);
Mapped<XYGraph> compile_xy_down(const XYGraph& g);
Mapped<XYGraph> compile_xy_up(const XYGraph& h, int n);
Mapped<BipartitePoset> compile_poset_down(const BipartitePoset& p);
Mapped<BipartitePoset> compile_poset_up(const BipartitePoset& q, int n);

/// Compilation maps by class.
MapId compile_down_map(ClassTag tag);
MapId compile_up_map(ClassTag tag);

}  // namespace splitcomp
