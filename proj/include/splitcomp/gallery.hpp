#pragma once

#include <optional>
#include <string>
#include <vector>

#include "splitcomp/enumerate.hpp"

namespace splitcomp {

/// One unlabeled split graph on n vertices and its images in the other
/// classes. `shift_xy` is the (n-1)-vertex XY-graph of an unbalanced row.
struct GalleryRow {
  CensusEntry split;
  CensusEntry cover;
  CensusEntry poset;
  CensusEntry xy;
  std::optional<CensusEntry> shift_xy;
};

/// Unbalanced rows first, then by split key.
std::vector<GalleryRow> gallery(int n, const EnumerateOptions& opts = {});

/// Tab-separated listing: a "#" header line, a "#" column line, one row per
/// split graph.
std::string render_gallery(int n, const std::vector<GalleryRow>& rows);

}  // namespace splitcomp
