#include "splitcomp/types.hpp"

#include <algorithm>
#include <cassert>

#include "splitcomp/errors.hpp"

namespace splitcomp {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(count(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const int> ids) {
  VertexSet s = 0;
  for (int v : ids) s |= bit(v);
  return s;
}

std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::split: return "split";
    case ClassTag::cover: return "cover";
    case ClassTag::xy: return "xy";
    case ClassTag::poset: return "poset";
  }
  return "?";
}

ClassTag parse_class_tag(std::string_view name) {
  if (name == "split") return ClassTag::split;
  if (name == "cover") return ClassTag::cover;
  if (name == "xy") return ClassTag::xy;
  if (name == "poset") return ClassTag::poset;
  throw UsageError("unknown class '" + std::string(name) + "' (expected split|cover|xy|poset)");
}

std::string_view to_string(BalanceValue v) {
  return v == BalanceValue::balanced ? "balanced" : "unbalanced";
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows, 0) {
  if (rows < 0 || cols < 0 || cols > 64) throw ResourceError("matrix dimensions out of range");
}

void BitMatrix::set(int r, int c, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (cols_ - 1 - c);
  if (value)
    data_[r] |= mask;
  else
    data_[r] &= ~mask;
}

void BitMatrix::push_row(std::uint64_t word) {
  data_.push_back(word & low_bits(cols_));
  ++rows_;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r);
  return t;
}

BitMatrix BitMatrix::permuted(std::span<const int> row_perm, std::span<const int> col_perm) const {
  BitMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(row_perm[r], col_perm[c]);
  return out;
}

bool BitMatrix::column_empty(int c) const {
  const std::uint64_t mask = std::uint64_t{1} << (cols_ - 1 - c);
  return std::none_of(data_.begin(), data_.end(), [&](std::uint64_t w) { return (w & mask) != 0; });
}

std::string BitMatrix::bit_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
  return s;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), rows_(n, 0) {
  if (n < 0 || n > kMaxOrder) throw ResourceError("graph order must be in 0..64");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  g.make_clique(g.all());
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  g.rows_ = std::move(rows);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet r : rows_) twice += count(r);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : members(rows_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
  return out;
}

void Graph::add_edge(int u, int v) {
  assert(u != v);
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

void Graph::make_clique(VertexSet s) {
  for (int v : members(s)) rows_[v] |= s & ~bit(v);
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u)
    for (int v : members(rows_[u])) h.rows_[perm[u]] |= bit(perm[v]);
  return h;
}

// ----------------------------------------------------------------- SetCover

SetCover::SetCover(int ground_size, std::vector<std::vector<int>> sets)
    : ground_size_(ground_size), sets_(std::move(sets)) {
  if (ground_size < 0 || ground_size > kMaxOrder) throw ResourceError("ground set size must be in 0..64");
  for (auto& s : sets_) std::sort(s.begin(), s.end());
  std::sort(sets_.begin(), sets_.end());
}

BitMatrix SetCover::incidence() const {
  BitMatrix m(ground_size_, set_count());
  for (int j = 0; j < set_count(); ++j)
    for (int e : sets_[j])
      if (e >= 0 && e < ground_size_) m.set(e, j);
  return m;
}

SetCover SetCover::from_incidence(const BitMatrix& m) {
  std::vector<std::vector<int>> sets(m.cols());
  for (int e = 0; e < m.rows(); ++e)
    for (int j = 0; j < m.cols(); ++j)
      if (m.get(e, j)) sets[j].push_back(e);
  return SetCover(m.rows(), std::move(sets));
}

XYGraph::XYGraph(int nx, int ny) : m_(nx, ny) {}

BipartitePoset::BipartitePoset(int n0, int n1) : m_(n0, n1) {}

ClassTag class_of(const Object& o) {
  switch (o.index()) {
    case 0: return ClassTag::split;
    case 1: return ClassTag::cover;
    case 2: return ClassTag::xy;
    default: return ClassTag::poset;
  }
}

int order_of(const Object& o) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SetCover>)
          return v.ground_size();
        else
          return v.order();
      },
      o);
}

// ------------------------------------------------------------ CanonicalKey

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError(std::string("invalid hex digit '") + c + "'");
  };
  if (hex.size() % 2 != 0 || hex.empty()) throw ParseError("key hex must have even, nonzero length");
  CanonicalKey k;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    k.bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return k;
}

}  // namespace splitcomp
