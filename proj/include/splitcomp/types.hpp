#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace splitcomp {

/// Vertices are dense ids 0..n-1; sets of them are 64-bit masks.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int count(VertexSet s) { return std::popcount(s); }
inline bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
std::vector<int> members(VertexSet s);
VertexSet make_set(std::span<const int> ids);

enum class ClassTag : std::uint8_t { split = 1, cover = 2, xy = 3, poset = 4 };

std::string_view to_string(ClassTag tag);
/// Accepts "split", "cover", "xy", "poset"; throws UsageError otherwise.
ClassTag parse_class_tag(std::string_view name);

/// Dense 0/1 matrix with at most 64 columns. Row i is a 64-bit word in which
/// column 0 is the most significant of the `cols` used bits, so comparing row
/// words as integers is the same as comparing rows lexicographically.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (data_[r] >> (cols_ - 1 - c)) & 1U; }
  void set(int r, int c, bool value = true);
  std::uint64_t row_word(int r) const { return data_[r]; }
  void set_row_word(int r, std::uint64_t word) { data_[r] = word & low_bits(cols_); }
  /// Appends a row given as a row word.
  void push_row(std::uint64_t word);

  BitMatrix transposed() const;
  /// Entry (r, c) moves to (row_perm[r], col_perm[c]).
  BitMatrix permuted(std::span<const int> row_perm, std::span<const int> col_perm) const;
  bool column_empty(int c) const;
  bool row_full(int r) const { return data_[r] == low_bits(cols_); }
  /// Row-major bit string, e.g. "0110".
  std::string bit_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Simple undirected graph on vertices 0..n-1, n <= 64.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph complete(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return contains(rows_[u], v); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  int degree(int v) const { return count(rows_[v]); }
  VertexSet all() const { return low_bits(n_); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Connects every pair of distinct vertices in `s`.
  void make_clique(VertexSet s);

  /// Subgraph on `vertices`; vertices[i] becomes vertex i.
  Graph induced(std::span<const int> vertices) const;
  /// Vertex v becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  /// Raw adjacency rows, for validation of externally built values.
  static Graph from_rows(std::vector<VertexSet> rows);
  std::span<const VertexSet> rows() const { return rows_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Clique/stable bipartition of a split graph's vertex set.
struct KSPartition {
  VertexSet clique = 0;
  VertexSet stable = 0;

  friend bool operator==(const KSPartition&, const KSPartition&) = default;
};

/// Family of subsets of the ground set 0..ground_size-1. Each set is kept as a
/// sorted list and the family is kept in lexicographic order.
class SetCover {
 public:
  SetCover() = default;
  SetCover(int ground_size, std::vector<std::vector<int>> sets);

  int ground_size() const { return ground_size_; }
  int set_count() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  const std::vector<int>& set(int i) const { return sets_[i]; }

  /// Element x set incidence: rows are elements, columns are sets.
  BitMatrix incidence() const;
  static SetCover from_incidence(const BitMatrix& m);

  friend bool operator==(const SetCover&, const SetCover&) = default;

 private:
  int ground_size_ = 0;
  std::vector<std::vector<int>> sets_;
};

/// Bipartite graph with ordered blocks. X is the distinguished block; the
/// incidence matrix has one row per X-vertex and one column per Y-vertex.
class XYGraph {
 public:
  XYGraph() = default;
  XYGraph(int nx, int ny);
  explicit XYGraph(BitMatrix incidence) : m_(std::move(incidence)) {}

  int nx() const { return m_.rows(); }
  int ny() const { return m_.cols(); }
  int order() const { return nx() + ny(); }
  bool edge(int x, int y) const { return m_.get(x, y); }
  void add_edge(int x, int y) { m_.set(x, y); }
  const BitMatrix& incidence() const { return m_; }

  friend bool operator==(const XYGraph&, const XYGraph&) = default;

 private:
  BitMatrix m_;
};

/// Poset of height at most one, stored as the cover relation between its
/// height-0 points (rows) and height-1 points (columns).
class BipartitePoset {
 public:
  BipartitePoset() = default;
  BipartitePoset(int n0, int n1);
  explicit BipartitePoset(BitMatrix below) : m_(std::move(below)) {}

  int n0() const { return m_.rows(); }
  int n1() const { return m_.cols(); }
  int order() const { return n0() + n1(); }
  bool below(int low, int high) const { return m_.get(low, high); }
  void add_relation(int low, int high) { m_.set(low, high); }
  const BitMatrix& relation() const { return m_; }

  friend bool operator==(const BipartitePoset&, const BipartitePoset&) = default;

 private:
  BitMatrix m_;
};

using Object = std::variant<Graph, SetCover, XYGraph, BipartitePoset>;

ClassTag class_of(const Object& o);
/// Number of points (vertices, ground elements, poset points).
int order_of(const Object& o);

enum class BalanceValue { balanced, unbalanced };

/// Balance classification; `witness` names the structure that makes an object
/// unbalanced and is present exactly when it is.
struct Balance {
  BalanceValue value = BalanceValue::balanced;
  std::optional<int> witness;

  bool unbalanced() const { return value == BalanceValue::unbalanced; }
  static Balance balanced() { return {}; }
  static Balance unbalanced_at(int w) { return {BalanceValue::unbalanced, w}; }

  friend bool operator==(const Balance&, const Balance&) = default;
};

std::string_view to_string(BalanceValue v);

/// Identity of an unlabeled object: byte-equal keys <=> isomorphic objects of
/// the same class. The first byte is the class tag.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  ClassTag tag() const { return static_cast<ClassTag>(bytes.at(0)); }
  std::string hex() const;
  static CanonicalKey from_hex(std::string_view hex);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) { return a.bytes <=> b.bytes; }
};

}  // namespace splitcomp
