#include "splitcomp/canon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "splitcomp/errors.hpp"

namespace splitcomp {

namespace {

void append_u16(std::vector<std::uint8_t>& out, int v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

// MSB-first packing; lexicographic order of packed bytes equals lexicographic
// order of the bit strings when lengths agree.
class BitPacker {
 public:
  explicit BitPacker(std::vector<std::uint8_t>& out) : out_(out) {}
  void push(bool b) {
    acc_ = static_cast<std::uint8_t>(acc_ << 1 | (b ? 1 : 0));
    if (++used_ == 8) flush_byte();
  }
  void finish() {
    if (used_ > 0) {
      acc_ = static_cast<std::uint8_t>(acc_ << (8 - used_));
      flush_byte();
    }
  }

 private:
  void flush_byte() {
    out_.push_back(acc_);
    acc_ = 0;
    used_ = 0;
  }
  std::vector<std::uint8_t>& out_;
  std::uint8_t acc_ = 0;
  int used_ = 0;
};

// ------------------------------------------------------------ matrix kernel

// Columns are tracked as masks in the input's row-word layout. For a fixed row
// order the lexicographically least column order is obtained by refining an
// ordered partition of the columns: each placed row splits every cell into its
// 0-columns followed by its 1-columns. The search branches over which row to
// place next, keeping only rows that realise the least possible next output
// row, and prunes against the best complete matrix found so far.
class MatrixSearch {
 public:
  explicit MatrixSearch(const BitMatrix& m) : m_(m), rows_(m.rows()), cols_(m.cols()) {
    cur_.resize(rows_);
    cur_rows_.resize(rows_);
    used_.assign(rows_, false);
  }

  MatrixCanonForm run() {
    std::vector<std::uint64_t> cells;
    if (cols_ > 0) cells.push_back(low_bits(cols_));
    search(0, cells, false);

    MatrixCanonForm out;
    out.bits = BitMatrix(rows_, cols_);
    for (int r = 0; r < rows_; ++r) out.bits.set_row_word(r, best_[r]);
    out.row_perm.assign(rows_, 0);
    for (int d = 0; d < rows_; ++d) out.row_perm[best_rows_[d]] = d;
    out.col_perm.assign(cols_, 0);
    int pos = 0;
    for (std::uint64_t cell : best_cells_) {
      // Columns with higher input word bits come first in input order.
      for (int c = 0; c < cols_; ++c)
        if ((cell >> (cols_ - 1 - c)) & 1U) out.col_perm[c] = pos++;
    }
    return out;
  }

 private:
  std::uint64_t output_row(std::uint64_t word, const std::vector<std::uint64_t>& cells) const {
    std::uint64_t out = 0;
    int pos = 0;
    for (std::uint64_t cell : cells) {
      const int size = count(cell);
      const int ones = count(word & cell);
      for (int q = pos + size - ones; q < pos + size; ++q) out |= std::uint64_t{1} << (cols_ - 1 - q);
      pos += size;
    }
    return out;
  }

  void search(int depth, const std::vector<std::uint64_t>& cells, bool less) {
    if (depth == rows_) {
      if (!have_best_ || less) {
        best_ = cur_;
        best_rows_ = cur_rows_;
        best_cells_ = cells;
        have_best_ = true;
        ++version_;
      }
      return;
    }
    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (int r = 0; r < rows_; ++r)
      if (!used_[r]) least = std::min(least, output_row(m_.row_word(r), cells));
    if (have_best_ && !less && least > best_[depth]) return;
    bool child_less = less || (have_best_ && least < best_[depth]);

    std::vector<std::uint64_t> tried;
    std::vector<std::uint64_t> refined;
    for (int r = 0; r < rows_; ++r) {
      if (used_[r]) continue;
      const std::uint64_t word = m_.row_word(r);
      if (output_row(word, cells) != least) continue;
      if (std::find(tried.begin(), tried.end(), word) != tried.end()) continue;
      tried.push_back(word);

      refined.clear();
      for (std::uint64_t cell : cells) {
        if (const std::uint64_t zeros = cell & ~word) refined.push_back(zeros);
        if (const std::uint64_t ones = cell & word) refined.push_back(ones);
      }
      cur_[depth] = least;
      cur_rows_[depth] = r;
      used_[r] = true;
      const unsigned before = version_;
      search(depth + 1, refined, child_less);
      used_[r] = false;
      if (version_ != before) child_less = false;
    }
  }

  const BitMatrix& m_;
  int rows_;
  int cols_;
  std::vector<std::uint64_t> cur_;
  std::vector<int> cur_rows_;
  std::vector<bool> used_;
  bool have_best_ = false;
  unsigned version_ = 0;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_rows_;
  std::vector<std::uint64_t> best_cells_;
};

CanonicalKey matrix_key(ClassTag tag, int a, int b, const BitMatrix& canonical) {
  CanonicalKey k;
  k.bytes.push_back(static_cast<std::uint8_t>(tag));
  append_u16(k.bytes, a);
  append_u16(k.bytes, b);
  BitPacker pack(k.bytes);
  for (int r = 0; r < canonical.rows(); ++r)
    for (int c = 0; c < canonical.cols(); ++c) pack.push(canonical.get(r, c));
  pack.finish();
  return k;
}

// ------------------------------------------------------------- graph kernel

using Cells = std::vector<VertexSet>;

// Splits cells by neighbour counts into other cells until the ordered
// partition is equitable. Subcells are ordered by increasing count, which is a
// labeling-invariant rule.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const VertexSet splitter = cells[w];
      for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
        if (count(cells[c]) == 1) continue;
        const auto vs = members(cells[c]);
        std::vector<std::pair<int, int>> counted;
        counted.reserve(vs.size());
        for (int v : vs) counted.emplace_back(count(g.neighbors(v) & splitter), v);
        std::sort(counted.begin(), counted.end());
        if (counted.front().first == counted.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < counted.size(); ++i) {
          if (i == 0 || counted[i].first != counted[i - 1].first) pieces.push_back(0);
          pieces.back() |= bit(counted[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
      }
    }
  }
}

std::vector<std::uint8_t> certificate(const Graph& g, const std::vector<int>& lab) {
  std::vector<std::uint8_t> out;
  BitPacker pack(out);
  const int n = g.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pack.push(g.adjacent(lab[i], lab[j]));
  pack.finish();
  return out;
}

class GraphSearch {
 public:
  explicit GraphSearch(const Graph& g) : g_(g) {}

  std::pair<std::vector<std::uint8_t>, std::vector<int>> run() {
    Cells cells;
    if (g_.order() > 0) cells.push_back(g_.all());
    refine(g_, cells);
    search(cells);
    return {best_cert_, best_lab_};
  }

 private:
  bool twins(int u, int v) const {
    return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u));
  }

  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return count(c) > 1; });
    if (target == cells.end()) {
      std::vector<int> lab;
      lab.reserve(cells.size());
      for (VertexSet c : cells) lab.push_back(std::countr_zero(c));
      auto cert = certificate(g_, lab);
      if (!have_best_ || cert < best_cert_) {
        have_best_ = true;
        best_cert_ = std::move(cert);
        best_lab_ = std::move(lab);
      }
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> tried;
    for (int v : members(*target)) {
      // Swapping twins is an automorphism fixing the current partition, so
      // their subtrees yield identical certificates.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
      next.push_back(bit(v));
      next.push_back(cells[index] & ~bit(v));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
      refine(g_, next);
      search(next);
    }
  }

  const Graph& g_;
  bool have_best_ = false;
  std::vector<std::uint8_t> best_cert_;
  std::vector<int> best_lab_;
};

}  // namespace

MatrixCanonForm canon_matrix(const BitMatrix& m) {
  MatrixCanonForm form = MatrixSearch(m).run();
  if (form.bits == m) {
    std::iota(form.row_perm.begin(), form.row_perm.end(), 0);
    std::iota(form.col_perm.begin(), form.col_perm.end(), 0);
  }
  return form;
}

GraphCanonForm canon_graph(const Graph& g) {
  const int n = g.order();
  auto [cert, lab] = GraphSearch(g).run();
  GraphCanonForm out;
  out.perm.assign(n, 0);
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (certificate(g, identity) == cert) {
    out.perm = identity;
  } else {
    for (int pos = 0; pos < n; ++pos) out.perm[lab[pos]] = pos;
  }
  out.graph = g.relabeled(out.perm);
  out.key.bytes.push_back(static_cast<std::uint8_t>(ClassTag::split));
  append_u16(out.key.bytes, n);
  out.key.bytes.insert(out.key.bytes.end(), cert.begin(), cert.end());
  return out;
}

CanonicalKey canon_xy(const XYGraph& g) {
  return matrix_key(ClassTag::xy, g.nx(), g.ny(), canon_matrix(g.incidence()).bits);
}

CanonicalKey canon_cover(const SetCover& c) {
  return matrix_key(ClassTag::cover, c.ground_size(), c.set_count(), canon_matrix(c.incidence()).bits);
}

CanonicalKey canon_poset(const BipartitePoset& p) {
  return matrix_key(ClassTag::poset, p.n0(), p.n1(), canon_matrix(p.relation()).bits);
}

CanonicalKey canon_key(const Object& o) {
  switch (o.index()) {
    case 0: return canon_graph(std::get<Graph>(o)).key;
    case 1: return canon_cover(std::get<SetCover>(o));
    case 2: return canon_xy(std::get<XYGraph>(o));
    default: return canon_poset(std::get<BipartitePoset>(o));
  }
}

Graph canonical_form(const Graph& g) { return canon_graph(g).graph; }

SetCover canonical_form(const SetCover& c) {
  return SetCover::from_incidence(canon_matrix(c.incidence()).bits);
}

XYGraph canonical_form(const XYGraph& g) { return XYGraph(canon_matrix(g.incidence()).bits); }

BipartitePoset canonical_form(const BipartitePoset& p) {
  return BipartitePoset(canon_matrix(p.relation()).bits);
}

Object canonical_form(const Object& o) {
  return std::visit([](const auto& v) -> Object { return canonical_form(v); }, o);
}

Canonical canonicalize(const Object& o) {
  if (const auto* g = std::get_if<Graph>(&o)) {
    auto form = canon_graph(*g);
    return {std::move(form.graph), std::move(form.key)};
  }
  if (const auto* c = std::get_if<SetCover>(&o)) {
    auto bits = canon_matrix(c->incidence()).bits;
    auto key = matrix_key(ClassTag::cover, c->ground_size(), c->set_count(), bits);
    return {SetCover::from_incidence(bits), std::move(key)};
  }
  if (const auto* x = std::get_if<XYGraph>(&o)) {
    auto bits = canon_matrix(x->incidence()).bits;
    auto key = matrix_key(ClassTag::xy, x->nx(), x->ny(), bits);
    return {XYGraph(std::move(bits)), std::move(key)};
  }
  const auto& p = std::get<BipartitePoset>(o);
  auto bits = canon_matrix(p.relation()).bits;
  auto key = matrix_key(ClassTag::poset, p.n0(), p.n1(), bits);
  return {BipartitePoset(std::move(bits)), std::move(key)};
}

bool is_isomorphic(const Object& a, const Object& b) {
  if (a.index() != b.index())
    throw UsageError(std::string("is_isomorphic: class mismatch (") + std::string(to_string(class_of(a))) + " vs " +
                     std::string(to_string(class_of(b))) + ")");
  return canon_key(a) == canon_key(b);
}

}  // namespace splitcomp
