#include "splitcomp/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <json.hpp>

#include "splitcomp/errors.hpp"

namespace splitcomp {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

[[noreturn]] void schema_error(std::string_view cls, const std::string& what) {
  throw ValidationError(std::string(cls) + ": " + what);
}

int read_count(const json& j, const char* field, std::string_view cls) {
  auto it = j.find(field);
  if (it == j.end()) schema_error(cls, std::string("missing field \"") + field + "\"");
  if (!it->is_number_integer()) schema_error(cls, std::string("field \"") + field + "\" must be an integer");
  const auto v = it->get<long long>();
  if (v < 0 || v > kMaxOrder) schema_error(cls, std::string("field \"") + field + "\" out of range 0..64");
  return static_cast<int>(v);
}

const json& read_array(const json& j, const char* field, std::string_view cls) {
  auto it = j.find(field);
  if (it == j.end()) schema_error(cls, std::string("missing field \"") + field + "\"");
  if (!it->is_array()) schema_error(cls, std::string("field \"") + field + "\" must be an array");
  return *it;
}

std::vector<std::pair<int, int>> read_pairs(const json& arr, const char* field, std::string_view cls, int rows,
                                            int cols) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      schema_error(cls, std::string("entries of \"") + field + "\" must be [int,int] pairs");
    const auto a = p[0].get<long long>();
    const auto b = p[1].get<long long>();
    if (a < 0 || a >= rows || b < 0 || b >= cols)
      schema_error(cls, std::string("pair in \"") + field + "\" outside range: " +
                            pair_text(static_cast<int>(a), static_cast<int>(b)));
    out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  return out;
}

void reject_if_invalid(std::string_view cls, const std::vector<std::string>& violations) {
  if (violations.empty()) return;
  std::string msg;
  for (const auto& v : violations) msg += (msg.empty() ? "" : "; ") + v;
  schema_error(cls, msg);
}

ordered_json pairs_json(const BitMatrix& m) {
  ordered_json arr = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) arr.push_back({r, c});
  return arr;
}

}  // namespace

// ------------------------------------------------------------------ graph6

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: byte 0: empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte " + std::to_string(i) + ": character out of range 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxGraph6Order)
    throw ParseError("graph6: byte 0: header byte '~' (orders above 62) is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  if (text.size() < 1 + groups)
    throw ParseError("graph6: byte " + std::to_string(text.size()) + ": truncated bit field (expected " +
                     std::to_string(1 + groups) + " bytes)");
  if (text.size() > 1 + groups)
    throw ParseError("graph6: byte " + std::to_string(1 + groups) + ": trailing data after bit field");

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (groups > 0) {
    const int last = static_cast<unsigned char>(text[groups]) - kBias;
    const int pad = static_cast<int>(groups * 6 - bits);
    if ((last & ((1 << pad) - 1)) != 0)
      throw ParseError("graph6: byte " + std::to_string(groups) + ": nonzero padding bits");
  }
  return g;
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw ResourceError("graph6: unsupported size " + std::to_string(n) + " (at most 62 vertices)");
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

// -------------------------------------------------------------------- JSON

Object parse_object(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("json: byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("json: record must be an object");
  auto cls_it = j.find("class");
  if (cls_it == j.end() || !cls_it->is_string()) throw ValidationError("json: missing string field \"class\"");
  const std::string cls = cls_it->get<std::string>();

  if (cls == "cover") {
    const int n = read_count(j, "n", cls);
    std::vector<std::vector<int>> sets;
    for (const auto& s : read_array(j, "sets", cls)) {
      if (!s.is_array()) schema_error(cls, "each set must be an array of integers");
      std::vector<int> members_of;
      for (const auto& e : s) {
        if (!e.is_number_integer()) schema_error(cls, "set elements must be integers");
        const auto v = e.get<long long>();
        if (v < 0 || v >= n) schema_error(cls, "element " + std::to_string(v) + " outside ground set 0.." +
                                                   std::to_string(n - 1));
        members_of.push_back(static_cast<int>(v));
      }
      sets.push_back(std::move(members_of));
    }
    SetCover c(n, std::move(sets));
    reject_if_invalid(cls, validate(c));
    return c;
  }
  if (cls == "xy") {
    const int nx = read_count(j, "nx", cls);
    const int ny = read_count(j, "ny", cls);
    XYGraph g(nx, ny);
    for (auto [x, y] : read_pairs(read_array(j, "edges", cls), "edges", cls, nx, ny)) g.add_edge(x, y);
    return g;
  }
  if (cls == "poset") {
    const int n0 = read_count(j, "n0", cls);
    const int n1 = read_count(j, "n1", cls);
    BipartitePoset p(n0, n1);
    for (auto [lo, hi] : read_pairs(read_array(j, "below", cls), "below", cls, n0, n1)) p.add_relation(lo, hi);
    reject_if_invalid(cls, validate(p));
    return p;
  }
  if (cls == "split") throw ValidationError("json: split graphs are exchanged as graph6, not JSON");
  throw ValidationError("json: unknown class \"" + cls + "\"");
}

std::string serialize_object(const Object& o) {
  ordered_json j;
  if (const auto* c = std::get_if<SetCover>(&o)) {
    j["class"] = "cover";
    j["n"] = c->ground_size();
    j["sets"] = c->sets();
  } else if (const auto* g = std::get_if<XYGraph>(&o)) {
    j["class"] = "xy";
    j["nx"] = g->nx();
    j["ny"] = g->ny();
    j["edges"] = pairs_json(g->incidence());
  } else if (const auto* p = std::get_if<BipartitePoset>(&o)) {
    j["class"] = "poset";
    j["n0"] = p->n0();
    j["n1"] = p->n1();
    j["below"] = pairs_json(p->relation());
  } else {
    throw UsageError("split graphs serialize as graph6");
  }
  return j.dump();
}

Object parse_line(std::string_view line) {
  line = trim(line);
  if (!line.empty() && line.front() == '{') return parse_object(line);
  return parse_graph6(line);
}

std::string serialize_line(const Object& o) {
  if (const auto* g = std::get_if<Graph>(&o)) return serialize_graph6(*g);
  return serialize_object(o);
}

// ---------------------------------------------------------------- validate

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  const auto rows = g.rows();
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    if (contains(rows[u], u)) out.push_back("loop at vertex " + std::to_string(u));
    if ((rows[u] & ~low_bits(n)) != 0) out.push_back("vertex " + std::to_string(u) + " adjacent to an id >= n");
    for (int v : members(rows[u] & low_bits(n)))
      if (v > u && !contains(rows[v], u)) out.push_back("adjacency not symmetric: " + pair_text(u, v));
    for (int v : members(rows[u] & low_bits(u)))
      if (!contains(rows[v], u)) out.push_back("adjacency not symmetric: " + pair_text(u, v));
  }
  return out;
}

std::vector<std::string> validate(const Graph& g, const KSPartition& p) {
  std::vector<std::string> out;
  const VertexSet all = g.all();
  if ((p.clique & p.stable) != 0)
    out.push_back("K and S intersect at vertex " + std::to_string(std::countr_zero(p.clique & p.stable)));
  if (((p.clique | p.stable) & ~all) != 0) out.push_back("partition names a vertex id >= n");
  for (int v : members(all & ~(p.clique | p.stable))) out.push_back("vertex " + std::to_string(v) + " in neither K nor S");
  const auto k = members(p.clique & all);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (!g.adjacent(k[i], k[j])) out.push_back("K not a clique: " + pair_text(k[i], k[j]));
  const auto s = members(p.stable & all);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) out.push_back("S not stable: " + pair_text(s[i], s[j]));
  return out;
}

std::vector<std::string> validate(const SetCover& c) {
  std::vector<std::string> out;
  const int n = c.ground_size();
  std::vector<bool> covered(n, false);
  for (int i = 0; i < c.set_count(); ++i) {
    const auto& s = c.set(i);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= n) {
        out.push_back("set " + std::to_string(i) + " contains element " + std::to_string(s[k]) + " outside ground set");
        continue;
      }
      if (k > 0 && s[k] == s[k - 1])
        out.push_back("set " + std::to_string(i) + " repeats element " + std::to_string(s[k]));
      covered[s[k]] = true;
    }
    if (i > 0 && s == c.set(i - 1)) out.push_back("duplicate sets: " + pair_text(i - 1, i));
  }
  for (int e = 0; e < n; ++e)
    if (!covered[e]) out.push_back("union ≠ ground set: element " + std::to_string(e) + " uncovered");
  return out;
}

std::vector<std::string> validate(const XYGraph&) {
  // The incidence matrix admits only X x Y entries, so every value is well formed.
  return {};
}

std::vector<std::string> validate(const BipartitePoset& p) {
  std::vector<std::string> out;
  for (int h = 0; h < p.n1(); ++h)
    if (p.relation().column_empty(h))
      out.push_back("height-1 point " + std::to_string(h) + " has an empty down-set");
  return out;
}

std::vector<std::string> validate(const Object& o) {
  return std::visit([](const auto& v) { return validate(v); }, o);
}

}  // namespace splitcomp
