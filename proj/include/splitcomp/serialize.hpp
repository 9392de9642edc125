#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "splitcomp/types.hpp"

namespace splitcomp {

/// Largest order the single-byte graph6 header can express.
inline constexpr int kMaxGraph6Order = 62;

Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

/// Parses one JSON-lines record of class cover, xy or poset. Syntax problems
/// raise ParseError; schema or invariant violations raise ValidationError.
Object parse_object(std::string_view json_text);
/// Sorted normal form: byte equality of outputs equals field identity.
std::string serialize_object(const Object& o);

/// graph6 for split graphs, JSON otherwise. Leading/trailing whitespace is
/// ignored on input; a line starting with '{' is read as JSON.
Object parse_line(std::string_view line);
std::string serialize_line(const Object& o);

/// Invariant violations; empty when the value is well formed.
std::vector<std::string> validate(const Graph& g);
std::vector<std::string> validate(const Graph& g, const KSPartition& p);
std::vector<std::string> validate(const SetCover& c);
std::vector<std::string> validate(const XYGraph& g);
std::vector<std::string> validate(const BipartitePoset& p);
std::vector<std::string> validate(const Object& o);

}  // namespace splitcomp
