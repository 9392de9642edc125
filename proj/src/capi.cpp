#include "splitcomp/splitcomp.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "splitcomp/biject.hpp"
#include "splitcomp/canon.hpp"
#include "splitcomp/classify.hpp"
#include "splitcomp/enumerate.hpp"
#include "splitcomp/errors.hpp"
#include "splitcomp/gallery.hpp"
#include "splitcomp/serialize.hpp"
#include "splitcomp/verify.hpp"

using json = nlohmann::ordered_json;
using namespace splitcomp;

struct sc_session {
  int workers = 1;
  std::string last_error;
};

struct sc_census {
  Census census;
};

namespace {

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sc_status set_string(char** out, const std::string& s) {
  if (out == nullptr) return SC_OK;
  *out = dup(s);
  return *out == nullptr ? SC_ERR_RESOURCE : SC_OK;
}

// Runs fn, translating exceptions into a status and the session's message.
template <class Fn>
sc_status guarded(sc_session* session, Fn&& fn) {
  if (session == nullptr) return SC_ERR_INVALID_ARGUMENT;
  session->last_error.clear();
  sc_status status = SC_OK;
  try {
    status = fn();
  } catch (const ParseError& e) {
    session->last_error = e.what();
    status = SC_ERR_PARSE;
  } catch (const ValidationError& e) {
    session->last_error = e.what();
    status = SC_ERR_VALIDATION;
  } catch (const DomainError& e) {
    session->last_error = e.what();
    status = SC_ERR_DOMAIN;
  } catch (const ResourceError& e) {
    session->last_error = e.what();
    status = SC_ERR_RESOURCE;
  } catch (const UsageError& e) {
    session->last_error = e.what();
    status = SC_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    session->last_error = "out of memory";
    status = SC_ERR_RESOURCE;
  } catch (const std::exception& e) {
    session->last_error = e.what();
    status = SC_ERR_INTERNAL;
  }
  return status;
}

const char* require_text(const char* s, const char* what) {
  if (s == nullptr) throw UsageError(std::string(what) + " is null");
  return s;
}

int balance_code(const CensusEntry& e) {
  if (!e.in_domain) return SC_OUT_OF_DOMAIN;
  return e.balance.unbalanced() ? SC_UNBALANCED : SC_BALANCED;
}

Census build_census(const sc_session* s, const char* class_name, int n, int no_y_isolates) {
  const ClassTag tag = parse_class_tag(require_text(class_name, "class"));
  const EnumerateOptions opts{s->workers};
  if (tag == ClassTag::xy) return enumerate_xy(n, no_y_isolates != 0, opts);
  return enumerate(tag, n, opts);
}

json members_json(VertexSet s) { return members(s); }

json classify_json(const Object& o) {
  json j;
  j["class"] = to_string(class_of(o));
  j["key"] = canon_key(o).hex();
  if (const auto* g = std::get_if<Graph>(&o)) {
    const auto oa = omega_alpha(*g);
    const Balance b = balance_split(*g);
    const KSPartition p = s_max_partition(*g);
    const auto tri = trichotomy(*g, p);
    j["balance"] = to_string(b.value);
    j["witness"] = b.witness ? json(*b.witness) : json(nullptr);
    j["omega"] = oa.omega;
    j["alpha"] = oa.alpha;
    j["case"] = to_string(tri.trichotomy_case);
    j["partition"] = {{"clique", members_json(p.clique)}, {"stable", members_json(p.stable)}};
    return j;
  }
  const Balance b = balance_of(o);
  j["balance"] = to_string(b.value);
  j["witness"] = b.witness ? json(*b.witness) : json(nullptr);
  return j;
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SC_ERR_PARSE: return "parse";
    case SC_ERR_VALIDATION: return "validation";
    case SC_ERR_DOMAIN: return "domain";
    case SC_ERR_RESOURCE: return "resource";
    case SC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

sc_status sc_session_create(int workers, sc_session** out) {
  if (out == nullptr) return SC_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) sc_session;
  if (*out == nullptr) return SC_ERR_RESOURCE;
  (*out)->workers = workers;
  return SC_OK;
}

void sc_session_destroy(sc_session* session) { delete session; }

const char* sc_session_last_error(const sc_session* session) {
  return session == nullptr ? "null session" : session->last_error.c_str();
}

void sc_string_free(char* s) { std::free(s); }

sc_status sc_census_create(sc_session* session, const char* class_name, int n, int no_y_isolates, sc_census** out) {
  return guarded(session, [&] {
    if (out == nullptr) throw UsageError("output pointer is null");
    *out = new sc_census{build_census(session, class_name, n, no_y_isolates)};
    return SC_OK;
  });
}

void sc_census_destroy(sc_census* census) { delete census; }

size_t sc_census_size(const sc_census* census) { return census == nullptr ? 0 : census->census.size(); }

void sc_census_counts(const sc_census* census, size_t* balanced, size_t* unbalanced, size_t* out_of_domain) {
  const bool ok = census != nullptr;
  if (balanced != nullptr) *balanced = ok ? census->census.balanced() : 0;
  if (unbalanced != nullptr) *unbalanced = ok ? census->census.unbalanced() : 0;
  if (out_of_domain != nullptr) *out_of_domain = ok ? census->census.out_of_domain() : 0;
}

sc_status sc_census_header(const sc_census* census, char** out) {
  if (census == nullptr || out == nullptr) return SC_ERR_INVALID_ARGUMENT;
  return set_string(out, census->census.header());
}

sc_status sc_census_entry(const sc_census* census, size_t index, char** key_hex, char** object_line, int* balance) {
  if (census == nullptr || index >= census->census.size()) return SC_ERR_INVALID_ARGUMENT;
  const CensusEntry& e = census->census.entries[index];
  if (set_string(key_hex, e.key.hex()) != SC_OK) return SC_ERR_RESOURCE;
  if (set_string(object_line, serialize_line(e.object)) != SC_OK) return SC_ERR_RESOURCE;
  if (balance != nullptr) *balance = balance_code(e);
  return SC_OK;
}

sc_status sc_census_visit(sc_session* session, const char* class_name, int n, int no_y_isolates, sc_visit_fn fn,
                          void* user) {
  return guarded(session, [&] {
    if (fn == nullptr) throw UsageError("callback is null");
    const ClassTag tag = parse_class_tag(require_text(class_name, "class"));
    visit(tag, n, no_y_isolates != 0, [&](const CensusEntry& e) {
      const std::string key = e.key.hex();
      const std::string line = serialize_line(e.object);
      return fn(user, key.c_str(), line.c_str(), balance_code(e)) != 0;
    });
    return SC_OK;
  });
}

sc_status sc_canonical_key(sc_session* session, const char* object_line, char** key_hex) {
  return guarded(session, [&] {
    const Object o = parse_line(require_text(object_line, "object"));
    return set_string(key_hex, canon_key(o).hex());
  });
}

sc_status sc_canonical_form(sc_session* session, const char* object_line, char** out_line) {
  return guarded(session, [&] {
    const Object o = parse_line(require_text(object_line, "object"));
    return set_string(out_line, serialize_line(canonical_form(o)));
  });
}

sc_status sc_is_isomorphic(sc_session* session, const char* a, const char* b, int* result) {
  return guarded(session, [&] {
    const bool same = is_isomorphic(parse_line(require_text(a, "first object")), parse_line(require_text(b, "second object")));
    if (result != nullptr) *result = same ? 1 : 0;
    return SC_OK;
  });
}

sc_status sc_classify(sc_session* session, const char* object_line, char** out_json) {
  return guarded(session, [&] {
    const Object o = parse_line(require_text(object_line, "object"));
    return set_string(out_json, classify_json(o).dump());
  });
}

sc_status sc_map(sc_session* session, const char* map_name, const char* object_line, int target_n, char** out_json) {
  return guarded(session, [&] {
    const MapId id = parse_map_name(require_text(map_name, "map name"));
    const MapInfo& info = map_info(id);
    const Object o = parse_line(require_text(object_line, "object"));
    const auto m = apply_map(id, o, info.takes_target_order ? target_n : -1);
    json choices = json::array();
    for (const auto& c : m.report.choices)
      choices.push_back({{"point", c.point}, {"index", c.index}, {"options", c.options}});
    json j;
    j["map"] = info.name;
    j["from"] = to_string(info.from);
    j["to"] = to_string(info.to);
    j["input"] = m.report.input_key.hex();
    j["output"] = m.report.output_key.hex();
    j["choices"] = std::move(choices);
    j["object"] = serialize_line(m.object);
    return set_string(out_json, j.dump());
  });
}

sc_status sc_map_inverse(const char* map_name, const char** inverse_name) {
  if (map_name == nullptr || inverse_name == nullptr) return SC_ERR_INVALID_ARGUMENT;
  try {
    *inverse_name = map_info(map_info(parse_map_name(map_name)).inverse).name.data();
    return SC_OK;
  } catch (const UsageError&) {
    return SC_ERR_INVALID_ARGUMENT;
  }
}

sc_status sc_verify(sc_session* session, const char* suite, int max_n, char** report, int* passed) {
  return guarded(session, [&] {
    const auto results = run_suite(require_text(suite, "suite"), max_n, {session->workers});
    std::string text;
    bool ok = true;
    for (const auto& r : results) {
      text += r.to_json().dump();
      text += '\n';
      if (r.asserting && !r.passed()) ok = false;
    }
    if (passed != nullptr) *passed = ok ? 1 : 0;
    return set_string(report, text);
  });
}

sc_status sc_gallery(sc_session* session, int n, char** out_text) {
  return guarded(session, [&] {
    const EnumerateOptions opts{session->workers};
    return set_string(out_text, render_gallery(n, gallery(n, opts)));
  });
}

sc_status sc_count_table(sc_session* session, int max_n, char** out_json) {
  return guarded(session, [&] {
    json rows = json::array();
    for (const auto& r : count_table(max_n, {session->workers})) {
      auto cls = [](const CountRow::ClassCounts& c) {
        return json{{"total", c.total}, {"balanced", c.balanced}, {"unbalanced", c.unbalanced}};
      };
      rows.push_back({{"n", r.n},
                      {"split", cls(r.split)},
                      {"cover", cls(r.cover)},
                      {"poset", cls(r.poset)},
                      {"xy", cls(r.xy)},
                      {"xy_all", r.xy_all},
                      {"cumulative", r.cumulative}});
    }
    return set_string(out_json, rows.dump());
  });
}

}  // extern "C"
