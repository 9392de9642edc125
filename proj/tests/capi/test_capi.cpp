#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "splitcomp/splitcomp.h"

namespace {

struct Session {
  sc_session* s = nullptr;
  Session() { REQUIRE(sc_session_create(1, &s) == SC_OK); }
  ~Session() { sc_session_destroy(s); }
};

std::string take(char* p) {
  std::string out = p ? p : "";
  sc_string_free(p);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sc_version()) == "1.0.0");
  CHECK(std::string(sc_status_name(SC_OK)) == "ok");
  CHECK(std::string(sc_status_name(SC_ERR_DOMAIN)) == "domain");
}

TEST_CASE("census") {
  Session s;
  sc_census* c = nullptr;
  REQUIRE(sc_census_create(s.s, "split", 4, 0, &c) == SC_OK);
  CHECK(sc_census_size(c) == 9);
  size_t b = 0, u = 0, o = 0;
  sc_census_counts(c, &b, &u, &o);
  CHECK(b == 1);
  CHECK(u == 8);
  CHECK(o == 0);
  char* h = nullptr;
  REQUIRE(sc_census_header(c, &h) == SC_OK);
  CHECK(take(h) == "# class=split n=4 count=9 balanced=1 unbalanced=8");
  char* key = nullptr;
  char* line = nullptr;
  int balance = -1;
  REQUIRE(sc_census_entry(c, 0, &key, &line, &balance) == SC_OK);
  CHECK(take(key).substr(0, 2) == "01");
  CHECK(take(line).size() == 2);
  CHECK(sc_census_entry(c, 9, &key, &line, &balance) == SC_ERR_INVALID_ARGUMENT);
  sc_census_destroy(c);

  CHECK(sc_census_create(s.s, "split", 9, 0, &c) == SC_ERR_RESOURCE);
  CHECK(std::string(sc_session_last_error(s.s)).find("9") != std::string::npos);
  CHECK(sc_census_create(s.s, "tree", 3, 0, &c) == SC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("visit") {
  Session s;
  std::vector<std::string> lines;
  auto fn = [](void* user, const char*, const char* line, int) -> int {
    static_cast<std::vector<std::string>*>(user)->push_back(line);
    return 1;
  };
  REQUIRE(sc_census_visit(s.s, "xy", 3, 0, fn, &lines) == SC_OK);
  CHECK(lines.size() == 8);
}

TEST_CASE("canonical forms and isomorphism") {
  Session s;
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(sc_canonical_key(s.s, "Bg", &a) == SC_OK);
  REQUIRE(sc_canonical_key(s.s, "BW", &b) == SC_OK);
  CHECK(take(a) == take(b));
  int iso = -1;
  REQUIRE(sc_is_isomorphic(s.s, "Bg", "BW", &iso) == SC_OK);
  CHECK(iso == 1);
  REQUIRE(sc_is_isomorphic(s.s, "Bg", "Bw", &iso) == SC_OK);
  CHECK(iso == 0);
  char* form = nullptr;
  REQUIRE(sc_canonical_form(s.s, "{\"class\":\"cover\",\"n\":2,\"sets\":[[1],[0]]}", &form) == SC_OK);
  CHECK(take(form) == "{\"class\":\"cover\",\"n\":2,\"sets\":[[0],[1]]}");
  CHECK(sc_canonical_key(s.s, "not a graph", &a) == SC_ERR_PARSE);
}

TEST_CASE("classify") {
  Session s;
  char* out = nullptr;
  REQUIRE(sc_classify(s.s, "Ch", &out) == SC_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["balance"] == "balanced");
  CHECK(j["omega"] == 2);
  CHECK(j["alpha"] == 2);
  CHECK(sc_classify(s.s, "Cl", &out) == SC_ERR_DOMAIN);
}

TEST_CASE("maps") {
  Session s;
  char* out = nullptr;
  REQUIRE(sc_map(s.s, "split->cover", "Bg", -1, &out) == SC_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["object"] == "{\"class\":\"cover\",\"n\":3,\"sets\":[[0,2],[1,2]]}");
  CHECK(j["choices"].size() == 1);
  CHECK(sc_map(s.s, "compile-split-down", "Ch", -1, &out) == SC_ERR_DOMAIN);
  CHECK(sc_map(s.s, "no-such-map", "Ch", -1, &out) == SC_ERR_INVALID_ARGUMENT);
  const char* inv = nullptr;
  REQUIRE(sc_map_inverse("split->cover", &inv) == SC_OK);
  CHECK(std::string(inv) == "cover->split");
}

TEST_CASE("verify, gallery and count table") {
  Session s;
  char* report = nullptr;
  int passed = 0;
  REQUIRE(sc_verify(s.s, "counts", 5, &report, &passed) == SC_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(take(report))["suite"] == "counts");
  char* text = nullptr;
  REQUIRE(sc_gallery(s.s, 4, &text) == SC_OK);
  CHECK(take(text).rfind("# gallery n=4 rows=9", 0) == 0);
  char* table = nullptr;
  REQUIRE(sc_count_table(s.s, 4, &table) == SC_OK);
  CHECK(nlohmann::json::parse(take(table)).size() == 5);
}

TEST_CASE("null arguments") {
  CHECK(sc_session_create(1, nullptr) == SC_ERR_INVALID_ARGUMENT);
  Session s;
  char* out = nullptr;
  CHECK(sc_canonical_key(s.s, nullptr, &out) == SC_ERR_INVALID_ARGUMENT);
  CHECK(sc_canonical_key(nullptr, "Bg", &out) == SC_ERR_INVALID_ARGUMENT);
}
