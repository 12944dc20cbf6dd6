#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>

#include "cellkit/cache_io.hpp"
#include "cellkit/suites.hpp"
#include "cellkit/textio.hpp"

using namespace cellkit;
using nlohmann::json;

namespace {

std::string tmp_path(const std::string& name) {
  return std::string("cellkit_test_") + name;
}

// minimal structural validator for the shipped schemas: type, required,
// properties, items, enum
bool conforms(const json& schema, const json& value) {
  if (schema.contains("enum")) {
    for (const auto& v : schema["enum"])
      if (v == value) return true;
    return false;
  }
  std::string type = schema.value("type", "");
  if (type == "object") {
    if (!value.is_object()) return false;
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!value.contains(k.get<std::string>())) return false;
    if (schema.contains("properties"))
      for (auto& [k, sub] : schema["properties"].items())
        if (value.contains(k) && !conforms(sub, value[k])) return false;
    return true;
  }
  if (type == "array") {
    if (!value.is_array()) return false;
    if (schema.contains("items"))
      for (const auto& item : value)
        if (!conforms(schema["items"], item)) return false;
    return true;
  }
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  return true;
}

json load_schema(const std::string& name) {
  std::ifstream is(std::string(CELLKIT_SOURCE_DIR) + "/data/schemas/" + name);
  REQUIRE(is.good());
  return json::parse(is);
}

}  // namespace

TEST_CASE("perm parsing forms") {
  CHECK(parse_perm("426153").str() == "426153");
  CHECK(parse_perm("10,2,3,4,5,6,7,8,9,1").rank() == 10);
  CHECK(parse_perm("w:1,2,1").str() == "321");
  CHECK(parse_perm("w:1,2,1", 5).str() == "32145");
  CHECK_THROWS_AS(parse_perm("0"), Error);
  CHECK_THROWS_AS(parse_perm("abc"), Error);
  CHECK_THROWS_AS(parse_perm("2143", 5), Error);
  CHECK_THROWS_AS(parse_perm(""), Error);
}

TEST_CASE("tableau json round trip") {
  StandardTableau t({{1, 3}, {2, 4}});
  json j = tableau_json(t);
  CHECK(j.dump() == R"({"rows":[[1,3],[2,4]]})");
  CHECK(tableau_from_json(j) == t);
  CHECK_THROWS_AS(tableau_from_json(json::parse(R"({"rows":[[2,3],[1,4]]})")), Error);
  CHECK(tableau_ascii(t) == "1 3\n2 4\n");
}

TEST_CASE("cache round trip at small rank") {
  for (int n = 2; n <= 5; ++n) {
    std::string path = tmp_path("s" + std::to_string(n) + ".klc");
    KLCache C(n);
    cache_save(C, path);
    auto loaded = cache_load(path);
    CHECK(loaded->rank() == n);
    CHECK(loaded->fully_filled());
    CHECK(loaded->stored_pairs() == C.stored_pairs());
    for (PermId w = 0; w < C.sn().size(); ++w) CHECK(loaded->row(w) == C.row(w));
    CacheInfo info = cache_info(path);
    CHECK(info.n == n);
    CHECK(info.complete);
    CHECK(info.entries == C.stored_pairs() - C.sn().size());  // diagonal implied
    std::remove(path.c_str());
  }
}

TEST_CASE("rank 3 cache contents") {
  std::string path = tmp_path("s3.klc");
  KLCache C(3);
  cache_save(C, path);
  CacheInfo info = cache_info(path);
  // below-diagonal entries, one per Bruhat-comparable pair
  CHECK(info.entries == 13);
  std::remove(path.c_str());
}

TEST_CASE("cache load equals fresh computation on random queries") {
  std::string path = tmp_path("s6.klc");
  KLCache C(6);
  cache_save(C, path);
  auto loaded = cache_load(path);
  KLCache fresh(6);
  std::mt19937 rng(31);
  for (int rep = 0; rep < 1000; ++rep) {
    PermId x = rng() % 720, w = rng() % 720;
    CHECK(loaded->kl_poly(x, w) == fresh.kl_poly(x, w));
  }
  std::remove(path.c_str());
}

TEST_CASE("cache rejects bad headers and truncation") {
  std::string path = tmp_path("bad.klc");
  {
    std::ofstream os(path);
    os << R"({"format":"klcache","version":2,"n":3,"normalization":"soergel"})" << "\n";
  }
  CHECK_THROWS_AS(cache_load(path), Error);
  try {
    cache_load(path);
  } catch (const Error& e) {
    CHECK(e.kind() == Err::VersionMismatch);
  }
  {
    std::ofstream os(path);
    os << R"({"format":"other"})" << "\n";
  }
  CHECK_THROWS_AS(cache_load(path), Error);

  // truncated file: no footer
  {
    std::ofstream os(path);
    os << R"({"format":"klcache","version":1,"n":3,"normalization":"soergel"})" << "\n";
    os << "[0,1,[[1,1]]]\n";
  }
  CHECK_THROWS_AS(cache_load(path), Error);
  CHECK_FALSE(cache_info(path).complete);
  std::remove(path.c_str());
}

TEST_CASE("cache build resume") {
  std::string path = tmp_path("resume.klc");
  std::remove(path.c_str());
  auto C = cache_build(4, path, false);
  CHECK(C->fully_filled());
  // resume on a complete file just loads it
  auto again = cache_build(4, path, true);
  CHECK(again->stored_pairs() == C->stored_pairs());
  // resume with a different rank is refused
  CHECK_THROWS_AS(cache_build(5, path, true), Error);

  // truncate the file mid-row and resume
  std::ifstream is(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  is.close();
  {
    std::ofstream os(path);
    for (size_t i = 0; i + 6 < lines.size(); ++i) os << lines[i] << "\n";
  }
  auto resumed = cache_build(4, path, true);
  CHECK(resumed->fully_filled());
  CHECK(resumed->stored_pairs() == C->stored_pairs());
  CHECK(cache_info(path).complete);
  std::remove(path.c_str());
}

TEST_CASE("suite reports are exact and deterministic") {
  SuiteReport r1 = run_suite("mu-lemmas");
  CHECK(r1.all_pass());
  CHECK(r1.normalization == "soergel");
  SuiteOptions two;
  two.jobs = 2;
  SuiteReport r2 = run_suite("mu-lemmas", two);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (size_t i = 0; i < r1.checks.size(); ++i) {
    CHECK(r1.checks[i].description == r2.checks[i].description);
    CHECK(r1.checks[i].actual == r2.checks[i].actual);
    CHECK(r1.checks[i].pass == (r1.checks[i].expected == r1.checks[i].actual));
  }
  CHECK_THROWS_AS(run_suite("nope"), Error);
}

TEST_CASE("s4 suite passes") {
  SuiteReport rep = run_suite("s4");
  CHECK(rep.all_pass());
}

TEST_CASE("json outputs conform to the shipped schemas") {
  json verdict = {{"input", "2143"},   {"duflo", "2143"},      {"status", "negative"},
                  {"method", "table"}, {"conjectural", false}};
  CHECK(conforms(load_schema("verdict.schema.json"), verdict));
  verdict["witness"] = {{"x", "1234"}, {"y", "2134"}};
  verdict["pattern"] = {{"pattern", "2143"}, {"start", 1}};
  CHECK(conforms(load_schema("verdict.schema.json"), verdict));
  verdict["status"] = "sideways";
  CHECK_FALSE(conforms(load_schema("verdict.schema.json"), verdict));

  SuiteReport rep = run_suite("s4");
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  json jrep = {{"suite", rep.suite},
               {"normalization", rep.normalization},
               {"pass", rep.all_pass()},
               {"wall_ms", rep.wall_ms},
               {"checks", checks}};
  CHECK(conforms(load_schema("report.schema.json"), jrep));

  json scan = {{"n", 4},
               {"source", "computed"},
               {"method", "kh5"},
               {"negatives", json::array({"2143"})},
               {"cuspidals", json::array({"2143"})}};
  CHECK(conforms(load_schema("scan.schema.json"), scan));

  json tlj = tl_json(tl_from_fc(parse_perm("2143")));
  CHECK(conforms(load_schema("tl.schema.json"), tlj));

  json cellsj = {{"n", 3}, {"side", "left"}, {"cells", json::array({json::array({"123"})})}};
  CHECK(conforms(load_schema("cells.schema.json"), cellsj));
}
