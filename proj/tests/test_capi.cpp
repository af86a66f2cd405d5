#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "vincular.h"

using nlohmann::json;

namespace {

std::string roundtrip(const char* text) {
  vinc_pattern* p = nullptr;
  REQUIRE(vinc_pattern_parse(text, &p) == VINC_OK);
  char buf[64];
  REQUIRE(vinc_pattern_format(p, buf, sizeof buf) == VINC_OK);
  vinc_pattern_free(p);
  return buf;
}

template <typename Fn>
json run_report(Fn&& fn, bool expect_pass) {
  vinc_report* rep = nullptr;
  REQUIRE(fn(&rep) == VINC_OK);
  REQUIRE(rep != nullptr);
  CHECK(vinc_report_passed(rep) == (expect_pass ? 1 : 0));
  json j = json::parse(vinc_report_json(rep));
  vinc_report_free(rep);
  return j;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::strlen(vinc_version()) > 0);
  vinc_pattern* p = nullptr;
  CHECK(vinc_pattern_parse("12x", &p) == VINC_EPARSE);
  CHECK(std::strlen(vinc_last_error()) > 0);
  CHECK(vinc_pattern_parse(nullptr, &p) == VINC_EINVAL);
}

TEST_CASE("pattern handles") {
  for (const char* text : {"124-3", "1-2-43", "2341", "25~134"})
    CHECK(roundtrip(text) == text);

  vinc_pattern* p = nullptr;
  REQUIRE(vinc_pattern_parse("25~134", &p) == VINC_OK);
  CHECK(vinc_pattern_is_barred(p) == 1);
  CHECK(vinc_pattern_length(p) == 5);
  vinc_pattern* sym = nullptr;
  CHECK(vinc_pattern_symmetry(p, "reverse", &sym) == VINC_EINVAL);
  vinc_pattern_free(p);

  REQUIRE(vinc_pattern_parse("13-2-4", &p) == VINC_OK);
  CHECK(vinc_pattern_is_barred(p) == 0);
  REQUIRE(vinc_pattern_symmetry(p, "reverse", &sym) == VINC_OK);
  char buf[64];
  REQUIRE(vinc_pattern_format(sym, buf, sizeof buf) == VINC_OK);
  CHECK(std::string(buf) == "4-2-31");
  CHECK(vinc_pattern_format(sym, buf, 3) == VINC_EINVAL);
  vinc_pattern_free(sym);
  CHECK(vinc_pattern_symmetry(p, "sideways", &sym) == VINC_EPARSE);
  vinc_pattern_free(p);
}

TEST_CASE("count") {
  uint64_t c = 0;
  REQUIRE(vinc_count("124-3", 4, 1, &c) == VINC_OK);
  CHECK(c == 23);
  REQUIRE(vinc_count("25~134", 5, 1, &c) == VINC_OK);
  const uint64_t barred = c;
  REQUIRE(vinc_count("1-42-3", 5, 1, &c) == VINC_OK);
  CHECK(c == barred);  // set coincidence implies equal counts
  CHECK(vinc_count("bogus", 4, 1, &c) == VINC_EPARSE);
  CHECK(vinc_count("124-3", -1, 1, &c) != VINC_OK);
}

TEST_CASE("stat report") {
  const json j = run_report([](vinc_report** r) { return vinc_stat("124-3", 4, "first_letter", 1, r); }, true);
  CHECK(j["total"] == 23);
  CHECK(j["counts"]["1"] == 5);
  CHECK(j["counts"]["4"] == 6);
  vinc_report* rep = nullptr;
  CHECK(vinc_stat("124-3", 4, "nonsense", 1, &rep) == VINC_EPARSE);
}

TEST_CASE("equiv report") {
  json j = run_report([](vinc_report** r) { return vinc_equiv("124-3", "134-2", 6, "first_letter", 1, r); }, true);
  CHECK(j["equivalent"] == true);
  CHECK(j["rows"].size() == 6);

  j = run_report([](vinc_report** r) { return vinc_equiv("124-3", "123-4", 6, nullptr, 1, r); }, false);
  CHECK(j["equivalent"] == false);
  CHECK(j["first_mismatch_n"] == 5);
}

TEST_CASE("bijection report") {
  const json j = run_report([](vinc_report** r) { return vinc_bijection("f-1423", 6, r); }, true);
  CHECK(j["map"] == "f-1423");
  CHECK(j["domain_size"] == j["codomain_size"]);
  vinc_report* rep = nullptr;
  CHECK(vinc_bijection("no-such-map", 5, &rep) == VINC_EPARSE);
}

TEST_CASE("series report") {
  const json j = run_report([](vinc_report** r) { return vinc_series("F1_124_134", 5, 1, 1, r); }, true);
  CHECK(j["N"] == 5);
  CHECK(j["bruteforce"]["match"] == true);
  bool found_seed = false;
  for (const auto& row : j["F"])
    if (row["n"] == 1 && row["a"] == 1 && row["coeff"] == 1) found_seed = true;
  CHECK(found_seed);
}

TEST_CASE("revdel report") {
  const int set2[] = {2};
  json j = run_report([&](vinc_report** r) { return vinc_revdel("124-3", "123", set2, 1, 6, r); }, true);
  CHECK(j["certified"] == true);
  const int set1[] = {1};
  j = run_report([&](vinc_report** r) { return vinc_revdel("1-2-3", "12", set1, 1, 5, r); }, false);
  CHECK(j["counterexample"]["n"] == 4);
}

TEST_CASE("barred report") {
  const json j = run_report([](vinc_report** r) { return vinc_barred("1-24-3", "23~154", 5, r); }, true);
  CHECK(j["equal"] == true);
  CHECK(j["sizes"].size() == 5);
}

TEST_CASE("conjecture report") {
  const json j = run_report([](vinc_report** r) { return vinc_conjecture(6, 1, r); }, true);
  CHECK(j["parts"].size() == 2);
  CHECK(j["parts"][0]["pattern_a"] == "23-1-4");
  CHECK(j["parts"][1]["pattern_b"] == "2-14-3");
}
