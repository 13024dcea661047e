// Copyright 2026 The nsdiv Authors.
// SPDX-License-Identifier: Apache-2.0
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "nsdiv/error.hpp"
#include "nsdiv/cli.hpp"
#include "nsdiv/io.hpp"
#include "nsdiv/tables.hpp"

using namespace nsdiv;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("nsdiv-test-" + name);
  std::ofstream(path) << body;
  return path.string();
}

const tables::RowReport* find_row(const tables::Report& r, const std::string& id) {
  for (const auto& row : r.rows) {
    if (row.id == id) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("zeta counts-to-lpoly") {
  const auto f = write_temp("c1.json", R"({"q": 2, "g": 2, "N": [1, 2]})");
  auto r = run({"zeta", "counts-to-lpoly", f});
  CHECK(r.code == 0);
  CHECK(r.out.find("h = 1") != std::string::npos);
  CHECK(r.out.find("A_0..A_4 = (1, 1, 3, 3, 7)") != std::string::npos);
  r = run({"--format", "json", "zeta", "counts-to-lpoly", f});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lpoly"]["a"] == json::array({1, -2, 2, -4, 4}));
  CHECK(j["h"] == 1);
  CHECK(j["admissibility"]["admissible"] == true);
  const auto bad = write_temp("c2.json", R"({"q": 2, "g": 4, "N": [1, 2, 3, 0]})");
  r = run({"zeta", "counts-to-lpoly", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("13 - 10√2 (< 0)") != std::string::npos);
  CHECK(r.out.find("real-weil-upper") != std::string::npos);
}

TEST_CASE("zeta lpoly-info") {
  const auto f = write_temp("l1.json", R"({"q": 2, "g": 1, "a": [1, 0, 2]})");
  auto r = run({"--format", "json", "zeta", "lpoly-info", f});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["h"] == 3);
  CHECK(j["N"] == json::array({3, 3}));
  const auto bad = write_temp("l2.json", R"({"q": 2, "g": 1, "a": [1, 0, 3]})");
  CHECK(run({"zeta", "lpoly-info", bad}).code == 2);
}

TEST_CASE("curve count") {
  const auto f = write_temp("cv1.json", R"({"q": 2, "kind": "artin-schreier", "num": [1, 0, 0, 1, 0, 1]})");
  auto r = run({"--format", "json", "curve", "count", f, "--max-degree", "2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["N"] == json::array({1, 2}));
  CHECK(j["genus"] == 2);
  const auto f4 = write_temp("cv2.json", R"({"q": 4, "kind": "artin-schreier", "num": ["10", "00", "00", "01"]})");
  r = run({"curve", "count", f4});
  CHECK(r.code == 0);
  CHECK(r.out.find("genus = 1") != std::string::npos);
  CHECK(r.out.find("N_1..N_1 = (1)") != std::string::npos);
  CHECK(run({"curve", "count", f, "--max-degree", "9"}).code == 2);
  const auto wrong = write_temp("cv3.json", R"({"q": 3, "kind": "artin-schreier", "num": [0, 1]})");
  CHECK(run({"curve", "count", wrong}).code == 2);
  const auto digits = write_temp("cv4.json", R"({"q": 4, "kind": "artin-schreier", "num": ["2", "1"]})");
  CHECK(run({"curve", "count", digits}).code == 2);
}

TEST_CASE("criteria check") {
  const auto f = write_temp("cc1.json", R"({"q": 2, "g": 3, "N": [1, 3, 2]})");
  auto r = run({"--format", "json", "criteria", "check", f, "--property", "egm1"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["verdicts"].size() == 1);
  CHECK(j["verdicts"][0]["status"] == "ExceptionListed");
  CHECK(j["verdicts"][0]["exception"]["note"] == "matches a listed exceptional field");
  r = run({"--format", "json", "criteria", "check", f});
  j = json::parse(r.out);
  CHECK(j["verdicts"].size() == 2);
  CHECK(j["verdicts"][0]["property"] == "Eg");
  CHECK(j["verdicts"][0]["status"] == "Guaranteed");
  CHECK(run({"criteria", "check", f, "--property", "x"}).code == 2);
}

TEST_CASE("tower certify") {
  auto r = run({"--format", "json", "tower", "certify", "--q", "16", "--g", "120", "--n1", "17"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["status"] == "Guaranteed");
  CHECK(run({"tower", "certify", "--q", "6", "--g", "1", "--n1", "1"}).code == 2);
}

TEST_CASE("bounds mu") {
  auto r = run({"--format", "json", "bounds", "mu", "--q", "16", "--n", "13"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["new"]["bound"] == "51");
  CHECK(j["prior"]["bound"] == "741/11");
  r = run({"bounds", "mu", "--q", "16", "--n", "1"});
  CHECK(r.out.find("51/13") != std::string::npos);
  CHECK(run({"bounds", "mu", "--q", "12", "--n", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"nope"}).code == 2);
  CHECK(run({"zeta"}).code == 2);
  CHECK(run({"zeta", "counts-to-lpoly", "/nonexistent/file.json"}).code == 2);
  const auto junk = write_temp("junk.json", "{not json");
  CHECK(run({"zeta", "counts-to-lpoly", junk}).code == 2);
  const auto missing = write_temp("missing.json", R"({"q": 2, "N": [1]})");
  CHECK(run({"zeta", "counts-to-lpoly", missing}).code == 2);
  CHECK(run({"--format", "xml", "bounds", "mu", "--q", "16", "--n", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("tables verify") {
  auto r = run({"tables", "verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("29/29 rows pass") != std::string::npos);
  r = run({"--format", "json", "tables", "verify", "--source", "genus-1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rows"].size() == 3);
  CHECK(run({"tables", "verify", "--source", "nowhere"}).code == 2);
}

TEST_CASE("selfcheck") {
  auto r = run({"--seed", "3", "selfcheck", "--count", "50"});
  CHECK(r.code == 0);
  CHECK(r.out.find("identity-suite: 50 instances, 0 failures") != std::string::npos);
}

TEST_CASE("dataset contents") {
  const auto& ds = tables::embedded_dataset();
  CHECK(ds.version == 1);
  CHECK(ds.rows.size() == 29);
  CHECK(tables::sources(ds).size() == 4);
  int countable = 0;
  for (const auto& row : ds.rows) countable += row.kind == tables::RowKind::DoubleCoverCountable;
  CHECK(countable == 13);
  const auto rep = tables::verify_tables(ds);
  CHECK(rep.pass());
  for (const auto& row : rep.rows) {
    CAPTURE(row.id);
    CHECK(row.pass());
  }
  for (const auto& c : rep.global) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("dataset examples") {
  const auto& ds = tables::embedded_dataset();
  const auto rep = tables::verify_tables(ds);
  for (const auto& row : ds.rows) {
    if (row.equation == "y^2 + y + (x^3 + x^2 + 1)/(x^3 + x + 1) = 0") {
      CHECK(row.N == std::vector<long long>{0, 3});
      CHECK(row.h == 1);
      CHECK(find_row(rep, row.id)->pass());
    }
    if (row.q == 2 && row.g == 4 && row.N == std::vector<long long>{0, 1, 3, 3}) {
      CHECK(row.h == 2);
      CHECK(find_row(rep, row.id)->pass());
    }
  }
  bool found = false;
  for (const auto& row : ds.rows) {
    if (row.q == 2 && row.g == 3 && row.N == std::vector<long long>{1, 3, 2} && row.h == 4) {
      found = true;
      CHECK(row.exceptions == std::vector<criteria::Property>{criteria::Property::Egm1});
    }
  }
  CHECK(found);
}

TEST_CASE("tampered datasets fail verification") {
  json j = json::parse(R"({"version": 1, "rows": [
    {"id": "x", "source": "s", "q": 2, "g": 2, "equation": "e", "N": [1, 2], "h": 2,
     "kind": "zeta-consistency-only", "exceptions": [], "provenance": "p"},
    {"id": "y", "source": "s", "q": 2, "g": 2, "equation": "e", "N": [0, 3], "h": 1,
     "kind": "double-cover-countable", "exceptions": ["Eg"], "provenance": "p",
     "curve": {"q": 2, "kind": "artin-schreier", "num": [1, 0, 0, 1, 0, 1]}}]})");
  const auto rep = tables::verify_tables(tables::parse_dataset(j));
  CHECK_FALSE(rep.pass());
  REQUIRE(rep.rows.size() == 2);
  CHECK_FALSE(rep.rows[0].pass());
  CHECK_FALSE(rep.rows[1].pass());
  j["rows"][0]["kind"] = "double-cover-countable";
  CHECK_THROWS_AS(tables::parse_dataset(j), InputError);
  j["rows"][0]["kind"] = "other";
  CHECK_THROWS_AS(tables::parse_dataset(j), InputError);
}

TEST_CASE("verification is order independent") {
  auto ds = tables::embedded_dataset();
  std::reverse(ds.rows.begin(), ds.rows.end());
  const auto a = tables::verify_tables(tables::embedded_dataset());
  const auto b = tables::verify_tables(ds);
  CHECK(a.pass() == b.pass());
  for (const auto& row : a.rows) CHECK(find_row(b, row.id)->pass() == row.pass());
}

TEST_CASE("json integer round trip") {
  const zeta::BigInt big("123456789012345678901234567890");
  CHECK(io::big_from_json(io::to_json(big)) == big);
  CHECK(io::to_json(zeta::BigInt(5)) == json(5));
  CHECK_THROWS_AS(io::big_from_json(json("12x")), InputError);
  CHECK_THROWS_AS(io::big_from_json(json(1.5)), InputError);
}
