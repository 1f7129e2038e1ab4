#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "polycount/census.hpp"
#include "polycount/cli.hpp"
#include "published_tables.hpp"

using namespace polycount;

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

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(cell);
  if (!line.empty() && line.back() == sep) cells.emplace_back();
  return cells;
}

}  // namespace

TEST(CliCount, PlainValues) {
  EXPECT_EQ(run({"count", "--n", "20", "--m", "10"}).out, "4746\n");
  EXPECT_EQ(run({"count", "--n", "20"}).out, "26452\n");
  EXPECT_EQ(run({"count", "--n", "12", "--m", "3", "--cyclic"}).out, "4\n");
  EXPECT_EQ(run({"count", "--n", "9", "--method", "oracle"}).out, "32\n");
  EXPECT_EQ(run({"count", "--n", "12", "--m", "4", "--method", "burnside"}).out, "16\n");
  EXPECT_EQ(run({"count", "--n", "7", "--m", "9"}).out, "0\n");
}

TEST(CliCount, RangeErrors) {
  const auto r = run({"count", "--n", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("at least 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"count", "--n", "30", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run({"count"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "5", "--method", "guess"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCount, JsonReportWithAgreement) {
  const auto r = run({"count", "--n", "14", "--m", "5", "--method", "closed,burnside,oracle",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], "polycount.census/1");
  EXPECT_EQ(doc["query"]["n"], 14);
  EXPECT_EQ(doc["query"]["m"], 5);
  EXPECT_EQ(doc["query"]["group"], "dihedral");
  ASSERT_EQ(doc["results"].size(), 3U);
  for (const auto& row : doc["results"]) EXPECT_EQ(row["value"], "60");
  EXPECT_EQ(doc["agree"], true);

  const auto single = nlohmann::json::parse(run({"count", "--n", "40", "--format", "json"}).out);
  EXPECT_TRUE(single["query"]["m"].is_null());
  EXPECT_EQ(single["results"][0]["value"], count_polygons(40).get_str());
  EXPECT_FALSE(single.contains("agree"));
}

TEST(CliTable, CsvMatchesPublishedTables) {
  const auto r = run({"table", "--max-n", "20", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 20U);  // header, 18 rows, p_n
  EXPECT_EQ(lines[0], "m\\n,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20");
  for (std::int64_t m = 3; m <= 20; ++m) {
    const auto cells = split(lines[m - 2], ',');
    ASSERT_EQ(cells.size(), 19U) << lines[m - 2];
    EXPECT_EQ(cells[0], std::to_string(m));
    for (std::int64_t n = 3; n <= 20; ++n) {
      const std::string expected =
          m > n ? "" : std::to_string(testdata::kMgons[m - 3][n - 3]);
      EXPECT_EQ(cells[n - 2], expected) << m << "," << n;
    }
  }
  const auto totals = split(lines.back(), ',');
  EXPECT_EQ(totals[0], "p_n");
  for (std::int64_t n = 3; n <= 20; ++n) {
    EXPECT_EQ(totals[n - 2], std::to_string(testdata::kPolygons[n - 3]));
  }
}

TEST(CliTable, SmallestAndInvalid) {
  EXPECT_EQ(run({"table", "--max-n", "3", "--format", "csv"}).out, "m\\n,3\n3,1\np_n,1\n");
  const auto plain = run({"table", "--max-n", "3"});
  EXPECT_EQ(plain.code, 0);
  EXPECT_EQ(plain.out, "m\\n  3\n3    1\n\nn    3\np_n  1\n");
  EXPECT_EQ(run({"table", "--max-n", "2"}).code, 2);
}

TEST(CliTable, PlainHasNoTrailingWhitespace) {
  for (const auto& line : lines_of(run({"table", "--max-n", "20"}).out)) {
    EXPECT_TRUE(line.empty() || line.back() != ' ') << "[" << line << "]";
  }
}

TEST(CliBfile, PolygonSequence) {
  const auto r = run({"bfile", "--family", "pn", "--to", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = lines_of(r.out);
  ASSERT_EQ(lines.size(), 18U);
  EXPECT_EQ(lines.front(), "3 1");
  EXPECT_EQ(lines.back(), "20 26452");
  EXPECT_EQ(r.out.back(), '\n');
  for (const auto& line : lines) EXPECT_NE(line.back(), ' ');
}

TEST(CliBfile, FamiliesAndOffsets) {
  const auto tri = run({"bfile", "--family", "triangles-nearest", "--from", "3", "--to", "12"});
  EXPECT_EQ(lines_of(tri.out).back(), "12 3");
  const auto quad = run({"bfile", "--family", "pmn", "--m", "4", "--to", "8"});
  EXPECT_EQ(quad.out, "4 1\n5 1\n6 2\n7 3\n8 5\n");
  const auto shifted = run({"bfile", "--family", "pn", "--to", "5", "--offset", "1"});
  EXPECT_EQ(shifted.out, "1 1\n2 1\n3 3\n");
  const auto nearest = run({"bfile", "--family", "quadrilaterals-nearest", "--to", "6"});
  EXPECT_EQ(nearest.out, "1 0\n2 0\n3 0\n4 1\n5 1\n6 2\n");
  const auto cyc = run({"bfile", "--family", "pmn-cyclic", "--m", "3", "--from", "12", "--to", "12"});
  EXPECT_EQ(cyc.out, "12 4\n");
}

TEST(CliBfile, InvalidSpecs) {
  EXPECT_EQ(run({"bfile", "--family", "pn", "--from", "2", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"bfile", "--family", "pn", "--from", "9", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"bfile", "--family", "pmn", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"bfile", "--family", "pmn", "--m", "2", "--to", "5"}).code, 2);
  EXPECT_EQ(run({"bfile", "--family", "pmn", "--m", "5", "--from", "4", "--to", "9"}).code, 2);
  EXPECT_EQ(run({"bfile", "--family", "squares", "--to", "5"}).code, 2);
}

TEST(CliBfile, ValuesMatchLibraryAndParallelismIsInvisible) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> families{
      {"pn", {}}, {"pn-cyclic", {}}, {"pmn", {"--m", "5"}}, {"pmn-cyclic", {"--m", "6"}},
      {"triangles-nearest", {}}, {"quadrilaterals-nearest", {}}};
  for (const auto& [name, extra] : families) {
    std::vector<std::string> args{"bfile", "--family", name, "--to", "120"};
    args.insert(args.end(), extra.begin(), extra.end());
    auto serial = args;
    serial.insert(serial.end(), {"--jobs", "1"});
    auto parallel = args;
    parallel.insert(parallel.end(), {"--jobs", "4"});
    const auto a = run(serial);
    const auto b = run(parallel);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out) << name;

    SequenceSpec spec;
    spec.family = *parse_family(name);
    if (!extra.empty()) spec.m = std::stoll(extra[1]);
    for (const auto& line : lines_of(a.out)) {
      const auto cells = split(line, ' ');
      ASSERT_EQ(cells.size(), 2U);
      ASSERT_EQ(cells[1], spec.value(std::stoll(cells[0])).get_str()) << name << " " << line;
    }
  }
}

TEST(CliBfile, WritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "polycount_bfile_test.txt";
  const auto r = run({"bfile", "--family", "pn", "--to", "10", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  EXPECT_EQ(contents.str(), run({"bfile", "--family", "pn", "--to", "10"}).out);
  std::filesystem::remove(path);
}

TEST(CliVerify, PassesAndReportsJson) {
  const auto r = run({"verify", "--max-n", "9"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("all agree"), std::string::npos);

  const auto j = run({"verify", "--max-n", "6", "--format", "json", "--seed", "5"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["schema"], "polycount.verify/1");
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["ok"], true);
  EXPECT_FALSE(doc["checks"].empty());
  for (const auto& c : doc["checks"]) EXPECT_EQ(c["agree"], true);
}

TEST(CliVerify, RejectsOversizedRange) {
  EXPECT_EQ(run({"verify", "--max-n", "30"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-n", "2"}).code, 2);
}

TEST(CliVerify, CatchesInjectedFault) {
  const auto r = run({"verify", "--max-n", "8", "--inject-fault", "7,4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("n=7 m=4"), std::string::npos) << r.err;

  const auto p = run({"verify", "--max-n", "8", "--inject-fault", "6"});
  EXPECT_EQ(p.code, 1);
  EXPECT_NE(p.err.find("n=6"), std::string::npos) << p.err;
}

TEST(CliBench, ReportsDigitsAndFingerprint) {
  const auto r = run({"bench", "--n", "100", "--repeat", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string digits = std::to_string(count_polygons(100).get_str().size());
  EXPECT_NE(r.out.find("digits " + digits + "\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reproducible yes"), std::string::npos);
  EXPECT_NE(r.out.find("fnv1a64 "), std::string::npos);
  EXPECT_EQ(run({"bench", "--n", "1"}).code, 2);
}

TEST(Fnv1a, KnownVectors) {
  EXPECT_EQ(cli::fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(cli::fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}
