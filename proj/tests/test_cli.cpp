#include <doctest.h>
#include <json.hpp>

#include <sstream>

#include "commands.hpp"
#include "kelc/poly.hpp"
#include "kelc/sequences.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = kelc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct CsvRow {
  std::size_t k;
  std::size_t lower;
  std::size_t upper;
  std::optional<std::size_t> exact;
  std::string method;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "k,lower,upper,exact,method");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string k, lo, hi, ex, method;
    std::getline(ls, k, ',');
    std::getline(ls, lo, ',');
    std::getline(ls, hi, ',');
    std::getline(ls, ex, ',');
    std::getline(ls, method);
    rows.push_back({std::stoul(k), std::stoul(lo), std::stoul(hi),
                    ex.empty() ? std::nullopt : std::optional<std::size_t>(std::stoul(ex)), method});
  }
  return rows;
}

}  // namespace

TEST_CASE("primes") {
  const Result r = run({"primes", "--min", "2", "--max", "40", "--format", "json"});
  CHECK(r.code == 0);
  std::vector<int> ps;
  for (const auto& row : json::parse(r.out)) ps.push_back(row["p"]);
  CHECK(ps == std::vector<int>{5, 13, 29, 37});

  const Result empty = run({"primes", "--min", "6", "--max", "12", "--format", "json"});
  CHECK(empty.code == 0);
  CHECK(json::parse(empty.out).empty());
  CHECK(run({"primes", "--min", "40", "--max", "2"}).code == 1);
  CHECK(run({"primes", "--case", "3"}).code == 1);

  const Result table = run({"primes", "--min", "2", "--max", "40", "--case", "1"});
  CHECK(table.code == 0);
  CHECK(table.out.find("37") != std::string::npos);
  CHECK(table.out.find("13") == std::string::npos);
}

TEST_CASE("generate") {
  CHECK(run({"generate", "--p", "5", "--triple", "0,1,2", "--kind", "u", "--format", "bits"}).out ==
        "1010001101\n");
  CHECK(run({"generate", "--p", "5", "--triple", "0,1,2", "--kind", "q", "--format", "bits"}).out ==
        "11201\n");
  CHECK(run({"generate", "--p", "5", "--triple", "0,1,2", "--kind", "v", "--format", "bits"}).out ==
        "1100-\n");
  CHECK(run({"generate", "--p", "12", "--triple", "0,1,2"}).code == 1);
  CHECK(run({"generate", "--p", "13", "--triple", "0,0,2"}).code == 1);
  CHECK(run({"generate", "--p", "13"}).code == 1);
}

TEST_CASE("generate json round-trips through analysis") {
  const Result g = run({"generate", "--p", "13", "--triple", "1,2,0", "--format", "json"});
  REQUIRE(g.code == 0);
  const json j = json::parse(g.out);
  CHECK(j["p"] == 13);
  CHECK(j["triple"] == "1,2,0");
  CHECK(j["kind"] == "u");
  CHECK(j["gated"] == true);

  std::vector<kelc::Residue> terms;
  for (int v : j["terms"]) terms.push_back(static_cast<kelc::Residue>(v));
  const kelc::SequenceFp s{13, terms, kelc::SequenceKind::kU};

  const Result a = run({"analyze", "--p", "13", "--triple", "1,2,0", "--theta",
                        std::to_string(j["theta"].get<int>())});
  REQUIRE(a.code == 0);
  const json aj = json::parse(a.out);
  CHECK(aj["lc"] == kelc::linear_complexity(s));
  CHECK(aj["autocorrelation"].get<std::vector<std::int64_t>>() ==
        kelc::autocorrelation_profile(s).values);
}

TEST_CASE("analyze") {
  const json g = json::parse(run({"analyze", "--p", "13", "--triple", "0,1,3"}).out);
  CHECK(g["lc"] == 23);
  CHECK(g["gated"] == true);
  const json bad =
      json::parse(run({"analyze", "--p", "5", "--triple", "0,1,3", "--theta", "2"}).out);
  CHECK(bad["optimal"] == false);
  CHECK(bad["autocorrelation"][2] == -6);
  const json good =
      json::parse(run({"analyze", "--p", "5", "--triple", "0,1,2", "--theta", "2"}).out);
  CHECK(good["optimal"] == true);
  CHECK(good["lc"] == 9);
  CHECK(good["balanced"] == true);
  CHECK(run({"analyze", "--p", "13", "--triple", "0,1,3", "--theta", "4"}).code == 1);
}

TEST_CASE("kerror oracle profile at p = 13") {
  const Result r = run({"kerror", "--p", "13", "--triple", "0,1,3", "--kind", "u", "--k-max",
                        "4", "--method", "oracle"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 5);
  const std::size_t want[] = {23, 23, 20, 20, 18};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(rows[k].k == k);
    CHECK(rows[k].exact == want[k]);
    CHECK(rows[k].method == "oracle");
  }
}

TEST_CASE("kerror defaults merge oracle, witness and predictor") {
  const Result r = run({"kerror", "--p", "29", "--kind", "q", "--k-max", "9"});
  CHECK(r.code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[9].exact == 15u);

  const Result strict = run({"kerror", "--p", "29", "--kind", "q", "--k-max", "9", "--strict"});
  CHECK(strict.code == 2);
}

TEST_CASE("kerror with k-max 0 reports the linear complexity") {
  const auto rows = parse_csv(
      run({"kerror", "--p", "13", "--triple", "0,2,3", "--k-max", "0", "--method", "oracle"}).out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].exact == 23u);
}

TEST_CASE("kerror csv and json carry the same rows") {
  const std::vector<std::string> base = {"kerror", "--p",      "13",    "--triple", "0,1,3",
                                         "--kind", "u",        "--k-max", "6",      "--method",
                                         "all"};
  auto csv_args = base;
  auto json_args = base;
  json_args.insert(json_args.end(), {"--out", "json"});
  const auto rows = parse_csv(run(csv_args).out);
  const json j = json::parse(run(json_args).out);
  REQUIRE(j["rows"].size() == rows.size());
  CHECK(j["p"] == 13);
  CHECK(j["kind"] == "u");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const json& row = j["rows"][i];
    CHECK(row["k"] == rows[i].k);
    CHECK(row["lower"] == rows[i].lower);
    CHECK(row["upper"] == rows[i].upper);
    CHECK(row["method"] == rows[i].method);
    if (rows[i].exact) {
      CHECK(row["exact"] == *rows[i].exact);
    } else {
      CHECK(row["exact"].is_null());
    }
    CHECK(row.contains("witness_support"));
  }
}

TEST_CASE("kerror budget and method errors") {
  const Result cut = run({"kerror", "--p", "13", "--triple", "0,1,3", "--k-max", "3", "--method",
                          "oracle", "--budget", "50"});
  CHECK(cut.code == 0);
  const auto rows = parse_csv(cut.out);
  CHECK_FALSE(rows.back().exact.has_value());
  CHECK(run({"kerror", "--p", "13", "--triple", "0,1,3", "--k-max", "3", "--method", "oracle",
             "--budget", "50", "--strict"})
            .code == 2);
  CHECK(run({"kerror", "--p", "13", "--triple", "0,1,3", "--kind", "q", "--k-max", "3",
             "--method", "witness"})
            .code == 1);
  CHECK(run({"kerror", "--p", "13", "--triple", "0,1,2", "--k-max", "3", "--method", "predict"})
            .code == 1);
  CHECK(run({"kerror", "--p", "13", "--triple", "0,1,3", "--k-max", "99"}).code == 1);
}

TEST_CASE("the v table conflict at p = 13 surfaces as a verification failure") {
  const Result r = run({"kerror", "--p", "13", "--triple", "0,1,3", "--kind", "v", "--k-max", "5",
                        "--method", "all"});
  CHECK(r.code == 3);
  CHECK(r.err.find("k=4") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--p", "5"}).code == 0);
  CHECK(run({"verify", "--p", "17"}).code == 3);
  CHECK(run({"verify", "--p", "29", "--budget", "100"}).code == 2);
  const Result j = run({"verify", "--p", "5", "--triple", "0,1,2", "--format", "json"});
  CHECK(j.code == 0);
  const json report = json::parse(j.out);
  CHECK(report["exit_code"] == 0);
  CHECK_FALSE(report["checks"].empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"kerror", "--p", "13"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
