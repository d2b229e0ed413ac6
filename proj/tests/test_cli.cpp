#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "wz/catalog.hpp"
#include "wz/cli.hpp"

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};
Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = wz::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == wz::cli::kUsageError);
  CHECK(cli({"frobnicate"}).code == wz::cli::kUsageError);
  Run bad = cli({"parse", "z=1 * poch(1/2;q)"});
  CHECK(bad.code == wz::cli::kUsageError);
  CHECK(bad.err.find("column 16") != std::string::npos);
  CHECK(cli({"verify", "no-such-entry"}).code == wz::cli::kUsageError);
}

TEST_CASE("parse and quotient") {
  Run p = cli({"parse", "z=-1/4*poch(1/2;n)^3/poch(1;n)^3"});
  CHECK(p.code == 0);
  CHECK(p.out == "z=-1/4 * poch(1/2;n)^3/poch(1;n)^3\n");
  Run q = cli({"quotient", "z=-1/4*poch(1/2;n)^3/poch(1;n)^3", "--var", "n"});
  CHECK(q.code == 0);
  CHECK(q.out.find("(1+2*n)^3/(8*(1+n)^3)") != std::string::npos);
}

TEST_CASE("verify a catalog entry") {
  Run v = cli({"verify", "morefor2", "--ks", "0,1"});
  CHECK(v.code == 0);
  CHECK(v.out.find("result: PASS") != std::string::npos);
  Run j = cli({"--json", "verify", "morefor2", "--ks", "0"});
  CHECK(j.code == 0);
  CHECK(!wz::reports_from_json(j.out).empty());
}

TEST_CASE("sum and insufficient precision") {
  Run s = cli({"--precision", "30", "sum", "morefor6", "--k", "1"});
  CHECK(s.code == 0);
  CHECK(s.out.find("matched") != std::string::npos);
  Run slow = cli({"--precision", "60", "sum", "morefor1", "--k", "1", "--method", "direct"});
  CHECK(slow.code == wz::cli::kNumericInsufficient);
}

TEST_CASE("discover writes pairs and reports empty searches") {
  auto path = (std::filesystem::temp_directory_path() / "wz_cli_discover.json").string();
  Run d = cli({"discover", "--family", "bin2", "--target", "tableII-z-1/16", "--t", "1/3", "--grid",
               "j1:-1 j2:0 j4:1 j5:1/2 j6:1 j7:1/2", "--out", path});
  CHECK(d.code == 0);
  CHECK(wz::load_pairs(path).size() == 1);
  Run verify = cli({"verify", path, "--ks", "0"});
  CHECK(verify.code == 0);
  std::filesystem::remove(path);
  Run none = cli({"discover", "--family", "bin1", "--target", "tableII-z-1/16", "--grid",
                  "j1:0 j2:0 j4:0 j5:0"});
  CHECK(none.code == wz::cli::kNoSolution);
}

TEST_CASE("catalog listing and export") {
  Run list = cli({"catalog", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("morefor11") != std::string::npos);
  auto path = (std::filesystem::temp_directory_path() / "wz_cli_catalog.json").string();
  CHECK(cli({"catalog", "--export", path}).code == 0);
  CHECK(wz::load_pairs(path).size() == 24);
  std::filesystem::remove(path);
}
