#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "wz/catalog.hpp"
#include "wz/errors.hpp"

using namespace wz;

TEST_CASE("catalog contents") {
  const auto& cat = builtin_catalog();
  CHECK(cat.size() == 24);
  CHECK(cat.front().id == "tableI-z-1");
  CHECK(cat.back().id == "solution2");
  for (const auto& e : cat) CHECK_MESSAGE(e.has_pair(), e.id);
  const CatalogEntry* z19 = find_entry("tableI-z1/9");
  REQUIRE(z19);
  CHECK(z19->c_squared == 12);
  CHECK(z19->c_squared_alternatives == std::vector<Rational>{Rational(4, 3)});
  CHECK(find_entry("morefor10")->c_squared == Rational(256, 3));
  CHECK(find_entry("nope") == nullptr);
  CHECK(find_entry("morefor8")->pair().R == find_entry("solution2")->pair().R);
}

TEST_CASE("pair JSON round trip") {
  std::vector<WZPair> pairs;
  for (const auto& e : builtin_catalog()) pairs.push_back(e.pair());
  std::vector<WZPair> back = pairs_from_json(pairs_to_json(pairs));
  REQUIRE(back.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) CHECK(back[i] == pairs[i]);

  auto path = std::filesystem::temp_directory_path() / "wz_pairs_test.json";
  save_pairs(pairs, path.string());
  CHECK(load_pairs(path.string()).size() == pairs.size());
  std::filesystem::remove(path);
}

TEST_CASE("malformed pair files are refused") {
  CHECK_THROWS_AS(pairs_from_json("{"), SchemaError);
  CHECK_THROWS_AS(pairs_from_json("{}"), SchemaError);
  CHECK_THROWS_AS(pairs_from_json(R"([{"version":"wzpair-0"}])"), SchemaError);
  std::string good = pairs_to_json({find_entry("morefor2")->pair()});
  std::string broken = good;
  broken.replace(broken.find("wzpair-1"), 8, "wzpair-9");
  CHECK_THROWS_AS(pairs_from_json(broken), SchemaError);
  CHECK_THROWS(load_pairs("/nonexistent/pairs.json"));
}

TEST_CASE("report records round trip") {
  std::vector<ReportRecord> records = {
      {"morefor2", "exact-wz", "certified", {{"residual", "0"}}, "wzcli 1.0.0", "2026-01-01T00:00:00Z"},
      {"morefor2", "match-pi k=0", "matched", {}, "wzcli 1.0.0", "2026-01-01T00:00:01Z"}};
  auto back = reports_from_json(reports_to_json(records));
  REQUIRE(back.size() == 2);
  CHECK(back[0].payload == records[0].payload);
  CHECK(back[1].status == "matched");
}

TEST_CASE("table rendering lists every entry") {
  std::string table = catalog_table(builtin_catalog());
  for (const auto& e : builtin_catalog()) CHECK(table.find(e.id) != std::string::npos);
}
