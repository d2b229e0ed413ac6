#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wz/target.hpp"
#include "wz/verify.hpp"

namespace wz {

struct CatalogEntry {
  std::string id;
  std::string group;  // "tableI", "tableII", "morefor" or "solution"
  Rational s;
  Rational z;
  Integer a;
  Integer b;
  int c_sign = 1;
  Rational c_squared;
  /// Other published values of c^2 that disagree with the verified one.
  std::vector<Rational> c_squared_alternatives;
  Rational rhs_geom = 1;
  Rational rhs_t = Rational(1, 2);
  std::string B_dsl;
  std::optional<RationalFunction> R;
  std::optional<RationalFunction> S;
  std::optional<Rational> y;
  std::string notes;

  bool has_pair() const { return R && S && y; }
  /// The pair with term parsed from B_dsl; throws DomainError without pair data.
  WZPair pair() const;
  HyperTerm term() const;
  RhsSpec rhs() const { return {c_squared, rhs_geom, rhs_t}; }
  SeriesTarget target() const { return {s, z, a, b, c_squared}; }
};

/// 8 rows of Table I, 3 of Table II, the eleven generalized formulas and the
/// two worked solutions, in that order.
const std::vector<CatalogEntry>& builtin_catalog();
const CatalogEntry* find_entry(const std::string& id);

// JSON persistence, schema "wzpair-1".
inline constexpr const char* kPairSchema = "wzpair-1";

std::string pairs_to_json(const std::vector<WZPair>& pairs);
/// Throws SchemaError on malformed input or a version mismatch; nothing is
/// returned unless every record parses.
std::vector<WZPair> pairs_from_json(const std::string& text);

void save_pairs(const std::vector<WZPair>& pairs, const std::string& path);
std::vector<WZPair> load_pairs(const std::string& path);

struct ReportRecord {
  std::string entry_id;
  std::string check;
  std::string status;
  std::vector<std::pair<std::string, std::string>> payload;
  std::string tool_version;
  std::string timestamp;
};

std::string reports_to_json(const std::vector<ReportRecord>& records);
std::vector<ReportRecord> reports_from_json(const std::string& text);

/// Reading of the search-family definition, whose printed form contains two
/// malformed Pochhammer expressions.
inline constexpr const char* kFamilyNote =
    "family bin1: the printed factors ((1-s)_n+j3 k)_n and (1_n+j5 k) are read as (1-s+j3 k)_n and (1+j5 k)_n";

/// Human-readable table of the catalog, followed by the non-empty notes.
std::string catalog_table(const std::vector<CatalogEntry>& entries);

}  // namespace wz
