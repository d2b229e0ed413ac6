#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wz/catalog.hpp"
#include "wz/dsl.hpp"
#include "wz/errors.hpp"

namespace wz {

using nlohmann::json;

namespace {

json pair_record(const WZPair& p) {
  return json{{"version", kPairSchema},
              {"id", p.id},
              {"z", to_string(p.z())},
              {"y", to_string(p.y())},
              {"B", print_term(p.term)},
              {"R_num", to_string(p.R.num)},
              {"R_den", to_string(p.R.den)},
              {"S_num", to_string(p.S.num)},
              {"S_den", to_string(p.S.den)},
              {"provenance", p.provenance}};
}

std::string field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) throw SchemaError(std::string("missing string field '") + key + "'");
  return j.at(key).get<std::string>();
}

WZPair pair_from_record(const json& j) {
  if (!j.is_object()) throw SchemaError("pair record is not an object");
  std::string version = field(j, "version");
  if (version != kPairSchema) throw SchemaError("unsupported schema version '" + version + "'");
  try {
    WZPair p;
    p.id = field(j, "id");
    p.term = parse_term(field(j, "B"));
    if (p.term.z != parse_rational(field(j, "z"))) throw SchemaError("z disagrees with the term");
    p.term.y = parse_rational(field(j, "y"));
    p.R = {parse_poly(field(j, "R_num")), parse_poly(field(j, "R_den"))};
    p.S = {parse_poly(field(j, "S_num")), parse_poly(field(j, "S_den"))};
    if (p.R.den.is_zero() || p.S.den.is_zero()) throw SchemaError("zero denominator");
    p.provenance = field(j, "provenance");
    return p;
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("invalid pair record: ") + e.what());
  }
}

}  // namespace

std::string pairs_to_json(const std::vector<WZPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) arr.push_back(pair_record(p));
  return arr.dump(2) + "\n";
}

std::vector<WZPair> pairs_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw SchemaError("expected a JSON array of pair records");
  std::vector<WZPair> out;
  for (const auto& rec : doc) out.push_back(pair_from_record(rec));
  return out;
}

void save_pairs(const std::vector<WZPair>& pairs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << pairs_to_json(pairs);
  if (!out) throw Error("write to '" + path + "' failed");
}

std::vector<WZPair> load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return pairs_from_json(buf.str());
}

std::string reports_to_json(const std::vector<ReportRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json payload = json::object();
    for (const auto& [k, v] : r.payload) payload[k] = v;
    arr.push_back({{"entry", r.entry_id},
                   {"check", r.check},
                   {"status", r.status},
                   {"payload", payload},
                   {"tool_version", r.tool_version},
                   {"timestamp", r.timestamp}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ReportRecord> reports_from_json(const std::string& text) {
  std::vector<ReportRecord> out;
  try {
    for (const auto& j : json::parse(text)) {
      ReportRecord r;
      r.entry_id = field(j, "entry");
      r.check = field(j, "check");
      r.status = field(j, "status");
      for (const auto& [k, v] : j.at("payload").items()) r.payload.emplace_back(k, v.get<std::string>());
      r.tool_version = field(j, "tool_version");
      r.timestamp = field(j, "timestamp");
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

}  // namespace wz
