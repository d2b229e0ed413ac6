#include "wz/cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wz/ansatz.hpp"
#include "wz/catalog.hpp"
#include "wz/dsl.hpp"
#include "wz/errors.hpp"
#include "wz/verify.hpp"

namespace wz::cli {

namespace {

struct Options {
  int precision = 40;
  bool json = false;
  int degree = 1;
  std::uint64_t seed = 0;
  int jobs = 1;
};

std::string timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::vector<long> parse_ks(const std::string& text) {
  std::vector<long> ks;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) ks.push_back(std::stol(item));
  return ks;
}

std::string sci(const Rational& x) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << x.get_d();
  return s.str();
}

struct Loaded {
  std::vector<WZPair> pairs;
  std::vector<const CatalogEntry*> entries;  // parallel; null when unknown
};

Loaded load_target(const std::string& what) {
  Loaded l;
  if (const CatalogEntry* e = find_entry(what)) {
    if (!e->has_pair()) throw DomainError("catalog entry '" + what + "' has no pair data");
    l.pairs.push_back(e->pair());
    l.entries.push_back(e);
    return l;
  }
  if (!std::filesystem::exists(what)) throw DomainError("'" + what + "' is neither a catalog id nor a file");
  l.pairs = load_pairs(what);
  for (const auto& p : l.pairs) l.entries.push_back(find_entry(p.id));
  return l;
}

class Reporter {
 public:
  Reporter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void add(const std::string& entry, const std::string& check, const std::string& status, const std::string& text,
           std::vector<std::pair<std::string, std::string>> payload = {}) {
    if (status == "failed" || status == "mismatched" || status == "inconsistent") failed_ = true;
    if (status == "insufficient") insufficient_ = true;
    if (json_) {
      records_.push_back({entry, check, status, std::move(payload), kToolVersion, timestamp()});
    } else {
      out_ << "  " << std::left << std::setw(16) << check << std::setw(16) << status << text << "\n";
    }
  }
  void header(const std::string& text) {
    if (!json_) out_ << text << "\n";
  }
  int finish() {
    if (json_) out_ << reports_to_json(records_);
    else out_ << "result: " << (failed_ ? "FAIL" : insufficient_ ? "INSUFFICIENT PRECISION" : "PASS") << "\n";
    return failed_ ? kVerificationFailed : insufficient_ ? kNumericInsufficient : kOk;
  }

 private:
  std::ostream& out_;
  bool json_;
  bool failed_ = false;
  bool insufficient_ = false;
  std::vector<ReportRecord> records_;
};

void verify_pair(const WZPair& p, const CatalogEntry* entry, const std::vector<long>& ks, const Options& o,
                 Reporter& rep) {
  rep.header("pair " + p.id + " (z=" + to_string(p.z()) + ", y=" + to_string(p.y()) + ")");
  WzCheck wz = check_wz_exact(p);
  rep.add(p.id, "exact-wz", wz.certified ? "certified" : "failed",
          wz.certified ? "F(n+1,k)-F(n,k) = G(n,k+1)-G(n,k) identically" : "residual " + to_string(wz.residual),
          {{"residual", to_string(wz.residual)}});

  try {
    Certificate c = certificate(p, o.seed);
    std::string text = "(" + to_string(c.C.num) + ")/(" + to_string(c.C.den) + ")";
    rep.add(p.id, "certificate", "ok", "C = " + text + ", " + std::to_string(c.spot_checks) + " spot checks",
            {{"C_num", to_string(c.C.num)}, {"C_den", to_string(c.C.den)}});
  } catch (const Error& e) {
    rep.add(p.id, "certificate", "failed", e.what());
  }

  for (long k : ks) {
    std::string name = "telescope k=" + std::to_string(k);
    try {
      TelescopeReport t = telescope_partial(p, 100, k);
      bool ok = t.holds && t.f0_zero;
      rep.add(p.id, name, ok ? "holds" : "failed",
              std::string("N=100 exact") + (t.f0_zero ? ", F(0,k)=0" : ", F(0,k) != 0"),
              {{"N", "100"}, {"k", std::to_string(k)}, {"lhs", to_string(t.lhs)}, {"rhs", to_string(t.rhs)}});
    } catch (const PoleEncountered& e) {
      rep.add(p.id, name, "failed", e.what());
    }
  }

  try {
    ConstancyReport c = constancy_check(p, ks, o.precision);
    std::string values;
    for (const auto& v : c.constants) values += (values.empty() ? "" : " ") + v.to_decimal(12);
    rep.add(p.id, "constancy", c.consistent ? "consistent" : "inconsistent", values + " [" + c.label + "]",
            {{"label", c.label}});
  } catch (const InsufficientPrecision& e) {
    rep.add(p.id, "constancy", "insufficient", e.what());
  } catch (const Error& e) {
    rep.add(p.id, "constancy", "skipped", e.what());
  }

  if (entry) {
    for (long k : ks) {
      std::string name = "match-pi k=" + std::to_string(k);
      try {
        SumResult s = sum_series(p, k, o.precision);
        MatchResult m = match_pi(s, entry->rhs(), k);
        rep.add(p.id, name, m.matched ? "matched" : "mismatched",
                "(pi*V/rho)^2 = " + m.square.to_decimal(o.precision - 5) + " vs c^2 = " + to_string(entry->c_squared) +
                    ", |delta| = " + sci(m.delta) + (s.accelerated ? " (accelerated)" : ""),
                {{"square", m.square.to_decimal(o.precision - 5)},
                 {"c_squared", to_string(entry->c_squared)},
                 {"rho", to_string(m.rho)},
                 {"terms", std::to_string(s.terms_used)}});
      } catch (const InsufficientPrecision& e) {
        rep.add(p.id, name, "insufficient", e.what());
      } catch (const Divergent& e) {
        rep.add(p.id, name, "failed", e.what());
      }
    }
  } else {
    rep.add(p.id, "match-pi", "skipped", "no catalog target for this pair");
  }

  LimitReport lim = limit_constant_check(p, std::min(o.precision, 30));
  if (!lim.applicable) {
    rep.add(p.id, "limit", "not-applicable", lim.reason);
  } else {
    bool ok = lim.series_matches && (!entry || lim.constant_sq == entry->c_squared);
    rep.add(p.id, "limit", ok ? "consistent" : "inconsistent",
            "z'=" + to_string(lim.z_prime) + ", (pi*C)^2 = " + to_string(lim.constant_sq) + " [" + lim.label + "]",
            {{"z_prime", to_string(lim.z_prime)}, {"constant_sq", to_string(lim.constant_sq)}});
  }
}

int cmd_verify(const std::string& target, const std::string& ks_text, const Options& o, std::ostream& out) {
  Loaded l = load_target(target);
  Reporter rep(out, o.json);
  std::vector<long> ks = parse_ks(ks_text);
  for (std::size_t i = 0; i < l.pairs.size(); ++i) verify_pair(l.pairs[i], l.entries[i], ks, o, rep);
  return rep.finish();
}

SumMethod method_from(const std::string& m) {
  if (m == "auto") return SumMethod::Auto;
  if (m == "direct") return SumMethod::Direct;
  if (m == "accelerated") return SumMethod::Accelerated;
  throw DomainError("unknown method '" + m + "'");
}

int cmd_sum(const std::string& target, const std::string& k_text, const std::string& method, const Options& o,
            std::ostream& out) {
  Loaded l = load_target(target);
  Rational k = parse_rational(k_text);
  int code = kOk;
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < l.pairs.size(); ++i) {
    SumResult s = sum_series(l.pairs[i], k, o.precision, method_from(method));
    nlohmann::json rec{{"id", l.pairs[i].id},
                       {"k", to_string(k)},
                       {"value", s.value.to_decimal(o.precision)},
                       {"tail_bound", sci(s.tail_bound.center())},
                       {"terms_used", s.terms_used},
                       {"accelerated", s.accelerated}};
    std::ostringstream text;
    text << "id          " << l.pairs[i].id << "\n"
         << "k           " << to_string(k) << "\n"
         << "value       " << s.value.to_decimal(o.precision) << "\n"
         << "tail_bound  " << sci(s.tail_bound.center()) << "\n"
         << "terms_used  " << s.terms_used << "\n"
         << "accelerated " << (s.accelerated ? "yes" : "no") << "\n";
    const CatalogEntry* e = l.entries[i];
    if (e && is_integer(k) && k >= 0) {
      MatchResult m = match_pi(s, e->rhs(), k.get_num().get_si());
      text << "match_pi    " << (m.matched ? "matched" : "mismatched") << " (pi*V/rho)^2 = "
           << m.square.to_decimal(o.precision - 5) << " vs c^2 = " << to_string(e->c_squared) << "\n";
      rec["square"] = m.square.to_decimal(o.precision - 5);
      rec["matched"] = m.matched;
      if (!m.matched) code = kVerificationFailed;
    }
    if (o.json) arr.push_back(rec);
    else out << text.str();
  }
  if (o.json) out << arr.dump(2) << "\n";
  return code;
}

int cmd_discover(const std::string& family, const std::string& target_id, const std::string& grid_text,
                 const std::string& t_text, const std::string& dshape, const std::string& out_path, const Options& o,
                 std::ostream& out, std::ostream& err) {
  const CatalogEntry* e = find_entry(target_id);
  if (!e) throw DomainError("unknown target '" + target_id + "'");
  FamilySpec spec;
  if (family == "bin1") spec.family = Family::Bin1;
  else if (family == "bin2") spec.family = Family::Bin2;
  else if (family == "bin3") spec.family = Family::Bin3;
  else throw DomainError("unknown family '" + family + "' (bin1, bin2, bin3)");
  if (dshape == "std") spec.d_shape = DShape::Standard;
  else if (dshape == "half") spec.d_shape = DShape::Half;
  else if (dshape == "other") spec.d_shape = DShape::Other;
  else throw DomainError("unknown D(k) shape '" + dshape + "' (std, half, other)");
  spec.t = t_text.empty() ? e->rhs_t : parse_rational(t_text);

  DiscoverOptions opts;
  opts.degree = o.degree;
  opts.jobs = o.jobs;
  auto grid = parse_grid(grid_text, family_slots(spec.family));
  DiscoverResult r = discover(spec, e->target(), grid, opts);

  std::vector<WZPair> pairs;
  for (std::size_t i = 0; i < r.pairs.size(); ++i) {
    const auto& d = r.pairs[i];
    std::string js;
    for (const auto& v : d.j) js += (js.empty() ? "" : ",") + to_string(v);
    pairs.push_back({"discovered-" + std::to_string(i + 1), d.term, d.R, d.S,
                     "discover " + family + " target=" + target_id + " j=(" + js + ")"});
  }
  std::size_t prefiltered = 0;
  for (const auto& c : r.log) prefiltered += c.status == "prefilter";
  std::ostream& summary = out_path.empty() ? err : out;
  summary << "candidates " << r.log.size() << ", prefiltered " << prefiltered << ", pairs " << pairs.size() << "\n";
  if (out_path.empty()) out << pairs_to_json(pairs);
  else save_pairs(pairs, out_path);
  return pairs.empty() ? kNoSolution : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discover and verify WZ pairs for Ramanujan-type series", "wzcli"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision", o.precision, "digits for numerical checks")->check(CLI::Range(1, 100000));
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--degree", o.degree, "ansatz degree")->check(CLI::Range(1, 8));
  app.add_option("--seed", o.seed, "seed for certificate spot checks");
  app.add_option("--jobs", o.jobs, "discovery worker threads")->check(CLI::Range(1, 256));

  std::string term_text, var = "n", target, ks = "0,1,2", k_text = "0", method = "auto";
  std::string family, grid, t_text, dshape = "std", out_path, export_path;
  bool list = false;

  auto* parse = app.add_subcommand("parse", "parse a term and print its canonical form");
  parse->add_option("term", term_text)->required();
  auto* quotient = app.add_subcommand("quotient", "print the factored shift quotient B(n+1,k)/B(n,k) or B(n,k+1)/B(n,k)");
  quotient->add_option("term", term_text)->required();
  quotient->add_option("--var", var)->check(CLI::IsMember({"n", "k"}));
  auto* disc = app.add_subcommand("discover", "search a family for WZ pairs");
  disc->add_option("--family", family)->required();
  disc->add_option("--target", target, "catalog id supplying s, z, a, b")->required();
  disc->add_option("--grid", grid, "e.g. \"j1:-1,0 j4:1\"; other slots use the default set");
  disc->add_option("--t", t_text, "t of D(k); defaults to the target's");
  disc->add_option("--dshape", dshape)->check(CLI::IsMember({"std", "half", "other"}));
  disc->add_option("--out", out_path, "write pairs here instead of stdout");
  auto* verify = app.add_subcommand("verify", "full report for a pair file or catalog id");
  verify->add_option("target", target)->required();
  verify->add_option("--ks", ks, "comma separated k values");
  auto* sum = app.add_subcommand("sum", "evaluate sum_n G(n,k) / (y^k K(k))");
  sum->add_option("target", target)->required();
  sum->add_option("--k", k_text);
  sum->add_option("--method", method)->check(CLI::IsMember({"auto", "direct", "accelerated"}));
  auto* catalog = app.add_subcommand("catalog", "list or export the built-in catalog");
  catalog->add_flag("--list", list);
  catalog->add_option("--export", export_path);
  for (auto* sc : {parse, quotient, disc, verify, sum, catalog}) sc->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (*parse) {
      HyperTerm t = parse_term(term_text);
      if (o.json) out << nlohmann::json{{"term", print_term(t)}, {"version", kDslVersion}}.dump() << "\n";
      else out << print_term(t) << "\n";
      return kOk;
    }
    if (*quotient) {
      HyperTerm t = parse_term(term_text);
      Var v = var == "n" ? Var::N : Var::K;
      FactoredRational q = pochhammer_quotient(t, v);
      std::string lhs = v == Var::N ? "B(n+1,k)/B(n,k)" : "B(n,k+1)/B(n,k)";
      ShiftQuotient full = shift_quotient(t, v);
      std::string full_text = (full.times_symbolic_y ? "y * " : "") + full.value.to_string();
      if (o.json)
        out << nlohmann::json{{"var", var}, {"quotient", q.to_string()}, {"with_geometric", full_text}}.dump() << "\n";
      else
        out << lhs << " = " << q.to_string() << "\n"
            << "with geometric part: " << full_text << "\n";
      return kOk;
    }
    if (*disc) return cmd_discover(family, target, grid, t_text, dshape, out_path, o, out, err);
    if (*verify) return cmd_verify(target, ks, o, out);
    if (*sum) return cmd_sum(target, k_text, method, o, out);
    if (*catalog) {
      const auto& entries = builtin_catalog();
      if (!export_path.empty()) {
        std::vector<WZPair> pairs;
        for (const auto& e : entries)
          if (e.has_pair()) pairs.push_back(e.pair());
        save_pairs(pairs, export_path);
        out << "exported " << pairs.size() << " pairs to " << export_path << "\n";
        return kOk;
      }
      if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries)
          arr.push_back({{"id", e.id},
                         {"s", to_string(e.s)},
                         {"z", to_string(e.z)},
                         {"a", to_string(e.a)},
                         {"b", to_string(e.b)},
                         {"c_squared", to_string(e.c_squared)},
                         {"rhs_geom", to_string(e.rhs_geom)},
                         {"rhs_t", to_string(e.rhs_t)},
                         {"B", e.B_dsl},
                         {"notes", e.notes}});
        out << arr.dump(2) << "\n";
      } else {
        out << catalog_table(entries);
      }
      (void)list;
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InsufficientPrecision& e) {
    err << "insufficient precision: " << e.what() << "\n";
    return kNumericInsufficient;
  } catch (const Divergent& e) {
    err << "divergent: " << e.what() << "\n";
    return kNumericInsufficient;
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace wz::cli
