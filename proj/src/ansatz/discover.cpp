#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "wz/ansatz.hpp"
#include "wz/errors.hpp"
#include "wz/verify.hpp"

namespace wz {

int family_slots(Family f) { return f == Family::Bin1 ? 5 : 7; }

std::vector<Rational> default_grid() {
  std::vector<Rational> g;
  for (int i = -3; i <= 3; ++i) g.emplace_back(i);
  for (Rational q : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(3, 2)}) {
    g.push_back(q);
    g.push_back(-q);
  }
  std::sort(g.begin(), g.end());
  return g;
}

namespace {

void add_poch(HyperTerm& t, const Rational& c0, const Rational& ck, Var v, int e) {
  t.factors.push_back(make_poch(AffineForm(c0, 0, ck), v, e));
}

}  // namespace

HyperTerm family_term(const FamilySpec& spec, const SeriesTarget& target, const std::vector<Rational>& j_in) {
  const int slots = family_slots(spec.family);
  if (static_cast<int>(j_in.size()) != slots)
    throw DomainError("family needs " + std::to_string(slots) + " j-values");
  std::vector<Rational> j = j_in;
  if (target.s != Rational(1, 2)) j[2] = j[1];

  HyperTerm t;
  t.z = target.z;
  const Rational h(1, 2);
  add_poch(t, h, j[0], Var::N, 1);
  add_poch(t, target.s, j[1], Var::N, 1);
  // The printed family has "((1-s)_n+j3 k)_n" and "(1_n+j5 k)", which are not
  // Pochhammer symbols; they are read as (1-s+j3 k)_n and (1+j5 k)_n.
  add_poch(t, 1 - target.s, j[2], Var::N, 1);
  add_poch(t, 1, 0, Var::N, -1);
  add_poch(t, 1, j[3], Var::N, -1);
  add_poch(t, 1, j[4], Var::N, -1);
  if (spec.family == Family::Bin2) {
    add_poch(t, h, j[5], Var::N, 1);
    add_poch(t, h, j[6], Var::N, -1);
  } else if (spec.family == Family::Bin3) {
    for (Rational c : {Rational(1, 4), Rational(3, 4)}) {
      add_poch(t, c, j[5], Var::N, 1);
      add_poch(t, c, j[6], Var::N, -1);
    }
  }
  switch (spec.d_shape) {
    case DShape::Standard:
      add_poch(t, spec.t, 0, Var::K, 1);
      add_poch(t, 1 - spec.t, 0, Var::K, 1);
      add_poch(t, 1, 0, Var::K, -2);
      break;
    case DShape::Half:
      add_poch(t, h, 0, Var::K, 1);
      add_poch(t, 1, 0, Var::K, -1);
      break;
    case DShape::Other:
      for (Rational c : {Rational(1, 4), Rational(3, 4), Rational(1, 3), Rational(2, 3)}) add_poch(t, c, 0, Var::K, 1);
      add_poch(t, h, 0, Var::K, -2);
      add_poch(t, 1, 0, Var::K, -2);
      break;
  }
  return t;
}

std::vector<std::vector<Rational>> parse_grid(const std::string& text, int slots) {
  std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(slots), default_grid());
  std::istringstream in(text);
  std::string item;
  while (in >> item) {
    auto colon = item.find(':');
    if (item.size() < 3 || item[0] != 'j' || colon == std::string::npos)
      throw DomainError("grid item '" + item + "' is not of the form jN:v1,v2,...");
    int slot = std::stoi(item.substr(1, colon - 1));
    if (slot < 1 || slot > slots) throw DomainError("grid slot j" + std::to_string(slot) + " out of range");
    std::vector<Rational> values;
    std::stringstream list(item.substr(colon + 1));
    std::string v;
    while (std::getline(list, v, ','))
      if (!v.empty()) values.push_back(parse_rational(v));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    grid[static_cast<std::size_t>(slot - 1)] = values;
  }
  return grid;
}

namespace {

struct Outcome {
  CandidateLog log;
  std::optional<DiscoveredPair> pair;
};

Outcome run_candidate(const FamilySpec& spec, const SeriesTarget& target, const std::vector<Rational>& j,
                      const DiscoverOptions& options) {
  Outcome out;
  out.log.j = j;
  auto note = [&](std::string status, std::string detail) {
    out.log.status = std::move(status);
    out.log.detail = std::move(detail);
    return out;
  };
  try {
    HyperTerm t = family_term(spec, target, j);
    PrefilterResult pole = pole_prefilter(t);
    if (!pole.accepted) return note("prefilter", "pole: " + pole.detail);
    PrefilterResult term = terminating_prefilter(t, target, options.prefilter_digits);
    if (!term.accepted) return note("prefilter", "terminating: " + term.detail);

    Ansatz ans = ansatz_for(t, target.a, target.b, options.degree, options.k_shift);
    Poly2U h = assemble_H(t, ans, target.z);
    SolveOutcome sol = solve_H(h);
    if (auto* none = std::get_if<NoSolution>(&sol)) return note("no-solution", none->reason);
    if (auto* under = std::get_if<Underdetermined>(&sol)) {
      std::string free;
      for (const auto& f : under->free) free += (free.empty() ? "" : ",") + f;
      return note("underdetermined", free);
    }
    const Solution& s = std::get<Solution>(sol);
    for (const auto& u : ans.unknowns)
      if (!s.values.count(u)) return note("underdetermined", u + " does not occur in H");

    DiscoveredPair pair;
    pair.j = j;
    pair.term = t;
    pair.term.y = s.y;
    pair.R = instantiate(ans.R, s.values);
    pair.S = instantiate(ans.S, s.values);
    WZPair check{"", pair.term, pair.R, pair.S, ""};
    if (!check_wz_exact(check).certified) return note("rejected", "exact WZ re-check failed");
    if (pair.S.num.is_zero()) return note("rejected", "S vanishes identically");
    out.pair = pair;
    return note("solved", "y=" + to_string(s.y));
  } catch (const InconsistentBilinear& e) {
    return note("bilinear", e.what());
  } catch (const NotHypergeometric& e) {
    return note("not-hypergeometric", e.what());
  } catch (const Error& e) {
    return note("error", e.what());
  }
}

void enumerate(const std::vector<std::vector<Rational>>& grid, std::size_t slot, std::vector<Rational>& current,
               std::vector<std::vector<Rational>>& out) {
  if (slot == grid.size()) {
    out.push_back(current);
    return;
  }
  for (const auto& v : grid[slot]) {
    current[slot] = v;
    enumerate(grid, slot + 1, current, out);
  }
}

}  // namespace

DiscoverResult discover(const FamilySpec& spec, const SeriesTarget& target,
                        const std::vector<std::vector<Rational>>& grid_in, const DiscoverOptions& options) {
  DiscoverResult result;
  const int slots = family_slots(spec.family);
  if (static_cast<int>(grid_in.size()) != slots)
    throw DomainError("grid has " + std::to_string(grid_in.size()) + " slots, family needs " + std::to_string(slots));
  std::vector<std::vector<Rational>> grid = grid_in;
  for (auto& g : grid) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  // j3 is tied to j2 unless s = 1/2.
  if (target.s != Rational(1, 2)) grid[2] = {Rational(0)};
  for (const auto& g : grid)
    if (g.empty()) return result;

  std::vector<std::vector<Rational>> points;
  std::vector<Rational> current(static_cast<std::size_t>(slots));
  enumerate(grid, 0, current, points);
  if (target.s != Rational(1, 2))
    for (auto& p : points) p[2] = p[1];

  std::vector<Outcome> outcomes(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++)
      outcomes[i] = run_candidate(spec, target, points[i], options);
  };
  int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) { return a.log.j < b.log.j; });
  for (auto& o : outcomes) {
    if (o.pair) result.pairs.push_back(*o.pair);
    result.log.push_back(std::move(o.log));
  }
  return result;
}

}  // namespace wz
