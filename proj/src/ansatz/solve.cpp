#include <algorithm>
#include <set>

#include "wz/ansatz.hpp"
#include "wz/errors.hpp"

namespace wz {

namespace {

// Inverse of unknown_name: "d10" -> (1,0), "d1_12" -> (1,12).
std::optional<std::pair<int, int>> unknown_index(const std::string& name) {
  if (name.size() < 3) return std::nullopt;
  std::string rest = name.substr(1);
  auto us = rest.find('_');
  try {
    if (us != std::string::npos) return std::pair{std::stoi(rest.substr(0, us)), std::stoi(rest.substr(us + 1))};
    if (rest.size() == 2) return std::pair{rest[0] - '0', rest[1] - '0'};
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

Solution make_solution(const Assignment& values) {
  Solution s;
  s.values = values;
  for (const auto& [name, v] : values) {
    if (name == "y") {
      s.y = v;
      continue;
    }
    auto idx = unknown_index(name);
    if (!idx) continue;
    if (name[0] == 'd') s.d[*idx] = v;
    if (name[0] == 'e') s.e[*idx] = v;
  }
  return s;
}

std::string w_for(const std::string& d) { return "w" + d.substr(1); }

}  // namespace

LinearSolve solve_linear(const std::vector<LinExpr>& equations) {
  std::set<std::string> symbol_set;
  for (const auto& eq : equations)
    for (const auto& [name, c] : eq.terms()) symbol_set.insert(name);
  std::vector<std::string> symbols(symbol_set.begin(), symbol_set.end());
  const std::size_t cols = symbols.size();

  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : equations) {
    if (eq.is_zero()) continue;
    std::vector<Rational> row(cols + 1);
    for (std::size_t j = 0; j < cols; ++j) row[j] = eq.coefficient(symbols[j]);
    row[cols] = -eq.constant();
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    Rational inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = col; j <= cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  LinearSolve out;
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][cols] != 0) {
      out.consistent = false;
      return out;
    }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) out.free.push_back(symbols[j]);
  for (std::size_t i = 0; i < rank; ++i) {
    bool determined = true;
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_pivot[j] && rows[i][j] != 0) determined = false;
    if (determined) out.pinned[symbols[pivot_col[i]]] = rows[i][cols];
  }
  return out;
}

SolveOutcome solve_H(const Poly2U& h) {
  std::vector<LinExpr> equations;
  for (const auto& [m, c] : h.terms()) equations.push_back(c);

  LinearSolve first = solve_linear(equations);
  if (!first.consistent) return NoSolution{"the linear system is inconsistent"};

  if (first.free.empty()) {
    const Assignment& v = first.pinned;
    auto y = v.find("y");
    if (y == v.end()) return Underdetermined{{"y"}};
    for (const auto& [name, value] : v) {
      if (name[0] != 'd') continue;
      auto w = v.find(w_for(name));
      Rational expected = y->second * value;
      Rational got = w == v.end() ? Rational(0) : w->second;
      if (got != expected)
        throw InconsistentBilinear("linear solution has " + w_for(name) + " = " + to_string(got) + " but y*" +
                                   name + " = " + to_string(expected));
    }
    if (y->second == 0) return NoSolution{"y = 0"};
    return make_solution(v);
  }

  auto y = first.pinned.find("y");
  if (y == first.pinned.end()) return Underdetermined{first.free};
  const Rational yv = y->second;
  if (yv == 0) return NoSolution{"y = 0"};

  // With y known, w_ij = y d_ij is linear: substitute and solve again.
  std::map<std::string, LinExpr> replace;
  replace["y"] = LinExpr(yv);
  for (const auto& eq : equations)
    for (const auto& [name, c] : eq.terms())
      if (name[0] == 'w') replace[name] = LinExpr::symbol("d" + name.substr(1), yv);
  std::vector<LinExpr> reduced;
  for (const auto& eq : equations) reduced.push_back(eq.substitute(replace));
  LinearSolve second = solve_linear(reduced);
  if (!second.consistent) return NoSolution{"inconsistent after imposing w = y*d"};
  if (!second.free.empty()) return Underdetermined{second.free};

  Assignment values = second.pinned;
  values["y"] = yv;
  for (const auto& [name, value] : second.pinned)
    if (name[0] == 'd') values[w_for(name)] = yv * value;
  return make_solution(values);
}

}  // namespace wz
