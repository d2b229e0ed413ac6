#include "wz/linexpr.hpp"

#include "wz/errors.hpp"

namespace wz {

LinExpr LinExpr::symbol(const std::string& name, const Rational& coeff) {
  LinExpr e;
  if (coeff != 0) e.terms_.emplace(name, coeff);
  return e;
}

Rational LinExpr::coefficient(const std::string& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::string> LinExpr::symbols() const {
  std::vector<std::string> out;
  for (const auto& [name, c] : terms_) out.push_back(name);
  return out;
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
  constant_ += other.constant_;
  for (const auto& [name, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(name, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) { return *this += -other; }

LinExpr& LinExpr::operator*=(const Rational& factor) {
  if (factor == 0) {
    constant_ = 0;
    terms_.clear();
    return *this;
  }
  constant_ *= factor;
  for (auto& [name, c] : terms_) c *= factor;
  return *this;
}

LinExpr LinExpr::operator-() const {
  LinExpr r = *this;
  r *= Rational(-1);
  return r;
}

Rational LinExpr::eval(const Assignment& values) const {
  Rational v = constant_;
  for (const auto& [name, c] : terms_) {
    auto it = values.find(name);
    if (it == values.end()) throw DomainError("unassigned unknown '" + name + "'");
    v += c * it->second;
  }
  return v;
}

LinExpr LinExpr::partial_eval(const Assignment& values) const {
  LinExpr r(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = values.find(name);
    if (it == values.end())
      r += symbol(name, c);
    else
      r += LinExpr(c * it->second);
  }
  return r;
}

LinExpr LinExpr::substitute(const std::map<std::string, LinExpr>& replacement) const {
  LinExpr r(constant_);
  for (const auto& [name, c] : terms_) {
    auto it = replacement.find(name);
    r += it == replacement.end() ? symbol(name, c) : it->second * c;
  }
  return r;
}

std::string LinExpr::to_string() const {
  std::string out;
  auto put = [&out](const Rational& c, const std::string& name) {
    bool negative = c < 0;
    Rational a = negative ? Rational(-c) : c;
    if (!out.empty())
      out += negative ? " - " : " + ";
    else if (negative)
      out += "-";
    if (name.empty())
      out += wz::to_string(a);
    else
      out += (a == 1 ? std::string() : wz::to_string(a) + "*") + name;
  };
  if (constant_ != 0) put(constant_, "");
  for (const auto& [name, c] : terms_) put(c, name);
  return out.empty() ? "0" : out;
}

std::string unknown_name(char family, int i, int j) {
  std::string s(1, family);
  if (i < 10 && j < 10) return s + std::to_string(i) + std::to_string(j);
  return s + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace wz
