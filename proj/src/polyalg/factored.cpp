#include "wz/factored.hpp"

#include "wz/errors.hpp"

namespace wz {

FactoredRational::FactoredRational(Rational scale) : scale_(std::move(scale)) {
  if (scale_ == 0) throw DomainError("factored rational with zero scale");
}

FactoredRational::FactoredRational(const AffineForm& f, int exponent) { multiply(f, exponent); }

void FactoredRational::multiply(const AffineForm& f, int exponent) {
  if (exponent == 0) return;
  if (f.is_zero()) {
    if (exponent < 0) throw DivisionByZero();
    throw DomainError("zero affine factor in factored rational");
  }
  auto [s, prim] = f.primitive();
  scale_ *= pow(s, exponent);
  if (prim.is_constant()) return;  // prim == 1
  auto [it, inserted] = factors_.emplace(prim, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
  scale_ *= other.scale_;
  for (const auto& [f, e] : other.factors_) {
    auto [it, inserted] = factors_.emplace(f, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }
  return *this;
}

FactoredRational FactoredRational::inverse() const {
  FactoredRational r(Rational(1) / scale_);
  for (const auto& [f, e] : factors_) r.factors_.emplace(f, -e);
  return r;
}

FactoredRational FactoredRational::scaled(const Rational& s) const {
  if (s == 0) throw DomainError("factored rational with zero scale");
  FactoredRational r = *this;
  r.scale_ *= s;
  return r;
}

FactoredRational FactoredRational::shifted(Var v, const Rational& delta) const {
  FactoredRational r(scale_);
  for (const auto& [f, e] : factors_) r.multiply(f.shifted(v, delta), e);
  return r;
}

int FactoredRational::exponent_of(const AffineForm& primitive_form) const {
  auto it = factors_.find(primitive_form);
  return it == factors_.end() ? 0 : it->second;
}

std::vector<std::pair<AffineForm, int>> FactoredRational::numerator_factors() const {
  std::vector<std::pair<AffineForm, int>> out;
  for (const auto& [f, e] : factors_)
    if (e > 0) out.emplace_back(f, e);
  return out;
}

std::vector<std::pair<AffineForm, int>> FactoredRational::denominator_factors() const {
  std::vector<std::pair<AffineForm, int>> out;
  for (const auto& [f, e] : factors_)
    if (e < 0) out.emplace_back(f, -e);
  return out;
}

Rational FactoredRational::eval(const Rational& n, const Rational& k) const {
  Rational num = scale_, den = 1;
  for (const auto& [f, e] : factors_) {
    Rational v = f.eval(n, k);
    if (e > 0)
      num *= pow(v, e);
    else
      den *= pow(v, -e);
  }
  if (den == 0) throw DivisionByZero();
  return num / den;
}

std::string FactoredRational::to_string() const {
  // Items of one side joined by "*"; a multi-item denominator is parenthesized.
  auto side = [](const Integer& c, const std::vector<std::pair<AffineForm, int>>& fs, bool keep_one) {
    std::vector<std::string> items;
    if (c != 1 || (fs.empty() && keep_one)) items.push_back(c.get_str());
    for (const auto& [f, e] : fs) items.push_back("(" + f.to_string() + ")" + (e > 1 ? "^" + std::to_string(e) : ""));
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : "*") + item;
    return std::make_pair(s, items.size());
  };
  Rational a = abs(scale_);
  auto [num, num_items] = side(a.get_num(), numerator_factors(), true);
  auto [den, den_items] = side(a.get_den(), denominator_factors(), false);
  std::string out = (scale_ < 0 ? "-" : "") + num;
  if (den_items == 1) out += "/" + den;
  else if (den_items > 1) out += "/(" + den + ")";
  return out;
}

FactoredRational factored_mul(const FactoredRational& a, const FactoredRational& b) { return a * b; }

Poly2 product_poly(const std::vector<std::pair<AffineForm, int>>& factors) {
  Poly2 p = Poly2::constant(1);
  for (const auto& [f, e] : factors) {
    Poly2 fp = poly_from_affine(f);
    for (int i = 0; i < e; ++i) p = p * fp;
  }
  return p;
}

RationalFunction expand(const FactoredRational& f) {
  Poly2 num = product_poly(f.numerator_factors()).scaled(Rational(f.scale().get_num()));
  Poly2 den = product_poly(f.denominator_factors()).scaled(Rational(f.scale().get_den()));
  return {num, den};
}

}  // namespace wz
