#include "wz/dsl.hpp"

namespace wz {

namespace {

std::string poch_text(const PochFactor& f, int exponent) {
  std::string s = "poch(" + f.base.to_string() + ";" + var_name(f.var) + ")";
  if (exponent > 1) s += "^" + std::to_string(exponent);
  return s;
}

}  // namespace

std::string print_term(const HyperTerm& t) {
  std::string product;
  for (Var v : {Var::N, Var::K}) {
    std::vector<std::string> num, den;
    for (const auto& f : t.sorted_factors()) {
      if (f.var != v) continue;
      (f.exponent > 0 ? num : den).push_back(poch_text(f, std::abs(f.exponent)));
    }
    for (const auto& s : num) product += (product.empty() ? "" : "*") + s;
    if (den.empty()) continue;
    if (product.empty()) product = "1";
    if (den.size() == 1) {
      product += "/" + den.front();
    } else {
      product += "/(";
      for (std::size_t i = 0; i < den.size(); ++i) product += (i ? "*" : "") + den[i];
      product += ")";
    }
  }
  if (product.empty()) product = "1";
  return "z=" + to_string(t.z) + " * " + product;
}

}  // namespace wz
