#include <iomanip>
#include <sstream>

#include "wz/catalog.hpp"
#include "wz/dsl.hpp"
#include "wz/errors.hpp"

namespace wz {

namespace {

struct Row {
  const char* id;
  const char* s;
  const char* z;
  long a, b;
  const char* c_squared;
  const char* geom;
  const char* t;
  const char* B;  // without the z= prefix
  const char* R;
  const char* S;
  const char* y;
  const char* notes;
};

const char* const kGood1 =
    "poch(1/2-k;n)*poch(1/2+k;n)*poch(1/3;n)*poch(2/3;n)/(poch(1/2+k/2;n)*poch(1+k/2;n)*poch(1+k;n)*poch(1;n))"
    " * poch(1/3;k)*poch(2/3;k)/poch(1;k)^2";
const char* const kGood2 =
    "poch(1/2;n)*poch(1/2+2k;n)*poch(1/3+k;n)*poch(2/3+k;n)/(poch(1/2+k/2;n)*poch(1+k/2;n)*poch(1+k;n)*poch(1;n))"
    " * poch(1/4;k)*poch(3/4;k)/poch(1;k)^2";
const char* const kR1 = "((51*n+7)*(2*n+1)+k*(90*n+24*k+28))/(2*n+k+1)";
const char* const kS1 = "16*n*(6*n-3*k-2)/(2*n-2*k-1)";
const char* const kR2 = "((51*n+7)*(2*n+1)+k*(114*n+36*k+37))/(2*n+k+1)";
const char* const kS2 = "-9*n*(6*n^2+30*n*k+13*n-7*k-3)/((3*k+1)*(3*k+2))";

const Row kFormulas[] = {
    {"morefor1", "1/2", "-1", 1, 4, "4", "1/4", "1/4",
     "poch(1/2-k;n)^2*poch(1/2;n)/(poch(1+k;n)^2*poch(1;n)) * poch(1/4;k)*poch(3/4;k)/poch(1;k)^2", "4*n+1",
     "-2*n*(12*k^2+8*k-4*n^2+2*n+1)/(2*k-2*n+1)^2", "4", "alternating; k = 0 needs acceleration"},
    {"morefor2", "1/2", "1/4", 1, 6, "16", "16/27", "1/6",
     "poch(1/2-k;n)*poch(1/2+k;n)*poch(1/2+3k;n)/(poch(1+k;n)*poch(1+2k;n)*poch(1;n)) * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "6*n+6*k+1", "-n*(44*k^2+64*k*n+24*k+20*n^2+20*n+1)/((2*k-2*n+1)*(2*k+n+1))", "27/16", ""},
    {"morefor3", "1/2", "-1/8", 1, 6, "8", "32/27", "1/6",
     "poch(1/2-k;n)*poch(1/2+k;n)*poch(1/2+3k;n)/(poch(1+k;n)*poch(1+2k;n)*poch(1;n)) * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "6*n+6*k+1", "-n*(20*k^2+32*k*n+8*k+12*n^2+12*n-1)/((2*k-2*n+1)*(2*k+n+1))", "27/32", ""},
    {"morefor4", "1/4", "-1/4", 3, 20, "64", "16/27", "1/6",
     "poch(1/2+k;n)*poch(1/4+3k/2;n)*poch(3/4+3k/2;n)/(poch(1+k;n)^2*poch(1;n)) * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "20*n+18*k+3", "-2*n*(44*k^2+64*k*n+24*k+16*n^2+24*n+1)/(2*k+1)^2", "27/16", ""},
    {"morefor5", "1/4", "1/9", 1, 8, "12", "1", "1/6",
     "poch(1/2;n)*poch(1/4+3k/2;n)*poch(3/4+3k/2;n)/(poch(1+k;n)^2*poch(1;n)) * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "8*n+6*k+1", "-8*n*(2*n-1)/(3*(2*k+1))", "1",
     "Table I lists c = 2/sqrt(3) (c^2 = 4/3); the sum matches c = 2*sqrt(3) (c^2 = 12)"},
    {"morefor6", "1/3", "1/2", 1, 6, "27", "1", "1/3",
     "poch(1/2+k;n)*poch(1/3;n)*poch(2/3;n)/(poch(1+k;n)*poch(1+2k;n)*poch(1;n)) * poch(1/3;k)*poch(2/3;k)/poch(1;k)^2",
     "6*n+6*k+1", "4*n*(3*k+3*n+2)/(2*k+n+1)", "1", ""},
    {"morefor7", "1/2", "1/64", 5, 42, "256", "1", "1/4",
     "poch(1/2-k;n)*poch(1/2;n)*poch(1/2+k;n)*poch(1/2+2k;n)/(poch(1/2+k/2;n)*poch(1+k/2;n)*poch(1+k;n)*poch(1;n))"
     " * poch(1/4;k)*poch(3/4;k)/poch(1;k)^2",
     "((42*n+5)*(2*n+1)+k*(84*n+24*k+26))/(2*n+k+1)", "-16*n*(6*n-1)/(2*k-2*n+1)", "1", ""},
    {"morefor8", "1/3", "-1/16", 7, 51, "432", "1", "1/4", kGood2, kR2, kS2, "1", "same pair as solution2"},
    {"morefor9", "1/3", "-9/16", 1, 5, "16/3", "4", "1/6",
     "poch(1/2-k;n)*poch(1/2+3k;n)*poch(1/3+k;n)*poch(2/3+k;n)/(poch(1/2;n)*poch(1;n)*poch(1+k;n)*poch(1+3k;n))"
     " * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "((5*n+1)*(2*n+1)+k*(16*n+6*k+7))/(2*n+1)",
     "-2*n*(324*k^3+540*k^2*n+324*k^2+252*k*n^2+432*k*n+75*k+36*n^3+108*n^2+79*n-1)/"
     "(9*(2*k-2*n+1)*(3*k+n+1)*(3*k+n+2))",
     "1/4", ""},
    {"morefor10", "1/4", "-1/48", 3, 28, "256/3", "1", "1/6",
     "poch(1/2-k;n)*poch(1/2+3k;n)*poch(1/4;n)*poch(3/4;n)/(poch(1/2;n)*poch(1;n)*poch(1+k;n)^2)"
     " * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "((28*n+3)*(2*n+1)+k*(40*n+18))/(2*n+1)", "-128*n*(4*n-1)/(9*(2*k-2*n+1))", "1",
     "the formula's displayed constant is 16*sqrt(3) (c^2 = 768); the sum and Table I give 16/sqrt(3) (c^2 = 256/3)"},
    {"morefor11", "1/6", "-27/512", 15, 154, "2048", "32/27", "1/6",
     "poch(1/2-k;n)*poch(1/2+k;n)*poch(1/6+k;n)*poch(5/6+k;n)/(poch(1/2+k/2;n)*poch(1+k/2;n)*poch(1+k;n)*poch(1;n))"
     " * poch(1/6;k)*poch(5/6;k)/poch(1;k)^2",
     "((154*n+15)*(2*n+1)+k*(352*n+108*k+108))/(2*n+k+1)", "-16*n*(10*k+26*n-1)/(2*k-2*n+1)", "27/32", ""},
    {"solution1", "1/3", "-1/16", 7, 51, "432", "1", "1/3", kGood1, kR1, kS1, "1", "first worked solution"},
    {"solution2", "1/3", "-1/16", 7, 51, "432", "1", "1/4", kGood2, kR2, kS2, "1", "second worked solution"},
};

struct TableRow {
  const char* group;
  const char* z;
  const char* formula;
  const char* notes;
};

const TableRow kTableRows[] = {
    {"tableI", "-1", "morefor1", ""},
    {"tableI", "1/4", "morefor2", ""},
    {"tableI", "-1/8", "morefor3", ""},
    {"tableI", "1/64", "morefor7", ""},
    {"tableI", "-1/4", "morefor4", ""},
    {"tableI", "1/9", "morefor5", "listed as c = 2/sqrt(3); the verified value is c^2 = 12"},
    {"tableI", "-1/48", "morefor10", ""},
    {"tableI", "-27/512", "morefor11", ""},
    {"tableII", "1/2", "morefor6", ""},
    {"tableII", "-9/16", "morefor9", ""},
    {"tableII", "-1/16", "solution1", ""},
};

CatalogEntry from_row(const Row& r) {
  CatalogEntry e;
  e.id = r.id;
  e.group = std::string(r.id).rfind("solution", 0) == 0 ? "solution" : "morefor";
  e.s = parse_rational(r.s);
  e.z = parse_rational(r.z);
  e.a = r.a;
  e.b = r.b;
  e.c_squared = parse_rational(r.c_squared);
  e.rhs_geom = parse_rational(r.geom);
  e.rhs_t = parse_rational(r.t);
  e.B_dsl = "z=" + std::string(r.z) + " * " + r.B;
  e.R = parse_rational_function(r.R);
  e.S = parse_rational_function(r.S);
  e.y = parse_rational(r.y);
  e.notes = r.notes;
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> formulas;
  for (const auto& r : kFormulas) formulas.push_back(from_row(r));
  formulas[4].c_squared_alternatives = {Rational(4, 3)};
  formulas[9].c_squared_alternatives = {Rational(768)};

  std::vector<CatalogEntry> out;
  for (const auto& t : kTableRows) {
    const CatalogEntry* src = nullptr;
    for (const auto& f : formulas)
      if (f.id == t.formula) src = &f;
    CatalogEntry e = *src;
    e.group = t.group;
    e.id = std::string(t.group) + "-z" + t.z;
    e.notes = std::string("pair data of ") + t.formula + (*t.notes ? std::string("; ") + t.notes : "");
    out.push_back(e);
  }
  out.insert(out.end(), formulas.begin(), formulas.end());
  return out;
}

}  // namespace

HyperTerm CatalogEntry::term() const { return parse_term(B_dsl); }

WZPair CatalogEntry::pair() const {
  if (!has_pair()) throw DomainError("catalog entry '" + id + "' carries no pair");
  WZPair p;
  p.id = id;
  p.term = term();
  p.term.y = *y;
  p.R = *R;
  p.S = *S;
  p.provenance = "catalog:" + id;
  return p;
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : builtin_catalog())
    if (e.id == id) return &e;
  return nullptr;
}

std::string catalog_table(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  out << std::left << std::setw(18) << "id" << std::setw(6) << "s" << std::setw(10) << "z" << std::setw(5) << "a"
      << std::setw(6) << "b" << std::setw(8) << "c^2" << std::setw(8) << "geom" << std::setw(6) << "t"
      << "y\n";
  for (const auto& e : entries) {
    out << std::setw(18) << e.id << std::setw(6) << to_string(e.s) << std::setw(10) << to_string(e.z) << std::setw(5)
        << to_string(e.a) << std::setw(6) << to_string(e.b) << std::setw(8) << to_string(e.c_squared) << std::setw(8)
        << to_string(e.rhs_geom) << std::setw(6) << to_string(e.rhs_t) << (e.y ? to_string(*e.y) : "-") << "\n";
  }
  out << "\nnotes\n";
  for (const auto& e : entries)
    if (!e.notes.empty()) out << "  " << e.id << ": " << e.notes << "\n";
  out << "  " << kFamilyNote << "\n";
  return out.str();
}

}  // namespace wz
