#pragma once

// Fixed inputs and reference values shared by the test suites and the
// acceptance runner. Series values come from tools/oracle/wz_oracle.py
// (mpmath nsum at 60 digits); the oracle also re-derives the worked solve
// with sympy and checks every catalog pair on an integer grid.

#include <string>

namespace wzfix {

// Published worked example and its two shift quotients.
inline const std::string kGood1 =
    "z=-1/16 * poch(1/2-k;n)*poch(1/2+k;n)*poch(1/3;n)*poch(2/3;n)"
    "/(poch(1/2+k/2;n)*poch(1+k/2;n)*poch(1+k;n)*poch(1;n)) * poch(1/3;k)*poch(2/3;k)/poch(1;k)^2";
inline const std::string kGood2 =
    "z=-1/16 * poch(1/2;n)*poch(1/2+2k;n)*poch(1/3+k;n)*poch(2/3+k;n)"
    "/(poch(1/2+k/2;n)*poch(1+k/2;n)*poch(1+k;n)*poch(1;n)) * poch(1/4;k)*poch(3/4;k)/poch(1;k)^2";
inline const std::string kQuotientN =
    "(2n-2k+1)*(2n+2k+1)*(3n+1)*(3n+2) / (9*(2n+k+1)*(2n+k+2)*(n+k+1)*(n+1))";
inline const std::string kQuotientK = "-(2n+2k+1)*(3k+1)*(3k+2) / (9*(2n-2k-1)*(2n+k+1)*(n+k+1))";

// Terms discarded in advance: a pole line and a terminating specialization.
inline const std::string kPoleTerm =
    "z=1 * poch(1/2-k;n)*poch(1/3;n)*poch(2/3;n)/(poch(1;n)*poch(1+k;n)*poch(1+2k;n)) * poch(1/3;k)*poch(2/3;k)/poch(1;k)^2";
inline const std::string kTerminatingTerm =
    "z=1 * poch(1/2;n)*poch(1/2+k;n)*poch(1/2-5k;n)/(poch(1;n)*poch(1+k;n)^2) * poch(1/2;k)^2/poch(1;k)^2";

// Published closed forms of the second worked solution.
inline const std::string kR2Numerator = "(51n+7)*(2n+1)+k*(114n+36k+37)";
inline const std::string kS2Numerator = "-9n*(6n^2+30n*k+13n-7k-3)";

struct SeriesValue {
  const char* id;
  long k;
  const char* value;  // 45 significant digits
};

inline const SeriesValue kSeriesValues[] = {
    {"morefor1", 0, "0.636619772367581343075535053490057448137838583"},
    {"morefor1", 1, "0.848826363156775124100713404653409930850451444"},
    {"morefor1", 2, "0.388034908871668628160326127841558825531634946"},
    {"morefor5", 1, "7.93913609407380551296310157570675995612236532"},
    {"morefor7", 2, "49.6684683355735844045217443637195296680492731"},
    {"morefor9", 3, "928.723564699100040383914669465247455322014647"},
    {"morefor11", 3, "473.402716639973625240284444983889654230613812"},
    {"solution1", 0, "6.61594674506150459413591797975563329676863776"},
    {"solution1", 2, "53.5891686349981872125009356360206297038259659"},
    {"solution2", 1, "35.2850493069946911687248958920300442494327347"},
};

}  // namespace wzfix
