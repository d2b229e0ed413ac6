"""Independent reference computations for the test fixtures.

Uses sympy and mpmath only; nothing here imports or calls the C++ code except
that the catalog is read from `wzcli catalog --export` output. Run:

    python3 tools/oracle/wz_oracle.py build/catalog.json
"""
import json
import re
import sys
from fractions import Fraction

import mpmath as mp
import sympy as sp

n, k = sp.symbols("n k")
POCH = re.compile(r"poch\(([^;]+);([nk])\)(?:\^(\d+))?")


def parse_term(text):
    """z and a list of (base expr, var, exponent) from a wzdsl-1 string."""
    head, body = text.split("*", 1)
    z = sp.Rational(head.strip().split("=")[1])
    factors = []
    # Everything after a "/" up to the matching group is a denominator.
    depth, sign, signs = 0, 1, []
    i = 0
    body = body.strip()
    for m in POCH.finditer(body):
        prefix = body[i:m.start()]
        for ch in prefix:
            if ch == "/":
                sign = -1
            elif ch == "(":
                depth += 1
                signs.append(sign)
            elif ch == ")":
                depth -= 1
                signs.pop()
                sign = signs[-1] if signs else 1
            elif ch == "*" and not signs:
                sign = 1
        base = sp.sympify(m.group(1), locals={"n": n, "k": k})
        e = int(m.group(3) or 1)
        factors.append((base, m.group(2), sign * e))
        i = m.end()
        if not signs:
            sign = 1
    return z, factors


def term_value(factors, nv, kv):
    """Exact B(nv, kv) for integers nv, kv >= 0."""
    value = Fraction(1)
    for base, var, e in factors:
        x = Fraction(str(base.subs({n: nv, k: kv})))
        steps = nv if var == "n" else kv
        p = Fraction(1)
        for i in range(steps):
            p *= x + i
        if p == 0 and e < 0:
            return None
        value *= p ** e
    return value


def rf_value(rf_text, nv, kv):
    num, den = (sp.sympify(rf_text[0]), sp.sympify(rf_text[1]))
    d = Fraction(str(den.subs({n: nv, k: kv})))
    if d == 0:
        return None
    return Fraction(str(num.subs({n: nv, k: kv}))) / d


def check_pair(rec, grid=6):
    z, factors = parse_term(rec["B"])
    y = Fraction(rec["y"])
    zf = Fraction(str(z))
    R = (rec["R_num"], rec["R_den"])
    S = (rec["S_num"], rec["S_den"])

    def T(nv, kv):
        b = term_value(factors, nv, kv)
        return None if b is None else zf ** nv * y ** kv * b

    for nv in range(grid):
        for kv in range(grid):
            vals = [T(nv + 1, kv), T(nv, kv), T(nv, kv + 1)]
            rs = [rf_value(S, nv + 1, kv), rf_value(S, nv, kv), rf_value(R, nv, kv + 1), rf_value(R, nv, kv)]
            if None in vals or None in rs:
                continue
            lhs = vals[0] * rs[0] - vals[1] * rs[1]
            rhs = vals[2] * rs[2] - vals[1] * rs[3]
            if lhs != rhs:
                return False
    return True


def quotients_match(factors, qn, qk, grid=6):
    """Exact B(n+1,k)/B and B(n,k+1)/B against closed forms at integer points."""
    for nv in range(grid):
        for kv in range(grid):
            b = term_value(factors, nv, kv)
            if not b:
                continue
            if term_value(factors, nv + 1, kv) / b != Fraction(str(qn.subs({n: nv, k: kv})) ):
                return False
            if term_value(factors, nv, kv + 1) / b != Fraction(str(qk.subs({n: nv, k: kv}))):
                return False
    return True


def series_value(rec, kv, dps):
    z, factors = parse_term(rec["B"])
    R = sp.sympify(rec["R_num"]) / sp.sympify(rec["R_den"])
    nfac = [(base.subs(k, kv), e) for base, v, e in factors if v == "n"]
    num, den = sp.fraction(sp.together(R.subs(k, kv)))
    cn = [mp.mpf(c.p) / c.q for c in sp.Poly(num, n).all_coeffs()]
    cd = [mp.mpf(c.p) / c.q for c in sp.Poly(den, n).all_coeffs()]

    def Rk(j):
        return mp.polyval(cn, j) / mp.polyval(cd, j)
    zm = mp.mpf(sp.Rational(z).p) / sp.Rational(z).q
    bases = [(mp.mpf(sp.Rational(b).p) / sp.Rational(b).q, e) for b, e in nfac]

    def t(j):
        j = int(j)
        val = zm ** j * Rk(j)
        for b, e in bases:
            val *= mp.rf(b, j) ** e
        return val

    return mp.nsum(t, [0, mp.inf])


def rho(c2_geom, t, kv):
    g = sp.Rational(c2_geom) ** kv
    t = sp.Rational(t)
    return g * sp.rf(1, kv) ** 2 / (sp.rf(t, kv) * sp.rf(1 - t, kv))


def solution1_system():
    """Independent solve of the worked example with unknown y, d, e."""
    y, d10, d01, d00, e10, e01, e00 = sp.symbols("y d10 d01 d00 e10 e01 e00")
    z = sp.Rational(-1, 16)
    qn = (2*n - 2*k + 1)*(2*n + 2*k + 1)*(3*n + 1)*(3*n + 2) / (9*(2*n + k + 1)*(2*n + k + 2)*(n + k + 1)*(n + 1))
    qk = -(2*n + 2*k + 1)*(3*k + 1)*(3*k + 2) / (9*(2*n - 2*k - 1)*(2*n + k + 1)*(n + k + 1))
    R = ((51*n + 7)*(2*n + 1) + k*(d10*n + d01*k + d00)) / (2*n + k + 1)
    S = n*(e10*n + e01*k + e00) / (2*n - 2*k - 1)
    eq = qk*R.subs(k, k + 1)*y - R - (qn*S.subs(n, n + 1)*z - S)
    H = sp.numer(sp.together(eq))
    H = sp.Poly(sp.expand(H), n, k)
    sol = sp.solve(H.coeffs(), [y, d10, d01, d00, e10, e01, e00], dict=True)
    return H.total_degree(), sol


# id, c^2, geometric factor, t
RHS = [
    ("morefor1", "4", "1/4", "1/4"), ("morefor2", "16", "16/27", "1/6"), ("morefor3", "8", "32/27", "1/6"),
    ("morefor4", "64", "16/27", "1/6"), ("morefor5", "12", "1", "1/6"), ("morefor6", "27", "1", "1/3"),
    ("morefor7", "256", "1", "1/4"), ("morefor8", "432", "1", "1/4"), ("morefor9", "16/3", "4", "1/6"),
    ("morefor10", "256/3", "1", "1/6"), ("morefor11", "2048", "32/27", "1/6"), ("solution1", "432", "1", "1/3"),
]


def main():
    cat = json.load(open(sys.argv[1]))
    mp.mp.dps = 60
    print("# exact WZ identity on a 6x6 integer grid")
    for rec in cat:
        print(rec["id"], "ok" if check_pair(rec) else "FAIL")

    good1 = next(r for r in cat if r["id"] == "solution1")
    _, f1 = parse_term(good1["B"])
    qn = (2*n - 2*k + 1)*(2*n + 2*k + 1)*(3*n + 1)*(3*n + 2) / (9*(2*n + k + 1)*(2*n + k + 2)*(n + k + 1)*(n + 1))
    qk = -(2*n + 2*k + 1)*(3*k + 1)*(3*k + 2) / (9*(2*n - 2*k - 1)*(2*n + k + 1)*(n + k + 1))
    print("# published quotients of the first worked term:", "ok" if quotients_match(f1, qn, qk) else "FAIL")

    deg, sol = solution1_system()
    print("# worked example: H total degree", deg, "solutions", sol)

    print("# series values at 60 digits")
    rhs = {r[0]: r[1:] for r in RHS}
    for rec in cat:
        if rec["id"] not in rhs:
            continue
        c2, geom, t = rhs[rec["id"]]
        for kv in range(4):
            v = series_value(rec, kv, 60)
            sq = (mp.pi * v / mp.mpf(sp.Rational(rho(geom, t, kv)).p) * sp.Rational(rho(geom, t, kv)).q) ** 2
            print(rec["id"], kv, mp.nstr(v, 45), "(pi V/rho)^2 - c^2 =", mp.nstr(sq - mp.mpf(sp.Rational(c2).p) / sp.Rational(c2).q, 5))


if __name__ == "__main__":
    main()
