#!/usr/bin/env python3
"""Generate frozen reference data for the symmetric-function tests.

Everything here is computed with sympy, independently of the C++ code paths:

  * power-sum expansions of the exponential generator families (weights
    a = 1, a = four-periodic sign, a = Pell values),
  * family coordinates of selected elements, obtained by an exact linear
    solve against expanded family monomials (not by triangular elimination),
  * power-sum expansions of monomial symmetric functions, obtained by
    expanding in |lambda| variables and solving the specialization system,
  * the degree-4 change-of-basis matrix from Garland elements to the
    monomial basis.

Output: tests/oracle_symfun.inc (C++ data tables).  Regenerate with
    python3 tools/gen_symfun_oracle.py
"""

import os
from itertools import permutations

import sympy
from sympy import Rational, factorial, symbols

MAXP = 24
P = symbols(f"p1:{MAXP + 1}")  # P[i] is p_{i+1}
U = symbols("u")


def partitions_of(d, max_part=None):
    """All partitions of d, parts weakly decreasing."""
    if max_part is None:
        max_part = d
    if d == 0:
        return [()]
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions_of(d - first, first):
            out.append((first,) + rest)
    return out


def eps(r):
    return -1 if r % 4 == 0 else 1


def pell_d(n):
    d = [1, 1]
    while len(d) <= n:
        d.append(2 * d[-1] + d[-2])
    return d[n]


def truncate_u(expr, N):
    expr = sympy.expand(expr)
    return sum(expr.coeff(U, k) * U**k for k in range(N + 1))


def hat_family(a, N):
    """Degree-0..N coefficients of exp(sum (-1)^(r-1) a(r) p_r u^r / r)."""
    arg = sum(
        Rational((-1) ** (r - 1) * a(r), r) * P[r - 1] * U**r for r in range(1, N + 1)
    )
    total = Rational(1)
    power = Rational(1)
    for j in range(1, N + 1):
        power = truncate_u(sympy.expand(power * arg), N)
        total = total + power / factorial(j)
    total = sympy.expand(total)
    return [sympy.expand(total.coeff(U, k)) for k in range(N + 1)]


def expr_to_terms(expr):
    """sympy polynomial in the P symbols -> sorted [(partition, Rational)]."""
    expr = sympy.expand(expr)
    if expr == 0:
        return []
    poly = sympy.Poly(expr, *P)
    terms = {}
    for monom, coeff in poly.terms():
        part = []
        for i, e in enumerate(monom):
            part.extend([i + 1] * e)
        part = tuple(sorted(part, reverse=True))
        terms[part] = terms.get(part, Rational(0)) + Rational(coeff)
    return sorted(
        ((k, v) for k, v in terms.items() if v != 0),
        key=lambda kv: (sum(kv[0]), kv[0]),
    )


def terms_to_expr(terms):
    return sum(c * sympy.prod([P[r - 1] for r in part], Rational(1)) for part, c in terms)


def family_coords_by_solve(target_terms, family, d):
    """Coordinates of a degree-d element in family monomials, by linear solve.

    `family` maps k -> term list of the degree-k generator.  Unknowns are
    indexed by partitions of d; equations by p-partitions of d.
    """
    cols = partitions_of(d)
    rows = partitions_of(d)
    row_index = {mu: i for i, mu in enumerate(rows)}
    A = sympy.zeros(len(rows), len(cols))
    for j, lam in enumerate(cols):
        prod = sympy.expand(sympy.prod([terms_to_expr(family[k]) for k in lam], Rational(1)))
        for part, c in expr_to_terms(prod):
            A[row_index[part], j] = c
    b = sympy.zeros(len(rows), 1)
    for part, c in target_terms:
        b[row_index[part], 0] = c
    sol = A.solve(b)
    return sorted(
        ((lam, Rational(sol[j, 0])) for j, lam in enumerate(cols) if sol[j, 0] != 0),
        key=lambda kv: (sum(kv[0]), kv[0]),
    )


def monomial_in_p(lam):
    """Power-sum expansion of the monomial symmetric function m_lambda."""
    d = sum(lam)
    n = d  # enough variables to separate degree-d symmetric functions
    X = symbols(f"x1:{n + 1}")
    padded = tuple(lam) + (0,) * (n - len(lam))

    def poly_from_powersums(mu):
        return sympy.expand(
            sympy.prod([sum(x**r for x in X) for r in mu], Rational(1))
        )

    mus = partitions_of(d)
    rows = mus  # exponent rows: one representative monomial per partition
    A = sympy.zeros(len(rows), len(mus))
    for j, mu in enumerate(mus):
        pj = sympy.Poly(poly_from_powersums(mu), *X)
        coeffs = {m: c for m, c in pj.terms()}
        for i, kappa in enumerate(rows):
            key = tuple(kappa) + (0,) * (n - len(kappa))
            A[i, j] = Rational(coeffs.get(key, 0))
    b = sympy.zeros(len(rows), 1)
    for i, kappa in enumerate(rows):
        b[i, 0] = Rational(1) if kappa == tuple(lam) else Rational(0)
    sol = A.solve(b)
    terms = [(mu, Rational(sol[j, 0])) for j, mu in enumerate(mus) if sol[j, 0] != 0]
    return sorted(terms, key=lambda kv: (sum(kv[0]), kv[0]))


def lambda_m_terms(terms, m):
    return sorted(
        ((tuple(part * m for part in mu), c) for mu, c in terms),
        key=lambda kv: (sum(kv[0]), kv[0]),
    )


def mul_terms(a, b):
    out = {}
    for mu, cm in a:
        for nu, cn in b:
            key = tuple(sorted(mu + nu, reverse=True))
            out[key] = out.get(key, Rational(0)) + cm * cn
    return sorted(
        ((k, v) for k, v in out.items() if v != 0), key=lambda kv: (sum(kv[0]), kv[0])
    )


def main():
    N_HAT = 8
    N_HD = 6
    records = []

    hat = hat_family(lambda r: 1, N_HAT)
    til = hat_family(eps, N_HAT)
    hdv = hat_family(pell_d, N_HD)

    hat_terms = {k: expr_to_terms(hat[k]) for k in range(1, N_HAT + 1)}
    til_terms = {k: expr_to_terms(til[k]) for k in range(1, N_HAT + 1)}

    for k in range(1, N_HAT + 1):
        records.append((f"hhat_{k}", hat_terms[k]))
        records.append((f"htil_{k}", til_terms[k]))
    for k in range(1, N_HD + 1):
        records.append((f"hd_{k}", expr_to_terms(hdv[k])))

    # Family coordinates by independent linear solve.
    records.append(
        ("p2_in_hat", family_coords_by_solve([((2,), Rational(1))], hat_terms, 2))
    )
    records.append(
        ("hhat4_in_til", family_coords_by_solve(hat_terms[4], til_terms, 4))
    )
    records.append(
        ("htil4_in_hat", family_coords_by_solve(til_terms[4], hat_terms, 4))
    )
    records.append(
        ("hd6_in_til", family_coords_by_solve(expr_to_terms(hdv[6]), til_terms, 6))
    )

    # Monomial symmetric functions through degree 6.
    for d in range(1, 7):
        for lam in partitions_of(d):
            name = "m_" + "_".join(str(x) for x in lam)
            records.append((name, monomial_in_p(lam)))

    # Degree-4 Garland change of basis: rows b_k, coordinates in {m_nu}.
    m_terms = {lam: monomial_in_p(lam) for lam in partitions_of(4)}
    for lam in partitions_of(4):
        mult = {}
        for m in lam:
            mult[m] = mult.get(m, 0) + 1
        b = [((), Rational(1))]
        for m, km in sorted(mult.items()):
            b = mul_terms(b, lambda_m_terms(hat_terms[km], m))
        # Coordinates in the monomial basis via linear solve.
        cols = partitions_of(4)
        rows = partitions_of(4)
        row_index = {mu: i for i, mu in enumerate(rows)}
        A = sympy.zeros(len(rows), len(cols))
        for j, nu in enumerate(cols):
            for part, c in m_terms[nu]:
                A[row_index[part], j] = c
        vec = sympy.zeros(len(rows), 1)
        for part, c in b:
            vec[row_index[part], 0] = c
        sol = A.solve(vec)
        coords = sorted(
            ((nu, Rational(sol[j, 0])) for j, nu in enumerate(cols) if sol[j, 0] != 0),
            key=lambda kv: (sum(kv[0]), kv[0]),
        )
        name = "garland4_" + "_".join(str(x) for x in lam)
        records.append((name, coords))

    out_path = os.path.join(os.path.dirname(__file__), "..", "tests", "oracle_symfun.inc")
    with open(out_path, "w") as f:
        f.write("// Generated by tools/gen_symfun_oracle.py; regenerate, don't edit.\n")
        f.write("// Each record: name -> list of (partition, exact rational) pairs.\n")
        f.write("#pragma once\n")
        f.write("#include <map>\n#include <string>\n#include <utility>\n#include <vector>\n\n")
        f.write("struct OracleTerm { std::vector<int> parts; const char* coeff; };\n")
        f.write("using OracleRecord = std::vector<OracleTerm>;\n\n")
        f.write("inline const std::map<std::string, OracleRecord>& symfun_oracle() {\n")
        f.write("  static const std::map<std::string, OracleRecord> table = {\n")
        for name, terms in records:
            f.write(f'      {{"{name}",\n       {{')
            items = []
            for part, c in terms:
                plist = ", ".join(str(x) for x in part)
                items.append(f'{{{{{plist}}}, "{c}"}}')
            f.write(",\n        ".join(items))
            f.write("}},\n")
        f.write("  };\n  return table;\n}\n")
    print(f"wrote {len(records)} records to {os.path.normpath(out_path)}")


if __name__ == "__main__":
    main()
