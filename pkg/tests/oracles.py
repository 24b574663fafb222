"""Independent oracles used by the test suite.

Everything here deliberately avoids the package's own linear algebra and
closed-form analyses: ranks come from sympy matrices, brute-force witness
searches from sympy's polynomial solver, and the ten associativity
polynomials are transcribed directly rather than derived from the residual
tensor. These were written (and their outputs frozen into the tests) before
trusting the main implementations.
"""

from __future__ import annotations

from fractions import Fraction

import sympy


def _to_sym(x):
    return sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) \
        else sympy.Rational(x)


def ten_equation_residuals(rows):
    """The ten flattened polynomials of the n = 2 associativity system,
    evaluated on coefficient rows ((a1,a2),(b1,b2),(c1,c2),(d1,d2));
    all-zero output is the associativity condition."""
    (a1, a2), (b1, b2), (c1, c2), (d1, d2) = [tuple(r) for r in rows]
    return [
        a2 * b1 - a2 * c1,
        a2 * b2 - a2 * c2,
        b1 * b2 - a2 * d1,
        a2 * d1 - c1 * c2,
        a2 * b1 + b2 * b2 - a1 * b2 - a2 * d2,
        a1 * c1 + b1 * c2 - a1 * b1 - b2 * c1,
        a1 * d1 + b1 * d2 - b1 * b1 - b2 * d1,
        a1 * c2 + a2 * d2 - a2 * c1 - c2 * c2,
        b1 * c2 + b2 * d2 - b2 * c1 - c2 * d2,
        c1 * c1 + c2 * d1 - a1 * d1 - c1 * d2,
    ]


def sympy_rank(rows) -> int:
    if not rows:
        return 0
    m = sympy.Matrix([[_to_sym(x) for x in row] for row in rows])
    return m.rank()


def _sym_mul(constants, x, y, n):
    out = [sympy.Integer(0)] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[k] += x[i] * y[j] * _to_sym(constants[i][j][k])
    return out


def oracle_orbit_rank(constants, n) -> int:
    """Tangent-matrix rank from the coboundary formula, built with sympy."""
    rows = []
    for r in range(n):
        for s in range(n):
            flat = []
            for i in range(n):
                for j in range(n):
                    ei = [sympy.Integer(1) if m == i else sympy.Integer(0)
                          for m in range(n)]
                    ej = [sympy.Integer(1) if m == j else sympy.Integer(0)
                          for m in range(n)]
                    fei = [ei[s] if m == r else sympy.Integer(0) for m in range(n)]
                    fej = [ej[s] if m == r else sympy.Integer(0) for m in range(n)]
                    t1 = _sym_mul(constants, fei, ej, n)
                    t2 = _sym_mul(constants, ei, fej, n)
                    prod = [_to_sym(constants[i][j][k]) for k in range(n)]
                    t3 = [prod[s] if m == r else sympy.Integer(0) for m in range(n)]
                    flat.extend(t1[k] + t2[k] - t3[k] for k in range(n))
            rows.append(flat)
    return sympy_rank_sym(rows)


def sympy_rank_sym(rows) -> int:
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def oracle_cocycle_rank(constants, n) -> int:
    """Rank of phi -> beta o phi on elementary directions, via sympy."""
    rows = []
    for i0 in range(n):
        for j0 in range(n):
            for k0 in range(n):
                phi = [[[sympy.Integer(1) if (i, j, k) == (i0, j0, k0)
                         else sympy.Integer(0) for k in range(n)]
                        for j in range(n)] for i in range(n)]
                flat = []
                for i in range(n):
                    for j in range(n):
                        for k in range(n):
                            ei = [sympy.Integer(1) if m == i else sympy.Integer(0)
                                  for m in range(n)]
                            ek = [sympy.Integer(1) if m == k else sympy.Integer(0)
                                  for m in range(n)]
                            phij = [phi[i][j][m] for m in range(n)]
                            phjk = [phi[j][k][m] for m in range(n)]
                            bij = [_to_sym(constants[i][j][m]) for m in range(n)]
                            bjk = [_to_sym(constants[j][k][m]) for m in range(n)]
                            t1 = _sym_mul(constants, phij, ek, n)
                            t2 = _sym_mul(constants, ei, phjk, n)
                            t3 = _phi_mul(phi, bij, ek, n)
                            t4 = _phi_mul(phi, ei, bjk, n)
                            flat.extend(
                                t1[l] - t2[l] + t3[l] - t4[l] for l in range(n)
                            )
                rows.append(flat)
    return sympy_rank_sym(rows)


def _phi_mul(phi, x, y, n):
    out = [sympy.Integer(0)] * n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                out[k] += x[i] * y[j] * phi[i][j][k]
    return out


def oracle_cohomology(constants, n=2):
    """(z2, b2, h2) computed entirely through sympy ranks."""
    z2 = n**3 - oracle_cocycle_rank(constants, n)
    b2 = oracle_orbit_rank(constants, n)
    return z2, b2, z2 - b2


def brute_idempotent_count(rows):
    """Number of real solutions of x*x = x apart from 0, via sympy.solve;
    sympy.oo when a whole component of idempotents exists."""
    return _brute_quadratic_count(rows, target_is_x=True)


def brute_square_zero_count(rows):
    """Number of real nonzero solutions of x*x = 0 via sympy.solve."""
    return _brute_quadratic_count(rows, target_is_x=False)


def _brute_quadratic_count(rows, target_is_x: bool):
    (a1, a2), (b1, b2), (c1, c2), (d1, d2) = [
        tuple(_to_sym(x) if isinstance(x, Fraction) else sympy.Rational(x)
              for x in r)
        for r in rows
    ]
    al, ga = sympy.symbols("al ga", real=True)
    q1 = a1 * al**2 + (b1 + c1) * al * ga + d1 * ga**2
    q2 = a2 * al**2 + (b2 + c2) * al * ga + d2 * ga**2
    eq1 = q1 - (al if target_is_x else 0)
    eq2 = q2 - (ga if target_is_x else 0)
    sols = sympy.solve([eq1, eq2], [al, ga], dict=True)
    real_sols = []
    for sol in sols:
        va, vg = sol.get(al, al), sol.get(ga, ga)
        if va.free_symbols or vg.free_symbols:
            return sympy.oo  # positive-dimensional solution set
        if not (va.is_real and vg.is_real):
            continue
        if va == 0 and vg == 0:
            continue
        real_sols.append((sympy.nsimplify(va), sympy.nsimplify(vg)))
    return len(set(real_sols))


def brute_class_b1_b2(rows):
    """'beta1' or 'beta2' for a unital 2-dim commutative associative law,
    decided only from brute-force solution counts (no fingerprints):
    beta2 has nontrivial idempotents, beta1 has none and no square zeros."""
    idem = brute_idempotent_count(rows)
    sqz = brute_square_zero_count(rows)
    if idem == sympy.oo or sqz == sympy.oo:
        raise ValueError("law has infinite idempotent/square-zero sets")
    if idem > 1:
        return "beta2"
    if idem == 1 and sqz == 0:
        return "beta1"
    raise ValueError(f"not a beta1/beta2 pattern: idem={idem}, sqz={sqz}")
