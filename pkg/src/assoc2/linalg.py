"""Exact Gaussian elimination over any of the scalar fields.

Matrices are lists of row lists; entries must support +, -, *, /, unary -,
truth testing (nonzero), and equality. Nothing here is numeric: pivots are
chosen as the first nonzero entry, so results are deterministic and exact.
``zero``/``one`` parameters supply field constants where new entries must be
fabricated (kernel vectors, identity matrices).
"""

from __future__ import annotations

from fractions import Fraction

Q0 = Fraction(0)
Q1 = Fraction(1)


def mat_vec(m, v):
    return [sum((row[j] * v[j] for j in range(1, len(v))), row[0] * v[0]) for row in m]


def mat_mul(a, b):
    cols = len(b[0])
    return [
        [sum((a[i][k] * b[k][j] for k in range(1, len(b))), a[i][0] * b[0][j])
         for j in range(cols)]
        for i in range(len(a))
    ]


def identity_matrix(n, zero=Q0, one=Q1):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _echelon(rows):
    """In-place row echelon form; returns the list of pivot columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows) -> int:
    if not rows or not rows[0]:
        return 0
    return len(_echelon([list(r) for r in rows]))


def kernel_basis(rows, ncols, zero=Q0, one=Q1):
    """Basis of {x : A x = 0}, one vector per free column, reduced form."""
    work = [list(r) for r in rows if len(r) == ncols]
    if len(work) != len(rows):
        raise ValueError("ragged matrix")
    pivots = _echelon(work)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][free]
        basis.append(vec)
    return basis


def solve(rows, rhs, zero=Q0):
    """One solution of A x = b, or None when the system is inconsistent."""
    if not rows:
        return []
    ncols = len(rows[0])
    work = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = _echelon(work)
    if ncols in pivots:
        return None  # pivot in the augmented column
    sol = [zero] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = work[r][ncols]
    return sol


def determinant(rows, zero=Q0):
    n = len(rows)
    if n == 0:
        return zero + 1
    work = [list(r) for r in rows]
    det = zero + 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            return zero
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            det = -det
        det = det * work[c][c]
        inv = work[c][c]
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] / inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return det


def inverse(rows, zero=Q0, one=Q1):
    """Inverse matrix, or None when singular."""
    n = len(rows)
    work = [list(r) + list(idr) for r, idr in zip(rows, identity_matrix(n, zero, one))]
    pivots = _echelon(work)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in work]
