"""Hochschild-style deformation machinery for structure-constant laws.

The operator conventions, stated by content:

* coboundary       d_beta f (x,y) = beta(f x, y) + beta(x, f y) - f(beta(x,y))
* circle product   b1 o b2 (x,y,z) = b1(b2(x,y),z) - b1(x,b2(y,z))
                                    + b2(b1(x,y),z) - b2(x,b1(y,z))
* cocycle operator d2_beta phi = (1/2)(beta o phi + phi o beta) = beta o phi

The circle product is symmetric, a law beta is associative exactly when
beta o beta = 0, and the cocycle operator is its linearization at beta, so
the residual of a perturbed law beta + xi is literally
(beta + xi) o (beta + xi) = 2 d2_beta xi + xi o xi.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .algebra import Algebra, DimensionMismatch, LinearMap, NotAssociative
from .scalars import EpsPolynomial


class TrilinearMap:
    """Trilinear map as the tensor T[i][j][k][l] (inputs i,j,k; output l)."""

    __slots__ = ("dim", "tensor")

    def __init__(self, dim: int, tensor):
        tensor = tuple(
            tuple(tuple(tuple(vec) for vec in row) for row in plane)
            for plane in tensor
        )
        if len(tensor) != dim or any(
            len(plane) != dim or any(
                len(row) != dim or any(len(vec) != dim for vec in row)
                for row in plane
            )
            for plane in tensor
        ):
            raise DimensionMismatch("trilinear tensor shape mismatch")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "tensor", tensor)

    def __setattr__(self, name, value):
        raise AttributeError("TrilinearMap is immutable")

    def is_zero(self) -> bool:
        return all(
            not x
            for plane in self.tensor for row in plane for vec in row for x in vec
        )

    def nonzero_entries(self):
        """List of ((i, j, k, l), value) with 1-based indices."""
        out = []
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        x = self.tensor[i][j][k][l]
                        if x:
                            out.append(((i + 1, j + 1, k + 1, l + 1), x))
        return out

    def __eq__(self, other):
        if isinstance(other, TrilinearMap):
            return self.dim == other.dim and self.tensor == other.tensor
        return NotImplemented

    def __hash__(self):
        return hash(("TrilinearMap", self.dim, self.tensor))

    def __repr__(self):
        return f"TrilinearMap(dim={self.dim}, nonzero={len(self.nonzero_entries())})"


def coboundary(beta: Algebra, f: LinearMap) -> Algebra:
    """Infinitesimal change of beta along Id + eps f, as a bilinear tensor."""
    if f.n != beta.dim:
        raise DimensionMismatch("endomorphism size does not match the law")
    n = beta.dim
    zero = beta.scalar_zero
    cols = [[x + zero for x in f.column(j)] for j in range(n)]
    frows = [[cols[j][i] for j in range(n)] for i in range(n)]
    c = beta.constants
    unit = linalg.identity_matrix(n, zero, beta.scalar_one)
    new = []
    for i in range(n):
        row = []
        for j in range(n):
            term1 = beta._mul(cols[i], unit[j])
            term2 = beta._mul(unit[i], cols[j])
            term3 = linalg.mat_vec(frows, list(c[i][j]))
            row.append([a + b - d for a, b, d in zip(term1, term2, term3)])
        new.append(row)
    return Algebra(n, new)


class TangentSpace:
    """Span of the coboundaries of the elementary endomorphisms at a law."""

    __slots__ = ("base", "matrix", "rank")

    def __init__(self, base: Algebra):
        if not base.is_associative():
            raise NotAssociative("tangent spaces are taken at associative laws")
        n = base.dim
        rows = []
        for r in range(n):
            for s in range(n):
                e_rs = [[Fraction(1) if (i, j) == (r, s) else Fraction(0)
                         for j in range(n)] for i in range(n)]
                image = coboundary(base, LinearMap(e_rs))
                rows.append([x for row in image.constants
                             for vec in row for x in vec])
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "matrix", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "rank", linalg.rank([list(r) for r in rows]))

    def __setattr__(self, name, value):
        raise AttributeError("TangentSpace is immutable")


def tangent_space(beta: Algebra) -> TangentSpace:
    return TangentSpace(beta)


def orbit_dim(beta: Algebra) -> int:
    """Dimension of the isomorphism orbit = rank of the tangent matrix."""
    return TangentSpace(beta).rank


def stabilizer_dim(beta: Algebra) -> int:
    return beta.dim * beta.dim - orbit_dim(beta)


def circle_product(b1: Algebra, b2: Algebra) -> TrilinearMap:
    """Symmetric trilinear pairing; b o b vanishes iff b is associative."""
    if b1.dim != b2.dim:
        raise DimensionMismatch("laws live on different spaces")
    n = b1.dim
    zero = b1.scalar_zero
    unit = linalg.identity_matrix(n, zero, b1.scalar_one)
    c1, c2 = b1.constants, b2.constants
    tensor = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                t1 = b1._mul(list(c2[i][j]), unit[k])
                t2 = b1._mul(unit[i], list(c2[j][k]))
                t3 = b2._mul(list(c1[i][j]), unit[k])
                t4 = b2._mul(unit[i], list(c1[j][k]))
                row.append([a - b + c - d for a, b, c, d in zip(t1, t2, t3, t4)])
            plane.append(row)
        tensor.append(plane)
    return TrilinearMap(n, tensor)


def cocycle_operator(beta: Algebra, phi: Algebra) -> TrilinearMap:
    """Linearized associativity operator at beta applied to the direction phi.

    Implemented as the circle product beta o phi, which equals the
    symmetrized form (1/2)(beta o phi + phi o beta); it annihilates every
    coboundary of an associative beta.
    """
    if not beta.is_associative():
        raise NotAssociative("cocycle operator needs an associative base")
    return circle_product(beta, phi)


def cohomology2(beta: Algebra) -> tuple[int, int, int]:
    """(z2, b2, h2): cocycle, coboundary and quotient dimensions at beta.

    z2 is the kernel dimension of phi -> d2_beta phi on the n^3-dimensional
    space of bilinear maps, b2 the orbit dimension, h2 their difference.
    """
    if not beta.is_associative():
        raise NotAssociative("cohomology is computed at associative laws")
    n = beta.dim
    rows = []
    for i0 in range(n):
        for j0 in range(n):
            for k0 in range(n):
                tensor = [[[Fraction(1) if (i, j, k) == (i0, j0, k0)
                            else Fraction(0)
                            for k in range(n)] for j in range(n)]
                          for i in range(n)]
                image = circle_product(beta, Algebra(n, tensor))
                rows.append([x for plane in image.tensor for row in plane
                             for vec in row for x in vec])
    z2 = n**3 - linalg.rank(rows)
    b2 = orbit_dim(beta)
    return z2, b2, z2 - b2


class Perturbation:
    """A law base + e1 phi1 + e1 e2 phi2 + ... + e1...ep phip.

    The directions must be linearly independent bilinear maps; the
    parameters e1..ep stay formal (EpsPolynomial coefficients).
    """

    __slots__ = ("base", "directions")

    def __init__(self, base: Algebra, directions):
        directions = tuple(directions)
        for phi in directions:
            if not isinstance(phi, Algebra) or phi.dim != base.dim:
                raise DimensionMismatch("directions must match the base space")
        if directions:
            rows = [[x for row in phi.constants for vec in row for x in vec]
                    for phi in directions]
            if linalg.rank(rows) != len(directions):
                raise ValueError("perturbation directions must be independent")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "directions", directions)

    def __setattr__(self, name, value):
        raise AttributeError("Perturbation is immutable")

    @property
    def nparams(self) -> int:
        return len(self.directions)

    def infinitesimal_part(self) -> Algebra:
        """xi = e1 phi1 + e1 e2 phi2 + ... as an eps-polynomial tensor."""
        n = self.base.dim
        p = self.nparams
        zero = EpsPolynomial(p, {})
        tensor = [[[zero for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for idx, phi in enumerate(self.directions, start=1):
            exps = tuple(1 if v < idx else 0 for v in range(p))
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        c = phi.constants[i][j][k]
                        if c:
                            tensor[i][j][k] = tensor[i][j][k] + \
                                EpsPolynomial(p, {exps: c})
        return Algebra(n, tensor)

    def law(self) -> Algebra:
        """base + xi over eps-polynomial scalars."""
        xi = self.infinitesimal_part()
        p = self.nparams
        return Algebra(self.base.dim, [
            [[EpsPolynomial.const(self.base.constants[i][j][k], p) +
              xi.constants[i][j][k]
              for k in range(self.base.dim)]
             for j in range(self.base.dim)]
            for i in range(self.base.dim)
        ])


def perturbation_residual(pert: Perturbation) -> TrilinearMap:
    """2 d2_base xi + xi o xi as eps-polynomials; zero iff the perturbed
    law is associative for every parameter value."""
    if not pert.base.is_associative():
        raise NotAssociative("perturbation residuals need an associative base")
    p = pert.nparams
    base_eps = pert.base.map_scalars(lambda c: EpsPolynomial.const(c, p))
    xi = pert.infinitesimal_part()
    first = circle_product(base_eps, xi)
    second = circle_product(xi, xi)
    n = pert.base.dim
    tensor = [
        [[[2 * first.tensor[i][j][k][l] + second.tensor[i][j][k][l]
           for l in range(n)] for k in range(n)] for j in range(n)]
        for i in range(n)
    ]
    return TrilinearMap(n, tensor)
