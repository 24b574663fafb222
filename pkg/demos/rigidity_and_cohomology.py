"""Orbit dimensions, second cohomology, and perturbation residuals.

Run with: python demos/rigidity_and_cohomology.py
"""

from fractions import Fraction

from assoc2 import (
    ASSOCIATIVE_LABELS,
    Algebra,
    Perturbation,
    canonical_algebra,
    classify,
    cohomology2,
    orbit_dim,
    perturbation_residual,
)

print("Orbit and cohomology dimensions (z2 = cocycles, b2 = coboundaries):\n")
print(f"{'class':<8} {'orbit':<6} {'z2':<4} {'b2':<4} {'h2':<4} rigid?")
for label in ASSOCIATIVE_LABELS:
    alg = canonical_algebra(label)
    z2, b2, h2 = cohomology2(alg)
    print(f"{label.value:<8} {orbit_dim(alg):<6} {z2:<4} {b2:<4} {h2:<4} "
          f"{'yes' if h2 == 0 and label.value != 'abelian' else 'no'}")

print("\nA vanishing h2 leaves no room for deformation: every direction that")
print("first-order-preserves associativity is already a change of basis.")

print("\nDeforming beta3 by e2*e2 -> eps e1 stays associative for every eps:")
base = canonical_algebra(ASSOCIATIVE_LABELS[3])
flat = Algebra.from_products(2, {(2, 2): (1, 0)})
print("residual:", "identically zero"
      if perturbation_residual(Perturbation(base, [flat])).is_zero()
      else "nonzero")
for eps in (Fraction(1, 100), Fraction(-1, 100)):
    law = Algebra.from_matrix2([[1, 0], [0, 1], [0, 1], [eps, 0]])
    print(f"  at eps = {eps}: classifies to {classify(law).value}")
print("so beta3 sits on the boundary between the two open 4-dimensional")
print("components and cannot be rigid.")

print("\nDeforming beta5 by e1*e2 -> eps e1 is obstructed at first order:")
base5 = canonical_algebra(ASSOCIATIVE_LABELS[5])
bad = Algebra.from_products(2, {(1, 2): (1, 0)})
residual = perturbation_residual(Perturbation(base5, [bad]))
for index, value in residual.nonzero_entries():
    print(f"  residual{list(index)} = {value}")
