#!/usr/bin/env python3
"""Search for Yang-Baxter solutions on a grid and verify whole families.

Two complementary tools: an exhaustive grid search over a finite support
and coefficient set, and a parametric residual whose entries are exact
polynomials in the family's parameters -- an identically-zero residual
verifies the family for every parameter value at once.
"""

from fractions import Fraction

import novikov as nv
from novikov.kernel import Matrix, Poly, Tensor2

nf4 = nv.fixture("FIX-NF4")

print("== parametric verification: scaling a known solution ==")
names = ("t",)
t = Poly.variable("t", names)
zero = Poly.zero(names)
scaled = [[zero] * 4 for _ in range(4)]
for (i, j), v in [((0, 2), 1), ((1, 3), 1)]:
    scaled[i][j] = t * v
res = nv.parametric_residual(nf4.algebra, Tensor2(Matrix(scaled)), "nybe")
print("residual of t*(e1 (x) e3 + e2 (x) e4):",
      "identically zero" if res.is_zero() else dict(res.nonzero_entries()))

print("\n== grid search on the dim-2 table ==")
nt2 = nv.fixture("FIX-NT2")
support = [(0, 1), (1, 0), (1, 1)]
coeffs = [Fraction(-1), Fraction(0), Fraction(1)]
hits = nv.grid_search_r(nt2.algebra, support, coeffs)
print(f"support (e1,e2),(e2,e1),(e2,e2), coefficients -1/0/1: {len(hits)} solutions")
for h in hits:
    entries = {(nt2.algebra.basis[i], nt2.algebra.basis[j]): str(v)
               for (i, j), v in [((i, j), h.mat[i, j]) for i in range(2) for j in range(2)]
               if v != 0}
    print("  ", entries or "{} (zero)")

print("\n== parametric residual of the advertised family ==")
names = ("k", "l")
k = Poly.variable("k", names)
l = Poly.variable("l", names)
z2 = Poly.zero(names)
family = Tensor2(Matrix([[z2, k], [-1 * k, l]]))
res = nv.parametric_residual(nt2.algebra, family, "nybe")
if res.is_zero():
    print("residual identically zero")
else:
    print("nonzero residual entries (the bundled table is defective; the")
    print("advertised family only solves the equation along k = 0):")
    for idx, v in res.nonzero_entries():
        slots = " (x) ".join(nt2.algebra.basis[s] for s in idx)
        print(f"  {slots}: {v}")
