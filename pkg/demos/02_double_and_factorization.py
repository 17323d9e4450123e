#!/usr/bin/env python3
"""Double a Novikov bialgebra and factorize elements through it.

The double of a bialgebra on A lives on A + A*, carries the canonical
element r~ = sum e_i (x) f_i, and is always factorizable: the difference
of the two contraction maps of r~ swaps the two halves, so every element
splits as x = x_plus + x_minus through the images of those maps.
"""

from fractions import Fraction

import novikov as nv

nb2 = nv.fixture("FIX-NB2")
print("input bialgebra basis", nb2.algebra.basis, "with e1*e1 = e2, delta(e1) = e2 (x) e2")

dbl = nv.novikov_double(nb2.algebra, nb2.coproduct)
alg = dbl.algebra
print("\ndouble products:")
for (i, j, k), v in alg.c.nonzero_entries():
    print(f"  {alg.basis[i]} * {alg.basis[j]}  ->  {v} {alg.basis[k]}")

print("\ncoboundary coproduct of the canonical element:")
for (i, j, k), v in dbl.coproduct.d.nonzero_entries():
    print(f"  delta({alg.basis[i]}) has {v} {alg.basis[j]} (x) {alg.basis[k]}")

print("\nManin-triple checks:", "all pass" if nv.check_manin_triple(dbl).passed else "FAIL")

cls = nv.classify_r(alg, dbl.r_tilde)
print("classification of r~:", cls.verdict)

maps = nv.build_r_maps(dbl.r_tilde)
print("iso matrix swaps the primal and dual blocks:")
for row in maps.iso.data:
    print("  ", [str(x) for x in row])

x = (Fraction(3), Fraction(-1, 2), Fraction(0), Fraction(2))
xp, xm = nv.factorize_element(alg, dbl.r_tilde, x)
fmt = lambda v: " + ".join(f"{c}*{b}" for c, b in zip(v, alg.basis) if c) or "0"
print(f"\nfactorize {fmt(x)}:")
print("  x_plus  =", fmt(xp))
print("  x_minus =", fmt(xm))
assert tuple(a + b for a, b in zip(xp, xm)) == x
