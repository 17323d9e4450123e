#!/usr/bin/env python3
"""Walk through the basic checkers on the bundled examples.

Every structure is a table of exact rational structure constants; every
check is a brute-force sweep over basis tuples, so a pass is a proof at
the given dimension and a failure comes with the first offending tuple.
"""

import novikov as nv


def show(label, report):
    mark = "ok " if report.passed else "FAIL"
    extra = f"  witness: {report.witness}" if not report.passed and report.witness else ""
    print(f"  [{mark}] {label}{extra}")


print("== algebra identities ==")
n2 = nv.fixture("FIX-N2")
show("FIX-N2 satisfies the left Novikov identities", nv.check_identity(n2.algebra, "left-novikov"))

rn2 = nv.fixture("FIX-RN2")
show("FIX-RN2 satisfies the right Novikov identities", nv.check_identity(rn2.algebra, "right-novikov"))

ca2 = nv.fixture("FIX-CA2")
show("FIX-CA2 is commutative associative", nv.check_identity(ca2.algebra, "comm-assoc"))

# The FIX-NT2 table ships exactly as circulated.  It is internally
# consistent with all of its derived data, yet the table itself fails the
# pre-Lie half of the Novikov identities -- the checker pinpoints where.
nt2 = nv.fixture("FIX-NT2")
show("FIX-NT2 (defective table, kept verbatim)", nv.check_identity(nt2.algebra, "left-novikov"))

print()
print("== forms, maps, representations ==")
show("FIX-RN2 pairing is symmetric/nondegenerate/invariant", nv.check_bilinear_form(rn2.form))

dd, th = ca2.structure_maps()
show("FIX-CA2 derivation", nv.check_structure_map(dd))
show("FIX-CA2 admissible partner map", nv.check_structure_map(th))

alg = n2.algebra
show("adjoint representation of FIX-N2", nv.check_representation(alg, nv.adjoint_rep(alg)))
show("coadjoint representation of FIX-N2", nv.check_representation(alg, nv.coadjoint_rep(alg)))

print()
print("== bialgebras ==")
nb2 = nv.fixture("FIX-NB2")
show("FIX-NB2 is a Novikov bialgebra", nv.check_bialgebra(nb2.bundle(), "novikov"))
show("FIX-CA2 is a differential infinitesimal bialgebra", nv.check_bialgebra(ca2.bundle(), "diff-infinitesimal"))

print()
print("== duality ==")
dual = nv.dual_product(nb2.coproduct)
print("  dual product of the FIX-NB2 coproduct: ", end="")
print({(dual.basis[j], dual.basis[k]): f"{v}*{dual.basis[i]}" for (j, k, i), v in dual.c.nonzero_entries()})
show("coalgebra axioms hold iff the dual algebra is Novikov",
     nv.check_identity(dual, "left-novikov"))
