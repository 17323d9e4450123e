from fractions import Fraction

import pytest

import novikov as nv
from novikov.algebra import KindMismatchError
from novikov.kernel import Matrix, Tensor3

from conftest import vec


# ---------------------------------------------------------------------------
# identity checks on the bundled examples
# ---------------------------------------------------------------------------


def test_fixture_identities(fix):
    assert nv.check_identity(fix["FIX-N2"].algebra, "left-novikov").passed
    assert nv.check_identity(fix["FIX-NF4"].algebra, "left-novikov").passed
    assert nv.check_identity(fix["FIX-RN2"].algebra, "right-novikov").passed
    assert nv.check_identity(fix["FIX-CA2"].algebra, "comm-assoc").passed
    assert nv.check_identity(fix["FIX-DA3"].algebra, "comm-assoc").passed
    assert nv.check_identity(fix["FIX-DD4"].algebra, "left-novikov").passed


def test_zero_algebra_passes_everything():
    zero = nv.Algebra(Tensor3.zero(3))
    for kind in ("left-novikov", "right-novikov", "pre-lie", "comm-assoc", "lie", "commutative"):
        assert nv.check_identity(zero, kind).passed


def test_fix_nt2_table_is_not_novikov(fix):
    # the bundled table is kept exactly as circulated; it genuinely fails
    # the pre-Lie half of the Novikov identities at (e1, e2, e1)
    report = nv.check_identity(fix["FIX-NT2"].algebra, "left-novikov")
    assert not report.passed
    assert report.witness["labels"] == ("e1", "e2", "e1")
    # and the right-handed variant fails as well
    assert not nv.check_identity(fix["FIX-NT2"].algebra, "right-novikov").passed


def test_left_novikov_implies_pre_lie(fix):
    for name in ("FIX-N2", "FIX-NF4", "FIX-DD4"):
        alg = fix[name].algebra
        assert nv.check_identity(alg, "left-novikov").passed
        assert nv.check_identity(alg, "pre-lie").passed


def test_witness_is_first_failing_tuple():
    # adding e2*e1 = e1 to the dim-2 algebra breaks the pre-Lie half; the
    # first failing tuple in index order is (e1, e2, e1)
    alg = nv.Algebra.from_products(
        2, {(0, 0): [(1, 1)], (1, 0): [(0, 1)]}, kind="unchecked"
    )
    report = nv.check_identity(alg, "left-novikov")
    assert not report.passed
    assert report.witness["indices"] == (1, 2, 1)
    assert report.witness["identity"] == "assoc(a,b,c) = assoc(b,a,c)"


def test_lie_identity_checks():
    so3 = nv.Algebra.from_products(
        3,
        {
            (0, 1): [(2, 1)],
            (1, 0): [(2, -1)],
            (1, 2): [(0, 1)],
            (2, 1): [(0, -1)],
            (2, 0): [(1, 1)],
            (0, 2): [(1, -1)],
        },
        kind="lie",
    )
    assert nv.check_identity(so3, "lie").passed
    bad = nv.Algebra.from_products(3, {(0, 1): [(2, 1)]})
    report = nv.check_identity(bad, "lie")
    assert not report.passed
    assert report.witness["identity"] == "[a,b] = -[b,a]"


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


def test_adjoint_and_coadjoint_pass(fix):
    for name in ("FIX-N2", "FIX-NF4", "FIX-DD4"):
        alg = fix[name].algebra
        assert nv.check_representation(alg, nv.adjoint_rep(alg)).passed
        assert nv.check_representation(alg, nv.coadjoint_rep(alg)).passed


def test_coadjoint_entries_on_n2(fix):
    alg = fix["FIX-N2"].algebra
    co = nv.coadjoint_rep(alg)
    # (l*+r*)(e1) sends f2 to -2 f1: entry (row f1, col f2) = -2
    assert co.l_maps[0][0, 1] == Fraction(-2)
    assert co.r_maps[0][0, 1] == Fraction(1)  # -r*(e1) maps f2 to +f1


def test_coadjoint_of_zero_algebra_is_zero():
    zero = nv.Algebra(Tensor3.zero(2), kind="left-novikov")
    co = nv.coadjoint_rep(zero)
    assert all(m.is_zero() for m in co.l_maps)
    assert all(m.is_zero() for m in co.r_maps)
    assert nv.check_representation(zero, co).passed


def test_zero_r_maps_still_represent_n2(fix):
    # in the dim-2 algebra every product lands on e2, which acts as zero,
    # so pairing the adjoint left action with zero right maps still
    # satisfies all four conditions
    alg = fix["FIX-N2"].algebra
    adj = nv.adjoint_rep(alg)
    rep = nv.Representation(alg.dim, adj.l_maps, tuple(Matrix.zeros(2, 2) for _ in range(2)))
    assert nv.check_representation(alg, rep).passed


def test_broken_representation_has_witness():
    # over e1*e1 = -1/2 e1, e1*e2 = e2, e2*e1 = -1/2 e2 the product e1*e1
    # acts nontrivially, so zero right maps violate l(a1*a2) = r(a2)l(a1)
    alg = nv.Algebra.from_products(
        2,
        {(0, 0): [(0, Fraction(-1, 2))], (0, 1): [(1, 1)], (1, 0): [(1, Fraction(-1, 2))]},
        kind="left-novikov",
    )
    assert nv.check_identity(alg, "left-novikov").passed
    adj = nv.adjoint_rep(alg)
    broken = nv.Representation(
        alg.dim, adj.l_maps, tuple(Matrix.zeros(2, 2) for _ in range(2))
    )
    report = nv.check_representation(alg, broken)
    assert not report.passed
    assert report.witness["identity"] == "l(a1*a2) = r(a2)l(a1)"
    assert report.witness["labels"] == ("e1", "e1")


# ---------------------------------------------------------------------------
# structure maps
# ---------------------------------------------------------------------------


def test_ca2_derivation_and_theta(fix):
    fx = fix["FIX-CA2"]
    dd, th = fx.structure_maps()
    assert nv.check_structure_map(dd).passed
    assert nv.check_structure_map(th).passed


def test_theta_needs_companion(fix):
    fx = fix["FIX-CA2"]
    alone = nv.endomorphism(fx.algebra, fx.theta, role="admissible-theta")
    with pytest.raises(ValueError):
        nv.check_structure_map(alone)


def test_nf4_rota_baxter(fix):
    alg = fix["FIX-NF4"].algebra
    pmat = Matrix.from_entries(4, 4, {(0, 0): Fraction(-1), (1, 1): Fraction(-1)})
    op = nv.endomorphism(alg, pmat, role="rota-baxter", weight=1)
    assert nv.check_structure_map(op).passed
    bad = nv.endomorphism(alg, Matrix.identity(4), role="rota-baxter", weight=1)
    assert not nv.check_structure_map(bad).passed


def test_homomorphism_role(fix):
    alg = fix["FIX-N2"].algebra
    ident = nv.StructureMap(alg, alg, Matrix.identity(2), role="homomorphism")
    assert nv.check_structure_map(ident).passed
    doubled = nv.StructureMap(alg, alg, Matrix.identity(2).scale(2), role="homomorphism")
    assert not nv.check_structure_map(doubled).passed


# ---------------------------------------------------------------------------
# bilinear forms
# ---------------------------------------------------------------------------


def test_rn2_form(fix):
    report = nv.check_bilinear_form(fix["FIX-RN2"].form)
    assert report.symmetric and report.nondegenerate and report.invariant


def test_nf4_iso_form_is_invariant(fix):
    alg = fix["FIX-NF4"].algebra
    gram = Matrix.from_entries(
        4, 4, {(0, 2): 1, (2, 0): 1, (1, 3): 1, (3, 1): 1}
    )
    form = nv.BilinearFormOnAlgebra(alg, gram, flavor="novikov-invariant")
    report = nv.check_bilinear_form(form)
    assert report.symmetric and report.nondegenerate and report.invariant


def test_zero_form_degenerate(fix):
    alg = fix["FIX-N2"].algebra
    form = nv.BilinearFormOnAlgebra(alg, Matrix.zeros(2, 2), flavor="plain")
    report = nv.check_bilinear_form(form)
    assert report.symmetric
    assert not report.nondegenerate


def test_invariance_witness(fix):
    alg = fix["FIX-N2"].algebra
    form = nv.BilinearFormOnAlgebra(alg, Matrix.identity(2), flavor="novikov-invariant")
    report = nv.check_bilinear_form(form)
    assert not report.invariant
    assert report.witness["labels"] == ("e1", "e1", "e2")


# ---------------------------------------------------------------------------
# direct sums
# ---------------------------------------------------------------------------


def test_direct_sum_with_zero(fix):
    one = nv.Algebra(Tensor3.zero(1), basis=("z",), kind="left-novikov")
    total = nv.direct_sum(fix["FIX-N2"].algebra, one)
    assert total.dim == 3
    assert dict(total.c.nonzero_entries()) == {(0, 0, 1): Fraction(1)}
    assert nv.check_identity(total, "left-novikov").passed


def test_direct_sum_same_identity(fix):
    n2 = fix["FIX-N2"].algebra
    total = nv.direct_sum(n2, n2)
    assert total.dim == 4
    assert nv.check_identity(total, "left-novikov").passed
    rn2 = fix["FIX-RN2"].algebra
    total2 = nv.direct_sum(rn2, rn2)
    assert nv.check_identity(total2, "right-novikov").passed
    assert len(set(total2.basis)) == 4


def test_direct_sum_kind_mismatch(fix):
    with pytest.raises(KindMismatchError):
        nv.direct_sum(fix["FIX-N2"].algebra, fix["FIX-RN2"].algebra)


# ---------------------------------------------------------------------------
# products on vectors
# ---------------------------------------------------------------------------


def test_bilinear_extension(fix):
    alg = fix["FIX-NF4"].algebra
    u = vec(alg, e1=1, e4=2)
    v = vec(alg, e1=Fraction(1, 2))
    # (e1 + 2 e4) * (1/2 e1) = 1/2 e2 + (-2 e2 + e3)
    expect = vec(alg, e2=Fraction(1, 2) - 2, e3=1)
    assert alg.product(u, v) == expect
