import random
from fractions import Fraction

import pytest

import novikov as nv
from novikov.bialgebra import DUAL_KIND
from novikov.kernel import Tensor3


# ---------------------------------------------------------------------------
# dual products
# ---------------------------------------------------------------------------


def test_dual_product_of_nb2(fix):
    dual = nv.dual_product(fix["FIX-NB2"].coproduct)
    assert dict(dual.c.nonzero_entries()) == {(1, 1, 0): Fraction(1)}  # f2*f2 = f1


def test_dual_product_of_zero():
    dual = nv.dual_product(nv.Coproduct.zero(3))
    assert dual.c.is_zero()


def test_dual_product_mirrors_coalgebra_failure(fix):
    # the coboundary coproduct of the defective dim-2 table gives a dual
    # product that fails the Novikov identities exactly when the coproduct
    # fails the coalgebra axioms
    fx = fix["FIX-NT2"]
    cop = nv.coboundary_coproduct(fx.algebra, fx.rmatrix, "novikov")
    expected = {(0, 1, 0): Fraction(-1), (1, 1, 1): Fraction(-1)}
    assert dict(cop.d.nonzero_entries()) == expected
    dual = nv.dual_product(cop)
    assert (
        nv.check_coalgebra(cop, "novikov").passed
        == nv.check_identity(dual, "left-novikov").passed
        is False
    )


# ---------------------------------------------------------------------------
# coalgebra axioms
# ---------------------------------------------------------------------------


def test_nb2_coalgebra(fix):
    assert nv.check_coalgebra(fix["FIX-NB2"].coproduct, "novikov").passed


def test_delta_omega_right_novikov(fix):
    fx = fix["FIX-RN2"]
    cop = nv.delta_omega(fx.algebra, fx.form)
    assert nv.check_coalgebra(cop, "right-novikov").passed


def test_ca2_coassoc_cocomm(fix):
    assert nv.check_coalgebra(fix["FIX-CA2"].coproduct, "coassoc-cocomm").passed


def test_lie_coalgebra_from_nf4_lift(fix):
    nf4, rn2 = fix["FIX-NF4"], fix["FIX-RN2"]
    cop = nv.coboundary_coproduct(nf4.algebra, nf4.rmatrix, "novikov")
    lb = nv.induce_lie_bialgebra(
        nv.BialgebraBundle(nf4.algebra, cop), rn2.algebra, rn2.form
    )
    assert nv.check_coalgebra(lb.coproduct, "lie").passed


def test_lie_coproduct_antisymmetry(fix):
    nf4, rn2 = fix["FIX-NF4"], fix["FIX-RN2"]
    cop = nv.coboundary_coproduct(nf4.algebra, nf4.rmatrix, "novikov")
    lb = nv.induce_lie_bialgebra(
        nv.BialgebraBundle(nf4.algebra, cop), rn2.algebra, rn2.form
    )
    d = lb.coproduct.d
    n = d.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert d.entry(i, j, k) == -d.entry(i, k, j)


def test_coalgebra_failure_reports_axiom():
    cop = nv.Coproduct(Tensor3.from_entries(2, {(0, 0, 0): Fraction(1), (0, 0, 1): Fraction(1)}))
    report = nv.check_coalgebra(cop, "lie")
    assert not report.passed
    assert report.witness["identity"] == "co-antisymmetry"


# ---------------------------------------------------------------------------
# duality between coalgebra axioms and dual-algebra identities
# ---------------------------------------------------------------------------


def _random_coproduct(rng, dim):
    entries = {}
    for _ in range(rng.randint(0, 5)):
        idx = (rng.randrange(dim), rng.randrange(dim), rng.randrange(dim))
        entries[idx] = Fraction(rng.randint(-2, 2))
    return nv.Coproduct(Tensor3.from_entries(dim, entries))


def test_duality_random_sweep():
    rng = random.Random(3111)
    flavors = list(DUAL_KIND)
    for case in range(100):
        dim = rng.choice((2, 3))
        cop = _random_coproduct(rng, dim)
        flavor = flavors[case % len(flavors)]
        lhs = nv.check_coalgebra(cop, flavor).passed
        rhs = nv.check_identity(nv.dual_product(cop), DUAL_KIND[flavor]).passed
        assert lhs == rhs, (flavor, dict(cop.d.nonzero_entries()))


def test_duality_on_fixture_positives(fix):
    cases = [
        (fix["FIX-NB2"].coproduct, "novikov"),
        (fix["FIX-CA2"].coproduct, "coassoc-cocomm"),
        (nv.delta_omega(fix["FIX-RN2"].algebra, fix["FIX-RN2"].form), "right-novikov"),
    ]
    for cop, flavor in cases:
        assert nv.check_coalgebra(cop, flavor).passed
        assert nv.check_identity(nv.dual_product(cop), DUAL_KIND[flavor]).passed


# ---------------------------------------------------------------------------
# bialgebra bundles
# ---------------------------------------------------------------------------


def test_nb2_bialgebra(fix):
    report = nv.check_bialgebra(fix["FIX-NB2"].bundle(), "novikov")
    assert report.passed


def test_ca2_diff_infinitesimal(fix):
    report = nv.check_bialgebra(fix["FIX-CA2"].bundle(), "diff-infinitesimal")
    assert report.passed


def test_wrong_coproduct_fails_with_witness(fix):
    alg = fix["FIX-N2"].algebra
    bad = nv.Coproduct(Tensor3.from_entries(2, {(0, 0, 0): Fraction(1)}))  # delta(e1)=e1(x)e1
    report = nv.check_bialgebra(nv.BialgebraBundle(alg, bad), "novikov")
    assert not report.passed
    assert report.failing == "novikov-compat"
    assert report.part("novikov-compat").witness["pair"] == ("e1", "e1")


def test_bialgebra_report_names_failing_subcheck(fix):
    # break the algebra side only: NT2's table with NB2's coproduct
    bundle = nv.BialgebraBundle(fix["FIX-NT2"].algebra, fix["FIX-NB2"].coproduct)
    report = nv.check_bialgebra(bundle, "novikov")
    assert not report.passed
    assert report.failing == "left-novikov"
    # monotone: composite fails exactly when some part fails
    assert any(not p.passed for p in report.parts)


def test_diff_flavor_requires_maps(fix):
    bundle = nv.BialgebraBundle(fix["FIX-CA2"].algebra, fix["FIX-CA2"].coproduct)
    with pytest.raises(ValueError):
        nv.check_bialgebra(bundle, "diff-infinitesimal")


def test_lie_bialgebra_from_nf4_lift(fix):
    nf4, rn2 = fix["FIX-NF4"], fix["FIX-RN2"]
    cop = nv.coboundary_coproduct(nf4.algebra, nf4.rmatrix, "novikov")
    lb = nv.induce_lie_bialgebra(
        nv.BialgebraBundle(nf4.algebra, cop), rn2.algebra, rn2.form
    )
    report = nv.check_bialgebra(nv.BialgebraBundle(lb.algebra, lb.coproduct), "lie")
    assert report.passed
