"""Bundled example structures used as cross-checks throughout the suite.

Each fixture is built from its published product/coproduct table; the
catalog maps stable names to a :class:`Fixture` carrying whichever pieces
the example provides (algebra, coproduct, maps, form, canonical r).

Known defect, kept as published: the FIX-NT2 product table is internally
consistent with all of its derived data (coboundary coproduct, induced
brackets, lifted r) but does not satisfy the left Novikov identities, and
its advertised skew r is not a Yang-Baxter solution under the residual
conventions that every other fixture validates.  The checkers report this
honestly instead of patching the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, BilinearFormOnAlgebra, StructureMap, endomorphism
from .bialgebra import BialgebraBundle, Coproduct
from .kernel import Matrix, Tensor3
from .yangbaxter import RMatrix


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    algebra: Algebra
    coproduct: Coproduct | None = None
    rmatrix: RMatrix | None = None
    derivation: Matrix | None = None
    theta: Matrix | None = None
    form: BilinearFormOnAlgebra | None = None

    def bundle(self) -> BialgebraBundle:
        if self.coproduct is None:
            raise ValueError(f"fixture {self.name} has no coproduct")
        return BialgebraBundle(
            self.algebra, self.coproduct, derivation=self.derivation, theta=self.theta
        )

    def structure_maps(self) -> tuple[StructureMap, StructureMap]:
        if self.derivation is None or self.theta is None:
            raise ValueError(f"fixture {self.name} has no differential maps")
        dd = endomorphism(self.algebra, self.derivation, role="derivation")
        th = endomorphism(
            self.algebra, self.theta, role="admissible-theta", companion=self.derivation
        )
        return dd, th


def _f(x) -> Fraction:
    return Fraction(x)


def _fix_n2() -> Fixture:
    alg = Algebra.from_products(
        2, {(0, 0): [(1, 1)]}, basis=("e1", "e2"), kind="left-novikov"
    )
    return Fixture("FIX-N2", "dim-2 Novikov algebra, e1*e1 = e2", alg)


def _fix_nb2() -> Fixture:
    base = _fix_n2()
    cop = Coproduct(
        Tensor3.from_entries(2, {(0, 1, 1): _f(1)}), flavor="novikov"
    )  # delta(e1) = e2 (x) e2
    return Fixture("FIX-NB2", "dim-2 Novikov bialgebra on FIX-N2", base.algebra, coproduct=cop)


def _fix_dd4() -> Fixture:
    # Novikov double of FIX-NB2, written out explicitly: basis e1,e2,f1,f2
    alg = Algebra.from_products(
        4,
        {
            (0, 0): [(1, 1)],                 # e1*e1 = e2
            (3, 3): [(2, 1)],                 # f2*f2 = f1
            (0, 3): [(2, -2), (1, 1)],        # e1*f2 = -2 f1 + e2
            (3, 0): [(1, -2), (2, 1)],        # f2*e1 = -2 e2 + f1
        },
        basis=("e1", "e2", "f1", "f2"),
        kind="left-novikov",
    )
    r = RMatrix.from_entries(alg, {(0, 2): _f(1), (1, 3): _f(1)})  # e1(x)f1 + e2(x)f2
    cop = Coproduct(
        Tensor3.from_entries(4, {(0, 1, 1): _f(1), (3, 2, 2): _f(-1)}), flavor="novikov"
    )  # delta(e1) = e2(x)e2, delta(f2) = -f1(x)f1
    gram = Matrix.from_entries(
        4, 4, {(0, 2): _f(1), (1, 3): _f(1), (2, 0): _f(1), (3, 1): _f(1)}
    )
    form = BilinearFormOnAlgebra(alg, gram, flavor="novikov-invariant")
    return Fixture(
        "FIX-DD4",
        "Novikov double of FIX-NB2 with its canonical r and pairing",
        alg,
        coproduct=cop,
        rmatrix=r,
        form=form,
    )


def _fix_ca2() -> Fixture:
    alg = Algebra.from_products(
        2,
        {(0, 0): [(0, 1)], (0, 1): [(1, 1)], (1, 0): [(1, 1)]},
        basis=("e1", "e2"),
        kind="comm-assoc",
    )
    dd = Matrix.from_entries(2, 2, {(1, 1): _f(1)})     # d(e1)=0, d(e2)=e2
    th = Matrix.from_entries(2, 2, {(0, 0): _f(1)})     # t(e1)=e1, t(e2)=0
    cop = Coproduct(
        Tensor3.from_entries(2, {(1, 1, 1): _f(1)}), flavor="coassoc-cocomm"
    )  # Delta(e2) = e2 (x) e2
    return Fixture(
        "FIX-CA2",
        "dim-2 differential infinitesimal bialgebra (unital-like products)",
        alg,
        coproduct=cop,
        derivation=dd,
        theta=th,
    )


def _fix_da3() -> Fixture:
    alg = Algebra.from_products(
        3,
        {(0, 0): [(1, 1)], (0, 1): [(2, 1)], (1, 0): [(2, 1)]},
        basis=("e1", "e2", "e3"),
        kind="comm-assoc",
    )
    dd = Matrix.from_entries(3, 3, {(1, 0): _f(1), (2, 1): _f(2)})  # d(e1)=e2, d(e2)=2e3
    th = -dd                                                        # t = -d
    r = RMatrix.from_entries(alg, {(1, 2): _f(1), (2, 1): _f(-1)})  # e2(x)e3 - e3(x)e2
    return Fixture(
        "FIX-DA3",
        "dim-3 admissible differential algebra with skew admissible-AYBE solution",
        alg,
        rmatrix=r,
        derivation=dd,
        theta=th,
    )


def _fix_rn2() -> Fixture:
    alg = Algebra.from_products(
        2,
        {(0, 1): [(0, -2)], (1, 0): [(0, 1)], (1, 1): [(1, 1)]},
        basis=("x1", "x2"),
        kind="right-novikov",
    )
    gram = Matrix.from_entries(2, 2, {(0, 1): _f(1), (1, 0): _f(1)})
    form = BilinearFormOnAlgebra(alg, gram, flavor="right-novikov-invariant")
    return Fixture(
        "FIX-RN2", "dim-2 quadratic right Novikov algebra", alg, form=form
    )


def _fix_nt2() -> Fixture:
    alg = Algebra.from_products(
        2,
        {(0, 1): [(1, -1)], (1, 0): [(1, 1)]},  # e1*e2 = -e2, e2*e1 = e2
        basis=("e1", "e2"),
        kind="left-novikov",
    )
    r = RMatrix.from_entries(alg, {(0, 1): _f(1), (1, 0): _f(-1)})  # e1(x)e2 - e2(x)e1
    return Fixture(
        "FIX-NT2",
        "dim-2 table with skew r (published with a defective product table)",
        alg,
        rmatrix=r,
    )


def _fix_nf4() -> Fixture:
    alg = Algebra.from_products(
        4,
        {
            (0, 0): [(1, 1)],            # e1*e1 = e2
            (0, 3): [(1, 1), (2, -2)],   # e1*e4 = e2 - 2e3
            (3, 0): [(1, -2), (2, 1)],   # e4*e1 = -2e2 + e3
            (3, 3): [(2, 1)],            # e4*e4 = e3
        },
        basis=("e1", "e2", "e3", "e4"),
        kind="left-novikov",
    )
    r = RMatrix.from_entries(alg, {(0, 2): _f(1), (1, 3): _f(1)})  # e1(x)e3 + e2(x)e4
    return Fixture(
        "FIX-NF4", "dim-4 Novikov algebra with factorizable r", alg, rmatrix=r
    )


_BUILDERS = {
    "FIX-N2": _fix_n2,
    "FIX-NB2": _fix_nb2,
    "FIX-DD4": _fix_dd4,
    "FIX-CA2": _fix_ca2,
    "FIX-DA3": _fix_da3,
    "FIX-RN2": _fix_rn2,
    "FIX-NT2": _fix_nt2,
    "FIX-NF4": _fix_nf4,
}

FIXTURE_NAMES = tuple(_BUILDERS)


def fixture(name: str) -> Fixture:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}") from None
    return builder()


def catalog() -> dict[str, Fixture]:
    return {name: fixture(name) for name in FIXTURE_NAMES}
