"""Yang-Baxter residuals, invariance notions and r-matrix classification.

Coordinate dictionary used throughout, for r = sum R[i][j] e_i (x) e_j:

  sharp   = R^T      from  <eta, sharp(xi)> =  <xi (x) eta, r>
  natural = -R       from  <xi1, natural(xi2)> = -<xi1 (x) xi2, r>
  iso     = R + R^T  (= sharp - natural, symmetric; twice the symmetric
                      part of r read as a map)

These three fix every sign downstream; the factorizable dim-4 fixture and
the double of the dim-2 bialgebra fixture serve as the canonical
cross-checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Sequence

from .algebra import Algebra, KindMismatchError
from .bialgebra import Coproduct
from .kernel import (
    Matrix,
    Poly,
    Tensor2,
    Tensor3,
    mat_rank,
    scalar_is_zero,
)
from .report import CheckResult

YBE_FLAVORS = ("nybe", "aybe", "cybe")

#: algebra kinds accepted for each residual flavor ('unchecked' is always
#: allowed; a commutative associative algebra is in particular Novikov).
_FLAVOR_KINDS = {
    "nybe": ("left-novikov", "comm-assoc", "unchecked"),
    "aybe": ("comm-assoc", "unchecked"),
    "cybe": ("lie", "unchecked"),
}


class BudgetError(RuntimeError):
    """A search was refused because the grid exceeds the budget."""


@dataclass(frozen=True)
class RMatrix:
    """An element r of A (x) A attached to its ambient algebra."""

    algebra: Algebra
    tensor: Tensor2

    def __post_init__(self):
        if self.tensor.dim != self.algebra.dim:
            raise KindMismatchError("r-matrix dimension != algebra dimension")

    @classmethod
    def from_entries(cls, algebra: Algebra, entries) -> "RMatrix":
        return cls(algebra, Tensor2.from_entries(algebra.dim, entries))

    @property
    def mat(self) -> Matrix:
        return self.tensor.mat

    def tau(self) -> "RMatrix":
        return RMatrix(self.algebra, self.tensor.tau())

    def is_skew(self) -> bool:
        return self.tensor.is_skew()


@dataclass(frozen=True)
class RMaps:
    """The two contraction maps of r and their difference."""

    sharp: Matrix
    natural: Matrix
    iso: Matrix


def build_r_maps(r: RMatrix) -> RMaps:
    """sharp = R^T, natural = -R, iso = sharp - natural = R + R^T."""
    m = r.mat
    sharp = m.transpose()
    natural = -m
    iso = sharp - natural
    assert iso.is_symmetric()
    return RMaps(sharp=sharp, natural=natural, iso=iso)


# ---------------------------------------------------------------------------
# residuals
# ---------------------------------------------------------------------------


def _check_flavor(a: Algebra, flavor: str):
    if flavor not in YBE_FLAVORS:
        raise ValueError(f"unknown Yang-Baxter flavor {flavor!r}")
    if a.kind not in _FLAVOR_KINDS[flavor]:
        raise KindMismatchError(f"flavor {flavor!r} needs kind in {_FLAVOR_KINDS[flavor]}, got {a.kind!r}")


def ybe_residual(a: Algebra, r: RMatrix, flavor: str) -> Tensor3:
    """Exact residual tensor of the flavor's Yang-Baxter equation.

    nybe: r13*r23 + r12*r23 + r23*r12 + r13*r12 with
          r13*r23 = sum x_i (x) x_j (x) (y_i y_j),
          r12*r23 = sum x_i (x) (y_i x_j) (x) y_j,
          r23*r12 = sum x_j (x) (x_i y_j) (x) y_i,
          r13*r12 = sum (x_i x_j) (x) y_j (x) y_i.
    aybe: r13 r12 + r13 r23 - r12 r23.
    cybe: [r12,r13] + [r13,r23] + [r12,r23].
    """
    _check_flavor(a, flavor)
    n = a.dim
    R = r.mat
    entries: dict[tuple, object] = {}

    def bump(key, value):
        entries[key] = entries.get(key, Fraction(0)) + value

    pairs = [
        ((p, q), R[p, q])
        for p in range(n)
        for q in range(n)
        if not scalar_is_zero(R[p, q])
    ]
    for (xa, ya), w1 in pairs:
        for (xb, yb), w2 in pairs:
            w = w1 * w2
            if flavor == "nybe":
                for k, coeff in enumerate(a.product_basis(ya, yb)):  # x_i (x) x_j (x) y_i y_j
                    if not scalar_is_zero(coeff):
                        bump((xa, xb, k), w * coeff)
                for k, coeff in enumerate(a.product_basis(ya, xb)):  # x_i (x) (y_i x_j) (x) y_j
                    if not scalar_is_zero(coeff):
                        bump((xa, k, yb), w * coeff)
                for k, coeff in enumerate(a.product_basis(xa, yb)):  # x_j (x) (x_i y_j) (x) y_i
                    if not scalar_is_zero(coeff):
                        bump((xb, k, ya), w * coeff)
                for k, coeff in enumerate(a.product_basis(xa, xb)):  # (x_i x_j) (x) y_j (x) y_i
                    if not scalar_is_zero(coeff):
                        bump((k, yb, ya), w * coeff)
            elif flavor == "aybe":
                for k, coeff in enumerate(a.product_basis(xa, xb)):  # (x_i x_j) (x) y_j (x) y_i
                    if not scalar_is_zero(coeff):
                        bump((k, yb, ya), w * coeff)
                for k, coeff in enumerate(a.product_basis(ya, yb)):  # x_i (x) x_j (x) y_i y_j
                    if not scalar_is_zero(coeff):
                        bump((xa, xb, k), w * coeff)
                for k, coeff in enumerate(a.product_basis(ya, xb)):  # - x_i (x) (y_i x_j) (x) y_j
                    if not scalar_is_zero(coeff):
                        bump((xa, k, yb), -w * coeff)
            else:  # cybe
                for k, coeff in enumerate(a.product_basis(xa, xb)):  # [x_i,x_j] (x) y_i (x) y_j
                    if not scalar_is_zero(coeff):
                        bump((k, ya, yb), w * coeff)
                for k, coeff in enumerate(a.product_basis(ya, yb)):  # x_i (x) x_j (x) [y_i,y_j]
                    if not scalar_is_zero(coeff):
                        bump((xa, xb, k), w * coeff)
                for k, coeff in enumerate(a.product_basis(ya, xb)):  # x_i (x) [y_i,x_j] (x) y_j
                    if not scalar_is_zero(coeff):
                        bump((xa, k, yb), w * coeff)
    return Tensor3.from_entries(n, entries)


def parametric_residual(a: Algebra, r_poly: Tensor2, flavor: str) -> Tensor3:
    """Residual with polynomial coefficients for a parametric family.

    The entries of ``r_poly`` are :class:`Poly` over at most 8 shared
    parameters; the caller tests :func:`~novikov.kernel.poly_is_zero`
    entrywise on the returned tensor.
    """
    variables = None
    for i in range(r_poly.dim):
        for j in range(r_poly.dim):
            v = r_poly.entry(i, j)
            if isinstance(v, Poly):
                if variables is None:
                    variables = v.vars
                elif v.vars != variables:
                    raise ValueError("all parametric entries must share one variable tuple")
    if variables is not None and len(variables) > 8:
        raise ValueError("at most 8 parameters supported")
    return ybe_residual(a, RMatrix(a, r_poly), flavor)


# ---------------------------------------------------------------------------
# invariance
# ---------------------------------------------------------------------------

INVARIANCE_FLAVORS = ("phi", "u", "ad")

_INVARIANCE_KINDS = {
    "phi": ("left-novikov", "comm-assoc", "unchecked"),
    "u": ("comm-assoc", "unchecked"),
    "ad": ("lie", "unchecked"),
}


def invariance_check(a: Algebra, t: Tensor2, flavor: str) -> CheckResult:
    """Does the flavor's operator annihilate ``t`` for every basis element?

    phi: (l(a) (x) id + id (x) (l+r)(a)) t = 0         (Novikov)
    u:   (id (x) u(a) - u(a) (x) id) t = 0             (commutative assoc)
    ad:  (id (x) ad(a) + ad(a) (x) id) t = 0           (Lie)
    """
    if flavor not in INVARIANCE_FLAVORS:
        raise ValueError(f"unknown invariance flavor {flavor!r}")
    if a.kind not in _INVARIANCE_KINDS[flavor]:
        raise KindMismatchError(f"invariance {flavor!r} does not apply to kind {a.kind!r}")
    if t.dim != a.dim:
        raise KindMismatchError("tensor dimension != algebra dimension")
    T = t.mat
    for i in range(a.dim):
        if flavor == "phi":
            op = a.left_mult(i) @ T + T @ (a.left_mult(i) + a.right_mult(i)).transpose()
        elif flavor == "u":
            op = T @ a.left_mult(i).transpose() - a.left_mult(i) @ T
        else:
            op = a.left_mult(i) @ T + T @ a.left_mult(i).transpose()
        if not op.is_zero():
            return CheckResult(
                f"{flavor}-invariance",
                False,
                {"element": a.basis[i], "image": repr(op)},
            )
    return CheckResult(f"{flavor}-invariance", True)


# ---------------------------------------------------------------------------
# coboundary coproducts and the dual product from r
# ---------------------------------------------------------------------------

COBOUNDARY_FLAVORS = ("novikov", "infinitesimal", "lie")


def coboundary_coproduct(a: Algebra, r: RMatrix, flavor: str) -> Coproduct:
    """Coproduct generated from r by the flavor's action formula.

    novikov:        delta_r(a) = -(l(a) (x) id + id (x) (l+r)(a)) r
    infinitesimal:  Delta_r(a) = (id (x) u(a) - u(a) (x) id) r
    lie:            Delta_r(g) = (id (x) ad(g) + ad(g) (x) id) r
    """
    if flavor not in COBOUNDARY_FLAVORS:
        raise ValueError(f"unknown coboundary flavor {flavor!r}")
    kind_map = {"novikov": "nybe", "infinitesimal": "aybe", "lie": "cybe"}
    _check_flavor(a, kind_map[flavor])
    R = r.mat
    mats = []
    for i in range(a.dim):
        if flavor == "novikov":
            m = -(
                a.left_mult(i) @ R
                + R @ (a.left_mult(i) + a.right_mult(i)).transpose()
            )
        elif flavor == "infinitesimal":
            m = R @ a.left_mult(i).transpose() - a.left_mult(i) @ R
        else:
            m = R @ a.left_mult(i).transpose() + a.left_mult(i) @ R
        mats.append(m)
    target_flavor = {"novikov": "novikov", "infinitesimal": "coassoc-cocomm", "lie": "lie"}
    return Coproduct.from_matrices(mats, flavor=target_flavor[flavor])


def a_star_product_from_r(a: Algebra, r: RMatrix) -> Algebra:
    """Product on the dual space induced by r.

    xi *_r eta = (l* + r*)(sharp(xi))(eta) - r*(natural(eta))(xi), with the
    minus-transpose convention psi*(x) = -psi(x)^T.  For a coboundary
    coproduct this coincides with the dual product of delta_r.
    """
    if a.kind not in ("left-novikov", "comm-assoc", "unchecked"):
        raise KindMismatchError("dual r-product lives over a left Novikov algebra")
    n = a.dim
    maps = build_r_maps(r)
    entries: dict[tuple, object] = {}
    for j in range(n):
        x = maps.sharp.col(j)  # sharp(f_j) in A
        lx_rx_t = (a.left_mult_vec(x) + a.right_mult_vec(x)).transpose()
        for k in range(n):
            y = maps.natural.col(k)  # natural(f_k) in A
            ry_t = a.right_mult_vec(y).transpose()
            vec = tuple(
                -lx_rx_t[i, k] + ry_t[i, j]
                for i in range(n)
            )
            for i, coeff in enumerate(vec):
                if not scalar_is_zero(coeff):
                    entries[(j, k, i)] = coeff
    labels = tuple(f"f{i+1}" for i in range(n))
    return Algebra(Tensor3.from_entries(n, entries), basis=labels, kind="unchecked")


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    is_solution: bool
    is_skew: bool
    sym_part_invariant: bool
    iso_invertible: bool
    hom_sharp: bool
    hom_natural: bool
    verdict: str  # none | triangular | quasi-triangular | factorizable


def classify_r(a: Algebra, r: RMatrix) -> Classification:
    """Fill every flag from the definitions.

    triangular: skew solution; quasi-triangular: solution with invariant
    symmetric part; factorizable: quasi-triangular with iso invertible.
    The verdict 'triangular' is reported even for r = 0.
    """
    if a.kind not in ("left-novikov", "comm-assoc", "unchecked"):
        raise KindMismatchError("classification applies over a left Novikov algebra")
    residual = ybe_residual(a, r, "nybe")
    is_solution = residual.is_zero()
    is_skew = r.is_skew()
    sym = r.tensor + r.tensor.tau()
    sym_inv = invariance_check(a, sym, "phi").passed
    maps = build_r_maps(r)
    iso_invertible = mat_rank(maps.iso) == a.dim

    dual = a_star_product_from_r(a, r)
    hom_sharp = _is_hom(dual, a, maps.sharp)
    hom_natural = _is_hom(dual, a, maps.natural)

    if not is_solution or not sym_inv:
        verdict = "none"
    elif is_skew:
        verdict = "triangular"
    elif iso_invertible:
        verdict = "factorizable"
    else:
        verdict = "quasi-triangular"
    return Classification(
        is_solution=is_solution,
        is_skew=is_skew,
        sym_part_invariant=sym_inv,
        iso_invertible=iso_invertible,
        hom_sharp=hom_sharp,
        hom_natural=hom_natural,
        verdict=verdict,
    )


def _is_hom(src: Algebra, dst: Algebra, matrix: Matrix) -> bool:
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = matrix.apply(src.product_basis(i, j))
            rhs = dst.product(matrix.col(i), matrix.col(j))
            if any(not scalar_is_zero(x - y) for x, y in zip(lhs, rhs)):
                return False
    return True


# ---------------------------------------------------------------------------
# grid search
# ---------------------------------------------------------------------------

GRID_BUDGET = 10**7
MAX_SUPPORT = 9


def grid_search_r(a: Algebra, support: Sequence[tuple], coeffs: Sequence) -> list[RMatrix]:
    """All coefficient assignments on the support that solve the NYBE.

    ``support`` lists (i, j) basis-index pairs (0-based); the assignments
    run over the given coefficient set in lexicographic order, preserving
    both the support order and the coefficient order as supplied.
    """
    support = [tuple(p) for p in support]
    if len(support) > MAX_SUPPORT:
        raise BudgetError(f"support of size {len(support)} exceeds the {MAX_SUPPORT}-slot limit")
    count = len(coeffs) ** len(support) if support else 1
    if count > GRID_BUDGET:
        raise BudgetError(f"grid of {count} assignments exceeds the budget of {GRID_BUDGET}")
    coeffs = [Fraction(c) for c in coeffs]
    hits: list[RMatrix] = []
    if not support:
        zero = RMatrix(a, Tensor2.zero(a.dim))
        return [zero]
    for assignment in iproduct(coeffs, repeat=len(support)):
        entries = {pos: val for pos, val in zip(support, assignment)}
        cand = RMatrix.from_entries(a, entries)
        if ybe_residual(a, cand, "nybe").is_zero():
            hits.append(cand)
    return hits


# ---------------------------------------------------------------------------
# admissible AYBE
# ---------------------------------------------------------------------------


def admissible_aybe_check(a: Algebra, dd, th, r: RMatrix) -> CheckResult:
    """AYBE residual plus the two differential side conditions.

    ``dd`` and ``th`` are the derivation and its admissible partner (as
    StructureMaps or bare matrices); the side conditions are
    (d (x) id - id (x) t) r = 0 and (id (x) d - t (x) id) r = 0.
    """
    from .algebra import StructureMap, check_structure_map, endomorphism

    dmat = dd.matrix if isinstance(dd, StructureMap) else dd
    tmat = th.matrix if isinstance(th, StructureMap) else th

    der = check_structure_map(endomorphism(a, dmat, role="derivation"))
    if not der.passed:
        raise KindMismatchError("the supplied map is not a derivation")
    adm = check_structure_map(endomorphism(a, tmat, role="admissible-theta", companion=dmat))
    if not adm.passed:
        raise KindMismatchError("theta is not admissible to the derivation")

    R = r.mat
    residual = ybe_residual(a, r, "aybe")
    side1 = dmat @ R - R @ tmat.transpose()
    side2 = R @ dmat.transpose() - tmat @ R
    ok = residual.is_zero() and side1.is_zero() and side2.is_zero()
    witness = None
    if not ok:
        witness = {
            "aybe_residual_zero": residual.is_zero(),
            "side1_zero": side1.is_zero(),
            "side2_zero": side2.is_zero(),
        }
    return CheckResult("admissible-aybe", ok, witness)
