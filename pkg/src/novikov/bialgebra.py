"""Coproducts, coalgebra axioms, bialgebra compatibility and duality.

A coproduct is stored as the cube ``d[i][j][k]`` with
``delta(e_i) = sum_{j,k} d[i][j][k] e_j (x) e_k``; ``delta(e_i)`` is then
the square coefficient matrix ``d[i]``.  Compatibility displays are
evaluated literally on basis pairs as exact tensor identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Algebra, check_identity
from .kernel import DimensionError, Matrix, Tensor3, scalar_is_zero
from .report import CheckResult, CompositeReport

COPRODUCT_FLAVORS = ("novikov", "coassoc-cocomm", "right-novikov", "lie", "unchecked")

#: algebra class of the dual product for each coalgebra flavor
DUAL_KIND = {
    "novikov": "left-novikov",
    "coassoc-cocomm": "comm-assoc",
    "right-novikov": "right-novikov",
    "lie": "lie",
}

BIALGEBRA_FLAVORS = ("novikov", "infinitesimal", "lie", "diff-infinitesimal")


class Coproduct:
    """Linear map V -> V (x) V in coordinates."""

    __slots__ = ("dim", "d", "flavor")

    def __init__(self, d: Tensor3, flavor: str = "unchecked"):
        if flavor not in COPRODUCT_FLAVORS:
            raise ValueError(f"unknown coproduct flavor {flavor!r}")
        self.dim = d.dim
        self.d = d
        self.flavor = flavor

    @classmethod
    def from_matrices(cls, mats: Sequence[Matrix], flavor: str = "unchecked") -> "Coproduct":
        dim = len(mats)
        entries = {}
        for i, m in enumerate(mats):
            for j in range(dim):
                for k in range(dim):
                    if not scalar_is_zero(m[j, k]):
                        entries[(i, j, k)] = m[j, k]
        return cls(Tensor3.from_entries(dim, entries), flavor=flavor)

    @classmethod
    def zero(cls, dim: int, flavor: str = "unchecked") -> "Coproduct":
        return cls(Tensor3.zero(dim), flavor=flavor)

    def with_flavor(self, flavor: str) -> "Coproduct":
        return Coproduct(self.d, flavor=flavor)

    def delta_mat(self, i: int) -> Matrix:
        """Coefficient matrix of delta(e_i)."""
        return Matrix(self.d.data[i])

    def delta_of(self, vec: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, coeff in enumerate(vec):
            if not scalar_is_zero(coeff):
                out = out + self.delta_mat(i).scale(coeff)
        return out

    def is_zero(self) -> bool:
        return self.d.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coproduct):
            return NotImplemented
        return self.d == other.d

    def __hash__(self):
        return hash(self.d)

    def __repr__(self) -> str:
        return f"Coproduct(flavor={self.flavor}, {self.d!r})"


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------


def dual_product(cop: Coproduct, basis: Sequence[str] | None = None) -> Algebra:
    """Product on the dual basis: f_j * f_k = sum_i d[i][j][k] f_i.

    The result carries kind 'unchecked'; whether it satisfies the algebra
    identities dual to the coproduct's flavor is for the caller to check.
    """
    n = cop.dim
    entries = {}
    for (i, j, k), val in cop.d.nonzero_entries():
        entries[(j, k, i)] = val
    labels = tuple(basis) if basis is not None else tuple(f"f{i+1}" for i in range(n))
    return Algebra(Tensor3.from_entries(n, entries), basis=labels, kind="unchecked")


# ---------------------------------------------------------------------------
# coalgebra axioms
# ---------------------------------------------------------------------------


def _cop_on_slot(cop: Coproduct, t: Matrix, slot: int) -> Tensor3:
    """Apply the coproduct to one slot of a 2-tensor, producing a 3-tensor.

    slot 1: e_j (x) e_k -> delta(e_j) (x) e_k;
    slot 2: e_j (x) e_k -> e_j (x) delta(e_k).
    """
    n = cop.dim
    entries: dict[tuple, object] = {}
    for j in range(n):
        for k in range(n):
            coeff = t[j, k]
            if scalar_is_zero(coeff):
                continue
            if slot == 1:
                for (p, q), val in _matrix_entries(cop.delta_mat(j)):
                    key = (p, q, k)
                    entries[key] = entries.get(key, Fraction(0)) + coeff * val
            else:
                for (p, q), val in _matrix_entries(cop.delta_mat(k)):
                    key = (j, p, q)
                    entries[key] = entries.get(key, Fraction(0)) + coeff * val
    return Tensor3.from_entries(n, entries)


def _matrix_entries(m: Matrix):
    for i in range(m.rows):
        for j in range(m.cols):
            if not scalar_is_zero(m[i, j]):
                yield (i, j), m[i, j]


SWAP12 = (1, 0, 2)
SWAP23 = (0, 2, 1)


def check_coalgebra(cop: Coproduct, flavor: str) -> CheckResult:
    """Verify a flavor's coalgebra axioms as exact identities in V^(x)3."""
    if flavor not in COPRODUCT_FLAVORS or flavor == "unchecked":
        raise ValueError(f"unknown coalgebra flavor {flavor!r}")
    n = cop.dim

    for i in range(n):
        di = cop.delta_mat(i)
        d_then_1 = _cop_on_slot(cop, di, 1)           # (delta (x) id) delta
        d_then_2 = _cop_on_slot(cop, di, 2)           # (id (x) delta) delta

        if flavor == "coassoc-cocomm":
            if not (d_then_1 - d_then_2).is_zero():
                return CheckResult(
                    "coassoc-cocomm", False, {"identity": "coassociativity", "index": i + 1}
                )
            if not (di - di.transpose()).is_zero():
                return CheckResult(
                    "coassoc-cocomm", False, {"identity": "cocommutativity", "index": i + 1}
                )
            continue

        if flavor == "novikov":
            # (tau (x) id)(id (x) delta) tau delta = (delta (x) id) delta
            lhs = _cop_on_slot(cop, di.transpose(), 2).permute(SWAP12)
            if not (lhs - d_then_1).is_zero():
                return CheckResult(
                    "novikov-coalgebra", False, {"identity": "axiom-1", "index": i + 1}
                )
            # (id(x)d)d - (tau(x)id)(id(x)d)d = (d(x)id)d - (tau(x)id)(d(x)id)d
            lhs2 = d_then_2 - d_then_2.permute(SWAP12)
            rhs2 = d_then_1 - d_then_1.permute(SWAP12)
            if not (lhs2 - rhs2).is_zero():
                return CheckResult(
                    "novikov-coalgebra", False, {"identity": "axiom-2", "index": i + 1}
                )
            continue

        if flavor == "right-novikov":
            # (id(x)D)D = (tau(x)id)(id(x)D)D
            if not (d_then_2 - d_then_2.permute(SWAP12)).is_zero():
                return CheckResult(
                    "right-novikov-coalgebra", False, {"identity": "axiom-1", "index": i + 1}
                )
            # (D(x)id)D - (id(x)tau)(D(x)id)D = (id(x)D)D - (id(x)tau)(id(x)D)D
            lhs2 = d_then_1 - d_then_1.permute(SWAP23)
            rhs2 = d_then_2 - d_then_2.permute(SWAP23)
            if not (lhs2 - rhs2).is_zero():
                return CheckResult(
                    "right-novikov-coalgebra", False, {"identity": "axiom-2", "index": i + 1}
                )
            continue

        # lie
        if not (di + di.transpose()).is_zero():
            return CheckResult(
                "lie-coalgebra", False, {"identity": "co-antisymmetry", "index": i + 1}
            )
        lhs = d_then_2 - d_then_2.permute(SWAP12)
        if not (lhs - d_then_1).is_zero():
            return CheckResult(
                "lie-coalgebra", False, {"identity": "co-jacobi", "index": i + 1}
            )

    names = {
        "novikov": "novikov-coalgebra",
        "coassoc-cocomm": "coassoc-cocomm",
        "right-novikov": "right-novikov-coalgebra",
        "lie": "lie-coalgebra",
    }
    return CheckResult(names[flavor], True)


# ---------------------------------------------------------------------------
# bialgebra bundles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BialgebraBundle:
    """Algebra + coproduct, with the two extra maps of the differential flavor."""

    algebra: Algebra
    coproduct: Coproduct
    derivation: Matrix | None = None
    theta: Matrix | None = None

    def __post_init__(self):
        if self.algebra.dim != self.coproduct.dim:
            raise DimensionError("algebra and coproduct dimensions differ")


def _novikov_compat(a: Algebra, cop: Coproduct) -> CheckResult:
    """The three compatibility displays of a Novikov bialgebra."""
    n = a.dim
    dmats = [cop.delta_mat(i) for i in range(n)]
    for s in range(n):
        for t in range(n):
            ls, rs = a.left_mult(s), a.right_mult(s)
            lt, rt = a.left_mult(t), a.right_mult(t)
            ds, dt = dmats[s], dmats[t]
            delta_prod = Matrix.zeros(n, n)
            for k, coeff in enumerate(a.product_basis(s, t)):
                if not scalar_is_zero(coeff):
                    delta_prod = delta_prod + dmats[k].scale(coeff)

            # delta(a1 a2) = (r(a2)(x)id) delta(a1) + (id(x)(l+r)(a1))(delta(a2)+tau delta(a2))
            rhs1 = rt @ ds + (dt + dt.transpose()) @ (ls + rs).transpose()
            if not (delta_prod - rhs1).is_zero():
                return CheckResult(
                    "novikov-compat",
                    False,
                    {"identity": "compat-1", "pair": (a.basis[s], a.basis[t])},
                )

            # ((l+r)(a1)(x)id)delta(a2) - (id(x)(l+r)(a1)) tau delta(a2)  symmetric in a1<->a2
            lhs2 = (ls + rs) @ dt - dt.transpose() @ (ls + rs).transpose()
            rhs2 = (lt + rt) @ ds - ds.transpose() @ (lt + rt).transpose()
            if not (lhs2 - rhs2).is_zero():
                return CheckResult(
                    "novikov-compat",
                    False,
                    {"identity": "compat-2", "pair": (a.basis[s], a.basis[t])},
                )

            # (id(x)r(a1) - r(a1)(x)id)(delta(a2)+tau delta(a2))  symmetric in a1<->a2
            sym_t = dt + dt.transpose()
            sym_s = ds + ds.transpose()
            lhs3 = sym_t @ rs.transpose() - rs @ sym_t
            rhs3 = sym_s @ rt.transpose() - rt @ sym_s
            if not (lhs3 - rhs3).is_zero():
                return CheckResult(
                    "novikov-compat",
                    False,
                    {"identity": "compat-3", "pair": (a.basis[s], a.basis[t])},
                )
    return CheckResult("novikov-compat", True)


def _infinitesimal_compat(a: Algebra, cop: Coproduct) -> CheckResult:
    """Delta(a1 a2) = (id (x) u(a1)) Delta(a2) + (u(a2) (x) id) Delta(a1)."""
    n = a.dim
    dmats = [cop.delta_mat(i) for i in range(n)]
    for s in range(n):
        for t in range(n):
            us = a.left_mult(s)
            ut = a.left_mult(t)
            delta_prod = Matrix.zeros(n, n)
            for k, coeff in enumerate(a.product_basis(s, t)):
                if not scalar_is_zero(coeff):
                    delta_prod = delta_prod + dmats[k].scale(coeff)
            rhs = dmats[t] @ us.transpose() + ut @ dmats[s]
            if not (delta_prod - rhs).is_zero():
                return CheckResult(
                    "infinitesimal-compat",
                    False,
                    {"identity": "compat", "pair": (a.basis[s], a.basis[t])},
                )
    return CheckResult("infinitesimal-compat", True)


def _lie_compat(a: Algebra, cop: Coproduct) -> CheckResult:
    """Cocycle condition of a Lie bialgebra on basis pairs."""
    n = a.dim
    dmats = [cop.delta_mat(i) for i in range(n)]
    for s in range(n):
        for t in range(n):
            ads = a.left_mult(s)
            adt = a.left_mult(t)
            delta_bracket = Matrix.zeros(n, n)
            for k, coeff in enumerate(a.product_basis(s, t)):
                if not scalar_is_zero(coeff):
                    delta_bracket = delta_bracket + dmats[k].scale(coeff)
            rhs = (
                ads @ dmats[t]
                + dmats[t] @ ads.transpose()
                - adt @ dmats[s]
                - dmats[s] @ adt.transpose()
            )
            if not (delta_bracket - rhs).is_zero():
                return CheckResult(
                    "lie-compat",
                    False,
                    {"identity": "cocycle", "pair": (a.basis[s], a.basis[t])},
                )
    return CheckResult("lie-compat", True)


def _codifferential_checks(b: BialgebraBundle) -> list[CheckResult]:
    """Coderivation and codifferential-compatibility conditions."""
    a, cop = b.algebra, b.coproduct
    n = a.dim
    theta, dd = b.theta, b.derivation
    out = []

    ok = True
    wit = None
    for i in range(n):
        di = cop.delta_mat(i)
        lhs = Matrix.zeros(n, n)
        for k in range(n):
            if not scalar_is_zero(theta[k, i]):
                lhs = lhs + cop.delta_mat(k).scale(theta[k, i])
        rhs = theta @ di + di @ theta.transpose()
        if not (lhs - rhs).is_zero():
            ok, wit = False, {"identity": "coderivation", "index": i + 1}
            break
    out.append(CheckResult("theta-coderivation", ok, wit))

    ok = True
    wit = None
    for i in range(n):
        di = cop.delta_mat(i)
        lhs = dd @ di - di @ theta.transpose()
        rhs = Matrix.zeros(n, n)
        for k in range(n):
            if not scalar_is_zero(dd[k, i]):
                rhs = rhs + cop.delta_mat(k).scale(dd[k, i])
        if not (lhs - rhs).is_zero():
            ok, wit = False, {"identity": "(d(x)id - id(x)t)Delta = Delta d", "index": i + 1}
            break
    out.append(CheckResult("codifferential-compat", ok, wit))
    return out


def check_bialgebra(b: BialgebraBundle, flavor: str) -> CompositeReport:
    """Algebra identity + coalgebra axioms + flavor compatibility displays.

    The report names every sub-check; it fails exactly when one of them
    fails.  The differential flavor additionally verifies that the bundled
    maps are a derivation / admissible pair and the codifferential laws.
    """
    if flavor not in BIALGEBRA_FLAVORS:
        raise ValueError(f"unknown bialgebra flavor {flavor!r}")
    a, cop = b.algebra, b.coproduct
    parts: list[CheckResult] = []

    if flavor == "novikov":
        parts.append(check_identity(a, "left-novikov"))
        parts.append(check_coalgebra(cop, "novikov"))
        parts.append(_novikov_compat(a, cop))
    elif flavor == "infinitesimal":
        parts.append(check_identity(a, "comm-assoc"))
        parts.append(check_coalgebra(cop, "coassoc-cocomm"))
        parts.append(_infinitesimal_compat(a, cop))
    elif flavor == "lie":
        parts.append(check_identity(a, "lie"))
        parts.append(check_coalgebra(cop, "lie"))
        parts.append(_lie_compat(a, cop))
    else:  # diff-infinitesimal
        if b.derivation is None or b.theta is None:
            raise ValueError("diff-infinitesimal flavor needs both derivation and theta maps")
        from .algebra import endomorphism, check_structure_map

        parts.append(check_identity(a, "comm-assoc"))
        parts.append(check_coalgebra(cop, "coassoc-cocomm"))
        parts.append(_infinitesimal_compat(a, cop))
        dmap = check_structure_map(endomorphism(a, b.derivation, role="derivation"))
        parts.append(CheckResult("derivation", dmap.passed, dmap.witness))
        tmap = check_structure_map(
            endomorphism(a, b.theta, role="admissible-theta", companion=b.derivation)
        )
        parts.append(CheckResult("admissible-theta", tmap.passed, tmap.witness))
        parts.extend(_codifferential_checks(b))

    return CompositeReport(f"{flavor}-bialgebra", tuple(parts))
