"""Structure-constant algebras and brute-force identity checkers.

An algebra is a dimension, a list of basis labels and a cube of structure
constants ``c[i][j][k]`` with ``e_i * e_j = sum_k c[i][j][k] e_k``.  All
identity checks sweep every basis tuple (multilinearity makes that
sufficient) and report the first failing tuple in index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .kernel import DimensionError, Matrix, Tensor3, scalar_is_zero
from .report import CheckResult, FormReport

ALGEBRA_KINDS = (
    "left-novikov",
    "right-novikov",
    "comm-assoc",
    "lie",
    "pre-lie",
    "unchecked",
)

IDENTITY_KINDS = (
    "left-novikov",
    "right-novikov",
    "pre-lie",
    "comm-assoc",
    "lie",
    "commutative",
)


class KindMismatchError(ValueError):
    """Declared algebra class does not fit the requested operation."""


def _vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _vec_scale(s, u):
    return tuple(s * a for a in u)


def _vec_is_zero(u) -> bool:
    return all(scalar_is_zero(a) for a in u)


def _vec_str(u, basis) -> str:
    parts = []
    for coeff, label in zip(u, basis):
        if scalar_is_zero(coeff):
            continue
        parts.append(f"{coeff}*{label}")
    return " + ".join(parts) if parts else "0"


class Algebra:
    """Finite-dimensional algebra given by structure constants."""

    __slots__ = ("dim", "basis", "c", "kind", "_left", "_right")

    def __init__(self, c: Tensor3, basis: Sequence[str] | None = None, kind: str = "unchecked"):
        if kind not in ALGEBRA_KINDS:
            raise ValueError(f"unknown algebra kind {kind!r}")
        self.dim = c.dim
        self.basis = tuple(basis) if basis is not None else tuple(f"e{i+1}" for i in range(c.dim))
        if len(self.basis) != self.dim:
            raise DimensionError("basis label count != dimension")
        if len(set(self.basis)) != self.dim:
            raise ValueError("duplicate basis labels")
        self.c = c
        self.kind = kind
        self._left = None
        self._right = None

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Mapping[tuple, Mapping[int, object] | Sequence[tuple]],
        basis: Sequence[str] | None = None,
        kind: str = "unchecked",
    ) -> "Algebra":
        """Build from a partial product table; undeclared products are zero.

        ``products[(i, j)]`` is either a mapping ``{k: coeff}`` or a list of
        ``(k, coeff)`` pairs, all indices 0-based.
        """
        entries: dict[tuple, object] = {}
        for (i, j), value in products.items():
            items = value.items() if isinstance(value, Mapping) else value
            for k, coeff in items:
                entries[(i, j, k)] = entries.get((i, j, k), Fraction(0)) + Fraction(coeff)
        return cls(Tensor3.from_entries(dim, entries), basis=basis, kind=kind)

    def with_kind(self, kind: str) -> "Algebra":
        return Algebra(self.c, basis=self.basis, kind=kind)

    # -- products ----------------------------------------------------------

    def unit_vector(self, i: int) -> tuple:
        return tuple(Fraction(1 if j == i else 0) for j in range(self.dim))

    def product_basis(self, i: int, j: int) -> tuple:
        """Coordinates of e_i * e_j."""
        return self.c.data[i][j]

    def product(self, u: Sequence, v: Sequence) -> tuple:
        """Bilinear extension of the basis product."""
        n = self.dim
        out = [Fraction(0)] * n
        for i in range(n):
            a = u[i]
            if scalar_is_zero(a):
                continue
            for j in range(n):
                b = v[j]
                if scalar_is_zero(b):
                    continue
                coeff = a * b
                row = self.c.data[i][j]
                for k in range(n):
                    if not scalar_is_zero(row[k]):
                        out[k] = out[k] + coeff * row[k]
        return tuple(out)

    # -- multiplication operators ------------------------------------------

    def left_mult(self, i: int) -> Matrix:
        """Matrix of x -> e_i * x."""
        if self._left is None:
            self._left = tuple(
                Matrix([[self.c.data[a][j][k] for j in range(self.dim)] for k in range(self.dim)])
                for a in range(self.dim)
            )
        return self._left[i]

    def right_mult(self, i: int) -> Matrix:
        """Matrix of x -> x * e_i."""
        if self._right is None:
            self._right = tuple(
                Matrix([[self.c.data[j][a][k] for j in range(self.dim)] for k in range(self.dim)])
                for a in range(self.dim)
            )
        return self._right[i]

    def left_mult_vec(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, coeff in enumerate(x):
            if not scalar_is_zero(coeff):
                out = out + self.left_mult(i).scale(coeff)
        return out

    def right_mult_vec(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for i, coeff in enumerate(x):
            if not scalar_is_zero(coeff):
                out = out + self.right_mult(i).scale(coeff)
        return out

    def label_index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def __repr__(self) -> str:
        lines = []
        for (i, j, k), val in self.c.nonzero_entries():
            lines.append(f"{self.basis[i]}*{self.basis[j]} -> {val}*{self.basis[k]}")
        return f"Algebra(dim={self.dim}, kind={self.kind}, {', '.join(lines)})"


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------


def _witness(indices, lhs, rhs, identity, basis):
    return {
        "identity": identity,
        "indices": tuple(i + 1 for i in indices),
        "labels": tuple(basis[i] for i in indices),
        "lhs": _vec_str(lhs, basis),
        "rhs": _vec_str(rhs, basis),
    }


def check_identity(a: Algebra, id_kind: str) -> CheckResult:
    """Verify a polynomial identity class over all basis tuples."""
    if id_kind not in IDENTITY_KINDS:
        raise ValueError(f"unknown identity kind {id_kind!r}")
    n = a.dim
    prod = a.product
    e = [a.unit_vector(i) for i in range(n)]

    def assoc(u, v, w):
        return _vec_sub(prod(prod(u, v), w), prod(u, prod(v, w)))

    if id_kind == "commutative":
        for i in range(n):
            for j in range(n):
                lhs = prod(e[i], e[j])
                rhs = prod(e[j], e[i])
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "commutative", False, _witness((i, j), lhs, rhs, "a*b = b*a", a.basis)
                    )
        return CheckResult("commutative", True)

    if id_kind == "lie":
        for i in range(n):
            for j in range(n):
                lhs = prod(e[i], e[j])
                rhs = _vec_scale(Fraction(-1), prod(e[j], e[i]))
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "lie", False, _witness((i, j), lhs, rhs, "[a,b] = -[b,a]", a.basis)
                    )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    jac = _vec_add(
                        prod(prod(e[i], e[j]), e[k]),
                        _vec_add(
                            prod(prod(e[j], e[k]), e[i]),
                            prod(prod(e[k], e[i]), e[j]),
                        ),
                    )
                    if not _vec_is_zero(jac):
                        zero = tuple(Fraction(0) for _ in range(n))
                        return CheckResult(
                            "lie",
                            False,
                            _witness((i, j, k), jac, zero, "jacobi", a.basis),
                        )
        return CheckResult("lie", True)

    if id_kind == "comm-assoc":
        comm = check_identity(a, "commutative")
        if not comm.passed:
            return CheckResult("comm-assoc", False, comm.witness)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = prod(prod(e[i], e[j]), e[k])
                    rhs = prod(e[i], prod(e[j], e[k]))
                    if not _vec_is_zero(_vec_sub(lhs, rhs)):
                        return CheckResult(
                            "comm-assoc",
                            False,
                            _witness((i, j, k), lhs, rhs, "(ab)c = a(bc)", a.basis),
                        )
        return CheckResult("comm-assoc", True)

    if id_kind == "pre-lie":
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = assoc(e[i], e[j], e[k])
                    rhs = assoc(e[j], e[i], e[k])
                    if not _vec_is_zero(_vec_sub(lhs, rhs)):
                        return CheckResult(
                            "pre-lie",
                            False,
                            _witness(
                                (i, j, k), lhs, rhs, "assoc(a,b,c) = assoc(b,a,c)", a.basis
                            ),
                        )
        return CheckResult("pre-lie", True)

    if id_kind == "left-novikov":
        prelie = check_identity(a, "pre-lie")
        if not prelie.passed:
            return CheckResult("left-novikov", False, prelie.witness)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = prod(prod(e[i], e[j]), e[k])
                    rhs = prod(prod(e[i], e[k]), e[j])
                    if not _vec_is_zero(_vec_sub(lhs, rhs)):
                        return CheckResult(
                            "left-novikov",
                            False,
                            _witness((i, j, k), lhs, rhs, "(ab)c = (ac)b", a.basis),
                        )
        return CheckResult("left-novikov", True)

    # right-novikov
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = prod(e[i], prod(e[j], e[k]))
                rhs = prod(e[j], prod(e[i], e[k]))
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "right-novikov",
                        False,
                        _witness((i, j, k), lhs, rhs, "a(bc) = b(ac)", a.basis),
                    )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = assoc(e[i], e[j], e[k])
                rhs = assoc(e[i], e[k], e[j])
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "right-novikov",
                        False,
                        _witness(
                            (i, j, k), lhs, rhs, "assoc(a,b,c) = assoc(a,c,b)", a.basis
                        ),
                    )
    return CheckResult("right-novikov", True)


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """Pair of action maps (one matrix per basis element of the algebra)."""

    carrier_dim: int
    l_maps: tuple
    r_maps: tuple

    def l_of(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.carrier_dim, self.carrier_dim)
        for coeff, m in zip(x, self.l_maps):
            if not scalar_is_zero(coeff):
                out = out + m.scale(coeff)
        return out

    def r_of(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.carrier_dim, self.carrier_dim)
        for coeff, m in zip(x, self.r_maps):
            if not scalar_is_zero(coeff):
                out = out + m.scale(coeff)
        return out


def adjoint_rep(a: Algebra) -> Representation:
    """Left/right multiplications acting on the algebra itself."""
    return Representation(
        a.dim,
        tuple(a.left_mult(i) for i in range(a.dim)),
        tuple(a.right_mult(i) for i in range(a.dim)),
    )


def coadjoint_rep(a: Algebra) -> Representation:
    """Dual of the adjoint representation on the dual space.

    Uses the pairing convention <psi*(a) xi, v> = -<xi, psi(a) v>, i.e.
    psi*(e_i) = -psi(e_i)^T in coordinates; the carrier action maps are
    (l* + r*, -r*).
    """
    l_maps = []
    r_maps = []
    for i in range(a.dim):
        li = a.left_mult(i)
        ri = a.right_mult(i)
        l_maps.append(-(li + ri).transpose())
        r_maps.append(ri.transpose())
    return Representation(a.dim, tuple(l_maps), tuple(r_maps))


def check_representation(a: Algebra, rep: Representation) -> CheckResult:
    """Verify the four compatibility conditions of a module over ``a``."""
    if a.kind not in ("left-novikov", "comm-assoc", "unchecked"):
        raise KindMismatchError("representations are checked over left Novikov algebras")
    n = a.dim

    def l_of(vec):
        return rep.l_of(vec)

    def r_of(vec):
        return rep.r_of(vec)

    for i in range(n):
        for j in range(n):
            li, lj = rep.l_maps[i], rep.l_maps[j]
            ri, rj = rep.r_maps[i], rep.r_maps[j]
            pij = a.product_basis(i, j)
            pji = a.product_basis(j, i)
            conditions = (
                (
                    "l([a1,a2]) = [l(a1),l(a2)]",
                    l_of(tuple(x - y for x, y in zip(pij, pji))),
                    li @ lj - lj @ li,
                ),
                ("l(a1*a2) = r(a2)l(a1)", l_of(pij), rj @ li),
                (
                    "l(a1)r(a2) - r(a2)l(a1) = r(a1*a2) - r(a2)r(a1)",
                    li @ rj - rj @ li,
                    r_of(pij) - rj @ ri,
                ),
                ("r(a1)r(a2) = r(a2)r(a1)", ri @ rj, rj @ ri),
            )
            for label, lhs, rhs in conditions:
                if not (lhs - rhs).is_zero():
                    return CheckResult(
                        "representation",
                        False,
                        {
                            "identity": label,
                            "indices": (i + 1, j + 1),
                            "labels": (a.basis[i], a.basis[j]),
                        },
                    )
    return CheckResult("representation", True)


# ---------------------------------------------------------------------------
# structure maps
# ---------------------------------------------------------------------------

STRUCTURE_ROLES = ("derivation", "admissible-theta", "rota-baxter", "homomorphism", "generic")


@dataclass(frozen=True)
class StructureMap:
    """A linear map carrying its defining role (derivation, Rota-Baxter, ...)."""

    source: Algebra
    target: Algebra
    matrix: Matrix
    role: str = "generic"
    weight: Fraction | None = None
    companion: Matrix | None = None  # the derivation paired with an admissible theta

    def __post_init__(self):
        if self.role not in STRUCTURE_ROLES:
            raise ValueError(f"unknown structure-map role {self.role!r}")
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise DimensionError("structure map shape does not match algebras")

    def apply(self, vec: Sequence) -> tuple:
        return self.matrix.apply(vec)


def endomorphism(a: Algebra, matrix: Matrix, role: str = "generic", weight=None, companion=None) -> StructureMap:
    return StructureMap(a, a, matrix, role=role,
                        weight=None if weight is None else Fraction(weight),
                        companion=companion)


def check_structure_map(m: StructureMap) -> CheckResult:
    """Verify the identity declared by the map's role over all basis pairs."""
    a = m.source
    n = a.dim
    e = [a.unit_vector(i) for i in range(n)]

    if m.role == "derivation":
        for i in range(n):
            for j in range(n):
                lhs = m.apply(a.product_basis(i, j))
                rhs = _vec_add(
                    a.product(m.apply(e[i]), e[j]), a.product(e[i], m.apply(e[j]))
                )
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "derivation",
                        False,
                        _witness((i, j), lhs, rhs, "d(ab) = d(a)b + a d(b)", a.basis),
                    )
        return CheckResult("derivation", True)

    if m.role == "admissible-theta":
        if m.companion is None:
            raise ValueError("admissible-theta needs its companion derivation")
        for i in range(n):
            for j in range(n):
                lhs = m.apply(a.product_basis(i, j))
                rhs = _vec_sub(
                    a.product(m.apply(e[i]), e[j]),
                    a.product(e[i], m.companion.apply(e[j])),
                )
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "admissible-theta",
                        False,
                        _witness((i, j), lhs, rhs, "t(ab) = t(a)b - a d(b)", a.basis),
                    )
        return CheckResult("admissible-theta", True)

    if m.role == "rota-baxter":
        if m.weight is None:
            raise ValueError("rota-baxter map needs a weight")
        lam = m.weight
        for i in range(n):
            for j in range(n):
                pi, pj = m.apply(e[i]), m.apply(e[j])
                lhs = a.product(pi, pj)
                inner = _vec_add(
                    _vec_add(a.product(pi, e[j]), a.product(e[i], pj)),
                    _vec_scale(lam, a.product_basis(i, j)),
                )
                rhs = m.apply(inner)
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "rota-baxter",
                        False,
                        _witness(
                            (i, j),
                            lhs,
                            rhs,
                            "P(a)P(b) = P(P(a)b + aP(b) + w ab)",
                            a.basis,
                        ),
                    )
        return CheckResult("rota-baxter", True)

    if m.role == "homomorphism":
        b = m.target
        for i in range(n):
            for j in range(n):
                lhs = m.apply(a.product_basis(i, j))
                rhs = b.product(m.apply(e[i]), m.apply(e[j]))
                if not _vec_is_zero(_vec_sub(lhs, rhs)):
                    return CheckResult(
                        "homomorphism",
                        False,
                        _witness((i, j), lhs, rhs, "f(ab) = f(a)f(b)", b.basis),
                    )
        return CheckResult("homomorphism", True)

    return CheckResult("generic", True)


# ---------------------------------------------------------------------------
# bilinear forms
# ---------------------------------------------------------------------------

FORM_FLAVORS = ("novikov-invariant", "right-novikov-invariant", "plain")


@dataclass(frozen=True)
class BilinearFormOnAlgebra:
    algebra: Algebra
    matrix: Matrix
    flavor: str = "plain"

    def __post_init__(self):
        if self.flavor not in FORM_FLAVORS:
            raise ValueError(f"unknown form flavor {self.flavor!r}")
        if self.matrix.rows != self.algebra.dim or self.matrix.cols != self.algebra.dim:
            raise DimensionError("form matrix does not match the algebra dimension")

    def pair(self, u: Sequence, v: Sequence):
        acc = Fraction(0)
        for i, a in enumerate(u):
            if scalar_is_zero(a):
                continue
            for j, b in enumerate(v):
                if not scalar_is_zero(b):
                    acc = acc + a * self.matrix[i, j] * b
        return acc


def check_bilinear_form(f: BilinearFormOnAlgebra) -> FormReport:
    """Symmetry, nondegeneracy (full rank) and flavor-specific invariance."""
    from .kernel import mat_rank

    a = f.algebra
    n = a.dim
    e = [a.unit_vector(i) for i in range(n)]
    symmetric = f.matrix.is_symmetric()
    nondegenerate = mat_rank(f.matrix) == n

    invariant = True
    witness = None
    if f.flavor == "novikov-invariant":
        # B(a1*a2, a3) + B(a2, a1*a3 + a3*a1) = 0
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    value = f.pair(a.product_basis(i, j), e[k]) + f.pair(
                        e[j], _vec_add(a.product_basis(i, k), a.product_basis(k, i))
                    )
                    if not scalar_is_zero(value):
                        invariant = False
                        witness = {
                            "identity": "B(ab,c) + B(b, ac+ca) = 0",
                            "indices": (i + 1, j + 1, k + 1),
                            "labels": (a.basis[i], a.basis[j], a.basis[k]),
                            "value": str(value),
                        }
                        break
                if witness:
                    break
            if witness:
                break
    elif f.flavor == "right-novikov-invariant":
        # w(b1*b2, b3) + w(b1, b2*b3 + b3*b2) = 0
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    value = f.pair(a.product_basis(i, j), e[k]) + f.pair(
                        e[i], _vec_add(a.product_basis(j, k), a.product_basis(k, j))
                    )
                    if not scalar_is_zero(value):
                        invariant = False
                        witness = {
                            "identity": "w(ab,c) + w(a, bc+cb) = 0",
                            "indices": (i + 1, j + 1, k + 1),
                            "labels": (a.basis[i], a.basis[j], a.basis[k]),
                            "value": str(value),
                        }
                        break
                if witness:
                    break
            if witness:
                break

    return FormReport(symmetric, nondegenerate, invariant, witness)


# ---------------------------------------------------------------------------
# direct sums
# ---------------------------------------------------------------------------


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Block-diagonal sum of two algebras of the same declared kind."""
    if a.kind != b.kind:
        raise KindMismatchError(f"cannot sum kinds {a.kind!r} and {b.kind!r}")
    n, m = a.dim, b.dim
    entries = {}
    for (i, j, k), val in a.c.nonzero_entries():
        entries[(i, j, k)] = val
    for (i, j, k), val in b.c.nonzero_entries():
        entries[(n + i, n + j, n + k)] = val
    basis = tuple(a.basis) + tuple(f"{lbl}'" if lbl in a.basis else lbl for lbl in b.basis)
    return Algebra(Tensor3.from_entries(n + m, entries), basis=basis, kind=a.kind)
