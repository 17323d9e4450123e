"""Exact arithmetic kernel: rationals, multivariate polynomials, dense
matrices and coefficient tensors.

All values are immutable after construction and every operation is a pure
function, so everything here can be shared freely between threads.  No
floating point is used anywhere; scalars are ``fractions.Fraction`` and
parametric coefficients are :class:`Poly` over the rationals.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class KernelError(Exception):
    """Base class for kernel-level failures."""


class DimensionError(KernelError):
    """Operand shapes do not line up."""


class DegenerateFormError(KernelError):
    """A bilinear form that must be invertible is singular."""


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

#: literal grammar shared by all file formats: optional '-', integer,
#: optional '/' and positive integer, e.g. "-1/2", "3", "0".
_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (q > 0) into an exact :class:`Fraction`."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def format_rational(value) -> str:
    """Render a rational in the literal grammar (no decimals, q > 0)."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over the rationals
# ---------------------------------------------------------------------------

#: hard cap on the number of variables; parameter families stay tiny.
MAX_POLY_VARS = 8


class Poly:
    """Multivariate polynomial with rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  The variable
    tuple is fixed per polynomial and binary operations require both
    operands to use the same variables; plain numbers are lifted to
    constants.  Canonical (graded-lexicographic) term order is used for
    printing; equality compares the normalized term maps directly.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        if len(variables) > MAX_POLY_VARS:
            raise ValueError(f"at most {MAX_POLY_VARS} polynomial variables supported")
        clean: dict[tuple, Fraction] = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != len(variables):
                raise DimensionError("exponent vector length != number of variables")
            if any(e < 0 for e in expo):
                raise ValueError("negative exponent")
            coeff = Fraction(coeff)
            if coeff:
                clean[expo] = clean.get(expo, Fraction(0)) + coeff
                if not clean[expo]:
                    del clean[expo]
        self.vars = variables
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, variables: Sequence[str] = ()) -> "Poly":
        variables = tuple(variables)
        zero = (0,) * len(variables)
        return cls(variables, {zero: Fraction(value)})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        expo = tuple(1 if v == name else 0 for v in variables)
        if sum(expo) != 1:
            raise ValueError(f"{name!r} not among variables {variables}")
        return cls(variables, {expo: Fraction(1)})

    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "Poly":
        return cls(variables, {})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in expo) for expo in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        zero = (0,) * len(self.vars)
        return self.terms.get(zero, Fraction(0))

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise DimensionError("polynomials over different variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.vars)
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for expo, coeff in other.terms.items():
            total = terms.get(expo, Fraction(0)) + coeff
            if total:
                terms[expo] = total
            else:
                terms.pop(expo, None)
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                total = terms.get(expo, Fraction(0)) + c1 * c2
                if total:
                    terms[expo] = total
                else:
                    del terms[expo]
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Poly.constant(1, self.vars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self.vars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, object]) -> Fraction:
        """Substitute rationals for every variable (evaluation homomorphism)."""
        values = [Fraction(assignment[v]) for v in self.vars]
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for val, e in zip(values, expo):
                term *= val ** e
            total += term
        return total

    # -- printing ----------------------------------------------------------

    def _sorted_terms(self):
        # graded lex: total degree first, then lexicographic on exponents
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for expo, coeff in self._sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.vars, expo)
                if e
            ]
            if not factors:
                parts.append(format_rational(coeff))
                continue
            monomial = "*".join(factors)
            if coeff == 1:
                parts.append(monomial)
            elif coeff == -1:
                parts.append(f"-{monomial}")
            else:
                parts.append(f"{format_rational(coeff)}*{monomial}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_is_zero(p) -> bool:
    """True iff ``p`` (a Poly, Fraction or int) is identically zero."""
    if isinstance(p, Poly):
        return p.is_zero()
    return Fraction(p) == 0


def scalar_is_zero(x) -> bool:
    """Zero test that works uniformly for Fractions and Polys."""
    return poly_is_zero(x)


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Dense row-major matrix over the rationals (or polynomials)."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(row) for row in data)
        if not rows:
            raise DimensionError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DimensionError("ragged matrix rows")
        self.rows = len(rows)
        self.cols = width
        self.data = rows

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        zero = Fraction(0)
        return cls([[zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence]) -> "Matrix":
        rows = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(rows)])

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Mapping[tuple, object]) -> "Matrix":
        grid = [[Fraction(0)] * cols for _ in range(rows)]
        for (i, j), value in entries.items():
            grid[i][j] = grid[i][j] + value
        return cls(grid)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(self.data[i][j] for i in range(self.rows))

    # -- predicates --------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(scalar_is_zero(x) for row in self.data for x in row)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(
                scalar_is_zero(a - b)
                for ra, rb in zip(self.data, other.data)
                for a, b in zip(ra, rb)
            )
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    # -- arithmetic --------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data])

    def scale(self, scalar) -> "Matrix":
        return Matrix([[scalar * a for a in row] for row in self.data])

    def __rmul__(self, scalar) -> "Matrix":
        if isinstance(scalar, Matrix):
            return NotImplemented
        return self.scale(scalar)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc = acc + self.data[i][k] * other.data[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product on a coordinate vector."""
        if len(vec) != self.cols:
            raise DimensionError("vector length != matrix width")
        return tuple(
            sum((self.data[i][k] * vec[k] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        )

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"


def mat_inverse(m: Matrix) -> Matrix | None:
    """Exact inverse by Gaussian elimination, or ``None`` when singular.

    Entries must be rationals; pivoting picks the first nonzero entry.
    """
    if not m.is_square():
        raise DimensionError("inverse needs a square matrix")
    n = m.rows
    work = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(m.data)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv = Fraction(1, 1) / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return Matrix([row[n:] for row in work])


def mat_rank(m: Matrix) -> int:
    """Rank over the rationals by exact row elimination."""
    work = [list(row) for row in m.data]
    rank = 0
    for col in range(m.cols):
        pivot = next((r for r in range(rank, m.rows) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        lead = work[rank][col]
        work[rank] = [x / lead for x in work[rank]]
        for r in range(m.rows):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == m.rows:
            break
    return rank


def dual_basis_wrt_form(omega: Matrix) -> Matrix:
    """Dual basis coordinates for a symmetric nondegenerate form.

    Returns F with column j holding the coordinates of f_j such that
    omega(e_i, f_j) = delta_ij; concretely F = omega^-1.
    """
    if not omega.is_square():
        raise DimensionError("form matrix must be square")
    if not omega.is_symmetric():
        raise DegenerateFormError("form matrix must be symmetric")
    inv = mat_inverse(omega)
    if inv is None:
        raise DegenerateFormError("form is degenerate")
    return inv


# ---------------------------------------------------------------------------
# tensors
# ---------------------------------------------------------------------------


class Tensor2:
    """Element of V (x) V as an n-by-n coefficient array.

    ``t = sum coeff[i][j] e_i (x) e_j``; the coefficient array is exposed
    as a :class:`Matrix` so tensor manipulations reduce to matrix algebra.
    """

    __slots__ = ("dim", "mat")

    def __init__(self, mat: Matrix):
        if not mat.is_square():
            raise DimensionError("a 2-tensor has a square coefficient array")
        self.dim = mat.rows
        self.mat = mat

    @classmethod
    def zero(cls, dim: int) -> "Tensor2":
        return cls(Matrix.zeros(dim, dim))

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple, object]) -> "Tensor2":
        return cls(Matrix.from_entries(dim, dim, entries))

    def entry(self, i: int, j: int):
        return self.mat[i, j]

    def tau(self) -> "Tensor2":
        """Flip of the two tensor slots."""
        return Tensor2(self.mat.transpose())

    def __add__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.mat + other.mat)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return Tensor2(self.mat - other.mat)

    def __neg__(self) -> "Tensor2":
        return Tensor2(-self.mat)

    def scale(self, scalar) -> "Tensor2":
        return Tensor2(self.mat.scale(scalar))

    def is_zero(self) -> bool:
        return self.mat.is_zero()

    def is_symmetric(self) -> bool:
        return self.mat.is_symmetric()

    def is_skew(self) -> bool:
        return (self.mat + self.mat.transpose()).is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor2):
            return NotImplemented
        return self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self) -> str:
        return f"Tensor2({self.mat!r})"


class Tensor3:
    """Element of V (x) V (x) V as a cube of coefficients."""

    __slots__ = ("dim", "data")

    def __init__(self, data):
        cube = tuple(tuple(tuple(plane) for plane in row) for row in data)
        n = len(cube)
        for plane in cube:
            if len(plane) != n or any(len(line) != n for line in plane):
                raise DimensionError("a 3-tensor has a cubical coefficient array")
        self.dim = n
        self.data = cube

    @classmethod
    def zero(cls, dim: int) -> "Tensor3":
        zero = Fraction(0)
        return cls([[[zero] * dim for _ in range(dim)] for _ in range(dim)])

    @classmethod
    def from_entries(cls, dim: int, entries: Mapping[tuple, object]) -> "Tensor3":
        grid = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in entries.items():
            grid[i][j][k] = grid[i][j][k] + value
        return cls(grid)

    def entry(self, i: int, j: int, k: int):
        return self.data[i][j][k]

    def __add__(self, other: "Tensor3") -> "Tensor3":
        if self.dim != other.dim:
            raise DimensionError("tensor dims differ")
        return Tensor3(
            [
                [
                    [a + b for a, b in zip(la, lb)]
                    for la, lb in zip(pa, pb)
                ]
                for pa, pb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "Tensor3") -> "Tensor3":
        return self + (-other)

    def __neg__(self) -> "Tensor3":
        return Tensor3([[[-x for x in line] for line in plane] for plane in self.data])

    def scale(self, scalar) -> "Tensor3":
        return Tensor3([[[scalar * x for x in line] for line in plane] for plane in self.data])

    def permute(self, perm: tuple) -> "Tensor3":
        """Relabel slots: out[idx[perm[0]], idx[perm[1]], idx[perm[2]]] = in[idx].

        ``perm`` names, for each input slot, the output slot it moves to;
        e.g. (1, 0, 2) swaps the first two slots.
        """
        n = self.dim
        grid = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    val = self.data[i][j][k]
                    if scalar_is_zero(val):
                        continue
                    pos = [0, 0, 0]
                    src = (i, j, k)
                    for slot in range(3):
                        pos[perm[slot]] = src[slot]
                    grid[pos[0]][pos[1]][pos[2]] = grid[pos[0]][pos[1]][pos[2]] + val
        return Tensor3(grid)

    def is_zero(self) -> bool:
        return all(
            scalar_is_zero(x) for plane in self.data for line in plane for x in line
        )

    def nonzero_entries(self):
        for i, plane in enumerate(self.data):
            for j, line in enumerate(plane):
                for k, val in enumerate(line):
                    if not scalar_is_zero(val):
                        yield (i, j, k), val

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor3):
            return NotImplemented
        return self.dim == other.dim and (self - other).is_zero()

    def __hash__(self):
        return hash(self.data)

    def __repr__(self) -> str:
        entries = ", ".join(f"{idx}: {val}" for idx, val in self.nonzero_entries())
        return f"Tensor3(dim={self.dim}, {{{entries}}})"
