"""Constructive theorems: doubles, factorization, the Rota-Baxter
correspondence, induced Novikov bialgebras and induced Lie bialgebras.

Sign conventions (kept distinct on purpose):

* the Novikov double uses the coadjoint actions with the minus-transpose
  convention psi*(x) = -psi(x)^T in both directions;
* the differential double uses plain transposes u*(x) = u(x)^T for its
  module actions and for the lifted differential maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    Algebra,
    BilinearFormOnAlgebra,
    StructureMap,
    check_bilinear_form,
    check_identity,
    check_structure_map,
    endomorphism,
)
from .bialgebra import (
    BialgebraBundle,
    Coproduct,
    check_bialgebra,
    dual_product,
)
from .kernel import (
    DegenerateFormError,
    Matrix,
    Tensor2,
    Tensor3,
    dual_basis_wrt_form,
    mat_inverse,
    mat_rank,
    scalar_is_zero,
)
from .report import CheckResult, CompositeReport
from .yangbaxter import (
    RMatrix,
    admissible_aybe_check,
    build_r_maps,
    classify_r,
    coboundary_coproduct,
    invariance_check,
)


class PreconditionError(ValueError):
    """A construction was invoked on data that fails its precondition."""


class NotFactorizableError(PreconditionError):
    """The r-matrix does not classify as factorizable."""


# ---------------------------------------------------------------------------
# Novikov double
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DoubleBundle:
    """Novikov algebra on A + A* with the canonical r and pairing form."""

    algebra: Algebra
    r_tilde: RMatrix
    coproduct: Coproduct
    form: BilinearFormOnAlgebra
    a_dim: int

    @property
    def a_range(self) -> range:
        return range(self.a_dim)

    @property
    def dual_range(self) -> range:
        return range(self.a_dim, self.algebra.dim)


def novikov_double(a: Algebra, cop: Coproduct, check: bool = True) -> DoubleBundle:
    """Double a Novikov bialgebra on A + A*.

    The product glues the two algebras through the coadjoint actions:

      (a1, x1) * (a2, x2) = (a1 a2 + (l*+r*)(x1) a2 - r*(x2) a1,
                             x1 x2 + (l*+r*)(a1) x2 - r*(a2) x1)

    with psi*(x) = -psi(x)^T on both sides.  The canonical element is
    r~ = sum e_i (x) f_i and the coproduct of the bundle is its coboundary
    coproduct; the pairing form B((a1,x1),(a2,x2)) = <x1,a2> + <x2,a1>.
    """
    if check:
        report = check_bialgebra(BialgebraBundle(a, cop), "novikov")
        if not report.passed:
            raise PreconditionError(f"not a Novikov bialgebra (failing: {report.failing})")
    n = a.dim
    dual = dual_product(cop)
    entries: dict[tuple, object] = {}

    def put(i, j, vec_a, vec_d):
        for k, coeff in enumerate(vec_a):
            if not scalar_is_zero(coeff):
                entries[(i, j, k)] = coeff
        for k, coeff in enumerate(vec_d):
            if not scalar_is_zero(coeff):
                entries[(i, j, n + k)] = coeff

    zero = tuple(Fraction(0) for _ in range(n))
    for i in range(n):
        for j in range(n):
            put(i, j, a.product_basis(i, j), zero)                      # e_i * e_j
            put(n + i, n + j, zero, dual.product_basis(i, j))           # f_i * f_j
            # e_i * f_j = ( r~*(f_j) e_i , (l*+r*)(e_i) f_j )
            va = dual.right_mult(j).transpose().col(i)
            vd = (-(a.left_mult(i) + a.right_mult(i)).transpose()).col(j)
            put(i, n + j, va, vd)
            # f_i * e_j = ( -(l*+r*)(f_i) e_j , r*(e_j) f_i ) with the signs resolved
            va2 = (-(dual.left_mult(i) + dual.right_mult(i)).transpose()).col(j)
            vd2 = a.right_mult(j).transpose().col(i)
            put(n + i, j, va2, vd2)

    basis = tuple(a.basis) + tuple(f"f{i+1}" for i in range(n))
    double = Algebra(Tensor3.from_entries(2 * n, entries), basis=basis, kind="left-novikov")
    r_tilde = RMatrix.from_entries(double, {(i, n + i): Fraction(1) for i in range(n)})
    delta = coboundary_coproduct(double, r_tilde, "novikov")
    gram = Matrix.from_entries(
        2 * n,
        2 * n,
        {(i, n + i): Fraction(1) for i in range(n)} | {(n + i, i): Fraction(1) for i in range(n)},
    )
    form = BilinearFormOnAlgebra(double, gram, flavor="novikov-invariant")
    return DoubleBundle(double, r_tilde, delta, form, n)


def check_manin_triple(d: DoubleBundle) -> CompositeReport:
    """Subalgebra closure of both halves plus invariance of the pairing."""
    alg = d.algebra
    parts: list[CheckResult] = []

    closed = True
    witness = None
    for i in d.a_range:
        for j in d.a_range:
            row = alg.product_basis(i, j)
            for k in d.dual_range:
                if not scalar_is_zero(row[k]):
                    closed = False
                    witness = {"pair": (alg.basis[i], alg.basis[j]), "leaks": alg.basis[k]}
                    break
    parts.append(CheckResult("primal-subalgebra", closed, witness))

    closed = True
    witness = None
    for i in d.dual_range:
        for j in d.dual_range:
            row = alg.product_basis(i, j)
            for k in d.a_range:
                if not scalar_is_zero(row[k]):
                    closed = False
                    witness = {"pair": (alg.basis[i], alg.basis[j]), "leaks": alg.basis[k]}
                    break
    parts.append(CheckResult("dual-subalgebra", closed, witness))

    fr = check_bilinear_form(d.form)
    parts.append(CheckResult("pairing-symmetric", fr.symmetric))
    parts.append(CheckResult("pairing-nondegenerate", fr.nondegenerate))
    parts.append(CheckResult("pairing-invariant", fr.invariant, fr.witness))
    return CompositeReport("manin-triple", tuple(parts))


# ---------------------------------------------------------------------------
# differential double
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiffDoubleBundle:
    bundle: BialgebraBundle
    r_tilde: RMatrix
    a_dim: int


def differential_double(b: BialgebraBundle, check: bool = True) -> DiffDoubleBundle:
    """Double a differential infinitesimal bialgebra on A + A*.

    The product uses plain transposes of the multiplication operators in
    both directions and the lifted maps are d (+) t^T and t (+) d^T.
    """
    if b.derivation is None or b.theta is None:
        raise PreconditionError("differential double needs both maps present")
    if check:
        report = check_bialgebra(b, "diff-infinitesimal")
        if not report.passed:
            raise PreconditionError(
                f"not a differential infinitesimal bialgebra (failing: {report.failing})"
            )
    a, cop = b.algebra, b.coproduct
    n = a.dim
    dual = dual_product(cop)
    entries: dict[tuple, object] = {}

    def put(i, j, vec_a, vec_d):
        for k, coeff in enumerate(vec_a):
            if not scalar_is_zero(coeff):
                entries[(i, j, k)] = coeff
        for k, coeff in enumerate(vec_d):
            if not scalar_is_zero(coeff):
                entries[(i, j, n + k)] = coeff

    zero = tuple(Fraction(0) for _ in range(n))
    for i in range(n):
        for j in range(n):
            put(i, j, a.product_basis(i, j), zero)
            put(n + i, n + j, zero, dual.product_basis(i, j))
            va = dual.left_mult(j).transpose().col(i)   # u*(f_j) e_i, plain transpose
            vd = a.left_mult(i).transpose().col(j)      # u*(e_i) f_j
            put(i, n + j, va, vd)
            va2 = dual.left_mult(i).transpose().col(j)
            vd2 = a.left_mult(j).transpose().col(i)
            put(n + i, j, va2, vd2)

    basis = tuple(a.basis) + tuple(f"f{i+1}" for i in range(n))
    double = Algebra(Tensor3.from_entries(2 * n, entries), basis=basis, kind="comm-assoc")
    r_tilde = RMatrix.from_entries(double, {(i, n + i): Fraction(1) for i in range(n)})
    delta = coboundary_coproduct(double, r_tilde, "infinitesimal")

    dd_hat = _block_diag(b.derivation, b.theta.transpose())
    th_hat = _block_diag(b.theta, b.derivation.transpose())
    out = BialgebraBundle(double, delta, derivation=dd_hat, theta=th_hat)
    return DiffDoubleBundle(out, r_tilde, n)


def _block_diag(top: Matrix, bottom: Matrix) -> Matrix:
    n, m = top.rows, bottom.rows
    entries = {}
    for i in range(n):
        for j in range(n):
            if not scalar_is_zero(top[i, j]):
                entries[(i, j)] = top[i, j]
    for i in range(m):
        for j in range(m):
            if not scalar_is_zero(bottom[i, j]):
                entries[(n + i, n + j)] = bottom[i, j]
    return Matrix.from_entries(n + m, n + m, entries)


@dataclass(frozen=True)
class DiffClassification:
    admissible_solution: bool
    sym_part_u_invariant: bool
    iso_invertible: bool
    iso_intertwines: bool  # iso . theta^T = derivation . iso
    is_skew: bool
    verdict: str


def classify_differential_r(b: BialgebraBundle, r: RMatrix) -> DiffClassification:
    """Classification flags for a differential infinitesimal bialgebra."""
    a = b.algebra
    adm = admissible_aybe_check(a, b.derivation, b.theta, r).passed
    sym = r.tensor + r.tensor.tau()
    sym_inv = invariance_check(a, sym, "u").passed
    maps = build_r_maps(r)
    iso_invertible = mat_rank(maps.iso) == a.dim
    intertwines = (maps.iso @ b.theta.transpose() - b.derivation @ maps.iso).is_zero()
    skew = r.is_skew()
    if not adm or not sym_inv:
        verdict = "none"
    elif skew:
        verdict = "triangular"
    elif iso_invertible and intertwines:
        verdict = "factorizable"
    else:
        verdict = "quasi-triangular"
    return DiffClassification(adm, sym_inv, iso_invertible, intertwines, skew, verdict)


# ---------------------------------------------------------------------------
# factorization and the Rota-Baxter correspondence
# ---------------------------------------------------------------------------


def factorize_element(a: Algebra, r: RMatrix, x: Sequence) -> tuple:
    """Split x = x_plus + x_minus through the two images of r.

    x_plus = sharp(iso^-1 x) and x_minus = -natural(iso^-1 x); requires a
    factorizable r.
    """
    cls = classify_r(a, r)
    if cls.verdict != "factorizable":
        raise NotFactorizableError(f"verdict is {cls.verdict!r}, not factorizable")
    maps = build_r_maps(r)
    iso_inv = mat_inverse(maps.iso)
    if iso_inv is None:
        raise NotFactorizableError("iso map is singular")
    xi = iso_inv.apply(tuple(Fraction(v) for v in x))
    x_plus = maps.sharp.apply(xi)
    x_minus = tuple(-v for v in maps.natural.apply(xi))
    return x_plus, x_minus


def descendent_algebra(a: Algebra, p: StructureMap, check: bool = True) -> Algebra:
    """New product a1 *_P a2 = P(a1) a2 + a1 P(a2) + w a1 a2."""
    if p.role != "rota-baxter" or p.weight is None:
        raise PreconditionError("descendent algebra needs a rota-baxter map with a weight")
    if check and not check_structure_map(p).passed:
        raise PreconditionError("the map fails the Rota-Baxter identity")
    lam = p.weight
    n = a.dim
    entries = {}
    for i in range(n):
        pi = p.apply(a.unit_vector(i))
        for j in range(n):
            pj = p.apply(a.unit_vector(j))
            vec = tuple(
                x + y + lam * z
                for x, y, z in zip(
                    a.product(pi, a.unit_vector(j)),
                    a.product(a.unit_vector(i), pj),
                    a.product_basis(i, j),
                )
            )
            for k, coeff in enumerate(vec):
                if not scalar_is_zero(coeff):
                    entries[(i, j, k)] = coeff
    return Algebra(Tensor3.from_entries(n, entries), basis=a.basis, kind="left-novikov")


@dataclass(frozen=True)
class QuadraticRB:
    """Rota-Baxter operator paired with a compatible quadratic form."""

    algebra: Algebra
    operator: StructureMap
    form: BilinearFormOnAlgebra

    @property
    def weight(self) -> Fraction:
        return self.operator.weight


def check_quadratic_rb(q: QuadraticRB) -> CompositeReport:
    """Rota-Baxter identity, quadratic form axioms and their coupling."""
    parts = [check_structure_map(q.operator)]
    fr = check_bilinear_form(q.form)
    parts.append(CheckResult("form-symmetric", fr.symmetric))
    parts.append(CheckResult("form-nondegenerate", fr.nondegenerate))
    parts.append(CheckResult("form-invariant", fr.invariant, fr.witness))
    pmat, gram, lam = q.operator.matrix, q.form.matrix, q.weight
    coupling = pmat.transpose() @ gram + gram @ pmat + gram.scale(lam)
    parts.append(CheckResult("rb-form-coupling", coupling.is_zero()))
    return CompositeReport("quadratic-rota-baxter", tuple(parts))


def rb_from_factorizable(a: Algebra, r: RMatrix, lam) -> QuadraticRB:
    """P = w * natural . iso^-1 with the form given by iso^-1."""
    lam = Fraction(lam)
    if lam == 0:
        raise PreconditionError("weight must be nonzero")
    cls = classify_r(a, r)
    if cls.verdict != "factorizable":
        raise NotFactorizableError(f"verdict is {cls.verdict!r}, not factorizable")
    maps = build_r_maps(r)
    iso_inv = mat_inverse(maps.iso)
    if iso_inv is None:
        raise NotFactorizableError("iso map is singular")
    pmat = (maps.natural @ iso_inv).scale(lam)
    op = endomorphism(a, pmat, role="rota-baxter", weight=lam)
    form = BilinearFormOnAlgebra(a, iso_inv, flavor="novikov-invariant")
    return QuadraticRB(a, op, form)


def r_from_quadratic_rb(q: QuadraticRB) -> RMatrix:
    """sharp = (1/w)(P + w id) . iso_B with iso_B the inverse Gram matrix."""
    lam = q.weight
    if lam is None or lam == 0:
        raise PreconditionError("weight must be nonzero")
    gram = q.form.matrix
    iso_b = mat_inverse(gram)
    if iso_b is None:
        raise DegenerateFormError("the quadratic form is degenerate")
    n = q.algebra.dim
    sharp = ((q.operator.matrix + Matrix.identity(n).scale(lam)) @ iso_b).scale(Fraction(1) / lam)
    return RMatrix(q.algebra, Tensor2(sharp.transpose()))


def rb_twin(q: QuadraticRB) -> QuadraticRB:
    """Replace P by -w id - P (also Rota-Baxter of the same weight)."""
    lam = q.weight
    n = q.algebra.dim
    twin = -q.operator.matrix - Matrix.identity(n).scale(lam)
    return QuadraticRB(
        q.algebra,
        endomorphism(q.algebra, twin, role="rota-baxter", weight=lam),
        q.form,
    )


# ---------------------------------------------------------------------------
# induced Novikov bialgebra from differential data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InducedNovikov:
    bundle: BialgebraBundle
    gate: str | None          # which sufficient condition fired, if any
    guaranteed: bool          # True when a gate fired
    check: CompositeReport    # full Novikov-bialgebra verification


def induce_novikov_bialgebra(b: BialgebraBundle, q, check: bool = True) -> InducedNovikov:
    """Product a1 (d + q t)(a2) and coproduct (id (x) (t + q d)) Delta.

    Always constructs; reports which sufficiency gate fired (q = -1/2,
    theta a derivation, or the two displayed side conditions) and runs the
    full Novikov-bialgebra check on the result either way.
    """
    if b.derivation is None or b.theta is None:
        raise PreconditionError("induced Novikov bialgebra needs both maps")
    if check:
        report = check_bialgebra(b, "diff-infinitesimal")
        if not report.passed:
            raise PreconditionError(
                f"not a differential infinitesimal bialgebra (failing: {report.failing})"
            )
    q = Fraction(q)
    a, cop = b.algebra, b.coproduct
    n = a.dim

    gate = None
    if q == Fraction(-1, 2):
        gate = "q=-1/2"
    elif check_structure_map(endomorphism(a, b.theta, role="derivation")).passed:
        gate = "theta-derivation"
    else:
        side1 = all(
            (cop.delta_mat(i) @ (b.theta + b.derivation).transpose()).is_zero()
            for i in range(n)
        )
        side2 = all(
            all(
                scalar_is_zero(v)
                for v in a.product(
                    a.unit_vector(i),
                    tuple(x + y for x, y in zip(b.theta.col(j), b.derivation.col(j))),
                )
            )
            for i in range(n)
            for j in range(n)
        )
        if side1 and side2:
            gate = "side-conditions"

    mprod = b.derivation + b.theta.scale(q)
    entries = {}
    for i in range(n):
        for j in range(n):
            vec = a.product(a.unit_vector(i), mprod.col(j))
            for k, coeff in enumerate(vec):
                if not scalar_is_zero(coeff):
                    entries[(i, j, k)] = coeff
    alg = Algebra(Tensor3.from_entries(n, entries), basis=a.basis, kind="left-novikov")

    mcop = b.theta + b.derivation.scale(q)
    mats = [cop.delta_mat(i) @ mcop.transpose() for i in range(n)]
    delta = Coproduct.from_matrices(mats, flavor="novikov")

    bundle = BialgebraBundle(alg, delta)
    verification = check_bialgebra(bundle, "novikov")
    return InducedNovikov(bundle, gate, gate is not None, verification)


# ---------------------------------------------------------------------------
# quadratic right Novikov data and the Lie lift
# ---------------------------------------------------------------------------


def delta_omega(b: Algebra, omega: BilinearFormOnAlgebra | Matrix, check: bool = True) -> Coproduct:
    """Coproduct defined by w(Delta(b1), b2 (x) b3) = w(b1, b2 b3).

    The form extends to tensor powers multiplicatively,
    w(u1 (x) u2, v1 (x) v2) = w(u1,v1) w(u2,v2), which gives
    Delta(e_s) = sum_{p,q} w(e_s, f_p f_q) e_p (x) e_q over the dual basis.
    """
    gram = omega.matrix if isinstance(omega, BilinearFormOnAlgebra) else omega
    if check:
        report = check_bilinear_form(
            BilinearFormOnAlgebra(b, gram, flavor="right-novikov-invariant")
        )
        if not report.passed:
            raise PreconditionError("form must be symmetric, nondegenerate and invariant")
        ident = check_identity(b, "right-novikov")
        if not ident.passed:
            raise PreconditionError("the algebra fails the right Novikov identities")
    fmat = dual_basis_wrt_form(gram)
    n = b.dim
    duals = [fmat.col(j) for j in range(n)]
    mats = []
    for s in range(n):
        entries = {}
        for p in range(n):
            for q in range(n):
                prod = b.product(duals[p], duals[q])
                value = sum(
                    (gram[s, m] * prod[m] for m in range(n)), Fraction(0)
                )
                if not scalar_is_zero(value):
                    entries[(p, q)] = value
        mats.append(Matrix.from_entries(n, n, entries))
    return Coproduct.from_matrices(mats, flavor="right-novikov")


def induced_lie_algebra(a: Algebra, b: Algebra) -> Algebra:
    """Bracket on A (x) B:  [a1 (x) b1, a2 (x) b2] = a1a2 (x) b1b2 - a2a1 (x) b2b1.

    Product basis is row-major: index(i, p) = i * dim(B) + p.
    """
    n, m = a.dim, b.dim
    entries = {}
    for i in range(n):
        for p in range(m):
            for j in range(n):
                for q in range(m):
                    row = i * m + p
                    col = j * m + q
                    cij = a.product_basis(i, j)
                    cji = a.product_basis(j, i)
                    bpq = b.product_basis(p, q)
                    bqp = b.product_basis(q, p)
                    for k in range(n):
                        for u in range(m):
                            val = cij[k] * bpq[u] - cji[k] * bqp[u]
                            if not scalar_is_zero(val):
                                key = (row, col, k * m + u)
                                entries[key] = entries.get(key, Fraction(0)) + val
    basis = tuple(f"{la}(x){lb}" for la in a.basis for lb in b.basis)
    return Algebra(Tensor3.from_entries(n * m, entries), basis=basis, kind="lie")


@dataclass(frozen=True)
class LieBundle:
    """Induced Lie bialgebra on A (x) B with its provenance."""

    algebra: Algebra
    coproduct: Coproduct
    a_dim: int
    b_dim: int
    r_hat: RMatrix | None = None


def induce_lie_bialgebra(
    nb: BialgebraBundle,
    b: Algebra,
    omega: BilinearFormOnAlgebra | Matrix,
    check: bool = True,
) -> LieBundle:
    """Lie bialgebra on A (x) B from a Novikov bialgebra and quadratic data.

    The cobracket antisymmetrizes the paired coproducts:
    Delta(a (x) b) = (id - tau)(sum (a(1) (x) b(1)) (x) (a(2) (x) b(2))).
    """
    if check:
        report = check_bialgebra(nb, "novikov")
        if not report.passed:
            raise PreconditionError(f"not a Novikov bialgebra (failing: {report.failing})")
    gram = omega.matrix if isinstance(omega, BilinearFormOnAlgebra) else omega
    dw = delta_omega(b, gram, check=check)
    lie = induced_lie_algebra(nb.algebra, b)
    n, m = nb.algebra.dim, b.dim
    mats = []
    for i in range(n):
        da = nb.coproduct.delta_mat(i)
        for p in range(m):
            db = dw.delta_mat(p)
            entries = {}
            for j in range(n):
                for k in range(n):
                    if scalar_is_zero(da[j, k]):
                        continue
                    for u in range(m):
                        for v in range(m):
                            if scalar_is_zero(db[u, v]):
                                continue
                            w = da[j, k] * db[u, v]
                            r1, r2 = j * m + u, k * m + v
                            entries[(r1, r2)] = entries.get((r1, r2), Fraction(0)) + w
                            entries[(r2, r1)] = entries.get((r2, r1), Fraction(0)) - w
            mats.append(Matrix.from_entries(n * m, n * m, entries))
    cop = Coproduct.from_matrices(mats, flavor="lie")
    return LieBundle(lie, cop, n, m)


def lift_r_hat(
    r: RMatrix,
    b: Algebra,
    omega: BilinearFormOnAlgebra | Matrix,
    lie: Algebra | None = None,
) -> RMatrix:
    """r^ = sum_{i,j} (x_i (x) e_j) (x) (y_i (x) f_j) on A (x) B.

    {f_j} is the dual basis of B with respect to omega; when r solves the
    NYBE with invariant symmetric part, r^ solves the CYBE in the induced
    Lie algebra and r^ + tau(r^) is ad-invariant.
    """
    gram = omega.matrix if isinstance(omega, BilinearFormOnAlgebra) else omega
    fmat = dual_basis_wrt_form(gram)
    if lie is None:
        lie = induced_lie_algebra(r.algebra, b)
    n, m = r.algebra.dim, b.dim
    entries = {}
    R = r.mat
    for xa in range(n):
        for ya in range(n):
            if scalar_is_zero(R[xa, ya]):
                continue
            for j in range(m):
                for u in range(m):
                    if scalar_is_zero(fmat[u, j]):
                        continue
                    key = (xa * m + j, ya * m + u)
                    entries[key] = entries.get(key, Fraction(0)) + R[xa, ya] * fmat[u, j]
    return RMatrix.from_entries(lie, entries)


# ---------------------------------------------------------------------------
# helper used by the symmetric-part-invariance equivalence tests
# ---------------------------------------------------------------------------


def sym_invariance_via_iso(a: Algebra, r: RMatrix) -> bool:
    """Matrix-identity side of the invariance equivalence.

    The symmetric part of r is invariant iff
    iso . l*(x) = l(x) . iso + r(x) . iso for every basis x, where
    l*(x) = -l(x)^T.
    """
    maps = build_r_maps(r)
    for i in range(a.dim):
        lhs = maps.iso @ (-(a.left_mult(i).transpose()))
        rhs = (a.left_mult(i) + a.right_mult(i)) @ maps.iso
        if not (lhs - rhs).is_zero():
            return False
    return True
