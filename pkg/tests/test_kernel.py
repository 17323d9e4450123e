import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novikov.kernel import (
    DegenerateFormError,
    DimensionError,
    Matrix,
    Poly,
    Tensor2,
    Tensor3,
    dual_basis_wrt_form,
    format_rational,
    mat_inverse,
    mat_rank,
    parse_rational,
    poly_is_zero,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)


# ---------------------------------------------------------------------------
# rational literals
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "text,value",
    [("-1/2", Fraction(-1, 2)), ("3", Fraction(3)), ("0", Fraction(0)), ("10/4", Fraction(5, 2))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "1/0", "a", "", "1/-2", "--2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(rationals)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals, rationals)
def test_scalar_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def _kl():
    k = Poly.variable("k", ("k", "l"))
    l = Poly.variable("l", ("k", "l"))
    return k, l


def test_poly_is_zero_commutator():
    k, l = _kl()
    assert poly_is_zero(k * l - l * k)
    assert not poly_is_zero(k * k)
    assert poly_is_zero(Poly.zero(("k", "l")))


def test_poly_constant_mixing():
    k, _ = _kl()
    p = 2 * k + Fraction(1, 2) - k - k
    assert p == Fraction(1, 2)
    assert p.is_constant()
    assert p.constant_value() == Fraction(1, 2)


def test_poly_str_graded_lex():
    k, l = _kl()
    p = l + k + k * k
    assert str(p) == "k^2 + k + l"
    assert str(Poly.zero(("k",))) == "0"
    assert str(-k) == "-k"


def test_poly_variable_cap():
    names = tuple(f"v{i}" for i in range(9))
    with pytest.raises(ValueError):
        Poly.zero(names)


def test_poly_mismatched_variables():
    k, _ = _kl()
    other = Poly.variable("k", ("k",))
    with pytest.raises(DimensionError):
        _ = k + other


def test_poly_evaluation_homomorphism_random():
    rng = random.Random(20240811)
    names = ("k", "l")
    for _ in range(100):
        p = _random_poly(rng, names)
        q = _random_poly(rng, names)
        point = {n: Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for n in names}
        assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
        assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
        assert (-p).evaluate(point) == -p.evaluate(point)


def _random_poly(rng, names):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        expo = tuple(rng.randint(0, 2) for _ in names)
        terms[expo] = Fraction(rng.randint(-4, 4))
    return Poly(names, terms)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


def test_inverse_identity():
    ident = Matrix.identity(4)
    assert mat_inverse(ident) == ident


def test_inverse_of_permutation_is_transpose():
    # the 8x8 map built from the dim-4 swap (1<->3, 2<->4) tensored with the
    # 2x2 swap; a permutation matrix, so its inverse is its transpose
    swap4 = Matrix.from_entries(4, 4, {(0, 2): 1, (2, 0): 1, (1, 3): 1, (3, 1): 1})
    swap2 = Matrix.from_entries(2, 2, {(0, 1): 1, (1, 0): 1})
    big = _kron(swap4, swap2)
    assert mat_inverse(big) == big.transpose()


def _kron(a: Matrix, b: Matrix) -> Matrix:
    entries = {}
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] == 0:
                continue
            for p in range(b.rows):
                for q in range(b.cols):
                    if b[p, q] != 0:
                        entries[(i * b.rows + p, j * b.cols + q)] = a[i, j] * b[p, q]
    return Matrix.from_entries(a.rows * b.rows, a.cols * b.cols, entries)


def test_inverse_singular_and_nonsquare():
    assert mat_inverse(Matrix([[1, 2], [2, 4]])) is None
    with pytest.raises(DimensionError):
        mat_inverse(Matrix([[1, 2, 3], [4, 5, 6]]))


def test_rank_examples():
    assert mat_rank(Matrix.zeros(3, 3)) == 0
    iso = Matrix.from_entries(4, 4, {(0, 2): 1, (2, 0): 1, (1, 3): 1, (3, 1): 1})
    assert mat_rank(iso) == 4
    assert mat_rank(Matrix([[1, 1], [1, 1]])) == 1


def test_inverse_absent_iff_rank_deficient():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 4)
        m = Matrix([[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)])
        assert (mat_inverse(m) is None) == (mat_rank(m) < n)


def test_dual_basis_identity_and_swap():
    assert dual_basis_wrt_form(Matrix.identity(3)) == Matrix.identity(3)
    omega = Matrix([[0, 1], [1, 0]])
    f = dual_basis_wrt_form(omega)
    assert f.col(0) == (Fraction(0), Fraction(1))  # f1 = second basis vector
    assert f.col(1) == (Fraction(1), Fraction(0))


def test_dual_basis_multiplies_back():
    rng = random.Random(11)
    for _ in range(20):
        while True:
            m = [[Fraction(rng.randint(-3, 3)) for _ in range(3)] for _ in range(3)]
            for i in range(3):
                for j in range(i):
                    m[j][i] = m[i][j]
            omega = Matrix(m)
            if mat_rank(omega) == 3:
                break
        f = dual_basis_wrt_form(omega)
        assert omega @ f == Matrix.identity(3)


def test_dual_basis_rejects_bad_forms():
    with pytest.raises(DegenerateFormError):
        dual_basis_wrt_form(Matrix([[1, 1], [1, 1]]))
    with pytest.raises(DegenerateFormError):
        dual_basis_wrt_form(Matrix([[0, 1], [2, 0]]))
    with pytest.raises(DimensionError):
        dual_basis_wrt_form(Matrix([[1, 0, 0], [0, 1, 0]]))


@given(st.integers(1, 4), st.data())
@settings(max_examples=40)
def test_matmul_associativity(n, data):
    draw = lambda: Matrix(
        [[data.draw(rationals) for _ in range(n)] for _ in range(n)]
    )
    a, b, c = draw(), draw(), draw()
    assert (a @ b) @ c == a @ (b @ c)
    assert (a + b).transpose() == a.transpose() + b.transpose()


# ---------------------------------------------------------------------------
# tensors
# ---------------------------------------------------------------------------


def test_tensor2_tau_and_sym():
    t = Tensor2.from_entries(2, {(0, 1): Fraction(1), (1, 0): Fraction(-1)})
    assert t.is_skew()
    assert not t.is_symmetric()
    assert t.tau() == Tensor2.from_entries(2, {(1, 0): Fraction(1), (0, 1): Fraction(-1)})
    assert (t + t.tau()).is_zero()


def test_tensor3_permute_composition():
    t = Tensor3.from_entries(3, {(0, 1, 2): Fraction(5), (2, 2, 0): Fraction(-1)})
    # swapping slots 1,2 twice is the identity
    assert t.permute((1, 0, 2)).permute((1, 0, 2)) == t
    # a 3-cycle three times is the identity
    cyc = (1, 2, 0)
    assert t.permute(cyc).permute(cyc).permute(cyc) == t
    moved = t.permute((1, 0, 2))
    assert moved.entry(1, 0, 2) == Fraction(5)


def test_tensor3_requires_cube():
    with pytest.raises(DimensionError):
        Tensor3([[[1, 0]]])
