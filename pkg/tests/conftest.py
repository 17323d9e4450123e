from fractions import Fraction

import pytest

import novikov as nv


@pytest.fixture(scope="session")
def fix():
    """All bundled fixtures by name."""
    return nv.catalog()


def frac(x) -> Fraction:
    return Fraction(x)


def vec(algebra, **coords):
    """Coordinate vector from basis-label keyword arguments."""
    out = [Fraction(0)] * algebra.dim
    for label, value in coords.items():
        out[algebra.label_index(label)] = Fraction(value)
    return tuple(out)
