import pytest

from qtchar import DynkinDiagram, Monomial, Spectral


@pytest.fixture
def a2():
    return DynkinDiagram.type_a(2)


@pytest.fixture
def a3():
    return DynkinDiagram.type_a(3)


@pytest.fixture
def d4():
    return DynkinDiagram.type_d(4)


@pytest.fixture
def d5():
    return DynkinDiagram.type_d(5)


def q(k: int, base: str = "a") -> Spectral:
    return Spectral(base, k)


def ym(*factors) -> Monomial:
    """Monomial from (node, qexp) or (node, qexp, exp) tuples, base 'a'."""
    return Monomial.from_factors(
        (f[0], q(f[1]), f[2] if len(f) > 2 else 1) for f in factors
    )
