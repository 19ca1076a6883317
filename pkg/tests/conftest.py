from fractions import Fraction

import pytest

from mopexact import WeightSystem

STANDARD_ALPHAS = (Fraction(1, 2), Fraction(1, 3), Fraction(1, 5))
STANDARD_BETA = Fraction(1, 4)


def laguerre_ws(p: int) -> WeightSystem:
    return WeightSystem.laguerre(STANDARD_ALPHAS[:p])


def jacobi_pineiro_ws(p: int) -> WeightSystem:
    return WeightSystem.jacobi_pineiro(STANDARD_ALPHAS[:p], STANDARD_BETA)


def hahn_ws(p: int, N: int) -> WeightSystem:
    return WeightSystem.hahn(STANDARD_ALPHAS[:p], STANDARD_BETA, N)


@pytest.fixture
def frac():
    return Fraction
