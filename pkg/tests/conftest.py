import random

import pytest
import sympy

from hilbpow.rings import Ring, RingElement
from hilbpow.series import MultiSeries

L_SYM, T_SYM = sympy.symbols("L T")


def sympy_univariate(expr, trunc, ring=Ring.MOTIVIC):
    """Expand ``expr`` in T with sympy and convert to a MultiSeries (independent oracle)."""
    expanded = sympy.series(expr, T_SYM, 0, trunc + 1).removeO()
    poly = sympy.Poly(sympy.expand(expanded), T_SYM, L_SYM)
    coeffs = {}
    for (t, l), c in poly.terms():
        key = (t,)
        term = RingElement.monomial(ring, l if ring is Ring.MOTIVIC else 0, int(c))
        coeffs[key] = coeffs[key] + term if key in coeffs else term
    return MultiSeries(ring, 1, trunc, coeffs)


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def L():
    return RingElement.L()
