from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbpow.catalog import Explicit, Smooth, global_smooth_series
from hilbpow.errors import SpecError, UnsupportedModelError
from hilbpow.nested import (NestedContext, diagonal_slice, last_variable_slice,
                            nested_global_smooth, nested_integrate, nested_punctual_curve)
from hilbpow.orbifold import OrbifoldSpec, Stratum
from hilbpow.power import decompose, power, recompose
from hilbpow.rings import Ring, RingElement, parse_element
from hilbpow.series import MultiSeries

from strategies import elements, rings, unit_series

Z, M = Ring.INTEGER, Ring.MOTIVIC


def chain_exponents(r, trunc):
    return [n for n in product(range(trunc + 1), repeat=r)
            if sum(n) <= trunc and all(a <= b for a, b in zip(n, n[1:]))]


def chain_pair_counts(points, r, trunc):
    """Tuples of local chains at ``points`` fixed points, grouped by total length vector."""
    chains = chain_exponents(r, trunc)
    counts = {}
    for combo in product(chains, repeat=points):
        n = tuple(sum(c[i] for c in combo) for i in range(r))
        if sum(n) <= trunc:
            counts[n] = counts.get(n, 0) + 1
    return counts


def test_depth_one_is_curve_series():
    assert nested_punctual_curve(NestedContext(1, Z, 3)) == MultiSeries.from_list(Z, [1, 1, 1, 1])


def test_depth_two_small():
    got = nested_punctual_curve(NestedContext(2, Z, 2))
    assert got == MultiSeries(Z, 2, 2, {(0, 0): 1, (0, 1): 1, (1, 1): 1, (0, 2): 1})
    assert nested_punctual_curve(NestedContext(2, Z, 3)).coefficient((2, 1)).is_zero()


@pytest.mark.parametrize("r, N", [(2, 6), (3, 6), (4, 5)])
def test_curve_series_counts_chains(r, N):
    expected = MultiSeries(M, r, N, {n: 1 for n in chain_exponents(r, N)})
    assert nested_punctual_curve(NestedContext(r, M, N)) == expected


def test_point_class_gives_punctual_series():
    ctx = NestedContext(3, M, 4)
    assert nested_global_smooth(RingElement.one(M), 1, ctx) == nested_punctual_curve(ctx)


def test_projective_line_degree_one():
    got = nested_global_smooth("1+L", 1, NestedContext(2, M, 1))
    assert got == MultiSeries(M, 2, 1, {(0, 0): 1, (0, 1): parse_element("1+L", M)})


@pytest.mark.parametrize("N", [2, 4, 6])
def test_projective_line_euler_against_brute_force(N):
    got = nested_global_smooth(RingElement.constant(Z, 2), 1, NestedContext(2, Z, N))
    assert got == MultiSeries(Z, 2, N, chain_pair_counts(2, 2, N))


def test_depth_three_on_three_points():
    got = nested_global_smooth(RingElement.constant(Z, 3), 1, NestedContext(3, Z, 4))
    assert got == MultiSeries(Z, 3, 4, chain_pair_counts(3, 3, 4))


def test_surface_needs_explicit_series():
    with pytest.raises(UnsupportedModelError, match="needs explicit series"):
        nested_global_smooth("L", 2, NestedContext(2, M, 3))
    explicit = MultiSeries(M, 2, 3, {(0, 0): 1, (0, 1): 1, (1, 1): 1})
    got = nested_global_smooth(RingElement.one(M), 2, NestedContext(2, M, 3), punctual=explicit)
    assert got == explicit


@pytest.mark.parametrize("cls", ["1+L", "L^2 - 3", "2*L"])
def test_integrate_single_curve_stratum(cls):
    ctx = NestedContext(2, M, 5)
    c = parse_element(cls, M)
    spec = OrbifoldSpec(1, M, 5, (Stratum("C", c, Smooth(1)),))
    assert nested_integrate(spec, ctx) == nested_global_smooth(c, 1, ctx)


def test_integrate_zero_class_and_trivial_explicit():
    ctx = NestedContext(2, M, 4)
    one = MultiSeries.one(M, 2, 4)
    spec = OrbifoldSpec(1, M, 4, (
        Stratum("gone", RingElement.zero(M), Smooth(1)),
        Stratum("x", RingElement.L(), Explicit(one)),
    ))
    assert nested_integrate(spec, ctx) == one


def test_integrate_errors_name_strata():
    ctx = NestedContext(2, M, 4)
    spec = OrbifoldSpec(2, M, 4, (Stratum("surface", RingElement.L(), Smooth(2)),))
    with pytest.raises(SpecError, match="'surface'"):
        nested_integrate(spec, ctx)


@pytest.mark.parametrize("cls", ["1+L", "1+L+L^2", "L"])
def test_slices_recover_hilbert_series(cls):
    N = 6
    nested = nested_global_smooth(cls, 1, NestedContext(2, M, N))
    hilb = global_smooth_series(cls, 1, M, N)
    assert last_variable_slice(nested) == hilb
    assert diagonal_slice(nested) == hilb.truncate(N // 2)


@settings(max_examples=25, deadline=None)
@given(rings.flatmap(lambda r: st.tuples(unit_series(r, 2, 4), unit_series(r, 2, 4),
                                         elements(r, 1), elements(r, 1))))
def test_bivariate_axioms(data):
    A, B, m, n = data
    assert power(A, m + n) == power(A, m) * power(A, n)
    assert power(A * B, m) == power(A, m) * power(B, m)
    assert power(power(A, m), n) == power(A, m * n)
    assert recompose(decompose(A)) == A
