"""End-to-end verification suite, runnable as ``hilbpow selftest``.

Each criterion returns ``(passed, detail)``.  All comparisons are exact.
"""

from __future__ import annotations

import random
import time
from itertools import product

from .catalog import AbelianQuotient, Smooth, global_smooth_series, kapranov_zeta, punctual_series
from .nested import NestedContext, nested_global_smooth
from .oracles import (cell_class_sum, count_monomial_ideals, euler_punctual_series,
                      partition_numbers, plane_partition_numbers, smooth_semigroup)
from .orbifold import OrbifoldSpec, Stratum, integrate, toric_euler_global
from .power import decompose, power, recompose
from .rings import Ring, RingElement, specialize
from .series import MultiSeries, exponents_upto

SEED = 20261015


def random_element(rng, ring, max_degree=2, bound=3):
    ring = Ring.from_name(ring)
    if ring is Ring.INTEGER:
        return RingElement.constant(ring, rng.randint(-bound, bound))
    terms = {}
    for _ in range(rng.randint(1, 3)):
        if ring is Ring.MOTIVIC:
            key = rng.randint(0, max_degree)
        else:
            key = (rng.randint(0, max_degree), rng.randint(0, max_degree))
        terms[key] = terms.get(key, 0) + rng.randint(-bound, bound)
    return RingElement(ring, terms)


def random_series(rng, ring, nvars, trunc, density=0.6, max_degree=1, bound=2):
    """Unit-constant-term series with small random coefficients."""
    ring = Ring.from_name(ring)
    coeffs = {(0,) * nvars: RingElement.one(ring)}
    for e in exponents_upto(nvars, trunc)[1:]:
        if rng.random() < density:
            coeffs[e] = random_element(rng, ring, max_degree, bound)
    return MultiSeries(ring, nvars, trunc, coeffs)


def _axiom_failures(A, B, m, n):
    one = MultiSeries.one(A.ring, A.nvars, A.trunc)
    checks = {
        "pow(A,0)=1": power(A, 0) == one,
        "pow(A,1)=A": power(A, 1) == A,
        "pow(A,m+n)=pow(A,m)pow(A,n)": power(A, m + n) == power(A, m) * power(A, n),
        "pow(AB,m)=pow(A,m)pow(B,m)": power(A * B, m) == power(A, m) * power(B, m),
        "pow(pow(A,m),n)=pow(A,mn)": power(power(A, m), n) == power(A, m * n),
    }
    return [name for name, ok in checks.items() if not ok]


def _axiom_suite(nvars, trunc, cases, seed):
    rng = random.Random(seed)
    bad = []
    for i in range(cases):
        ring = Ring.INTEGER if i % 2 == 0 else Ring.MOTIVIC
        density = 0.6 if nvars == 1 else 0.3
        A = random_series(rng, ring, nvars, trunc, density)
        B = random_series(rng, ring, nvars, trunc, density)
        m, n = random_element(rng, ring, 1, 2), random_element(rng, ring, 1, 2)
        failed = _axiom_failures(A, B, m, n)
        if failed:
            bad.append((i, ring.value, failed))
    return bad


def criterion_1():
    """Power-structure axioms on 200 random univariate series, N=8, < 60 s."""
    start = time.perf_counter()
    bad = _axiom_suite(1, 8, 200, SEED)
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    return ok, f"200 cases (100 integer, 100 motivic), {len(bad)} failing, {elapsed:.1f}s"


def criterion_2():
    """pow(A, m) for integer m in [-5, 5] equals repeated multiplication, N=10."""
    rng = random.Random(SEED + 2)
    bad = 0
    total = 0
    for ring in (Ring.INTEGER, Ring.MOTIVIC):
        for _ in range(20):
            A = random_series(rng, ring, 1, 10)
            for m in range(-5, 6):
                base = A if m >= 0 else A.invert()
                expected = MultiSeries.one(ring, 1, 10)
                for _ in range(abs(m)):
                    expected = expected * base
                total += 1
                bad += power(A, m) != expected
    return bad == 0, f"{total} (series, m) pairs, {bad} failing"


def criterion_3():
    """recompose(decompose(A)) = A for 200 univariate and 200 bivariate series, N=8."""
    rng = random.Random(SEED + 3)
    bad = 0
    for nvars in (1, 2):
        for i in range(200):
            ring = Ring.INTEGER if i % 2 == 0 else Ring.MOTIVIC
            A = random_series(rng, ring, nvars, 8, 0.6 if nvars == 1 else 0.4)
            bad += recompose(decompose(A)) != A
    return bad == 0, f"400 round trips, {bad} failing"


def criterion_4():
    """d=2 motivic punctual product vs cell sums, downset counts and p(n), n <= 12."""
    N = 12
    series = punctual_series(Smooth(2), Ring.MOTIVIC, N)
    p = partition_numbers(N)
    model = smooth_semigroup(2)
    bad = []
    for n in range(1, N + 1):
        c = series.coefficient((n,))
        if c != cell_class_sum(n):
            bad.append(f"n={n}: cell sum")
        if not (c.evaluate_at_one() == count_monomial_ideals(model, n) == p[n]):
            bad.append(f"n={n}: L=1 count")
    return not bad, f"n=1..{N}; " + (", ".join(bad) or "all agree")


def criterion_5():
    """Kapranov zeta of L and of 1+L, n <= 10."""
    N = 10
    L = RingElement.L()
    z1 = kapranov_zeta(L, N)
    z2 = kapranov_zeta(1 + L, N)
    ok1 = all(z1.coefficient((n,)) == L ** n for n in range(N + 1))
    ok2 = all(
        z2.coefficient((n,)) == RingElement(Ring.MOTIVIC, {i: 1 for i in range(n + 1)})
        for n in range(N + 1)
    )
    return ok1 and ok2, f"zeta(L): {'ok' if ok1 else 'FAIL'}, zeta(1+L): {'ok' if ok2 else 'FAIL'}"


def criterion_6():
    """Single smooth stratum P^2 via the stratum product equals the smooth formula, N=6."""
    cls = RingElement(Ring.MOTIVIC, {0: 1, 1: 1, 2: 1})
    spec = OrbifoldSpec(2, Ring.MOTIVIC, 6, (Stratum("P2", cls, Smooth(2)),))
    lhs = integrate(spec)
    rhs = global_smooth_series(cls, 2, Ring.MOTIVIC, 6)
    return lhs == rhs, f"H_P2 to order 6, coefficient of T^2: {lhs.coefficient((2,))}"


def _weighted_plane(n):
    # P(1,1,n): two smooth fixed points and one 1/n(1,1) point
    sing = AbelianQuotient(2, ((n, (1, 1)),))
    return [Smooth(2), Smooth(2), sing], [("smooth", 2, Smooth(2)), ("singular", 1, sing)]


def toric_test_surfaces():
    surfaces = {}
    for n in (2, 3, 4):
        surfaces[f"P(1,1,{n})"] = _weighted_plane(n)
    surfaces["P1xP1"] = ([Smooth(2)] * 4, [("smooth", 4, Smooth(2))])
    surfaces["P2"] = ([Smooth(2)] * 3, [("smooth", 3, Smooth(2))])
    return surfaces


def criterion_7():
    """Euler-level orbifold integral equals the toric fixed-point product, N=8, < 2 min."""
    N = 8
    start = time.perf_counter()
    bad = []
    for name, (fixed, strata) in toric_test_surfaces().items():
        if name == "P2":
            continue
        spec = OrbifoldSpec(2, Ring.INTEGER, N, tuple(
            Stratum(label, RingElement.constant(Ring.INTEGER, chi), model)
            for label, chi, model in strata
        ))
        if integrate(spec) != toric_euler_global(fixed, N):
            bad.append(name)
    elapsed = time.perf_counter() - start
    return not bad and elapsed < 120, (
        f"P(1,1,2), P(1,1,3), P(1,1,4), P1xP1; mismatches: {bad or 'none'}; {elapsed:.1f}s"
    )


def criterion_8():
    """Specialization commutes with pow on 100 random motivic cases, both paths."""
    rng = random.Random(SEED + 8)
    bad = 0
    for _ in range(100):
        A = random_series(rng, Ring.MOTIVIC, 1, 8)
        m = random_element(rng, Ring.MOTIVIC, 2, 2)
        P = power(A, m)
        hodge = power(A.specialize(Ring.HODGE), specialize(m, Ring.HODGE))
        via_hodge = power(A.specialize(Ring.HODGE).specialize(Ring.INTEGER),
                          specialize(specialize(m, Ring.HODGE), Ring.INTEGER))
        direct = power(A.specialize(Ring.INTEGER), specialize(m, Ring.INTEGER))
        ok = (P.specialize(Ring.HODGE) == hodge
              and P.specialize(Ring.HODGE).specialize(Ring.INTEGER) == via_hodge
              and P.specialize(Ring.INTEGER) == direct)
        bad += not ok
    return bad == 0, f"100 cases, {bad} failing"


def criterion_9():
    """d=3 Euler punctual series = plane partitions (n <= 6); d=1 series is all ones."""
    N = 6
    s3 = euler_punctual_series(smooth_semigroup(3), N)
    s1 = euler_punctual_series(smooth_semigroup(1), N)
    got = [c.evaluate_at_one() for c in s3.coefficient_list()]
    ok3 = got == plane_partition_numbers(N)
    ok1 = all(c.is_one() for c in s1.coefficient_list())
    return ok3 and ok1, f"d=3: {got}; d=1 all ones: {ok1}"


def two_point_chain_counts(trunc):
    """Brute force: pairs of nested ideal chains at the two fixed points of P^1."""
    counts = {}
    chains = [(a, b) for a in range(trunc + 1) for b in range(a, trunc + 1)]
    for (a1, a2), (b1, b2) in product(chains, chains):
        n = (a1 + b1, a2 + b2)
        if sum(n) <= trunc:
            counts[n] = counts.get(n, 0) + 1
    return counts


def criterion_10():
    """Nested P^1 at depth 2 vs brute-force chain pairs; axioms rerun in two variables."""
    N = 6
    ctx = NestedContext(2, Ring.INTEGER, N)
    series = nested_global_smooth(RingElement.constant(Ring.INTEGER, 2), 1, ctx)
    expected = MultiSeries(Ring.INTEGER, 2, N, two_point_chain_counts(N))
    ok_count = series == expected
    start = time.perf_counter()
    bad = _axiom_suite(2, 8, 200, SEED + 10)
    elapsed = time.perf_counter() - start
    return ok_count and not bad, (
        f"chain-pair count {'ok' if ok_count else 'FAIL'}; "
        f"bivariate axioms N=8: 200 cases, {len(bad)} failing, {elapsed:.1f}s"
    )


CRITERIA = [
    (1, "power-structure axioms", criterion_1),
    (2, "integer-exponent oracle", criterion_2),
    (3, "decomposition round trip", criterion_3),
    (4, "d=2 catalog certification", criterion_4),
    (5, "Kapranov zeta", criterion_5),
    (6, "smooth reduction of the orbifold integral", criterion_6),
    (7, "Euler-level orbifold vs toric fixed points", criterion_7),
    (8, "specialization commutes with pow", criterion_8),
    (9, "d=3 and d=1 Euler punctual series", criterion_9),
    (10, "nested Hilbert series on P^1", criterion_10),
]


def run_all(out=print):
    results = []
    for number, name, fn in CRITERIA:
        ok, detail = fn()
        results.append((number, name, ok, detail))
        out(f"[{'PASS' if ok else 'FAIL'}] {number:2d} {name}: {detail}")
    return results
