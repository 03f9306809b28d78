"""Brute-force combinatorial oracles.

Torus-fixed punctual subschemes of colength n on a toric germ correspond to
size-n order ideals (downward-closed subsets) of its semigroup of monomials,
ordered by ``s <= t`` iff ``t - s`` lies in the semigroup.  Counting them
gives the Euler characteristic of the punctual Hilbert scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from math import lcm

from .rings import Ring, RingElement
from .series import MultiSeries

__all__ = [
    "SemigroupModel",
    "smooth_semigroup",
    "abelian_quotient_semigroup",
    "count_monomial_ideals",
    "downset_counts",
    "iter_downsets",
    "euler_punctual_series",
    "cell_class_sum",
    "partitions",
    "partition_numbers",
    "plane_partition_numbers",
]


@dataclass(frozen=True)
class SemigroupModel:
    """Affine semigroup in Z_{>=0}^dim given by its generators."""

    dim: int
    generators: tuple
    _members: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        gens = tuple(sorted({tuple(g) for g in self.generators}))
        if self.dim < 1:
            raise ValueError("semigroup dimension must be >= 1")
        for g in gens:
            if len(g) != self.dim or any(x < 0 for x in g) or not any(g):
                raise ValueError(f"bad generator {g!r} for dimension {self.dim}")
        if not gens:
            raise ValueError("semigroup needs at least one generator")
        object.__setattr__(self, "generators", gens)

    def __contains__(self, v):
        v = tuple(v)
        if any(x < 0 for x in v):
            return False
        if not any(v):
            return True
        known = self._members.get(v)
        if known is None:
            known = any(
                all(x >= y for x, y in zip(v, g))
                and tuple(x - y for x, y in zip(v, g)) in self
                for g in self.generators
            )
            self._members[v] = known
        return known


def smooth_semigroup(d):
    """Z_{>=0}^d: the monomials of the smooth germ (A^d, 0)."""
    return SemigroupModel(d, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))


def abelian_quotient_semigroup(d, group_generators):
    """Invariant monomials of a diagonal abelian action on A^d.

    ``group_generators`` is a list of ``(order, weights)``; a generator acts
    on ``z_i`` by ``zeta_order^weights[i]``.  The returned generators are the
    Hilbert basis: minimal nonzero invariant vectors.  Every coordinate of a
    minimal vector is at most the group exponent, so a finite box suffices.
    """
    group_generators = [(int(r), tuple(int(w) for w in ws)) for r, ws in group_generators]
    for r, ws in group_generators:
        if r < 1:
            raise ValueError(f"group order must be >= 1, got {r}")
        if len(ws) != d:
            raise ValueError(f"weight vector {ws} has length {len(ws)}, expected {d}")
    if all(w % r == 0 for r, ws in group_generators for w in ws):
        return smooth_semigroup(d)
    exponent = lcm(*(r for r, _ in group_generators))

    def invariant(v):
        return all(sum(w * x for w, x in zip(ws, v)) % r == 0 for r, ws in group_generators)

    candidates = [v for v in product(range(exponent + 1), repeat=d) if any(v) and invariant(v)]
    candidates.sort(key=lambda v: (sum(v), v))
    basis = []
    for v in candidates:
        if not any(all(x <= y for x, y in zip(b, v)) for b in basis):
            basis.append(v)
    return SemigroupModel(d, tuple(basis))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _order_key(v):
    return (sum(v), v)


def _walk(model, max_size, visit):
    """Reverse search over downsets of size <= max_size.

    The canonical parent of a downset drops its largest maximal element (in
    graded-lex order), so each downset is reached exactly once.
    """
    gens = model.generators
    zero = (0,) * model.dim

    def addable(x, current):
        for g in gens:
            below = _sub(x, g)
            if below in model and below not in current:
                return False
        return True

    def is_largest_maximal(x, current):
        kx = _order_key(x)
        for y in current:
            if y == x or _order_key(y) <= kx:
                continue
            if not any(_add(y, g) in current for g in gens):
                return False
        return True

    def rec(current):
        visit(current)
        if len(current) == max_size:
            return
        frontier = {_add(y, g) for y in current for g in gens} - current
        for x in sorted(frontier, key=_order_key):
            if not addable(x, current):
                continue
            current.add(x)
            if is_largest_maximal(x, current):
                rec(current)
            current.discard(x)

    if max_size < 0:
        return
    visit(set())
    if max_size >= 1:
        rec({zero})


def downset_counts(model, upto):
    """``[c_0, ..., c_upto]`` with ``c_n`` the number of size-n downsets."""
    counts = [0] * (upto + 1)

    def visit(current):
        counts[len(current)] += 1

    _walk(model, upto, visit)
    return counts


def iter_downsets(model, n):
    """All size-n downsets, as sorted tuples of lattice points."""
    found = []

    def visit(current):
        if len(current) == n:
            found.append(tuple(sorted(current, key=_order_key)))

    _walk(model, n, visit)
    return found


def count_monomial_ideals(model, n):
    """Number of colength-n monomial ideals (size-n downsets) of ``model``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return _cached_counts(model.dim, model.generators, n)[n]


@lru_cache(maxsize=None)
def _cached_counts(dim, generators, upto):
    return tuple(downset_counts(SemigroupModel(dim, generators), upto))


def euler_punctual_series(model, trunc):
    """``1 + sum_n chi(Hilb^n_{X,x}) T^n`` over INTEGER, counted by downsets."""
    counts = _cached_counts(model.dim, model.generators, trunc)
    return MultiSeries.from_list(Ring.INTEGER, list(counts), trunc)


def partitions(n, largest=None):
    """Integer partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def cell_class_sum(n):
    """Sum over partitions of n of ``L^(n - number of parts)`` in Z[L]."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = {}
    for lam in partitions(n):
        e = n - len(lam)
        terms[e] = terms.get(e, 0) + 1
    return RingElement(Ring.MOTIVIC, terms)


def partition_numbers(upto):
    """p(0..upto) from Euler's pentagonal-number recurrence."""
    p = [1] + [0] * upto
    for n in range(1, upto + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def plane_partition_numbers(upto):
    """Plane partition counts from MacMahon's product prod_k (1 - t^k)^(-k)."""
    coeffs = [1] + [0] * upto
    for k in range(1, upto + 1):
        for _ in range(k):
            # multiply by 1/(1 - t^k)
            for n in range(k, upto + 1):
                coeffs[n] += coeffs[n - k]
    return coeffs
