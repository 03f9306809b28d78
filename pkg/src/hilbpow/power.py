"""Power structure on series with constant term 1.

Every ``A(T) = 1 + ...`` factors uniquely as ``prod_k (1 - T^k)^(-s_k)``
over nonzero exponent vectors ``k``; the power ``A^m`` is then defined as
``prod_k (1 - T^k)^(-m * s_k)``.  The single factors ``(1 - T^k)^(-m)`` are
built from the signed-monomial decomposition of ``m`` by
:func:`sigma_series`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonUnitError, RingMismatchError
from .rings import Ring, RingElement, parse_element
from .series import MultiSeries, grlex_key

__all__ = [
    "sigma_series",
    "PowerDecomposition",
    "decompose",
    "recompose",
    "power",
]


def _binomial_row(c, top):
    """Coefficients of (1 - t)^(-c) up to t^top, for any integer c."""
    row = [1]
    b = 1
    for n in range(1, top + 1):
        b = b * (c + n - 1) // n
        row.append(b)
    return row


def sigma_series(m, k, trunc):
    """The factor ``(1 - T^k)^(-m)`` truncated at total degree ``trunc``.

    For a monomial ``mon`` the factor is ``sum_n mon^n T^(n k)``; a monomial
    with integer coefficient ``c`` contributes that series to the power ``c``
    (an inverse when ``c < 0``), which is the generalized binomial series.
    """
    k = tuple(k)
    if not k or any(e < 0 for e in k) or not any(k):
        raise ValueError(f"sigma_series needs a nonzero exponent vector, got {k!r}")
    if trunc < 0:
        raise ValueError("truncation order must be nonnegative")
    ring = m.ring
    top = trunc // sum(k)
    one = RingElement.one(ring)
    # univariate expansion in t = T^k
    coeffs = [one] + [RingElement.zero(ring)] * top
    for key, c in m.terms:
        mono = RingElement.monomial(ring, key)
        row = _binomial_row(c, top)
        factor = []
        p = one
        for n in range(top + 1):
            factor.append(p * row[n])
            p = p * mono
        coeffs = [
            sum((coeffs[i] * factor[n - i] for i in range(n + 1)), RingElement.zero(ring))
            for n in range(top + 1)
        ]
    return MultiSeries(ring, len(k), trunc,
                       {tuple(n * e for e in k): coeffs[n] for n in range(top + 1)})


@dataclass(frozen=True)
class PowerDecomposition:
    """Exponents ``s_k`` of ``A = prod_k (1 - T^k)^(-s_k)`` up to ``|k| <= trunc``."""

    ring: Ring
    nvars: int
    trunc: int
    factors: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "factors",
                           {tuple(k): s for k, s in self.factors.items() if s})

    def items(self):
        return sorted(self.factors.items(), key=lambda kv: grlex_key(kv[0]))

    def get(self, k):
        return self.factors.get(tuple(k)) or RingElement.zero(self.ring)

    def scale(self, m):
        return PowerDecomposition(self.ring, self.nvars, self.trunc,
                                  {k: m * s for k, s in self.factors.items()})

    def to_json(self):
        return {
            "ring": self.ring.value,
            "nvars": self.nvars,
            "trunc": self.trunc,
            "factors": [{"exponent": list(k), "s": str(s)} for k, s in self.items()],
        }

    @classmethod
    def from_json(cls, doc):
        ring = Ring.from_name(doc["ring"])
        factors = {tuple(f["exponent"]): parse_element(f["s"], ring) for f in doc["factors"]}
        return cls(ring, doc["nvars"], doc["trunc"], factors)


def decompose(A):
    """Factor ``A`` as ``prod (1 - T^k)^(-s_k)`` by a graded recursion.

    After dividing out every factor of degree < d, the residual series is
    ``1 + O(T^d)`` and its degree-d coefficients are exactly the ``s_k``
    with ``|k| = d``.
    """
    if not A.constant_term().is_one():
        raise NonUnitError(f"constant term {A.constant_term()} is not 1")
    residual = A
    factors = {}
    for d in range(1, A.trunc + 1):
        fresh = [(e, c) for e, c in residual.items() if sum(e) == d]
        for k, s in fresh:
            factors[k] = s
            if d < A.trunc:
                residual = residual * sigma_series(-s, k, A.trunc)
    return PowerDecomposition(A.ring, A.nvars, A.trunc, factors)


def recompose(D):
    """The product ``prod_k sigma_series(s_k, k, trunc)`` in graded order."""
    out = MultiSeries.one(D.ring, D.nvars, D.trunc)
    for k, s in D.items():
        out = out * sigma_series(s, k, D.trunc)
    return out


def power(A, m):
    """``A(T)^m`` under the power structure; ``m`` is a ring element, int or string."""
    if isinstance(m, int):
        m = RingElement.constant(A.ring, m)
    elif isinstance(m, str):
        m = parse_element(m, A.ring)
    if m.ring is not A.ring:
        raise RingMismatchError(f"exponent in {m.ring.value}, series in {A.ring.value}")
    return recompose(decompose(A).scale(m))
