"""Truncated multivariate power series with exact ring coefficients.

Truncation is by total degree: a series with ``trunc = N`` knows every
coefficient of ``T^e`` with ``|e| <= N`` and nothing beyond.
"""

from __future__ import annotations

import json
from itertools import product

from .errors import NonUnitError, RingMismatchError, TruncationError
from .rings import Ring, RingElement, parse_element, specialize

__all__ = ["MultiSeries", "exponents_upto", "grlex_key"]


def grlex_key(exponent):
    return (sum(exponent), exponent)


def exponents_upto(nvars, trunc):
    """All exponent vectors of total degree <= trunc, in graded-lex order."""
    out = [e for e in product(range(trunc + 1), repeat=nvars) if sum(e) <= trunc]
    out.sort(key=grlex_key)
    return out


def exponents_of_degree(nvars, degree):
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree + 1):
        for rest in exponents_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    out.sort()
    return out


class MultiSeries:
    """A power series in ``nvars`` variables truncated at total degree ``trunc``."""

    __slots__ = ("ring", "nvars", "trunc", "_coeffs")

    def __init__(self, ring, nvars, trunc, coeffs=None):
        ring = Ring.from_name(ring)
        if nvars < 1:
            raise ValueError("a series needs at least one variable")
        if trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        clean = {}
        for exp, c in (coeffs or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars or any((not isinstance(e, int)) or e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp!r} for {nvars} variable(s)")
            if sum(exp) > trunc:
                continue
            if isinstance(c, int):
                c = RingElement.constant(ring, c)
            elif c.ring is not ring:
                raise RingMismatchError(f"coefficient in {c.ring.value}, series in {ring.value}")
            if c:
                clean[exp] = c
        self.ring = ring
        self.nvars = nvars
        self.trunc = trunc
        self._coeffs = clean

    @classmethod
    def _raw(cls, ring, nvars, trunc, coeffs):
        obj = object.__new__(cls)
        obj.ring, obj.nvars, obj.trunc, obj._coeffs = ring, nvars, trunc, coeffs
        return obj

    @classmethod
    def one(cls, ring, nvars=1, trunc=0):
        ring = Ring.from_name(ring)
        return cls._raw(ring, nvars, trunc, {(0,) * nvars: RingElement.one(ring)})

    @classmethod
    def from_list(cls, ring, coeffs, trunc=None):
        """Univariate series from a coefficient list ``[a0, a1, ...]``."""
        trunc = len(coeffs) - 1 if trunc is None else trunc
        return cls(ring, 1, trunc, {(n,): c for n, c in enumerate(coeffs)})

    # -- access -------------------------------------------------------------

    def coefficient(self, exponent):
        exponent = tuple(exponent)
        if len(exponent) != self.nvars:
            raise ValueError(f"exponent {exponent!r} has wrong length (nvars={self.nvars})")
        if sum(exponent) > self.trunc:
            raise TruncationError(
                f"coefficient of degree {sum(exponent)} unknown (truncated at {self.trunc})"
            )
        return self._coeffs.get(exponent) or RingElement.zero(self.ring)

    __getitem__ = coefficient

    def items(self):
        """Nonzero ``(exponent, coefficient)`` pairs in graded-lex order."""
        return sorted(self._coeffs.items(), key=lambda kv: grlex_key(kv[0]))

    def coefficient_list(self):
        """Univariate only: ``[a0, ..., a_trunc]``."""
        if self.nvars != 1:
            raise ValueError("coefficient_list needs a univariate series")
        zero = RingElement.zero(self.ring)
        return [self._coeffs.get((n,), zero) for n in range(self.trunc + 1)]

    def constant_term(self):
        return self._coeffs.get((0,) * self.nvars) or RingElement.zero(self.ring)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise TruncationError(f"cannot extend truncation from {self.trunc} to {trunc}")
        return MultiSeries._raw(
            self.ring, self.nvars, trunc,
            {e: c for e, c in self._coeffs.items() if sum(e) <= trunc},
        )

    def map_coefficients(self, fn, ring=None):
        ring = self.ring if ring is None else Ring.from_name(ring)
        return MultiSeries(ring, self.nvars, self.trunc,
                           {e: fn(c) for e, c in self._coeffs.items()})

    def specialize(self, target):
        return self.map_coefficients(lambda c: specialize(c, target), target)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring.value} vs {other.ring.value}")
        if other.nvars != self.nvars:
            raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other):
        self._check(other)
        n = min(self.trunc, other.trunc)
        out = {e: c for e, c in self._coeffs.items() if sum(e) <= n}
        for e, c in other._coeffs.items():
            if sum(e) > n:
                continue
            s = out[e] + c if e in out else c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiSeries._raw(self.ring, self.nvars, n, out)

    def __neg__(self):
        return MultiSeries._raw(self.ring, self.nvars, self.trunc,
                                {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply every coefficient by the ring element (or int) ``c``."""
        return MultiSeries(self.ring, self.nvars, self.trunc,
                           {e: c * v for e, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, RingElement)):
            return self.scale(other)
        self._check(other)
        n = min(self.trunc, other.trunc)
        a = [(sum(e), e, c) for e, c in self._coeffs.items() if sum(e) <= n]
        b = sorted(((sum(e), e, c) for e, c in other._coeffs.items() if sum(e) <= n),
                   key=lambda t: t[0])
        out = {}
        if self.nvars == 1:
            for da, (ea,), ca in a:
                room = n - da
                for db, (eb,), cb in b:
                    if db > room:
                        break
                    k = (ea + eb,)
                    prev = out.get(k)
                    out[k] = ca * cb if prev is None else prev + ca * cb
        else:
            for da, ea, ca in a:
                room = n - da
                for db, eb, cb in b:
                    if db > room:
                        break
                    k = tuple(x + y for x, y in zip(ea, eb))
                    prev = out.get(k)
                    out[k] = ca * cb if prev is None else prev + ca * cb
        return MultiSeries._raw(self.ring, self.nvars, n, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def invert(self):
        """Multiplicative inverse; the constant term must be exactly 1."""
        if not self.constant_term().is_one():
            raise NonUnitError(f"constant term {self.constant_term()} is not 1")
        tail = [(e, c) for e, c in self._coeffs.items() if any(e)]
        out = {(0,) * self.nvars: RingElement.one(self.ring)}
        for e in exponents_upto(self.nvars, self.trunc)[1:]:
            acc = None
            for f, c in tail:
                if all(x <= y for x, y in zip(f, e)):
                    rest = tuple(y - x for x, y in zip(f, e))
                    prev = out.get(rest)
                    if prev is not None:
                        term = c * prev
                        acc = term if acc is None else acc + term
            if acc:
                out[e] = -acc
        return MultiSeries._raw(self.ring, self.nvars, self.trunc, out)

    def __pow__(self, m):
        from .power import power
        return power(self, m)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.ring is other.ring and self.nvars == other.nvars
                and self.trunc == other.trunc and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.ring, self.nvars, self.trunc, frozenset(self._coeffs.items())))

    def agrees_with(self, other, trunc=None):
        """Equality up to a common truncation order."""
        n = min(self.trunc, other.trunc) if trunc is None else trunc
        return self.truncate(n) == other.truncate(n)

    # -- text / json --------------------------------------------------------

    def _monomial_str(self, exponent):
        if self.nvars == 1:
            return f"T^{exponent[0]}"
        return "*".join(f"T{i + 1}^{e}" for i, e in enumerate(exponent) if e)

    def __str__(self):
        items = self.items()
        if not items:
            return "0"
        pieces = []
        for exp, c in items:
            if not any(exp):
                body, neg = str(c), False
                if c.is_monomial() and body.startswith("-"):
                    body, neg = body[1:], True
            else:
                mono = self._monomial_str(exp)
                neg = False
                if c.is_monomial():
                    cs = str(c)
                    if cs.startswith("-"):
                        neg, cs = True, cs[1:]
                    body = mono if cs == "1" else f"{cs}*{mono}"
                else:
                    body = f"({c})*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"{'-' if neg else '+'} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return (f"MultiSeries({self.ring.value}, nvars={self.nvars}, "
                f"trunc={self.trunc}, {str(self)!r})")

    def to_json(self):
        return {
            "ring": self.ring.value,
            "nvars": self.nvars,
            "trunc": self.trunc,
            "terms": [{"exponent": list(e), "coefficient": str(c)} for e, c in self.items()],
        }

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, doc, ring=None, nvars=None, trunc=None):
        """Inverse of :meth:`to_json`.

        A bare term list is accepted when ``ring`` and ``trunc`` are supplied;
        ``nvars`` then defaults to the exponent length.
        """
        if isinstance(doc, str):
            doc = json.loads(doc)
        if isinstance(doc, list):
            terms = doc
        else:
            terms = doc.get("terms", [])
            ring = doc.get("ring", ring)
            nvars = doc.get("nvars", nvars)
            trunc = doc.get("trunc", trunc)
        if ring is None:
            raise ValueError("series JSON needs a ring")
        ring = Ring.from_name(ring)
        if nvars is None:
            nvars = len(terms[0]["exponent"]) if terms else 1
        if trunc is None:
            trunc = max((sum(t["exponent"]) for t in terms), default=0)
        coeffs = {}
        for t in terms:
            exp = tuple(t["exponent"])
            if sum(exp) > trunc:
                raise TruncationError(f"term {exp} exceeds declared truncation {trunc}")
            c = parse_element(t["coefficient"], ring)
            coeffs[exp] = coeffs[exp] + c if exp in coeffs else c
        return cls(ring, nvars, trunc, coeffs)
