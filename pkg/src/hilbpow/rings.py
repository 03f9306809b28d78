"""Exact coefficient rings: Z, the motivic surrogate Z[L], and Z[u, v].

Elements are immutable sparse polynomials with arbitrary-precision integer
coefficients.  Monomial keys are ``0`` for INTEGER, the exponent of ``L``
for MOTIVIC, and the pair ``(p, q)`` for HODGE.
"""

from __future__ import annotations

import enum
import re

from .errors import ParseError, RingMismatchError

__all__ = [
    "Ring",
    "RingElement",
    "parse_element",
    "specialize",
    "SPECIALIZATIONS",
]


class Ring(enum.Enum):
    INTEGER = "integer"
    MOTIVIC = "motivic"
    HODGE = "hodge"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, Ring):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            choices = ", ".join(r.value for r in cls)
            raise ValueError(f"unknown ring {name!r} (expected one of {choices})") from None

    @property
    def variables(self):
        return {Ring.INTEGER: (), Ring.MOTIVIC: ("L",), Ring.HODGE: ("u", "v")}[self]

    @property
    def unit_key(self):
        return (0, 0) if self is Ring.HODGE else 0


def _add_key(ring, a, b):
    if ring is Ring.HODGE:
        return (a[0] + b[0], a[1] + b[1])
    return a + b


class RingElement:
    """An exact element of one of the three coefficient rings."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring, terms=None):
        ring = Ring.from_name(ring)
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                key = _check_key(ring, key)
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficients must be integers, got {coeff!r}")
                c = clean.get(key, 0) + coeff
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RingElement is immutable")

    @classmethod
    def _raw(cls, ring, terms):
        # trusted constructor: keys valid, no zero coefficients
        obj = object.__new__(cls)
        object.__setattr__(obj, "ring", ring)
        object.__setattr__(obj, "_terms", terms)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def constant(cls, ring, value):
        ring = Ring.from_name(ring)
        return cls._raw(ring, {ring.unit_key: value} if value else {})

    @classmethod
    def zero(cls, ring):
        return cls.constant(ring, 0)

    @classmethod
    def one(cls, ring):
        return cls.constant(ring, 1)

    @classmethod
    def monomial(cls, ring, key, coeff=1):
        ring = Ring.from_name(ring)
        return cls._raw(ring, {_check_key(ring, key): coeff} if coeff else {})

    @classmethod
    def L(cls, power=1):
        return cls.monomial(Ring.MOTIVIC, power)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self):
        """Sorted ``(key, coefficient)`` pairs, exponents ascending."""
        return tuple(sorted(self._terms.items()))

    def is_zero(self):
        return not self._terms

    def is_one(self):
        return self._terms == {self.ring.unit_key: 1}

    def degree(self):
        if not self._terms:
            return -1
        if self.ring is Ring.HODGE:
            return max(p + q for p, q in self._terms)
        return max(self._terms)

    def evaluate_at_one(self):
        return sum(self._terms.values())

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise RingMismatchError(
                    f"ring mismatch: {self.ring.value} vs {other.ring.value}"
                )
            return other
        if isinstance(other, int):
            return RingElement.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return RingElement._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement._raw(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if not a or not b:
            return RingElement._raw(self.ring, {})
        ring = self.ring
        out = {}
        if ring is Ring.HODGE:
            for (p1, q1), c1 in a.items():
                for (p2, q2), c2 in b.items():
                    k = (p1 + p2, q1 + q2)
                    out[k] = out.get(k, 0) + c1 * c2
        else:
            for k1, c1 in a.items():
                for k2, c2 in b.items():
                    k = k1 + k2
                    out[k] = out.get(k, 0) + c1 * c2
        return RingElement._raw(ring, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("ring elements only support nonnegative integer powers")
        result = RingElement.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring is other.ring and self._terms == other._terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self._terms)

    # -- text ---------------------------------------------------------------

    def monomial_str(self, key):
        if self.ring is Ring.INTEGER:
            return ""
        if self.ring is Ring.MOTIVIC:
            return "" if key == 0 else ("L" if key == 1 else f"L^{key}")
        parts = [f"{var}^{e}" for var, e in zip(("u", "v"), key) if e]
        return "*".join(parts)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for i, (key, c) in enumerate(self.terms):
            mono = self.monomial_str(key)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"RingElement({self.ring.value}, {str(self)!r})"

    def is_monomial(self):
        return len(self._terms) == 1


def _check_key(ring, key):
    if ring is Ring.HODGE:
        if (not isinstance(key, tuple) or len(key) != 2
                or any(not isinstance(e, int) or e < 0 for e in key)):
            raise ValueError(f"HODGE monomial key must be a pair of nonnegative ints, got {key!r}")
        return key
    if isinstance(key, tuple) and len(key) == 1:
        key = key[0]
    if not isinstance(key, int) or key < 0:
        raise ValueError(f"invalid monomial key {key!r} for {ring.value}")
    if ring is Ring.INTEGER and key != 0:
        raise ValueError("INTEGER elements have only the constant monomial")
    return key


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if self.take()[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return RingElement.constant(self.ring, val)
        if kind == "var":
            if val not in self.ring.variables:
                allowed = ", ".join(self.ring.variables) or "none"
                self.fail(
                    f"variable {val!r} not allowed in {self.ring.value} ring (allowed: {allowed})",
                    tok,
                )
            if self.ring is Ring.MOTIVIC:
                return RingElement.monomial(self.ring, 1)
            return RingElement.monomial(self.ring, (1, 0) if val == "u" else (0, 1))
        if (kind, val) == ("op", "("):
            value = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return value
        self.fail(f"unexpected token {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_element(text, ring):
    """Parse a polynomial such as ``"1 + 2*L + L^2"`` into ``ring``.

    Grammar: integer literals, the ring's variables (``L`` or ``u``, ``v``),
    ``+ - * ^`` and parentheses.  Errors carry the character offset.
    """
    ring = Ring.from_name(ring)
    if isinstance(text, int):
        return RingElement.constant(ring, text)
    return _Parser(str(text), ring).parse()


# -- specialization homomorphisms -----------------------------------------------

SPECIALIZATIONS = {
    (Ring.MOTIVIC, Ring.HODGE): "L -> u*v",
    (Ring.HODGE, Ring.INTEGER): "u, v -> 1",
    (Ring.MOTIVIC, Ring.INTEGER): "L -> 1",
}


def specialize(x, target):
    """Image of ``x`` under the homomorphism from ``x.ring`` to ``target``.

    Supported: MOTIVIC -> HODGE (L maps to uv), HODGE -> INTEGER and
    MOTIVIC -> INTEGER (evaluation at 1).  The identity is allowed.
    """
    target = Ring.from_name(target)
    if x.ring is target:
        return x
    pair = (x.ring, target)
    if pair not in SPECIALIZATIONS:
        raise RingMismatchError(f"no specialization from {x.ring.value} to {target.value}")
    if target is Ring.INTEGER:
        return RingElement.constant(target, x.evaluate_at_one())
    return RingElement._raw(target, {(i, i): c for i, c in x._terms.items()})
