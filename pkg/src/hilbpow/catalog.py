"""Punctual Hilbert series of local models, and the smooth global formula
``H_X(T) = H_{A^d,0}(T)^[X]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingMismatchError, TruncationError, UnsupportedModelError
from .oracles import abelian_quotient_semigroup, euler_punctual_series, smooth_semigroup
from .power import power, sigma_series
from .rings import Ring, RingElement, parse_element
from .series import MultiSeries

__all__ = [
    "Smooth",
    "AbelianQuotient",
    "Explicit",
    "punctual_series",
    "check_supported",
    "global_smooth_series",
    "kapranov_zeta",
    "model_from_json",
    "model_to_json",
]


@dataclass(frozen=True)
class Smooth:
    dim: int

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")

    def semigroup(self):
        return smooth_semigroup(self.dim)


@dataclass(frozen=True)
class AbelianQuotient:
    """A^dim / G for a diagonal abelian G given by ``(order, weights)`` generators."""

    dim: int
    group: tuple

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        group = tuple((int(r), tuple(int(w) for w in ws)) for r, ws in self.group)
        object.__setattr__(self, "group", group)

    def is_trivial(self):
        return all(w % r == 0 for r, ws in self.group for w in ws)

    def semigroup(self):
        return abelian_quotient_semigroup(self.dim, self.group)


@dataclass(frozen=True)
class Explicit:
    """A user-supplied punctual series (constant term 1)."""

    series: MultiSeries

    def __post_init__(self):
        if not self.series.constant_term().is_one():
            raise ValueError("explicit punctual series must have constant term 1")


def _normalize(model):
    if isinstance(model, AbelianQuotient) and model.is_trivial():
        return Smooth(model.dim)
    return model


def check_supported(model, ring):
    """Raise :class:`UnsupportedModelError` unless a built-in series exists."""
    ring = Ring.from_name(ring)
    model = _normalize(model)
    if isinstance(model, Explicit):
        if model.series.ring is not ring:
            raise RingMismatchError(
                f"explicit series is over {model.series.ring.value}, expected {ring.value}"
            )
        return
    if ring is Ring.INTEGER:
        return
    if isinstance(model, Smooth) and model.dim in (1, 2):
        return
    if isinstance(model, Smooth):
        what = f"smooth germ of dimension {model.dim}"
    else:
        what = f"abelian quotient A^{model.dim}/G with G = {list(model.group)}"
    raise UnsupportedModelError(
        f"needs explicit series: no {ring.value} punctual series is known for the {what}; "
        f"supply it as an explicit model (only the integer level is computed internally)"
    )


def _motivic_smooth(dim, trunc):
    if dim == 1:
        return sigma_series(RingElement.one(Ring.MOTIVIC), (1,), trunc)
    # prod_{k>=1} (1 - L^(k-1) T^k)^(-1)
    out = MultiSeries.one(Ring.MOTIVIC, 1, trunc)
    for k in range(1, trunc + 1):
        out = out * sigma_series(RingElement.L(k - 1), (k,), trunc)
    return out


def punctual_series(model, ring, trunc):
    """``1 + sum_n [Hilb^n_{X,x}] T^n`` for the local model, in ``ring``."""
    ring = Ring.from_name(ring)
    check_supported(model, ring)
    model = _normalize(model)
    if isinstance(model, Explicit):
        if model.series.trunc < trunc:
            raise TruncationError(
                f"explicit series known to order {model.series.trunc}, {trunc} requested"
            )
        return model.series.truncate(trunc)
    if isinstance(model, Smooth) and model.dim == 1:
        return sigma_series(RingElement.one(ring), (1,), trunc)
    if ring is Ring.INTEGER:
        return euler_punctual_series(model.semigroup(), trunc)
    motivic = _motivic_smooth(model.dim, trunc)
    return motivic if ring is Ring.MOTIVIC else motivic.specialize(Ring.HODGE)


def _as_class(cls, ring):
    if isinstance(cls, RingElement):
        return cls
    return parse_element(cls, ring)


def global_smooth_series(class_of_X, d, ring, trunc):
    """Hilbert series of a smooth d-dimensional X with class ``class_of_X``."""
    ring = Ring.from_name(ring)
    cls = _as_class(class_of_X, ring)
    if cls.ring is not ring:
        raise RingMismatchError(f"class is in {cls.ring.value}, requested {ring.value}")
    return power(punctual_series(Smooth(d), ring, trunc), cls)


def kapranov_zeta(class_of_X, trunc, ring=Ring.MOTIVIC):
    """``sum_n [Sym^n X] T^n = (1 - T)^(-[X])``."""
    cls = _as_class(class_of_X, ring)
    return global_smooth_series(cls, 1, cls.ring, trunc)


def model_from_json(doc, dim, ring, nvars=1, trunc=None):
    """Build a local model from its spec-file form.

    ``{"type": "smooth"}``, ``{"type": "abelian_quotient", "order": 2,
    "weights": [1, 1]}`` (or ``"group": [{"order": .., "weights": ..}, ..]``),
    ``{"type": "explicit", "series": [...terms...]}``.
    """
    kind = doc.get("type")
    d = int(doc.get("dim", dim))
    if kind == "smooth":
        return Smooth(d)
    if kind == "abelian_quotient":
        if "group" in doc:
            group = [(g["order"], g["weights"]) for g in doc["group"]]
        else:
            group = [(doc["order"], doc["weights"])]
        return AbelianQuotient(d, tuple(group))
    if kind == "explicit":
        series = doc["series"]
        if isinstance(series, dict):
            s = MultiSeries.from_json(series)
        else:
            s = MultiSeries.from_json(series, ring=ring, nvars=doc.get("nvars", nvars),
                                      trunc=doc.get("trunc", trunc))
        return Explicit(s)
    raise ValueError(f"unknown model type {kind!r}")


def model_to_json(model):
    if isinstance(model, Smooth):
        return {"type": "smooth", "dim": model.dim}
    if isinstance(model, AbelianQuotient):
        return {"type": "abelian_quotient", "dim": model.dim,
                "group": [{"order": r, "weights": list(ws)} for r, ws in model.group]}
    return {"type": "explicit", "series": model.series.to_json()}
