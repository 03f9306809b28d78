"""Generating series of nested Hilbert schemes in r variables ``T_1..T_r``.

The coefficient of ``T^n`` counts chains ``Z_1 <= ... <= Z_r`` of lengths
``n_1 <= ... <= n_r``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Explicit, Smooth
from .errors import SpecError, TruncationError, UnsupportedModelError
from .power import power, sigma_series
from .rings import Ring, RingElement, parse_element
from .series import MultiSeries

__all__ = [
    "NestedContext",
    "nested_punctual_curve",
    "nested_global_smooth",
    "nested_integrate",
    "last_variable_slice",
    "diagonal_slice",
]


@dataclass(frozen=True)
class NestedContext:
    depth: int
    ring: Ring
    trunc: int

    def __post_init__(self):
        object.__setattr__(self, "ring", Ring.from_name(self.ring))
        if self.depth < 1:
            raise ValueError("nesting depth must be >= 1")
        if self.trunc < 0:
            raise ValueError("truncation order must be nonnegative")


def nested_punctual_curve(ctx):
    """``prod_i (1 - T_i T_{i+1} ... T_r)^(-1)`` for the germ of a smooth curve.

    Ideals at a smooth curve point are the powers of the maximal ideal, so
    there is exactly one chain for every admissible ``n_1 <= ... <= n_r``.
    """
    r = ctx.depth
    one = RingElement.one(ctx.ring)
    out = MultiSeries.one(ctx.ring, r, ctx.trunc)
    for i in range(r):
        k = tuple(int(j >= i) for j in range(r))
        out = out * sigma_series(one, k, ctx.trunc)
    return out


def _punctual(model, ctx):
    if isinstance(model, Explicit):
        s = model.series
        if s.nvars != ctx.depth or s.ring is not ctx.ring:
            raise UnsupportedModelError(
                f"explicit nested series must be over {ctx.ring.value} in {ctx.depth} variables"
            )
        if s.trunc < ctx.trunc:
            raise TruncationError(f"explicit series known to order {s.trunc}, {ctx.trunc} requested")
        return s.truncate(ctx.trunc)
    if isinstance(model, Smooth) and model.dim == 1:
        return nested_punctual_curve(ctx)
    raise UnsupportedModelError(
        f"needs explicit series: no nested punctual series is built in for {model}; "
        "only smooth curve germs are computed internally"
    )


def nested_global_smooth(class_of_X, d, ctx, punctual=None):
    """``Z_X(T) = Z_{A^d,0}(T)^[X]``; ``punctual`` supplies the germ series when d > 1."""
    cls = class_of_X if isinstance(class_of_X, RingElement) else parse_element(class_of_X, ctx.ring)
    model = Smooth(d) if punctual is None else Explicit(punctual)
    return power(_punctual(model, ctx), cls)


def nested_integrate(spec, ctx):
    """Product over strata of the nested punctual series raised to the stratum class."""
    if spec.ring is not ctx.ring:
        raise SpecError([f"spec ring {spec.ring.value} differs from context ring {ctx.ring.value}"])
    problems = []
    factors = []
    for s in spec.strata:
        try:
            factors.append((_punctual(s.model, ctx), s.cls))
        except (UnsupportedModelError, TruncationError) as exc:
            problems.append(f"stratum {s.label!r}: {exc}")
    if not spec.strata:
        problems.append("spec has no strata")
    if spec.total_class is not None:
        try:
            _check_total(spec)
        except SpecError as exc:
            problems.extend(exc.problems)
    if problems:
        raise SpecError(problems)
    out = MultiSeries.one(ctx.ring, ctx.depth, ctx.trunc)
    for series, cls in factors:
        out = out * power(series, cls)
    return out


def _check_total(spec):
    total = sum((s.cls for s in spec.strata), RingElement.zero(spec.ring))
    if total != spec.total_class:
        raise SpecError([f"strata classes sum to {total}, total_class is {spec.total_class}"])


def last_variable_slice(series):
    """Terms with ``n_1 = ... = n_{r-1} = 0``, as a series in ``T_r`` alone."""
    return MultiSeries(series.ring, 1, series.trunc,
                       {(e[-1],): c for e, c in series.items() if not any(e[:-1])})


def diagonal_slice(series):
    """Terms with ``n_1 = ... = n_r = n`` as a series in one variable.

    Since ``Z^(n,...,n) = Hilb^n`` this must agree with the depth-1 series.
    """
    r = series.nvars
    return MultiSeries(series.ring, 1, series.trunc // r,
                       {(e[0],): c for e, c in series.items() if len(set(e)) == 1})
