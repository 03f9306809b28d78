"""Hilbert series of an orbifold as a product over strata.

An orbifold is described by a finite stratification on which the punctual
Hilbert series is constant; the global series is
``prod_strata punctual(model)^[stratum]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catalog import Explicit, check_supported, model_from_json, punctual_series
from .errors import HilbPowError, SpecError
from .oracles import euler_punctual_series
from .power import power
from .rings import Ring, RingElement, parse_element, specialize
from .series import MultiSeries

__all__ = [
    "Stratum",
    "OrbifoldSpec",
    "validate",
    "integrate",
    "toric_euler_global",
    "load_spec",
    "spec_from_json",
]


@dataclass(frozen=True)
class Stratum:
    label: str
    cls: RingElement
    model: object


@dataclass(frozen=True)
class OrbifoldSpec:
    dim: int
    ring: Ring
    trunc: int
    strata: tuple
    total_class: RingElement | None = None
    fixed_points: tuple | None = None

    def specialized(self, target):
        """Same stratification with classes mapped to ``target``."""
        target = Ring.from_name(target)
        strata = tuple(Stratum(s.label, specialize(s.cls, target), s.model) for s in self.strata)
        total = None if self.total_class is None else specialize(self.total_class, target)
        return OrbifoldSpec(self.dim, target, self.trunc, strata, total, self.fixed_points)


def validate(spec, nvars=1):
    """Return ``spec`` unchanged or raise :class:`SpecError` listing every problem."""
    problems = []
    if not isinstance(spec.trunc, int) or spec.trunc < 1:
        problems.append(f"truncation order must be a positive integer, got {spec.trunc!r}")
    if not spec.strata:
        problems.append("spec has no strata")
    seen = set()
    for s in spec.strata:
        if s.label in seen:
            problems.append(f"stratum {s.label!r}: duplicate label")
        seen.add(s.label)
        if s.cls.ring is not spec.ring:
            problems.append(
                f"stratum {s.label!r}: class is in {s.cls.ring.value}, spec ring is {spec.ring.value}"
            )
        if isinstance(s.model, Explicit):
            if s.model.series.nvars != nvars:
                problems.append(
                    f"stratum {s.label!r}: explicit series has {s.model.series.nvars} "
                    f"variable(s), expected {nvars}"
                )
            if s.model.series.trunc < spec.trunc:
                problems.append(
                    f"stratum {s.label!r}: explicit series known to order "
                    f"{s.model.series.trunc}, spec needs {spec.trunc}"
                )
        elif s.model.dim != spec.dim:
            problems.append(
                f"stratum {s.label!r}: local model has dimension {s.model.dim}, spec dim is {spec.dim}"
            )
        try:
            check_supported(s.model, spec.ring)
        except HilbPowError as exc:
            problems.append(f"stratum {s.label!r}: {exc}")
    if spec.total_class is not None and spec.strata:
        if spec.total_class.ring is not spec.ring:
            problems.append("total_class is not in the spec ring")
        else:
            total = sum((s.cls for s in spec.strata if s.cls.ring is spec.ring),
                        RingElement.zero(spec.ring))
            if total != spec.total_class:
                problems.append(
                    f"strata classes sum to {total}, total_class is {spec.total_class} "
                    f"(difference {spec.total_class - total})"
                )
    if problems:
        raise SpecError(problems)
    return spec


def integrate(spec):
    """Product over strata of ``punctual_series(model) ** cls``."""
    validate(spec)
    out = MultiSeries.one(spec.ring, 1, spec.trunc)
    for s in spec.strata:
        out = out * power(punctual_series(s.model, spec.ring, spec.trunc), s.cls)
    return out


def toric_euler_global(models, trunc):
    """Euler-level Hilbert series of a toric variety from its fixed-point germs.

    Torus-fixed subschemes split as a product over fixed points, so the
    series is the plain product of the local downset-count series.
    """
    out = MultiSeries.one(Ring.INTEGER, 1, trunc)
    for model in models:
        if isinstance(model, Explicit):
            raise ValueError("toric oracle only accepts smooth or abelian-quotient fixed points")
        out = out * euler_punctual_series(model.semigroup(), trunc)
    return out


def spec_from_json(doc, nvars=1):
    """Build an :class:`OrbifoldSpec` from the JSON document form."""
    if "ring" not in doc or "trunc" not in doc or "dim" not in doc:
        raise SpecError(["spec needs 'dim', 'ring' and 'trunc'"])
    ring = Ring.from_name(doc["ring"])
    dim, trunc = int(doc["dim"]), int(doc["trunc"])
    problems = []
    strata = []
    for i, raw in enumerate(doc.get("strata", [])):
        label = str(raw.get("label", f"stratum{i}"))
        try:
            cls = parse_element(raw.get("class", "0"), ring)
            model = model_from_json(raw.get("model", {"type": "smooth"}), dim, ring, nvars, trunc)
        except (ValueError, KeyError, HilbPowError) as exc:
            problems.append(f"stratum {label!r}: {exc}")
            continue
        strata.append(Stratum(label, cls, model))
    total = None
    if doc.get("total_class") is not None:
        try:
            total = parse_element(doc["total_class"], ring)
        except HilbPowError as exc:
            problems.append(f"total_class: {exc}")
    fixed = None
    if doc.get("fixed_points") is not None:
        try:
            fixed = tuple(model_from_json(m, dim, Ring.INTEGER) for m in doc["fixed_points"])
        except (ValueError, KeyError) as exc:
            problems.append(f"fixed_points: {exc}")
    if problems:
        raise SpecError(problems)
    return OrbifoldSpec(dim, ring, trunc, tuple(strata), total, fixed)


def load_spec(path, nvars=1):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SpecError([f"cannot read spec {path}: {exc.strerror}"]) from None
    except json.JSONDecodeError as exc:
        raise SpecError([f"cannot read spec {path}: invalid JSON ({exc})"]) from None
    return spec_from_json(doc, nvars)
