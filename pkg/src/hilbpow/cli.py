"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (a JSON error object is
written to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .catalog import AbelianQuotient, Smooth, global_smooth_series, kapranov_zeta, punctual_series
from .errors import HilbPowError, SpecError
from .nested import NestedContext, nested_global_smooth, nested_integrate
from .oracles import abelian_quotient_semigroup, downset_counts, smooth_semigroup
from .orbifold import integrate, load_spec, toric_euler_global, validate
from .power import decompose, power
from .rings import Ring, parse_element
from .series import MultiSeries

RINGS = [r.value for r in Ring]


class CommandFailed(HilbPowError):
    pass


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(args, text, doc):
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _emit_series(args, series, **extra):
    doc = series.to_json()
    doc.update(extra)
    _emit(args, str(series), doc)


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CommandFailed(f"cannot read input {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise CommandFailed(f"cannot read input {path}: invalid JSON ({exc})") from None


def _read_series(args):
    doc = _read_json(args.input)
    return MultiSeries.from_json(doc, ring=args.ring, trunc=args.trunc)


def _local_model(args):
    if args.order is None:
        return Smooth(args.dim)
    weights = args.weights or [1] * args.dim
    return AbelianQuotient(args.dim, ((args.order, tuple(weights)),))


# -- subcommands ------------------------------------------------------------------

def cmd_punctual(args):
    _emit_series(args, punctual_series(_local_model(args), args.ring, args.trunc))


def cmd_global(args):
    cls = parse_element(args.cls, args.ring)
    _emit_series(args, global_smooth_series(cls, args.dim, args.ring, args.trunc))


def cmd_zeta(args):
    cls = parse_element(args.cls, args.ring)
    _emit_series(args, kapranov_zeta(cls, args.trunc, args.ring))


def cmd_pow(args):
    A = _read_series(args)
    m = parse_element(args.exponent, A.ring)
    _emit_series(args, power(A, m))


def cmd_decompose(args):
    D = decompose(_read_series(args))
    text = "\n".join(f"{list(k)}: {s}" for k, s in D.items()) or "(empty)"
    _emit(args, text, D.to_json())


def cmd_orbifold(args):
    spec = load_spec(args.spec)
    if args.action == "validate":
        validate(spec)
        _emit(args, "valid", {"valid": True})
        return
    result = integrate(spec)
    if args.oracle != "toric":
        _emit_series(args, result)
        return
    if not spec.fixed_points:
        raise SpecError(["--oracle toric needs a 'fixed_points' list in the spec"])
    oracle = toric_euler_global(spec.fixed_points, spec.trunc)
    euler = result.specialize(Ring.INTEGER)
    equal = euler == oracle
    text = f"{result}\noracle (toric fixed points): {oracle}\nequal: {str(equal).lower()}"
    doc = result.to_json()
    doc["oracle"] = {"series": oracle.to_json(), "equal": equal}
    _emit(args, text, doc)
    if not equal:
        raise CommandFailed("orbifold integral disagrees with the toric fixed-point oracle")


def cmd_nested(args):
    ctx = NestedContext(args.depth, args.ring, args.trunc)
    if args.spec:
        spec = load_spec(args.spec, nvars=args.depth)
        if spec.trunc < ctx.trunc:
            raise SpecError([f"spec truncation {spec.trunc} is below --trunc {ctx.trunc}"])
        series = nested_integrate(spec, ctx)
    else:
        series = nested_global_smooth(parse_element(args.curve_class, ctx.ring), 1, ctx)
    _emit_series(args, series)


def cmd_oracle(args):
    if args.kind == "partitions":
        model = smooth_semigroup(args.dim)
    else:
        model = abelian_quotient_semigroup(len(args.weights), [(args.order, args.weights)])
    counts = downset_counts(model, args.upto)
    _emit(args, " ".join(map(str, counts)), {
        "generators": [list(g) for g in model.generators],
        "counts": counts,
    })


def cmd_selftest(args):
    lines = []
    results = acceptance.run_all(out=(print if args.format == "text" else lines.append))
    failed = [r for r in results if not r[2]]
    if args.format == "json":
        print(json.dumps([{"criterion": n, "name": name, "passed": ok, "detail": detail}
                          for n, name, ok, detail in results], indent=2))
    else:
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    if failed:
        raise CommandFailed(f"{len(failed)} acceptance criteria failed")


# -- parser -----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="hilbpow",
        description="Power structures and Hilbert series of points (exact arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_flag(p, default="motivic"):
        p.add_argument("--ring", choices=RINGS, default=default)

    p = sub.add_parser("punctual", parents=[common], help="punctual Hilbert series of a germ")
    ring_flag(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--order", type=int, help="cyclic quotient: group order")
    p.add_argument("--weights", type=_int_list, help="cyclic quotient: weights w1,w2,...")
    p.set_defaults(func=cmd_punctual)

    p = sub.add_parser("global", parents=[common], help="Hilbert series of a smooth variety")
    ring_flag(p)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--class", dest="cls", required=True, help='class, e.g. "1+L+L^2"')
    p.add_argument("--trunc", type=int, required=True)
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("zeta", parents=[common], help="Kapranov zeta function")
    ring_flag(p)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--trunc", type=int, required=True)
    p.set_defaults(func=cmd_zeta)

    for name, func, helptext in (("pow", cmd_pow, "A(T)^m under the power structure"),
                                 ("decompose", cmd_decompose, "exponents s_k of A(T)")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("input", help="series JSON file")
        p.add_argument("--ring", choices=RINGS, help="ring for a bare term list")
        p.add_argument("--trunc", type=int, help="truncation for a bare term list")
        if name == "pow":
            p.add_argument("--exponent", required=True, help='exponent m, e.g. "1+L"')
        p.set_defaults(func=func)

    p = sub.add_parser("orbifold", parents=[common], help="orbifold Hilbert series from a spec file")
    p.add_argument("action", choices=["integrate", "validate"])
    p.add_argument("spec", help="orbifold spec JSON file")
    p.add_argument("--oracle", choices=["toric"], help="also compare with the toric fixed-point oracle")
    p.set_defaults(func=cmd_orbifold)

    p = sub.add_parser("nested", parents=[common], help="nested Hilbert series")
    ring_flag(p)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--trunc", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--curve-class", help="class of a smooth curve")
    group.add_argument("--spec", help="orbifold spec with per-stratum nested series")
    p.set_defaults(func=cmd_nested)

    p = sub.add_parser("oracle", parents=[common], help="brute-force monomial ideal counts")
    osub = p.add_subparsers(dest="kind", required=True)
    q = osub.add_parser("partitions", parents=[common], help="d-dimensional partitions")
    q.add_argument("--dim", type=int, required=True)
    q.add_argument("--upto", type=int, required=True)
    q = osub.add_parser("quotient", parents=[common], help="cyclic quotient singularity")
    q.add_argument("--order", type=int, required=True)
    q.add_argument("--weights", type=_int_list, required=True)
    q.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (HilbPowError, ValueError) as exc:
        error = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, SpecError):
            error["problems"] = exc.problems
        print(json.dumps(error), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
