"""Command-line front end.

Exit codes: 0 ok, 2 bad input, 3 empty union, 4 restarts exhausted,
5 validation failed, 6 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .core import EmptyUnionError, IEVector, InputError, ResourceError, RestartsExhausted, SetSystem, VennDiagram
from .generators import gen_exponential, gen_projective, gen_random, gen_uniqueness
from .mobius import mobius_ie_vector
from .standardize import compute_nerve, compute_venn
from .tube import DEFAULT_MAX_RESTARTS, build_tube, d_bound
from .validate import check_ie_vector, measure_oracle_check

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EMPTY = 3
EXIT_RESTARTS = 4
EXIT_INVALID = 5
EXIT_RESOURCE = 6


def _read(path: str) -> formats.Document:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return formats.loads(text)


def _write(doc: dict, out: str | None) -> None:
    text = formats.dumps(doc)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _read_venn(path: str) -> VennDiagram:
    doc = _read(path)
    if isinstance(doc, SetSystem):
        return compute_venn(doc)
    if isinstance(doc, VennDiagram):
        return doc
    raise InputError(f"{path}: expected a set_system or venn document")


def cmd_gen(args) -> int:
    if args.family == "uniqueness":
        fs = gen_uniqueness(args.n)
    elif args.family == "exponential":
        fs = gen_exponential(args.ell, args.y)
    elif args.family == "projective":
        fs, _ = gen_projective(args.d, args.q)
    else:
        fs = gen_random(args.n, args.m, args.seed)
    _write(formats.to_json(fs), args.out)
    return EXIT_OK


def cmd_venn(args) -> int:
    _write(formats.to_json(_read_venn(args.input)), args.out)
    return EXIT_OK


def cmd_mobius(args) -> int:
    x = mobius_ie_vector(_read_venn(args.input))
    _write(formats.to_json(x), args.out)
    return EXIT_OK


def cmd_tube(args) -> int:
    venn = _read_venn(args.input)
    res = build_tube(venn, args.seed, args.max_restarts, cap=args.cap)
    meta = {
        "permutation": list(res.permutation),
        "restarts": res.restarts,
        "d_bound": res.d_bound,
        "complex_size": len(res.complex),
        "seed": args.seed,
    }
    _write(formats.to_json(res.ie, meta=meta), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    venn = _read_venn(args.system)
    x = _read(args.vector)
    if not isinstance(x, IEVector):
        raise InputError(f"{args.vector}: expected an ie_vector document")
    if x.n != venn.n:
        raise InputError(f"n mismatch: system has n={venn.n}, vector has n={x.n}")
    reports = [check_ie_vector(venn, x), measure_oracle_check(venn, x, args.trials, args.seed)]
    passed = all(reports)
    _write({"status": "PASS" if passed else "FAIL", "reports": [r.to_dict() for r in reports]}, None)
    return EXIT_OK if passed else EXIT_INVALID


def cmd_stats(args) -> int:
    venn = _read_venn(args.input)
    x = mobius_ie_vector(venn)
    doc = {
        "n": venn.n,
        "m": venn.m,
        "d_bound": d_bound(venn.n, venn.m) if venn.m >= 2 else None,
        "mobius_l1": x.l1_norm,
        "mobius_support": x.support_size,
        "max_abs_coeff": x.max_abs_coeff,
    }
    if args.nerve:
        doc["nerve_size"] = len(compute_nerve(venn))
    _write(doc, None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ietube", description="Small inclusion-exclusion formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a set system")
    fam = gen.add_subparsers(dest="family", required=True)
    p = fam.add_parser("uniqueness")
    p.add_argument("--n", type=int, required=True)
    p = fam.add_parser("exponential")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--y", type=int, default=5)
    p = fam.add_parser("projective")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = fam.add_parser("random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    for p in fam.choices.values():
        p.add_argument("--out")
        p.set_defaults(func=cmd_gen)

    p = sub.add_parser("venn", help="standardize a set system into its Venn diagram")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_venn)

    p = sub.add_parser("mobius", help="unique Venn-supported IE-vector")
    p.add_argument("input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("tube", help="randomized ±1 IE-vector from an abstract tube")
    p.add_argument("input")
    p.add_argument("--out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-restarts", type=int, default=DEFAULT_MAX_RESTARTS)
    p.add_argument("--cap", type=int, help="override the face-size bound (diagnostics)")
    p.set_defaults(func=cmd_tube)

    p = sub.add_parser("validate", help="check an IE-vector against a system")
    p.add_argument("system")
    p.add_argument("vector")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="summary numbers as JSON")
    p.add_argument("input")
    p.add_argument("--nerve", action="store_true", help="also count nerve faces")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EmptyUnionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RestartsExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESTARTS
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
