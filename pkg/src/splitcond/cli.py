"""Command-line frontend: lyndon, conditions, verify, converge.

Exit codes: 0 on success (and satisfied verification), 1 when a verification
fails, 2 on usage or I/O errors.  All results go to stdout, diagnostics to
stderr.  JSON output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .conditions import ConcreteScheme, condition_system, verify_scheme
from .lyndon import bracket_str, bracketing, lyndon_words
from .numeric import DegenerateFit, empirical_order
from .series import word_str

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


@dataclass(frozen=True)
class RegistryEntry:
    scheme: ConcreteScheme
    order: int


REGISTRY: dict[str, RegistryEntry] = {
    "lie-trotter": RegistryEntry(
        ConcreteScheme((Fraction(1),), (Fraction(1),), "lie-trotter"), order=1
    ),
    "strang": RegistryEntry(
        ConcreteScheme(
            (Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(0)), "strang"
        ),
        order=2,
    ),
    "paper-order3": RegistryEntry(
        ConcreteScheme(
            (Fraction(7, 24), Fraction(3, 4), Fraction(-1, 24)),
            (Fraction(2, 3), Fraction(-2, 3), Fraction(1)),
            "paper-order3",
        ),
        order=3,
    ),
}


def parse_rational(text: str | int) -> Fraction:
    """Parse "p/q" or an integer literal; anything else is rejected."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.strip())


def scheme_to_json_dict(scheme: ConcreteScheme) -> dict:
    return {
        "name": scheme.name or "unnamed",
        "a": [str(x) for x in scheme.a],
        "b": [str(x) for x in scheme.b],
    }


def load_scheme_file(path: str) -> ConcreteScheme:
    """Read a scheme from a JSON document {name, a: [...], b: [...]}."""
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict) or "a" not in data or "b" not in data:
        raise ValueError(f"{path}: expected an object with keys 'a' and 'b'")
    a = tuple(parse_rational(x) for x in data["a"])
    b = tuple(parse_rational(x) for x in data["b"])
    return ConcreteScheme(a, b, data.get("name"))


def resolve_scheme(name_or_path: str) -> ConcreteScheme:
    """Registry name, or a path to a scheme file."""
    if name_or_path in REGISTRY:
        return REGISTRY[name_or_path].scheme
    return load_scheme_file(name_or_path)


def registry_self_test() -> None:
    """Every built-in scheme must pass verification at its declared order."""
    for name, entry in REGISTRY.items():
        report = verify_scheme(entry.scheme, entry.order, "bch")
        if not report.satisfied:
            raise AssertionError(f"registry scheme {name} fails at order {entry.order}")


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_lyndon(args: argparse.Namespace) -> int:
    if args.max_len < 1:
        return _fail("--max-len must be >= 1")
    if not 1 <= args.alphabet <= 26:
        return _fail("--alphabet must be between 1 and 26")
    words = lyndon_words(args.alphabet, args.max_len)
    if args.format == "json":
        records = [
            {
                "word": word_str(w),
                "bracketing": bracket_str(bracketing(w)),
                "length": len(w),
            }
            for w in words
        ]
        print(json.dumps(records, indent=2))
    else:
        for w in words:
            if len(w) == 1:
                print(word_str(w))
            else:
                print(f"{word_str(w)} = {bracket_str(bracketing(w))}")
    return 0


def cmd_conditions(args: argparse.Namespace) -> int:
    if args.stages < 1 or args.order < 1:
        return _fail("stages and order must be >= 1")
    system = condition_system(args.stages, args.order, args.route)
    if args.format == "json":
        print(json.dumps(system.to_records(), indent=2))
    else:
        print(system)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.order < 1:
        return _fail("order must be >= 1")
    try:
        scheme = resolve_scheme(args.scheme)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    registry_self_test()
    report = verify_scheme(scheme, args.order, args.route)
    if args.format == "json":
        payload = {
            "scheme": scheme_to_json_dict(scheme),
            "order": args.order,
            "route": args.route,
            "satisfied": report.satisfied,
            "residuals": [
                {"degree": q, "word": word_str(w), "residual": str(r)}
                for q, w, r in report.residuals
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        verdict = "satisfied" if report.satisfied else "NOT satisfied"
        print(f"{scheme} at order {args.order} via {args.route}: {verdict}")
        for q, w, r in report.nonzero_residuals():
            print(f"  deg {q}  {word_str(w)}  residual {r}")
    return 0 if report.satisfied else 1


def cmd_converge(args: argparse.Namespace) -> int:
    if args.dim < 1 or args.dim > 64:
        return _fail("--dim must be between 1 and 64")
    if not 3 <= args.grid_coarse < args.grid_fine <= 14:
        return _fail("grid exponents must satisfy 3 <= coarse < fine <= 14")
    try:
        scheme = resolve_scheme(args.scheme)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail(str(exc))
    grid = tuple(2.0**-k for k in range(args.grid_coarse, args.grid_fine + 1))
    try:
        report = empirical_order(scheme, args.dim, args.seed, grid)
    except DegenerateFit as exc:
        return _fail(str(exc))
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitcond",
        description="Order conditions for exponential operator-splitting schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lyndon = sub.add_parser("lyndon", help="list Lyndon words and their bracketings")
    p_lyndon.add_argument("--alphabet", type=int, default=2)
    p_lyndon.add_argument("--max-len", type=int, required=True)
    p_lyndon.add_argument("--format", choices=("text", "json"), default="text")
    p_lyndon.set_defaults(func=cmd_lyndon)

    p_cond = sub.add_parser("conditions", help="generate an order-condition system")
    p_cond.add_argument("-s", "--stages", type=int, required=True)
    p_cond.add_argument("-p", "--order", type=int, required=True)
    p_cond.add_argument("--route", choices=("taylor", "bch"), default="bch")
    p_cond.add_argument("--format", choices=("text", "json"), default="text")
    p_cond.set_defaults(func=cmd_conditions)

    p_verify = sub.add_parser("verify", help="verify a scheme against order conditions")
    p_verify.add_argument("scheme", help="registry name or scheme JSON file")
    p_verify.add_argument("-p", "--order", type=int, required=True)
    p_verify.add_argument("--route", choices=("taylor", "bch"), default="bch")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_conv = sub.add_parser("converge", help="measure the empirical convergence order")
    p_conv.add_argument("scheme", help="registry name or scheme JSON file")
    p_conv.add_argument("--dim", type=int, default=4)
    p_conv.add_argument("--seed", type=int, default=1)
    p_conv.add_argument("--grid-coarse", type=int, default=4, help="largest step 2^-k")
    p_conv.add_argument("--grid-fine", type=int, default=10, help="smallest step 2^-k")
    p_conv.set_defaults(func=cmd_converge)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
