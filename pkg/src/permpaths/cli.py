"""Command-line interface.

Subcommands: enumerate, map, invert, verify, tree, sequence, render.
Exit codes: 0 success, 1 domain or input-data error, 2 usage error.
The environment variable PERMPATHS_MAX_N supplies the default bound for
``verify`` and ``sequence`` when --n is omitted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijections import (
    format_indexed_path,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    simion_schmidt,
    simion_schmidt_inverse,
    theta,
    theta_inverse,
)
from .ecotree import iter_levels, tree_as_dicts
from .oracle import count_class, enumerate_class
from .paths import PathParseError, parse_path, render_path
from .patterns import parse_class_spec
from .permutations import DomainError, format_permutation, parse_permutation
from .verify import THEOREM_CHECKS

DEFAULT_N_ENV = "PERMPATHS_MAX_N"


def _default_n(fallback: int) -> int:
    value = os.environ.get(DEFAULT_N_ENV)
    if value is None:
        return fallback
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{DEFAULT_N_ENV} must be an integer, got {value!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permpaths",
        description="Pattern-restricted permutations, marked patterns, and "
                    "their Dyck/Motzkin path bijections.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list a pattern-avoidance class")
    p.add_argument("--class", dest="spec", required=True, metavar="SPEC",
                   help="comma-separated patterns, '^' hat / '-' bar, e.g. 132,2^13")
    p.add_argument("--n", type=int, required=True, help="permutation length")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("map", help="apply a bijection forward")
    p.add_argument("--bijection", required=True, choices=["phi", "theta", "ss", "psi"])
    p.add_argument("input", help="permutation text, or a Motzkin word for psi")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("invert", help="apply a bijection backward")
    p.add_argument("--bijection", required=True, choices=["phi", "theta", "ss", "psi"])
    p.add_argument("input", help="Dyck word (phi, theta) or permutation text (ss, psi)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run an exhaustive check suite")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREM_CHECKS))
    p.add_argument("--n", type=int, default=None,
                   help=f"bound (default from ${DEFAULT_N_ENV} or 6)")

    p = sub.add_parser("tree", help="expand the generating tree")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sequence", help="count a class for n = 1..N (CSV rows)")
    p.add_argument("--class", dest="spec", required=True, metavar="SPEC")
    p.add_argument("--n", type=int, default=None,
                   help=f"largest length (default from ${DEFAULT_N_ENV} or 8)")

    p = sub.add_parser("render", help="draw a path in ASCII")
    p.add_argument("word", help="path word over u/d/f")

    return parser


def _cmd_enumerate(args) -> int:
    constraints = parse_class_spec(args.spec)
    members = list(enumerate_class(args.n, constraints))
    if args.json:
        print(json.dumps([list(p) for p in members]))
    else:
        for perm in members:
            print(format_permutation(perm))
    return 0


def _cmd_map(args) -> int:
    name = args.bijection
    if name == "psi":
        result = format_permutation(psi(parse_path(args.input, "motzkin")))
    else:
        perm = parse_permutation(args.input)
        if name == "phi":
            result = phi(perm)
        elif name == "theta":
            result = format_indexed_path(theta(perm))
        else:
            result = format_permutation(simion_schmidt(perm))
    print(json.dumps(result) if args.json else result)
    return 0


def _cmd_invert(args) -> int:
    name = args.bijection
    if name == "phi":
        result = format_permutation(phi_inverse(args.input))
    elif name == "theta":
        result = format_permutation(theta_inverse(args.input))
    elif name == "ss":
        result = format_permutation(simion_schmidt_inverse(parse_permutation(args.input)))
    else:
        result = psi_inverse(parse_permutation(args.input))
    print(json.dumps(result) if args.json else result)
    return 0


def _cmd_verify(args) -> int:
    bound = args.n if args.n is not None else _default_n(6)
    check, description = THEOREM_CHECKS[args.theorem]
    ok, lines = check(bound)
    print(f"{args.theorem}: {description}")
    for line in lines:
        print(f"  {line}")
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_tree(args) -> int:
    if args.depth < 1:
        raise DomainError("depth must be >= 1")
    if args.json:
        print(json.dumps(tree_as_dicts(args.depth)))
        return 0
    for depth, nodes in enumerate(iter_levels(args.depth), start=1):
        print(f"level {depth} ({len(nodes)} nodes):")
        for node in nodes:
            sites = ",".join(str(s) for s in node.active_sites)
            print(f"  {format_permutation(node.perm)}  label={node.label}  sites={sites}")
    return 0


def _cmd_sequence(args) -> int:
    bound = args.n if args.n is not None else _default_n(8)
    constraints = parse_class_spec(args.spec)
    for n in range(1, bound + 1):
        print(f"{n},{count_class(n, constraints)}")
    return 0


def _cmd_render(args) -> int:
    word = parse_path(args.word, "motzkin" if "f" in args.word else "dyck")
    print(render_path(word))
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "invert": _cmd_invert,
    "verify": _cmd_verify,
    "tree": _cmd_tree,
    "sequence": _cmd_sequence,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DomainError, PathParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
