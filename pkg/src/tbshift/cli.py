"""Command-line surface: triplet files in, sorted JSON out.

Exit codes: 0 success/YES, 1 NO (or a failed check), 2 invalid input,
3 UNKNOWN.  Output is deterministic: identical inputs give byte-identical
JSON.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional

from .algebra import (
    TensorElement,
    apply_diagonal_character,
    malleability_flow,
    malleability_unitary,
)
from .abelian import dual_characters
from .classify import centralizer, decide_conjugacy
from .cocycle import CocycleError, degeneracy_witness, star_bicharacter
from .dynamics import Triplet
from .selftest import SUITES, run_suites
from .serialize import (
    SchemaError,
    element_to_json,
    hom_to_json,
    triplet_from_json,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_INVALID = 2
EXIT_UNKNOWN = 3


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _load_triplet(path: str) -> Triplet:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise SchemaError("$", f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"{path} is not JSON: {exc}") from None
    return triplet_from_json(raw)


def cmd_validate(args) -> int:
    try:
        triplet = _load_triplet(args.path)
        triplet.validate()
    except SchemaError as exc:
        _emit({"ok": False, "violation": "schema", "detail": str(exc), "path": exc.path})
        return EXIT_INVALID
    except CocycleError as exc:
        _emit({"ok": False, "violation": exc.violation, "detail": str(exc)})
        return EXIT_INVALID
    except ValueError as exc:
        _emit({"ok": False, "violation": "invariant", "detail": str(exc)})
        return EXIT_INVALID
    _emit({"ok": True})
    return EXIT_OK


def _parse_or_exit(args) -> Optional[Triplet]:
    try:
        triplet = _load_triplet(args.path)
        triplet.validate()
        return triplet
    except (SchemaError, ValueError) as exc:
        _emit({"ok": False, "violation": "invalid-input", "detail": str(exc)})
        return None


def cmd_centralizer(args) -> int:
    triplet = _parse_or_exit(args)
    if triplet is None:
        return EXIT_INVALID
    report = centralizer(triplet, bound=args.bound)
    payload = {
        "verdict": report.verdict,
        "complete": report.complete,
        "elements": [hom_to_json(f) for f in report.elements],
        "order": len(report.elements) if report.verdict == "OK" else None,
        "structure": report.structure.description if report.structure else None,
        "note": report.note,
    }
    _emit(payload)
    return EXIT_OK if report.verdict in ("OK", "INFINITE") else EXIT_UNKNOWN


def cmd_conjugate(args) -> int:
    try:
        ta = _load_triplet(args.path_a)
        ta.validate()
        tb = _load_triplet(args.path_b)
        tb.validate()
    except (SchemaError, ValueError) as exc:
        _emit({"ok": False, "violation": "invalid-input", "detail": str(exc)})
        return EXIT_INVALID
    report = decide_conjugacy(ta, tb, bound=args.bound)
    _emit(
        {
            "verdict": report.verdict,
            "witness": hom_to_json(report.witness) if report.witness else None,
            "checks": report.checks,
            "complete": report.complete,
            "note": report.note,
        }
    )
    return {"YES": EXIT_OK, "NO": EXIT_NO}.get(report.verdict, EXIT_UNKNOWN)


def cmd_factor(args) -> int:
    triplet = _parse_or_exit(args)
    if triplet is None:
        return EXIT_INVALID
    witness = degeneracy_witness(triplet.cocycle)
    payload = {"nondegenerate": witness is None}
    if witness is not None:
        payload["witness_g"] = element_to_json(witness)
    _emit(payload)
    return EXIT_OK if witness is None else EXIT_NO


def cmd_bicharacter(args) -> int:
    triplet = _parse_or_exit(args)
    if triplet is None:
        return EXIT_INVALID
    star = star_bicharacter(triplet.cocycle)
    _emit(
        {
            "antisymmetric": star.antisymmetric,
            "matrix": [[str(p) for p in row] for row in star.matrix],
        }
    )
    return EXIT_OK


def cmd_malleability(args) -> int:
    triplet = _parse_or_exit(args)
    if triplet is None:
        return EXIT_INVALID
    group = triplet.group
    if not group.is_finite:
        _emit({"ok": False, "detail": "the flow is only constructed for finite groups"})
        return EXIT_UNKNOWN
    try:
        v = malleability_unitary(triplet.cocycle)
    except ValueError as exc:
        _emit({"ok": False, "detail": str(exc)})
        return EXIT_NO
    mu = triplet.cocycle
    one = TensorElement.one(mu)
    n = group.order()
    checks = {
        "self_adjoint": v.star() == v,
        "square_is_order": v * v == one.scaled(n),
    }
    swap = all(
        malleability_flow(mu, Fraction(1), TensorElement.unit(mu, g, group.zero()))
        == TensorElement.unit(mu, group.zero(), g)
        for g in group.elements()
    )
    checks["full_swap"] = swap
    rng = random.Random(5)
    chars = list(dual_characters(group))
    half = Fraction(1, 2)
    ok_half, ok_char = True, True
    for _ in range(args.samples):
        g = group.element([rng.randrange(m) for m in group.torsion])
        h = group.element([rng.randrange(m) for m in group.torsion])
        x = TensorElement.unit(mu, g, h)
        once = malleability_flow(mu, half, x)
        if malleability_flow(mu, half, once) != malleability_flow(mu, Fraction(1), x):
            ok_half = False
        c = rng.choice(chars)
        if apply_diagonal_character(c, once) != malleability_flow(
            mu, half, apply_diagonal_character(c, x)
        ):
            ok_char = False
    checks["half_composition"] = ok_half
    checks["character_commutation"] = ok_char
    payload = {"ok": all(checks.values()), **checks}
    _emit(payload)
    return EXIT_OK if payload["ok"] else EXIT_NO


def cmd_selftest(args) -> int:
    names = [args.suite] if args.suite else None
    try:
        report = run_suites(names, q=args.q)
    except KeyError as exc:
        _emit({"ok": False, "detail": f"unknown suite {exc.args[0]!r}",
               "available": sorted(SUITES)})
        return EXIT_INVALID
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tbshift",
        description="Exact algebra for twisted Bernoulli shift data: "
        "validate triplet files, decide conjugacy, compute centralizers.",
    )
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a triplet file against all invariants")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("centralizer", help="automorphisms commuting with the action")
    p.add_argument("path")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("conjugate", help="decide conjugacy of two triplets")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("factor", help="nondegeneracy (factoriality) of the cocycle")
    p.add_argument("path")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("bicharacter", help="print the star bicharacter matrix")
    p.add_argument("path")
    p.set_defaults(func=cmd_bicharacter)

    p = sub.add_parser("malleability", help="run the tensor-square flow checks")
    p.add_argument("path")
    p.add_argument("--samples", type=int, default=10)
    p.set_defaults(func=cmd_malleability)

    p = sub.add_parser("selftest", help="run the property suites")
    p.add_argument("--suite", default=None, choices=sorted(SUITES))
    p.add_argument("--q", type=int, default=3, help="modulus for the malleability suite")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
