"""Command-line surface.

Subcommands::

    orbitposet enum   --cartan A2 --model wonderful
    orbitposet leq    --cartan A1 --model wonderful "[{};e;1]" "[{1};e;e]"
    orbitposet hasse  --cartan A2 --model wonderful --format dot
    orbitposet verify --cartan B2 --model wonderful

``--model`` is ``wonderful``, ``group``, or a path to a model file (in
which case ``--cartan`` must be omitted; the file carries its own).
Output is byte-deterministic for a fixed configuration, including under
different ``ORBITPOSET_THREADS`` settings.

Exit codes: 0 ok, 1 verification failure (or disagreeing criteria),
2 usage or parse errors, 3 resource bounds.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coxeter import format_word
from .embedding import (EmbeddingModel, format_set, group_model, load_model,
                        wonderful_model)
from .errors import (InvalidCartanError, ModelParseError, ModelValidationError,
                     NotFiniteTypeError, OrbitPosetError, OrbitValidationError,
                     SizeBoundError)
from .orbits import (DEFAULT_MAX_ORBITS, enumerate_orbits, format_orbit,
                     closure_leq_bclosure_witness, closure_leq_witness,
                     coset_complement, group_for, parse_orbit)
from .poset import build_poset, resolve_threads
from .rootsys import CartanDatum
from .verify import verify_suite

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


class UsageError(OrbitPosetError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitposet",
        description="Orbit combinatorics of toroidal group embeddings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--cartan", help="Cartan type string, e.g. A2, B3")
        p.add_argument("--model", default="wonderful",
                       help="wonderful | group | path to a model file")
        p.add_argument("--format", default="text", choices=formats,
                       help="output format")
        p.add_argument("--max-orbits", type=int, default=DEFAULT_MAX_ORBITS,
                       help="refuse models with more orbits than this")
        p.add_argument("--max-group", type=int, default=None,
                       help="refuse Weyl groups larger than this")

    p_enum = sub.add_parser("enum", help="enumerate orbits with counts per K")
    common(p_enum)

    p_leq = sub.add_parser("leq", help="decide closure containment of b in a")
    common(p_leq)
    p_leq.add_argument("a", help="orbit literal, e.g. '[K={}; v=e; w=1]'")
    p_leq.add_argument("b", help="orbit literal")

    p_hasse = sub.add_parser("hasse", help="export the covering relations")
    common(p_hasse, formats=("text", "json", "dot"))

    p_verify = sub.add_parser("verify", help="run the verification suites")
    common(p_verify)
    return parser


def _resolve_model(args) -> EmbeddingModel:
    if args.max_orbits <= 0:
        raise UsageError("--max-orbits must be positive")
    if args.max_group is not None and args.max_group <= 0:
        raise UsageError("--max-group must be positive")
    source = args.model
    if source in ("wonderful", "group"):
        if not args.cartan:
            raise UsageError(f"--cartan is required with --model {source}")
        cartan = CartanDatum.from_type(args.cartan)
        return wonderful_model(cartan) if source == "wonderful" else group_model(cartan)
    if args.cartan:
        raise UsageError("--cartan conflicts with a model file "
                         "(the file carries its Cartan datum)")
    return load_model(source)


def _check_group_bound(model: EmbeddingModel, args) -> None:
    if args.max_group is not None:
        group_for(model).enumerate_group(max_order=args.max_group)


def cmd_enum(args) -> int:
    model = _resolve_model(args)
    _check_group_bound(model, args)
    orbits = enumerate_orbits(model, max_orbits=args.max_orbits)
    group = group_for(model)
    k = len(group.enumerate_group())
    per_k = []
    for K in model.members:
        reps = len(group.min_coset_reps(coset_complement(model, K)))
        per_k.append((K, reps, reps * k))
    if args.format == "json":
        doc = {
            "schema_version": 1,
            "kind": "orbit-enumeration",
            "cartan": model.cartan.describe(),
            "model": model.label,
            "per_K": [{"K": format_set(K), "min_reps": reps, "count": count}
                      for K, reps, count in per_k],
            "total": len(orbits),
            "orbits": [format_orbit(o) for o in orbits],
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"cartan: {model.cartan.describe()}")
        print(f"model: {model.label}")
        for K, reps, count in per_k:
            print(f"K={format_set(K)} : {count} orbits "
                  f"({reps} min-reps x {k} group elements)")
        print(f"total: {len(orbits)} orbits")
        for o in orbits:
            print(format_orbit(o))
    return EXIT_OK


def cmd_leq(args) -> int:
    model = _resolve_model(args)
    _check_group_bound(model, args)
    a = parse_orbit(model, args.a)
    b = parse_orbit(model, args.b)
    u = closure_leq_witness(model, a, b)
    pair = closure_leq_bclosure_witness(model, a, b)
    agree = (u is None) == (pair is None)
    if args.format == "json":
        doc = {
            "schema_version": 1,
            "kind": "closure-query",
            "a": format_orbit(a),
            "b": format_orbit(b),
            "one_witness": {"holds": u is not None,
                            "u": format_word(u.word) if u else None},
            "two_witness": {"holds": pair is not None,
                            "u": format_word(pair[0].word) if pair else None,
                            "u_prime": format_word(pair[1].word) if pair else None},
            "agree": agree,
        }
        print(json.dumps(doc, indent=2))
    else:
        print(f"a: {format_orbit(a)}")
        print(f"b: {format_orbit(b)}")
        if u is not None:
            print(f"one-witness criterion: true (u={format_word(u.word)})")
        else:
            print("one-witness criterion: false")
        if pair is not None:
            print(f"two-witness criterion: true (u={format_word(pair[0].word)}, "
                  f"u'={format_word(pair[1].word)})")
        else:
            print("two-witness criterion: false")
        if not agree:
            print("WARNING: the two criteria disagree")
    return EXIT_OK if agree else EXIT_VERIFICATION


def cmd_hasse(args) -> int:
    model = _resolve_model(args)
    _check_group_bound(model, args)
    poset = build_poset(model, max_orbits=args.max_orbits)
    if args.format == "dot":
        sys.stdout.write(poset.to_dot())
    elif args.format == "json":
        print(json.dumps(poset.to_json_dict(), indent=2))
    else:
        print(f"cartan: {model.cartan.describe()}")
        print(f"model: {model.label}")
        print(f"orbits: {len(poset)}")
        print(f"maximum: {format_orbit(poset.maximum())}")
        covers = poset.covers()
        print(f"covers: {len(covers)}")
        for lo, up in covers:
            print(f"{format_orbit(poset.orbits[lo])} -< "
                  f"{format_orbit(poset.orbits[up])}")
    return EXIT_OK


def cmd_verify(args) -> int:
    model = _resolve_model(args)
    _check_group_bound(model, args)
    report = verify_suite(model, max_orbits=args.max_orbits)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_VERIFICATION


_COMMANDS = {
    "enum": cmd_enum,
    "leq": cmd_leq,
    "hasse": cmd_hasse,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        resolve_threads(None)  # fail fast on a malformed env var
        return _COMMANDS[args.command](args)
    except SizeBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (UsageError, InvalidCartanError, NotFiniteTypeError,
            ModelParseError, ModelValidationError, OrbitValidationError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
