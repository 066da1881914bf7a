"""Command-line interface.

Exit codes: 0 success, 1 a verification check found a counterexample,
2 input error (bad file, bad flags, unrealizable target), 3 size cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Algebra
from .bracketings import path_str
from .checks import CHECK_NAMES, run_checks
from .contexts import context_map, realize
from .errors import MagmonError, ParseError, SizeCapError
from .evaluation import DEFAULT_SIZE_CAP, evaluation_array
from .monoid import generate, j_classes, j_order_dot, j_order_edges, minimal_ideal, rank_ideal
from .randomgen import random_algebra, random_algebras
from .transformations import Transformation


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magmon",
        description="Evaluation arrays and translation monoids of finite binary algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")

    p = sub.add_parser("array", help="evaluation-word columns for one arity")
    p.add_argument("--algebra", required=True, metavar="PATH")
    p.add_argument("--n", type=int, required=True, help="arity (number of leaves)")
    p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)
    add_common(p, ["text", "json", "csv"])

    p = sub.add_parser("monoid", help="translation monoid elements, words and ranks")
    p.add_argument("--algebra", required=True, metavar="PATH")
    add_common(p, ["text", "json", "dot"])

    p = sub.add_parser("jclasses", help="Green's J-classes and their order")
    p.add_argument("--algebra", required=True, metavar="PATH")
    add_common(p, ["text", "json", "dot"])

    p = sub.add_parser("ideals", help="rank ideals and the minimal ideal")
    p.add_argument("--algebra", required=True, metavar="PATH")
    add_common(p, ["text", "json"])

    p = sub.add_parser("realize", help="one-hole term realizing a target map")
    p.add_argument("--algebra", required=True, metavar="PATH")
    p.add_argument("--map", required=True, metavar="I0,I1,...", help="target image tuple")
    add_common(p, ["text", "json"])

    p = sub.add_parser("verify", help="run the structural check suite")
    p.add_argument("--algebra", metavar="PATH")
    p.add_argument("--n", type=int, default=3, help="maximum arity for term checks")
    p.add_argument("--checks", metavar="LIST", help="comma-separated subset of checks")
    p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)
    p.add_argument("--size", type=int, help="random-algebra carrier size (without --algebra)")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=1, help="number of random algebras")
    add_common(p, ["text", "json"])

    p = sub.add_parser("random-algebra", help="emit a seeded random Cayley table")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--out", metavar="PATH")

    return parser


def _load_algebra(path: str) -> Algebra:
    with open(path, encoding="utf-8") as handle:
        return Algebra.from_text(handle.read())


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_array(args) -> tuple[str, int]:
    alg = _load_algebra(args.algebra)
    array = evaluation_array(alg, args.n, cap=args.cap)
    if args.format == "csv":
        return array.to_csv(), 0
    if args.format == "json":
        return _json_text(array.to_json_obj()), 0
    lines = [f"{term}: {word.render()}" for term, word in array.columns]
    return "\n".join(lines) + "\n", 0


def _monoid_text(M) -> str:
    alg = M.algebra
    lines = [
        f"carrier size: {alg.m}",
        f"monoid size: {len(M)}",
    ]
    if alg.is_latin_square():
        lines.append(f"latin square: yes (all ranks = {alg.m})")
    else:
        lines.append("latin square: no")
    if M.identity_nonempty_word:
        lines.append("identity: empty word (also reachable by a nonempty generator word)")
    else:
        lines.append("identity: empty word (not reachable by any nonempty generator word)")
    for f in M.elements:
        word = " ".join(M.word_of[f]) or "e"
        lines.append(f"{f}  rank={f.rank()}  word={word}")
    return "\n".join(lines) + "\n"


def cmd_monoid(args) -> tuple[str, int]:
    M = generate(_load_algebra(args.algebra))
    if args.format == "json":
        return _json_text(M.to_json_obj()), 0
    if args.format == "dot":
        return j_order_dot(M), 0
    return _monoid_text(M), 0


def cmd_jclasses(args) -> tuple[str, int]:
    M = generate(_load_algebra(args.algebra))
    classes = j_classes(M)
    if args.format == "dot":
        return j_order_dot(M), 0
    if args.format == "json":
        obj = {
            "m": M.m,
            "size": len(M),
            "j_classes": [
                {"rank": c.rank, "members": [list(f.images) for f in c.members]}
                for c in classes
            ],
            "ideal_edges": [list(e) for e in j_order_edges(M, classes)],
        }
        return _json_text(obj), 0
    lines = [f"{len(classes)} J-classes"]
    for c in classes:
        members = " ".join(str(f) for f in c.members)
        lines.append(f"rank={c.rank}: {members}")
    return "\n".join(lines) + "\n", 0


def cmd_ideals(args) -> tuple[str, int]:
    M = generate(_load_algebra(args.algebra))
    ideals = [rank_ideal(M, r) for r in range(1, M.m + 1)]
    kernel = minimal_ideal(M)
    if args.format == "json":
        obj = {
            "m": M.m,
            "size": len(M),
            "rank_ideals": [
                {"r": ideal.r, "members": [list(f.images) for f in ideal.members]}
                for ideal in ideals
            ],
            "minimal_ideal": {
                "r": kernel.r,
                "members": [list(f.images) for f in kernel.members],
            },
        }
        return _json_text(obj), 0
    lines = ["rank ideals (I_r = elements of rank <= r):"]
    for ideal in ideals:
        members = " ".join(str(f) for f in ideal.members) if ideal.members else "(empty)"
        lines.append(f"I_{ideal.r}: {members}")
    members = " ".join(str(f) for f in kernel.members)
    lines.append(f"minimal ideal: rank={kernel.r} members={members}")
    return "\n".join(lines) + "\n", 0


def _parse_map(text: str, m: int) -> Transformation:
    parts = [p.strip() for p in text.split(",")]
    try:
        images = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad --map value {text!r}: expected comma-separated integers") from None
    if len(images) != m:
        raise ParseError(f"--map has {len(images)} images, algebra has {m} elements")
    if any(not 0 <= v < m for v in images):
        raise ParseError(f"--map images must lie in [0, {m})")
    return Transformation(images)


def cmd_realize(args) -> tuple[str, int]:
    alg = _load_algebra(args.algebra)
    target = _parse_map(args.map, alg.m)
    M = generate(alg)
    realization = realize(alg, M, target)
    spec = realization.spec
    kappa = context_map(alg, spec)
    assignment_pairs = sorted(spec.assignment.items())
    if args.format == "json":
        obj = {
            "target": list(target.images),
            "word": list(realization.word),
            "bracketing": str(spec.term),
            "hole_path": path_str(spec.occurrence),
            "hole_position": realization.hole_position,
            "assignment": [[pos, value] for pos, value in assignment_pairs],
            "context_map": list(kappa.images),
            "roundtrip_ok": kappa == target,
        }
        return _json_text(obj), 0
    assignment = ",".join(f"x{pos}={value}" for pos, value in assignment_pairs) or "-"
    lines = [
        f"target: {target}",
        f"word: {' '.join(realization.word) or 'e'}",
        f"bracketing: {spec.term}",
        f"hole: position={realization.hole_position} path={path_str(spec.occurrence)}",
        f"assignment: {assignment}",
        f"context map: {kappa}",
        f"roundtrip: {'ok' if kappa == target else 'MISMATCH'}",
    ]
    return "\n".join(lines) + "\n", 0


def cmd_verify(args) -> tuple[str, int]:
    names = None
    if args.checks:
        names = [part.strip() for part in args.checks.split(",") if part.strip()]
        if not names:
            raise ParseError("--checks given but no check names parsed")
    if args.algebra is not None:
        algebras = [(args.algebra, _load_algebra(args.algebra))]
    else:
        if args.size is None:
            raise ParseError("verify needs --algebra PATH or --size M (with --seed/--count)")
        if args.count < 1:
            raise ParseError(f"--count must be >= 1, got {args.count}")
        algebras = [
            (f"random size={args.size} seed={args.seed} #{i + 1}", alg)
            for i, alg in enumerate(random_algebras(args.size, args.seed, args.count))
        ]
    all_passed = True
    reports = []
    for label, alg in algebras:
        results = run_checks(alg, args.n, names=names, cap=args.cap)
        passed = all(r.passed for r in results)
        all_passed = all_passed and passed
        reports.append((label, alg, results, passed))
    if args.format == "json":
        obj = {
            "n": args.n,
            "algebras": [
                {
                    "label": label,
                    "m": alg.m,
                    "table": [list(row) for row in alg.table],
                    "results": [
                        {
                            "name": r.name,
                            "passed": r.passed,
                            "checked": r.checked,
                            "detail": r.detail,
                            "counterexample": r.counterexample,
                        }
                        for r in results
                    ],
                    "passed": passed,
                }
                for label, alg, results, passed in reports
            ],
            "passed": all_passed,
        }
        return _json_text(obj), 0 if all_passed else 1
    lines = []
    for label, alg, results, passed in reports:
        lines.append(f"algebra {label} (m={alg.m}), checks up to arity {args.n}:")
        for r in results:
            lines.append("  " + r.line())
    good = sum(1 for _, _, _, passed in reports if passed)
    lines.append(f"result: {'PASS' if all_passed else 'FAIL'} ({good}/{len(reports)} algebras)")
    return "\n".join(lines) + "\n", 0 if all_passed else 1


def cmd_random_algebra(args) -> tuple[str, int]:
    return random_algebra(args.size, args.seed).to_text(), 0


_DISPATCH = {
    "array": cmd_array,
    "monoid": cmd_monoid,
    "jclasses": cmd_jclasses,
    "ideals": cmd_ideals,
    "realize": cmd_realize,
    "verify": cmd_verify,
    "random-algebra": cmd_random_algebra,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:  # argparse already printed the diagnostic
        return int(exit_.code or 0)
    try:
        text, code = _DISPATCH[args.command](args)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
    except SizeCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (MagmonError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":
    sys.exit(main())
