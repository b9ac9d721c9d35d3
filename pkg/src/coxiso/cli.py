"""Command-line front end.

JSON goes to stdout and diagnostics to stderr.  Exit codes: 0 success or
isomorphic, 1 not isomorphic, 2 input error, 3 unsupported (non-chordal
input or truncated orbit).
"""
from __future__ import annotations

import argparse
import json
import sys

from .angle import (bad_separators, candidate_bad_edges, cross_eyed_moves, cross_eyed_twist,
                    gross_separators, star_decomposition)
from .canon import canonical_labeling
from .chordal import chordality
from .decide import DEPENDENCY_NOTE, NOT_ISOMORPHIC, UNSUPPORTED, decide_isomorphic, move_from_json
from .diagram import export, parse_diagram, to_json_obj
from .errors import CoxisoError, InvariantViolation, NotChordal, OrbitTruncated
from .expansion import blow_up, expand
from .georep import verify_blowup
from .orbit import DEFAULT_MAX_SIZE, twist_orbit
from .spherical import bases
from .twist import enumerate_twist_moves

EXIT_OK, EXIT_NOT_ISO, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path, fmt, allow_reserved):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if fmt is None:
        fmt = "json" if path.endswith(".json") else "cox"
    return parse_diagram(data, fmt, allow_reserved=allow_reserved)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _diagram_json(d):
    return to_json_obj(d)


def cmd_check(args, d):
    w = chordality(d)
    out = {"generators": len(d), "chordality": w.to_json(),
           "bases": [b.to_json() for b in bases(d)],
           "candidate_bad_edges": [list(e) for e in candidate_bad_edges(d)]}
    if w.result:
        per_edge = []
        for e in candidate_bad_edges(d):
            per_edge.append({
                "edge": list(e),
                "bad_separators": [s.to_json() for s in bad_separators(d, e)],
                "gross_separators": [s.to_json() for s in gross_separators(d, e)],
                "star_decomposition": star_decomposition(d, e).to_json(),
            })
        out["bad_edges"] = per_edge
    _emit(out)
    return EXIT_OK


def cmd_canon(args, d):
    form, order = canonical_labeling(d)
    _emit({"form": form.decode(), "ordering": list(order)})
    return EXIT_OK


def cmd_twists(args, d):
    out = {"elementary": [m.to_json() for m in enumerate_twist_moves(d)]}
    if chordality(d).result:
        out["cross_eyed"] = [m.to_json() for m in cross_eyed_moves(d)]
    else:
        print("diagram is not chordal; cross-eyed moves not listed", file=sys.stderr)
    _emit(out)
    return EXIT_OK


def cmd_apply(args, d):
    try:
        obj = json.loads(args.move)
    except json.JSONDecodeError as exc:
        raise InputError(f"--move is not valid JSON: {exc}") from None
    move = move_from_json(d, obj)
    _emit(_diagram_json(move.apply(d)))
    return EXIT_OK


def cmd_cross_eye(args, d):
    edge = [x.strip() for x in args.edge.split(",")]
    if len(edge) != 2:
        raise InputError("--edge expects two generator names separated by a comma")
    _emit(_diagram_json(cross_eyed_twist(d, edge)))
    return EXIT_OK


def cmd_expand(args, d):
    e, history = expand(d)
    _emit({"diagram": _diagram_json(e), "log": [p.to_json() for p in history]})
    return EXIT_OK


def cmd_orbit(args, d):
    try:
        orbit = twist_orbit(d, use_cross_eyed=not args.no_cross_eyed, max_size=args.max)
    except OrbitTruncated as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        if exc.partial is not None:
            _emit(exc.partial.to_json())
        return EXIT_UNSUPPORTED
    for flag in orbit.flags:
        print(f"review: {flag}", file=sys.stderr)
    _emit(orbit.to_json())
    return EXIT_OK


def cmd_decide(args, d1, d2):
    verdict = decide_isomorphic(d1, d2, max_size=args.max)
    out = verdict.to_json()
    if args.verify and verdict.certificate is not None:
        checks = []
        failed = 0
        for d, plans in ((d1, verdict.certificate.blowups1), (d2, verdict.certificate.blowups2)):
            for plan in plans:
                reports = verify_blowup(d, plan)
                failed += sum(not r.passed for r in reports)
                checks.append({"plan": plan.to_json(), "reports": [r.to_json() for r in reports]})
                d = blow_up(d, plan)
        out["verification"] = {"blowups": checks, "failed": failed}
        if failed:
            print(f"warning: {failed} word-order check(s) disagree with blow-up labels",
                  file=sys.stderr)
    if verdict.result == NOT_ISOMORPHIC:
        print(f"note: {DEPENDENCY_NOTE}", file=sys.stderr)
    if args.certificate and verdict.certificate is not None:
        try:
            with open(args.certificate, "w") as fh:
                json.dump(verdict.certificate.to_json(), fh, indent=2, sort_keys=True)
                fh.write("\n")
        except OSError as exc:
            raise InputError(f"cannot write {args.certificate}: {exc.strerror}") from None
    _emit(out)
    if verdict.result == UNSUPPORTED:
        print(f"unsupported: {verdict.reason}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    return EXIT_NOT_ISO if verdict.result == NOT_ISOMORPHIC else EXIT_OK


def cmd_export(args, d):
    sys.stdout.buffer.write(export(d, args.format))
    sys.stdout.flush()
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input-format", choices=("cox", "json"), default=None,
                        help="input format (default: by file extension, .json or .cox)")
    common.add_argument("--allow-reserved", action="store_true",
                        help="accept generator names containing '$' (blow-up output)")

    p = argparse.ArgumentParser(prog="coxiso",
                                description="Isomorphism of chordal Coxeter groups via diagram twists.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, nfiles=1):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if nfiles == 1:
            sp.add_argument("file")
        else:
            sp.add_argument("file1")
            sp.add_argument("file2")
        sp.set_defaults(func=func, nfiles=nfiles)
        return sp

    add("check", cmd_check, "chordality, bases, bad edges and separators")
    add("canon", cmd_canon, "canonical form")
    add("twists", cmd_twists, "list available twist moves")
    add("apply", cmd_apply, "apply one move given as JSON").add_argument("--move", required=True)
    add("cross-eye", cmd_cross_eye, "cross-eyed twist along a 5-edge").add_argument(
        "--edge", required=True, help="two generators, e.g. b,c")
    add("expand", cmd_expand, "blow up until no base is eligible")
    sp = add("orbit", cmd_orbit, "twist orbit by canonical form")
    sp.add_argument("--no-cross-eyed", action="store_true")
    sp.add_argument("--max", type=int, default=DEFAULT_MAX_SIZE)
    sp = add("decide", cmd_decide, "decide whether two diagrams give isomorphic groups", nfiles=2)
    sp.add_argument("--certificate", metavar="OUT")
    sp.add_argument("--verify", action="store_true",
                    help="check blow-up labels numerically in the reflection representation")
    sp.add_argument("--max", type=int, default=DEFAULT_MAX_SIZE)
    add("export", cmd_export, "convert to another format").add_argument(
        "--format", choices=("dot", "json", "cox"), required=True)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.nfiles == 1:
            d = _read(args.file, args.input_format, args.allow_reserved)
            return args.func(args, d)
        d1 = _read(args.file1, args.input_format, args.allow_reserved)
        d2 = _read(args.file2, args.input_format, args.allow_reserved)
        return args.func(args, d1, d2)
    except InvariantViolation:
        raise
    except NotChordal as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (InputError, CoxisoError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
