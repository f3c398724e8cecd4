"""Command line: ``linedraw {recognize,constraints,solve,verify,draw} FILE ...``.

Exit codes: 0 success / drawable / valid, 1 negative answer, 2 parse or usage
error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Dict, List, Optional

from .core import Drawing, as_fraction, matrix_from_graph, permute
from .instance import InstanceFile, ParseError, parse_instance
from .polyhedron import build_constraints
from .robinson import DEFAULT_CAP, InstanceTooLarge, recognize
from .svg import number_line_svg
from .verify import (DEFAULT_BUDGET, DRAWABLE, EXHAUSTIVE, FIRST, INCONCLUSIVE, NOT_DRAWABLE,
                     SolveReport, is_valid_drawing, solve_scfe)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
VERDICT_EXIT = {DRAWABLE: EXIT_OK, NOT_DRAWABLE: EXIT_NO, INCONCLUSIVE: EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="linedraw", description="Valid distance drawings of weighted graphs on the line.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, cap=True):
        sp.add_argument("file", help="instance file (matrix or edge list); '-' for stdin")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if cap:
            sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                            help="vertex limit for exponential search (default %(default)s)")

    sp = sub.add_parser("recognize", help="find a Robinson ordering")
    common(sp)
    sp = sub.add_parser("constraints", help="dump the restriction system")
    common(sp)
    for name, text in (("solve", "decide drawability"), ("draw", "solve and write an SVG number line")):
        sp = sub.add_parser(name, help=text)
        common(sp)
        sp.add_argument("--exhaustive", action="store_true",
                        help="try Robinson orderings until one is feasible (default for incomplete graphs)")
        sp.add_argument("--first", action="store_true", help="try a single Robinson ordering only")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="maximum orderings enumerated in exhaustive mode (default %(default)s)")
        sp.add_argument("--scale-int", action="store_true",
                        help="multiply coordinates by the LCM of their denominators")
        if name == "draw":
            sp.add_argument("-o", "--output", required=True, help="SVG output path")
    sp = sub.add_parser("verify", help="check a drawing")
    common(sp, cap=False)
    sp.add_argument("--coords", required=True,
                    help="'a=0,b=1/2,...', a JSON object, or a JSON file such as 'solve --json' output")
    return p


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=None))
    elif text:
        print(text)


def _labels_of(order, labels):
    return [labels[v] for v in order]


def _coords_out(d: Drawing, labels, scale_int=False) -> Dict[str, str]:
    xs = d.coords
    if scale_int:
        lcm = 1
        for x in xs.values():
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        xs = {v: x * lcm for v, x in xs.items()}
    return {labels[v]: str(xs[v]) for v in sorted(xs, key=xs.__getitem__)}


def cmd_recognize(args, inst: InstanceFile) -> int:
    a = matrix_from_graph(inst.graph)
    rec = recognize(a, args.cap)
    if rec.found:
        order = _labels_of(rec.ordering, inst.labels)
        _emit(args, {"robinsonian": True, "ordering": order, "method": rec.method}, " ".join(order))
        return EXIT_OK
    _emit(args, {"robinsonian": False, "ordering": None, "method": rec.method}, "not Robinsonian")
    return EXIT_NO


def cmd_constraints(args, inst: InstanceFile) -> int:
    a = matrix_from_graph(inst.graph)
    rec = recognize(a, args.cap)
    if not rec.found:
        _emit(args, {"robinsonian": False, "constraints": None}, "not Robinsonian")
        return EXIT_NO
    system = build_constraints(permute(a, rec.ordering))
    order = _labels_of(rec.ordering, inst.labels)
    header = "# ordering: " + " ".join(f"x{i}={lab}" for i, lab in enumerate(order))
    payload = {"ordering": order, "epsilon": str(system.epsilon),
               "constraints": [c.format(system.epsilon) for c in system.constraints]}
    _emit(args, payload, header + "\n" + system.dump())
    return EXIT_OK


def report_payload(report: SolveReport, labels, scale_int=False) -> dict:
    ordering = report.ordering
    payload = {
        "verdict": report.verdict,
        "ordering": _labels_of(ordering, labels) if ordering is not None else None,
        "coords": _coords_out(report.drawing, labels, scale_int) if report.drawing is not None else None,
        "certificate": None,
        "violations": [],
        "attempts": [{"ordering": _labels_of(a.ordering, labels), "feasible": a.result.feasible}
                     for a in report.attempts],
        "reason": report.reason,
    }
    if report.verdict == NOT_DRAWABLE and report.attempts:
        att = report.attempts[0]
        payload["certificate"] = [
            {"multiplier": str(y), "constraint": att.system.constraints[r].format(att.system.epsilon)}
            for r, y in att.result.certificate.support()]
    return payload


def _report_text(payload) -> str:
    lines = [f"verdict: {payload['verdict']}"]
    if payload["reason"]:
        lines.append(f"reason: {payload['reason']}")
    if payload["ordering"]:
        lines.append("ordering: " + " ".join(f"x{i}={lab}" for i, lab in enumerate(payload["ordering"])))
    if payload["coords"]:
        lines.append("coords:")
        lines.extend(f"  {lab} {x}" for lab, x in payload["coords"].items())
    if payload["certificate"]:
        lines.append("certificate (these rows, weighted and summed, give 0 <= negative):")
        lines.extend(f"  {c['multiplier']} * [ {c['constraint']} ]" for c in payload["certificate"])
    return "\n".join(lines)


def _solve(args, inst):
    if args.exhaustive and args.first:
        raise UsageError("--exhaustive and --first are mutually exclusive")
    if args.budget < 1:
        raise UsageError("--budget must be positive")
    mode = EXHAUSTIVE if args.exhaustive else FIRST if args.first else None
    return solve_scfe(inst.graph, mode=mode, budget=args.budget, cap=args.cap)


def cmd_solve(args, inst: InstanceFile) -> int:
    report = _solve(args, inst)
    payload = report_payload(report, inst.labels, args.scale_int)
    _emit(args, payload, _report_text(payload))
    return VERDICT_EXIT[report.verdict]


def cmd_draw(args, inst: InstanceFile) -> int:
    report = _solve(args, inst)
    payload = report_payload(report, inst.labels, args.scale_int)
    if report.drawing is not None:
        title = os.path.basename(inst.source)
        with open(args.output, "w") as fh:
            fh.write(number_line_svg(report.drawing, inst.labels, title))
        payload["svg"] = args.output
    _emit(args, payload, _report_text(payload))
    return VERDICT_EXIT[report.verdict]


def parse_coords(spec: str, labels) -> Drawing:
    """Coordinates keyed by vertex label, given inline or as JSON (string or file)."""
    if os.path.isfile(spec):
        with open(spec) as fh:
            spec = fh.read()
    spec = spec.strip()
    if spec.startswith("{"):
        try:
            obj = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad coordinate JSON: {exc.msg}") from exc
        if isinstance(obj.get("coords"), dict):
            obj = obj["coords"]
        pairs = [(str(k), str(v)) for k, v in obj.items()]
    else:
        pairs = []
        for item in filter(None, (s.strip() for s in spec.split(","))):
            if "=" not in item:
                raise ParseError(f"coordinate {item!r} is not label=value")
            k, v = item.split("=", 1)
            pairs.append((k.strip(), v.strip()))
    index = {lab: i for i, lab in enumerate(labels)}
    coords = {}
    for k, v in pairs:
        if k not in index:
            raise ParseError(f"unknown vertex {k!r} in coordinates")
        if k in coords:
            raise ParseError(f"vertex {k!r} given twice")
        try:
            coords[k] = as_fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coordinate {v!r} for {k!r}") from exc
    missing = [lab for lab in labels if lab not in coords]
    if missing:
        raise ParseError(f"no coordinate for vertices {missing}")
    try:
        return Drawing({index[k]: x for k, x in coords.items()})
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def cmd_verify(args, inst: InstanceFile) -> int:
    d = parse_coords(args.coords, inst.labels)
    violations = is_valid_drawing(inst.graph, d)
    labels = inst.labels
    payload = {
        "valid": not violations,
        "violations": [
            {"center": labels[v.center], "nearer": labels[v.nearer], "farther": labels[v.farther],
             "heavier": str(v.heavier), "lighter": str(v.lighter),
             "near_distance": str(v.near_distance), "far_distance": str(v.far_distance)}
            for v in violations],
    }
    text = "valid" if not violations else "\n".join(
        [f"{len(violations)} violation(s):"] + ["  " + v.describe(labels) for v in violations])
    _emit(args, payload, text)
    return EXIT_OK if not violations else EXIT_NO


COMMANDS = {"recognize": cmd_recognize, "constraints": cmd_constraints, "solve": cmd_solve,
            "verify": cmd_verify, "draw": cmd_draw}


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    want_json = "--json" in argv
    try:
        args = _parser().parse_args(argv)
        inst = parse_instance(args.file)
        return COMMANDS[args.command](args, inst)
    except (UsageError, ParseError, InstanceTooLarge, OSError) as exc:
        if isinstance(exc, ParseError):
            payload = exc.as_dict()
        else:
            payload = {"error": str(exc), "line": None, "column": None}
        if want_json:
            print(json.dumps(payload))
        else:
            print(f"linedraw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: List[str]):
    """Call ``main`` capturing stdout; returns ``(exit_code, output)``."""
    import contextlib
    import io
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
