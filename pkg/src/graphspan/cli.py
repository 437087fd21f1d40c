"""``graphspan`` command line.

Exit status: 0 on success, 1 when the input violates a precondition (e.g. a
disconnected graph, or a walk pair that fails validation), 2 on parse errors
and bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .graph import GraphError, ParseError, parse_edge_list, radius, _require_connected
from .oracle import OracleLimitError, oracle_span
from .rules import Goal, MoveRules
from .solver import SpanResult, all_spans, exists_safe_walk, find_witness, span
from .witness import WalkError, WalkPair, WitnessComponent, validate_walk_pair

EXIT_OK, EXIT_PRECONDITION, EXIT_PARSE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphspan", description="Spans of connected graphs: the largest safety distance two players can keep.")
    parser.add_argument("command", choices=["span", "exists", "all", "validate", "oracle"])
    parser.add_argument("--input", "-i", help="edge-list file (default: stdin)")
    parser.add_argument("--rules", choices=[r.value for r in MoveRules], default=MoveRules.TRADITIONAL.value)
    parser.add_argument("--goal", choices=[g.value for g in Goal], default=Goal.VERTEX.value)
    parser.add_argument("--distance", "-d", type=int, help="required safety distance (exists, validate)")
    parser.add_argument("--witness", metavar="PATH.dot", help="write the witness component as DOT")
    parser.add_argument("--walk", metavar="PATH.json", help='walk pair for validate: {"alice": [...], "bob": [...]}')
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--linear", action="store_true", help="scan distances downward from the radius instead of binary search")
    return parser


def _witness_json(H, w: WitnessComponent | None):
    if w is None:
        return None
    return {"pairs": w.labeled_pairs(H), "epsilon": w.epsilon}


def _span_json(H, res: SpanResult) -> dict:
    return {
        "graph": {"n": H.n, "m": H.edge_count},
        "rules": res.rules.value,
        "goal": res.goal.value,
        "span": res.value,
        "radius": res.radius,
        "witness": _witness_json(H, res.witness),
    }


def _witness_text(w: WitnessComponent | None) -> str:
    if w is None:
        return "witness: none"
    return f"witness: {len(w.pairs)} pairs, {len(w.edges)} edges in the {w.product_kind.value} product, epsilon {w.epsilon}"


def _write_dot(path, H, w):
    if path and w is not None:
        Path(path).write_text(w.to_dot(H), encoding="utf-8")


def run(argv: list[str] | None = None, stdout=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stdin = stdin or sys.stdin
    args = build_parser().parse_args(argv)

    def emit(text):
        print(text, file=stdout)

    def fail(code, msg):
        print(f"graphspan: {msg}", file=sys.stderr)
        return code

    if args.command == "exists" and args.distance is None:
        return fail(EXIT_PARSE, "exists requires --distance")
    if args.command == "validate" and args.walk is None:
        return fail(EXIT_PARSE, "validate requires --walk")

    try:
        text = Path(args.input).read_text(encoding="utf-8") if args.input else stdin.read()
        H = parse_edge_list(text)
    except ParseError as exc:
        return fail(EXIT_PARSE, f"parse error: {exc}")
    except OSError as exc:
        return fail(EXIT_PARSE, str(exc))

    rules, goal = MoveRules(args.rules), Goal(args.goal)
    try:
        dist = _require_connected(H)
        if args.command == "span":
            res = span(H, rules, goal, dist, linear=args.linear)
            _write_dot(args.witness, H, res.witness)
            if args.json:
                emit(json.dumps(_span_json(H, res)))
            else:
                emit(str(res.value))
                emit(_witness_text(res.witness))
        elif args.command == "exists":
            ok = exists_safe_walk(H, args.distance, rules, goal, dist)
            w = find_witness(H, args.distance, rules, goal, dist) if ok and args.distance >= 1 else None
            _write_dot(args.witness, H, w)
            if args.json:
                emit(json.dumps({
                    "graph": {"n": H.n, "m": H.edge_count},
                    "rules": rules.value,
                    "goal": goal.value,
                    "distance": args.distance,
                    "exists": ok,
                    "radius": radius(H, dist),
                    "witness": _witness_json(H, w),
                }))
            else:
                emit("true" if ok else "false")
        elif args.command == "all":
            results = all_spans(H, linear=args.linear)
            if args.json:
                emit(json.dumps([_span_json(H, r) for r in results]))
            else:
                emit(_table(results))
        elif args.command == "oracle":
            value = oracle_span(H, rules, goal, dist)
            if args.json:
                emit(json.dumps({
                    "graph": {"n": H.n, "m": H.edge_count},
                    "rules": rules.value,
                    "goal": goal.value,
                    "span": value,
                    "radius": radius(H, dist),
                    "witness": None,
                }))
            else:
                emit(str(value))
        else:
            data = json.loads(Path(args.walk).read_text(encoding="utf-8"))
            wp = WalkPair.from_json(H, data)
            report = validate_walk_pair(H, wp, rules, goal, args.distance or 0, dist)
            if args.json:
                emit(json.dumps({
                    "valid": report.valid,
                    "weak_hom_ok": list(report.weak_hom_ok),
                    "rules_ok": report.rules_ok,
                    "coverage_ok": report.coverage_ok,
                    "min_distance": report.min_distance,
                    "first_violation": list(report.first_violation) if report.first_violation else None,
                }))
            else:
                emit("valid" if report.valid else "invalid")
                emit(f"min distance: {report.min_distance}")
                if report.first_violation:
                    step, reason = report.first_violation
                    emit(f"first violation at step {step}: {reason}")
                if not report.coverage_ok:
                    emit("coverage incomplete")
            if not report.valid:
                return EXIT_PRECONDITION
    except (json.JSONDecodeError, OSError) as exc:
        return fail(EXIT_PARSE, str(exc))
    except (GraphError, WalkError, OracleLimitError) as exc:
        return fail(EXIT_PRECONDITION, str(exc))
    return EXIT_OK


_ROW_NAMES = {
    MoveRules.TRADITIONAL: "strong (traditional)",
    MoveRules.ACTIVE: "direct (active)",
    MoveRules.LAZY: "cartesian (lazy)",
}


def _table(results) -> str:
    by = {(r.rules, r.goal): r.value for r in results}
    lines = [f"{'':22}{'vertex':>8}{'edge':>8}"]
    for rules in MoveRules:
        lines.append(f"{_ROW_NAMES[rules]:22}{by[rules, Goal.VERTEX]:>8}{by[rules, Goal.EDGE]:>8}")
    return "\n".join(lines)


def main() -> None:
    sys.exit(run())

