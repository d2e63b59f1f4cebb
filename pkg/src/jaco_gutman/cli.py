"""Command-line interface.

Subcommands: build, gutman, wiener, recursion-check, joint, sequences,
erratum.  Exit codes: 0 success, 1 usage error (bad flags, unknown names,
out-of-range anchors), 2 domain error (disconnected graph where an index
needs connectivity, failed structural precondition, mismatched audit).

All output is deterministic; the only randomized piece, the non-trivial
anchor audit inside `erratum`, draws from a seeded generator (--seed,
default 0).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import serialize
from .edge_joint import anchor_audit, joint_check, joint_delta_report
from .graph_core import DisconnectedGraphError, gutman_index, wiener_index
from .jaco import LinearFunction, build_jaco
from .recursion import StructureAssumptionViolated, recursion_delta_report
from .sequences import SEQUENCE_NAMES, sequence_table


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 - argparse hook
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _add_function_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=_nonneg, default=1, help="slope of f(x) = mx + c (default 1)")
    parser.add_argument("--c", type=_nonneg, default=0, help="offset of f(x) = mx + c (default 0)")


def build_parser() -> _Parser:
    parser = _Parser(prog="jaco", description="Linear Jaco graphs, Gutman index, formula audits")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="construct a graph and serialize it")
    _add_function_flags(p)
    p.add_argument("--n", type=_positive, required=True, help="graph order")
    p.add_argument("--format", choices=("dot", "json", "csv"), default="json")
    p.add_argument("--directed", action="store_true", help="emit arcs instead of undirected edges (dot)")
    p.add_argument("--out", type=Path, help="write to this file instead of stdout")
    p.set_defaults(func=_cmd_build)

    for name, help_text in (("gutman", "Gutman index"), ("wiener", "Wiener index")):
        p = sub.add_parser(name, help=f"print the {help_text} of the underlying graph")
        _add_function_flags(p)
        p.add_argument("--n", type=_positive, required=True, help="graph order")
        p.add_argument("--out", type=Path)
        p.set_defaults(func=_cmd_gutman if name == "gutman" else _cmd_wiener)

    p = sub.add_parser("recursion-check", help="audit the order recursion (f(x) = x)")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=_cmd_recursion_check)

    p = sub.add_parser("joint", help="compose two identity Jaco graphs and compare formulas")
    p.add_argument("--n", type=_positive, required=True, help="order of the first graph")
    p.add_argument("--m", type=_positive, required=True, help="order of the second graph")
    p.add_argument("--vi", type=_positive, default=1, help="anchor in the first graph (default 1)")
    p.add_argument("--uj", type=_positive, default=1, help="anchor in the second graph (default 1)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=_cmd_joint)

    p = sub.add_parser("sequences", help="tabulate per-order sequences")
    _add_function_flags(p)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument(
        "--which",
        default=",".join(SEQUENCE_NAMES),
        help="comma-separated subset of: " + ", ".join(SEQUENCE_NAMES),
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path, help="file for one table, directory for several")
    p.set_defaults(func=_cmd_sequences)

    p = sub.add_parser("erratum", help="run both formula audits with per-term deltas")
    p.add_argument("--n-max", type=_positive, default=20)
    p.add_argument("--m-max", type=_positive, default=10)
    p.add_argument("--seed", type=int, default=0, help="seed for the anchor audit (default 0)")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=_cmd_erratum)

    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _cmd_build(args: argparse.Namespace) -> int:
    j = build_jaco(LinearFunction(args.m, args.c), args.n)
    if args.format == "json":
        text = serialize.jaco_to_json(j)
    elif args.format == "csv":
        text = serialize.jaco_to_csv(j)
    else:
        text = serialize.jaco_to_dot(j, directed=args.directed)
    _emit(text, args.out)
    return 0


def _cmd_gutman(args: argparse.Namespace) -> int:
    j = build_jaco(LinearFunction(args.m, args.c), args.n)
    _emit(f"{gutman_index(j.underlying)}\n", args.out)
    return 0


def _cmd_wiener(args: argparse.Namespace) -> int:
    j = build_jaco(LinearFunction(args.m, args.c), args.n)
    _emit(f"{wiener_index(j.underlying)}\n", args.out)
    return 0


def _cmd_recursion_check(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    rows = recursion_delta_report(args.n_max)
    if args.format == "csv":
        text = serialize.recursion_report_csv(rows)
    else:
        text = serialize.recursion_report_json(rows)
    _emit(text, args.out)
    bad = [row.n for row in rows if not row.exact_matches_direct]
    if bad:
        print(
            f"error: exact decomposition mismatched the direct value at n={bad[0]}",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_joint(args: argparse.Namespace) -> int:
    if args.n < 2 or args.m < 2:
        raise UsageError("joint requires both orders to be at least 2")
    if args.vi > args.n:
        raise UsageError(f"--vi {args.vi} out of range 1..{args.n}")
    if args.uj > args.m:
        raise UsageError(f"--uj {args.uj} out of range 1..{args.m}")
    row = joint_check(args.n, args.m, args.vi, args.uj)
    if args.format == "csv":
        text = serialize.joint_single_csv(row)
    else:
        text = serialize.joint_single_json(row)
    _emit(text, args.out)
    return 0


def _cmd_sequences(args: argparse.Namespace) -> int:
    names = [w.strip() for w in args.which.split(",") if w.strip()]
    if not names:
        raise UsageError("--which selected no sequences")
    unknown = [w for w in names if w not in SEQUENCE_NAMES]
    if unknown:
        raise UsageError(f"unknown sequence name {unknown[0]!r}")
    f = LinearFunction(args.m, args.c)
    tables = [sequence_table(name, f, args.n_max) for name in names]
    render = serialize.sequence_to_csv if args.format == "csv" else serialize.sequence_to_json
    suffix = ".csv" if args.format == "csv" else ".json"
    if args.out is not None and len(tables) > 1:
        args.out.mkdir(parents=True, exist_ok=True)
        for table in tables:
            (args.out / f"{table.name}{suffix}").write_text(render(table))
        return 0
    if len(tables) == 1:
        _emit(render(tables[0]), args.out)
        return 0
    # several tables on one stream: comment-labeled sections
    parts = [f"# {table.name}\n{render(table)}" for table in tables]
    _emit("\n".join(parts), args.out)
    return 0


def _cmd_erratum(args: argparse.Namespace) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    if args.m_max < 2:
        raise UsageError("--m-max must be at least 2")
    recursion_rows = recursion_delta_report(args.n_max)
    joint_rows = joint_delta_report(args.n_max, args.m_max)
    anchors = anchor_audit(args.n_max, args.m_max, per_pair=5, seed=args.seed)
    anchors_ok = sum(1 for check in anchors if check.ok)
    text = (
        "# recursion audit\n"
        + serialize.recursion_report_csv(recursion_rows, per_term=True)
        + "\n# edge-joint audit\n"
        + serialize.joint_report_csv(joint_rows)
        + f"# anchor audit: {anchors_ok}/{len(anchors)} non-trivial anchor checks "
        f"passed (seed={args.seed})\n"
    )
    _emit(text, args.out)
    all_ok = (
        all(row.exact_matches_direct for row in recursion_rows)
        and all(row.closed_matches_direct for row in joint_rows)
        and anchors_ok == len(anchors)
    )
    if not all_ok:
        print("error: an audited value mismatched the direct oracle", file=sys.stderr)
        return 2
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, StructureAssumptionViolated) as exc:
        # DisconnectedGraphError subclasses ValueError and lands here too.
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))
