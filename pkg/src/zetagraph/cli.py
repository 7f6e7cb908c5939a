"""Command-line front end.

Data goes to stdout (or the --out file) as CSV; diagnostics go to stderr.
Exit codes: 0 success, 1 validation or usage failure, 2 route
disagreement, 3 I/O or parse failure, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .cycles import (
    DEFAULT_LENGTH_CAP,
    edge_sequence_label,
    euler_product,
    prime_cycles,
)
from .errors import GraphFormatError, GraphValidationError, ResourceCapError
from .families import convergence_study, make_source, study_csv_lines, truncate_source
from .graph import (
    WeightedGraph,
    _load_document,
    graph_stats,
    parse_graph,
    serialize_graph,
)
from .routes import (
    ROUTE_BUILDERS,
    cross_validate,
    poles_csv_lines,
    spectrum_poles,
    zeta_bass,
    zeta_partial_formula,
)
from .series import _fmt, csv_lines
from .twist import lfunction, load_local_system

MAX_ORDER = 64


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; that code means route disagreement
    here, so usage problems are remapped to the validation exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="zetagraph", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_order(sp, default=12):
        sp.add_argument("--order", type=int, default=default, metavar="M",
                        help=f"truncation order, 1..{MAX_ORDER} (default {default})")

    sp = sub.add_parser("coeffs", help="reciprocal zeta series by one route")
    sp.add_argument("file")
    add_order(sp)
    sp.add_argument("--route", default="fredholm",
                    choices=["oracle", "fredholm", "sunada", "bass", "partial", "classical"])
    sp.add_argument("--variant", default=None,
                    help="bass: corrected|as-printed; partial: W|w-squared")

    sp = sub.add_parser("check", help="cross-validate all applicable routes")
    sp.add_argument("file")
    add_order(sp)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--experimental", action="store_true",
                    help="include the partial-product route for asymmetric flag sets")

    sp = sub.add_parser("primes", help="cycle classes up to a length bound")
    sp.add_argument("file")
    sp.add_argument("--max-len", type=int, default=12, metavar="L")

    sp = sub.add_parser("poles", help="poles of the zeta function")
    sp.add_argument("file")

    sp = sub.add_parser("lfun", help="L-function of the file's local system")
    sp.add_argument("file")
    add_order(sp)
    sp.add_argument("--route", default="determinant", choices=["oracle", "determinant"])

    sp = sub.add_parser("family", help="materialize or study a built-in family")
    sp.add_argument("--name", required=True)
    sp.add_argument("--r", type=float, required=True)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--epsilon", type=float, default=None,
                     help="truncate at the smallest K with tail weight <= epsilon")
    grp.add_argument("--blocks", type=int, default=None, metavar="K",
                     help="truncate at block K exactly")
    sp.add_argument("--out", default=None, metavar="FILE",
                    help="write the truncated graph file here")
    sp.add_argument("--study", type=int, default=None, metavar="KMAX",
                    help="emit coefficient-delta CSV for truncations 0..KMAX")
    add_order(sp)

    sp = sub.add_parser("stats", help="structural statistics of a graph file")
    sp.add_argument("file")
    return p


def _read_graph(path: str) -> tuple[WeightedGraph, dict]:
    text = Path(path).read_text()
    g = parse_graph(text)
    return g, _load_document(text)


def _check_order(M: int) -> None:
    if not (1 <= M <= MAX_ORDER):
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {M}")


def _emit(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _cmd_coeffs(args) -> int:
    g, _ = _read_graph(args.file)
    _check_order(args.order)
    if args.route == "oracle":
        if args.variant is not None:
            raise ValueError("the oracle route takes no variant")
        series = euler_product(g, args.order, cap=max(args.order, DEFAULT_LENGTH_CAP))
    elif args.route == "bass":
        series = zeta_bass(g, args.order, args.variant or "corrected").series
    elif args.route == "partial":
        series = zeta_partial_formula(g, args.order, args.variant or "W").series
    else:
        if args.variant is not None:
            raise ValueError(f"the {args.route} route takes no variant")
        series = ROUTE_BUILDERS[args.route](g, args.order).series
    _emit(csv_lines(series))
    return 0


def _cmd_check(args) -> int:
    g, _ = _read_graph(args.file)
    _check_order(args.order)
    report = cross_validate(g, args.order, include_experimental=args.experimental,
                            tol=args.tol)
    for flag in report.flags:
        print(f"note: {flag}", file=sys.stderr)
    _emit(report.csv_lines())
    return 0 if report.all_agree else 2


def _cmd_primes(args) -> int:
    g, _ = _read_graph(args.file)
    records = prime_cycles(g, args.max_len, cap=max(args.max_len, DEFAULT_LENGTH_CAP))
    lines = ["length,weight,primitive_length,is_prime,edge_sequence"]
    for rec in records:
        flag = "true" if rec.is_prime else "false"
        lines.append(
            f"{rec.length},{_fmt(rec.weight)},{rec.primitive_length},{flag},"
            f"{edge_sequence_label(rec.edges)}"
        )
    _emit(lines)
    return 0


def _cmd_poles(args) -> int:
    g, _ = _read_graph(args.file)
    _emit(poles_csv_lines(spectrum_poles(g)))
    return 0


def _cmd_lfun(args) -> int:
    g, document = _read_graph(args.file)
    _check_order(args.order)
    system = load_local_system(document, g)
    if system is None:
        raise ValueError("graph file has no local_system block")
    series = lfunction(g, system, args.order, route=args.route)
    _emit(csv_lines(series))
    return 0


def _cmd_family(args) -> int:
    source = make_source(args.name, args.r)
    _check_order(args.order)
    if args.study is None and args.out is None:
        raise ValueError("family needs --out FILE, --study KMAX, or both")
    if args.out is not None:
        if args.blocks is not None:
            graph = source.block(args.blocks)
            tail = source.tail_weight(args.blocks)
            K = args.blocks
        else:
            epsilon = args.epsilon if args.epsilon is not None else 1e-3
            graph, tail = truncate_source(source, epsilon)
            K = (len(graph.edges) - 1) // 4 if args.name == "triangle-chain" else None
        Path(args.out).write_text(serialize_graph(graph) + "\n")
        note = f"wrote {args.out}: {len(graph.vertices)} vertices, tail weight {tail!r}"
        if K is not None:
            note += f", blocks 0..{K}"
        print(note, file=sys.stderr)
    if args.study is not None:
        rows = convergence_study(source, args.study, args.order)
        _emit(study_csv_lines(rows))
    return 0


def _cmd_stats(args) -> int:
    g, _ = _read_graph(args.file)
    st = graph_stats(g)
    lines = ["key,value"]
    lines.append(f"vertex_count,{st.vertex_count}")
    lines.append(f"unoriented_edge_count,{st.edge_count}")
    lines.append(f"oriented_edge_count,{2 * st.edge_count}")
    lines.append(f"euler_number,{st.euler_number}")
    lines.append(f"total_weight,{_fmt(st.total_weight)}")
    lines.append(f"valency_bound,{st.valency_bound}")
    lines.append(f"girth_lower_bound,{st.girth_lower_bound}")
    lines.append(f"backtrack_flag_count,{len(g.backtrack)}")
    sym = "true" if (g.backtrack and g.has_symmetric_backtrack()) else (
        "empty" if not g.backtrack else "false")
    lines.append(f"backtrack_symmetric,{sym}")
    for pair in sorted(st.W_per_edge, key=lambda s: sorted(s)):
        u, v = sorted(pair)
        lines.append(f"roundtrip_weight[{u}-{v}],{_fmt(st.W_per_edge[pair])}")
    _emit(lines)
    return 0


_COMMANDS = {
    "coeffs": _cmd_coeffs,
    "check": _cmd_check,
    "primes": _cmd_primes,
    "poles": _cmd_poles,
    "lfun": _cmd_lfun,
    "family": _cmd_family,
    "stats": _cmd_stats,
}


def _thread_cap() -> int:
    """The ZETAGRAPH_THREADS contract: 0 means auto, n >= 1 caps worker
    count.  Computation here is single-threaded, which satisfies any cap;
    the variable is still validated so misconfigurations surface."""
    raw = os.environ.get("ZETAGRAPH_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ZETAGRAPH_THREADS must be a nonnegative integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"ZETAGRAPH_THREADS must be >= 0, got {value}")
    return value


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _thread_cap()
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except GraphValidationError as exc:
        for code, msg in exc.report.entries:
            print(f"invalid graph [{code}]: {msg}", file=sys.stderr)
        return 1
    except (GraphFormatError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 4
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
