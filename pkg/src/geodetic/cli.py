"""Command-line front end.

Subcommands: ``solve`` (run a solver and report a witness), ``verify`` (check
a given set against a property), ``gadget`` (build a transformation), ``gen``
(emit test instances), and ``mrsm build`` (dump the colored-multigraph
reduction).  Reports are JSON by default; solver witnesses are re-verified
with the independent checker unless ``--no-verify`` is given.

Exit codes: 0 success, 2 usage, 3 parse error, 4 validation error,
5 node budget exhausted, 6 structural error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    GeodeticError,
    ParseError,
    StructuralError,
    UncoverableColorError,
    ValidationError,
    DisconnectedGraphError,
)
from .exact import Limits, default_limits, min_geodetic_decomposed, min_geodetic_set
from .gadgets import (
    apex_pair_gadget,
    pendant_gadget,
    planar_gadget,
    universal_vertex_gadget,
)
from .generators import cycle_graph, path_graph, rect_grid
from .graph import Graph, is_geodetic_set
from .grid import GridEmbedding, grid_3approx
from .io import (
    parse_graph_text,
    parse_grid_text,
    parse_rotation_text,
    write_graph_text,
    write_grid_text,
)
from .mrsm import approx_geodetic_via_mrsm, build_geodetic_mrsm, mrsm_dump
from .properties import check_property

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_BUDGET = 5
EXIT_STRUCTURAL = 6

_PROPERTY_NAMES = {
    "geodetic": "geodetic",
    "dominating": "dominating",
    "2-dominating": "two_dominating",
    "edge-dominating": "edge_dominating",
    "line-geodetic": "line_geodetic",
    "good-edge-set": "good_edge_set",
}


@dataclass
class RunReport:
    command: str
    algorithm: str
    input_vertices: int
    input_edges: int
    input_sha256: str
    size: int
    witness_vertices: list[int] | None
    witness_edges: list[tuple[int, int]] | None
    verified: bool | None
    elapsed_ms: float

    def to_dict(self) -> dict:
        payload = {
            "command": self.command,
            "algorithm": self.algorithm,
            "input": {
                "vertices": self.input_vertices,
                "edges": self.input_edges,
                "sha256": self.input_sha256,
            },
            "size": self.size,
            "verified": self.verified,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.witness_vertices is not None:
            payload["vertices"] = self.witness_vertices
        if self.witness_edges is not None:
            payload["edges"] = [list(e) for e in self.witness_edges]
        return payload


def emit_report(report: RunReport, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), sort_keys=True)
    lines = [
        f"algorithm: {report.algorithm}",
        f"input: {report.input_vertices} vertices, {report.input_edges} edges",
        f"size: {report.size}",
    ]
    if report.witness_vertices is not None:
        lines.append("vertices: " + " ".join(map(str, report.witness_vertices)))
    if report.witness_edges is not None:
        lines.append(
            "edges: " + " ".join(f"{u}-{v}" for u, v in report.witness_edges)
        )
    lines.append(f"verified: {report.verified}")
    lines.append(f"elapsed_ms: {report.elapsed_ms:.3f}")
    return "\n".join(lines)


def _fingerprint(g: Graph) -> str:
    return hashlib.sha256(write_graph_text(g).encode()).hexdigest()


def _read_input(args) -> str:
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _load_graph(args) -> tuple[Graph, GridEmbedding | None]:
    text = _read_input(args)
    if getattr(args, "input_format", "edgelist") == "grid":
        return parse_grid_text(text)
    return parse_graph_text(text), None


def _parse_vertex_set(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


def _parse_edge_set(text: str) -> list[tuple[int, int]]:
    edges = []
    for tok in text.replace(",", " ").split():
        a, sep, b = tok.partition("-")
        if not sep:
            raise ValidationError(f"edge token {tok!r} must look like 'u-v'")
        edges.append((int(a), int(b)))
    return edges


def _cmd_solve(args) -> int:
    g, emb = _load_graph(args)
    limits = Limits(max_nodes=args.budget) if args.budget else default_limits()
    t0 = time.perf_counter()
    if args.method == "exact":
        result = min_geodetic_set(g, limits)
    elif args.method == "decomposed":
        result = min_geodetic_decomposed(g, limits)
    elif args.method == "mrsm-exact":
        result = approx_geodetic_via_mrsm(g, "exact", limits)
    elif args.method == "mrsm-greedy":
        result = approx_geodetic_via_mrsm(g, "greedy", limits)
    else:
        result = grid_3approx(g, emb, check=not args.no_verify)
    elapsed_ms = (time.perf_counter() - t0) * 1000
    verified = None
    if not args.no_verify:
        verified = is_geodetic_set(g, result.witness)
    report = RunReport(
        command=" ".join(args.argv),
        algorithm=args.method,
        input_vertices=g.n,
        input_edges=g.edge_count,
        input_sha256=_fingerprint(g),
        size=result.size,
        witness_vertices=sorted(result.witness),
        witness_edges=None,
        verified=verified,
        elapsed_ms=elapsed_ms,
    )
    print(emit_report(report, args.output))
    return EXIT_OK


def _cmd_verify(args) -> int:
    g, _ = _load_graph(args)
    prop = _PROPERTY_NAMES[args.property]
    t0 = time.perf_counter()
    if prop == "geodetic":
        members = _parse_vertex_set(args.set)
        ok = is_geodetic_set(g, members)
        witness_vertices, witness_edges = sorted(set(members)), None
    elif prop in ("dominating", "two_dominating"):
        members = _parse_vertex_set(args.set)
        ok = check_property(g, prop, members)
        witness_vertices, witness_edges = sorted(set(members)), None
    else:
        edges = _parse_edge_set(args.set)
        ok = check_property(g, prop, edges)
        witness_vertices = None
        witness_edges = sorted({(min(e), max(e)) for e in edges})
    elapsed_ms = (time.perf_counter() - t0) * 1000
    report = RunReport(
        command=" ".join(args.argv),
        algorithm=f"verify:{args.property}",
        input_vertices=g.n,
        input_edges=g.edge_count,
        input_sha256=_fingerprint(g),
        size=len(witness_vertices if witness_edges is None else witness_edges),
        witness_vertices=witness_vertices,
        witness_edges=witness_edges,
        verified=ok,
        elapsed_ms=elapsed_ms,
    )
    print(emit_report(report, args.output))
    return EXIT_OK


def _cmd_gadget(args) -> int:
    g, _ = _load_graph(args)
    if args.kind == "planar":
        if not args.rotation:
            raise ValidationError("--rotation is required for the planar gadget")
        with open(args.rotation, "r", encoding="utf-8") as fh:
            rot = parse_rotation_text(fh.read(), g)
        out = planar_gadget(g, rot)
    elif args.kind == "pendant":
        out = pendant_gadget(g)
    elif args.kind == "apex-pair":
        out = apex_pair_gadget(g)
    else:
        out = universal_vertex_gadget(g)
    graph_text = write_graph_text(out.graph)
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(graph_text)
    payload = {
        "command": " ".join(args.argv),
        "kind": args.kind,
        "input": {"vertices": g.n, "edges": g.edge_count, "sha256": _fingerprint(g)},
        "output": {
            "vertices": out.graph.n,
            "edges": out.graph.edge_count,
            "sha256": _fingerprint(out.graph),
        },
        "name_map": dict(sorted(out.name_map.items())),
        "aux_edge_sets": {
            k: sorted(list(e) for e in v) for k, v in out.aux_edge_sets.items()
        },
        "graph": graph_text,
    }
    print(json.dumps(payload, sort_keys=True))
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.kind == "rect":
        w, sep, h = args.size.lower().partition("x")
        if not sep:
            raise ValidationError("rect size must look like WxH, e.g. 3x2")
        g, emb = rect_grid(int(w), int(h))
        sys.stdout.write(write_grid_text(emb) if args.grid else write_graph_text(g))
        return EXIT_OK
    n = int(args.size)
    g = path_graph(n) if args.kind == "path" else cycle_graph(n)
    sys.stdout.write(write_graph_text(g))
    return EXIT_OK


def _cmd_mrsm(args) -> int:
    if args.action != "build":
        raise ValidationError(f"unknown mrsm action {args.action!r}")
    g, _ = _load_graph(args)
    sys.stdout.write(mrsm_dump(build_geodetic_mrsm(g)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geodetic", description="Geodetic set toolkit"
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_io(p, grid_ok=True):
        p.add_argument("--input", "-i", help="input file (default: stdin)")
        if grid_ok:
            p.add_argument(
                "--input-format",
                choices=("edgelist", "grid"),
                default="edgelist",
                help="input file format",
            )
        p.add_argument(
            "--output", choices=("json", "text"), default="json",
            help="report format",
        )

    p = sub.add_parser("solve", help="compute a geodetic set")
    p.add_argument(
        "--method",
        required=True,
        choices=("exact", "decomposed", "mrsm-exact", "mrsm-greedy", "grid"),
    )
    p.add_argument("--no-verify", action="store_true", help="skip the checker re-run")
    p.add_argument("--budget", type=int, help="search node budget override")
    add_io(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a set against a property")
    p.add_argument("--property", required=True, choices=sorted(_PROPERTY_NAMES))
    p.add_argument(
        "--set",
        required=True,
        help="vertex ids '0,3' or edges '0-1,2-3' depending on the property",
    )
    add_io(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gadget", help="build a gadget graph")
    p.add_argument(
        "--kind", required=True, choices=("planar", "pendant", "apex-pair", "universal")
    )
    p.add_argument("--rotation", help="rotation-system file (planar gadget)")
    p.add_argument("--graph-out", help="also write the gadget graph to this file")
    add_io(p)
    p.set_defaults(func=_cmd_gadget)

    p = sub.add_parser("gen", help="generate a test instance")
    p.add_argument("--kind", required=True, choices=("rect", "path", "cycle"))
    p.add_argument("--size", required=True, help="WxH for rect, N otherwise")
    p.add_argument(
        "--grid", action="store_true", help="emit grid format (rect only)"
    )
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("mrsm", help="colored-multigraph reduction commands")
    p.add_argument("action", choices=("build",))
    add_io(p)
    p.set_defaults(func=_cmd_mrsm)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = ["geodetic"] + argv
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except StructuralError as exc:
        print(f"structural error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL
    except (ValidationError, DisconnectedGraphError, UncoverableColorError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except GeodeticError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
