"""Command-line entry point.

Exit codes: 0 success, 1 check failed, 2 not applicable, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from pathlib import Path
from typing import Any

from . import cells as cellmod
from . import generators as gen
from . import harness
from .graph import Graph, GraphError
from .io import FormatError, parse_graph, parse_system, serialize_graph, serialize_system
from .mediangle import is_bipartite_mediangle
from .order import is_apiculate
from .partial_cube import NotAPartialCube, enumerate_convex_cycles, recognize_partial_cube
from .signs import (
    SignSystemError,
    check_axioms,
    face_lattice,
    is_simplicial_om,
    to_string,
    topes_and_graph,
    zone_graph,
)

OK, FAILED, NOT_APPLICABLE, USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


def _emit(obj: Any, out) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _graph(path: str) -> Graph:
    return parse_graph(_read(path))


def _normals(text: str) -> list[list[int]]:
    try:
        return [[int(v) for v in row.split(",")] for row in text.split(";") if row.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --normals {text!r}") from exc


def _status_code(rep: harness.VerdictReport) -> int:
    return {harness.PASS: OK, harness.FAIL: FAILED, harness.NOT_APPLICABLE: NOT_APPLICABLE}[rep.status]


# ---------------------------------------------------------------- commands


GRAPH_FAMILIES = {
    "hypercube": (1, lambda p, seed: gen.hypercube(p[0])),
    "cycle": (1, lambda p, seed: gen.cycle(p[0])),
    "even-cycle": (1, lambda p, seed: gen.even_cycle(p[0])),
    "path": (1, lambda p, seed: gen.path(p[0])),
    "grid": (2, lambda p, seed: gen.grid(p[0], p[1])),
    "complete-bipartite": (2, lambda p, seed: gen.complete_bipartite(p[0], p[1])),
    "tree": (1, lambda p, seed: gen.random_tree(p[0], seed)),
}


def cmd_generate(args, out) -> int:
    fam = args.family
    if fam in GRAPH_FAMILIES:
        arity, build = GRAPH_FAMILIES[fam]
        try:
            params = [int(v) for v in args.params]
        except ValueError as exc:
            raise UsageError("family parameters must be integers") from exc
        if len(params) != arity:
            raise UsageError(f"{fam} takes {arity} integer parameter(s)")
        out.write(serialize_graph(build(params, args.seed)))
        return OK
    if fam == "coxeter":
        if len(args.params) != 1:
            raise UsageError("coxeter takes one type such as A3, B2, I2(5) or A1xA2")
        out.write(serialize_graph(gen.coxeter_graph(args.params[0])))
        return OK
    if fam in ("arrangement", "arrangement-topes", "uniform4", "uniform4-topes"):
        if fam.startswith("uniform4"):
            spec = gen.uniform_rank3_four()
        else:
            if not args.normals:
                raise UsageError(f"{fam} needs --normals 'a,b,c;d,e,f;...'")
            spec = gen.ArrangementSpec.of(_normals(args.normals))
        system = gen.central_arrangement_system(spec)
        if fam.endswith("topes"):
            _, g = topes_and_graph(system, name=fam)
            out.write(serialize_graph(g))
        else:
            out.write(serialize_system(system))
        return OK
    raise UsageError(f"unknown family {fam!r}")


def cmd_check(args, out) -> int:
    kind = args.kind
    if kind == "partial-cube":
        res = recognize_partial_cube(_graph(args.input))
        if res.ok:
            _emit({"is_partial_cube": True, "classes": res.theta.class_count}, out)
            return OK
        if hasattr(res, "odd_cycle"):
            _emit({"is_partial_cube": False, "kind": "NotBipartite", "odd_cycle": list(res.odd_cycle)}, out)
        else:
            _emit(
                {"is_partial_cube": False, "kind": "NotPartialCube", "edge": list(res.edge),
                 "witness": list(res.witness)},
                out,
            )
        return FAILED
    if kind == "mediangle":
        verdict = is_bipartite_mediangle(_graph(args.input))
        _emit(verdict.to_dict(), out)
        return OK if verdict.is_mediangle else FAILED
    if kind == "apiculate":
        ok, apex = is_apiculate(_graph(args.input))
        doc: dict[str, Any] = {"is_apiculate": ok}
        if not ok:
            doc["witness"] = {"u": apex.basepoint, "x": apex.x, "y": apex.y, "apices": sorted(apex.apices)}
        _emit(doc, out)
        return OK if ok else FAILED
    system = parse_system(_read(args.input))
    rep = check_axioms(system)
    doc = rep.to_dict()
    if not rep.has_zero:
        doc["missing"] = to_string((0,) * system.ground_size)
    if kind == "com":
        _emit(doc, out)
        return OK if rep.is_com else FAILED
    if kind == "om":
        _emit(doc, out)
        return OK if rep.is_om else FAILED
    # simplicial
    if not rep.is_om:
        doc["simplicial"] = None
        _emit(doc, out)
        return NOT_APPLICABLE
    simp = is_simplicial_om(system)
    _emit(
        {
            "simplicial": simp.simplicial,
            "rank": simp.rank,
            "witness": None if simp.witness is None else to_string(simp.witness),
        },
        out,
    )
    return OK if simp.simplicial else FAILED


def cmd_cells(args, out) -> int:
    g = _graph(args.graph)
    cells = cellmod.enumerate_cells(g)
    system = cellmod.reconstruct_system(g, cells=cells)
    ranks = harness.cell_face_ranks(system, cells)
    census = Counter(ranks)
    _emit(
        {
            "cells": len(cells),
            "by_rank": {str(r): census[r] for r in sorted(census)},
            "euler": cellmod.euler_characteristic(cells, ranks),
        },
        out,
    )
    return OK


def cmd_reconstruct(args, out) -> int:
    out.write(serialize_system(cellmod.reconstruct_system(_graph(args.graph))))
    return OK


def cmd_verify(args, out) -> int:
    g = _graph(args.graph)
    if args.kind == "theorem1":
        rep = harness.verify_theorem1(g)
    elif args.kind == "theorem2":
        rep = harness.verify_theorem2(g)
    else:
        rep = harness.verify_lemma_suite(g, seed=args.seed)
    _emit(rep.to_dict(timing=args.timing), out)
    return _status_code(rep)


def cmd_zone(args, out) -> int:
    g = _graph(args.graph)
    res = recognize_partial_cube(g)
    if not res.ok:
        raise NotAPartialCube("zone graphs need a partial cube")
    cycles = enumerate_convex_cycles(g, res.theta)
    try:
        z = zone_graph(g, res.theta, cycles, args.cls)
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    out.write(serialize_graph(z))
    return OK


def cmd_explore(args, out) -> int:
    g = _graph(args.graph)
    if args.kind == "zone":
        if args.cls is None:
            raise UsageError("explore zone needs --class")
        rep = harness.explore_zone_mediangle(g, args.cls)
        _emit(rep.to_dict(timing=args.timing), out)
        return OK
    if args.z is not None:
        if args.u is None or args.s is None:
            raise UsageError("explore downward needs --z, --u and --s together")
        trace = [int(v) for v in args.s.split(",") if v.strip()]
        try:
            res = harness.explore_downward_cell(g, args.z, args.u, trace)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(
            {
                "z": res.z,
                "u": res.u,
                "S": sorted(res.trace),
                "found": res.found,
                "cell": sorted(res.cell.vertices) if res.found else None,
            },
            out,
        )
        return OK
    _emit({"rows": harness.explore_downward_table(g, samples=args.samples, seed=args.seed)}, out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mediangle", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=0, help="seed for all sampling")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="emit a catalog graph or sign system")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--normals", help="hyperplane normals, e.g. '1,0,0;0,1,0'")
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    g.set_defaults(run=cmd_generate)

    c = sub.add_parser("check", help="run one recognizer")
    c.add_argument("kind", choices=["partial-cube", "mediangle", "apiculate", "com", "om", "simplicial"])
    c.add_argument("input")
    c.set_defaults(run=cmd_check)

    ce = sub.add_parser("cells", help="cell census by face rank")
    ce.add_argument("graph")
    ce.set_defaults(run=cmd_cells)

    r = sub.add_parser("reconstruct", help="covector system of a partial cube")
    r.add_argument("graph")
    r.set_defaults(run=cmd_reconstruct)

    v = sub.add_parser("verify", help="verify a theorem or the lemma suite")
    v.add_argument("kind", choices=["theorem1", "theorem2", "lemmas"])
    v.add_argument("graph")
    v.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    v.add_argument("--timing", action="store_true", help="include elapsed seconds")
    v.set_defaults(run=cmd_verify)

    z = sub.add_parser("zone", help="zone graph of one Θ-class")
    z.add_argument("graph")
    z.add_argument("--class", dest="cls", type=int, required=True)
    z.set_defaults(run=cmd_zone)

    e = sub.add_parser("explore", help="exploratory probes")
    e.add_argument("kind", choices=["downward", "zone"])
    e.add_argument("graph")
    e.add_argument("--class", dest="cls", type=int)
    e.add_argument("--z", type=int)
    e.add_argument("--u", type=int)
    e.add_argument("--s", help="comma-separated neighbours of z")
    e.add_argument("--samples", type=int, default=20)
    e.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    e.add_argument("--timing", action="store_true")
    e.set_defaults(run=cmd_explore)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.run(args, out)
    except (UsageError, FormatError, GraphError, SignSystemError, gen.GeneratorError) as exc:
        err.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
