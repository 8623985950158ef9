"""Graph documents (JSON) and sign-system text files."""

from __future__ import annotations

import json

from .graph import Graph, GraphError
from .signs import SignSystem, SignSystemError, to_string


class FormatError(ValueError):
    pass


def parse_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed graph document: {exc}") from exc
    if not isinstance(doc, dict) or not {"n", "edges"} <= doc.keys():
        raise FormatError("graph document needs keys 'n' and 'edges'")
    n, edges = doc["n"], doc["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or not isinstance(edges, list):
        raise FormatError("'n' must be an integer and 'edges' a list")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e)):
            raise FormatError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("'name' must be a string")
    try:
        return Graph(n, pairs, name=name)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def serialize_graph(g: Graph) -> str:
    doc = {"name": g.name or "", "n": g.n, "edges": [list(e) for e in g.edges]}
    return json.dumps(doc) + "\n"


def parse_system(text: str) -> SignSystem:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("ground "):
        raise FormatError("sign system must start with 'ground <k>'")
    try:
        k = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise FormatError("bad ground line") from exc
    body = lines[1:]
    names = None
    if body and body[0].startswith("elements"):
        names = body[0].split()[1:]
        if len(names) != k:
            raise FormatError(f"expected {k} element names")
        body = body[1:]
    value = {"+": 1, "-": -1, "0": 0}
    rows = []
    seen = set()
    for ln in body:
        if len(ln) != k:
            raise FormatError(f"covector {ln!r} does not have length {k}")
        bad = set(ln) - value.keys()
        if bad:
            raise FormatError(f"illegal character {sorted(bad)[0]!r} in {ln!r}")
        if ln in seen:
            raise FormatError(f"duplicate covector {ln!r}")
        seen.add(ln)
        rows.append([value[c] for c in ln])
    try:
        return SignSystem(k, rows, names)
    except SignSystemError as exc:
        raise FormatError(str(exc)) from exc


def serialize_system(s: SignSystem) -> str:
    out = [f"ground {s.ground_size}"]
    if s.element_names:
        out.append("elements " + " ".join(s.element_names))
    out.extend(to_string(row) for row in s.covectors)
    return "\n".join(out) + "\n"
