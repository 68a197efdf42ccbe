"""Graph and certificate file formats.

Graphs: a text format (first line ``n m``, then one ``u v`` line per edge,
0-based, ``#`` comments) and a JSON mirror ``{"n": ..., "edges": [[u, v],
...], "labels": {...}}``.  Serialization is canonical (sorted edges), so
round-tripping normalizes any input.

Certificates: JSON documents bound to the host graph by a content hash.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Any

from .chordality import BadMinorCertificate
from .complexes import SimplicialComplex
from .errors import InvalidGraph, ParseError
from .graphs import Graph
from .hypergraphs import MinorSpec
from .shelling import ShellingCertificate


def parse_graph_text(text: str) -> Graph:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty graph description")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    seen = set()
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {line!r}") from exc
        _check_edge(n, u, v, seen)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _check_edge(n: int, u: int, v: int, seen: set) -> None:
    if u == v:
        raise InvalidGraph(f"loop edge {u} {v}")
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidGraph(f"edge {u} {v} out of range for n={n}")
    key = (min(u, v), max(u, v))
    if key in seen:
        raise InvalidGraph(f"duplicate edge {u} {v}")
    seen.add(key)


def parse_graph_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("JSON graph needs 'n' and 'edges'")
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise ParseError("'n' must be a nonnegative integer")
    seen = set()
    edges = []
    for e in doc["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise ParseError(f"bad edge {e!r}")
        u, v = e
        _check_edge(n, u, v, seen)
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_graph(source: str | Path) -> Graph:
    """Parse a graph from a path, or from literal text/JSON content."""
    if isinstance(source, Path):
        text = source.read_text()
    elif "\n" not in source and Path(source).is_file():
        text = Path(source).read_text()
    else:
        text = source
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_digest(g: Graph) -> str:
    return hashlib.sha256(serialize_graph(g).encode()).hexdigest()


def shelling_certificate_doc(
    g: Graph, r: int, cert: ShellingCertificate
) -> dict[str, Any]:
    return {
        "kind": "shelling_order",
        "host_sha256": graph_digest(g),
        "r": r,
        "order": [sorted(f) for f in cert.order],
        "verified": cert.verified,
    }


def bad_minor_certificate_doc(
    g: Graph, r: int, cert: BadMinorCertificate
) -> dict[str, Any]:
    return {
        "kind": "bad_minor",
        "host_sha256": graph_digest(g),
        "r": r,
        "deleted": sorted(cert.spec.deleted),
        "contracted": sorted(cert.spec.contracted),
        "minor_vertices": sorted(cert.minor_vertices),
        "minor_edges": sorted(sorted(e) for e in cert.minor_edges),
    }


def exhausted_search_doc(g: Graph, r: int, kind: str, detail: dict) -> dict[str, Any]:
    """Record of a refutation finished by exhaustive search (no positive
    certificate exists for these)."""
    doc = {"kind": "exhausted_search", "host_sha256": graph_digest(g), "r": r}
    doc.update({"search": kind, **detail})
    return doc


def write_certificate(path: str | Path, doc: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def read_certificate(path: str | Path) -> dict[str, Any]:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad certificate JSON: {exc}") from exc
    if "kind" not in doc:
        raise ParseError("certificate lacks 'kind'")
    return doc


def certificate_to_shelling(doc: dict[str, Any]) -> ShellingCertificate:
    return ShellingCertificate(
        tuple(frozenset(f) for f in doc["order"]), bool(doc.get("verified"))
    )


def certificate_to_bad_minor(doc: dict[str, Any]) -> BadMinorCertificate:
    return BadMinorCertificate(
        MinorSpec(frozenset(doc["deleted"]), frozenset(doc["contracted"])),
        frozenset(doc["minor_vertices"]),
        frozenset(frozenset(e) for e in doc["minor_edges"]),
    )
