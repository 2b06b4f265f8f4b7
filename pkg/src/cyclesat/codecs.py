"""graph6 and labeled edge-list JSON serialization.

graph6 is the standard bit-packed interchange format (header byte(s) for n,
then the upper triangle column-wise in 6-bit chunks offset by 63).  It has
no label channel, so decoding yields an unlabeled graph.  The JSON format
additionally round-trips labels and construction parameters.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .graph import GraphParams, LabeledGraph, VertexLabel, make_graph

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes(
            [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
        )
    raise ParseError(f"graph6 supports at most 258047 vertices, got {n}")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError("graph6 graphs beyond 258047 vertices unsupported")
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        chunks = [b - 63 for b in data[1:4]]
        if any(c < 0 or c > 63 for c in chunks):
            raise ParseError("invalid graph6 size field")
        return (chunks[0] << 12) | (chunks[1] << 6) | chunks[2], data[4:]
    value = data[0] - 63
    if not 0 <= value <= 62:
        raise ParseError(f"invalid graph6 size byte {data[0]}")
    return value, data[1:]


def to_graph6(G: LabeledGraph) -> bytes:
    """Encode adjacency as a graph6 line (labels are not representable)."""
    bits = []
    for v in range(1, G.n):
        row = G.neighbors(v)
        for u in range(v):
            bits.append(1 if u in row else 0)
    out = bytearray(_encode_n(G.n))
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        value = 0
        for b in chunk:
            value = (value << 1) | b
        out.append(value + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> LabeledGraph:
    """Decode a graph6 line into an unlabeled graph."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER.encode("ascii")):
        data = data[len(_G6_HEADER) :]
    n, rest = _decode_n(data)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ParseError(
            f"graph6 body has {len(rest)} bytes, expected {need} for n={n}"
        )
    bits = []
    for byte in rest:
        value = byte - 63
        if not 0 <= value <= 63:
            raise ParseError(f"invalid graph6 body byte {byte}")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    if any(bits[idx:]):
        raise ParseError("nonzero padding bits in graph6 body")
    return make_graph(n, edges)


def to_edgelist_json(G: LabeledGraph) -> str:
    """Serialize adjacency plus labels and parameters as JSON."""
    doc = {
        "n": G.n,
        "params": G.params.to_dict() if G.params is not None else None,
        "labels": None,
        "edges": [[u, v] for u, v in G.edges()],
    }
    if G.labels is not None:
        doc["labels"] = [
            {"v": v, "kind": lab.kind, "block": lab.block, "member": lab.member}
            for v, lab in enumerate(G.labels)
        ]
    return json.dumps(doc, sort_keys=True)


def from_edgelist_json(text: str | bytes) -> LabeledGraph:
    try:
        doc = json.loads(text)
        n = doc["n"]
        edges = [tuple(e) for e in doc["edges"]]
        labels = None
        if doc.get("labels") is not None:
            label_map = {}
            for entry in doc["labels"]:
                label_map[entry["v"]] = VertexLabel(
                    entry["kind"], entry["block"], entry["member"]
                )
            labels = label_map
        params = None
        if doc.get("params") is not None:
            params = GraphParams.from_dict(doc["params"])
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise ParseError(f"malformed edge-list JSON: {exc}") from exc
    return make_graph(n, edges, labels, params)


def encode(G: LabeledGraph, format: str) -> bytes:
    """Serialize in the named format (``graph6`` or ``edgelist-json``)."""
    if format == "graph6":
        return to_graph6(G)
    if format == "edgelist-json":
        return to_edgelist_json(G).encode("utf-8")
    raise ParseError(f"unknown format {format!r}")


def decode(data: bytes | str, format: str) -> LabeledGraph:
    if format == "graph6":
        return from_graph6(data)
    if format == "edgelist-json":
        return from_edgelist_json(data)
    raise ParseError(f"unknown format {format!r}")
