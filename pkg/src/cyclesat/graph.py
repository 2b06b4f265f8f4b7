"""Labeled graph data model.

Every graph is a simple undirected graph.  Graphs produced by the builder
additionally carry a total vertex-label map assigning each vertex a
structural class (kind, block, member); vertex ids are the ranks of the
labels under the canonical order A < B < X < Y < D < Bdup, then block,
then member, which makes every downstream output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    DuplicateLabel,
    InvalidEdge,
    InvalidVertex,
    MissingLabel,
)

KINDS = ("A", "B", "X", "Y", "D", "Bdup")
_KIND_RANK = {kind: i for i, kind in enumerate(KINDS)}


@dataclass(frozen=True)
class VertexLabel:
    """Structural role of a vertex: class kind, block index, member index."""

    kind: str
    block: int
    member: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.block < 1:
            raise ValueError("block index must be positive")
        if self.member < 0:
            raise ValueError("member index must be non-negative")
        if self.kind == "D" and self.member != 0:
            raise ValueError("D labels carry member 0")
        if self.kind == "Bdup" and self.block != 1:
            raise ValueError("duplicate vertices attach to block 1 only")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_RANK[self.kind], self.block, self.member)

    def __str__(self) -> str:
        if self.kind == "D":
            return f"D{self.block}"
        if self.kind == "Bdup":
            return f"Bdup#{self.member}"
        return f"{self.kind}{self.block}#{self.member}"

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        """Parse labels like ``A1#0``, ``D6``, ``Bdup#2``."""
        s = text.strip()
        if s.startswith("Bdup"):
            rest = s[4:]
            member = int(rest[1:]) if rest.startswith("#") else 0
            if rest and not rest.startswith("#"):
                raise ValueError(f"cannot parse label {text!r}")
            return cls("Bdup", 1, member)
        if not s or s[0] not in "ABXYD":
            raise ValueError(f"cannot parse label {text!r}")
        kind = s[0]
        body = s[1:]
        if "#" in body:
            block_s, member_s = body.split("#", 1)
            return cls(kind, int(block_s), int(member_s))
        return cls(kind, int(body), 0)


@dataclass(frozen=True)
class GraphParams:
    """Construction parameters recorded on builder outputs."""

    family: str  # "G" or "H"
    r: int | None
    k: int
    t: int | None

    def to_dict(self) -> dict:
        return {"family": self.family, "r": self.r, "k": self.k, "t": self.t}

    @classmethod
    def from_dict(cls, d: dict) -> "GraphParams":
        return cls(d.get("family", "G"), d.get("r"), d["k"], d.get("t"))


class LabeledGraph:
    """Immutable simple graph with optional structural labels."""

    __slots__ = ("n", "_adj", "_edges", "labels", "params", "_class_index", "_twin_cache")

    def __init__(self, n, adj, edges, labels=None, params=None):
        self.n = n
        self._adj = adj  # tuple of sorted tuples
        self._edges = edges  # frozenset of (u, v) with u < v
        self.labels = labels  # tuple[VertexLabel] | None
        self.params = params
        self._class_index = None
        self._twin_cache = None

    # -- queries ---------------------------------------------------------

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edges

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.n)

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if (u, v) not in self._edges
        ]

    # -- labels ----------------------------------------------------------

    @property
    def is_labeled(self) -> bool:
        return self.labels is not None

    def label_of(self, v: int) -> VertexLabel:
        if self.labels is None:
            raise MissingLabel("graph carries no labels")
        return self.labels[v]

    def vertex_of(self, label: VertexLabel) -> int:
        index = self._label_index()
        try:
            return index[label]
        except KeyError:
            raise InvalidVertex(f"no vertex labeled {label}") from None

    def _label_index(self) -> dict:
        if self._class_index is None:
            if self.labels is None:
                raise MissingLabel("graph carries no labels")
            self._class_index = {lab: v for v, lab in enumerate(self.labels)}
        return self._class_index

    def class_members(self, kind: str, block: int) -> list[int]:
        """Vertices of one (kind, block) class, in member order."""
        if self.labels is None:
            raise MissingLabel("graph carries no labels")
        members = [
            (lab.member, v)
            for v, lab in enumerate(self.labels)
            if lab.kind == kind and lab.block == block
        ]
        return [v for _, v in sorted(members)]

    def __repr__(self):
        tag = ""
        if self.params is not None:
            tag = f" params={self.params.to_dict()}"
        return f"<LabeledGraph n={self.n} m={self.edge_count}{tag}>"

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self._edges == other._edges
            and self.labels == other.labels
            and self.params == other.params
        )

    def __hash__(self):
        return hash((self.n, self._edges))


def make_graph(n, edges, labels=None, params=None) -> LabeledGraph:
    """Build a LabeledGraph from a vertex count and an edge list.

    Duplicate edges collapse; loops raise InvalidEdge; out-of-range
    endpoints raise InvalidVertex; repeated labels raise DuplicateLabel.
    """
    edge_set = set()
    for u, v in edges:
        if u == v:
            raise InvalidEdge(f"loop edge at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) outside range 0..{n - 1}")
        edge_set.add((u, v) if u < v else (v, u))

    label_tuple = None
    if labels is not None:
        if isinstance(labels, dict):
            if set(labels) != set(range(n)):
                raise MissingLabel("label map must cover every vertex")
            label_tuple = tuple(labels[v] for v in range(n))
        else:
            label_tuple = tuple(labels)
            if len(label_tuple) != n:
                raise MissingLabel("label map must cover every vertex")
        seen = set()
        for lab in label_tuple:
            key = (lab.kind, lab.block, lab.member)
            if key in seen:
                raise DuplicateLabel(f"label {lab} appears twice")
            seen.add(key)

    adj_sets = [[] for _ in range(n)]
    for u, v in edge_set:
        adj_sets[u].append(v)
        adj_sets[v].append(u)
    adj = tuple(tuple(sorted(nbrs)) for nbrs in adj_sets)
    return LabeledGraph(n, adj, frozenset(edge_set), label_tuple, params)


def induced_subgraph(G: LabeledGraph, vertices) -> tuple[LabeledGraph, dict]:
    """Induced subgraph on the given vertices plus the old->new id map."""
    verts = sorted(set(vertices))
    remap = {v: i for i, v in enumerate(verts)}
    edges = [
        (remap[u], remap[v])
        for u, v in G.edges()
        if u in remap and v in remap
    ]
    labels = None
    if G.labels is not None:
        labels = tuple(G.labels[v] for v in verts)
    return make_graph(len(verts), edges, labels), remap


@dataclass(frozen=True)
class OrbitPartition:
    """Vertex groups interchangeable under the class symmetry, plus one
    representative pair per orbit of non-edges."""

    groups: tuple[tuple[int, ...], ...]
    representatives: tuple[tuple[int, int], ...]
    _group_of: tuple[int, ...]
    _rep_index: dict

    def group_of(self, v: int) -> int:
        return self._group_of[v]

    def representative_of(self, u: int, v: int) -> tuple[int, int]:
        """Representative pair of the non-edge (u, v)'s orbit."""
        a, b = self._group_of[u], self._group_of[v]
        key = (a, b) if a <= b else (b, a)
        return self._rep_index[key]


def class_orbits(G: LabeledGraph) -> OrbitPartition:
    """Group vertices by (kind, block) and pick representative non-edges.

    Sound for builder-produced graphs, where all members of a class share
    the same neighborhood; that property is re-checked here so a corrupted
    label map cannot silently produce an unsound reduction.
    """
    if G.labels is None:
        raise MissingLabel("orbit computation needs vertex labels")

    by_class: dict[tuple[str, int], list[int]] = {}
    for v, lab in enumerate(G.labels):
        by_class.setdefault((lab.kind, lab.block), []).append(v)

    keys = sorted(by_class, key=lambda key: (_KIND_RANK[key[0]], key[1]))
    groups = tuple(tuple(sorted(by_class[key])) for key in keys)

    group_of = [0] * G.n
    for gi, members in enumerate(groups):
        base = set(G.neighbors(members[0]))
        for v in members:
            group_of[v] = gi
            if set(G.neighbors(v)) != base:
                raise MissingLabel(
                    f"vertices of class {keys[gi]} do not share a neighborhood"
                )

    reps = []
    rep_index = {}
    for gi, g1 in enumerate(groups):
        if len(g1) >= 2:  # classes are independent sets, so this is a non-edge
            rep_index[(gi, gi)] = (g1[0], g1[1])
            reps.append((g1[0], g1[1]))
        for gj in range(gi + 1, len(groups)):
            g2 = groups[gj]
            if not G.has_edge(g1[0], g2[0]):
                rep_index[(gi, gj)] = (g1[0], g2[0])
                reps.append((g1[0], g2[0]))

    return OrbitPartition(groups, tuple(reps), tuple(group_of), rep_index)
