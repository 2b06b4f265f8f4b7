"""Graph family constructions.

The families are driven by an abstract base cycle of a-nodes, x-nodes, and
d-nodes whose pattern depends on r mod 3.  Leaf nodes are appended to every
a-node and x-node, then a/b/x/y nodes are blown up into independent sets of
size about k/2; d-nodes survive as single vertices.  Deriving all adjacency
from the abstract cycle makes the three residue patterns and the wraparound
at block 1 a single uniform rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingLabel, ParameterBoundViolated, UnsupportedK, UnsupportedR
from .graph import GraphParams, LabeledGraph, VertexLabel, make_graph

CycleNode = tuple[str, int]  # ("a", i) | ("x", j) | ("d", value)


@dataclass(frozen=True)
class BaseCycle:
    """The (r+2)-cycle of a-, x-, and d-nodes before blow-up."""

    r: int
    nodes: tuple[CycleNode, ...]

    def __post_init__(self):
        assert len(self.nodes) == self.r + 2

    @property
    def a_blocks(self) -> list[int]:
        return [idx for kind, idx in self.nodes if kind == "a"]

    @property
    def d_values(self) -> list[int]:
        return [idx for kind, idx in self.nodes if kind == "d"]

    def position_of(self, node: CycleNode) -> int:
        return self.nodes.index(node)

    def successor(self, pos: int) -> int:
        return (pos + 1) % len(self.nodes)

    def predecessor(self, pos: int) -> int:
        return (pos - 1) % len(self.nodes)

    def arc(self, start: int, end: int, forward: bool) -> list[CycleNode]:
        """Nodes from position start to position end walking one direction."""
        step = 1 if forward else -1
        out = [self.nodes[start]]
        pos = start
        while pos != end:
            pos = (pos + step) % len(self.nodes)
            out.append(self.nodes[pos])
        return out


def base_cycle(r: int) -> BaseCycle:
    """Base (r+2)-cycle for odd r, pattern chosen by r mod 3.

    The patterns need r >= 5 for r = 2 (mod 3), r >= 7 for r = 1 (mod 3),
    and r >= 9 for r = 0 (mod 3); anything else is rejected.
    """
    if r % 2 == 0 or r < 5:
        raise UnsupportedR(f"r must be odd and at least 5, got {r}")
    residue = r % 3
    nodes: list[CycleNode] = []
    if residue == 1:
        if r < 7:
            raise UnsupportedR("r = 1 (mod 3) requires r >= 7")
        for i in range(1, r + 1, 3):
            nodes += [("a", i), ("x", i + 1), ("d", i + 2)]
    elif residue == 2:
        for i in range(1, r, 3):
            nodes += [("a", i), ("x", i + 1), ("d", i + 2)]
        nodes.append(("d", r + 2))
    else:
        if r < 9:
            raise UnsupportedR("r = 0 (mod 3) requires r >= 9")
        for i in range(1, r - 4, 3):
            nodes += [("a", i), ("x", i + 1), ("d", i + 2)]
        nodes.append(("d", r - 2))
        nodes += [("a", r - 1), ("x", r), ("d", r + 1)]
        nodes.append(("d", r + 2))

    cycle = BaseCycle(r, tuple(nodes))
    expected_d = {1: (r + 2) // 3, 2: (r + 1) // 3 + 1, 0: r // 3 + 2}[residue]
    assert len(cycle.d_values) == expected_d
    return cycle


@dataclass(frozen=True)
class BlowupSpec:
    """Class sizes for parameter k: |A| = |B| = ceil(k/2), |X| = |Y| = floor(k/2)."""

    k: int
    big: int
    small: int

    @classmethod
    def for_k(cls, k: int) -> "BlowupSpec":
        spec = cls(k, (k + 1) // 2, k // 2)
        assert spec.big + spec.small == k
        return spec


def build_H(k: int) -> LabeledGraph:
    """Four-class gadget: complete bipartite pairs (A,B), (A,X), (X,Y).

    Labeled as block 1 (A, B) and block 2 (X, Y), matching how the gadget
    embeds into the blown-up cycle.
    """
    if k < 3:
        raise UnsupportedK(f"k must be at least 3, got {k}")
    spec = BlowupSpec.for_k(k)
    big, small = spec.big, spec.small
    labels = (
        [VertexLabel("A", 1, m) for m in range(big)]
        + [VertexLabel("B", 1, m) for m in range(big)]
        + [VertexLabel("X", 2, m) for m in range(small)]
        + [VertexLabel("Y", 2, m) for m in range(small)]
    )
    a = list(range(big))
    b = list(range(big, 2 * big))
    x = list(range(2 * big, 2 * big + small))
    y = list(range(2 * big + small, 2 * big + 2 * small))
    edges = [(u, v) for u in a for v in b]
    edges += [(u, v) for u in a for v in x]
    edges += [(u, v) for u in x for v in y]
    G = make_graph(len(labels), edges, labels, GraphParams("H", None, k, None))
    assert G.edge_count == big * big + big * small + small * small
    return G


def build_G(r: int, k: int) -> LabeledGraph:
    """Blow up the base cycle with appended leaves into the full family member.

    Every a-node i becomes classes A_i and B_i (the leaf), every x-node j
    becomes X_j and Y_j, d-nodes stay single vertices, and adjacency between
    classes is complete bipartite exactly where the underlying nodes were
    adjacent.
    """
    cycle = base_cycle(r)
    if 2 * k < r + 5:
        raise ParameterBoundViolated(f"need 2k >= r + 5, got r={r}, k={k}")
    spec = BlowupSpec.for_k(k)
    big, small = spec.big, spec.small

    labels: list[VertexLabel] = []
    for kind, idx in cycle.nodes:
        if kind == "a":
            labels += [VertexLabel("A", idx, m) for m in range(big)]
            labels += [VertexLabel("B", idx, m) for m in range(big)]
        elif kind == "x":
            labels += [VertexLabel("X", idx, m) for m in range(small)]
            labels += [VertexLabel("Y", idx, m) for m in range(small)]
        else:
            labels.append(VertexLabel("D", idx, 0))
    labels.sort(key=lambda lab: lab.sort_key)
    vertex = {(lab.kind, lab.block, lab.member): i for i, lab in enumerate(labels)}

    def members(kind: str, block: int) -> list[int]:
        size = {"A": big, "B": big, "X": small, "Y": small, "D": 1}[kind]
        return [vertex[(kind, block, m)] for m in range(size)]

    edges = []
    for i in cycle.a_blocks:
        A, B = members("A", i), members("B", i)
        X, Y = members("X", i + 1), members("Y", i + 1)
        edges += [(u, v) for u in A for v in B]
        edges += [(u, v) for u in A for v in X]
        edges += [(u, v) for u in X for v in Y]
    for pos, (kind, idx) in enumerate(cycle.nodes):
        nkind, nidx = cycle.nodes[cycle.successor(pos)]
        edges += [
            (u, v)
            for u in members(kind.upper(), idx)
            for v in members(nkind.upper(), nidx)
        ]

    G = make_graph(len(labels), edges, labels, GraphParams("G", r, k, 0))

    blocks = len(cycle.a_blocks)
    assert G.n == 2 * k * blocks + len(cycle.d_values)
    return G


def extend_with_duplicates(G: LabeledGraph, t: int) -> LabeledGraph:
    """Add t new vertices, each adjacent to exactly the class A_1.

    The input's vertex ids are preserved; the duplicates take the trailing
    ids (Bdup sorts last in the canonical order).
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if G.labels is None or G.params is None or G.params.family != "G":
        raise MissingLabel("duplicate extension needs a builder-labeled graph")
    if t == 0:
        return G
    existing = sum(1 for lab in G.labels if lab.kind == "Bdup")
    new_labels = list(G.labels) + [
        VertexLabel("Bdup", 1, existing + m) for m in range(t)
    ]
    a1 = G.class_members("A", 1)
    edges = G.edges()
    for m in range(t):
        v = G.n + m
        edges += [(v, u) for u in a1]
    params = GraphParams("G", G.params.r, G.params.k, (G.params.t or 0) + t)
    return make_graph(G.n + t, edges, new_labels, params)


def collapse_skeleton(r: int) -> tuple[LabeledGraph, dict[CycleNode, int]]:
    """The base cycle with leaves appended, as a plain graph.

    Returns the skeleton and a map from cycle/leaf node names to skeleton
    vertex ids; leaf nodes are named ("b", i) and ("y", j).
    """
    cycle = base_cycle(r)
    names: list[CycleNode] = list(cycle.nodes)
    for kind, idx in cycle.nodes:
        if kind == "a":
            names.append(("b", idx))
        elif kind == "x":
            names.append(("y", idx))
    ids = {name: i for i, name in enumerate(names)}
    edges = []
    for pos in range(len(cycle.nodes)):
        u = cycle.nodes[pos]
        v = cycle.nodes[cycle.successor(pos)]
        edges.append((ids[u], ids[v]))
    for kind, idx in cycle.nodes:
        if kind == "a":
            edges.append((ids[(kind, idx)], ids[("b", idx)]))
        elif kind == "x":
            edges.append((ids[(kind, idx)], ids[("y", idx)]))
    return make_graph(len(names), edges), ids


def collapse_map(G: LabeledGraph) -> dict[int, CycleNode]:
    """Map every vertex to the skeleton node its class collapses onto."""
    if G.labels is None:
        raise MissingLabel("collapse map needs vertex labels")
    out = {}
    for v, lab in enumerate(G.labels):
        if lab.kind == "A":
            out[v] = ("a", lab.block)
        elif lab.kind in ("B", "Bdup"):
            out[v] = ("b", lab.block)
        elif lab.kind == "X":
            out[v] = ("x", lab.block)
        elif lab.kind == "Y":
            out[v] = ("y", lab.block)
        else:
            out[v] = ("d", lab.block)
    return out


def block_classes(G: LabeledGraph, i: int) -> dict[str, list[int]]:
    """Member lists of the four classes forming block i (A_i, B_i, X_{i+1}, Y_{i+1})."""
    return {
        "A": G.class_members("A", i),
        "B": G.class_members("B", i),
        "X": G.class_members("X", i + 1),
        "Y": G.class_members("Y", i + 1),
    }
