"""Exhaustive tiny-n oracle for saturation numbers.

Enumerates all labeled graphs on up to 7 vertices with bitmask adjacency
and exact brute-force subgraph embedding, giving ground-truth values of
the minimum edge count and minimum copy count over saturated graphs.
Deliberately unsophisticated: no isomorphism reduction, just stratified
enumeration and degree-pruned backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import NoSaturatedGraph, SearchTooLarge
from .graph import LabeledGraph, make_graph

MAX_N = 7


def named_graph(name: str) -> LabeledGraph:
    """Small graphs by name: K<n>, C<n>, P<n> (path on n vertices)."""
    name = name.strip().upper()
    if len(name) < 2 or name[0] not in "KCP":
        raise ValueError(f"unknown graph name {name!r}")
    size = int(name[1:])
    if name[0] == "K":
        if size < 1:
            raise ValueError("complete graphs need at least one vertex")
        return make_graph(size, list(combinations(range(size), 2)))
    if name[0] == "C":
        if size < 3:
            raise ValueError("cycles need at least three vertices")
        return make_graph(size, [(i, (i + 1) % size) for i in range(size)])
    if size < 1:
        raise ValueError("paths need at least one vertex")
    return make_graph(size, [(i, i + 1) for i in range(size - 1)])


def _bitmask_adj(G: LabeledGraph) -> list[int]:
    adj = [0] * G.n
    for u, v in G.edges():
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _embed(gadj: list[int], fadj: list[int], pre: dict[int, int] | None = None) -> bool:
    """Does F embed into G as a subgraph, extending the partial map ``pre``?"""
    nF = len(fadj)
    placed = dict(pre or {})
    used = 0
    for g in placed.values():
        used |= 1 << g
    for f, g in placed.items():
        for f2, g2 in placed.items():
            if f2 > f and fadj[f] >> f2 & 1 and not gadj[g] >> g2 & 1:
                return False

    remaining = [f for f in range(nF) if f not in placed]

    def order_next(done: dict) -> int:
        best, best_key = None, None
        for f in remaining:
            if f in done:
                continue
            anchored = sum(1 for f2 in done if fadj[f] >> f2 & 1)
            key = (-anchored, -bin(fadj[f]).count("1"), f)
            if best is None or key < best_key:
                best, best_key = f, key
        return best

    fdeg = [bin(m).count("1") for m in fadj]
    gdeg = [bin(m).count("1") for m in gadj]

    def rec(done: dict, used: int) -> bool:
        if len(done) == nF:
            return True
        f = order_next(done)
        cand = ~used
        for f2, g2 in done.items():
            if fadj[f] >> f2 & 1:
                cand &= gadj[g2]
        for g in range(len(gadj)):
            if not cand >> g & 1:
                continue
            if gdeg[g] < fdeg[f]:
                continue
            done[f] = g
            if rec(done, used | 1 << g):
                return True
            del done[f]
        return False

    return rec(placed, used)


def _count_embeddings(gadj: list[int], fadj: list[int]) -> int:
    nF = len(fadj)
    fdeg = [bin(m).count("1") for m in fadj]
    gdeg = [bin(m).count("1") for m in gadj]
    total = 0

    def rec(f: int, images: list[int], used: int):
        nonlocal total
        if f == nF:
            total += 1
            return
        cand = ~used
        for f2 in range(f):
            if fadj[f] >> f2 & 1:
                cand &= gadj[images[f2]]
        for g in range(len(gadj)):
            if cand >> g & 1 and gdeg[g] >= fdeg[f]:
                images.append(g)
                rec(f + 1, images, used | 1 << g)
                images.pop()

    rec(0, [], 0)
    return total


def _automorphism_count(fadj: list[int]) -> int:
    return _count_embeddings(fadj, fadj)


def count_copies(G: LabeledGraph, H: LabeledGraph) -> int:
    """Number of distinct subgraphs of G isomorphic to H."""
    gadj, hadj = _bitmask_adj(G), _bitmask_adj(H)
    return _count_embeddings(gadj, hadj) // _automorphism_count(hadj)


def _is_saturated_adj(gadj: list[int], n: int, fadj: list[int]) -> bool:
    if _embed(gadj, fadj):
        return False
    fedges = [
        (p, q)
        for p in range(len(fadj))
        for q in range(p + 1, len(fadj))
        if fadj[p] >> q & 1
    ]
    for u in range(n):
        for v in range(u + 1, n):
            if gadj[u] >> v & 1:
                continue
            gadj[u] |= 1 << v
            gadj[v] |= 1 << u
            created = any(
                _embed(gadj, fadj, {p: u, q: v}) or _embed(gadj, fadj, {p: v, q: u})
                for p, q in fedges
            )
            gadj[u] &= ~(1 << v)
            gadj[v] &= ~(1 << u)
            if not created:
                return False
    return True


def is_saturated(G: LabeledGraph, F: LabeledGraph) -> bool:
    """True iff G is F-free and every single-edge addition creates F."""
    if F.n > G.n:
        raise ValueError("F cannot have more vertices than G")
    return _is_saturated_adj(_bitmask_adj(G), G.n, _bitmask_adj(F))


@dataclass
class SearchResult:
    n: int
    forbidden: str
    counted: str
    value: int
    witness: LabeledGraph
    saturated_inspected: int
    graphs_examined: int

    def to_json_dict(self) -> dict:
        from .codecs import to_graph6

        return {
            "n": self.n,
            "F": self.forbidden,
            "H": self.counted,
            "value": self.value,
            "witness_graph6": to_graph6(self.witness).decode("ascii"),
        }


def min_sat_edges(n: int, F: LabeledGraph, forbidden_name: str = "F") -> SearchResult:
    """Exact minimum edge count of an F-saturated graph on n vertices.

    Enumerates labeled graphs stratified by edge count and stops at the
    first stratum containing a saturated graph.
    """
    if n > MAX_N:
        raise SearchTooLarge(f"exhaustive search supports n <= {MAX_N}, got {n}")
    if F.n > n:
        raise ValueError("F cannot have more vertices than the host graph")
    fadj = _bitmask_adj(F)
    pairs = list(combinations(range(n), 2))
    examined = 0
    for m in range(len(pairs) + 1):
        for combo in combinations(pairs, m):
            examined += 1
            gadj = [0] * n
            for u, v in combo:
                gadj[u] |= 1 << v
                gadj[v] |= 1 << u
            if _is_saturated_adj(gadj, n, fadj):
                witness = make_graph(n, combo)
                return SearchResult(
                    n, forbidden_name, "K2", m, witness, 1, examined
                )
    raise NoSaturatedGraph(f"no {forbidden_name}-saturated graph on {n} vertices")


def min_sat_copies(
    n: int,
    H: LabeledGraph,
    F: LabeledGraph,
    counted_name: str = "H",
    forbidden_name: str = "F",
) -> SearchResult:
    """Exact minimum number of H-copies over all F-saturated n-vertex graphs.

    Sweeps every labeled graph on n vertices (2^C(n,2) of them), so n = 7
    takes minutes; smaller n are fast.
    """
    if n > MAX_N:
        raise SearchTooLarge(f"exhaustive search supports n <= {MAX_N}, got {n}")
    if F.n > n:
        raise ValueError("F cannot have more vertices than the host graph")
    fadj = _bitmask_adj(F)
    hadj = _bitmask_adj(H)
    aut_h = _automorphism_count(hadj)
    pairs = list(combinations(range(n), 2))
    best: tuple[int, tuple] | None = None
    saturated = 0
    examined = 0
    for mask in range(1 << len(pairs)):
        examined += 1
        gadj = [0] * n
        combo = []
        for idx, (u, v) in enumerate(pairs):
            if mask >> idx & 1:
                gadj[u] |= 1 << v
                gadj[v] |= 1 << u
                combo.append((u, v))
        if not _is_saturated_adj(gadj, n, fadj):
            continue
        saturated += 1
        copies = _count_embeddings(gadj, hadj) // aut_h
        if best is None or copies < best[0]:
            best = (copies, tuple(combo))
            if copies == 0:
                break
    if best is None:
        raise NoSaturatedGraph(f"no {forbidden_name}-saturated graph on {n} vertices")
    witness = make_graph(n, best[1])
    return SearchResult(
        n, forbidden_name, counted_name, best[0], witness, saturated, examined
    )


def matches_clique_plus_independent(G: LabeledGraph, r: int) -> bool:
    """Is G the join of a complete graph on r-2 vertices with an
    independent set (the extremal complete-saturation structure)?"""
    universal = [v for v in range(G.n) if G.degree(v) == G.n - 1]
    if len(universal) != r - 2:
        return False
    hub = set(universal)
    return all(u in hub or v in hub for u, v in G.edges())
