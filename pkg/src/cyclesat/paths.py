"""Exact-length path and cycle queries, gadget path templates, core paths.

The search kernels answer "is there a simple path/cycle of exactly L edges"
exhaustively and deterministically.  They run on the false-twin quotient of
the input graph: vertices with identical neighborhoods are interchangeable,
so a simple path of length L exists iff the quotient has a class walk of
length L that visits no class more often than its size.  On blow-up graphs
this collapses the search space by several orders of magnitude while
remaining exact; on twin-free graphs the quotient is the graph itself and
the kernel degenerates to a plain pruned depth-first search.  Pruning uses
shortest walk distances split by parity, which subsumes both a distance
bound and bipartite parity reasoning.

Budgets are measured in search-tree node expansions.  Exceeding the budget
raises, it never silently reports absence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .builder import base_cycle
from .errors import (
    AdjacentEndpoints,
    BudgetExhausted,
    ConstructionGap,
    LemmaOutOfRange,
    MissingLabel,
    NotCoreEligible,
    UnsupportedK,
)
from .graph import LabeledGraph, VertexLabel

DEFAULT_BUDGET = 50_000_000
_INF = float("inf")


class Budget:
    """Mutable node-expansion counter shared across the searches of one run."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise BudgetExhausted(
                f"search budget of {self.limit} node expansions exhausted",
                self.used,
                self.limit,
            )


def _as_budget(budget) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, Budget):
        return budget
    return Budget(int(budget))


@dataclass(frozen=True)
class PathWitness:
    """Explicit vertex sequence certifying a path of a claimed length."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_valid_in(self, G: LabeledGraph) -> bool:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        return all(G.has_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))


@dataclass(frozen=True)
class LengthSets:
    """Admissible gadget path lengths for parameter k."""

    k: int
    alpha1: tuple[int, ...]
    alpha2: tuple[int, ...]
    beta1: tuple[int, ...]
    beta2: tuple[int, ...]

    @classmethod
    def for_k(cls, k: int) -> "LengthSets":
        return cls(
            k,
            tuple(range(3, 2 * k - 2, 2)),
            tuple(range(3, 2 * k, 2)),
            tuple(range(2, 2 * k - 3, 2)),
            tuple(range(2, 2 * k - 1, 2)),
        )


# ---------------------------------------------------------------------------
# false-twin quotient
# ---------------------------------------------------------------------------


class _Quotient:
    __slots__ = ("classes", "cls_of", "sizes", "adj", "adj_set")

    def __init__(self, G: LabeledGraph):
        groups: dict[frozenset, list[int]] = {}
        for v in range(G.n):
            groups.setdefault(frozenset(G.neighbors(v)), []).append(v)
        self.classes = sorted((tuple(sorted(g)) for g in groups.values()))
        self.cls_of = [0] * G.n
        for ci, members in enumerate(self.classes):
            for v in members:
                self.cls_of[v] = ci
        self.sizes = [len(members) for members in self.classes]
        self.adj = []
        for members in self.classes:
            rep = members[0]
            self.adj.append(tuple(sorted({self.cls_of[w] for w in G.neighbors(rep)})))
        self.adj_set = [set(nbrs) for nbrs in self.adj]


def _quotient(G: LabeledGraph) -> _Quotient:
    if G._twin_cache is None:
        G._twin_cache = _Quotient(G)
    return G._twin_cache


def _parity_dist(q: _Quotient, target: int, min_class: int | None = None):
    """Shortest walk length from each class to target, split by parity."""
    dist = [[_INF, _INF] for _ in q.classes]
    dist[target][0] = 0
    queue = deque([(target, 0)])
    while queue:
        c, p = queue.popleft()
        d = dist[c][p] + 1
        np = p ^ 1
        for nxt in q.adj[c]:
            if min_class is not None and nxt < min_class:
                continue
            if d < dist[nxt][np]:
                dist[nxt][np] = d
                queue.append((nxt, np))
    return dist


def _lift_walk(q: _Quotient, walk: list[int], u: int, v: int) -> tuple[int, ...]:
    """Assign distinct members to a class walk; endpoints map to u and v."""
    out = [-1] * len(walk)
    out[0] = u
    out[-1] = v
    cursors = {}
    for i in range(1, len(walk) - 1):
        c = walk[i]
        pool = cursors.setdefault(
            c, iter([m for m in q.classes[c] if m != u and m != v])
        )
        out[i] = next(pool)
    return tuple(out)


def exists_path_of_length(G, u, v, L, budget=None):
    """Exhaustively decide whether a simple u,v-path with exactly L edges
    exists; returns one PathWitness when it does, else None.

    Deterministic: classes and members are explored in ascending order, so
    the returned witness is reproducible.  Raises BudgetExhausted when the
    node-expansion cap is hit before the search completes.
    """
    if u == v:
        raise ValueError("endpoints must be distinct")
    if L < 1:
        raise ValueError("path length must be positive")
    budget = _as_budget(budget)
    q = _quotient(G)
    cu, cv = q.cls_of[u], q.cls_of[v]

    cap = list(q.sizes)
    cap[cu] -= 1
    cap[cv] -= 1  # reserve the endpoints themselves

    dist = _parity_dist(q, cv)
    if dist[cu][L & 1] > L:
        return None

    walk = [cu]

    def extend(c: int, depth: int) -> bool:
        rem = L - depth
        if rem == 1:
            budget.charge()
            if cv in q.adj_set[c]:
                walk.append(cv)
                return True
            return False
        for nxt in q.adj[c]:
            budget.charge()
            if cap[nxt] <= 0:
                continue
            if dist[nxt][(rem - 1) & 1] > rem - 1:
                continue
            cap[nxt] -= 1
            walk.append(nxt)
            if extend(nxt, depth + 1):
                return True
            walk.pop()
            cap[nxt] += 1
        return False

    if not extend(cu, 0):
        return None
    return PathWitness(_lift_walk(q, walk, u, v))


def exists_cycle_of_length(G, L, budget=None):
    """Exhaustively decide whether a simple cycle with exactly L edges
    exists; returns the cycle's vertex tuple when found, else None."""
    if L < 3:
        raise ValueError("cycle length must be at least 3")
    budget = _as_budget(budget)
    if L > G.n:
        return None
    q = _quotient(G)

    for start in range(len(q.classes)):
        dist = _parity_dist(q, start, min_class=start)
        if dist[start][L & 1] > L:
            continue
        cap = list(q.sizes)
        cap[start] -= 1
        walk = [start]

        def extend(c: int, depth: int) -> bool:
            if depth == L - 1:
                budget.charge()
                return start in q.adj_set[c]
            for nxt in q.adj[c]:
                budget.charge()
                if nxt < start or cap[nxt] <= 0:
                    continue
                rem = L - depth - 1  # edges left after placing nxt, incl. closing
                if dist[nxt][rem & 1] > rem:
                    continue
                cap[nxt] -= 1
                walk.append(nxt)
                if extend(nxt, depth + 1):
                    return True
                walk.pop()
                cap[nxt] += 1
            return False

        if extend(start, 0):
            verts = _lift_cycle(q, walk)
            return _canonical_cycle(verts)
    return None


def _lift_cycle(q: _Quotient, walk: list[int]) -> list[int]:
    out = []
    cursors = {}
    for c in walk:
        pool = cursors.setdefault(c, iter(q.classes[c]))
        out.append(next(pool))
    return out


def _canonical_cycle(verts: list[int]) -> tuple[int, ...]:
    """Rotate/reflect so the smallest vertex leads, smaller neighbor second."""
    n = len(verts)
    i = verts.index(min(verts))
    fwd = [verts[(i + j) % n] for j in range(n)]
    rev = [verts[(i - j) % n] for j in range(n)]
    return tuple(fwd if fwd[1] <= rev[1] else rev)


def count_closed_walk_assignments(G, L, budget=None) -> int:
    """Number of directed rooted simple L-cycles (vertex sequences).

    Every simple L-cycle contributes exactly 2L sequences, so dividing by
    2L yields the subgraph count.  Enumerates class walks on the quotient;
    each walk contributes the product of remaining class capacities, i.e.
    the number of distinct-member assignments.
    """
    if L < 3:
        raise ValueError("cycle length must be at least 3")
    budget = _as_budget(budget)
    if L > G.n:
        return 0
    q = _quotient(G)
    total = 0

    for start in range(len(q.classes)):
        dist = _parity_dist(q, start)
        if dist[start][L & 1] > L:
            continue
        cap = list(q.sizes)
        first_choices = cap[start]
        cap[start] -= 1

        def extend(c: int, depth: int, prod: int) -> int:
            if depth == L - 1:
                budget.charge()
                return prod if start in q.adj_set[c] else 0
            found = 0
            for nxt in q.adj[c]:
                budget.charge()
                if cap[nxt] <= 0:
                    continue
                rem = L - depth - 1
                if dist[nxt][rem & 1] > rem:
                    continue
                ways = cap[nxt]
                cap[nxt] -= 1
                found += extend(nxt, depth + 1, prod * ways)
                cap[nxt] += 1
            return found

        total += extend(start, 0, first_choices)
    assert total % (2 * L) == 0
    return total // (2 * L)


def _two_color(G) -> list[int] | None:
    """2-coloring of each component, or None if some odd cycle exists."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in G.neighbors(v):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(G) -> bool:
    """True when the graph admits a 2-coloring (no odd cycles)."""
    return _two_color(G) is not None


def odd_girth(G, budget=None) -> int | None:
    """Length of a shortest odd cycle; None when the graph is bipartite."""
    budget = _as_budget(budget)
    if _two_color(G) is not None:
        return None
    for L in range(3, G.n + 1, 2):
        if exists_cycle_of_length(G, L, budget) is not None:
            return L
    raise AssertionError("non-bipartite graph must contain an odd cycle")


def achievable_path_lengths(G, u, v, Lmax, budget=None) -> set[int]:
    """The exact set of lengths 1..Lmax realized by simple u,v-paths."""
    budget = _as_budget(budget)
    return {
        L
        for L in range(1, Lmax + 1)
        if exists_path_of_length(G, u, v, L, budget) is not None
    }


# ---------------------------------------------------------------------------
# gadget paths (explicit templates, no search)
# ---------------------------------------------------------------------------

# longest-path templates exist for these ordered class pairs; each maps to
# its admissible length set
_PAIR_SET = {
    ("A", "X"): "alpha1",
    ("B", "A"): "alpha1",
    ("Y", "X"): "alpha1",
    ("B", "Y"): "alpha2",
    ("A", "A"): "beta1",
    ("X", "X"): "beta1",
    ("B", "B"): "beta2",
    ("Y", "Y"): "beta2",
    ("B", "X"): "beta2",
    ("Y", "A"): "beta2",
}

_H_CLASS_ADJ = {("a", "b"), ("b", "a"), ("a", "x"), ("x", "a"), ("x", "y"), ("y", "x")}

_Token = tuple[str, int]


def _zigzag(c1: str, c2: str, lo: int, hi: int) -> list[_Token]:
    out = []
    for i in range(lo, hi + 1):
        out.append((c1, i))
        out.append((c2, i))
    return out


def _longest_template(pair: tuple[str, str], nA: int, nX: int) -> list[_Token]:
    """Longest path joining the pair, as (class, 1-based index) tokens.

    One parameterization covers odd and even k: with nA = ceil(k/2) and
    nX = floor(k/2) the sequences below realize lengths 2k-3 (alpha1 pairs),
    2k-1 (B,Y), 2k-4 (beta1) and 2k-2 (beta2).
    """
    if pair == ("A", "X"):
        return (
            _zigzag("a", "b", 1, nA - 1)
            + [("a", nA)]
            + _zigzag("x", "y", 1, nX - 1)
            + [("x", nX)]
        )
    if pair == ("B", "A"):
        return (
            [("b", 1), ("a", 1)]
            + _zigzag("x", "y", 1, nX - 1)
            + [("x", nX)]
            + _zigzag("a", "b", 2, nA - 1)
            + [("a", nA)]
        )
    if pair == ("Y", "X"):
        return (
            [("y", 1), ("x", 1)]
            + _zigzag("a", "b", 1, nA - 1)
            + [("a", nA)]
            + _zigzag("x", "y", 2, nX - 1)
            + [("x", nX)]
        )
    if pair == ("B", "Y"):
        return _zigzag("b", "a", 1, nA) + _zigzag("x", "y", 1, nX)
    if pair == ("A", "A"):
        return (
            _zigzag("a", "b", 1, nA - 2)
            + [("a", nA - 1)]
            + _zigzag("x", "y", 1, nX - 1)
            + [("x", nX), ("a", nA)]
        )
    if pair == ("X", "X"):
        return (
            _zigzag("x", "y", 1, nX - 2)
            + [("x", nX - 1)]
            + _zigzag("a", "b", 1, nA - 1)
            + [("a", nA), ("x", nX)]
        )
    if pair == ("B", "B"):
        return [("b", nA - 1)] + _longest_template(("A", "A"), nA, nX) + [("b", nA)]
    if pair == ("Y", "Y"):
        return [("y", nX - 1)] + _longest_template(("X", "X"), nA, nX) + [("y", nX)]
    if pair == ("B", "X"):
        return _longest_template(("B", "Y"), nA, nX)[:-1]
    if pair == ("Y", "A"):
        return list(reversed(_longest_template(("B", "Y"), nA, nX)[1:]))
    raise AssertionError(f"no template for pair {pair}")


def _shorten(seq: list[_Token], target: int) -> list[_Token]:
    """Shorten a template to the target length by deleting interior pairs.

    Each deletion removes two consecutive interior tokens whose removal
    leaves a valid path.  Deletions prefer pairs touching the B side, then
    the Y side, then anything else, leftmost first; this fixed rule makes
    the output deterministic.
    """
    seq = list(seq)
    while len(seq) - 1 > target:
        best = None
        for i in range(1, len(seq) - 2):
            if (seq[i - 1][0], seq[i + 2][0]) not in _H_CLASS_ADJ:
                continue
            involved = {seq[i][0], seq[i + 1][0]}
            tier = 0 if "b" in involved else 1 if "y" in involved else 2
            if best is None or (tier, i) < best:
                best = (tier, i)
        assert best is not None, "template cannot be shortened further"
        i = best[1]
        del seq[i : i + 2]
    return seq


def _index_perm(size: int, forced: list[tuple[int, int]]) -> list[int]:
    """Permutation of member positions honoring forced (index, member) pairs."""
    perm: list[int | None] = [None] * size
    taken = set()
    for idx, member in forced:
        perm[idx] = member
        taken.add(member)
    rest = iter(m for m in range(size) if m not in taken)
    return [p if p is not None else next(rest) for p in perm]


def _materialize(
    seq: list[_Token], classes: dict[str, list[int]], u: int, v: int
) -> list[int]:
    """Map template tokens to vertices so the endpoints land on u and v."""
    forced: dict[str, list[tuple[int, int]]] = {}
    for token, vertex in ((seq[0], u), (seq[-1], v)):
        char, idx = token
        forced.setdefault(char, []).append((idx - 1, classes[char].index(vertex)))
    perms = {
        char: _index_perm(len(classes[char]), forced.get(char, []))
        for char in classes
    }
    return [classes[char][perms[char][idx - 1]] for char, idx in seq]


def lemma_path_on_classes(
    classes: dict[str, list[int]], cu: str, u: int, cv: str, v: int, L: int
) -> list[int]:
    """Constructive path of exactly length L inside one gadget.

    ``classes`` maps the characters a/b/x/y to the member vertex lists of
    one gadget copy; cu/cv are the endpoint class characters.  No search is
    performed; templates are shortened to the requested length.
    """
    nA, nX = len(classes["a"]), len(classes["x"])
    k = nA + nX
    if k < 5:
        raise UnsupportedK(f"gadget paths need k >= 5, got k={k}")
    sets = LengthSets.for_k(k)
    CU, CV = cu.upper(), cv.upper()
    if (CU, CV) in _PAIR_SET:
        pair, flip = (CU, CV), False
    elif (CV, CU) in _PAIR_SET:
        pair, flip = (CV, CU), True
    else:
        raise LemmaOutOfRange(f"unsupported class pair ({CU}, {CV})")
    if u == v:
        raise LemmaOutOfRange("endpoints must be distinct")
    if L not in set(getattr(sets, _PAIR_SET[pair])):
        raise LemmaOutOfRange(
            f"length {L} not admissible for pair {pair} at k={k}"
        )
    end_u, end_v = (v, u) if flip else (u, v)
    seq = _shorten(_longest_template(pair, nA, nX), L)
    verts = _materialize(seq, classes, end_u, end_v)
    if flip:
        verts.reverse()
    return verts


def lemma_path(H: LabeledGraph, u: int, v: int, L: int) -> PathWitness:
    """Explicit path of length L between u and v in a standalone gadget.

    Endpoint classes and L must fall in the admissible sets: odd lengths
    3..2k-3 for (A,X)/(B,A)/(Y,X), odd 3..2k-1 for (B,Y), even 2..2k-4 for
    (A,A)/(X,X), even 2..2k-2 for (B,B)/(Y,Y)/(B,X)/(Y,A).
    """
    if H.labels is None:
        raise MissingLabel("gadget paths need a labeled graph")
    classes: dict[str, list[int]] = {"a": [], "b": [], "x": [], "y": []}
    for w, lab in enumerate(H.labels):
        if lab.kind not in ("A", "B", "X", "Y"):
            raise LemmaOutOfRange(f"vertex {w} has non-gadget kind {lab.kind}")
        classes[lab.kind.lower()].append(w)
    cu = H.label_of(u).kind.lower()
    cv = H.label_of(v).kind.lower()
    verts = lemma_path_on_classes(classes, cu, u, cv, v, L)
    return PathWitness(tuple(verts))


# ---------------------------------------------------------------------------
# core paths
# ---------------------------------------------------------------------------


def _cycle_node_of(lab: VertexLabel):
    if lab.kind == "A":
        return ("a", lab.block)
    if lab.kind == "X":
        return ("x", lab.block)
    if lab.kind == "D":
        return ("d", lab.block)
    return None


def lift_nodes(G, nodes, endpoints: dict[int, int], avoid=()) -> list[int]:
    """Lift a base-cycle node sequence to concrete vertices.

    ``endpoints`` pins positions to given vertices; every other class node
    takes its lowest member not already used on the path.
    """
    used = set(endpoints.values()) | set(avoid)
    out = []
    for pos, (kind, idx) in enumerate(nodes):
        if pos in endpoints:
            out.append(endpoints[pos])
            continue
        if kind == "d":
            out.append(G.vertex_of(VertexLabel("D", idx)))
            continue
        for member in G.class_members(kind.upper(), idx):
            if member not in used:
                out.append(member)
                used.add(member)
                break
        else:
            raise ConstructionGap(f"no free member to lift node ({kind}, {idx})")
    return out


def core_paths(G: LabeledGraph, z1: int, z2: int) -> tuple[PathWitness, PathWitness]:
    """Two edge-disjoint core paths between z1 and z2, lengths summing to r+2.

    The paths lift the two arcs of the collapsed base cycle.  Endpoints in
    leaf classes, or endpoints collapsing onto the same cycle node (between
    which no core path can exist, as a core path meets every class at most
    once), are rejected as not core-eligible.
    """
    if G.labels is None or G.params is None or G.params.r is None:
        raise MissingLabel("core paths need a builder-labeled graph")
    if z1 == z2:
        raise AdjacentEndpoints("endpoints must be distinct")
    n1 = _cycle_node_of(G.label_of(z1))
    n2 = _cycle_node_of(G.label_of(z2))
    if n1 is None or n2 is None:
        raise NotCoreEligible("core path endpoints may not lie in leaf classes")
    if G.has_edge(z1, z2):
        raise AdjacentEndpoints(f"vertices {z1} and {z2} are adjacent")
    if n1 == n2:
        raise NotCoreEligible(
            "endpoints collapse onto the same cycle node; no core path exists"
        )
    cycle = base_cycle(G.params.r)
    p1, p2 = cycle.position_of(n1), cycle.position_of(n2)
    paths = []
    for forward in (True, False):
        nodes = cycle.arc(p1, p2, forward)
        verts = lift_nodes(G, nodes, {0: z1, len(nodes) - 1: z2})
        paths.append(PathWitness(tuple(verts)))
    assert paths[0].length + paths[1].length == G.params.r + 2
    return paths[0], paths[1]
