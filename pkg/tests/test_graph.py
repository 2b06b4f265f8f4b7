import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclesat import (
    DuplicateLabel,
    InvalidEdge,
    InvalidVertex,
    MissingLabel,
    VertexLabel,
    class_orbits,
    make_graph,
)


def test_single_edge():
    G = make_graph(2, [(0, 1)])
    assert G.edge_count == 1
    assert sorted(G.degree(v) for v in G.vertices()) == [1, 1]


def test_triangle():
    G = make_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert G.edge_count == 3


def test_loop_rejected():
    with pytest.raises(InvalidEdge):
        make_graph(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(InvalidVertex):
        make_graph(3, [(0, 5)])


def test_duplicate_edges_collapse():
    G = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert G.edge_count == 1


def test_duplicate_label_rejected():
    labs = [VertexLabel("A", 1, 0), VertexLabel("A", 1, 0)]
    with pytest.raises(DuplicateLabel):
        make_graph(2, [(0, 1)], labs)


def test_label_parse_roundtrip():
    for text in ["A1#0", "B4#2", "X2#1", "Y5#0", "D6", "Bdup#3"]:
        assert str(VertexLabel.parse(text)) == text


def test_label_invariants():
    with pytest.raises(ValueError):
        VertexLabel("D", 3, 1)  # D labels carry member 0
    with pytest.raises(ValueError):
        VertexLabel("Bdup", 2, 0)  # duplicates attach to block 1


def test_adjacency_symmetric_irreflexive(g55):
    for v in g55.vertices():
        assert v not in g55.neighbors(v)
        for w in g55.neighbors(v):
            assert v in g55.neighbors(w)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.data())
def test_make_graph_symmetry_random(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    G = make_graph(n, edges)
    assert G.edge_count == len(set(edges))
    for u, v in G.edges():
        assert v in G.neighbors(u) and u in G.neighbors(v)


def test_orbits_h5(h5):
    orbits = class_orbits(h5)
    sizes = sorted(len(g) for g in orbits.groups)
    assert len(orbits.groups) == 4
    assert sizes == [2, 2, 3, 3]


def test_orbits_g55(g55):
    orbits = class_orbits(g55)
    sizes = sorted(len(g) for g in orbits.groups)
    assert len(orbits.groups) == 11
    assert sizes == [1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3]


def test_orbits_all_labels_distinct():
    labs = [VertexLabel("D", i + 1, 0) for i in range(4)]
    G = make_graph(4, [(0, 1), (2, 3)], labs)
    orbits = class_orbits(G)
    assert len(orbits.groups) == 4


def test_orbits_need_labels():
    with pytest.raises(MissingLabel):
        class_orbits(make_graph(3, [(0, 1)]))


def test_orbit_representative_covers_every_non_edge(g55):
    orbits = class_orbits(g55)
    reps = set(orbits.representatives)
    for u, v in g55.non_edges():
        rep = orbits.representative_of(u, v)
        assert rep in reps
        # the representative is itself a non-edge of the same orbit pair
        assert not g55.has_edge(*rep)


def test_orbit_representative_count_minimal(g55):
    orbits = class_orbits(g55)
    # one representative per unordered group pair carrying a non-edge
    group_pairs = set()
    for u, v in g55.non_edges():
        a, b = orbits.group_of(u), orbits.group_of(v)
        group_pairs.add((min(a, b), max(a, b)))
    assert len(orbits.representatives) == len(group_pairs)
