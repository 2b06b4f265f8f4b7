import pytest

from cyclesat import (
    NoSaturatedGraph,
    SearchTooLarge,
    count_copies,
    is_saturated,
    make_graph,
    matches_clique_plus_independent,
    min_sat_copies,
    min_sat_edges,
    named_graph,
)


def test_star_is_triangle_saturated():
    star = make_graph(5, [(0, i) for i in range(1, 5)])
    assert is_saturated(star, named_graph("K3"))


def test_k4_not_triangle_saturated():
    assert not is_saturated(named_graph("K4"), named_graph("K3"))


def test_empty_graph_not_saturated():
    assert not is_saturated(make_graph(4, []), named_graph("K3"))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_sat_k3_is_n_minus_1(n):
    result = min_sat_edges(n, named_graph("K3"), "K3")
    assert result.value == n - 1
    assert is_saturated(result.witness, named_graph("K3"))


def test_sat_5_k4():
    result = min_sat_edges(5, named_graph("K4"), "K4")
    assert result.value == 7  # (r-2)(n-r+2) + C(r-2,2) = 3*2 + 1
    assert matches_clique_plus_independent(result.witness, 4)


def test_ehm_witness_structure_small_grid():
    for n in (4, 5, 6):
        for r in (3, 4):
            if r > n:
                continue
            result = min_sat_edges(n, named_graph(f"K{r}"), f"K{r}")
            expected = (r - 2) * (n - r + 2) + (r - 2) * (r - 3) // 2
            assert result.value == expected
            assert matches_clique_plus_independent(result.witness, r)


def test_copies_k2_equals_edges():
    edges = min_sat_edges(5, named_graph("K3"), "K3")
    copies = min_sat_copies(5, named_graph("K2"), named_graph("K3"), "K2", "K3")
    assert copies.value == edges.value == 4


def test_sat_6_c3_c5_is_zero():
    result = min_sat_copies(6, named_graph("C3"), named_graph("C5"), "C3", "C5")
    assert result.value == 0
    assert is_saturated(result.witness, named_graph("C5"))


def test_sat_6_c3_c4_frozen():
    # exploratory exhaustive value (no closed form known); frozen regression
    result = min_sat_copies(6, named_graph("C3"), named_graph("C4"), "C3", "C4")
    assert result.value == 1


def test_witness_passes_is_saturated():
    for name, n in [("K3", 5), ("C4", 5)]:
        result = min_sat_edges(n, named_graph(name), name)
        assert is_saturated(result.witness, named_graph(name))


def test_too_large_rejected():
    with pytest.raises(SearchTooLarge):
        min_sat_edges(8, named_graph("K3"))


def test_no_saturated_graph():
    # forbidding a single vertex: every graph contains it, none is saturated
    with pytest.raises(NoSaturatedGraph):
        min_sat_edges(3, named_graph("K1"), "K1")


def test_count_copies_examples():
    assert count_copies(named_graph("K4"), named_graph("C4")) == 3
    assert count_copies(named_graph("K4"), named_graph("K3")) == 4
    assert count_copies(named_graph("C6"), named_graph("C6")) == 1


def test_named_graphs():
    assert named_graph("K2").edge_count == 1
    assert named_graph("C5").n == 5 and named_graph("C5").edge_count == 5
    assert named_graph("P4").edge_count == 3
    with pytest.raises(ValueError):
        named_graph("Q3")
