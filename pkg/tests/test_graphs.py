"""Graph container, family constructors, ladder surgery."""

import itertools

import pytest

import oracles
from indtopo import graphs as gr


# -- vertex labels -----------------------------------------------------------

def test_label_round_trip():
    for label in [0, -3, 17, "w", "x2", (1, 2), ("L", (2, 1)), (1, (2, 3), "w")]:
        assert gr.parse_label(gr.render_label(label)) == label


def test_label_rendering():
    assert gr.render_label((2, 1)) == "(2,1)"
    assert gr.render_label(("L", 3)) == "(L,3)"
    assert gr.render_label("w") == "w"


def test_validate_label_rejects():
    for bad in [True, 1.5, (1,), "not ok", "", None, [1, 2]]:
        with pytest.raises(ValueError):
            gr.validate_label(bad)


def test_parse_label_rejects_junk():
    for text in ["(1,2", "1)", "(1,2)x", "", "(,)"]:
        with pytest.raises(ValueError):
            gr.parse_label(text)


# -- the container -----------------------------------------------------------

def test_vertices_and_edges_are_canonically_ordered():
    g = gr.Graph([3, 1, 2], [(2, 3), (1, 2)])
    assert g.vertices == (1, 2, 3)
    assert g.edges == ((1, 2), (2, 3))
    # same data in any input order gives an equal, equally-hashed graph
    h = gr.Graph([2, 3, 1], [(1, 2), (3, 2)])
    assert g == h and hash(g) == hash(h)


def test_duplicate_labels_rejected_after_rendering():
    with pytest.raises(ValueError):
        gr.Graph([1, "1"])


def test_edge_endpoint_must_be_a_vertex():
    with pytest.raises(ValueError):
        gr.Graph([1, 2], [(1, 3)])


def test_self_pair_must_go_in_loops():
    with pytest.raises(ValueError):
        gr.Graph([1, 2], [(1, 1)])


def test_loops_and_neighborhoods():
    g = gr.Graph([1, 2, 3], [(1, 2)], loops=[3])
    assert g.is_looped(3) and not g.is_looped(1)
    assert g.neighbors(3) == frozenset({3})
    assert g.neighbors(1) == frozenset({2})
    assert g.closed_neighborhood(1) == frozenset({1, 2})
    assert g.closed_neighborhood_set([1, 3]) == frozenset({1, 2, 3})
    assert g.has_edge(3, 3) and not g.has_edge(1, 1)


def test_isolated_excludes_looped():
    g = gr.Graph([1, 2, 3], [], loops=[3])
    assert g.isolated_vertices() == (1, 2)
    assert g.unlooped_vertices() == (1, 2)


def test_simplicial_vertex():
    p = gr.path(3)
    assert gr.is_simplicial_vertex(p, 1)
    assert not gr.is_simplicial_vertex(p, 2)       # 1 and 3 not adjacent
    assert all(gr.is_simplicial_vertex(gr.cycle(3), v) for v in (1, 2, 3))
    assert not gr.is_simplicial_vertex(gr.Graph([1]), 1)   # isolated
    # a looped neighbor is in no independent set: must disqualify
    # (at vertex 1 the split would claim S^0; the true complex is a cone on {1,3})
    assert not gr.is_simplicial_vertex(gr.add_loop(gr.path(3), 2), 1)
    assert not gr.is_simplicial_vertex(gr.add_loop(gr.path(3), 1), 1)


# -- stock families ----------------------------------------------------------

def test_complete():
    k4 = gr.complete(4)
    assert k4.vertices == (1, 2, 3, 4)
    assert k4.edge_count == 6 and k4.loop_count == 0
    assert gr.complete(1).edge_count == 0
    with pytest.raises(ValueError):
        gr.complete(0)


def test_path_and_cycle():
    assert gr.path(5).edges == ((1, 2), (2, 3), (3, 4), (4, 5))
    assert gr.path(1).edge_count == 0
    c = gr.cycle(5)
    assert c.edge_count == 5 and c.has_edge(1, 5)
    assert oracles.is_cycle_graph(c, 5)
    with pytest.raises(ValueError):
        gr.cycle(2)


def test_looped_path():
    lp = gr.looped_path(3)
    assert lp.vertices == (0, 1, 2, 3)
    assert lp.loops == (0,) and lp.edge_count == 3
    lone = gr.looped_path(0)
    assert lone.vertices == (0,) and lone.loops == (0,)


def test_product_adjacency_rule():
    G, H = gr.cycle(4), gr.looped_path(2)
    P = gr.categorical_product(G, H)
    assert P.vertex_count == 12
    for (g1, h1), (g2, h2) in itertools.combinations(P.vertices, 2):
        want = G.has_edge(g1, g2) and H.has_edge(h1, h2)
        assert P.has_edge((g1, h1), (g2, h2)) == want
    assert P.loop_count == 0       # loop needs both coordinates self-adjacent
    P2 = gr.categorical_product(gr.add_loop(G, 1), H)
    assert P2.loops == ((1, 0),)


def test_product_k2_k2_is_two_disjoint_edges():
    P = gr.categorical_product(gr.complete(2), gr.complete(2))
    assert set(P.edges) == {((1, 1), (2, 2)), ((1, 2), (2, 1))}


def test_product_rejects_empty_factor():
    with pytest.raises(ValueError):
        gr.categorical_product(gr.Graph([]), gr.complete(2))


# -- Mycielskian levels ------------------------------------------------------

def test_mycielskian_counts_and_apex_rule():
    M = gr.generalized_mycielskian(gr.complete(3), 4)
    assert M.vertex_count == 13 and M.edge_count == 24 and M.loop_count == 0
    assert set(M.neighbors(gr.APEX)) == {(v, 3) for v in (1, 2, 3)}
    # inside the levels, adjacency is the product rule
    assert M.has_edge((1, 0), (2, 1)) and not M.has_edge((1, 0), (1, 1))
    assert M.has_edge((1, 0), (2, 0))     # level 0 keeps the base edges


def test_mycielskian_apex_skips_isolated_vertices():
    G = gr.Graph([1, 2, 3], [(1, 2)])
    M = gr.generalized_mycielskian(G, 2)
    assert M.has_edge(gr.APEX, (1, 1)) and M.has_edge(gr.APEX, (2, 1))
    assert not M.has_edge(gr.APEX, (3, 1))


@pytest.mark.parametrize("r", range(1, 9))
def test_mycielskian_of_k2_is_odd_cycle(r):
    M = gr.generalized_mycielskian(gr.complete(2), r)
    assert oracles.is_cycle_graph(M, 2 * r + 1)


def test_mycielskian_rejects_bad_input():
    with pytest.raises(ValueError):
        gr.generalized_mycielskian(gr.complete(3), 0)
    with pytest.raises(ValueError):
        gr.generalized_mycielskian(gr.looped_path(2), 2)


# -- tower gadgets and ladders -----------------------------------------------

def test_tower_gadget_structure():
    g = gr.tower_gadget(3, 1, 2)
    assert set(g.vertices) == {(v, j) for v in (1, 2, 3) for j in (0, 1)} | {(1, 2)}
    assert set(g.neighbors((1, 2))) == {(2, 1), (3, 1)}
    assert g.has_edge((1, 0), (2, 0)) and not g.has_edge((1, 1), (2, 1))


def test_tower_gadget_low_floors():
    lone = gr.tower_gadget(3, 2, 0)
    assert lone.vertices == ((2, 0),) and lone.edge_count == 0
    g = gr.tower_gadget(4, 3, 1)
    assert g.vertex_count == 5
    assert set(g.neighbors((3, 1))) == {(v, 0) for v in (1, 2, 4)}


def test_tower_gadget_domain():
    for bad in [(2, 1, 3), (3, 0, 3), (3, 4, 3), (3, 1, -1)]:
        with pytest.raises(ValueError):
            gr.tower_gadget(*bad)


@pytest.mark.parametrize("n,i", [(3, 1), (5, 2), (6, 4)])
def test_cycle_ladder_counts(n, i):
    g = gr.cycle_ladder(n, i)
    assert g.vertex_count == n + 2 * i
    assert g.edge_count == n + 3 * i
    assert g.has_edge(2, "x1") and g.has_edge(n, "y1")
    assert g.has_edge(1, f"x{i}") and g.has_edge(1, f"y{i}")
    assert g.has_edge(f"x{i}", f"y{i}")
    assert not g.has_edge(1, 2) and not g.has_edge(1, n)


def test_cycle_ladder_zero_rungs_is_the_cycle():
    g = gr.cycle_ladder(5, 0)
    assert g.vertices == gr.cycle(5).vertices and g.edges == gr.cycle(5).edges


def test_ladder_replace_crossing():
    G = gr.complete(4)
    H = gr.ladder_replace_crossing(G, 1, 2, 3, 4)
    assert H.vertex_count == 8
    assert H.edge_count == G.edge_count - 2 + 8
    for e in [(1, "a"), ("a", "b"), ("b", 3), (2, "c"), ("c", "d"),
              ("d", 4), ("a", "c"), ("b", "d")]:
        assert H.has_edge(*e)
    assert not H.has_edge(1, 4) and not H.has_edge(2, 3)
    assert H.has_edge(1, 2)


def test_ladder_replace_triangle():
    H = gr.ladder_replace_triangle(gr.complete(3), 1, 2, 3)
    assert H.vertex_count == 7 and H.edge_count == 9
    assert H.has_edge("b", 3) and H.has_edge("d", 3)
    assert not H.has_edge(1, 3) and not H.has_edge(2, 3)
    assert H.has_edge(1, 2)


def test_ladder_fresh_labels_avoid_collisions():
    G = gr.Graph([1, 2, 3, 4, "a"], [(1, 2), (1, 4), (2, 3), (3, 4)])
    H = gr.ladder_replace_crossing(G, 1, 2, 3, 4)
    assert "a2" in H and "b" in H and H.vertex_count == 9


def test_ladder_replace_validates():
    with pytest.raises(ValueError):
        gr.ladder_replace_crossing(gr.path(4), 1, 2, 3, 4)   # no (1,4) edge
    with pytest.raises(ValueError):
        gr.ladder_replace_crossing(gr.complete(4), 1, 2, 3, 3)
    with pytest.raises(ValueError):
        gr.ladder_replace_triangle(gr.path(3), 1, 2, 3)


# -- surgery -----------------------------------------------------------------

def test_induced_subgraph_and_delete():
    g = gr.cycle(5)
    h = gr.induced_subgraph(g, [1, 2, 3])
    assert h.vertices == (1, 2, 3) and h.edges == ((1, 2), (2, 3))
    assert gr.delete_vertices(g, [4, 5]) == h
    with pytest.raises(ValueError):
        gr.induced_subgraph(g, [9])
    assert g.vertex_count == 5      # originals untouched


def test_disjoint_union_tags_sides():
    u = gr.disjoint_union(gr.path(2), gr.cycle(3))
    assert u.vertex_count == 5 and u.edge_count == 4
    assert u.has_edge(("L", 1), ("L", 2))
    assert not any(a[0] != b[0] for a, b in u.edges)


def test_add_edge_add_loop():
    g = gr.path(3)
    assert gr.add_edge(g, 1, 3).has_edge(1, 3)
    assert gr.add_loop(g, 2).is_looped(2)
    with pytest.raises(ValueError):
        gr.add_edge(g, 1, 1)
    with pytest.raises(ValueError):
        gr.add_edge(g, 1, 9)
    assert not g.has_edge(1, 3)


def test_construction_is_deterministic():
    a = gr.generalized_mycielskian(gr.complete(4), 3)
    b = gr.generalized_mycielskian(gr.complete(4), 3)
    assert a.vertices == b.vertices and a.edges == b.edges
