import pytest
from hypothesis import given, strategies as st

from transversals import (
    BaseGraph,
    KIND_CYCLE,
    KIND_HAM,
    KIND_MATCHING,
    KIND_PM,
    NaturalIndexing,
    NotNaturallyIndexed,
    SubgraphFamily,
    Transversal,
    canonical_transversal,
    complete_graph,
    cycle_graph,
    edge,
    is_naturally_indexed,
    naturally_index,
    transversal_kind_for,
    validate_family,
    validate_transversal,
)
from transversals.core import require_naturally_indexed

from conftest import make_ham_family


def test_edge_orders_endpoints():
    assert edge(3, 1) == (1, 3)
    assert edge(1, 3) == (1, 3)
    assert edge(0, 0) == (0, 0)


@given(st.integers(0, 50), st.integers(0, 50))
def test_edge_symmetric(u, v):
    assert edge(u, v) == edge(v, u)
    assert edge(u, v)[0] <= edge(u, v)[1]


def test_base_graph_basics():
    g = cycle_graph(5)
    assert g.num_edges == 5
    assert g.degree(0) == 2
    assert g.has_edge(0, 4) and g.has_edge(4, 0)
    assert not g.has_edge(0, 2)
    assert sorted(g.neighbors(0)) == [1, 4]
    assert g.max_degree() == 2
    k = complete_graph(4)
    assert k.num_edges == 6
    assert k.max_degree() == 3


def test_base_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        BaseGraph(3, [(0, 3)])
    with pytest.raises(ValueError):
        BaseGraph(3, [(1, 1)])


def test_family_validation_catches_stray_subgraph_edge():
    base = cycle_graph(4)
    subs = [frozenset({edge(i, (i + 1) % 4)}) for i in range(4)]
    subs[2] = frozenset({edge(0, 2)})  # not a base edge
    fam = SubgraphFamily(base, subs, KIND_HAM)
    rep = validate_family(fam)
    assert not rep.ok
    assert any(v.code == "edge_not_in_base" for v in rep.violations)


def test_family_kind_is_checked():
    base = cycle_graph(4)
    subs = [frozenset({edge(i, (i + 1) % 4)}) for i in range(4)]
    with pytest.raises(ValueError):
        SubgraphFamily(base, subs, "cycle")


def test_pm_family_needs_even_vertices_and_half_colors():
    base = BaseGraph(4, [(0, 2), (1, 3)])
    fam = SubgraphFamily(
        base, [frozenset({(0, 2)}), frozenset({(1, 3)})], KIND_PM
    )
    assert validate_family(fam).ok
    bad = SubgraphFamily(base, [frozenset({(0, 2)})], KIND_PM)
    assert not validate_family(bad).ok


def test_canonical_transversal_shapes():
    fam = make_ham_family(6, {})
    t = canonical_transversal(fam)
    assert t.kind == KIND_CYCLE
    assert t.color_of(edge(2, 3)) == 2
    assert t.color_of(edge(5, 0)) == 5
    assert t.cycle_sequence() == (0, 1, 2, 3, 4, 5)
    assert validate_transversal(fam, t).ok
    assert is_naturally_indexed(fam, t)


def test_transversal_validation_catches_color_misuse():
    fam = make_ham_family(5, {})
    items = {edge(i, (i + 1) % 5): i for i in range(5)}
    items[edge(4, 0)] = 0  # duplicate color, one missing
    t = Transversal.from_map(KIND_CYCLE, items)
    rep = validate_transversal(fam, t)
    assert not rep.ok
    assert any(v.code == "color_repeat" for v in rep.violations)


def test_transversal_validation_catches_wrong_subgraph():
    fam = make_ham_family(5, {})
    items = {edge(i, (i + 1) % 5): (i + 1) % 5 for i in range(5)}
    t = Transversal.from_map(KIND_CYCLE, items)
    rep = validate_transversal(fam, t)
    assert not rep.ok
    assert any(v.code == "edge_not_in_subgraph" for v in rep.violations)


def test_matching_transversal_shape_check():
    # 6 vertices, pairs (0,3),(1,4),(2,5)
    base = BaseGraph(6, [(0, 3), (1, 4), (2, 5), (0, 4)])
    subs = [frozenset({(0, 3)}), frozenset({(1, 4)}), frozenset({(2, 5)})]
    fam = SubgraphFamily(base, subs, KIND_PM)
    t = Transversal.from_map(KIND_MATCHING, {(0, 3): 0, (1, 4): 1, (2, 5): 2})
    assert validate_transversal(fam, t).ok
    overlap = Transversal.from_map(KIND_MATCHING, {(0, 3): 0, (0, 4): 1, (2, 5): 2})
    rep = validate_transversal(fam, overlap)
    assert not rep.ok


def test_kind_mapping():
    assert transversal_kind_for(KIND_HAM) == KIND_CYCLE
    assert transversal_kind_for(KIND_PM) == KIND_MATCHING


def test_require_naturally_indexed_raises():
    fam = make_ham_family(5, {})
    seq = [0, 2, 4, 1, 3]
    items = {edge(seq[i], seq[(i + 1) % 5]): i for i in range(5)}
    # relabel family so this is a valid but non-canonical transversal
    base = complete_graph(5)
    subs = [frozenset({e}) for e in (edge(seq[i], seq[(i + 1) % 5]) for i in range(5))]
    fam2 = SubgraphFamily(base, subs, KIND_HAM)
    t = Transversal.from_map(KIND_CYCLE, items)
    assert validate_transversal(fam2, t).ok
    assert not is_naturally_indexed(fam2, t)
    with pytest.raises(NotNaturallyIndexed):
        require_naturally_indexed(fam2, t)
    fam3, t3, idx = naturally_index(fam2, t)
    require_naturally_indexed(fam3, t3)
    assert t3 == canonical_transversal(fam3)


@given(st.integers(5, 12), st.randoms(use_true_random=False))
def test_natural_indexing_round_trip(n, rng):
    seq = list(range(n))
    rng.shuffle(seq)
    colors = list(range(n))
    rng.shuffle(colors)
    base = complete_graph(n)
    subs = [frozenset() for _ in range(n)]
    items = {}
    for k in range(n):
        e = edge(seq[k], seq[(k + 1) % n])
        subs[colors[k]] = frozenset({e})
        items[e] = colors[k]
    fam = SubgraphFamily(base, subs, KIND_HAM)
    t = Transversal.from_map(KIND_CYCLE, items)
    fam2, t2, idx = naturally_index(fam, t)
    assert is_naturally_indexed(fam2, t2)
    inv = idx.inverse()
    assert inv.apply_to_transversal(t2) == t
    back = inv.apply_to_family(fam2)
    assert back == fam
    for v in range(n):
        assert inv.map_vertex(idx.map_vertex(v)) == v


def test_indexing_maps_edges_and_vertex_sets():
    idx = NaturalIndexing(vertex_perm=(2, 0, 1), color_perm=(0, 1, 2))
    assert idx.map_edge((0, 1)) == (0, 2)
    assert idx.map_vertices((0, 2)) == (1, 2)


def test_pm_natural_indexing_places_pairs():
    # pairs under planted matching: (0,1),(2,3) -> canonical (0,2),(1,3)
    base = BaseGraph(4, [(0, 1), (2, 3), (1, 2)])
    subs = [frozenset({(0, 1)}), frozenset({(2, 3), (1, 2)})]
    fam = SubgraphFamily(base, subs, KIND_PM)
    t = Transversal.from_map(KIND_MATCHING, {(0, 1): 0, (2, 3): 1})
    fam2, t2, idx = naturally_index(fam, t)
    assert is_naturally_indexed(fam2, t2)
    assert t2.color_of(edge(0, 2)) == 0
    assert t2.color_of(edge(1, 3)) == 1
