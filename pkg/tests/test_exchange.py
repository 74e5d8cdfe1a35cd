import random

import pytest

from transversals import (
    NoBlueEscape,
    NotLocallyDominating,
    build_full_rb,
    build_full_ryb,
    canonical_transversal,
    d_cross,
    edge,
    find_alternating_cycle,
    gen_planted_pm_family,
    gen_witness_instance_ham,
    lollipop_second_cycle,
    lollipop_walk,
    omega_member_ham,
    omega_member_pm,
    prune,
    second_ham_transversal,
    second_pm_transversal,
    validate_transversal,
)
from transversals.exchange import PrunedDigraph

from conftest import make_ham_family, random_ham_set


def _ham_cycles_through(n, adj, anchor):
    """All hamiltonian cycles (as edge sets) containing the anchor edge."""
    res = []

    def rec(path, used):
        v = path[-1]
        if len(path) == n:
            if 0 in adj[v] and path[1] < path[-1]:
                es = frozenset(edge(path[i], path[(i + 1) % n]) for i in range(n))
                if anchor in es:
                    res.append(es)
            return
        for w in sorted(adj[v]):
            if w not in used:
                used.add(w)
                path.append(w)
                rec(path, used)
                path.pop()
                used.remove(w)

    rec([0], {0})
    return res


def test_figure_second_transversal_matches_hand_trace(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    t2 = second_ham_transversal(fam, t, (0, 3), H)
    assert t2.colors() == {
        (0, 1): 0,
        (1, 2): 1,
        (2, 3): 2,
        (3, 5): 5,
        (4, 5): 4,
        (0, 4): 3,
    }
    assert validate_transversal(fam, t2).ok
    assert omega_member_ham(t, (0, 3), t2)


def test_prune_keeps_only_rotation_arcs(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    jp = prune(H, (0, 3))
    assert isinstance(jp, PrunedDigraph)
    assert set(jp.members) == {0, 3}
    for m, (tail, head) in jp.yellow_pick:
        assert tail == (m - 1) % 6
        assert head in H.yellow[tail]
        assert head in {0, 3}
    for m, (tail, head) in jp.blue_pick:
        assert tail == (m + 1) % 6
        assert head in H.blue[tail]
        assert head in {0, 3}
    adj = jp.underlying_adjacency()
    # every cycle edge survives
    for i in range(6):
        assert (i + 1) % 6 in adj[i]


def test_walk_finds_the_unique_other_anchored_cycle():
    # frozen instances whose pruned graph has exactly two anchored cycles
    for n, S, seed in [(8, (0, 4), 0), (9, (0, 3, 6), 0)]:
        fam, t = gen_witness_instance_ham(n, S, 1, seed=seed)
        H = build_full_ryb(fam, t)
        jp = prune(H, S)
        anchor = edge(min(S), min(S) + 1)
        thru = _ham_cycles_through(n, jp.underlying_adjacency(), anchor)
        assert len(thru) == 2
        others = [c for c in thru if c != t.edge_set]
        assert len(others) == 1
        seq = lollipop_second_cycle(jp, anchor)
        cyc_edges = frozenset(
            edge(seq[i], seq[(i + 1) % n]) for i in range(n)
        )
        assert cyc_edges == others[0]


def test_anchored_cycle_count_is_even():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randrange(7, 11)
        S = random_ham_set(rng, n, rng.random() < 0.4)
        fam, t = gen_witness_instance_ham(n, S, 1, seed=rng.randrange(10**6))
        H = build_full_ryb(fam, t)
        jp = prune(H, S)
        anchor = edge(min(S), min(S) + 1)
        thru = _ham_cycles_through(n, jp.underlying_adjacency(), anchor)
        assert len(thru) % 2 == 0 and len(thru) >= 2


def test_walk_trace_shape(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    jp = prune(H, (0, 3))
    trace = lollipop_walk(jp, edge(0, 1))
    assert len(trace.states) >= 2
    assert trace.states[0] != trace.states[-1]
    assert len(trace.pivots) == len(trace.states) - 1


def test_prune_rejects_undominated_set():
    fam = make_ham_family(8, {})
    t = canonical_transversal(fam)
    H = build_full_ryb(fam, t)
    with pytest.raises(NotLocallyDominating):
        prune(H, (0, 4))


def test_second_ham_differs_only_in_allowed_places():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randrange(7, 12)
        S = random_ham_set(rng, n, rng.random() < 0.5)
        fam, t = gen_witness_instance_ham(n, S, 1, seed=rng.randrange(10**6))
        H = build_full_ryb(fam, t)
        t2 = second_ham_transversal(fam, t, S, H)
        assert validate_transversal(fam, t2).ok
        assert t2 != t
        assert omega_member_ham(t, S, t2)
        # colors of surviving base edges are untouched
        base_colors = t.colors()
        for e, c in t2.items:
            if e in base_colors:
                assert base_colors[e] == c


def test_find_alternating_cycle_alternates():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randrange(2, 12)
        extra = 1 if n <= 3 else rng.randrange(1, min(4, n - 1))
        fam, t = gen_planted_pm_family(n, extra, seed=rng.randrange(10**6))
        H = build_full_rb(fam, t)
        S = tuple(range(n))
        cyc = find_alternating_cycle(H, S)
        assert cyc.length() >= 2 and cyc.length() % 2 == 0
        assert len(cyc.arcs) == len(cyc.pairs)
        reds = cyc.red_edges(n)
        assert len(reds) == len(cyc.arcs)
        # arcs leave members of the listed pairs and land outside S
        sset = set(S)
        for (tail, head), p in zip(cyc.arcs, cyc.pairs):
            assert H.pair_index(tail) == p
            assert tail in sset and head not in sset


def test_second_pm_transversal_swaps_cycle():
    fam, t = gen_planted_pm_family(6, 2, seed=23)
    H = build_full_rb(fam, t)
    S = tuple(range(6))
    t2 = second_pm_transversal(fam, t, S, H)
    assert validate_transversal(fam, t2).ok
    assert t2 != t
    assert omega_member_pm(t, S, t2)
    # every member still covered, pair colors preserved on moved edges
    for e, c in t2.items:
        u, v = e
        assert H.pair_index(u) == c or H.pair_index(v) == c


def test_no_blue_escape_raises():
    # hunt a side choice whose minimum escape count is zero
    stranded = None
    for seed in range(10):
        fam, t = gen_planted_pm_family(2, 1, seed=seed)
        H = build_full_rb(fam, t)
        for S in [(0, 1), (0, 3), (1, 2), (2, 3)]:
            if d_cross(H, S) == 0:
                stranded = (H, S)
                break
        if stranded:
            break
    assert stranded is not None, "expected some stranded side choice at n = 2"
    H, S = stranded
    with pytest.raises(NoBlueEscape):
        find_alternating_cycle(H, S)
