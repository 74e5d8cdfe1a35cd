import random

import pytest

from transversals import (
    CandidateSet,
    RbDigraph,
    RybDigraph,
    annotate_ham,
    annotate_pm,
    build_full_rb,
    build_full_ryb,
    canonical_transversal,
    d_cross,
    d_star,
    edge,
    gen_planted_pm_family,
    gen_witness_instance_ham,
    is_locally_dominating,
    is_maximal_red_independent,
    is_red_independent,
    omega_member_ham,
    omega_member_pm,
    second_ham_transversal,
    second_pm_transversal,
)

from conftest import make_ham_family


def test_figure_arcs(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    assert {v: sorted(H.yellow[v]) for v in range(6) if H.yellow[v]} == {
        2: [0],
        5: [3],
    }
    assert {v: sorted(H.blue[v]) for v in range(6) if H.blue[v]} == {
        1: [3],
        4: [0],
    }


def test_yellow_arc_excludes_cycle_neighbors():
    # chord (1, 3) in G_1 gives yellow 1 -> 3; chord (1, 2) could not
    fam = make_ham_family(7, {1: [(1, 3)]})
    H = build_full_ryb(fam, canonical_transversal(fam))
    assert 3 in H.yellow[1]
    with pytest.raises(ValueError):
        RybDigraph.from_arcs(7, [(1, 2)], [])
    with pytest.raises(ValueError):
        RybDigraph.from_arcs(7, [(1, 1)], [])
    with pytest.raises(ValueError):
        RybDigraph.from_arcs(7, [], [(0, 6)])


def test_blue_arc_comes_from_previous_subgraph():
    # chord (2, 5) placed in G_1 means blue arc 2 -> 5
    fam = make_ham_family(7, {1: [(2, 5)]})
    H = build_full_ryb(fam, canonical_transversal(fam))
    assert 5 in H.blue[2]
    assert not H.yellow[2]


def test_red_independence_circular_distance():
    H = RybDigraph.from_arcs(8, [], [])
    assert is_red_independent(H, (0, 3))
    assert is_red_independent(H, (0, 4))
    assert not is_red_independent(H, (0, 1))
    assert not is_red_independent(H, (0, 2))
    assert not is_red_independent(H, (0, 6))  # distance 2 around the wrap
    H9 = RybDigraph.from_arcs(9, [], [])
    assert is_red_independent(H9, (0, 3, 6))


def test_d_star_counts_min_inset_support(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    assert d_star(H, (0, 3)) == 1
    assert is_locally_dominating(H, (0, 3))
    # member 0 needs yellow from 5 into S and blue from 1 into S
    assert not is_locally_dominating(H, (0,)) or d_star(H, (0,)) == 0


def test_d_star_on_witness_instance_matches_request():
    for d in (1, 2):
        fam, t = gen_witness_instance_ham(9, (0, 3, 6), d, seed=5)
        H = build_full_ryb(fam, t)
        assert d_star(H, (0, 3, 6)) == d
        assert is_locally_dominating(H, (0, 3, 6))


def test_rb_partner_and_pair_index():
    H = RbDigraph.from_arcs(4, [])
    assert H.partner(0) == 4 and H.partner(4) == 0
    assert H.partner(3) == 7 and H.partner(7) == 3
    assert H.pair_index(2) == 2 and H.pair_index(6) == 2


def test_rb_arcs_cross_pair_boundary():
    fam, t = gen_planted_pm_family(5, 2, seed=1)
    H = build_full_rb(fam, t)
    for tail in range(10):
        for head in H.blue[tail]:
            assert H.pair_index(head) != H.pair_index(tail)


def test_pm_red_independence_one_per_pair():
    H = RbDigraph.from_arcs(3, [])
    assert is_red_independent(H, (0, 1, 2))
    assert is_red_independent(H, (0, 4, 2))
    assert not is_red_independent(H, (0, 3, 1))  # 0 and 3 share pair 0
    assert is_maximal_red_independent(H, (0, 4, 2))
    assert not is_maximal_red_independent(H, (0, 4))


def test_d_cross_counts_escapes():
    fam, t = gen_planted_pm_family(6, 2, seed=3)
    H = build_full_rb(fam, t)
    S = tuple(range(6))
    assert d_cross(H, S) == 2  # every x-side vertex got exactly 2 cross edges
    got = min(len([w for w in H.blue[v] if w not in set(S)]) for v in S)
    assert got == 2


def test_annotate_populates_metrics(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    cand = annotate_ham(H, (0, 3))
    assert isinstance(cand, CandidateSet)
    assert cand.members == (0, 3)
    assert cand.metrics.red_independent
    assert cand.metrics.depth == 1
    assert len(cand) == 2

    fam2, t2 = gen_planted_pm_family(4, 1, seed=0)
    H2 = build_full_rb(fam2, t2)
    cand2 = annotate_pm(H2, tuple(range(4)))
    assert cand2.metrics.depth == d_cross(H2, tuple(range(4)))


def test_omega_member_ham_accepts_and_rejects(figure_family):
    fam, t = figure_family
    H = build_full_ryb(fam, t)
    t2 = second_ham_transversal(fam, t, (0, 3), H)
    assert omega_member_ham(t, (0, 3), t2)
    assert omega_member_ham(t, (0, 3), t)


def test_omega_member_ham_agrees_with_enumeration():
    from transversals import enumerate_all_ham_transversals, enumerate_omega_ham
    from transversals import gen_planted_ham_family

    for seed in (0, 1, 2):
        fam, t = gen_planted_ham_family(8, 3, seed=seed)
        S = (0, 4)
        omega = set(enumerate_omega_ham(fam, t, S))
        everything = enumerate_all_ham_transversals(fam)
        assert omega <= set(everything)
        flags = [omega_member_ham(t, S, x) for x in everything]
        assert [x in omega for x in everything] == flags
        assert any(flags) and not all(flags)


def test_omega_member_pm_checks_color_and_boundary():
    fam, t = gen_planted_pm_family(5, 2, seed=7)
    H = build_full_rb(fam, t)
    S = tuple(range(5))
    t2 = second_pm_transversal(fam, t, S, H)
    assert omega_member_pm(t, S, t2)
    assert omega_member_pm(t, S, t)
