"""Turning one transversal into factorially many.

The exchange neighborhood of (base, S) is enumerated directly for small
sets. The multiplication recursions first locate a saturated boundary
vertex: a vertex all of whose set-targeting edges are realized by some
already-constructed neighborhood member. Saturation is reached
constructively, by repeatedly building a one-arc-per-vertex sub-digraph
from the not-yet-realized edges, running the exchange, and crossing off
every arc the returned transversal realizes. Branching over the
saturated vertex's d+1 or more target edges and recursing on the shrunk
set multiplies the count by d+1 per level.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Sequence

from .core import (
    BaseGraph,
    Edge,
    SubgraphFamily,
    Transversal,
    edge,
    naturally_index,
    require_naturally_indexed,
)
from .digraphs import (
    RbDigraph,
    RybDigraph,
    build_full_rb,
    build_full_ryb,
    d_cross,
    d_star,
)
from .errors import DStarTooSmall, NotRedIndependent, WalkStuck
from .exchange import second_ham_transversal, second_pm_transversal


def _cycle_paths(n: int, members: Sequence[int]):
    """Arcs of the base cycle strictly between consecutive set members.

    Yields (vertices, first_color, last_color): the colors carried by the
    base edges joining the path's two endpoints to the set.
    """
    ms = sorted(members)
    for k, m in enumerate(ms):
        nxt = ms[(k + 1) % len(ms)]
        verts = []
        v = (m + 1) % n
        while v != nxt:
            verts.append(v)
            v = (v + 1) % n
        yield tuple(verts), m, (nxt - 1) % n


def enumerate_omega_ham(
    family: SubgraphFamily, base: Transversal, members: Sequence[int]
) -> list[Transversal]:
    """All members of the exchange neighborhood, canonically sorted.

    Every neighborhood member alternates set vertices and reoriented base
    paths, with each path endpoint attached to a set vertex by an edge of
    the subgraph matching that endpoint's base boundary color. The search
    is exponential in |members|; callers keep the set small.
    """
    require_naturally_indexed(family, base)
    n = family.num_vertices
    ms = sorted(set(members))
    if not ms:
        return [base]
    paths = list(_cycle_paths(n, ms))
    if any(not p[0] for p in paths):
        raise NotRedIndependent("consecutive set members leave an empty path")
    start = ms[0]
    others = [m for m in ms if m != start]
    found: set[Transversal] = set()

    def admissible(v: int, color: int, m: int) -> bool:
        return edge(v, m) in family.subgraphs[color]

    base_colors = base.colors()

    def build(arrangement: list[tuple[int, bool, int]]):
        # arrangement entries: (path index, reversed?, member the path exits to)
        psi: dict[Edge, int] = {}
        cur = start
        for pi, rev, nxt in arrangement:
            verts, cf, cl = paths[pi]
            seq = verts[::-1] if rev else verts
            enter_color = cl if rev else cf
            exit_color = cf if rev else cl
            psi[edge(cur, seq[0])] = enter_color
            for a, b in zip(seq, seq[1:]):
                psi[edge(a, b)] = base_colors[edge(a, b)]
            psi[edge(seq[-1], nxt)] = exit_color
            cur = nxt
        found.add(Transversal.from_map(base.kind, psi))

    def rec(cur: int, used_paths: set[int], used_members: set[int], arrangement):
        last = len(used_paths) == len(paths) - 1
        for pi in range(len(paths)):
            if pi in used_paths:
                continue
            verts, cf, cl = paths[pi]
            for rev in (False, True):
                enter_v = verts[-1] if rev else verts[0]
                enter_c = cl if rev else cf
                exit_v = verts[0] if rev else verts[-1]
                exit_c = cf if rev else cl
                if not admissible(enter_v, enter_c, cur):
                    continue
                if last:
                    if admissible(exit_v, exit_c, start):
                        build(arrangement + [(pi, rev, start)])
                    continue
                for mm in others:
                    if mm in used_members:
                        continue
                    if admissible(exit_v, exit_c, mm):
                        rec(cur=mm, used_paths=used_paths | {pi}, used_members=used_members | {mm},
                            arrangement=arrangement + [(pi, rev, mm)])

    rec(start, set(), set(), [])
    return sorted(found, key=lambda t: t.items)


def enumerate_omega_pm(
    family: SubgraphFamily, base: Transversal, members: Sequence[int]
) -> list[Transversal]:
    """All boundary-crossing recolor-fixed matchings, canonically sorted.

    Equivalent to the perfect matchings of the member-versus-outside
    bipartite admissibility graph, so len(result) equals the permanent of
    omega_admissibility_matrix(family, members).
    """
    require_naturally_indexed(family, base)
    n = family.num_pairs
    ms = sorted(set(members))
    if len(ms) != n:
        raise ValueError("need exactly one endpoint per pair")
    outside = [v for v in range(2 * n) if v not in set(ms)]
    heads = {
        m: [w for w in outside if edge(m, w) in family.subgraphs[m % n]] for m in ms
    }
    found: list[Transversal] = []
    taken: set[int] = set()
    psi: dict[Edge, int] = {}

    def rec(k: int):
        if k == len(ms):
            found.append(Transversal.from_map(base.kind, dict(psi)))
            return
        m = ms[k]
        for w in heads[m]:
            if w in taken:
                continue
            taken.add(w)
            psi[edge(m, w)] = m % n
            rec(k + 1)
            del psi[edge(m, w)]
            taken.discard(w)

    rec(0)
    return sorted(set(found), key=lambda t: t.items)


def omega_admissibility_matrix(
    family: SubgraphFamily, members: Sequence[int]
) -> list[list[int]]:
    """0/1 matrix: members (rows, sorted) versus outside vertices (columns,
    sorted); 1 where the subgraph of the member's pair holds the edge."""
    n = family.num_pairs
    ms = sorted(set(members))
    outside = [v for v in range(2 * n) if v not in set(ms)]
    return [
        [1 if edge(m, w) in family.subgraphs[m % n] else 0 for w in outside] for m in ms
    ]


@dataclass
class WitnessTable:
    """Realized set-targeting edges per boundary vertex.

    witnesses maps (vertex, edge) to a neighborhood member containing the
    edge; unrealized holds what is still missing per vertex; saturated is
    the vertex whose unrealized set emptied first.
    """

    saturated: int
    witnesses: dict[tuple[int, Edge], Transversal]
    unrealized: dict[int, frozenset[Edge]]

    def targets_of(self, v: int) -> list[Edge]:
        return sorted(e for (w, e) in self.witnesses if w == v)


def find_saturated_vertex_ham(
    family: SubgraphFamily,
    base: Transversal,
    members: Sequence[int],
    H: RybDigraph,
) -> WitnessTable:
    """Accumulate witnesses until some boundary vertex is saturated.

    Each round keeps exactly one unrealized arc per boundary vertex
    (lowest head), runs the exchange on that sub-digraph, and records the
    returned transversal for every kept arc it realizes. The returned
    cycle always differs from base inside the kept arcs, so every round
    retires at least one arc and the loop terminates.
    """
    n = family.num_vertices
    ms = sorted(set(members))
    s = frozenset(ms)
    witnesses: dict[tuple[int, Edge], Transversal] = {}
    todo: dict[int, set[Edge]] = {}
    side: dict[int, str] = {}
    for m in ms:
        yv = (m - 1) % n
        bv = (m + 1) % n
        side[yv] = "yellow"
        side[bv] = "blue"
        witnesses[(yv, edge(yv, m))] = base
        witnesses[(bv, edge(bv, m))] = base
        todo[yv] = {edge(yv, h) for h in H.yellow[yv] if h in s}
        todo[bv] = {edge(bv, h) for h in H.blue[bv] if h in s}

    def finished() -> int | None:
        empties = [v for v, t in todo.items() if not t]
        return min(empties) if empties else None

    while True:
        v0 = finished()
        if v0 is not None:
            return WitnessTable(
                v0, witnesses, {v: frozenset(t) for v, t in todo.items()}
            )
        yarcs = []
        barcs = []
        for v, pending in todo.items():
            head = min(h if lo == v else lo for lo, h in pending)
            (yarcs if side[v] == "yellow" else barcs).append((v, head))
        J = RybDigraph.from_arcs(n, yarcs, barcs)
        t2 = second_ham_transversal(family, base, ms, J)
        progressed = False
        for v, pending in todo.items():
            for e in sorted(pending & t2.edge_set):
                witnesses[(v, e)] = t2
                pending.discard(e)
                progressed = True
        if not progressed:
            raise WalkStuck("exchange realized none of the kept arcs")


def find_saturated_vertex_pm(
    family: SubgraphFamily,
    base: Transversal,
    members: Sequence[int],
    H: RbDigraph,
) -> WitnessTable:
    """Matching-side witness accumulation over blue escape arcs."""
    n = family.num_pairs
    ms = sorted(set(members))
    s = frozenset(ms)
    witnesses: dict[tuple[int, Edge], Transversal] = {}
    todo: dict[int, set[Edge]] = {}
    for v in ms:
        witnesses[(v, edge(v, H.partner(v)))] = base
        todo[v] = {edge(v, h) for h in H.blue[v] if h not in s}

    while True:
        empties = [v for v, t in todo.items() if not t]
        if empties:
            v0 = min(empties)
            return WitnessTable(v0, witnesses, {v: frozenset(t) for v, t in todo.items()})
        arcs = []
        for v, pending in todo.items():
            head = min(h if lo == v else lo for lo, h in pending)
            arcs.append((v, head))
        J = RbDigraph.from_arcs(n, arcs)
        t2 = second_pm_transversal(family, base, ms, J)
        progressed = False
        for v, pending in todo.items():
            for e in sorted(pending & t2.edge_set):
                witnesses[(v, e)] = t2
                pending.discard(e)
                progressed = True
        if not progressed:
            raise WalkStuck("exchange realized none of the kept arcs")


def _set_endpoint(e: Edge, s: frozenset[int]) -> int:
    u, v = e
    if (u in s) == (v in s):
        raise ValueError(f"edge {e} does not cross the set boundary")
    return u if u in s else v


def many_ham_transversals(
    family: SubgraphFamily, base: Transversal, members: Sequence[int]
) -> list[Transversal]:
    """At least (d+1)! distinct transversals, d the support depth of members.

    All outputs lie in the exchange neighborhood of (base, members) and
    include base itself.
    """
    require_naturally_indexed(family, base)
    ms = tuple(sorted(set(members)))
    H = build_full_ryb(family, base)
    d = d_star(H, ms)
    if d < 1:
        raise DStarTooSmall(f"support depth is {d}; need at least 1")
    out = sorted(set(_many_ham(family, base, ms, H, d)), key=lambda t: t.items)
    assert len(out) >= math.factorial(d + 1), "multiplication fell short of (d+1)!"
    return out


def _many_ham(family, base, ms, H, d) -> list[Transversal]:
    if d == 1:
        return [base, second_ham_transversal(family, base, ms, H)]
    table = find_saturated_vertex_ham(family, base, ms, H)
    v0 = table.saturated
    targets = table.targets_of(v0)
    assert len(targets) >= d + 1, "saturated vertex has too few targets"
    s = frozenset(ms)
    out: list[Transversal] = []
    for e in targets:
        wit = table.witnesses[(v0, e)]
        s1 = _set_endpoint(e, s)
        rest = tuple(m for m in ms if m != s1)
        fam2, t2, idx = naturally_index(family, wit)
        ms2 = idx.map_vertices(rest)
        H2 = build_full_ryb(fam2, t2)
        d2 = d_star(H2, ms2)
        assert d2 >= d - 1, "support depth dropped by more than one"
        inv = idx.inverse()
        for sub in _many_ham(fam2, t2, ms2, H2, d2):
            out.append(inv.apply_to_transversal(sub))
    return out


@dataclass(frozen=True)
class _PmReduction:
    """Vertex/color compaction after deleting one cross edge and its color."""

    keep_vertices: tuple[int, ...]
    removed_color: int

    def vmap(self, v: int) -> int:
        return bisect.bisect_left(self.keep_vertices, v)

    def vinv(self, v: int) -> int:
        return self.keep_vertices[v]

    def cmap(self, c: int) -> int:
        return c if c < self.removed_color else c - 1

    def cinv(self, c: int) -> int:
        return c if c < self.removed_color else c + 1


def _reduce_pm_instance(
    family: SubgraphFamily, wit: Transversal, e: Edge, c: int
) -> tuple[SubgraphFamily, Transversal, _PmReduction]:
    """Delete edge e's endpoints and color c; compact ids to stay contiguous.

    The reduced planted matching is wit minus e, so the surviving pairs
    are wit's pairs, not the original ones.
    """
    gone = set(e)
    keep = tuple(v for v in range(family.num_vertices) if v not in gone)
    red = _PmReduction(keep, c)
    base_r = BaseGraph(
        len(keep),
        [
            edge(red.vmap(u), red.vmap(v))
            for u, v in family.base.edges()
            if u not in gone and v not in gone
        ],
    )
    subs = [
        frozenset(
            edge(red.vmap(u), red.vmap(v))
            for u, v in g
            if u not in gone and v not in gone
        )
        for k, g in enumerate(family.subgraphs)
        if k != c
    ]
    fam_r = SubgraphFamily(base_r, subs, family.kind)
    wit_r = Transversal.from_map(
        wit.kind,
        {
            edge(red.vmap(u), red.vmap(v)): red.cmap(cc)
            for (u, v), cc in wit.items
            if (u, v) != e
        },
    )
    return fam_r, wit_r, red


def many_pm_transversals(
    family: SubgraphFamily, base: Transversal, members: Sequence[int]
) -> list[Transversal]:
    """At least (d+1)! distinct matchings, d the blue escape depth."""
    require_naturally_indexed(family, base)
    ms = tuple(sorted(set(members)))
    H = build_full_rb(family, base)
    d = d_cross(H, ms)
    out = sorted(set(_many_pm(family, base, ms, H, d)), key=lambda t: t.items)
    assert len(out) >= math.factorial(d + 1), "multiplication fell short of (d+1)!"
    return out


def _many_pm(family, base, ms, H, d) -> list[Transversal]:
    n = family.num_pairs
    if n == 1 or d == 0:
        return [base]
    table = find_saturated_vertex_pm(family, base, ms, H)
    v0 = table.saturated
    targets = table.targets_of(v0)
    assert len(targets) >= d + 1, "saturated vertex has too few targets"
    out: list[Transversal] = []
    for e in targets:
        wit = table.witnesses[(v0, e)]
        c = wit.colors()[e]
        fam_r, wit_r, red = _reduce_pm_instance(family, wit, e, c)
        fam2, t2, idx = naturally_index(fam_r, wit_r)
        ms2 = idx.map_vertices(red.vmap(m) for m in ms if m != v0)
        H2 = build_full_rb(fam2, t2)
        d2 = d_cross(H2, ms2)
        assert d2 >= d - 1, "escape depth dropped by more than one"
        inv = idx.inverse()
        for sub in _many_pm(fam2, t2, ms2, H2, d2):
            lifted = inv.apply_to_transversal(sub)
            colors = {
                edge(red.vinv(u), red.vinv(v)): red.cinv(cc)
                for (u, v), cc in lifted.items
            }
            colors[e] = c
            out.append(Transversal.from_map(base.kind, colors))
    return out
