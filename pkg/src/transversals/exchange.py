"""Producing one more transversal from a planted one.

Cycle kind: prune the arc digraph down to one yellow and one blue arc per
set member, then walk Thomason-style rotations over Hamiltonian paths of
the underlying graph that start with a fixed anchor edge. States of that
auxiliary walk have degree 1 or 2, so starting at the opened base cycle
(degree 1) and never stepping back reaches a different degree-1 state,
which closes into a second Hamiltonian cycle. Recoloring by arc tails
plus one forced missing color yields the second transversal.

Matching kind: walk red pair edges and lowest-head blue arcs alternately
until a pair repeats, cut out the even alternating cycle, and swap it
into the matching; set members keep their base colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Edge,
    KIND_CYCLE,
    KIND_MATCHING,
    SubgraphFamily,
    Transversal,
    edge,
    require_naturally_indexed,
    validate_transversal,
)
from .digraphs import RbDigraph, RybDigraph, is_locally_dominating, is_red_independent
from .errors import (
    InvalidTransversal,
    NoBlueEscape,
    NotLocallyDominating,
    NotMaximalRedIndependent,
    NotRedIndependent,
    RecolorConflict,
    WalkStuck,
)


@dataclass(frozen=True)
class PrunedDigraph:
    """One retained yellow and blue arc per set member, plus the cycle.

    ``yellow_pick[m] = (m-1, head)`` and ``blue_pick[m] = (m+1, head)``,
    heads inside the set. Distance-2 red edges are dropped; the underlying
    graph is the base cycle plus the retained arc edges.
    """

    n: int
    members: tuple[int, ...]
    yellow_pick: tuple[tuple[int, tuple[int, int]], ...]
    blue_pick: tuple[tuple[int, tuple[int, int]], ...]

    def arcs(self) -> list[tuple[int, int, str]]:
        out = [(t, h, "yellow") for _, (t, h) in self.yellow_pick]
        out += [(t, h, "blue") for _, (t, h) in self.blue_pick]
        return out

    def arc_color(self, e: Edge) -> int | None:
        """Recoloring rule for a retained arc's underlying edge, else None."""
        for _, (t, h) in self.yellow_pick:
            if edge(t, h) == e:
                return t
        for _, (t, h) in self.blue_pick:
            if edge(t, h) == e:
                return (t - 1) % self.n
        return None

    def underlying_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for i in range(self.n):
            adj[i].add((i + 1) % self.n)
            adj[(i + 1) % self.n].add(i)
        for t, h, _ in self.arcs():
            adj[t].add(h)
            adj[h].add(t)
        return tuple(tuple(sorted(s)) for s in adj)


def prune(J: RybDigraph, members: Sequence[int]) -> PrunedDigraph:
    """Keep one yellow arc into the set from each member's predecessor and
    one blue arc from each member's successor, lowest head first."""
    ms = tuple(sorted(set(members)))
    if not is_red_independent(J, ms):
        raise NotRedIndependent(f"set {ms} has a red-adjacent pair")
    s = frozenset(ms)
    n = J.n
    ypick = []
    bpick = []
    for m in ms:
        ytail = (m - 1) % n
        yheads = [h for h in J.yellow[ytail] if h in s]
        btail = (m + 1) % n
        bheads = [h for h in J.blue[btail] if h in s]
        if not yheads or not bheads:
            raise NotLocallyDominating(f"member {m} lacks in-set support (yellow {len(yheads)}, blue {len(bheads)})")
        ypick.append((m, (ytail, min(yheads))))
        bpick.append((m, (btail, min(bheads))))
    return PrunedDigraph(n, ms, tuple(ypick), tuple(bpick))


@dataclass(frozen=True)
class LollipopTrace:
    """Every Hamiltonian-path state visited, plus the rotation pivot edges."""

    states: tuple[tuple[int, ...], ...]
    pivots: tuple[Edge, ...]

    @property
    def final(self) -> tuple[int, ...]:
        return self.states[-1]


def _rotation_pivots(path: tuple[int, ...], adj) -> list[int]:
    """Positions j where rotating at path[j] yields another anchored path.

    The first edge stays fixed, so j = 0 is out; j = n-2 is the trivial
    self-rotation. A neighbor equal to path[0] closes a cycle instead of
    rotating, which is what makes the state degree 1.
    """
    n = len(path)
    last = path[-1]
    pos = {v: i for i, v in enumerate(path)}
    return [pos[w] for w in adj[last] if 1 <= pos[w] <= n - 3]


def lollipop_walk(jp: PrunedDigraph, anchor: Edge) -> LollipopTrace:
    """Rotation walk from the opened base cycle to another degree-1 state.

    anchor must be (s, s+1 mod n) for a set member s; the walk only ever
    visits Hamiltonian paths beginning with that edge. Raises WalkStuck if
    a state's degree leaves {1, 2}, which would mean the pruning broke its
    degree contract.
    """
    n = jp.n
    s0, s1 = anchor
    if s0 not in jp.members or s1 != (s0 + 1) % n:
        raise ValueError(f"anchor {anchor} is not a member's forward cycle edge")
    adj = jp.underlying_adjacency()
    q0 = tuple((s0 + k) % n for k in range(n))
    states = [q0]
    pivot_edges: list[Edge] = []
    seen = {q0}
    prev: tuple[int, ...] | None = None
    cur = q0
    while True:
        pivots = _rotation_pivots(cur, adj)
        if len(pivots) not in (1, 2):
            raise WalkStuck(f"state ends at {cur[-1]} with auxiliary degree {len(pivots)}")
        if prev is None and len(pivots) != 1:
            raise WalkStuck("initial state must have auxiliary degree 1")
        succ = []
        for j in pivots:
            cand = cur[: j + 1] + cur[j + 1 :][::-1]
            if cand != prev:
                succ.append((j, cand))
        if not succ:
            # degree-1 state entered from its only neighbor: done
            return LollipopTrace(tuple(states), tuple(pivot_edges))
        if len(succ) > 1 and prev is not None:
            raise WalkStuck(f"interior state has {len(succ) + 1} neighbors")
        j, nxt = succ[0]
        if nxt in seen:
            raise WalkStuck("rotation walk revisited a state")
        seen.add(nxt)
        pivot_edges.append(edge(cur[-1], cur[j]))
        states.append(nxt)
        prev, cur = cur, nxt


def lollipop_second_cycle(jp: PrunedDigraph, anchor: Edge) -> tuple[int, ...]:
    """Final walk state as a vertex cycle (closing edge last-to-first)."""
    trace = lollipop_walk(jp, anchor)
    final = trace.final
    if final == trace.states[0]:
        raise WalkStuck("walk terminated on its initial state")
    adj = jp.underlying_adjacency()
    if final[0] not in adj[final[-1]]:
        raise WalkStuck("final state does not close into a cycle")
    return final


def recolor_ham(cycle: Sequence[int], jp: PrunedDigraph, base: Transversal) -> Transversal:
    """Color the second cycle: cycle edges keep their base color, retained
    arcs take their tail rule, and the one closing edge gets the single
    color left over. Any ambiguity or repeat raises RecolorConflict."""
    n = jp.n
    verts = list(cycle)
    psi: dict[Edge, int] = {}
    for k in range(n - 1):
        e = edge(verts[k], verts[k + 1])
        u, v = e
        if (u + 1) % n == v:
            c = u
        elif (v + 1) % n == u:
            c = v
        else:
            ac = jp.arc_color(e)
            if ac is None:
                raise RecolorConflict(f"edge {e} is neither a cycle edge nor a retained arc")
            c = ac
        if e in psi:
            raise RecolorConflict(f"edge {e} appears twice in the cycle")
        psi[e] = c
    used = set(psi.values())
    if len(used) != n - 1:
        raise RecolorConflict("arc-tail rule repeated a color")
    missing = set(range(n)) - used
    closing = edge(verts[-1], verts[0])
    if closing in psi:
        raise RecolorConflict("closing edge duplicates a path edge")
    psi[closing] = missing.pop()
    return Transversal.from_map(KIND_CYCLE, psi)


def second_ham_transversal(
    family: SubgraphFamily,
    base: Transversal,
    members: Sequence[int],
    J: RybDigraph,
) -> Transversal:
    """Second cycle transversal supported by the arcs of J.

    Requires the canonical labelling, a red-independent set, and local
    domination of the set inside J. The result is validated and is always
    distinct from base.
    """
    require_naturally_indexed(family, base)
    ms = tuple(sorted(set(members)))
    jp = prune(J, ms)
    anchor = edge(ms[0], (ms[0] + 1) % jp.n)
    cyc = lollipop_second_cycle(jp, anchor)
    out = recolor_ham(cyc, jp, base)
    report = validate_transversal(family, out)
    if not report.ok:
        raise InvalidTransversal(f"exchange produced an invalid transversal: {report.summary()}", report)
    if out == base:
        raise WalkStuck("exchange returned the base transversal")
    return out


@dataclass(frozen=True)
class AlternatingCycle:
    """Even cycle alternating red pair edges and blue arcs.

    ``pairs[k]`` is a pair index; ``arcs[k]`` leaves the set endpoint of
    pairs[k] and lands on the out-of-set endpoint of pairs[k+1] (cyclic).
    """

    pairs: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]

    def red_edges(self, n: int) -> list[Edge]:
        return [edge(p, p + n) for p in self.pairs]

    def arc_edges(self) -> list[Edge]:
        return [edge(t, h) for t, h in self.arcs]

    def length(self) -> int:
        return 2 * len(self.pairs)


def find_alternating_cycle(J: RbDigraph, members: Sequence[int]) -> AlternatingCycle:
    """Walk red edges and lowest-head blue escapes until a pair repeats,
    then cut the closed part. Starts at the set endpoint of pair 0."""
    ms = sorted(set(members))
    n = J.n
    if len(ms) != n or not is_red_independent(J, ms):
        raise NotMaximalRedIndependent("need exactly one endpoint per pair")
    s = frozenset(ms)
    set_end = {J.pair_index(v): v for v in ms}
    trail: list[tuple[int, tuple[int, int]]] = []
    seen_at: dict[int, int] = {}
    p = 0
    while True:
        if p in seen_at:
            start = seen_at[p]
            pairs = tuple(pr for pr, _ in trail[start:])
            arcs = tuple(a for _, a in trail[start:])
            return AlternatingCycle(pairs, arcs)
        z = set_end[p]
        escapes = [h for h in J.blue[z] if h not in s]
        if not escapes:
            raise NoBlueEscape(f"member {z} of pair {p} has no blue arc leaving the set")
        w = min(escapes)
        seen_at[p] = len(trail)
        trail.append((p, (z, w)))
        p = J.pair_index(w)


def second_pm_transversal(
    family: SubgraphFamily,
    base: Transversal,
    members: Sequence[int],
    J: RbDigraph,
) -> Transversal:
    """Swap the alternating cycle into the planted matching.

    Each set member on the cycle moves to its blue-arc head and keeps its
    base color; untouched pairs stay as they are. Validated, distinct.
    """
    require_naturally_indexed(family, base)
    cyc = find_alternating_cycle(J, members)
    n = J.n
    colors = base.colors()
    for p in cyc.pairs:
        del colors[edge(p, p + n)]
    for t, h in cyc.arcs:
        colors[edge(t, h)] = J.pair_index(t)
    out = Transversal.from_map(KIND_MATCHING, colors)
    report = validate_transversal(family, out)
    if not report.ok:
        raise InvalidTransversal(f"exchange produced an invalid transversal: {report.summary()}", report)
    if out == base:
        raise WalkStuck("exchange returned the base transversal")
    return out
