"""Colored auxiliary digraphs over a canonically labelled transversal.

Cycle kind builds a red/yellow/blue digraph on the cycle vertices:
red edges are the bidirectional distance-1 and distance-2 cycle pairs,
a yellow arc i->j exists when edge(i,j) lies in subgraph i and j is not
a cycle neighbor of i, and a blue arc i->j exists when edge(i,j) lies
in subgraph i-1 (mod n) under the same exclusion.

Matching kind builds a red/blue digraph on the 2n endpoints: red edges
are the matched pairs (i, n+i), and a blue arc leaves an endpoint of
pair i toward an opposite-side endpoint of a different pair j whenever
that edge lies in subgraph i.

Both full digraphs and their arc-subsets share these representations;
sub-digraphs always keep all red edges, so red is implicit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import (
    Edge,
    KIND_HAM,
    KIND_PM,
    SubgraphFamily,
    Transversal,
    edge,
    require_naturally_indexed,
)
from .errors import NotMaximalRedIndependent, NotRedIndependent


@dataclass(frozen=True)
class RybDigraph:
    """Per-vertex sorted yellow and blue arc heads on a cycle of length n."""

    n: int
    yellow: tuple[tuple[int, ...], ...]
    blue: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for tail in range(self.n):
            banned = {(tail - 1) % self.n, (tail + 1) % self.n, tail}
            for head in self.yellow[tail] + self.blue[tail]:
                if head in banned:
                    raise ValueError(f"arc {tail}->{head} targets a cycle neighbor or itself")

    @classmethod
    def from_arcs(
        cls, n: int, yellow_arcs: Iterable[tuple[int, int]], blue_arcs: Iterable[tuple[int, int]]
    ) -> "RybDigraph":
        ys: list[set[int]] = [set() for _ in range(n)]
        bs: list[set[int]] = [set() for _ in range(n)]
        for t, h in yellow_arcs:
            ys[t].add(h)
        for t, h in blue_arcs:
            bs[t].add(h)
        return cls(n, tuple(tuple(sorted(s)) for s in ys), tuple(tuple(sorted(s)) for s in bs))

    def red_adjacent(self, u: int, v: int) -> bool:
        d = abs(u - v) % self.n
        return min(d, self.n - d) in (1, 2)

    def arc_subset_of(self, other: "RybDigraph") -> bool:
        return self.n == other.n and all(
            set(self.yellow[v]) <= set(other.yellow[v]) and set(self.blue[v]) <= set(other.blue[v])
            for v in range(self.n)
        )

    def num_arcs(self) -> int:
        return sum(len(a) for a in self.yellow) + sum(len(a) for a in self.blue)


@dataclass(frozen=True)
class RbDigraph:
    """Blue arc heads per endpoint over n matched pairs (vertices 0..2n-1)."""

    n: int
    blue: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for tail in range(2 * self.n):
            for head in self.blue[tail]:
                if self.pair_index(head) == self.pair_index(tail):
                    raise ValueError(f"arc {tail}->{head} stays inside one pair")
                if (tail < self.n) == (head < self.n):
                    raise ValueError(f"arc {tail}->{head} does not cross sides")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "RbDigraph":
        bs: list[set[int]] = [set() for _ in range(2 * n)]
        for t, h in arcs:
            bs[t].add(h)
        return cls(n, tuple(tuple(sorted(s)) for s in bs))

    def partner(self, v: int) -> int:
        return v + self.n if v < self.n else v - self.n

    def pair_index(self, v: int) -> int:
        return v % self.n

    def red_adjacent(self, u: int, v: int) -> bool:
        return u != v and self.pair_index(u) == self.pair_index(v)

    def arc_subset_of(self, other: "RbDigraph") -> bool:
        return self.n == other.n and all(
            set(self.blue[v]) <= set(other.blue[v]) for v in range(2 * self.n)
        )

    def num_arcs(self) -> int:
        return sum(len(a) for a in self.blue)


@dataclass(frozen=True)
class SetMetrics:
    red_independent: bool
    depth: int
    support: tuple[tuple[int, int], ...]
    """Per member: the two counts entering the depth (yellow/blue for the
    cycle kind, blue-escape count twice for the matching kind)."""


@dataclass(frozen=True)
class CandidateSet:
    """A sorted vertex set, optionally annotated with its metrics."""

    members: tuple[int, ...]
    metrics: SetMetrics | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


def _subgraph_adjacency(n: int, g: frozenset[Edge]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def build_full_ryb(family: SubgraphFamily, t: Transversal) -> RybDigraph:
    """All yellow and blue arcs the family supports over the planted cycle."""
    if family.kind != KIND_HAM:
        raise ValueError("cycle digraph needs a hamiltonian family")
    require_naturally_indexed(family, t)
    n = family.num_vertices
    # identical subgraph objects share one adjacency build (all-equal families)
    adj_cache: dict[int, list[list[int]]] = {}

    def adjacency(color: int) -> list[list[int]]:
        g = family.subgraphs[color]
        key = id(g)
        if key not in adj_cache:
            adj_cache[key] = _subgraph_adjacency(n, g)
        return adj_cache[key]

    yellow = []
    blue = []
    for i in range(n):
        banned = {(i - 1) % n, (i + 1) % n}
        yellow.append(tuple(sorted(j for j in adjacency(i)[i] if j not in banned)))
        blue.append(tuple(sorted(j for j in adjacency((i - 1) % n)[i] if j not in banned)))
    return RybDigraph(n, tuple(yellow), tuple(blue))


def build_full_rb(family: SubgraphFamily, t: Transversal) -> RbDigraph:
    """All blue arcs the family supports over the planted pairing."""
    if family.kind != KIND_PM:
        raise ValueError("pair digraph needs a matching family")
    require_naturally_indexed(family, t)
    n = family.num_pairs
    blue: list[list[int]] = [[] for _ in range(2 * n)]
    for i, g in enumerate(family.subgraphs):
        for u, v in g:
            for a, b in ((u, v), (v, u)):
                # arcs leave pair i's endpoints toward the opposite side
                if a % n == i and (a < n) != (b < n) and b % n != i:
                    blue[a].append(b)
    return RbDigraph(n, tuple(tuple(sorted(set(h))) for h in blue))


def is_red_independent(digraph: RybDigraph | RbDigraph, members: Sequence[int]) -> bool:
    """No two members joined by a red edge."""
    ms = sorted(set(members))
    if isinstance(digraph, RybDigraph):
        n = digraph.n
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                d = (ms[b] - ms[a]) % n
                if min(d, n - d) <= 2:
                    return False
        return True
    seen_pairs: set[int] = set()
    for v in ms:
        p = digraph.pair_index(v)
        if p in seen_pairs:
            return False
        seen_pairs.add(p)
    return True


def is_maximal_red_independent(digraph: RbDigraph, members: Sequence[int]) -> bool:
    """Exactly one endpoint from every matched pair."""
    ms = set(members)
    return len(ms) == digraph.n and is_red_independent(digraph, sorted(ms))


def _support_counts_ham(J: RybDigraph, member: int, s: frozenset[int]) -> tuple[int, int]:
    n = J.n
    y = sum(1 for h in J.yellow[(member - 1) % n] if h in s)
    b = sum(1 for h in J.blue[(member + 1) % n] if h in s)
    return y, b


def is_locally_dominating(J: RybDigraph, members: Sequence[int]) -> bool:
    """Every member is fed by a yellow arc from its predecessor and a blue
    arc from its successor, both landing inside the set."""
    ms = sorted(set(members))
    if not is_red_independent(J, ms):
        raise NotRedIndependent(f"set {ms} has a red-adjacent pair")
    s = frozenset(ms)
    return all(min(_support_counts_ham(J, v, s)) >= 1 for v in ms)


def d_star(H: RybDigraph, members: Sequence[int]) -> int:
    """Minimum in-set support over all members (cycle kind).

    Zero whenever some member has an empty yellow or blue support; the
    caller decides whether zero is an error.
    """
    ms = sorted(set(members))
    if not ms:
        raise ValueError("empty set has no support depth")
    if not is_red_independent(H, ms):
        raise NotRedIndependent(f"set {ms} has a red-adjacent pair")
    s = frozenset(ms)
    return min(min(_support_counts_ham(H, v, s)) for v in ms)


def d_cross(H: RbDigraph, members: Sequence[int]) -> int:
    """Minimum number of blue arcs leaving the set from any member."""
    ms = sorted(set(members))
    if not is_maximal_red_independent(H, ms):
        raise NotMaximalRedIndependent("need exactly one endpoint per pair")
    s = frozenset(ms)
    return min(sum(1 for h in H.blue[v] if h not in s) for v in ms)


def annotate_ham(H: RybDigraph, members: Sequence[int]) -> CandidateSet:
    ms = tuple(sorted(set(members)))
    indep = is_red_independent(H, ms)
    s = frozenset(ms)
    support = tuple(_support_counts_ham(H, v, s) for v in ms)
    depth = min((min(p) for p in support), default=0) if indep and ms else 0
    return CandidateSet(ms, SetMetrics(indep, depth, support))


def annotate_pm(H: RbDigraph, members: Sequence[int]) -> CandidateSet:
    ms = tuple(sorted(set(members)))
    indep = is_red_independent(H, ms)
    s = frozenset(ms)
    escapes = tuple(sum(1 for h in H.blue[v] if h not in s) for v in ms)
    support = tuple((e, e) for e in escapes)
    maximal = len(ms) == H.n and indep
    depth = min(escapes, default=0) if maximal else 0
    return CandidateSet(ms, SetMetrics(indep, depth, support))


def omega_member_ham(base: Transversal, members: Sequence[int], cand: Transversal) -> bool:
    """Membership in the exchange neighborhood of (base, members).

    cand must contain every base-cycle edge avoiding the set, with its base
    color, and at each cycle neighbor v of the set, cand must join v to the
    set by one edge carrying the color of v's base edge into the set.
    cand is assumed to be a valid transversal of the same family.
    """
    n = len(base)
    s = frozenset(members)
    cand_colors = cand.colors()
    base_colors = base.colors()
    cand_at: dict[int, list[Edge]] = {v: [] for v in range(n)}
    for u, v in cand.edges:
        cand_at[u].append((u, v))
        cand_at[v].append((u, v))
    for i in range(n):
        e = edge(i, (i + 1) % n)
        if i in s or (i + 1) % n in s:
            continue
        if cand_colors.get(e) != base_colors[e]:
            return False
    for m in s:
        for v in ((m - 1) % n, (m + 1) % n):
            base_e = edge(v, m)
            joins = [e for e in cand_at[v] if (e[0] if e[1] == v else e[1]) in s]
            if len(joins) != 1 or cand_colors[joins[0]] != base_colors[base_e]:
                return False
    return True


def omega_member_pm(base: Transversal, members: Sequence[int], cand: Transversal) -> bool:
    """Every cand edge crosses the set boundary, and each member keeps the
    color its base pair had. cand is assumed valid for the same family."""
    s = frozenset(members)
    base_color_at: dict[int, int] = {}
    for (u, v), c in base.items:
        if u in s:
            base_color_at[u] = c
        if v in s:
            base_color_at[v] = c
    for (u, v), c in cand.items:
        u_in, v_in = u in s, v in s
        if u_in == v_in:
            return False
        m = u if u_in else v
        if base_color_at.get(m) != c:
            return False
    return True
