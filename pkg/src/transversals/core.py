"""Base graphs, subgraph families, transversals, and the canonical labelling.

A family is a base graph G together with an ordered list of subgraphs
G_0..G_{s-1}. A transversal picks one edge per subgraph, all distinct:
``colors`` is a bijection from the chosen edges onto 0..s-1 with
edge e belonging to the subgraph of its color. Two kinds are supported:

* ``hamiltonian``: s = |V| and the chosen edges form a Hamiltonian cycle;
* ``matching``: |V| = 2s and the chosen edges form a perfect matching.

The canonical ("naturally indexed") labelling puts the cycle on
0,1,...,n-1 with edge(i, i+1 mod n) colored i, or pairs vertex i with
n+i colored i. Everything downstream assumes it; ``naturally_index``
produces it from any valid transversal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import InvalidTransversal, NotNaturallyIndexed

Edge = tuple[int, int]

KIND_HAM = "hamiltonian"
KIND_PM = "matching"

KIND_CYCLE = "cycle"
KIND_MATCHING = "matching"


def edge(u: int, v: int) -> Edge:
    """Return the endpoint pair ordered (min, max)."""
    return (u, v) if u <= v else (v, u)


class BaseGraph:
    """Simple undirected graph on vertices 0..num_vertices-1."""

    __slots__ = ("num_vertices", "_adj", "_edges")

    def __init__(self, num_vertices: int, edges: Iterable[Edge]):
        if num_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        self.num_vertices = num_vertices
        seen: set[Edge] = set()
        adj: list[set[int]] = [set() for _ in range(num_vertices)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u},{v}) outside vertex range")
            e = edge(u, v)
            if e in seen:
                continue
            seen.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._edges = frozenset(seen)
        self._adj = tuple(tuple(sorted(s)) for s in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self._edges

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max(len(a) for a in self._adj)

    def edges(self) -> list[Edge]:
        return sorted(self._edges)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BaseGraph):
            return NotImplemented
        return (self.num_vertices, self._edges) == (other.num_vertices, other._edges)

    def __hash__(self) -> int:
        return hash((self.num_vertices, self._edges))

    def __repr__(self) -> str:
        return f"BaseGraph(n={self.num_vertices}, m={len(self._edges)})"


def cycle_graph(n: int) -> BaseGraph:
    """The n-cycle 0-1-...-(n-1)-0."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return BaseGraph(n, [edge(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> BaseGraph:
    return BaseGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


@dataclass(frozen=True)
class SubgraphFamily:
    """A base graph with an ordered tuple of subgraph edge sets."""

    base: BaseGraph
    subgraphs: tuple[frozenset[Edge], ...]
    kind: str

    def __post_init__(self):
        if self.kind not in (KIND_HAM, KIND_PM):
            raise ValueError(f"unknown family kind {self.kind!r}")
        object.__setattr__(
            self, "subgraphs", tuple(frozenset(edge(u, v) for u, v in g) for g in self.subgraphs)
        )

    @property
    def num_vertices(self) -> int:
        return self.base.num_vertices

    @property
    def num_colors(self) -> int:
        return len(self.subgraphs)

    @property
    def num_pairs(self) -> int:
        """Matching kind only: number of matched pairs n, with |V| = 2n."""
        return self.base.num_vertices // 2

    def subgraph_has(self, color: int, e: Edge) -> bool:
        return e in self.subgraphs[color]


@dataclass(frozen=True)
class Violation:
    code: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def summary(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.code}: {v.detail}" for v in self.violations)


@dataclass(frozen=True)
class Transversal:
    """One edge per subgraph, held as (edge, color) pairs sorted by edge.

    Identity is the sorted edge list plus the color map, so the same
    edge set under two colorings gives two distinct transversals.
    """

    kind: str
    items: tuple[tuple[Edge, int], ...]

    def __post_init__(self):
        if self.kind not in (KIND_CYCLE, KIND_MATCHING):
            raise ValueError(f"unknown transversal kind {self.kind!r}")
        object.__setattr__(
            self, "items", tuple(sorted((edge(u, v), c) for (u, v), c in self.items))
        )

    @classmethod
    def from_map(cls, kind: str, colors: Mapping[Edge, int]) -> "Transversal":
        return cls(kind, tuple(colors.items()))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, _ in self.items)

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(e for e, _ in self.items)

    def colors(self) -> dict[Edge, int]:
        return {e: c for e, c in self.items}

    def color_of(self, e: Edge) -> int:
        for f, c in self.items:
            if f == e:
                return c
        raise KeyError(e)

    def edge_of_color(self, c: int) -> Edge:
        for e, cc in self.items:
            if cc == c:
                return e
        raise KeyError(c)

    def __len__(self) -> int:
        return len(self.items)

    def cycle_sequence(self) -> tuple[int, ...]:
        """Vertex order of a cycle transversal, from 0 toward its smaller neighbor."""
        if self.kind != KIND_CYCLE:
            raise ValueError("cycle_sequence is for cycle transversals")
        adj: dict[int, list[int]] = {}
        for u, v in self.edges:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        order = [0, min(adj[0])]
        while len(order) < len(self.items):
            a, b = adj[order[-1]]
            order.append(a if a != order[-2] else b)
        return tuple(order)


def transversal_kind_for(family_kind: str) -> str:
    return KIND_CYCLE if family_kind == KIND_HAM else KIND_MATCHING


def validate_family(family: SubgraphFamily) -> ValidationReport:
    """Structural checks: subgraph count matches kind, edges live in base."""
    out: list[Violation] = []
    n = family.num_vertices
    if family.kind == KIND_HAM:
        if family.num_colors != n:
            out.append(
                Violation("subgraph_count", f"need {n} subgraphs for {n} vertices, got {family.num_colors}")
            )
    else:
        if n % 2 != 0:
            out.append(Violation("odd_vertex_count", f"matching kind needs even |V|, got {n}"))
        elif family.num_colors != n // 2:
            out.append(
                Violation("subgraph_count", f"need {n // 2} subgraphs for {n} vertices, got {family.num_colors}")
            )
    for i, g in enumerate(family.subgraphs):
        for u, v in sorted(g):
            if u == v:
                out.append(Violation("loop_edge", f"subgraph {i} has loop at {u}"))
            elif not family.base.has_edge(u, v):
                out.append(Violation("edge_not_in_base", f"subgraph {i} edge ({u},{v}) missing from base"))
    return ValidationReport(tuple(out))


def _cycle_structure_ok(n: int, edges: Iterable[Edge]) -> bool:
    """True iff the edges form a single cycle through all n vertices."""
    adj: dict[int, list[int]] = {v: [] for v in range(n)}
    count = 0
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    if count != n or any(len(a) != 2 for a in adj.values()):
        return False
    seen = 1
    prev, cur = None, 0
    while True:
        a, b = adj[cur]
        nxt = a if a != prev else b
        if nxt == 0:
            break
        prev, cur = cur, nxt
        seen += 1
        if seen > n:
            return False
    return seen == n


def validate_transversal(family: SubgraphFamily, t: Transversal) -> ValidationReport:
    """Full check: kind match, membership, color bijection, structure."""
    out: list[Violation] = []
    n = family.num_vertices
    expected_kind = transversal_kind_for(family.kind)
    if t.kind != expected_kind:
        out.append(Violation("kind_mismatch", f"family {family.kind} needs {expected_kind}, got {t.kind}"))
        return ValidationReport(tuple(out))
    s = family.num_colors
    if len(t) != s:
        out.append(Violation("size", f"expected {s} edges, got {len(t)}"))
    seen_colors: set[int] = set()
    for e, c in t.items:
        u, v = e
        if not (0 <= u < n and 0 <= v < n) or u == v:
            out.append(Violation("bad_edge", f"edge {e} not a valid vertex pair"))
            continue
        if not (0 <= c < s):
            out.append(Violation("color_range", f"edge {e} colored {c}, outside 0..{s - 1}"))
            continue
        if c in seen_colors:
            out.append(Violation("color_repeat", f"color {c} used more than once"))
        seen_colors.add(c)
        if not family.base.has_edge(u, v):
            out.append(Violation("edge_not_in_base", f"edge {e} missing from base"))
        if e not in family.subgraphs[c]:
            out.append(Violation("edge_not_in_subgraph", f"edge {e} not in subgraph {c}"))
    if out:
        return ValidationReport(tuple(out))
    if family.kind == KIND_HAM:
        if not _cycle_structure_ok(n, t.edges):
            out.append(Violation("not_hamiltonian_cycle", "edges do not form one cycle through all vertices"))
    else:
        touched: set[int] = set()
        ok = True
        for u, v in t.edges:
            if u in touched or v in touched:
                ok = False
            touched.update((u, v))
        if not ok or len(touched) != n:
            out.append(Violation("not_perfect_matching", "edges do not form a perfect matching"))
    return ValidationReport(tuple(out))


def is_naturally_indexed(family: SubgraphFamily, t: Transversal) -> bool:
    """True iff t is the canonical transversal in the canonical labelling."""
    if family.kind == KIND_HAM:
        n = family.num_vertices
        want = {edge(i, (i + 1) % n): i for i in range(n)}
    else:
        n = family.num_pairs
        want = {edge(i, n + i): i for i in range(n)}
    return t.colors() == want


def canonical_transversal(family: SubgraphFamily) -> Transversal:
    """The transversal the canonical labelling plants (cycle or pairing)."""
    if family.kind == KIND_HAM:
        n = family.num_vertices
        return Transversal.from_map(KIND_CYCLE, {edge(i, (i + 1) % n): i for i in range(n)})
    n = family.num_pairs
    return Transversal.from_map(KIND_MATCHING, {edge(i, n + i): i for i in range(n)})


@dataclass(frozen=True)
class NaturalIndexing:
    """Vertex and color permutations taking an instance to canonical form.

    ``vertex_perm[old] = new`` and ``color_perm[old] = new``. Applying
    both to the family and the transversal yields the canonical instance;
    applying the inverse recovers the input exactly.
    """

    vertex_perm: tuple[int, ...]
    color_perm: tuple[int, ...]

    def inverse(self) -> "NaturalIndexing":
        vp = [0] * len(self.vertex_perm)
        cp = [0] * len(self.color_perm)
        for old, new in enumerate(self.vertex_perm):
            vp[new] = old
        for old, new in enumerate(self.color_perm):
            cp[new] = old
        return NaturalIndexing(tuple(vp), tuple(cp))

    def map_vertex(self, v: int) -> int:
        return self.vertex_perm[v]

    def map_edge(self, e: Edge) -> Edge:
        u, v = e
        return edge(self.vertex_perm[u], self.vertex_perm[v])

    def map_vertices(self, vs: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.vertex_perm[v] for v in vs))

    def apply_to_family(self, family: SubgraphFamily) -> SubgraphFamily:
        base = BaseGraph(family.num_vertices, [self.map_edge(e) for e in family.base.edges()])
        subs: list[frozenset[Edge]] = [frozenset()] * family.num_colors
        for old_color, g in enumerate(family.subgraphs):
            subs[self.color_perm[old_color]] = frozenset(self.map_edge(e) for e in g)
        return SubgraphFamily(base, tuple(subs), family.kind)

    def apply_to_transversal(self, t: Transversal) -> Transversal:
        return Transversal.from_map(
            t.kind, {self.map_edge(e): self.color_perm[c] for e, c in t.items}
        )


def naturally_index(
    family: SubgraphFamily, t: Transversal
) -> tuple[SubgraphFamily, Transversal, NaturalIndexing]:
    """Relabel vertices and reorder subgraphs so t becomes canonical.

    Cycle kind: the cycle is walked from original vertex 0 toward its
    smaller-labelled cycle neighbor, so an already-canonical input maps to
    itself under the identity. Matching kind: the pair colored c becomes
    (c, n+c) with the smaller original endpoint on the low side; the color
    order is untouched.
    """
    report = validate_transversal(family, t)
    if not report.ok:
        raise InvalidTransversal(f"cannot index invalid transversal: {report.summary()}", report)
    if family.kind == KIND_HAM:
        n = family.num_vertices
        order = t.cycle_sequence()
        vperm = [0] * n
        for pos, v in enumerate(order):
            vperm[v] = pos
        cperm = [0] * n
        cols = t.colors()
        for pos in range(n):
            e = edge(order[pos], order[(pos + 1) % n])
            cperm[cols[e]] = pos
    else:
        n = family.num_pairs
        vperm = [0] * family.num_vertices
        for (u, v), c in t.items:
            vperm[u] = c
            vperm[v] = n + c
        cperm = list(range(n))
    idx = NaturalIndexing(tuple(vperm), tuple(cperm))
    return idx.apply_to_family(family), idx.apply_to_transversal(t), idx


def require_naturally_indexed(family: SubgraphFamily, t: Transversal) -> None:
    if not is_naturally_indexed(family, t):
        raise NotNaturallyIndexed("operation requires the canonical labelling; run naturally_index first")


def iter_cycle_edges(n: int) -> Iterator[Edge]:
    for i in range(n):
        yield edge(i, (i + 1) % n)
