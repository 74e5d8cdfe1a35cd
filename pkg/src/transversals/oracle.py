"""Brute-force ground truth, independent of the constructive machinery.

Enumeration backtracks jointly over the structure (cycle path or matching)
and exact colors, pruning with a bipartite-matching feasibility test
between chosen edges and colors. Budgets are explicit: blowing the node
or time budget raises, carrying whatever was found so far.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .core import (
    Edge,
    KIND_CYCLE,
    KIND_HAM,
    KIND_MATCHING,
    KIND_PM,
    SubgraphFamily,
    Transversal,
    edge,
)
from .errors import BudgetExceeded


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 100_000_000
    max_results: int | None = None
    time_limit_s: float | None = None


class _Search:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()
        self.results: list[Transversal] = []

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceeded(
                f"node budget {self.budget.max_nodes} exhausted", self.results, self.nodes
            )
        if self.budget.time_limit_s is not None and self.nodes % 1024 == 0:
            if time.perf_counter() - self.start > self.budget.time_limit_s:
                raise BudgetExceeded("time budget exhausted", self.results, self.nodes)

    def full(self) -> bool:
        return self.budget.max_results is not None and len(self.results) >= self.budget.max_results


def _edge_options(family: SubgraphFamily) -> dict[Edge, tuple[int, ...]]:
    opts: dict[Edge, list[int]] = {e: [] for e in family.base.edges()}
    for c, g in enumerate(family.subgraphs):
        for e in g:
            if e in opts:
                opts[e].append(c)
    return {e: tuple(cs) for e, cs in opts.items()}


def _colors_feasible(chosen: Sequence[Edge], options: dict[Edge, tuple[int, ...]]) -> bool:
    """Can the chosen edges get pairwise distinct colors? (Kuhn matching)"""
    match: dict[int, int] = {}

    def try_assign(i: int, visited: set[int]) -> bool:
        for c in options[chosen[i]]:
            if c in visited:
                continue
            visited.add(c)
            if c not in match or try_assign(match[c], visited):
                match[c] = i
                return True
        return False

    for i in range(len(chosen)):
        if not try_assign(i, set()):
            return False
    return True


def _assign_colors(
    search: _Search, kind: str, edges: list[Edge], options: dict[Edge, tuple[int, ...]]
):
    """Enumerate all bijective colorings of a fixed edge set."""
    n = len(edges)
    order = sorted(range(n), key=lambda i: len(options[edges[i]]))
    used: set[int] = set()
    assignment: dict[Edge, int] = {}

    def rec(k: int):
        if search.full():
            return
        if k == n:
            search.results.append(Transversal.from_map(kind, assignment))
            return
        e = edges[order[k]]
        for c in options[e]:
            if c in used:
                continue
            search.tick()
            used.add(c)
            assignment[e] = c
            rec(k + 1)
            used.discard(c)
            del assignment[e]
            if search.full():
                return

    rec(0)


def enumerate_all_ham_transversals(
    family: SubgraphFamily, budget: SearchBudget | None = None
) -> list[Transversal]:
    """Every (cycle, coloring) transversal, canonically sorted.

    Cycles are rooted at vertex 0 with the smaller second vertex, so each
    cycle appears once; colorings are enumerated per cycle.
    """
    if family.kind != KIND_HAM:
        raise ValueError("hamiltonian enumeration needs a hamiltonian family")
    budget = budget or SearchBudget()
    search = _Search(budget)
    n = family.num_vertices
    options = _edge_options(family)
    base = family.base
    path = [0]
    used = [False] * n
    used[0] = True
    chosen: list[Edge] = []

    def extend():
        if search.full():
            return
        u = path[-1]
        if len(path) == n:
            if base.has_edge(u, 0) and path[1] < path[-1]:
                closing = edge(u, 0)
                if _colors_feasible(chosen + [closing], options):
                    _assign_colors(search, KIND_CYCLE, chosen + [closing], options)
            return
        for v in base.neighbors(u):
            if used[v]:
                continue
            search.tick()
            e = edge(u, v)
            chosen.append(e)
            if _colors_feasible(chosen, options):
                used[v] = True
                path.append(v)
                extend()
                path.pop()
                used[v] = False
            chosen.pop()
            if search.full():
                return

    extend()
    return sorted(search.results, key=lambda t: t.items)


def enumerate_all_pm_transversals(
    family: SubgraphFamily, budget: SearchBudget | None = None
) -> list[Transversal]:
    """Every (perfect matching, coloring) transversal, canonically sorted."""
    if family.kind != KIND_PM:
        raise ValueError("matching enumeration needs a matching family")
    budget = budget or SearchBudget()
    search = _Search(budget)
    n = family.num_vertices
    options = _edge_options(family)
    base = family.base
    matched = [False] * n
    used_colors: set[int] = set()
    assignment: dict[Edge, int] = {}

    def rec():
        if search.full():
            return
        u = next((v for v in range(n) if not matched[v]), None)
        if u is None:
            search.results.append(Transversal.from_map(KIND_MATCHING, assignment))
            return
        matched[u] = True
        for w in base.neighbors(u):
            if matched[w]:
                continue
            e = edge(u, w)
            for c in options[e]:
                if c in used_colors:
                    continue
                search.tick()
                matched[w] = True
                used_colors.add(c)
                assignment[e] = c
                rec()
                del assignment[e]
                used_colors.discard(c)
                matched[w] = False
                if search.full():
                    break
            if search.full():
                break
        matched[u] = False

    rec()
    return sorted(search.results, key=lambda t: t.items)


def count_ham_transversals(family: SubgraphFamily, budget: SearchBudget | None = None) -> int:
    return len(enumerate_all_ham_transversals(family, budget))


def count_pm_transversals(family: SubgraphFamily, budget: SearchBudget | None = None) -> int:
    return len(enumerate_all_pm_transversals(family, budget))


def exists_ham_transversal(
    family: SubgraphFamily, budget: SearchBudget | None = None
) -> Transversal | None:
    budget = budget or SearchBudget()
    capped = SearchBudget(budget.max_nodes, 1, budget.time_limit_s)
    found = enumerate_all_ham_transversals(family, capped)
    return found[0] if found else None


def permanent(matrix: Sequence[Sequence[int]]) -> int:
    """Permanent by inclusion-exclusion over column subsets."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValueError("permanent needs a square matrix")
    total = 0
    for mask in range(1, 1 << n):
        prod = 1
        for row in matrix:
            s = 0
            m = mask
            j = 0
            while m:
                if m & 1:
                    s += row[j]
                m >>= 1
                j += 1
            prod *= s
            if prod == 0:
                break
        bits = bin(mask).count("1")
        total += (-1) ** (n - bits) * prod
    return total
