"""Exact small-k coloring and vertex-criticality.

Backtracking with largest-degree-first ordering and color-symmetry
breaking (vertex i may open at most one fresh color).  Deliberately no
SAT backend or heuristics: brute backtracking is the oracle-grade choice
at desk scale, and exactness is attested by the failed (chi-1)-search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget, BudgetExceeded
from .graphs import Graph, bits


@dataclass
class ColoringResult:
    k: int
    assignment: tuple[int, ...]
    lower_bound: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"chi": self.k, "assignment": list(self.assignment), "lower_bound": self.lower_bound}


def try_color(g: Graph, k: int, budget: Budget | None = None) -> tuple[int, ...] | None:
    """A proper k-coloring, or None after exhaustive failure."""
    budget = budget or Budget()
    n = g.n
    if n == 0:
        return ()
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * n

    def assign(idx: int, used: int) -> bool:
        budget.tick()
        if idx == n:
            return True
        v = order[idx]
        forbidden = 0
        for u in bits(g.adj[v]):
            if colors[u] >= 0:
                forbidden |= 1 << colors[u]
        cap = min(k, used + 1)  # symmetry breaking: at most one fresh color
        for c in range(cap):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if assign(idx + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    if assign(0, 0):
        return tuple(colors)
    return None


def is_proper(g: Graph, assignment) -> bool:
    return all(assignment[u] != assignment[v] for u, v in g.edges())


def chromatic_number(g: Graph, max_k: int = 8, budget: Budget | None = None) -> ColoringResult | None:
    """Exact chromatic number if <= max_k, else None ("exceeds max_k")."""
    if max_k > 8:
        raise ValueError("desk-scale cap: max_k <= 8")
    budget = budget or Budget()
    if g.n == 0:
        return ColoringResult(0, (), {"kind": "empty"})
    lb = 2 if g.m else 1
    for k in range(lb, max_k + 1):
        got = try_color(g, k, budget)
        if got is not None:
            if k == 1:
                lower = {"kind": "nonempty"}
            elif k == 2:
                lower = {"kind": "edge", "witness": list(g.edges()[0])}
            else:
                lower = {"kind": "exhausted_search", "failed_k": k - 1}
            return ColoringResult(k, got, lower)
    return None


def is_k_vertex_critical(
    g: Graph, k: int, budget: Budget | None = None
) -> tuple[bool, dict]:
    """chi(g) = k and deleting any vertex drops chi below k, with witnesses."""
    if k > 8:
        raise ValueError("desk-scale cap: k <= 8")
    budget = budget or Budget()
    res = chromatic_number(g, max_k=8, budget=budget)
    if res is None or res.k != k:
        return False, {"chi": None if res is None else res.k}
    per_vertex = {}
    for v in range(g.n):
        from .graphs import induced_subgraph

        sub, old = induced_subgraph(g, [u for u in range(g.n) if u != v])
        got = try_color(sub, k - 1, budget)
        if got is None:
            return False, {"chi": k, "stuck_vertex": v}
        per_vertex[v] = {old[i]: c for i, c in enumerate(got)}
    return True, {"chi": k, "deleted_colorings": per_vertex}
