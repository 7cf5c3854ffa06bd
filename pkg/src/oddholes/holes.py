"""Girth, exhaustive hole enumeration, and the girth-family membership decider.

The target family, parametrized by ell >= 2, consists of graphs with girth
exactly 2*ell+1 whose odd holes all have length 2*ell+1 (equivalently: no
odd hole of length >= 2*ell+3).  Membership needs odd holes of all lengths,
so the decider runs unbounded enumeration under a node budget and reports
"unknown" rather than silently truncating.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .budget import Budget, BudgetExceeded
from .graphs import Graph, Hole, bits, make_cycle, make_hole

INFINITE = math.inf


def girth(g: Graph) -> float:
    """Exact minimum cycle length; math.inf for forests.

    BFS from every root; a non-tree edge seen at depth d closes a cycle of
    length at most dist[u]+dist[v]+1, and the minimum over all roots is the
    girth (classic O(n*m) argument).
    """
    best = INFINITE
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                if 2 * dist[u] >= best:
                    continue
                for v in bits(g.adj[u]):
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        cyc = dist[u] + dist[v] + 1
                        if cyc < best:
                            best = cyc
            frontier = nxt
    return best


def shortest_cycle(g: Graph) -> list[int] | None:
    """A cycle witnessing the girth, or None for forests.

    A shortest cycle is chordless, so for girth >= 4 it is found by hole
    enumeration capped at the girth; triangles are searched directly.
    """
    gv = girth(g)
    if gv == INFINITE:
        return None
    if gv == 3:
        for u in range(g.n):
            for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
                common = g.adj[u] & g.adj[v]
                w = next(bits(common), None)
                if w is not None:
                    return sorted([u, v, w])
        raise AssertionError("girth 3 but no triangle found")
    hs = enumerate_holes(g, max_len=int(gv))
    return list(hs[0].vertices)


def enumerate_holes(
    g: Graph, max_len: int | None = None, budget: Budget | None = None
) -> list[Hole]:
    """Every hole (induced cycle, length >= 4) up to max_len, each once.

    DFS path extension anchored at the least cycle vertex: paths start at an
    anchor a, only use vertices > a, and prune any partial path that is not
    induced.  Each hole is produced exactly once by requiring the second
    vertex of the stored direction to be smaller than the last.
    """
    budget = budget or Budget()
    found: list[Hole] = []
    n = g.n
    for a in range(n):
        above = ~((1 << (a + 1)) - 1)
        # path = [a, b, ...]; forbidden = vertices adjacent to interior
        def extend(path: list[int], path_mask: int, blocked: int):
            budget.tick()
            last = path[-1]
            cand = g.adj[last] & above & ~path_mask & ~blocked
            for v in bits(cand):
                if g.adj[v] >> a & 1:
                    # v closes a cycle with the anchor; extending past v
                    # would leave the chord (v, a), so never recurse here
                    if len(path) >= 3 and path[1] < v:
                        if max_len is None or len(path) + 1 <= max_len:
                            found.append(make_hole(g, path + [v]))
                    continue
                if max_len is not None and len(path) + 1 >= max_len:
                    continue
                # keep induced: future vertices must avoid neighbors of the
                # path interior (everything except the new endpoint and a)
                extend(path + [v], path_mask | 1 << v, blocked | (g.adj[last] & ~(1 << v)))

        start_blocked = 0
        for b in bits(g.adj[a] & above):
            extend([a, b], (1 << a) | (1 << b), start_blocked)
    found.sort(key=lambda h: (h.length, h.vertices))
    return found


@dataclass
class HoleSpectrum:
    girth: float
    odd_lengths: Counter
    even_lengths: Counter
    holes: list[Hole] | None = None

    def as_dict(self) -> dict:
        return {
            "girth": None if self.girth == INFINITE else int(self.girth),
            "odd_lengths": dict(sorted(self.odd_lengths.items())),
            "even_lengths": dict(sorted(self.even_lengths.items())),
        }


def odd_hole_spectrum(
    g: Graph, budget: Budget | None = None, keep_holes: bool = True
) -> HoleSpectrum:
    holes = enumerate_holes(g, budget=budget)
    odd = Counter(h.length for h in holes if h.odd)
    even = Counter(h.length for h in holes if not h.odd)
    return HoleSpectrum(girth(g), odd, even, holes if keep_holes else None)


@dataclass
class MembershipVerdict:
    """Outcome of the family membership test for a given ell.

    member is True/False, or None when the search budget ran out ("unknown").
    On failure, witness is an independently checkable dict: either a short
    cycle, a certified girth value mismatch, or a long odd hole.
    """

    ell: int
    member: bool | None
    girth: float
    witness: dict | None = None
    budget_used: int = 0

    @property
    def unknown(self) -> bool:
        return self.member is None

    def as_dict(self) -> dict:
        w = dict(self.witness) if self.witness else None
        return {
            "ell": self.ell,
            "member": self.member,
            "girth": None if self.girth == INFINITE else int(self.girth),
            "witness": w,
            "budget_used": self.budget_used,
        }


def check_membership(g: Graph, ell: int, budget: Budget | None = None) -> MembershipVerdict:
    """Decide membership in the girth-(2*ell+1) no-long-odd-hole family."""
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    budget = budget or Budget()
    target = 2 * ell + 1
    gv = girth(g)
    if gv != target:
        witness = {"kind": "girth_mismatch", "girth": None if gv == INFINITE else int(gv)}
        if gv != INFINITE:
            witness["cycle"] = shortest_cycle(g)
        return MembershipVerdict(ell, False, gv, witness, budget.used)
    try:
        holes = enumerate_holes(g, budget=budget)
    except BudgetExceeded as e:
        return MembershipVerdict(
            ell, None, gv, {"kind": "budget_exceeded", "nodes": e.used}, e.used
        )
    for h in holes:
        if h.odd and h.length >= 2 * ell + 3:
            return MembershipVerdict(
                ell,
                False,
                gv,
                {"kind": "long_odd_hole", "length": h.length, "hole": list(h.vertices)},
                budget.used,
            )
    return MembershipVerdict(ell, True, gv, None, budget.used)


def enumerate_cycles_with_length(
    g: Graph, length: int, budget: Budget | None = None
) -> list[list[int]]:
    """All (not necessarily induced) cycles of exactly the given length.

    Same anchored DFS as hole enumeration but without the chord pruning;
    used by the chord-count checker for even cycles of length 4*ell.
    """
    budget = budget or Budget()
    found: list[list[int]] = []
    for a in range(g.n):
        above = ~((1 << (a + 1)) - 1)

        def extend(path: list[int], path_mask: int):
            budget.tick()
            last = path[-1]
            if len(path) == length:
                if g.adj[last] >> a & 1 and path[1] < last:
                    found.append(list(path))
                return
            for v in bits(g.adj[last] & above & ~path_mask):
                extend(path + [v], path_mask | 1 << v)

        for b in bits(g.adj[a] & above):
            extend([a, b], (1 << a) | (1 << b))
    found.sort()
    return found
