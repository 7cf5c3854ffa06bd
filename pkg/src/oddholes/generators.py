"""Deterministic graph generators and the membership-preserving augmenter.

Standard labeling conventions used throughout the tests:
  * Petersen: outer cycle v1..v5 = 0..4, inner vertices u1..u5 = 5..9,
    spokes vi-ui, inner edges ui-u(i+2).
  * Subdivided K4: branch vertices u1..u4 = 0..3, arris interiors appended
    in the fixed order P1, P2, Q1, Q2, L1, L2 (see docstring below).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .budget import Budget, BudgetExceeded
from .graphs import Graph, from_edges
from .holes import check_membership


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((i, 5 + i))                # spokes
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
    return from_edges(10, edges, label="petersen")


def cycle_graph(n: int, label: str = "") -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], label or f"C{n}")


def odd_cycle(ell: int) -> Graph:
    """The (2*ell+1)-cycle: the smallest member for each ell."""
    return cycle_graph(2 * ell + 1, label=f"C{2 * ell + 1}")


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)], label=f"P{n}")


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)], label=f"K{n}")


def grotzsch() -> Graph:
    """Mycielski construction over C5: 11 vertices, triangle-free, chi = 4."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        for j in ((i + 1) % 5, (i - 1) % 5):
            edges.append((5 + i, j))
        edges.append((5 + i, 10))
    return from_edges(11, edges, label="grotzsch")


def wheel(k: int) -> Graph:
    """C_k plus a hub adjacent to every rim vertex."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(i, k) for i in range(k)]
    return from_edges(k + 1, edges, label=f"W{k}")


NAMED = {
    "petersen": petersen,
    "grotzsch": grotzsch,
}


def named_graph(name: str) -> Graph:
    if name in NAMED:
        return NAMED[name]()
    if name.startswith("wheel_"):
        return wheel(int(name.split("_", 1)[1]))
    if name.startswith("c") and name[1:].isdigit():
        return cycle_graph(int(name[1:]))
    raise ValueError(f"unknown named graph {name!r}")


# -- subdivided K4 -----------------------------------------------------

# Arris endpoint convention (branch vertices u1..u4 = indices 0..3):
#   P1 = u1-u2   P2 = u3-u4   (opposite pair)
#   Q1 = u2-u3   Q2 = u1-u4   (opposite pair)
#   L1 = u1-u3   L2 = u2-u4   (opposite pair)
# Face cycles: C1 = P1+Q1+L1, C2 = P1+Q2+L2, C3 = Q1+P2+L2, C4 = L1+P2+Q2.
ARRIS_ENDPOINTS = {
    "P1": (0, 1),
    "P2": (2, 3),
    "Q1": (1, 2),
    "Q2": (0, 3),
    "L1": (0, 2),
    "L2": (1, 3),
}
ARRIS_ORDER = ("P1", "P2", "Q1", "Q2", "L1", "L2")
FACE_ARRISES = {
    "C1": ("P1", "Q1", "L1"),
    "C2": ("P1", "Q2", "L2"),
    "C3": ("Q1", "P2", "L2"),
    "C4": ("L1", "P2", "Q2"),
}


def face_lengths(arris_lengths: dict[str, int]) -> dict[str, int]:
    return {f: sum(arris_lengths[a] for a in arrises) for f, arrises in FACE_ARRISES.items()}


def subdivided_k4(lengths: tuple[int, int, int, int, int, int]) -> Graph:
    """A K4-subdivision with the given arris lengths, in ARRIS_ORDER.

    Each length is an edge count >= 1; the graph has 4 + sum(len-1) vertices.
    """
    if len(lengths) != 6 or any(x < 1 for x in lengths):
        raise ValueError(f"need six arris lengths >= 1, got {lengths}")
    by_name = dict(zip(ARRIS_ORDER, lengths))
    # at most one length-1 arris per opposite pair would still allow parallel
    # branch adjacencies; only genuinely infeasible case is multi-edges, which
    # cannot arise here since arrises have distinct endpoint pairs.
    edges = []
    nxt = 4
    for name in ARRIS_ORDER:
        a, b = ARRIS_ENDPOINTS[name]
        k = by_name[name]
        prev = a
        for _ in range(k - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, b))
    return from_edges(nxt, edges, label=f"subk4{lengths}")


def odd_k4_member(ell: int) -> Graph:
    """A subdivided K4 all of whose faces are (2*ell+1)-holes.

    Arris lengths (1, 1, ell, ell, ell, ell) give four faces of length
    2*ell+1 each; the graph is a member of the ell-family containing an
    all-odd-faces K4-subdivision (its own vertex set).
    """
    return subdivided_k4((1, 1, ell, ell, ell, ell))


# -- seeded RNG and generator specs ------------------------------------


def rng_from_seed(seed: int) -> np.random.Generator:
    """Counter-based (Philox) generator: stable and splittable."""
    return np.random.Generator(np.random.Philox(seed))


@dataclass
class GeneratorSpec:
    kind: str  # odd_cycle | subdivided_k4 | augmented_member | named | graph6_stream
    parameters: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"kind": self.kind, "parameters": self.parameters}


def generate(spec: GeneratorSpec) -> Iterator[Graph]:
    """Deterministic graph stream for a generator spec."""
    kind, p = spec.kind, spec.parameters
    if kind == "odd_cycle":
        yield odd_cycle(int(p["ell"]))
    elif kind == "named":
        yield named_graph(p["name"])
    elif kind == "subdivided_k4":
        lengths = tuple(int(x) for x in p["lengths"])
        yield subdivided_k4(lengths)
    elif kind == "augmented_member":
        ell = int(p["ell"])
        steps = int(p.get("steps", 4))
        count = int(p.get("count", 1))
        seed = int(p.get("seed", 0))
        base = odd_cycle(ell)
        for i in range(count):
            g, _ = augment_member(base, ell, steps, seed=seed + i)
            yield g.relabel(f"aug(ell={ell},steps={steps},seed={seed + i})")
    elif kind == "graph6_stream":
        from .graphs import read_graph6_lines

        with open(p["path"]) as fh:
            yield from read_graph6_lines(fh)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")


# -- membership-preserving augmentation --------------------------------


def _bfs_dist(g: Graph, src: int) -> list[int]:
    dist = [-1] * g.n
    dist[src] = 0
    frontier = [src]
    while frontier:
        nxt = []
        for u in frontier:
            for v in g.neighbors(u):
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def augment_member(
    g: Graph,
    ell: int,
    steps: int,
    seed: int = 0,
    max_n: int = 64,
    budget_cap: int | None = 2_000_000,
) -> tuple[Graph, bool]:
    """Random growth of a verified member that preserves membership.

    Each step proposes either a pendant path (never creates cycles) or an
    ear between two existing vertices sized so the shortest new cycle has
    length 2*ell+1 or 2*ell+2; every accepted step is re-verified by the
    membership decider, so the result is always a member.  Returns
    (graph, grew) where grew is False if no proposal survived.
    """
    rng = rng_from_seed(seed)
    target = 2 * ell + 1
    grew = False
    for _ in range(steps):
        if g.n >= max_n:
            break
        accepted = False
        for _attempt in range(8):
            kind = rng.integers(0, 3)
            edges = g.edges()
            if kind == 0:
                # pendant path: membership preserved trivially, verified anyway
                anchor = int(rng.integers(0, g.n))
                length = int(rng.integers(1, 4))
                new_edges = edges + [(anchor, g.n)]
                new_edges += [(g.n + i, g.n + i + 1) for i in range(length - 1)]
                cand = Graph(g.n + length, new_edges, label=g.label)
            else:
                u = int(rng.integers(0, g.n))
                v = int(rng.integers(0, g.n))
                if u == v:
                    continue
                d = _bfs_dist(g, u)[v]
                if d <= 0:
                    continue
                ear_len = target - d if kind == 1 else target + 1 - d
                if ear_len < 2:
                    continue
                new_edges = list(edges)
                prev = u
                for i in range(ear_len - 1):
                    new_edges.append((prev, g.n + i))
                    prev = g.n + i
                new_edges.append((prev, v))
                cand = Graph(g.n + ear_len - 1, new_edges, label=g.label)
            try:
                verdict = check_membership(cand, ell, Budget(budget_cap))
            except BudgetExceeded:
                continue
            if verdict.member:
                g = cand
                accepted = True
                grew = True
                break
        if not accepted:
            continue
    return g, grew
