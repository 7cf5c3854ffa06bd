"""Shared helpers: random graphs and independent brute-force oracles."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from oddholes.graphs import Graph


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def oracle_holes(g: Graph) -> list[tuple[int, ...]]:
    """Every induced cycle of length >= 4 by brute-force subset check.

    Independent of the library's DFS: a vertex subset spans a hole iff its
    induced subgraph is connected and 2-regular.
    """
    out = []
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            smask = 0
            for v in sub:
                smask |= 1 << v
            degs = [(g.adj[v] & smask).bit_count() for v in sub]
            if any(d != 2 for d in degs):
                continue
            # connectivity of the 2-regular induced subgraph
            seen = 1 << sub[0]
            frontier = [sub[0]]
            while frontier:
                nxt = []
                for u in frontier:
                    m = g.adj[u] & smask & ~seen
                    while m:
                        w = (m & -m).bit_length() - 1
                        m &= m - 1
                        seen |= 1 << w
                        nxt.append(w)
                frontier = nxt
            if seen.bit_count() == size:
                out.append(sub)
    return out


def oracle_girth(g: Graph) -> float:
    """Shortest cycle length by checking all vertex subsets.

    A graph has a cycle of length <= L iff some subset of size <= L spans
    at least as many edges as vertices.  The shortest cycle itself is a
    subset with exactly |S| edges and min degree 2, connected.
    """
    best = float("inf")
    for size in range(3, g.n + 1):
        if size >= best:
            break
        for sub in combinations(range(g.n), size):
            smask = 0
            for v in sub:
                smask |= 1 << v
            degs = [(g.adj[v] & smask).bit_count() for v in sub]
            if all(d == 2 for d in degs):
                seen = 1 << sub[0]
                frontier = [sub[0]]
                while frontier:
                    nxt = []
                    for u in frontier:
                        m = g.adj[u] & smask & ~seen
                        while m:
                            w = (m & -m).bit_length() - 1
                            m &= m - 1
                            seen |= 1 << w
                            nxt.append(w)
                    frontier = nxt
                if seen.bit_count() == size:
                    best = min(best, size)
                    break
    return best


def oracle_chromatic(g: Graph, max_k: int = 6) -> int:
    """Exact chromatic number by vectorized enumeration of all assignments."""
    if g.n == 0:
        return 0
    edges = g.edges()
    if not edges:
        return 1
    eu = np.array([e[0] for e in edges])
    ev = np.array([e[1] for e in edges])
    for k in range(2, max_k + 1):
        total = k**g.n
        chunk = 1 << 18
        for start in range(0, total, chunk):
            ids = np.arange(start, min(start + chunk, total), dtype=np.int64)
            cols = np.empty((len(ids), g.n), dtype=np.int8)
            rest = ids
            for v in range(g.n):
                cols[:, v] = rest % k
                rest = rest // k
            ok = np.all(cols[:, eu] != cols[:, ev], axis=1)
            if ok.any():
                return k
    raise AssertionError(f"oracle: chromatic number above {max_k}")
