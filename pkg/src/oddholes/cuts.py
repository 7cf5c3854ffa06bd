"""Edge cuts, small path cuts, and degree screening, with witnesses."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits, mask_of


@dataclass
class CutCertificate:
    kind: str  # two_edge_cut | k2_cut | p3_cut
    elements: tuple  # two edges, or the 2/3-vertex path
    component_split: tuple[tuple[int, ...], tuple[int, ...]]

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "elements": [list(e) if isinstance(e, tuple) else e for e in self.elements],
            "component_split": [list(s) for s in self.component_split],
        }


def _split_after_removal(g: Graph, allowed: int) -> tuple[tuple, tuple] | None:
    """(component, rest) if the allowed vertices are disconnected, else None."""
    if allowed == 0:
        return None
    start = (allowed & -allowed).bit_length() - 1
    comp = g.component_mask(start, allowed)
    if comp == allowed:
        return None
    return tuple(bits(comp)), tuple(bits(allowed & ~comp))


def find_two_edge_cut(g: Graph) -> CutCertificate | None:
    """Lexicographically least 2-edge set whose removal disconnects g.

    Non-minimal reading: a bridge plus any second edge qualifies.
    """
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    edges = g.edges()
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            gg = g.without_edges([e, f])
            split = _split_after_removal(gg, gg.full_mask)
            if split is not None:
                return CutCertificate("two_edge_cut", (e, f), split)
    return None


def find_path_cut(g: Graph, i: int) -> CutCertificate | None:
    """An i-vertex path (i in {2,3}) whose vertex removal disconnects g."""
    if i not in (2, 3):
        raise ValueError("path cut size must be 2 or 3")
    if not g.is_connected():
        raise ValueError("input graph must be connected")
    kind = "k2_cut" if i == 2 else "p3_cut"
    if i == 2:
        for u, v in g.edges():
            allowed = g.full_mask & ~mask_of((u, v))
            split = _split_after_removal(g, allowed)
            if split is not None:
                return CutCertificate(kind, (u, v), split)
        return None
    for mid in range(g.n):
        nbrs = g.neighbors(mid)
        for ai in range(len(nbrs)):
            for bi in range(ai + 1, len(nbrs)):
                a, b = nbrs[ai], nbrs[bi]
                allowed = g.full_mask & ~mask_of((a, mid, b))
                split = _split_after_removal(g, allowed)
                if split is not None:
                    return CutCertificate(kind, (a, mid, b), split)
    return None


def degree_two_vertices(g: Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 2]


def verify_cut_certificate(g: Graph, cert: CutCertificate) -> tuple[bool, str]:
    """Definitional re-validation using only graph primitives."""
    c1, c2 = cert.component_split
    if not c1 or not c2 or set(c1) & set(c2):
        return False, "bad component split"
    if cert.kind == "two_edge_cut":
        e, f = cert.elements
        if not (g.has_edge(*e) and g.has_edge(*f)):
            return False, "elements are not edges"
        gg = g.without_edges([tuple(e), tuple(f)])
        m1, m2 = mask_of(c1), mask_of(c2)
        if m1 | m2 != g.full_mask:
            return False, "split does not cover the graph"
        for v in c1:
            if gg.adj[v] & m2:
                return False, "split parts still connected"
        return True, "ok"
    vs = list(cert.elements)
    if cert.kind == "p3_cut":
        if len(vs) != 3 or not (g.has_edge(vs[0], vs[1]) and g.has_edge(vs[1], vs[2])):
            return False, "elements are not a 3-vertex path"
    elif cert.kind == "k2_cut":
        if len(vs) != 2 or not g.has_edge(vs[0], vs[1]):
            return False, "elements are not an edge"
    else:
        return False, f"unknown cut kind {cert.kind}"
    removed = mask_of(vs)
    m1, m2 = mask_of(c1), mask_of(c2)
    if m1 & removed or m2 & removed:
        return False, "split includes removed vertices"
    if (m1 | m2 | removed) != g.full_mask:
        return False, "split does not cover the graph"
    for v in c1:
        if g.adj[v] & m2:
            return False, "split parts still adjacent"
    return True, "ok"
