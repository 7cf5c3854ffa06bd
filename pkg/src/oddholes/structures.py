"""Chordal paths, theta pairs, induced K4-subdivisions, direct connections.

A K4-subdivision found here carries the fixed arris naming of
generators.ARRIS_ENDPOINTS applied to its sorted branch quadruple; the
classifier quantifies over the symmetries of that labeling where a
definition fixes one "without loss of generality".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .budget import Budget, BudgetExceeded
from .generators import ARRIS_ENDPOINTS, ARRIS_ORDER, FACE_ARRISES
from .graphs import (
    Graph,
    Hole,
    Path,
    bits,
    is_induced_path,
    make_cycle,
    make_hole,
    make_path,
    mask_of,
)
from .verdicts import Verdict, consistent, not_applicable, unknown, violation

# kinds, in increasing specificity
PLAIN = "plain"
ODD = "odd"
BALANCED = "balanced"
BALANCED_TYPE_1_2 = "balanced_type_1_2"

ODD_HOLE = "odd_hole"
EVEN_HOLE = "even_hole"
NOT_HOLE = "not_hole"


# -- generic induced (s,t)-path enumeration ---------------------------


def induced_st_paths(
    g: Graph,
    s: int,
    t: int,
    allowed_mask: int,
    budget: Budget,
    min_edges: int = 1,
    allow_end_edge: bool = False,
):
    """Induced (s,t)-paths whose interior lies in allowed_mask.

    With allow_end_edge, a host edge (s,t) is tolerated as the only chord
    (needed for chordal paths, whose ends may be adjacent on the hole).
    Deterministic: DFS in ascending vertex order.
    """
    results: list[list[int]] = []
    tbit = 1 << t
    sbit = 1 << s

    def extend(path: list[int], mask: int, blocked: int):
        budget.tick()
        last = path[-1]
        if g.adj[last] & tbit and len(path) >= min_edges:
            bad = g.adj[t] & mask & ~(1 << last)
            if allow_end_edge:
                bad &= ~sbit
            if not bad:
                results.append(path + [t])
        cand = g.adj[last] & allowed_mask & ~mask & ~blocked & ~tbit
        for w in bits(cand):
            extend(path + [w], mask | 1 << w, blocked | (g.adj[last] & ~(1 << w)))

    extend([s], sbit, 0)
    return results


# -- chordal paths -----------------------------------------------------


@dataclass
class ChordalPath:
    """A path P with C u P an induced theta subgraph of the host.

    p1, p2 are the two arcs of C sharing P's ends; by convention |p1| has
    the parity of |P| (unique for odd holes).
    """

    hole: Hole
    path: Path
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    parity_ok: bool = True

    @property
    def lengths(self) -> tuple[int, int, int]:
        return len(self.path), len(self.p1) - 1, len(self.p2) - 1


def hole_arcs(c: Hole, x: int, y: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two internally disjoint (x,y)-paths along the hole."""
    vs = c.vertices
    i, j = vs.index(x), vs.index(y)
    k = len(vs)
    arc1 = tuple(vs[(i + d) % k] for d in range((j - i) % k + 1))
    arc2 = tuple(vs[(i - d) % k] for d in range((i - j) % k + 1))
    return arc1, arc2


def split_arcs_for_path(c: Hole, path_len: int, x: int, y: int):
    """(p1, p2, parity_ok) with |p1| matching path_len's parity when possible."""
    arc1, arc2 = hole_arcs(c, x, y)
    l1, l2 = len(arc1) - 1, len(arc2) - 1
    if l1 % 2 == path_len % 2 and l2 % 2 != path_len % 2:
        return arc1, arc2, True
    if l2 % 2 == path_len % 2 and l1 % 2 != path_len % 2:
        return arc2, arc1, True
    # even hole: both arcs share parity; keep deterministic order
    first, second = (arc1, arc2) if (l1, arc1) <= (l2, arc2) else (arc2, arc1)
    return first, second, l1 % 2 == path_len % 2


def is_induced_theta(g: Graph, c: Hole, path: list[int]) -> bool:
    """G[V(C) u V(P)] must have exactly the edges of C plus those of P."""
    want = set()
    vs = c.vertices
    for a, b in zip(vs, vs[1:] + vs[:1]):
        want.add(frozenset((a, b)))
    for a, b in zip(path, path[1:]):
        want.add(frozenset((a, b)))
    verts = set(vs) | set(path)
    have = {
        frozenset((u, v))
        for u in verts
        for v in verts
        if u < v and g.has_edge(u, v)
    }
    return have == want


def find_chordal_paths(
    g: Graph, c: Hole, budget: Budget | None = None
) -> list[ChordalPath]:
    """Every chordal path of the hole c, deduplicated by vertex sequence."""
    budget = budget or Budget()
    cmask = mask_of(c.vertices)
    out: list[ChordalPath] = []
    vs = sorted(c.vertices)
    for ai, x in enumerate(vs):
        for y in vs[ai + 1 :]:
            # interior vertices may touch C only at the path's own ends
            allowed = 0
            for v in range(g.n):
                if cmask >> v & 1:
                    continue
                if g.adj[v] & cmask & ~(1 << x) & ~(1 << y):
                    continue
                allowed |= 1 << v
            for p in induced_st_paths(
                g, x, y, allowed, budget, min_edges=2, allow_end_edge=True
            ):
                if not is_induced_theta(g, c, p):
                    continue
                p1, p2, ok = split_arcs_for_path(c, len(p) - 1, x, y)
                out.append(
                    ChordalPath(
                        c,
                        Path(tuple(p), induced=is_induced_path(g, p)),
                        p1,
                        p2,
                        parity_ok=ok,
                    )
                )
    out.sort(key=lambda cp: (len(cp.path), cp.path.vertices))
    return out


def check_easy_case(ell: int, cp: ChordalPath) -> Verdict:
    """Chordal-path length law over an odd hole of a verified member.

    Evaluates the disjunction: |P1| = 1, or ell >= |P2| < |P1| = |P| >= ell+1.
    """
    lp, l1, l2 = cp.lengths
    if l1 % 2 != lp % 2:
        raise ValueError(f"parity convention violated: |P|={lp}, |P1|={l1}")
    if l1 == 1:
        return consistent(branch="p1_eq_1", lengths=[lp, l1, l2])
    if ell >= l2 and l2 < l1 and l1 == lp and lp >= ell + 1:
        return consistent(branch="long_branch", lengths=[lp, l1, l2])
    return violation(lengths=[lp, l1, l2], ell=ell)


# -- K4-subdivisions ---------------------------------------------------


@dataclass
class K4Subdivision:
    """Six internally disjoint arris paths over four branch vertices.

    branch = (u1, u2, u3, u4) sorted ascending; arrises keyed by name with
    endpoints ARRIS_ENDPOINTS[name] mapped through branch.  faces maps face
    name to (cycle_vertices, classification).
    """

    branch: tuple[int, int, int, int]
    arrises: dict[str, tuple[int, ...]]
    faces: dict[str, tuple[tuple[int, ...], str]] = field(default_factory=dict)
    kind: str = PLAIN
    induced: bool = False

    @property
    def vertices(self) -> set[int]:
        return {v for p in self.arrises.values() for v in p}

    def arris_length(self, name: str) -> int:
        return len(self.arrises[name]) - 1

    @property
    def opposite_pairs(self) -> tuple[tuple[str, str], ...]:
        return (("P1", "P2"), ("Q1", "Q2"), ("L1", "L2"))

    def as_dict(self) -> dict:
        return {
            "branch": list(self.branch),
            "arrises": {k: list(v) for k, v in sorted(self.arrises.items())},
            "faces": {
                k: {"cycle": list(cyc), "class": cls}
                for k, (cyc, cls) in sorted(self.faces.items())
            },
            "kind": self.kind,
            "induced": self.induced,
        }


def face_cycle_vertices(h: K4Subdivision, face: str) -> list[int]:
    """Concatenate the three arris paths of a face into a cyclic sequence."""
    names = FACE_ARRISES[face]
    # face arrises form a triangle on three branch vertices
    ends = {n: tuple(h.branch[i] for i in ARRIS_ENDPOINTS[n]) for n in names}
    tri = sorted({v for e in ends.values() for v in e})
    a = tri[0]
    cyc = [a]
    cur = a
    remaining = dict(ends)
    while remaining:
        for n, (p, q) in list(remaining.items()):
            if cur in (p, q):
                path = list(h.arrises[n])
                if path[0] != cur:
                    path = path[::-1]
                cyc.extend(path[1:])
                cur = path[-1]
                del remaining[n]
                break
        else:
            raise AssertionError("face arrises do not close")
    assert cyc[0] == cyc[-1]
    return cyc[:-1]


def classify_face(g: Graph, cyc: list[int]) -> str:
    c = make_cycle(g, cyc)
    if c.length < 4 or c.chords:
        return NOT_HOLE
    return ODD_HOLE if c.length % 2 else EVEN_HOLE


def _is_induced_union(g: Graph, h: K4Subdivision) -> bool:
    verts = sorted(h.vertices)
    want = set()
    for p in h.arrises.values():
        for a, b in zip(p, p[1:]):
            want.add(frozenset((a, b)))
    have = {
        frozenset((u, v))
        for i, u in enumerate(verts)
        for v in verts[i + 1 :]
        if g.has_edge(u, v)
    }
    return have == want


def classify_k4(g: Graph, h: K4Subdivision) -> str:
    """Kind per the face-parity taxonomy; fills h.faces and h.kind.

    balanced requires the subdivision to be induced; type (1,2) is read
    existentially over the Figure-style labelings (some labeling has a unit
    shared-face arris with a long designated opposite-side arris).
    """
    h.induced = _is_induced_union(g, h)
    faces = {}
    for f in FACE_ARRISES:
        cyc = face_cycle_vertices(h, f)
        faces[f] = (tuple(cyc), classify_face(g, cyc))
    h.faces = faces
    odd_faces = [f for f, (_, cls) in faces.items() if cls == ODD_HOLE]
    if len(odd_faces) == 4:
        h.kind = ODD
        if not h.induced:
            raise AssertionError(
                "all-odd-faces subdivision must be induced in the host"
            )
    elif len(odd_faces) == 2 and h.induced:
        h.kind = BALANCED_TYPE_1_2 if _is_type_1_2(h, odd_faces) else BALANCED
    else:
        h.kind = PLAIN
    return h.kind


def _shared_arris(f1: str, f2: str) -> str:
    common = set(FACE_ARRISES[f1]) & set(FACE_ARRISES[f2])
    assert len(common) == 1
    return common.pop()


def _arris_name_between(bi: int, bj: int) -> str:
    for name, (a, b) in ARRIS_ENDPOINTS.items():
        if {a, b} == {bi, bj}:
            return name
    raise KeyError((bi, bj))


def _is_type_1_2(h: K4Subdivision, odd_faces: list[str]) -> bool:
    shared = _shared_arris(*odd_faces)
    xi, xj = ARRIS_ENDPOINTS[shared]
    others = [i for i in range(4) if i not in (xi, xj)]
    for x in (xi, xj):
        for y, y2 in (others, others[::-1]):
            q1 = h.arris_length(_arris_name_between(x, y))
            l2 = h.arris_length(_arris_name_between(x, y2))
            if q1 == 1 and l2 > 1:
                return True
    return False


def figure_labelings(h: K4Subdivision) -> list[dict[str, str]]:
    """All labelings {figure name -> arris name} putting the two odd-hole
    faces in the C1/C2 positions (shared arris = P1)."""
    odd_faces = [f for f, (_, cls) in h.faces.items() if cls == ODD_HOLE]
    if len(odd_faces) != 2:
        return []
    shared = _shared_arris(*odd_faces)
    xi, xj = ARRIS_ENDPOINTS[shared]
    others = [i for i in range(4) if i not in (xi, xj)]
    out = []
    for u1, u2 in ((xi, xj), (xj, xi)):
        for u3, u4 in (others, others[::-1]):
            out.append(
                {
                    "P1": _arris_name_between(u1, u2),
                    "P2": _arris_name_between(u3, u4),
                    "Q1": _arris_name_between(u2, u3),
                    "Q2": _arris_name_between(u1, u4),
                    "L1": _arris_name_between(u1, u3),
                    "L2": _arris_name_between(u2, u4),
                }
            )
    return out


def find_k4_subdivisions(
    g: Graph,
    induced_only: bool = True,
    budget: Budget | None = None,
    first_only: bool = False,
    kinds: tuple[str, ...] | None = None,
) -> list[K4Subdivision]:
    """Induced K4-subdivision subgraphs, classified against host holes.

    Enumerates branch quadruples of degree >= 3, then searches six
    internally disjoint arris paths by ordered DFS with bitset exclusion;
    induced-ness checked incrementally.  With kinds set, stops at the first
    match of any listed kind when first_only is true.
    """
    budget = budget or Budget()
    out: list[K4Subdivision] = []
    cand_branch = [v for v in range(g.n) if g.degree(v) >= 3]
    pair_order = [ARRIS_ENDPOINTS[name] for name in ARRIS_ORDER]

    def arris_paths(x: int, y: int, hmask: int):
        """Arris candidates for branch pair (x,y) given placed vertices."""
        if g.has_edge(x, y):
            yield [x, y]
            if induced_only:
                return
        ybit = 1 << y

        def extend(path: list[int], mask: int):
            budget.tick()
            last = path[-1]
            cand = g.adj[last] & ~hmask & ~mask
            for w in bits(cand):
                if induced_only:
                    adj_placed = g.adj[w] & (hmask | mask) & ~(1 << last)
                    if adj_placed & ~ybit:
                        continue
                    if adj_placed & ybit:
                        # w touches y: it must be the final interior vertex
                        yield path + [w, y]
                        continue
                else:
                    if g.adj[w] & ybit:
                        yield path + [w, y]
                        # in non-induced mode a longer arris through w is
                        # also legitimate
                        yield from extend(path + [w], mask | 1 << w)
                        continue
                yield from extend(path + [w], mask | 1 << w)

        yield from extend([x], 0)

    for qi in range(len(cand_branch)):
        for qj in range(qi + 1, len(cand_branch)):
            for qk in range(qj + 1, len(cand_branch)):
                for ql in range(qk + 1, len(cand_branch)):
                    branch = (
                        cand_branch[qi],
                        cand_branch[qj],
                        cand_branch[qk],
                        cand_branch[ql],
                    )
                    bmask = mask_of(branch)

                    def place(idx: int, hmask: int, acc: dict):
                        budget.tick()
                        if idx == len(pair_order):
                            h = K4Subdivision(branch, dict(acc))
                            classify_k4(g, h)
                            if kinds is None or h.kind in kinds:
                                out.append(h)
                            return
                        bi, bj = pair_order[idx]
                        x, y = branch[bi], branch[bj]
                        for p in arris_paths(x, y, hmask):
                            interior = mask_of(p[1:-1])
                            acc[ARRIS_ORDER[idx]] = tuple(p)
                            place(idx + 1, hmask | interior, acc)
                            if first_only and out:
                                return
                            del acc[ARRIS_ORDER[idx]]

                    place(0, bmask, {})
                    if first_only and out:
                        out.sort(key=lambda h: (h.branch, sorted(h.arrises.values())))
                        return out
    out.sort(key=lambda h: (h.branch, sorted(h.arrises.values())))
    return out


def validate_k4_subdivision(g: Graph, h: K4Subdivision) -> tuple[bool, str]:
    """Definitional re-check: six arrises, degree profile, face classes."""
    if len(h.arrises) != 6:
        return False, "not six arrises"
    if len(set(h.branch)) != 4:
        return False, "branch vertices not distinct"
    interiors: set[int] = set()
    for name, p in h.arrises.items():
        bi, bj = ARRIS_ENDPOINTS[name]
        x, y = h.branch[bi], h.branch[bj]
        if p[0] != x or p[-1] != y:
            return False, f"arris {name} endpoints wrong"
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False, f"arris {name} missing edge ({a},{b})"
        inner = set(p[1:-1])
        if inner & set(h.branch) or inner & interiors or len(inner) != len(p) - 2:
            return False, f"arris {name} interiors not disjoint"
        interiors |= inner
    # degree profile inside H
    hedges = set()
    for p in h.arrises.values():
        for a, b in zip(p, p[1:]):
            hedges.add(frozenset((a, b)))
    deg: dict[int, int] = {}
    for e in hedges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    for v in h.branch:
        if deg.get(v) != 3:
            return False, f"branch vertex {v} has H-degree {deg.get(v)}"
    for v in interiors:
        if deg.get(v) != 2:
            return False, f"interior vertex {v} has H-degree {deg.get(v)}"
    for f, (cyc, cls) in h.faces.items():
        if classify_face(g, list(cyc)) != cls:
            return False, f"face {f} classification mismatch"
    if h.induced != _is_induced_union(g, h):
        return False, "induced flag wrong"
    return True, "ok"


# -- theta-pair and 4l-chord checks ------------------------------------


def _union_edges(*paths_of_edges) -> set[frozenset]:
    out = set()
    for edges in paths_of_edges:
        out |= edges
    return out


def _cycle_edges(vs) -> set[frozenset]:
    return {frozenset((a, b)) for a, b in zip(vs, tuple(vs[1:]) + (vs[0],))}


def _is_theta_union(c1: Hole, c2: Hole) -> bool:
    """Vertex degrees of C1 u C2: exactly two of degree 3, rest degree 2."""
    edges = _union_edges(_cycle_edges(c1.vertices), _cycle_edges(c2.vertices))
    deg: dict[int, int] = {}
    for e in edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    counts = sorted(deg.values())
    return counts.count(3) == 2 and counts.count(2) == len(counts) - 2


def check_theta_pair(g: Graph, c1: Hole, c2: Hole, ell: int, budget: Budget | None = None) -> Verdict:
    """Non-induced theta union of two odd holes forces an all-odd-faces
    K4-subdivision on exactly 4*ell symmetric-difference edges."""
    if c1.vertices == c2.vertices:
        raise ValueError("the two holes coincide")
    if not (c1.odd and c2.odd):
        raise ValueError("both holes must be odd")
    if not _is_theta_union(c1, c2):
        raise ValueError("union of the holes is not a theta subgraph")
    verts = set(c1.vertices) | set(c2.vertices)
    union_edges = _union_edges(_cycle_edges(c1.vertices), _cycle_edges(c2.vertices))
    induced_edges = {
        frozenset((u, v)) for u in verts for v in verts if u < v and g.has_edge(u, v)
    }
    if induced_edges == union_edges:
        return consistent(case="induced", note="nothing to check")
    delta = len(_cycle_edges(c1.vertices) ^ _cycle_edges(c2.vertices))
    if delta != 4 * ell:
        return violation(case="delta_mismatch", delta=delta, expected=4 * ell)
    sub, old_ids = _induced_on(g, verts)
    hs = find_k4_subdivisions(sub, induced_only=True, budget=budget, kinds=(ODD,), first_only=True)
    if hs and hs[0].vertices == set(range(sub.n)):
        return consistent(case="odd_k4", branch=[old_ids[v] for v in hs[0].branch])
    return violation(case="no_odd_k4_on_union")


def _induced_on(g: Graph, verts) -> tuple[Graph, tuple[int, ...]]:
    from .graphs import induced_subgraph

    return induced_subgraph(g, verts)


def check_4ell_hole_chords(g: Graph, cyc_vertices, ell: int, budget: Budget | None = None) -> Verdict:
    """An even cycle of length 4*ell has at most two chords; with exactly
    two, its vertex set induces an all-odd-faces K4-subdivision."""
    c = make_cycle(g, cyc_vertices)
    if c.length != 4 * ell:
        raise ValueError(f"cycle length {c.length} != 4*ell = {4 * ell}")
    nchords = len(c.chords)
    if nchords > 2:
        return violation(chords=nchords)
    if nchords < 2:
        return consistent(chords=nchords)
    sub, old_ids = _induced_on(g, c.vertices)
    hs = find_k4_subdivisions(sub, induced_only=True, budget=budget, kinds=(ODD,), first_only=True)
    if hs and hs[0].vertices == set(range(sub.n)):
        return consistent(chords=2, case="odd_k4", branch=[old_ids[v] for v in hs[0].branch])
    return violation(chords=2, case="no_odd_k4_on_union")


# -- balanced-subdivision length law (three claims) --------------------


def lemma_odd_k4_check(
    g: Graph,
    ell: int,
    h: K4Subdivision,
    host_has_odd_k4: bool | None = None,
    budget: Budget | None = None,
) -> dict[int, Verdict]:
    """Per-claim check of the balanced-subdivision length constraints.

    Claim 1: shared arris <= ell and some side arris is a unit edge.
    Claim 2: opposite arris >= ell.
    Claim 3: under no-odd-K4 + unit Q1 + long L2, no outside vertex has two
    neighbors in the subdivision.  Unmet preconditions yield not_applicable.
    """
    out: dict[int, Verdict] = {}
    if h.kind not in (BALANCED, BALANCED_TYPE_1_2):
        gate = not_applicable(reason="subdivision not balanced")
        return {1: gate, 2: gate, 3: gate}
    even_ok = all(
        cls == EVEN_HOLE for _, cls in h.faces.values() if cls != ODD_HOLE
    )
    if not even_ok:
        gate = not_applicable(reason="non-odd faces are not even holes")
        return {1: gate, 2: gate, 3: gate}
    labelings = figure_labelings(h)
    lab = labelings[0]
    p1 = h.arris_length(lab["P1"])
    p2 = h.arris_length(lab["P2"])
    sides = [h.arris_length(lab[k]) for k in ("Q1", "Q2", "L1", "L2")]
    if p1 <= ell and 1 in sides:
        out[1] = consistent(p1=p1, sides=sorted(sides))
    else:
        out[1] = violation(p1=p1, sides=sorted(sides), ell=ell)
    out[2] = consistent(p2=p2) if p2 >= ell else violation(p2=p2, ell=ell)

    if host_has_odd_k4 is None:
        try:
            found = find_k4_subdivisions(
                g, induced_only=True, budget=budget, kinds=(ODD,), first_only=True
            )
            host_has_odd_k4 = bool(found)
        except BudgetExceeded:
            out[3] = unknown(reason="odd-K4 search budget exceeded")
            return out
    if host_has_odd_k4:
        out[3] = not_applicable(reason="host has an all-odd-faces K4-subdivision")
        return out
    applicable = any(
        h.arris_length(lb["Q1"]) == 1 and h.arris_length(lb["L2"]) >= 2
        for lb in labelings
    )
    if not applicable:
        out[3] = not_applicable(reason="no labeling with unit Q1 and |L2|>=2")
        return out
    hverts = h.vertices
    hmask = mask_of(hverts)
    for v in range(g.n):
        if hmask >> v & 1:
            continue
        if (g.adj[v] & hmask).bit_count() >= 2:
            out[3] = violation(vertex=v, neighbors=sorted(bits(g.adj[v] & hmask)))
            return out
    out[3] = consistent()
    return out


# -- direct connections ------------------------------------------------


@dataclass
class DirectConnection:
    path: tuple[int, ...]  # v1 .. v2; may be a single vertex
    h1: frozenset
    h2: frozenset
    forbidden_edges: tuple[tuple[int, int], ...] = ()

    @property
    def v1(self) -> int:
        return self.path[0]

    @property
    def v2(self) -> int:
        return self.path[-1]


def validate_direct_connection(g: Graph, dc: DirectConnection) -> tuple[bool, str]:
    gg = g.without_edges(dc.forbidden_edges) if dc.forbidden_edges else g
    p = dc.path
    if set(p) & (dc.h1 | dc.h2):
        return False, "path meets the linked subgraphs"
    if not is_induced_path(gg, p):
        return False, "not an induced path"
    m1, m2 = mask_of(dc.h1), mask_of(dc.h2)
    for i, v in enumerate(p):
        has1 = bool(gg.adj[v] & m1)
        has2 = bool(gg.adj[v] & m2)
        if has1 and v != p[0]:
            return False, f"vertex {v} (not v1) has a neighbor in h1"
        if has2 and v != p[-1]:
            return False, f"vertex {v} (not v2) has a neighbor in h2"
    if not (gg.adj[p[0]] & m1):
        return False, "v1 has no neighbor in h1"
    if not (gg.adj[p[-1]] & m2):
        return False, "v2 has no neighbor in h2"
    return True, "ok"


def find_direct_connection(
    g: Graph,
    h1,
    h2,
    forbidden_edges=(),
) -> DirectConnection | None:
    """Shortest direct connection linking h1 and h2 (minus forbidden edges).

    Uses the shortest-induced-path construction: the internal vertices of a
    shortest path joining the two sets form the connection.  A single vertex
    adjacent to both sets is the degenerate one-vertex case.
    """
    h1, h2 = frozenset(h1), frozenset(h2)
    if not h1 or not h2:
        raise ValueError("h1 and h2 must be nonempty")
    if h1 & h2:
        raise ValueError("h1 and h2 overlap")
    gg = g.without_edges(forbidden_edges) if forbidden_edges else g
    m1, m2 = mask_of(h1), mask_of(h2)
    outside = gg.full_mask & ~m1 & ~m2
    # BFS over outside vertices from N(h1) to N(h2), preferring low ids
    start = [v for v in range(g.n) if outside >> v & 1 and gg.adj[v] & m1]
    dist = {v: 0 for v in start}
    parent: dict[int, int | None] = {v: None for v in start}
    frontier = sorted(start)
    best: int | None = None
    for v in frontier:
        if gg.adj[v] & m2:
            best = v
            break
    while frontier and best is None:
        nxt = []
        for u in frontier:
            for w in bits(gg.adj[u] & outside):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    nxt.append(w)
        frontier = sorted(set(nxt))
        for v in frontier:
            if gg.adj[v] & m2:
                best = v
                break
    if best is None:
        return None
    path = [best]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    dc = DirectConnection(tuple(path), h1, h2, tuple(tuple(e) for e in forbidden_edges))
    ok, why = validate_direct_connection(g, dc)
    if not ok:
        raise AssertionError(f"constructed direct connection invalid: {why}")
    return dc
