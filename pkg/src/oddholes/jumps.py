"""Jump taxonomy over an odd hole: discovery, classification, extraction.

A jump over an odd hole C is an induced path between nonadjacent hole
vertices whose interior avoids C entirely.  Classification is by which
side interiors of C its interior touches: neither (short), exactly one
(local), or both (neither-kind).  The extractors implement the
constructive shrink arguments and are always re-validated against the
raw definitions; the validators, not the extractors, are trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, BudgetExceeded
from .graphs import Graph, Hole, bits, is_induced_path, make_cycle, make_hole, mask_of
from .structures import (
    BALANCED_TYPE_1_2,
    ODD,
    find_k4_subdivisions,
    hole_arcs,
    induced_st_paths,
)
from .verdicts import Verdict, consistent, not_applicable, unknown, violation

SHORT = "short"
LOCAL = "local"
NEITHER = "neither"


@dataclass
class Jump:
    hole: Hole
    path: tuple[int, ...]  # s .. t along the jump
    q1: tuple[int, ...]    # the across side when one is designated, else arc 1
    q2: tuple[int, ...]
    classification: str
    across: tuple[int, ...] | None  # side arc the jump is across, if any
    across_one_vertex: bool

    @property
    def ends(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.path[1:-1]

    def as_dict(self) -> dict:
        return {
            "ends": sorted(self.ends),
            "path": list(self.path),
            "class": self.classification,
            "across": list(self.across) if self.across else None,
            "across_one_vertex": self.across_one_vertex,
        }


@dataclass
class JumpHole:
    jump: Jump
    side: tuple[int, ...]
    cycle: Hole


def jump_flaw(g: Graph, c: Hole, path) -> str | None:
    """Reason path is not a jump over c, or None."""
    s, t = path[0], path[-1]
    cset = set(c.vertices)
    if s not in cset or t not in cset:
        return "ends not on the hole"
    if g.has_edge(s, t):
        return "ends adjacent"
    if set(path[1:-1]) & cset:
        return "interior meets the hole"
    if not is_induced_path(g, path):
        return "not an induced path"
    return None


def _touches(g: Graph, interior_mask: int, side_interior) -> bool:
    m = mask_of(side_interior)
    for v in bits(interior_mask):
        if g.adj[v] & m:
            return True
    return False


def classify_jump(g: Graph, c: Hole, path) -> Jump:
    """Classify a validated jump; raises ValueError if path is no jump."""
    path = tuple(path)
    flaw = jump_flaw(g, c, path)
    if flaw:
        raise ValueError(f"not a jump: {flaw}")
    s, t = path[0], path[-1]
    arc1, arc2 = hole_arcs(c, s, t)
    pint = mask_of(path[1:-1])
    t1 = _touches(g, pint, arc1[1:-1])
    t2 = _touches(g, pint, arc2[1:-1])
    across = None
    across_one = False
    if not t1 and not t2:
        cls = SHORT
        # the across side is the one closing an odd jump hole
        for side, other in ((arc1, arc2), (arc2, arc1)):
            cyc = list(path) + list(side[1:-1][::-1])
            if (len(path) - 1 + len(side) - 1) % 2 == 1:
                try:
                    make_hole(g, cyc)
                    across = side
                    q1, q2 = side, other
                    break
                except ValueError:
                    pass
        else:
            q1, q2 = arc1, arc2
    elif t1 != t2:
        cls = LOCAL
        q1, q2 = (arc1, arc2) if t1 else (arc2, arc1)
        across = q1
        across_one = len(q1) - 2 == 1
    else:
        cls = NEITHER
        q1, q2 = arc1, arc2
    return Jump(c, path, tuple(q1), tuple(q2), cls, tuple(across) if across else None, across_one)


def find_jumps(g: Graph, c: Hole, budget: Budget | None = None) -> list[Jump]:
    """All jumps over the hole, fully classified, deterministic order."""
    budget = budget or Budget()
    out: list[Jump] = []
    cmask = mask_of(c.vertices)
    allowed = g.full_mask & ~cmask
    vs = sorted(c.vertices)
    for i, s in enumerate(vs):
        for t in vs[i + 1 :]:
            if g.has_edge(s, t):
                continue
            for p in induced_st_paths(g, s, t, allowed, budget, min_edges=2):
                out.append(classify_jump(g, c, p))
    out.sort(key=lambda j: (len(j.path), j.path))
    return out


def jump_hole_of(g: Graph, j: Jump) -> JumpHole | None:
    """The odd hole a short jump closes with its across side."""
    if j.classification != SHORT or j.across is None:
        return None
    cyc = list(j.path) + list(j.across[1:-1][::-1])
    return JumpHole(j, j.across, make_hole(g, cyc))


# -- parity law --------------------------------------------------------


def jump_parity_check(g: Graph, ell: int, j: Jump, host_verified: bool = True) -> Verdict:
    """Local-or-short jump across q1: path parity matches the q2 arc, the
    path with q2 closes an even hole, with q1 an odd cycle."""
    if not host_verified:
        return not_applicable(reason="host not verified as a member")
    if j.classification not in (SHORT, LOCAL) or j.across is None:
        return not_applicable(reason=f"jump is {j.classification} without across side")
    lp = len(j.path) - 1
    l1 = len(j.q1) - 1
    l2 = len(j.q2) - 1
    if lp % 2 != l2 % 2:
        return violation(case="parity", path_len=lp, q2_len=l2)
    even_cycle = list(j.path) + list(j.q2[1:-1][::-1])
    try:
        h = make_hole(g, even_cycle)
        if h.odd:
            return violation(case="pq2_odd", length=h.length)
    except ValueError as e:
        return violation(case="pq2_not_hole", reason=str(e))
    odd_cycle_len = lp + l1
    if odd_cycle_len % 2 != 1:
        return violation(case="pq1_even", length=odd_cycle_len)
    return consistent(path_len=lp, q1_len=l1, q2_len=l2)


# -- constructive extractions ------------------------------------------


def validate_short_jump(g: Graph, c: Hole, path) -> str | None:
    flaw = jump_flaw(g, c, path)
    if flaw:
        return flaw
    s, t = path[0], path[-1]
    arc1, arc2 = hole_arcs(c, s, t)
    pint = mask_of(path[1:-1])
    if _touches(g, pint, arc1[1:-1]) or _touches(g, pint, arc2[1:-1]):
        return "interior touches a side interior"
    return None


def extract_short_jump(g: Graph, c: Hole, j: Jump) -> Jump:
    """A short jump inside the union of the hole and a non-local jump.

    Identity on already-short jumps; otherwise scans the jump interior for
    a stretch between a vertex touching one side interior and a vertex
    touching the other, with no hole contact strictly between, and hooks it
    to the hole through their unique hole neighbors.
    """
    if j.classification == LOCAL:
        raise ValueError("precondition: jump must not be local")
    if j.classification == SHORT:
        return j
    path = j.path
    m1 = mask_of(j.q1[1:-1])
    m2 = mask_of(j.q2[1:-1])
    cmask = mask_of(c.vertices)
    inter = list(path[1:-1])
    marks = []
    for v in inter:
        a1 = bool(g.adj[v] & m1)
        a2 = bool(g.adj[v] & m2)
        marks.append((v, a1, a2, bool(g.adj[v] & cmask)))
    idx_touch = [i for i, (_, a1, a2, _any) in enumerate(marks) if a1 or a2]
    for a_pos in range(len(idx_touch)):
        for b_pos in range(a_pos, len(idx_touch)):
            i, k = idx_touch[a_pos], idx_touch[b_pos]
            vi, a1i, a2i, _ = marks[i]
            vk, a1k, a2k, _ = marks[k]
            if not ((a1i and a2k) or (a2i and a1k)):
                continue
            if any(marks[m][3] for m in range(i + 1, k)):
                continue
            w1s = sorted(bits(g.adj[vi] & cmask))
            w2s = sorted(bits(g.adj[vk] & cmask))
            if len(w1s) != 1 or len(w2s) != 1:
                continue
            cand = [w1s[0], *inter[i : k + 1], w2s[0]]
            if validate_short_jump(g, c, cand) is None:
                return classify_jump(g, c, cand)
    raise LemmaViolation(
        "no short jump extractable from a non-local jump",
        {"hole": list(c.vertices), "path": list(path)},
    )


class LemmaViolation(Exception):
    """A constructive lemma failed on a verified member: a research event."""

    def __init__(self, message: str, bundle: dict):
        super().__init__(message)
        self.bundle = bundle


def extract_local_one_or_short(
    g: Graph, c: Hole, j: Jump, host_verified: bool = True
) -> Jump:
    """Shrink a local jump until it is short or local across one vertex.

    Follows the minimal-counterexample descent: if the hole neighbor of the
    interior vertex nearest an end is nonadjacent to that end, a short jump
    falls out; otherwise the jump shrinks strictly through that neighbor.
    """
    if not host_verified:
        raise ValueError("operation requires a verified member host")
    if j.classification != LOCAL:
        raise ValueError("precondition: jump must be local")
    cur = j
    cmask = mask_of(c.vertices)
    guard = len(j.path) + 2
    for _ in range(guard):
        if cur.classification == SHORT or (
            cur.classification == LOCAL and cur.across_one_vertex
        ):
            return cur
        if cur.classification != LOCAL:
            # descent escaped the local regime; re-extract via the non-local rule
            return extract_short_jump(g, c, cur)
        path = cur.path
        v1, v2 = path[0], path[-1]
        inter = list(path[1:-1])
        touch_idx = [i for i, v in enumerate(inter) if g.adj[v] & cmask & ~(1 << v1) & ~(1 << v2)]
        if not touch_idx:
            raise LemmaViolation(
                "local jump with no interior hole contact",
                {"hole": list(c.vertices), "path": list(path)},
            )
        i1, i2 = touch_idx[0], touch_idx[-1]
        u1, u2 = inter[i1], inter[i2]
        w1s = sorted(bits(g.adj[u1] & cmask & ~(1 << v1) & ~(1 << v2)))
        w2s = sorted(bits(g.adj[u2] & cmask & ~(1 << v1) & ~(1 << v2)))
        if len(w1s) != 1 or len(w2s) != 1:
            raise LemmaViolation(
                "interior vertex with two hole neighbors",
                {"hole": list(c.vertices), "path": list(path)},
            )
        w1, w2 = w1s[0], w2s[0]
        if not g.has_edge(w1, v1):
            cand = [w1] + inter[: i1 + 1][::-1] + [v1]
            if validate_short_jump(g, c, cand) is None:
                return classify_jump(g, c, cand)
            raise LemmaViolation(
                "expected short jump from w1 side failed validation",
                {"hole": list(c.vertices), "path": list(path), "cand": cand},
            )
        if not g.has_edge(w2, v2):
            cand = [w2] + inter[i2:] + [v2]
            if validate_short_jump(g, c, cand) is None:
                return classify_jump(g, c, cand)
            raise LemmaViolation(
                "expected short jump from w2 side failed validation",
                {"hole": list(c.vertices), "path": list(path), "cand": cand},
            )
        # both end edges exist: shrink through w1's deepest path neighbor
        nb_idx = [i for i, v in enumerate(inter) if g.has_edge(w1, v)]
        i3 = nb_idx[-1]
        new_path = [w1] + inter[i3:] + [v2]
        flaw = jump_flaw(g, c, new_path)
        if flaw or len(new_path) >= len(cur.path):
            raise LemmaViolation(
                "descent step failed to shrink into a valid jump",
                {"hole": list(c.vertices), "path": list(path), "next": new_path, "flaw": flaw},
            )
        cur = classify_jump(g, c, new_path)
    raise LemmaViolation(
        "descent did not terminate", {"hole": list(c.vertices), "path": list(j.path)}
    )


# -- crossing relation -------------------------------------------------


@dataclass
class CrossingRelation:
    jump_a: Jump
    jump_b: Jump
    crossing: bool


def crossing(c: Hole, j1: Jump, j2: Jump) -> CrossingRelation:
    """End pairs strictly interleaving around the hole; shared ends never cross."""
    if j1.hole.vertices != c.vertices or j2.hole.vertices != c.vertices:
        raise ValueError("jumps are over different holes")
    e1, e2 = set(j1.ends), set(j2.ends)
    if e1 & e2:
        return CrossingRelation(j1, j2, False)
    pos = {v: i for i, v in enumerate(c.vertices)}
    a, b = sorted(pos[v] for v in e1)
    inside = {p for p in (pos[v] for v in e2) if a < p < b}
    return CrossingRelation(j1, j2, len(inside) == 1)


# -- crossing / uncrossing lemma checks --------------------------------


def check_cross_short_jump(
    g: Graph,
    ell: int,
    j1: Jump,
    j2: Jump,
    budget: Budget | None = None,
    host_verified: bool = True,
) -> Verdict:
    """Two crossing short jumps force an all-odd-faces subdivision or a
    balanced one of type (1,2) somewhere in the host."""
    if not host_verified:
        return not_applicable(reason="host not verified as a member")
    if j1.classification != SHORT or j2.classification != SHORT:
        return not_applicable(reason="both jumps must be short")
    if not crossing(j1.hole, j1, j2).crossing:
        return not_applicable(reason="jumps do not cross")
    try:
        found = find_k4_subdivisions(
            g,
            induced_only=True,
            budget=budget,
            kinds=(ODD, BALANCED_TYPE_1_2),
            first_only=True,
        )
    except BudgetExceeded as e:
        return unknown(reason="budget exceeded", nodes=e.used)
    if found:
        return consistent(found_kind=found[0].kind, branch=list(found[0].branch))
    return violation(reason="exhaustive search found neither structure")


def check_uncrossing_jumps(
    g: Graph,
    ell: int,
    j1: Jump,
    j2: Jump,
    budget: Budget | None = None,
    host_verified: bool = True,
) -> dict[int, Verdict]:
    """Ordered uncrossing short/local-across-one jumps: claim 1 (both short
    implies an all-odd-faces subdivision) and claim 2 (at most two vertices
    of the two across segments avoid every jump hole)."""
    gate = None
    if not host_verified:
        gate = not_applicable(reason="host not verified as a member")
    elif ell < 4:
        gate = not_applicable(reason="requires ell >= 4")
    else:
        for j in (j1, j2):
            ok = j.classification == SHORT or (
                j.classification == LOCAL and j.across_one_vertex
            )
            if not ok or j.across is None:
                gate = not_applicable(reason="jumps must be short or local across one vertex")
                break
        else:
            if set(j1.ends) == set(j2.ends):
                gate = not_applicable(reason="jumps share both ends")
            elif crossing(j1.hole, j1, j2).crossing:
                gate = not_applicable(reason="jumps cross")
    if gate is not None:
        return {1: gate, 2: gate}
    out: dict[int, Verdict] = {}
    if j1.classification == SHORT and j2.classification == SHORT:
        try:
            found = find_k4_subdivisions(
                g, induced_only=True, budget=budget, kinds=(ODD,), first_only=True
            )
            out[1] = (
                consistent(branch=list(found[0].branch))
                if found
                else violation(reason="no all-odd-faces subdivision found")
            )
        except BudgetExceeded as e:
            out[1] = unknown(reason="budget exceeded", nodes=e.used)
    else:
        out[1] = not_applicable(reason="not both short")
    # claim 2: coverage of the two across segments by jump holes
    c = j1.hole
    try:
        alljumps = find_jumps(g, c, budget=budget)
    except BudgetExceeded as e:
        out[2] = unknown(reason="budget exceeded", nodes=e.used)
        return out
    covered: set[int] = set()
    for j in alljumps:
        jh = jump_hole_of(g, j)
        if jh is not None:
            covered |= set(jh.cycle.vertices)
    segment = set(j1.across) | set(j2.across)
    uncovered = sorted(segment - covered)
    if len(uncovered) <= 2:
        out[2] = consistent(uncovered=uncovered)
    else:
        out[2] = violation(uncovered=uncovered)
    return out


# -- cycle segments ----------------------------------------------------


def cycle_segment(c, anchors) -> tuple[int, ...]:
    """The path along the cycle through the anchors in their cyclic order.

    c may be a Hole or Cycle; anchors must occur on it in the given cyclic
    order, with enough context (>= 3 anchors, or an oriented pair meaning
    "walk forward from the first") to be unambiguous.
    """
    vs = c.vertices
    pos = {v: i for i, v in enumerate(vs)}
    anchors = list(anchors)
    if len(anchors) < 2 or len(set(anchors)) != len(anchors):
        raise ValueError("need at least two distinct anchors")
    for a in anchors:
        if a not in pos:
            raise ValueError(f"anchor {a} not on the cycle")
    k = len(vs)

    def walk(direction: int) -> tuple[int, ...] | None:
        i = pos[anchors[0]]
        path = [vs[i]]
        targets = anchors[1:]
        for _ in range(k - 1):
            i = (i + direction) % k
            path.append(vs[i])
            while targets and path[-1] == targets[0]:
                targets.pop(0)
            if not targets and path[-1] == anchors[-1]:
                return tuple(path)
        return None

    results = [p for p in (walk(+1), walk(-1)) if p is not None]
    good = [p for p in results if _anchors_in_order(p, anchors)]
    if not good:
        raise ValueError(f"anchors {anchors} not in cyclic order on the cycle")
    # a bare pair is read as oriented: walk in the stored cycle direction,
    # which is the first entry because walk(+1) is probed first
    return good[0]


def _anchors_in_order(path: tuple[int, ...], anchors: list[int]) -> bool:
    idx = {v: i for i, v in enumerate(path)}
    if any(a not in idx for a in anchors):
        return False
    seq = [idx[a] for a in anchors]
    return seq == sorted(seq) and seq[0] == 0 and seq[-1] == len(path) - 1
