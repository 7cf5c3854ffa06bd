import random
from itertools import combinations

import pytest

from conftest import random_graph
from oddholes.budget import Budget
from oddholes.generators import (
    FACE_ARRISES,
    complete_graph,
    face_lengths,
    odd_cycle,
    odd_k4_member,
    petersen,
    subdivided_k4,
)
from oddholes.graphs import Graph, make_hole
from oddholes.holes import check_membership, odd_hole_spectrum
from oddholes.structures import (
    BALANCED,
    BALANCED_TYPE_1_2,
    ODD,
    PLAIN,
    check_4ell_hole_chords,
    check_easy_case,
    check_theta_pair,
    face_cycle_vertices,
    figure_labelings,
    find_chordal_paths,
    find_direct_connection,
    find_k4_subdivisions,
    induced_st_paths,
    lemma_odd_k4_check,
    validate_direct_connection,
    validate_k4_subdivision,
)


def _outer_c5(g):
    return make_hole(g, [0, 1, 2, 3, 4])


def test_induced_st_paths_are_induced_and_complete():
    rng = random.Random(21)
    for _ in range(30):
        g = random_graph(rng, 8, 0.35)
        ps = induced_st_paths(g, 0, 7, g.full_mask, Budget())
        seen = set()
        for p in ps:
            assert p[0] == 0 and p[-1] == 7
            key = tuple(p)
            assert key not in seen
            seen.add(key)
            for i, j in combinations(range(len(p)), 2):
                expect = j == i + 1
                if not expect:
                    assert not g.has_edge(p[i], p[j])


def test_chordal_paths_of_petersen_outer_cycle():
    g = petersen()
    cps = find_chordal_paths(g, _outer_c5(g))
    assert len(cps) == 5
    verts = {cp.path.vertices for cp in cps}
    assert (0, 5, 7, 2) in verts
    for cp in cps:
        assert cp.lengths == (3, 3, 2)
        v = check_easy_case(2, cp)
        assert v.consistent and v.detail["branch"] == "long_branch"


def test_easy_case_unit_side():
    # C5 plus a length-5 ear between adjacent hole vertices: the matching
    # side arc is the single edge 0-1, so the unit-side branch fires
    c5 = [(i, (i + 1) % 5) for i in range(5)]
    ear = [(0, 5), (5, 6), (6, 7), (7, 8), (8, 1)]
    g = Graph(9, c5 + ear)
    h = make_hole(g, [0, 1, 2, 3, 4])
    cps = find_chordal_paths(g, h)
    assert len(cps) == 1
    assert cps[0].lengths == (5, 1, 4)
    v = check_easy_case(2, cps[0])
    assert v.consistent and v.detail["branch"] == "p1_eq_1"


def test_easy_case_rejects_parity_mismatch():
    g = petersen()
    cp = find_chordal_paths(g, _outer_c5(g))[0]
    bad = type(cp)(cp.hole, cp.path, cp.p2, cp.p1, False)
    with pytest.raises(ValueError):
        check_easy_case(2, bad)


# -- K4-subdivisions ---------------------------------------------------


def _oracle_has_topological_k4(g, smask_iterable=None):
    """Subset oracle: some induced subgraph is a subdivision of K4."""
    for size in range(4, g.n + 1):
        for sub in combinations(range(g.n), size):
            smask = 0
            for v in sub:
                smask |= 1 << v
            degs = {v: (g.adj[v] & smask).bit_count() for v in sub}
            if sorted(degs.values()).count(3) != 4:
                continue
            if any(d not in (2, 3) for d in degs.values()):
                continue
            if _suppress_degree_two(g, sub, smask, degs):
                return True
    return False


def _suppress_degree_two(g, sub, smask, degs):
    """Contract degree-2 chains; True iff the result is exactly K4."""
    branch = [v for v in sub if degs[v] == 3]
    pairs = set()
    for b in branch:
        m = g.adj[b] & smask
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            prev, cur = b, w
            while degs[cur] == 2:
                nm = g.adj[cur] & smask & ~(1 << prev)
                nxt = (nm & -nm).bit_length() - 1
                prev, cur = cur, nxt
            if cur == b:
                return False  # walked a cycle back home
            pairs.add(frozenset((b, cur)))
    return len(pairs) == 6 and all(len(p) == 2 for p in pairs)


def test_k4_finder_against_subset_oracle():
    rng = random.Random(31)
    checked = 0
    for _ in range(60):
        g = random_graph(rng, rng.randint(5, 9), rng.uniform(0.25, 0.5))
        found = find_k4_subdivisions(g, induced_only=True, first_only=True)
        assert bool(found) == _oracle_has_topological_k4(g)
        checked += 1
    assert checked == 60


def test_k4_on_complete_graph_is_plain():
    subs = find_k4_subdivisions(complete_graph(4))
    assert len(subs) == 1
    h = subs[0]
    assert h.kind == PLAIN
    assert all(len(p) == 2 for p in h.arrises.values())
    ok, why = validate_k4_subdivision(complete_graph(4), h)
    assert ok, why


def test_no_subdivision_in_cycle():
    assert find_k4_subdivisions(odd_cycle(5)) == []


def test_all_odd_faces_member():
    g = odd_k4_member(5)
    assert check_membership(g, 5).member is True
    subs = find_k4_subdivisions(g)
    assert len(subs) == 1 and subs[0].kind == ODD
    for face in ("C1", "C2", "C3", "C4"):
        cyc = face_cycle_vertices(subs[0], face)
        assert len(cyc) % 2 == 1
    ok, why = validate_k4_subdivision(g, subs[0])
    assert ok, why


def test_balanced_classification_and_labelings():
    g = subdivided_k4((1, 2, 2, 2, 2, 1))
    subs = find_k4_subdivisions(g)
    assert len(subs) == 1
    h = subs[0]
    assert h.kind in (BALANCED, BALANCED_TYPE_1_2)
    labels = figure_labelings(h)
    assert len(labels) == 4
    for lab in labels:
        assert sorted(lab.values()) == sorted(lab.keys())


def test_face_lengths_helper():
    lens = face_lengths({"P1": 1, "P2": 1, "Q1": 5, "Q2": 5, "L1": 5, "L2": 5})
    assert sorted(lens.values()) == [11, 11, 11, 11]
    for face, arrs in FACE_ARRISES.items():
        assert len(arrs) == 3


def test_balanced_length_claims_on_synthetic_instance():
    g = subdivided_k4((1, 2, 2, 2, 2, 1))
    h = find_k4_subdivisions(g)[0]
    v = check_membership(g, 2)
    if v.member:
        verdicts = lemma_odd_k4_check(g, 2, h)
        assert set(verdicts) == {1, 2, 3}
        for claim in verdicts.values():
            assert claim.status in ("consistent", "not_applicable")


# -- theta pairs and 4l-cycles -----------------------------------------


def test_theta_pair_on_member():
    g = odd_k4_member(5)
    spec = odd_hole_spectrum(g)
    odd = [h for h in spec.holes if h.odd]
    found = 0
    for c1, c2 in combinations(odd, 2):
        v = check_theta_pair(g, c1, c2, 5)
        if v.status == "consistent":
            found += 1
        assert v.status != "violation"
    assert found > 0


def test_4ell_hole_chord_bound():
    g = odd_k4_member(5)
    from oddholes.holes import enumerate_cycles_with_length

    cycles = enumerate_cycles_with_length(g, 20)
    assert cycles
    for cyc in cycles:
        v = check_4ell_hole_chords(g, cyc, 5)
        assert v.status in ("consistent", "not_applicable")


# -- direct connections ------------------------------------------------


def test_direct_connection_on_petersen():
    g = petersen()
    dc = find_direct_connection(g, [0, 1], [3, 8])
    assert dc is not None
    ok, why = validate_direct_connection(g, dc)
    assert ok, why


def test_direct_connection_single_vertex():
    # one middle vertex adjacent to both sides
    g = Graph(5, [(0, 1), (2, 3), (1, 4), (4, 2)])
    dc = find_direct_connection(g, [0, 1], [2, 3])
    assert dc is not None and len(dc.path) == 1
    ok, why = validate_direct_connection(g, dc)
    assert ok, why


def test_direct_connection_absent():
    g = Graph(4, [(0, 1), (2, 3)])
    assert find_direct_connection(g, [0, 1], [2, 3]) is None
