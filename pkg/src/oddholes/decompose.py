"""Four-way decomposition of verified members with validated certificates.

For a verified member with ell >= 5, one of: a degree-2 vertex, a 3-vertex
path cut, an all-odd-faces K4-subdivision, or a balanced K4-subdivision of
type (1,2).  Searched cheap-first; an exhaustive miss is emitted as a
theorem-violation report (a research event), never a silent failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, BudgetExceeded
from .coloring import is_proper
from .cuts import CutCertificate, degree_two_vertices, find_path_cut, verify_cut_certificate
from .graphs import Graph, make_hole
from .holes import check_membership
from .structures import (
    BALANCED_TYPE_1_2,
    ODD,
    K4Subdivision,
    ODD_HOLE,
    classify_face,
    face_cycle_vertices,
    find_k4_subdivisions,
    validate_k4_subdivision,
)

OUTCOME_DEGREE2 = "degree2_vertex"
OUTCOME_P3 = "p3_cut"
OUTCOME_ODD_K4 = "odd_k4"
OUTCOME_BALANCED = "balanced_type_1_2"


@dataclass
class DecomposeCertificate:
    outcome: str
    payload: object  # vertex id, CutCertificate, or K4Subdivision

    def as_dict(self) -> dict:
        if self.outcome == OUTCOME_DEGREE2:
            payload = {"vertex": self.payload}
        elif hasattr(self.payload, "as_dict"):
            payload = self.payload.as_dict()
        else:
            payload = self.payload
        return {"outcome": self.outcome, "payload": payload}


@dataclass
class DecomposeResult:
    status: str  # certificate | violation | unknown | not_member
    certificate: DecomposeCertificate | None = None
    detail: dict | None = None

    def as_dict(self) -> dict:
        out = {"status": self.status}
        if self.certificate is not None:
            out["certificate"] = self.certificate.as_dict()
        if self.detail:
            out["detail"] = self.detail
        return out


def decompose(g: Graph, ell: int, budget: Budget | None = None) -> DecomposeResult:
    """Certified decomposition of a member; membership is re-checked."""
    if ell < 5:
        raise ValueError("decomposition requires ell >= 5")
    budget = budget or Budget()
    try:
        verdict = check_membership(g, ell, budget)
    except BudgetExceeded as e:
        return DecomposeResult("unknown", detail={"phase": "membership", "nodes": e.used})
    if verdict.member is None:
        return DecomposeResult("unknown", detail={"phase": "membership"})
    if not verdict.member:
        return DecomposeResult("not_member", detail=verdict.as_dict())

    deg2 = degree_two_vertices(g)
    if deg2:
        cert = DecomposeCertificate(OUTCOME_DEGREE2, deg2[0])
        _must_verify(g, cert)
        return DecomposeResult("certificate", cert)
    p3 = find_path_cut(g, 3)
    if p3 is not None:
        cert = DecomposeCertificate(OUTCOME_P3, p3)
        _must_verify(g, cert)
        return DecomposeResult("certificate", cert)
    try:
        found = find_k4_subdivisions(
            g, induced_only=True, budget=budget, kinds=(ODD,), first_only=True
        )
        if found:
            cert = DecomposeCertificate(OUTCOME_ODD_K4, found[0])
            _must_verify(g, cert)
            return DecomposeResult("certificate", cert)
        found = find_k4_subdivisions(
            g, induced_only=True, budget=budget, kinds=(BALANCED_TYPE_1_2,), first_only=True
        )
        if found:
            cert = DecomposeCertificate(OUTCOME_BALANCED, found[0])
            _must_verify(g, cert)
            return DecomposeResult("certificate", cert)
    except BudgetExceeded as e:
        return DecomposeResult("unknown", detail={"phase": "k4_search", "nodes": e.used})
    # all four outcomes exhausted within budget: research event
    return DecomposeResult(
        "violation",
        detail={
            "reason": "exhaustive search found no decomposition outcome",
            "ell": ell,
            "n": g.n,
        },
    )


def _must_verify(g: Graph, cert: DecomposeCertificate) -> None:
    ok, why = verify_certificate(g, cert)
    if not ok:
        raise AssertionError(f"emitted certificate failed validation: {why}")


def verify_certificate(g: Graph, cert) -> tuple[bool, str]:
    """Definitional re-validation of any certificate kind.

    Trusted base of the artifact: uses only graph primitives and the
    independent structure validators, never the detectors that produced
    the certificate.
    """
    from .coloring import ColoringResult

    if isinstance(cert, CutCertificate):
        return verify_cut_certificate(g, cert)
    if isinstance(cert, ColoringResult):
        if len(cert.assignment) != g.n:
            return False, "assignment size mismatch"
        if not is_proper(g, cert.assignment):
            return False, "assignment not proper"
        used = len(set(cert.assignment)) if g.n else 0
        if used > cert.k:
            return False, f"uses {used} colors, claimed {cert.k}"
        return True, "ok"
    if isinstance(cert, DecomposeCertificate):
        if cert.outcome == OUTCOME_DEGREE2:
            v = cert.payload
            if not (isinstance(v, int) and 0 <= v < g.n):
                return False, "bad vertex id"
            if g.degree(v) != 2:
                return False, f"vertex {v} has degree {g.degree(v)}"
            return True, "ok"
        if cert.outcome == OUTCOME_P3:
            if not isinstance(cert.payload, CutCertificate) or cert.payload.kind != "p3_cut":
                return False, "payload is not a p3 cut"
            return verify_cut_certificate(g, cert.payload)
        if cert.outcome in (OUTCOME_ODD_K4, OUTCOME_BALANCED):
            h = cert.payload
            if not isinstance(h, K4Subdivision):
                return False, "payload is not a K4-subdivision"
            ok, why = validate_k4_subdivision(g, h)
            if not ok:
                return False, why
            odd_faces = sum(
                1
                for f in h.faces
                if classify_face(g, face_cycle_vertices(h, f)) == ODD_HOLE
            )
            if cert.outcome == OUTCOME_ODD_K4 and odd_faces != 4:
                return False, f"{odd_faces} odd faces, expected 4"
            if cert.outcome == OUTCOME_BALANCED:
                if odd_faces != 2:
                    return False, f"{odd_faces} odd faces, expected 2"
                if h.kind != BALANCED_TYPE_1_2:
                    return False, "not type (1,2)"
            return True, "ok"
        return False, f"unknown outcome {cert.outcome}"
    return False, f"unknown certificate type {type(cert).__name__}"
