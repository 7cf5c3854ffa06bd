"""Shared verdict value for every lemma/theorem checker and suite."""

from __future__ import annotations

from dataclasses import dataclass, field

CONSISTENT = "consistent"
VIOLATION = "violation"
NOT_APPLICABLE = "not_applicable"
UNKNOWN = "unknown"

STATUSES = (CONSISTENT, VIOLATION, NOT_APPLICABLE, UNKNOWN)


@dataclass
class Verdict:
    status: str
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad verdict status {self.status!r}")

    @property
    def consistent(self) -> bool:
        return self.status == CONSISTENT

    def as_dict(self) -> dict:
        return {"status": self.status, **self.detail}


def consistent(**detail) -> Verdict:
    return Verdict(CONSISTENT, detail)


def violation(**detail) -> Verdict:
    return Verdict(VIOLATION, detail)


def not_applicable(**detail) -> Verdict:
    return Verdict(NOT_APPLICABLE, detail)


def unknown(**detail) -> Verdict:
    return Verdict(UNKNOWN, detail)
