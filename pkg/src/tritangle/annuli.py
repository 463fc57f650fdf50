"""Good-annulus classification in rho-tangle exteriors.

An atoroidal essential rho-tangle exterior contains at most one good
annulus up to isotopy, and its type follows the satellite / cable /
Hopf-summand trichotomy.  Tau-tangle exteriors never carry one.
"""

from __future__ import annotations

from enum import Enum

from .errors import MutualExclusivityViolation, NotApplicable
from .tangle import KIND_TAU, ResolvedTangle


class AnnulusType(Enum):
    TYPE_I_SATELLITE = "type I (satellite)"
    TYPE_II_CABLE = "type II (cable)"
    HOPF_TYPE = "Hopf type"


#: Every other good annulus in the same exterior is isotopic to the one found.
UNIQUENESS_NOTE = "the good annulus is unique up to isotopy in the tangle exterior"


def good_annulus(t: ResolvedTangle) -> AnnulusType | None:
    """The type of the good annulus in the tangle exterior, if any."""
    if not t.atoroidal:
        raise NotApplicable("good-annulus classification presupposes an atoroidal tangle")
    if not t.essential:
        raise NotApplicable("good-annulus classification presupposes an essential tangle")
    if t.kind == KIND_TAU:
        return None
    flags = [
        (t.satellite, AnnulusType.TYPE_I_SATELLITE),
        (t.cable, AnnulusType.TYPE_II_CABLE),
        (t.hopf_summand, AnnulusType.HOPF_TYPE),
    ]
    hits = [annulus for on, annulus in flags if on]
    if len(hits) > 1:
        raise MutualExclusivityViolation(
            "satellite, cable and hopf_summand are mutually exclusive")
    return hits[0] if hits else None
