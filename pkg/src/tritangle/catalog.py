"""Built-in table of classified genus-two handlebody-knots.

Each entry stores a decomposition (or an annulus profile for the
non-3-decomposable example) together with the expected verdict, so the
whole hyperbolicity table can be reproduced by running the classifier
over the catalog.  The entry for 6_8 is a stored fact: its hyperbolicity
is known but not through a 3-decomposition, so it carries no
decomposition and is excluded from classifier-agreement checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnknownName
from .tangle import (
    AbstractTau,
    RationalPresentation,
    RhoDescriptor,
    TauDescriptor,
)
from .verdict import (
    BRANCH_TAURHO_HYPERBOLIC,
    BRANCH_TAUTAU_HYPERBOLIC,
    BRANCH_TAUTAU_INFINITE,
    BRANCH_TAUTAU_THREE,
    CLASSIFIED,
    INFINITELY_MANY,
    ZERO_ANNULI,
    AnnulusCount,
    AnnulusProfile,
    Decomposition,
    Obstruction,
    TAURHO,
    TAUTAU,
    Verdict,
    classify,
    obstruction_check,
)

DERIVED = "derived_by_classifier"
STORED = "stored_fact"
OBSTRUCTION = "obstruction_profile"


@dataclass(frozen=True)
class ExpectedVerdict:
    status: str
    annulus_count: AnnulusCount | None
    hyperbolic: bool | None
    branch: str | None

    def matches(self, v: Verdict) -> bool:
        return (v.status == self.status
                and v.annulus_count == self.annulus_count
                and v.hyperbolic == self.hyperbolic
                and v.branch == self.branch)

    def __str__(self) -> str:
        tag = f" [{self.branch}]" if self.branch else ""
        if self.hyperbolic:
            return "hyperbolic" + tag
        return f"{self.annulus_count} essential annuli{tag}"


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    provenance: str  # DERIVED, STORED or OBSTRUCTION
    source: str
    decomposition: Decomposition | None = None
    expected: ExpectedVerdict | None = None
    profile: AnnulusProfile | None = None
    expected_obstructions: tuple[Obstruction, ...] = ()


def _tau_rational(*twists: int) -> TauDescriptor:
    return TauDescriptor(RationalPresentation(twists))


def _rho_rational(*twists: int) -> RhoDescriptor:
    return RhoDescriptor(RationalPresentation(twists))


_TAU_RATIONAL_NON_UNIT = TauDescriptor(AbstractTau(
    atoroidal=True, trivial=False, rational=True, unit_fraction_slope=False))
_TAU_RATIONAL_UNSPECIFIED = TauDescriptor(AbstractTau(
    atoroidal=True, trivial=False, rational=True))


def _expect_hyperbolic(branch: str) -> ExpectedVerdict:
    return ExpectedVerdict(CLASSIFIED, ZERO_ANNULI, True, branch)


def _special_tautau_non_unit(name: str) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        provenance=DERIVED,
        source="special tau-tau decomposition with one side rational "
               "but not of unit-fraction slope",
        decomposition=Decomposition(
            kind=TAUTAU, special=True,
            first=_TAU_RATIONAL_NON_UNIT, second=_TAU_RATIONAL_UNSPECIFIED),
        expected=_expect_hyperbolic(BRANCH_TAUTAU_HYPERBOLIC),
    )


def _nonspecial_tautau(name: str) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        provenance=DERIVED,
        source="tau-tau decomposition that is not special",
        decomposition=Decomposition(
            kind=TAUTAU, special=False,
            first=_TAU_RATIONAL_UNSPECIFIED, second=_TAU_RATIONAL_UNSPECIFIED),
        expected=_expect_hyperbolic(BRANCH_TAUTAU_HYPERBOLIC),
    )


def _taurho_plain_rho(name: str, twists: tuple[int, ...], slope: str) -> CatalogEntry:
    return CatalogEntry(
        name=name,
        provenance=DERIVED,
        source=f"tau-rho decomposition whose rho side is rational with slope {slope}: "
               "neither satellite nor cable, no Hopf summand",
        decomposition=Decomposition(
            kind=TAURHO, special=False,
            first=_TAU_RATIONAL_UNSPECIFIED, second=_rho_rational(*twists)),
        expected=_expect_hyperbolic(BRANCH_TAURHO_HYPERBOLIC),
    )


_ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry(
        name="4_1",
        provenance=DERIVED,
        source="special tau-tau decomposition with slopes 1/3 and -1/3",
        decomposition=Decomposition(
            kind=TAUTAU, special=True,
            first=_tau_rational(3, 0), second=_tau_rational(-3, 0)),
        expected=ExpectedVerdict(CLASSIFIED, AnnulusCount(3), False, BRANCH_TAUTAU_THREE),
    ),
    CatalogEntry(
        name="5_2",
        provenance=DERIVED,
        source="special tau-tau decomposition with slopes 1/3 and 1/3",
        decomposition=Decomposition(
            kind=TAUTAU, special=True,
            first=_tau_rational(3, 0), second=_tau_rational(3, 0)),
        expected=ExpectedVerdict(CLASSIFIED, INFINITELY_MANY, False, BRANCH_TAUTAU_INFINITE),
    ),
    _special_tautau_non_unit("5_3"),
    _special_tautau_non_unit("6_2"),
    _special_tautau_non_unit("6_3"),
    _nonspecial_tautau("6_5"),
    _nonspecial_tautau("6_6"),
    _special_tautau_non_unit("6_7"),
    CatalogEntry(
        name="6_8",
        provenance=STORED,
        source="hyperbolic by an involution argument; no 3-decomposition data",
        expected=_expect_hyperbolic(None),
    ),
    _taurho_plain_rho("6_9", (2, 1, 1, 1, -1), "-3/8"),
    _special_tautau_non_unit("7_17"),
    _special_tautau_non_unit("7_18"),
    _special_tautau_non_unit("7_21"),
    _special_tautau_non_unit("7_23"),
    _taurho_plain_rho("7_26", (3, 2, 1, -1), "-3/10"),
    _special_tautau_non_unit("7_27"),
    _special_tautau_non_unit("7_33"),
    _taurho_plain_rho("7_37", (2, 1, 1, 1, -1), "-3/8"),
    _special_tautau_non_unit("7_57"),
    _special_tautau_non_unit("7_58"),
    CatalogEntry(
        name="non_3_decomposable",
        provenance=OBSTRUCTION,
        source="atoroidal knot with two non-separating essential annuli, "
               "neither of type 2",
        profile=AnnulusProfile(
            nonseparating_count=2, nonseparating_all_type2=False,
            infinitely_many=False, in_family_L=False, atoroidal=True),
        expected_obstructions=(Obstruction.NOT_3_DECOMPOSABLE_BY_ANNULUS_TYPES,),
    ),
)

_BY_NAME = {entry.name: entry for entry in _ENTRIES}


def catalog_names() -> tuple[str, ...]:
    return tuple(entry.name for entry in _ENTRIES)


def catalog_entries() -> tuple[CatalogEntry, ...]:
    return _ENTRIES


def catalog_get(name: str) -> CatalogEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownName(f"no catalog entry named {name!r}") from None


@dataclass(frozen=True)
class ReportRow:
    name: str
    checked: bool  # stored facts are reported but not checked
    passed: bool | None
    expected: str
    actual: str


@dataclass(frozen=True)
class CatalogReport:
    rows: tuple[ReportRow, ...]

    @property
    def mismatches(self) -> int:
        return sum(1 for row in self.rows if row.passed is False)

    @property
    def checked(self) -> int:
        return sum(1 for row in self.rows if row.checked)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def catalog_verify(entries: Iterable[CatalogEntry] | None = None) -> CatalogReport:
    """Run the classifier over every derived entry and compare to expectations."""
    rows = []
    for entry in (catalog_entries() if entries is None else entries):
        if entry.provenance == STORED:
            rows.append(ReportRow(
                name=entry.name, checked=False, passed=None,
                expected=str(entry.expected), actual="stored fact (not re-derived)"))
            continue
        if entry.provenance == OBSTRUCTION:
            found = tuple(obstruction_check(entry.profile))
            passed = found == entry.expected_obstructions
            rows.append(ReportRow(
                name=entry.name, checked=True, passed=passed,
                expected=", ".join(o.name for o in entry.expected_obstructions) or "none",
                actual=", ".join(o.name for o in found) or "none"))
            continue
        verdict = classify(entry.decomposition)
        rows.append(ReportRow(
            name=entry.name, checked=True,
            passed=entry.expected.matches(verdict),
            expected=str(entry.expected), actual=verdict.summary()))
    return CatalogReport(tuple(rows))
