"""Tangle descriptors and derivation of their semantic profile.

A 3-decomposition splits a genus-two handlebody-knot into two 3-tangles:
a tau-tangle (a cone on three boundary points) or a rho-tangle (an arc
plus a loop with a whisker).  A tangle side is described either by a
rational twist presentation, by torus curve parameters (rho only), or by
abstract geometric flags taken at face value after validation.

``resolve_tau`` / ``resolve_rho`` turn a descriptor into a ResolvedTangle:
slope, triviality, essentiality, torus parameters and the satellite /
cable / Hopf-summand trichotomy, each derived field carrying a provenance
note naming the rule that produced it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    InconsistentFlags,
    InfiniteSlope,
    InvalidTorusParams,
    MutualExclusivityViolation,
)
from .frac import ExtFraction, TwistVector, cf_eval, slope_normalize

KIND_TAU = "tau"
KIND_RHO = "rho"

HALF = ExtFraction(1, 2)
ZERO = ExtFraction(0, 1)


@dataclass(frozen=True)
class TorusParams:
    """Curve parameters (p, q) of a torus rho-tangle.

    Canonical form of the equivalence (p, q) ~ (-p, -q): p > 0 always.
    p == 1 is rejected; that case collapses to the Hopf slope 1/2 and must
    be presented through the rational path.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0:
            p, q = -p, -q
        if p < 2:
            raise InvalidTorusParams(f"torus parameter p must be >= 2, got ({self.p}, {self.q})")
        if math.gcd(p, abs(q)) != 1:
            raise InvalidTorusParams(f"torus parameters must be coprime, got ({self.p}, {self.q})")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def mirrored(self) -> "TorusParams":
        return TorusParams(self.p, -self.q)


def twist_rho(t: TorusParams, r: int) -> TorusParams:
    """Apply r Dehn twists along the twisting disk: (p, q) -> (p, q + r*p).

    gcd(p, q + r*p) == gcd(p, q), so the result is always valid; it is
    re-canonicalized by construction.
    """
    return TorusParams(t.p, t.q + r * t.p)


# ---------------------------------------------------------------------------
# Descriptors


@dataclass(frozen=True)
class RationalPresentation:
    """A rational tangle given by its twist vector."""

    twists: TwistVector

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))


@dataclass(frozen=True)
class TorusRhoPresentation:
    """A rho-tangle given by torus curve parameters."""

    params: TorusParams


@dataclass(frozen=True)
class AbstractTau:
    """Face-value flags for a tau-tangle the engine cannot compute from."""

    atoroidal: bool
    trivial: bool
    rational: bool
    slope: ExtFraction | None = None
    unit_fraction_slope: bool | None = None


@dataclass(frozen=True)
class AbstractRho:
    """Face-value flags for a rho-tangle."""

    atoroidal: bool
    trivial: bool
    hopf_tangle: bool = False
    satellite: bool = False
    cable: bool = False
    hopf_summand: bool = False
    torus: TorusParams | None = None


@dataclass(frozen=True)
class TauDescriptor:
    presentation: RationalPresentation | AbstractTau

    @property
    def kind(self) -> str:
        return KIND_TAU


@dataclass(frozen=True)
class RhoDescriptor:
    presentation: RationalPresentation | TorusRhoPresentation | AbstractRho

    @property
    def kind(self) -> str:
        return KIND_RHO


Descriptor = TauDescriptor | RhoDescriptor


@dataclass(frozen=True)
class Violation:
    """One broken descriptor invariant: the rule name plus the fields at fault."""

    rule: str
    fields: tuple[str, ...]
    detail: str

    def __str__(self) -> str:
        return f"{self.rule} ({', '.join(self.fields)}): {self.detail}"


@dataclass(frozen=True)
class ResolvedTangle:
    """Derived semantic profile of one side of a decomposition."""

    kind: str
    atoroidal: bool
    trivial: bool
    essential: bool
    rational: bool | None = None
    slope: ExtFraction | None = None
    unit_fraction_slope: bool | None = None
    torus: TorusParams | None = None
    satellite: bool = False
    cable: bool = False
    hopf_summand: bool = False
    hopf_tangle: bool = False
    provenance: tuple[str, ...] = field(default_factory=tuple)


# ---------------------------------------------------------------------------
# Validation

def _tau_abstract_violations(a: AbstractTau) -> list[Violation]:
    out: list[Violation] = []
    if not a.rational and (a.slope is not None or a.unit_fraction_slope is not None):
        out.append(Violation(
            "NonRationalSlopeData", ("rational", "slope", "unit_fraction_slope"),
            "slope data requires rational = true"))
    if a.slope is not None:
        if a.slope.is_infinite:
            out.append(Violation(
                "InfiniteSlope", ("slope",),
                "infinite slope does not present a rational 3-tangle"))
        else:
            norm = slope_normalize(a.slope)
            unit = abs(norm.num) == 1
            if a.unit_fraction_slope is not None and a.unit_fraction_slope != unit:
                out.append(Violation(
                    "SlopeFlagMismatch", ("slope", "unit_fraction_slope"),
                    f"slope {norm} has |numerator| {'==' if unit else '!='} 1"))
            if a.trivial != norm.is_zero:
                out.append(Violation(
                    "TrivialFlagConflict", ("trivial", "slope"),
                    f"trivial must hold exactly for slope 0, slope is {norm}"))
    elif a.trivial and a.unit_fraction_slope:
        out.append(Violation(
            "TrivialFlagConflict", ("trivial", "unit_fraction_slope"),
            "a trivial tangle has slope 0, never a unit fraction"))
    if a.trivial and not a.rational:
        out.append(Violation(
            "TrivialFlagConflict", ("trivial", "rational"),
            "the trivial tangle is rational (slope 0)"))
    return out


def _rho_abstract_violations(a: AbstractRho) -> list[Violation]:
    out: list[Violation] = []
    satellite = a.satellite or a.torus is not None  # torus with p >= 2 is satellite
    flags = [name for name, on in (
        ("satellite", satellite), ("cable", a.cable), ("hopf_summand", a.hopf_summand)) if on]
    if len(flags) > 1:
        out.append(Violation(
            "MutualExclusivity", tuple(flags),
            "satellite, cable and hopf_summand are mutually exclusive"))
    if a.hopf_tangle:
        bad = tuple(f for f in ("trivial",) if a.trivial) + tuple(flags)
        if bad:
            out.append(Violation(
                "HopfTangleConflict", ("hopf_tangle",) + bad,
                "the Hopf tangle is non-trivial, not satellite or cable, "
                "and has no Hopf summand"))
    if a.trivial and (flags or a.hopf_tangle or a.torus is not None):
        out.append(Violation(
            "TrivialFlagConflict", ("trivial",) + tuple(flags),
            "a trivial tangle carries none of the annulus-producing flags"))
    return out


def validate_descriptor(d: Descriptor) -> list[Violation]:
    """Collect every broken invariant of a descriptor; empty list iff valid."""
    p = d.presentation
    if isinstance(p, RationalPresentation):
        if cf_eval(p.twists).is_infinite:
            return [Violation(
                "InfiniteSlope", ("twists",),
                f"twist vector {list(p.twists)} evaluates to infinity")]
        return []
    if isinstance(p, TorusRhoPresentation):
        return []  # TorusParams validates itself at construction
    if isinstance(p, AbstractTau):
        return _tau_abstract_violations(p)
    return _rho_abstract_violations(p)


def _raise_violations(violations: list[Violation]):
    if not violations:
        return
    first = violations[0]
    if first.rule == "MutualExclusivity":
        raise MutualExclusivityViolation(str(first))
    if first.rule == "InfiniteSlope":
        raise InfiniteSlope(str(first))
    raise InconsistentFlags("; ".join(str(v) for v in violations))


# ---------------------------------------------------------------------------
# Resolution

def _torus_from_slope(slope: ExtFraction) -> TorusParams | None:
    # slope +-1/(2k) with k >= 2 presents a (k, +-1)-torus arc
    if abs(slope.num) == 1 and slope.den % 2 == 0 and slope.den >= 4:
        return TorusParams(slope.den // 2, 1 if slope.num > 0 else -1)
    return None


def resolve_tau(d: TauDescriptor) -> ResolvedTangle:
    """Derive the semantic profile of a tau-tangle descriptor."""
    p = d.presentation
    if isinstance(p, RationalPresentation):
        value = cf_eval(p.twists)
        if value.is_infinite:
            raise InfiniteSlope(
                f"twist vector {list(p.twists)} evaluates to infinity; "
                "it does not present a rational 3-tangle")
        slope = slope_normalize(value)
        trivial = slope.is_zero
        return ResolvedTangle(
            kind=KIND_TAU,
            atoroidal=True,
            trivial=trivial,
            essential=not trivial,
            rational=True,
            slope=slope,
            unit_fraction_slope=abs(slope.num) == 1,
            provenance=(
                "slope: twist-vector value normalized to (-1/2, 1/2]",
                "atoroidal: rational tangles are atoroidal",
                "trivial: slope is 0 modulo Z" if trivial
                else "essential: atoroidal, non-trivial and not a Hopf tangle",
            ),
        )
    _raise_violations(_tau_abstract_violations(p))
    slope = slope_normalize(p.slope) if p.slope is not None else None
    if slope is not None:
        unit: bool | None = abs(slope.num) == 1
    else:
        unit = p.unit_fraction_slope
    provenance = ["flags: abstract descriptor taken at face value"]
    if p.atoroidal:
        provenance.append("essential: atoroidal, non-trivial and not a Hopf tangle")
    return ResolvedTangle(
        kind=KIND_TAU,
        atoroidal=p.atoroidal,
        trivial=p.trivial,
        essential=not p.trivial,
        rational=p.rational,
        slope=slope,
        unit_fraction_slope=unit if p.rational else False,
        provenance=tuple(provenance),
    )


def resolve_rho(d: RhoDescriptor) -> ResolvedTangle:
    """Derive the semantic profile of a rho-tangle descriptor."""
    p = d.presentation
    if isinstance(p, RationalPresentation):
        value = cf_eval(p.twists)
        if value.is_infinite:
            raise InfiniteSlope(
                f"twist vector {list(p.twists)} evaluates to infinity; "
                "it does not present a rational 3-tangle")
        slope = slope_normalize(value)
        trivial = slope.is_zero
        hopf = slope == HALF
        torus = _torus_from_slope(slope)
        provenance = [
            "slope: twist-vector value normalized to (-1/2, 1/2]",
            "atoroidal: rational tangles are atoroidal",
        ]
        if hopf:
            provenance.append("hopf_tangle: slope 1/2 is the Hopf tangle, "
                              "non-trivial but inessential")
        if torus is not None:
            provenance.append(
                f"torus: slope {slope} = +-1/(2k) presents a ({torus.p}, {torus.q})-torus arc")
            provenance.append("satellite: torus parameters with p >= 2 "
                              "bound a type I (satellite) annulus")
        else:
            provenance.append("satellite/cable/hopf_summand: absent for rational "
                              "slopes other than +-1/(2k); a rational presentation "
                              "keeps the loop unknotted, so never cable")
        return ResolvedTangle(
            kind=KIND_RHO,
            atoroidal=True,
            trivial=trivial,
            essential=not trivial and not hopf,
            rational=True,
            slope=slope,
            unit_fraction_slope=abs(slope.num) == 1,
            torus=torus,
            satellite=torus is not None,
            hopf_tangle=hopf,
            provenance=tuple(provenance),
        )
    if isinstance(p, TorusRhoPresentation):
        t = p.params
        rational = abs(t.q) == 1
        slope = ExtFraction(t.q, 2 * t.p) if rational else None
        provenance = [
            "torus: declared curve parameters, canonicalized to p > 0",
            "satellite: torus parameters with p >= 2 bound a type I (satellite) annulus",
            "essential: atoroidal, non-trivial and not a Hopf tangle",
        ]
        if rational:
            provenance.append(f"slope: a (k, +-1)-torus arc has slope +-1/(2k) = {slope}")
        else:
            provenance.append("rational: false, a rational loop-tangle has slope +-1/(2k) "
                              "and torus parameters (k, +-1)")
        return ResolvedTangle(
            kind=KIND_RHO,
            atoroidal=True,
            trivial=False,
            essential=True,
            rational=rational,
            slope=slope,
            unit_fraction_slope=True if rational else None,
            torus=t,
            satellite=True,
            provenance=tuple(provenance),
        )
    _raise_violations(_rho_abstract_violations(p))
    satellite = p.satellite or p.torus is not None
    provenance = ["flags: abstract descriptor taken at face value"]
    if p.torus is not None and not p.satellite:
        provenance.append("satellite: torus parameters with p >= 2 "
                          "bound a type I (satellite) annulus")
    if p.atoroidal:
        provenance.append("essential: atoroidal, non-trivial and not a Hopf tangle")
    return ResolvedTangle(
        kind=KIND_RHO,
        atoroidal=p.atoroidal,
        trivial=p.trivial,
        essential=not p.trivial and not p.hopf_tangle,
        torus=p.torus,
        satellite=satellite,
        cable=p.cable,
        hopf_summand=p.hopf_summand,
        hopf_tangle=p.hopf_tangle,
        provenance=tuple(provenance),
    )


def resolve(d: Descriptor) -> ResolvedTangle:
    if isinstance(d, TauDescriptor):
        return resolve_tau(d)
    return resolve_rho(d)


# ---------------------------------------------------------------------------
# Mirror image

def mirror_descriptor(d: Descriptor) -> Descriptor:
    """Mirror image: negate twists and slopes, map torus (p, q) to (p, -q)."""
    p = d.presentation
    if isinstance(p, RationalPresentation):
        mirrored = RationalPresentation(tuple(-a for a in p.twists))
    elif isinstance(p, TorusRhoPresentation):
        mirrored = TorusRhoPresentation(p.params.mirrored())
    elif isinstance(p, AbstractTau):
        mirrored = AbstractTau(
            atoroidal=p.atoroidal, trivial=p.trivial, rational=p.rational,
            slope=-p.slope if p.slope is not None else None,
            unit_fraction_slope=p.unit_fraction_slope)
    else:
        mirrored = AbstractRho(
            atoroidal=p.atoroidal, trivial=p.trivial, hopf_tangle=p.hopf_tangle,
            satellite=p.satellite, cable=p.cable, hopf_summand=p.hopf_summand,
            torus=p.torus.mirrored() if p.torus is not None else None)
    if isinstance(d, TauDescriptor):
        return TauDescriptor(mirrored)
    return RhoDescriptor(mirrored)
