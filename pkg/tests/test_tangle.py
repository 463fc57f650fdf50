"""Descriptor resolution, torus parameters and the twist action."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tritangle import (
    AbstractRho,
    AbstractTau,
    ExtFraction,
    InconsistentFlags,
    InfiniteSlope,
    InvalidTorusParams,
    MutualExclusivityViolation,
    RationalPresentation,
    RhoDescriptor,
    TauDescriptor,
    TorusParams,
    TorusRhoPresentation,
    cf_eval,
    mirror_descriptor,
    mod_z_equal,
    resolve_rho,
    resolve_tau,
    slope_normalize,
    twist_rho,
    validate_descriptor,
)

twist_vectors = st.lists(st.integers(-9, 9), max_size=8)


def rational_tau(*twists):
    return TauDescriptor(RationalPresentation(twists))


def rational_rho(*twists):
    return RhoDescriptor(RationalPresentation(twists))


# ---------------------------------------------------------------------------
# TorusParams

def test_torus_canonical_sign():
    assert TorusParams(-3, -2) == TorusParams(3, 2)
    assert TorusParams(-3, 2) == TorusParams(3, -2)


def test_torus_canonical_fixpoint():
    t = TorusParams(-5, 3)
    assert TorusParams(t.p, t.q) == t


@pytest.mark.parametrize("p,q", [(1, 1), (0, 1), (1, -1), (-1, 4)])
def test_torus_rejects_p_below_two(p, q):
    with pytest.raises(InvalidTorusParams):
        TorusParams(p, q)


def test_torus_rejects_non_coprime():
    with pytest.raises(InvalidTorusParams):
        TorusParams(4, 2)


# ---------------------------------------------------------------------------
# Dehn twist action

def test_twist_base_case():
    for r in range(-4, 5):
        assert twist_rho(TorusParams(2, 1), r) == TorusParams(2, 2 * r + 1)


def test_twist_identity():
    assert twist_rho(TorusParams(3, 2), 0) == TorusParams(3, 2)


def test_twist_general_parameters():
    assert twist_rho(TorusParams(3, 2), 2) == TorusParams(3, 8)


@given(st.integers(2, 40), st.integers(-40, 40), st.integers(-10, 10), st.integers(-10, 10))
def test_twist_group_action(p, q, a, b):
    try:
        t = TorusParams(p, q)
    except InvalidTorusParams:
        return
    assert twist_rho(twist_rho(t, a), b) == twist_rho(t, a + b)


# ---------------------------------------------------------------------------
# resolve_tau

def test_tau_rational_one_third():
    t = resolve_tau(rational_tau(3, 0))
    assert t.slope == ExtFraction(1, 3)
    assert t.essential and t.atoroidal and not t.trivial
    assert t.unit_fraction_slope is True


def test_tau_rational_trivial():
    t = resolve_tau(rational_tau(0))
    assert t.slope == ExtFraction(0, 1)
    assert t.trivial and not t.essential


def test_tau_abstract_non_unit_is_essential():
    t = resolve_tau(TauDescriptor(AbstractTau(
        atoroidal=True, trivial=False, rational=True, unit_fraction_slope=False)))
    assert t.essential
    assert t.slope is None
    assert t.unit_fraction_slope is False


def test_tau_rational_infinite_slope_rejected():
    with pytest.raises(InfiniteSlope):
        resolve_tau(rational_tau(0, 0))


def test_tau_abstract_slope_flag_mismatch():
    with pytest.raises(InconsistentFlags):
        resolve_tau(TauDescriptor(AbstractTau(
            atoroidal=True, trivial=False, rational=True,
            slope=ExtFraction(2, 5), unit_fraction_slope=True)))


def test_tau_abstract_slope_without_rationality():
    with pytest.raises(InconsistentFlags):
        resolve_tau(TauDescriptor(AbstractTau(
            atoroidal=True, trivial=False, rational=False, slope=ExtFraction(1, 3))))


def test_tau_abstract_slope_normalized_and_unit_derived():
    t = resolve_tau(TauDescriptor(AbstractTau(
        atoroidal=True, trivial=False, rational=True, slope=ExtFraction(5, 2))))
    assert t.slope == ExtFraction(1, 2)
    assert t.unit_fraction_slope is True


# ---------------------------------------------------------------------------
# resolve_rho

def test_rho_rational_plain_minus_three_eighths():
    t = resolve_rho(rational_rho(2, 1, 1, 1, -1))
    assert t.slope == ExtFraction(-3, 8)
    assert t.torus is None
    assert not (t.satellite or t.cable or t.hopf_summand)
    assert t.essential


def test_rho_rational_one_sixth_is_torus_satellite():
    t = resolve_rho(rational_rho(6, 0))
    assert t.slope == ExtFraction(1, 6)
    assert t.torus == TorusParams(3, 1)
    assert t.satellite and not t.cable and not t.hopf_summand


def test_rho_rational_negative_unit_even_slope_mirrors_torus():
    t = resolve_rho(rational_rho(-6, 0))
    assert t.slope == ExtFraction(-1, 6)
    assert t.torus == TorusParams(3, -1)


def test_rho_rational_hopf():
    t = resolve_rho(rational_rho(2, 0))
    assert t.hopf_tangle
    assert not t.essential
    assert t.torus is None


def test_rho_abstract_mutual_exclusivity():
    with pytest.raises(MutualExclusivityViolation):
        resolve_rho(RhoDescriptor(AbstractRho(
            atoroidal=True, trivial=False, satellite=True, cable=True)))


def test_rho_abstract_torus_with_cable_conflicts():
    # torus parameters imply satellite, which excludes cable
    with pytest.raises(MutualExclusivityViolation):
        resolve_rho(RhoDescriptor(AbstractRho(
            atoroidal=True, trivial=False, cable=True, torus=TorusParams(3, 2))))


def test_rho_abstract_hopf_tangle_excludes_flags():
    with pytest.raises(InconsistentFlags):
        resolve_rho(RhoDescriptor(AbstractRho(
            atoroidal=True, trivial=False, hopf_tangle=True, satellite=True)))


def test_rho_torus_presentation():
    t = resolve_rho(RhoDescriptor(TorusRhoPresentation(TorusParams(3, 2))))
    assert t.torus == TorusParams(3, 2)
    assert t.satellite and t.atoroidal and t.essential
    assert t.rational is False
    assert t.slope is None


def test_rho_torus_presentation_q_one_has_slope():
    t = resolve_rho(RhoDescriptor(TorusRhoPresentation(TorusParams(2, 1))))
    assert t.rational is True
    assert t.slope == ExtFraction(1, 4)


def test_rho_abstract_cable_only():
    t = resolve_rho(RhoDescriptor(AbstractRho(
        atoroidal=True, trivial=False, cable=True)))
    assert t.cable and not t.satellite and not t.hopf_summand
    assert t.essential


# ---------------------------------------------------------------------------
# validate_descriptor

def test_validate_clean_rational():
    assert validate_descriptor(rational_tau(2, 3, 0)) == []


def test_validate_names_mutual_exclusivity():
    violations = validate_descriptor(RhoDescriptor(AbstractRho(
        atoroidal=True, trivial=False, satellite=True, hopf_summand=True)))
    assert [v.rule for v in violations] == ["MutualExclusivity"]


def test_validate_names_slope_flag_mismatch():
    violations = validate_descriptor(TauDescriptor(AbstractTau(
        atoroidal=True, trivial=False, rational=True,
        slope=ExtFraction(2, 5), unit_fraction_slope=True)))
    assert [v.rule for v in violations] == ["SlopeFlagMismatch"]


def test_validate_infinite_twist_vector():
    violations = validate_descriptor(rational_tau(0, 0))
    assert [v.rule for v in violations] == ["InfiniteSlope"]


# ---------------------------------------------------------------------------
# Properties

@given(twist_vectors)
def test_hopf_iff_slope_half_mod_z(tv):
    value = cf_eval(tv)
    if value.is_infinite:
        return
    resolved = resolve_rho(rational_rho(*tv))
    assert resolved.hopf_tangle == mod_z_equal(value, ExtFraction(1, 2))


@given(twist_vectors)
def test_resolution_deterministic(tv):
    value = cf_eval(tv)
    if value.is_infinite:
        return
    assert resolve_rho(rational_rho(*tv)) == resolve_rho(rational_rho(*tv))


@given(twist_vectors)
def test_mirror_descriptor_negates_slope(tv):
    if cf_eval(tv).is_infinite:
        return
    original = resolve_tau(rational_tau(*tv))
    mirrored = resolve_tau(mirror_descriptor(rational_tau(*tv)))
    assert mirrored.slope == slope_normalize(-original.slope)


@given(twist_vectors)
def test_provenance_present_on_derived_fields(tv):
    if cf_eval(tv).is_infinite:
        return
    resolved = resolve_rho(rational_rho(*tv))
    assert resolved.provenance
    assert any(note.startswith("slope:") for note in resolved.provenance)


@given(twist_vectors)
def test_rho_torus_derived_iff_unit_even_slope(tv):
    value = cf_eval(tv)
    if value.is_infinite:
        return
    resolved = resolve_rho(rational_rho(*tv))
    s = resolved.slope
    expected = abs(s.num) == 1 and s.den % 2 == 0 and s.den >= 4
    assert (resolved.torus is not None) == expected
    assert resolved.satellite == expected
    if resolved.torus is not None:
        assert resolved.torus.p == s.den // 2
        assert resolved.torus.q == (1 if s.num > 0 else -1)
