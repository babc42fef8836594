"""
Tests for the extant comparators: Gowers norms, regularity notions,
stable influences and the relation battery
"""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constructions import inner_product
from core import BooleanFunction, BudgetExceededError, PreconditionError, VerificationError, influence, xor_function
from extant import (
    binary_expansion_lift,
    f2_regular_error,
    geometric_decay_rate,
    gowers_norm,
    gowers_power_sampled_definition,
    lift_invariance,
    max_stable_influence,
    r_regular_error,
    r_regular_profile,
    r_regularity_bound,
    relation_battery,
    stable_influence,
    stable_influence_bound,
    stable_influence_profile,
    theorem_case_split,
    zp_correlations,
    zp_decay_table,
    zp_log_rank,
    zp_regularity_error,
)


def gowers_power_brute(f: BooleanFunction, k: int) -> float:
    """||f||_{U^k}^(2^k) summed over every x and h_1..h_k."""
    total = 0
    for x, *h in itertools.product(range(f.size), repeat=k + 1):
        prod = 1
        for subset in range(1 << k):
            point = x
            for i in range(k):
                if subset >> i & 1:
                    point ^= h[i]
            prod *= int(f.table[point])
        total += prod
    return total / f.size ** (k + 1)


# ======================================================================
# Gowers norms
# ======================================================================

def test_u1_is_absolute_mean():
    assert gowers_norm(inner_product(2), 1).value == pytest.approx(0.25)
    assert gowers_norm(xor_function(3), 1).value == pytest.approx(0.0)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_u2_of_inner_product(m):
    n = 2 * m
    assert gowers_norm(inner_product(m), 2).value == pytest.approx(2.0 ** (-n / 4))


@pytest.mark.parametrize("m", [1, 2, 3])
def test_u3_of_quadratic_is_one(m):
    result = gowers_norm(inner_product(m), 3)
    assert result.method == "exact-recursive"
    assert result.value == pytest.approx(1.0)


@given(st.integers(1, 3), st.integers(0, 2 ** 16))
@settings(max_examples=10, deadline=None)
def test_recursion_matches_definition(n, seed):
    f = BooleanFunction.random(n, seed=seed)
    for k in (2, 3):
        assert gowers_norm(f, k).value ** (1 << k) == pytest.approx(gowers_power_brute(f, k), abs=1e-9)


def test_definition_estimator_is_exact_on_quadratics():
    mean, stderr = gowers_power_sampled_definition(inner_product(2), 3, samples=500, seed=4)
    assert mean == 1.0
    assert stderr == 0.0


def test_sampled_mode_is_reproducible_and_close():
    f = BooleanFunction.random(6, seed=21)
    a = gowers_norm(f, 3, mode="sampled", samples=2000, seed=5)
    b = gowers_norm(f, 3, mode="sampled", samples=2000, seed=5)
    assert a == b
    assert a.method == "sampled"
    assert a.as_dict()["samples"] == 2000
    exact = gowers_norm(f, 3).value
    assert abs(a.value ** 8 - exact ** 8) <= 5 * a.stderr + 1e-12


def test_sampled_mode_below_three_is_exact():
    assert gowers_norm(inner_product(2), 2, mode="sampled").method == "exact-recursive"


def test_gowers_argument_checks():
    f = inner_product(2)
    with pytest.raises(PreconditionError):
        gowers_norm(f, 0)
    with pytest.raises(PreconditionError):
        gowers_norm(f, 3, mode="guess")
    with pytest.raises(BudgetExceededError):
        gowers_norm(f, 4, budget=10)


@given(st.integers(1, 5), st.integers(0, 2 ** 16))
@settings(max_examples=15, deadline=None)
def test_gowers_norms_increase_with_order(n, seed):
    f = BooleanFunction.random(n, seed=seed)
    norms = [gowers_norm(f, k).value for k in (1, 2, 3, 4)]
    for lower, higher in zip(norms, norms[1:]):
        assert lower <= higher + 1e-12


@pytest.mark.parametrize("seed", [13, 14])
def test_definition_estimator_tracks_u2_on_random_functions(seed):
    f = BooleanFunction.random(6, seed=seed)
    mean, stderr = gowers_power_sampled_definition(f, 2, samples=20000, seed=seed)
    assert stderr > 0
    assert abs(mean - gowers_norm(f, 2).value ** 4) <= 3 * stderr


def test_norm_overshoot_raises(monkeypatch):
    monkeypatch.setattr("extant.gowers._powers", lambda tables, k: np.array([1.5]))
    with pytest.raises(VerificationError):
        gowers_norm(inner_product(2), 2)


def test_rounding_above_one_is_clamped(monkeypatch):
    monkeypatch.setattr("extant.gowers._powers", lambda tables, k: np.array([1.0 + 1e-14]))
    assert gowers_norm(inner_product(2), 3).value == 1.0


def test_f2_regularity_is_next_gowers_norm():
    assert f2_regular_error(inner_product(2), 1) == pytest.approx(0.5)
    with pytest.raises(PreconditionError):
        f2_regular_error(inner_product(2), -1)


# ======================================================================
# R-regularity
# ======================================================================

def test_r_regular_profile_of_bent_function_is_flat():
    profile = r_regular_profile(inner_product(2))
    assert profile["d"].tolist() == [0, 1, 2, 3, 4]
    assert all(eps == Fraction(1, 4) for eps in profile["epsilon"])


def test_r_regular_without_zero():
    f = inner_product(2)
    assert r_regular_error(f, 0, include_zero=False) == 0
    assert r_regular_error(f, 1, include_zero=False) == Fraction(1, 4)


def test_r_regular_error_of_parity():
    f = xor_function(4)
    assert r_regular_error(f, 3) == 0
    assert r_regular_error(f, 4) == 1
    with pytest.raises(PreconditionError):
        r_regular_error(f, 5)


# ======================================================================
# Z/2^n regularity
# ======================================================================

def test_binary_expansion_lift_is_identity_on_encodings():
    assert binary_expansion_lift(5, 3) == 5
    with pytest.raises(PreconditionError):
        binary_expansion_lift(8, 3)


def test_constant_has_no_nonzero_correlation():
    mags = zp_correlations(BooleanFunction.constant(5))
    assert mags[0] == pytest.approx(1.0)
    assert np.allclose(mags[1:], 0.0)


def test_one_bit_parity_correlates_fully_at_half_period():
    corr = zp_regularity_error(xor_function(1))
    assert corr.j == 1
    assert corr.magnitude == pytest.approx(1.0)


def test_parity_correlation_decays_geometrically():
    """Test that M(n+1)/M(n) settles at sqrt(3)/2, well below sqrt(2 + sqrt(2))/2"""
    table = zp_decay_table(range(8, 15))
    assert table["n"].tolist() == list(range(8, 15))
    assert math.isnan(table["ratio"].iloc[0])
    for ratio in table.loc[table["n"] >= 11, "ratio"]:
        assert ratio == pytest.approx(math.sqrt(3) / 2, abs=0.01)
    rate = geometric_decay_rate(table)
    assert 0.80 <= rate < 0.90


@given(st.integers(1, 8), st.integers(0, 2 ** 16))
@settings(max_examples=20, deadline=None)
def test_zp_correlation_ignores_sign(n, seed):
    f = BooleanFunction.random(n, seed=seed)
    assert np.array_equal(zp_correlations(f.negate()), zp_correlations(f))
    assert zp_regularity_error(f.negate()) == zp_regularity_error(f)


def test_decay_rate_needs_two_rows():
    with pytest.raises(PreconditionError):
        geometric_decay_rate(zp_decay_table([6]))


def test_zp_log_rank():
    assert zp_log_rank(0.5, 1.0) == 1
    assert zp_log_rank(1e-3, 2.0) == 14
    with pytest.raises(PreconditionError):
        zp_log_rank(0.0, 1.0)
    with pytest.raises(PreconditionError):
        zp_log_rank(0.5, 0.0)


def test_case_split_on_divisibility():
    split = theorem_case_split(8, 3)
    assert split["gamma"] == 0b11111
    assert split["other_max"] < 1e-9
    assert split["divisible_matches_reduced"]
    assert split["divisible_max"] == pytest.approx(split["reduced_max"])
    with pytest.raises(PreconditionError):
        theorem_case_split(4, 4)


# ======================================================================
# Stable influences
# ======================================================================

@pytest.mark.parametrize("n", range(1, 11))
def test_stable_influence_of_full_parity(n):
    f = xor_function(n)
    for rho in (0.25, 0.5, 0.9):
        for i in range(1, n + 1):
            assert stable_influence(f, i, rho) == pytest.approx(rho ** (n - 1), abs=1e-12)


@pytest.mark.parametrize("rho", [0.0, 0.3, 0.7, 1.0])
def test_stable_influence_of_bent_function(rho):
    n = 8
    value, coordinate = max_stable_influence(inner_product(4), rho)
    assert value == pytest.approx(((1 + rho) / 2) ** (n - 1) / 2)
    assert coordinate == 1


def test_stable_influence_at_rho_one_is_coordinate_influence():
    f = BooleanFunction.random(6, seed=8)
    for i in range(1, 7):
        assert stable_influence(f, i, 1.0) == pytest.approx(float(influence(f, 1 << (i - 1))))


def test_stable_influence_argument_checks():
    f = xor_function(3)
    with pytest.raises(PreconditionError):
        stable_influence(f, 0, 0.5)
    with pytest.raises(PreconditionError):
        stable_influence(f, 1, 1.5)


def test_stable_influence_profile_columns():
    profile = stable_influence_profile(inner_product(2), rhos=(0.25, 0.75))
    assert list(profile.columns) == ["rho", "max_influence", "coordinate", "total"]
    assert len(profile) == 2
    assert profile["max_influence"].iloc[0] < profile["max_influence"].iloc[1]


# ======================================================================
# Relations
# ======================================================================

def test_relation_battery_holds_on_bent_function():
    checks = relation_battery(inner_product(2), 2)
    assert [c.name for c in checks] == ["R-regularity bound", "lift invariance", "stable influence bound"]
    assert all(c.holds for c in checks)


def test_r_regularity_bound_on_parity():
    check = r_regularity_bound(xor_function(4), 2)
    assert check.holds
    assert check.lhs == 1
    assert check.details["rhs_squared"] == Fraction(5, 4)


def test_r_regularity_bound_on_random_functions():
    """Test the bound on 100 seeded functions at n=10 and every rank up to 3"""
    for seed in range(100):
        f = BooleanFunction.random(10, seed=seed)
        for d in (1, 2, 3):
            check = r_regularity_bound(f, d)
            assert check.holds, (seed, d, check.details)


def test_lift_invariance_zeroes_new_direction():
    check = lift_invariance(inner_product(2))
    assert check.holds
    assert check.details["w"] == 16
    assert check.details["norms"]["U2"]["original"] == pytest.approx(check.details["norms"]["U2"]["lifted"])


def test_lift_invariance_skips_norms_over_budget():
    check = lift_invariance(inner_product(2), budget=1)
    assert check.details["norms"] == {"U2": "skipped", "U3": "skipped"}
    assert check.holds


def test_stable_influence_bound_on_parity():
    check = stable_influence_bound(xor_function(4), 2)
    assert check.holds
    assert check.lhs == pytest.approx(0.125)
    with pytest.raises(PreconditionError):
        stable_influence_bound(xor_function(4), 2, delta=2.0)
