"""
Tests for the property testers, the pattern batteries and the implication chain
"""

from fractions import Fraction

import pandas as pd
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constructions import inner_product
from core import BooleanFunction, PreconditionError, influence, restrict, subcubes_with_fixed, xor_function
from core.bits import full_mask, hamming_ball, popcount
from graphs import InjectionMap, bipartite_from_edges, rhg_edge, star_graph
from properties import (
    PropertyReport,
    averaged_restriction_influence,
    chain_table,
    check_chain,
    dth_deviation,
    dth_target,
    evaluate_witness,
    full_report,
    inf_error,
    k2_rain_deviation,
    lsr_error,
    lsr_validate_codegree,
    mean_zero_ok,
    rain_deviation,
    rc_error,
    rc_error_direct,
    rf_error,
    ri_error,
    ri_error_direct,
    sd_error,
    validate_rank,
    within_standard_errors,
)
from properties.full_report import EXACT_TAGS, worst_k2_rain
from properties.property_report import deviation_interval

seeds = st.integers(0, 2 ** 32 - 1)


def six_reports(f, d):
    return [inf_error(f, d), sd_error(f, d), rf_error(f, d), rc_error(f, d), ri_error(f, d), lsr_error(f, d)]


# ======================================================================
# Single testers
# ======================================================================

def test_inner_product_is_quasirandom_at_rank_two():
    """Test that every exact deviation of IP on 4 bits vanishes at d=2"""
    f = inner_product(2)
    for report in six_reports(f, 2):
        assert report.epsilon == 0, report.property
        assert report.mean_zero_ok


def test_xor_has_inf_error_one_half():
    report = inf_error(xor_function(4), 1)
    assert report.epsilon == Fraction(1, 2)
    assert report.witness["gamma"] == 1
    assert report.witness["influence"] == 1


def test_constant_fails_mean_precondition():
    f = BooleanFunction.constant(4)
    assert not mean_zero_ok(f)
    assert all(not r.mean_zero_ok for r in six_reports(f, 2))


def test_constant_full_report_flags_every_record():
    reports = full_report(BooleanFunction.constant(4), 2)
    assert reports
    assert all(not r.mean_zero_ok for r in reports)


def test_rank_must_lie_in_range():
    f = BooleanFunction.random(4, seed=1)
    with pytest.raises(PreconditionError):
        validate_rank(f, 0, "INF")
    with pytest.raises(PreconditionError):
        inf_error(f, 5)


def test_property_report_validates_tag_and_sign():
    with pytest.raises(PreconditionError):
        PropertyReport("XYZ", 1, Fraction(0), {}, True)
    with pytest.raises(PreconditionError):
        PropertyReport("INF", 1, Fraction(-1), {}, True)


def test_report_as_dict_hides_sampling_fields_when_exact():
    out = inf_error(inner_product(2), 1).as_dict()
    assert out["method"] == "exact"
    assert "stderr" not in out


def test_sd_witness_reports_mass_and_target():
    report = sd_error(BooleanFunction.constant(4), 2)
    assert report.epsilon == Fraction(3, 4)
    assert report.witness["codimension"] == 2
    assert report.witness["mass"] == 1
    assert report.witness["target"] == Fraction(1, 4)


@given(seeds, st.integers(1, 3))
@settings(max_examples=15, deadline=None)
def test_chain_holds_on_random_functions(seed, d):
    f = BooleanFunction.random(7, seed=seed)
    checks = check_chain(six_reports(f, d))
    assert len(checks) == 5
    assert all(c.holds for c in checks)


@pytest.mark.slow
def test_chain_battery_on_ten_bits():
    """Test the chain on 100 seeded functions at n=10 and every rank up to 3"""
    for seed in range(100):
        f = BooleanFunction.random(10, seed=seed)
        for d in (1, 2, 3):
            failed = [c for c in check_chain(six_reports(f, d)) if not c.holds]
            assert not failed, (seed, d, failed)


@given(seeds)
@settings(max_examples=10, deadline=None)
def test_restriction_scans_match_reductions(seed):
    f = BooleanFunction.random(5, seed=seed)
    assert rc_error_direct(f, 2) == rc_error(f, 2).epsilon
    assert ri_error_direct(f, 2) == ri_error(f, 2).epsilon


@given(seeds)
@settings(max_examples=10, deadline=None)
def test_averaged_restriction_influence_matches_spectral_influence(seed):
    f = BooleanFunction.random(6, seed=seed)
    for w in range(1, f.size):
        assert averaged_restriction_influence(f, w) == influence(f, w), w


@pytest.mark.parametrize("w", [0b000001, 0b010010, 0b101101, 0b111111])
def test_averaged_restriction_influence_averages_explicit_restrictions(w):
    f = BooleanFunction.random(6, seed=12)
    gamma = full_mask(popcount(w))
    cubes = list(subcubes_with_fixed(f.n, full_mask(f.n) & ~w))
    expected = sum(influence(restrict(f, c), gamma) for c in cubes) / len(cubes)
    assert averaged_restriction_influence(f, w) == expected


def test_averaged_restriction_influence_rejects_zero_shift():
    with pytest.raises(PreconditionError):
        averaged_restriction_influence(inner_product(2), 0)
    with pytest.raises(PreconditionError):
        averaged_restriction_influence(inner_product(2), 16)


@pytest.mark.parametrize("seed", range(5))
def test_errors_grow_with_rank(seed):
    f = BooleanFunction.random(6, seed=seed)
    previous = six_reports(f, 1)
    for d in range(2, f.n + 1):
        current = six_reports(f, d)
        for before, after in zip(previous, current):
            assert before.epsilon <= after.epsilon, (after.property, d)
        previous = current


@given(seeds, st.integers(1, 3))
@settings(max_examples=15, deadline=None)
def test_witnesses_reproduce_their_deviation(seed, d):
    f = BooleanFunction.random(6, seed=seed)
    for report in six_reports(f, d):
        assert evaluate_witness(f, report) == report.epsilon, report.property


def test_lsr_codegree_closed_form_matches_direct_count():
    f = BooleanFunction.random(6, seed=4)
    pairs = lsr_validate_codegree(f, 0b101, pairs=4, seed=2)
    assert len(pairs) == 4
    assert pairs[0] == (0, 0b101)
    assert all(u ^ v == 0b101 for u, v in pairs)


def test_lsr_details_carry_codegree_target():
    f = inner_product(2)
    report = lsr_error(f, 2)
    assert report.details["p"] == Fraction(1, 8)
    assert report.witness["codegree"] == 2


# ======================================================================
# Implication chain
# ======================================================================

def test_check_chain_reports_a_broken_relation():
    reports = [
        PropertyReport("INF", 1, Fraction(0), {}, True),
        PropertyReport("SD", 1, Fraction(1, 2), {}, True),
    ]
    checks = check_chain(reports)
    assert [c.relation for c in checks] == ["SD <= 2 INF"]
    assert not checks[0].holds


def test_chain_table_columns():
    table = chain_table(check_chain(six_reports(BooleanFunction.random(5, seed=3), 2)))
    assert isinstance(table, pd.DataFrame)
    assert list(table.columns) == ["relation", "lhs", "rhs", "holds"]
    assert table["holds"].all()


def test_full_report_on_bent_function():
    reports = full_report(inner_product(2), 2)
    tags = [r.property for r in reports]
    assert tags[:6] == list(EXACT_TAGS)
    assert tags.count("DTH") == 4
    k2 = [r for r in reports if r.property == "RAIN" and r.details["pattern"].startswith("K2@")]
    assert len(k2) == 1 and k2[0].epsilon == 0
    assert [r.details["pattern"] for r in reports if r.property == "RAIN"][1:] == ["k12", "k3"]
    relations = [c.relation for c in check_chain(reports)]
    assert "RAIN(K2) = INF" in relations


def test_full_report_skips_rank_two_patterns_at_rank_one():
    reports = full_report(inner_product(2), 1)
    patterns = [r.details.get("pattern") for r in reports if r.property in ("DTH", "RAIN")]
    assert "subdiv_k3" not in patterns
    assert "k12" not in patterns


def test_evaluate_witness_refuses_general_patterns():
    reports = full_report(inner_product(2), 2)
    dth = next(r for r in reports if r.property == "DTH")
    with pytest.raises(PreconditionError):
        evaluate_witness(inner_product(2), dth)


# ======================================================================
# DTH
# ======================================================================

def test_dth_star_and_cherry_are_exact_on_bent():
    f = inner_product(2)
    star = bipartite_from_edges([("a", "r")])
    report = dth_deviation(f, star, InjectionMap(4, (("a", 0),)))
    assert report.details["bhom"] == Fraction(3, 8)
    assert report.epsilon == 0
    cherry = bipartite_from_edges([("a", "r"), ("b", "r")])
    report = dth_deviation(f, cherry, InjectionMap(4, (("a", 0), ("b", 3))), d=2)
    assert report.details["bhom"] == Fraction(1, 8)
    assert report.epsilon == 0
    assert dth_target(f, cherry) == Fraction(1, 8)


def test_dth_preconditions():
    f = inner_product(2)
    claw = bipartite_from_edges([("a", "r"), ("b", "r"), ("c", "r")])
    psi = InjectionMap(4, (("a", 0), ("b", 1), ("c", 2)))
    with pytest.raises(PreconditionError):
        dth_deviation(f, claw, psi)
    wide = bipartite_from_edges([("a", f"r{i}") for i in range(5)])
    with pytest.raises(PreconditionError):
        dth_deviation(f, wide, InjectionMap(4, (("a", 0),)))
    cherry = bipartite_from_edges([("a", "r"), ("b", "r")])
    with pytest.raises(PreconditionError):
        dth_deviation(f, cherry, InjectionMap(4, (("a", 0), ("b", 0b111))), d=2)


def test_dth_degenerate_normalization_is_absolute():
    f = BooleanFunction.constant(4)
    report = dth_deviation(f, bipartite_from_edges([("a", "r")]), InjectionMap(4, (("a", 0),)))
    assert report.details["normalization"] == "absolute"
    assert report.details["bhom"] == 0
    assert report.epsilon == 0


def test_dth_monte_carlo_is_reproducible():
    f = inner_product(3)
    path = bipartite_from_edges([("a", "r1"), ("b", "r1"), ("b", "r2")])
    psi = InjectionMap(6, (("a", 0), ("b", 0b11)))
    first = dth_deviation(f, path, psi, mode="montecarlo", samples=5000, seed=11)
    second = dth_deviation(f, path, psi, mode="montecarlo", samples=5000, seed=11)
    assert first.method == "montecarlo"
    assert first.epsilon == second.epsilon
    assert first.samples == 5000 and first.seed == 11
    assert first.ci[0] <= first.epsilon <= first.ci[1]


@pytest.mark.slow
def test_dth_sampled_path_on_bent_twelve_bits():
    """Test that a 3-edge path lands within four standard errors of p^r2 q^r1"""
    f = inner_product(6)
    path = bipartite_from_edges([("a", "r1"), ("b", "r1"), ("b", "r2")])
    psi = InjectionMap(12, (("a", 0b000000000101), ("b", 0b000001000001)))
    assert psi.diameter <= 3
    report = dth_deviation(f, path, psi, mode="montecarlo", d=3, samples=100_000, seed=0)
    assert within_standard_errors(report, 4)


def test_within_standard_errors_on_exact_reports():
    exact = PropertyReport("DTH", 1, Fraction(0), {}, True)
    assert within_standard_errors(exact, 4)
    assert not within_standard_errors(PropertyReport("DTH", 1, Fraction(1, 8), {}, True), 4)


def test_deviation_interval():
    assert deviation_interval(0.1, 0.3, 0.2) == (0.0, pytest.approx(0.1))
    low, high = deviation_interval(0.3, 0.5, 0.2, scale=2.0)
    assert low == pytest.approx(0.2)
    assert high == pytest.approx(0.6)


# ======================================================================
# RAIN
# ======================================================================

def _or_function():
    """(-1)^(1 - z1 z2): +1 only on z = (1, 1)."""
    return BooleanFunction([-1, -1, -1, 1])


def test_or_cherry_counts_by_enumeration():
    h = _or_function()
    rainbow = sum(
        1
        for x1 in range(4)
        for x2 in range(4)
        if x1 != x2 and rhg_edge(h, 0, 1, x1) and rhg_edge(h, 0, 2, x2)
    )
    assert rainbow == 3
    repeating = sum(1 for x1 in range(4) for x2 in range(4) if rhg_edge(h, 0, 1, x1) and rhg_edge(h, 0, 2, x2))
    assert repeating == 4


def test_or_cherry_densities():
    h = _or_function()
    phi = InjectionMap(2, (("0", 0), ("1", 1), ("2", 2)))
    injective = rain_deviation(h, star_graph(2), phi, 2, mode="exact")
    assert injective.details["embedding_density"] == Fraction(3, 12)
    assert injective.epsilon == 0
    repeating = rain_deviation(h, star_graph(2), phi, 2, injective_colors=False)
    assert repeating.details["embedding_density"] == Fraction(4, 16)
    assert repeating.details["colors"] == "repeating"


def test_rain_injection_must_stay_in_ball():
    h = _or_function()
    phi = InjectionMap(2, (("0", 0), ("1", 3)))
    edge = star_graph(1)
    with pytest.raises(PreconditionError):
        rain_deviation(h, edge, phi, 1)


@pytest.mark.parametrize("seed", range(20))
def test_single_edge_rainbow_density_is_one_minus_influence(seed):
    f = BooleanFunction.random(8, seed=seed, stream=77)
    for u in hamming_ball(8, 3, include_zero=False):
        report = k2_rain_deviation(f, int(u), 3)
        assert report.details["embedding_density"] == 1 - influence(f, int(u))
        assert report.epsilon == abs(influence(f, int(u)) - Fraction(1, 2))


def test_worst_single_edge_rainbow_equals_inf_error():
    f = BooleanFunction.random(6, seed=5)
    for d in (1, 2, 3):
        assert worst_k2_rain(f, d).epsilon == inf_error(f, d).epsilon


def test_k2_witness_reevaluates():
    f = BooleanFunction.random(6, seed=8)
    report = k2_rain_deviation(f, 0b110, 2)
    assert report.details["pattern"] == "K2@6"
    assert evaluate_witness(f, report) == report.epsilon
