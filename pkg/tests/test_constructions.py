"""
Tests for bent functions, linear codes and the bent-composed-with-code tower
"""

from fractions import Fraction

import numpy as np
import pytest

from constructions import (
    LinearCode,
    autocorrelation_pushforward,
    builtin_tower_battery,
    compose,
    example_extended_hamming,
    extended_hamming,
    generator_basis,
    hamming_parity_check,
    identity_code,
    inner_product,
    is_bent,
    kernel_indicator_check,
    min_kernel_weight,
    nullspace_basis,
    rref_bitrows,
    verify_tower,
    weight_distribution,
)
from core import BooleanFunction, PreconditionError, autocorrelation, influence, walsh_transform, xor_function
from core.bits import popcount
from properties import inf_error


# ======================================================================
# Bent functions
# ======================================================================

@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_inner_product_has_flat_spectrum_and_autocorrelation(m):
    f = inner_product(m)
    n = 2 * m
    assert np.all(np.abs(walsh_transform(f).W) == 1 << m)
    A = autocorrelation(f).A
    assert A[0] == 1 << n
    assert not A[1:].any()
    assert is_bent(f).ok


def test_inner_product_mean_is_positive_power_of_two():
    assert walsh_transform(inner_product(3)).mean() == Fraction(1, 8)


def test_inner_product_rejects_bad_half_dimension():
    with pytest.raises(PreconditionError):
        inner_product(0)
    with pytest.raises(PreconditionError):
        inner_product(16)


def test_xor_is_not_bent():
    cert = is_bent(xor_function(4))
    assert not cert.ok
    assert not cert.autocorrelation_flat
    assert cert.worst_gamma == 0b1111
    assert cert.worst_deviation == Fraction(15, 16)


def test_odd_dimension_is_never_bent():
    cert = is_bent(BooleanFunction.random(5, seed=2))
    assert not cert.ok
    assert not cert.autocorrelation_flat


# ======================================================================
# Linear codes
# ======================================================================

def test_hamming_parity_check_columns_are_binary_expansions():
    code = hamming_parity_check(2)
    assert code.n == 3 and code.k == 1
    assert code.rows == (0b101, 0b110)
    assert code.to_strings() == ["101", "011"]


def test_hamming_weight_distribution():
    assert weight_distribution(hamming_parity_check(3)) == {0: 1, 3: 7, 4: 7, 7: 1}


def test_extended_hamming_weight_distribution():
    code = extended_hamming(3)
    assert (code.n, code.k) == (8, 4)
    assert weight_distribution(code) == {0: 1, 4: 14, 8: 1}


def test_example_code_is_an_extended_hamming_code():
    code = example_extended_hamming()
    assert (code.n, code.k) == (8, 4)
    assert weight_distribution(code) == {0: 1, 4: 14, 8: 1}
    assert min_kernel_weight(code)[0] == 4


def test_min_kernel_weight_returns_smallest_witness():
    assert min_kernel_weight(hamming_parity_check(2)) == (3, 0b111)
    weight, witness = min_kernel_weight(hamming_parity_check(3))
    assert weight == 3
    assert popcount(witness) == 3
    assert hamming_parity_check(3).is_codeword(witness)


def test_min_kernel_weight_needs_a_nonzero_codeword():
    with pytest.raises(PreconditionError):
        min_kernel_weight(identity_code(4))


def test_generator_basis_spans_the_kernel():
    code = extended_hamming(3)
    basis = generator_basis(code)
    assert len(basis) == code.k
    assert all(code.is_codeword(v) for v in basis)
    assert len(rref_bitrows(basis, code.n)[0]) == code.k


def test_nullspace_of_empty_matrix_is_everything():
    assert sorted(nullspace_basis([], 3)) == [1, 2, 4]


def test_syndromes_match_scalar_syndrome():
    code = example_extended_hamming()
    table = code.syndromes()
    assert all(int(table[x]) == code.syndrome(x) for x in range(1 << code.n))


def test_code_validation():
    with pytest.raises(PreconditionError):
        LinearCode(3, 1, (0b011, 0b011))
    with pytest.raises(PreconditionError):
        LinearCode(3, 2, (0b1000,))
    with pytest.raises(PreconditionError):
        LinearCode(3, 1, (0b011,))
    with pytest.raises(PreconditionError):
        LinearCode.from_strings(["012"])


def test_full_space_and_identity_code():
    assert LinearCode.full_space(4).redundancy == 0
    code = identity_code(3)
    assert code.k == 0
    assert code.syndromes().tolist() == list(range(8))


def test_from_strings_round_trip():
    code = LinearCode.from_strings(["1100", "0111"])
    assert code.rows == (0b0011, 0b1110)
    assert code.as_dict() == {"n": 4, "k": 2, "rows": ["1100", "0111"]}


# ======================================================================
# Towers
# ======================================================================

def test_tower_on_extended_hamming_separates_ranks_three_and_four():
    """Test IP on 4 bits composed with the [8,4,4] code"""
    code = extended_hamming(3)
    f = compose(inner_product(2), code)
    assert f.n == 8
    assert inf_error(f, 3).epsilon == 0
    weight, witness = min_kernel_weight(code)
    assert weight == 4
    assert influence(f, witness) == 0
    assert inf_error(f, 4).epsilon == Fraction(1, 2)
    assert walsh_transform(f).mean() == Fraction(1, 4)


def test_tower_on_hamming_two():
    f = compose(inner_product(1), hamming_parity_check(2))
    assert f.n == 3
    assert inf_error(f, 2).epsilon == 0
    assert inf_error(f, 3).epsilon == Fraction(1, 2)


def test_verify_tower_on_hamming_two():
    verdict = verify_tower(inner_product(1), hamming_parity_check(2))
    assert verdict.ok
    assert verdict.d_star == 2
    assert verdict.separation_witness == 0b111
    assert verdict.mean == Fraction(1, 2)
    assert verdict.mean_ok and not verdict.mean_strict


def test_verify_tower_on_extended_hamming():
    verdict = verify_tower(inner_product(2), extended_hamming(3))
    assert verdict.ok
    assert verdict.d_star == 3
    assert verdict.mean == Fraction(1, 4)
    assert verdict.mean_strict
    assert verdict.as_dict()["bent"]["ok"]


def test_identity_code_returns_g_itself():
    g = inner_product(1)
    assert compose(g, identity_code(2)) == g
    verdict = verify_tower(g, identity_code(2))
    assert verdict.ok
    assert verdict.d_star == 2
    assert verdict.separation_witness is None


def test_builtin_battery_passes():
    for name, g, code in builtin_tower_battery():
        assert verify_tower(g, code).ok, name


def test_odd_redundancy_cannot_pass():
    verdict = verify_tower(BooleanFunction.random(3, seed=9), hamming_parity_check(3))
    assert not verdict.ok
    assert not verdict.bent.ok
    assert not verdict.mean_ok


def test_compose_checks_dimensions():
    with pytest.raises(PreconditionError):
        compose(inner_product(2), hamming_parity_check(2))


def test_autocorrelation_pushforward_matches_composed_table():
    g = BooleanFunction.random(4, seed=12)
    code = extended_hamming(3)
    assert np.array_equal(autocorrelation_pushforward(g, code), autocorrelation(compose(g, code)).A)


def test_self_convolution_of_tower_is_kernel_indicator():
    code = example_extended_hamming()
    f = compose(inner_product(2), code)
    assert kernel_indicator_check(f, code) == (True, None)
    ok, witness = kernel_indicator_check(compose(xor_function(4), code), code)
    assert not ok
    assert witness is not None
