import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_rll.codec import (
    CodebookProfile,
    CodecError,
    CodecState,
    ConstraintViolation,
    IndexOutOfRange,
    RingViolation,
    check_run_lengths,
    codebook_size,
    decode_state,
    decode_to_index,
    encode_from_index,
    prefix_weight_W,
    printed_center_update,
    printed_prefix_weight,
    stepwise_center_update,
)
from spectral_rll.constraints import RingSet, RunLengthConstraints
from spectral_rll.oracle import enumerate_all, filter_by_rings, spectrum

from conftest import TABLE_C, bits, random_constraints, random_rings

TABLE1 = ["01000010", "01000100", "01001000", "01001001", "10000100",
          "10001000", "10001001", "10010001", "10010010"]
TABLE2 = ["01001001", "10001001", "10010001"]


def test_weight_first_symbol_table2(table2_profile):
    assert prefix_weight_W(CodecState(8), table2_profile) == 1


def test_weight_first_symbol_table1(table1_profile):
    assert prefix_weight_W(CodecState(8), table1_profile) == 4


def test_weight_zero_when_run_too_long(table1_profile):
    state = CodecState(8)
    state.advance(0)
    # a second leading zero would exceed l = 1
    assert prefix_weight_W(state, table1_profile) == 0
    assert printed_prefix_weight(state, table1_profile) == 0


def test_codebook_sizes(table1_profile, table2_profile):
    assert codebook_size(table1_profile) == 9
    assert codebook_size(table2_profile) == 3


@pytest.mark.parametrize("i,word", list(enumerate(TABLE1)))
def test_table1_codec(table1_profile, i, word):
    assert decode_to_index(word, table1_profile, validate=True) == i
    assert encode_from_index(i, table1_profile) == bits(word)


@pytest.mark.parametrize("i,word", list(enumerate(TABLE2)))
def test_table2_codec(table2_profile, i, word):
    assert decode_to_index(word, table2_profile, validate=True) == i
    assert encode_from_index(i, table2_profile) == bits(word)


def test_index_out_of_range(table2_profile):
    with pytest.raises(IndexOutOfRange):
        encode_from_index(3, table2_profile)
    with pytest.raises(IndexOutOfRange):
        encode_from_index(-1, table2_profile)


def test_run_length_violation_position(table1_profile):
    with pytest.raises(ConstraintViolation) as info:
        decode_to_index("11111111", table1_profile, validate=True)
    assert info.value.position == 2
    with pytest.raises(ConstraintViolation) as info:
        decode_to_index("00100100", table1_profile, validate=True)
    assert info.value.position == 2
    with pytest.raises(ConstraintViolation) as info:
        decode_to_index("10010000", table1_profile, validate=True)
    assert info.value.position == 8


def test_ring_violation(table2_profile):
    with pytest.raises(RingViolation) as info:
        decode_to_index("10001000", table2_profile, validate=True)
    assert info.value.component == 1


def test_length_mismatch(table1_profile):
    with pytest.raises(CodecError):
        decode_to_index("1001", table1_profile)


def test_check_run_lengths_all_zero():
    check_run_lengths((0, 0), RunLengthConstraints(0, 0, 2, 2))
    with pytest.raises(ConstraintViolation):
        check_run_lengths((0, 0, 0), RunLengthConstraints(0, 0, 3, 2))


@pytest.mark.parametrize("seed", range(5))
def test_state_sum_is_prefix_dft(seed):
    rng = random.Random(seed)
    for _ in range(10):
        n = rng.randint(3, 16)
        word = [rng.randint(0, 1) for _ in range(n)]
        state = CodecState(n)
        for j, bit in enumerate(word):
            state.advance(bit)
            full = spectrum(word[: j + 1], n)
            for m in range(n):
                assert abs(state.c.evaluate(m) - full[m]) < 1e-9


@pytest.mark.parametrize("seed", range(8))
def test_round_trip_and_ranks(seed):
    rng = random.Random(1000 + seed)
    for _ in range(10):
        n = rng.randint(1, 12)
        c = random_constraints(rng, n)
        profile = CodebookProfile(n, c, random_rings(rng, n, c))
        cb = filter_by_rings(enumerate_all(n, c), profile.rings)
        assert codebook_size(profile) == len(cb)
        for i, w in enumerate(cb):
            assert decode_to_index(w, profile, validate=True) == i
            assert encode_from_index(i, profile) == w


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 14), st.data())
def test_encode_lands_in_codebook(n, data):
    c = RunLengthConstraints(1, 3, 2, 3)
    profile = CodebookProfile(n, c)
    size = codebook_size(profile)
    if size == 0:
        return
    i = data.draw(st.integers(0, size - 1))
    word = encode_from_index(i, profile)
    check_run_lengths(word, c)
    assert decode_state(word, profile).N == i


def test_printed_weight_agrees_when_r_le_k():
    rng = random.Random(77)
    checked = 0
    for _ in range(80):
        n = rng.randint(3, 11)
        c = random_constraints(rng, n)
        if c.r > c.k:
            continue
        profile = CodebookProfile(n, c, random_rings(rng, n, c))
        for w in filter_by_rings(enumerate_all(n, c), profile.rings):
            state = CodecState(n)
            for bit in w:
                if bit:
                    assert printed_prefix_weight(state, profile) == prefix_weight_W(state, profile)
                    checked += 1
                state.advance(bit)
    assert checked > 100


def test_printed_weight_differs_for_long_trailing_runs():
    # r > k: the closed expression caps the trailing run at k
    profile = CodebookProfile(6, RunLengthConstraints(0, 1, 0, 5))
    state = CodecState(6)
    assert prefix_weight_W(state, profile) == 0
    state.advance(1)
    assert prefix_weight_W(state, profile) > printed_prefix_weight(state, profile)


@pytest.mark.parametrize("word", TABLE1)
def test_center_update_forms_agree(word):
    n = 8
    sigma = complex(-2.93, 1.87)
    state = CodecState(n)
    x = bits(word)
    for j, bit in enumerate(x, start=1):
        for m in range(n):
            a = printed_center_update(sigma, state.c.evaluate(m), state.w, j, m, n)
            b = stepwise_center_update(sigma, x[: j - 1] + (0,), m, n)
            assert abs(a - b) < 1e-9
            assert abs(state.zero_phase().center(sigma, m) - b) < 1e-9
        state.advance(bit)


def test_unconstrained_profile_default():
    profile = CodebookProfile(4, RunLengthConstraints(0, 4, 4, 4))
    assert profile.rings == RingSet.unconstrained(4)
    assert codebook_size(profile) == 16
    assert [encode_from_index(i, profile) for i in range(16)] == list(enumerate_all(4, profile.constraints).words)
