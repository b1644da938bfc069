import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectral_rll.constraints import (
    UNCONSTRAINED,
    Ring,
    RingSet,
    RunLengthConstraints,
    ring_contains,
    ringset_contains,
)
from spectral_rll.oracle import enumerate_all, spectrum

from conftest import TABLE2_RING, TABLE_C, bits

finite = st.floats(-50, 50, allow_nan=False)


def test_table2_member():
    assert ring_contains(TABLE2_RING, complex(-1.41, 3.41))


def test_table1_row0_excluded():
    assert not ring_contains(TABLE2_RING, complex(3.41, 3.41))


def test_zero_distance_zero_inner():
    assert ring_contains(Ring(1 + 1j, 0.0, 0.0), 1 + 1j)


def test_boundary_tolerance():
    ring = Ring(0j, 1.0, 2.0)
    assert ring_contains(ring, 2.0 + 5e-10)
    assert not ring_contains(ring, 2.0 + 1e-8)
    assert ring_contains(ring, 1.0 - 5e-10)
    assert not ring_contains(ring, 1.0 - 1e-8)


@given(finite, finite, finite, finite, st.floats(0, 5), st.floats(0, 5), finite, finite)
def test_translation_invariance(cr, ci, vr, vi, a, b, tr, ti):
    inner, outer = sorted((a, b))
    shift = complex(tr, ti)
    plain = ring_contains(Ring(complex(cr, ci), inner, outer), complex(vr, vi))
    moved = ring_contains(Ring(complex(cr, ci) + shift, inner, outer), complex(vr, vi) + shift)
    # translation can only move a value across a boundary by rounding
    if plain != moved:
        dist = abs(complex(vr, vi) - complex(cr, ci))
        assert min(abs(dist - inner), abs(dist - outer)) < 1e-9 + 1e-12 * abs(shift)


def test_invalid_radii():
    with pytest.raises(ValueError):
        Ring(0j, 2.0, 1.0)
    with pytest.raises(ValueError):
        Ring(0j, -1.0, 1.0)


def test_invalid_run_lengths():
    with pytest.raises(ValueError):
        RunLengthConstraints(3, 2, 0, 0)
    with pytest.raises(ValueError):
        RunLengthConstraints(0, 1, -1, 0)


def test_all_unconstrained_accepts_anything():
    rs = RingSet.unconstrained(4)
    assert ringset_contains(rs, [100j, -7, 0, 3 + 3j])
    assert UNCONSTRAINED.contains(1e6)


def test_table2_ringset_member():
    rs = RingSet.from_mapping(8, {1: TABLE2_RING})
    assert ringset_contains(rs, list(spectrum(bits("10001001"), 8)))


def test_table2_ringset_nonmember():
    # |(-4.83, 0) - (-2.93, 1.87)| = 2.666 > 2.25
    rs = RingSet.from_mapping(8, {1: TABLE2_RING})
    assert not ringset_contains(rs, list(spectrum(bits("10010010"), 8)))


def test_length_mismatch():
    with pytest.raises(ValueError):
        ringset_contains(RingSet.unconstrained(3), [0, 0])


def test_from_mapping_rejects_bad_index():
    with pytest.raises(ValueError):
        RingSet.from_mapping(4, {4: Ring(0j, 0, 1)})


def test_table2_subset_of_table1():
    rs = RingSet.from_mapping(8, {1: TABLE2_RING})
    kept = ["".join(map(str, w)) for w in enumerate_all(8, TABLE_C) if ringset_contains(rs, list(spectrum(w, 8)))]
    assert kept == ["01001001", "10001001", "10010001"]


def test_value_types_are_hashable():
    rs = RingSet.from_mapping(8, {1: TABLE2_RING})
    assert hash(rs) == hash(RingSet.from_mapping(8, {1: Ring(complex(-2.93, 1.87), 1.5, 2.25)}))
