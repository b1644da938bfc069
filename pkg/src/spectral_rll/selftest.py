"""Embedded consistency checks run by ``spectral-rll selftest``."""

from __future__ import annotations

import cmath
import math
import random
from contextlib import contextmanager
from typing import Callable, Iterator

from . import spectral
from .codec import (
    CodebookProfile,
    CodecState,
    codebook_size,
    decode_to_index,
    encode_from_index,
    format_word,
    printed_center_update,
    stepwise_center_update,
)
from .constraints import Ring, RingSet, RunLengthConstraints
from .counting import count_charge, count_ring_vector_leading
from .oracle import enumerate_all, filter_by_rings, spectrum

TABLE1_WORDS = (
    "01000010", "01000100", "01001000", "01001001", "10000100",
    "10001000", "10001001", "10010001", "10010010",
)
TABLE1_CHARGE = (-2, 0, 2, 0, -2, 0, -2, 0, -2)
TABLE1_Z1 = (
    (3.41, 3.41), (2.00, 4.83), (0.00, 4.83), (-1.41, 3.41), (0.00, 4.83),
    (-2.00, 4.83), (-3.41, 3.41), (-4.83, 2.00), (-4.83, 0.00),
)
TABLE2_WORDS = ("01001001", "10001001", "10010001")

TABLE_CONSTRAINTS = RunLengthConstraints(2, 4, 1, 3)
TABLE1_PROFILE = CodebookProfile(8, TABLE_CONSTRAINTS)
TABLE2_PROFILE = CodebookProfile(
    8, TABLE_CONSTRAINTS, RingSet.from_mapping(8, {1: Ring(complex(-2.93, 1.87), 1.5, 2.25)})
)

TOL = 1e-9


class CheckFailed(AssertionError):
    pass


def _require(cond: bool, detail: str) -> None:
    if not cond:
        raise CheckFailed(detail)


def check_table1() -> str:
    cb = enumerate_all(8, TABLE_CONSTRAINTS)
    words = tuple(format_word(w) for w in cb)
    _require(words == TABLE1_WORDS, f"enumeration {words}")
    _require(codebook_size(TABLE1_PROFILE) == 9, "codebook size != 9")
    for i, w in enumerate(TABLE1_WORDS):
        z = spectral.nrzi_encode(w)
        _require(spectral.dft_component(z, 0, 8) == TABLE1_CHARGE[i], f"z*_0 of row {i}")
        z1 = spectral.dft_component(z, 1, 8)
        _require(abs(z1.real - TABLE1_Z1[i][0]) <= 0.01 and abs(z1.imag - TABLE1_Z1[i][1]) <= 0.01, f"z*_1 of row {i}")
        _require(format_word(encode_from_index(i, TABLE1_PROFILE)) == w, f"encode({i})")
        _require(decode_to_index(w, TABLE1_PROFILE, validate=True) == i, f"decode({w})")
    return "9 words, z*_0 and z*_1 columns match"


def check_table2() -> str:
    _require(codebook_size(TABLE2_PROFILE) == 3, "codebook size != 3")
    for i, w in enumerate(TABLE2_WORDS):
        _require(format_word(encode_from_index(i, TABLE2_PROFILE)) == w, f"encode({i})")
        _require(decode_to_index(w, TABLE2_PROFILE, validate=True) == i, f"decode({w})")
    return "3 words, encode/decode inverse"


def _direct_geometric(length: int, m: int, n: int) -> complex:
    return sum(cmath.exp(-2j * math.pi * m * t / n) for t in range(length))


def check_dirichlet() -> str:
    worst = 0.0
    for n in range(1, 17):
        for length in range(n + 1):
            for m in range(n):
                err = abs(spectral.trailing_run_sum(n, length, m) + _direct_geometric(length, m, n))
                worst = max(worst, err)
    _require(worst <= TOL, f"max error {worst:.3e}")
    return f"max error {worst:.1e}"


def check_shift_recurrence() -> str:
    rng = random.Random(7)
    worst = 0.0
    for _ in range(500):
        n = rng.randint(1, 32)
        m = rng.randrange(n)
        j = rng.randint(1, n)
        sigma = complex(rng.uniform(-n, n), rng.uniform(-n, n))
        shifted = spectral.shift_center_after_ones_prefix(sigma, j, m, n)
        back = -_direct_geometric(j, m, n) - cmath.exp(-2j * math.pi * m * j / n) * shifted
        worst = max(worst, abs(back - sigma))
        shifted = spectral.shift_center_after_zeros_prefix(sigma, j, m, n)
        back = _direct_geometric(j, m, n) + cmath.exp(-2j * math.pi * m * j / n) * shifted
        worst = max(worst, abs(back - sigma))
    _require(worst <= TOL, f"max error {worst:.3e}")
    return f"max error {worst:.1e}"


def check_center_updates() -> str:
    profile = TABLE2_PROFILE
    worst = 0.0
    for w in TABLE2_WORDS:
        state = CodecState(profile.n)
        bits = spectral.as_word(w)
        for j, bit in enumerate(bits, start=1):
            for m, ring in profile.rings.constrained():
                a = printed_center_update(ring.center, state.c.evaluate(m), state.w, j, m, profile.n)
                b = stepwise_center_update(ring.center, bits[: j - 1] + (0,), m, profile.n)
                worst = max(worst, abs(a - b))
            state.advance(bit)
    _require(worst <= TOL, f"max disagreement {worst:.3e}")
    return f"max disagreement {worst:.1e}"


def random_profile(rng: random.Random, n: int, max_rings: int = 3) -> CodebookProfile:
    d = rng.randint(0, min(3, n))
    k = rng.randint(d, n)
    c = RunLengthConstraints(d, k, rng.randint(0, n), rng.randint(0, n))
    words = enumerate_all(n, c).words
    rings = {}
    for m in rng.sample(range(n), min(n, rng.randint(0, max_rings))):
        anchor = spectrum(rng.choice(words), n)[m] if words else 0j
        center = anchor + complex(rng.gauss(0, 1), rng.gauss(0, 1))
        inner = rng.uniform(0, 2)
        rings[m] = Ring(center, inner, inner + rng.uniform(0, 3))
    return CodebookProfile(n, c, RingSet.from_mapping(n, rings))


def check_oracle_equivalence() -> str:
    rng = random.Random(11)
    for _ in range(30):
        profile = random_profile(rng, rng.randint(4, 10))
        cb = filter_by_rings(enumerate_all(profile.n, profile.constraints), profile.rings)
        got = count_ring_vector_leading(profile.n, profile.n, profile.rings, profile.constraints)
        _require(got == len(cb), f"{profile}: count {got} != brute force {len(cb)}")
        for i, w in enumerate(cb):
            _require(encode_from_index(i, profile) == w, f"{profile}: encode({i})")
            _require(decode_to_index(w, profile) == i, f"{profile}: decode({format_word(w)})")
    return "30 random profiles, counts and ranks match"


def check_charge() -> str:
    for d, k, r in ((0, 1, 2), (1, 3, 2), (2, 4, 3)):
        c = RunLengthConstraints(d, k, 0, r)
        for n in range(1, 11):
            for sigma in range(-n, n + 1):
                rs = RingSet.from_mapping(n, {0: Ring(complex(sigma), 0.0, 0.0)})
                a = count_charge(n, sigma, c)
                b = count_ring_vector_leading(n, n, rs, c)
                _require(a == b, f"n={n}, sigma={sigma}, {c}: {a} != {b}")
    return "charge recursion matches m=0 ring count"


CHECKS: list[tuple[str, Callable[[], str]]] = [
    ("table1", check_table1),
    ("table2", check_table2),
    ("dirichlet-identity", check_dirichlet),
    ("shift-recurrence", check_shift_recurrence),
    ("center-update", check_center_updates),
    ("charge-specialization", check_charge),
    ("oracle-equivalence", check_oracle_equivalence),
]


@contextmanager
def mutated(name: str | None) -> Iterator[None]:
    """Negative control: temporarily corrupt a primitive so checks must fail."""
    if name is None:
        yield
        return
    if name != "dirichlet":
        raise ValueError(f"unknown mutation {name!r}")
    original = spectral.dirichlet_sum

    def broken(length: int, m: int, n: int) -> complex:
        return original(length, m, n).conjugate()

    spectral.dirichlet_sum = broken
    try:
        yield
    finally:
        spectral.dirichlet_sum = original


def run(out, mutation: str | None = None) -> bool:
    """Run every check, print one line each; False on the first failure."""
    with mutated(mutation):
        for name, check in CHECKS:
            try:
                detail = check()
            except CheckFailed as exc:
                out.write(f"FAIL\t{name}\t{exc}\n")
                return False
            out.write(f"PASS\t{name}\t{detail}\n")
    return True
