"""Enumerative (lexicographic) encoding and decoding of spectrum-shaped dklr words."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .constraints import RingSet, RunLengthConstraints
from .counting import Phase, RingCounter, counter_for
from .spectral import (
    ExactSum,
    as_word,
    root_power,
    shift_center_after_ones_prefix,
    shift_center_after_zeros_prefix,
)


class CodecError(ValueError):
    pass


class ConstraintViolation(CodecError):
    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class RingViolation(CodecError):
    def __init__(self, message: str, component: int, value: complex):
        super().__init__(message)
        self.component = component
        self.value = value


class IndexOutOfRange(CodecError):
    def __init__(self, index: int, size: int):
        super().__init__(f"index {index} out of range, codebook size is {size}")
        self.index = index
        self.size = size


@dataclass(frozen=True)
class CodebookProfile:
    n: int
    constraints: RunLengthConstraints
    rings: RingSet = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("frame length must be >= 1")
        if self.rings is None:
            object.__setattr__(self, "rings", RingSet.unconstrained(self.n))
        elif self.rings.n != self.n:
            raise ValueError(f"ring set has {self.rings.n} slots, frame length is {self.n}")

    @property
    def counter(self) -> RingCounter:
        return counter_for(self.rings, self.constraints)


@dataclass
class CodecState:
    """Running state of the rank/unrank loops before symbol ``j`` is decided.

    ``a`` counts trailing zeros of the prefix with a hypothesized 0 at ``j``;
    ``c`` is the exact exponential sum of ``x_1 .. x_{j-1}``.
    """

    n: int
    j: int = 1
    a: int = 1
    w: int = 0
    c: ExactSum = field(default=None)  # type: ignore[assignment]
    N: int = 0

    def __post_init__(self):
        if self.c is None:
            self.c = ExactSum.zero(self.n)

    def advance(self, bit: int) -> None:
        if bit:
            self.a = 1
            self.w += 1
        else:
            self.a += 1
        self.c = self.c.add_term(self.j - 1, -1 if self.w % 2 else 1)
        self.j += 1

    def zero_phase(self) -> Phase:
        """Phase of the suffix after the prefix ``x_1 .. x_{j-1}, 0``."""
        sign = -1 if self.w % 2 else 1
        return Phase(self.j, sign, self.c.add_term(self.j - 1, sign))


def prefix_weight_W(state: CodecState, profile: CodebookProfile) -> int:
    """Number of codewords that extend ``x_1 .. x_{j-1}`` with a 0 at position j."""
    c = profile.constraints
    rem = profile.n - state.j
    phase = state.zero_phase()
    if state.w == 0:
        # still inside the leading run (a == j)
        lo, hi = 0, c.l - state.a
        zeros_ok = state.a + rem <= min(c.l, c.r)
    else:
        lo, hi = c.d - state.a, c.k - state.a
        zeros_ok = state.a + rem <= c.r
    return profile.counter.suffixes(rem, phase, lo, hi, zeros_ok)


def printed_prefix_weight(state: CodecState, profile: CodebookProfile) -> int:
    """The closed weight expression ``C^(n, ñ-j)(d, k, l_j, r) - b~``.

    Agrees with :func:`prefix_weight_W` at every position where a 1 is
    admissible (so ranks of valid words coincide) as long as ``r <= k``; it
    neither enforces ``d`` on the run closed by the next 1 nor admits
    trailing runs longer than ``k``.
    """
    c = profile.constraints
    rem = profile.n - state.j
    l_j = c.l - state.a if state.w == 0 else c.k - state.a
    if l_j < 0:
        return 0
    counter = profile.counter
    phase = state.zero_phase()
    value = counter.leading(rem, l_j, phase)
    if c.r - state.a < rem <= min(l_j, c.r) and counter.accepts_prefix(phase.after_zeros_prefix(rem).prefix):
        value -= 1
    return value


def printed_center_update(sigma: complex, prefix_sum: complex, nu: int, j: int, m: int, n: int) -> complex:
    """Suffix center after prefix ``x_1 .. x_{j-1}, 0`` in closed form.

    ``prefix_sum`` is the m-th exponential sum of ``x_1 .. x_{j-1}``; the
    trailing ``- w**m`` accounts for the hypothesized 0 at position j.
    """
    return (-1) ** nu * root_power(m * j, n) * (sigma - prefix_sum) - root_power(m, n)


def stepwise_center_update(sigma: complex, prefix_bits: Sequence[int], m: int, n: int) -> complex:
    """Suffix center obtained by applying one-symbol shifts along ``prefix_bits``."""
    for bit in prefix_bits:
        if bit:
            sigma = shift_center_after_ones_prefix(sigma, 1, m, n)
        else:
            sigma = shift_center_after_zeros_prefix(sigma, 1, m, n)
    return sigma


def codebook_size(profile: CodebookProfile) -> int:
    return profile.counter.leading(profile.n)


def check_run_lengths(x: Sequence[int], c: RunLengthConstraints) -> None:
    """Raise ConstraintViolation naming the first offending position (1-based)."""
    ones = [i for i, b in enumerate(x) if b]
    n = len(x)
    if not ones:
        if n > c.l:
            raise ConstraintViolation(f"all-zero word of length {n} exceeds l={c.l}", n)
        if n > c.r:
            raise ConstraintViolation(f"all-zero word of length {n} exceeds r={c.r}", n)
        return
    if ones[0] > c.l:
        raise ConstraintViolation(f"leading run of {ones[0]} zeros exceeds l={c.l}", ones[0])
    for a, b in zip(ones, ones[1:]):
        run = b - a - 1
        if run < c.d:
            raise ConstraintViolation(f"run of {run} zeros before position {b + 1} is shorter than d={c.d}", b + 1)
        if run > c.k:
            raise ConstraintViolation(f"run of {run} zeros before position {b + 1} exceeds k={c.k}", b + 1)
    trailing = n - 1 - ones[-1]
    if trailing > c.r:
        raise ConstraintViolation(f"trailing run of {trailing} zeros exceeds r={c.r}", n)


def check_rings(state: CodecState, profile: CodebookProfile) -> None:
    rejected = profile.counter.first_rejection(state.c)
    if rejected is not None:
        m, value = rejected
        ring = profile.rings[m]
        dist = abs(value - ring.center)
        raise RingViolation(
            f"component m={m} = {value.real:.4f}{value.imag:+.4f}i lies at distance {dist:.4f} "
            f"from center, outside [{ring.inner}, {ring.outer}]",
            m,
            value,
        )


def decode_state(x: Sequence[int] | str, profile: CodebookProfile) -> CodecState:
    """Run the ranking loop and return its final state (``state.N`` is the rank)."""
    x = as_word(x)
    if len(x) != profile.n:
        raise CodecError(f"word length {len(x)} differs from frame length {profile.n}")
    state = CodecState(profile.n)
    for bit in x:
        if bit:
            state.N += prefix_weight_W(state, profile)
        state.advance(bit)
    return state


def decode_to_index(x: Sequence[int] | str, profile: CodebookProfile, validate: bool = False) -> int:
    x = as_word(x)
    if validate:
        if len(x) != profile.n:
            raise CodecError(f"word length {len(x)} differs from frame length {profile.n}")
        check_run_lengths(x, profile.constraints)
    state = decode_state(x, profile)
    if validate:
        check_rings(state, profile)
    return state.N


def encode_from_index(N: int, profile: CodebookProfile) -> tuple[int, ...]:
    N = int(N)
    size = codebook_size(profile)
    if not 0 <= N < size:
        raise IndexOutOfRange(N, size)
    state = CodecState(profile.n)
    bits = []
    for _ in range(profile.n):
        weight = prefix_weight_W(state, profile)
        bit = int(N >= weight)
        if bit:
            N -= weight
        bits.append(bit)
        state.advance(bit)
    return tuple(bits)


def format_word(x: Sequence[int]) -> str:
    return "".join(str(b) for b in x)
