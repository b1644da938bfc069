"""NRZI mapping, DFT components and exponential sums over n-th roots of unity.

All spectral quantities are taken against an outer frame length ``n``: a word
of length ``ñ <= n`` is evaluated as ``sum_j z[j] * w**(-m*j)`` with
``w = exp(2*pi*i/n)``, even when ``ñ < n``.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Sequence

import numpy as np

BinaryWord = tuple[int, ...]
BipolarWord = tuple[int, ...]


def root_power(exponent: float, n: int) -> complex:
    """``w**exponent`` for ``w = exp(2*pi*i/n)``; exponent may be half-integer."""
    return cmath.exp(1j * math.pi * (2.0 * exponent / n))


def as_word(bits: Sequence[int] | str) -> BinaryWord:
    if isinstance(bits, str):
        bits = [int(ch) for ch in bits.strip()]
    word = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in word):
        raise ValueError(f"binary word must contain only 0/1 symbols: {bits!r}")
    return word


def nrzi_encode(x: Sequence[int] | str) -> BipolarWord:
    """Map a binary word to bipolar levels; a 1 toggles polarity, z_0 = +1."""
    level = 1
    out = []
    for bit in as_word(x):
        if bit:
            level = -level
        out.append(level)
    return tuple(out)


def dft_component(z: Sequence[int], m: int, n: int) -> complex:
    if not 0 <= m < n:
        raise ValueError(f"spectral index m={m} outside [0, {n - 1}]")
    if len(z) > n:
        raise ValueError(f"word length {len(z)} exceeds frame length {n}")
    return complex(sum(level * root_power(-m * j, n) for j, level in enumerate(z)))


def dft(z: Sequence[int], n: int | None = None) -> list[complex]:
    n = len(z) if n is None else n
    return [dft_component(z, m, n) for m in range(n)]


def dirichlet_sum(length: int, m: int, n: int) -> complex:
    """Closed form of ``sum_{t<length} w**(-m*t)``.

    Linear phase times the Dirichlet kernel ratio; the ``m = 0 (mod n)``
    singularity is replaced by its limit, ``length``.
    """
    if length == 0:
        return 0j
    if m % n == 0:
        return complex(length)
    ratio = math.sin(m * length * math.pi / n) / math.sin(m * math.pi / n)
    return root_power(-m * (length - 1) / 2.0, n) * ratio


def trailing_run_sum(n: int, n_tilde: int, m: int) -> complex:
    """Exponential sum of a trailing run ``1 0 ... 0`` of length ``n_tilde``.

    NRZI maps every symbol of such a run to -1, hence the leading minus.
    """
    return -dirichlet_sum(n_tilde, m, n)


def shift_center_after_ones_prefix(sigma: complex, j: int, m: int, n: int) -> complex:
    """Ring center for the suffix that follows a prefix ``1 0^(j-1)``."""
    if j < 1:
        raise ValueError("a ones-prefix has length >= 1")
    return -root_power(m * j, n) * (sigma + dirichlet_sum(j, m, n))


def shift_center_after_zeros_prefix(sigma: complex, j: int, m: int, n: int) -> complex:
    """Ring center for the suffix that follows a prefix of ``j`` zeros."""
    if j < 0:
        raise ValueError("a zeros-prefix has length >= 0")
    if j == 0:
        return complex(sigma)
    return root_power(m * j, n) * (sigma - dirichlet_sum(j, m, n))


def concat_spectrum(
    blocks: Sequence[Sequence[int]],
    n: int,
    initial_polarity: int = 1,
    inherit_polarity: bool = False,
) -> list[complex]:
    """n-point DFT of concatenated bipolar blocks, assembled block by block.

    Each block's own exponential sum is rotated by ``w**(-m*offset)``.  With
    ``inherit_polarity`` every block after the first is multiplied by the last
    transmitted level of its predecessor (a running-polarity channel);
    otherwise every block is scaled by ``initial_polarity`` alone.
    """
    if initial_polarity not in (1, -1):
        raise ValueError("initial_polarity must be +1 or -1")
    total = sum(len(b) for b in blocks)
    if total != n:
        raise ValueError(f"block lengths sum to {total}, frame length is {n}")
    spectrum = [0j] * n
    offset = 0
    scale = initial_polarity
    for block in blocks:
        for m in range(n):
            spectrum[m] += scale * root_power(-m * offset, n) * dft_component(block, m, n)
        offset += len(block)
        if inherit_polarity and block:
            scale = scale * block[-1]
    return spectrum


# --------------------------------------------------------------------------
# exact sums over roots of unity


@lru_cache(maxsize=None)
def cyclotomic_poly(q: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the q-th cyclotomic polynomial."""
    # X^q - 1 divided by every Phi_d with d | q, d < q
    num = [-1] + [0] * (q - 1) + [1]
    for d in range(1, q):
        if q % d == 0:
            num = _poly_divmod(num, list(cyclotomic_poly(d)))[0]
    return tuple(num)


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den is monic
    num = list(num)
    deg = len(den) - 1
    if len(num) <= deg:
        return [0], num + [0] * (deg - len(num))
    quot = [0] * (len(num) - deg)
    for i in range(len(num) - 1, deg - 1, -1):
        coef = num[i]
        if coef:
            quot[i - deg] = coef
            for t, dc in enumerate(den):
                num[i - deg + t] -= coef * dc
    return quot, num[:deg]


@lru_cache(maxsize=None)
def residue_basis(m: int, n: int) -> np.ndarray:
    """Row t holds the canonical residue of ``w**(-m*t)`` for t = 0..n-1.

    ``w**(-m)`` is a primitive q-th root of unity, q = n / gcd(m, n), whose
    minimal polynomial is the q-th cyclotomic polynomial; residues modulo it
    identify equal complex values exactly.
    """
    q = n // math.gcd(m, n)
    phi = list(cyclotomic_poly(q))
    deg = len(phi) - 1
    rows = np.zeros((n, deg), dtype=np.int64)
    for t in range(n):
        mono = [0] * (t % q) + [1]
        rows[t] = _poly_divmod(mono, phi)[1]
    rows.setflags(write=False)
    return rows


@lru_cache(maxsize=None)
def residue_powers(m: int, n: int) -> np.ndarray:
    deg = residue_basis(m, n).shape[1]
    return np.array([root_power(-m * i, n) for i in range(deg)], dtype=complex)


class ExactSum:
    """Integer combination ``sum_t coeffs[t] * w**(-t)`` of n-th roots of unity.

    Component m is read off by substituting ``w**(-m)`` for ``w**(-1)``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        self.coeffs = tuple(int(c) for c in coeffs)

    @classmethod
    def zero(cls, n: int) -> "ExactSum":
        return cls((0,) * n)

    @classmethod
    def from_levels(cls, z: Sequence[int], n: int) -> "ExactSum":
        if len(z) > n:
            raise ValueError("word longer than frame")
        return cls(tuple(z) + (0,) * (n - len(z)))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "ExactSum") -> "ExactSum":
        if other.n != self.n:
            raise ValueError("frame lengths differ")
        return ExactSum(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "ExactSum":
        return ExactSum(-c for c in self.coeffs)

    def __sub__(self, other: "ExactSum") -> "ExactSum":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExactSum) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"ExactSum({list(self.coeffs)})"

    def add_term(self, t: int, value: int) -> "ExactSum":
        coeffs = list(self.coeffs)
        coeffs[t % self.n] += value
        return ExactSum(coeffs)

    def rotate(self, s: int) -> "ExactSum":
        """Multiply by ``w**(-s)``: a cyclic shift of the coefficients."""
        n = self.n
        out = [0] * n
        for t, c in enumerate(self.coeffs):
            out[(t + s) % n] += c
        return ExactSum(out)

    def residue(self, m: int) -> tuple[int, ...]:
        """Canonical key of component m; equal keys <=> equal complex values."""
        return tuple(int(v) for v in np.asarray(self.coeffs, dtype=np.int64) @ residue_basis(m, self.n))

    def evaluate(self, m: int) -> complex:
        n = self.n
        return complex(sum(c * root_power(-m * t, n) for t, c in enumerate(self.coeffs) if c))

    def spectrum(self) -> list[complex]:
        return [self.evaluate(m) for m in range(self.n)]
