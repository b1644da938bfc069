"""Counting recurrences for charge- and ring-constrained dklr words.

Words counted by the "begins with one" recursion have internal zero runs in
``[d, k]`` and a trailing run of at most ``r`` zeros (the trailing run is not
bounded by ``k``).  The leading-run variant additionally allows up to ``l``
leading zeros; the all-zero word is admitted iff its length is ``<= min(l, r)``.

Ring centers are never carried as floats between recursion levels.  A
subproblem is described by how many symbols were consumed, the NRZI polarity
in force, and the exact exponential sum of the consumed symbols; the center
seen by the suffix, ``sign * w**(m*offset) * (sigma_m - prefix_m)``, is what
the shift-theorem center transforms produce step by step.  Membership tests
evaluate ``|full sum - sigma_m|`` which has the same modulus.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constraints import Ring, RingSet, RunLengthConstraints, ring_contains
from .spectral import ExactSum, residue_basis, residue_powers, root_power


@dataclass(frozen=True)
class Phase:
    """Position of a suffix inside its frame.

    offset: number of symbols consumed before the suffix.
    sign:   NRZI level preceding the suffix's first symbol.
    prefix: exact exponential sum of the consumed symbols.
    """

    offset: int
    sign: int
    prefix: ExactSum

    @classmethod
    def start(cls, n: int) -> "Phase":
        return cls(0, 1, ExactSum.zero(n))

    def center(self, sigma: complex, m: int) -> complex:
        """Ring center the suffix must satisfy, for a full-word center ``sigma``."""
        n = self.prefix.n
        return self.sign * root_power(m * self.offset, n) * (sigma - self.prefix.evaluate(m))

    def after_ones_prefix(self, j: int) -> "Phase":
        """Consume ``1 0^(j-1)``: all j levels equal ``-sign``."""
        prefix = self.prefix
        for t in range(j):
            prefix = prefix.add_term(self.offset + t, -self.sign)
        return Phase(self.offset + j, -self.sign, prefix)

    def after_zeros_prefix(self, j: int) -> "Phase":
        prefix = self.prefix
        for t in range(j):
            prefix = prefix.add_term(self.offset + t, self.sign)
        return Phase(self.offset + j, self.sign, prefix)

    def after_bit(self, bit: int) -> "Phase":
        return self.after_ones_prefix(1) if bit else self.after_zeros_prefix(1)


def count_charge(n: int, sigma: int, c: RunLengthConstraints) -> int:
    """Number of dkr words of length n starting with 1 whose NRZI charge is sigma."""
    return _charge(n, sigma, c.d, c.k, c.r)


@lru_cache(maxsize=None)
def _charge(n: int, sigma: int, d: int, k: int, r: int) -> int:
    if n < 0 or abs(sigma) > n:
        return 0
    if sigma == -n:
        # only 1 0^(n-1) has every level at -1
        return 1 if n <= r + 1 else 0
    if n < d + 1:
        return 0
    return sum(_charge(n - j, -sigma - j, d, k, r) for j in range(d + 1, min(n, k + 1) + 1))


class RingCounter:
    """Memoized counts for one ring set and one set of run-length constraints.

    Memo keys are exact: the consumed prefix sum is reduced, per constrained
    component, to its canonical residue modulo the cyclotomic polynomial of
    ``w**(-m)``.  Two prefixes share a key iff they give identical centers.
    Memo entries are deterministic, so concurrent fills are harmless.
    """

    def __init__(self, rings: RingSet, constraints: RunLengthConstraints):
        self.rings = rings
        self.constraints = constraints
        self.n = n = rings.n
        self._components: list[tuple[int, Ring, slice, np.ndarray]] = []
        bases = []
        width = 0
        for m, ring in rings.constrained():
            basis = residue_basis(m, n)
            self._components.append((m, ring, slice(width, width + basis.shape[1]), residue_powers(m, n)))
            bases.append(basis)
            width += basis.shape[1]
        basis = np.hstack(bases) if bases else np.zeros((n, 0), dtype=np.int64)
        # _cum[u] = residues of sum_{t<u} w**(-m t), u = 0..n
        self._cum = np.vstack([np.zeros((1, width), dtype=np.int64), np.cumsum(basis, axis=0)])
        self._width = width
        self._memo: dict[tuple, int] = {}
        depth = n + 64
        if sys.getrecursionlimit() < 4 * depth:
            sys.setrecursionlimit(4 * depth)

    # -- exact state helpers -------------------------------------------------

    def _run(self, offset: int, length: int) -> np.ndarray:
        return self._cum[offset + length] - self._cum[offset]

    def residues(self, prefix: ExactSum) -> np.ndarray:
        coeffs = np.asarray(prefix.coeffs, dtype=np.int64)
        parts = [coeffs @ residue_basis(m, self.n) for m, _ in self.rings.constrained()]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def accepts(self, res: np.ndarray) -> bool:
        """Every constrained component of the completed word lies in its ring."""
        for _, ring, sl, powers in self._components:
            if not ring_contains(ring, complex(res[sl] @ powers)):
                return False
        return True

    def first_rejection(self, prefix: ExactSum) -> tuple[int, complex] | None:
        """(m, value) of the first constrained component outside its ring."""
        res = self.residues(prefix)
        for m, ring, sl, powers in self._components:
            value = complex(res[sl] @ powers)
            if not ring_contains(ring, value):
                return m, value
        return None

    def accepts_prefix(self, prefix: ExactSum) -> bool:
        return self.accepts(self.residues(prefix))

    # -- recursions ----------------------------------------------------------

    def _begins_with_one(self, length: int, offset: int, sign: int, res: np.ndarray) -> int:
        key = (length, offset, sign, res.tobytes())
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        d, k, r = self.constraints.d, self.constraints.k, self.constraints.r
        if length < d + 1:
            value = int(length <= r + 1 and self.accepts(res - sign * self._run(offset, length)))
        else:
            value = 0
            for j in range(d + 1, min(length, k + 1) + 1):
                value += self._begins_with_one(
                    length - j, offset + j, -sign, res - sign * self._run(offset, j)
                )
            if r + 1 < length <= k + 1:
                # the j = length term counted 1 0^(length-1), whose trailing run exceeds r
                if self.accepts(res - sign * self._run(offset, length)):
                    value -= 1
            elif k + 1 < length <= r + 1:
                # trailing run longer than k but within r: not reachable through j
                if self.accepts(res - sign * self._run(offset, length)):
                    value += 1
        if value < 0:
            raise AssertionError(f"negative count at length={length}, offset={offset}")
        self._memo[key] = value
        return value

    def _leading(self, length: int, offset: int, sign: int, res: np.ndarray, l: int) -> int:
        r = self.constraints.r
        value = 0
        for j in range(0, min(length, l) + 1):
            value += self._begins_with_one(length - j, offset + j, sign, res + sign * self._run(offset, j))
        if r < length <= l and self.accepts(res + sign * self._run(offset, length)):
            # the all-zero word was counted through j = length but breaks r
            value -= 1
        if value < 0:
            raise AssertionError(f"negative leading count at length={length}")
        return value

    def _split(self, phase: Phase | None) -> tuple[int, int, np.ndarray]:
        if phase is None:
            return 0, 1, np.zeros(self._width, dtype=np.int64)
        return phase.offset, phase.sign, self.residues(phase.prefix)

    def begins_with_one(self, length: int, phase: Phase | None = None) -> int:
        """Words of ``length`` starting with 1 (or empty) completing ``phase`` in-ring."""
        offset, sign, res = self._split(phase)
        self._check_length(offset, length)
        return self._begins_with_one(length, offset, sign, res)

    def leading(self, length: int, l: int | None = None, phase: Phase | None = None) -> int:
        """Words of ``length`` with at most ``l`` leading zeros completing ``phase`` in-ring."""
        offset, sign, res = self._split(phase)
        self._check_length(offset, length)
        l = self.constraints.l if l is None else l
        if l < 0:
            return 0
        return self._leading(length, offset, sign, res, l)

    def suffixes(self, length: int, phase: Phase, min_lead: int, max_lead: int, zeros_ok: bool) -> int:
        """Suffixes with a leading zero run in ``[min_lead, max_lead]`` followed by a 1,
        plus the all-zero suffix when ``zeros_ok``; all completing ``phase`` in-ring."""
        offset, sign, res = self._split(phase)
        self._check_length(offset, length)
        total = 0
        for j in range(max(0, min_lead), min(length - 1, max_lead) + 1):
            total += self._begins_with_one(length - j, offset + j, sign, res + sign * self._run(offset, j))
        if zeros_ok and self.accepts(res + sign * self._run(offset, length)):
            total += 1
        return total

    def _check_length(self, offset: int, length: int) -> None:
        if length < 0 or offset + length > self.n:
            raise ValueError(f"suffix [{offset}, {offset + length}) does not fit frame n={self.n}")

    @property
    def memo_size(self) -> int:
        return len(self._memo)


@lru_cache(maxsize=64)
def counter_for(rings: RingSet, constraints: RunLengthConstraints) -> RingCounter:
    return RingCounter(rings, constraints)


def _scalar_rings(n: int, m: int, sigma: complex, rho1: float, rho2: float) -> RingSet:
    return RingSet.from_mapping(n, {m: Ring(complex(sigma), rho1, rho2)})


def count_ring_scalar(
    n: int, n_tilde: int, m: int, sigma: complex, rho1: float, rho2: float, c: RunLengthConstraints
) -> int:
    """Words of length n_tilde starting with 1 whose m-th sum lies in the ring about sigma."""
    if not 0 <= m < n:
        raise ValueError(f"spectral index m={m} outside [0, {n - 1}]")
    return counter_for(_scalar_rings(n, m, sigma, rho1, rho2), c).begins_with_one(n_tilde)


def count_ring_scalar_leading(
    n: int, n_tilde: int, m: int, sigma: complex, rho1: float, rho2: float, c: RunLengthConstraints
) -> int:
    if not 0 <= m < n:
        raise ValueError(f"spectral index m={m} outside [0, {n - 1}]")
    return counter_for(_scalar_rings(n, m, sigma, rho1, rho2), c).leading(n_tilde)


def count_ring_vector(n: int, n_tilde: int, centers: RingSet, c: RunLengthConstraints) -> int:
    if centers.n != n:
        raise ValueError(f"ring set has {centers.n} slots, frame length is {n}")
    return counter_for(centers, c).begins_with_one(n_tilde)


def count_ring_vector_leading(n: int, n_tilde: int, centers: RingSet, c: RunLengthConstraints) -> int:
    if centers.n != n:
        raise ValueError(f"ring set has {centers.n} slots, frame length is {n}")
    return counter_for(centers, c).leading(n_tilde)
