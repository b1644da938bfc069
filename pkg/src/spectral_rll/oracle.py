"""Brute-force reference: enumerate, filter and rank codebooks at small n.

Spectra here are computed with a direct numpy DFT, independently of the
exact-sum machinery used by the counting and codec modules.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .constraints import RingSet, RunLengthConstraints, ring_contains

MAX_ENUMERATION_LENGTH = 24


class SizeGuard(ValueError):
    pass


class NotInCodebook(KeyError):
    pass


@dataclass(frozen=True)
class Codebook:
    words: tuple[tuple[int, ...], ...]
    n: int
    constraints: RunLengthConstraints
    rings: RingSet | None = None

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.words)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.words[i]


def is_dklr(x: Sequence[int], c: RunLengthConstraints) -> bool:
    """Reference predicate: leading run <= l, inner runs in [d, k], trailing run <= r."""
    ones = [i for i, b in enumerate(x) if b]
    n = len(x)
    if not ones:
        return n <= c.l and n <= c.r
    if ones[0] > c.l or n - 1 - ones[-1] > c.r:
        return False
    return all(c.d <= b - a - 1 <= c.k for a, b in zip(ones, ones[1:]))


def enumerate_all(n: int, c: RunLengthConstraints) -> Codebook:
    """All dklr words of length n in lexicographic order, by run-budget backtracking."""
    if n > MAX_ENUMERATION_LENGTH:
        raise SizeGuard(f"n={n} exceeds enumeration bound {MAX_ENUMERATION_LENGTH}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    words: list[tuple[int, ...]] = []
    prefix: list[int] = []

    # run = zeros since the last one (or since the start when seen_one is False)
    def extend(run: int, seen_one: bool) -> None:
        if len(prefix) == n:
            if seen_one:
                if run <= c.r:
                    words.append(tuple(prefix))
            elif run <= c.l and run <= c.r:
                words.append(tuple(prefix))
            return
        zero_budget = c.l if not seen_one else max(c.k, c.r)
        if run + 1 <= zero_budget:
            prefix.append(0)
            extend(run + 1, seen_one)
            prefix.pop()
        if not seen_one or c.d <= run <= c.k:
            prefix.append(1)
            extend(0, True)
            prefix.pop()

    extend(0, False)
    return Codebook(tuple(words), n, c)


def spectrum(x: Sequence[int], n: int | None = None) -> np.ndarray:
    """Direct DFT of NRZI(x) over a frame of length n."""
    n = len(x) if n is None else n
    levels = np.where(np.cumsum(np.asarray(x, dtype=int)) % 2 == 1, -1.0, 1.0)
    j = np.arange(len(levels))
    m = np.arange(n)[:, None]
    return (levels[None, :] * np.exp(-2j * np.pi * m * j / n)).sum(axis=1)


def word_in_rings(x: Sequence[int], rs: RingSet) -> bool:
    if not rs.constrained():
        return True
    spec = spectrum(x, rs.n)
    return all(ring_contains(ring, spec[m]) for m, ring in rs.constrained())


def filter_by_rings(cb: Codebook, rs: RingSet) -> Codebook:
    if rs.n != cb.n:
        raise ValueError(f"ring set frame {rs.n} differs from codebook length {cb.n}")
    return Codebook(tuple(w for w in cb.words if word_in_rings(w, rs)), cb.n, cb.constraints, rs)


def oracle_rank(x: Sequence[int], cb: Codebook) -> int:
    x = tuple(x)
    i = bisect_left(cb.words, x)
    if i == len(cb.words) or cb.words[i] != x:
        raise NotInCodebook(x)
    return i


def charge_histogram(n: int, c: RunLengthConstraints) -> dict[int, int]:
    """Charge counts over words of length n that start with 1 (l = 0)."""
    hist: dict[int, int] = {}
    cb = enumerate_all(n, RunLengthConstraints(c.d, c.k, 0, c.r))
    for w in cb:
        if n and not w[0]:
            continue
        q = int(round(spectrum(w, max(n, 1))[0].real)) if n else 0
        hist[q] = hist.get(q, 0) + 1
    return hist
