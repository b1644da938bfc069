"""Run-length parameters and annulus constraints on spectral components."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

# absolute, boundary-inclusive, applied to both radii
RING_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RunLengthConstraints:
    """Zero-run limits: ``d <= inner run <= k``, leading run <= l, trailing run <= r."""

    d: int
    k: int
    l: int
    r: int

    def __post_init__(self):
        for name in ("d", "k", "l", "r"):
            if int(getattr(self, name)) < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.k < self.d:
            raise ValueError(f"k={self.k} must be >= d={self.d}")


@dataclass(frozen=True)
class Ring:
    center: complex
    inner: float
    outer: float

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if not 0 <= self.inner <= self.outer:
            raise ValueError(f"ring radii must satisfy 0 <= inner <= outer, got {self.inner}, {self.outer}")

    def contains(self, value: complex) -> bool:
        return ring_contains(self, value)


class Unconstrained:
    """Slot marker: every complex value is accepted."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def contains(self, value: complex) -> bool:
        return True

    def __repr__(self) -> str:
        return "UNCONSTRAINED"

    def __reduce__(self):
        return (Unconstrained, ())


UNCONSTRAINED = Unconstrained()

Slot = Union[Ring, Unconstrained]


def ring_contains(ring: Ring, value: complex) -> bool:
    dist = abs(complex(value) - ring.center)
    return ring.inner - RING_TOLERANCE <= dist <= ring.outer + RING_TOLERANCE


@dataclass(frozen=True)
class RingSet:
    """One slot per spectral index m = 0..n-1."""

    rings: tuple[Slot, ...]

    def __post_init__(self):
        object.__setattr__(self, "rings", tuple(self.rings))
        for slot in self.rings:
            if not isinstance(slot, (Ring, Unconstrained)):
                raise TypeError(f"ring slot must be Ring or UNCONSTRAINED, got {slot!r}")

    @classmethod
    def unconstrained(cls, n: int) -> "RingSet":
        return cls((UNCONSTRAINED,) * n)

    @classmethod
    def from_mapping(cls, n: int, rings: dict[int, Ring]) -> "RingSet":
        slots: list[Slot] = [UNCONSTRAINED] * n
        for m, ring in rings.items():
            if not 0 <= m < n:
                raise ValueError(f"ring index m={m} outside [0, {n - 1}]")
            slots[m] = ring
        return cls(tuple(slots))

    @property
    def n(self) -> int:
        return len(self.rings)

    def constrained(self) -> list[tuple[int, Ring]]:
        return [(m, s) for m, s in enumerate(self.rings) if isinstance(s, Ring)]

    def __getitem__(self, m: int) -> Slot:
        return self.rings[m]


def ringset_contains(rs: RingSet, spectrum: Sequence[complex]) -> bool:
    if len(spectrum) != rs.n:
        raise ValueError(f"spectrum has {len(spectrum)} components, ring set has {rs.n}")
    return all(ring_contains(ring, spectrum[m]) for m, ring in rs.constrained())
