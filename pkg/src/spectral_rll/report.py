"""Tab-delimited codebook listings with optional spectral columns."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .codec import CodebookProfile, format_word
from .oracle import enumerate_all, filter_by_rings
from .spectral import dft_component, nrzi_encode


@dataclass(frozen=True)
class CodebookRow:
    index: int
    word: tuple[int, ...]
    components: dict[int, complex]


def default_components(profile: CodebookProfile) -> list[int]:
    return sorted({0} | {m for m, _ in profile.rings.constrained()})


def codebook_rows(profile: CodebookProfile, components: Sequence[int] = ()) -> list[CodebookRow]:
    cb = filter_by_rings(enumerate_all(profile.n, profile.constraints), profile.rings)
    rows = []
    for i, word in enumerate(cb):
        z = nrzi_encode(word)
        rows.append(CodebookRow(i, word, {m: dft_component(z, m, profile.n) for m in components}))
    return rows


def _fixed(v: float) -> str:
    # round first so tiny negatives print as 0.00, not -0.00
    return f"{round(v, 2) + 0.0:.2f}"


def format_component(m: int, value: complex) -> str:
    if m == 0:
        return str(int(round(value.real)))
    return f"({_fixed(value.real)}, {_fixed(value.imag)})"


def header(components: Sequence[int]) -> str:
    return "\t".join(["N", "x"] + [f"z*_{m}" for m in components])


def format_row(row: CodebookRow, components: Sequence[int]) -> str:
    cols = [str(row.index), format_word(row.word)]
    cols += [format_component(m, row.components[m]) for m in components]
    return "\t".join(cols)


def write_table(rows: Iterable[CodebookRow], components: Sequence[int], out: TextIO) -> None:
    out.write(header(components) + "\n")
    for row in rows:
        out.write(format_row(row, components) + "\n")
