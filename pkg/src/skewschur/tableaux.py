"""Littlewood-Richardson fillings and Schur expansions of skew shapes."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import Partition, format_partition, transpose
from .shapes import SkewShape, cols_l, rows_k


@dataclass(frozen=True)
class LRFilling:
    """Integer filling of a skew shape, one tuple per row (top to bottom, left to right)."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = tuple(e - s + 1 for s, e in self.shape.row_intervals)
        if tuple(len(r) for r in self.rows) != widths:
            raise ValueError(f"row sizes {[len(r) for r in self.rows]} do not match shape {self.shape}")

    @property
    def reading_word(self) -> tuple[int, ...]:
        return reverse_reading_word(self)

    @property
    def content(self) -> tuple[int, ...]:
        """Counts of 1, 2, ... up to the largest entry (not necessarily a partition)."""
        top = max((v for r in self.rows for v in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for v in r:
                counts[v - 1] += 1
        return tuple(counts)

    def entry(self, i: int, j: int) -> int:
        s, _ = self.shape.row_intervals[i - 1]
        return self.rows[i - 1][j - s]

    def is_semistandard(self) -> bool:
        intervals = self.shape.row_intervals
        for i, row in enumerate(self.rows):
            if any(v < 1 for v in row):
                return False
            if any(a > b for a, b in zip(row, row[1:])):
                return False
            if i:
                s, e = intervals[i]
                ps, pe = intervals[i - 1]
                for j in range(max(s, ps), min(e, pe) + 1):
                    if self.rows[i][j - s] <= self.rows[i - 1][j - ps]:
                        return False
        return True

    def is_lr(self) -> bool:
        return self.is_semistandard() and is_lattice(self.reading_word)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def word_string(self) -> str:
        w = self.reading_word
        if all(v <= 9 for v in w):
            return "".join(map(str, w))
        return ",".join(map(str, w))


def reverse_reading_word(filling: LRFilling) -> tuple[int, ...]:
    """Rows top to bottom, each read right to left."""
    return tuple(v for row in filling.rows for v in reversed(row))


def is_lattice(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for v in word:
        c = counts.get(v, 0) + 1
        if v > 1 and c > counts.get(v - 1, 0):
            return False
        counts[v] = c
    return True


def enumerate_lr_fillings(shape: SkewShape) -> Iterator[LRFilling]:
    """All LR-fillings of ``shape``, in lexicographic order of reading word.

    Boxes are visited in reverse reading order; each candidate value must be
    at most the value to its right, larger than the value above, and keep the
    word a lattice word, so every dead branch is cut at the first bad box.
    """
    intervals = shape.row_intervals
    order = [(i, j) for i, (s, e) in enumerate(intervals) for j in range(e, s - 1, -1)]
    n = len(order)
    top_bound = shape.num_rows
    # value at (row, col) in 0-based row, 1-based col
    grid: dict[tuple[int, int], int] = {}
    counts = [0] * (top_bound + 2)

    def build() -> LRFilling:
        return LRFilling(
            shape,
            tuple(tuple(grid[(i, j)] for j in range(s, e + 1)) for i, (s, e) in enumerate(intervals)),
        )

    def place(pos: int) -> Iterator[LRFilling]:
        if pos == n:
            yield build()
            return
        i, j = order[pos]
        lo = grid.get((i - 1, j), 0) + 1
        hi = grid.get((i, j + 1), top_bound)
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                # counts weakly decrease in v, so once counts[v-1] is 0 no larger v fits
                if counts[v - 1] == 0:
                    break
                continue
            grid[(i, j)] = v
            counts[v] += 1
            yield from place(pos + 1)
            counts[v] -= 1
            del grid[(i, j)]

    yield from place(0)


class SchurExpansion(Mapping):
    """Finite integer combination of Schur functions, keyed by partition.

    Zero coefficients are never stored. Coefficients may be negative, so the
    same type represents differences ``s_A - s_B``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Sequence = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = Partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: c for lam, c in acc.items() if c}

    def __getitem__(self, lam) -> int:
        return self._terms.get(Partition(lam), 0)

    def __contains__(self, lam) -> bool:
        try:
            return Partition(lam) in self._terms
        except (TypeError, ValueError):
            return False

    def __iter__(self):
        return iter(sorted(self._terms, reverse=True))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self == SchurExpansion(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        return SchurExpansion([*self._terms.items(), *((k, -c) for k, c in other._terms.items())])

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        return SchurExpansion([*self._terms.items(), *other._terms.items()])

    @property
    def support(self) -> frozenset[Partition]:
        return frozenset(self._terms)

    def transpose(self) -> "SchurExpansion":
        """Image under omega: s_lam -> s_{lam^t}."""
        return SchurExpansion({transpose(lam): c for lam, c in self._terms.items()})

    def is_schur_positive(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def to_json(self) -> list[dict]:
        return [{"partition": list(lam), "coefficient": self[lam]} for lam in self]

    def __repr__(self) -> str:
        inner = ", ".join(f"{format_partition(lam)}: {self[lam]}" for lam in self)
        return f"SchurExpansion({{{inner}}})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for lam in self:
            c = self[lam]
            term = f"s[{format_partition(lam)}]"
            mag = abs(c)
            if mag != 1:
                term = f"{mag}{term}"
            if not out:
                out.append(term if c > 0 else f"-{term}")
            else:
                out.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(out)


SignedExpansion = SchurExpansion


def _content_partition(f: LRFilling) -> Partition:
    return Partition(f.content)


@lru_cache(maxsize=None)
def lr_expand(shape: SkewShape) -> SchurExpansion:
    """Schur expansion of s_shape: coefficient of s_nu counts LR-fillings of content nu."""
    counts: dict[Partition, int] = {}
    for f in enumerate_lr_fillings(shape):
        nu = _content_partition(f)
        counts[nu] = counts.get(nu, 0) + 1
    return SchurExpansion(counts)


def support(shape: SkewShape) -> frozenset[Partition]:
    return lr_expand(shape).support


def _column_tops(shape: SkewShape) -> dict[int, list[int]]:
    """Column index -> 0-based rows of its boxes, top to bottom."""
    cols: dict[int, list[int]] = {}
    for i, (s, e) in enumerate(shape.row_intervals):
        for j in range(s, e + 1):
            cols.setdefault(j, []).append(i)
    return cols


def _fill_rightmost(cells: set[tuple[int, int]], grid: dict[tuple[int, int], int], offset: int) -> None:
    # repeatedly number the rightmost unfilled box of each non-empty row from the top
    while cells:
        rows: dict[int, int] = {}
        for i, j in cells:
            if j > rows.get(i, 0):
                rows[i] = j
        for label, i in enumerate(sorted(rows), start=offset + 1):
            grid[(i, rows[i])] = label
            cells.discard((i, rows[i]))


def _as_filling(shape: SkewShape, grid: dict[tuple[int, int], int]) -> LRFilling:
    return LRFilling(
        shape,
        tuple(tuple(grid[(i, j)] for j in range(s, e + 1)) for i, (s, e) in enumerate(shape.row_intervals)),
    )


def most_dominant_filling(shape: SkewShape) -> LRFilling:
    """Put ``i`` in the i-th highest box of every column; content is cols_1(A)^t."""
    if not shape.size:
        raise ValueError("the empty shape has no boxes to fill")
    return hybrid_filling(shape, shape.num_rows + 1)


def least_dominant_filling(shape: SkewShape) -> LRFilling:
    """Fill rightmost boxes of non-empty rows 1, 2, ... top to bottom, then repeat.

    The content is the sorted row lengths, the least dominant content any
    LR-filling of the shape can have.
    """
    if not shape.size:
        raise ValueError("the empty shape has no boxes to fill")
    return hybrid_filling(shape, 1)


def hybrid_filling(shape: SkewShape, k: int) -> LRFilling:
    """LR-filling that is most dominant in the values 1..k-1 and least dominant after.

    Values 1..k-1 go into the top k-1 boxes of each column; the leftover boxes
    form ``trim_power(shape, k-1)`` and get the rightmost-box procedure with
    labels starting at k. The result is checked to be an LR-filling with
    content ``(cols_1^t[:k-1], rows_k)`` and ``RuntimeError`` is raised if not.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if not shape.size:
        raise ValueError("the empty shape has no boxes to fill")
    grid: dict[tuple[int, int], int] = {}
    for j, rows in _column_tops(shape).items():
        for depth, i in enumerate(rows[: k - 1], start=1):
            grid[(i, j)] = depth
    rest = {(i, j) for i, (s, e) in enumerate(shape.row_intervals) for j in range(s, e + 1)} - grid.keys()
    _fill_rightmost(rest, grid, k - 1)
    filling = _as_filling(shape, grid)

    expected = tuple(transpose(cols_l(shape, 1))[: k - 1]) + tuple(rows_k(shape, k))
    if not filling.is_lr():
        raise RuntimeError(f"hybrid filling of {shape} with k={k} is not an LR-filling: {filling.rows}")
    if filling.content != expected:
        raise RuntimeError(
            f"hybrid filling of {shape} with k={k} has content {filling.content}, expected {expected}"
        )
    return filling
