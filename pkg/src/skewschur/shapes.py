"""Skew shapes and their overlap invariants.

Every :class:`SkewShape` is stored in canonical form: empty rows and empty
columns are deleted, so two shapes with the same box diagram up to translation
compare equal. Rows are numbered from 1 at the top, columns from 1 at the left.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .partitions import (
    EMPTY,
    LiteralError,
    Partition,
    contains,
    format_partition,
    parse_partition,
    sorted_partition,
    transpose,
)


class SkewShape:
    """Canonical skew shape ``outer/inner``."""

    __slots__ = ("outer", "inner", "_hash")

    def __init__(self, outer: Sequence[int], inner: Sequence[int] = ()):
        lam = Partition(outer)
        mu = Partition(inner)
        if not contains(mu, lam):
            raise ValueError(f"{format_partition(mu)} is not contained in {format_partition(lam)}")
        lam, mu = _canonical(lam, mu)
        self.outer = lam
        self.inner = mu
        self._hash = hash((lam, mu))

    # rows as 1-based inclusive column intervals, top to bottom
    @property
    def row_intervals(self) -> list[tuple[int, int]]:
        return [(self.inner.part(i) + 1, p) for i, p in enumerate(self.outer, start=1)]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def num_rows(self) -> int:
        return len(self.outer)

    @property
    def num_cols(self) -> int:
        return self.outer[0] if self.outer else 0

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def boxes(self) -> set[tuple[int, int]]:
        return {(i, j) for i, (s, e) in enumerate(self.row_intervals, start=1) for j in range(s, e + 1)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewShape):
            return NotImplemented
        return self.outer == other.outer and self.inner == other.inner

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"SkewShape({tuple(self.outer)!r}, {tuple(self.inner)!r})"

    def __str__(self) -> str:
        return format_shape(self)

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> "SkewShape":
        return cls(data["outer"], data.get("inner", ()))


def _canonical(lam: Partition, mu: Partition) -> tuple[Partition, Partition]:
    rows = [(mu.part(i) + 1, p) for i, p in enumerate(lam, start=1) if p > mu.part(i)]
    if not rows:
        return EMPTY, EMPTY
    occupied = set()
    for s, e in rows:
        occupied.update(range(s, e + 1))
    # shift each column left by the number of empty columns before it
    width = max(e for _, e in rows)
    shift = [0] * (width + 2)
    gaps = 0
    for j in range(1, width + 1):
        if j not in occupied:
            gaps += 1
        shift[j] = gaps
    outer = Partition(e - shift[e] for _, e in rows)
    inner = Partition(s - shift[s] - 1 for s, _ in rows)
    return outer, inner


EMPTY_SHAPE = SkewShape(())


def make_skew(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    """Validated, canonical skew shape; ``ValueError`` if inner ⊄ outer."""
    return SkewShape(outer, inner)


def format_shape(shape: SkewShape) -> str:
    if not shape.inner:
        return format_partition(shape.outer)
    if max(shape.outer) <= 9:
        return f"{format_partition(shape.outer)}/{format_partition(shape.inner)}"
    return f"{','.join(map(str, shape.outer))}/{','.join(map(str, shape.inner))}"


def parse_shape(text: str) -> SkewShape:
    """Parse ``"553111/31"``, ``"5,5,3,1,1,1/3,1"`` or a straight ``"443"``.

    A comma on either side switches both sides to comma syntax, so
    ``"12,1/11"`` has inner partition (11).
    """
    head, sep, tail = text.partition("/")
    comma = "," in text
    outer = parse_partition(head, comma=comma, _full=text)
    inner = parse_partition(tail, comma=comma, _offset=len(head) + 1, _full=text) if sep else EMPTY
    if "/" in tail:
        raise LiteralError("more than one '/'", text, len(head) + 1 + tail.index("/"))
    try:
        return SkewShape(outer, inner)
    except ValueError as exc:
        raise LiteralError(str(exc), text, len(head) if sep else 0) from None


def row_lengths(shape: SkewShape) -> tuple[int, ...]:
    return tuple(e - s + 1 for s, e in shape.row_intervals)


def col_lengths(shape: SkewShape) -> tuple[int, ...]:
    lt = transpose(shape.outer)
    mt = transpose(shape.inner)
    return tuple(a - mt.part(j) for j, a in enumerate(lt, start=1))


def overlap(shape: SkewShape, k: int, i: int) -> int:
    """Number of columns occupied by all of rows ``i, ..., i+k-1``."""
    r = shape.num_rows
    if k < 1 or i < 1 or i > r - k + 1:
        raise ValueError(f"overlap index out of range: k={k}, i={i}, rows={r}")
    # starts and ends both weakly decrease down the rows
    return max(0, shape.outer[i + k - 2] - shape.inner.part(i))


def rows_k(shape: SkewShape, k: int) -> Partition:
    if k < 1:
        raise ValueError("k must be positive")
    r = shape.num_rows
    if k > r:
        return EMPTY
    return sorted_partition(overlap(shape, k, i) for i in range(1, r - k + 2))


def cols_l(shape: SkewShape, l: int) -> Partition:
    return rows_k(transpose_shape(shape), l)


def rects(shape: SkewShape, k: int, l: int) -> int:
    """Number of k×l rectangles inside the shape, read off ``rows_k``.

    This is the count of boxes weakly right of column ``l`` in the diagram of
    ``rows_k(shape)``.
    """
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    return sum(transpose(rows_k(shape, k))[l - 1:])


def rects_from_cols(shape: SkewShape, k: int, l: int) -> int:
    """Same count as :func:`rects`, computed from ``cols_l`` instead."""
    if k < 1 or l < 1:
        raise ValueError("k and l must be positive")
    return sum(transpose(cols_l(shape, l))[k - 1:])


def rects_direct(shape: SkewShape, k: int, l: int) -> int:
    """Brute-force count of k consecutive rows × l consecutive columns in the box set."""
    cells = shape.boxes()
    count = 0
    for i in range(1, shape.num_rows - k + 2):
        for j in range(1, shape.num_cols - l + 2):
            if all((i + a, j + b) in cells for a in range(k) for b in range(l)):
                count += 1
    return count


def transpose_shape(shape: SkewShape) -> SkewShape:
    return SkewShape(transpose(shape.outer), transpose(shape.inner))


def trim(shape: SkewShape) -> SkewShape:
    """Delete the top box of every non-empty column."""
    if not shape.size:
        return shape
    # canonical shapes have every column 1..c non-empty
    mt = transpose(shape.inner)
    bumped = [mt.part(j) + 1 for j in range(1, shape.num_cols + 1)]
    return SkewShape(shape.outer, transpose(bumped))


def trim_power(shape: SkewShape, j: int) -> SkewShape:
    if j < 0:
        raise ValueError("j must be nonnegative")
    for _ in range(j):
        if not shape.size:
            break
        shape = trim(shape)
    return shape


def star_product(a: SkewShape, b: SkewShape) -> SkewShape:
    """Place ``b`` lower-left and ``a`` upper-right, sharing no row or column.

    The skew Schur function of the result is the product of those of the
    factors.
    """
    shift = b.num_cols
    outer = [p + shift for p in a.outer] + list(b.outer)
    inner = [a.inner.part(i) + shift for i in range(1, a.num_rows + 1)] + list(b.inner)
    return SkewShape(outer, inner)


@dataclass(frozen=True)
class OverlapProfile:
    """``rows_k`` for k = 1..rows, ``cols_l`` for l = 1..cols and the rects table.

    ``rects_table[k-1][l-1]`` holds rects(k, l); entries outside the table are 0.
    """

    rows_by_k: tuple[Partition, ...]
    cols_by_l: tuple[Partition, ...]
    rects_table: tuple[tuple[int, ...], ...]

    def rows(self, k: int) -> Partition:
        return self.rows_by_k[k - 1] if k <= len(self.rows_by_k) else EMPTY

    def cols(self, l: int) -> Partition:
        return self.cols_by_l[l - 1] if l <= len(self.cols_by_l) else EMPTY

    def rects(self, k: int, l: int) -> int:
        if k <= len(self.rects_table) and l <= len(self.cols_by_l):
            return self.rects_table[k - 1][l - 1]
        return 0

    def to_json(self) -> dict:
        return {
            "rows": [list(p) for p in self.rows_by_k],
            "cols": [list(p) for p in self.cols_by_l],
            "rects": [list(r) for r in self.rects_table],
        }


@lru_cache(maxsize=None)
def overlap_profile(shape: SkewShape, *, check: bool = True) -> OverlapProfile:
    """Compute the full overlap data of a shape.

    With ``check`` set, the rects table computed from ``rows_k`` is compared
    against the ``cols_l`` route and a direct rectangle count, and a mismatch
    raises ``RuntimeError``.
    """
    r, c = shape.num_rows, shape.num_cols
    rows = tuple(rows_k(shape, k) for k in range(1, r + 1))
    cols = tuple(cols_l(shape, l) for l in range(1, c + 1))
    table = tuple(
        tuple(sum(transpose(rows[k - 1])[l - 1:]) for l in range(1, c + 1)) for k in range(1, r + 1)
    )
    if check:
        for k in range(1, r + 1):
            for l in range(1, c + 1):
                via_cols = sum(transpose(cols[l - 1])[k - 1:])
                direct = rects_direct(shape, k, l)
                if not table[k - 1][l - 1] == via_cols == direct:
                    raise RuntimeError(
                        f"rects({k},{l}) disagree on {shape}: rows={table[k - 1][l - 1]} "
                        f"cols={via_cols} direct={direct}"
                    )
    return OverlapProfile(rows, cols, table)


def _shapes_from_bottom(rows: list[tuple[int, int]], remaining: int) -> Iterator[list[tuple[int, int]]]:
    if remaining == 0:
        yield rows
        return
    s_below, e_below = rows[-1]
    for a in range(1, remaining + 1):
        for s in range(max(s_below, e_below - a + 1), e_below + 2):
            yield from _shapes_from_bottom(rows + [(s, s + a - 1)], remaining - a)


def enumerate_skew_shapes(n: int) -> list[SkewShape]:
    """Every canonical skew shape with ``n`` boxes, each once.

    Shapes are built bottom row first: each new row above starts weakly right
    of the row below, ends weakly right of it, and leaves no gap column.
    Output is sorted by (outer, inner) in decreasing lexicographic order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [EMPTY_SHAPE]
    out = []
    for a in range(1, n + 1):
        for bottom_up in _shapes_from_bottom([(1, a)], n - a):
            top_down = bottom_up[::-1]
            out.append(SkewShape([e for _, e in top_down], [s - 1 for s, _ in top_down]))
    out.sort(key=lambda sh: (sh.outer, sh.inner), reverse=True)
    return out
