"""Integer partitions, extended dominance order and related helpers.

A :class:`Partition` is an immutable tuple of positive integers in weakly
decreasing order. Trailing zeros are never stored, so two partitions are equal
exactly when their nonzero parts agree.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Indexing follows ordinary tuple semantics (0-based). Use :meth:`part` for
    the 1-based, zero-padded convention ``lambda_k = 0`` for ``k > length``.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "Partition":
        if isinstance(values, Partition):
            return values
        parts = []
        for v in values:
            iv = int(v)
            if iv != v or iv < 0:
                raise ValueError(f"partition parts must be nonnegative integers, got {v!r}")
            if iv:
                parts.append(iv)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts are not weakly decreasing: {tuple(parts)}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, k: int) -> int:
        """Return the k-th part (1-based), or 0 beyond the length."""
        if k < 1:
            raise IndexError("parts are indexed from 1")
        return self[k - 1] if k <= len(self) else 0

    def transpose(self) -> "Partition":
        return transpose(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def make_partition(values: Sequence[int]) -> Partition:
    """Build a canonical partition, dropping zero parts.

    Raises ``ValueError`` when the positive parts are not weakly decreasing.
    """
    return Partition(values)


def transpose(lam: Sequence[int]) -> Partition:
    """Conjugate partition: column lengths of the Young diagram, left to right."""
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Return True when ``mu`` dominates ``lam`` (written lam ⊴ mu).

    Prefix sums are compared for k = 1..length(lam) only, with ``mu`` padded
    by zeros. Sizes may differ, e.g. ``dominates((4, 2, 1), (4, 4))`` holds.
    Beyond length(lam) the inequality holds automatically, so this is the same
    as comparing zero-padded prefix sums at every k.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    total_mu = 0
    total_lam = 0
    for k, p in enumerate(lam):
        total_lam += p
        if k < len(mu):
            total_mu += mu[k]
        if total_lam > total_mu:
            return False
    return True


def first_dominance_failure(lam: Sequence[int], mu: Sequence[int]) -> tuple[int, int, int] | None:
    """Locate the first prefix where ``lam ⊴ mu`` breaks.

    Returns ``(k, lam_prefix_sum, mu_prefix_sum)`` or None when dominance holds.
    """
    lam_sums = list(accumulate(lam))
    mu_sums = list(accumulate(mu))
    for k, s in enumerate(lam_sums, start=1):
        t = mu_sums[min(k, len(mu_sums)) - 1] if mu_sums else 0
        if s > t:
            return k, s, t
    return None


def union(alpha: Sequence[int], beta: Sequence[int]) -> Partition:
    """Multiset union of parts, sorted into a partition."""
    return Partition(sorted((*alpha, *beta), reverse=True))


def contains(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    mu = Partition(mu)
    lam = Partition(lam)
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def sorted_partition(values: Iterable[int]) -> Partition:
    """Weakly decreasing rearrangement of a sequence of naturals, zeros dropped."""
    return Partition(sorted((v for v in values if v), reverse=True))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first, *rest)))
    return tuple(out)


def list_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n))


def format_partition(lam: Sequence[int]) -> str:
    """Compact digit form when every part is at most 9, comma form otherwise.

    The empty partition prints as ``"0"``.
    """
    if not lam:
        return "0"
    if max(lam) <= 9:
        return "".join(str(p) for p in lam)
    return ",".join(str(p) for p in lam)


class LiteralError(ValueError):
    """Malformed partition or shape literal; ``position`` is a 0-based column."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at column {position + 1} in {text!r}")
        self.text = text
        self.position = position


def parse_partition(
    text: str, *, comma: bool | None = None, _offset: int = 0, _full: str | None = None
) -> Partition:
    """Parse ``"4,4,3"``, compact ``"443"``, ``"0"`` or ``""``.

    The compact form reads one part per digit, so any part of 10 or more needs
    the comma form. A compact literal may not contain ``0`` unless it is
    exactly ``"0"``; this keeps ``"10"`` from silently meaning ``(1)``.
    ``comma=True`` forces the comma reading, so ``"11"`` is the single part 11.
    """
    full = text if _full is None else _full
    s = text.strip()
    lead = len(text) - len(text.lstrip())
    base = _offset + lead
    if s in ("", "0"):
        return EMPTY
    if comma or (comma is None and "," in s):
        parts = []
        pos = 0
        for chunk in s.split(","):
            c = chunk.strip()
            if not c.isdigit():
                raise LiteralError(f"expected a nonnegative integer, got {chunk!r}", full, base + pos)
            parts.append(int(c))
            pos += len(chunk) + 1
    else:
        for i, ch in enumerate(s):
            if not ch.isdigit():
                raise LiteralError(f"unexpected character {ch!r}", full, base + i)
            if ch == "0":
                raise LiteralError("zero digit in compact literal (use comma syntax)", full, base + i)
        parts = [int(ch) for ch in s]
    try:
        return Partition(parts)
    except ValueError as exc:
        raise LiteralError(str(exc), full, base) from None
