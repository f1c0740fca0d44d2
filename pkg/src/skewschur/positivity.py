"""Schur-positivity, support containment and the overlap-dominance screen."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .partitions import Partition, first_dominance_failure, format_partition, union
from .shapes import OverlapProfile, SkewShape, overlap_profile, star_product
from .tableaux import SchurExpansion, lr_expand

ROWS, COLS, RECTS = "rows", "cols", "rects"


@dataclass(frozen=True)
class Witness:
    """One failed inequality of the screen.

    ``index`` is k for rows, l for cols and (k, l) for rects. For the two
    dominance families ``detail`` is (prefix length, A-side sum, B-side sum);
    for rects it is (rects of A, rects of B).
    """

    family: str
    index: int | tuple[int, int]
    left: Partition | int
    right: Partition | int
    detail: tuple[int, ...]

    def to_json(self) -> dict:
        def enc(v):
            return list(v) if isinstance(v, tuple) else v

        return {
            "family": self.family,
            "index": enc(self.index),
            "left": enc(self.left),
            "right": enc(self.right),
            "detail": list(self.detail),
        }

    def __str__(self) -> str:
        if self.family == RECTS:
            k, l = self.index
            return f"rects[{k},{l}]: {self.left} > {self.right}"
        j, a, b = self.detail
        return (
            f"{self.family}_{self.index}: {format_partition(self.left)} not dominated by "
            f"{format_partition(self.right)} "
            f"(prefix {j}: {a} > {b})"
        )


@dataclass(frozen=True)
class ScreenVerdict:
    passed: bool
    witnesses: tuple[Witness, ...] = ()

    def family(self, name: str) -> tuple[Witness, ...]:
        return tuple(w for w in self.witnesses if w.family == name)

    def to_json(self) -> dict:
        return {"passed": self.passed, "witnesses": [w.to_json() for w in self.witnesses]}


def difference(a: SkewShape, b: SkewShape) -> SchurExpansion:
    """Exact expansion of s_a - s_b."""
    return lr_expand(a) - lr_expand(b)


def is_schur_positive(d: SchurExpansion) -> bool:
    """No negative coefficient. The zero expansion counts as positive."""
    return all(d[lam] > 0 for lam in d)


def support_contains(a: SkewShape, b: SkewShape) -> bool:
    """True when supp(b) ⊆ supp(a)."""
    return lr_expand(b).support <= lr_expand(a).support


def _dominance_witnesses(family: str, left: Sequence[Partition], right: Sequence[Partition], upto: int):
    empty = Partition()
    out = []
    for k in range(1, upto + 1):
        p = left[k - 1] if k <= len(left) else empty
        q = right[k - 1] if k <= len(right) else empty
        fail = first_dominance_failure(p, q)
        if fail is not None:
            out.append(Witness(family, k, p, q, fail))
    return out


def overlap_screen(
    a: SkewShape,
    b: SkewShape,
    *,
    profiles: tuple[OverlapProfile, OverlapProfile] | None = None,
) -> ScreenVerdict:
    """Check rows_k(a) ⊴ rows_k(b), cols_l(a) ⊴ cols_l(b) and rects(a) ≤ rects(b).

    The three families are evaluated independently. They are known to be
    equivalent, so disagreement means a bug and raises ``RuntimeError``.
    Witnesses are listed rows first, then cols, then rects.
    """
    pa, pb = profiles if profiles is not None else (overlap_profile(a), overlap_profile(b))
    max_k = max(a.num_rows, b.num_rows)
    max_l = max(a.num_cols, b.num_cols)
    row_w = _dominance_witnesses(ROWS, pa.rows_by_k, pb.rows_by_k, max_k)
    col_w = _dominance_witnesses(COLS, pa.cols_by_l, pb.cols_by_l, max_l)
    rect_w = [
        Witness(RECTS, (k, l), pa.rects(k, l), pb.rects(k, l), (pa.rects(k, l), pb.rects(k, l)))
        for k in range(1, max_k + 1)
        for l in range(1, max_l + 1)
        if pa.rects(k, l) > pb.rects(k, l)
    ]
    verdicts = (not row_w, not col_w, not rect_w)
    if len(set(verdicts)) != 1:
        raise RuntimeError(
            f"screen families disagree on ({a}, {b}): rows={verdicts[0]} cols={verdicts[1]} rects={verdicts[2]}"
        )
    return ScreenVerdict(verdicts[0], tuple(row_w + col_w + rect_w))


SKIPPED = "skipped"


@dataclass(frozen=True)
class ConditionReport:
    """Screen and exact verdicts for the ordered pair (A, B).

    ``support_contained`` and ``schur_positive`` are either booleans or
    ``"skipped"`` when the shapes exceed the exact-computation limit.
    """

    a: SkewShape
    b: SkewShape
    screen: ScreenVerdict
    reverse_screen: ScreenVerdict
    support_contained: bool | str
    reverse_support_contained: bool | str
    schur_positive: bool | str
    difference: SchurExpansion | None = field(default=None, compare=False)

    @property
    def same_size(self) -> bool:
        return self.a.size == self.b.size

    @property
    def implication_consistent(self) -> bool:
        """Schur-positive ⇒ support contained ⇒ screen passes (for both directions)."""
        ok = True
        if self.schur_positive is True and self.support_contained is False:
            ok = False
        if self.support_contained is True and not self.screen.passed:
            ok = False
        if self.reverse_support_contained is True and not self.reverse_screen.passed:
            ok = False
        return ok

    @property
    def support_relation(self) -> str:
        fwd, rev = self.support_contained, self.reverse_support_contained
        if SKIPPED in (fwd, rev):
            # a failed screen still certifies non-containment
            fwd = False if not self.screen.passed else fwd
            rev = False if not self.reverse_screen.passed else rev
            if fwd is False and rev is False:
                return "incomparable"
            return "unknown"
        if fwd and rev:
            return "equal"
        if fwd:
            return "A contains B"
        if rev:
            return "B contains A"
        return "incomparable"

    def summary(self) -> str:
        lines = []
        if not self.screen.passed:
            lines.append("s_A - s_B not Schur-positive (screen fails)")
        elif self.schur_positive is True:
            lines.append("s_A - s_B is Schur-positive")
        elif self.schur_positive is False:
            lines.append("s_A - s_B not Schur-positive")
        if self.screen.passed and self.support_contained is False:
            lines.append("screen passes but support containment fails")
        lines.append(f"supports {self.support_relation}")
        return "; ".join(lines)

    def to_json(self) -> dict:
        return {
            "A": str(self.a),
            "B": str(self.b),
            "screen": self.screen.to_json(),
            "reverse_screen": self.reverse_screen.to_json(),
            "support_contained": self.support_contained,
            "reverse_support_contained": self.reverse_support_contained,
            "schur_positive": self.schur_positive,
            "support_relation": self.support_relation,
            "implication_consistent": self.implication_consistent,
        }


def necessary_condition_report(a: SkewShape, b: SkewShape, *, exact_limit: int | None = 14) -> ConditionReport:
    """Evaluate the screen both ways and, when both shapes have at most
    ``exact_limit`` boxes (None means no limit), the exact support and
    positivity verdicts."""
    screen = overlap_screen(a, b)
    reverse = overlap_screen(b, a)
    exact = exact_limit is None or max(a.size, b.size) <= exact_limit
    if exact:
        diff = difference(a, b)
        return ConditionReport(
            a, b, screen, reverse,
            support_contains(a, b), support_contains(b, a), is_schur_positive(diff), diff,
        )
    return ConditionReport(a, b, screen, reverse, SKIPPED, SKIPPED, SKIPPED)


def _tail(p: Sequence[int], k: int, l: int) -> tuple[int, ...]:
    return tuple(p[k - 1:l])


def product_tails_direct(alpha, beta, gamma, delta) -> ScreenVerdict:
    """Tails check computed straight from the four partitions.

    For every k, the parts from position k onward of alpha and beta, merged,
    must be dominated by the merged parts from position k onward of gamma and
    delta. Tails run to the end of every partition.
    """
    alpha, beta, gamma, delta = map(Partition, (alpha, beta, gamma, delta))
    last = max(len(alpha), len(beta), len(gamma), len(delta))
    out = []
    for k in range(1, last + 1):
        left = union(_tail(alpha, k, last), _tail(beta, k, last))
        right = union(_tail(gamma, k, last), _tail(delta, k, last))
        fail = first_dominance_failure(left, right)
        if fail is not None:
            out.append(Witness(ROWS, k, left, right, fail))
    return ScreenVerdict(not out, tuple(out))


def product_tails_check(alpha, beta, gamma, delta) -> ScreenVerdict:
    """Necessary condition for supp(s_alpha s_beta) ⊇ supp(s_gamma s_delta).

    Computes the tails check directly and again as the rows part of
    :func:`overlap_screen` on the star products, and raises ``RuntimeError``
    if the two disagree.
    """
    direct = product_tails_direct(alpha, beta, gamma, delta)
    left = star_product(SkewShape(alpha), SkewShape(beta))
    right = star_product(SkewShape(gamma), SkewShape(delta))
    via_star = overlap_screen(left, right)
    star_rows = via_star.family(ROWS)
    if direct.passed != via_star.passed or [(w.index, w.left, w.right) for w in direct.witnesses] != [
        (w.index, w.left, w.right) for w in star_rows
    ]:
        raise RuntimeError(f"tails check disagrees with the star-product screen for {alpha},{beta} vs {gamma},{delta}")
    return direct
