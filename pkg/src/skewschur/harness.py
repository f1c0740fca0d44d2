"""Exhaustive verification over all skew shapes of a given size.

Per-shape data (expansion, overlap profile) is computed once and packed into
integer matrices; pairwise checks are then vectorized comparisons. Each
dominance family is encoded as zero-padded prefix sums, where extended
dominance becomes a plain componentwise inequality.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np

from .partitions import dominates, list_partitions, transpose
from .shapes import (
    SkewShape,
    enumerate_skew_shapes,
    overlap_profile,
    parse_shape,
    rows_k,
    transpose_shape,
    trim,
)
from .tableaux import SchurExpansion, hybrid_filling, lr_expand

logger = logging.getLogger(__name__)

DEFAULT_MAX_SIZE = 7

SCREEN_PASS_SUPPORT_FAIL = "screen-pass-support-fail"
EQUAL_SUPPORT_UNEQUAL_FUNCTION = "equal-support-unequal-function"
WITNESS_KINDS = (SCREEN_PASS_SUPPORT_FAIL, EQUAL_SUPPORT_UNEQUAL_FUNCTION)

# pairs the search is expected to rediscover, keyed by kind
NAMED_PAIRS = {
    SCREEN_PASS_SUPPORT_FAIL: ("311/1", "22"),
    EQUAL_SUPPORT_UNEQUAL_FUNCTION: ("3311/21", "3321/211"),
}


def _expand_terms(shape: SkewShape) -> tuple:
    return tuple(lr_expand(shape).items())


def _prefix_rows(parts_by_index, n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=np.int64)
    for k, p in enumerate(parts_by_index[:n]):
        if p:
            s = np.cumsum(p)
            out[k, : len(s)] = s
            out[k, len(s):] = s[-1]
    return out


def pack_profiles(shapes, dim: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Flattened (rows, cols, rects) arrays, one row per shape.

    ``rows``/``cols`` hold zero-padded prefix sums of rows_k/cols_l for
    k, l <= dim; ``rects`` holds rects(k, l) on the dim×dim grid. ``dim`` must
    be at least the largest size among ``shapes``.
    """
    profiles = [overlap_profile(s, check=False) for s in shapes]
    rows = np.stack([_prefix_rows(pr.rows_by_k, dim).ravel() for pr in profiles])
    cols = np.stack([_prefix_rows(pr.cols_by_l, dim).ravel() for pr in profiles])
    rects = np.stack(
        [np.array([[pr.rects(k, l) for l in range(1, dim + 1)] for k in range(1, dim + 1)]).ravel()
         for pr in profiles]
    )
    return rows, cols, rects


class Universe:
    """All canonical shapes of size ``n`` with their packed invariants."""

    def __init__(self, n: int, *, workers: int = 1):
        self.n = n
        self.shapes = enumerate_skew_shapes(n)
        self.index = {s: i for i, s in enumerate(self.shapes)}
        self.partitions = list_partitions(n)
        pidx = {p: i for i, p in enumerate(self.partitions)}

        if workers > 1 and len(self.shapes) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                terms = list(pool.map(_expand_terms, self.shapes, chunksize=32))
            self.expansions = [SchurExpansion(t) for t in terms]
        else:
            self.expansions = [lr_expand(s) for s in self.shapes]

        m, p = len(self.shapes), len(self.partitions)
        self.coeffs = np.zeros((m, p), dtype=np.int64)
        for i, e in enumerate(self.expansions):
            for lam, c in e.items():
                self.coeffs[i, pidx[lam]] = c
        self.support = self.coeffs > 0

        self.rows, self.cols, self.rects = pack_profiles(self.shapes, max(n, 1))

    def pair_matrices(self) -> dict[str, np.ndarray]:
        """Boolean m×m matrices indexed [A, B]."""
        m = len(self.shapes)
        rows_ok = np.empty((m, m), dtype=bool)
        cols_ok = np.empty((m, m), dtype=bool)
        rects_ok = np.empty((m, m), dtype=bool)
        supp = np.empty((m, m), dtype=bool)
        positive = np.empty((m, m), dtype=bool)
        not_supp = ~self.support
        for a in range(m):
            rows_ok[a] = (self.rows[a] <= self.rows).all(axis=1)
            cols_ok[a] = (self.cols[a] <= self.cols).all(axis=1)
            rects_ok[a] = (self.rects[a] <= self.rects).all(axis=1)
            # supp(B) ⊆ supp(A): B has nothing where A is zero
            supp[a] = ~(self.support & not_supp[a]).any(axis=1)
            positive[a] = (self.coeffs[a] >= self.coeffs).all(axis=1)
        return {"rows": rows_ok, "cols": cols_ok, "rects": rects_ok, "support": supp, "positive": positive}


@lru_cache(maxsize=8)
def universe(n: int) -> Universe:
    return Universe(n)


@dataclass
class VerificationReport:
    n: int
    shapes: int
    pairs: int
    screen_passes: int
    support_containments: int
    schur_positive: int
    checks: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    witnesses: dict[str, dict] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return asdict(self)

    def table(self) -> str:
        lines = [
            f"size n                      {self.n}",
            f"canonical shapes            {self.shapes}",
            f"ordered pairs               {self.pairs}",
            f"screen passes               {self.screen_passes}",
            f"support containments        {self.support_containments}",
            f"Schur-positive differences  {self.schur_positive}",
        ]
        for name, count in self.checks.items():
            lines.append(f"check {name:<22}{count}")
        for kind, info in self.witnesses.items():
            line = f"witnesses {kind}: {info['count']}"
            if "named_pair" in info:
                pair = " vs ".join(info["named_pair"])
                line += f" ({pair} {'found' if info['named_pair_found'] else 'NOT found'})"
            lines.append(line)
        lines.append(f"violations                  {len(self.violations)}")
        lines.extend(f"  {v}" for v in self.violations)
        lines.append(f"elapsed                     {self.elapsed:.2f}s")
        return "\n".join(lines)


def _shape_checks(shape: SkewShape, expansion: SchurExpansion, violations: list[str], counts: dict[str, int]):
    r = shape.num_rows

    t = trim(shape)
    for k in range(2, r + 2):
        counts["trim_lemma"] += 1
        if rows_k(t, k - 1) != rows_k(shape, k):
            violations.append(f"trim lemma fails on {shape} at k={k}")

    try:
        overlap_profile(shape, check=True)
        counts["rects_identity"] += 1
    except RuntimeError as exc:
        violations.append(str(exc))

    low = rows_k(shape, 1)
    high = transpose(rows_k(transpose_shape(shape), 1))
    counts["extreme_fillings"] += 1
    for nu in expansion:
        if not (dominates(low, nu) and dominates(nu, high)):
            violations.append(f"support element {nu} of {shape} outside [{low}, {high}]")
    if low not in expansion or high not in expansion:
        violations.append(f"extreme contents of {shape} not both in support")

    counts["omega_symmetry"] += 1
    if lr_expand(transpose_shape(shape)) != expansion.transpose():
        violations.append(f"omega symmetry fails on {shape}")

    for k in range(1, r + 2):
        counts["hybrid_filling"] += 1
        try:
            hybrid_filling(shape, k)
        except RuntimeError as exc:
            violations.append(str(exc))


def _pairs(u: Universe, mask: np.ndarray) -> list[tuple[SkewShape, SkewShape]]:
    a_idx, b_idx = np.nonzero(mask)
    return [(u.shapes[a], u.shapes[b]) for a, b in zip(a_idx.tolist(), b_idx.tolist())]


def _witness_masks(u: Universe, mats: dict[str, np.ndarray]) -> dict[str, np.ndarray]:
    equal_support = mats["support"] & mats["support"].T
    equal_function = mats["positive"] & mats["positive"].T
    return {
        SCREEN_PASS_SUPPORT_FAIL: mats["rows"] & ~mats["support"],
        EQUAL_SUPPORT_UNEQUAL_FUNCTION: equal_support & ~equal_function,
    }


def find_witnesses(n: int, kind: str) -> list[tuple[SkewShape, SkewShape]]:
    """All ordered pairs of size-``n`` shapes of the requested kind.

    ``screen-pass-support-fail``: the overlap screen passes for (A, B) yet
    supp(A) does not contain supp(B). ``equal-support-unequal-function``:
    equal supports, different Schur expansions. Pairs come in the shape
    enumeration order, A varying slowest.
    """
    if kind not in WITNESS_KINDS:
        raise ValueError(f"unknown witness kind {kind!r}; expected one of {WITNESS_KINDS}")
    if n < 1:
        return []
    u = universe(n)
    return _pairs(u, _witness_masks(u, u.pair_matrices())[kind])


def minimal_witness_size(kind: str, max_n: int = DEFAULT_MAX_SIZE) -> int | None:
    """Smallest size with at least one witness of ``kind``, or None up to ``max_n``."""
    for n in range(1, max_n + 1):
        if find_witnesses(n, kind):
            return n
    return None


def verify_all(n: int, *, max_size: int = DEFAULT_MAX_SIZE, workers: int = 1) -> VerificationReport:
    """Check every claim over all shapes and ordered pairs of size ``n``.

    Violations are collected in the report, never raised.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_size:
        raise ValueError(f"n={n} exceeds the configured bound {max_size}")
    start = time.perf_counter()
    u = Universe(n, workers=workers) if workers > 1 else universe(n)
    logger.info("size %d: %d shapes", n, len(u.shapes))
    mats = u.pair_matrices()
    violations: list[str] = []
    counts = {k: 0 for k in ("trim_lemma", "rects_identity", "extreme_fillings", "omega_symmetry", "hybrid_filling")}

    for shape, expansion in zip(u.shapes, u.expansions):
        _shape_checks(shape, expansion, violations, counts)

    screen = mats["rows"]
    for name in ("cols", "rects"):
        bad = mats[name] != screen
        if bad.any():
            for a, b in _pairs(u, bad)[:20]:
                violations.append(f"three-systems disagreement ({name}) on ({a}, {b})")

    unsound = mats["support"] & ~screen
    for a, b in _pairs(u, unsound):
        violations.append(f"support containment without screen pass: ({a}, {b})")
    for a, b in _pairs(u, mats["positive"] & ~mats["support"]):
        violations.append(f"Schur-positive difference without support containment: ({a}, {b})")

    equal_support = mats["support"] & mats["support"].T
    same_rows = (u.rows[:, None, :] == u.rows[None, :, :]).all(axis=2)
    for a, b in _pairs(u, equal_support & ~same_rows):
        violations.append(f"equal supports but different rows_k: ({a}, {b})")

    m = len(u.shapes)
    counts["three_systems"] = m * m
    counts["theorem_soundness"] = m * m
    counts["equal_support"] = int(equal_support.sum())

    masks = _witness_masks(u, mats)
    witnesses = {}
    for kind, mask in masks.items():
        pairs = _pairs(u, mask)
        named = tuple(parse_shape(s) for s in NAMED_PAIRS[kind])
        witnesses[kind] = {
            "count": len(pairs),
            "first": [[str(a), str(b)] for a, b in pairs[:10]],
        }
        if named[0].size == n:
            witnesses[kind]["named_pair"] = [str(s) for s in named]
            witnesses[kind]["named_pair_found"] = named in pairs

    report = VerificationReport(
        n=n,
        shapes=m,
        pairs=m * m,
        screen_passes=int(screen.sum()),
        support_containments=int(mats["support"].sum()),
        schur_positive=int(mats["positive"].sum()),
        checks=counts,
        violations=violations,
        witnesses=witnesses,
    )
    if not report.schur_positive <= report.support_containments <= report.screen_passes:
        report.violations.append("implication-chain counts out of order")
    report.elapsed = time.perf_counter() - start
    return report
