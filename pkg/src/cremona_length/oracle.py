"""Brute-force cross-checks for the closed-form algorithms.

None of these call into the predecessor formula or the ell recursion; they
only use the lattice moves, so agreement is meaningful.
"""
from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .homaloidal import HomaloidalType
from .lattice import LatticeClass, apply_iota, intersect, line_class

__all__ = [
    "BrutePredecessor",
    "BudgetExceeded",
    "Inconclusive",
    "SearchBudget",
    "bounded_bfs_length",
    "brute_predecessor",
    "segment_min_cut",
]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_degree: int
    max_depth: int
    max_fresh_points: int = 0
    max_states: int = 2_000_000

    def __post_init__(self):
        if min(self.max_degree, self.max_depth, self.max_fresh_points, self.max_states) < 0:
            raise ValueError("budget fields must be non-negative")


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    explored: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class BrutePredecessor:
    min_degree: int
    moves: list[tuple[int, frozenset]]
    results: frozenset[HomaloidalType]


def _subset_masks(k: int) -> np.ndarray:
    idx = np.arange(1 << k, dtype=np.int64)
    return ((idx[:, None] >> np.arange(k, dtype=np.int64)) & 1).astype(np.int64)


def brute_predecessor(t: HomaloidalType, max_points: int = 16) -> BrutePredecessor:
    """Minimal degree of ``iota_{q,D}(a)`` over every base point ``q`` and
    every even subset ``D`` of the other base points.

    Degrees come from ``deg iota(a) = a . iota(e0)`` and are evaluated for all
    subsets at once; each minimizer is then rebuilt with :func:`apply_iota`
    and checked against that value.
    """
    if t.degree < 2:
        raise ValueError("need degree >= 2")
    r = len(t.mults)
    if r > max_points:
        raise BudgetExceeded(f"{r} base points exceeds the brute-force limit {max_points}")
    a = LatticeClass.from_list(t.degree, t.mults)
    m = np.array(t.mults, dtype=np.int64)
    best = None
    moves: list[tuple[int, frozenset]] = []
    for q in range(r):
        others = [i for i in range(r) if i != q]
        masks = _subset_masks(len(others))
        size = masks.sum(axis=1)
        even = size % 2 == 0
        masks, size = masks[even], size[even]
        n = size // 2
        # iota(e0) = (n+1) e0 - n e_q - sum_D e_r
        degs = (n + 1) * t.degree - n * m[q] - masks @ m[others]
        low = int(degs.min())
        if best is None or low < best:
            best, moves = low, []
        if low == best:
            for row in np.flatnonzero(degs == low):
                delta = frozenset(others[j] for j in np.flatnonzero(masks[row]))
                moves.append((q, delta))
    results = set()
    for q, delta in moves:
        image = apply_iota(a, q, delta)
        check = intersect(a, apply_iota(line_class(), q, delta))
        if image.degree != best or check != best:
            raise AssertionError(f"degree mismatch for iota_({q},{sorted(delta)}) on {t}")
        results.add(HomaloidalType(image.degree, image.sorted_mults()))
    return BrutePredecessor(best, moves, frozenset(results))


def _sub_multisets(counts: list[tuple[int, int]]):
    """All sub-multisets of ``{value: count}`` as lists of (value, k)."""
    ranges = [range(c + 1) for _, c in counts]
    for pick in itertools.product(*ranges):
        yield [(v, k) for (v, _), k in zip(counts, pick) if k]


def _moves(d: int, ms: tuple[int, ...], fresh: int):
    """Canonical results of all iota moves on the class ``(d; ms)``.

    Points with equal multiplicity are interchangeable, so ``q`` ranges over
    distinct values (or a fresh point) and ``D`` over sub-multisets.
    """
    a = LatticeClass.from_list(d, ms)
    by_value: dict[int, list[int]] = {}
    for label, v in enumerate(ms):
        by_value.setdefault(v, []).append(label)
    fresh_labels = [len(ms) + i for i in range(fresh)]
    q_choices = [(v, labels[0], 0) for v, labels in by_value.items()]
    if fresh:
        q_choices.append((0, fresh_labels[0], 1))
    seen = set()
    for _, q, used in q_choices:
        pool = Counter(ms)
        if not used:
            pool[ms[q]] -= 1
        counts = [(v, c) for v, c in pool.items() if c > 0]
        spare = fresh - used
        for sub in _sub_multisets(counts):
            for extra in range(spare + 1):
                size = sum(k for _, k in sub) + extra
                if size == 0 or size % 2:
                    continue
                delta = []
                for v, k in sub:
                    delta.extend([x for x in by_value[v] if x != q][:k])
                delta.extend(fresh_labels[used: used + extra])
                b = apply_iota(a, q, delta)
                key = (b.degree, b.sorted_mults())
                if key not in seen:
                    seen.add(key)
                    yield key


def bounded_bfs_length(t: HomaloidalType, budget: SearchBudget) -> int | Inconclusive:
    """Shortest number of iota moves from ``t`` to the line class.

    States are taken modulo relabelling (degree plus sorted multiplicities);
    states above ``budget.max_degree``, below degree 1, or carrying a negative
    multiplicity are discarded.
    """
    start = (t.degree, tuple(t.mults))
    target = (1, ())
    if start == target:
        return 0
    seen = {start}
    frontier = [start]
    for depth in range(1, budget.max_depth + 1):
        nxt = []
        for d, ms in frontier:
            for key in _moves(d, ms, budget.max_fresh_points):
                if key == target:
                    return depth
                nd, nms = key
                if nd < 1 or nd > budget.max_degree or (nms and nms[-1] < 0) or key in seen:
                    continue
                seen.add(key)
                nxt.append(key)
                if len(seen) > budget.max_states:
                    return Inconclusive("state budget exhausted", len(seen))
        if not nxt:
            return Inconclusive("frontier empty within degree bound", len(seen))
        frontier = nxt
    return Inconclusive(f"depth {budget.max_depth} reached", len(seen))


_GENERATOR_SHAPE = re.compile(r"R+|L+|LR+|RL+")


def segment_min_cut(word) -> int:
    """Fewest contiguous pieces of the letter string of ``M(word)``, each of
    shape ``R^s``, ``L^s``, ``LR^s`` or ``RL^s``."""
    blocks = [("R" if i % 2 == 0 else "L") * s for i, s in enumerate(word)]
    text = "".join(reversed(blocks))
    n = len(text)
    best = [0] + [n + 1] * n
    for i in range(1, n + 1):
        for j in range(i):
            if best[j] + 1 < best[i] and _GENERATOR_SHAPE.fullmatch(text, j, i):
                best[i] = best[j] + 1
    return best[n]
