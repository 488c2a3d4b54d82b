"""Hot loops for enumerating homaloidal types.

Two interchangeable backends compute the same thing: every non-increasing
sequence of positive integers satisfying the Noether equalities for a given
degree, filtered by the Hudson descent.  The numba backend works on int64
arrays; the pure backend uses Python ints.  Set ``CREMONA_LENGTH_PURE=1`` to
force the pure backend (numba is also skipped when it cannot be imported).
"""
from __future__ import annotations

import os

import numpy as np

__all__ = ["BACKEND", "enumerate_proper", "enumerate_proper_numba", "enumerate_proper_pure"]

# int64 safety: d^2 and 3d products must stay far below 2^63
MAX_KERNEL_DEGREE = 1 << 20

_FORCE_PURE = os.environ.get("CREMONA_LENGTH_PURE", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _FORCE_PURE:
        raise ImportError("pure backend requested")
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:
    _HAVE_NUMBA = False

BACKEND = "numba" if _HAVE_NUMBA else "pure"


# ---------------------------------------------------------------- pure path

def _hudson_pure(d: int, ms: list[int]) -> bool:
    ms = sorted(ms, reverse=True)
    while True:
        if d == 1 and not ms:
            return True
        if d < 1 or (ms and ms[-1] < 0) or len(ms) < 3:
            return False
        k = d - ms[0] - ms[1] - ms[2]
        if k >= 0:
            # no Noether inequality: not in the orbit of the line class
            return False
        d += k
        ms = sorted((m for m in [ms[0] + k, ms[1] + k, ms[2] + k] + ms[3:] if m), reverse=True)


def enumerate_proper_pure(d: int) -> list[tuple[int, ...]]:
    """All proper multiplicity vectors of degree ``d``, anti-lexicographic."""
    if d == 1:
        return [()]
    out = []
    seq: list[int] = []

    def rec(cap: int, s: int, q: int) -> None:
        if s == 0:
            if q == 0 and _hudson_pure(d, seq):
                out.append(tuple(seq))
            return
        for v in range(min(cap, s), 0, -1):
            if q > v * s:
                # remaining parts are all <= v, so sum of squares <= v * sum
                break
            s2, q2 = s - v, q - v * v
            if q2 < s2 or (q2 - s2) % 2:
                continue
            seq.append(v)
            rec(v, s2, q2)
            seq.pop()

    total, squares = 3 * (d - 1), d * d - 1
    for m0 in range(d - 1, 0, -1):
        s, q = total - m0, squares - m0 * m0
        if q < s or (q - s) % 2:
            continue
        seq.append(m0)
        rec(min(m0, d - m0), s, q)
        seq.pop()
    return out


# --------------------------------------------------------------- numba path

def _hudson_arr(d, ms, buf):
    n = ms.shape[0]
    for i in range(n):
        buf[i] = ms[i]
    while True:
        if d == 1 and n == 0:
            return True
        if d < 1 or n < 3:
            return False
        # buf[:n] is sorted non-increasing here
        if buf[n - 1] < 0:
            return False
        k = d - buf[0] - buf[1] - buf[2]
        if k >= 0:
            return False
        d += k
        buf[0] += k
        buf[1] += k
        buf[2] += k
        # re-sort descending and drop zeros
        tmp = np.sort(buf[:n])[::-1].copy()
        m = 0
        for i in range(n):
            if tmp[i] != 0:
                buf[m] = tmp[i]
                m += 1
        n = m


def _enumerate_arr(d, out):
    """Fill ``out`` rows with proper vectors; return the count or -1 on overflow."""
    width = out.shape[1]
    total = 3 * (d - 1)
    squares = d * d - 1
    seq = np.zeros(width, dtype=np.int64)
    cur = np.zeros(width + 1, dtype=np.int64)
    caps = np.zeros(width + 1, dtype=np.int64)
    rs = np.zeros(width + 1, dtype=np.int64)
    rq = np.zeros(width + 1, dtype=np.int64)
    hbuf = np.zeros(width, dtype=np.int64)
    count = 0
    for m0 in range(d - 1, 0, -1):
        s0 = total - m0
        q0 = squares - m0 * m0
        if q0 < s0 or (q0 - s0) % 2 != 0:
            continue
        seq[0] = m0
        depth = 1
        caps[1] = min(m0, d - m0)
        rs[1] = s0
        rq[1] = q0
        cur[1] = min(caps[1], s0) + 1
        while depth >= 1:
            v = cur[depth] - 1
            s = rs[depth]
            q = rq[depth]
            while v >= 1:
                if q > v * s:
                    v = 0
                    break
                s2 = s - v
                q2 = q - v * v
                if q2 >= s2 and (q2 - s2) % 2 == 0:
                    break
                v -= 1
            if v < 1:
                depth -= 1
                continue
            cur[depth] = v
            seq[depth] = v
            s2 = s - v
            q2 = q - v * v
            if s2 == 0:
                if q2 == 0 and _hudson_kernel(d, seq[: depth + 1], hbuf):
                    if count >= out.shape[0]:
                        return -1
                    for i in range(depth + 1):
                        out[count, i] = seq[i]
                    count += 1
                continue
            if depth + 1 >= width:
                continue
            depth += 1
            caps[depth] = v
            rs[depth] = s2
            rq[depth] = q2
            cur[depth] = min(v, s2) + 1
    return count


if _HAVE_NUMBA:
    _hudson_kernel = njit(cache=True)(_hudson_arr)
    _enumerate_kernel = njit(cache=True)(_enumerate_arr)
else:
    _hudson_kernel = _hudson_arr
    _enumerate_kernel = _enumerate_arr


def enumerate_proper_numba(d: int) -> list[tuple[int, ...]]:
    if not _HAVE_NUMBA:
        raise RuntimeError("numba backend unavailable")
    if d == 1:
        return [()]
    if d > MAX_KERNEL_DEGREE:
        raise OverflowError(f"degree {d} exceeds the int64 kernel limit {MAX_KERNEL_DEGREE}")
    width = 2 * d
    rows = 64
    while True:
        out = np.zeros((rows, width), dtype=np.int64)
        n = _enumerate_kernel(d, out)
        if n >= 0:
            break
        rows *= 4
    return [tuple(int(x) for x in row if x) for row in out[:n]]


def enumerate_proper(d: int) -> list[tuple[int, ...]]:
    """Dispatch to the active backend."""
    if _HAVE_NUMBA:
        return enumerate_proper_numba(d)
    return enumerate_proper_pure(d)
