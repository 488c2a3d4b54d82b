"""Homaloidal types and the length algorithm.

A homaloidal type ``(d; m0, m1, ..., mr)`` is stored canonically: the
multiplicities are positive and non-increasing, and the degree-1 type has
no multiplicities at all.  The length of a type is the number of
predecessor steps needed to reach ``(1)``.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cache

from . import _kernels
from .lattice import LatticeClass, apply_iota

__all__ = [
    "IDENTITY",
    "DegreeOne",
    "HomaloidalType",
    "HudsonResult",
    "NegativeEntry",
    "NoetherViolation",
    "NotProper",
    "TableRow",
    "TypeError_",
    "castelnuovo_chain",
    "castelnuovo_predecessor",
    "chain",
    "comultiplicity",
    "enumerate_types",
    "format_type",
    "homaloidal_type",
    "hudson_is_proper",
    "is_jonquieres",
    "length",
    "parse_and_canonicalize",
    "parse_type_text",
    "predecessor",
    "predecessor_for",
    "s_set",
    "table_rows",
    "type_labels",
    "wright_distance",
]

log = logging.getLogger(__name__)


class TypeError_(ValueError):
    """Base class for rejected homaloidal-type candidates."""


class NoetherViolation(TypeError_):
    pass


class NegativeEntry(TypeError_):
    pass


class NotProper(TypeError_):
    """Noether-valid data that the Hudson descent rejects; carries the trace."""

    def __init__(self, message: str, trace: list[tuple[int, tuple[int, ...]]]):
        super().__init__(message)
        self.trace = trace


class DegreeOne(ValueError):
    """Raised by operations that need a type of degree at least 2."""


@dataclass(frozen=True, order=False)
class HomaloidalType:
    degree: int
    mults: tuple[int, ...] = ()

    def __str__(self) -> str:
        return format_type(self.degree, self.mults)

    @property
    def r(self) -> int:
        """Number of base points."""
        return len(self.mults)


IDENTITY = HomaloidalType(1, ())


# ------------------------------------------------------------------ grammar

_TYPE_RE = re.compile(r"^\((-?\d+)(?:;(.+))?\)$", re.DOTALL)
_ENTRY_RE = re.compile(r"^(-?\d+)(?:\^(\d+))?$")


def parse_type_text(text: str) -> tuple[int, list[int]]:
    """Parse ``(d; m1^e1, m2, ...)`` into the degree and the expanded list.

    Whitespace is ignored; ``^e`` repeats an entry ``e`` times.
    """
    compact = re.sub(r"\s+", "", text)
    match = _TYPE_RE.match(compact)
    if not match:
        raise SyntaxError(f"cannot parse homaloidal type {text!r}")
    degree = int(match.group(1))
    body = match.group(2)
    mults: list[int] = []
    if body:
        for item in body.split(","):
            entry = _ENTRY_RE.match(item)
            if not entry:
                raise SyntaxError(f"bad multiplicity entry {item!r} in {text!r}")
            value = int(entry.group(1))
            reps = int(entry.group(2)) if entry.group(2) is not None else 1
            mults.extend([value] * reps)
    return degree, mults


def format_type(degree: int, mults) -> str:
    """Render with ASCII repetition, e.g. ``(17; 6^8)``; degree one is ``(1)``."""
    ms = sorted(mults, reverse=True)
    if not ms:
        return f"({degree})"
    parts = []
    for value, group in _runs(ms):
        parts.append(str(value) if group == 1 else f"{value}^{group}")
    return f"({degree}; {', '.join(parts)})"


def _runs(ms):
    out = []
    for m in ms:
        if out and out[-1][0] == m:
            out[-1][1] += 1
        else:
            out.append([m, 1])
    return [(v, n) for v, n in out]


# --------------------------------------------------------------- validation

@dataclass(frozen=True)
class HudsonResult:
    proper: bool
    trace: list[tuple[int, tuple[int, ...]]]
    reason: str = ""

    def __bool__(self) -> bool:
        return self.proper


def hudson_is_proper(degree: int, mults) -> HudsonResult:
    """Hudson descent: apply the quadratic involution at the three largest
    multiplicities until the line class is reached or a negative degree or
    multiplicity shows up.

    The input is assumed to satisfy the Noether equalities.  Each trace entry
    is ``(degree, multiplicities)`` with zeros removed and negatives kept.
    """
    d = degree
    ms = sorted((m for m in mults if m != 0), reverse=True)
    trace = [(d, tuple(ms))]
    while True:
        if d == 1 and not ms:
            return HudsonResult(True, trace)
        if d < 1:
            return HudsonResult(False, trace, f"degree {d} < 1")
        if ms and ms[-1] < 0:
            return HudsonResult(False, trace, f"negative multiplicity {ms[-1]}")
        top = (ms + [0, 0, 0])[:3]
        excess = d - sum(top)
        if excess >= 0:
            return HudsonResult(False, trace, "no Noether inequality")
        d += excess
        rest = ms[3:]
        ms = sorted((m for m in [top[0] + excess, top[1] + excess, top[2] + excess] + rest if m != 0),
                    reverse=True)
        trace.append((d, tuple(ms)))


def parse_and_canonicalize(degree: int, raw_mults) -> HomaloidalType:
    """Sort, drop zeros, and check the Noether equalities, positivity and
    properness.  Raises a :class:`TypeError_` subclass on rejection."""
    ms = sorted((int(m) for m in raw_mults if m != 0), reverse=True)
    if degree < 1:
        raise NegativeEntry(f"degree {degree} must be positive")
    if ms and ms[-1] < 0:
        raise NegativeEntry(f"negative multiplicity {ms[-1]} in {format_type(degree, ms)}")
    if sum(ms) != 3 * (degree - 1) or sum(m * m for m in ms) != degree * degree - 1:
        raise NoetherViolation(
            f"{format_type(degree, ms)}: sum={sum(ms)} (need {3 * (degree - 1)}), "
            f"sum of squares={sum(m * m for m in ms)} (need {degree * degree - 1})"
        )
    if len(ms) >= 2 and ms[0] + ms[1] > degree:
        raise NotProper(f"{format_type(degree, ms)}: m0 + m1 > d",
                        hudson_is_proper(degree, ms).trace)
    verdict = hudson_is_proper(degree, ms)
    if not verdict:
        raise NotProper(f"{format_type(degree, ms)} fails the Hudson test ({verdict.reason})", verdict.trace)
    return HomaloidalType(degree, tuple(ms))


def homaloidal_type(text_or_degree, mults=None) -> HomaloidalType:
    """Convenience constructor from ``"(d; ...)"`` text or ``(d, mults)``."""
    if mults is None and isinstance(text_or_degree, str):
        return parse_and_canonicalize(*parse_type_text(text_or_degree))
    return parse_and_canonicalize(text_or_degree, mults or ())


# ----------------------------------------------------------- predecessors

def _padded(ms, i):
    return ms[i] if i < len(ms) else 0


def s_set(t: HomaloidalType) -> list[int]:
    """All ``s`` in ``[1, r/2]`` with ``m0+m(2s-1)+m(2s) >= d >= m0+m(2s+1)+m(2s+2)``.

    Indices follow ``m0 >= m1 >= ... >= mr`` with ``m_i = 0`` beyond ``r``.
    """
    if t.degree < 2:
        raise DegreeOne("the degree-1 type has no predecessor set")
    d, ms = t.degree, t.mults
    r = len(ms) - 1
    m0 = ms[0]
    found = []
    for s in range(1, r // 2 + 1):
        upper = m0 + _padded(ms, 2 * s - 1) + _padded(ms, 2 * s)
        lower = m0 + _padded(ms, 2 * s + 1) + _padded(ms, 2 * s + 2)
        if upper >= d >= lower:
            found.append(s)
    return found


def predecessor_for(t: HomaloidalType, s: int) -> HomaloidalType:
    """Closed-form result of the Jonquieres move at ``m0`` and ``m1..m(2s)``."""
    d, ms = t.degree, t.mults
    m0 = ms[0]
    eps = sum(m0 + ms[2 * i - 1] + ms[2 * i] - d for i in range(1, s + 1))
    new = [m0 - eps] + [d - m0 - ms[i] for i in range(1, 2 * s + 1)] + list(ms[2 * s + 1:])
    return HomaloidalType(d - eps, tuple(sorted((m for m in new if m != 0), reverse=True)))


def predecessor(t: HomaloidalType) -> HomaloidalType:
    """The unique predecessor type, using the smallest admissible ``s``."""
    if t.degree < 2:
        raise DegreeOne("the degree-1 type has no predecessor")
    candidates = s_set(t)
    if not candidates:
        raise AssertionError(f"empty s-set for {t}; input is not a proper type")
    return predecessor_for(t, candidates[0])


def castelnuovo_predecessor(t: HomaloidalType) -> HomaloidalType:
    """Castelnuovo reduction at a point ``p`` of maximal multiplicity.

    The major points are ``M = {q != p : m_p + 2 m_q > d}``.  The Jonquieres
    move uses all of ``M`` when ``|M|`` is even, and otherwise drops one
    element of minimal multiplicity.
    """
    if t.degree < 2:
        raise DegreeOne("the degree-1 type has no Castelnuovo-predecessor")
    d, ms = t.degree, t.mults
    a = LatticeClass.from_list(d, ms)
    major = [i for i in range(1, len(ms)) if ms[0] + 2 * ms[i] > d]
    if len(major) < 2:
        raise AssertionError(f"fewer than two major points for {t}")
    if len(major) % 2:
        # labels are sorted by multiplicity, so the last one is minimal
        major = major[:-1]
    b = apply_iota(a, 0, major)
    return HomaloidalType(b.degree, b.sorted_mults())


def chain(t: HomaloidalType) -> list[HomaloidalType]:
    """Predecessor chain from ``t`` down to ``(1)``, both ends included."""
    steps = [t]
    while steps[-1].degree > 1:
        nxt = predecessor(steps[-1])
        if nxt.degree >= steps[-1].degree:
            raise AssertionError(f"predecessor of {steps[-1]} did not lower the degree")
        steps.append(nxt)
    return steps


def castelnuovo_chain(t: HomaloidalType) -> list[HomaloidalType]:
    steps = [t]
    while steps[-1].degree > 1:
        steps.append(castelnuovo_predecessor(steps[-1]))
    return steps


@cache
def length(t: HomaloidalType) -> int:
    """Minimal number of Jonquieres factors."""
    if t.degree == 1:
        return 0
    return 1 + length(predecessor(t))


def wright_distance(t: HomaloidalType) -> int:
    """Distance to the base vertex in the graph of Wright: twice the length."""
    return 2 * length(t)


def comultiplicity(t: HomaloidalType) -> int:
    return t.degree - (t.mults[0] if t.mults else 0)


def is_jonquieres(t: HomaloidalType) -> bool:
    d = t.degree
    if d == 1:
        return True
    return t.mults == (d - 1,) + (1,) * (2 * d - 2)


# ------------------------------------------------------------- enumeration

@cache
def _enumerate_cached(d: int) -> tuple[HomaloidalType, ...]:
    return tuple(HomaloidalType(d, ms) for ms in _kernels.enumerate_proper(d))


def enumerate_types(d: int) -> list[HomaloidalType]:
    """Every proper homaloidal type of degree exactly ``d``.

    Ordered anti-lexicographically by multiplicities, so the Jonquieres type
    comes first.  Types whose predecessor set has three or more elements are
    reported through the module logger.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    types = list(_enumerate_cached(d))
    if log.isEnabledFor(logging.INFO):
        for t in types:
            if t.degree > 1 and len(s_set(t)) >= 3:
                log.info("s-set with %d elements for %s", len(s_set(t)), t)
    return types


@cache
def type_labels(max_degree: int) -> dict[HomaloidalType, str]:
    """Table labels: ``d`` for the Jonquieres type, ``d.i`` for the others."""
    labels: dict[HomaloidalType, str] = {}
    for d in range(1, max_degree + 1):
        i = 0
        for t in enumerate_types(d):
            if is_jonquieres(t):
                labels[t] = str(d)
            else:
                i += 1
                labels[t] = f"{d}.{i}"
    return labels


@dataclass(frozen=True)
class TableRow:
    label: str
    type: HomaloidalType
    length: int
    predecessor: str | None
    castelnuovo: str | None

    def as_text(self) -> str:
        pred = self.predecessor or ""
        if self.castelnuovo is not None:
            pred = f"{pred} ({self.castelnuovo})"
        return f"{self.label}\t{self.type}\t{self.length}\t{pred}"

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "degree": self.type.degree,
            "mults": list(self.type.mults),
            "length": self.length,
            "predecessor": self.predecessor,
            "castelnuovo": self.castelnuovo,
        }


def table_rows(d: int) -> list[TableRow]:
    """Rows of the length table for degree ``d``.

    The Castelnuovo label is filled only when it differs from the
    predecessor label.
    """
    labels = type_labels(d)
    rows = []
    for t in enumerate_types(d):
        if d == 1:
            rows.append(TableRow(labels[t], t, 0, None, None))
            continue
        pred = labels[predecessor(t)]
        cast = labels[castelnuovo_predecessor(t)]
        rows.append(TableRow(labels[t], t, length(t), pred, cast if cast != pred else None))
    return rows
