"""Classes in the Picard-Manin lattice and the Weyl-group moves acting on them.

A class ``d*e0 - sum m_q e_q`` is stored as its degree ``d`` plus a sparse
mapping from point labels to the (nonzero) multiplicities ``m_q``.  Labels
carry no geometry; they are plain comparable names.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

__all__ = [
    "LatticeClass",
    "apply_iota",
    "apply_sigma",
    "canonical",
    "comult",
    "intersect",
    "line_class",
    "max_mult",
    "max_mult_points",
    "noether_check",
    "point_class",
]


def _prune(mults: Mapping) -> dict:
    return {q: m for q, m in mults.items() if m != 0}


@dataclass(frozen=True)
class LatticeClass:
    """Element ``degree*e0 - sum_q mults[q]*e_q`` of the lattice.

    Zero multiplicities are dropped on construction, so ``base()`` is
    exactly the support.  Multiplicities may be negative.
    """

    degree: int
    mults: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mults", MappingProxyType(_prune(self.mults)))

    @classmethod
    def from_list(cls, degree: int, mults: Iterable[int], labels: Iterable | None = None):
        """Materialize a multiset of multiplicities on labels ``0, 1, ...``."""
        mults = list(mults)
        if labels is None:
            labels = range(len(mults))
        return cls(degree, dict(zip(labels, mults)))

    def mult(self, q) -> int:
        return self.mults.get(q, 0)

    def base(self) -> frozenset:
        return frozenset(self.mults)

    def sorted_mults(self) -> tuple[int, ...]:
        return tuple(sorted(self.mults.values(), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, LatticeClass):
            return NotImplemented
        return self.degree == other.degree and dict(self.mults) == dict(other.mults)

    def __hash__(self):
        return hash((self.degree, frozenset(self.mults.items())))

    def __add__(self, other: LatticeClass) -> LatticeClass:
        mults = dict(self.mults)
        for q, m in other.mults.items():
            mults[q] = mults.get(q, 0) + m
        return LatticeClass(self.degree + other.degree, mults)

    def __neg__(self) -> LatticeClass:
        return LatticeClass(-self.degree, {q: -m for q, m in self.mults.items()})

    def __sub__(self, other: LatticeClass) -> LatticeClass:
        return self + (-other)

    def scale(self, k: int) -> LatticeClass:
        return LatticeClass(k * self.degree, {q: k * m for q, m in self.mults.items()})

    def __repr__(self):
        items = ", ".join(f"{q!r}: {m}" for q, m in sorted(self.mults.items(), key=lambda kv: repr(kv[0])))
        return f"LatticeClass({self.degree}; {{{items}}})"


def line_class() -> LatticeClass:
    """The class ``e0`` of a general line."""
    return LatticeClass(1, {})


def point_class(q) -> LatticeClass:
    """The exceptional class ``e_q`` (multiplicity -1 at ``q``)."""
    return LatticeClass(0, {q: -1})


def intersect(a: LatticeClass, b: LatticeClass) -> int:
    """Intersection form: ``e0.e0 = 1``, ``e_q.e_q = -1``, mixed terms vanish."""
    small, big = (a, b) if len(a.mults) <= len(b.mults) else (b, a)
    return a.degree * b.degree - sum(m * big.mult(q) for q, m in small.mults.items())


def canonical(a: LatticeClass) -> int:
    """Canonical form, ``omega(e0) = -3`` and ``omega(e_q) = -1``."""
    return -3 * a.degree + sum(a.mults.values())


def apply_sigma(a: LatticeClass, p1, p2, p3) -> LatticeClass:
    """Quadratic involution based at three distinct labels.

    Reflection ``v -> v + (xi.v) xi`` with ``xi = e0 - e_p1 - e_p2 - e_p3``.
    """
    if len({p1, p2, p3}) != 3:
        raise ValueError(f"sigma needs three distinct labels, got {(p1, p2, p3)!r}")
    m1, m2, m3 = a.mult(p1), a.mult(p2), a.mult(p3)
    d = a.degree
    mults = dict(a.mults)
    mults[p1] = d - m2 - m3
    mults[p2] = d - m1 - m3
    mults[p3] = d - m1 - m2
    return LatticeClass(2 * d - m1 - m2 - m3, mults)


def apply_iota(a: LatticeClass, q, delta: Iterable) -> LatticeClass:
    """Jonquieres involution fixing ``e0 - e_q``, with ``|delta| = 2n`` even.

    On the basis: ``e0 -> (n+1)e0 - n e_q - sum_delta e_r``,
    ``e_q -> n e0 - (n-1) e_q - sum_delta e_r``, ``e_r -> e0 - e_q - e_r``
    for ``r`` in ``delta``; every other ``e_r`` is fixed.
    """
    delta = frozenset(delta)
    if q in delta:
        raise ValueError("the Jonquieres point may not lie in delta")
    if len(delta) % 2:
        raise ValueError(f"delta must have even size, got {len(delta)}")
    if not delta:
        return a
    n = len(delta) // 2
    d, mq = a.degree, a.mult(q)
    sum_delta = sum(a.mult(r) for r in delta)
    mults = dict(a.mults)
    mults[q] = d * n - mq * (n - 1) - sum_delta
    for r in delta:
        mults[r] = d - mq - a.mult(r)
    return LatticeClass(d * (n + 1) - mq * n - sum_delta, mults)


def max_mult(a: LatticeClass) -> int:
    # unlisted labels have multiplicity 0, so the maximum is never negative
    return max(0, *a.mults.values()) if a.mults else 0


def comult(a: LatticeClass) -> int:
    """Degree minus maximal multiplicity."""
    return a.degree - max_mult(a)


def max_mult_points(a: LatticeClass) -> frozenset:
    """Labels of the support attaining a positive maximal multiplicity."""
    top = max_mult(a)
    if top == 0:
        return frozenset()
    return frozenset(q for q, m in a.mults.items() if m == top)


def noether_check(a: LatticeClass) -> bool:
    """Both Noether equalities: ``sum m = 3(d-1)`` and ``sum m^2 = d^2 - 1``."""
    ms = a.mults.values()
    return sum(ms) == 3 * (a.degree - 1) and sum(m * m for m in ms) == a.degree ** 2 - 1
