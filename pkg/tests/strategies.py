"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from cremona_length import monomial as M
from cremona_length.homaloidal import HomaloidalType
from cremona_length.lattice import LatticeClass, apply_sigma, line_class

LABELS = 12


@st.composite
def lattice_classes(draw, max_abs=30, labels=LABELS):
    degree = draw(st.integers(-max_abs, max_abs))
    mults = draw(st.dictionaries(st.integers(0, labels - 1), st.integers(-max_abs, max_abs), max_size=labels))
    return LatticeClass(degree, mults)


@st.composite
def distinct_triples(draw, labels=LABELS):
    return tuple(draw(st.lists(st.integers(0, labels - 1), min_size=3, max_size=3, unique=True)))


@st.composite
def even_subsets(draw, exclude, labels=LABELS):
    pool = [x for x in range(labels) if x != exclude]
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool)))
    return frozenset(chosen[: len(chosen) // 2 * 2])


@st.composite
def proper_types(draw, max_steps=10, labels=LABELS):
    """Random proper homaloidal types from walks in the orbit of the line.

    A quadratic move is kept only when every multiplicity stays non-negative,
    so the walk never leaves the proper classes.
    """
    a = line_class()
    for p1, p2, p3 in draw(st.lists(distinct_triples(labels), max_size=max_steps)):
        b = apply_sigma(a, p1, p2, p3)
        if all(m > 0 for m in b.mults.values()) and b.degree >= 1:
            a = b
    return HomaloidalType(a.degree, a.sorted_mults())


words = st.lists(st.integers(1, 12), max_size=10).map(tuple)
nonempty_words = st.lists(st.integers(1, 12), min_size=1, max_size=10).map(tuple)

_GENERATORS = [M.L, M.R, M.TAU, M.NU, -M.IDENTITY, M.L.inverse(), M.R.inverse()]


@st.composite
def gl2_matrices(draw, max_len=16):
    m = M.IDENTITY
    for g in draw(st.lists(st.sampled_from(_GENERATORS), max_size=max_len)):
        m = m @ g
    return m


@st.composite
def hyperbolic_sl2(draw):
    """det 1, trace >= 3, scrambled by a random conjugation."""
    word = draw(st.lists(st.integers(1, 6), min_size=2, max_size=8))
    if len(word) % 2:
        word = word[:-1]
    c = draw(gl2_matrices(max_len=10))
    return c @ M.word_matrix(word) @ c.inverse()
