import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cremona_length import homaloidal as H
from cremona_length.lattice import LatticeClass, comult

from .strategies import proper_types

T = H.homaloidal_type


# ---------------------------------------------------------------- grammar

@pytest.mark.parametrize(
    "text, degree, mults",
    [
        ("(17; 6^8)", 17, [6] * 8),
        ("(5; 3, 2^3, 1^3)", 5, [3, 2, 2, 2, 1, 1, 1]),
        ("(1)", 1, []),
        ("( 5 ;2 ^ 6 )", 5, [2] * 6),
        ("(-7; -2^12)", -7, [-2] * 12),
    ],
)
def test_parse_type_text(text, degree, mults):
    assert H.parse_type_text(text) == (degree, mults)


@pytest.mark.parametrize("bad", ["17; 6^8", "(17; 6^)", "(17; a)", "(17;)", "()", "(1; 2,,3)"])
def test_parse_type_text_rejects(bad):
    with pytest.raises(SyntaxError):
        H.parse_type_text(bad)


def test_format_type():
    assert H.format_type(17, [6] * 8) == "(17; 6^8)"
    assert H.format_type(1, []) == "(1)"
    assert H.format_type(5, [1, 2, 3, 2, 2, 1, 1]) == "(5; 3, 2^3, 1^3)"


@given(proper_types())
def test_format_parse_round_trip(t):
    assert T(str(t)) == t


# ------------------------------------------------------------- validation

def test_parse_and_canonicalize_sorts_and_drops_zeros():
    assert H.parse_and_canonicalize(5, [2, 0, 2, 2, 2, 2, 2]) == H.HomaloidalType(5, (2,) * 6)


def test_rejections_are_classified():
    with pytest.raises(H.NoetherViolation):
        H.parse_and_canonicalize(3, [1, 1, 1])
    with pytest.raises(H.NotProper) as info:
        H.parse_and_canonicalize(7, [4, 4, 3] + [1] * 7)
    assert info.value.trace[-1] == (3, (1,) * 7 + (-1,))
    with pytest.raises(H.NegativeEntry):
        H.parse_and_canonicalize(3, [1] * 7 + [-1])
    with pytest.raises(H.NegativeEntry):
        H.parse_and_canonicalize(-7, [-2] * 12)


def test_hudson_examples():
    assert H.hudson_is_proper(1, [])
    assert H.hudson_is_proper(8, [3] * 7)
    bad = H.hudson_is_proper(7, [3, 4, 4] + [1] * 7)
    assert not bad
    assert bad.trace == [(7, (4, 4, 3) + (1,) * 7), (3, (1,) * 7 + (-1,))]
    assert not H.hudson_is_proper(-7, [-2] * 12)
    assert not H.hudson_is_proper(3, [1] * 7 + [-1])


def test_hudson_rejects_without_noether_inequality():
    # (3; 1^8, ...) style data: Noether equalities but no three points summing above d
    verdict = H.hudson_is_proper(4, [1] * 9 + [0])
    assert not verdict.proper


# ---------------------------------------------------------- predecessors

def test_s_set_examples():
    assert H.s_set(T("(4; 2^3, 1^3)")) == [1, 2]
    assert H.s_set(T("(2; 1^3)")) == [1]
    assert H.s_set(T("(5; 3, 2^3, 1^3)")) == [2, 3]
    with pytest.raises(H.DegreeOne):
        H.s_set(H.IDENTITY)


@pytest.mark.parametrize(
    "src, dst",
    [
        ("(5; 2^6)", "(3; 2, 1^4)"),
        ("(17; 6^8)", "(14; 6, 5^6, 3)"),
        ("(4; 2^3, 1^3)", "(2; 1^3)"),
        ("(38; 18, 13^3, 12^4, 6)", "(23; 12, 8^3, 7^3, 6, 3)"),
        ("(16; 6^5, 5^3)", "(12; 5^3, 4^4, 2)"),
        ("(74; 28, 27^5, 19^2, 18)", "(58; 27, 19^6, 18, 12)"),
    ],
)
def test_predecessor_examples(src, dst):
    assert H.predecessor(T(src)) == T(dst)


@pytest.mark.parametrize("d", range(2, 11))
def test_jonquieres_predecessor_is_identity(d):
    t = T(f"({d}; {d - 1}, 1^{2 * d - 2})")
    assert H.predecessor(t) == H.IDENTITY
    assert H.castelnuovo_predecessor(t) == H.IDENTITY
    assert H.is_jonquieres(t)


def test_castelnuovo_examples():
    assert H.castelnuovo_predecessor(T("(5; 3, 2^3, 1^3)")) == T("(3; 2, 1^4)")
    assert H.castelnuovo_predecessor(T("(8; 4, 3^5, 1^2)")) == T("(4; 3, 1^6)")
    with pytest.raises(H.DegreeOne):
        H.castelnuovo_predecessor(H.IDENTITY)


def test_length_examples():
    assert H.length(T("(17; 6^8)")) == 5
    assert H.length(T("(19; 7^7, 4, 1)")) == 4
    assert H.length(H.IDENTITY) == 0
    assert H.length(T("(184; 75, 61^6, 60, 48)")) == 9


def test_is_jonquieres_examples():
    assert H.is_jonquieres(T("(5; 4, 1^8)"))
    assert not H.is_jonquieres(T("(4; 2^3, 1^3)"))
    assert H.is_jonquieres(H.IDENTITY)


def test_wright_distance():
    assert H.wright_distance(H.IDENTITY) == 0
    assert H.wright_distance(T("(2; 1^3)")) == 2
    assert H.wright_distance(T("(7; 3^4, 2^3)")) == 6


# ------------------------------------------------------------ enumeration

def test_enumerate_small_degrees():
    assert H.enumerate_types(1) == [H.IDENTITY]
    assert set(H.enumerate_types(5)) == {T("(5; 4, 1^8)"), T("(5; 3, 2^3, 1^3)"), T("(5; 2^6)")}
    assert len(H.enumerate_types(10)) == 17
    assert len(H.enumerate_types(12)) == 29
    with pytest.raises(ValueError):
        H.enumerate_types(0)


def test_enumeration_is_anti_lexicographic_and_unique():
    for d in range(2, 25):
        types = H.enumerate_types(d)
        keys = [t.mults for t in types]
        assert keys == sorted(keys, reverse=True)
        assert len(set(keys)) == len(keys)


def test_enumeration_logs_large_s_sets(caplog):
    with caplog.at_level(logging.INFO, logger="cremona_length.homaloidal"):
        H.enumerate_types(9)
    # no type of small degree has three or more admissible s
    assert not [r for r in caplog.records if "s-set" in r.getMessage()]


def test_labels():
    labels = H.type_labels(7)
    assert labels[T("(7; 6, 1^12)")] == "7"
    assert labels[T("(7; 3^4, 2^3)")] == "7.4"
    assert labels[H.IDENTITY] == "1"


# -------------------------------------------------------------- properties

@given(proper_types())
def test_random_walk_types_pass_hudson_and_enumeration(t):
    assert H.hudson_is_proper(t.degree, t.mults)
    if t.degree <= 25:
        assert t in H.enumerate_types(t.degree)


@given(proper_types())
def test_every_admissible_s_gives_the_same_predecessor(t):
    if t.degree > 1:
        results = {H.predecessor_for(t, s) for s in H.s_set(t)}
        assert results == {H.predecessor(t)}


@given(proper_types())
def test_s_set_is_nonempty_and_consecutive(t):
    if t.degree > 1:
        s = H.s_set(t)
        assert s and s == list(range(s[0], s[-1] + 1))


@given(proper_types())
def test_chain_invariants(t):
    steps = H.chain(t)
    assert steps[-1] == H.IDENTITY
    for a, b in zip(steps, steps[1:]):
        assert b.degree < a.degree
        assert H.comultiplicity(b) <= H.comultiplicity(a)
        H.parse_and_canonicalize(b.degree, b.mults)


@given(proper_types())
def test_castelnuovo_agrees_with_greedy(t):
    assert len(H.castelnuovo_chain(t)) == len(H.chain(t))


@given(proper_types())
def test_jonquieres_characterizations(t):
    n = H.length(t)
    j = H.is_jonquieres(t)
    assert j == (n <= 1)
    if t.degree >= 2:
        assert j == (comult(LatticeClass.from_list(t.degree, t.mults)) == 1)


@given(proper_types())
def test_length_lower_bounds(t):
    if t.degree >= 2:
        n, r, d = H.length(t), len(t.mults), t.degree
        assert (r + 1) ** n >= d * 2 ** n
        if r <= 9:
            assert 5 * n * n >= d
        assert r <= 2 * d - 1
        assert (r == 2 * d - 1) == H.is_jonquieres(t)


@given(st.integers(2, 16))
def test_table_rows_round_trip(d):
    for row in H.table_rows(d):
        assert T(str(row.type)) == row.type
