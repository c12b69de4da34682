from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gaussian_codes.gaussian import (
    GaussianInt,
    associates,
    mannheim_weight,
    parse_gaussian,
    round_div,
    units,
)

G = GaussianInt
small = st.integers(-10**6, 10**6)
gauss = st.builds(G, small, small)
nonzero = gauss.filter(bool)


def nearest_by_enumeration(z, w):
    """Componentwise-nearest Gaussian integer to z/w, searched over a +-2 box."""
    n = w.norm()
    t = z * w.conj()
    tr, ti = Fraction(t.re, n), Fraction(t.im, n)
    base_r, base_i = int(tr), int(ti)
    best = None
    for dr in range(-2, 3):
        for di in range(-2, 3):
            q = (base_r + dr, base_i + di)
            # ties broken toward the larger component
            score = (abs(q[0] - tr), -q[0], abs(q[1] - ti), -q[1])
            if best is None or score < best[0]:
                best = (score, q)
    return G(*best[1])


def test_add():
    assert G(2, 1) + G(0, 0) == G(2, 1)
    assert G(3, 4) + G(-3, -4) == G(0, 0)
    assert G(1, -2) + G(-2, 1) == G(-1, -1)


def test_mul():
    assert G(2, 1) * G(2, -1) == G(5, 0)
    assert G(2, 1) * G(2, 1) == G(3, 4)
    assert G(0, 1) * G(2, -1) == G(1, 2)


def test_conj_and_norm():
    assert G(2, 1).conj() == G(2, -1)
    assert G(5, 0).conj() == G(5, 0)
    assert G(3, 4).conj().conj() == G(3, 4)
    assert G(2, 1).norm() == 5
    assert G(3, 2).norm() == 13
    assert G(0, 0).norm() == 0


def test_units_order_and_associates():
    assert units() == [G(1, 0), G(0, 1), G(-1, 0), G(0, -1)]
    x3 = G(0, 0)  # associates of zero
    assert associates(x3) == {G(0, 0)}
    assert associates(G(1, 0)) == set(units())


@pytest.mark.parametrize(
    "z, w, expected",
    [
        (G(3, 0), G(2, 1), G(1, -1)),
        (G(0, 0), G(7, -3), G(0, 0)),
        (G(32, 0), G(3, 4), G(4, -5)),
    ],
)
def test_round_div_examples(z, w, expected):
    assert nearest_by_enumeration(z, w) == expected
    assert round_div(z, w) == expected


def test_round_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        round_div(G(1, 1), G(0, 0))


def test_round_div_ties_go_up():
    assert round_div(G(1, 0), G(2, 0)) == G(1, 0)
    assert round_div(G(-1, 0), G(2, 0)) == G(0, 0)
    assert round_div(G(1, 1), G(2, 0)) == G(1, 1)


def test_mannheim_weight():
    assert mannheim_weight(G(-2, 1)) == 3
    assert mannheim_weight(G(0, 0)) == 0
    assert all(mannheim_weight(u) == 1 for u in units())


@pytest.mark.parametrize(
    "text, value",
    [("3+1i", G(3, 1)), ("1-1i", G(1, -1)), ("-2", G(-2, 0)), ("3i", G(0, 3)), ("-i", G(0, -1)),
     ("i", G(0, 1)), ("-3-1i", G(-3, -1)), ("2+i", G(2, 1)), ("0", G(0, 0))],
)
def test_parse(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1+", "1+2", "1.5+2i"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_gaussian(text)


def test_display_round_trips():
    for z in [G(-2, 1), G(3, 0), G(0, -4)]:
        assert parse_gaussian(str(z)) == z
    assert str(G(-2, 1)) == "-2+1i"


@given(gauss, nonzero)
def test_round_div_matches_enumeration(z, w):
    assert round_div(z, w) == nearest_by_enumeration(z, w)


@given(gauss, nonzero)
def test_rounded_remainder_is_smaller(z, w):
    r = z - round_div(z, w) * w
    assert r.norm() < w.norm()


@given(gauss, gauss)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(gauss, gauss)
def test_conj_is_multiplicative(x, y):
    assert (x * y).conj() == x.conj() * y.conj()


@given(gauss)
def test_weight_unit_invariant(z):
    assert {mannheim_weight(a) for a in associates(z)} == {mannheim_weight(z)}
