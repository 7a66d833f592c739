from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from bnlab import modulipic as mp
from bnlab.errors import GenusMismatch, NegativeCoefficient, SpaceMismatch

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def _vector(draw_list, g, space):
    return dict(zip(mp.generators(g, space), draw_list))


@st.composite
def classes(draw, g, space="C"):
    names = mp.generators(g, space)
    coeffs = draw(st.lists(rationals, min_size=len(names), max_size=len(names)))
    cls = mp.UCClass if space == "C" else mp.MgClass
    return cls.from_dict(g, _vector(coeffs, g, space))


@st.composite
def pencils(draw, g, space="C"):
    names = mp.generators(g, space)
    coeffs = draw(st.lists(rationals, min_size=len(names), max_size=len(names)))
    return mp.PencilNumbers.from_dict(g, _vector(coeffs, g, space), space=space)


def test_generators():
    assert mp.generators(4, "C") == ("lambda", "psi", "delta_irr", "delta_1", "delta_2", "delta_3")
    assert mp.generators(5, "M") == ("lambda", "delta_irr", "delta_1", "delta_2")
    with pytest.raises(ValueError):
        mp.generators(3, "X")


@pytest.mark.parametrize("g", range(2, 51))
def test_pencil_tables(g):
    j = mp.duval_pencil(g)
    assert (j["lambda"], j["psi"], j["delta_irr"], j["delta_1"]) == (g, 1, 6 * (g + 1), 1)
    assert all(j[f"delta_{i}"] == 0 for i in range(2, g))
    iota = mp.iota_pencil(g)
    assert (iota["lambda"], iota["psi"], iota["delta_irr"]) == (g - 1, 1, 6 * (g - 1))
    if g > 2:
        assert iota["delta_1"] == iota[f"delta_{g - 1}"] == 1
        assert all(iota[f"delta_{i}"] == 0 for i in range(2, g - 1))
    else:
        assert iota["delta_1"] == 2
    bar = mp.iota_bar_pencil(g)
    assert (bar["lambda"], bar["delta_irr"], bar["delta_1"]) == (g - 1, 6 * (g - 1), 2)
    assert mp.forget_point(iota) == bar


@pytest.mark.parametrize("g", range(2, 51))
def test_zero_pairings(g):
    # hand-expanded oracles: the only nonzero pencil entries are lambda, psi, delta_irr, delta_1(, delta_{g-1})
    W = -g + comb(g + 1, 2) - comb(g, 2)
    BN = (g + 3) * g - Fraction(g + 1, 6) * 6 * (g + 1) - (g - 1)
    assert W == 0 and BN == 0
    for p in (mp.duval_pencil(g), mp.iota_pencil(g)):
        assert mp.pair(p, mp.bn_class(g)) == 0
        assert mp.pair(p, mp.weierstrass_class(g)) == 0


def test_weierstrass_coefficients_decrease():
    for g in range(2, 20):
        W = mp.weierstrass_class(g)
        assert W["lambda"] == -1 and W["psi"] == comb(g + 1, 2)
        mags = [abs(W[f"delta_{i}"]) for i in range(1, g)]
        assert all(a > b for a, b in zip(mags, mags[1:]))
        assert mags[-1] == 1


def test_bn_class_symmetric():
    for g in range(2, 20):
        B = mp.bn_class(g)
        assert all(B[f"delta_{i}"] == B[f"delta_{g - i}"] for i in range(1, g))
        assert mp.pullback_pi(mp.MgClass.from_dict(g, {n: B[n] for n in mp.generators(g, "M")})) == B


def test_z10():
    assert mp.pair(mp.duval_pencil(10), mp.z10_class()) == -1
    assert mp.pair(mp.duval_pencil(10), mp.z10_class_truncated()) == -261
    Z = mp.z10_class()
    assert Z["psi"] == 0
    assert Z["delta_1"] == Z["delta_9"] == -5


def test_k3_pencil_numbers():
    for g in range(2, 12):
        R = mp.k3_pencil(g)
        assert (R["lambda"], R["delta_irr"]) == (g + 1, 6 * g + 18)
        assert R.delta_total == 6 * g + 18


def test_pointed_cone():
    g = 6
    c = mp.pointed_bn_cone(2, Fraction(1, 3), g)
    assert c == 2 * mp.weierstrass_class(g) + Fraction(1, 3) * mp.bn_class(g)
    assert mp.pair(mp.duval_pencil(g), c) == 0
    with pytest.raises(NegativeCoefficient):
        mp.pointed_bn_cone(-1, 1, g)


def test_pair_guards():
    with pytest.raises(GenusMismatch):
        mp.pair(mp.duval_pencil(3), mp.bn_class(4))
    with pytest.raises(SpaceMismatch):
        mp.pair(mp.iota_bar_pencil(4), mp.bn_class(4))
    with pytest.raises(SpaceMismatch):
        mp.forget_point(mp.iota_bar_pencil(4))


@settings(max_examples=60)
@given(st.data(), st.integers(2, 9), rationals, rationals)
def test_pairing_bilinear(data, g, s, t):
    a, b = data.draw(classes(g)), data.draw(classes(g))
    p, q = data.draw(pencils(g)), data.draw(pencils(g))
    assert mp.pair(p, s * a + t * b) == s * mp.pair(p, a) + t * mp.pair(p, b)
    assert mp.pair(s * p + t * q, a) == s * mp.pair(p, a) + t * mp.pair(q, a)


@settings(max_examples=60)
@given(st.data(), st.integers(2, 12))
def test_pullback_functoriality(data, g):
    m = data.draw(classes(g, "M"))
    p = data.draw(pencils(g))
    assert mp.pair(mp.forget_point(p), m) == mp.pair(p, mp.pullback_pi(m))


@settings(max_examples=40)
@given(st.data(), st.integers(2, 9), rationals)
def test_pullback_linear(data, g, s):
    a, b = data.draw(classes(g, "M")), data.draw(classes(g, "M"))
    assert mp.pullback_pi(a + s * b) == mp.pullback_pi(a) + s * mp.pullback_pi(b)


@settings(max_examples=40)
@given(st.data(), st.integers(2, 9))
def test_json_roundtrip(data, g):
    for obj in (data.draw(classes(g)), data.draw(classes(g, "M")), data.draw(pencils(g))):
        text = mp.to_json(obj)
        back = mp.from_json(text)
        assert back == obj and type(back) is type(obj)
        assert mp.to_json(back) == text


def test_json_labels():
    text = mp.to_json(mp.iota_pencil(5))
    assert '"label": "iota"' in text
    assert mp.from_json(text).label == "iota"
