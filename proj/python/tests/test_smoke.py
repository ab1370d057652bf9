from fractions import Fraction

import pytest

import convpoly


def test_subset_triangle():
    rows = convpoly.triangle("stirling2", 5)
    assert rows[-1] == [1, 15, 25, 10, 1]
    assert all(isinstance(v, Fraction) for v in rows[-1])


def test_explicit_coefficients():
    # f_j = 1 for every j, i.e. e^z - 1
    coeffs = [Fraction(0)] + [Fraction(1, 1)] + [Fraction(1, 2), Fraction(1, 6), Fraction(1, 24), Fraction(1, 120)]
    assert convpoly.triangle(coeffs, 5) == convpoly.triangle("stirling2", 5)


def test_half_iterate():
    got = convpoly.iterate("exp-minus-one", Fraction(1, 2), 6)
    assert got == [0, 1, Fraction(1, 4), Fraction(1, 48), 0, Fraction(1, 3840), Fraction(-7, 92160)]


def test_revert_tree():
    assert convpoly.revert("tree", 4) == [0, 1, -1, Fraction(1, 2), Fraction(-1, 6)]


def test_family_value():
    # x (x+n)^(n-1) / n! at n = 4, x = 3
    assert convpoly.family_value("tree", 4, 3) == Fraction(3 * 7**3, 24)
    # x / (x + t n) * C(x + t n, n) with t = -1, n = 3, x = 1/2
    x, t, n = Fraction(1, 2), -1, 3
    top = x + t * n
    expected = x / top * top * (top - 1) * (top - 2) / 6
    assert convpoly.family_value("catalan-t", n, x, t=t) == expected


def test_asymptotics():
    report = convpoly.compare("tree", 10, 100.0)
    assert report["ratio"] == pytest.approx(100 / 110, rel=1e-12)
    assert convpoly.saddle_point("exp", 10, 50.0) == pytest.approx(0.2)
    c = convpoly.ratio_series("tree", 2, 0)
    assert [row[0] for row in c] == [1, -1, 1]


def test_p_triangle():
    assert convpoly.p_triangle(4)[-1] == [24, 130, 210, 105]


def test_errors():
    with pytest.raises(ValueError):
        convpoly.triangle("no-such-family", 3)
    with pytest.raises(ValueError):
        convpoly.iterate([0, 2, 1], Fraction(1, 2), 4)
    with pytest.raises(convpoly.SaddleError):
        convpoly.saddle_point([0, 1, Fraction(-1, 2)], 10, 10.0, order=2)
