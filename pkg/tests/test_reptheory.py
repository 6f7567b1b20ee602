"""Hyperplanes, the guard, singular vectors, characters and Catalan series."""

from fractions import Fraction

import pytest

from cherednik import (
    Cyc, GroupElement, Hjk, Hx, ParamPoint, PolyRep, catalan_series,
    coinvariant_series, coxeter_number, degrees, exponents_and_freeness,
    genericity_guard, gordon_point, graded_char_L1, invariant_char_series,
    is_irreducible, jack_by_solve, l1_dimension_by_counting,
    l1_series_by_counting, on_hyperplane, radical_membership,
    singular_vector_check,
)


def test_coxeter_numbers():
    assert coxeter_number(2, 1, 2) == 4
    assert coxeter_number(3, 3, 3) == 6
    assert coxeter_number(4, 2, 2) == 6
    assert coxeter_number(3, 1, 2) == 6
    with pytest.raises(ValueError):
        coxeter_number(1, 1, 3)


def test_degrees_and_irreducibility():
    assert degrees(2, 1, 2) == [2, 4]
    assert degrees(3, 3, 2) == [2, 3]
    assert degrees(2, 1, 3) == [2, 4, 6]
    assert degrees(3, 3, 3) == [3, 3, 6]
    assert is_irreducible(3, 3, 2)
    assert not is_irreducible(2, 2, 2)
    assert not is_irreducible(1, 1, 3)
    assert is_irreducible(4, 1, 1) and not is_irreducible(3, 3, 1)


def test_gordon_point_on_target_hyperplane():
    pt = gordon_point(2, 1, 2)
    assert on_hyperplane(pt, Hjk(5, 1), 2)
    assert not on_hyperplane(pt, Hjk(3, 1), 2)
    for (r, p, n) in [(3, 1, 2), (3, 3, 2), (4, 2, 2), (2, 1, 3), (3, 3, 3)]:
        h = coxeter_number(r, p, n)
        assert on_hyperplane(gordon_point(r, p, n), Hjk(h + 1, 1), n)


def test_hx_membership():
    pt = ParamPoint.make(2, 1, 1, 0, [Fraction(1, 2)])
    for m in range(1, 7):
        for j in range(1, 3):
            assert not on_hyperplane(pt, Hx(Fraction(m, j)), 2)
    assert on_hyperplane(ParamPoint.make(2, 1, 1, Fraction(1, 2), [0]),
                         Hx(Fraction(1, 2)), 2)


def test_hyperplane_membership_is_linear_in_d():
    # r = 3: shift d by a vector keeping d_0 - d_{-j} fixed
    j, k, n = 1, 1, 2
    base = ParamPoint.make(3, 1, 1, Fraction(1, 6),
                           [Fraction(1, 2), Fraction(1, 4)])
    if not on_hyperplane(base, Hjk(j, k), n):
        # move d1 to land exactly on the hyperplane first
        # d0 - d_{-1} + 3 c0 (n-k) = j with d0 = -(d1+d2), d_{-1} = d2
        # => -(d1 + 2 d2) = j - 3 c0 (n - k)
        target = Fraction(j) - 3 * Fraction(1, 6) * (n - k)
        d2 = Fraction(1, 4)
        d1 = -(target + 2 * d2)
        base = ParamPoint.make(3, 1, 1, Fraction(1, 6), [d1, d2])
    assert on_hyperplane(base, Hjk(j, k), n)
    # shift: delta(d1) = -2 t, delta(d2) = t leaves d0 - d_{-1} unchanged
    t = Fraction(7, 5)
    shifted = ParamPoint.make(
        3, 1, 1, Fraction(1, 6),
        [base.d[0].rational_value() - 2 * t,
         base.d[1].rational_value() + t])
    assert on_hyperplane(shifted, Hjk(j, k), n)


def test_hjk_validation():
    pt = gordon_point(2, 1, 2)
    with pytest.raises(ValueError):
        on_hyperplane(pt, Hjk(4, 1), 2)  # j = 0 mod r
    with pytest.raises(ValueError):
        on_hyperplane(pt, Hjk(3, 5), 2)  # k out of range
    with pytest.raises(ValueError):
        Hjk(0, 1)


def test_guard_passes_at_gordon_points():
    g = genericity_guard(gordon_point(2, 1, 2), 5, 2, bound=20)
    assert g["ok"] and g["violations"] == []
    for (r, p, n) in [(3, 3, 2), (2, 1, 3)]:
        h = coxeter_number(r, p, n)
        g = genericity_guard(gordon_point(r, p, n), h + 1, n)
        assert g["ok"], g


def test_guard_flags_simple_spectrum():
    pt = ParamPoint.make(2, 1, 1, Fraction(1, 2), [Fraction(-9, 4)])
    # d chosen to put the point on H_{1,1}: d0 - d_{-1} + 2 c0 = 1
    g = genericity_guard(pt, 1, 2, bound=8)
    assert any("Z_>0" in v for v in g["violations"])


def test_guard_flags_second_hyperplane():
    # c1 = 3/2, c0 = 1 lies on H_{5,1} and on H_{3,2}
    pt = ParamPoint.from_c(2, 1, 1, 1, [Fraction(3, 2)])
    assert on_hyperplane(pt, Hjk(5, 1), 2)
    assert on_hyperplane(pt, Hjk(3, 2), 2)
    g = genericity_guard(pt, 5, 2, bound=20)
    assert not g["ok"]
    assert any("H_{3,2}" in v for v in g["violations"])


def test_guard_requires_kappa_one():
    pt = ParamPoint.make(2, 1, 2, Fraction(5, 4), [Fraction(-5, 4)])
    with pytest.raises(ValueError):
        genericity_guard(pt, 5, 2)


def test_radical_membership_and_dimension():
    assert not radical_membership((0, 0), 5)
    assert radical_membership((5, 0), 5)
    assert radical_membership((2, 7, 1), 5)
    assert l1_dimension_by_counting(2, 5) == 25
    series = l1_series_by_counting(2, 5, 8)
    assert series == [1, 2, 3, 4, 5, 4, 3, 2, 1]


def test_singular_vectors_at_gordon_point():
    report = singular_vector_check(2, 1, 2, gordon_point(2, 1, 2), 5)
    assert report["status"] == "pass"
    assert report["annihilated"] and report["character_match"]
    # generically the candidate vector is not singular
    gen = PolyRep(2, 1, 2)
    jv = jack_by_solve(gen, (5, 0))
    assert not gen.dunkl(0, jv.poly).is_zero()


def test_graded_character_identity_element():
    ident = GroupElement.identity(2, 2)
    gc = graded_char_L1(2, 1, 2, ident, 5)
    series = gc.series(10)
    expect = [1, 2, 3, 4, 5, 4, 3, 2, 1, 0, 0]
    assert series == [Cyc.from_rational(2, v) for v in expect]
    assert gc.at_one() == Cyc.from_rational(2, 25)
    # matches the eigenbasis count coefficientwise through the top degree
    assert l1_series_by_counting(2, 5, 8) == expect[:9]


def test_graded_character_nonidentity():
    # the transposition in G(2,1,2): V-matrix swaps the two k-th powers
    s = GroupElement.transposition(2, 2, 0, 1)
    gc = graded_char_L1(2, 1, 2, s, 5)
    # det(1 - t^5 w_V) = 1 - t^10, det(1 - t w) = 1 - t^2
    assert list(gc.num) == [Cyc.from_rational(2, v)
                            for v in [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1]]
    assert list(gc.den) == [Cyc.from_rational(2, v) for v in [1, 0, -1]]


def test_catalan_series_values():
    cat = catalan_series(2, 1, 2, 12)
    assert cat["coefficients"] == [1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 0, 0, 0]
    assert cat["at_one"] == 6
    cat2 = catalan_series(3, 3, 2, 12)
    assert cat2["at_one"] == 5
    # rank one: series (1 - t^{2r})/(1 - t^r) = 1 + t^r
    cat1 = catalan_series(4, 1, 1, 8)
    assert cat1["coefficients"] == [1, 0, 0, 0, 1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        catalan_series(2, 2, 2, 4)


def test_catalan_invariant_cross_check():
    for (r, p, n) in [(2, 1, 2), (3, 3, 2)]:
        h = coxeter_number(r, p, n)
        inv = invariant_char_series(r, p, n, h + 1, 12)
        cat = catalan_series(r, p, n, 12)
        assert [int(v) for v in inv] == cat["coefficients"]


def test_catalan_value_is_integer_product():
    # integrality holds on the well-generated groups (h = largest degree)
    for (r, p, n) in [(2, 1, 2), (3, 1, 2), (3, 3, 2), (2, 1, 3), (3, 3, 3)]:
        h = coxeter_number(r, p, n)
        assert h == max(degrees(r, p, n))
        num = den = 1
        for d in degrees(r, p, n):
            num *= h + d
            den *= d
        assert num % den == 0
        assert catalan_series(r, p, n, 4)["at_one"] == num // den
    # G(4,2,2) is not well-generated: h = 6 exceeds every degree and the
    # value at t = 1 is a genuine fraction
    assert coxeter_number(4, 2, 2) == 6 and degrees(4, 2, 2) == [4, 4]
    assert catalan_series(4, 2, 2, 8)["at_one"] == "25/4"


def test_coinvariant_series_domination():
    # the eigenbasis image dominates the ordinary coinvariant series
    for (r, p, n) in [(2, 1, 2), (3, 3, 2), (2, 1, 3)]:
        h = coxeter_number(r, p, n)
        socle = sum(d - 1 for d in degrees(r, p, n))
        coin = coinvariant_series(r, p, n, socle)
        image = l1_series_by_counting(n, h + 1, socle)
        assert all(a >= b for a, b in zip(image, coin))
        assert sum(coin) == (
            __import__("math").prod(degrees(r, p, n)))


def test_exponents_and_freeness_examples():
    out = exponents_and_freeness(2, 1, 2, 5)
    assert out["exponents"] == [1, 3]
    assert out["det_identity"] and out["multiset_match"]
    out = exponents_and_freeness(2, 2, 2, 3)
    assert out["exponents"] == [1, 1]
    assert out["det_identity"] and out["multiset_match"]
    out = exponents_and_freeness(3, 1, 2, 7)
    assert out["multiset_match"]
    with pytest.raises(ValueError):
        exponents_and_freeness(2, 1, 2, 4)  # r divides m


def test_dim_three_ways_g332():
    r, p, n = 3, 3, 2
    k = coxeter_number(r, p, n) + 1
    ident = GroupElement.identity(r, n)
    assert l1_dimension_by_counting(n, k) == k ** n
    assert graded_char_L1(r, p, n, ident, k).at_one() \
        == Cyc.from_rational(r, k ** n)
    assert sum(l1_series_by_counting(n, k, n * (k - 1))) == k ** n
