"""Polynomial core: parsing, printing, arithmetic, substitution, coordinate
changes, orders of vanishing."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oscurve.errors import DegenerateInputError, ParseError, RingMismatchError
from oscurve.qfields import QuadraticField
from oscurve.rings import INF, PolyRing

R2 = PolyRing(("x", "y"))
R3 = PolyRing(("x0", "x1", "x2"))


def poly(text, ring=R2):
    return ring.parse(text)


# -- parsing / printing -------------------------------------------------------


def test_parse_oscnode_quartic():
    f = poly("y^2 - 2*x^2*y + x^4 + x^2*y^2")
    assert f.terms == {
        (0, 2): Fraction(1),
        (2, 1): Fraction(-2),
        (4, 0): Fraction(1),
        (2, 2): Fraction(1),
    }


def test_parse_zero_and_cancellation():
    assert poly("0").is_zero
    assert poly("(x+y)^2 - x^2 - 2*x*y - y^2").is_zero


def test_parse_rational_literals():
    f = poly("9/28*x - 1/2")
    assert f.terms == {(1, 0): Fraction(9, 28), (0, 0): Fraction(-1, 2)}


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        poly("x + q")
    assert err.value.position == 4
    with pytest.raises(ParseError):
        poly("2x")  # implicit multiplication is not allowed
    with pytest.raises(ParseError):
        poly("x + ")
    with pytest.raises(ParseError):
        poly("x ^ y")


def test_print_round_trips():
    for text in ("x^4 + x^2*y^2 - 2*x^2*y + y^2", "-x + 1/3", "0", "x*y - 2"):
        f = poly(text)
        assert str(f) == text
        assert poly(str(f)) == f


def test_print_quadext_coefficients():
    ring = PolyRing(("x",), QuadraticField(-1))
    f = ring.parse("x^2 - sqrt(-1)*x^3")
    assert str(f) == "-sqrt(-1)*x^3 + x^2"
    assert ring.parse(str(f)) == f


# -- arithmetic ---------------------------------------------------------------


def test_product_of_conjugate_conics():
    assert poly("y - x^2") * poly("y + x^2") == poly("y^2 - x^4")


def test_multiplication_by_zero():
    assert (poly("x^3 - y") * poly("0")).is_zero


def test_ring_mismatch_raises():
    with pytest.raises(RingMismatchError):
        poly("x") + R3.parse("x0")


def test_power():
    assert poly("x + y") ** 3 == poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert poly("x") ** 0 == R2.one()


small_polys = st.builds(
    lambda terms: R2.from_terms(
        {(e1, e2): c for (e1, e2, c) in terms}
    ),
    st.lists(
        st.tuples(
            st.integers(0, 3),
            st.integers(0, 3),
            st.fractions(min_value=-5, max_value=5, max_denominator=4),
        ),
        max_size=5,
    ),
)


@given(small_polys, small_polys, small_polys)
@settings(max_examples=50)
def test_ring_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)


# -- substitution -------------------------------------------------------------


def test_substitute_kills_y():
    f = poly("y^2 - x^5")
    assert f.substitute({"y": R2.zero()}) == poly("-x^5")


def test_substitute_conic_into_quartic():
    # hand expansion: contact of order six with the osculating conic
    f = poly("y^2 - 2*x^2*y + x^4 + x^2*y^2")
    assert f.substitute({"y": poly("x^2")}) == poly("x^6")


def test_substitute_identity():
    f = poly("x^3*y - 2*y^2 + x")
    assert f.substitute({"y": R2.var("y")}) == f


@given(small_polys, small_polys, small_polys)
@settings(max_examples=30)
def test_substitute_is_a_ring_homomorphism(f, g, p):
    image = {"y": p}
    assert (f * g).substitute(image) == f.substitute(image) * g.substitute(image)
    assert (f + g).substitute(image) == f.substitute(image) + g.substitute(image)


# -- linear changes -----------------------------------------------------------


def test_linear_change_swap():
    F = R3.parse("x0^2*x2")
    swapped = F.linear_change([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert swapped == R3.parse("x1^2*x2")


def test_linear_change_identity():
    F = R3.parse("x0^3 - x1*x2^2")
    assert F.linear_change([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == F


def test_linear_change_moves_point():
    # move [1,0,0] to [0,0,1]: the transformed curve vanishes there
    F = R3.parse("x0*x1^2 - x2^3 + x1*x2^2")
    assert F.evaluate((1, 0, 0)) == 0
    M = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    moved = F.linear_change(M)
    assert moved.evaluate((0, 0, 1)) == 0


def test_linear_change_rejects_singular_matrix():
    with pytest.raises(DegenerateInputError):
        R3.parse("x0").linear_change([[1, 0, 0], [1, 0, 0], [0, 0, 1]])


@given(small_polys)
@settings(max_examples=25)
def test_linear_change_round_trip(f):
    M = [[Fraction(1), Fraction(2)], [Fraction(1), Fraction(3)]]
    Minv = [[Fraction(3), Fraction(-2)], [Fraction(-1), Fraction(1)]]
    assert f.linear_change(M).linear_change(Minv) == f


# -- orders of vanishing ------------------------------------------------------


def test_order_at_zero_examples():
    u = PolyRing(("x",))
    assert u.parse("-x^5 + x^7").order_at_zero() == 5
    assert u.parse("0").order_at_zero() == INF
    assert u.parse("3").order_at_zero() == 0


def test_order_at_zero_rejects_multivariate():
    with pytest.raises(ValueError):
        poly("x*y").order_at_zero()


@given(
    st.lists(st.tuples(st.integers(0, 6), st.fractions(min_value=-3, max_value=3, max_denominator=3)), max_size=4),
    st.lists(st.tuples(st.integers(0, 6), st.fractions(min_value=-3, max_value=3, max_denominator=3)), max_size=4),
)
@settings(max_examples=40)
def test_order_is_additive(t1, t2):
    u = PolyRing(("x",))
    f = u.from_terms({(e,): c for e, c in t1})
    g = u.from_terms({(e,): c for e, c in t2})
    lhs = (f * g).order_at_zero()
    rhs = f.order_at_zero() + g.order_at_zero()
    assert lhs == rhs  # inf absorbs through float('inf') arithmetic


# -- homogenization helpers ---------------------------------------------------


def test_homogenize_dehomogenize():
    f = poly("y^2 - x^3 + x")
    F = f.homogenize(R3, "x2", {"x": "x0", "y": "x1"})
    assert F == R3.parse("x1^2*x2 - x0^3 + x0*x2^2")
    assert F.is_homogeneous()
    back = F.substitute({"x2": R3.one()}).restrict(R2, {"x0": "x", "x1": "y"})
    assert back == f
