"""Ideal arithmetic: bases, normal forms, Hilbert functions, elimination,
saturation, radicals."""

import random

import pytest

from oscurve.errors import DegenerateInputError
from oscurve.groebner import (
    Ideal,
    TermOrder,
    degree_slice_members,
    eliminate,
    hilbert_function,
    ideal_colon,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    irrelevant_ideal,
    saturate,
    saturate_general,
    scheme_length,
    zero_dim_radical,
)
from oscurve.rational_curves import rational_normal_curve_ideal
from oscurve.rings import PolyRing

R2 = PolyRing(("x", "y"))
R3 = PolyRing(("x", "y", "z"))


def ideal(ring, *texts):
    return Ideal(ring, [ring.parse(t) for t in texts])


# -- bases and normal forms ----------------------------------------------------


def test_lex_basis_of_two_lines():
    I = ideal(R2, "x - y", "x + y")
    gb = I.groebner_basis(TermOrder.lex())
    assert [str(p) for p in gb.polys] == ["y", "x"]


def test_twisted_cubic_elimination():
    I = ideal(R3, "y - x^2", "z - x^3")
    gb = I.groebner_basis(TermOrder.lex())
    assert R3.parse("y^3 - z^2") in list(gb.polys)
    small = eliminate(I, {"x"})
    assert [str(p) for p in small.gens] == ["y^3 - z^2"]
    # check by substitution t -> (t, t^2, t^3)
    T = PolyRing(("t",))
    for g in small.gens:
        assert g.restrict(R3).substitute(
            {"x": T.var("t"), "y": T.parse("t^2"), "z": T.parse("t^3")}, target_ring=T
        ).is_zero


def test_degree_six_curve_ideal_staircase():
    I = rational_normal_curve_ideal(6)
    gb = I.groebner_basis()
    assert len(gb.polys) == 15
    assert all(p.degree() == 2 for p in gb.polys)
    ring = I.ring
    assert gb.normal_form(ring.parse("z1*z3 - z2^2")).is_zero


def test_normal_form_examples():
    I = ideal(R3, "x^2 - y*z", "x*y - z^2")
    gb = I.groebner_basis()
    for g in I.gens:
        assert gb.normal_form(g).is_zero
    assert gb.normal_form(R3.one()) == R3.one()


def test_membership_from_contact_schemes():
    # y^2 - x^(2r) lies in (y - x^r, x^l) for every l
    for r in (2, 3, 4):
        for l in (1, 3, 6):
            I = ideal(R2, f"y - x^{r}", f"x^{l}")
            assert I.normal_form(R2.parse(f"y^2 - x^{2 * r}")).is_zero


def test_basis_unique_under_generator_permutation():
    rng = random.Random(9)
    gens = [R3.parse(t) for t in ("x^2 - y*z", "x*y - z^2", "y^3 - x*z^2", "x^3 - z^3")]
    reference = Ideal(R3, gens).groebner_basis().polys
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert Ideal(R3, shuffled).groebner_basis().polys == reference


def test_normal_form_cofactors_reconstruct():
    I = ideal(R3, "x^2 - y*z", "x*y - z^2")
    gb = I.groebner_basis()
    f = R3.parse("x^3*y - x*z^3 + y^2")
    remainder, cofactors = gb.normal_form_with_cofactors(f)
    rebuilt = remainder
    for q, g in zip(cofactors, gb.polys):
        rebuilt = rebuilt + q * g
    assert rebuilt == f
    member = R3.parse("(x^2 - y*z)*(x + z) + (x*y - z^2)*y")
    remainder, cofactors = gb.normal_form_with_cofactors(member)
    assert remainder.is_zero


def test_spairs_reduce_to_zero():
    I = ideal(R3, "x^2 - y*z", "x*y - z^2", "y^2 - x*z")
    gb = I.groebner_basis()
    polys = list(gb.polys)
    keyf = gb.order.key_function(R3)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            li = max(polys[i].terms, key=keyf)
            lj = max(polys[j].terms, key=keyf)
            lcm = tuple(max(a, b) for a, b in zip(li, lj))
            mi = R3.monomial(tuple(a - b for a, b in zip(lcm, li)))
            mj = R3.monomial(tuple(a - b for a, b in zip(lcm, lj)))
            s = polys[i] * mi - polys[j] * mj
            assert gb.normal_form(s).is_zero


# -- Hilbert functions ----------------------------------------------------------


def test_hilbert_of_squared_maximal_ideal():
    I = ideal_power(ideal(R3, "x", "y"), 2)
    hd = hilbert_function(I, upto=6)
    assert hd.values == (1, 3, 3, 3, 3, 3, 3)
    assert hd.stable_value == 3 and hd.stable_from == 1


def test_hilbert_rejects_inhomogeneous():
    with pytest.raises(DegenerateInputError):
        hilbert_function(ideal(R3, "x^2 - y"))


def test_hilbert_order_independent():
    I = ideal(R3, "x^2 - y*z", "x*y^2 - z^3")
    grev = hilbert_function(I, upto=8).values
    lex_leads = I.groebner_basis(TermOrder.lex())
    # recount standard monomials for the lex staircase
    from oscurve.groebner import _count_standard_monomials

    keyf = TermOrder.lex().key_function(R3)
    leads = [max(p.terms, key=keyf) for p in lex_leads.polys]
    lex_values = tuple(_count_standard_monomials(3, t, leads) for t in range(9))
    assert lex_values == grev


def test_unit_ideal_hilbert_is_zero():
    hd = hilbert_function(ideal(R3, "1"), upto=3)
    assert hd.values == (0, 0, 0, 0)
    assert hd.stable_value == 0


# -- elimination, combination ---------------------------------------------------


def test_eliminate_nothing_is_identity():
    I = ideal(R3, "x^2 - y*z")
    assert eliminate(I, set()) is I


def test_intersection_of_coordinate_ideals():
    inter = ideal_intersection(ideal(R3, "x"), ideal(R3, "y"))
    assert inter == ideal(R3, "x*y")


def test_power_generators():
    R7 = PolyRing(tuple("abcdefg"))
    cube = ideal_power(Ideal(R7, [R7.var(v) for v in "bcdef"]), 3)
    assert len(cube.gens) == 35
    assert R7.parse("b^3") in list(cube.gens)
    assert R7.parse("b^2*c") in list(cube.gens)


def test_sum_with_zero_ideal():
    I = ideal(R3, "x^2 - y*z")
    assert ideal_sum(I, Ideal(R3, [])) == I


def test_product_and_colon():
    I = ideal(R3, "x")
    J = ideal(R3, "y")
    assert ideal_product(I, J) == ideal(R3, "x*y")
    assert ideal_colon(ideal(R3, "x*y"), I) == J


# -- saturation ------------------------------------------------------------------


def test_saturation_of_embedded_component():
    I = ideal(R3, "x^2*y")
    assert saturate(I, ideal(R3, "x")) == ideal(R3, "y")


def test_saturation_idempotent():
    I = ideal(R3, "x^2*y", "x*z^2")
    J = ideal(R3, "x")
    once = saturate(I, J)
    assert saturate(once, J) == once


def test_saturation_no_supported_component():
    # nothing supported on V(x): saturation is the identity
    I = ideal(R3, "y^2 - x*z")
    assert saturate(I, ideal(R3, "x")) == I


def test_saturation_fast_path_matches_general_route():
    rng = random.Random(17)
    pool = ["x^2*y", "x*y*z", "y^3 - x^2*z", "z^2*x", "x^3", "y^2*z - z^3", "x*y^2"]
    for _ in range(6):
        gens = rng.sample(pool, rng.randint(1, 3))
        I = ideal(R3, *gens)
        by = ideal(R3, *rng.sample(["x", "y", "z", "x + y", "y - z"], rng.randint(1, 3)))
        assert saturate(I, by) == saturate_general(I, by), (gens, [str(g) for g in by.gens])


def test_saturation_by_irrelevant_ideal_of_unit():
    I = ideal(R3, "x^2", "y", "z")
    assert saturate(I, irrelevant_ideal(R3)).is_unit()


# -- radicals ---------------------------------------------------------------------


def test_radical_of_fat_point():
    I = ideal(R3, "x^2", "y")
    rad = zero_dim_radical(I)
    assert rad == ideal(R3, "x", "y")


def test_radical_idempotent():
    I = ideal(R3, "x^2", "x*y", "y^3")
    rad = zero_dim_radical(I)
    assert zero_dim_radical(rad) == rad
    assert rad.contains_ideal(I)


def test_radical_counts_points():
    # three lines cutting the conic xz = y^2: the support is five distinct
    # points ([0:0:1] lies on two of the lines, so Bezout's six drops to five)
    I = ideal(R3, "(x - y)*(x - 2*y)*(y - 5*z)", "x*z - y^2")
    rad = zero_dim_radical(I)
    assert scheme_length(rad) == 5


def test_radical_rejects_positive_dimension():
    with pytest.raises(DegenerateInputError):
        zero_dim_radical(ideal(R3, "x*z - y^2"))


def test_radical_squarefree_eliminants():
    from oscurve.groebner import _univariate_eliminant
    from oscurve.polyops import poly_gcd

    I = ideal(R3, "x^2", "x*y", "y^3")
    rad = zero_dim_radical(I)
    aff = PolyRing(("x", "y"))
    affine = Ideal(
        aff, [g.substitute({"z": R3.one()}).restrict(aff) for g in rad.gens]
    )
    for keep, other in (("x", "y"), ("y", "x")):
        e = _univariate_eliminant(affine, keep, other)
        assert poly_gcd(e, e.derivative(keep)).degree() == 0


# -- degree slices ----------------------------------------------------------------


def test_degree_slice_members():
    I = ideal(R2, "y - x^2", "x^3")
    assert degree_slice_members(I, 1, strict=False) == []
    J = ideal(R2, "x + y")
    slice1 = degree_slice_members(J, 1, strict=True)
    assert len(slice1) == 1
