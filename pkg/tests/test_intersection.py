"""Local intersection multiplicities: graph substitution vs the truncated
local-algebra oracle."""

import random
from fractions import Fraction

import pytest

from oscurve.errors import DegenerateInputError
from oscurve.intersection import (
    GraphCurve,
    branch_separation,
    graph_intersection_multiplicity,
    truncated_local_multiplicity,
)
from oscurve.qfields import QuadExt, QuadraticField
from oscurve.rings import INF, PolyRing

R2 = PolyRing(("x", "y"))


def test_graph_multiplicity_a4_prototype():
    f = R2.parse("y^2 - x^5")
    assert graph_intersection_multiplicity(f, GraphCurve([0])) == 5


def test_graph_multiplicity_component_is_infinite():
    f = R2.parse("y^2 - y*x^2")  # y*(y - x^2)
    assert graph_intersection_multiplicity(f, GraphCurve([0, 1])) == INF


def test_graph_multiplicity_oscnode_over_gaussian_field():
    K = QuadraticField(-1)
    ring = PolyRing(("x", "y"), K)
    f = ring.parse("y^2 - 2*x^2*y + x^4 + x^2*y^2")
    i = K.coerce(QuadExt(0, 1, -1))
    assert graph_intersection_multiplicity(f, GraphCurve([K.zero, K.one, -i])) == 7
    assert graph_intersection_multiplicity(f, GraphCurve([K.zero, K.one, i])) == 7


def test_graph_requires_curve_through_origin():
    with pytest.raises(DegenerateInputError):
        graph_intersection_multiplicity(R2.parse("y + 1"), GraphCurve([0]))


def test_branch_separation_examples():
    K = QuadraticField(-1)
    i = K.coerce(QuadExt(0, 1, -1))
    g1 = GraphCurve([K.zero, K.one, -i])
    g2 = GraphCurve([K.zero, K.one, i])
    assert branch_separation(g1, g2) == 3
    assert branch_separation(g1, g1) == INF
    rng = random.Random(3)
    for _ in range(10):
        r = rng.randint(1, 7)
        coeffs = [Fraction(0)] * (r - 1)
        assert branch_separation(GraphCurve(coeffs + [1]), GraphCurve(coeffs + [-1])) == r


def test_oracle_cusp():
    # dim K[x,y]/(y^2 - x^3, y) = dim K[x]/(x^3) = 3
    f = R2.parse("y^2 - x^3")
    assert truncated_local_multiplicity(f, R2.var("y")).value == 3


def test_oracle_transverse_lines():
    assert truncated_local_multiplicity(R2.var("x"), R2.var("y")).value == 1


def test_oracle_matches_graph_path_on_quartic():
    f = R2.parse("y^2 - 2*x^2*y + x^4 + x^2*y^2")
    g = R2.parse("y - x^2")
    result = truncated_local_multiplicity(f, g)
    assert result.value == 6
    assert graph_intersection_multiplicity(f, GraphCurve([0, 1])) == 6


def test_oracle_cap_flag_on_shared_component():
    f = R2.parse("y*(y - x^2)")
    g = R2.parse("y - x^2")
    result = truncated_local_multiplicity(f, g, cap=14)
    assert result.value == INF
    assert result.cap_reached


def test_oracle_rejects_missing_origin():
    with pytest.raises(DegenerateInputError):
        truncated_local_multiplicity(R2.parse("y - 1"), R2.var("y"))


def _random_curve(rng, maxdeg=4):
    terms = {}
    for _ in range(rng.randint(2, 6)):
        i, j = rng.randint(0, maxdeg), rng.randint(0, maxdeg)
        if i + j == 0 or i + j > maxdeg:
            continue
        terms[(i, j)] = Fraction(rng.randint(-3, 3))
    return R2.from_terms(terms)


def test_oracle_equivalence_randomized():
    rng = random.Random(12)
    checked = 0
    while checked < 40:
        f = _random_curve(rng)
        if f.is_zero:
            continue
        graph = GraphCurve([Fraction(rng.randint(-2, 2)) for _ in range(rng.randint(1, 4))])
        fast = graph_intersection_multiplicity(f, graph)
        if fast == INF:
            continue
        oracle = truncated_local_multiplicity(f, graph.implicit_poly(R2))
        assert oracle.value == fast, (str(f), graph.coefficients)
        checked += 1
