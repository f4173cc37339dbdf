"""Double-point classification for reduced plane curves.

Given a homogeneous trivariate F and a point P on the curve, the classifier
moves P to [0,0,1], works in the affine chart, and probes the singularity
with graph curves y = l1*x + ... + lr*x^r of growing degree.  At step r the
coefficient of x^(2r) in f(x, l1*x + ... + lr*x^r) is a quadratic in the top
coefficient; its discriminant decides between a split into two branches
(type A_{2r-1}, two osculating witnesses) and a forced unique continuation
(either type A_{2r} or one more step).  All tests are exact, so there is no
tolerance anywhere; square roots that leave the base field are taken in a
quadratic extension and reported alongside the quadratic itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DegenerateInputError,
    ExtensionUnsupportedError,
    NonReducedCurveError,
    OscurveError,
)
from .intersection import GraphCurve, branch_separation, graph_intersection_multiplicity
from .polyops import repeated_factor_part
from .qfields import QQ, QuadraticField, RationalField, rational_sqrt, squarefree_core, QuadExt
from .rings import INF, Polynomial, PolyRing

PROJECTIVE_VARS = ("x0", "x1", "x2")
AFFINE_VARS = ("x", "y")


def projective_ring(field=QQ) -> PolyRing:
    return PolyRing(PROJECTIVE_VARS, field)


def affine_ring(field=QQ) -> PolyRing:
    return PolyRing(AFFINE_VARS, field)


class ClassificationCapError(OscurveError):
    """The step cap was exhausted; carries the partial trace."""

    def __init__(self, message, trace):
        super().__init__(message)
        self.trace = trace


# ---------------------------------------------------------------------------
# normalization to the origin chart
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalizedCurve:
    """A curve recentered so the query point is [0,0,1] with a02 != 0.

    `affine` is the dehomogenization of original o transform in the chart
    x2 != 0; `transform` maps [0,0,1] back to the query point.
    """

    original: Polynomial
    transform: tuple
    affine: Polynomial
    a02_fixed: bool


def _matrix_inverse(rows, field):
    n = len(rows)
    aug = [
        [field.coerce(v) for v in row] + [field.one if i == j else field.zero for j in range(n)]
        for i, row in enumerate(rows)
    ]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            raise DegenerateInputError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _compose(m1, m2, field):
    """Matrix product m1 * m2 over the field."""
    n = len(m1)
    return tuple(
        tuple(
            sum((field.coerce(m1[i][k]) * field.coerce(m2[k][j]) for k in range(n)), field.zero)
            for j in range(n)
        )
        for i in range(n)
    )


def multiplicity_at_origin(f: Polynomial) -> int:
    """Degree of the lowest nonzero homogeneous part of f; f(0,0) must be 0."""
    if f.is_zero:
        raise DegenerateInputError("zero polynomial defines no curve")
    if f.constant_term():
        raise DegenerateInputError("the curve does not pass through the origin")
    return int(f.lowest_degree())


def normalize_at_point(F: Polynomial, point) -> NormalizedCurve:
    """Recenter F at `point`: move it to [0,0,1], dehomogenize, and when the
    point is a double point apply a swap or shear so the y^2 coefficient of
    the affine equation is nonzero."""
    ring = F.ring
    if ring.nvars != 3:
        raise DegenerateInputError("expected a homogeneous curve in three variables")
    if not F.is_homogeneous() or F.is_zero:
        raise DegenerateInputError("the curve must be a nonzero homogeneous polynomial")
    field = ring.field
    p = [field.coerce(v) for v in point]
    if len(p) != 3 or not any(p):
        raise DegenerateInputError("a projective point needs three coordinates, not all zero")
    if F.evaluate(p):
        raise DegenerateInputError("the point does not lie on the curve")

    k = next(i for i, v in enumerate(p) if v)
    cols = [[field.zero] * 3 for _ in range(2)]
    others = [i for i in range(3) if i != k]
    for j, i in enumerate(others):
        cols[j][i] = field.one
    transform = tuple(tuple((cols[0][i], cols[1][i], p[i])) for i in range(3))

    v0, v1, v2 = ring.variables
    moved = F.linear_change(transform)
    aff_ring = affine_ring(field)
    affine = moved.substitute({v2: ring.one()}).restrict(aff_ring, {v0: "x", v1: "y"})
    if affine.constant_term():
        raise AssertionError("recentred curve misses the origin")

    a02_fixed = False
    if multiplicity_at_origin(affine) == 2:
        a20 = affine.terms.get((2, 0))
        a11 = affine.terms.get((1, 1))
        a02 = affine.terms.get((0, 2))
        if not a02:
            if a20:
                extra = ((0, 1, 0), (1, 0, 0), (0, 0, 1))  # swap x <-> y
            elif a11:
                extra = ((1, 1, 0), (0, 1, 0), (0, 0, 1))  # x -> x + y
            else:
                raise AssertionError("double point with zero quadratic part")
            transform = _compose(transform, extra, field)
            moved = F.linear_change(transform)
            affine = moved.substitute({v2: ring.one()}).restrict(
                aff_ring, {v0: "x", v1: "y"}
            )
            a02_fixed = True
        else:
            a02_fixed = True
    return NormalizedCurve(original=F, transform=transform, affine=affine, a02_fixed=a02_fixed)


# ---------------------------------------------------------------------------
# verdicts and traces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StepRecord:
    """One probing step: the quadratic A*l^2 + B*l + C in the step coefficient,
    its discriminant, the branch taken, the chosen coefficient (branches b),
    and the observed intersection multiplicity."""

    r: int
    quad: tuple
    delta: object
    branch: str  # "a", "b1", or "b2"
    lam: object | None
    multiplicity: object | None


@dataclass(frozen=True)
class Verdict:
    kind: str  # "smooth", "multiplicity_ge_3", "double_point"
    multiplicity: int
    s: int | None = None
    stopped_at_step: int | None = None
    tangent: Polynomial | None = None
    witnesses: tuple | None = None
    witness_field: object | None = None
    witness_multiplicities: tuple | None = None
    separation: object | None = None
    quadratic_at_stop: tuple | None = None
    extension_unsupported: bool = False
    normalized: NormalizedCurve | None = None
    tangent_original: Polynomial | None = None
    witnesses_original: tuple | None = None

    @property
    def label(self) -> str:
        if self.kind == "smooth":
            return "smooth point"
        if self.kind == "multiplicity_ge_3":
            return "point of multiplicity >= 3"
        return f"A{self.s}"


def _extend_poly(f: Polynomial, new_field) -> Polynomial:
    ring = PolyRing(f.ring.variables, new_field)
    return Polynomial(ring, {e: new_field.coerce(c) for e, c in f.terms.items()})


def _sqrt_in_or_above(field, value):
    """(root, field) with root^2 = value, enlarging QQ to QQ(sqrt(d)) when
    needed; (None, field) when even that fails (nested radical)."""
    if isinstance(field, RationalField):
        root = rational_sqrt(value)
        if root is not None:
            return root, field
        core, scale = squarefree_core(value)
        ext = QuadraticField(core)
        return QuadExt(0, scale, core), ext
    root = field.sqrt(value)
    return root, field


# ---------------------------------------------------------------------------
# the classifier
# ---------------------------------------------------------------------------


def default_step_cap(F: Polynomial) -> int:
    n = max(F.degree(), 1)
    return n * n + 2


def classify_double_point(F: Polynomial, point, cap: int | None = None):
    """Classify `point` on the reduced curve F = 0.

    Returns (Verdict, trace).  Smooth points and points of multiplicity >= 3
    are reported as such; a double point is classified as A_s with the
    osculating graph-curve witnesses: two of them (possibly over a quadratic
    extension) when the final discriminant is nonzero, one otherwise.
    Witnesses and tangent are reported both in the normalized chart and as
    curves in the original coordinates.
    """
    rep = repeated_factor_part(F)
    if rep.degree() > 0:
        raise NonReducedCurveError(
            f"the curve has the repeated factor profile gcd(F, dF) = {rep}; "
            "classification needs a reduced curve"
        )
    if cap is None:
        cap = default_step_cap(F)
    norm = normalize_at_point(F, point)
    verdict, trace = _classify_normalized(norm, cap)
    verdict = witnesses_in_original_coordinates(verdict, norm)
    return verdict, trace


def _classify_normalized(norm: NormalizedCurve, cap: int):
    f = norm.affine
    ring = f.ring
    base_field = ring.field
    m = multiplicity_at_origin(f)

    if m == 1:
        tangent = f.homogeneous_component(1)
        verdict = Verdict(kind="smooth", multiplicity=1, tangent=tangent, normalized=norm)
        return verdict, []
    if m >= 3:
        verdict = Verdict(kind="multiplicity_ge_3", multiplicity=m, normalized=norm)
        return verdict, []

    a02 = f.terms.get((0, 2))
    if not a02:
        raise AssertionError("normalization failed to arrange a02 != 0")

    lam_ring = PolyRing(("x", "lam"), base_field)
    x = lam_ring.var("x")
    lam = lam_ring.var("lam")

    lams: list = []
    trace: list[StepRecord] = []

    for r in range(1, cap + 1):
        probe = lam * x**r
        for k, c in enumerate(lams, start=1):
            if c:
                probe = probe + x**k * c
        g = f.substitute({"y": probe, "x": x}, target_ring=lam_ring)
        step_quad = g.coefficient_in("x", 2 * r)
        C0 = step_quad.coefficient_in("lam", 0).constant_term()
        C1 = step_quad.coefficient_in("lam", 1).constant_term()
        C2 = step_quad.coefficient_in("lam", 2).constant_term()
        if C2 != a02:
            raise AssertionError("step quadratic lost its leading coefficient a02")
        for j in range(2 * r):
            if not g.coefficient_in("x", j).is_zero:
                raise AssertionError(f"unexpected x^{j} term at step {r}")

        delta = C1 * C1 - 4 * C2 * C0
        if delta:
            # two distinct top coefficients: the branches separate here
            s = 2 * r - 1
            try:
                root, wfield = _sqrt_in_or_above(base_field, delta)
            except ExtensionUnsupportedError:
                root, wfield = None, base_field
            witnesses = None
            wit_mults = None
            separation = None
            ext_unsupported = root is None
            if root is not None:
                two = wfield.coerce(2)
                lam1 = (wfield.coerce(-C1) + root) / (two * wfield.coerce(C2))
                lam2 = (wfield.coerce(-C1) - root) / (two * wfield.coerce(C2))
                prefix = [wfield.coerce(c) for c in lams]
                w1 = GraphCurve(prefix + [lam1])
                w2 = GraphCurve(prefix + [lam2])
                witnesses = (w1, w2)
                f_ext = _extend_poly(f, wfield) if wfield != base_field else f
                wit_mults = tuple(
                    graph_intersection_multiplicity(f_ext, w) for w in witnesses
                )
                separation = branch_separation(w1, w2)
                if any(v != INF and v < 2 * r + 1 for v in wit_mults):
                    raise AssertionError("witness multiplicity below the split bound")
                if separation != r:
                    raise AssertionError("witnesses separate at the wrong order")
            trace.append(
                StepRecord(r=r, quad=(C2, C1, C0), delta=delta, branch="a", lam=None, multiplicity=None)
            )
            if r == 1:
                tangent = None  # two distinct tangent lines live in `witnesses`
            else:
                tangent = ring.var("y") - ring.var("x") * lams[0]
            verdict = Verdict(
                kind="double_point",
                multiplicity=2,
                s=s,
                stopped_at_step=r,
                tangent=tangent,
                witnesses=witnesses,
                witness_field=wfield,
                witness_multiplicities=wit_mults,
                separation=separation,
                quadratic_at_stop=(C2, C1, C0),
                extension_unsupported=ext_unsupported,
                normalized=norm,
            )
            return verdict, trace

        lam_bar = -C1 / (2 * C2)
        lams.append(lam_bar)
        mult = graph_intersection_multiplicity(f, GraphCurve(lams))
        if mult != INF and mult < 2 * r + 1:
            raise AssertionError("unique continuation with too small a contact order")
        if mult == 2 * r + 1:
            witness = GraphCurve(list(lams))
            trace.append(
                StepRecord(
                    r=r, quad=(C2, C1, C0), delta=delta, branch="b1", lam=lam_bar, multiplicity=mult
                )
            )
            tangent = ring.var("y") - ring.var("x") * lams[0]
            verdict = Verdict(
                kind="double_point",
                multiplicity=2,
                s=2 * r,
                stopped_at_step=r,
                tangent=tangent,
                witnesses=(witness,),
                witness_field=base_field,
                witness_multiplicities=(mult,),
                quadratic_at_stop=(C2, C1, C0),
                normalized=norm,
            )
            return verdict, trace
        trace.append(
            StepRecord(r=r, quad=(C2, C1, C0), delta=delta, branch="b2", lam=lam_bar, multiplicity=mult)
        )

    raise ClassificationCapError(
        f"no verdict within {cap} steps; the curve is non-reduced or the cap is too small",
        trace,
    )


# ---------------------------------------------------------------------------
# mapping reports back to the original coordinates
# ---------------------------------------------------------------------------


def _graph_to_projective(graph: GraphCurve, names, field) -> Polynomial:
    """Implicit homogeneous form of y = p(x) in the chart {last name != 0}."""
    ring2 = affine_ring(field)
    implicit = graph.implicit_poly(ring2)
    ring3 = PolyRing(names, field)
    return implicit.homogenize(ring3, names[2], {"x": names[0], "y": names[1]})


def witnesses_in_original_coordinates(verdict: Verdict, norm: NormalizedCurve) -> Verdict:
    """Attach tangent and witness curves expressed in the input coordinates:
    the normalized-chart graphs are homogenized and pushed through the
    inverse of the recentering transform."""
    field = norm.affine.ring.field
    wfield = verdict.witness_field or field
    names = norm.original.ring.variables
    inv = _matrix_inverse(norm.transform, field)

    def push(poly3: Polynomial) -> Polynomial:
        f = poly3.ring.field
        matrix = [[f.coerce(v) for v in row] for row in inv]
        return poly3.linear_change(matrix)

    tangent_original = None
    if verdict.tangent is not None:
        ring3 = PolyRing(names, field)
        tangent3 = verdict.tangent.homogenize(ring3, names[2], {"x": names[0], "y": names[1]})
        tangent_original = push(tangent3)

    witnesses_original = None
    if verdict.witnesses:
        witnesses_original = tuple(
            push(_graph_to_projective(w, names, wfield)) for w in verdict.witnesses
        )

    return Verdict(
        **{
            **{k: getattr(verdict, k) for k in verdict.__dataclass_fields__},
            "tangent_original": tangent_original,
            "witnesses_original": witnesses_original,
        }
    )
