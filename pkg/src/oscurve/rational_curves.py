"""Rational normal curves, osculating spaces, linear projections to the
plane, parameterizations, and resultant-based implicitization.

The degree-n rational normal curve is carried by the standard parameterization
(s^n, s^(n-1)t, ..., t^n); its ideal is generated by the 2x2 minors of the
two-row catalecticant matrix of the ambient coordinates.  Projecting from a
codimension-3 linear center yields plane curves together with their binary
parameterizations, and the scheme-level projection (add graph forms, saturate
by the ambient irrelevant ideal, eliminate the ambient variables) transports
finite subschemes along.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DegenerateInputError
from .groebner import (
    Ideal,
    eliminate,
    ideal_sum,
    irrelevant_ideal,
    saturate,
)
from .polyops import (
    matrix_rank,
    nullspace,
    poly_gcd,
    poly_normalize,
    squarefree_part_multivariate,
)
from .qfields import QQ
from .rings import Polynomial, PolyMatrix, PolyRing

PARAM_VARS = ("s", "t")
PLANE_VARS = ("x", "y", "z")


def _default_ambient_names(n: int):
    return tuple(f"z{i}" for i in range(n + 1))


def ambient_ring(n: int, names=None, field=QQ) -> PolyRing:
    names = tuple(names) if names else _default_ambient_names(n)
    if len(names) != n + 1:
        raise ValueError(f"need {n + 1} variable names for the degree-{n} ambient space")
    return PolyRing(names, field)


def param_ring(field=QQ) -> PolyRing:
    return PolyRing(PARAM_VARS, field)


def rational_normal_curve_ideal(n: int, names=None, field=QQ) -> Ideal:
    """2x2 minors of [[z0..z_{n-1}], [z1..z_n]]: the degree-n moment curve."""
    if n < 2:
        raise DegenerateInputError("the rational normal curve needs degree >= 2")
    ring = ambient_ring(n, names, field)
    z = ring.gens()
    entries = z[:n] + z[1 : n + 1]
    matrix = PolyMatrix(ring, 2, n, entries)
    return Ideal(ring, matrix.minors(2))


def moment_point(n: int, q, field=QQ):
    """The point (q0^n, q0^(n-1) q1, ..., q1^n) on the curve."""
    q0, q1 = (field.coerce(v) for v in q)
    if not q0 and not q1:
        raise DegenerateInputError("(0, 0) is not a point of the projective line")
    return tuple(q0 ** (n - i) * q1**i for i in range(n + 1))


def _falling(base: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= base - i
    return out


def osculating_space_ideal(n: int, q, r: int, names=None, field=QQ) -> Ideal:
    """Linear forms cutting the r-th osculating space of the degree-n curve
    at the parameter value q; its codimension is n - r."""
    if not 0 <= r <= n - 1:
        raise DegenerateInputError(f"osculating order r={r} out of range 0..{n - 1}")
    ring = ambient_ring(n, names, field)
    q0, q1 = (field.coerce(v) for v in q)
    if not q0 and not q1:
        raise DegenerateInputError("(0, 0) is not a point of the projective line")
    rows = []
    for a in range(r + 1):
        b = r - a
        row = []
        for j in range(n + 1):
            # d^a/ds^a d^b/dt^b of s^(n-j) t^j at (q0, q1)
            if n - j < a or j < b:
                row.append(field.zero)
                continue
            coeff = _falling(n - j, a) * _falling(j, b)
            row.append(field.coerce(coeff) * q0 ** (n - j - a) * q1 ** (j - b))
        rows.append(row)
    if matrix_rank(rows) != r + 1:
        raise AssertionError("osculating flag degenerated; this cannot happen")
    kernel = nullspace(rows, n + 1, one=field.one)
    gens = []
    z = ring.gens()
    for vec in kernel:
        form = ring.zero()
        for c, zi in zip(vec, z):
            if c:
                form = form + zi * c
        gens.append(form)
    return Ideal(ring, gens)


def point_ideal(ring: PolyRing, point) -> Ideal:
    """All linear forms vanishing at a projective point."""
    field = ring.field
    pt = [field.coerce(v) for v in point]
    if not any(pt):
        raise DegenerateInputError("not a projective point")
    kernel = nullspace([pt], ring.nvars, one=field.one)
    gens = []
    for vec in kernel:
        form = ring.zero()
        for c, v in zip(vec, ring.gens()):
            if c:
                form = form + v * c
        gens.append(form)
    return Ideal(ring, gens)


def validate_center(ring: PolyRing, forms) -> list[Polynomial]:
    forms = list(forms)
    if len(forms) != 3:
        raise DegenerateInputError("a plane projection center needs exactly 3 linear forms")
    rows = []
    for f in forms:
        if f.ring != ring:
            raise DegenerateInputError("center forms must live in the ambient ring")
        if f.is_zero or f.degree() != 1 or not f.is_homogeneous():
            raise DegenerateInputError("center forms must be nonzero linear forms")
        row = [ring.field.zero] * ring.nvars
        for e, c in f.terms.items():
            row[e.index(1)] = c
        rows.append(row)
    if matrix_rank(rows) != 3:
        raise DegenerateInputError("center forms are linearly dependent")
    return forms


def project_scheme(scheme: Ideal, center, targets=("u", "v", "w")) -> Ideal:
    """Image of a finite scheme under projection from the center.

    Adds graph forms t_i - l_i, saturates by the ambient irrelevant ideal,
    and eliminates the ambient variables; the result lives in K[targets].
    Raises when the center meets the scheme (the projection is undefined
    there)."""
    ring = scheme.ring
    forms = validate_center(ring, center)
    irr = irrelevant_ideal(ring)
    meets = saturate(ideal_sum(scheme, Ideal(ring, forms)), irr)
    if not meets.is_unit():
        raise DegenerateInputError("the projection center meets the scheme")
    sat = saturate(scheme, irr)
    big = PolyRing(ring.variables + tuple(targets), ring.field)
    gens = [g.restrict(big) for g in sat.gens]
    for name, form in zip(targets, forms):
        gens.append(big.var(name) - form.restrict(big))
    return eliminate(Ideal(big, gens), set(ring.variables))


# ---------------------------------------------------------------------------
# plane parameterizations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneParameterization:
    """A triple of degree-n binary forms (f0, f1, f2) with no common zero.

    `proper` is verified-properness metadata: None until checked, then the
    outcome of `properness_check` (write-once cache)."""

    f0: Polynomial
    f1: Polynomial
    f2: Polynomial
    n: int
    proper: bool | None = None

    @staticmethod
    def from_forms(f0, f1, f2) -> "PlaneParameterization":
        ring = f0.ring
        if f1.ring != ring or f2.ring != ring:
            raise DegenerateInputError("parameterization forms must share a ring")
        if ring.nvars != 2:
            raise DegenerateInputError("parameterization forms live in K[s, t]")
        degs = {f.degree() for f in (f0, f1, f2)}
        if len(degs) != 1 or not all(f.is_homogeneous() and not f.is_zero for f in (f0, f1, f2)):
            raise DegenerateInputError("need three nonzero binary forms of one degree")
        n = degs.pop()
        if n < 1:
            raise DegenerateInputError("constant forms do not parameterize a curve")
        g = poly_gcd(poly_gcd(f0, f1), f2)
        if g.degree() > 0:
            raise DegenerateInputError(
                f"the forms share the factor {g}: the parameterization has base points"
            )
        return PlaneParameterization(f0, f1, f2, n)

    @staticmethod
    def parse(text: str, field=QQ) -> "PlaneParameterization":
        """Parse 'f0; f1; f2' in the variables s, t."""
        ring = param_ring(field)
        parts = [p for p in text.split(";") if p.strip()]
        if len(parts) != 3:
            raise DegenerateInputError("expected three semicolon-separated binary forms")
        return PlaneParameterization.from_forms(*(ring.parse(p) for p in parts))

    @property
    def ring(self) -> PolyRing:
        return self.f0.ring

    @property
    def forms(self):
        return (self.f0, self.f1, self.f2)

    def evaluate(self, q):
        field = self.ring.field
        vals = [field.coerce(v) for v in q]
        return tuple(f.evaluate(vals) for f in self.forms)

    def fiber_form(self, point) -> Polynomial:
        """Binary form whose roots are the parameters mapping to `point`:
        the gcd of the cross products point_j * f_i - point_i * f_j."""
        field = self.ring.field
        pt = [field.coerce(v) for v in point]
        crosses = []
        for i in range(3):
            for j in range(i + 1, 3):
                c = self.forms[i] * pt[j] - self.forms[j] * pt[i]
                if not c.is_zero:
                    crosses.append(c)
        if not crosses:
            raise DegenerateInputError("every cross product vanished; not a curve")
        g = crosses[0]
        for c in crosses[1:]:
            g = poly_gcd(g, c)
        return g


def parameterization_from_center(n: int, center, names=None, field=QQ) -> PlaneParameterization:
    """Evaluate three independent linear forms on the standard degree-n
    parameterization; errors out when the center meets the curve."""
    ring = ambient_ring(n, names, field)
    forms = validate_center(ring, center)
    pring = param_ring(field)
    s, t = pring.gens()
    monos = [s ** (n - i) * t**i for i in range(n + 1)]
    images = []
    for form in forms:
        img = pring.zero()
        for e, c in form.terms.items():
            img = img + monos[e.index(1)] * c
        images.append(img)
    if any(f.is_zero for f in images):
        raise DegenerateInputError("a center form vanishes on the curve")
    g = poly_gcd(poly_gcd(images[0], images[1]), images[2])
    if g.degree() > 0:
        raise DegenerateInputError("the projection center meets the curve")
    return PlaneParameterization.from_forms(*images)


# ---------------------------------------------------------------------------
# implicitization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ImplicitCurve:
    poly: Polynomial
    map_degree: int
    minimal_certified: bool


def _binary_coefficients(f: Polynomial, n: int):
    """Coefficients of a degree-n binary form in the basis s^(n-j) t^j."""
    out = [f.ring.field.zero] * (n + 1)
    for e, c in f.terms.items():
        out[e[1]] = c
    return out


def _binary_resultant(ca, cb, plane: PolyRing) -> Polynomial:
    """Resultant of two degree-n binary forms whose coefficients are linear
    polynomials of the plane ring: a 2n x 2n banded determinant."""
    n = len(ca) - 1
    size = 2 * n
    zero = plane.zero()
    entries = []
    for i in range(n):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = ca[k]
        entries.extend(row)
    for i in range(n):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = cb[k]
        entries.extend(row)
    return PolyMatrix(plane, size, size, entries).det()


def implicitize(param: PlaneParameterization, names=PLANE_VARS) -> ImplicitCurve:
    """Squarefree implicit equation of the image curve, by the resultant of
    y*f0 - x*f1 and z*f0 - x*f2 in the parameters.

    The resultant equals (up to a constant) x^n * F^d with F the implicit
    equation and d the degree of the parameterization map; monomial factors
    are stripped and the squarefree part removes the d-th power.  The result
    is checked to vanish on the parameterization; `map_degree` is
    n / deg(F)."""
    field = param.ring.field
    plane = PolyRing(tuple(names), field)
    n = param.n
    x, y, z = plane.gens()
    coeffs = [_binary_coefficients(f, n) for f in param.forms]
    pairings = (
        (y, 0, x, 1, z, 0, x, 2, 0),  # y f0 - x f1, z f0 - x f2; strip x
        (x, 1, y, 0, z, 1, y, 2, 1),  # x f1 - y f0, z f1 - y f2; strip y
        (x, 2, z, 0, y, 2, z, 1, 2),  # x f2 - z f0, y f2 - z f1; strip z
    )
    raw = None
    strip_pos = None
    for va, ia, vb, ib, vc, ic, vd, idd, pos in pairings:
        ca = [va * c for c in coeffs[ia]]
        cbn = [vb * c for c in coeffs[ib]]
        a_row = [p - q for p, q in zip(ca, cbn)]
        cc = [vc * c for c in coeffs[ic]]
        cdn = [vd * c for c in coeffs[idd]]
        b_row = [p - q for p, q in zip(cc, cdn)]
        res = _binary_resultant(a_row, b_row, plane)
        if not res.is_zero:
            raw = res
            strip_pos = pos
            break
    if raw is None:
        raise DegenerateInputError(
            "all resultant pairings vanished identically; "
            "the parameterization is not birational onto a plane curve"
        )
    # strip powers of the pivot coordinate
    min_pow = min(e[strip_pos] for e in raw.terms)
    if min_pow:
        stripped = {}
        for e, c in raw.terms.items():
            ne = list(e)
            ne[strip_pos] -= min_pow
            stripped[tuple(ne)] = c
        raw = Polynomial(plane, stripped)
    if raw.degree() == 0:
        raise DegenerateInputError("the image is a point, not a curve")
    raw = poly_normalize(raw)
    # a squarefree line restriction certifies the resultant carries no
    # repeated factor, skipping the expensive multivariate gcd
    from .polyops import certify_squarefree_by_restriction

    if certify_squarefree_by_restriction(raw):
        F = raw
    else:
        F = squarefree_part_multivariate(raw)
    # the implicit equation must vanish on the parameterization
    pullback = F.substitute(
        {names[0]: param.f0, names[1]: param.f1, names[2]: param.f2},
        target_ring=param.ring,
    )
    if not pullback.is_zero:
        raise AssertionError("implicitization produced a non-vanishing candidate")
    deg = F.degree()
    certified = n % deg == 0
    map_degree = n // deg if certified else 1
    return ImplicitCurve(poly=F, map_degree=map_degree, minimal_certified=certified)


def properness_check(param: PlaneParameterization):
    """(is_proper, map_degree): proper means generically one-to-one."""
    imp = implicitize(param)
    is_proper = imp.map_degree == 1
    if param.proper is None:
        object.__setattr__(param, "proper", is_proper)
    return is_proper, imp.map_degree


# ---------------------------------------------------------------------------
# the cone-section fiber test
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiberTestResult:
    image_point: tuple
    image_ideal: Ideal
    fiber_ideal: Ideal
    single_reduced_point: bool


def cone_fiber_test(n: int, center, source_point, names=None, field=QQ) -> FiberTestResult:
    """Check that the projection is one-to-one over the image of a chosen
    curve point: intersect the curve with the cone over the center through
    the image point; the fiber must be exactly the reduced source point."""
    ring = ambient_ring(n, names, field)
    forms = validate_center(ring, center)
    pt = [field.coerce(v) for v in source_point]
    image = tuple(f.evaluate(pt) for f in forms)
    if not any(image):
        raise DegenerateInputError("the source point lies on the center")
    kernel = nullspace([list(image)], 3, one=field.one)
    cone_forms = []
    for vec in kernel:
        form = ring.zero()
        for c, f in zip(vec, forms):
            if c:
                form = form + f * c
        cone_forms.append(form)
    curve = rational_normal_curve_ideal(n, ring.variables, field)
    fiber = saturate(ideal_sum(curve, Ideal(ring, cone_forms)), irrelevant_ideal(ring))
    expected = point_ideal(ring, pt)
    single = fiber == expected
    image_ideal = project_scheme(point_ideal(ring, pt), forms)
    return FiberTestResult(
        image_point=image,
        image_ideal=image_ideal,
        fiber_ideal=fiber,
        single_reduced_point=single,
    )


def expected_double_point_count(n: int) -> int:
    return comb(n - 1, 2)
