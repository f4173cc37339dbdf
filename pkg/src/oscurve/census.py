"""Singularity census of a properly parameterized rational plane curve.

For a degree-n parameterization, the multiple-point machinery assembles the
banded matrix whose rows are shifts of the chart coordinates x0..xk over the
three coefficient rows of the forms; the scheme cut out by its maximal-minor
drops lives in P^k and its support encodes the k-fold points of the image.
For k = 2 the scheme is finite of length C(n-1, 2); localizing its length at
each support point recovers the delta invariant of the corresponding singular
point, and support points on the conic y^2 - 4xz are exactly the one-branch
(cuspidal) singularities.  Classification labels come from the implicit-side
double point classifier, run at each singular image point.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .classifier import classify_double_point, _matrix_inverse
from .errors import DegenerateInputError
from .groebner import (
    Ideal,
    TermOrder,
    _avoids_support,
    ideal_sum,
    irrelevant_ideal,
    saturate,
    scheme_length,
    zero_dim_radical,
)
from .polyops import exact_divide, matrix_rank, nullspace
from .qfields import QQ, QuadExt, QuadraticField, rational_sqrt, squarefree_core
from .rational_curves import (
    PlaneParameterization,
    expected_double_point_count,
    implicitize,
    point_ideal,
    properness_check,
)
from .rings import Polynomial, PolyMatrix, PolyRing

X2_VARS = ("x", "y", "z")


def scheme_ring(k: int, field=QQ) -> PolyRing:
    if k == 2:
        return PolyRing(X2_VARS, field)
    return PolyRing(tuple(f"x{i}" for i in range(k + 1)), field)


def multiple_point_matrix(param: PlaneParameterization, k: int) -> PolyMatrix:
    """The (n-k+4) x (n+1) matrix: n-k+1 banded rows carrying x0..xk shifted
    by the row index, over the three coefficient rows of the forms."""
    n = param.n
    if not 2 <= k <= n - 1:
        raise DegenerateInputError(f"k = {k} out of range 2..{n - 1}")
    field = param.ring.field
    ring = scheme_ring(k, field)
    gens = ring.gens()
    zero = ring.zero()
    cols = n + 1
    entries = []
    for i in range(n - k + 1):
        row = [zero] * cols
        for j in range(k + 1):
            row[i + j] = gens[j]
        entries.extend(row)
    for f in param.forms:
        coeffs = [field.zero] * cols
        for e, c in f.terms.items():
            coeffs[e[1]] = c
        entries.extend(ring.const(c) for c in coeffs)
    return PolyMatrix(ring, n - k + 4, cols, entries)


def multiple_point_scheme_ideal(param: PlaneParameterization, k: int) -> Ideal:
    """Ideal of the (n-k+3)-minors: empty or finite, nonempty exactly when the
    image has a point of multiplicity >= k."""
    matrix = multiple_point_matrix(param, k)
    return Ideal(matrix.ring, matrix.minors(param.n - k + 3))


def cusp_conic(ring: PolyRing) -> Polynomial:
    x, y, z = ring.gens()
    return y * y - 4 * x * z


def has_multiplicity_at_least(param: PlaneParameterization, k: int) -> bool:
    ideal = multiple_point_scheme_ideal(param, k)
    return not saturate(ideal, irrelevant_ideal(ideal.ring)).is_unit()


# ---------------------------------------------------------------------------
# census data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusSite:
    """One support site of the double-point scheme: a single point (possibly
    over a quadratic extension) or an unsplit conjugate cluster."""

    kind: str  # "point" or "cluster"
    coords: tuple | None  # scheme-plane coordinates, for point sites
    eliminant: Polynomial | None  # chart eliminant, for cluster sites
    size: int  # number of geometric points at the site
    delta: int  # localized length (per point for "point", total for clusters)
    cusp_count: int  # how many of the points lie on the cusp conic
    image_point: tuple | None  # singular point of the image curve
    label: str | None = None  # A_s label once classified

    @property
    def delta_total(self) -> int:
        return self.delta * self.size if self.kind == "point" else self.delta

    def describe(self) -> str:
        if self.kind == "point":
            where = "[" + " : ".join(str(c) for c in self.coords) + "]"
        else:
            where = f"cluster of {self.size} conjugate points ({self.eliminant})"
        label = self.label or "unclassified"
        return f"{where}  delta={self.delta}  {label}"


@dataclass(frozen=True)
class SingularityCensus:
    n: int
    total_length: int
    sites: tuple
    cusp_intersection_length: int

    @property
    def delta_sum(self) -> int:
        return sum(site.delta_total for site in self.sites)

    def point_count(self) -> int:
        return sum(site.size for site in self.sites)

    def labels(self) -> list[str]:
        out = []
        for site in self.sites:
            count = site.size if site.kind == "cluster" else 1
            out.extend([site.label or "?"] * count)
        return sorted(out)


# ---------------------------------------------------------------------------
# support extraction: shape position, rational roots, conjugate splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _SupportPiece:
    factor: Polynomial  # squarefree chart eliminant piece; degree == size
    size: int
    chart_points: tuple | None  # ((x, y), ...) when the piece is split
    h_line: Polynomial  # shape-position polynomial: yc = h_line(xc)


def _chart_candidates(ring):
    x, y, z = ring.gens()
    yield z
    yield y
    yield x
    yield x + y + z
    yield x + 2 * y - z
    yield 3 * x - y + 2 * z
    yield x - 5 * y + 7 * z


def _chart_matrix(ring, ell, shear):
    """Columns: a (sheared) kernel basis of ell and a vector with ell = 1, so
    the pulled-back form is the last coordinate."""
    field = ring.field
    coeffs = [field.zero] * 3
    for e, c in ell.terms.items():
        coeffs[e.index(1)] = c
    pivot = max(i for i, c in enumerate(coeffs) if c)
    kernel = []
    for i in range(3):
        if i == pivot:
            continue
        vec = [field.zero] * 3
        vec[i] = field.one
        vec[pivot] = -coeffs[i] / coeffs[pivot]
        kernel.append(vec)
    first = [a + field.coerce(shear) * b for a, b in zip(kernel[0], kernel[1])]
    special = [field.zero] * 3
    special[pivot] = field.one / coeffs[pivot]
    return tuple(tuple((first[i], kernel[1][i], special[i])) for i in range(3))


def _rational_roots(g: Polynomial) -> list[Fraction]:
    """All rational roots of a univariate polynomial over QQ, exactly."""
    from math import lcm

    coeffs = {}
    for e, c in g.terms.items():
        coeffs[sum(e)] = c
    deg = max(coeffs)
    den = 1
    for c in coeffs.values():
        den = lcm(den, c.denominator)
    ints = {k: int(c * den) for k, c in coeffs.items()}
    roots = []
    low = min(k for k, c in ints.items() if c)
    if low > 0:
        roots.append(Fraction(0))
        ints = {k - low: c for k, c in ints.items() if k >= low}
        deg -= low
    if deg == 0:
        return roots

    def divisors(n):
        n = abs(n)
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return out

    a0, an = ints.get(0, 0), ints[deg]
    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and sum(c * cand**k for k, c in ints.items()) == 0:
                    roots.append(cand)
    return sorted(roots)


def _extend_to_field(p: Polynomial, field) -> Polynomial:
    if p.ring.field == field:
        return p
    ring = PolyRing(p.ring.variables, field)
    return Polynomial(ring, {e: field.coerce(c) for e, c in p.terms.items()})


def _evaluate_ext(p: Polynomial, values):
    """Evaluate a rational-coefficient polynomial at possibly quadratic values."""
    ext = None
    for v in values:
        if isinstance(v, QuadExt) and v.b != 0:
            ext = QuadraticField(v.d)
            break
    if ext is not None and p.ring.field != ext:
        p = _extend_to_field(p, ext)
        values = [ext.coerce(v) for v in values]
    return p.evaluate(values)


def _split_eliminant(g: Polynomial, h_line: Polynomial, field) -> list[_SupportPiece]:
    """Rational roots split off as simple points, a final quadratic splits
    over one extension, anything bigger stays an unsplit cluster."""
    pieces = []
    var = g.used_variables()[0]
    ring = g.ring

    def y_of(x_value):
        return _evaluate_ext(h_line, [x_value, x_value * 0])

    work = g
    for root in _rational_roots(g):
        pieces.append(
            _SupportPiece(
                factor=ring.var(var) - ring.const(root),
                size=1,
                chart_points=((root, y_of(root)),),
                h_line=h_line,
            )
        )
        work = exact_divide(work, ring.var(var) - ring.const(root))
    deg = work.degree()
    if deg == 0:
        return pieces
    if deg == 2:
        cs = {sum(e): c for e, c in work.terms.items()}
        c2 = cs.get(2, Fraction(0))
        c1 = cs.get(1, Fraction(0))
        c0 = cs.get(0, Fraction(0))
        disc = c1 * c1 - 4 * c2 * c0
        root = rational_sqrt(disc)
        if root is None:
            core, scale = squarefree_core(disc)
            ext = QuadraticField(core)
            sq = QuadExt(0, scale, core)
            two_c2 = ext.coerce(2 * c2)
            r1 = (ext.coerce(-c1) + sq) / two_c2
            r2 = (ext.coerce(-c1) - sq) / two_c2
        else:
            r1 = (-c1 + root) / (2 * c2)
            r2 = (-c1 - root) / (2 * c2)
        pieces.append(
            _SupportPiece(
                factor=work,
                size=2,
                chart_points=((r1, y_of(r1)), (r2, y_of(r2))),
                h_line=h_line,
            )
        )
        return pieces
    pieces.append(_SupportPiece(factor=work, size=deg, chart_points=None, h_line=h_line))
    return pieces


def support_sites(radical: Ideal, max_attempts: int = 8):
    """Decompose the support of a radical finite plane scheme into rational
    points, conjugate quadratic pairs, and unsplit clusters.

    Returns a list of (_SupportPiece, chart matrix); chart data maps back to
    the input coordinates through the matrix.
    """
    ring = radical.ring
    field = ring.field
    length = scheme_length(radical)
    if length == 0:
        return []
    attempts = 0
    for ell in _chart_candidates(ring):
        if attempts >= max_attempts:
            break
        if not _avoids_support(radical, ell):
            continue
        for shear in (0, 1, -1, 2, 3, 5):
            attempts += 1
            matrix = _chart_matrix(ring, ell, shear)
            moved = [g.linear_change(matrix) for g in radical.gens]
            aff = PolyRing(("xc", "yc"), field)
            affine = Ideal(
                aff,
                [
                    g.substitute({ring.variables[2]: ring.one()}).restrict(
                        aff, {ring.variables[0]: "xc", ring.variables[1]: "yc"}
                    )
                    for g in moved
                ],
            )
            gb = affine.groebner_basis(TermOrder.lex(("yc", "xc")))
            polys = list(gb.polys)
            if len(polys) != 2:
                continue
            g_x, lin_y = polys
            if g_x.degree_in("yc") != 0 or lin_y.degree_in("yc") != 1:
                continue
            if lin_y.coefficient_in("yc", 1) != aff.one():
                continue
            if g_x.degree() != length:
                continue
            h_line = -lin_y.coefficient_in("yc", 0)
            return [(piece, matrix) for piece in _split_eliminant(g_x, h_line, field)]
    raise DegenerateInputError("could not put the support in shape position")


def _piece_ideal(piece: _SupportPiece, matrix, ring: PolyRing) -> Ideal:
    """Homogeneous ideal of one support piece, back in the input coordinates."""
    field = ring.field
    if piece.size == 1:
        coords = _projective_from_chart(piece.chart_points[0], matrix)
        return point_ideal(ring, coords)
    aff = piece.factor.ring
    gens = [piece.factor, aff.var("yc") - piece.h_line]
    hom = [
        g.homogenize(ring, ring.variables[2], {"xc": ring.variables[0], "yc": ring.variables[1]})
        for g in gens
    ]
    ideal = saturate(Ideal(ring, hom), Ideal(ring, [ring.var(ring.variables[2])]))
    ideal = saturate(ideal, irrelevant_ideal(ring))
    inv = _matrix_inverse(matrix, field)
    return Ideal(ring, [g.linear_change([list(r) for r in inv]) for g in ideal.gens])


def _projective_from_chart(chart_point, matrix):
    xv, yv = chart_point
    vec = (xv, yv, 1)
    coords = []
    for i in range(3):
        total = None
        for j in range(3):
            term = _mixed_mul(matrix[i][j], vec[j])
            total = term if total is None else total + term
        coords.append(total)
    return _normalize_projective(coords)


def _mixed_mul(a, b):
    if isinstance(a, QuadExt) and not isinstance(b, QuadExt):
        b = QuadExt(Fraction(b), 0, a.d)
    elif isinstance(b, QuadExt) and not isinstance(a, QuadExt):
        a = QuadExt(Fraction(a), 0, b.d)
    return a * b


def _normalize_projective(coords):
    lead = next(c for c in coords if c)
    out = []
    for c in coords:
        v = c / lead if c else c * 0
        if isinstance(v, QuadExt) and v.b == 0:
            v = v.a
        out.append(v)
    return tuple(out)


# ---------------------------------------------------------------------------
# the census itself
# ---------------------------------------------------------------------------


def _binary_quadratic_roots(coords, field):
    """Roots on P^1 of c0*s^2 + c1*st + c2*t^2 with multiplicities, or None
    when they fall outside every supported field."""
    c0, c1, c2 = coords
    one = field.one if hasattr(field, "one") else Fraction(1)
    if not c0:
        if not c1:
            return [((1, 0), 2)]
        return [((1, 0), 1), ((-c2 / c1, one), 1)]
    disc = c1 * c1 - 4 * c0 * c2
    if not disc:
        return [((-c1 / (2 * c0), one), 2)]
    if isinstance(c0, QuadExt) or isinstance(c1, QuadExt) or isinstance(c2, QuadExt):
        ext = QuadraticField(next(c for c in coords if isinstance(c, QuadExt)).d)
        root = ext.sqrt(disc)
        if root is None:
            return None
        r1 = (-c1 + root) / (2 * c0)
        r2 = (-c1 - root) / (2 * c0)
        return [((r1, ext.one), 1), ((r2, ext.one), 1)]
    root = rational_sqrt(disc)
    if root is None:
        core, scale = squarefree_core(disc)
        ext = QuadraticField(core)
        sq = QuadExt(0, scale, core)
        c0e, c1e = ext.coerce(c0), ext.coerce(c1)
        r1 = (-c1e + sq) / (2 * c0e)
        r2 = (-c1e - sq) / (2 * c0e)
        return [((r1, ext.one), 1), ((r2, ext.one), 1)]
    return [(((-c1 + root) / (2 * c0), Fraction(1)), 1), (((-c1 - root) / (2 * c0), Fraction(1)), 1)]


def fiber_parameters(param: PlaneParameterization, coords):
    """Parameters mapping to the singular point below a scheme-plane point:
    the roots of the binary quadratic the point represents."""
    return _binary_quadratic_roots(coords, param.ring.field)


def _image_of_site(param: PlaneParameterization, coords):
    """Singular image point below a double-point scheme point, without root
    extraction: the combinations c with q | c0*f0 + c1*f1 + c2*f2 are the
    lines through the image point, so it is their intersection.  This stays
    inside the field of the scheme point itself."""
    n = param.n
    field = QQ
    for c in coords:
        if isinstance(c, QuadExt) and c.b != 0:
            field = QuadraticField(c.d)
            break
    coords = [field.coerce(c) for c in coords]
    zero, one = field.zero, field.one
    # row space of multiplication by q inside degree-n binary forms
    rows = []
    for shift in range(n - 1):
        row = [zero] * (n + 1)
        for j, c in enumerate(coords):
            row[shift + j] = c
        rows.append(row)
    f_vectors = []
    for f in param.forms:
        vec = [zero] * (n + 1)
        for e, c in f.terms.items():
            vec[e[1]] = field.coerce(c)
        f_vectors.append(vec)
    # echelonize the q-rows, then reduce the form vectors modulo them
    pivots = []
    for row in rows:
        for r, (pc, pr) in enumerate(pivots):
            if row[pc]:
                factor = row[pc] / pr[pc]
                row = [a - factor * b for a, b in zip(row, pr)]
        lead = next((i for i, v in enumerate(row) if v), None)
        if lead is not None:
            pivots.append((lead, row))
    residues = []
    for vec in f_vectors:
        for pc, pr in pivots:
            if vec[pc]:
                factor = vec[pc] / pr[pc]
                vec = [a - factor * b for a, b in zip(vec, pr)]
        residues.append(vec)
    kernel = nullspace([list(r) for r in zip(*residues)], 3, one=one)
    lines = list(kernel)
    if len(lines) != 2:
        return None
    (a0, a1, a2), (b0, b1, b2) = lines
    cross = (a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)
    if not any(cross):
        return None
    return _normalize_projective(list(cross))


def double_point_census(param: PlaneParameterization) -> SingularityCensus:
    """Locate all singular points of the image curve, with delta invariants
    from localized lengths and cusp flags from the conic test.

    Preconditions checked here: the parameterization is proper and the image
    has double points only (the k = 3 scheme is empty)."""
    n = param.n
    if n < 3:
        raise DegenerateInputError("degree must be at least 3 to carry singular points")
    from .qfields import RationalField

    if not isinstance(param.ring.field, RationalField):
        raise DegenerateInputError(
            "census support extraction splits points over QQ; "
            "parameterizations over an extension field are not supported here"
        )
    if param.proper is None:
        properness_check(param)
    if not param.proper:
        raise DegenerateInputError("the parameterization is not generically one-to-one")
    if n >= 4 and has_multiplicity_at_least(param, 3):
        raise DegenerateInputError(
            "the image curve has a point of multiplicity >= 3; the census handles double points only"
        )
    ideal = multiple_point_scheme_ideal(param, 2)
    ring = ideal.ring
    total = scheme_length(ideal)
    expected = expected_double_point_count(n)
    if total != expected:
        raise AssertionError(f"double-point scheme length {total} != C(n-1,2) = {expected}")
    conic = cusp_conic(ring)
    cusp_cut = saturate(ideal_sum(ideal, Ideal(ring, [conic])), irrelevant_ideal(ring))
    cusp_len = 0 if cusp_cut.is_unit() else scheme_length(cusp_cut)

    radical = zero_dim_radical(ideal)
    sites = []
    for piece, matrix in support_sites(radical):
        site_ideal = _piece_ideal(piece, matrix, ring)
        away = saturate(ideal, site_ideal)
        rest = 0 if away.is_unit() else scheme_length(away)
        delta = total - rest
        if piece.chart_points is not None:
            if delta % piece.size:
                raise AssertionError("conjugate points with unequal local lengths")
            for chart_pt in piece.chart_points:
                coords = _projective_from_chart(chart_pt, matrix)
                conic_value = _evaluate_ext(conic, list(coords))
                sites.append(
                    CensusSite(
                        kind="point",
                        coords=coords,
                        eliminant=None,
                        size=1,
                        delta=delta // piece.size,
                        cusp_count=0 if conic_value else 1,
                        image_point=_image_of_site(param, coords),
                    )
                )
        else:
            inter = saturate(ideal_sum(site_ideal, Ideal(ring, [conic])), irrelevant_ideal(ring))
            cusps = 0 if inter.is_unit() else scheme_length(inter)
            sites.append(
                CensusSite(
                    kind="cluster",
                    coords=None,
                    eliminant=piece.factor,
                    size=piece.size,
                    delta=delta,
                    cusp_count=cusps,
                    image_point=None,
                )
            )
    census = SingularityCensus(
        n=n, total_length=total, sites=tuple(sites), cusp_intersection_length=cusp_len
    )
    if census.delta_sum != total:
        raise AssertionError(f"per-site lengths {census.delta_sum} do not add up to {total}")
    return census


# ---------------------------------------------------------------------------
# classification of the census
# ---------------------------------------------------------------------------


def classify_curve_singularities(param: PlaneParameterization) -> SingularityCensus:
    """Census plus A_s labels: delta = 1 points split into nodes and cusps by
    the conic test; deeper points go through the implicit-equation
    classifier, with the delta = ceil(s/2) consistency check."""
    census = double_point_census(param)
    F = implicitize(param).poly
    labeled = []
    for site in census.sites:
        label = None
        if site.kind == "point":
            if site.delta == 1:
                label = "A2" if site.cusp_count else "A1"
            else:
                label = _classify_image_point(F, site)
        elif site.delta == site.size:
            # a reduced cluster is a Galois orbit of delta = 1 double points
            if site.cusp_count == 0:
                label = "A1"
            elif site.cusp_count == site.size:
                label = "A2"
        labeled.append(replace(site, label=label))
    return replace(census, sites=tuple(labeled))


def _classify_image_point(F: Polynomial, site: CensusSite):
    if site.image_point is None:
        return None
    coords = list(site.image_point)
    ext = None
    for c in coords:
        if isinstance(c, QuadExt) and c.b != 0:
            ext = QuadraticField(c.d)
            break
    if ext is not None and F.ring.field == QQ:
        F = _extend_to_field(F, ext)
        coords = [ext.coerce(c) for c in coords]
    verdict, _ = classify_double_point(F, coords)
    if verdict.kind != "double_point":
        return None
    if -(-verdict.s // 2) != site.delta:
        raise AssertionError(
            f"classifier type A{verdict.s} disagrees with local length {site.delta}"
        )
    return f"A{verdict.s}"


# ---------------------------------------------------------------------------
# curvilinearity of a finite scheme at a point
# ---------------------------------------------------------------------------


def is_curvilinear_at(scheme: Ideal, point) -> bool:
    """Zariski tangent dimension <= 1 at the point: the scheme sits inside a
    smooth curve germ exactly when the generators' linear parts at the point
    span a space of codimension <= 1 in the plane."""
    ring = scheme.ring
    field = ring.field
    pt = [field.coerce(v) for v in point]
    k = next((i for i, v in enumerate(pt) if v), None)
    if k is None:
        raise DegenerateInputError("not a projective point")
    pt = [v / pt[k] for v in pt]
    others = [i for i in range(3) if i != k]
    aff = PolyRing(("u1", "u2"), field)
    assignments = {ring.variables[k]: aff.one()}
    for name, i in zip(("u1", "u2"), others):
        assignments[ring.variables[i]] = aff.var(name) + aff.const(pt[i])
    rows = []
    for g in scheme.gens:
        local = g.substitute(assignments, target_ring=aff)
        if local.constant_term():
            raise DegenerateInputError("the scheme is not supported at the point")
        lin = local.homogeneous_component(1)
        rows.append([lin.terms.get((1, 0), field.zero), lin.terms.get((0, 1), field.zero)])
    return 2 - matrix_rank(rows) <= 1
