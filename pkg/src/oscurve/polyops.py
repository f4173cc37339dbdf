"""Elementary polynomial machinery: determinants and minors of polynomial
matrices, Sylvester resultants, gcds, squarefree parts, and exact linear
algebra over the coefficient fields.

Determinants of polynomial matrices are computed either by Laplace expansion
memoized on column subsets (shares work between all minors of a matrix and is
very fast with integer coefficients) or by fraction-free Bareiss elimination
for larger square matrices; `matrix_det` picks by size.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import DegenerateInputError
from .qfields import QuadExt, RationalField
from .rings import Polynomial, PolyMatrix, PolyRing, gradedlex_key

# ---------------------------------------------------------------------------
# raw term-dict arithmetic (coefficients may be int, Fraction, or QuadExt)
# ---------------------------------------------------------------------------


def _dict_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(map(sum, zip(e1, e2)))
            s = out.get(e)
            if s is None:
                out[e] = c1 * c2
            else:
                s = s + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
    return out


def _dict_add_scaled(target, src, scale):
    if not scale:
        return target
    for e, c in src.items():
        v = c * scale
        s = target.get(e)
        if s is None:
            target[e] = v
        else:
            s = s + v
            if s:
                target[e] = s
            else:
                del target[e]
    return target


def _integer_entry_dicts(entries):
    """Clear denominators of Fraction-coefficient polynomials to plain ints.

    Returns (dicts, scale) where every entry was multiplied by `scale`.
    None when some coefficient is not rational.
    """
    from math import gcd, lcm

    den = 1
    for p in entries:
        for c in p.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
            elif not isinstance(c, int):
                return None, None
    dicts = []
    for p in entries:
        dicts.append({e: int(c * den) for e, c in p.terms.items()})
    return dicts, den


# ---------------------------------------------------------------------------
# determinants and minors
# ---------------------------------------------------------------------------


def _laplace_det(entry_dicts, rows, cols, memo):
    """Determinant of the submatrix on (rows, cols), expanding along the last
    row; memo is keyed by (rows, cols) and shared across sibling minors."""
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    if len(rows) == 1:
        result = entry_dicts[rows[0]].get(cols[0]) or {}
        memo[key] = result
        return result
    r = rows[-1]
    sub_rows = rows[:-1]
    total = {}
    sign = 1  # entry (len(rows)-1, len(cols)-1) carries a plus sign
    for j in range(len(cols) - 1, -1, -1):
        entry = entry_dicts[r].get(cols[j])
        if entry:
            sub = _laplace_det(entry_dicts, sub_rows, cols[:j] + cols[j + 1 :], memo)
            if sub:
                piece = _dict_mul(entry, sub)
                for e, c in piece.items():
                    v = c if sign == 1 else -c
                    s = total.get(e)
                    if s is None:
                        total[e] = v
                    else:
                        s = s + v
                        if s:
                            total[e] = s
                        else:
                            del total[e]
        sign = -sign
    memo[key] = total
    return total


class _LaplaceContext:
    """Shared state for minors of one matrix: per-row {col: term-dict}."""

    def __init__(self, matrix: PolyMatrix):
        self.ring = matrix.ring
        entries = matrix.entries
        int_dicts, self.scale = _integer_entry_dicts(entries)
        self.memo = {}
        self.rows = matrix.rows
        self.cols = matrix.cols
        if int_dicts is not None:
            grid = int_dicts
        else:
            self.scale = None
            grid = [dict(p.terms) for p in entries]
        self.by_row = [
            {j: grid[i * self.cols + j] for j in range(self.cols) if grid[i * self.cols + j]}
            for i in range(self.rows)
        ]

    def det(self, rows, cols):
        d = _laplace_det(self.by_row, tuple(rows), tuple(cols), self.memo)
        if self.scale is not None and self.scale != 1:
            k = len(rows)
            f = Fraction(1, self.scale**k)
            d = {e: c * f for e, c in d.items()}
        return self.ring.from_terms(d)


def matrix_minors(matrix: PolyMatrix, size: int) -> list[Polynomial]:
    """All size x size minors, ordered lexicographically by (row set, col set)."""
    if size < 1 or size > min(matrix.rows, matrix.cols):
        raise ValueError(
            f"minor size {size} out of range for a {matrix.rows}x{matrix.cols} matrix"
        )
    ctx = _LaplaceContext(matrix)
    out = []
    for rows in combinations(range(matrix.rows), size):
        for cols in combinations(range(matrix.cols), size):
            out.append(ctx.det(rows, cols))
    return out


def _bareiss_det(matrix: PolyMatrix) -> Polynomial:
    """Fraction-free Bareiss elimination; divisions are exact at every step."""
    n = matrix.rows
    ring = matrix.ring
    m = [[matrix.entry(i, j) for j in range(n)] for i in range(n)]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if m[k][k].is_zero:
            for r in range(k + 1, n):
                if not m[r][k].is_zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ring.zero()
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = exact_divide(num, prev)
            m[i][k] = ring.zero()
        prev = piv
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def matrix_det(matrix: PolyMatrix) -> Polynomial:
    if matrix.rows != matrix.cols:
        raise ValueError("determinant of a non-square matrix")
    n = matrix.rows
    # memoized Laplace wins while 2^n stays small; Bareiss after that
    if n <= 13:
        ctx = _LaplaceContext(matrix)
        return ctx.det(tuple(range(n)), tuple(range(n)))
    return _bareiss_det(matrix)


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient p/d when d divides p exactly; raises otherwise."""
    if isinstance(d, (int, Fraction, QuadExt)):
        d = p.ring.const(d)
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return p
    ring = p.ring
    d_terms = d.sorted_terms()
    d_lead_exp, d_lead_c = d_terms[0]
    rem = dict(p.terms)
    quot = {}
    while rem:
        exp = max(rem, key=gradedlex_key)
        c = rem[exp]
        q_exp = tuple(a - b for a, b in zip(exp, d_lead_exp))
        if any(k < 0 for k in q_exp):
            raise DegenerateInputError("polynomial division is not exact")
        q_c = c / d_lead_c
        quot[q_exp] = q_c
        for e2, c2 in d_terms:
            e = tuple(a + b for a, b in zip(q_exp, e2))
            s = rem.get(e)
            v = q_c * c2
            if s is None:
                rem[e] = -v
            else:
                s = s - v
                if s:
                    rem[e] = s
                else:
                    del rem[e]
    return Polynomial(ring, quot)


def divides(d: Polynomial, p: Polynomial) -> bool:
    try:
        exact_divide(p, d)
        return True
    except DegenerateInputError:
        return False


# ---------------------------------------------------------------------------
# Sylvester resultant
# ---------------------------------------------------------------------------


def sylvester_resultant(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    """Determinant of the Sylvester matrix of a and b with respect to `var`.

    Both inputs must have positive degree in `var`; the result does not
    involve `var` and vanishes exactly when a and b share a factor of
    positive degree in it.
    """
    ring = a.ring
    if b.ring != ring:
        raise DegenerateInputError("resultant operands must share a ring")
    m = a.degree_in(var)
    n = b.degree_in(var)
    if m <= 0 or n <= 0:
        raise DegenerateInputError("resultant needs positive degree in the chosen variable")
    ca = a.as_univariate_in(var)
    cb = b.as_univariate_in(var)
    zero = ring.zero()
    size = m + n
    entries = []
    for i in range(n):  # rows of a-coefficients
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = ca.get(m - k, zero)
        entries.extend(row)
    for i in range(m):  # rows of b-coefficients
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = cb.get(n - k, zero)
        entries.extend(row)
    return PolyMatrix(ring, size, size, entries).det()


# ---------------------------------------------------------------------------
# contents, gcds, squarefree parts
# ---------------------------------------------------------------------------


def _rational_normalize(p: Polynomial) -> Polynomial:
    """Integer-primitive form with positive leading (graded-lex) coefficient."""
    if p.is_zero:
        return p
    from math import gcd, lcm

    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    nums = [int(c * den) for c in p.terms.values()]
    g = 0
    for v in nums:
        g = gcd(g, v)
    lead = p.sorted_terms()[0][1]
    scale = Fraction(den, g)
    if lead < 0:
        scale = -scale
    return p * scale


def poly_normalize(p: Polynomial) -> Polynomial:
    """Canonical associate: integer-primitive over QQ, monic otherwise."""
    if p.is_zero:
        return p
    if isinstance(p.ring.field, RationalField):
        return _rational_normalize(p)
    lead = p.sorted_terms()[0][1]
    return p * (p.ring.field.one / lead)


def _prem(f, g, var):
    """Pseudo-remainder of f by g as univariate polynomials in `var`."""
    ring = f.ring
    x = ring.var(var)
    df = f.degree_in(var)
    dg = g.degree_in(var)
    lc_g = g.coefficient_in(var, dg)
    r = f
    dr = df
    while not r.is_zero and dr >= dg:
        lc_r = r.coefficient_in(var, dr)
        r = r * lc_g - g * lc_r * x ** (dr - dg)
        new_dr = r.degree_in(var)
        if new_dr >= dr and not r.is_zero:
            raise AssertionError("pseudo-division failed to reduce the degree")
        dr = new_dr
    return r


def poly_content(p: Polynomial, var: str) -> Polynomial:
    """gcd of the coefficients of p viewed as univariate in `var`."""
    coeffs = list(p.as_univariate_in(var).values())
    g = p.ring.zero()
    for c in coeffs:
        g = poly_gcd(g, c)
        if g.degree() == 0:
            break
    return g


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """gcd via primitive pseudo-remainder sequences; exact over QQ and over
    quadratic extensions.  The result is normalized (`poly_normalize`)."""
    if p.ring != q.ring:
        raise DegenerateInputError("gcd operands must share a ring")
    if p.is_zero:
        return poly_normalize(q)
    if q.is_zero:
        return poly_normalize(p)
    used = sorted(set(p.used_variables()) | set(q.used_variables()))
    if not used:
        return p.ring.one()
    var = min(used, key=lambda v: max(p.degree_in(v), q.degree_in(v)))
    if p.degree_in(var) < q.degree_in(var):
        p, q = q, p
    cont_p = poly_content(p, var)
    cont_q = poly_content(q, var)
    cont = poly_gcd(cont_p, cont_q)
    a = exact_divide(p, cont_p)
    b = exact_divide(q, cont_q)
    while True:
        if b.degree_in(var) <= 0:
            if b.is_zero:
                g = a
            else:
                g = p.ring.one()
            break
        r = _prem(a, b, var)
        if r.is_zero:
            g = b
            break
        r = exact_divide(r, poly_content(r, var))
        a, b = b, r
    return poly_normalize(cont * poly_normalize(g))


def squarefree_part(u: Polynomial) -> Polynomial:
    """u / gcd(u, u'), made primitive; univariate input required."""
    if u.is_zero:
        raise DegenerateInputError("squarefree part of the zero polynomial")
    used = u.used_variables()
    if len(used) > 1:
        raise ValueError("squarefree_part expects univariate input")
    if not used:
        return u.ring.one()
    g = poly_gcd(u, u.derivative(used[0]))
    return poly_normalize(exact_divide(u, g))


def repeated_factor_part(f: Polynomial) -> Polynomial:
    """gcd(f, all partial derivatives): degree 0 exactly when f is squarefree."""
    g = f
    for v in f.used_variables():
        g = poly_gcd(g, f.derivative(v))
        if g.degree() == 0:
            break
    return g


def certify_squarefree_by_restriction(f: Polynomial, attempts: int = 6) -> bool:
    """True once some line restriction of f is squarefree of full degree.

    A repeated factor g^2 | f survives restriction to any line on which f
    keeps its degree, so a single full-degree squarefree restriction is an
    exact certificate.  False only means no certificate was found within the
    attempts (f may still be squarefree); callers then fall back to the
    multivariate gcd.
    """
    if f.is_zero:
        return False
    ring = f.ring
    if ring.nvars == 1:
        return poly_gcd(f, f.derivative(ring.variables[0])).degree() == 0
    d = f.degree()
    line_ring = PolyRing(("tline",), ring.field)
    tau = line_ring.var("tline")
    seed = 0x517C
    for _ in range(attempts):
        images = []
        for _ in range(ring.nvars):
            seed = (seed * 1103515245 + 12345) % (1 << 31)
            a = seed % 7 - 3
            seed = (seed * 1103515245 + 12345) % (1 << 31)
            b = seed % 7 - 3
            images.append(line_ring.const(a) + tau * b)
        u = f._apply_images(images, line_ring)
        if u.degree() != d:
            continue
        if poly_gcd(u, u.derivative("tline")).degree() == 0:
            return True
    return False


def squarefree_part_multivariate(f: Polynomial) -> Polynomial:
    if f.is_zero:
        raise DegenerateInputError("squarefree part of the zero polynomial")
    g = repeated_factor_part(f)
    if g.degree() == 0:
        return poly_normalize(f)
    return poly_normalize(exact_divide(f, g))


# ---------------------------------------------------------------------------
# exact linear algebra over the coefficient fields
# ---------------------------------------------------------------------------


def matrix_rank(rows) -> int:
    """Rank of a matrix of field scalars (fraction-free over the integers
    when all entries are rational)."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if all(isinstance(c, (int, Fraction)) for r in rows for c in r):
        from math import gcd, lcm

        int_rows = []
        for r in rows:
            den = 1
            for c in r:
                if isinstance(c, Fraction):
                    den = lcm(den, c.denominator)
            rr = [int(c * den) for c in r]
            g = 0
            for v in rr:
                g = gcd(g, v)
            if g > 1:
                rr = [v // g for v in rr]
            if any(rr):
                int_rows.append(rr)
        return _int_rank(int_rows)
    return _field_rank(rows)


def _int_rank(rows) -> int:
    from math import gcd

    ncols = len(rows[0]) if rows else 0
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            v = rows[r][col]
            if v:
                g = gcd(pv, v)
                a, b = pv // g, v // g
                rows[r] = [a * x - b * y for x, y in zip(rows[r], rows[rank])]
                rg = 0
                for x in rows[r]:
                    rg = gcd(rg, x)
                if rg > 1:
                    rows[r] = [x // rg for x in rows[r]]
        rank += 1
        col += 1
    return rank


def _field_rank(rows) -> int:
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            v = rows[r][col]
            if v:
                f = v / pv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def nullspace(rows, ncols, one=Fraction(1)):
    """Basis of the right null space of a matrix of field scalars with
    `ncols` columns (rows may be empty)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        zero = one - one
        return [[one if j == i else zero for j in range(ncols)] for i in range(ncols)]
    # reduced row echelon form
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        rows[rank] = [x / pv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    zero = one - one
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][fc]
        basis.append(vec)
    return basis


def solve_linear(rows, rhs):
    """One solution of A x = b over the field, or None if inconsistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(aug)):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for r in range(len(aug)):
            if r != rank and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, len(aug)):
        if aug[r][ncols]:
            return None
    zero = rhs[0] - rhs[0] if rhs else Fraction(0)
    sol = [zero] * ncols
    for r, pc in enumerate(pivots):
        sol[pc] = aug[r][ncols]
    return sol
