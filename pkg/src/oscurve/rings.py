"""Sparse exact multivariate polynomials over QQ or a quadratic extension.

A `PolyRing` fixes an ordered tuple of variable names and a coefficient
field; a `Polynomial` is a mapping from exponent vectors to nonzero field
elements.  Polynomials are immutable; every operation returns a new value.
Canonical printing sorts terms by graded-lex, descending, and round-trips
through `parse_poly`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateInputError, ParseError, RingMismatchError
from .qfields import QQ, QuadExt, QuadraticField

INF = float("inf")


class PolyRing:
    """A polynomial ring K[v1, ..., vn] with K = QQ or QQ(sqrt(d))."""

    __slots__ = ("variables", "field", "_index", "_zero", "_one")

    def __init__(self, variables, field=QQ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names: {variables}")
        for v in variables:
            if not v or not (v[0].isalpha() and v.isalnum()):
                raise ValueError(f"bad variable name: {v!r}")
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})
        object.__setattr__(self, "_zero", None)
        object.__setattr__(self, "_one", None)

    def __setattr__(self, *args):
        raise AttributeError("PolyRing is immutable")

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def coerce_scalar(self, value):
        return self.field.coerce(value)

    # -- element constructors -------------------------------------------------

    def zero(self) -> Polynomial:
        if self._zero is None:
            object.__setattr__(self, "_zero", Polynomial(self, {}))
        return self._zero

    def one(self) -> Polynomial:
        if self._one is None:
            object.__setattr__(self, "_one", self.const(1))
        return self._one

    def const(self, value) -> Polynomial:
        c = self.coerce_scalar(value)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name) -> Polynomial:
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return Polynomial(self, {tuple(exp): self.field.one})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.variables]

    def monomial(self, exps, coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = self.coerce_scalar(coeff)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {exps: c})

    def from_terms(self, terms) -> Polynomial:
        clean = {}
        for exp, c in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            c = self.coerce_scalar(c)
            if c:
                clean[exp] = c
        return Polynomial(self, clean)

    def parse(self, text: str) -> Polynomial:
        return parse_poly(text, self)

    # -- ring identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.variables)}]"


def _check_same_ring(p, q):
    if p.ring is not q.ring and p.ring != q.ring:
        raise RingMismatchError(f"operands in different rings: {p.ring} vs {q.ring}")


def gradedlex_key(exp):
    return (sum(exp),) + exp


class Polynomial:
    """Immutable sparse polynomial: {exponent vector: nonzero coefficient}."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("Polynomial is immutable")

    # -- basic queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def lowest_degree(self) -> int:
        """Smallest total degree of a term; inf for 0 (order of vanishing at the origin)."""
        if not self.terms:
            return INF
        return min(sum(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def used_variables(self) -> list[str]:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used[i] = True
        return [v for i, v in enumerate(self.ring.variables) if used[i]]

    # -- arithmetic ----------------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Polynomial):
            _check_same_ring(self, other)
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        big, small = (self.terms, o.terms) if len(self.terms) >= len(o.terms) else (o.terms, self.terms)
        out = dict(big)
        for e, c in small.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = -c
            else:
                s = s - c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            c = self.ring.coerce_scalar(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: k * c for e, k in self.terms.items()})
        o = self._coerce_operand(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
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
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c):
        return self * c

    def map_coefficients(self, fn, new_ring=None):
        ring = new_ring or self.ring
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            v = ring.coerce_scalar(v)
            if v:
                out[e] = v
        return Polynomial(ring, out)

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, assignments, target_ring=None) -> Polynomial:
        """Ring homomorphism: variables in `assignments` map to the given
        polynomials (or scalars); all others map to themselves.

        `assignments` keys are variable names.  The target ring defaults to
        the common ring of the assigned polynomials, or this ring.
        """
        ring = target_ring
        assigned = {}
        for name, val in assignments.items():
            self.ring.index(name)  # validate
            if isinstance(val, Polynomial):
                if ring is None:
                    ring = val.ring
                elif val.ring != ring:
                    raise RingMismatchError("assignment values live in different rings")
            assigned[name] = val
        if ring is None:
            ring = self.ring
        for name, val in assigned.items():
            if not isinstance(val, Polynomial):
                assigned[name] = ring.const(val)
        images = []
        for v in self.ring.variables:
            if v in assigned:
                images.append(assigned[v])
            else:
                images.append(ring.var(v))  # raises if missing from target
        return self._apply_images(images, ring)

    def _apply_images(self, images, ring) -> Polynomial:
        # cache powers of each image to share work across terms
        pow_cache = [{0: ring.one()} for _ in images]

        def img_pow(i, k):
            cache = pow_cache[i]
            if k not in cache:
                half = img_pow(i, k // 2)
                sq = half * half
                cache[k] = sq if k % 2 == 0 else sq * images[i]
            return cache[k]

        total = ring.zero()
        for e, c in self.terms.items():
            term = ring.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * img_pow(i, k)
            total = total + term
        return total

    def evaluate(self, values):
        """Evaluate at a full point; values align with ring.variables."""
        if len(values) != self.ring.nvars:
            raise ValueError("wrong number of values")
        vals = [self.ring.coerce_scalar(v) for v in values]
        pow_cache = [{0: self.ring.field.one} for _ in vals]

        def val_pow(i, k):
            cache = pow_cache[i]
            if k not in cache:
                cache[k] = cache.setdefault(k - 1, val_pow(i, k - 1)) * vals[i]
            return cache[k]

        total = self.ring.field.zero
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * val_pow(i, k)
            total = total + t
        return total

    def restrict(self, new_ring, var_map=None) -> Polynomial:
        """Reinterpret in `new_ring`; `var_map` renames old -> new variables.

        Every variable actually used must be mapped (or share its name).
        """
        var_map = var_map or {}
        positions = {}
        for i, v in enumerate(self.ring.variables):
            name = var_map.get(v, v)
            if name in new_ring._index:
                positions[i] = new_ring.index(name)
        out = {}
        for e, c in self.terms.items():
            new_e = [0] * new_ring.nvars
            for i, k in enumerate(e):
                if k:
                    if i not in positions:
                        raise ValueError(
                            f"variable {self.ring.variables[i]!r} has no image in {new_ring}"
                        )
                    new_e[positions[i]] = k
            out[tuple(new_e)] = new_ring.coerce_scalar(c)
        return Polynomial(new_ring, out)

    # -- calculus-free structure ops -------------------------------------------

    def derivative(self, name: str) -> Polynomial:
        i = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                ne = tuple(ne)
                v = c * k
                s = out.get(ne)
                out[ne] = v if s is None else s + v
        return Polynomial(self.ring, {e: c for e, c in out.items() if c})

    def coefficient_in(self, name: str, k: int) -> Polynomial:
        """Coefficient of name^k, as a polynomial not involving `name`."""
        i = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == k:
                ne = list(e)
                ne[i] = 0
                out[tuple(ne)] = c
        return Polynomial(self.ring, out)

    def as_univariate_in(self, name: str) -> dict[int, Polynomial]:
        """Split into {k: coefficient of name^k}."""
        i = self.ring.index(name)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            buckets.setdefault(k, {})[tuple(ne)] = c
        return {k: Polynomial(self.ring, d) for k, d in sorted(buckets.items())}

    def order_at_zero(self):
        """Least exponent with a nonzero coefficient of a univariate polynomial.

        Returns inf for the zero polynomial; raises on genuinely multivariate
        input (the ring may have more variables as long as only one occurs).
        """
        used = self.used_variables()
        if len(used) > 1:
            raise ValueError(f"order_at_zero needs univariate input, got variables {used}")
        if not self.terms:
            return INF
        return min(sum(e) for e in self.terms)

    def homogenize(self, target_ring, hom_var: str, var_map=None) -> Polynomial:
        """Homogenize into `target_ring` using `hom_var` as the new variable."""
        var_map = dict(var_map or {})
        d = self.degree()
        if d < 0:
            return target_ring.zero()
        j = target_ring.index(hom_var)
        positions = {}
        for i, v in enumerate(self.ring.variables):
            name = var_map.get(v, v)
            if name in target_ring._index:
                positions[i] = target_ring.index(name)
        out = {}
        for e, c in self.terms.items():
            new_e = [0] * target_ring.nvars
            for i, k in enumerate(e):
                if k:
                    if i not in positions or positions[i] == j:
                        raise ValueError("homogenization variable collides with a used variable")
                    new_e[positions[i]] = k
            new_e[j] = d - sum(e)
            out[tuple(new_e)] = target_ring.coerce_scalar(c)
        return Polynomial(target_ring, out)

    def linear_change(self, matrix) -> Polynomial:
        """Compose with an invertible linear change: returns f(M x).

        `matrix` is a square list-of-rows of scalars, of size nvars.
        """
        n = self.ring.nvars
        rows = [[self.ring.coerce_scalar(v) for v in row] for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"matrix must be {n}x{n}")
        if _scalar_det(rows) == 0:
            raise DegenerateInputError("linear change of coordinates must be invertible")
        gens = self.ring.gens()
        images = []
        for i in range(n):
            img = self.ring.zero()
            for j in range(n):
                if rows[i][j]:
                    img = img + gens[j] * rows[i][j]
            images.append(img)
        return self._apply_images(images, self.ring)

    # -- comparison / printing --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, QuadExt)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, frozenset(self.terms.items()))))
        return self._hash

    def sorted_terms(self):
        """Terms sorted graded-lex descending: the canonical print order."""
        return sorted(self.terms.items(), key=lambda item: gradedlex_key(item[0]), reverse=True)

    def __str__(self):
        return poly_to_str(self)

    def __repr__(self):
        return f"<{self} in {self.ring!r}>"


def _scalar_det(rows):
    """Determinant of a small matrix of field scalars, by Gaussian elimination."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = None
    sign = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        p = m[col][col]
        det = p if det is None else det * p
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] / p
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det * sign if det is not None else 1


# ---------------------------------------------------------------------------
# matrices of polynomials
# ---------------------------------------------------------------------------


class PolyMatrix:
    """A rows x cols matrix of polynomials over one shared ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, rows, cols, entries):
        entries = list(entries)
        if rows <= 0 or cols <= 0 or len(entries) != rows * cols:
            raise ValueError("dimensions do not match entry count")
        fixed = []
        for e in entries:
            if not isinstance(e, Polynomial):
                e = ring.const(e)
            elif e.ring != ring:
                raise RingMismatchError("matrix entries must share one ring")
            fixed.append(e)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", fixed)

    def __setattr__(self, *args):
        raise AttributeError("PolyMatrix is immutable")

    def entry(self, i, j) -> Polynomial:
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def minors(self, size):
        from .polyops import matrix_minors

        return matrix_minors(self, size)

    def det(self) -> Polynomial:
        from .polyops import matrix_det

        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return matrix_det(self)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols} over {self.ring!r})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_OPS = set("+-*^()/,")


def _tokenize(text):
    tokens = []  # (kind, value, pos)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse_expr(self):
        kind, _, _ = self.peek()
        if kind == "-":
            self.next()
            total = -self.parse_term()
        elif kind == "+":
            self.next()
            total = self.parse_term()
        else:
            total = self.parse_term()
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.next()
                total = total + self.parse_term()
            elif kind == "-":
                self.next()
                total = total - self.parse_term()
            else:
                return total

    def parse_term(self):
        total = self.parse_factor()
        while self.peek()[0] == "*":
            self.next()
            total = total * self.parse_factor()
        return total

    def parse_factor(self):
        base = self.parse_atom()
        while self.peek()[0] == "^":
            self.next()
            tok = self.expect("int")
            base = base ** tok[1]
        return base

    def parse_atom(self):
        kind, value, pos = self.next()
        if kind == "int":
            if self.peek()[0] == "/":
                self.next()
                tok = self.expect("int")
                if tok[1] == 0:
                    raise ParseError("zero denominator in rational literal", tok[2])
                return self.ring.const(Fraction(value, tok[1]))
            return self.ring.const(value)
        if kind == "name":
            if value == "sqrt":
                return self._parse_sqrt(pos)
            if value not in self.ring._index:
                raise ParseError(f"unknown variable {value!r}", pos)
            return self.ring.var(value)
        if kind == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        if kind == "-":
            return -self.parse_atom()
        raise ParseError(f"unexpected token {value!r}", pos)

    def _parse_sqrt(self, pos):
        # sqrt(d) literals are only meaningful over a quadratic extension
        self.expect("(")
        sign = 1
        if self.peek()[0] == "-":
            self.next()
            sign = -1
        tok = self.expect("int")
        d = sign * tok[1]
        if self.peek()[0] == "/":
            self.next()
            den = self.expect("int")
            d = Fraction(d, den[1])
        self.expect(")")
        field = self.ring.field
        if not isinstance(field, QuadraticField):
            raise ParseError("sqrt(...) literal requires a quadratic-extension ring", pos)
        from .qfields import make_quadratic

        value = make_quadratic(0, 1, d)
        return self.ring.const(field.coerce(value))


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse the documented grammar: `+ - * ^`, parentheses, integer and
    rational literals, variables; implicit multiplication is not allowed."""
    parser = _Parser(_tokenize(text), ring)
    result = parser.parse_expr()
    tok = parser.peek()
    if tok[0] != "end":
        raise ParseError(f"trailing input {tok[1]!r}", tok[2])
    return result


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _monomial_str(ring, exp):
    parts = []
    for name, k in zip(ring.variables, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _coeff_str(c):
    """(text, is_negative, needs_parens) for a coefficient."""
    if isinstance(c, QuadExt):
        if c.b == 0:
            c = c.a
        elif c.a == 0:
            neg = c.b < 0
            b = -c.b if neg else c.b
            root = f"sqrt({c.d})"
            text = root if b == 1 else f"{b}*{root}"
            return text, neg, False
        else:
            return str(c), False, True
    neg = c < 0
    return str(-c if neg else c), neg, False


def poly_to_str(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exp, c in p.sorted_terms():
        mono = _monomial_str(p.ring, exp)
        text, neg, parens = _coeff_str(c)
        if parens:
            body = f"({text})*{mono}" if mono else f"({text})"
            sign = "+"
        else:
            if mono and text == "1":
                body = mono
            elif mono:
                body = f"{text}*{mono}"
            else:
                body = text
            sign = "-" if neg else "+"
        pieces.append((sign, body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
