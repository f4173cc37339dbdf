"""Exact ideal arithmetic: Groebner bases, normal forms, Hilbert functions,
elimination, saturation, colon ideals, and radicals of zero-dimensional
ideals.

The engine is a Buchberger loop with the normal selection strategy, both
classical pair criteria (coprime leading terms and the Gebauer-Moeller chain
pruning), monic normalization on insertion, and a final interreduction to the
unique reduced basis.  Saturation has two routes: a fast certified route for
homogeneous ideals saturated by linear forms (divide out the cheapest
variable of a grevlex basis, after a coordinate change making the form a
variable), and a general auxiliary-variable route.  The fast route is
self-checking: the candidate is accepted only once it is contained in every
single-generator colon, which pins it to the true saturation.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .errors import DegenerateInputError, RingMismatchError
from .polyops import exact_divide, squarefree_part
from .rings import Polynomial, PolyRing

# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------


class TermOrder:
    """A monomial order: grevlex, lex, or an elimination block order.

    `priority` lists variable names from most to least significant; it
    defaults to the ring's own order.  Block orders compare the front block
    grevlex-first, so basis elements whose leading term avoids the front
    block avoid it entirely.
    """

    __slots__ = ("kind", "priority", "front")

    def __init__(self, kind, priority=None, front=None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown order kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "priority", tuple(priority) if priority else None)
        object.__setattr__(self, "front", tuple(front) if front else None)

    def __setattr__(self, *args):
        raise AttributeError("TermOrder is immutable")

    @staticmethod
    def grevlex(priority=None) -> "TermOrder":
        return TermOrder("grevlex", priority)

    @staticmethod
    def lex(priority=None) -> "TermOrder":
        return TermOrder("lex", priority)

    @staticmethod
    def elimination(front) -> "TermOrder":
        return TermOrder("block", front=front)

    def _positions(self, ring: PolyRing):
        if self.priority is not None:
            names = list(self.priority)
            if sorted(names) != sorted(ring.variables):
                raise ValueError("priority must be a permutation of the ring variables")
        else:
            names = list(ring.variables)
        return [ring.index(v) for v in names]

    def key_function(self, ring: PolyRing):
        if self.kind == "block":
            front = [v for v in self.front if v in ring._index]
            front_pos = [ring.index(v) for v in front]
            back_pos = [i for i in range(ring.nvars) if i not in set(front_pos)]

            def key(exp, fp=tuple(front_pos), bp=tuple(back_pos)):
                f = [exp[i] for i in fp]
                b = [exp[i] for i in bp]
                return (
                    (sum(f),)
                    + tuple(-v for v in reversed(f))
                    + (sum(b),)
                    + tuple(-v for v in reversed(b))
                )

            return key
        pos = self._positions(ring)
        if self.kind == "lex":

            def key(exp, pos=tuple(pos)):
                return tuple(exp[i] for i in pos)

            return key

        def key(exp, pos=tuple(pos)):
            p = [exp[i] for i in pos]
            return (sum(p),) + tuple(-v for v in reversed(p))

        return key

    def __eq__(self, other):
        return (
            isinstance(other, TermOrder)
            and self.kind == other.kind
            and self.priority == other.priority
            and self.front == other.front
        )

    def __hash__(self):
        return hash((self.kind, self.priority, self.front))

    def __repr__(self):
        if self.kind == "block":
            return f"TermOrder.elimination({list(self.front)})"
        if self.priority:
            return f"TermOrder.{self.kind}({list(self.priority)})"
        return f"TermOrder.{self.kind}()"


DEFAULT_ORDER = TermOrder.grevlex()


# ---------------------------------------------------------------------------
# raw engine on term dicts
# ---------------------------------------------------------------------------


def _lead(pdict, keyf):
    return max(pdict, key=keyf)


def _monic(pdict, lead_exp):
    c = pdict[lead_exp]
    if c == 1:
        return pdict
    inv = 1 / c if not isinstance(c, Fraction) else Fraction(1) / c
    return {e: v * inv for e, v in pdict.items()}


def _divisible(exp, lead):
    for a, b in zip(exp, lead):
        if a < b:
            return False
    return True


def _reduce_full(pdict, basis, keyf):
    """Fully reduce a term dict against (dict, lead_exp, neg-ordered terms).

    basis entries are (pdict, lead_exp); returns the remainder dict.
    """
    if not pdict:
        return {}
    work = dict(pdict)
    heap = [tuple(-k for k in keyf(e)) + (e,) for e in work]
    heapq.heapify(heap)
    nkeys = len(heap[0]) - 1
    remainder = {}
    while heap:
        entry = heapq.heappop(heap)
        exp = entry[nkeys]
        c = work.get(exp)
        if not c:
            continue
        reducer = None
        for g, glead in basis:
            if _divisible(exp, glead):
                reducer = (g, glead)
                break
        if reducer is None:
            remainder[exp] = c
            del work[exp]
            continue
        g, glead = reducer
        shift = tuple(a - b for a, b in zip(exp, glead))
        factor = c  # g is monic
        del work[exp]
        for e2, c2 in g.items():
            if e2 == glead:
                continue
            e = tuple(a + b for a, b in zip(shift, e2))
            s = work.get(e)
            if s is None:
                work[e] = -factor * c2
                heapq.heappush(heap, tuple(-k for k in keyf(e)) + (e,))
            else:
                s = s - factor * c2
                if s:
                    work[e] = s
                else:
                    del work[e]
    return remainder


def _spoly_dict(g1, lead1, g2, lead2, lcm):
    s1 = tuple(a - b for a, b in zip(lcm, lead1))
    s2 = tuple(a - b for a, b in zip(lcm, lead2))
    out = {}
    for e, c in g1.items():
        out[tuple(a + b for a, b in zip(e, s1))] = c
    for e, c in g2.items():
        e = tuple(a + b for a, b in zip(e, s2))
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _exp_lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _buchberger_dicts(gen_dicts, keyf):
    """Reduced monic Groebner basis of the given term dicts."""
    basis: list[tuple[dict, tuple]] = []  # (dict, lead)
    pair_heap: list = []
    alive: set[tuple[int, int]] = set()
    counter = count()

    def lead_of(i):
        return basis[i][1]

    def add_pairs(t):
        # Gebauer-Moeller update for the new element index t
        lt = lead_of(t)
        new_pairs = {}
        for i in range(t):
            new_pairs[i] = _exp_lcm(lead_of(i), lt)
        # chain criterion against existing pairs
        for (i, j) in list(alive):
            lcm_ij = _exp_lcm(lead_of(i), lead_of(j))
            if (
                _divisible(lcm_ij, lt)
                and lcm_ij != new_pairs[i]
                and lcm_ij != new_pairs[j]
            ):
                alive.discard((i, j))
        # prune among the new pairs: keep minimal lcms, one per value
        items = sorted(new_pairs.items(), key=lambda kv: (keyf(kv[1]), kv[0]))
        kept: list[tuple[int, tuple]] = []
        seen = set()
        for i, lc in items:
            if lc in seen:
                continue
            if any(_divisible(lc, other) and other != lc for _, other in kept):
                continue
            kept.append((i, lc))
            seen.add(lc)
        for i, lc in kept:
            # coprime criterion
            if lc == tuple(a + b for a, b in zip(lead_of(i), lt)):
                continue
            alive.add((i, t))
            heapq.heappush(pair_heap, (keyf(lc), next(counter), i, t, lc))

    for d in sorted(gen_dicts, key=lambda d: keyf(_lead(d, keyf)) if d else ()):
        if not d:
            continue
        lead = _lead(d, keyf)
        red = _reduce_full(d, basis, keyf)
        if not red:
            continue
        lead = _lead(red, keyf)
        basis.append((_monic(red, lead), lead))
        add_pairs(len(basis) - 1)

    while pair_heap:
        _, _, i, j, lcm = heapq.heappop(pair_heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        gi, li = basis[i]
        gj, lj = basis[j]
        s = _spoly_dict(gi, li, gj, lj, lcm)
        red = _reduce_full(s, basis, keyf)
        if red:
            lead = _lead(red, keyf)
            basis.append((_monic(red, lead), lead))
            add_pairs(len(basis) - 1)

    # minimalize: drop elements whose lead is divisible by another lead
    order_idx = sorted(range(len(basis)), key=lambda i: keyf(basis[i][1]))
    kept_idx = []
    for i in order_idx:
        li = basis[i][1]
        if not any(_divisible(li, basis[j][1]) for j in kept_idx):
            kept_idx.append(i)
    minimal = [basis[i] for i in kept_idx]

    # tail-reduce to the reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            others = [minimal[j] for j in range(len(minimal)) if j != i]
            red = _reduce_full(minimal[i][0], others, keyf)
            if not red:
                minimal.pop(i)
                changed = True
                break
            lead = _lead(red, keyf)
            red = _monic(red, lead)
            if red != minimal[i][0]:
                minimal[i] = (red, lead)
                changed = True
    minimal.sort(key=lambda kv: keyf(kv[1]))
    return minimal


# ---------------------------------------------------------------------------
# public objects
# ---------------------------------------------------------------------------


class GroebnerBasis:
    """A reduced, monic Groebner basis together with its order."""

    __slots__ = ("ring", "order", "polys", "_keyf", "_pairs")

    def __init__(self, ring, order, polys):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "polys", tuple(polys))
        keyf = order.key_function(ring)
        object.__setattr__(self, "_keyf", keyf)
        object.__setattr__(
            self, "_pairs", tuple((dict(p.terms), max(p.terms, key=keyf)) for p in polys)
        )

    def __setattr__(self, *args):
        raise AttributeError("GroebnerBasis is immutable")

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    @property
    def lead_exponents(self):
        return tuple(lead for _, lead in self._pairs)

    def max_degree(self) -> int:
        return max((p.degree() for p in self.polys), default=0)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatchError("normal form of a polynomial from another ring")
        red = _reduce_full(dict(f.terms), self._pairs, self._keyf)
        return Polynomial(self.ring, red)

    def normal_form_with_cofactors(self, f: Polynomial):
        """(remainder, cofactors): f = sum(cofactor_i * basis_i) + remainder."""
        ring = self.ring
        keyf = self._keyf
        work = dict(f.terms)
        cofactors = [dict() for _ in self.polys]
        remainder = {}
        while work:
            exp = max(work, key=keyf)
            c = work.pop(exp)
            hit = None
            for idx, (g, glead) in enumerate(self._pairs):
                if _divisible(exp, glead):
                    hit = idx
                    break
            if hit is None:
                remainder[exp] = c
                continue
            g, glead = self._pairs[hit]
            shift = tuple(a - b for a, b in zip(exp, glead))
            cofactors[hit][shift] = cofactors[hit].get(shift, 0) + c
            for e2, c2 in g.items():
                if e2 == glead:
                    continue
                e = tuple(a + b for a, b in zip(shift, e2))
                s = work.get(e)
                v = c * c2
                if s is None:
                    work[e] = -v
                else:
                    s = s - v
                    if s:
                        work[e] = s
                    else:
                        del work[e]
        return (
            Polynomial(ring, remainder),
            [ring.from_terms(cf) for cf in cofactors],
        )

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero

    def is_unit(self) -> bool:
        zero_exp = (0,) * self.ring.nvars
        return any(lead == zero_exp for lead in self.lead_exponents)

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} elements, {self.order!r})"


class Ideal:
    """A finitely presented ideal with write-once cached Groebner bases."""

    __slots__ = ("ring", "gens", "_gb_cache")

    def __init__(self, ring, gens):
        fixed = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise RingMismatchError("ideal generators must live in the given ring")
            if not g.is_zero:
                fixed.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(fixed))
        object.__setattr__(self, "_gb_cache", {})

    def __setattr__(self, *args):
        raise AttributeError("Ideal is immutable")

    def groebner_basis(self, order: TermOrder = DEFAULT_ORDER) -> GroebnerBasis:
        gb = self._gb_cache.get(order)
        if gb is None:
            gb = buchberger(self, order)
            self._gb_cache.setdefault(order, gb)
        return gb

    def attach_basis(self, gb: GroebnerBasis):
        self._gb_cache.setdefault(gb.order, gb)
        return self

    def normal_form(self, f: Polynomial, order: TermOrder = DEFAULT_ORDER) -> Polynomial:
        return self.groebner_basis(order).normal_form(f)

    def contains(self, f: Polynomial) -> bool:
        if self._gb_cache:
            gb = next(iter(self._gb_cache.values()))
        else:
            gb = self.groebner_basis()
        return gb.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        if self._gb_cache:
            gb = next(iter(self._gb_cache.values()))
        else:
            gb = self.groebner_basis()
        return all(gb.contains(g) for g in other.gens)

    def is_unit(self) -> bool:
        return self.groebner_basis().is_unit()

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        a = self.groebner_basis().polys
        b = other.groebner_basis().polys
        return a == b

    def __hash__(self):
        return hash((self.ring, self.groebner_basis().polys))

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens[:6])
        if len(self.gens) > 6:
            inside += f", ... ({len(self.gens)} generators)"
        return f"Ideal({inside})"


def buchberger(ideal: Ideal, order: TermOrder = DEFAULT_ORDER) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal for the given order."""
    ring = ideal.ring
    keyf = order.key_function(ring)
    dicts = [dict(g.terms) for g in ideal.gens]
    reduced = _buchberger_dicts(dicts, keyf)
    polys = [Polynomial(ring, d) for d, _ in reduced]
    return GroebnerBasis(ring, order, polys)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(f)


# ---------------------------------------------------------------------------
# Hilbert functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HilbertData:
    """Values H(0..T) of dim (R/I)_t, plus the detected stable tail."""

    values: tuple
    stable_value: int | None
    stable_from: int | None

    def value_at(self, t: int) -> int:
        if t < len(self.values):
            return self.values[t]
        if self.stable_value is None:
            raise ValueError("no stable value detected")
        return self.stable_value


def _count_standard_monomials(nvars, degree, leads):
    """Number of degree-`degree` monomials divisible by no lead exponent."""
    total = 0
    exp = [0] * nvars

    def rec(pos, remaining):
        nonlocal total
        if pos == nvars - 1:
            exp[pos] = remaining
            if not any(_divisible(tuple(exp), l) for l in leads):
                total += 1
            return
        for k in range(remaining + 1):
            exp[pos] = k
            # prune: skip subtrees already divisible by a lead that only
            # involves the filled positions
            rec(pos + 1, remaining - k)
        exp[pos] = 0

    rec(0, degree)
    return total


def hilbert_function(ideal: Ideal, upto: int | None = None) -> HilbertData:
    """Hilbert function of R/I for a homogeneous ideal, with stable-tail
    detection: three equal consecutive values past the basis degree."""
    if not ideal.is_homogeneous():
        raise DegenerateInputError("Hilbert function needs a homogeneous ideal")
    ring = ideal.ring
    gb = ideal.groebner_basis(DEFAULT_ORDER)
    leads = list(gb.lead_exponents)
    # minimal lead set
    leads = [
        l for i, l in enumerate(leads) if not any(j != i and _divisible(l, m) for j, m in enumerate(leads))
    ]
    maxdeg = max((sum(l) for l in leads), default=0)
    values = []
    stable_value = None
    stable_from = None
    t = 0
    horizon = max(maxdeg + 4, (upto or 0) + 1, 4)
    while True:
        values.append(_count_standard_monomials(ring.nvars, t, leads))
        if t >= maxdeg + 2:
            a, b, c = values[t - 2], values[t - 1], values[t]
            if a == b == c:
                stable_value = a
                stable_from = t - 2
                # walk stable_from back through the equal run
                while stable_from > 0 and values[stable_from - 1] == stable_value:
                    stable_from -= 1
                break
        t += 1
        if t >= horizon + ring.nvars + 6:
            break  # no stabilization: positive-dimensional input
    if upto is not None:
        while len(values) <= upto:
            if stable_value is None:
                values.append(_count_standard_monomials(ring.nvars, len(values), leads))
            else:
                values.append(stable_value)
        values = values[: upto + 1]
    return HilbertData(tuple(values), stable_value, stable_from)


def scheme_length(ideal: Ideal) -> int:
    """Stable Hilbert value: the length of a finite projective scheme."""
    hd = hilbert_function(ideal)
    if hd.stable_value is None:
        raise DegenerateInputError("the scheme is not zero-dimensional")
    return hd.stable_value


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------


def eliminate(ideal: Ideal, drop) -> Ideal:
    """Generators of I intersected with K[remaining variables], computed with
    a block order; the result lives in the smaller ring."""
    drop = set(drop)
    ring = ideal.ring
    for v in drop:
        ring.index(v)
    if not drop:
        return ideal
    keep = [v for v in ring.variables if v not in drop]
    small = PolyRing(keep, ring.field)
    front = [v for v in ring.variables if v in drop]
    order = TermOrder.elimination(front)
    gb = ideal.groebner_basis(order)
    kept = []
    drop_pos = [ring.index(v) for v in front]
    for p in gb.polys:
        if all(all(e[i] == 0 for i in drop_pos) for e in p.terms):
            kept.append(p.restrict(small))
    return Ideal(small, kept)


# ---------------------------------------------------------------------------
# sums, products, powers, intersections, colons
# ---------------------------------------------------------------------------


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideal sum needs a common ring")
    return Ideal(a.ring, list(a.gens) + list(b.gens))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideal product needs a common ring")
    return Ideal(a.ring, [f * g for f in a.gens for g in b.gens])


def ideal_power(a: Ideal, e: int) -> Ideal:
    if e < 0:
        raise ValueError("ideal power must be nonnegative")
    if e == 0:
        return Ideal(a.ring, [a.ring.one()])
    from itertools import combinations_with_replacement

    gens = []
    for combo in combinations_with_replacement(a.gens, e):
        p = a.ring.one()
        for g in combo:
            p = p * g
        gens.append(p)
    return Ideal(a.ring, gens)


_AUX = "tsat"


def _aux_ring(ring: PolyRing) -> PolyRing:
    name = _AUX
    while name in ring._index:
        name += "0"
    return PolyRing((name,) + ring.variables, ring.field), name


def ideal_intersection(a: Ideal, b: Ideal) -> Ideal:
    """I cap J by eliminating t from t*I + (1-t)*J."""
    if a.ring != b.ring:
        raise RingMismatchError("ideal intersection needs a common ring")
    ring = a.ring
    big, t = _aux_ring(ring)
    tv = big.var(t)
    gens = [g.restrict(big) * tv for g in a.gens]
    one_minus_t = big.one() - tv
    gens += [g.restrict(big) * one_minus_t for g in b.gens]
    small = eliminate(Ideal(big, gens), {t})
    return Ideal(ring, [g.restrict(ring) for g in small.gens])


def ideal_colon(a: Ideal, b: Ideal) -> Ideal:
    """The colon ideal a : b."""
    if a.ring != b.ring:
        raise RingMismatchError("colon needs a common ring")
    result = None
    for h in b.gens:
        inter = ideal_intersection(a, Ideal(a.ring, [h]))
        part = Ideal(a.ring, [exact_divide(g, h) for g in inter.gens])
        result = part if result is None else ideal_intersection(result, part)
    if result is None:
        raise DegenerateInputError("colon by the zero ideal")
    return result


def ideal_combine(a: Ideal, b: Ideal | None = None, op: str = "sum", e: int | None = None) -> Ideal:
    """Named dispatch kept for the command surface: sum, product, power,
    intersection."""
    if op == "sum":
        return ideal_sum(a, b)
    if op == "product":
        return ideal_product(a, b)
    if op == "power":
        return ideal_power(a, e)
    if op == "intersection":
        return ideal_intersection(a, b)
    raise ValueError(f"unknown ideal operation {op!r}")


# ---------------------------------------------------------------------------
# saturation
# ---------------------------------------------------------------------------


def _divide_out_variable(p: Polynomial, pos: int) -> Polynomial:
    m = min(e[pos] for e in p.terms)
    if m == 0:
        return p
    out = {}
    for e, c in p.terms.items():
        ne = list(e)
        ne[pos] -= m
        out[tuple(ne)] = c
    return Polynomial(p.ring, out)


def _colon_variable_power(ideal: Ideal, var: str) -> Ideal:
    """I : var^infinity for homogeneous I: grevlex with `var` cheapest, then
    divide each basis element by its full var power (iterated to a fixpoint).
    """
    ring = ideal.ring
    pos = ring.index(var)
    priority = [v for v in ring.variables if v != var] + [var]
    order = TermOrder.grevlex(priority)
    current = ideal
    while True:
        gb = current.groebner_basis(order)
        divided = [_divide_out_variable(p, pos) for p in gb.polys]
        if all(d == p for d, p in zip(divided, gb.polys)):
            result = Ideal(ring, gb.polys)
            result.attach_basis(gb)
            return result
        current = Ideal(ring, divided)


def _linear_form_to_variable(ell: Polynomial):
    """A ring substitution phi with phi(ell) = v for some variable v, plus its
    inverse; ell must be linear homogeneous."""
    ring = ell.ring
    coeffs = {}
    for e, c in ell.terms.items():
        if sum(e) != 1:
            raise DegenerateInputError("saturation shortcut needs a linear form")
        coeffs[e.index(1)] = c
    pos = max(coeffs)
    v = ring.variables[pos]
    c = coeffs[pos]
    rest = ring.zero()
    for i, ci in coeffs.items():
        if i != pos:
            rest = rest + ring.var(ring.variables[i]) * ci
    inv_c = ring.field.one / c
    forward = {v: (ring.var(v) - rest) * inv_c}  # phi(ell) = v
    backward = {v: ring.var(v) * c + rest}
    return v, forward, backward


def _colon_linear_power(ideal: Ideal, ell: Polynomial) -> Ideal:
    """I : ell^infinity for homogeneous I and a linear form ell."""
    if ell.degree() == 1 and len(ell.terms) == 1:
        exp, c = next(iter(ell.terms.items()))
        var = ideal.ring.variables[exp.index(1)]
        return _colon_variable_power(ideal, var)
    v, forward, backward = _linear_form_to_variable(ell)
    moved = Ideal(ideal.ring, [g.substitute(forward) for g in ideal.gens])
    colon = _colon_variable_power(moved, v)
    return Ideal(ideal.ring, [g.substitute(backward) for g in colon.gens])


def _saturation_candidates(k: int):
    """Deterministic coefficient vectors for the certified linear combination."""
    yield tuple(1 for _ in range(k))
    yield tuple(i + 1 for i in range(k))
    yield tuple((i + 1) ** 2 for i in range(k))
    yield tuple((i + 2) ** 3 % 97 + 1 for i in range(k))
    seed = 0x5A17
    for _ in range(8):
        vec = []
        for _ in range(k):
            seed = (seed * 1103515245 + 12345) % (1 << 31)
            vec.append(seed % 89 + 1)
        yield tuple(vec)


def saturate_general(ideal: Ideal, by: Ideal) -> Ideal:
    """I : J^infinity by the auxiliary-variable route: for each generator h,
    eliminate t from I + (1 - t*h); intersect the single-generator results."""
    ring = ideal.ring
    result = None
    for h in by.gens:
        big, t = _aux_ring(ring)
        gens = [g.restrict(big) for g in ideal.gens]
        gens.append(big.one() - big.var(t) * h.restrict(big))
        small = eliminate(Ideal(big, gens), {t})
        part = Ideal(ring, [g.restrict(ring) for g in small.gens])
        result = part if result is None else ideal_intersection(result, part)
    if result is None:
        raise DegenerateInputError("saturation by the zero ideal")
    return result


def saturate(ideal: Ideal, by) -> Ideal:
    """I : J^infinity.

    Homogeneous ideals saturated by linear forms take the certified fast
    route; everything else goes through the auxiliary-variable construction.
    """
    if isinstance(by, Polynomial):
        by = Ideal(ideal.ring, [by])
    if by.ring != ideal.ring:
        raise RingMismatchError("saturation operands must share a ring")
    if not by.gens:
        raise DegenerateInputError("saturation by the zero ideal")
    if not ideal.gens:
        return ideal
    linear = all(g.degree() == 1 and g.is_homogeneous() for g in by.gens)
    if not (linear and ideal.is_homogeneous()):
        return saturate_general(ideal, by)

    parts = [_colon_linear_power(ideal, h) for h in by.gens]
    if len(parts) == 1:
        return parts[0]
    for coeffs in _saturation_candidates(len(by.gens)):
        ell = ideal.ring.zero()
        for c, h in zip(coeffs, by.gens):
            ell = ell + h * c
        if ell.is_zero:
            continue
        candidate = _colon_linear_power(ideal, ell)
        # candidate >= Sat(I, J) always; candidate <= every single colon
        # pins it to their intersection, which is Sat(I, J)
        if all(part.contains_ideal(candidate) for part in parts):
            return candidate
    result = parts[0]
    for part in parts[1:]:
        result = ideal_intersection(result, part)
    return result


# ---------------------------------------------------------------------------
# low-degree slices (ideal members of bounded degree, by linear algebra)
# ---------------------------------------------------------------------------


def degree_slice_members(ideal: Ideal, d: int, strict: bool = True):
    """Basis of the space of ideal members of degree == d (strict) or <= d.

    Linear algebra on normal forms: a combination of monomials lies in the
    ideal exactly when its normal form vanishes.
    """
    from .polyops import nullspace

    ring = ideal.ring
    gb = ideal.groebner_basis()

    def degree_monomials(k):
        out = []
        exp = [0] * ring.nvars

        def rec(pos, remaining):
            if pos == ring.nvars - 1:
                exp[pos] = remaining
                out.append(tuple(exp))
                exp[pos] = 0
                return
            for v in range(remaining + 1):
                exp[pos] = v
                rec(pos + 1, remaining - v)
            exp[pos] = 0

        rec(0, k)
        return out

    monos = []
    degrees = [d] if strict else range(d + 1)
    for k in degrees:
        monos.extend(degree_monomials(k))
    nf_exps = set()
    nfs = []
    for m in monos:
        nf = gb.normal_form(ring.monomial(m))
        nfs.append(nf)
        nf_exps.update(nf.terms)
    cols = sorted(nf_exps)
    col_index = {e: i for i, e in enumerate(cols)}
    field = ring.field
    rows = []
    for nf in nfs:
        row = [field.zero] * len(cols)
        for e, c in nf.terms.items():
            row[col_index[e]] = c
        rows.append(row)
    # combinations over the monomials: transpose to solve sum_i a_i nf_i = 0
    transposed = [[rows[i][j] for i in range(len(rows))] for j in range(len(cols))]
    kernel = nullspace(transposed, len(monos), one=field.one)
    members = []
    for vec in kernel:
        p = ring.zero()
        for coeff, m in zip(vec, monos):
            if coeff:
                p = p + ring.monomial(m, coeff)
        if not p.is_zero:
            members.append(p)
    return members


# ---------------------------------------------------------------------------
# radicals of zero-dimensional ideals in three variables
# ---------------------------------------------------------------------------


def _radical_chart_candidates(ring):
    x, y, z = ring.gens()
    yield z
    yield y
    yield x
    yield x + y + z
    yield x + 2 * y + 3 * z
    yield x - y + 2 * z
    yield 2 * x + 3 * y - 5 * z
    yield x + 5 * y - 7 * z


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.gens())


def _avoids_support(ideal: Ideal, ell: Polynomial) -> bool:
    cut = ideal_sum(ideal, Ideal(ideal.ring, [ell]))
    return saturate(cut, irrelevant_ideal(ideal.ring)).is_unit()


def _univariate_eliminant(affine: Ideal, keep: str, other: str) -> Polynomial:
    """Generator of (affine ideal) cap K[keep]; zero if the scheme is not finite."""
    sub = eliminate(affine, {other})
    gens = [g for g in sub.gens if not g.is_zero]
    if not gens:
        return sub.ring.zero()
    g = sub.ring.zero()
    from .polyops import poly_gcd

    for p in gens:
        g = poly_gcd(g, p)
    return g


def zero_dim_radical(ideal: Ideal, max_attempts: int = 5) -> Ideal:
    """Radical of a homogeneous ideal with finite projective support in three
    variables: dehomogenize to a chart line missing the support, add the
    squarefree parts of both univariate eliminants, rehomogenize, saturate.
    """
    ring = ideal.ring
    if ring.nvars != 3:
        raise DegenerateInputError("zero_dim_radical expects a three-variable ring")
    if not ideal.is_homogeneous():
        raise DegenerateInputError("zero_dim_radical expects a homogeneous ideal")
    hd = hilbert_function(ideal)
    if hd.stable_value is None:
        raise DegenerateInputError("the ideal is not zero-dimensional in the projective plane")
    if hd.stable_value == 0:
        return Ideal(ring, [ring.one()])

    field = ring.field
    attempts = 0
    for ell in _radical_chart_candidates(ring):
        if attempts >= max_attempts:
            break
        attempts += 1
        if not _avoids_support(ideal, ell):
            continue
        # build the matrix A with ell(A x) = x2: columns are two kernel
        # vectors of ell and one vector where ell evaluates to 1
        coeffs = [field.zero, field.zero, field.zero]
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
        special = [field.zero] * 3
        special[pivot] = field.one / coeffs[pivot]
        matrix = tuple(
            tuple((kernel[0][i], kernel[1][i], special[i])) for i in range(3)
        )
        moved = [g.linear_change(matrix) for g in ideal.gens]
        aff_ring = PolyRing(("x", "y"), field)
        affine = Ideal(
            aff_ring,
            [
                g.substitute({ring.variables[2]: ring.one()}).restrict(
                    aff_ring,
                    {ring.variables[0]: "x", ring.variables[1]: "y"},
                )
                for g in moved
            ],
        )
        ex = _univariate_eliminant(affine, "x", "y")
        ey = _univariate_eliminant(affine, "y", "x")
        if ex.is_zero or ey.is_zero:
            continue
        extra = [
            squarefree_part(ex).restrict(aff_ring),
            squarefree_part(ey).restrict(aff_ring),
        ]
        rad_affine = Ideal(aff_ring, list(affine.gens) + extra)
        moved_ring = PolyRing(ring.variables, field)
        hom_gens = [
            g.homogenize(
                moved_ring,
                ring.variables[2],
                {"x": ring.variables[0], "y": ring.variables[1]},
            )
            for g in rad_affine.gens
        ]
        hom = Ideal(moved_ring, hom_gens)
        hom = saturate(hom, Ideal(moved_ring, [moved_ring.var(ring.variables[2])]))
        hom = saturate(hom, irrelevant_ideal(moved_ring))
        from .classifier import _matrix_inverse

        inverse = _matrix_inverse(matrix, field)
        back = [g.linear_change([list(r) for r in inverse]) for g in hom.gens]
        result = Ideal(ring, back)
        if result.contains_ideal(ideal):
            return result
    raise DegenerateInputError(
        "could not find a chart line avoiding the support; is the ideal zero-dimensional?"
    )
