"""Hecke algebra arithmetic over Z[v, v^-1] (v = q^(1/2)).

Elements are finite linear combinations of basis symbols indexed by group
elements, in one of three bases: T (the defining basis, T_s^2 = q + (q-1)T_s),
Ttilde (T normalised by v^-l), and C (the bar-invariant basis).  Structure
constants f, g, h are the coefficients of products in the Ttilde/C bases;
their minimal v-exponents drive the boundedness bound N and the a-function
lower bounds.  Functions that need Kazhdan-Lusztig data accept a KLTable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from weakref import WeakKeyDictionary

from .coxeter import CoxeterSystem, Element, IDENTITY, sort_key
from .laurent import LaurentPoly

T_BASIS = "T"
TTILDE_BASIS = "Ttilde"
C_BASIS = "C"

Terms = dict[Element, LaurentPoly]

_Q = LaurentPoly({2: 1})            # q
_Q_MINUS_1 = LaurentPoly({2: 1, 0: -1})
_QINV = LaurentPoly({-2: 1})        # q^-1
_QINV_MINUS_1 = LaurentPoly({-2: 1, 0: -1})


@dataclass
class HeckeElement:
    basis: str
    terms: Terms = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {w: c for w, c in self.terms.items() if c}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def support(self) -> list[Element]:
        return sorted(self.terms, key=sort_key)

    def coeff(self, w: Element) -> LaurentPoly:
        return self.terms.get(w, LaurentPoly.zero())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = {T_BASIS: "T", TTILDE_BASIS: "Tt", C_BASIS: "C"}[self.basis]
        bits = []
        for w in self.support():
            label = ",".join(str(s + 1) for s in w) if w else "e"
            bits.append(f"({self.terms[w]})*{sym}[{label}]")
        return " + ".join(bits)


def unit(w: Element = IDENTITY, basis: str = T_BASIS) -> HeckeElement:
    return HeckeElement(basis, {w: LaurentPoly.one()})


def _add_term(acc: Terms, w: Element, c: LaurentPoly) -> None:
    cur = acc.get(w)
    s = c if cur is None else cur + c
    if s:
        acc[w] = s
    else:
        acc.pop(w, None)


def _mul_gen_right(sys: CoxeterSystem, terms: Terms, s: int) -> Terms:
    """(sum c_w T_w) * T_s in the T basis."""
    out: Terms = {}
    for w, c in terms.items():
        ws = sys.append_right(w, s)
        if len(ws) > len(w):
            _add_term(out, ws, c)
        else:
            _add_term(out, ws, c * _Q)
            _add_term(out, w, c * _Q_MINUS_1)
    return out


def _mul_gen_left_inv(sys: CoxeterSystem, s: int, terms: Terms) -> Terms:
    """T_s^-1 * (sum c_w T_w): T_s^-1 = q^-1 T_s + (q^-1 - 1) T_e."""
    out: Terms = {}
    for w, c in terms.items():
        sw = sys.multiply((s,), w)
        if len(sw) > len(w):
            _add_term(out, sw, c * _QINV)
            _add_term(out, w, c * _QINV_MINUS_1)
        else:
            _add_term(out, sw, c)
    return out


def t_mul(sys: CoxeterSystem, a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the T basis."""
    if a.basis != T_BASIS or b.basis != T_BASIS:
        raise ValueError("t_mul requires both factors in the T basis")
    out: Terms = {}
    for y, cy in b.terms.items():
        part = {w: c * cy for w, c in a.terms.items()}
        for s in y:
            part = _mul_gen_right(sys, part, s)
        for w, c in part.items():
            _add_term(out, w, c)
    return HeckeElement(T_BASIS, out)


_BAR_T: "WeakKeyDictionary[CoxeterSystem, dict[Element, Terms]]" = WeakKeyDictionary()


def bar_t_word(sys: CoxeterSystem, w: Element) -> Terms:
    """bar(T_w) = (T_{w^-1})^-1 expanded in the T basis, memoized per system."""
    cache = _BAR_T.get(sys)
    if cache is None:
        cache = _BAR_T[sys] = {IDENTITY: {IDENTITY: LaurentPoly.one()}}
    got = cache.get(w)
    if got is None:
        # bar is multiplicative: bar(T_w) = bar(T_s) * bar(T_rest) for w = s.rest
        rest = bar_t_word(sys, sys.multiply((w[0],), w))
        got = cache[w] = _mul_gen_left_inv(sys, w[0], rest)
    return got


def bar_terms(sys: CoxeterSystem, terms: Terms) -> Terms:
    """bar(sum a_w T_w) = sum bar(a_w) (T_{w^-1})^-1, as a term dict."""
    out: Terms = {}
    for w, c in terms.items():
        cb = c.bar()
        for z, p in bar_t_word(sys, w).items():
            _add_term(out, z, p * cb)
    return out


def bar(sys: CoxeterSystem, a: HeckeElement) -> HeckeElement:
    """The bar involution on the Hecke algebra, in the T basis."""
    if a.basis != T_BASIS:
        raise ValueError("bar requires the T basis")
    return HeckeElement(T_BASIS, bar_terms(sys, a.terms))


def t_to_ttilde(sys: CoxeterSystem, a: HeckeElement) -> HeckeElement:
    if a.basis != T_BASIS:
        raise ValueError("expected T basis")
    return HeckeElement(
        TTILDE_BASIS, {w: c.shift(len(w)) for w, c in a.terms.items()}
    )


def ttilde_to_t(sys: CoxeterSystem, a: HeckeElement) -> HeckeElement:
    if a.basis != TTILDE_BASIS:
        raise ValueError("expected Ttilde basis")
    return HeckeElement(T_BASIS, {w: c.shift(-len(w)) for w, c in a.terms.items()})


@dataclass(frozen=True)
class StructureRow:
    x: Element
    y: Element
    kind: str  # "f" | "g" | "h"
    row: dict[Element, LaurentPoly]

    def min_exponent(self) -> int | None:
        exps = [c.min_exp() for c in self.row.values() if c]
        return min(exps) if exps else None

    def support(self) -> list[Element]:
        return sorted(self.row, key=sort_key)


def f_consts(sys: CoxeterSystem, x: Element, y: Element) -> StructureRow:
    """Row of Ttilde_x Ttilde_y = sum_z f_{x,y,z} Ttilde_z."""
    prod: Terms = {x: LaurentPoly.one()}
    for s in y:
        prod = _mul_gen_right(sys, prod, s)
    shift = -len(x) - len(y)
    row = {z: c.shift(len(z) + shift) for z, c in prod.items() if c}
    return StructureRow(x, y, "f", row)


def to_c_basis(table, terms: Terms) -> dict[Element, LaurentPoly]:
    """Expand a T-basis term dict in the C basis by triangular
    back-substitution (the T_w coefficient of C_w is v^-l(w))."""
    rest = dict(terms)
    out: dict[Element, LaurentPoly] = {}
    while rest:
        w = max(rest, key=sort_key)
        c = rest.pop(w) * LaurentPoly.v_power(len(w))
        out[w] = c
        for z, p in table.c_basis_terms(w).items():
            if z == w:
                continue
            _add_term(rest, z, p * (-1) * c)
    return {w: c for w, c in out.items() if c}


def g_consts(table, x: Element, y: Element) -> StructureRow:
    """Row of Ttilde_x C_y = sum_z g_{x,y,z} C_z."""
    sys = table.sys
    prod = {w: c.shift(-len(x)) for w, c in table.c_basis_terms(y).items()}
    acc: Terms = {}
    for w, c in prod.items():
        part = {x: c}
        for s in w:
            part = _mul_gen_right(sys, part, s)
        for z, cz in part.items():
            _add_term(acc, z, cz)
    return StructureRow(x, y, "g", to_c_basis(table, acc))


def h_consts(table, x: Element, y: Element) -> StructureRow:
    """Row of C_x C_y = sum_z h_{x,y,z} C_z."""
    sys = table.sys
    a = HeckeElement(T_BASIS, dict(table.c_basis_terms(x)))
    b = HeckeElement(T_BASIS, dict(table.c_basis_terms(y)))
    prod = t_mul(sys, a, b)
    return StructureRow(x, y, "h", to_c_basis(table, prod.terms))


def bound_N(sys: CoxeterSystem) -> int:
    """The boundedness constant: the longest element of a finite standard
    parabolic has length equal to the largest commuting clique."""
    return sys.max_clique_size()


@dataclass
class BoundednessReport:
    n_bound: int
    radius: int
    passed: bool
    pairs_checked: int
    worst_exponent: int | None          # most negative v-exponent seen
    witness: tuple[Element, Element, Element] | None

    def to_json(self) -> dict:
        return {
            "n_bound": self.n_bound,
            "radius": self.radius,
            "passed": self.passed,
            "pairs_checked": self.pairs_checked,
            "worst_exponent": self.worst_exponent,
            "witness": None
            if self.witness is None
            else [[s + 1 for s in w] for w in self.witness],
        }


def boundedness_check(
    sys: CoxeterSystem, radius: int, n_bound: int | None = None
) -> BoundednessReport:
    """Check v^N f_{x,y,z} has no negative exponents over the radius ball."""
    if n_bound is None:
        n_bound = bound_N(sys)
    ball = sys.ball(radius)
    worst: int | None = None
    witness = None
    pairs = 0
    for x in ball:
        for y in ball:
            pairs += 1
            row = f_consts(sys, x, y)
            for z, c in row.row.items():
                m = c.min_exp()
                if m is not None and (worst is None or m < worst):
                    worst = m
                    witness = (x, y, z)
    passed = worst is None or worst >= -n_bound
    return BoundednessReport(n_bound, radius, passed, pairs, worst, witness)


def a_lower_bound(table, z: Element, pairs) -> int:
    """max over the sampled (x,y) of -min v-exponent of h_{x,y,z}: a certified
    lower bound for the a-function at z."""
    best = 0
    for x, y in pairs:
        c = h_consts(table, x, y).row.get(z)
        if c:
            m = c.min_exp()
            if m is not None and -m > best:
                best = -m
    return best


def delta(table, z: Element) -> int:
    """Degree of P_{e,z} in q."""
    return table.kl_poly(IDENTITY, z).degree() if z else 0


def _lines_up_to(sys: CoxeterSystem, max_len: int) -> list[Element]:
    out: list[Element] = [IDENTITY]
    frontier: list[Element] = [IDENTITY]
    for _ in range(max_len):
        nxt = []
        for u in frontier:
            for s in range(sys.n):
                if not u:
                    nxt.append((s,))
                elif s != u[-1] and not sys.commutes(u[-1], s):
                    nxt.append(u + (s,))
        out.extend(nxt)
        frontier = nxt
    return out


def distinguished_involutions(
    sys: CoxeterSystem, radius: int, table=None
) -> list[Element]:
    """The distinguished involutions of P_n with length <= radius:
    {e} u {s_i} u {u s t u^-1 : st = ts, u a segment in u s t u^-1}.

    Every returned element is verified to be an involution satisfying
    a(z) = l(z) - 2 deg P_{e,z}, with a read off the cell classifier.
    """
    from .coxeter import POLYGON
    from .wordgeom import segment_at_word
    from . import cells as _cells
    from .klpoly import KLTable

    if sys.kind != POLYGON or sys.n < 5:
        raise ValueError("distinguished involutions are implemented for P_n, n >= 5")
    if table is None:
        table = KLTable(sys)

    found: set[Element] = {IDENTITY}
    if radius >= 1:
        found.update((s,) for s in range(sys.n))
    if radius >= 2:
        half = (radius - 2) // 2
        commuting_pairs = sorted(sys.commuting)
        for u in _lines_up_to(sys, half):
            for s, t in commuting_pairs:
                # the involution u^-1 (st) u attached to the cell word (st)u;
                # u must be the trailing segment of that word
                word = (s, t) + u
                if len(sys.reduce(word)) != len(word):
                    continue
                if u and not segment_at_word(sys, word, 2, len(word)):
                    continue
                z = sys.reduce(u[::-1] + word)
                if len(z) != 2 * len(u) + 2:
                    continue
                found.add(z)

    out = sorted(found, key=sort_key)
    a_by_kind = {_cells.UNIT: 0, _cells.TYPE_I: 1, _cells.TYPE_II: 2}
    for z in out:
        if sys.invert(z) != z:
            raise AssertionError(f"candidate {z} is not an involution")
        a = a_by_kind[_cells.classify_left(sys, z).kind]
        if a != len(z) - 2 * delta(table, z):
            raise AssertionError(
                f"candidate {z} fails a = l - 2*delta: a={a}, l={len(z)}, "
                f"delta={delta(table, z)}"
            )
    return out
