"""Bruhat order and Kazhdan-Lusztig polynomials.

The table memoizes P_{y,w} computed by the one-step recursion

    P_{y,w} = P_{sy,v} + q P_{y,v}
              - sum_{y <= z < v, sz < z, z prec v} mu(z,v) q^{(l(w)-l(z))/2} P_{y,z}

with w = sv, s the ShortLex-least left descent of w, after first replacing y
by sy whenever sy > y (which leaves P unchanged).  Bruhat comparisons go
through cached lower cones built by the lifting property; the independent
subsequence-of-reduced-word oracle lives in the test suite.

mu(y,w) is the coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}, symmetrised in
its arguments and zero whenever neither strict relation holds.
"""

from __future__ import annotations

import json
import os

from .coxeter import CoxeterSystem, Element, IDENTITY, ResourceLimitError, sort_key
from .laurent import LaurentPoly, PolyQ
from . import hecke as _hecke

_ZERO = PolyQ.zero()
_ONE = PolyQ.one()


class KLTable:
    """Memoized Kazhdan-Lusztig data for one Coxeter system."""

    def __init__(self, sys: CoxeterSystem):
        self.sys = sys
        self._kl: dict[tuple[Element, Element], PolyQ] = {}
        self._mu: dict[tuple[Element, Element], int] = {}
        self._cone: dict[Element, frozenset[Element]] = {IDENTITY: frozenset({IDENTITY})}
        self._cbasis: dict[Element, dict[Element, LaurentPoly]] = {}

    # -- Bruhat order ------------------------------------------------------

    def lower_cone(self, w: Element) -> frozenset[Element]:
        """All z <= w, via the lifting property along the least left descent."""
        got = self._cone.get(w)
        if got is not None:
            return got
        sys = self.sys
        s = min(sys.left_descents(w))
        v = sys.multiply((s,), w)
        below = self.lower_cone(v)
        cone = set(below)
        for u in below:
            su = sys.multiply((s,), u)
            if len(su) > len(u):
                cone.add(su)
        got = frozenset(cone)
        self._cone[w] = got
        return got

    def bruhat_le(self, y: Element, w: Element) -> bool:
        if len(y) > len(w):
            return False
        if y == w:
            return True
        return y in self.lower_cone(w)

    def bruhat_interval(self, y: Element, w: Element) -> list[Element]:
        if not self.bruhat_le(y, w):
            raise ValueError("interval requires y <= w in Bruhat order")
        out = [z for z in self.lower_cone(w) if self.bruhat_le(y, z)]
        out.sort(key=sort_key)
        return out

    # -- KL polynomials ------------------------------------------------------

    def _key(self, y: Element, w: Element) -> tuple[Element, Element]:
        # P_{y,w} = P_{y^-1,w^-1}; normalise the memo key to the lesser pair
        yi = self.sys.invert(y)
        if yi == y:
            return (y, w)
        wi = self.sys.invert(w)
        return min((y, w), (yi, wi))

    def kl_poly(self, y: Element, w: Element) -> PolyQ:
        if y == w:
            return _ONE
        if len(y) >= len(w) or not self.bruhat_le(y, w):
            return _ZERO
        key = self._key(y, w)
        got = self._kl.get(key)
        if got is not None:
            return got
        y, w = key
        sys = self.sys
        s = min(sys.left_descents(w))
        v = sys.multiply((s,), w)
        if s not in sys.left_descents(y):
            y = sys.multiply((s,), y)  # P_{y,w} = P_{sy,w} when sy > y
            if y == w:
                self._kl[key] = _ONE
                return _ONE
        p = self.kl_poly(sys.multiply((s,), y), v) + self.kl_poly(y, v).q_shift(1)
        lw = len(w)
        for z in self.lower_cone(v):
            if len(z) >= len(v):
                continue
            if s not in sys.left_descents(z):
                continue
            if not self.bruhat_le(y, z):
                continue
            m = self.mu(z, v)
            if m:
                p = p - self.kl_poly(y, z).q_shift((lw - len(z)) // 2).scale(m)
        bound = (len(w) - len(key[0]) - 1) // 2
        if p.degree() > bound or (p and p.constant_term() != 1):
            raise ArithmeticError(
                f"KL polynomial violates its degree/constant-term bound: "
                f"P_{key[0]},{key[1]} = {p}"
            )
        self._kl[key] = p
        return p

    def mu(self, y: Element, w: Element) -> int:
        """Symmetrised mu: the top-degree coefficient when defined, else 0."""
        if len(y) > len(w):
            y, w = w, y
        diff = len(w) - len(y)
        if diff <= 0 or diff % 2 == 0:
            return 0
        key = self._key(y, w)
        got = self._mu.get(key)
        if got is None:
            got = self._mu[key] = self.kl_poly(y, w).coeff((diff - 1) // 2)
        return got

    # -- C basis and the bar-invariance oracle -------------------------------

    def c_basis_terms(self, w: Element) -> dict[Element, LaurentPoly]:
        """T-basis coefficients of C_w:
        eps_w eps_y v^(l(w)-2 l(y)) P_{y,w}(q^-1) on T_y for y <= w."""
        got = self._cbasis.get(w)
        if got is not None:
            return got
        lw = len(w)
        terms: dict[Element, LaurentPoly] = {}
        for y in self.lower_cone(w):
            p = self.kl_poly(y, w) if y != w else _ONE
            if not p:
                continue
            sign = -1 if (lw - len(y)) % 2 else 1
            terms[y] = p.as_laurent(v_shift=lw - 2 * len(y), bar_q=True) * sign
        self._cbasis[w] = terms
        return terms

    def c_basis(self, w: Element) -> "_hecke.HeckeElement":
        return _hecke.HeckeElement(_hecke.T_BASIS, dict(self.c_basis_terms(w)))

    def bar_invariance_check(self, w: Element, cap: int | None = None) -> bool:
        """Recompute bar(C_w) through T-basis inversion and compare with C_w.
        This is the independent oracle for the KL recursion."""
        if cap is not None and len(w) > cap:
            raise ResourceLimitError(f"bar-invariance cap {cap} exceeded: l={len(w)}")
        c = self.c_basis_terms(w)
        barred = _hecke.bar_terms(self.sys, c)
        return barred == c

    # -- persistence -------------------------------------------------------

    def dump(self, path: str) -> None:
        entries = sorted(
            ([list(y), list(w), sorted(p.coeffs.items())] for (y, w), p in self._kl.items()),
            key=lambda r: (len(r[1]), r[1], len(r[0]), r[0]),
        )
        payload = {"n": self.sys.n, "kind": self.sys.kind, "entries": entries}
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)

    def load(self, path: str) -> int:
        with open(path) as fh:
            payload = json.load(fh)
        if payload.get("n") != self.sys.n or payload.get("kind") != self.sys.kind:
            raise ValueError("KL table dump does not match this Coxeter system")
        count = 0
        for y, w, coeffs in payload["entries"]:
            self._kl[(tuple(y), tuple(w))] = PolyQ({int(e): int(c) for e, c in coeffs})
            count += 1
        return count


def bruhat_le(table: KLTable, y: Element, w: Element) -> bool:
    return table.bruhat_le(y, w)


def bruhat_interval(table: KLTable, y: Element, w: Element) -> list[Element]:
    return table.bruhat_interval(y, w)


def kl_poly(table: KLTable, y: Element, w: Element) -> PolyQ:
    return table.kl_poly(y, w)


def mu(table: KLTable, y: Element, w: Element) -> int:
    return table.mu(y, w)
