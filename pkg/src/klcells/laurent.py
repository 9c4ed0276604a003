"""Sparse exact polynomial arithmetic over the integers.

Two flavours are used throughout the package: ``LaurentPoly`` is a Laurent
polynomial in the variable v (with v**2 = q), the coefficient ring of the
Hecke algebra; ``PolyQ`` is an ordinary polynomial in q with non-negative
exponents, the shape of a Kazhdan-Lusztig polynomial.  Coefficients are
Python ints, so all arithmetic is exact and unbounded.
"""

from __future__ import annotations


class LaurentPoly:
    """Integer Laurent polynomial in v, stored as a sparse exponent map."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def v_power(k: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({k: coeff})

    @staticmethod
    def from_int(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    def __neg__(self) -> "LaurentPoly":
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e: -c for e, c in self.coeffs.items()}
        return res

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            res = LaurentPoly.__new__(LaurentPoly)
            res.coeffs = {e: c * other for e, c in self.coeffs.items()} if other else {}
            return res
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v**k."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def bar(self) -> "LaurentPoly":
        """The ring involution v -> v**-1."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {-e: c for e, c in self.coeffs.items()}
        return res

    def min_exp(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    def max_exp(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(abs(c))
            else:
                base = "v" if e == 1 else f"v^{e}"
                term = base if abs(c) == 1 else f"{abs(c)}*{base}"
            if not bits:
                bits.append(term if c > 0 else f"-{term}")
            else:
                bits.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(bits)


class PolyQ:
    """Integer polynomial in q with non-negative exponents."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}
        if any(e < 0 for e in self.coeffs):
            raise ValueError("PolyQ exponents must be non-negative")

    @staticmethod
    def zero() -> "PolyQ":
        return PolyQ()

    @staticmethod
    def one() -> "PolyQ":
        return PolyQ({0: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "PolyQ") -> "PolyQ":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = PolyQ.__new__(PolyQ)
        res.coeffs = out
        return res

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        res = PolyQ.__new__(PolyQ)
        res.coeffs = out
        return res

    def scale(self, k: int) -> "PolyQ":
        res = PolyQ.__new__(PolyQ)
        res.coeffs = {e: c * k for e, c in self.coeffs.items()} if k else {}
        return res

    def q_shift(self, k: int) -> "PolyQ":
        """Multiply by q**k (k >= 0)."""
        if k < 0:
            raise ValueError("q_shift exponent must be non-negative")
        res = PolyQ.__new__(PolyQ)
        res.coeffs = {e + k: c for e, c in self.coeffs.items()}
        return res

    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return max(self.coeffs) if self.coeffs else -1

    def leading_coeff(self) -> int:
        return self.coeffs[max(self.coeffs)] if self.coeffs else 0

    def coeff(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def constant_term(self) -> int:
        return self.coeffs.get(0, 0)

    def as_laurent(self, v_shift: int = 0, bar_q: bool = False) -> LaurentPoly:
        """Map to a Laurent polynomial in v: q -> v**2 (or v**-2 if bar_q),
        then multiply by v**v_shift."""
        step = -2 if bar_q else 2
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {v_shift + step * e: c for e, c in self.coeffs.items()}
        return res

    def __repr__(self) -> str:
        return f"PolyQ({self.coeffs!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                term = str(abs(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                term = base if abs(c) == 1 else f"{abs(c)}*{base}"
            if not bits:
                bits.append(term if c > 0 else f"-{term}")
            else:
                bits.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(bits)
