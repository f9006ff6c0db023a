"""Integer Laurent polynomials in one variable ``t``."""

from __future__ import annotations

from math import comb
from typing import Dict, Iterable, Mapping, Tuple


class LaurentPoly:
    """Sparse element of Z[t, t^-1].

    Coefficients are Python ints, so arithmetic never overflows.  Zero
    coefficients are never stored; the zero polynomial has no terms.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self._c: Dict[int, int] = {}
        if coeffs:
            for e, c in coeffs.items():
                if c:
                    self._c[int(e)] = int(c)

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    # -- inspection ---------------------------------------------------
    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def terms(self) -> Iterable[Tuple[int, int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __call__(self, t):
        return sum(c * t**e for e, c in self._c.items())

    def at_one(self) -> int:
        return sum(self._c.values())

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly({e - 1: e * c for e, c in self._c.items()})

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: Dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly({-e * (-k): c ** (-k)})
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by ``t**m``."""
        return LaurentPoly({e + m: c for e, c in self._c.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ``ValueError`` if there is a remainder."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._c)
        d_hi = other.max_degree()
        d_lo = other.min_degree()
        lead = other._c[d_hi]
        floor = self.min_degree() - d_lo
        quot: Dict[int, int] = {}
        while rem:
            e = max(rem)
            shift = e - d_hi
            if shift < floor:
                raise ValueError("inexact polynomial division")
            q, r = divmod(rem[e], lead)
            if r:
                raise ValueError("inexact polynomial division")
            quot[shift] = q
            for oe, oc in other._c.items():
                k = oe + shift
                v = rem.get(k, 0) - q * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentPoly(quot)

    # -- normal forms -------------------------------------------------
    def canonical(self) -> "LaurentPoly":
        """Representative up to units: lowest exponent 0, positive leading coefficient."""
        if not self._c:
            return self
        p = self.shift(-self.min_degree())
        if p._c[p.max_degree()] < 0:
            p = -p
        return p

    def series_at_one(self, order: int) -> list:
        """Coefficients of ``u**0..u**order`` after substituting ``t = 1 - u``."""
        out = [0] * (order + 1)
        for e, c in self._c.items():
            for j, b in enumerate(binomial_series(e, order)):
                out[j] += c * b
        return out

    # -- dunder plumbing ----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms())


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


T = LaurentPoly.monomial(1)


def binomial_series(e: int, order: int) -> list:
    """Coefficients of ``(1 - u)**e`` up to ``u**order``; ``e`` may be negative."""
    if e >= 0:
        return [(-1) ** j * comb(e, j) for j in range(order + 1)]
    n = -e
    return [comb(n - 1 + j, j) for j in range(order + 1)]
