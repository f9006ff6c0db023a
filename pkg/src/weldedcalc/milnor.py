"""Milnor invariants of welded string links via the Magnus expansion.

Every arc of a Gauss diagram is a word in the meridians ``m_1..m_n`` of
the strand bottoms.  Crossing relations are solved by fixed-point
iteration inside the truncated Magnus algebra ``Z<<X_1..X_n>>/(deg > q)``
with ``m_i -> 1 + X_i``.  Each pass fixes one more degree, so ``q + 1``
passes suffice.
"""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .diagram import DiagramError, GaussDiagram

Word = Tuple[int, ...]


class MagnusError(ValueError):
    pass


class TruncatedSeries:
    """Element of the Magnus algebra truncated above degree ``q``.

    Keys are words in 1-based variable indices; ``()`` is the constant term.
    """

    __slots__ = ("q", "_c")

    def __init__(self, q: int, coeffs: Dict[Word, int] | None = None):
        self.q = q
        self._c: Dict[Word, int] = {}
        if coeffs:
            for w, c in coeffs.items():
                if c and len(w) <= q:
                    self._c[tuple(w)] = c

    @classmethod
    def one(cls, q: int) -> "TruncatedSeries":
        return cls(q, {(): 1})

    @classmethod
    def meridian(cls, i: int, q: int, power: int = 1) -> "TruncatedSeries":
        """``m_i ** power``; negative powers expand ``(1 + X)^-1`` geometrically."""
        if power >= 0:
            out = {(i,) * k: _binom(power, k) for k in range(min(power, q) + 1)}
        else:
            out = {(i,) * k: (-1) ** k * _binom(-power - 1 + k, k) for k in range(q + 1)}
        return cls(q, out)

    def coeff(self, w: Sequence[int]) -> int:
        return self._c.get(tuple(w), 0)

    def items(self):
        return self._c.items()

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        q = min(self.q, other.q)
        out: Dict[Word, int] = {}
        for w1, c1 in self._c.items():
            room = q - len(w1)
            if room < 0:
                continue
            for w2, c2 in other._c.items():
                if len(w2) <= room:
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
        return TruncatedSeries(q, out)

    def inverse(self) -> "TruncatedSeries":
        if self._c.get(()) != 1:
            raise MagnusError("only group-like elements (constant term 1) are inverted")
        h = TruncatedSeries(self.q, {w: -c for w, c in self._c.items() if w})
        out = TruncatedSeries.one(self.q)
        term = TruncatedSeries.one(self.q)
        for _ in range(self.q):
            term = term * h
            out = out + term
        return out

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self._c)
        for w, c in other._c.items():
            out[w] = out.get(w, 0) + c
        return TruncatedSeries(min(self.q, other.q), out)

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self._c == other._c

    def __repr__(self):
        return f"TruncatedSeries(q={self.q}, {dict(sorted(self._c.items()))})"


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


def arc_series(D: GaussDiagram, q: int) -> List[List[TruncatedSeries]]:
    """Magnus images of all arcs, ``arcs[s][k]`` for strand ``s`` (0-based)."""
    n = D.n
    unders = [[(p, c) for p, (c, o) in enumerate(s) if not o] for s in D.strands]
    over_arc = {}
    for s, strand in enumerate(D.strands):
        k = 0
        for c, o in strand:
            if o:
                over_arc[c] = (s, k)
            else:
                k += 1
    arcs = [[TruncatedSeries.meridian(s + 1, q)] * (len(unders[s]) + 1) for s in range(n)]
    for _ in range(q + 1):
        new = []
        for s in range(n):
            row = [arcs[s][0]]
            for _, c in unders[s]:
                a_s, a_k = over_arc[c]
                a = arcs[a_s][a_k]
                e = D.signs[c]
                conj = a if e > 0 else a.inverse()
                row.append(conj.inverse() * row[-1] * conj)
            new.append(row)
        arcs = new
    return arcs


def longitude(D: GaussDiagram, j: int, q: int) -> TruncatedSeries:
    """Preferred longitude of strand ``j`` (1-based), truncated at degree ``q``.

    The word is the product of the over-arc letters met along the strand,
    corrected by ``m_j^-f`` on the left, where ``f`` is its ``m_j`` exponent sum.
    """
    if not 1 <= j <= D.n:
        raise DiagramError(f"strand index {j} out of range")
    arcs = arc_series(D, q)
    s = j - 1
    lam = TruncatedSeries.one(q)
    f = 0
    for c, o in D.strands[s]:
        if o:
            continue
        a_s, a_k = _over_arc(D, c)
        if a_s == s:
            f += D.signs[c]
        a = arcs[a_s][a_k]
        lam = lam * (a if D.signs[c] > 0 else a.inverse())
    return TruncatedSeries.meridian(j, q, -f) * lam


def _over_arc(D: GaussDiagram, c: int) -> Tuple[int, int]:
    s, p = D.locate((c, True))
    k = sum(1 for _, o in D.strands[s][:p] if not o)
    return s, k


def milnor_mu(D: GaussDiagram, index: Sequence[int]) -> int:
    """``mu(i_1 ... i_k)``: coefficient of ``X_{i_1}..X_{i_{k-1}}`` in the longitude of ``i_k``."""
    index = tuple(index)
    if len(index) < 2:
        raise MagnusError("Milnor invariants need at least two indices")
    for i in index:
        if not 1 <= i <= D.n:
            raise DiagramError(f"strand index {i} out of range")
    lam = longitude(D, index[-1], len(index) - 1)
    return lam.coeff(index[:-1])
