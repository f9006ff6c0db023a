"""Welded group, Fox calculus and the normalized Alexander polynomial.

Two routes compute the normalized coefficients ``alpha_k`` of a welded
long knot:

* :func:`alexander` builds the full Laurent polynomial with a
  fraction-free (Bareiss) determinant, then :func:`normalize` and
  :func:`alpha_coeffs` expand it at ``t = 1``;
* :func:`alpha_series` eliminates directly over ``Z[u]/(u^(K+1))`` with
  ``t = 1 - u``.  The Wirtinger matrix is unitriangular mod ``u`` once
  the first arc's column is dropped, so every pivot is a unit and the
  elimination stays integral.  This is the route used for closure
  invariants of large diagrams.

The two routes are cross-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .diagram import GaussDiagram
from .laurent import LaurentPoly, binomial_series

Letter = Tuple[int, int]  # (generator index, +1 | -1)


class AlexanderError(ValueError):
    pass


@dataclass(frozen=True)
class GroupPresentation:
    """Wirtinger presentation; generators are arcs ``(strand, k)`` (1-based strand)."""

    generators: Tuple[Tuple[int, int], ...]
    relations: Tuple[Tuple[Letter, ...], ...]

    def __post_init__(self):
        m = len(self.generators)
        for r in self.relations:
            for g, e in r:
                if not 0 <= g < m or e not in (1, -1):
                    raise AlexanderError(f"bad letter {(g, e)}")


def arc_table(D: GaussDiagram) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Map every endpoint position (strand, pos) to the arc ``(strand, k)`` containing it.

    Arc ``k`` of a strand is the segment after its ``k``-th under endpoint.
    For under endpoints the *incoming* arc is recorded.
    """
    table = {}
    for s, strand in enumerate(D.strands):
        k = 0
        for p, (c, over) in enumerate(strand):
            table[(s, p)] = (s + 1, k)
            if not over:
                k += 1
    return table


def wirtinger(D: GaussDiagram) -> GroupPresentation:
    """One generator per arc, one relation per chord.

    Positive crossing: ``a^-1 b a c^-1``; negative: ``a b a^-1 c^-1``,
    where ``a`` is the over arc, ``b`` the incoming and ``c`` the outgoing
    under arc.
    """
    gens: List[Tuple[int, int]] = []
    for s, strand in enumerate(D.strands):
        unders = sum(1 for _, o in strand if not o)
        gens.extend((s + 1, k) for k in range(unders + 1))
    index = {g: i for i, g in enumerate(gens)}
    arcs = arc_table(D)
    rels = []
    for s, strand in enumerate(D.strands):
        for p, (c, over) in enumerate(strand):
            if over:
                continue
            b = index[arcs[(s, p)]]
            cc = index[(s + 1, arcs[(s, p)][1] + 1)]
            a = index[arcs[D.locate((c, True))]]
            e = D.signs[c]
            rels.append(((a, -e), (b, 1), (a, e), (cc, -1)))
    return GroupPresentation(tuple(gens), tuple(rels))


def fox_derivative(word: Sequence[Letter], g: int) -> LaurentPoly:
    """Abelianized Fox derivative of ``word`` with every generator sent to ``t``."""
    out: Dict[int, int] = {}
    e = 0
    for h, x in word:
        if h == g:
            k = e if x == 1 else e - 1
            out[k] = out.get(k, 0) + x
        e += x
    return LaurentPoly(out)


def fox_matrix(P: GroupPresentation) -> List[List[LaurentPoly]]:
    m = len(P.generators)
    return [[fox_derivative(r, j) for j in range(m)] for r in P.relations]


def bareiss_det(M: List[List[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant over Z[t, t^-1]."""
    n = len(M)
    if n == 0:
        return LaurentPoly.one()
    A = [list(row) for row in M]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if A[k][k].is_zero():
            for r in range(k + 1, n):
                if not A[r][k].is_zero():
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero()
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * piv - A[i][k] * A[k][j]).exact_div(prev)
            A[i][k] = LaurentPoly.zero()
        prev = piv
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


def _require_long_knot(D: GaussDiagram) -> None:
    if D.n != 1:
        raise AlexanderError(f"expected a welded long knot, got {D.n} strands")


def alexander(D: GaussDiagram, drop: int = 0) -> LaurentPoly:
    """Alexander polynomial of a long knot, canonical up to ``±t^k``.

    ``drop`` picks the generator column deleted from the Fox matrix; all
    choices give the same canonical answer.
    """
    _require_long_knot(D)
    P = wirtinger(D)
    M = fox_matrix(P)
    sub = [[x for j, x in enumerate(row) if j != drop] for row in M]
    return bareiss_det(sub).canonical()


def normalize(delta: LaurentPoly) -> Tuple[LaurentPoly, int]:
    """Return ``(±delta, m)`` so that ``t^m * (±delta)`` has value 1 and slope 0 at 1."""
    v = delta.at_one()
    if v not in (1, -1):
        raise AlexanderError(f"|Delta(1)| = {abs(v)} != 1; not a welded long knot polynomial")
    d = delta if v == 1 else -delta
    slope = d.derivative().at_one()
    return d, -slope


@dataclass(frozen=True)
class AlphaSeries:
    """Normalized coefficients ``alpha_2 .. alpha_kmax`` (alpha_0 = 1, alpha_1 = 0)."""

    kmax: int
    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    def __getitem__(self, k: int) -> int:
        if k == 0:
            return 1
        if k == 1:
            return 0
        if not 2 <= k <= self.kmax:
            raise IndexError(f"alpha_{k} outside 2..{self.kmax}")
        return self.coeffs[k - 2]

    def as_dict(self) -> Dict[int, int]:
        return {k: self[k] for k in range(2, self.kmax + 1)}

    def __str__(self):
        return " ".join(f"a{k}={v}" for k, v in self.as_dict().items())


def alpha_coeffs(normalized: Tuple[LaurentPoly, int] | LaurentPoly,
                 kmax: int = 5) -> AlphaSeries:
    """Expand ``t^m * delta`` in powers of ``(1 - t)``."""
    if isinstance(normalized, LaurentPoly):
        normalized = (normalized, 0)
    delta, m = normalized
    u = delta.shift(m).series_at_one(kmax)
    if u[0] != 1 or (kmax >= 1 and u[1] != 0):
        raise AlexanderError("input is not normalized")
    return AlphaSeries(kmax, tuple(u[2:]))


# -- truncated route -------------------------------------------------------

def _mul(a, b, K):
    out = [0] * (K + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(K + 1 - i):
                out[i + j] += x * b[j]
    return out


def _inv(a, K):
    a0 = a[0]
    if a0 not in (1, -1):
        raise AlexanderError("pivot is not a unit mod (1 - t)")
    q = [0] * (K + 1)
    q[0] = a0
    for j in range(1, K + 1):
        q[j] = -a0 * sum(a[i] * q[j - i] for i in range(1, j + 1))
    return q


def delta_series(D: GaussDiagram, K: int) -> List[int]:
    """Alexander determinant (first arc column dropped) mod ``u^(K+1)``, ``t = 1 - u``."""
    _require_long_knot(D)
    P = wirtinger(D)
    rows: List[Dict[int, List[int]]] = []
    cache: Dict[int, List[int]] = {}
    for r in P.relations:
        row: Dict[int, List[int]] = {}
        for g in {h for h, _ in r}:
            if g == 0:
                continue
            poly = fox_derivative(r, g)
            if poly.is_zero():
                continue
            s = [0] * (K + 1)
            for e, c in poly.terms():
                if e not in cache:
                    cache[e] = binomial_series(e, K)
                for j, b in enumerate(cache[e]):
                    s[j] += c * b
            row[g] = s
        rows.append(row)
    n = len(rows)
    det = [1] + [0] * K
    sign = 1
    live = list(range(n))
    for col in range(1, n + 1):
        piv_r = None
        for r in live:
            v = rows[r].get(col)
            if v and v[0] in (1, -1):
                piv_r = r
                break
        if piv_r is None:
            raise AlexanderError("no unit pivot; matrix is singular mod (1 - t)")
        # row permutation parity: position of piv_r among live rows
        if live.index(piv_r) % 2:
            sign = -sign
        live.remove(piv_r)
        prow = rows[piv_r]
        pv = prow[col]
        det = _mul(det, pv, K)
        pinv = _inv(pv, K)
        for r in live:
            v = rows[r].get(col)
            if not v or not any(v):
                continue
            f = _mul(v, pinv, K)
            row = rows[r]
            for c2, x in prow.items():
                if c2 == col:
                    continue
                fx = _mul(f, x, K)
                cur = row.get(c2)
                if cur is None:
                    row[c2] = [-y for y in fx]
                else:
                    row[c2] = [a - b for a, b in zip(cur, fx)]
            del row[col]
    return det if sign > 0 else [-x for x in det]


def alpha_series(D: GaussDiagram, kmax: int = 5) -> AlphaSeries:
    """``alpha_2..alpha_kmax`` of a long knot without forming the full polynomial."""
    d = delta_series(D, kmax)
    if d[0] not in (1, -1):
        raise AlexanderError(f"|Delta(1)| = {abs(d[0])} != 1")
    if d[0] < 0:
        d = [-x for x in d]
    m = d[1] if kmax >= 1 else 0
    u = _mul(binomial_series(m, kmax), d, kmax)
    if kmax >= 1 and u[1] != 0:
        raise AlexanderError("normalization failed")  # pragma: no cover
    return AlphaSeries(kmax, tuple(u[2:]))
