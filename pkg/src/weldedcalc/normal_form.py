"""Normal forms up to w2-, w3- and (two strands) w4-equivalence.

The degree-1 part is read off the linking numbers.  Higher parts are
found from closure and Milnor invariants.  Each basic factor's values
are computed on its own surgery, and the exponents come from an exact
solve of that square system.  Additivity of the invariants on the
relevant degrees is what makes the system linear.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

import sympy

from .arrows import GeneratorId, WTreeError, generator, surgery
from .diagram import GaussDiagram, new_trivial, stack
from .invariants import (MU_VARIANTS, CLOSE, MU, Descriptor, evaluate,
                         invariant_vector, linking)


class NormalFormError(ValueError):
    pass


@dataclass(frozen=True)
class NormalFormWord:
    n: int
    degree: int
    factors: Tuple[GeneratorId, ...] = ()
    conjecture_dependent: bool = False

    def __post_init__(self):
        object.__setattr__(self, "factors",
                           tuple(f for f in self.factors if f.exponent != 0))
        for f in self.factors:
            if f.min_strands() > self.n:
                raise NormalFormError(f"{f} does not fit on {self.n} strands")

    def __str__(self):
        return " ".join(str(f) for f in self.factors)

    def __len__(self):
        return len(self.factors)


_FACTOR = re.compile(r"([A-Z][A-Z0-9']*)\[([\d,\s]*)\]\^(-?\d+)")


def parse_word(text: str, n: int | None = None, degree: int = 0) -> NormalFormWord:
    """Parse ``Z[1,2]^3 E[1]^-1 G[3,1,2]^1``; ``n`` defaults to the largest index used."""
    factors = []
    for tok in text.split():
        m = _FACTOR.fullmatch(tok)
        if not m:
            raise NormalFormError(f"bad factor {tok!r}; expected Name[i,j]^e")
        idx = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        try:
            factors.append(GeneratorId(m.group(1), idx, int(m.group(3))))
        except WTreeError as exc:
            raise NormalFormError(str(exc)) from exc
    if n is None:
        n = max((f.min_strands() for f in factors), default=1)
    return NormalFormWord(n, degree, tuple(factors))


def realize(w: NormalFormWord) -> GaussDiagram:
    """Stack the surgeries of the factors in word order."""
    D = new_trivial(w.n)
    for f in w.factors:
        D = stack(D, surgery(generator(f, w.n)))
    return D


# -- basis tables -----------------------------------------------------

def _w3_basis(n: int) -> List[GeneratorId]:
    out = [GeneratorId("E", (i,)) for i in range(1, n + 1)]
    for i, j in permutations(range(1, n + 1), 2):
        if i < j:
            out += [GeneratorId(x, (i, j)) for x in "ABC"]
    for i, j, k in permutations(range(1, n + 1), 3):
        if j < k:
            out.append(GeneratorId("G", (i, j, k)))
    return out


def _w3_rows(n: int) -> List[Descriptor]:
    rows = [CLOSE((i,), 2) for i in range(1, n + 1)]
    for i, j in permutations(range(1, n + 1), 2):
        if i < j:
            rows += [CLOSE((i, j), 2), CLOSE((i, -j), 2), CLOSE((-i, j), 2)]
    for i, j, k in permutations(range(1, n + 1), 3):
        if j < k:
            rows.append(CLOSE((-j, i, k), 2))
    return rows


W4_BASIS = (GeneratorId("A3"), GeneratorId("B3"), GeneratorId("C3"),
            GeneratorId("TO1"), GeneratorId("OT1"),
            GeneratorId("F", (1,)), GeneratorId("F", (2,)))


def _w4_rows(variant: str) -> List[Descriptor]:
    m1, m2 = MU_VARIANTS[variant]
    return [CLOSE((-2, 1), 3), CLOSE((2, 1), 3), CLOSE((1, 2), 3),
            MU(*m1), MU(*m2), CLOSE((1,), 3), CLOSE((2,), 3)]


def _table(basis, rows, n) -> sympy.Matrix:
    cols = []
    for g in basis:
        D = surgery(generator(g, n))
        cols.append([evaluate(D, r) for r in rows])
    return sympy.Matrix(cols).T


@lru_cache(maxsize=None)
def w3_table(n: int) -> Tuple[Tuple[int, ...], ...]:
    """Closure values of every degree-2 basic factor (columns) on the solve rows."""
    M = _table(_w3_basis(n), _w3_rows(n), n)
    return tuple(tuple(int(x) for x in M.row(r)) for r in range(M.rows))


@lru_cache(maxsize=None)
def w4_table(variant: str = "notation") -> Tuple[Tuple[int, ...], ...]:
    M = _table(W4_BASIS, _w4_rows(variant), 2)
    return tuple(tuple(int(x) for x in M.row(r)) for r in range(M.rows))


@lru_cache(maxsize=None)
def _inverse(table: Tuple[Tuple[int, ...], ...]) -> sympy.Matrix:
    M = sympy.Matrix(table)
    if M.rows and M.det() == 0:
        raise NormalFormError("basic-factor table is singular")
    return M.inv() if M.rows else M


def _solve(table, rhs: Sequence[int]) -> List[int]:
    if not table:
        return []
    x = _inverse(table) * sympy.Matrix(rhs)
    out = []
    for v in x:
        if not v.is_integer:
            raise NormalFormError(f"non-integral exponent {v}")
        out.append(int(v))
    return out


# -- the three normal forms -------------------------------------------

def normal_form_w2(D: GaussDiagram) -> NormalFormWord:
    n = D.n
    fs = [GeneratorId("Z", (i, j), linking(D, i, j))
          for i, j in permutations(range(1, n + 1), 2)]
    return NormalFormWord(n, 1, tuple(fs))


def normal_form_w3(D: GaussDiagram) -> NormalFormWord:
    n = D.n
    L1 = normal_form_w2(D)
    rows = _w3_rows(n)
    D1 = realize(L1)
    rhs = [evaluate(D, r) - evaluate(D1, r) for r in rows]
    x = _solve(w3_table(n), rhs)
    L2 = [GeneratorId(g.name, g.indices, e) for g, e in zip(_w3_basis(n), x)]
    return NormalFormWord(n, 2, L1.factors + tuple(L2))


def normal_form_w4_2comp(D: GaussDiagram, variant: str = "notation") -> NormalFormWord:
    """Two-strand normal form up to w4; valid only modulo the A*D ~ B*C conjecture."""
    if D.n != 2:
        raise NormalFormError(f"the degree-3 normal form needs n = 2, got {D.n}")
    if variant not in MU_VARIANTS:
        raise NormalFormError(f"unknown Milnor variant {variant!r}")
    L12 = normal_form_w3(D)
    D12 = realize(L12)
    rows = _w4_rows(variant)
    rhs = [evaluate(D, r) - evaluate(D12, r) for r in rows]
    x = _solve(w4_table(variant), rhs)
    L3 = [GeneratorId(g.name, g.indices, e) for g, e in zip(W4_BASIS, x)]
    return NormalFormWord(2, 3, L12.factors + tuple(L3), conjecture_dependent=True)


def normal_form(D: GaussDiagram, d: int, variant: str = "notation") -> NormalFormWord:
    if d == 1:
        return normal_form_w2(D)
    if d == 2:
        return normal_form_w3(D)
    if d == 3:
        return normal_form_w4_2comp(D, variant)
    raise NormalFormError(f"unsupported degree {d}")


@dataclass(frozen=True)
class RoundTripReport:
    degree: int
    word: NormalFormWord
    match: bool
    mismatches: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    variant: str = "notation"

    @property
    def conjecture_dependent(self) -> bool:
        return self.word.conjecture_dependent

    def as_dict(self):
        return {"degree": self.degree, "word": str(self.word), "match": self.match,
                "conjecture_dependent": self.conjecture_dependent,
                "variant": self.variant,
                "mismatches": {k: list(v) for k, v in self.mismatches.items()}}


def verify_roundtrip(D: GaussDiagram, d: int, variant: str = "notation") -> RoundTripReport:
    """Compare the degree-``d`` vectors of ``D`` and of its realized normal form."""
    w = normal_form(D, d, variant)
    v = invariant_vector(D, d)
    v2 = invariant_vector(realize(w), d)
    diff = v.diff(v2)
    return RoundTripReport(d, w, not diff, diff, variant)
