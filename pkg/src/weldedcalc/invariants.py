"""Named invariants of welded string links and classifying vectors.

Descriptors are small value objects whose string keys double as the
JSON keys of an :class:`InvariantVector`:

* ``LINK:i,j``      welded linking number (i over j)
* ``CLOSE:[1,-2]:2`` closure invariant, negative index = reversed strand
* ``MU:1,2,3``      Milnor invariant, last index names the longitude
* ``PHI:i,j,k``, ``ALPHA2:i,j``, ``BETA2:i,j``, ``GAMMA2:i,j``,
  ``GAMMA41``, ``GAMMA42``, ``GAMMA43``, ``MU123F`` for the derived
  combinations.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, List, Sequence, Tuple

from .alexander import AlphaSeries, alpha_series
from .diagram import ClosureList, DiagramError, GaussDiagram, closure
from .milnor import milnor_mu

KINDS = ("LINK", "CLOSE", "MU", "PHI", "ALPHA2", "BETA2", "GAMMA2",
         "GAMMA41", "GAMMA42", "GAMMA43", "MU123F")

# Milnor pairs in the degree-3 two-strand combinations. The exponent
# table uses 1211/2122; the stated classification uses 1121/2212.
MU_VARIANTS = {
    "matrix": ((1, 2, 1, 1), (2, 1, 2, 2)),
    "notation": ((1, 1, 2, 1), (2, 2, 1, 2)),
}


class InvariantError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Descriptor:
    kind: str
    indices: Tuple[int, ...] = ()
    order: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvariantError(f"unknown invariant kind {self.kind!r}")
        object.__setattr__(self, "indices", tuple(self.indices))
        if self.kind == "CLOSE":
            if self.order < 2:
                raise InvariantError("closure invariants need order k >= 2")
            ClosureList.of(*self.indices)
        if self.kind == "MU" and not 2 <= len(self.indices) <= 5:
            raise InvariantError("Milnor indices must have length 2..5")

    @property
    def key(self) -> str:
        if self.kind == "CLOSE":
            return f"CLOSE:[{','.join(map(str, self.indices))}]:{self.order}"
        if not self.indices:
            return self.kind
        return f"{self.kind}:{','.join(map(str, self.indices))}"

    def __str__(self):
        return self.key

    @property
    def degree(self) -> int:
        """Finite-type degree of the invariant."""
        if self.kind == "LINK":
            return 1
        if self.kind == "CLOSE":
            return self.order
        if self.kind == "MU":
            return len(self.indices) - 1
        if self.kind in ("GAMMA41", "GAMMA42", "GAMMA43"):
            return 3
        return 2

    def min_strands(self) -> int:
        return max((abs(i) for i in self.indices), default=2)


def LINK(i, j):
    return Descriptor("LINK", (i, j))


def CLOSE(R: Sequence[int], k: int):
    return Descriptor("CLOSE", tuple(R), k)


def MU(*I):
    return Descriptor("MU", tuple(I))


_KEY = re.compile(r"^([A-Z0-9]+)(?::(?:\[([-\d,]*)\]:(\d+)|([-\d,]+)))?$")


def parse_descriptor(text: str) -> Descriptor:
    m = _KEY.match(text.strip().replace(" ", ""))
    if not m:
        raise InvariantError(f"bad invariant descriptor {text!r}")
    kind, clist, k, idx = m.groups()
    try:
        if clist is not None:
            return Descriptor(kind, tuple(int(x) for x in clist.split(",") if x), int(k))
        if idx is not None:
            return Descriptor(kind, tuple(int(x) for x in idx.split(",")))
        return Descriptor(kind)
    except (ValueError, DiagramError) as exc:
        raise InvariantError(f"bad invariant descriptor {text!r}: {exc}") from exc


# -- primitive invariants ---------------------------------------------

def linking(D: GaussDiagram, i: int, j: int) -> int:
    """Sum of signs of chords with over endpoint on ``i`` and under on ``j``."""
    if i == j:
        raise InvariantError("linking numbers need distinct indices")
    for x in (i, j):
        if not 1 <= x <= D.n:
            raise DiagramError(f"strand index {x} out of range 1..{D.n}")
    return sum(s for c, s in D.signs.items()
               if D.over_strand(c) == i - 1 and D.under_strand(c) == j - 1)


@lru_cache(maxsize=4096)
def _closure_alpha(D: GaussDiagram, R: Tuple[int, ...], kmax: int) -> AlphaSeries:
    return alpha_series(closure(D, R), kmax)


def closure_alphas(D: GaussDiagram, R: Sequence[int], kmax: int = 5) -> AlphaSeries:
    return _closure_alpha(D, tuple(R), kmax)


def closure_invariant(D: GaussDiagram, R: Sequence[int], k: int) -> int:
    """``alpha_k`` of the closure ``Cl_R(D)``."""
    if k < 2:
        raise InvariantError("closure invariants start at k = 2")
    return _closure_alpha(D, tuple(R), max(k, 3))[k]


def _I(D, *R, k=2):
    return closure_invariant(D, R, k)


def _mu(D, *I):
    return milnor_mu(D, I)


# -- derived combinations ---------------------------------------------

def _distinct(D, *idx):
    if len(set(idx)) != len(idx):
        raise InvariantError(f"indices must be pairwise distinct: {idx}")
    for x in idx:
        if not 1 <= x <= D.n:
            raise DiagramError(f"strand index {x} out of range 1..{D.n}")


def phi(D: GaussDiagram, i: int, j: int, k: int) -> int:
    _distinct(D, i, j, k)
    return (_I(D, -j, i, k) - _I(D, i, k) - _I(D, -i, j) - _I(D, -j, k)
            + _I(D, i) + _I(D, j) + _I(D, k)
            - linking(D, j, i) * linking(D, k, i))


def alpha2(D: GaussDiagram, i: int, j: int) -> int:
    """Exponent combination for ``A_{i,j}``, in its derived form ``I_(i,j) - I_(i) - I_(j)``."""
    _distinct(D, i, j)
    return _I(D, i, j) - _I(D, i) - _I(D, j)


def beta2(D: GaussDiagram, i: int, j: int) -> int:
    _distinct(D, i, j)
    return _I(D, -i, j) - _I(D, i) - _I(D, j)


def gamma2(D: GaussDiagram, i: int, j: int) -> int:
    """``I_(i,j) - I_(i,~j)``, the derived form of the ``C_{i,j}`` exponent."""
    _distinct(D, i, j)
    return _I(D, i, j) - _I(D, i, -j)


def _two(D):
    if D.n != 2:
        raise InvariantError(f"defined for 2-strand diagrams only, got n={D.n}")


def gamma41(D: GaussDiagram, variant: str = "notation") -> int:
    _two(D)
    m = MU_VARIANTS[variant][0]
    return -_I(D, 1, 2, k=3) + _I(D, 1, k=3) + _I(D, 2, k=3) + milnor_mu(D, m)


def gamma42(D: GaussDiagram) -> int:
    _two(D)
    return (_I(D, -2, 1, k=3) - _I(D, 1, k=3) - _I(D, 2, k=3)
            + _I(D, 1) + _I(D, 2))


def gamma43(D: GaussDiagram, variant: str = "notation") -> int:
    _two(D)
    m = MU_VARIANTS[variant][1]
    return -_I(D, 2, 1, k=3) + _I(D, -2, 1, k=3) + milnor_mu(D, m)


def mu123_formula(D: GaussDiagram) -> int:
    """Closed expression for ``mu(123)`` through linking numbers and closures."""
    if D.n != 3:
        raise InvariantError(f"defined for 3-strand diagrams only, got n={D.n}")
    l = lambda i, j: linking(D, i, j)
    return (l(2, 1) * l(1, 3) - l(1, 2) * l(2, 3) - l(1, 3) * l(2, 3)
            + _I(D, -1, 3, 2) - _I(D, 3, 2) - _I(D, -3, 1) - _I(D, -1, 2)
            + _I(D, 3) + _I(D, 1) + _I(D, 2))


def evaluate(D: GaussDiagram, d: Descriptor, variant: str = "notation") -> int:
    """Value of the invariant named by ``d`` on ``D``."""
    if d.min_strands() > D.n:
        raise InvariantError(f"{d} needs at least {d.min_strands()} strands")
    k, idx = d.kind, d.indices
    if k == "LINK":
        return linking(D, *idx)
    if k == "CLOSE":
        return closure_invariant(D, idx, d.order)
    if k == "MU":
        return milnor_mu(D, idx)
    if k == "PHI":
        return phi(D, *idx)
    if k == "ALPHA2":
        return alpha2(D, *idx)
    if k == "BETA2":
        return beta2(D, *idx)
    if k == "GAMMA2":
        return gamma2(D, *idx)
    if k == "GAMMA41":
        return gamma41(D, variant)
    if k == "GAMMA42":
        return gamma42(D)
    if k == "GAMMA43":
        return gamma43(D, variant)
    return mu123_formula(D)


# -- classifying families ---------------------------------------------

def family(n: int, d: int) -> List[Descriptor]:
    """Classifying invariants for ``n`` strands up to ``w_{d+1}``-equivalence.

    Degree 2 uses every ordered pair for the two-strand closures, which is a
    superset of the minimal list and keeps round-trip checks strict.
    """
    if d not in (1, 2, 3):
        raise InvariantError(f"unsupported degree {d}")
    if d == 3 and n != 2:
        raise InvariantError("degree 3 vectors are defined for n = 2 only")
    if n < 1:
        raise InvariantError("n must be positive")
    out = [LINK(i, j) for i, j in permutations(range(1, n + 1), 2)]
    if d >= 2:
        out += [CLOSE((i,), 2) for i in range(1, n + 1)]
        for i, j in permutations(range(1, n + 1), 2):
            out += [CLOSE((i, j), 2), CLOSE((i, -j), 2), CLOSE((-i, j), 2)]
        for i, j, k in permutations(range(1, n + 1), 3):
            if j < k:
                out.append(CLOSE((-j, i, k), 2))
    if d == 3:
        out += [CLOSE(R, 3) for R in ((1, 2), (2, 1), (-2, 1), (1,), (2,))]
        out += [MU(*m) for pair in MU_VARIANTS.values() for m in pair]
    return out


def derived_family(n: int, d: int) -> List[Descriptor]:
    out = []
    if d >= 2:
        for i, j in permutations(range(1, n + 1), 2):
            if i < j:
                out += [Descriptor(k, (i, j)) for k in ("ALPHA2", "BETA2", "GAMMA2")]
        for i, j, k in permutations(range(1, n + 1), 3):
            if j < k:
                out.append(Descriptor("PHI", (i, j, k)))
        if n == 3:
            out += [MU(1, 2, 3), Descriptor("MU123F")]
    if d == 3 and n == 2:
        out += [Descriptor(k) for k in ("GAMMA41", "GAMMA42", "GAMMA43")]
    return out


@dataclass(frozen=True)
class InvariantVector:
    degree: int
    n: int
    entries: Dict[Descriptor, int] = field(default_factory=dict)

    def __getitem__(self, key) -> int:
        if isinstance(key, str):
            key = parse_descriptor(key)
        return self.entries[key]

    def as_dict(self) -> Dict[str, int]:
        return {d.key: v for d, v in self.entries.items()}

    def is_zero(self) -> bool:
        return not any(self.entries.values())

    def diff(self, other: "InvariantVector") -> Dict[str, Tuple[int, int]]:
        """Keys whose values differ, mapped to ``(self, other)``."""
        keys = list(self.entries) + [k for k in other.entries if k not in self.entries]
        return {k.key: (self.entries.get(k), other.entries.get(k))
                for k in keys if self.entries.get(k) != other.entries.get(k)}

    def __eq__(self, other):
        if not isinstance(other, InvariantVector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(sorted(self.entries.items())))


def invariant_vector(D: GaussDiagram, d: int, derived: bool = False,
                     variant: str = "notation") -> InvariantVector:
    descs = family(D.n, d)
    if derived:
        descs += derived_family(D.n, d)
    return InvariantVector(d, D.n, {x: evaluate(D, x, variant) for x in descs})


def vector_of(D: GaussDiagram, descs: Iterable[Descriptor], variant: str = "notation") -> Dict[str, int]:
    return {x.key: evaluate(D, x, variant) for x in descs}
