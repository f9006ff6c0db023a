"""Gauss diagrams of welded string links.

A diagram is ``n`` ordered strands, each a sequence of chord endpoints
read along the orientation, plus a sign for every chord.  An endpoint is
the pair ``(chord_id, is_over)``.  Virtual crossings are not stored at
all, which makes the Detour move free.
"""

from __future__ import annotations

import re
import string
from dataclasses import dataclass
from itertools import count, product
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

Endpoint = Tuple[int, bool]


class DiagramError(ValueError):
    """Raised for malformed diagrams or invalid structural operations."""


class GaussParseError(DiagramError):
    """Raised when Gauss code text cannot be parsed."""


class GaussDiagram:
    """Immutable Gauss diagram with ``n`` strands and signed chords."""

    __slots__ = ("_n", "_strands", "_signs", "_where")

    def __init__(self, n: int, strands: Sequence[Sequence[Endpoint]],
                 signs: Mapping[int, int]):
        if n < 1:
            raise DiagramError("a diagram needs at least one strand")
        if len(strands) != n:
            raise DiagramError(f"expected {n} strands, got {len(strands)}")
        self._n = n
        self._strands = tuple(tuple((int(c), bool(o)) for c, o in s)
                              for s in strands)
        self._signs = MappingProxyType({int(c): int(s) for c, s in signs.items()})
        self._where: Dict[Endpoint, Tuple[int, int]] = {}
        for i, strand in enumerate(self._strands):
            for k, ep in enumerate(strand):
                if ep in self._where:
                    raise DiagramError(f"endpoint {ep} occurs twice")
                self._where[ep] = (i, k)
        for c, s in self._signs.items():
            if s not in (1, -1):
                raise DiagramError(f"chord {c} has sign {s}")
            if (c, True) not in self._where or (c, False) not in self._where:
                raise DiagramError(f"chord {c} is missing an endpoint")
        if len(self._where) != 2 * len(self._signs):
            raise DiagramError("endpoint without a signed chord")

    # -- basic accessors ----------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def strands(self) -> Tuple[Tuple[Endpoint, ...], ...]:
        return self._strands

    @property
    def signs(self) -> Mapping[int, int]:
        return self._signs

    @property
    def chords(self) -> List[int]:
        return sorted(self._signs)

    def __len__(self) -> int:
        return len(self._signs)

    def locate(self, ep: Endpoint) -> Tuple[int, int]:
        """0-based ``(strand, position)`` of an endpoint."""
        return self._where[ep]

    def over_strand(self, c: int) -> int:
        return self._where[(c, True)][0]

    def under_strand(self, c: int) -> int:
        return self._where[(c, False)][0]

    def is_trivial(self) -> bool:
        return not self._signs

    # -- equality -----------------------------------------------------
    def canonical(self) -> "GaussDiagram":
        """Rename chords 0, 1, 2, ... in order of first mention."""
        ren: Dict[int, int] = {}
        fresh = count()
        for strand in self._strands:
            for c, _ in strand:
                if c not in ren:
                    ren[c] = next(fresh)
        return self.relabel(ren)

    def relabel(self, ren: Mapping[int, int]) -> "GaussDiagram":
        strands = [[(ren[c], o) for c, o in s] for s in self._strands]
        return GaussDiagram(self._n, strands,
                            {ren[c]: s for c, s in self._signs.items()})

    def _key(self):
        return (self._n, self._strands, tuple(sorted(self._signs.items())))

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def same_up_to_renaming(self, other: "GaussDiagram") -> bool:
        return self.canonical() == other.canonical()

    def __repr__(self):
        return f"GaussDiagram(n={self._n}, chords={len(self)})"

    def __str__(self):
        return emit_gauss(self)

    def __mul__(self, other: "GaussDiagram") -> "GaussDiagram":
        return stack(self, other)


@dataclass(frozen=True)
class ClosureList:
    """Instruction for closing a string link into a long knot.

    ``entries`` holds ``(index, reversed)`` pairs with 1-based indices.
    """

    entries: Tuple[Tuple[int, bool], ...]

    def __post_init__(self):
        if not self.entries:
            raise DiagramError("a closure list needs at least one index")
        idx = [i for i, _ in self.entries]
        if len(set(idx)) != len(idx):
            raise DiagramError(f"closure indices must be distinct: {idx}")
        if any(i < 1 for i in idx):
            raise DiagramError("closure indices are 1-based")

    @classmethod
    def of(cls, *items: int) -> "ClosureList":
        """Signed-int shorthand: ``ClosureList.of(1, -2)`` is (1, 2-bar)."""
        return cls(tuple((abs(i), i < 0) for i in items))

    def signed(self) -> Tuple[int, ...]:
        return tuple(-i if r else i for i, r in self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "(" + ",".join(f"~{i}" if r else str(i)
                              for i, r in self.entries) + ")"


# -- structural operations -------------------------------------------

def new_trivial(n: int) -> GaussDiagram:
    if n < 1:
        raise DiagramError("the trivial diagram needs n >= 1")
    return GaussDiagram(n, [()] * n, {})


def _check_index(D: GaussDiagram, i: int) -> None:
    if not 1 <= i <= D.n:
        raise DiagramError(f"strand index {i} out of range 1..{D.n}")


def stack(D: GaussDiagram, D2: GaussDiagram) -> GaussDiagram:
    """``D`` followed by ``D2`` along every strand."""
    if D.n != D2.n:
        raise DiagramError(f"cannot stack {D.n} strands on {D2.n}")
    off = (max(D.signs) + 1) if D.signs else 0
    strands = [list(a) + [(c + off, o) for c, o in b]
               for a, b in zip(D.strands, D2.strands)]
    signs = dict(D.signs)
    signs.update({c + off: s for c, s in D2.signs.items()})
    return GaussDiagram(D.n, strands, signs)


def stack_all(diagrams: Iterable[GaussDiagram], n: int) -> GaussDiagram:
    out = new_trivial(n)
    for d in diagrams:
        out = stack(out, d)
    return out


def reverse_component(D: GaussDiagram, i: int) -> GaussDiagram:
    _check_index(D, i)
    k = i - 1
    strands = list(D.strands)
    strands[k] = tuple(reversed(strands[k]))
    signs = dict(D.signs)
    for c in signs:
        if (D.over_strand(c) == k) != (D.under_strand(c) == k):
            signs[c] = -signs[c]
    return GaussDiagram(D.n, strands, signs)


def delete_component(D: GaussDiagram, i: int) -> GaussDiagram:
    _check_index(D, i)
    if D.n == 1:
        raise DiagramError("cannot delete the only strand")
    k = i - 1
    dead = {c for c, _ in D.strands[k]}
    strands = [[ep for ep in s if ep[0] not in dead]
               for j, s in enumerate(D.strands) if j != k]
    return GaussDiagram(D.n - 1, strands,
                        {c: s for c, s in D.signs.items() if c not in dead})


def closure(D: GaussDiagram, R: ClosureList | Sequence[int]) -> GaussDiagram:
    """Close the listed strands, in list order, into a one-strand diagram.

    Connecting arcs cross the rest only virtually, so they add no chords.
    """
    if not isinstance(R, ClosureList):
        R = ClosureList.of(*R)
    for i, _ in R.entries:
        _check_index(D, i)
    keep = {i - 1 for i, _ in R.entries}
    dead = {c for j, s in enumerate(D.strands) if j not in keep for c, _ in s}
    work = D
    for i, rev in R.entries:
        if rev:
            work = reverse_component(work, i)
    seq: List[Endpoint] = []
    for i, _ in R.entries:
        seq.extend(ep for ep in work.strands[i - 1] if ep[0] not in dead)
    return GaussDiagram(1, [seq], {c: s for c, s in work.signs.items()
                                   if c not in dead})


def virtualize(D: GaussDiagram, S: Iterable[int]) -> GaussDiagram:
    """Delete the chords in ``S`` (classical crossing made virtual)."""
    S = set(S)
    unknown = S - set(D.signs)
    if unknown:
        raise DiagramError(f"unknown chord ids {sorted(unknown)}")
    strands = [[ep for ep in s if ep[0] not in S] for s in D.strands]
    return GaussDiagram(D.n, strands,
                        {c: s for c, s in D.signs.items() if c not in S})


def linking_sum(D: GaussDiagram, i: int, j: int) -> int:
    """Sum of signs of chords over strand ``i`` and under strand ``j``."""
    return sum(s for c, s in D.signs.items()
               if D.over_strand(c) == i - 1 and D.under_strand(c) == j - 1)


# -- Gauss code text ---------------------------------------------------

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
_STRAND = re.compile(r"^(\d+)\s*:(.*)$")


def _lines(text: str) -> Iterator[str]:
    for raw in re.split(r"[\n/;]", text):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_gauss(text: str) -> GaussDiagram:
    """Parse the line-oriented Gauss code format.

    ``/`` and ``;`` are accepted as line separators so that a whole
    diagram fits on a command line: ``"n=2 / 1: O a + / 2: U a +"``.
    """
    lines = list(_lines(text))
    if not lines:
        raise GaussParseError("empty input")
    m = _HEADER.match(lines[0])
    if not m:
        raise GaussParseError(f"bad header {lines[0]!r}; expected n=<int>")
    n = int(m.group(1))
    if n < 1:
        raise GaussParseError("n must be positive")
    strands: List[List[Endpoint]] = [[] for _ in range(n)]
    seen = set()
    ids: Dict[str, int] = {}
    signs: Dict[int, int] = {}
    roles: Dict[int, set] = {}
    for line in lines[1:]:
        sm = _STRAND.match(line)
        if not sm:
            raise GaussParseError(f"bad strand line {line!r}")
        i = int(sm.group(1))
        if not 1 <= i <= n:
            raise GaussParseError(f"strand index {i} out of range")
        if i in seen:
            raise GaussParseError(f"strand {i} given twice")
        seen.add(i)
        toks = sm.group(2).split()
        if len(toks) % 3:
            raise GaussParseError(f"strand {i}: tokens must be triples 'O|U id +|-'")
        for k in range(0, len(toks), 3):
            role, name, sg = toks[k:k + 3]
            if role not in ("O", "U") or sg not in ("+", "-"):
                raise GaussParseError(f"strand {i}: bad token {' '.join(toks[k:k+3])!r}")
            c = ids.setdefault(name, len(ids))
            s = 1 if sg == "+" else -1
            if signs.setdefault(c, s) != s:
                raise GaussParseError(f"chord {name!r} mentioned with both signs")
            over = role == "O"
            if over in roles.setdefault(c, set()):
                raise GaussParseError(f"chord {name!r} has two {role} endpoints")
            roles[c].add(over)
            strands[i - 1].append((c, over))
    for name, c in ids.items():
        if len(roles[c]) != 2:
            raise GaussParseError(f"dangling chord {name!r}")
    return GaussDiagram(n, strands, signs)


def chord_names() -> Iterator[str]:
    """a, b, ..., z, aa, ab, ..."""
    for width in count(1):
        for combo in product(string.ascii_lowercase, repeat=width):
            yield "".join(combo)


def emit_gauss(D: GaussDiagram) -> str:
    names: Dict[int, str] = {}
    gen = chord_names()
    lines = [f"n={D.n}"]
    for i, strand in enumerate(D.strands, 1):
        toks = []
        for c, over in strand:
            if c not in names:
                names[c] = next(gen)
            toks.append(f"{'O' if over else 'U'} {names[c]} "
                        f"{'+' if D.signs[c] > 0 else '-'}")
        lines.append(f"{i}: " + " ".join(toks) if toks else f"{i}:")
    return "\n".join(lines) + "\n"
