"""Welded moves on Gauss diagrams: R1, R2, R3 and OC.

Each move is a :class:`Move` record.  ``detect_moves`` lists every
removal-type move and every OC/R3 site in a diagram; insertions must be
described explicitly.  The admissible local patterns for R3 are the
ones whose Wirtinger relations agree before and after the swap; the
test suite runs the invariance oracle over all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .diagram import DiagramError, Endpoint, GaussDiagram


@dataclass(frozen=True)
class Move:
    """A move on a Gauss diagram.

    kind
        ``"R1-"``/``"R2-"``: remove ``chords``.
        ``"R1+"``: insert a kink on ``strand`` before ``pos`` with ``sign``;
        ``over_first`` picks the endpoint order.
        ``"R2+"``: insert two chords of opposite signs, over endpoints at
        (``strand``, ``pos``) and under endpoints at (``strand2``, ``pos2``);
        the first chord met along the under strand has ``sign``.
        ``"R3"``: ``chords = (x, y, z)`` with x = top over middle,
        y = top over bottom, z = middle over bottom.
        ``"OC"``: swap the adjacent over endpoints at ``pos``, ``pos+1``.
    """

    kind: str
    chords: Tuple[int, ...] = ()
    strand: int = 0
    pos: int = 0
    strand2: int = 0
    pos2: int = 0
    sign: int = 1
    over_first: bool = True


def _adjacent(D: GaussDiagram, a: Endpoint, b: Endpoint) -> Optional[Tuple[int, int]]:
    """Return (strand, lower position) if ``a`` and ``b`` are neighbours."""
    sa, pa = D.locate(a)
    sb, pb = D.locate(b)
    if sa == sb and abs(pa - pb) == 1:
        return sa, min(pa, pb)
    return None


def _r3_ok(D: GaussDiagram, x: int, y: int, z: int) -> bool:
    if len({x, y, z}) != 3:
        return False
    if not _adjacent(D, (x, True), (y, True)):
        return False
    if not _adjacent(D, (x, False), (z, True)):
        return False
    if not _adjacent(D, (y, False), (z, False)):
        return False
    x_first = D.locate((x, False))[1] < D.locate((z, True))[1]
    y_first = D.locate((y, False))[1] < D.locate((z, False))[1]
    same = D.signs[x] == D.signs[y]
    return same if x_first == y_first else not same


def detect_moves(D: GaussDiagram) -> List[Move]:
    out: List[Move] = []
    for c in D.chords:
        if _adjacent(D, (c, True), (c, False)):
            out.append(Move("R1-", (c,)))
    chords = D.chords
    for a_i, a in enumerate(chords):
        for b in chords[a_i + 1:]:
            if (D.signs[a] != D.signs[b]
                    and _adjacent(D, (a, True), (b, True))
                    and _adjacent(D, (a, False), (b, False))):
                out.append(Move("R2-", (a, b)))
    for x in chords:
        for y in chords:
            for z in chords:
                if _r3_ok(D, x, y, z):
                    out.append(Move("R3", (x, y, z)))
    for i, strand in enumerate(D.strands):
        for k in range(len(strand) - 1):
            if strand[k][1] and strand[k + 1][1]:
                out.append(Move("OC", strand=i + 1, pos=k))
    return out


def apply_move(D: GaussDiagram, m: Move) -> GaussDiagram:
    strands = [list(s) for s in D.strands]
    signs = dict(D.signs)
    fresh = max(signs, default=-1) + 1
    if m.kind in ("R1-", "R2-"):
        if m.kind == "R1-":
            ok = len(m.chords) == 1 and m.chords[0] in signs and _adjacent(
                D, (m.chords[0], True), (m.chords[0], False))
        else:
            ok = (len(m.chords) == 2 and all(c in signs for c in m.chords)
                  and m.chords[0] != m.chords[1]
                  and signs[m.chords[0]] == -signs[m.chords[1]]
                  and _adjacent(D, (m.chords[0], True), (m.chords[1], True))
                  and _adjacent(D, (m.chords[0], False), (m.chords[1], False)))
        if not ok:
            raise DiagramError(f"{m.kind} not applicable to chords {m.chords}")
        dead = set(m.chords)
        strands = [[ep for ep in s if ep[0] not in dead] for s in strands]
        for c in dead:
            del signs[c]
    elif m.kind == "R1+":
        s = _strand(D, m.strand)
        if not 0 <= m.pos <= len(strands[s]):
            raise DiagramError("R1+ position out of range")
        pair = [(fresh, m.over_first), (fresh, not m.over_first)]
        strands[s][m.pos:m.pos] = pair
        signs[fresh] = _sign(m.sign)
    elif m.kind == "R2+":
        so, su = _strand(D, m.strand), _strand(D, m.strand2)
        if not 0 <= m.pos <= len(strands[so]) or not 0 <= m.pos2 <= len(strands[su]):
            raise DiagramError("R2+ position out of range")
        a, b = fresh, fresh + 1
        signs[a], signs[b] = _sign(m.sign), -_sign(m.sign)
        marks = {}
        marks.setdefault((so, m.pos), []).extend([(a, True), (b, True)])
        marks.setdefault((su, m.pos2), []).extend([(a, False), (b, False)])
        strands = _insert(strands, marks)
    elif m.kind == "R3":
        if len(m.chords) != 3 or not all(c in signs for c in m.chords) \
                or not _r3_ok(D, *m.chords):
            raise DiagramError(f"R3 not applicable to {m.chords}")
        x, y, z = m.chords
        for a, b in (((x, False), (z, True)), ((y, False), (z, False))):
            s, p = _adjacent(D, a, b)
            strands[s][p], strands[s][p + 1] = strands[s][p + 1], strands[s][p]
    elif m.kind == "OC":
        s = _strand(D, m.strand)
        k = m.pos
        if not (0 <= k < len(strands[s]) - 1
                and strands[s][k][1] and strands[s][k + 1][1]):
            raise DiagramError("OC needs two adjacent over endpoints")
        strands[s][k], strands[s][k + 1] = strands[s][k + 1], strands[s][k]
    else:
        raise DiagramError(f"unknown move kind {m.kind!r}")
    return GaussDiagram(D.n, strands, signs)


def _strand(D: GaussDiagram, i: int) -> int:
    if not 1 <= i <= D.n:
        raise DiagramError(f"strand index {i} out of range")
    return i - 1


def _sign(s: int) -> int:
    if s not in (1, -1):
        raise DiagramError("sign must be +1 or -1")
    return s


def _insert(strands, marks):
    out = []
    for i, s in enumerate(strands):
        row = []
        for k in range(len(s) + 1):
            row.extend(marks.get((i, k), []))
            if k < len(s):
                row.append(s[k])
        out.append(row)
    return out
