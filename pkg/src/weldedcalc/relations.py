"""Relations among basic string links, checked by equality of invariant vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .invariants import invariant_vector
from .normal_form import parse_word, realize


@dataclass(frozen=True)
class Relation:
    name: str
    lhs: str
    rhs: str
    n: int
    degree: int


@dataclass(frozen=True)
class RelationResult:
    relation: Relation
    holds: bool
    mismatches: Dict[str, Tuple[int, int]] = field(default_factory=dict)

    def line(self) -> str:
        r = self.relation
        verdict = "PASS" if self.holds else "FAIL"
        return f"{verdict} {r.name}: {r.lhs} ~ {r.rhs or '1'} (n={r.n}, degree <= {r.degree})"


def _pairs(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def relation_suite() -> List[Relation]:
    out = []
    for n in (2, 3):
        for i, j in _pairs(n):
            out.append(Relation(f"A~C^-1 ({i},{j})", f"A[{i},{j}]^1", f"C[{j},{i}]^-1", n, 2))
            out.append(Relation(f"B~D^-1 ({i},{j})", f"B[{i},{j}]^1", f"D[{j},{i}]^-1", n, 2))
            out.append(Relation(f"ABCD~1 ({i},{j})",
                                f"A[{i},{j}]^1 B[{i},{j}]^1 C[{i},{j}]^1 D[{i},{j}]^1", "", n, 2))
    for i in (1, 2, 3):
        j, k = [x for x in (1, 2, 3) if x != i]
        out.append(Relation(f"G~G^-1 ({i},{k},{j})", f"G[{i},{k},{j}]^1", f"G[{i},{j},{k}]^-1", 3, 2))
    for i in (1, 2):
        out.append(Relation(f"F'~F^-1 on {i}", f"F'[{i}]^1", f"F[{i}]^-1", 2, 3))
    out += [
        Relation("TO1~TO2^-1", "TO1[1,2]^1", "TO2[1,2]^-1", 2, 3),
        Relation("TO3~TO4^-1", "TO3[1,2]^1", "TO4[1,2]^-1", 2, 3),
        Relation("OT1~OT2^-1", "OT1[1,2]^1", "OT2[1,2]^-1", 2, 3),
        Relation("OT3~OT4^-1", "OT3[1,2]^1", "OT4[1,2]^-1", 2, 3),
        Relation("A*OT3~B*OT2", "A3[1,2]^1 OT3[1,2]^1", "B3[1,2]^1 OT2[1,2]^1", 2, 3),
        Relation("C*TO3~D*TO2", "C3[1,2]^1 TO3[1,2]^1", "D3[1,2]^1 TO2[1,2]^1", 2, 3),
    ]
    return out


def check(rel: Relation) -> RelationResult:
    lhs = realize(parse_word(rel.lhs, rel.n))
    rhs = realize(parse_word(rel.rhs, rel.n))
    v1 = invariant_vector(lhs, rel.degree)
    v2 = invariant_vector(rhs, rel.degree)
    diff = v1.diff(v2)
    return RelationResult(rel, not diff, diff)


def run_suite() -> List[RelationResult]:
    return [check(r) for r in relation_suite()]


def conjecture_evidence():
    """Degree-3 vectors of ``A*D`` and ``B*C`` and their difference."""
    ad = invariant_vector(realize(parse_word("A3[1,2]^1 D3[1,2]^1", 2)), 3)
    bc = invariant_vector(realize(parse_word("B3[1,2]^1 C3[1,2]^1", 2)), 3)
    return ad, bc, ad.diff(bc)
