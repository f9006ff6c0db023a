"""Finite-type degree checks by alternating sums over virtualizations.

An invariant ``v`` has degree at most ``d`` when, for every set ``S`` of
``d + 1`` crossings, ``sum over S' in S of (-1)^|S'| v(L_S')`` vanishes,
where ``L_S'`` virtualizes (deletes) the chords of ``S'``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, Optional, Tuple

from .diagram import GaussDiagram, virtualize
from .invariants import Descriptor, evaluate

DEFAULT_BUDGET = 2_000_000


class FiniteTypeError(ValueError):
    pass


@dataclass(frozen=True)
class FtReport:
    invariant: str
    degree: int
    subsets: int
    exhaustive: bool
    max_violation: int
    witness: Optional[Tuple[int, ...]] = None
    seed: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.max_violation == 0

    def as_dict(self):
        return {"invariant": self.invariant, "degree": self.degree,
                "subsets": self.subsets, "exhaustive": self.exhaustive,
                "max_violation": self.max_violation,
                "witness": list(self.witness) if self.witness is not None else None,
                "seed": self.seed}


def alternating_sum(D: GaussDiagram, nu: Descriptor, S: Iterable[int],
                    cache: Dict[FrozenSet[int], int] | None = None) -> int:
    S = tuple(S)
    cache = {} if cache is None else cache
    total = 0
    for r in range(len(S) + 1):
        for sub in combinations(S, r):
            key = frozenset(sub)
            if key not in cache:
                cache[key] = evaluate(virtualize(D, key), nu)
            total += (-1) ** r * cache[key]
    return total


def ft_test(D: GaussDiagram, nu: Descriptor, d: int,
            budget: int = DEFAULT_BUDGET, seed: int = 0) -> FtReport:
    """Check the degree-``d`` vanishing condition on ``(d+1)``-subsets of chords.

    All subsets are tried when ``C(chords, d+1) * 2^(d+1) <= budget``;
    otherwise ``budget // 2^(d+1)`` subsets are drawn with a seeded RNG.
    """
    if d < 0:
        raise FiniteTypeError("degree must be non-negative")
    chords = D.chords
    if len(chords) < d + 1:
        raise FiniteTypeError(f"need at least {d + 1} chords, diagram has {len(chords)}")
    per = 2 ** (d + 1)
    total = comb(len(chords), d + 1)
    exhaustive = total * per <= budget
    if exhaustive:
        subsets = combinations(chords, d + 1)
        count = total
        used_seed = None
    else:
        rng = random.Random(seed)
        count = max(1, budget // per)
        subsets = (tuple(sorted(rng.sample(chords, d + 1))) for _ in range(count))
        used_seed = seed
    cache: Dict[FrozenSet[int], int] = {}
    worst, witness = 0, None
    for S in subsets:
        v = alternating_sum(D, nu, S, cache)
        if abs(v) > worst:
            worst, witness = abs(v), tuple(S)
    return FtReport(nu.key, d, count, exhaustive, worst, witness, used_seed)


def degree_bound(corpus: Iterable[GaussDiagram], nu: Descriptor, dmax: int,
                 budget: int = DEFAULT_BUDGET, seed: int = 0) -> int:
    """Smallest ``d <= dmax`` whose vanishing condition holds on the whole corpus.

    Diagrams with at most ``d`` chords satisfy it vacuously.  Returns
    ``dmax + 1`` when no degree passes.
    """
    corpus = list(corpus)
    for d in range(dmax + 1):
        if all(len(D) <= d or ft_test(D, nu, d, budget, seed).passed for D in corpus):
            return d
    return dmax + 1
