"""Deterministic test corpus: generator words and random Gauss diagrams."""

from __future__ import annotations

import random
from typing import List, Sequence, Tuple

from .arrows import GeneratorId, generator, surgery
from .diagram import GaussDiagram
from .normal_form import NormalFormWord, realize

# (name, number of indices); 0 marks the fixed two-strand degree-3 trees
DEGREE_1_2 = (("Z", 2), ("E", 1), ("A", 2), ("B", 2), ("C", 2), ("D", 2), ("G", 3))
DEGREE_3 = (("F", 1), ("F'", 1), ("A3", 0), ("B3", 0), ("C3", 0), ("D3", 0),
            ("TO1", 0), ("TO2", 0), ("TO3", 0), ("TO4", 0),
            ("OT1", 0), ("OT2", 0), ("OT3", 0), ("OT4", 0))


def random_word(rng: random.Random, n: int, max_factors: int = 6,
                names: Sequence[Tuple[str, int]] = DEGREE_1_2,
                exponents: Sequence[int] = (1, -1, 2, -2)) -> NormalFormWord:
    pool = [(nm, a) for nm, a in names if a <= n and (a or n == 2)]
    factors = []
    for _ in range(rng.randint(1, max_factors)):
        nm, a = rng.choice(pool)
        idx = tuple(rng.sample(range(1, n + 1), a)) if a else (1, 2)
        factors.append(GeneratorId(nm, idx, rng.choice(exponents)))
    return NormalFormWord(n, 0, tuple(factors))


def random_gauss(rng: random.Random, n: int, chords: int) -> GaussDiagram:
    """Uniformly scattered signed chords; both endpoints may share a strand."""
    strands: List[list] = [[] for _ in range(n)]
    signs = {}
    for c in range(chords):
        signs[c] = rng.choice((1, -1))
        for over in (True, False):
            s = strands[rng.randrange(n)]
            s.insert(rng.randint(0, len(s)), (c, over))
    return GaussDiagram(n, strands, signs)


def generator_diagrams(n: int) -> List[GaussDiagram]:
    """Surgery of every degree-1 and degree-2 generator on ``n`` strands, both signs."""
    from itertools import permutations
    out = []
    for nm, a in DEGREE_1_2:
        for idx in permutations(range(1, n + 1), a):
            for e in (1, -1):
                out.append(surgery(generator(GeneratorId(nm, idx, e), n)))
    return out


def standard_corpus(seed: int = 0, size: int = 40, max_chords: int | None = None) -> List[GaussDiagram]:
    """Generator surgeries, random words and random diagrams on 1 to 3 strands."""
    rng = random.Random(seed)
    out = generator_diagrams(2) + generator_diagrams(3)
    for k in range(size):
        n = 2 + k % 2
        out.append(realize(random_word(rng, n, 3)))
        out.append(random_gauss(rng, 1 + k % 3, rng.randint(0, 6)))
    if max_chords is not None:
        out = [D for D in out if len(D) <= max_chords]
    return out
