"""Arrow calculus: w-trees on the trivial diagram, expansion and surgery.

A w-tree has one head and a planar binary tree of tails.  Positions are
exact rationals in (0, 1) along each strand.  Beads are kept mod 2 on
the edge *above* each node (towards the head); the bead on the root's
upper edge is the head-edge bead, which inverts the tree.

Expansion is done algebraically.  Each subtree evaluates to a signed
word of tail copies, and surgery conjugates the head strand by that
word: one chord per letter, heads placed consecutively in word order,
tail copies placed side by side at their leaf (their relative order is
irrelevant because adjacent over-passages commute).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .diagram import DiagramError, GaussDiagram, new_trivial


class WTreeError(ValueError):
    """Malformed w-tree, presentation or generator name."""


@dataclass(frozen=True)
class Site:
    strand: int
    pos: Fraction

    def __post_init__(self):
        if self.strand < 1:
            raise WTreeError(f"strand index must be >= 1, got {self.strand}")
        if not 0 < self.pos < 1:
            raise WTreeError(f"position {self.pos} not in (0, 1)")

    def __str__(self):
        return f"{self.strand}@{self.pos.numerator}/{self.pos.denominator}"


@dataclass(frozen=True)
class Leaf:
    site: Site
    bead: int = 0


@dataclass(frozen=True)
class Node:
    left: "Tree"
    right: "Tree"
    bead: int = 0


Tree = Union[Leaf, Node]

# Word built at a trivalent vertex from the words of its two subtrees,
# as (child, inverted) pairs: w1 w2^-1 w1^-1 w2.
EXPANSION_PATTERN: Tuple[Tuple[int, bool], ...] = ((0, False), (1, True),
                                                   (0, True), (1, False))


def _toggle(t: Tree) -> Tree:
    return replace(t, bead=t.bead ^ 1)


def _leaves(t: Tree) -> List[Site]:
    if isinstance(t, Leaf):
        return [t.site]
    return _leaves(t.left) + _leaves(t.right)


@dataclass(frozen=True)
class WTree:
    head: Site
    root: Tree

    @property
    def degree(self) -> int:
        return len(_leaves(self.root))

    def sites(self) -> List[Site]:
        return [self.head] + _leaves(self.root)

    def inverse(self) -> "WTree":
        """Same tree with a bead toggled next to the head."""
        return WTree(self.head, _toggle(self.root))

    def relocate(self, f) -> "WTree":
        """Apply ``f(Site) -> Site`` to every endpoint."""
        def go(t):
            if isinstance(t, Leaf):
                return Leaf(f(t.site), t.bead)
            return Node(go(t.left), go(t.right), t.bead)
        return WTree(f(self.head), go(self.root))

    def __str__(self):
        return f"[{self.head} {_emit_tree(self.root, top=True)}]"


@dataclass(frozen=True)
class Arrow:
    """A w1-arrow after expansion; positions are sort keys ``(pos, copy)``."""

    tail_strand: int
    tail_key: Tuple[Fraction, int]
    head_strand: int
    head_key: Tuple[Fraction, int]
    bead: int


def _word(t: Tree) -> List[Tuple[Site, int]]:
    if isinstance(t, Leaf):
        w = [(t.site, 0)]
    else:
        parts = (_word(t.left), _word(t.right))
        w = []
        for child, inv in EXPANSION_PATTERN:
            w.extend(_invert(parts[child]) if inv else parts[child])
    return _invert(w) if t.bead else w


def _invert(w):
    return [(s, b ^ 1) for s, b in reversed(w)]


def expand(T: WTree) -> List[Arrow]:
    """Expand a w-tree into w1-arrows, in head order along the head strand."""
    word = _word(T.root)
    copies: Dict[Site, int] = {}
    out = []
    for k, (site, bead) in enumerate(word):
        c = copies.get(site, 0)
        copies[site] = c + 1
        out.append(Arrow(site.strand, (site.pos, c), T.head.strand,
                         (T.head.pos, k), bead))
    return out


def expansion_count(T: WTree) -> int:
    def go(t):
        if isinstance(t, Leaf):
            return 1
        return 2 * (go(t.left) + go(t.right))
    return go(T.root)


@dataclass(frozen=True)
class WTreePresentation:
    n: int
    trees: Tuple[WTree, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 1:
            raise WTreeError("a presentation needs n >= 1")
        object.__setattr__(self, "trees", tuple(self.trees))
        seen = set()
        for T in self.trees:
            for s in T.sites():
                if s.strand > self.n:
                    raise WTreeError(f"site {s} outside {self.n} strands")
                if s in seen:
                    raise WTreeError(f"position reused at {s}")
                seen.add(s)

    def __mul__(self, other: "WTreePresentation") -> "WTreePresentation":
        return stack_presentations([self, other])

    def __str__(self):
        return emit_wtree(self)


def stack_presentations(parts: Sequence[WTreePresentation]) -> WTreePresentation:
    if not parts:
        raise WTreeError("nothing to stack")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise WTreeError("strand counts differ")
    m = len(parts)
    trees = []
    for k, p in enumerate(parts):
        trees.extend(T.relocate(lambda s, k=k: Site(s.strand, (k + s.pos) / m))
                     for T in p.trees)
    return WTreePresentation(n, trees)


def surgery(P: WTreePresentation) -> GaussDiagram:
    """Gauss diagram of ``1_T``: each expanded arrow becomes one chord.

    Tail -> over endpoint, head -> under endpoint, sign ``(-1)**bead``.
    """
    keyed: List[List[Tuple[tuple, int, bool]]] = [[] for _ in range(P.n)]
    signs = {}
    cid = 0
    for t_index, T in enumerate(P.trees):
        for a in expand(T):
            signs[cid] = -1 if a.bead else 1
            keyed[a.tail_strand - 1].append((a.tail_key + (0,), cid, True))
            keyed[a.head_strand - 1].append((a.head_key + (1,), cid, False))
            cid += 1
    strands = []
    for row in keyed:
        row.sort(key=lambda r: r[0])
        strands.append([(c, o) for _, c, o in row])
    try:
        return GaussDiagram(P.n, strands, signs)
    except DiagramError as exc:  # pragma: no cover - guarded by validation
        raise WTreeError(str(exc)) from exc


# -- text format ----------------------------------------------------------

_SITE = re.compile(r"(\d+)@(\d+)/(\d+)")


def parse_wtree(text: str) -> WTreePresentation:
    """Parse ``strands <n>`` followed by one ``[head subtree]`` per tree.

    Trees may be separated by newlines or ``;``.  ``*`` after a site or a
    parenthesised group puts a bead on the edge above it.
    """
    chunks = [c.split("#", 1)[0].strip() for c in re.split(r"[\n;]", text)]
    chunks = [c for c in chunks if c]
    if not chunks:
        raise WTreeError("empty input")
    m = re.fullmatch(r"strands\s+(\d+)", chunks[0])
    if not m:
        raise WTreeError(f"bad header {chunks[0]!r}; expected 'strands <n>'")
    n = int(m.group(1))
    trees = []
    for chunk in chunks[1:]:
        for tree_text in re.findall(r"\[[^\]]*\]|\S+", chunk):
            if not (tree_text.startswith("[") and tree_text.endswith("]")):
                raise WTreeError(f"unexpected text {tree_text!r}")
            trees.append(_parse_tree(tree_text[1:-1]))
    return WTreePresentation(n, trees)


def _tokenize(s: str) -> List[str]:
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch in "()*":
            toks.append(ch)
            i += 1
        else:
            m = _SITE.match(s, i)
            if not m:
                raise WTreeError(f"bad site at {s[i:]!r}")
            toks.append(m.group(0))
            i = m.end()
    return toks


def _site(tok: str) -> Site:
    m = _SITE.fullmatch(tok)
    if not m:
        raise WTreeError(f"expected a site, got {tok!r}")
    q = int(m.group(3))
    if q == 0:
        raise WTreeError("zero denominator")
    return Site(int(m.group(1)), Fraction(int(m.group(2)), q))


def _parse_tree(body: str) -> WTree:
    toks = _tokenize(body)
    if not toks:
        raise WTreeError("empty tree")
    head = _site(toks[0])
    k = 1
    head_beads = 0
    while k < len(toks) and toks[k] == "*":
        head_beads ^= 1
        k += 1
    root, k = _parse_sub(toks, k)
    if k != len(toks):
        raise WTreeError(f"trailing tokens {toks[k:]}")
    if head_beads:
        root = _toggle(root)
    return WTree(head, root)


def _parse_sub(toks, k):
    if k >= len(toks):
        raise WTreeError("missing subtree")
    if toks[k] == "(":
        items = []
        k += 1
        while k < len(toks) and toks[k] != ")":
            item, k = _parse_sub(toks, k)
            items.append(item)
        if k >= len(toks):
            raise WTreeError("unbalanced brackets")
        k += 1
        if len(items) == 1:
            t = items[0]
        elif len(items) == 2:
            t = Node(items[0], items[1])
        else:
            raise WTreeError(f"a vertex needs 2 children, got {len(items)}")
    elif toks[k] in (")", "*"):
        raise WTreeError(f"unexpected {toks[k]!r}")
    else:
        t = Leaf(_site(toks[k]))
        k += 1
    while k < len(toks) and toks[k] == "*":
        t = _toggle(t)
        k += 1
    return t, k


def _emit_tree(t: Tree, top: bool = False) -> str:
    star = "*" if t.bead else ""
    if isinstance(t, Leaf):
        body = str(t.site)
        return f"({body}){star}" if top else body + star
    return f"({_emit_tree(t.left)} {_emit_tree(t.right)}){star}"


def emit_wtree(P: WTreePresentation) -> str:
    lines = [f"strands {P.n}"] + [str(T) for T in P.trees]
    return "\n".join(lines) + "\n"


# -- generator library ----------------------------------------------------

def _tree(template: str, ren: Dict[int, int]) -> WTree:
    """Build a tree from a template, renaming template strands via ``ren``."""
    t = _parse_tree(template)
    return t.relocate(lambda s: Site(ren[s.strand], s.pos))


# Templates use strands 1, 2, 3 for the indices i, j, k in order.
# In the degree-2 pictures a tail edge that leaves its strand to the left
# carries a bead.
_TEMPLATES: Dict[str, Tuple[int, str]] = {
    "Z": (2, "2@1/2 (1@1/2)"),
    "E": (1, "1@1/2 (1@1/4 1@3/4)"),
    "A": (2, "1@3/4 (1@1/4 2@1/2*)"),
    "B": (2, "1@1/4 (2@1/2* 1@3/4)"),
    "C": (2, "2@3/4 (1@1/2 2@1/4*)"),
    "D": (2, "2@1/4 (2@3/4* 1@1/2)"),
    "G": (3, "1@1/2 (2@1/2 3@1/2*)"),
    "F": (1, "1@2/3 (1@1/3 (1@1/6 1@5/6))"),
    "F'": (1, "1@1/3 ((1@1/6 1@5/6) 1@2/3)"),
    "A3": (2, "1@3/4 ((1@1/4 2@1/4) 2@3/4)"),
    "B3": (2, "1@1/4 (2@1/4 (2@3/4 1@3/4))"),
    "C3": (2, "2@7/8 (1@3/4 (1@1/4 2@1/4))"),
    "D3": (2, "2@1/8 ((2@3/4 1@3/4) 1@1/4)"),
    "TO1": (2, "1@4/5 (1@3/5 (1@1/5 2@2/5))"),
    "TO2": (2, "1@3/5 ((1@1/5 2@2/5) 1@4/5)"),
    "TO3": (2, "1@2/5 (1@1/5 (2@3/5 1@4/5))"),
    "TO4": (2, "1@1/5 ((2@3/5 1@4/5) 1@2/5)"),
    "OT1": (2, "2@17/20 ((1@2/5 2@1/5) 2@3/5)"),
    "OT2": (2, "2@13/20 (2@4/5 (1@2/5 2@1/5))"),
    "OT3": (2, "2@9/20 ((2@4/5 1@3/5) 2@1/5)"),
    "OT4": (2, "2@1/4 (2@2/5 (2@4/5 1@3/5))"),
}

# Two-strand degree-3 generators live on strands 1 and 2 by default.
FIXED_TWO_STRAND = {"A3", "B3", "C3", "D3", "TO1", "TO2", "TO3", "TO4",
                    "OT1", "OT2", "OT3", "OT4"}

GENERATOR_NAMES = tuple(_TEMPLATES)


@dataclass(frozen=True)
class GeneratorId:
    """A named basic welded string link raised to an integer power."""

    name: str
    indices: Tuple[int, ...] = ()
    exponent: int = 1

    def __post_init__(self):
        if self.name not in _TEMPLATES:
            raise WTreeError(f"unknown generator {self.name!r}")
        object.__setattr__(self, "indices", tuple(self.indices))
        arity = _TEMPLATES[self.name][0]
        idx = self.indices
        if self.name in FIXED_TWO_STRAND and not idx:
            object.__setattr__(self, "indices", (1, 2))
            idx = (1, 2)
        if len(idx) != arity:
            raise WTreeError(f"{self.name} takes {arity} indices, got {len(idx)}")
        if len(set(idx)) != len(idx) or any(i < 1 for i in idx):
            raise WTreeError(f"{self.name}: indices must be distinct and >= 1")

    @property
    def degree(self) -> int:
        return _parse_tree(_TEMPLATES[self.name][1]).degree

    def min_strands(self) -> int:
        return max(self.indices)

    def __str__(self):
        return f"{self.name}[{','.join(map(str, self.indices))}]^{self.exponent}"


def generator_tree(name: str, indices: Sequence[int]) -> WTree:
    arity, template = _TEMPLATES[name]
    return _tree(template, {k + 1: i for k, i in enumerate(indices)})


def generator(g: GeneratorId, n: int | None = None) -> WTreePresentation:
    """Presentation of ``g`` on ``n`` strands (default: smallest that fits).

    A negative exponent stacks copies of the head-bead inverse.
    """
    if n is None:
        n = g.min_strands()
    if n < g.min_strands():
        raise WTreeError(f"{g} needs at least {g.min_strands()} strands")
    T = generator_tree(g.name, g.indices)
    if g.exponent < 0:
        T = T.inverse()
    one = WTreePresentation(n, [T])
    if g.exponent == 0:
        return WTreePresentation(n, [])
    return stack_presentations([one] * abs(g.exponent))


def g_normalized(i: int, j: int, k: int) -> Tuple[GeneratorId, int]:
    """Rewrite ``G[i,j,k]`` with ``j < k`` using G[i,k,j] ~ G[i,j,k]^-1."""
    if j < k:
        return GeneratorId("G", (i, j, k)), 1
    return GeneratorId("G", (i, k, j)), -1
