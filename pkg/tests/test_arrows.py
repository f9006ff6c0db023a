from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weldedcalc.arrows import (GENERATOR_NAMES, GeneratorId, Leaf, Node, Site, WTree,
                               WTreeError, WTreePresentation, emit_wtree, expand,
                               expansion_count, generator, parse_wtree, stack_presentations,
                               surgery)
from weldedcalc.diagram import stack
from weldedcalc.invariants import closure_invariant, invariant_vector

from conftest import gen


@st.composite
def trees(draw, depth=3, n=2):
    counter = iter(range(1, 1000))

    def build(d):
        if d == 0 or draw(st.booleans()):
            return Leaf(Site(draw(st.integers(1, n)), Fraction(next(counter), 1000)),
                        draw(st.integers(0, 1)))
        return Node(build(d - 1), build(d - 1), draw(st.integers(0, 1)))

    root = build(depth)
    return WTree(Site(draw(st.integers(1, n)), Fraction(999, 1000)), root)


def _count(t):
    if isinstance(t, Leaf):
        return 1
    return 2 * (_count(t.left) + _count(t.right))


def test_expansion_counts():
    w2 = parse_wtree("strands 2 ; [1@1/2 (1@1/4 2@1/2)]").trees[0]
    w3 = parse_wtree("strands 2 ; [1@1/2 (1@1/4 (2@1/4 2@3/4))]").trees[0]
    assert len(expand(w2)) == expansion_count(w2) == 4
    assert len(expand(w3)) == expansion_count(w3) == 10


@given(trees())
def test_expansion_count_recursion(T):
    assert len(expand(T)) == expansion_count(T) == _count(T.root)


@given(trees())
def test_expansion_heads_are_consecutive(T):
    arrows = expand(T)
    assert all(a.head_strand == T.head.strand for a in arrows)
    assert [a.head_key[1] for a in arrows] == list(range(len(arrows)))


def test_z12_surgery():
    D = gen("Z", 1, 2)
    (c,) = D.chords
    assert D.over_strand(c) == 0 and D.under_strand(c) == 1
    assert D.signs[c] == 1
    assert gen("Z", 1, 2, e=-1).signs[c] == -1


def test_e_surgery():
    D = gen("E", 1)
    assert D.n == 1 and len(D) == 4
    assert closure_invariant(D, (1,), 2) == 1
    assert closure_invariant(gen("E", 1, e=-1), (1,), 2) == -1


def test_wtree_format_examples():
    # the head site comes first, so the tail sits on strand 1
    D = surgery(parse_wtree("strands 2 ; [2@1/2 (1@1/3)]"))
    assert D.same_up_to_renaming(gen("Z", 1, 2))
    D = surgery(parse_wtree("strands 2 ; [2@1/2 (1@1/3)*]"))
    assert D.same_up_to_renaming(gen("Z", 1, 2, e=-1))


@given(trees())
def test_double_bead_cancels(T):
    assert T.inverse().inverse() == T


@given(trees(n=3))
def test_wtree_text_round_trip(T):
    P = WTreePresentation(3, [T])
    assert parse_wtree(emit_wtree(P)) == P


@pytest.mark.parametrize("text", [
    "", "strands x", "strands 2 ; [3@1/2 (1@1/3)]", "strands 2 ; [1@3/2 (2@1/2)]",
    "strands 2 ; [1@1/2 (2@1/2 2@1/2)]", "strands 2 ; 1@1/2", "strands 2 ; [1@1/2 (2@1/0)]",
])
def test_wtree_parse_errors(text):
    with pytest.raises(WTreeError):
        parse_wtree(text)


def test_generator_validation():
    with pytest.raises(WTreeError):
        GeneratorId("Q", (1, 2))
    with pytest.raises(WTreeError):
        GeneratorId("A", (1, 1))
    with pytest.raises(WTreeError):
        generator(GeneratorId("G", (1, 2, 3)), 2)
    assert GeneratorId("TO1").indices == (1, 2)


@pytest.mark.parametrize("name", ["A", "B", "C", "D", "G", "E"])
def test_head_bead_inverts_degree2(name):
    arity = {"E": 1, "G": 3}.get(name, 2)
    idx = (1, 2, 3)[:arity]
    T = generator(GeneratorId(name, idx), 3)
    Ti = generator(GeneratorId(name, idx, -1), 3)
    D = stack(surgery(T), surgery(Ti))
    assert invariant_vector(D, 2).is_zero()


@pytest.mark.parametrize("name", [g for g in GENERATOR_NAMES if g not in ("Z", "E", "A", "B", "C", "D", "G")])
def test_head_bead_inverts_degree3(name):
    arity = 1 if name in ("F", "F'") else 2
    idx = (1, 2)[:arity]
    D = stack(gen(name, *idx, n=2), gen(name, *idx, e=-1, n=2))
    assert invariant_vector(D, 3).is_zero()


def test_stack_presentations_rescales():
    P = generator(GeneratorId("Z", (1, 2)))
    Q = stack_presentations([P, P])
    assert [T.head.pos for T in Q.trees] == [Fraction(1, 4), Fraction(3, 4)]
    assert len(surgery(Q)) == 2
