import pytest
from hypothesis import given

from weldedcalc.diagram import (ClosureList, DiagramError, GaussParseError, closure,
                                delete_component, emit_gauss, linking_sum, new_trivial,
                                parse_gauss, reverse_component, stack, virtualize)
from weldedcalc.invariants import linking

from conftest import gauss_diagrams, gen


def test_new_trivial():
    D = new_trivial(2)
    assert D.n == 2 and len(D) == 0 and D.is_trivial()
    with pytest.raises(DiagramError):
        new_trivial(0)


def test_stack_z12_twice(z12):
    D = stack(z12, z12)
    assert len(D) == 2
    assert linking(D, 1, 2) == 2


def test_stack_strand_mismatch(z12):
    with pytest.raises(DiagramError):
        stack(z12, new_trivial(3))


@given(gauss_diagrams(n=2), gauss_diagrams(n=2), gauss_diagrams(n=2))
def test_stack_monoid_laws(a, b, c):
    one = new_trivial(2)
    assert stack(one, a).same_up_to_renaming(a)
    assert stack(a, one).same_up_to_renaming(a)
    assert stack(stack(a, b), c).same_up_to_renaming(stack(a, stack(b, c)))


@given(gauss_diagrams(n=2), gauss_diagrams(n=2))
def test_linking_is_additive_under_stacking(a, b):
    ab = stack(a, b)
    for i, j in ((1, 2), (2, 1)):
        assert linking(ab, i, j) == linking(a, i, j) + linking(b, i, j)


def test_reverse_flips_mixed_chord(z12):
    R = reverse_component(z12, 2)
    assert list(R.signs.values()) == [-1]


@given(gauss_diagrams())
def test_reverse_is_involution(D):
    for i in range(1, D.n + 1):
        assert reverse_component(reverse_component(D, i), i) == D


def test_reverse_keeps_self_chords():
    E = gen("E", 1)
    assert dict(reverse_component(E, 1).signs) == dict(E.signs)


def test_delete_component(z12):
    D = delete_component(z12, 2)
    assert D.n == 1 and D.is_trivial()
    assert delete_component(new_trivial(3), 2) == new_trivial(2)
    with pytest.raises(DiagramError):
        delete_component(delete_component(z12, 2), 1)
    with pytest.raises(DiagramError):
        delete_component(z12, 3)


@given(gauss_diagrams(n=3))
def test_delete_commutes(D):
    # deleting 1 then (old) 3 equals deleting 3 then 1
    a = delete_component(delete_component(D, 1), 2)
    b = delete_component(delete_component(D, 3), 1)
    assert a == b


@given(gauss_diagrams(n=3))
def test_closure_keeps_chords_on_listed_strands(D):
    K = closure(D, ClosureList.of(1, -3))
    want = {c for c in D.chords
            if {D.over_strand(c), D.under_strand(c)} <= {0, 2}}
    assert set(K.signs) == want
    assert K.n == 1


def test_closure_of_trivial():
    assert closure(new_trivial(3), (2, -1)).is_trivial()


def test_closure_list_validation():
    with pytest.raises(DiagramError):
        ClosureList.of(1, -1)
    with pytest.raises(DiagramError):
        ClosureList.of()
    assert str(ClosureList.of(1, -2)) == "(1,~2)"


def test_virtualize(z12):
    (c,) = z12.chords
    assert linking(virtualize(z12, {c}), 1, 2) == 0
    assert virtualize(z12, set()) == z12
    with pytest.raises(DiagramError):
        virtualize(z12, {99})


@given(gauss_diagrams())
def test_virtualize_everything_is_trivial(D):
    assert virtualize(D, D.chords).is_trivial()


def test_parse_z12(z12):
    D = parse_gauss("n=2 / 1: O a + / 2: U a +")
    assert D.same_up_to_renaming(z12)
    assert parse_gauss("n=1 /").is_trivial()


@pytest.mark.parametrize("text", [
    "n=1 / 1: O a + U a -",
    "n=1 / 1: O a +",
    "m=2",
    "n=2 / 3: O a + U a +",
    "n=1 / 1: O a + O a +",
    "",
])
def test_parse_errors(text):
    with pytest.raises(GaussParseError):
        parse_gauss(text)


@given(gauss_diagrams())
def test_gauss_round_trip(D):
    text = emit_gauss(D)
    assert parse_gauss(text).same_up_to_renaming(D)
    assert emit_gauss(parse_gauss(text)) == text


@given(gauss_diagrams(n=2))
def test_linking_sum_matches_linking(D):
    assert linking_sum(D, 1, 2) == linking(D, 1, 2)
