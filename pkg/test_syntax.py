"""Test structural metrics and fragment classification."""
import pytest

from syntax.formula import Atom, BOTTOM, TOP, atoms, conditional_depth, conj, disj, horizon, size, ydepth
from syntax.fragments import (
    FUTURE, PAST, FragmentTag, chain, first_non_xy_antecedent, fragment_of, is_pl,
)
from syntax.parser import parse


@pytest.mark.parametrize("text, expected", [
    ("p", 0), ("X X p", 2), ("Y X X p", 1), ("X Y p", 1), ("Y p", 0),
    ("[X p] X X q", 2), ("box Y X X p -> box X p", 1),
])
def test_horizon(text, expected):
    assert horizon(parse(text)) == expected


@pytest.mark.parametrize("text, expected", [
    ("p", 0), ("Y Y p", 2), ("X Y Y p", 1), ("Y X p", 1), ("[Y p] Y Y Y #f", 3),
])
def test_ydepth(text, expected):
    assert ydepth(parse(text)) == expected


def test_conditional_depth_counts_consequent_nesting():
    assert conditional_depth(parse("p")) == 0
    assert conditional_depth(parse("[p] [q] r")) == 2
    assert conditional_depth(parse("[p] q & [q] [r] p")) == 2
    assert conditional_depth(parse("box X p")) == 1


def test_size_and_atoms():
    f = parse("X p & ~q")
    assert size(f) == 5
    assert atoms(f) == {"p", "q"}
    assert atoms(parse("#f")) == frozenset()


def test_folds():
    assert conj([]) == TOP
    assert disj([]) == BOTTOM
    assert conj([Atom("p")]) == Atom("p")


def test_chain():
    assert chain(parse("Y Y p")) == (PAST, 2, "p")
    assert chain(parse("p")) == (FUTURE, 0, "p")
    assert chain(parse("X #f")) == (FUTURE, 1, None)
    assert chain(parse("~p")) is None
    assert chain(parse("X Y p")) is None


def test_fragments_of_literals():
    tags = fragment_of(parse("X p"))
    assert {FragmentTag.XY, FragmentTag.N_XY, FragmentTag.CON_XY,
            FragmentTag.ONEBOX, FragmentTag.CONSHN} <= tags
    assert FragmentTag.CLOSED not in tags


def test_fragments_of_conditionals():
    assert fragment_of(parse("[p] box p")) == {FragmentTag.CONSHN, FragmentTag.CLOSED, FragmentTag.CON_XY}
    assert fragment_of(parse("box X p")) == {
        FragmentTag.CONSHN, FragmentTag.CLOSED, FragmentTag.CON_XY, FragmentTag.ONEBOX,
    }
    tags = fragment_of(parse("X [p] q"))
    assert FragmentTag.CONSHN in tags
    assert FragmentTag.CON_XY not in tags
    assert FragmentTag.CLOSED not in tags


def test_xy_is_not_nxy_when_operators_stack_on_connectives():
    tags = fragment_of(parse("X ~p"))
    assert FragmentTag.XY in tags
    assert FragmentTag.N_XY not in tags


def test_non_xy_antecedent():
    f = parse("[[p] q] r")
    assert first_non_xy_antecedent(f) == f
    assert FragmentTag.CONSHN not in fragment_of(f)
    assert first_non_xy_antecedent(parse("[p] [q] r")) is None


def test_is_pl():
    assert is_pl(parse("p & ~q"))
    assert not is_pl(parse("X p"))
    assert not is_pl(parse("box p"))
