"""Test the formula text format: parsing, printing and round trips."""
import random

import pytest

from syntax.formula import (
    And, Atom, BOTTOM, Con, Next, Not, TOP, Yesterday, box, dia, diamond, iff, implies, or_,
)
from syntax.parser import parse, tokenize
from syntax.printer import to_text
from utils.errors import FormulaSyntaxError
from utils.generators import FormulaGenerator

p, q, r = Atom("p"), Atom("q"), Atom("r")


def test_tokenize_positions():
    """Tokens carry their offsets in the source text."""
    assert tokenize("p <-> ~q") == [("p", 0), ("<->", 2), ("~", 6), ("q", 7)]


def test_parse_core_connectives():
    assert parse("p & q") == And(p, q)
    assert parse("~X p") == Not(Next(p))
    assert parse("Y #f") == Yesterday(BOTTOM)
    assert parse("[X l] X ~a") == Con(Next(Atom("l")), Next(Not(Atom("a"))))


def test_parse_desugars_derived_connectives():
    assert parse("#t") == TOP
    assert parse("p | q") == or_(p, q)
    assert parse("p -> q") == implies(p, q)
    assert parse("p <-> q") == iff(p, q)
    assert parse("box p") == box(p)
    assert parse("box p") == Con(TOP, p)
    assert parse("dia p") == dia(p)
    assert parse("<p> q") == diamond(p, q)


def test_precedence_and_associativity():
    """Implication associates to the right; & binds tighter than |, | tighter than ->."""
    assert parse("p -> q -> r") == implies(p, implies(q, r))
    assert parse("p | q & r") == or_(p, And(q, r))
    assert parse("p & q & r") == And(And(p, q), r)
    assert parse("X p & q") == And(Next(p), q)
    assert parse("[p] q & r") == And(Con(p, q), r)


@pytest.mark.parametrize("text", ["", "p &", "(p", "P", "p q", "[p q", "X", "p ->"])
def test_parse_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse(text)


def test_parse_error_position():
    with pytest.raises(FormulaSyntaxError) as info:
        parse("p & & q")
    assert info.value.position == 4


def test_print_sugar():
    assert to_text(parse("box ((p & q) -> r)"), sugar=True) == "box ((p & q) -> r)"
    assert to_text(parse("[X l] X ~a"), sugar=True) == "[X l] X ~a"
    assert to_text(parse("p -> q -> r"), sugar=True) == "p -> q -> r"
    assert to_text(parse("(p -> q) -> r"), sugar=True) == "(p -> q) -> r"
    assert to_text(parse("Y #f | ~Y p"), sugar=True) == "Y #f | ~Y p"


def test_print_plain_uses_core_connectives():
    assert to_text(parse("p -> q")) == "~(p & ~q)"
    assert to_text(parse("box p")) == "[~#f] p"


def test_round_trip_random_formulas():
    """Both renderings parse back to the identical AST."""
    rng = random.Random(7)
    gen = FormulaGenerator(rng, atoms=("p", "q", "r"))
    for _ in range(1000):
        f = gen.formula(rng.randint(1, 14), nesting=2)
        assert parse(to_text(f)) == f
        assert parse(to_text(f, sugar=True)) == f


if __name__ == "__main__":
    test_round_trip_random_formulas()
