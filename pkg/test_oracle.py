"""Test the brute-force oracle and cross-check it against the decision procedure."""
import random

import pytest

from decide.oracle import OracleBounds, brute_force, materialize, read_offsets, shapes
from decide.procedure import valid
from models.branching import EMPTY_CONTEXT
from semantics.evaluator import evaluate
from syntax.parser import parse
from utils.errors import BudgetExceeded, NonXYAntecedent
from utils.generators import random_formula

SMALL = OracleBounds(max_depth=2, max_branch=2)


def test_shapes_are_canonical_and_ordered():
    found = shapes(2, 2)
    assert len(found) == 7
    assert found[0] == (1, ((),))
    sizes = [str(shape).count("(") for _, shape in found]
    assert sizes == sorted(sizes)
    assert len(shapes(1, 3)) == 3


def test_materialize_names_states_by_level():
    tree = materialize(2, (((),), ((), ())))
    assert [s for s, _, _ in tree.states] == ["w0_1", "w1_1", "w1_2", "w2_1", "w2_2", "w2_3"]
    assert tree.paths == (("w0_1", "w1_1", "w2_1"), ("w0_1", "w1_2", "w2_2"), ("w0_1", "w1_2", "w2_3"))


def test_read_offsets():
    assert read_offsets(parse("p & Y X q & [X r] Y s")) == {("p", 0), ("q", 0), ("r", 1), ("s", -1)}
    assert read_offsets(parse("Y Y #f")) == set()


def test_valid_formula_has_no_counterexample():
    result = brute_force(parse("X p | X ~p"), SMALL)
    assert not result.found
    assert result.shapes_checked == 7
    assert result.rows_checked > 0


@pytest.mark.parametrize("text", [
    "box X p | box X ~p",
    "[#t] dia ~p -> [#t & p] dia ~p",
    "p -> box p",
])
def test_invalid_formula_has_counterexample(text):
    f = parse(text)
    result = brute_force(f, SMALL)
    assert result.found
    assert evaluate(result.counterexample, f).value is False


def test_empty_context_mode():
    f = parse("box X p | box X ~p")
    result = brute_force(f, OracleBounds(max_depth=1, max_branch=2, context_mode="empty"))
    assert result.found
    assert result.counterexample.context == EMPTY_CONTEXT


def test_atoms_bound_restricts_valuations():
    f = parse("p | ~q")
    assert brute_force(f, OracleBounds(max_depth=1, max_branch=1, atoms=frozenset({"p"}))).found is False
    assert brute_force(f, OracleBounds(max_depth=1, max_branch=1)).found is True


def test_oracle_errors():
    with pytest.raises(BudgetExceeded):
        brute_force(parse("box X p | box X ~p"), OracleBounds(max_depth=2, max_branch=2, budget=1))
    with pytest.raises(NonXYAntecedent):
        brute_force(parse("[[p] q] r"), SMALL)
    with pytest.raises(ValueError):
        brute_force(parse("p"), OracleBounds(max_depth=1, max_branch=1, context_mode="all"))


def test_oracle_agrees_with_decision_procedure():
    """Valid formulas have no small counterexample and small counterexamples mean invalid."""
    rng = random.Random(23)
    for _ in range(300):
        f = random_formula(rng, max_size=6, max_horizon=1, nesting=2)
        decided = valid(f, deterministic=True)
        result = brute_force(f, SMALL)
        if decided.valid:
            assert not result.found, f"oracle falsifies a valid formula {f}"
            continue
        assert evaluate(decided.countermodel.point(), f).value is False
        if result.found:
            assert evaluate(result.counterexample, f).value is False
