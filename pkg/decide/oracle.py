"""
Brute-force semantic oracle.

Enumerates every tree shape within the bounds, every evaluation instant, every
single-rule context and every valuation of the states the formula can read.
Valuations are evaluated in blocks with numpy, one row per valuation and one
column per timeline. Counterexamples are replayed with the scalar evaluator.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from config import settings
from models.branching import EMPTY_CONTEXT, Context, Model, Point, Rule, build_model, make_point
from semantics.evaluator import evaluate
from syntax.formula import (
    And, Atom, Bottom, Con, Formula, Next, Not, Yesterday, children, horizon,
)
from syntax.fragments import first_non_xy_antecedent
from syntax.printer import to_text
from utils.errors import BudgetExceeded, NonXYAntecedent

logger = logging.getLogger(__name__)

Shape = tuple  # a node is the sorted tuple of its children's shapes

CONTEXT_MODES = ("subsets", "empty")


@dataclass(frozen=True)
class OracleBounds:
    max_depth: int = settings.ORACLE_MAX_DEPTH
    max_branch: int = settings.ORACLE_MAX_BRANCH
    atoms: Optional[FrozenSet[str]] = None  # None: the atoms of the formula
    context_mode: str = "subsets"
    budget: int = settings.ORACLE_BUDGET


@dataclass(frozen=True)
class OracleResult:
    counterexample: Optional[Point]
    shapes_checked: int
    rows_checked: int

    @property
    def found(self) -> bool:
        return self.counterexample is not None


def _count(shape: Shape) -> int:
    return 1 + sum(_count(child) for child in shape)


def _shapes_of_height(height: int, max_branch: int) -> List[Shape]:
    if height == 0:
        return [()]
    below = _shapes_of_height(height - 1, max_branch)
    result = []
    for k in range(1, max_branch + 1):
        for combo in itertools.combinations_with_replacement(range(len(below)), k):
            result.append(tuple(below[c] for c in combo))
    return result


def shapes(max_depth: int, max_branch: int) -> List[Tuple[int, Shape]]:
    """Canonical uniform-depth tree shapes, ordered by size then text."""
    result = [
        (depth, shape)
        for depth in range(1, max_depth + 1)
        for shape in _shapes_of_height(depth, max_branch)
    ]
    result.sort(key=lambda item: (_count(item[1]), str(item[1])))
    return result


@dataclass(frozen=True)
class _Tree:
    depth: int
    states: Tuple[Tuple[str, Optional[str], int], ...]  # (id, parent, level)
    paths: Tuple[Tuple[str, ...], ...]


def materialize(depth: int, shape: Shape) -> _Tree:
    """Name the states of ``shape`` level by level as ``w{level}_{index}``."""
    states = [("w0_1", None, 0)]
    frontier = [("w0_1", shape)]
    level = 0
    while frontier:
        level += 1
        next_frontier = []
        for parent, node in frontier:
            for child in node:
                name = f"w{level}_{len(next_frontier) + 1}"
                states.append((name, parent, level))
                next_frontier.append((name, child))
        frontier = next_frontier
    parents = {s: p for s, p, _ in states}
    has_child = {p for _, p, _ in states if p is not None}
    paths = []
    for state_id, _, _ in states:
        if state_id in has_child:
            continue
        path = [state_id]
        while parents[path[-1]] is not None:
            path.append(parents[path[-1]])
        paths.append(tuple(reversed(path)))
    return _Tree(depth=depth, states=tuple(states), paths=tuple(paths))


class _VectorEvaluator:
    """Evaluates a formula for a block of valuations at once."""

    def __init__(self, atom_values: Dict[Tuple[str, int], np.ndarray], rows: int, width: int):
        self.atom_values = atom_values
        self.shape = (rows, width)

    def holds(self, f: Formula, instant: int, accepted: np.ndarray) -> np.ndarray:
        if isinstance(f, Atom):
            value = self.atom_values.get((f.name, instant))
            return value if value is not None else np.zeros(self.shape, dtype=bool)
        if isinstance(f, Bottom):
            return np.zeros(self.shape, dtype=bool)
        if isinstance(f, Not):
            return ~self.holds(f.operand, instant, accepted)
        if isinstance(f, And):
            return self.holds(f.left, instant, accepted) & self.holds(f.right, instant, accepted)
        if isinstance(f, Next):
            return self.holds(f.operand, instant + 1, accepted)
        if isinstance(f, Yesterday):
            if instant == 0:
                return np.ones(self.shape, dtype=bool)
            return self.holds(f.operand, instant - 1, accepted)
        if isinstance(f, Con):
            updated = accepted & self.holds(f.antecedent, instant, accepted)
            consequent = self.holds(f.consequent, instant, updated)
            verdict = np.all(consequent | ~updated, axis=1, keepdims=True)
            return np.broadcast_to(verdict, self.shape).copy()
        raise TypeError(f"Not a formula: {f!r}")


def read_offsets(f: Formula, offset: int = 0) -> FrozenSet[Tuple[str, int]]:
    """The (atom, instant offset) pairs ``f`` can read, relative to the evaluation instant."""
    if isinstance(f, Atom):
        return frozenset({(f.name, offset)})
    if isinstance(f, Next):
        return read_offsets(f.operand, offset + 1)
    if isinstance(f, Yesterday):
        return read_offsets(f.operand, offset - 1)
    found: FrozenSet[Tuple[str, int]] = frozenset()
    for child in children(f):
        found |= read_offsets(child, offset)
    return found


def _contexts(width: int, mode: str) -> List[int]:
    full = (1 << width) - 1
    if mode == "empty":
        return [full]
    if mode == "subsets":
        return list(range(1, full + 1))
    raise ValueError(f"Unknown context mode {mode!r}; expected one of {CONTEXT_MODES}")


def _counterexample(tree: _Tree, columns: Sequence[Tuple[str, str]], bits: np.ndarray,
                    mask: int, mode: str, leaf_index: int, instant: int) -> Point:
    valuation: Dict[str, List[str]] = {s: [] for s, _, _ in tree.states}
    for (state_id, atom), on in zip(columns, bits):
        if on:
            valuation[state_id].append(atom)
    model: Model = build_model(
        tree.depth, "w0_1", [(s, p, sorted(valuation[s])) for s, p, _ in tree.states],
    )
    leaves = [path[-1] for path in tree.paths]
    if mode == "empty":
        context = EMPTY_CONTEXT
    else:
        members = frozenset(leaf for k, leaf in enumerate(leaves) if mask >> k & 1)
        context = Context((Rule("R", members),))
    return make_point(model, context, leaves[leaf_index], instant)


def brute_force(f: Formula, bounds: OracleBounds = OracleBounds()) -> OracleResult:
    """
    Search all small contextualized pointed models for one falsifying ``f``.

    Args:
        f: Formula with temporal-only antecedents
        bounds: Depth, branching, atom and context limits

    Returns:
        OracleResult with the first counterexample found, if any

    Raises:
        NonXYAntecedent: If some antecedent contains a conditional
        BudgetExceeded: If more than ``bounds.budget`` valuation rows are needed
        RuntimeError: If the scalar evaluator disagrees on a counterexample
    """
    offender = first_non_xy_antecedent(f)
    if offender is not None:
        raise NonXYAntecedent(f"Antecedent of {to_text(offender, sugar=True)} contains a conditional")
    reads = read_offsets(f)
    if bounds.atoms is not None:
        reads = frozenset((name, offset) for name, offset in reads if name in bounds.atoms)
    ahead = horizon(f)
    rows_used = 0
    checked = 0

    for depth, shape in shapes(bounds.max_depth, bounds.max_branch):
        if ahead > depth:
            continue
        tree = materialize(depth, shape)
        checked += 1
        width = len(tree.paths)
        for instant in range(depth - ahead + 1):
            slots = sorted({(name, instant + offset) for name, offset in reads if 0 <= instant + offset <= depth})
            columns = [(s, name) for name, level in slots for s, _, at in tree.states if at == level]
            total = 1 << len(columns)
            if rows_used + total > bounds.budget:
                raise BudgetExceeded(f"Oracle needs more than {bounds.budget} valuation rows")
            rows_used += total
            column_of = {col: k for k, col in enumerate(columns)}
            for start in range(0, total, settings.ORACLE_CHUNK_ROWS):
                index = np.arange(start, min(start + settings.ORACLE_CHUNK_ROWS, total), dtype=np.int64)
                bits = ((index[:, None] >> np.arange(len(columns), dtype=np.int64)) & 1).astype(bool)
                atom_values = {}
                for name, level in slots:
                    atom_values[(name, level)] = np.stack(
                        [bits[:, column_of[(path[level], name)]] for path in tree.paths], axis=1,
                    )
                vector = _VectorEvaluator(atom_values, len(index), width)
                for mask in _contexts(width, bounds.context_mode):
                    accepted = np.array([[bool(mask >> k & 1) for k in range(width)]])
                    value = vector.holds(f, instant, accepted)
                    violations = accepted & ~value
                    if not violations.any():
                        continue
                    row, leaf_index = np.argwhere(violations)[0]
                    point = _counterexample(tree, columns, bits[row], mask, bounds.context_mode,
                                            int(leaf_index), instant)
                    if evaluate(point, f).value:
                        raise RuntimeError(f"Oracle and evaluator disagree on {to_text(f, sugar=True)}")
                    logger.info(f"Oracle counterexample at instant {instant} on a {depth}-deep tree")
                    return OracleResult(point, checked, rows_used)
    logger.debug(f"Oracle checked {checked} shapes and {rows_used} valuation rows")
    return OracleResult(None, checked, rows_used)
