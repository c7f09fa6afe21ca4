"""
Seeded random formulas, models, contexts and points for property tests.
"""
import random
from typing import List, Optional, Sequence

from models.branching import Context, Model, Point, Rule, acceptable_leaves, build_model, make_point
from syntax.formula import (
    And, Atom, BOTTOM, Con, Formula, Next, Not, Yesterday, conditional_depth, horizon,
)

DEFAULT_ATOMS = ("p", "q")


class FormulaGenerator:
    """Random formulas over a fixed set of atoms.

    Conditional antecedents are always temporal-only.
    """

    def __init__(self, rng: random.Random, atoms: Sequence[str] = DEFAULT_ATOMS):
        self.rng = rng
        self.atoms = tuple(atoms)

    def leaf(self) -> Formula:
        if self.rng.random() < 0.1:
            return BOTTOM
        return Atom(self.rng.choice(self.atoms))

    def xy(self, size: int) -> Formula:
        """A formula without conditionals."""
        if size <= 1:
            return self.leaf()
        kind = self.rng.choice(("not", "and", "next", "yesterday"))
        if kind == "not":
            return Not(self.xy(size - 1))
        if kind == "next":
            return Next(self.xy(size - 1))
        if kind == "yesterday":
            return Yesterday(self.xy(size - 1))
        split = self.rng.randint(1, size - 2) if size > 2 else 1
        return And(self.xy(split), self.xy(max(1, size - 1 - split)))

    def formula(self, size: int, nesting: int = 1) -> Formula:
        """A formula with at most ``nesting`` conditionals along any consequent chain."""
        if size <= 1:
            return self.leaf()
        kinds = ["not", "and", "next", "yesterday"]
        if nesting > 0 and size >= 3:
            kinds.append("con")
        kind = self.rng.choice(kinds)
        if kind == "not":
            return Not(self.formula(size - 1, nesting))
        if kind == "next":
            return Next(self.formula(size - 1, nesting))
        if kind == "yesterday":
            return Yesterday(self.formula(size - 1, nesting))
        split = self.rng.randint(1, size - 2) if size > 2 else 1
        if kind == "con":
            return Con(self.xy(split), self.formula(max(1, size - 1 - split), nesting - 1))
        return And(self.formula(split, nesting), self.formula(max(1, size - 1 - split), nesting))


def random_formula(rng: random.Random, atoms: Sequence[str] = DEFAULT_ATOMS, max_size: int = 8,
                   max_horizon: int = 2, nesting: int = 1, xy_only: bool = False) -> Formula:
    """Draw formulas until one has horizon and conditional depth within bounds."""
    gen = FormulaGenerator(rng, atoms)
    while True:
        size = rng.randint(1, max_size)
        f = gen.xy(size) if xy_only else gen.formula(size, nesting)
        if horizon(f) <= max_horizon and conditional_depth(f) <= nesting:
            return f


def random_model(rng: random.Random, depth: int = 2, max_branch: int = 2,
                 atoms: Sequence[str] = DEFAULT_ATOMS) -> Model:
    """A tree of exactly ``depth`` levels with states named ``w{level}_{index}``."""
    def labels() -> List[str]:
        return [a for a in atoms if rng.random() < 0.5]

    states = [("w0_1", None, labels())]
    frontier = ["w0_1"]
    for level in range(1, depth + 1):
        next_frontier = []
        for parent in frontier:
            for _ in range(rng.randint(1, max_branch)):
                name = f"w{level}_{len(next_frontier) + 1}"
                states.append((name, parent, labels()))
                next_frontier.append(name)
        frontier = next_frontier
    return build_model(depth, "w0_1", states)


def random_context(rng: random.Random, model: Model, max_rules: int = 2,
                   keep: Optional[str] = None) -> Context:
    """Random rules that all contain ``keep`` (a random leaf by default), so AT is never empty."""
    leaves = model.leaves
    keep = keep or rng.choice(leaves)
    rules = []
    for n in range(rng.randint(0, max_rules)):
        members = {leaf for leaf in leaves if rng.random() < 0.5} | {keep}
        rules.append(Rule(f"R{n + 1}", frozenset(members)))
    return Context(tuple(rules))


def random_point(rng: random.Random, model: Model, context: Context, max_horizon: int = 0) -> Point:
    """A point on an acceptable timeline leaving room for ``max_horizon`` steps ahead."""
    accepted = [leaf for leaf in model.leaves if leaf in acceptable_leaves(model, context)]
    instant = rng.randint(0, max(0, model.depth - max_horizon))
    return make_point(model, context, rng.choice(accepted), instant)


def random_setting(rng: random.Random, f: Formula, atoms: Sequence[str] = DEFAULT_ATOMS,
                   max_depth: int = 3, max_branch: int = 2) -> Point:
    """A random point deep enough to evaluate ``f``."""
    depth = rng.randint(max(1, horizon(f)), max(max_depth, horizon(f), 1))
    model = random_model(rng, depth, max_branch, atoms)
    context = random_context(rng, model)
    return random_point(rng, model, context, horizon(f))
