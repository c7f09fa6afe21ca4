"""
Formula AST for the language of conditional strong historical necessity.

Only the core connectives exist as nodes. Derived connectives are built by the
helpers below and never appear as node types.
"""
from dataclasses import dataclass
from functools import reduce
from typing import FrozenSet, Iterable, Union


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Not:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Next:
    operand: "Formula"


@dataclass(frozen=True)
class Yesterday:
    operand: "Formula"


@dataclass(frozen=True)
class Con:
    """Conditional strong historical necessity ``[antecedent] consequent``."""
    antecedent: "Formula"
    consequent: "Formula"


Formula = Union[Atom, Bottom, Not, And, Next, Yesterday, Con]

BOTTOM = Bottom()
TOP = Not(BOTTOM)


# Derived connectives

def top() -> Formula:
    return TOP


def or_(left: Formula, right: Formula) -> Formula:
    return Not(And(Not(left), Not(right)))


def implies(left: Formula, right: Formula) -> Formula:
    return Not(And(left, Not(right)))


def iff(left: Formula, right: Formula) -> Formula:
    return And(implies(left, right), implies(right, left))


def box(operand: Formula) -> Formula:
    return Con(TOP, operand)


def dia(operand: Formula) -> Formula:
    return Not(Con(TOP, Not(operand)))


def diamond(antecedent: Formula, operand: Formula) -> Formula:
    """The dual ``<antecedent> operand`` of a conditional."""
    return Not(Con(antecedent, Not(operand)))


def nexts(operand: Formula, n: int) -> Formula:
    for _ in range(n):
        operand = Next(operand)
    return operand


def yesterdays(operand: Formula, n: int) -> Formula:
    for _ in range(n):
        operand = Yesterday(operand)
    return operand


def conj(formulas: Iterable[Formula]) -> Formula:
    """Left-folded conjunction; the empty conjunction is top."""
    items = list(formulas)
    if not items:
        return TOP
    return reduce(And, items)


def disj(formulas: Iterable[Formula]) -> Formula:
    """Left-folded disjunction; the empty disjunction is bottom."""
    items = list(formulas)
    if not items:
        return BOTTOM
    return reduce(or_, items)


# Structural metrics

def horizon(f: Formula) -> int:
    """How far into the future evaluating ``f`` can look."""
    if isinstance(f, (Atom, Bottom)):
        return 0
    if isinstance(f, Not):
        return horizon(f.operand)
    if isinstance(f, And):
        return max(horizon(f.left), horizon(f.right))
    if isinstance(f, Next):
        return 1 + horizon(f.operand)
    if isinstance(f, Yesterday):
        return max(0, horizon(f.operand) - 1)
    if isinstance(f, Con):
        return max(horizon(f.antecedent), horizon(f.consequent))
    raise TypeError(f"Not a formula: {f!r}")


def ydepth(f: Formula) -> int:
    """How far into the past evaluating ``f`` can look."""
    if isinstance(f, (Atom, Bottom)):
        return 0
    if isinstance(f, Not):
        return ydepth(f.operand)
    if isinstance(f, And):
        return max(ydepth(f.left), ydepth(f.right))
    if isinstance(f, Yesterday):
        return 1 + ydepth(f.operand)
    if isinstance(f, Next):
        return max(0, ydepth(f.operand) - 1)
    if isinstance(f, Con):
        return max(ydepth(f.antecedent), ydepth(f.consequent))
    raise TypeError(f"Not a formula: {f!r}")


def conditional_depth(f: Formula) -> int:
    """Nesting depth of conditionals in consequent position."""
    if isinstance(f, (Atom, Bottom)):
        return 0
    if isinstance(f, (Not, Next, Yesterday)):
        return conditional_depth(f.operand)
    if isinstance(f, And):
        return max(conditional_depth(f.left), conditional_depth(f.right))
    if isinstance(f, Con):
        return 1 + conditional_depth(f.consequent)
    raise TypeError(f"Not a formula: {f!r}")


def size(f: Formula) -> int:
    if isinstance(f, (Atom, Bottom)):
        return 1
    if isinstance(f, (Not, Next, Yesterday)):
        return 1 + size(f.operand)
    if isinstance(f, And):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.antecedent) + size(f.consequent)


def atoms(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Atom):
        return frozenset([f.name])
    if isinstance(f, Bottom):
        return frozenset()
    if isinstance(f, (Not, Next, Yesterday)):
        return atoms(f.operand)
    if isinstance(f, And):
        return atoms(f.left) | atoms(f.right)
    return atoms(f.antecedent) | atoms(f.consequent)


def children(f: Formula) -> tuple:
    """Immediate subformulas in path order."""
    if isinstance(f, (Atom, Bottom)):
        return ()
    if isinstance(f, (Not, Next, Yesterday)):
        return (f.operand,)
    if isinstance(f, And):
        return (f.left, f.right)
    return (f.antecedent, f.consequent)


def rebuild(f: Formula, new_children: tuple) -> Formula:
    """Same node as ``f`` over different immediate subformulas."""
    if isinstance(f, (Atom, Bottom)):
        return f
    if isinstance(f, (Not, Next, Yesterday)):
        return type(f)(new_children[0])
    return type(f)(new_children[0], new_children[1])
