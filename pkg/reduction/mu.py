"""
Eliminate nested conditionals from Con_XY formulas.

Conditionals are flattened innermost first. Once the consequent of ``[a]`` is a
boolean combination of N_XY formulas and flat conditionals, it is put in clause
form and ``[a]`` is distributed::

    [a](f & g)              => [a]f & [a]g
    [a](B | [c]z | ~[e]t)   => [a]B | [a & c]z | [a]#f | ~[a & e]t

Finally every flat ``[b]z`` becomes ``box (b -> z)``.
"""
import logging
from typing import List, Tuple

from config import settings
from syntax.formula import (
    And, BOTTOM, Con, Formula, Not, TOP, box, conditional_depth, conj, disj, implies, or_,
)
from syntax.fragments import is_con_xy, is_nxy, is_onebox
from syntax.printer import to_text
from utils.errors import BudgetExceeded, FragmentViolation

logger = logging.getLogger(__name__)

Clause = List[Tuple[Formula, bool]]


def _and(left: Formula, right: Formula) -> Formula:
    if left == TOP:
        return right
    if right == TOP:
        return left
    return And(left, right)


def clauses(f: Formula, positive: bool = True) -> List[Clause]:
    """Clause form over maximal N_XY subformulas and conditionals."""
    if isinstance(f, Con):
        return [[(f, positive)]]
    if isinstance(f, Not):
        return clauses(f.operand, not positive)
    if is_nxy(f):
        return [[(f, positive)]]
    if isinstance(f, And):
        if positive:
            return clauses(f.left, True) + clauses(f.right, True)
        result = []
        for left in clauses(f.left, False):
            for right in clauses(f.right, False):
                merged = list(left)
                merged.extend(lit for lit in right if lit not in merged)
                result.append(merged)
        return result
    raise FragmentViolation(f"{to_text(f, sugar=True)} is outside Con_XY")


class _Flattener:
    def __init__(self):
        self.collapsed = 0
        self.steps = 0

    def _step(self) -> None:
        self.steps += 1
        if self.steps > settings.MU_MAX_STEPS:
            raise BudgetExceeded(f"mu exceeded {settings.MU_MAX_STEPS} steps")

    def flatten(self, f: Formula) -> Formula:
        self._step()
        if is_nxy(f):
            return f
        if isinstance(f, Not):
            return Not(self.flatten(f.operand))
        if isinstance(f, And):
            return And(self.flatten(f.left), self.flatten(f.right))
        if isinstance(f, Con):
            return self._distribute(f.antecedent, self.flatten(f.consequent))
        raise FragmentViolation(f"{to_text(f, sugar=True)} is outside Con_XY")

    def _distribute(self, alpha: Formula, body: Formula) -> Formula:
        if is_nxy(body):
            return Con(alpha, body)
        parts = []
        for clause in clauses(body):
            self._step()
            plain = [leaf if sign else Not(leaf) for leaf, sign in clause if not isinstance(leaf, Con)]
            disjuncts = [Con(alpha, disj(plain))] if plain else []
            for leaf, sign in clause:
                if not isinstance(leaf, Con):
                    continue
                self.collapsed += 1
                merged = Con(_and(alpha, leaf.antecedent), leaf.consequent)
                disjuncts.append(merged if sign else or_(Con(alpha, BOTTOM), Not(merged)))
            parts.append(disj(disjuncts))
        return conj(parts)


def _lower(f: Formula) -> Formula:
    if isinstance(f, Con):
        if f.antecedent == TOP:
            return f
        return box(implies(f.antecedent, f.consequent))
    if isinstance(f, Not):
        return Not(_lower(f.operand))
    if isinstance(f, And):
        return And(_lower(f.left), _lower(f.right))
    return f


def mu(f: Formula) -> Formula:
    """
    Rewrite a Con_XY formula into the one-box fragment, preserving its meaning.

    Raises:
        FragmentViolation: If ``f`` is not in Con_XY
        BudgetExceeded: If flattening takes more than MU_MAX_STEPS steps
    """
    if not is_con_xy(f):
        raise FragmentViolation(f"{to_text(f, sugar=True)} is outside Con_XY")
    flattener = _Flattener()
    flat = flattener.flatten(f)
    if conditional_depth(flat) > 1:
        raise FragmentViolation(f"Flattening left nested conditionals in {to_text(flat, sugar=True)}")
    result = _lower(flat)
    if not is_onebox(result):
        raise FragmentViolation(f"mu produced {to_text(result, sugar=True)} outside the one-box fragment")
    logger.debug(f"mu collapsed {flattener.collapsed} nested conditionals in {flattener.steps} steps")
    return result
