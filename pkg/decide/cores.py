"""
Core formulas: box H, diamonds I1..Ik and a free part L, all in N_XY.

A one-box formula is a disjunction of cores. Each core stands for::

    box H & dia I1 & ... & dia Ik & L
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from syntax.formula import And, Con, Formula, Not, TOP, box, conj, dia
from syntax.fragments import is_nxy, is_onebox
from syntax.printer import to_text
from utils.errors import FragmentViolation

logger = logging.getLogger(__name__)

Literal = Tuple[Formula, bool]


@dataclass(frozen=True)
class CoreFormula:
    box_part: Formula = TOP
    diamond_parts: Tuple[Formula, ...] = (TOP,)
    free_part: Formula = TOP

    def to_formula(self) -> Formula:
        return conj([box(self.box_part)] + [dia(i) for i in self.diamond_parts] + [self.free_part])

    def __str__(self) -> str:
        diamonds = ", ".join(to_text(i, sugar=True) for i in self.diamond_parts)
        return (f"H = {to_text(self.box_part, sugar=True)}; I = ({diamonds}); "
                f"L = {to_text(self.free_part, sugar=True)}")


def _is_box(f: Formula) -> bool:
    return isinstance(f, Con) and f.antecedent == TOP


def _dnf(f: Formula, positive: bool) -> List[List[Literal]]:
    if _is_box(f):
        return [[(f, positive)]]
    if isinstance(f, Not):
        return _dnf(f.operand, not positive)
    if is_nxy(f):
        return [[(f, positive)]]
    if isinstance(f, And):
        left = _dnf(f.left, positive)
        right = _dnf(f.right, positive)
        if not positive:
            return left + right
        return [a + b for a in left for b in right]
    raise FragmentViolation(f"{to_text(f, sugar=True)} is outside the one-box fragment")


def _core(term: List[Literal]) -> CoreFormula:
    boxes, diamonds, free = [], [], []
    for leaf, positive in term:
        if _is_box(leaf):
            if positive:
                boxes.append(leaf.consequent)
            else:
                diamonds.append(Not(leaf.consequent))
        else:
            free.append(leaf if positive else Not(leaf))
    return CoreFormula(
        box_part=conj(boxes),
        diamond_parts=tuple(diamonds) or (TOP,),
        free_part=conj(free),
    )


def to_cores(f: Formula) -> List[CoreFormula]:
    """
    Split a one-box formula into cores whose disjunction is equivalent to it.

    Raises:
        FragmentViolation: If ``f`` is not in the one-box fragment
    """
    if not is_onebox(f):
        raise FragmentViolation(f"{to_text(f, sugar=True)} is outside the one-box fragment")
    cores = []
    for term in _dnf(f, True):
        core = _core(term)
        if core not in cores:
            cores.append(core)
    logger.debug(f"{len(cores)} cores")
    return cores


def basic_sequence(cf: CoreFormula) -> List[Formula]:
    """``(H & I1, ..., H & Ik, H & L)``."""
    return [And(cf.box_part, i) for i in cf.diamond_parts] + [And(cf.box_part, cf.free_part)]
