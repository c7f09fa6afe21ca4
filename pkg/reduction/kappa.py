"""
Push X and Y inward until they only sit on atoms and bottom.

Rewrites (applied leftmost-outermost until none applies)::

    X~f      => ~Xf              Y~f      => Y#f | ~Yf
    X(f & g) => Xf & Xg          Y(f & g) => Yf & Yg
    XYf      => f                YXf      => Y#f | f
    X[a]f    => [Xa]Xf           Y[a]f    => [Ya]Yf
"""
import logging
from typing import Optional

from config import settings
from syntax.formula import (
    And, BOTTOM, Con, Formula, Next, Not, Yesterday, children, or_, rebuild,
)
from syntax.fragments import first_non_xy_antecedent, is_con_xy
from syntax.printer import to_text
from utils.errors import FragmentViolation, NonXYAntecedent, ReductionDiverged

logger = logging.getLogger(__name__)


def _rewrite_root(f: Formula) -> Optional[Formula]:
    if isinstance(f, Next):
        g = f.operand
        if isinstance(g, Not):
            return Not(Next(g.operand))
        if isinstance(g, And):
            return And(Next(g.left), Next(g.right))
        if isinstance(g, Yesterday):
            return g.operand
        if isinstance(g, Con):
            return Con(Next(g.antecedent), Next(g.consequent))
    elif isinstance(f, Yesterday):
        g = f.operand
        if isinstance(g, Not):
            return or_(Yesterday(BOTTOM), Not(Yesterday(g.operand)))
        if isinstance(g, And):
            return And(Yesterday(g.left), Yesterday(g.right))
        if isinstance(g, Next):
            return or_(Yesterday(BOTTOM), g.operand)
        if isinstance(g, Con):
            return Con(Yesterday(g.antecedent), Yesterday(g.consequent))
    return None


def rewrite_once(f: Formula) -> Optional[Formula]:
    """Apply one rewrite at the leftmost-outermost redex, or return None."""
    rewritten = _rewrite_root(f)
    if rewritten is not None:
        return rewritten
    parts = children(f)
    for index, child in enumerate(parts):
        new_child = rewrite_once(child)
        if new_child is not None:
            return rebuild(f, parts[:index] + (new_child,) + parts[index + 1:])
    return None


def kappa(f: Formula) -> Formula:
    """
    Rewrite a formula into the Con_XY fragment, preserving its meaning.

    Args:
        f: Formula whose conditional antecedents are temporal-only

    Returns:
        An equivalent formula in which X and Y only prefix atoms and bottom

    Raises:
        NonXYAntecedent: If some antecedent contains a conditional
        ReductionDiverged: If the step bound is exceeded
    """
    offender = first_non_xy_antecedent(f)
    if offender is not None:
        raise NonXYAntecedent(f"Antecedent of {to_text(offender, sugar=True)} contains a conditional")

    current = f
    steps = 0
    while True:
        rewritten = rewrite_once(current)
        if rewritten is None:
            break
        current = rewritten
        steps += 1
        if steps > settings.KAPPA_MAX_STEPS:
            raise ReductionDiverged(f"kappa exceeded {settings.KAPPA_MAX_STEPS} steps")

    if not is_con_xy(current):
        raise FragmentViolation(f"kappa produced {to_text(current, sugar=True)} outside Con_XY")
    logger.debug(f"kappa finished after {steps} steps")
    return current
