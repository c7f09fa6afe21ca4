"""Fragment classification by syntactic grammar membership."""
from enum import Enum
from typing import FrozenSet, Optional, Tuple

from syntax.formula import And, Atom, Bottom, Con, Formula, Next, Not, TOP, Yesterday

FUTURE = "future"
PAST = "past"

Chain = Tuple[str, int, Optional[str]]


class FragmentTag(str, Enum):
    XY = "XY"
    N_XY = "N_XY"
    CON_XY = "Con_XY"
    ONEBOX = "OneBox"
    CONSHN = "ConSHN"
    CLOSED = "Closed"


def chain(f: Formula) -> Optional[Chain]:
    """Decompose a pure ``X^n p``/``Y^n p``/``X^n #f``/``Y^n #f`` chain.

    Returns ``(direction, n, payload)`` with payload ``None`` for bottom, or
    ``None`` when ``f`` is not such a chain. Offset 0 is reported as future.
    """
    for node_type, direction in ((Next, FUTURE), (Yesterday, PAST)):
        n = 0
        g = f
        while isinstance(g, node_type):
            n += 1
            g = g.operand
        if isinstance(g, Atom):
            return (direction if n else FUTURE, n, g.name)
        if isinstance(g, Bottom):
            return (direction if n else FUTURE, n, None)
    return None


def is_xy(f: Formula) -> bool:
    if isinstance(f, (Atom, Bottom)):
        return True
    if isinstance(f, (Not, Next, Yesterday)):
        return is_xy(f.operand)
    if isinstance(f, And):
        return is_xy(f.left) and is_xy(f.right)
    return False


def is_pl(f: Formula) -> bool:
    if isinstance(f, (Atom, Bottom)):
        return True
    if isinstance(f, Not):
        return is_pl(f.operand)
    if isinstance(f, And):
        return is_pl(f.left) and is_pl(f.right)
    return False


def is_nxy(f: Formula) -> bool:
    if chain(f) is not None:
        return True
    if isinstance(f, Not):
        return is_nxy(f.operand)
    if isinstance(f, And):
        return is_nxy(f.left) and is_nxy(f.right)
    return False


def is_con_xy(f: Formula) -> bool:
    if chain(f) is not None:
        return True
    if isinstance(f, Not):
        return is_con_xy(f.operand)
    if isinstance(f, And):
        return is_con_xy(f.left) and is_con_xy(f.right)
    if isinstance(f, Con):
        return is_nxy(f.antecedent) and is_con_xy(f.consequent)
    return False


def is_onebox(f: Formula) -> bool:
    if is_nxy(f):
        return True
    if isinstance(f, Not):
        return is_onebox(f.operand)
    if isinstance(f, And):
        return is_onebox(f.left) and is_onebox(f.right)
    if isinstance(f, Con):
        return f.antecedent == TOP and is_nxy(f.consequent)
    return False


def is_conshn(f: Formula) -> bool:
    if isinstance(f, (Atom, Bottom)):
        return True
    if isinstance(f, (Not, Next, Yesterday)):
        return is_conshn(f.operand)
    if isinstance(f, And):
        return is_conshn(f.left) and is_conshn(f.right)
    return is_xy(f.antecedent) and is_conshn(f.consequent)


def is_closed(f: Formula) -> bool:
    if isinstance(f, Con):
        return is_conshn(f)
    if isinstance(f, Not):
        return is_closed(f.operand)
    if isinstance(f, And):
        return is_closed(f.left) and is_closed(f.right)
    return False


_CHECKS = (
    (FragmentTag.XY, is_xy),
    (FragmentTag.N_XY, is_nxy),
    (FragmentTag.CON_XY, is_con_xy),
    (FragmentTag.ONEBOX, is_onebox),
    (FragmentTag.CONSHN, is_conshn),
    (FragmentTag.CLOSED, is_closed),
)


def fragment_of(f: Formula) -> FrozenSet[FragmentTag]:
    """Return exactly the fragment tags whose grammar admits ``f``."""
    return frozenset(tag for tag, check in _CHECKS if check(f))


def first_non_xy_antecedent(f: Formula) -> Optional[Formula]:
    """Locate a conditional whose antecedent is not temporal-only."""
    if isinstance(f, (Atom, Bottom)):
        return None
    if isinstance(f, (Not, Next, Yesterday)):
        return first_non_xy_antecedent(f.operand)
    if isinstance(f, And):
        return first_non_xy_antecedent(f.left) or first_non_xy_antecedent(f.right)
    if not is_xy(f.antecedent):
        return f
    return first_non_xy_antecedent(f.consequent)
