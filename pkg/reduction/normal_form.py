"""
Literal-level DNF for the N_XY fragment.

A literal places a payload (an atom or bottom) at a fixed offset from the
evaluation instant. For atom payloads the sign negates the payload at the
target state, so ``Y^n ~p`` is vacuous below the root exactly like ``Y^n p``.
For bottom payloads only past offsets carry information: ``+Y^n #f`` holds iff
the instant is below n and ``-Y^n #f`` iff it is at least n.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from syntax.formula import And, Atom, BOTTOM, Formula, Not, conj, nexts, yesterdays
from syntax.fragments import FUTURE, PAST, chain, is_nxy
from syntax.printer import to_text
from utils.errors import FragmentViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NxyLiteral:
    direction: str
    offset: int
    payload: Optional[str]
    positive: bool = True

    def __post_init__(self):
        if self.offset == 0 and self.direction == PAST:
            object.__setattr__(self, "direction", FUTURE)

    @property
    def sort_key(self) -> Tuple:
        return (self.direction != FUTURE, self.offset, self.payload or "", not self.positive)

    @property
    def is_guard(self) -> bool:
        return self.payload is None

    def position(self, instant: int) -> Optional[int]:
        """State index the literal reads at ``instant``; None when vacuous."""
        if self.direction == FUTURE:
            return instant + self.offset
        if self.offset <= instant:
            return instant - self.offset
        return None

    def to_formula(self) -> Formula:
        if self.payload is None:
            body = BOTTOM
            shifted = nexts(body, self.offset) if self.direction == FUTURE else yesterdays(body, self.offset)
            return shifted if self.positive else Not(shifted)
        body = Atom(self.payload) if self.positive else Not(Atom(self.payload))
        return nexts(body, self.offset) if self.direction == FUTURE else yesterdays(body, self.offset)

    def __str__(self) -> str:
        sign = "+" if self.positive else "-"
        op = "X" if self.direction == FUTURE else "Y"
        return f"{sign}{op}^{self.offset} {self.payload or '#f'}"


@dataclass(frozen=True)
class Element:
    """A conjunction of literals; the empty element is top."""
    literals: FrozenSet[NxyLiteral] = frozenset()

    @classmethod
    def of(cls, literals: Iterable[NxyLiteral]) -> "Element":
        return cls(frozenset(literals))

    @property
    def ordered(self) -> List[NxyLiteral]:
        return sorted(self.literals, key=lambda lit: lit.sort_key)

    @property
    def max_past(self) -> int:
        return max((lit.offset for lit in self.literals if lit.direction == PAST), default=0)

    @property
    def max_future(self) -> int:
        return max((lit.offset for lit in self.literals if lit.direction == FUTURE), default=0)

    def merge(self, other: "Element") -> "Element":
        return Element(self.literals | other.literals)

    def to_formula(self) -> Formula:
        return conj(lit.to_formula() for lit in self.ordered)

    def __str__(self) -> str:
        return "{" + ", ".join(str(lit) for lit in self.ordered) + "}"


def _slots_consistent(assignments: Iterable[Tuple[int, str, bool]]) -> bool:
    seen: Dict[Tuple[int, str], bool] = {}
    for position, atom, positive in assignments:
        if seen.setdefault((position, atom), positive) != positive:
            return False
    return True


def satisfiable_at(e: Element, instant: int) -> bool:
    """Whether ``e`` holds at ``instant`` on some linear timeline."""
    slots = []
    for lit in e.literals:
        if lit.payload is None:
            if lit.direction == FUTURE:
                if lit.positive:
                    return False
                continue
            if lit.positive and not instant < lit.offset:
                return False
            if not lit.positive and not instant >= lit.offset:
                return False
            continue
        position = lit.position(instant)
        if position is not None:
            slots.append((position, lit.payload, lit.positive))
    return _slots_consistent(slots)


def element_sat_instants(e: Element, i_max: int) -> FrozenSet[int]:
    """Instants in 0..i_max at which ``e`` is satisfiable on a linear model."""
    return frozenset(i for i in range(i_max + 1) if satisfiable_at(e, i))


def root_assignments(e: Element, instant: int) -> List[Tuple[int, str, bool]]:
    """Atom literals of ``e`` that land on the root when evaluated at ``instant``."""
    return [
        (0, lit.payload, lit.positive)
        for lit in e.literals
        if lit.payload is not None and lit.position(instant) == 0
    ]


def jointly_consistent_at_root(elements: Iterable[Element], instant: int) -> bool:
    return _slots_consistent(a for e in elements for a in root_assignments(e, instant))


def _literal_dnf(f: Formula, positive: bool) -> List[FrozenSet[NxyLiteral]]:
    parts = chain(f)
    if parts is not None:
        direction, n, payload = parts
        if payload is None:
            if direction == FUTURE:
                return [] if positive else [frozenset()]
            return [frozenset([NxyLiteral(PAST, n, None, positive)])]
        if direction == PAST and not positive:
            # ~Y^n p holds iff Y^n ~p holds and the instant is at least n
            return [frozenset([NxyLiteral(PAST, n, payload, False), NxyLiteral(PAST, n, None, False)])]
        return [frozenset([NxyLiteral(direction, n, payload, positive)])]
    if isinstance(f, Not):
        return _literal_dnf(f.operand, not positive)
    if isinstance(f, And):
        left = _literal_dnf(f.left, positive)
        right = _literal_dnf(f.right, positive)
        if positive:
            return [a | b for a, b in itertools.product(left, right)]
        return left + right
    raise FragmentViolation(f"{to_text(f, sugar=True)} is outside N_XY")


def dj(beta: Formula) -> List[Element]:
    """
    Disjuncts of the DNF of an N_XY formula.

    Elements unsatisfiable at every instant are dropped; order follows the
    left-to-right expansion and duplicates are removed.

    Raises:
        FragmentViolation: If ``beta`` is not in N_XY
    """
    if not is_nxy(beta):
        raise FragmentViolation(f"{to_text(beta, sugar=True)} is outside N_XY")
    result: List[Element] = []
    seen = set()
    for literals in _literal_dnf(beta, True):
        element = Element(literals)
        if element in seen:
            continue
        seen.add(element)
        if element_sat_instants(element, element.max_past + 1):
            result.append(element)
    return result
