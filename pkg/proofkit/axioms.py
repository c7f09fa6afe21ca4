"""
Axiom schemas of the two proof systems and schema matching.

Schemas are written in the formula syntax with metavariables ``phi``, ``psi``,
``chi``, ``alpha``, ``beta`` and ``gamma``. Matching is unification over the
desugared AST, so derived connectives match through their desugaring.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from syntax.formula import And, Atom, Bottom, Con, Formula, Next, Not, TOP, Yesterday
from syntax.fragments import is_closed, is_conshn, is_nxy, is_pl, is_xy
from syntax.parser import parse

logger = logging.getLogger(__name__)

METAVARIABLES = frozenset({"phi", "psi", "chi", "alpha", "beta", "gamma"})

Bindings = Dict[str, Formula]
Condition = Callable[[Formula], bool]


class ProofSystem(str, Enum):
    CONSHN = "ConSHN-BT"
    ONEBOX = "OneBox-XY"

    def admits(self, f: Formula) -> bool:
        """Whether ``f`` belongs to the language of the system."""
        return is_conshn(f) if self is ProofSystem.CONSHN else _onebox_xy(f)


def _onebox_xy(f: Formula) -> bool:
    """Boolean combinations of XY formulas and ``box b`` with ``b`` in XY."""
    if is_xy(f):
        return True
    if isinstance(f, Not):
        return _onebox_xy(f.operand)
    if isinstance(f, And):
        return _onebox_xy(f.left) and _onebox_xy(f.right)
    return isinstance(f, Con) and f.antecedent == TOP and is_xy(f.consequent)


@dataclass(frozen=True)
class Schema:
    id: str
    text: str
    conditions: Mapping[str, Condition] = field(default_factory=dict)

    @property
    def pattern(self) -> Formula:
        return _PATTERNS[self.id]


@dataclass(frozen=True)
class AxiomMatch:
    schema: str
    bindings: Tuple[Tuple[str, Formula], ...]

    def binding(self, name: str) -> Formula:
        return dict(self.bindings)[name]


_PL_SCHEMAS = [
    ("1a", "phi -> (psi -> phi)"),
    ("1b", "(phi -> (psi -> chi)) -> ((phi -> psi) -> (phi -> chi))"),
    ("1c", "(~phi -> ~psi) -> (psi -> phi)"),
    ("1d", "(phi & psi) -> phi"),
    ("1e", "(phi & psi) -> psi"),
    ("1f", "phi -> (psi -> (phi & psi))"),
]

_XY_ALPHA = {"alpha": is_xy}

CONSHN_SCHEMAS: List[Schema] = [Schema(sid, text) for sid, text in _PL_SCHEMAS] + [
    Schema("2a", "X ~phi <-> ~X phi"),
    Schema("2b", "X (phi & psi) <-> X phi & X psi"),
    Schema("2c", "X Y phi <-> phi"),
    Schema("2d", "X [alpha] phi <-> [X alpha] X phi", _XY_ALPHA),
    Schema("2e", "~X ~#t"),
    Schema("3a", "Y ~phi <-> (Y #f | ~Y phi)"),
    Schema("3b", "Y (phi & psi) <-> (Y phi & Y psi)"),
    Schema("3c", "Y X phi <-> (Y #f | phi)"),
    Schema("3d", "Y [alpha] phi <-> [Y alpha] Y phi", _XY_ALPHA),
    Schema("3e", "dia Y #f -> (dia alpha -> alpha)", {"alpha": is_pl}),
    Schema("4a", "[alpha] (phi & psi) <-> ([alpha] phi & [alpha] psi)", _XY_ALPHA),
    Schema("4b", "[alpha] (phi | chi) <-> ([alpha] phi | [alpha] chi)", {"alpha": is_xy, "chi": is_closed}),
    Schema("4c", "[alpha] [beta] gamma <-> [alpha & beta] gamma",
           {"alpha": is_xy, "beta": is_xy, "gamma": is_xy}),
    Schema("4d", "[alpha] <beta> gamma <-> ([alpha] #f | <alpha & beta> gamma)",
           {"alpha": is_xy, "beta": is_xy, "gamma": is_xy}),
    Schema("4e", "[alpha] beta <-> box (alpha -> beta)", {"alpha": is_xy, "beta": is_xy}),
    Schema("5", "box alpha -> alpha", _XY_ALPHA),
]

ONEBOX_SCHEMAS: List[Schema] = [Schema(f"ob{sid}", text) for sid, text in _PL_SCHEMAS] + [
    Schema("ob2", "~X ~#t"),
    Schema("ob3", "dia Y #f -> (dia alpha -> alpha)", {"alpha": is_pl}),
    Schema("ob4a", "box (alpha -> beta) -> (box alpha -> box beta)", {"alpha": is_nxy, "beta": is_nxy}),
    Schema("ob4b", "box alpha -> alpha", {"alpha": is_nxy}),
]

# The 4d shape as printed without the [alpha] #f disjunct; invalid when alpha empties AT.
PRINTED_4D = Schema("4d-printed", "[alpha] <beta> gamma <-> <alpha & beta> gamma",
                    {"alpha": is_xy, "beta": is_xy, "gamma": is_xy})

_PATTERNS: Dict[str, Formula] = {
    s.id: parse(s.text) for s in CONSHN_SCHEMAS + ONEBOX_SCHEMAS + [PRINTED_4D]
}


def schemas_for(system: ProofSystem) -> Dict[str, Schema]:
    """Schemas usable in ``system``; ConSHN-BT also admits the one-box table."""
    table = ONEBOX_SCHEMAS if system is ProofSystem.ONEBOX else CONSHN_SCHEMAS + ONEBOX_SCHEMAS
    return {s.id: s for s in table}


def unify(pattern: Formula, f: Formula, bindings: Optional[Bindings] = None) -> Optional[Bindings]:
    """
    Match ``f`` against ``pattern``, extending ``bindings``.

    Returns:
        The completed bindings, or None when ``f`` is not an instance
    """
    result = dict(bindings or {})
    stack = [(pattern, f)]
    while stack:
        p, g = stack.pop()
        if isinstance(p, Atom) and p.name in METAVARIABLES:
            bound = result.setdefault(p.name, g)
            if bound != g:
                return None
            continue
        if type(p) is not type(g):
            return None
        if isinstance(p, Atom):
            if p.name != g.name:
                return None
        elif isinstance(p, (Not, Next, Yesterday)):
            stack.append((p.operand, g.operand))
        elif isinstance(p, And):
            stack.append((p.right, g.right))
            stack.append((p.left, g.left))
        elif isinstance(p, Con):
            stack.append((p.consequent, g.consequent))
            stack.append((p.antecedent, g.antecedent))
        elif not isinstance(p, Bottom):
            raise TypeError(f"Not a formula: {p!r}")
    return result


def side_conditions_hold(schema: Schema, bindings: Bindings) -> bool:
    return all(check(bindings[name]) for name, check in schema.conditions.items() if name in bindings)


def match_schema(schema: Schema, f: Formula, bindings: Optional[Bindings] = None) -> Optional[Bindings]:
    """Bindings under which ``f`` instantiates ``schema`` with its side conditions met."""
    found = unify(schema.pattern, f, bindings)
    if found is None or not side_conditions_hold(schema, found):
        return None
    return found


def match_axiom(f: Formula, system: ProofSystem = ProofSystem.CONSHN) -> List[AxiomMatch]:
    """All schemas of ``system`` that ``f`` instantiates, side conditions included."""
    matches = []
    for schema in schemas_for(system).values():
        found = match_schema(schema, f)
        if found is not None:
            matches.append(AxiomMatch(schema.id, tuple(sorted(found.items()))))
    logger.debug(f"{len(matches)} schema matches")
    return matches


def is_printed_4d(f: Formula) -> bool:
    return match_schema(PRINTED_4D, f) is not None
