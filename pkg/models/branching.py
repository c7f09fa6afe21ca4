"""
Branching-time models as finite trees of uniform depth.

Timelines are identified with leaves; a rule is a set of leaf ids and the
acceptable timelines of a context are the intersection of its rules.
"""
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from utils.errors import (
    InstantOutOfRange, NonTree, RaggedDepth, TimelineNotAcceptable, UnknownState,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Timeline:
    leaf: str
    path: Tuple[str, ...]

    def state(self, instant: int) -> str:
        return self.path[instant]


@dataclass(frozen=True, eq=False)
class Model:
    """A rooted tree of states with a valuation.

    Construct through ``build_model`` so the tree invariants are checked.
    """
    root: str
    depth: int
    states: Tuple[str, ...]
    children: Mapping[str, Tuple[str, ...]]
    valuation: Mapping[str, FrozenSet[str]]
    _timelines: Tuple[Timeline, ...] = field(default=(), repr=False)

    @property
    def timelines(self) -> Tuple[Timeline, ...]:
        return self._timelines

    @property
    def leaves(self) -> Tuple[str, ...]:
        return tuple(t.leaf for t in self._timelines)

    def timeline(self, leaf: str) -> Timeline:
        for candidate in self._timelines:
            if candidate.leaf == leaf:
                return candidate
        raise UnknownState(f"{leaf!r} is not a leaf of the model")

    def atoms_at(self, state: str) -> FrozenSet[str]:
        return self.valuation.get(state, frozenset())


@dataclass(frozen=True)
class Rule:
    name: str
    members: FrozenSet[str]


@dataclass(frozen=True)
class Context:
    rules: Tuple[Rule, ...] = ()

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(rule.name for rule in self.rules)

    def with_rule(self, rule: Rule) -> "Context":
        return Context(self.rules + (rule,))


EMPTY_CONTEXT = Context()


@dataclass(frozen=True)
class Point:
    """A contextualized pointed model; build through ``make_point``."""
    model: Model
    context: Context
    timeline: Timeline
    instant: int


def build_model(depth: int, root: Optional[str],
                states: Sequence[Tuple[str, Optional[str], Iterable[str]]]) -> Model:
    """
    Build and validate a model from ``(id, parent, atoms)`` triples.

    Args:
        depth: Declared uniform leaf depth (at least 1)
        root: Declared root id, or None to take the unique parentless state
        states: States in document order; children keep this order

    Returns:
        The validated model

    Raises:
        NonTree: Duplicate ids, several or no parentless states, unreachable states
        UnknownState: A parent reference to an undeclared state
        RaggedDepth: Leaves at a depth other than ``depth``
    """
    order: List[str] = []
    parents: Dict[str, Optional[str]] = {}
    valuation: Dict[str, FrozenSet[str]] = {}
    for state_id, parent, labels in states:
        if state_id in parents:
            raise NonTree(f"State {state_id!r} is declared twice")
        order.append(state_id)
        parents[state_id] = parent
        valuation[state_id] = frozenset(labels)

    roots = [s for s in order if parents[s] is None]
    if len(roots) != 1:
        raise NonTree(f"Expected exactly one parentless state, found {len(roots)}: {roots}")
    if root is not None and roots[0] != root:
        raise NonTree(f"Declared root {root!r} is not the parentless state {roots[0]!r}")
    root = roots[0]

    children: Dict[str, List[str]] = {s: [] for s in order}
    for state_id in order:
        parent = parents[state_id]
        if parent is None:
            continue
        if parent not in parents:
            raise UnknownState(f"State {state_id!r} has unknown parent {parent!r}")
        children[parent].append(state_id)

    # Walk down from the root; anything not reached sits on a cycle.
    level_of = {root: 0}
    frontier = [root]
    while frontier:
        state_id = frontier.pop()
        for child in children[state_id]:
            level_of[child] = level_of[state_id] + 1
            frontier.append(child)
    unreachable = [s for s in order if s not in level_of]
    if unreachable:
        raise NonTree(f"States unreachable from root {root!r}: {unreachable}")

    if depth < 1:
        raise RaggedDepth(f"Model depth must be at least 1, got {depth}")
    leaves = [s for s in order if not children[s]]
    ragged = [s for s in leaves if level_of[s] != depth]
    if ragged:
        raise RaggedDepth(f"Leaves {ragged} are not at depth {depth}")

    timelines = []
    for leaf in leaves:
        path = [leaf]
        while parents[path[-1]] is not None:
            path.append(parents[path[-1]])
        timelines.append(Timeline(leaf=leaf, path=tuple(reversed(path))))

    model = Model(
        root=root,
        depth=depth,
        states=tuple(order),
        children=MappingProxyType({s: tuple(c) for s, c in children.items()}),
        valuation=MappingProxyType(valuation),
        _timelines=tuple(timelines),
    )
    logger.debug(f"Built model with {len(order)} states, depth {depth}, {len(timelines)} timelines")
    return model


def timelines(m: Model) -> List[Timeline]:
    """One timeline per leaf, in document order."""
    return list(m.timelines)


def check_context(m: Model, c: Context) -> None:
    known = set(m.leaves)
    for rule in c.rules:
        unknown = sorted(rule.members - known)
        if unknown:
            raise UnknownState(f"Rule {rule.name!r} names non-leaf states {unknown}")


def acceptable_leaves(m: Model, c: Context) -> FrozenSet[str]:
    """Leaf ids of AT(c); all leaves when the context is empty."""
    result = frozenset(m.leaves)
    for rule in c.rules:
        result &= rule.members
    return result


def acceptable(m: Model, c: Context) -> FrozenSet[Timeline]:
    """The acceptable timelines AT(c): the intersection of all rules."""
    check_context(m, c)
    leaves = acceptable_leaves(m, c)
    return frozenset(t for t in m.timelines if t.leaf in leaves)


def make_point(m: Model, c: Context, leaf: str, instant: int) -> Point:
    """
    Build a contextualized pointed model.

    Raises:
        UnknownState: ``leaf`` is not a leaf of ``m``
        InstantOutOfRange: ``instant`` outside 0..depth
        TimelineNotAcceptable: the timeline is not in AT(c)
    """
    timeline = m.timeline(leaf)
    if not 0 <= instant <= m.depth:
        raise InstantOutOfRange(f"Instant {instant} outside 0..{m.depth}")
    check_context(m, c)
    if leaf not in acceptable_leaves(m, c):
        raise TimelineNotAcceptable(f"Timeline of {leaf!r} is not acceptable in context {list(c.names)}")
    return Point(model=m, context=c, timeline=timeline, instant=instant)
