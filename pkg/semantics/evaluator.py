"""
Truth evaluation at contextualized pointed models.

Y at instant 0 is vacuously true. A conditional [a]f at instant i adds the rule
generated by a at i (ranging over all timelines of the model) to the context
and requires f on every timeline acceptable in the updated context.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from models.branching import Context, Model, Point, Rule, Timeline, acceptable_leaves
from syntax.formula import And, Atom, Bottom, Con, Formula, Next, Not, Yesterday, horizon
from syntax.fragments import first_non_xy_antecedent, is_xy
from syntax.printer import to_text
from utils.errors import HorizonExceeded, NonXYAntecedent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceStep:
    depth: int
    instant: int
    leaf: str
    formula: Formula
    value: bool

    def line(self) -> str:
        return f"{self.depth}, {self.instant}, {self.leaf}, {to_text(self.formula, sugar=True)}, {str(self.value).lower()}"


@dataclass(frozen=True)
class Verdict:
    value: bool
    trace: Optional[Tuple[TraceStep, ...]] = None


class Evaluator:
    """Evaluates formulas over one model.

    Records the instants at which atoms are read (``deepest_read`` and
    ``shallowest_read``) and, optionally, a trace of subformula visits.
    """

    def __init__(self, model: Model, record_trace: bool = False):
        self.model = model
        self.record_trace = record_trace
        self.steps: List[TraceStep] = []
        self.deepest_read: Optional[int] = None
        self.shallowest_read: Optional[int] = None
        self._timeline_of = {t.leaf: t for t in model.timelines}

    def holds(self, context: Context, timeline: Timeline, instant: int,
              f: Formula, depth: int = 0) -> bool:
        value = self._holds(context, timeline, instant, f, depth)
        if self.record_trace:
            self.steps.append(TraceStep(depth, instant, timeline.leaf, f, value))
        return value

    def _holds(self, context: Context, timeline: Timeline, instant: int,
               f: Formula, depth: int) -> bool:
        if isinstance(f, Atom):
            self._note_read(instant)
            return f.name in self.model.atoms_at(timeline.state(instant))
        if isinstance(f, Bottom):
            return False
        if isinstance(f, Not):
            return not self.holds(context, timeline, instant, f.operand, depth + 1)
        if isinstance(f, And):
            return (self.holds(context, timeline, instant, f.left, depth + 1)
                    and self.holds(context, timeline, instant, f.right, depth + 1))
        if isinstance(f, Next):
            return self.holds(context, timeline, instant + 1, f.operand, depth + 1)
        if isinstance(f, Yesterday):
            if instant == 0:
                return True
            return self.holds(context, timeline, instant - 1, f.operand, depth + 1)
        if isinstance(f, Con):
            updated = context.with_rule(self.rule(context, f.antecedent, instant, depth + 1))
            for leaf in self._ordered(acceptable_leaves(self.model, updated)):
                if not self.holds(updated, self._timeline_of[leaf], instant, f.consequent, depth + 1):
                    return False
            return True
        raise TypeError(f"Not a formula: {f!r}")

    def rule(self, context: Context, alpha: Formula, instant: int, depth: int = 0) -> Rule:
        """The rule generated by ``alpha`` at ``instant``, with a fresh name."""
        members = frozenset(
            t.leaf for t in self.model.timelines
            if self.holds(context, t, instant, alpha, depth)
        )
        return Rule(name=fresh_rule_name(context, alpha, instant), members=members)

    def _ordered(self, leaves: FrozenSet[str]) -> List[str]:
        return [leaf for leaf in self.model.leaves if leaf in leaves]

    def _note_read(self, instant: int) -> None:
        if self.deepest_read is None or instant > self.deepest_read:
            self.deepest_read = instant
        if self.shallowest_read is None or instant < self.shallowest_read:
            self.shallowest_read = instant


def fresh_rule_name(context: Context, alpha: Formula, instant: int) -> str:
    base = f"[{to_text(alpha, sugar=True)}]^{instant}"
    taken = set(context.names)
    name, n = base, 1
    while name in taken:
        n += 1
        name = f"{base}#{n}"
    return name


def _check_formula(model: Model, instant: int, f: Formula) -> None:
    offender = first_non_xy_antecedent(f)
    if offender is not None:
        raise NonXYAntecedent(f"Antecedent of {to_text(offender, sugar=True)} contains a conditional")
    if instant + horizon(f) > model.depth:
        raise HorizonExceeded(
            f"{to_text(f, sugar=True)} needs depth {instant + horizon(f)} at instant {instant}, "
            f"model depth is {model.depth}"
        )


def evaluate(pt: Point, f: Formula, trace: bool = False) -> Verdict:
    """
    Evaluate a formula at a contextualized pointed model.

    Args:
        pt: The point of evaluation
        f: Formula whose conditionals have temporal-only antecedents
        trace: Record one step per subformula visit

    Returns:
        Verdict with the truth value and optional trace

    Raises:
        HorizonExceeded: instant + horizon(f) exceeds the model depth
        NonXYAntecedent: a conditional antecedent contains a conditional
    """
    _check_formula(pt.model, pt.instant, f)
    evaluator = Evaluator(pt.model, record_trace=trace)
    value = evaluator.holds(pt.context, pt.timeline, pt.instant, f)
    return Verdict(value=value, trace=tuple(evaluator.steps) if trace else None)


def generated_rule(m: Model, c: Context, alpha: Formula, instant: int) -> Rule:
    """Rule generated by ``alpha`` at ``instant``: its timelines among all of TL(m)."""
    if not is_xy(alpha):
        raise NonXYAntecedent(f"{to_text(alpha, sugar=True)} is not temporal-only")
    _check_formula(m, instant, alpha)
    return Evaluator(m).rule(c, alpha, instant)


def update_context(m: Model, c: Context, alpha: Formula, instant: int) -> Context:
    """Update ``c`` with ``alpha`` at ``instant``; the new rule is always appended."""
    rule = generated_rule(m, c, alpha, instant)
    logger.debug(f"Context update with {rule.name}: {sorted(rule.members)}")
    return c.with_rule(rule)
