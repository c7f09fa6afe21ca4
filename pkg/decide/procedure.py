"""
Satisfiability and validity through the reduction pipeline.

    kappa -> mu -> cores -> atomic sequences -> witness model

Every witness is replayed with the evaluator before it is returned.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from config import settings
from decide.cores import CoreFormula, to_cores
from models.branching import EMPTY_CONTEXT, Context, Model, Point, Timeline, build_model, make_point
from reduction.kappa import kappa
from reduction.mu import mu
from reduction.normal_form import (
    Element, dj, element_sat_instants, jointly_consistent_at_root, root_assignments, satisfiable_at,
)
from semantics.evaluator import evaluate
from syntax.formula import Formula, Not, horizon
from syntax.printer import to_text
from utils.errors import BudgetExceeded, WitnessVerificationFailed

logger = logging.getLogger(__name__)

ROOT = "w0"


@dataclass(frozen=True)
class AtomicSequence:
    """One element per diamond of a core, followed by the free-part element."""
    elements: Tuple[Element, ...]

    @property
    def max_past(self) -> int:
        return max((e.max_past for e in self.elements), default=0)

    @property
    def max_future(self) -> int:
        return max((e.max_future for e in self.elements), default=0)

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.elements) + ")"


@dataclass(frozen=True)
class SatWitness:
    model: Model
    context: Context
    timeline: Timeline
    instant: int

    def point(self) -> Point:
        return make_point(self.model, self.context, self.timeline.leaf, self.instant)


@dataclass(frozen=True)
class ValidityResult:
    valid: bool
    countermodel: Optional[SatWitness] = None


def _candidates(box_part: Formula, part: Formula) -> List[Element]:
    result = []
    for h, other in itertools.product(dj(box_part), dj(part)):
        merged = h.merge(other)
        if merged not in result and element_sat_instants(merged, merged.max_past + 1):
            result.append(merged)
    return result


def atomic_sequences(cf: CoreFormula) -> Iterator[AtomicSequence]:
    """
    Atomic sequences of ``cf`` in lexicographic order of the DJ products.

    Raises:
        BudgetExceeded: More than DECIDE_MAX_SEQUENCES sequences are enumerated
    """
    positions = [_candidates(cf.box_part, i) for i in cf.diamond_parts]
    positions.append(_candidates(cf.box_part, cf.free_part))
    for count, elements in enumerate(itertools.product(*positions), start=1):
        if count > settings.DECIDE_MAX_SEQUENCES:
            raise BudgetExceeded(f"More than {settings.DECIDE_MAX_SEQUENCES} atomic sequences")
        yield AtomicSequence(tuple(elements))


def accepts(seq: AtomicSequence, instant: int) -> bool:
    """Every element holds at ``instant`` and the literals landing on the shared root agree."""
    return (all(satisfiable_at(e, instant) for e in seq.elements)
            and jointly_consistent_at_root(seq.elements, instant))


def build_witness(seq: AtomicSequence, instant: int, query_horizon: int = 0) -> SatWitness:
    """
    One branch per element below a shared root; the last branch is designated.

    States are named ``w{depth}_{branch}``. Only positive literals put atoms in
    the valuation.
    """
    depth = max(1, instant + seq.max_future, instant + query_horizon)
    root_atoms = sorted({
        atom for e in seq.elements for _, atom, positive in root_assignments(e, instant) if positive
    })
    states = [(ROOT, None, root_atoms)]
    for j, element in enumerate(seq.elements, start=1):
        for d in range(1, depth + 1):
            parent = ROOT if d == 1 else f"w{d - 1}_{j}"
            labels = sorted({
                lit.payload for lit in element.literals
                if lit.payload is not None and lit.positive and lit.position(instant) == d
            })
            states.append((f"w{d}_{j}", parent, labels))
    model = build_model(depth, ROOT, states)
    leaf = f"w{depth}_{len(seq.elements)}"
    return SatWitness(model=model, context=EMPTY_CONTEXT, timeline=model.timeline(leaf), instant=instant)


def sat_core(cf: CoreFormula, query_horizon: int = 0) -> Optional[SatWitness]:
    """
    Search the atomic sequences of a core for one that can be realized.

    Instants ``0..m+1`` are tried, ``m`` being the largest past offset of the
    sequence; beyond ``m + 1`` nothing changes.

    Args:
        cf: The core formula
        query_horizon: Lookahead of the formula the witness will be replayed on

    Returns:
        A witness model, or None when the core is unsatisfiable
    """
    for seq in atomic_sequences(cf):
        for instant in range(seq.max_past + 2):
            if accepts(seq, instant):
                logger.debug(f"Core accepted by {seq} at instant {instant}")
                return build_witness(seq, instant, query_horizon)
    return None


def _search(cores: List[CoreFormula], query_horizon: int, deterministic: bool) -> Optional[SatWitness]:
    if deterministic or settings.NUM_WORKERS <= 1 or len(cores) <= 1:
        for cf in cores:
            witness = sat_core(cf, query_horizon)
            if witness is not None:
                return witness
        return None
    with ThreadPoolExecutor(max_workers=settings.NUM_WORKERS) as pool:
        results = list(pool.map(lambda cf: sat_core(cf, query_horizon), cores))
    return next((w for w in results if w is not None), None)


def satisfiable(f: Formula, deterministic: Optional[bool] = None) -> Optional[SatWitness]:
    """
    Decide satisfiability of a formula with temporal-only antecedents.

    Args:
        f: Formula to decide
        deterministic: Force sequential core search; defaults to settings.DETERMINISTIC

    Returns:
        A verified witness, or None when ``f`` is unsatisfiable

    Raises:
        NonXYAntecedent: If some antecedent contains a conditional
        WitnessVerificationFailed: If a constructed witness does not replay
    """
    if deterministic is None:
        deterministic = settings.DETERMINISTIC
    reduced = mu(kappa(f))
    cores = to_cores(reduced)
    logger.info(f"{len(cores)} cores for {to_text(f, sugar=True)}")
    witness = _search(cores, horizon(f), deterministic)
    if witness is None:
        logger.info("No core is satisfiable")
        return None
    if not evaluate(witness.point(), f).value:
        logger.error(f"Witness for {to_text(f, sugar=True)} does not replay")
        raise WitnessVerificationFailed(f"Witness for {to_text(f, sugar=True)} evaluates to false")
    logger.info(f"Witness built with {len(witness.model.states)} states at instant {witness.instant}")
    return witness


def valid(f: Formula, deterministic: Optional[bool] = None) -> ValidityResult:
    """Valid iff the negation is unsatisfiable; otherwise return its witness as countermodel."""
    witness = satisfiable(Not(f), deterministic)
    return ValidityResult(valid=witness is None, countermodel=witness)


def element_implies_root(e: Element, m: int) -> bool:
    """Whether ``e`` can only hold at instant 0, looking at instants up to ``m + 1``."""
    return not any(satisfiable_at(e, i) for i in range(1, m + 2))


def root_only_acceptance(seq: AtomicSequence) -> bool:
    """
    The older acceptance test for atomic sequences, kept for comparison.

    Each element only has to be satisfiable on its own; the offset-0 literals
    are compared across elements only when some element forces the root.
    This accepts sequences that no model realizes.
    """
    m = seq.max_past
    if not all(element_sat_instants(e, m + 1) for e in seq.elements):
        return False
    if any(element_implies_root(e, m) for e in seq.elements):
        return jointly_consistent_at_root(seq.elements, 0)
    return True
