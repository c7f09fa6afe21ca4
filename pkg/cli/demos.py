"""
Demo reports and corpus replay.

Corpus models are read from CORPUS_DIR through the model and context document
loaders; nothing here builds models in code.
"""
import logging
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional

from cli.schemas import CorpusEntry, CorpusManifest, Report, ReportEntry
from config import settings
from decide.cores import CoreFormula
from decide.oracle import OracleBounds, brute_force
from decide.procedure import atomic_sequences, root_only_acceptance, sat_core, valid
from models.branching import make_point
from models.documents import acceptable_leaf_list, load_context, load_model
from proofkit.axioms import ProofSystem
from proofkit.checker import AxiomInstance, Proof, ProofLine, check_proof
from reduction.kappa import kappa
from semantics.evaluator import evaluate, generated_rule, update_context
from syntax.formula import Formula, Not, TOP
from syntax.parser import parse
from utils.errors import ModelError

logger = logging.getLogger(__name__)

LAVENHAM = [
    ("1", "X p | X ~p", "VALID"),
    ("2a", "[Y X X p] Y X X p", "VALID"),
    ("2b", "[Y X X ~p] Y X X ~p", "VALID"),
    ("3", "X p -> Y X X p", "VALID"),
    ("4", "[X p] Y X X p", "VALID"),
    ("5", "box Y X X p -> box X p", None),
    ("6", "[X p] X p", "VALID"),
    ("7", "[X ~p] X ~p", "VALID"),
    ("8", "box X p | box X ~p", "INVALID"),
]

PREMISE_5_NOTE = (
    "Listed as a valid premise of the argument, but box Y X X p holds vacuously at the root "
    "while box X p need not; both engines are reported instead of a fixed expectation"
)

PRINTED_4D = "[#f] <#t> #t <-> <#f & #t> #t"
CORRECTED_4D = "[#f] <#t> #t <-> ([#f] #f | <#f & #t> #t)"
SHARED_ROOT_PARTS = ("p & Y q & Y Y #f", "~p & Y ~q & Y Y #f")
# With three branches the deepest trees have 27 leaves and 2**27 single-rule contexts.
ERRATA_BOUNDS = OracleBounds(max_depth=3, max_branch=2)


def _verdict(flag: bool, yes: str = "VALID", no: str = "INVALID") -> str:
    return yes if flag else no


def load_manifest(corpus_dir: Optional[str] = None) -> CorpusManifest:
    path = Path(corpus_dir or settings.CORPUS_DIR) / "corpus.json"
    try:
        return CorpusManifest.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ModelError(f"Cannot read corpus manifest {path}: {e}")


def replay_entry(entry: CorpusEntry, corpus_dir: Optional[str] = None) -> List[ReportEntry]:
    """Recompute the acceptable timelines and every check of one corpus entry."""
    base = Path(corpus_dir or settings.CORPUS_DIR)
    model = load_model(base / entry.model)
    context = load_context(base / entry.context if entry.context else None, model)
    results = []
    if entry.acceptable is not None:
        computed = acceptable_leaf_list(model, context)
        results.append(ReportEntry(
            claim=f"{entry.name}: AT(C)",
            computed=str(computed),
            expected=str(entry.acceptable),
            agree=computed == entry.acceptable,
        ))
    for check in entry.checks:
        value = evaluate(make_point(model, context, check.leaf, check.instant), parse(check.formula)).value
        results.append(ReportEntry(
            claim=f"{entry.name}: ({check.leaf}, {check.instant}) |= {check.formula}",
            computed=str(value).lower(),
            expected=str(check.expected).lower(),
            agree=value == check.expected,
            note=check.source or None,
        ))
    return results


def corpus_report(corpus_dir: Optional[str] = None, names: Optional[Iterable[str]] = None,
                  title: str = "corpus") -> Report:
    manifest = load_manifest(corpus_dir)
    wanted = set(names) if names is not None else None
    report = Report(name=title)
    for entry in manifest.entries:
        if wanted is None or entry.name in wanted:
            report.entries.extend(replay_entry(entry, corpus_dir))
    logger.info(f"Replayed {len(report.entries)} corpus claims")
    return report


def figures_report(corpus_dir: Optional[str] = None) -> Report:
    return corpus_report(corpus_dir, names=["two-level", "ruled", "box-update", "cases"], title="figures")


def tiger_report(corpus_dir: Optional[str] = None) -> Report:
    """The six tiger claims plus the intermediate rule and AT sets."""
    base = Path(corpus_dir or settings.CORPUS_DIR)
    report = corpus_report(corpus_dir, names=["tiger"], title="tiger")
    model = load_model(base / "tiger.json")
    context = load_context(base / "tiger-ctx.json", model)
    alpha = parse("X l")
    rule = sorted(generated_rule(model, context, alpha, 0).members)
    updated = acceptable_leaf_list(model, update_context(model, context, alpha, 0))
    report.entries.append(ReportEntry(
        claim="tiger: [X l]^0", computed=str(rule), expected=str(["w1_3", "w1_4"]),
        agree=rule == ["w1_3", "w1_4"],
    ))
    report.entries.append(ReportEntry(
        claim="tiger: AT(C + X l @ 0)", computed=str(updated), expected=str(["w1_3"]),
        agree=updated == ["w1_3"],
    ))
    return report


def _oracle_valid(f: Formula, bounds: OracleBounds) -> bool:
    return not brute_force(f, bounds).found


def lavenham_report(bounds: Optional[OracleBounds] = None) -> Report:
    """Every step of the determinism argument through the decision procedure and the oracle."""
    bounds = bounds or OracleBounds()
    report = Report(name="lavenham")
    for label, text, expected in LAVENHAM:
        f = parse(text)
        decision = valid(f)
        computed = _verdict(decision.valid)
        oracle = _verdict(_oracle_valid(f, bounds))
        if expected is None:
            agree = computed == oracle
            note = PREMISE_5_NOTE
        else:
            agree = computed == expected and oracle == expected
            note = None
        if not decision.valid:
            suffix = f"countermodel with {len(decision.countermodel.model.states)} states"
            note = f"{note}; {suffix}" if note else suffix
        report.entries.append(ReportEntry(
            claim=f"{label}: {text}", computed=computed, oracle=oracle,
            expected=expected, agree=agree, note=note,
        ))
    return report


def errata_report(bounds: Optional[OracleBounds] = None) -> Report:
    """The 4d printed form and the shared-root core."""
    bounds = bounds or ERRATA_BOUNDS
    report = Report(name="errata")

    for text, expected in ((PRINTED_4D, "INVALID"), (CORRECTED_4D, "VALID")):
        computed = _verdict(valid(parse(text)).valid)
        report.entries.append(ReportEntry(
            claim=f"4d: {text}", computed=computed, expected=expected, agree=computed == expected,
        ))

    printed = Proof(ProofSystem.CONSHN, (ProofLine(parse(PRINTED_4D), AxiomInstance("4d")),))
    result = check_proof(printed)
    reason = result.reason.value if result.reason else "ok"
    report.entries.append(ReportEntry(
        claim="4d printed form cited as axiom", computed=reason, expected="ErratumForm",
        agree=reason == "ErratumForm", note=result.message or None,
    ))

    core = CoreFormula(TOP, tuple(kappa(parse(part)) for part in SHARED_ROOT_PARTS), TOP)
    computed = _verdict(sat_core(core) is not None, "SAT", "UNSAT")
    oracle = _verdict(brute_force(Not(core.to_formula()), bounds).found, "SAT", "UNSAT")
    report.entries.append(ReportEntry(
        claim=f"shared-root core: {core}", computed=computed, oracle=oracle,
        expected="UNSAT", agree=computed == oracle == "UNSAT",
        note=f"oracle bounds: depth {bounds.max_depth}, branch {bounds.max_branch}, contexts {bounds.context_mode}",
    ))
    older = any(root_only_acceptance(seq) for seq in atomic_sequences(core))
    report.entries.append(ReportEntry(
        claim="shared-root core under the root-only acceptance test",
        computed=_verdict(older, "accepted", "rejected"), expected="accepted", agree=older,
        note="that test ignores literals landing on the shared root below instant 0",
    ))
    return report


DEMOS: Dict[str, Callable[[], Report]] = {
    "figures": figures_report,
    "tiger": tiger_report,
    "lavenham": lavenham_report,
    "errata": errata_report,
}
