"""
Command-line interface.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage error,
3 reasoning error (message on stderr).
"""
import functools
import json
import logging
from dataclasses import dataclass
from typing import List, Optional

import click

from cli.demos import DEMOS, corpus_report
from cli.schemas import CountermodelDocument, DecisionResponse, Report
from decide.cores import to_cores
from decide.oracle import CONTEXT_MODES, OracleBounds, brute_force
from decide.procedure import SatWitness, satisfiable, valid
from models.branching import make_point
from models.documents import DocumentLoader, PointDocument, acceptable_leaf_list, load_context, load_model
from proofkit.documents import load_proof
from proofkit.checker import check_proof
from reduction.kappa import kappa
from reduction.mu import mu
from semantics.evaluator import evaluate, generated_rule, update_context
from syntax.formula import Formula, Not, horizon, ydepth
from syntax.fragments import fragment_of
from syntax.parser import parse
from syntax.printer import to_text
from utils.errors import ReasoningError
from config import settings

logger = logging.getLogger(__name__)

EXIT_NEGATIVE = 1
EXIT_REASONING = 3


@dataclass
class Options:
    deterministic: bool = False
    trace: bool = False
    output_format: str = "text"

    @property
    def json(self) -> bool:
        return self.output_format == "json"


def reasoning_command(func):
    """Report ReasoningError on stderr and exit with code 3."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ReasoningError as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"error: {type(e).__name__}: {e}", err=True)
            raise click.exceptions.Exit(EXIT_REASONING)
    return wrapper


def _emit(opts: Options, payload: dict, text: str) -> None:
    click.echo(json.dumps(payload, indent=2) if opts.json else text)


def _finish(ok: bool) -> None:
    if not ok:
        raise click.exceptions.Exit(EXIT_NEGATIVE)


def _countermodel(witness: SatWitness) -> CountermodelDocument:
    return CountermodelDocument(
        model=DocumentLoader.model_document(witness.model),
        context=DocumentLoader.context_document(witness.model, witness.context),
        point=PointDocument(leaf=witness.timeline.leaf, instant=witness.instant),
    )


def describe_witness(witness: SatWitness) -> str:
    model = witness.model
    parents = {child: parent for parent, kids in model.children.items() for child in kids}
    lines = [f"point: timeline {witness.timeline.leaf}, instant {witness.instant}"]
    for state in model.states:
        labels = ", ".join(sorted(model.atoms_at(state))) or "-"
        parent = parents.get(state)
        where = f"child of {parent}" if parent else "root"
        lines.append(f"  {state} ({where}): {labels}")
    return "\n".join(lines)


def _trace_pipeline(f: Formula) -> None:
    reduced = mu(kappa(f))
    click.echo(f"kappa: {to_text(kappa(f), sugar=True)}")
    click.echo(f"mu: {to_text(reduced, sugar=True)}")
    for n, core in enumerate(to_cores(reduced), start=1):
        click.echo(f"core {n}: {core}")


@click.group()
@click.option("--deterministic", is_flag=True, help="Sequential core search.")
@click.option("--trace", is_flag=True, help="Print evaluation or reduction traces.")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
@click.pass_context
def cli(ctx: click.Context, deterministic: bool, trace: bool, output_format: str):
    """Evaluate, reduce and decide formulas of conditional strong historical necessity."""
    ctx.obj = Options(deterministic=deterministic or settings.DETERMINISTIC, trace=trace,
                      output_format=output_format)


@cli.command("parse")
@click.argument("formula")
@click.option("--sugar", is_flag=True, help="Resugar derived connectives.")
@click.pass_obj
@reasoning_command
def parse_command(opts: Options, formula: str, sugar: bool):
    """Parse a formula and print it back."""
    f = parse(formula)
    text = to_text(f, sugar=sugar)
    _emit(opts, {
        "formula": text,
        "fragments": sorted(tag.value for tag in fragment_of(f)),
        "horizon": horizon(f),
        "ydepth": ydepth(f),
    }, text)


def _model_options(func):
    func = click.option("--model", "model_path", required=True, type=click.Path(exists=True, dir_okay=False))(func)
    func = click.option("--context", "context_path", type=click.Path(exists=True, dir_okay=False))(func)
    return func


@cli.command("eval")
@_model_options
@click.option("--leaf", required=True, help="Leaf of the designated timeline.")
@click.option("--instant", required=True, type=int)
@click.argument("formula")
@click.pass_obj
@reasoning_command
def eval_command(opts: Options, model_path: str, context_path: Optional[str],
                 leaf: str, instant: int, formula: str):
    """Evaluate FORMULA at a contextualized pointed model."""
    model = load_model(model_path)
    context = load_context(context_path, model)
    verdict = evaluate(make_point(model, context, leaf, instant), parse(formula), trace=opts.trace)
    steps = [step.line() for step in verdict.trace or ()]
    text = "\n".join(steps + [str(verdict.value).lower()])
    _emit(opts, {"value": verdict.value, "trace": steps}, text)
    _finish(verdict.value)


@cli.command("rule")
@_model_options
@click.option("--instant", required=True, type=int)
@click.argument("formula")
@click.pass_obj
@reasoning_command
def rule_command(opts: Options, model_path: str, context_path: Optional[str], instant: int, formula: str):
    """Print the rule generated by FORMULA at an instant."""
    model = load_model(model_path)
    context = load_context(context_path, model)
    rule = generated_rule(model, context, parse(formula), instant)
    members = [leaf for leaf in model.leaves if leaf in rule.members]
    _emit(opts, {"name": rule.name, "timelines": members}, f"{rule.name}: {members}")


@cli.command("update")
@_model_options
@click.option("--instant", required=True, type=int)
@click.argument("formula")
@click.pass_obj
@reasoning_command
def update_command(opts: Options, model_path: str, context_path: Optional[str], instant: int, formula: str):
    """Add the rule generated by FORMULA to the context and print AT."""
    model = load_model(model_path)
    context = update_context(model, load_context(context_path, model), parse(formula), instant)
    leaves = acceptable_leaf_list(model, context)
    _emit(opts, {
        "context": DocumentLoader.context_document(model, context).model_dump(),
        "acceptable": leaves,
    }, f"AT: {leaves}")


@cli.command("reduce")
@click.option("--stage", type=click.Choice(["kappa", "mu", "both"]), default="both")
@click.argument("formula")
@click.pass_obj
@reasoning_command
def reduce_command(opts: Options, stage: str, formula: str):
    """Push X/Y inward (kappa), flatten conditionals (mu), or both."""
    f = parse(formula)
    if stage == "kappa":
        result = kappa(f)
    elif stage == "mu":
        result = mu(f)
    else:
        result = mu(kappa(f))
    text = to_text(result, sugar=True)
    _emit(opts, {"stage": stage, "formula": text}, text)


def _decision_output(opts: Options, f: Formula, verdict: str, witness: Optional[SatWitness],
                     out: Optional[str], save: bool) -> None:
    target = out or (settings.COUNTERMODEL_DIR if save else None)
    if witness is not None and target:
        DocumentLoader.write_pointed_model(target, witness.model, witness.context,
                                           witness.timeline.leaf, witness.instant)
    response = DecisionResponse(
        formula=to_text(f, sugar=True),
        verdict=verdict,
        witness=_countermodel(witness) if witness is not None else None,
    )
    text = verdict if witness is None else f"{verdict}\n{describe_witness(witness)}"
    _emit(opts, response.model_dump(), text)


@cli.command("valid")
@click.argument("formula")
@click.option("--out", type=click.Path(file_okay=False), help="Directory for countermodel documents.")
@click.option("--save", is_flag=True, help="Write countermodel documents under COUNTERMODEL_DIR.")
@click.pass_obj
@reasoning_command
def valid_command(opts: Options, formula: str, out: Optional[str], save: bool):
    """Decide validity; print a countermodel when invalid."""
    f = parse(formula)
    if opts.trace:
        _trace_pipeline(Not(f))
    result = valid(f, deterministic=opts.deterministic)
    _decision_output(opts, f, "VALID" if result.valid else "INVALID", result.countermodel, out, save)
    _finish(result.valid)


@cli.command("sat")
@click.argument("formula")
@click.option("--out", type=click.Path(file_okay=False), help="Directory for witness documents.")
@click.option("--save", is_flag=True, help="Write witness documents under COUNTERMODEL_DIR.")
@click.pass_obj
@reasoning_command
def sat_command(opts: Options, formula: str, out: Optional[str], save: bool):
    """Decide satisfiability; print a witness when satisfiable."""
    f = parse(formula)
    if opts.trace:
        _trace_pipeline(f)
    witness = satisfiable(f, deterministic=opts.deterministic)
    _decision_output(opts, f, "SAT" if witness is not None else "UNSAT", witness, out, save)
    _finish(witness is not None)


@cli.command("oracle")
@click.argument("formula")
@click.option("--max-depth", type=int, default=settings.ORACLE_MAX_DEPTH, show_default=True)
@click.option("--max-branch", type=int, default=settings.ORACLE_MAX_BRANCH, show_default=True)
@click.option("--atoms", help="Comma-separated atoms to vary; default: those of the formula.")
@click.option("--budget", type=int, default=settings.ORACLE_BUDGET, show_default=True)
@click.option("--context-mode", type=click.Choice(CONTEXT_MODES), default="subsets", show_default=True)
@click.pass_obj
@reasoning_command
def oracle_command(opts: Options, formula: str, max_depth: int, max_branch: int,
                   atoms: Optional[str], budget: int, context_mode: str):
    """Search small models exhaustively for a point falsifying FORMULA."""
    f = parse(formula)
    names = frozenset(a.strip() for a in atoms.split(",") if a.strip()) if atoms else None
    bounds = OracleBounds(max_depth=max_depth, max_branch=max_branch, atoms=names,
                          context_mode=context_mode, budget=budget)
    result = brute_force(f, bounds)
    payload = {"formula": to_text(f, sugar=True), "found": result.found,
               "shapes": result.shapes_checked, "rows": result.rows_checked}
    if not result.found:
        _emit(opts, payload, "no counterexample")
        return
    pt = result.counterexample
    payload["counterexample"] = {
        "model": DocumentLoader.model_document(pt.model).model_dump(),
        "context": DocumentLoader.context_document(pt.model, pt.context).model_dump(),
        "point": {"leaf": pt.timeline.leaf, "instant": pt.instant},
    }
    witness = SatWitness(pt.model, pt.context, pt.timeline, pt.instant)
    rules = "; ".join(f"{r.name} = {sorted(r.members)}" for r in pt.context.rules) or "empty"
    _emit(opts, payload, f"counterexample\n{describe_witness(witness)}\ncontext: {rules}")
    _finish(False)


@cli.group("proof")
def proof_group():
    """Proof documents."""


@proof_group.command("check")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.pass_obj
@reasoning_command
def proof_check_command(opts: Options, path: str):
    """Check a proof document line by line."""
    result = check_proof(load_proof(path))
    _emit(opts, {
        "ok": result.ok,
        "line": result.line,
        "reason": result.reason.value if result.reason else None,
        "message": result.message,
    }, str(result))
    _finish(result.ok)


def _emit_report(opts: Options, report: Report) -> None:
    click.echo(report.model_dump_json(indent=2) if opts.json else report.to_text())
    _finish(report.all_agree)


@cli.command("demo")
@click.argument("name", type=click.Choice(sorted(DEMOS)))
@click.pass_obj
@reasoning_command
def demo_command(opts: Options, name: str):
    """Replay a worked example and report agreement."""
    _emit_report(opts, DEMOS[name]())


@cli.command("corpus")
@click.option("--dir", "corpus_dir", type=click.Path(exists=True, file_okay=False), help="Corpus directory.")
@click.pass_obj
@reasoning_command
def corpus_command(opts: Options, corpus_dir: Optional[str]):
    """Replay every corpus check."""
    _emit_report(opts, corpus_report(corpus_dir))


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI on ``argv`` and return the exit code."""
    try:
        cli.main(args=argv, prog_name="conshn", standalone_mode=True)
    except SystemExit as e:
        if e.code is None:
            return 0
        return e.code if isinstance(e.code, int) else 1
    return 0
