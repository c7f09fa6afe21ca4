"""Test schema matching, the proof checker and proof documents."""
from pathlib import Path

import pytest

from config import settings
from decide.procedure import valid
from proofkit.axioms import ProofSystem, is_printed_4d, match_axiom, schemas_for
from proofkit.checker import (
    AxiomInstance, FailureReason, GenBox, GenX, ModusPonens, Proof, ProofLine, ReplaceEquiv, check_proof,
    replace_at, subformula_at,
)
from proofkit.documents import load_proof
from syntax.parser import parse
from utils.errors import ProofDocumentError

PROOFS = Path(settings.CORPUS_DIR) / "proofs"


def line(text, by):
    return ProofLine(parse(text), by)


def test_match_axiom():
    assert [m.schema for m in match_axiom(parse("box X p -> X p"))] == ["5", "ob4b"]
    assert [m.schema for m in match_axiom(parse("box X p -> X p"), ProofSystem.ONEBOX)] == ["ob4b"]
    matched = match_axiom(parse("X Y q <-> q"))
    assert [m.schema for m in matched] == ["2c"]
    assert matched[0].binding("phi") == parse("q")


def test_side_conditions_filter_matches():
    assert match_axiom(parse("box [p] q -> [p] q")) == []
    assert [m.schema for m in match_axiom(parse("dia Y #f -> (dia p -> p)"))] == ["3e", "ob3"]
    assert match_axiom(parse("dia Y #f -> (dia X p -> X p)")) == []


def test_schema_tables():
    conshn = schemas_for(ProofSystem.CONSHN)
    assert {"1a", "2e", "3e", "4d", "5", "ob4a"} <= set(conshn)
    assert "4d-printed" not in conshn
    assert set(schemas_for(ProofSystem.ONEBOX)) == {
        "ob1a", "ob1b", "ob1c", "ob1d", "ob1e", "ob1f", "ob2", "ob3", "ob4a", "ob4b",
    }


@pytest.mark.parametrize("path", sorted(PROOFS.glob("*.json")), ids=lambda p: p.stem)
def test_corpus_proofs_check(path):
    result = check_proof(load_proof(path))
    assert result.ok, str(result)
    assert str(result) == "ok"


@pytest.mark.parametrize("path", sorted(PROOFS.glob("*.json")), ids=lambda p: p.stem)
def test_corpus_proof_lines_are_valid(path):
    """Soundness: every derived line is a validity."""
    for proof_line in load_proof(path).lines:
        assert valid(proof_line.formula, deterministic=True).valid


def test_corrupted_axiom_line():
    proof = load_proof(PROOFS / "mp-chain.json")
    corrupted = (line("box X p -> X q", proof.lines[0].justification),) + proof.lines[1:]
    result = check_proof(Proof(proof.system, corrupted))
    assert not result.ok
    assert result.line == 1
    assert result.reason is FailureReason.BAD_SCHEMA
    assert str(result).startswith("error at line 1: BadSchema: ")


def test_bad_reference():
    result = check_proof(Proof(ProofSystem.CONSHN, (
        line("box p -> p", AxiomInstance("5")),
        line("p", ModusPonens(1, 2)),
    )))
    assert (result.line, result.reason) == (2, FailureReason.BAD_REFERENCE)


def test_shape_mismatch():
    result = check_proof(Proof(ProofSystem.CONSHN, (
        line("box p -> p", AxiomInstance("5")),
        line("Y (box p -> p)", GenX(1)),
    )))
    assert (result.line, result.reason) == (2, FailureReason.SHAPE_MISMATCH)


def test_line_outside_language():
    result = check_proof(Proof(ProofSystem.CONSHN, (line("[[p] q] r", AxiomInstance("5")),)))
    assert (result.line, result.reason) == (1, FailureReason.SHAPE_MISMATCH)
    result = check_proof(Proof(ProofSystem.ONEBOX, (line("[p] q -> [p] q", AxiomInstance("ob1a")),)))
    assert (result.line, result.reason) == (1, FailureReason.SHAPE_MISMATCH)


def test_side_condition_failures():
    result = check_proof(Proof(ProofSystem.CONSHN, (line("box [p] q -> [p] q", AxiomInstance("5")),)))
    assert result.reason is FailureReason.BAD_SIDE_CONDITION
    result = check_proof(Proof(ProofSystem.CONSHN, (
        line("box p -> p", AxiomInstance("5")),
        line("box (box p -> p)", GenBox(1)),
    )))
    assert (result.line, result.reason) == (2, FailureReason.BAD_SIDE_CONDITION)


def test_printed_4d_is_reported_as_erratum():
    printed = "[p] <q> r <-> <p & q> r"
    assert is_printed_4d(parse(printed))
    result = check_proof(Proof(ProofSystem.CONSHN, (line(printed, AxiomInstance("4d")),)))
    assert result.reason is FailureReason.ERRATUM_FORM
    assert not valid(parse(printed), deterministic=True).valid

    corrected = "[p] <q> r <-> ([p] #f | <p & q> r)"
    assert check_proof(Proof(ProofSystem.CONSHN, (line(corrected, AxiomInstance("4d")),))).ok


def test_replacement_rule():
    assert subformula_at(parse("Y X ~p"), (0,)) == parse("X ~p")
    assert replace_at(parse("Y X ~p"), (0,), parse("~X p")) == parse("Y ~X p")
    lines = (
        line("X ~p <-> ~X p", AxiomInstance("2a")),
        line("Y X ~p <-> Y ~p", ReplaceEquiv(1, (0,))),
    )
    result = check_proof(Proof(ProofSystem.CONSHN, lines))
    assert (result.line, result.reason) == (2, FailureReason.SHAPE_MISMATCH)
    result = check_proof(Proof(ProofSystem.CONSHN, lines[:1] + (line("Y X ~p <-> Y ~X p", ReplaceEquiv(1, (3,))),)))
    assert (result.line, result.reason) == (2, FailureReason.SHAPE_MISMATCH)


def test_onebox_system_restrictions():
    result = check_proof(Proof(ProofSystem.ONEBOX, (
        line("box p -> p", AxiomInstance("ob4b")),
        line("X p <-> X p", ReplaceEquiv(1, ())),
    )))
    assert (result.line, result.reason) == (2, FailureReason.BAD_SCHEMA)
    result = check_proof(Proof(ProofSystem.ONEBOX, (line("box p -> p", AxiomInstance("5")),)))
    assert (result.line, result.reason) == (1, FailureReason.BAD_SCHEMA)


def test_onebox_proofs_check_in_conshn():
    proof = load_proof(PROOFS / "onebox.json")
    assert proof.system is ProofSystem.ONEBOX
    assert check_proof(Proof(ProofSystem.CONSHN, proof.lines)).ok


def test_proof_document_errors(tmp_path):
    with pytest.raises(ProofDocumentError):
        load_proof(tmp_path / "missing.json")
    with pytest.raises(ProofDocumentError):
        load_proof({"system": "ConSHN-BT", "lines": [{"formula": "p", "by": {"mp": [1, 2], "genX": 1}}]})
    with pytest.raises(ProofDocumentError):
        load_proof({"system": "ConSHN-BT", "lines": [{"formula": "p &", "by": {"genX": 1}}]})
    with pytest.raises(ProofDocumentError):
        load_proof({"system": "S5", "lines": []})
    with pytest.raises(ProofDocumentError):
        load_proof({"system": "ConSHN-BT", "lines": [{"formula": "p", "by": {"replace": {"from": 1}}}]})
