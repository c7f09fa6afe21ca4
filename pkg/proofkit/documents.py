"""
Proof documents.

    {"system": "ConSHN-BT",
     "lines": [{"formula": "box X p -> X p", "by": {"axiom": "5", "bindings": {"alpha": "X p"}}},
               {"formula": "...", "by": {"mp": [1, 2]}}]}
"""
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import BaseModel, ValidationError

from proofkit.checker import (
    AxiomInstance, GenBox, GenX, GenY, Justification, ModusPonens, Proof, ProofLine, ReplaceEquiv,
)
from proofkit.axioms import ProofSystem
from syntax.parser import parse
from utils.errors import FormulaSyntaxError, ProofDocumentError

logger = logging.getLogger(__name__)


class ProofLineDocument(BaseModel):
    formula: str
    by: Dict[str, Any]


class ProofDocument(BaseModel):
    system: ProofSystem
    lines: List[ProofLineDocument]


def _justification(by: Dict[str, Any]) -> Justification:
    rules = sorted(set(by) - {"bindings"})
    if len(rules) != 1:
        raise ProofDocumentError(f"Justification needs exactly one rule, got {rules}")
    kind = rules[0]
    value = by[kind]
    try:
        if kind == "axiom":
            bindings = {name: parse(text) for name, text in by.get("bindings", {}).items()}
            return AxiomInstance(str(value), bindings)
        if kind == "mp":
            minor, major = value
            return ModusPonens(int(minor), int(major))
        if kind == "genX":
            return GenX(int(value))
        if kind == "genY":
            return GenY(int(value))
        if kind == "genBox":
            return GenBox(int(value))
        if kind == "replace":
            return ReplaceEquiv(int(value["from"]), tuple(int(step) for step in value["path"]))
    except (TypeError, ValueError, KeyError) as e:
        raise ProofDocumentError(f"Malformed {kind!r} justification {value!r}: {e}")
    raise ProofDocumentError(f"Unknown rule {kind!r}")


def proof_from_document(doc: ProofDocument) -> Proof:
    lines = []
    for number, line in enumerate(doc.lines, start=1):
        try:
            lines.append(ProofLine(parse(line.formula), _justification(line.by)))
        except FormulaSyntaxError as e:
            raise ProofDocumentError(f"Line {number}: {e}")
    return Proof(system=doc.system, lines=tuple(lines))


def load_proof(source: Union[str, os.PathLike, dict]) -> Proof:
    """
    Read a proof document.

    Raises:
        ProofDocumentError: If the file is unreadable or malformed
    """
    try:
        if isinstance(source, dict):
            doc = ProofDocument.model_validate(source)
        else:
            doc = ProofDocument.model_validate_json(Path(source).read_text(encoding="utf-8"))
    except OSError as e:
        logger.error(f"Error reading {source}: {e}")
        raise ProofDocumentError(f"Cannot read {source}: {e}")
    except ValidationError as e:
        raise ProofDocumentError(f"Malformed proof document {source}: {e}")
    return proof_from_document(doc)
