"""
Line-by-line checking of Hilbert-style derivations.

Line numbers are 1-based. Justifications may only cite earlier lines.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple, Union

from proofkit.axioms import (
    ProofSystem, is_printed_4d, match_schema, schemas_for, unify,
)
from syntax.formula import Formula, Next, Yesterday, box, children, implies, rebuild
from syntax.fragments import is_xy
from syntax.parser import parse
from syntax.printer import to_text

logger = logging.getLogger(__name__)

_IFF = parse("phi <-> psi")


class FailureReason(str, Enum):
    BAD_SCHEMA = "BadSchema"
    BAD_SIDE_CONDITION = "BadSideCondition"
    BAD_REFERENCE = "BadReference"
    SHAPE_MISMATCH = "ShapeMismatch"
    ERRATUM_FORM = "ErratumForm"


@dataclass(frozen=True)
class AxiomInstance:
    schema: str
    bindings: Dict[str, Formula] = field(default_factory=dict, hash=False)


@dataclass(frozen=True)
class ModusPonens:
    minor: int
    major: int


@dataclass(frozen=True)
class GenX:
    premise: int


@dataclass(frozen=True)
class GenY:
    premise: int


@dataclass(frozen=True)
class GenBox:
    premise: int


@dataclass(frozen=True)
class ReplaceEquiv:
    """From line ``source`` (psi <-> psi') infer chi <-> chi' where chi' swaps psi at ``path``."""
    source: int
    path: Tuple[int, ...]


Justification = Union[AxiomInstance, ModusPonens, GenX, GenY, GenBox, ReplaceEquiv]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Proof:
    system: ProofSystem
    lines: Tuple[ProofLine, ...]


@dataclass(frozen=True)
class ProofCheckResult:
    ok: bool
    line: Optional[int] = None
    reason: Optional[FailureReason] = None
    message: str = ""

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return f"error at line {self.line}: {self.reason.value}: {self.message}"


class _LineFailure(Exception):
    def __init__(self, reason: FailureReason, message: str):
        super().__init__(message)
        self.reason = reason
        self.message = message


def subformula_at(f: Formula, path: Sequence[int]) -> Formula:
    for step in path:
        parts = children(f)
        if not 0 <= step < len(parts):
            raise _LineFailure(FailureReason.SHAPE_MISMATCH, f"Path step {step} leaves the formula")
        f = parts[step]
    return f


def replace_at(f: Formula, path: Sequence[int], replacement: Formula) -> Formula:
    if not path:
        return replacement
    parts = children(f)
    step = path[0]
    if not 0 <= step < len(parts):
        raise _LineFailure(FailureReason.SHAPE_MISMATCH, f"Path step {step} leaves the formula")
    new_child = replace_at(parts[step], path[1:], replacement)
    return rebuild(f, parts[:step] + (new_child,) + parts[step + 1:])


class ProofChecker:
    """Checks proofs of one system."""

    def __init__(self, system: ProofSystem):
        self.system = system
        self.schemas = schemas_for(system)

    def check(self, lines: Sequence[ProofLine]) -> ProofCheckResult:
        for number, line in enumerate(lines, start=1):
            try:
                if not self.system.admits(line.formula):
                    raise _LineFailure(
                        FailureReason.SHAPE_MISMATCH,
                        f"{to_text(line.formula, sugar=True)} is outside the language of {self.system.value}",
                    )
                self._check_line(lines, number, line)
            except _LineFailure as failure:
                logger.info(f"Proof rejected at line {number}: {failure.reason.value}")
                return ProofCheckResult(False, number, failure.reason, failure.message)
        logger.info(f"Proof of {len(lines)} lines checked in {self.system.value}")
        return ProofCheckResult(True)

    def _cited(self, lines: Sequence[ProofLine], number: int, ref: int) -> Formula:
        if not 1 <= ref < number:
            raise _LineFailure(FailureReason.BAD_REFERENCE, f"Line {number} cites line {ref}")
        return lines[ref - 1].formula

    def _check_line(self, lines: Sequence[ProofLine], number: int, line: ProofLine) -> None:
        f, by = line.formula, line.justification
        if isinstance(by, AxiomInstance):
            self._check_axiom(f, by)
        elif isinstance(by, ModusPonens):
            minor = self._cited(lines, number, by.minor)
            major = self._cited(lines, number, by.major)
            if major != implies(minor, f):
                raise _LineFailure(FailureReason.SHAPE_MISMATCH,
                                   f"Line {by.major} is not line {by.minor} -> line {number}")
        elif isinstance(by, (GenX, GenY)):
            premise = self._cited(lines, number, by.premise)
            wrap = Next if isinstance(by, GenX) else Yesterday
            if f != wrap(premise):
                raise _LineFailure(FailureReason.SHAPE_MISMATCH,
                                   f"Line {number} does not prefix line {by.premise} with {wrap.__name__}")
        elif isinstance(by, GenBox):
            premise = self._cited(lines, number, by.premise)
            if not is_xy(premise):
                raise _LineFailure(FailureReason.BAD_SIDE_CONDITION,
                                   f"Line {by.premise} is not temporal-only")
            if f != box(premise):
                raise _LineFailure(FailureReason.SHAPE_MISMATCH, f"Line {number} is not box of line {by.premise}")
        elif isinstance(by, ReplaceEquiv):
            self._check_replace(lines, number, f, by)
        else:
            raise TypeError(f"Unknown justification {by!r}")

    def _check_axiom(self, f: Formula, by: AxiomInstance) -> None:
        schema = self.schemas.get(by.schema)
        if schema is None:
            raise _LineFailure(FailureReason.BAD_SCHEMA, f"No axiom {by.schema!r} in {self.system.value}")
        found = unify(schema.pattern, f, by.bindings)
        if found is None:
            if by.schema == "4d" and is_printed_4d(f):
                raise _LineFailure(FailureReason.ERRATUM_FORM,
                                   "This is the 4d form without the [alpha] #f disjunct, which is not valid")
            raise _LineFailure(FailureReason.BAD_SCHEMA, f"Not an instance of {by.schema}: {schema.text}")
        if match_schema(schema, f, by.bindings) is None:
            raise _LineFailure(FailureReason.BAD_SIDE_CONDITION,
                               f"Bindings violate the side conditions of {by.schema}")

    def _check_replace(self, lines: Sequence[ProofLine], number: int,
                       f: Formula, by: ReplaceEquiv) -> None:
        if self.system is not ProofSystem.CONSHN:
            raise _LineFailure(FailureReason.BAD_SCHEMA, f"Replacement is not a rule of {self.system.value}")
        equivalence = unify(_IFF, self._cited(lines, number, by.source))
        if equivalence is None:
            raise _LineFailure(FailureReason.SHAPE_MISMATCH, f"Line {by.source} is not an equivalence")
        conclusion = unify(_IFF, f)
        if conclusion is None:
            raise _LineFailure(FailureReason.SHAPE_MISMATCH, f"Line {number} is not an equivalence")
        before, after = conclusion["phi"], conclusion["psi"]
        if subformula_at(before, by.path) != equivalence["phi"]:
            raise _LineFailure(FailureReason.SHAPE_MISMATCH,
                               f"Subformula at {list(by.path)} is not the left side of line {by.source}")
        if replace_at(before, by.path, equivalence["psi"]) != after:
            raise _LineFailure(FailureReason.SHAPE_MISMATCH,
                               f"Right side is not the replacement at {list(by.path)}")


def check_proof(pr: Proof) -> ProofCheckResult:
    """Check every line of ``pr``; the first failure is reported."""
    return ProofChecker(pr.system).check(pr.lines)
