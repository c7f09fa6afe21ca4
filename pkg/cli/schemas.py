"""Pydantic schemas for CLI documents and reports."""
from typing import List, Optional

from pydantic import BaseModel, Field

from models.documents import ContextDocument, ModelDocument, PointDocument


class CheckDocument(BaseModel):
    """One expected truth value at a point of a corpus model."""
    leaf: str
    instant: int
    formula: str
    expected: bool
    source: str = ""


class CorpusEntry(BaseModel):
    """A corpus model with its context and the values it must reproduce."""
    name: str
    model: str
    context: Optional[str] = None
    acceptable: Optional[List[str]] = None
    checks: List[CheckDocument] = Field(default_factory=list)


class CorpusManifest(BaseModel):
    entries: List[CorpusEntry]


class ReportEntry(BaseModel):
    claim: str
    computed: str
    oracle: Optional[str] = None
    expected: Optional[str] = None
    agree: bool
    note: Optional[str] = None


class Report(BaseModel):
    """Demo or corpus report."""
    name: str
    entries: List[ReportEntry] = Field(default_factory=list)

    @property
    def all_agree(self) -> bool:
        return all(entry.agree for entry in self.entries)

    def to_text(self) -> str:
        lines = [f"== {self.name}"]
        for entry in self.entries:
            mark = "ok " if entry.agree else "MISMATCH "
            line = f"{mark}{entry.claim}: {entry.computed}"
            if entry.oracle is not None:
                line += f" (oracle: {entry.oracle})"
            if entry.expected is not None:
                line += f" [expected {entry.expected}]"
            lines.append(line)
            if entry.note:
                lines.append(f"   note: {entry.note}")
        agreed = sum(entry.agree for entry in self.entries)
        lines.append(f"{agreed}/{len(self.entries)} agreements")
        return "\n".join(lines)


class CountermodelDocument(BaseModel):
    """A pointed model as written by ``valid``/``sat``."""
    model: ModelDocument
    context: ContextDocument
    point: PointDocument


class DecisionResponse(BaseModel):
    formula: str
    verdict: str
    witness: Optional[CountermodelDocument] = None
