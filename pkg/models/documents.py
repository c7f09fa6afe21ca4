"""
Model, context and point documents.

Handles reading, validation and writing of the JSON formats used by the corpus
and by countermodel output.
"""
import json
import logging
import os
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, Field, ValidationError

from models.branching import Context, Model, Rule, acceptable_leaves, build_model, check_context
from utils.errors import ModelError

logger = logging.getLogger(__name__)

Source = Union[str, os.PathLike, dict, BaseModel]


class StateDocument(BaseModel):
    """One state of a model document."""
    id: str
    parent: Optional[str] = None
    atoms: List[str] = Field(default_factory=list)


class ModelDocument(BaseModel):
    """Model document: a rooted tree with its valuation."""
    depth: int
    root: str
    states: List[StateDocument]


class RuleDocument(BaseModel):
    """A named rule given by the leaves of its timelines."""
    name: str
    timelines: List[str]


class ContextDocument(BaseModel):
    """Context document: a finite list of named rules."""
    rules: List[RuleDocument] = Field(default_factory=list)


class PointDocument(BaseModel):
    """Designated timeline (by leaf) and instant of a pointed model."""
    leaf: str
    instant: int


class DocumentLoader:
    """Reads and writes model and context documents."""

    @staticmethod
    def _parse(source: Source, schema: type) -> BaseModel:
        """
        Coerce a path, dict or document into ``schema``.

        Raises:
            ModelError: If the file is unreadable or does not fit the schema
        """
        if isinstance(source, schema):
            return source
        try:
            if isinstance(source, dict):
                return schema.model_validate(source)
            path = Path(source)
            return schema.model_validate_json(path.read_text(encoding="utf-8"))
        except OSError as e:
            logger.error(f"Error reading {source}: {e}")
            raise ModelError(f"Cannot read {source}: {e}")
        except ValidationError as e:
            raise ModelError(f"Malformed {schema.__name__} in {source}: {e}")

    @staticmethod
    def load_model(source: Source) -> Model:
        """
        Load and validate a model document.

        Args:
            source: Path to a JSON file, a dict, or a ModelDocument

        Returns:
            Validated model

        Raises:
            ModelError: NonTree, RaggedDepth or UnknownState on invalid trees
        """
        doc = DocumentLoader._parse(source, ModelDocument)
        model = build_model(
            depth=doc.depth,
            root=doc.root,
            states=[(s.id, s.parent, s.atoms) for s in doc.states],
        )
        logger.info(f"Loaded model with {len(model.states)} states and depth {model.depth}")
        return model

    @staticmethod
    def load_context(source: Optional[Source], model: Model) -> Context:
        """Load a context document against ``model``; None gives the empty context."""
        if source is None:
            return Context()
        doc = DocumentLoader._parse(source, ContextDocument)
        context = Context(tuple(Rule(r.name, frozenset(r.timelines)) for r in doc.rules))
        check_context(model, context)
        return context

    @staticmethod
    def model_document(model: Model) -> ModelDocument:
        parents = {child: parent for parent, kids in model.children.items() for child in kids}
        return ModelDocument(
            depth=model.depth,
            root=model.root,
            states=[
                StateDocument(id=s, parent=parents.get(s), atoms=sorted(model.atoms_at(s)))
                for s in model.states
            ],
        )

    @staticmethod
    def context_document(model: Model, context: Context) -> ContextDocument:
        order = model.leaves
        return ContextDocument(rules=[
            RuleDocument(name=r.name, timelines=[leaf for leaf in order if leaf in r.members])
            for r in context.rules
        ])

    @staticmethod
    def write_pointed_model(directory: Union[str, os.PathLike], model: Model,
                            context: Context, leaf: str, instant: int) -> List[Path]:
        """Write model.json, context.json and point.json into ``directory``."""
        target = Path(directory)
        target.mkdir(parents=True, exist_ok=True)
        files = {
            "model.json": DocumentLoader.model_document(model),
            "context.json": DocumentLoader.context_document(model, context),
            "point.json": PointDocument(leaf=leaf, instant=instant),
        }
        written = []
        for name, doc in files.items():
            path = target / name
            path.write_text(json.dumps(doc.model_dump(), indent=2) + "\n", encoding="utf-8")
            written.append(path)
        logger.info(f"Pointed model written to {target}")
        return written


def load_model(source: Source) -> Model:
    return DocumentLoader.load_model(source)


def load_context(source: Optional[Source], model: Model) -> Context:
    return DocumentLoader.load_context(source, model)


def acceptable_leaf_list(model: Model, context: Context) -> List[str]:
    """AT(context) as leaf ids in document order."""
    leaves = acceptable_leaves(model, context)
    return [leaf for leaf in model.leaves if leaf in leaves]
