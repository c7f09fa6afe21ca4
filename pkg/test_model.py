"""Test model construction, contexts and model documents."""
import json
from pathlib import Path

import pytest

from config import settings
from models.branching import (
    Context, Rule, acceptable, acceptable_leaves, build_model, make_point, timelines,
)
from models.documents import DocumentLoader, acceptable_leaf_list, load_context, load_model
from utils.errors import (
    InstantOutOfRange, ModelError, NonTree, RaggedDepth, TimelineNotAcceptable, UnknownState,
)

CORPUS = Path(settings.CORPUS_DIR)


def small_tree():
    return build_model(1, "w0", [("w0", None, []), ("w1", "w0", ["p"]), ("w2", "w0", [])])


def test_build_model_timelines():
    m = small_tree()
    assert m.leaves == ("w1", "w2")
    assert [t.path for t in timelines(m)] == [("w0", "w1"), ("w0", "w2")]
    assert m.timeline("w1").state(0) == "w0"
    assert m.atoms_at("w1") == {"p"}


@pytest.mark.parametrize("states, error", [
    ([("w0", None, []), ("w0", None, [])], NonTree),
    ([("w0", None, []), ("w1", None, [])], NonTree),
    ([("w0", None, []), ("w1", "zz", [])], UnknownState),
    ([("w0", None, []), ("w1", "w0", []), ("w2", "w1", [])], RaggedDepth),
])
def test_build_model_rejects_bad_trees(states, error):
    with pytest.raises(error):
        build_model(1, "w0", states)


def test_build_model_rejects_ragged_leaves():
    with pytest.raises(RaggedDepth):
        build_model(2, "w0", [("w0", None, []), ("w1", "w0", []), ("w2", "w0", []), ("w3", "w1", [])])


def test_build_model_rejects_cycles():
    with pytest.raises(NonTree):
        build_model(1, "w0", [("w0", None, []), ("w1", "w0", []), ("a", "b", []), ("b", "a", [])])


def test_acceptable_is_intersection_of_rules():
    m = small_tree()
    assert acceptable_leaves(m, Context()) == {"w1", "w2"}
    c = Context((Rule("R1", frozenset({"w1", "w2"})), Rule("R2", frozenset({"w2"}))))
    assert {t.leaf for t in acceptable(m, c)} == {"w2"}


def test_make_point_checks():
    m = small_tree()
    c = Context((Rule("R", frozenset({"w2"})),))
    with pytest.raises(TimelineNotAcceptable):
        make_point(m, c, "w1", 0)
    with pytest.raises(InstantOutOfRange):
        make_point(m, c, "w2", 2)
    with pytest.raises(UnknownState):
        make_point(m, c, "w0", 0)
    assert make_point(m, c, "w2", 1).instant == 1


def test_context_rejects_unknown_leaves():
    m = small_tree()
    with pytest.raises(UnknownState):
        load_context({"rules": [{"name": "R", "timelines": ["w0"]}]}, m)


def test_load_corpus_models():
    tiger = load_model(CORPUS / "tiger.json")
    assert tiger.depth == 1
    assert len(tiger.leaves) == 6
    context = load_context(CORPUS / "tiger-ctx.json", tiger)
    assert context.names == ("R1", "R2", "R3", "R4")
    assert acceptable_leaf_list(tiger, context) == ["w1_3", "w1_5"]


def test_rules_restrict_acceptable_timelines():
    m = load_model(CORPUS / "ruled.json")
    assert acceptable_leaf_list(m, load_context(CORPUS / "ruled-ctx.json", m)) == ["w1_2", "w1_3"]


def test_malformed_documents(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"depth": 1, "states": []}))
    with pytest.raises(ModelError):
        load_model(bad)
    with pytest.raises(ModelError):
        load_model(tmp_path / "missing.json")


def test_write_pointed_model_round_trip(tmp_path):
    m = load_model(CORPUS / "two-level.json")
    c = Context((Rule("R", frozenset({"w2_2", "w2_3"})),))
    written = DocumentLoader.write_pointed_model(tmp_path / "out", m, c, "w2_2", 1)
    assert [p.name for p in written] == ["model.json", "context.json", "point.json"]
    again = load_model(tmp_path / "out" / "model.json")
    assert again.states == m.states
    assert dict(again.valuation) == dict(m.valuation)
    assert load_context(tmp_path / "out" / "context.json", again) == c
    point = json.loads((tmp_path / "out" / "point.json").read_text())
    assert point == {"leaf": "w2_2", "instant": 1}


if __name__ == "__main__":
    test_load_corpus_models()
