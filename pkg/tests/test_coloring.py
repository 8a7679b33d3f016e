import numpy as np
import pytest

from incidence_coloring import (ColoringMismatchError, IncidenceColoring, coloring_from_doc,
                                coloring_to_doc)
from incidence_coloring.coloring import dumps, loads
from incidence_coloring.graph import cycle, fan, path


def test_from_mapping_round_trip():
    g = fan(4)
    mapping = {inc: i % 4 for i, inc in enumerate(g.incidences())}
    c = IncidenceColoring.from_mapping(g, 4, mapping)
    assert c.to_mapping() == mapping
    assert c[(1, 2)] == mapping[(1, 2)]


def test_missing_and_extra_incidences():
    g = path(3)
    with pytest.raises(ColoringMismatchError, match="uncoloured"):
        IncidenceColoring.from_mapping(g, 2, {(1, 2): 0, (2, 1): 1, (2, 3): 0})
    with pytest.raises(ColoringMismatchError, match="extraneous"):
        IncidenceColoring.from_mapping(g, 2, {(1, 2): 0, (2, 1): 1, (2, 3): 0, (3, 2): 1, (1, 3): 0})


def test_palette_range():
    with pytest.raises(ValueError):
        IncidenceColoring(path(2), 2, [[0, 2]])


@pytest.mark.parametrize("one_based", [False, True])
def test_document_round_trip(one_based):
    g = cycle(5)
    c = IncidenceColoring(g, 3, np.arange(10).reshape(5, 2) % 3)
    doc = coloring_to_doc(c, one_based=one_based, method="test")
    assert doc["method"] == "test" and len(doc["incidences"]) == 10
    assert coloring_from_doc(doc, g) == c
    assert coloring_from_doc(doc) == c
    assert loads(dumps(c, one_based=one_based)) == c


def test_graph_inferred_keeps_isolated_vertices():
    g = path(2)
    doc = coloring_to_doc(IncidenceColoring(g, 2, [[0, 1]]))
    doc["n"] = 4
    assert coloring_from_doc(doc).graph.n == 4


@pytest.mark.parametrize("doc, match", [
    ({"incidences": []}, "lacks"),
    ({"k": 2, "incidences": [{"v": 3, "e": [1, 2], "c": 0}]}, "not an endpoint"),
    ({"k": 2, "incidences": [{"v": 1, "e": [1, 2], "c": 0}, {"v": 1, "e": [2, 1], "c": 1}]}, "twice"),
    ({"k": 2, "incidences": [{"v": 1, "e": [1, 2], "c": 5}]}, "palette"),
    ({"k": 2, "incidences": [{"v": 1, "c": 0}]}, "malformed"),
    ({"k": 2, "incidences": [{"v": "a", "e": [1, 2], "c": 0}]}, "malformed"),
])
def test_bad_documents(doc, match):
    with pytest.raises(ColoringMismatchError, match=match):
        coloring_from_doc(doc)
