import os

import pytest

import snarkmorph as sm

DATA = os.path.join(os.path.dirname(__file__), "..", "..", "data")


def test_petersen_is_a_snark():
    p = sm.petersen()
    assert p.order == 10
    assert sm.count_colourings(p) == 0
    assert sm.girth(p) == 5
    assert sm.cyclic_connectivity(p) == 5
    assert sm.grade(p)["grade"] == "bicritical"


def test_graph6_round_trip():
    p = sm.petersen()
    q = sm.from_graph6(p.graph6())
    assert sm.isomorphic(p, q)
    assert sm.count_colourings(sm.from_graph6("C~")) == 6


def test_colouring_sets():
    dyad = sm.build("DYAD")
    assert len(sm.colouring_set(dyad, ["I", "O", "r"])) == 36
    assert len(sm.colouring_set(sm.build("P2"))) == 24


def test_families_and_classification():
    g = sm.build("NNN")
    assert g.order == 22
    r = sm.classify(g, "nnn")
    assert r["id"] == "nnn"
    assert "NN substitution" in r["classes"]
    assert sm.cyclic_connectivity(sm.flower_snark(7)) == 6


def test_corpus():
    c = sm.classify_files([os.path.join(DATA, "mixed.g6")])
    assert c["manifest"]["rejected"] == 1
    assert len(c["records"]) == 2


def test_errors():
    with pytest.raises(ValueError):
        sm.build("NOPE")
    with pytest.raises(sm.InputError):
        sm.from_graph6("not a graph")
