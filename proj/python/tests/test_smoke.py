import itertools

import pytest

import annigraph


def test_ring_info_f2xy():
    info = annigraph.ring_info("cat:f2xy_x2y2")
    assert info["is_gorenstein"] and not info["is_spir"]
    assert info["ideal_count"] == 7
    assert info["vdim_profile"] == [2, 1]
    assert info["socle"] == "(xy)"


def test_ag_of_z12_is_a_path():
    g = annigraph.graph("zn:12")
    assert sorted(g["vertices"]) == ["(2)", "(3)", "(4)", "(6)"]
    named = {frozenset(g["vertices"][i] for i in e) for e in g["edges"]}
    assert named == {frozenset(p) for p in [("(2)", "(6)"), ("(6)", "(4)"), ("(4)", "(3)")]}
    assert annigraph.dot("zn:12").startswith('graph AG {\n  "(6)";\n')


def test_zero_divisor_graph():
    g = annigraph.graph("zn:6", kind="zdg")
    assert g["vertices"] == ["2", "3", "4"]
    assert g["edges"] == [[0, 1], [1, 2]]


@pytest.mark.parametrize("n,expected", [(4, 0), (5, 1), (6, 1)])
def test_complete_graph_genus(n, expected):
    r = annigraph.genus(f"cat:k{n}")
    assert r["status"] == "exact"
    assert r["lower"] == r["upper"] == expected


def test_graph_genus_from_edges():
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    assert annigraph.graph_genus(6, k33)["lower"] == 1
    assert not annigraph.is_planar(6, k33)
    k4 = list(itertools.combinations(range(4), 2))
    assert annigraph.is_planar(4, k4)


def test_budget_and_bounds():
    r = annigraph.genus("cat:k8", budget_nodes=1000)
    assert r["status"] == "budget_exhausted"
    b = annigraph.genus("cat:k8", bounds_only=True)
    assert b["lower"] == 2 and b["upper"] >= 2


def test_verify_small_corpus():
    rep = annigraph.verify(["zn:8", "cat:f2xy_x2y2"], suite="all")
    assert rep["ok"] and rep["failed"] == 0
    checks = {(c["ring"], c["check"]) for c in rep["results"]}
    assert ("cat:f2xy_x2y2", "gorenstein_t2_star_shape") in checks
    assert any(c["ring"] == "*" for c in rep["results"])


def test_errors_are_value_errors():
    with pytest.raises(ValueError, match="position 3"):
        annigraph.ring_info("zn:x")
    with pytest.raises(annigraph.AnnigraphError):
        annigraph.graph("cat:nosuch")


def test_corpus_and_specs():
    names = [n for n, _ in annigraph.corpus()]
    assert "z8" in names and "f2xy_x2y2" in names
    assert "f2xy_x2y2" in annigraph.catalog()
    assert annigraph.canonical_spec("prod:(zn:2,zn:4)") == "prod:(zn:2,zn:4)"
