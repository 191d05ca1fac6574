import json
import math

import pytest

import graphmax as gm


def test_graph_construction():
    g = gm.Graph(4, [(3, 0), (0, 1), (2, 0)])
    assert g == gm.star(4)
    assert g.edges == [(0, 1), (0, 2), (0, 3)]
    assert g.dist(1, 2) == 2
    assert gm.Graph(3).dist(0, 2) is None
    assert not gm.Graph(3).connected()
    assert gm.graph_from_json(g.to_json()) == g
    assert len(gm.cycle(5)) == 5
    with pytest.raises(ValueError):
        gm.Graph(3, [(1, 1)])


def test_maximal_functions():
    assert gm.maximal(gm.star(4), [2, 1, 1, 1]) == [2.0, 1.5, 1.5, 1.5]
    u = gm.maximal(gm.path(3), [1, 0, 0], centered=False)
    assert u[:2] == [1.0, 0.5]
    assert u[2] == pytest.approx(1 / 3, rel=1e-15)
    m = gm.maximal(gm.complete(2), [1, 0], alpha=0.5)
    assert m[1] == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    with pytest.raises(ValueError):
        gm.maximal(gm.star(4), [1, 2])


def test_variation_and_norms():
    g = gm.star(4)
    assert gm.p_variation(g, [2, 1, 1, 1], 1.0) == 3.0
    assert gm.p_variation(g, [2, 1, 1, 1], math.inf) == 1.0
    assert gm.lp_norm([3, 4], 2.0) == 5.0
    assert gm.variation_ratio(gm.complete(5), [0, 1, 0, 0, 0], 2.0) == pytest.approx(0.8, rel=1e-14)
    assert gm.norm_ratio(gm.complete(3), [4, 1, 1], 2.0) == pytest.approx(math.sqrt(4 / 3), rel=1e-14)
    with pytest.raises(gm.ZeroVariation):
        gm.variation_ratio(g, [1, 1, 1, 1], 2.0)
    assert gm.majorizes([3, 0], [2, 1])
    assert not gm.majorizes([2, 1], [3, 0])


def test_constants():
    c = gm.sharp_variation_constant("star", 3, 2.0)
    assert c["status"] == "proved"
    assert c["value"] == pytest.approx(math.sqrt(5) / 3, rel=1e-11)
    assert gm.sharp_variation_constant("star", 4, 2.0)["value"] is None
    assert gm.l2_norm("complete", 6)["value"] == pytest.approx(math.sqrt(4 / 3), rel=1e-11)
    assert gm.boundedness_constant(4, 2.0, 2.0) == pytest.approx(math.sqrt(18), rel=1e-15)
    with pytest.raises(ValueError):
        gm.sharp_variation_constant("wheel", 4, 2.0)


def test_search_is_deterministic():
    a = gm.estimate_ratio(gm.complete(4), p=2.0, restarts=8, seed=5)
    b = gm.estimate_ratio(gm.complete(4), p=2.0, restarts=8, seed=5, threads=1)
    assert a == b
    assert 0.75 - 1e-6 <= a["best_ratio"] <= 0.75 + 1e-9
    assert a["closed_form"]["constant"]["status"] == "proved"


def test_verify_suite():
    report = gm.verify("constants")
    assert report["summary"]["passed"]
    assert report["metadata"]["seed"] == gm.DEFAULT_SEED
    assert json.dumps(report) == json.dumps(gm.verify("constants"))
    with pytest.raises(ValueError):
        gm.verify("everything")
