import json
from fractions import Fraction

import pytest

import rcurv


def test_gosset_report():
    r = rcurv.classify(rcurv.family("gosset"))
    assert r["eff_bm_sharp"] and r["reflective"]
    assert r["kappa_min"] == 18
    assert r["diam_eff"] == Fraction(3, 2)
    assert [f["family"] for f in r["prime_factors"]] == ["Gosset"]
    assert all(v["pass"] for v in r["theorem_verdicts"].values())


def test_curvature_matches_oracle_on_small_graphs():
    for expr in ["C 5", "Q 3", "KB 3 3", "P 4"]:
        g = rcurv.family(expr)
        for (x, y), k in zip(g.edges(), rcurv.edge_curvatures(g)):
            assert k == rcurv.edge_curvature(g, x, y) == rcurv.oracle_curvature(g, x, y)


def test_graph_from_edges():
    g = rcurv.Graph(3, [(0, 1), (1, 2)])
    assert (g.n, g.m) == (3, 2)
    assert g.distance(0, 2) == 2
    assert rcurv.effective_diameter(g) == Fraction(8, 9)
    with pytest.raises(rcurv.InputError):
        rcurv.Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        rcurv.family("J 5")


def test_reflective_and_factors():
    assert rcurv.is_reflective(rcurv.family("J 6 3"))["reflective"]
    c5 = rcurv.is_reflective(rcurv.family("C 5"))
    assert not c5["reflective"] and c5["counterexample"] is not None
    factors = rcurv.factorize(rcurv.family("( J 4 2 x CP 3 )"))
    assert [rcurv.identify_family(f) for f in factors] == ["CP(3)", "CP(3)"]


def test_spectral_and_bakry_emery():
    g = rcurv.family("HQ 5")
    assert abs(rcurv.smallest_positive_laplacian_eigenvalue(g) - 8) < 1e-8
    assert abs(rcurv.bakry_emery_curvature(rcurv.family("Q 4"), 0) - 2) < 1e-6


def test_run_command():
    code, out, err = rcurv.run_command("reflective", family="C 5")
    assert code == 1 and "edge" in out
    code, out, _ = rcurv.run_command("classify", family="J 5 2", json=True)
    assert code == 0 and json.loads(out)["kappa_min"] == {"num": 5, "den": 1}
    code, _, err = rcurv.run_command("info")
    assert code == 2 and err
