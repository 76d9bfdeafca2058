"""Smoke tests for the python bindings."""

import math

import pytest

import geomplex as gp


def test_matrix_roundtrip():
    m = gp.DissimilarityMatrix([[0, 1], [1, 0]])
    assert m.n == 2
    assert m.triangle
    assert m[0, 1] == 1.0
    with pytest.raises(ValueError):
        gp.DissimilarityMatrix([[0, 1], [2, 0]])


def test_rips_persistence_of_a_circle():
    m = gp.gen_circle(12, 2 * math.pi)
    K = gp.rips_filtration(m, 2)
    K.validate()
    dgm = gp.persistence(K, 2)
    h1 = dgm.restrict_dim(1)
    assert len(h1) == 1
    bar = h1.points[0]
    assert bar.birth == pytest.approx(2 * math.pi / 12)
    assert bar.death == pytest.approx(2 * math.pi / 3, rel=1e-6)


def test_points_to_matrix_and_betti():
    pts = gp.gen_parallel_segments(4)
    m = gp.matrix_from_points(pts, metric="euclidean")
    slice_ = gp.rips_complex_at(m, 1.0, False, 2)
    assert any(len(s.vertices) == 3 for s in slice_)
    full = gp.rips_filtration(m, 2)
    betti = gp.betti_at(full, 1.0, False, 2)
    assert betti[1] == 4


def test_dowker_duality():
    lam = gp.CrossDissimilarity([[0.3, 1.2, 0.7], [0.9, 0.1, 0.5]])
    a = gp.persistence(gp.dowker_filtration(lam, 2), 2)
    b = gp.persistence(gp.dowker_filtration(lam.transpose(), 2), 2)
    da = [p for p in a.points if p.dim <= 1]
    db = [p for p in b.points if p.dim <= 1]
    assert sorted((p.dim, p.birth, p.death) for p in da) == sorted((p.dim, p.birth, p.death) for p in db)


def test_bottleneck_matches_bruteforce():
    d1 = gp.PersistenceDiagram([(0, 0.0, 2.0), (0, 1.0, 3.0)])
    d2 = gp.PersistenceDiagram([(0, 0.5, 2.5)])
    v = gp.bottleneck(d1, d2, 0)
    assert v == pytest.approx(gp.bottleneck_bruteforce(d1, d2, 0))
    value, pairs = gp.bottleneck_with_certificate(d1, d2, 0)
    assert value == pytest.approx(v)
    assert len(pairs) >= 2


def test_gh_exact_and_hausdorff():
    x = gp.DissimilarityMatrix([[0, 1], [1, 0]])
    y = gp.DissimilarityMatrix([[0, 2], [2, 0]])
    assert gp.gh_exact(x, y) == pytest.approx(0.5)
    line = gp.DissimilarityMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    assert gp.hausdorff([0], [0, 1], line) == pytest.approx(1.0)
    with pytest.raises(RuntimeError):
        gp.gh_exact(gp.gen_circle(12, 1.0), gp.gen_circle(12, 1.0))


def test_witness_counterexample_window():
    reports = gp.verify("witness-counterexample", delta=0.1)
    assert len(reports) == 1
    assert reports[0]["passed"]


def test_verify_dispatch():
    names = gp.verification_names()
    assert "dowker" in names
    reports = gp.verify("dowker", trials=3, seed=11)
    assert all(r["passed"] for r in reports)
    with pytest.raises(ValueError):
        gp.verify("made-up-theorem")
