import math

import numpy as np
import pytest

import sgc


def cycle4():
    return sgc.Graph.from_edges(4, [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)])


def test_graph_basics():
    g = sgc.Graph.from_edges(3, [(0, 1, 1.0), (1, 2, 2.0), (2, 1, 0.5)])
    assert g.num_nodes == 3
    assert g.num_edges == 2
    assert g.weight(1, 2) == 2.5
    assert g.edges() == [(0, 1, 1.0), (1, 2, 2.5)]
    np.testing.assert_array_equal(g.degrees(), [1.0, 3.5, 2.5])
    assert g.is_connected()
    with pytest.raises(ValueError):
        sgc.Graph.from_edges(2, [(0, 5, 1.0)])


def test_fitness_and_coarsen():
    g = cycle4()
    assert sgc.edge_fitness(g, 0, 2) == 0.0
    fit = sgc.all_fitness(g, threads=2)
    assert [(u, v) for u, v, _ in fit] == [(0, 1), (0, 3), (1, 2), (2, 3)]

    p3 = sgc.Graph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])
    r = sgc.approximate_greedy_coarsen(p3, 1)
    assert r.log.s == 2
    assert r.coarse.weight(0, 0) == 4.0
    assert r.bound == pytest.approx(3 * r.log.eps_max)
    e = sgc.explicit_greedy_coarsen(p3, 2)
    assert e.partition == sgc.approximate_greedy_coarsen(p3, 2).partition
    with pytest.raises(ValueError):
        sgc.approximate_greedy_coarsen(p3, 0)


def test_lift_of_twin_merge_is_exact():
    g = cycle4()
    part = sgc.Partition(4)
    assert part.unite(0, 2)
    lifted = sgc.lift(sgc.contract(g, part), part, 4)
    assert lifted == g
    report = sgc.verify_partition(g, part, k=2)
    assert report.gap <= 1e-9
    assert report.bound is None


def test_spectrum_and_bound():
    p3 = sgc.Graph.from_edges(3, [(0, 1, 1.0), (1, 2, 1.0)])
    np.testing.assert_allclose(sgc.eigenvalues(p3), [0.0, 1.0, 2.0], atol=1e-9)
    values, vectors = sgc.spectrum(p3)
    lap = sgc.normalized_laplacian(p3)
    np.testing.assert_allclose(vectors.T @ np.diag(values) @ vectors, lap, atol=1e-10)

    g = sgc.gen_erdos_renyi(12, 0.4, 0.5, 1.5, seed=3)
    r = sgc.approximate_greedy_coarsen(g, 6, threads=2)
    report = sgc.verify(g, r, k=5)
    assert report.satisfied is True
    assert report.gap <= report.bound + 1e-9
    assert report.alignment.shape == (5, 5)
    lifted = sgc.lift(r.coarse, r.partition, g.num_nodes)
    assert sgc.eigenvalue_gap(sgc.eigenvalues(g), sgc.eigenvalues(lifted)) == pytest.approx(report.gap)


def test_generators_and_work_model():
    grid = sgc.gen_grid(3, 3)
    assert grid.num_edges == 12
    assert sgc.second_moment(sgc.gen_grid(2, 2)) == 4.0
    pl = sgc.gen_powerlaw(500, 3, 1)
    assert pl == sgc.gen_powerlaw(500, 3, 1)
    assert sum(sgc.chunk_work(pl, 4)) == sgc.sum_squared_degrees(pl)
    assert sgc.imbalance(sgc.gen_grid(64, 64), 8) < sgc.imbalance(pl, 8)
    assert sgc.nodes_for_ratio(101, 0.5) == 51
    a = sgc.approximate_greedy_coarsen(pl, 250, threads=1)
    b = sgc.approximate_greedy_coarsen(pl, 250, threads=4)
    assert sgc.result_hash(a) == sgc.result_hash(b)


def test_io_roundtrip(tmp_path):
    g = sgc.gen_erdos_renyi(20, 0.3, 0.1, 9.0, seed=4)
    path = tmp_path / "g.txt"
    sgc.save_graph(g, path)
    assert sgc.load_graph(path, "weighted-edgelist").graph == g

    snap = tmp_path / "s.txt"
    snap.write_text("# c\n10 20\n20 30\n")
    loaded = sgc.load_graph(snap, "snap-edgelist")
    assert loaded.original_ids == [10, 20, 30]
    assert loaded.graph.num_edges == 2

    bad = tmp_path / "bad.txt"
    bad.write_text("0 x\n")
    with pytest.raises(sgc.ParseError):
        sgc.load_graph(bad, "snap-edgelist")
    with pytest.raises(OSError):
        sgc.load_graph(tmp_path / "missing.txt", "snap-edgelist")
    with pytest.raises(ValueError):
        sgc.load_graph(path, "csv")


def test_disconnected_graph_rejected():
    g = sgc.Graph.from_edges(4, [(0, 1, 1.0), (2, 3, 1.0)])
    with pytest.raises(sgc.GraphError):
        sgc.approximate_greedy_coarsen(g, 2)
    assert issubclass(sgc.GraphError, sgc.Error)
    assert not math.isnan(sgc.spectral_error_bound(sgc.approximate_greedy_coarsen(cycle4(), 4).log))
