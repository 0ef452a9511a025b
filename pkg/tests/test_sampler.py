import numpy as np
import pytest
from scipy import stats

from plantedcycles import (ColoredGraph, ModelParams, cycle_count_stats,
                           cycle_type_stats, rng_for, sample_instance,
                           sample_single_cycle, sample_two_factor)
from plantedcycles.harness import enumerate_two_factors

from conftest import complete_graph


def test_triangle_support():
    tf = sample_two_factor([4, 7, 9], rng_for(0))
    assert tf.edges == {(4, 7), (4, 9), (7, 9)}
    with pytest.raises(ValueError):
        sample_two_factor([0, 1], rng_for(0))


def test_two_factor_always_valid(rng):
    for _ in range(50):
        m = int(rng.integers(3, 12))
        tf = sample_two_factor(range(m), rng)
        assert len(tf.support) == m
        assert all(len(c) >= 3 for c in tf.cycles())


def test_uniformity_per_labeled_two_factor():
    # chi-square over all 70 labeled 2-factors on 6 vertices
    factors = enumerate_two_factors(complete_graph(6), 6)
    assert len(factors) == 70
    index = {f.edges: i for i, f in enumerate(factors)}
    rng = rng_for(100)
    n_draws = 35000
    counts = np.zeros(len(factors))
    for _ in range(n_draws):
        counts[index[sample_two_factor(range(6), rng).edges]] += 1
    expected = n_draws / len(factors)
    chi2 = float(np.sum((counts - expected) ** 2 / expected))
    assert stats.chi2.sf(chi2, df=len(factors) - 1) > 1e-3


def test_single_cycle_variant(rng):
    tf = sample_single_cycle(range(8), rng)
    assert len(tf.cycles()) == 1 and len(tf.support) == 8


def test_single_cycle_lower_bound():
    # a uniform cover on m vertices is a single cycle w.p. >= 1/m
    rng = rng_for(4)
    hist = cycle_count_stats(4000, 8, rng)
    frac = hist[1] / sum(hist.values())
    assert frac >= 1 / 8


def test_cycle_count_bounds():
    hist = cycle_count_stats(300, 3, rng_for(1))
    assert hist == {1: 300}
    hist8 = cycle_count_stats(5000, 8, rng_for(2))
    total = sum(hist8.values())
    for ell in (1, 2):
        emp = sum(v for k, v in hist8.items() if k <= ell) / total
        assert emp >= 1 / (1 + 8 * 2 ** -ell)


def test_instance_lambda_small():
    # background probability ~0: the observation is exactly the planted cover
    params = ModelParams(n=40, lam=1e-9, delta=1.0)
    g, h_star = sample_instance(params, rng_for(3))
    assert g.edges == h_star.edges == g.planted


def test_instance_delta_one_support():
    params = ModelParams(n=30, lam=0.5, delta=1.0)
    g, h_star = sample_instance(params, rng_for(5))
    assert h_star.support == frozenset(range(30))


def test_instance_blue_mean():
    params = ModelParams(n=400, lam=0.5, delta=0.5)
    counts = [len(sample_instance(params, rng_for(6, 0, t))[0].blue_edges)
              for t in range(200)]
    npairs = 400 * 399 // 2
    expected = (npairs - 200) * 0.5 / 400
    se = np.std(counts) / np.sqrt(len(counts))
    assert abs(np.mean(counts) - expected) <= 3 * se


def test_instance_determinism_byte_exact():
    params = ModelParams(n=60, lam=0.4, delta=0.8)
    a, _ = sample_instance(params, rng_for(9, 2, 3))
    b, _ = sample_instance(params, rng_for(9, 2, 3))
    assert a.dumps() == b.dumps()
    c, _ = sample_instance(params, rng_for(9, 2, 4))
    assert c.dumps() != a.dumps()


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(n=10, lam=0.5, delta=0.2)       # floor(delta n) = 2 < 3
    with pytest.raises(ValueError):
        ModelParams(n=10, lam=11, delta=1.0)        # edge probability > 1
    with pytest.raises(ValueError):
        ModelParams(n=10, lam=0.0, delta=1.0)


def test_cycle_type_stats_m5():
    hist = cycle_type_stats(500, 5, rng_for(8))
    assert set(hist) == {(5,)}


def test_single_cycle_variant_instance():
    params = ModelParams(n=24, lam=0.3, delta=0.75, variant="single-cycle")
    _, h_star = sample_instance(params, rng_for(12))
    assert len(h_star.cycles()) == 1
    assert len(h_star.support) == 18
