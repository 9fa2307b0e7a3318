import numpy as np
import pytest
from hypothesis import given, strategies as st

from clairvoyant.rng import RngSpec
from clairvoyant.runner import chunk_bounds, run_chunked
from clairvoyant.stats import Estimate


def test_rng_reproducible():
    a = RngSpec(1234, 7).generator().random(100)
    b = RngSpec(1234, 7).generator().random(100)
    assert (a == b).all()


def test_rng_streams_differ():
    base = RngSpec(1234)
    draws = [base.stream(k).generator().random(8) for k in range(20)]
    for i in range(20):
        for j in range(i + 1, 20):
            assert not (draws[i] == draws[j]).all()


def test_rng_seed_matters():
    a = RngSpec(1, 0).generator().random(8)
    b = RngSpec(2, 0).generator().random(8)
    assert not (a == b).all()


def test_rng_rejects_negative_stream():
    with pytest.raises(ValueError):
        RngSpec(1, -1)
    assert RngSpec(1).stream(3).stream_id == 3


def test_estimate_from_samples():
    est = Estimate.from_samples([0, 1, 1, 0], RngSpec(0))
    assert est.mean == 0.5
    assert est.replicas == 4
    assert est.stderr == pytest.approx(np.std([0, 1, 1, 0], ddof=1) / 2)
    single = Estimate.from_samples([1], RngSpec(0))
    assert single.stderr == 0.0
    with pytest.raises(ValueError):
        Estimate.from_samples([], RngSpec(0))


def test_estimate_agrees():
    est = Estimate.from_samples([0, 1, 1, 1], RngSpec(0))
    assert est.agrees(est.mean)
    assert est.agrees(est.mean + 2 * est.stderr)
    assert not est.agrees(est.mean + 4 * est.stderr)
    exact = Estimate.from_samples([1, 1, 1], RngSpec(0))
    assert exact.agrees(1.0)          # zero spread still matches itself


@given(st.integers(1, 500), st.integers(1, 16))
def test_chunk_bounds_partition(replicas, workers):
    bounds = chunk_bounds(replicas, workers)
    assert bounds[0][0] == 0
    assert bounds[-1][1] == replicas
    for (a, b), (c, d) in zip(bounds, bounds[1:]):
        assert b == c and a < b and c < d
    sizes = [b - a for a, b in bounds]
    assert max(sizes) - min(sizes) <= 1
    assert len(bounds) == min(replicas, workers)


def test_chunk_bounds_validation():
    with pytest.raises(ValueError):
        chunk_bounds(0, 2)
    with pytest.raises(ValueError):
        chunk_bounds(5, 0)


def _identity_chunk(lo, hi):
    return np.arange(lo, hi)


def test_run_chunked_order_independent_of_workers():
    want = np.arange(137)
    for workers in (1, 2, 5, 8):
        got = run_chunked(_identity_chunk, 137, workers)
        assert (got == want).all()
