"""Entropy primitives and the unpredictability measure."""
import math

import numpy as np
import pytest

from netrank import ComputationError, renyi_unpredictability, shannon


def random_simplex(rng, n):
    p = rng.uniform(0.01, 1.0, size=n)
    return p / p.sum()


def test_shannon_uniform():
    assert shannon([0.25, 0.25, 0.25, 0.25], base=2.0) == pytest.approx(2.0, abs=1e-12)


def test_shannon_one_hot():
    assert shannon([1.0, 0.0, 0.0], base=2.0) == 0.0


def test_shannon_natural_base():
    # -0.5 ln 0.5 - 2 * 0.25 ln 0.25 = 1.5 ln 2
    value = shannon([0.5, 0.25, 0.25], base=math.e)
    assert value == pytest.approx(1.5 * math.log(2.0), rel=1e-12)


def test_shannon_rejects_unnormalized():
    with pytest.raises(ComputationError, match="sum to 1"):
        shannon([0.5, 0.6])


def test_shannon_rejects_negative():
    with pytest.raises(ComputationError, match="nonnegative"):
        shannon([1.5, -0.5])


def test_shannon_rejects_bad_base():
    with pytest.raises(ComputationError, match="base"):
        shannon([0.5, 0.5], base=1.0)


@pytest.mark.parametrize("n", [2, 4, 8, 16])
def test_renyi_uniform_is_log2_n(n):
    h = renyi_unpredictability(np.full(n, 1.0 / n), alpha=3.0)
    assert h.value == pytest.approx(math.log2(n), abs=1e-12)
    assert h.n == n


def test_renyi_one_hot_is_zero():
    h = renyi_unpredictability([1.0, 0.0, 0.0, 0.0], alpha=3.0)
    assert h.value == pytest.approx(0.0, abs=1e-12)


def test_renyi_alpha_near_one_matches_shannon():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = random_simplex(rng, int(rng.integers(2, 12)))
        h = renyi_unpredictability(p, alpha=1.0 + 1e-6)
        assert abs(h.value - shannon(p, base=2.0)) < 1e-4


def test_renyi_rejects_alpha_one():
    with pytest.raises(ComputationError, match="differ from 1"):
        renyi_unpredictability([0.5, 0.5], alpha=1.0)


def test_renyi_rejects_nonpositive_alpha():
    with pytest.raises(ComputationError, match="positive"):
        renyi_unpredictability([0.5, 0.5], alpha=0.0)


def test_renyi_rejects_unnormalized():
    with pytest.raises(ComputationError, match="sum to 1"):
        renyi_unpredictability([0.2, 0.2], alpha=3.0)


def test_uniform_maximizes_unpredictability():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(2, 10))
        uniform = np.full(n, 1.0 / n)
        h_uniform = renyi_unpredictability(uniform, alpha=3.0).value
        h_random = renyi_unpredictability(random_simplex(rng, n), alpha=3.0).value
        assert h_uniform >= h_random - 1e-12
        assert 0.0 <= h_random <= math.log2(n) + 1e-12


def test_permutation_invariance():
    rng = np.random.default_rng(6)
    p = random_simplex(rng, 7)
    h = renyi_unpredictability(p, alpha=3.0).value
    for _ in range(10):
        perm = rng.permutation(7)
        assert renyi_unpredictability(p[perm], alpha=3.0).value == pytest.approx(h, abs=1e-12)


def test_mixing_toward_uniform_never_decreases():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(2, 10))
        p = random_simplex(rng, n)
        uniform = np.full(n, 1.0 / n)
        values = [
            renyi_unpredictability((1 - t) * p + t * uniform, alpha=3.0).value
            for t in np.linspace(0.0, 1.0, 11)
        ]
        assert all(b >= a - 1e-10 for a, b in zip(values, values[1:]))
