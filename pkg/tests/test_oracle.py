import random

import pytest

pytest.importorskip("scipy")

from wres.oracle import line_deviation, monte_carlo_moment, random_admissible, run_oracle  # noqa: E402
from wres.sphere import even_moment  # noqa: E402


def test_random_admissible_decays():
    rng = random.Random(7)
    for _ in range(20):
        assert random_admissible(rng).degree <= -2


def test_line_deviation_small():
    rng = random.Random(1)
    assert max(line_deviation(random_admissible(rng)) for _ in range(10)) < 1e-9


def test_monte_carlo_moment():
    import numpy as np

    mean, se = monte_carlo_moment((2, 0, 2), 100_000, np.random.default_rng(3))
    assert abs(mean - float(even_moment((2, 0, 2), 3))) < 4 * se


def test_short_run():
    rep = run_oracle(seed=2, trials=5, samples=50_000)
    assert rep.passed
