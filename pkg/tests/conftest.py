"""Shared sampling helpers for the test suite."""

import numpy as np
import pytest

from trunctet import sample_O_batch


@pytest.fixture(scope="session")
def acute_points():
    """A reusable batch of angle tuples from the acute region."""
    rng = np.random.default_rng(20260826)
    return sample_O_batch(rng, 500, constraint="acute")


@pytest.fixture(scope="session")
def interior_points():
    """A reusable batch of angle tuples from the full polytope interior."""
    rng = np.random.default_rng(20260827)
    return sample_O_batch(rng, 500, constraint="interior")
