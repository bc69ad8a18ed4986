"""Shared fixtures and independent reference implementations.

The reference objective here is deliberately written differently from the
library (position-indexed completion times via accumulate) so that tests
cross-check rather than mirror the production code.
"""

import itertools
import random

import pytest

from smtwtp_vnd import Instance


def ref_objective(instance: Instance, order) -> int:
    """From-scratch weighted tardiness, independent of the library's code."""
    completions = list(itertools.accumulate(instance.processing[j] for j in order))
    total = 0
    for pos, j in enumerate(order):
        total += instance.weight[j] * max(0, completions[pos] - instance.due[j])
    return total


def exhaustive_objectives(instance: Instance) -> dict[tuple[int, ...], int]:
    """Objective of every permutation, for instances small enough."""
    return {
        perm: ref_objective(instance, perm)
        for perm in itertools.permutations(range(instance.n))
    }


def random_instance(rng: random.Random, n: int) -> Instance:
    return Instance(
        processing=tuple(rng.randint(1, 20) for _ in range(n)),
        weight=tuple(rng.randint(1, 10) for _ in range(n)),
        due=tuple(rng.randint(0, 12 * n) for _ in range(n)),
    )


@pytest.fixture
def tiny_instance() -> Instance:
    """Three jobs; global optimum 5 at (0, 1, 2), worst value 8."""
    return Instance(processing=(3, 1, 2), weight=(2, 1, 1), due=(2, 4, 3))
