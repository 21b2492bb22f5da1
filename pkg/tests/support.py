"""Shared helpers for the test suite."""

import random

from ffyb.gf import Field, all_elements
from ffyb.matfq import Matrix


def random_matrix(rng: random.Random, field: Field, n: int) -> Matrix:
    elems = all_elements(field)
    return Matrix(field, [[rng.choice(elems) for _ in range(n)] for _ in range(n)])


def random_invertible(rng: random.Random, field: Field, n: int) -> Matrix:
    while True:
        m = random_matrix(rng, field, n)
        if not m.det().is_zero():
            return m
