import random

import pytest

from quadcomplex.algebra.matrix import Matrix
from quadcomplex.algebra.scalar import Scalar


def random_scalar(rng, span=6, gaussian=True, nonzero=False):
    while True:
        num = Scalar(rng.randint(-span, span),
                     rng.randint(-2, 2) if gaussian else 0,
                     rng.randint(1, 3))
        if num or not nonzero:
            return num


def random_congruence(rng, size=6, steps=8, gaussian=True):
    """Product of elementary shears and swaps; determinant is a unit."""
    m = Matrix.identity(size)
    for _ in range(steps):
        i, j = rng.sample(range(size), 2)
        rows = [[Scalar(1 if r == s else 0) for s in range(size)]
                for r in range(size)]
        rows[i][j] = Scalar(rng.randint(-2, 2),
                            rng.randint(-1, 1) if gaussian else 0)
        m = m * Matrix(rows)
    return m


def random_symmetric(rng, size=6, span=4):
    a = [[random_scalar(rng, span) for _ in range(size)] for _ in range(size)]
    return Matrix([[a[i][j] + a[j][i] for j in range(size)] for i in range(size)])


@pytest.fixture
def rng():
    return random.Random(20260810)
