import random

from seacurves.forms import BinaryForm, Matrix2
from seacurves.scalars import Scalar, rational


def rand_scalar(rng: random.Random, height: int = 10) -> Scalar:
    return Scalar(rng.randint(-height, height))


def rand_rational(rng: random.Random, height: int = 9) -> Scalar:
    return rational(rng.randint(-height, height), rng.randint(1, height))


def rand_form(rng: random.Random, degree: int, height: int = 10) -> BinaryForm:
    while True:
        f = BinaryForm(degree, [rand_scalar(rng, height) for _ in range(degree + 1)])
        if not f.is_zero:
            return f


def unimodular_matrix(rng: random.Random, steps: int = 4) -> Matrix2:
    # word in elementary shears: det = 1, small integer entries
    m = Matrix2(1, 0, 0, 1)
    for _ in range(steps):
        k = rng.choice([-2, -1, 1, 2])
        s = Matrix2(1, k, 0, 1) if rng.random() < 0.5 else Matrix2(1, 0, k, 1)
        m = m @ s
    return m


def invertible_matrix(rng: random.Random, height: int = 5) -> Matrix2:
    while True:
        m = Matrix2(*(rand_rational(rng, height) for _ in range(4)))
        if not m.det().is_zero:
            return m
