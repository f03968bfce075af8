import random
from fractions import Fraction

import numpy as np

from qcliff.cyclotomic import root_of_unity
from qcliff.monomial import LocalMonomial, OperatorSum, slot_operator


def random_monomial(rng: random.Random, n: int, conductor: int) -> LocalMonomial:
    perm = list(range(n))
    rng.shuffle(perm)
    phases = []
    for _ in range(n):
        k = rng.randrange(conductor)
        scale = Fraction(rng.randint(1, 3), rng.randint(1, 2))
        phases.append(root_of_unity(conductor, k).scale(scale))
    return LocalMonomial(n, tuple(perm), tuple(phases))


def random_slot_operator(rng: random.Random, n: int, conductor: int, slots: int):
    factors = {}
    for s in range(slots):
        if rng.random() < 0.7:
            factors[s] = random_monomial(rng, n, conductor)
    scalar = root_of_unity(conductor, rng.randrange(conductor)).scale(
        Fraction(rng.randint(-3, 3) or 1, rng.randint(1, 2))
    )
    return slot_operator(n, conductor, scalar, factors)


def random_operator_sum(
    rng: random.Random, n: int, conductor: int, slots: int, max_terms: int
) -> OperatorSum:
    terms = [
        random_slot_operator(rng, n, conductor, slots)
        for _ in range(rng.randint(1, max_terms))
    ]
    return OperatorSum.from_terms(n, conductor, terms)


def max_abs(mat: np.ndarray) -> float:
    return float(np.max(np.abs(mat))) if mat.size else 0.0
