import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from qlorentz.algebras import nonrelativistic_algebra, relativistic_algebra
from qlorentz.opalg import OpExpr
from qlorentz.scalar import Gauss, Scalar

sys.path.insert(0, str(Path(__file__).parent))

REL_FACTORS = [("t", 1), ("t", 2), ("x", 1), ("x", 2), ("p", 1), ("p", 2),
               ("H", 1), ("H", 2), ("H", -1), ("H", -2)]
NONREL_FACTORS = [("x", 1), ("x", 2), ("p", 1), ("p", 2), ("p", -1), ("p", -2)]


@pytest.fixture(scope="session")
def rel():
    return relativistic_algebra()


@pytest.fixture(scope="session")
def nonrel():
    return nonrelativistic_algebra()


small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def scalars(draw):
    terms = {}
    for _ in range(draw(st.integers(1, 2))):
        mono = tuple(draw(st.integers(-2, 2)) for _ in range(3))
        terms[mono] = Gauss(draw(small_fraction), draw(small_fraction))
    return Scalar(terms)


def _words(factors, max_degree):
    @st.composite
    def build(draw):
        word = []
        degree = 0
        for _ in range(draw(st.integers(0, max_degree))):
            f = draw(st.sampled_from(factors))
            if degree + abs(f[1]) > max_degree:
                break
            word.append(f)
            degree += abs(f[1])
        return tuple(word)

    return build()


def expressions(spec, factors, max_degree=4, max_terms=3):
    @st.composite
    def build(draw):
        terms = {}
        for _ in range(draw(st.integers(1, max_terms))):
            terms[draw(_words(factors, max_degree))] = Scalar.number(draw(small_fraction), draw(small_fraction))
        return OpExpr(terms, spec.names)

    return build()


rel_exprs = expressions(relativistic_algebra(), REL_FACTORS)
nonrel_exprs = expressions(nonrelativistic_algebra(), NONREL_FACTORS)


def random_rel_expression(rng: random.Random, max_degree: int = 6) -> OpExpr:
    """Seeded random expression of total degree <= max_degree (for fixed-count sweeps)."""
    spec = relativistic_algebra()
    terms = {}
    for _ in range(rng.randint(1, 3)):
        word, degree = [], 0
        while True:
            f = rng.choice(REL_FACTORS)
            if degree + abs(f[1]) > max_degree or rng.random() < 0.15:
                break
            word.append(f)
            degree += abs(f[1])
        coeff = Scalar({
            tuple(rng.randint(-1, 1) for _ in range(3)): Gauss(Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                                                          Fraction(rng.randint(-2, 2), rng.randint(1, 2)))
        })
        terms[tuple(word)] = coeff
    return OpExpr(terms, spec.names)
