"""Shared helpers for the test suite: seeded random element builders and
hypothesis strategies sized to keep exact arithmetic fast."""

from __future__ import annotations

import random
from fractions import Fraction

import hypothesis.strategies as st

from cuntzgeo import AlgElem, GScalar, Metric, Monomial, OneForm, TensorElem

# ---------------------------------------------------------------------------
# seeded random builders (used where exact repetition counts matter)
# ---------------------------------------------------------------------------

def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-3, 3), rng.randint(1, 4))


def random_gscalar(rng: random.Random, nonzero: bool = False) -> GScalar:
    while True:
        c = GScalar(random_fraction(rng),
                    random_fraction(rng) if rng.random() < 0.3 else Fraction(0))
        if c or not nonzero:
            return c


def random_word(rng: random.Random, max_len: int = 3) -> tuple[int, ...]:
    return tuple(rng.randint(1, 3) for _ in range(rng.randint(0, max_len)))


def random_elem(rng: random.Random, max_terms: int = 4,
                max_len: int = 3, max_degree: int | None = None) -> AlgElem:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        if max_degree is None:
            mu, nu = random_word(rng, max_len), random_word(rng, max_len)
        else:
            lm = rng.randint(0, max_degree)
            ln = rng.randint(0, max_degree - lm)
            mu = tuple(rng.randint(1, 3) for _ in range(lm))
            nu = tuple(rng.randint(1, 3) for _ in range(ln))
        terms[Monomial(mu, nu)] = random_gscalar(rng, nonzero=True)
    return AlgElem.from_terms(terms)


def random_one_form(rng: random.Random) -> OneForm:
    return OneForm(tuple(random_elem(rng, max_terms=2, max_len=2)
                         for _ in range(3)))


def random_rank2(rng: random.Random, scalar: bool = False) -> TensorElem:
    entries = {}
    for _ in range(rng.randint(0, 5)):
        idx = (rng.randint(1, 3), rng.randint(1, 3))
        if scalar:
            entries[idx] = AlgElem.scalar(random_gscalar(rng, nonzero=True))
        else:
            entries[idx] = random_elem(rng, max_terms=2, max_len=2)
    return TensorElem.from_entries(2, entries)


def random_metric(rng: random.Random) -> Metric:
    """A random symmetric invertible metric with small rational entries."""
    while True:
        a = [[Fraction(0)] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i, 3):
                v = Fraction(rng.randint(-2, 3), rng.randint(1, 3))
                a[i][j] = a[j][i] = v
        rows = tuple(tuple(GScalar(x, Fraction(0)) for x in row) for row in a)
        det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
               - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
               + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
        if det:
            return Metric(rows)


# ---------------------------------------------------------------------------
# hypothesis strategies
# ---------------------------------------------------------------------------

small_fractions = st.fractions(min_value=-3, max_value=3, max_denominator=4)

gscalars = st.builds(GScalar, small_fractions, small_fractions)

nonzero_gscalars = gscalars.filter(bool)

words = st.lists(st.integers(min_value=1, max_value=3), max_size=3).map(tuple)

monomials = st.builds(Monomial, words, words)

alg_elems = st.dictionaries(monomials, nonzero_gscalars, max_size=4).map(
    AlgElem.from_terms)

small_alg_elems = st.dictionaries(
    st.builds(Monomial,
              st.lists(st.integers(1, 3), max_size=2).map(tuple),
              st.lists(st.integers(1, 3), max_size=2).map(tuple)),
    nonzero_gscalars, max_size=3).map(AlgElem.from_terms)

one_forms = st.tuples(small_alg_elems, small_alg_elems, small_alg_elems).map(OneForm)

rank2_tensors = st.dictionaries(
    st.tuples(st.integers(1, 3), st.integers(1, 3)),
    small_alg_elems.filter(lambda a: not a.is_zero()),
    max_size=4,
).map(lambda d: TensorElem.from_entries(2, d))
