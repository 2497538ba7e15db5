"""Shared test utilities: random homogeneous data and oracle adapters."""
import random

from homolab.monomials import monomials_of_degree
from homolab.rings import QuotientRing

from oracle import Presented


def presented(M) -> Presented:
    R = M.ring
    return Presented(R.nvars, R.p, R.ideal_gens, M.gen_degrees, M.relations)


def random_form(rng: random.Random, n: int, d: int, p: int, terms: int = 3) -> dict:
    ms = list(monomials_of_degree(n, d))
    f = {}
    for m in rng.sample(ms, min(terms, len(ms))):
        c = rng.randrange(1, p)
        f[tuple(m)] = c
    return f


def random_ideal(rng: random.Random, n: int, p: int, count: int = 3, degs=(2, 3)) -> list:
    return [random_form(rng, n, rng.choice(degs), p, rng.randint(1, 3)) for _ in range(count)]


def ring(p, names, ideal=()):
    return QuotientRing.polynomial(p, list(names), list(ideal))
