"""Seeded random sampling helpers shared by the test suites and the CLI."""

from __future__ import annotations

import random

from .rootdata import RootDatum
from .poly import Laurent
from . import hecke, weyl
from .hecke import HeckeElt


def random_weight(rng: random.Random, datum: RootDatum, bound: int = 3):
    return tuple(rng.randint(-bound, bound) for _ in range(datum.rank))


def random_laurent(rng: random.Random, max_exp: int = 2, max_coeff: int = 3) -> Laurent:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            e = rng.randint(-max_exp, max_exp)
            terms[e] = terms.get(e, 0) + c
    poly = Laurent(terms)
    return poly if poly else Laurent.one()


def random_weyl(rng: random.Random, datum: RootDatum, max_len: int = 4):
    word = [rng.randrange(datum.rank) for _ in range(rng.randint(0, max_len))]
    return weyl.from_word(datum, word)


def random_hecke(rng: random.Random, datum: RootDatum, max_terms: int = 3,
                 weight_bound: int = 2, max_exp: int = 2) -> HeckeElt:
    out = hecke.zero(datum)
    for _ in range(rng.randint(1, max_terms)):
        x = random_weight(rng, datum, weight_bound)
        w = random_weyl(rng, datum)
        c = random_laurent(rng, max_exp)
        out = out + HeckeElt(datum, {(datum.check_weight(x), w): c})
    return out if not out.is_zero() else hecke.unit(datum)
