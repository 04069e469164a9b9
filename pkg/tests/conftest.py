import itertools
import random

from cbtk.monomials import Monomial, MonomialIdeal


def degree_sequences(max_entry, max_h, min_h=1):
    """All ascending degree sequences with entries in 1..max_entry."""
    for h in range(min_h, max_h + 1):
        yield from itertools.combinations_with_replacement(range(1, max_entry + 1), h)


def random_ideal(rng: random.Random, nvars=None, max_gens=6, max_exp=5) -> MonomialIdeal:
    n = nvars if nvars is not None else rng.randint(1, 5)
    gens = []
    for _ in range(rng.randint(0, max_gens)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(exps):
            gens.append(Monomial(exps))
    return MonomialIdeal(tuple(gens), n)


def random_monomial(rng: random.Random, nvars, max_exp=5) -> Monomial:
    return Monomial(tuple(rng.randint(0, max_exp) for _ in range(nvars)))
