"""Random well-formed expressions for parser round-trip tests."""

import random

from cofin.sampling import random_finite_set, random_upset
from cofin.syntax import (
    CALLS, CONSTS, PREFIXES, QWORDS, RELATIONS, Apply, Binary, Call, Const,
    Query, SetLit, Var,
)


def random_expr(rng: random.Random, depth: int = 3):
    if depth == 0 or rng.random() < 0.25:
        roll = rng.random()
        if roll < 0.5:
            return SetLit(random_upset(rng))
        if roll < 0.7:
            return Const(rng.choice(CONSTS + ("0", "sigma")))
        if roll < 0.8:
            return Call("sigma", (SetLit(random_finite_set(rng)),))
        return Var(rng.choice(["A", "B", "x1", "f_2"]))
    roll = rng.random()
    sub = lambda: random_expr(rng, depth - 1)
    if roll < 0.3:
        fn = rng.choice(sorted(CALLS))
        return Call(fn, tuple(sub() for _ in range(CALLS[fn])))
    if roll < 0.5:
        return Apply(rng.choice(PREFIXES + ("!",)), sub())
    if roll < 0.8:
        return Binary(rng.choice(["|", "&", "-", "->?"]), sub(), sub())
    if roll < 0.9:
        return Query(rng.choice(QWORDS), (sub(),))
    return Query(rng.choice(RELATIONS), (sub(), sub()))


def corpus(n: int = 200, seed: int = 7) -> list:
    rng = random.Random(seed)
    return [random_expr(rng, rng.randint(1, 4)) for _ in range(n)]
