import random

from hypothesis import given, strategies as st

from conftest import filters, upsets
from cofin import filt
from cofin.corpus import filter_member
from cofin.filt import (
    DISCRETE, FRECHET, INDISCRETE, FilterRep, c_filter, double_neg, dualize,
    implication_counterexample, implication_member, is_dense, join,
    join_obstruction, join_witness, meet, member, neg, subfilter,
    subfilter_witness, u_filter,
)
from cofin.upset import EMPTY, EVENS, NATURALS, ODDS, UpSet, complement

seeds = st.integers(0, 2**32)


def members(f, seed, k=6):
    rng = random.Random(seed)
    return [filter_member(rng, f) for _ in range(k)]


def test_constants_and_literals():
    assert FRECHET == c_filter(EMPTY) and str(FRECHET) == "frechet"
    assert DISCRETE == u_filter(EMPTY) and INDISCRETE == u_filter(NATURALS)
    assert str(u_filter(EVENS)) == "U(2k..)"
    assert str(c_filter(UpSet.finite([1, 3]))) == "C({1,3})"
    assert str(join(u_filter(EVENS), c_filter(UpSet.finite([1])))) == "phi({};2k..)"


@given(upsets(), upsets())
def test_join_of_principal_and_cofinite(a, b):
    j = join(u_filter(a), c_filter(b))
    assert j == FilterRep.phi(a & b, a)


@given(upsets())
def test_limits(a):
    assert filt.limit(u_filter(a)) == a == filt.limit(c_filter(a))
    assert member(a, u_filter(a)) and member(a, c_filter(a)) == a.is_cofinite


@given(filters, seeds)
def test_members_are_members(f, seed):
    assert all(member(w, f) for w in members(f, seed))
    assert member(NATURALS, f)


@given(filters, filters, upsets(), seeds)
def test_meet_membership(f, g, w, seed):
    m = meet(f, g)
    for x in [w] + members(f, seed, 3) + members(g, seed, 3):
        assert member(x, m) == (member(x, f) and member(x, g))


@given(filters, filters, upsets(), seeds)
def test_join_witness_or_obstruction(f, g, w, seed):
    j = join(f, g)
    assert all(member(x, j) for x in members(f, seed, 3) + members(g, seed, 3))
    pair = join_witness(w, f, g)
    if member(w, j):
        a, b = pair
        assert member(a, f) and member(b, g) and (a & b) <= w
        assert join_obstruction(w, f, g) is None
    else:
        assert pair is None
        z = join_obstruction(w, f, g)
        assert not z.is_empty and (z & w).is_empty
        # every U in f and V in g still meet z
        for a, b in zip(members(f, seed), members(g, seed + 1)):
            assert not (a & b & z).is_empty


@given(filters, filters, seeds)
def test_subfilter_witness(f, g, seed):
    w = subfilter_witness(f, g)
    if subfilter(f, g):
        assert w is None
        assert all(member(x, g) for x in members(f, seed))
    else:
        assert member(w, f) and not member(w, g)


@given(filters, filters, upsets(), seeds)
def test_implication(f, g, b, seed):
    cex = implication_counterexample(b, f, g)
    if implication_member(b, f, g):
        assert cex is None
        assert all(member(b | x, g) for x in members(f, seed))
    else:
        assert member(cex, f) and not member(b | cex, g)


@given(filters, upsets())
def test_negation_is_implication_to_bottom(f, b):
    assert member(b, neg(f)) == implication_member(b, f, INDISCRETE)
    assert member(b, double_neg(f)) == implication_member(b, neg(f), INDISCRETE)


@given(filters)
def test_density(f):
    assert is_dense(f) == (double_neg(f) == DISCRETE) == (neg(f) == INDISCRETE)


@given(filters, upsets())
def test_frechet_implication_is_double_negation(f, b):
    assert implication_member(b, FRECHET, f) == member(b, double_neg(f))


@given(filters, upsets())
def test_cofinite_adjunctions(f, a):
    assert subfilter(c_filter(a), f) == (f.P <= a)
    assert subfilter(f, u_filter(a)) == (a <= f.P)
    assert meet(c_filter(a), f) == c_filter(a | f.P)


@given(filters, filters)
def test_lattice_laws(f, g):
    assert subfilter(meet(f, g), f) and subfilter(f, join(f, g))
    assert meet(f, join(f, g)) == f == join(f, meet(f, g))


@given(filters, upsets())
def test_bornology_duality(f, a):
    b = dualize(f)
    assert dualize(b) == f
    assert (a in b) == member(complement(a), f)
    assert filt.extent_born(b) == complement(f.P)
    assert str(b) == f"born {f}"


def test_bornology_of_frechet_is_finite_sets():
    b = dualize(FRECHET)
    assert UpSet.finite([1, 5]) in b
    assert EVENS not in b and ODDS not in b


@given(upsets())
def test_cofinite_filter_of_coinfinite_set(a):
    # C(A) has limit A; it contains A only when A is cofinite
    f = c_filter(a)
    assert filt.limit(f) == a
    assert member(a, f) == a.is_cofinite
    assert double_neg(f) == u_filter(a)
    assert neg(f) == u_filter(complement(a))
