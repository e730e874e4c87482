import pytest
from hypothesis import given, strategies as st

from cofin import finoracle as fo

# number of upper families of subsets of an n-set (Dedekind numbers)
DEDEKIND = [2, 3, 6, 20, 168, 7581]


@pytest.mark.parametrize("n", range(0, 6))
def test_upper_family_count(n):
    assert sum(1 for _ in fo.upper_families(fo.FinUniverse(n))) == DEDEKIND[n]


@pytest.mark.parametrize("n", range(0, 4))
def test_upper_families_match_total_enumeration(n):
    u = fo.FinUniverse(n)
    fast = {f.members for f in fo.upper_families(u)}
    slow = {f.members for f in fo.all_families(u) if f.is_upper}
    assert fast == slow


@pytest.mark.parametrize("n", range(1, 6))
def test_filters_are_principal(n):
    u = fo.FinUniverse(n)
    filters = fo.all_filters(u)
    assert len(filters) == 2 ** n
    assert set(filters) == {fo.up(u, a) for a in u.masks()}


@pytest.mark.parametrize("n", range(1, 5))
def test_heyting_formula_matches_brute_force(n):
    u = fo.FinUniverse(n)
    fs = fo.all_filters(u)
    for f in fs:
        for g in fs:
            h = fo.heyting_bruteforce(f, g)
            assert h == fo.heyting_formula(f, g)
            # principal case: U(A) -> U(B) = U(B minus A)
            assert h == fo.up(u, g.limit & ~f.limit)


@pytest.mark.parametrize("n", range(1, 5))
def test_clu1_items_pass(n):
    report = fo.clu1_check(fo.FinUniverse(n))
    assert [r["item"] for r in report] == [f"clu1.{i}" for i in ("i", "ii", "iii", "iv", "v", "vi")]
    assert all(r["status"] == "pass" for r in report), report


def test_clu1_refuses_large_universe():
    with pytest.raises(ValueError):
        fo.clu1_check(fo.FinUniverse(5))


def test_interior_examples():
    u = fo.FinUniverse(3)
    assert fo.interior(fo.meets(u, u.full)) == fo.up(u, u.full)
    assert fo.interior(fo.meets(u, 0b011)) == fo.up(u, 0b011)
    with pytest.raises(ValueError):
        fo.interior(u.family([]))


@given(st.integers(0, 15), st.integers(0, 15))
def test_interior_of_meets_is_principal(a, b):
    u = fo.FinUniverse(4)
    if a:
        assert fo.interior(fo.meets(u, a)) == fo.up(u, a)
    assert fo.generated_filter(u, [a, b]) == fo.up(u, a & b)


@given(st.integers(0, 15))
def test_negation_and_duality(a):
    u = fo.FinUniverse(4)
    f = fo.up(u, a)
    assert fo.negation(f) == fo.up(u, u.complement(a))
    assert fo.dualize(fo.dualize(f)) == f
    assert all(u.complement(m) in fo.dualize(f) for m in f)


def test_universe_bounds():
    with pytest.raises(ValueError):
        fo.FinUniverse(6)
    with pytest.raises(ValueError):
        list(fo.all_families(fo.FinUniverse(5)))
    assert fo.FinUniverse(3).fmt(0b101) == "{0,2}"
