import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import alternating, klein_four, small_corpus
from oracles import (
    brute_closure,
    brute_is_normal,
    brute_normal_subgroups,
    is_associative_bruteforce,
    table_power,
)
from periodic_products import (
    BoundExceeded,
    FiniteGroup,
    NotAGroup,
    NotNormal,
    ParseError,
    cyclic,
    dihedral,
    element_order,
    enumerate_normal_subgroups,
    exponent_divides,
    involutions,
    load_group,
    normal_closure,
    power_subgroup,
    quaternion,
    quotient,
    subgroup_generated,
    symmetric,
)
from periodic_products.finite_group import SubgroupSet, trivial_subgroup, whole_group


def test_load_cyclic_3():
    g = load_group("kind cyclic 3")
    assert g.order == 3
    assert g.table.tolist() == [[(i + j) % 3 for j in range(3)] for i in range(3)]


def test_load_cyclic_1995():
    g = load_group("kind cyclic 1995")
    assert g.order == 1995
    assert g.mul(1990, 10) == 5


def test_idempotent_non_identity_has_no_inverse():
    text = """
    kind table
    elements e a
    row e: e a
    row a: a a
    """
    with pytest.raises(NotAGroup) as info:
        load_group(text)
    assert info.value.axiom == "inverse"
    assert info.value.witness[0] == 1


def test_non_associative_latin_square():
    # a loop of order 5 that is not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    assert not is_associative_bruteforce(table)
    with pytest.raises(NotAGroup) as info:
        FiniteGroup(table)
    assert info.value.axiom == "associativity"
    x, y, z = info.value.witness
    assert table[table[x][y]][z] != table[x][table[y][z]]


def test_missing_identity_and_bad_entry():
    with pytest.raises(NotAGroup) as info:
        FiniteGroup([[0, 0], [1, 1]])
    assert info.value.axiom == "identity"
    with pytest.raises(NotAGroup) as info:
        FiniteGroup([[0, 2], [1, 0]])
    assert info.value.axiom == "closure"
    assert info.value.witness == (0, 1)


def test_malformed_group_text():
    with pytest.raises(ParseError):
        load_group("kind cyclic three")
    with pytest.raises(ParseError):
        load_group("kind frobnicate 3")
    with pytest.raises(ParseError) as info:
        load_group("kind table\nelements e a\nrow e: e a\n")
    assert "missing the row" in str(info.value)


@pytest.mark.parametrize("group", small_corpus(), ids=lambda g: g.name)
def test_constructors_are_groups(group):
    assert is_associative_bruteforce(group.table.tolist())
    assert group.identity == 0


def test_element_order():
    z6 = cyclic(6)
    assert element_order(z6, 2) == 3
    assert element_order(z6, 3) == 2
    for g in (z6, symmetric(3), quaternion()):
        assert element_order(g, g.identity) == 1


def test_involutions():
    assert involutions(cyclic(3)) == []
    assert involutions(cyclic(2)) == [1]
    assert len(involutions(klein_four())) == 3
    assert len(involutions(symmetric(3))) == 3
    assert involutions(quaternion()) == [quaternion().element("-1")]


@pytest.mark.parametrize("group", [cyclic(7), symmetric(3), quaternion(), dihedral(5), alternating(4)],
                         ids=lambda g: g.name)
def test_repeated_squaring_matches_repeated_product(group):
    t = group.table.tolist()
    for m in range(21):
        expected = [table_power(t, group.identity, x, m) for x in range(group.order)]
        assert [group.power(x, m) for x in range(group.order)] == expected
        assert group.powers(m).tolist() == expected


def test_power_subgroup_examples():
    assert power_subgroup(cyclic(3), 665).is_whole
    assert power_subgroup(cyclic(5), 665).is_trivial
    z = cyclic(1995)
    # oracle: x^665 in Z_1995 is 665*x mod 1995, then close under products
    gens = {(665 * x) % 1995 for x in range(1995)}
    expected = brute_closure(z.table.tolist(), 0, gens)
    assert expected == frozenset({0, 665, 1330})
    sub = power_subgroup(z, 665)
    assert sub.members == expected
    assert sub.is_normal


@settings(max_examples=40, deadline=None)
@given(r=st.integers(1, 2100), n=st.sampled_from([665, 1995, 5 * 665]))
def test_power_subgroup_cyclic_gcd(r, n):
    assert power_subgroup(cyclic(r), n).order == r // math.gcd(n, r)


@pytest.mark.parametrize("group", [symmetric(3), symmetric(4), quaternion(), dihedral(6), alternating(4)],
                         ids=lambda g: g.name)
def test_power_subgroup_is_normal(group):
    t = group.table.tolist()
    for n in (1, 2, 3, 4, 6, 665):
        sub = power_subgroup(group, n)
        assert brute_is_normal(t, group.identity, sub.members)
        gens = {table_power(t, group.identity, x, n) for x in range(group.order)}
        assert sub.members == brute_closure(t, group.identity, gens)


def test_subgroup_generated():
    assert subgroup_generated(cyclic(6), [2]).members == {0, 2, 4}
    s3 = symmetric(3)
    t = s3.element("(12)")
    sub = subgroup_generated(s3, [t])
    assert sub.members == brute_closure(s3.table.tolist(), 0, [t])
    assert sub.order == 2
    assert not sub.is_normal
    assert not brute_is_normal(s3.table.tolist(), 0, sub.members)
    assert subgroup_generated(s3, []).members == {s3.identity}


def test_normal_closure():
    s3 = symmetric(3)
    assert normal_closure(s3, [s3.element("(12)")]).is_whole
    a3 = normal_closure(s3, [s3.element("(123)")])
    assert a3.order == 3 and a3.is_normal
    assert a3.members == brute_closure(s3.table.tolist(), 0, [s3.element("(123)"), s3.element("(132)")])
    assert normal_closure(s3, []).is_trivial


def test_normal_subgroup_examples():
    assert [s.order for s in enumerate_normal_subgroups(symmetric(3))] == [1, 3, 6]
    assert [s.order for s in enumerate_normal_subgroups(cyclic(12))] == [1, 2, 3, 4, 6, 12]
    for p in (2, 3, 5, 7, 11, 13):
        assert [s.order for s in enumerate_normal_subgroups(cyclic(p))] == [1, p]


def test_normal_subgroup_order_is_deterministic():
    subs = enumerate_normal_subgroups(dihedral(4))
    keys = [(s.order, s.sorted_members()) for s in subs]
    assert keys == sorted(keys)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_normal_subgroups(cyclic(600), bound=512)


@pytest.mark.parametrize("group", small_corpus(), ids=lambda g: g.name)
def test_normal_subgroups_match_exhaustive_search(group):
    found = enumerate_normal_subgroups(group)
    t = group.table.tolist()
    for sub in found:
        assert sub.is_normal
        assert group.identity in sub.members
        assert brute_closure(t, group.identity, sub.members) == sub.members
        assert brute_is_normal(t, group.identity, sub.members)
    assert {s.members for s in found} == brute_normal_subgroups(t, group.identity)
    assert len(found) == len({s.members for s in found})


def test_quotient_z9():
    z9 = cyclic(9)
    n = subgroup_generated(z9, [3])
    q, proj = quotient(z9, n)
    assert q.order == 3
    assert proj.tolist() == [x % 3 for x in range(9)]


def test_quotient_edge_cases():
    g = symmetric(3)
    q, proj = quotient(g, trivial_subgroup(g))
    assert q.order == 6 and proj.tolist() == list(range(6))
    q, proj = quotient(g, whole_group(g))
    assert q.order == 1 and set(proj.tolist()) == {0}


def test_quotient_rejects_non_normal():
    g = symmetric(3)
    with pytest.raises(NotNormal):
        quotient(g, subgroup_generated(g, [g.element("(12)")]))
    fake = SubgroupSet(g, frozenset({0, g.element("(12)")}), True)
    with pytest.raises(NotNormal):
        quotient(g, fake)


@pytest.mark.parametrize("group", [symmetric(4), quaternion(), dihedral(6), cyclic(12)], ids=lambda g: g.name)
def test_quotient_projection_is_homomorphism(group):
    t = group.table
    for n in enumerate_normal_subgroups(group):
        q, proj = quotient(group, n)
        assert q.order * n.order == group.order
        for x in range(group.order):
            for y in range(group.order):
                assert proj[t[x, y]] == q.table[proj[x], proj[y]]


def test_exponent_divides():
    assert exponent_divides(cyclic(5), 665)
    assert not exponent_divides(cyclic(1995), 665)
    assert exponent_divides(cyclic(1), 7)
    assert exponent_divides(cyclic(1), 1)


def test_tables_are_read_only():
    g = cyclic(4)
    with pytest.raises(ValueError):
        g.table[0, 0] = 1
    assert isinstance(g.table, np.ndarray)


def test_element_names():
    g = dihedral(4)
    assert g.names[:4] == ("e", "r", "r^2", "r^3")
    assert g.element("r^2*s") == 6
    assert g.element("3") == 3
    with pytest.raises(KeyError):
        g.element("t")
