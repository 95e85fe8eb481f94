import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import alternating, klein_four, small_corpus
from periodic_products import (
    Answer,
    CriterionFails,
    FactorFamily,
    NotNormal,
    PeriodTag,
    ProofBindings,
    SideConditionViolated,
    congruence_check,
    corollary1_scan,
    corollary3_verdict,
    cyclic,
    enumerate_normal_subgroups,
    global_normal_witness,
    hopfian_verdict,
    inheritably_factorizable_verdict,
    inheritably_normal_verdict,
    parse_word,
    power_subgroup,
    proof_word_suite,
    quaternion,
    simplicity_verdict,
    subgroup_generated,
    symmetric,
)
from periodic_products.finite_group import trivial_subgroup, whole_group
from periodic_products.rng import SplitMix64
from periodic_products.theorems import OUTSIDE, verdict_fields
from periodic_products.words import random_word

Z1995 = cyclic(1995)


def subgroup_of_order(group, order):
    return next(s for s in enumerate_normal_subgroups(group) if s.order == order)


@pytest.fixture(scope="module")
def z1995_pair():
    return FactorFamily([Z1995, cyclic(3, gen="b")], 665)


# -- inheritably normal subgroups --------------------------------------------------


def test_inheritably_normal_examples(z1995_pair):
    v = inheritably_normal_verdict(z1995_pair, 0, subgroup_of_order(Z1995, 3))
    assert v.answer is Answer.YES and v.citation == "Theorem2"
    assert v.details["power_order"] == 3
    v = inheritably_normal_verdict(z1995_pair, 0, subgroup_of_order(Z1995, 5))
    assert v.answer is Answer.NO
    v = inheritably_normal_verdict(z1995_pair, 0, trivial_subgroup(Z1995))
    assert v.answer is Answer.INAPPLICABLE and v.code == "trivial_subgroup"


def test_z1995_has_eight_inheritably_normal_subgroups(z1995_pair):
    yes = []
    for sub in enumerate_normal_subgroups(Z1995):
        if sub.is_trivial:
            continue
        if inheritably_normal_verdict(z1995_pair, 0, sub).answer is Answer.YES:
            yes.append(sub.order)
    assert yes == [d for d in range(2, 1996) if 1995 % d == 0 and d % 3 == 0]
    assert len(yes) == 8


def test_inheritably_normal_requires_normal(z2s3):
    s3 = z2s3.factors[1]
    sub = subgroup_generated(s3, [s3.element("(12)")])
    with pytest.raises(NotNormal):
        inheritably_normal_verdict(z2s3, 1, sub)


@pytest.mark.parametrize("group", small_corpus()[1:], ids=lambda g: g.name)
def test_power_subgroup_is_always_inheritably_normal(group):
    for n in (665, 667, 669, 675):
        family = FactorFamily([group, cyclic(3, gen="b")], n)
        powers = power_subgroup(group, n)
        v = inheritably_normal_verdict(family, 0, powers)
        if powers.is_trivial:
            assert v.answer is Answer.INAPPLICABLE
        else:
            assert v.answer is Answer.YES


@pytest.mark.parametrize("group", [cyclic(12), symmetric(4), quaternion(), Z1995],
                         ids=lambda g: g.name)
def test_verdicts_are_monotone(group):
    family = FactorFamily([group, cyclic(3, gen="b")], 665)
    subs = [s for s in enumerate_normal_subgroups(group) if not s.is_trivial]
    answers = {s.members: inheritably_normal_verdict(family, 0, s).answer for s in subs}
    for s1, s2 in itertools.product(subs, repeat=2):
        if s1.issubset(s2) and answers[s1.members] is Answer.YES:
            assert answers[s2.members] is Answer.YES


def test_global_witness_examples(z1995_pair):
    family = FactorFamily([cyclic(9, gen="x"), cyclic(3, gen="b")], 669)
    n3 = subgroup_of_order(family.factors[0], 3)
    wit = global_normal_witness(family, 0, n3)
    assert wit(parse_word("g2:b^2 g1:x^3 g2:b", family))
    assert not wit(parse_word("g1:x", family))
    assert wit(parse_word("g2:b", family))
    with pytest.raises(CriterionFails):
        global_normal_witness(z1995_pair, 0, subgroup_of_order(Z1995, 5))


def test_global_witness_is_conjugation_stable(z1995_pair):
    wit = global_normal_witness(z1995_pair, 0, subgroup_of_order(Z1995, 15))
    rng = SplitMix64(99)
    group = Z1995
    for x in range(group.order):
        assert wit(z1995_pair.letter(0, x)) == (x in wit.normal)
    for _ in range(1000):
        w = random_word(z1995_pair, rng.randrange(10), rng)
        c = random_word(z1995_pair, rng.randrange(10), rng)
        assert wit(c * w * c.inverse()) == wit(w)


# -- Corollary 2 -----------------------------------------------------------------------


def test_inheritably_factorizable_examples(z1995_pair):
    family = FactorFamily([cyclic(3), cyclic(5, gen="b"), Z1995], 665)
    assert inheritably_factorizable_verdict(family, 0).answer is Answer.YES
    assert inheritably_factorizable_verdict(family, 1).answer is Answer.YES
    v = inheritably_factorizable_verdict(family, 2)
    assert v.answer is Answer.NO and v.citation == "Corollary2"
    assert "of order 5 " in v.reason


# -- Theorem 1 ---------------------------------------------------------------------------


def test_simplicity_examples():
    v = simplicity_verdict(FactorFamily([cyclic(3), cyclic(3, gen="b")], 665))
    assert v.answer is Answer.YES and v.citation == "Theorem1"
    assert simplicity_verdict(FactorFamily([cyclic(5), cyclic(5, gen="b")], 665)).answer is Answer.NO
    v = simplicity_verdict(FactorFamily([symmetric(3), cyclic(3, gen="b")], 665))
    assert v.answer is Answer.INAPPLICABLE and v.code == "involutions_present"
    v = simplicity_verdict(FactorFamily([Z1995, Z1995], 665))
    assert v.answer is Answer.NO


def test_simplicity_lenient_with_involutions():
    # gcd(665, 6) = 1, so the bare criterion holds for S3
    family = FactorFamily([symmetric(3), cyclic(3, gen="b")], 665, strict=False)
    v = simplicity_verdict(family)
    assert v.answer is Answer.YES and v.outside_hypotheses and v.note == OUTSIDE
    family = FactorFamily([symmetric(3), cyclic(5, gen="b")], 665, strict=False)
    assert simplicity_verdict(family).answer is Answer.NO


# -- Theorem 4 ---------------------------------------------------------------------------


def test_hopfian_examples():
    v = hopfian_verdict(FactorFamily([Z1995, Z1995], 665))
    assert v.answer is Answer.YES and v.citation == "Theorem4"
    assert "Theorem3" in v.reason
    v = hopfian_verdict(FactorFamily([cyclic(5), cyclic(7, gen="b")], 665))
    assert v.answer is Answer.UNDETERMINED and v.code == "all_factors_satisfy_identity"
    v = hopfian_verdict(FactorFamily([symmetric(3), Z1995], 665))
    assert v.answer is Answer.INAPPLICABLE and v.code == "involutions_present"


@pytest.mark.parametrize("groups", [
    [cyclic(3), cyclic(5), cyclic(9)],
    [cyclic(5), cyclic(7), cyclic(35)],
    [symmetric(3), cyclic(3), cyclic(7)],
    [cyclic(27), cyclic(5), alternating(4)],
], ids=lambda gs: "-".join(g.name for g in gs))
def test_verdicts_ignore_factor_order(groups):
    answers = set()
    for perm in itertools.permutations(groups):
        family = FactorFamily(list(perm), 665)
        answers.add((simplicity_verdict(family).answer, hopfian_verdict(family).answer))
    assert len(answers) == 1


# -- Corollary 3 ---------------------------------------------------------------------------


def test_corollary3_examples():
    v = corollary3_verdict(2, 1995, 665)
    assert v.answer is Answer.YES
    assert v.details == {"hopfian": "yes", "residually_finite": "no", "simple": "no"}
    v = corollary3_verdict(2, 665, 665)
    assert v.answer is Answer.INAPPLICABLE and v.code == "n_not_proper_divisor"
    v = corollary3_verdict(2, 1330, 665)
    assert v.answer is Answer.YES and "even" in v.details["note"]
    assert corollary3_verdict(3, 1995, 663).code == "small_n"
    assert corollary3_verdict(2, 2000, 666).code == "even_n"
    assert corollary3_verdict(2, 2000, 667).code == "n_not_divisor"
    with pytest.raises(ValueError):
        corollary3_verdict(1, 1995, 665)


def test_corollary3_agrees_with_the_engine():
    family = FactorFamily([Z1995, Z1995], 665)
    bundle = corollary3_verdict(2, 1995, 665).details
    assert str(hopfian_verdict(family).answer) == bundle["hopfian"]
    assert str(simplicity_verdict(family).answer) == bundle["simple"]


# -- Corollary 1 ---------------------------------------------------------------------------


def test_corollary1_examples():
    r = corollary1_scan(cyclic(2), 665)
    assert r.premise and r.conclusion and not r.tension
    r = corollary1_scan(cyclic(4), 665)
    assert not r.premise and r.vacuous
    r = corollary1_scan(quaternion(), 665)
    assert not r.premise and r.involution_count == 1


def test_corollary1_tension_for_a5():
    r = corollary1_scan(alternating(5), 665)
    assert r.criterion and r.involution_count == 15 and r.central_involutions == 0
    assert r.tension


# -- congruences and the proof words ----------------------------------------------------------


def test_congruence_examples():
    family = FactorFamily([cyclic(9, gen="x"), cyclic(3, gen="b")], 665)
    n3 = subgroup_generated(family.factors[0], [3])
    w = parse_word("g2:b^2 g1:x^3 g2:b g2:b g1:x^3 g2:b^2 g1:x", family)
    assert congruence_check(w, parse_word("g1:x", family), 0, n3)
    w = parse_word("g2:b^2 g1:x g2:b", family)
    assert not congruence_check(w, family.identity(), 0, n3)

    v4 = klein_four()
    fam = FactorFamily([v4, cyclic(2, gen="b")], 665)
    a = v4.names[1]
    g = v4.names[2]
    w = parse_word(f"g2:b g1:{a} g2:b g1:{a} g1:{g} g2:b g1:{g} g2:b g1:{g}", fam)
    assert len(w) == 8
    na = subgroup_generated(v4, [1])
    assert congruence_check(w, parse_word(f"g1:{g} g2:b g1:{g} g2:b g1:{g}", fam), 0, na)


@settings(max_examples=200, deadline=None)
@given(seed=st.integers(0, 2**32))
def test_congruence_survives_powers(seed):
    rng = SplitMix64(seed)
    family = FactorFamily([symmetric(4), cyclic(3, gen="b")], 665)
    normals = [s for s in enumerate_normal_subgroups(family.factors[0])]
    normal = normals[rng.randrange(len(normals))]
    w = random_word(family, rng.randrange(8), rng)
    # multiply by a random element of the kernel
    k = family.letter(0, sorted(normal.members)[rng.randrange(normal.order)])
    c = random_word(family, rng.randrange(4), rng)
    v = w * (c * k * c.inverse())
    assert congruence_check(w, v, 0, normal)
    for power in range(1, 11):
        assert congruence_check(w ** power, v ** power, 0, normal)


def test_proof_suite_case1():
    family = FactorFamily([cyclic(9, gen="x"), cyclic(3, gen="b")], 665)
    report = proof_word_suite(family, ProofBindings(a=3, g=1, b1=1, b2=2))
    (res,) = report.results
    assert res.name == "case1" and len(res.word) == 6
    assert res.tag is PeriodTag.CERTIFIED_RANK1 and res.passed and report.passed


def test_proof_suite_case2():
    family = FactorFamily([cyclic(9, gen="x"), cyclic(2, gen="b")], 665)
    report = proof_word_suite(family, ProofBindings(a1=3, a2=6, g=1, b=1))
    (res,) = report.results
    assert res.name == "case2" and res.passed
    assert res.image.syllables == ((0, 1),)


def test_proof_suite_babg():
    family = FactorFamily([cyclic(6), cyclic(2, gen="b")], 665)
    (res,) = proof_word_suite(family, ProofBindings(a=3, g=1, b=1)).results
    assert res.name == "babg" and res.passed and len(res.word) == 4


def test_proof_suite_babagbgbg():
    v4 = klein_four()
    family = FactorFamily([v4, cyclic(2, gen="b")], 665)
    (res,) = proof_word_suite(family, ProofBindings(a=1, g=2, b=1)).results
    assert res.name == "babagbgbg" and res.passed
    assert len(res.word) == 8
    assert res.word.syllables[3] == (0, v4.mul(1, 2))


def test_proof_suite_side_conditions():
    family = FactorFamily([cyclic(9, gen="x"), cyclic(3, gen="b")], 665)
    with pytest.raises(SideConditionViolated) as info:
        proof_word_suite(family, ProofBindings(a=3, g=1, b1=1, b2=1))
    assert "b1 != b2" in str(info.value)
    with pytest.raises(SideConditionViolated):
        proof_word_suite(family, ProofBindings(a=0, g=1, b1=1, b2=2))
    with pytest.raises(SideConditionViolated):
        # b of order 3 is not an involution
        proof_word_suite(family, ProofBindings(a1=3, a2=6, g=1, b=1))
    with pytest.raises(ValueError):
        proof_word_suite(family, ProofBindings())


# -- strict and lenient modes -----------------------------------------------------------


def test_lenient_verdicts_carry_the_label():
    family = FactorFamily([cyclic(3), cyclic(3, gen="b")], 663, strict=False)
    verdicts = [
        simplicity_verdict(family),
        hopfian_verdict(family),
        inheritably_factorizable_verdict(family, 0),
        inheritably_normal_verdict(family, 0, whole_group(family.factors[0])),
        inheritably_normal_verdict(family, 0, trivial_subgroup(family.factors[0])),
    ]
    for v in verdicts:
        assert v.outside_hypotheses
        assert ("note", OUTSIDE) in verdict_fields(v)


def test_strict_verdicts_have_no_label():
    family = FactorFamily([cyclic(3), cyclic(3, gen="b")], 665)
    assert not simplicity_verdict(family).outside_hypotheses
    assert ("note", OUTSIDE) not in verdict_fields(simplicity_verdict(family))
