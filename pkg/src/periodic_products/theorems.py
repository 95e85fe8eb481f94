"""Theorem-backed verdicts about n-periodic products of finite groups.

Each verdict evaluates the finite, checkable side of a result about the
(infinite) periodic product ``G = G_1 *n G_2 *n ...``: power subgroups,
normal-subgroup lattices and element orders of the factors.  In strict
mode a verdict whose hypotheses fail is ``inapplicable``; in lenient mode
the bare criterion is evaluated anyway and flagged as outside the
theorem's hypotheses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import CriterionFails, InvariantViolation, NotNormal, SideConditionViolated
from .finite_group import (
    DEFAULT_ENUMERATION_BOUND,
    FiniteGroup,
    SubgroupSet,
    enumerate_normal_subgroups,
    exponent_divides,
    involutions,
    is_normal,
    normal_closure,
    power_subgroup,
)
from .periods import PeriodTag, classify_rank1
from .words import (
    MIN_STRICT_EXPONENT,
    FactorFamily,
    QuotientHom,
    Word,
    deletion_retraction,
    format_word,
    power,
    reduce,
    strict_exponent_ok,
)

OUTSIDE = "outside theorem hypotheses"


class Answer(enum.Enum):
    YES = "yes"
    NO = "no"
    INAPPLICABLE = "inapplicable"
    UNDETERMINED = "undetermined"

    def __str__(self):
        return self.value


class Question(enum.Enum):
    INHERITABLY_NORMAL = "inheritably_normal"
    INHERITABLY_FACTORIZABLE = "inheritably_factorizable"
    SIMPLE = "simple"
    HOPFIAN = "hopfian"
    COROLLARY3 = "corollary3"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    """A theorem-backed answer.

    ``code`` is a machine-readable reason for ``inapplicable`` and
    ``undetermined`` answers.  ``outside_hypotheses`` is set when a lenient
    evaluation ignored a failed hypothesis.
    """

    question: Question
    answer: Answer
    citation: str
    reason: str
    code: str | None = None
    outside_hypotheses: bool = False
    details: dict = field(default_factory=dict, compare=False)

    @property
    def note(self) -> str | None:
        return OUTSIDE if self.outside_hypotheses else None


def _exponent_failures(n):
    fails = []
    if n < MIN_STRICT_EXPONENT:
        fails.append("small_n")
    if n % 2 == 0:
        fails.append("even_n")
    return fails


def _gate(family, *, involution_free=False):
    """Failed hypotheses as (code, text) pairs."""
    fails = [(code, f"n = {family.n} is not an odd number >= {MIN_STRICT_EXPONENT}")
             for code in _exponent_failures(family.n)][:1]
    if involution_free:
        with_inv = [nm for nm, g in zip(family.names, family.factors) if involutions(g)]
        if with_inv:
            fails.append(("involutions_present", "factors with involutions: " + ", ".join(with_inv)))
    return fails


def _inapplicable(question, citation, fails):
    code, text = fails[0]
    return Verdict(question, Answer.INAPPLICABLE, citation, text, code=code)


def _describe(sub: SubgroupSet) -> str:
    g = sub.parent
    gens = ",".join(g.names[x] for x in sub.generators()) or g.names[g.identity]
    return f"<{gens}> of order {sub.order}"


def _check_normal(group, sub):
    if sub.parent is not group:
        raise ValueError("subgroup does not belong to the chosen factor")
    if not sub.is_normal or not is_normal(group, sub.members):
        raise NotNormal(f"{sub!r} is not normal in {group.name}")


# -- Theorem 2 -----------------------------------------------------------------


def inheritably_normal_verdict(family: FactorFamily, i: int, normal: SubgroupSet) -> Verdict:
    """Is the nontrivial normal subgroup ``normal`` of factor ``i`` inheritably normal?

    Yes exactly when it contains every n-th power of the factor.
    """
    group = family.factors[i]
    _check_normal(group, normal)
    q, cite = Question.INHERITABLY_NORMAL, "Theorem2"
    fails = _gate(family)
    if normal.is_trivial:
        return Verdict(q, Answer.INAPPLICABLE, cite, "the criterion concerns nontrivial normal subgroups",
                       code="trivial_subgroup", outside_hypotheses=bool(fails))
    if fails and family.strict:
        return _inapplicable(q, cite, fails)
    powers = power_subgroup(group, family.n)
    ok = powers.issubset(normal)
    reason = (f"{family.names[i]}^{family.n} = {_describe(powers)} "
              f"{'is' if ok else 'is not'} contained in {_describe(normal)}")
    return Verdict(q, Answer.YES if ok else Answer.NO, cite, reason, outside_hypotheses=bool(fails),
                   details={"power_order": powers.order, "subgroup_order": normal.order})


@dataclass(frozen=True)
class GlobalNormalWitness:
    """The normal subgroup ``N * N_2`` of the free product, as a membership test.

    ``N_2`` is the normal closure of all factors other than ``factor``; a word
    lies in ``N * N_2`` exactly when deleting the other factors' syllables
    leaves an element of ``N``.
    """

    family: FactorFamily
    factor: int
    normal: SubgroupSet

    def __call__(self, w: Word) -> bool:
        return self.contains(w)

    def contains(self, w: Word) -> bool:
        if w.family is not self.family:
            raise ValueError("word is over a different family")
        others = [j for j in range(len(self.family)) if j != self.factor]
        rest = deletion_retraction(w, others)
        if rest.is_identity:
            return True
        return rest[0].element in self.normal


def global_normal_witness(family: FactorFamily, i: int, normal: SubgroupSet) -> GlobalNormalWitness:
    verdict = inheritably_normal_verdict(family, i, normal)
    if verdict.answer is not Answer.YES:
        raise CriterionFails(f"no witness: verdict is {verdict.answer} ({verdict.reason})")
    witness = GlobalNormalWitness(family, i, normal)
    group = family.factors[i]
    for x in range(group.order):
        if witness(family.letter(i, x)) != (x in normal):
            raise InvariantViolation(f"intersection property fails at {group.names[x]}")
    return witness


# -- Corollary 2 ----------------------------------------------------------------


def factorizable_criterion(group: FiniteGroup, n: int, bound: int = DEFAULT_ENUMERATION_BOUND):
    """``(holds, first_failure, checked)`` for: every nontrivial normal subgroup contains G^n."""
    powers = power_subgroup(group, n)
    checked = 0
    for sub in enumerate_normal_subgroups(group, bound):
        if sub.is_trivial:
            continue
        checked += 1
        if not powers.issubset(sub):
            return False, sub, checked
    return True, None, checked


def inheritably_factorizable_verdict(family: FactorFamily, i: int,
                                     bound: int = DEFAULT_ENUMERATION_BOUND) -> Verdict:
    q, cite = Question.INHERITABLY_FACTORIZABLE, "Corollary2"
    fails = _gate(family)
    if fails and family.strict:
        return _inapplicable(q, cite, fails)
    group = family.factors[i]
    ok, failure, checked = factorizable_criterion(group, family.n, bound)
    powers = power_subgroup(group, family.n)
    name = family.names[i]
    if ok:
        reason = f"all {checked} nontrivial normal subgroups of {name} contain {name}^{family.n} = {_describe(powers)}"
    else:
        reason = f"{_describe(failure)} does not contain {name}^{family.n} = {_describe(powers)}"
    return Verdict(q, Answer.YES if ok else Answer.NO, cite, reason, outside_hypotheses=bool(fails),
                   details={"factor": name, "checked": checked})


# -- Theorem 1 -------------------------------------------------------------------


def simplicity_verdict(family: FactorFamily) -> Verdict:
    """Simple iff ``G_i^n = G_i`` for every factor (involution-free factors)."""
    q, cite = Question.SIMPLE, "Theorem1"
    fails = _gate(family, involution_free=True)
    if fails and family.strict:
        return _inapplicable(q, cite, fails)
    for name, group in zip(family.names, family.factors):
        powers = power_subgroup(group, family.n)
        if not powers.is_whole:
            reason = f"{name}^{family.n} = {_describe(powers)} is a proper subgroup of {name}"
            return Verdict(q, Answer.NO, cite, reason, outside_hypotheses=bool(fails))
    reason = f"G_i^{family.n} = G_i for every factor"
    return Verdict(q, Answer.YES, cite, reason, outside_hypotheses=bool(fails))


# -- Theorem 3 ingredients and Theorem 4 ---------------------------------------------


def ab_ingredient_check(family: FactorFamily, per_factor: int = 8) -> tuple[int, list[Word]]:
    """Classify ``a b`` for nontrivial letters from distinct factors.

    Uses the first ``per_factor`` nontrivial elements of each factor.  For
    involution-free factors every such word must be certified; returns the
    number checked and the uncertified ones.
    """
    picks = []
    for f, g in enumerate(family.factors):
        picks.append([x for x in range(g.order) if x != g.identity][:per_factor])
    checked, failures = 0, []
    for f, xs in enumerate(picks):
        for h, ys in enumerate(picks):
            if f == h:
                continue
            for x in xs:
                for y in ys:
                    w = reduce([(f, x), (h, y)], family)
                    checked += 1
                    if classify_rank1(w).tag is not PeriodTag.CERTIFIED_RANK1:
                        failures.append(w)
    return checked, failures


def hopfian_verdict(family: FactorFamily) -> Verdict:
    """Hopfian when some factor violates ``x^n = 1``.

    Rests on the cited fact that every nontrivial normal subgroup contains
    G^n (proved for involution-free factors, hence the strict gate).  When
    every factor satisfies ``x^n = 1`` the question stays open.
    """
    q, cite = Question.HOPFIAN, "Theorem4"
    fails = _gate(family, involution_free=True)
    if fails and family.strict:
        return _inapplicable(q, cite, fails)
    witness = [nm for nm, g in zip(family.names, family.factors) if not exponent_divides(g, family.n)]
    checked, bad = ab_ingredient_check(family)
    if bad and not any(code == "involutions_present" for code, _ in fails):
        raise InvariantViolation(f"ab not certified for involution-free factors: {format_word(bad[0])}")
    trace = f"cites Theorem3 (nontrivial normal subgroups contain G^n); ab certified for {checked - len(bad)}/{checked} letter pairs"
    if witness:
        reason = f"x^{family.n} = 1 fails in {', '.join(witness)}; {trace}"
        return Verdict(q, Answer.YES, cite, reason, outside_hypotheses=bool(fails),
                       details={"witness_factors": witness})
    reason = f"every factor satisfies x^{family.n} = 1; the Hopfian property is then an open question"
    return Verdict(q, Answer.UNDETERMINED, cite, reason, code="all_factors_satisfy_identity",
                   outside_hypotheses=bool(fails))


def corollary3_verdict(m: int, r: int, n: int) -> Verdict:
    """The bundle {Hopfian: yes, residually finite: no, simple: no} for m copies of Z_r."""
    if m < 2:
        raise ValueError("need at least two factors")
    q, cite = Question.COROLLARY3, "Corollary3"
    premises = [
        ("even_n", n % 2 == 1, f"n = {n} is not odd"),
        ("small_n", n >= MIN_STRICT_EXPONENT, f"n = {n} < {MIN_STRICT_EXPONENT}"),
        ("n_not_divisor", r % n == 0, f"n = {n} does not divide r = {r}"),
        ("n_not_proper_divisor", n != r, f"n = {n} is not a proper divisor of r = {r}"),
    ]
    for code, holds, text in premises:
        if not holds:
            return Verdict(q, Answer.INAPPLICABLE, cite, text, code=code)
    reason = (f"{m} cyclic factors of order {r}, n = {n} a proper divisor: Hopfian (Theorem4), "
              f"not residually finite (cited: B({m},{n}) is a quotient), not simple (Theorem1)")
    details = {"hopfian": "yes", "residually_finite": "no", "simple": "no"}
    if r % 2 == 0:
        details["note"] = "r is even: the factors contain an involution"
    return Verdict(q, Answer.YES, cite, reason, details=details)


# -- Corollary 1 -------------------------------------------------------------------


@dataclass(frozen=True)
class Corollary1Report:
    """Premise and conclusion of the involution statement, evaluated separately.

    ``premise``: every nontrivial normal subgroup contains G^n and G has an
    involution.  ``conclusion``: G has exactly one involution and it is
    central.  ``tension`` marks premise-without-conclusion cases.
    """

    group: str
    n: int
    criterion: bool
    involution_count: int
    central_involutions: int
    premise: bool
    conclusion: bool

    @property
    def tension(self) -> bool:
        return self.premise and not self.conclusion

    @property
    def vacuous(self) -> bool:
        return not self.premise


def corollary1_scan(group: FiniteGroup, n: int, bound: int = DEFAULT_ENUMERATION_BOUND) -> Corollary1Report:
    criterion, _, _ = factorizable_criterion(group, n, bound)
    invs = involutions(group)
    central = [x for x in invs if all(group.mul(x, y) == group.mul(y, x) for y in range(group.order))]
    return Corollary1Report(
        group=group.name,
        n=n,
        criterion=criterion,
        involution_count=len(invs),
        central_involutions=len(central),
        premise=criterion and bool(invs),
        conclusion=len(invs) == 1 and len(central) == 1,
    )


# -- proof replay ----------------------------------------------------------------------


def congruence_check(w: Word, v: Word, i: int, normal: SubgroupSet) -> bool:
    """Do ``w`` and ``v`` agree modulo the normal subgroup of factor ``i``?"""
    if w.family is not v.family:
        raise ValueError("words are over different families")
    hom = QuotientHom(w.family, i, normal)
    return hom(w) == hom(v)


@dataclass(frozen=True)
class ProofBindings:
    """Element choices for the witness words.

    ``a, a1, a2, g`` are element indices of factor ``factor``; ``b, b1, b2``
    of factor ``other``.  ``normal`` overrides the subgroup used for the
    congruences (default: normal closure of the bound ``a`` elements).
    """

    a: int | None = None
    a1: int | None = None
    a2: int | None = None
    g: int | None = None
    b: int | None = None
    b1: int | None = None
    b2: int | None = None
    factor: int = 0
    other: int = 1
    normal: SubgroupSet | None = None


@dataclass(frozen=True)
class ProofWordResult:
    name: str
    word: Word
    target: Word
    tag: PeriodTag
    congruent: bool
    power_congruent: bool
    image: Word

    @property
    def passed(self) -> bool:
        return self.tag is PeriodTag.CERTIFIED_RANK1 and self.congruent and self.power_congruent

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass(frozen=True)
class ProofSuiteReport:
    results: tuple[ProofWordResult, ...]

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)


def _require(word, cond, text):
    if not cond:
        raise SideConditionViolated(word, text)


def proof_word_suite(family: FactorFamily, bindings: ProofBindings) -> ProofSuiteReport:
    """Rebuild the witness words of the inheritably-normal criterion and check them.

    Each applicable word must be certified as a rank-1 period, and must be
    congruent, modulo the normal subgroup generated by its ``a`` letters, to
    the stated right-hand side; the same holds after raising both sides to
    the n-th power.  Which words apply follows from the bound names:
    ``b1, b2`` (case 1), ``a1, a2, b`` (case 2), ``a, b`` (order-2 subgroup,
    branch chosen by whether ``g^2 = 1``).
    """
    i, j = bindings.factor, bindings.other
    if i == j:
        raise ValueError("factor and other must differ")
    G1, G2 = family.factors[i], family.factors[j]
    e1, e2 = G1.identity, G2.identity
    n = family.n

    def sq_trivial(group, x):
        return group.mul(x, x) == group.identity

    specs = []
    bd = bindings
    if bd.b1 is not None or bd.b2 is not None:
        name = "case1"
        _require(name, bd.a is not None and bd.g is not None and bd.b1 is not None and bd.b2 is not None,
                 "a, g, b1, b2 must all be bound")
        _require(name, bd.a != e1, "a is nontrivial")
        _require(name, bd.g != e1, "g is nontrivial")
        _require(name, bd.b1 != e2 and bd.b2 != e2, "b1, b2 are nontrivial")
        _require(name, bd.b1 != bd.b2, "b1 != b2")
        raw = [(j, G2.inv(bd.b1)), (i, bd.a), (j, bd.b1), (j, G2.inv(bd.b2)), (i, bd.a), (j, bd.b2), (i, bd.g)]
        specs.append((name, raw, [(i, bd.g)], [(i, G1.power(bd.g, n))], [bd.a]))
    if bd.a1 is not None or bd.a2 is not None:
        name = "case2"
        _require(name, bd.a1 is not None and bd.a2 is not None and bd.b is not None and bd.g is not None,
                 "a1, a2, b, g must all be bound")
        _require(name, bd.a1 != e1 and bd.a2 != e1, "a1, a2 are nontrivial")
        _require(name, bd.a1 != bd.a2, "a1 != a2")
        _require(name, bd.g != e1, "g is nontrivial")
        _require(name, bd.b != e2 and sq_trivial(G2, bd.b), "b is an involution")
        raw = [(j, bd.b), (i, bd.a1), (j, bd.b), (i, bd.a1), (j, bd.b), (i, bd.a2), (j, bd.b), (i, bd.g)]
        specs.append((name, raw, [(i, bd.g)], [(i, G1.power(bd.g, n))], [bd.a1, bd.a2]))
    if bd.a is not None and bd.b is not None and bd.b1 is None and bd.b2 is None:
        _require("order2", bd.g is not None, "g must be bound")
        _require("order2", bd.b != e2 and sq_trivial(G2, bd.b), "b is an involution")
        _require("order2", bd.a != e1 and sq_trivial(G1, bd.a), "a is an involution")
        _require("order2", bd.g != e1, "g is nontrivial")
        if not sq_trivial(G1, bd.g):
            raw = [(j, bd.b), (i, bd.a), (j, bd.b), (i, bd.g)]
            specs.append(("babg", raw, [(i, bd.g)], [(i, G1.power(bd.g, n))], [bd.a]))
        else:
            _require("babagbgbg", bd.a != bd.g, "a != g")
            raw = [(j, bd.b), (i, bd.a), (j, bd.b), (i, bd.a), (i, bd.g), (j, bd.b), (i, bd.g), (j, bd.b), (i, bd.g)]
            target = [(i, bd.g), (j, bd.b), (i, bd.g), (j, bd.b), (i, bd.g)]
            power_target = [(i, bd.g), (j, bd.b), (i, G1.power(bd.g, n)), (j, bd.b), (i, bd.g)]
            specs.append(("babagbgbg", raw, target, power_target, [bd.a]))
    if not specs:
        raise ValueError("bindings select no witness word")

    results = []
    for name, raw, target_raw, power_target_raw, kill in specs:
        word = reduce(raw, family)
        target = reduce(target_raw, family)
        normal = bindings.normal if bindings.normal is not None else normal_closure(G1, kill)
        hom = QuotientHom(family, i, normal)
        image = hom(word)
        results.append(ProofWordResult(
            name=name,
            word=word,
            target=target,
            tag=classify_rank1(word).tag,
            congruent=image == hom(target),
            power_congruent=hom(power(word, n)) == hom(reduce(power_target_raw, family)),
            image=image,
        ))
    return ProofSuiteReport(tuple(results))


def verdict_fields(v: Verdict) -> list[tuple[str, str]]:
    """Report fields for a verdict line, in a fixed order."""
    out = [(str(v.question), str(v.answer)), ("cite", v.citation)]
    if v.code:
        out.append(("code", v.code))
    if v.outside_hypotheses:
        out.append(("note", OUTSIDE))
    return out


__all__ = [
    "Answer", "Question", "Verdict", "GlobalNormalWitness", "Corollary1Report", "ProofBindings",
    "ProofWordResult", "ProofSuiteReport", "inheritably_normal_verdict", "global_normal_witness",
    "inheritably_factorizable_verdict", "factorizable_criterion", "simplicity_verdict", "hopfian_verdict",
    "ab_ingredient_check", "corollary3_verdict", "corollary1_scan", "congruence_check", "proof_word_suite",
    "strict_exponent_ok", "verdict_fields",
]
