"""Rank-1 elementary periods of a free product.

A cyclically reduced word ``A`` with ``|A| > 1`` is certified when it is not
a product of two involutions and no cyclic subword is a 9-th power of a
shorter word.  Certification is a sufficient condition only: an uncertified
word is not thereby shown to be something other than an elementary period.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterator

from .errors import BoundExceeded, NotCertified
from .runs import periodic_segments
from .words import (
    CyclicWord,
    FactorFamily,
    InvolutionWitness,
    Word,
    cyclic_reduce,
    format_word,
    is_cyclically_reduced,
    two_involution_witness,
)

POWER = 9
DEFAULT_NODE_BUDGET = 2_000_000


@dataclass(frozen=True)
class NinePower:
    period: int
    start: int
    run_length: int


def _doubled(w):
    return list(w.syllables) * 2


def _check_alternation(seq, cyclic):
    # p = 1 cannot occur: neighbours, including across the seam, differ in factor
    if cyclic:
        assert all(a.factor != b.factor for a, b in zip(seq, seq[1:])), "word is not alternating"


def _scan(seq, length):
    """Doubled-sequence scan, O(L^2)."""
    for p in range(2, length // POWER + 1):
        # ext[x]: number of consecutive x' >= x with seq[x'] == seq[x' + p]
        ext = [0] * (len(seq) - p + 1)
        for x in range(len(seq) - p - 1, -1, -1):
            ext[x] = ext[x + 1] + 1 if seq[x] == seq[x + p] else 0
        for start in range(length):
            run = min(p + ext[start], length)
            if run >= POWER * p:
                return NinePower(p, start, run)
    return None


def _runs(seq, length):
    best = {}
    for i, j, p in periodic_segments(seq):
        if p < 2 or i >= length:
            continue
        run = min(j - i, length)
        if run >= POWER * p and (p not in best or i < best[p][0]):
            best[p] = (i, run)
    if not best:
        return None
    p = min(best)
    return NinePower(p, *best[p])


def find_nine_power(w, method: str = "scan") -> NinePower | None:
    """Least ``(p, start)`` of a cyclic occurrence of a 9-th power of a p-syllable word.

    The word is read cyclically: occurrences are windows of at most ``|w|``
    syllables of the doubled sequence starting in ``[0, |w|)``.  ``run_length``
    is the longest p-periodic window at ``start``.  ``method`` selects the
    quadratic scan (``"scan"``) or the Main-Lorentz runs computation
    (``"runs"``); both return identical results.
    """
    cyclic = isinstance(w, CyclicWord)
    word = w.word if cyclic else w
    length = len(word)
    if length < 2 * POWER:
        return None
    seq = _doubled(word)
    _check_alternation(seq, cyclic)
    if method == "scan":
        return _scan(seq, length)
    if method == "runs":
        return _runs(seq, length)
    raise ValueError(f"unknown method {method!r}")


class PeriodTag(enum.Enum):
    TOO_SHORT = "TooShort"
    NOT_CYCLICALLY_REDUCED = "NotCyclicallyReduced"
    PRODUCT_OF_TWO_INVOLUTIONS = "ProductOfTwoInvolutions"
    CONTAINS_NINE_POWER = "ContainsNinePower"
    CERTIFIED_RANK1 = "CertifiedRank1"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PeriodClass:
    """Outcome of :func:`classify_rank1`.

    ``core`` is the cyclically reduced conjugate that was classified (a
    :class:`CyclicWord`, or a short :class:`Word` for ``TooShort``).
    ``witness`` is an :class:`InvolutionWitness` or :class:`NinePower` for the
    exclusion tags and ``None`` otherwise.
    """

    tag: PeriodTag
    core: object
    witness: InvolutionWitness | NinePower | None = None

    @property
    def certified(self) -> bool:
        return self.tag is PeriodTag.CERTIFIED_RANK1


def classify_rank1(w: Word, auto_reduce: bool = True, method: str = "scan") -> PeriodClass:
    """Apply the rank-1 criterion to ``w``.

    With ``auto_reduce`` (the default) a word that is not cyclically reduced
    is replaced by its cyclically reduced conjugate, and that core is
    classified and reported.  ``auto_reduce=False`` returns
    ``NotCyclicallyReduced`` for such words instead.
    """
    if isinstance(w, CyclicWord):
        w = w.word
    if not auto_reduce and not is_cyclically_reduced(w):
        return PeriodClass(PeriodTag.NOT_CYCLICALLY_REDUCED, w)
    core, _ = cyclic_reduce(w)
    if not isinstance(core, CyclicWord):
        return PeriodClass(PeriodTag.TOO_SHORT, core)
    witness = two_involution_witness(core)
    if witness is not None:
        return PeriodClass(PeriodTag.PRODUCT_OF_TWO_INVOLUTIONS, core, witness)
    power = find_nine_power(core, method=method)
    if power is not None:
        return PeriodClass(PeriodTag.CONTAINS_NINE_POWER, core, power)
    return PeriodClass(PeriodTag.CERTIFIED_RANK1, core)


def node_budget() -> int:
    """Enumeration work cap, from ``PPL_NODE_BUDGET`` when set."""
    value = os.environ.get("PPL_NODE_BUDGET")
    return int(value) if value else DEFAULT_NODE_BUDGET


def _alphabet(family):
    return [
        (f, x)
        for f, g in enumerate(family.factors)
        for x in range(g.order)
        if x != g.identity
    ]


def canonical_cyclic_words(family: FactorFamily, length: int, budget: list[int]) -> Iterator[CyclicWord]:
    """Canonical representatives of cyclically reduced words of one length, in lex order."""
    letters = _alphabet(family)
    seq: list[tuple[int, int]] = []

    def extend():
        budget[0] -= 1
        if budget[0] < 0:
            raise BoundExceeded("enumeration node budget exhausted")
        if len(seq) == length:
            if seq[0][0] == seq[-1][0]:
                return
            w = Word(family, seq, check=False)
            cw = CyclicWord(w)
            if cw.rotation == 0:
                yield cw
            return
        for letter in letters:
            if seq and letter[0] == seq[-1][0]:
                continue
            # every syllable of a least rotation is >= its first syllable
            if seq and letter < seq[0]:
                continue
            seq.append(letter)
            yield from extend()
            seq.pop()

    yield from extend()


def enumerate_certified(family: FactorFamily, max_syllables: int, limit: int | None = None,
                        budget: int | None = None) -> Iterator[CyclicWord]:
    """Certified rank-1 periods up to ``max_syllables``, one per conjugacy class.

    Ordered by length, then lexicographically by canonical rotation.  Raises
    :class:`BoundExceeded` once more than ``budget`` search nodes are visited.
    """
    if max_syllables < 2:
        raise ValueError("max_syllables must be at least 2")
    remaining = [node_budget() if budget is None else budget]
    if limit is not None and limit <= 0:
        return
    emitted = 0
    for length in range(2, max_syllables + 1):
        for cw in canonical_cyclic_words(family, length, remaining):
            if classify_rank1(cw.word).certified:
                yield cw
                emitted += 1
                if limit is not None and emitted >= limit:
                    return


@dataclass(frozen=True)
class Relation:
    """The defining relation ``A^n = 1`` of the n-periodic product."""

    period: CyclicWord
    exponent: int

    def __str__(self):
        return f"({format_word(self.period.canonical)})^{self.exponent} = 1"


def relation_for(period, family: FactorFamily | None = None) -> Relation:
    word = period.word if isinstance(period, CyclicWord) else period
    family = family or word.family
    if word.family is not family:
        raise ValueError("period is not over the given family")
    cls = classify_rank1(word)
    if not cls.certified:
        raise NotCertified(f"{format_word(word)} is {cls.tag}, not certified")
    return Relation(cls.core, family.n)
