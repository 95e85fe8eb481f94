"""Exhaustive and sampled cross-checks of the two-involution decision procedure."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InvariantViolation
from .finite_group import involutions
from .words import (
    CyclicWord,
    FactorFamily,
    Word,
    conjugate,
    cyclic_reduce,
    is_involution,
    multiply,
    random_word,
    two_involution_witness,
)


def involution_letters(family: FactorFamily) -> list[Word]:
    return [family.letter(f, x) for f, g in enumerate(family.factors) for x in involutions(g)]


def all_words(family: FactorFamily, max_length: int):
    """Every reduced word with at most ``max_length`` syllables, shortest first."""
    letters = [(f, x) for f, g in enumerate(family.factors) for x in range(g.order) if x != g.identity]
    yield family.identity()
    for length in range(1, max_length + 1):
        for combo in product(letters, repeat=length):
            if all(a[0] != b[0] for a, b in zip(combo, combo[1:])):
                yield Word(family, combo, check=False)


def conjugated_involutions(family: FactorFamily, max_conj: int) -> list[Word]:
    """Distinct involutions ``u c u^-1`` with ``|u| <= max_conj``, in discovery order."""
    seen = {}
    letters = involution_letters(family)
    for u in all_words(family, max_conj):
        for c in letters:
            seen.setdefault(conjugate(c, u), None)
    return list(seen)


@dataclass(frozen=True)
class ScanResult:
    pairs: int
    long_products: int
    mismatches: int
    first_mismatch: Word | None = None

    @property
    def ok(self) -> bool:
        return self.mismatches == 0


def check_pair(c: Word, d: Word) -> tuple[bool, bool]:
    """``(long, ok)`` for the product ``c d`` of two involutions.

    ``long`` says whether the cyclic reduction has length >= 2; then ``ok``
    requires a verified witness.
    """
    w = multiply(c, d)
    core, _ = cyclic_reduce(w)
    if not isinstance(core, CyclicWord):
        return False, True
    try:
        wit = two_involution_witness(core)
    except InvariantViolation:
        return True, False
    if wit is None:
        return True, False
    ok = is_involution(wit.c) and is_involution(wit.d) and multiply(wit.c, wit.d) == core.word
    return True, ok


def _tally(pairs_iter):
    pairs = long_products = mismatches = 0
    first = None
    for c, d in pairs_iter:
        pairs += 1
        is_long, ok = check_pair(c, d)
        long_products += is_long
        if not ok:
            mismatches += 1
            if first is None:
                first = multiply(c, d)
    return ScanResult(pairs, long_products, mismatches, first)


def exhaustive_lemma1_scan(family: FactorFamily, max_conj: int) -> ScanResult:
    """Check every pair of involutions with conjugators of length <= ``max_conj``."""
    invs = conjugated_involutions(family, max_conj)
    return _tally(product(invs, repeat=2))


def sampled_lemma1_scan(family: FactorFamily, samples: int, max_conj: int, rng) -> ScanResult:
    """Check ``samples`` random pairs ``(u c1 u^-1, v c2 v^-1)``."""
    letters = involution_letters(family)
    if not letters:
        raise ValueError("no factor contains an involution")

    def draw():
        c = letters[rng.randrange(len(letters))]
        u = random_word(family, rng.randrange(max_conj + 1), rng)
        return conjugate(c, u)

    def pairs():
        for _ in range(samples):
            c = draw()
            d = draw()
            yield c, d

    return _tally(pairs())
