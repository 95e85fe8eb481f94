"""Words in the free product of a family of finite groups.

A :class:`Word` is the alternating normal form: a sequence of syllables
``(factor, element)`` with no identity elements and no two neighbours in the
same factor.  Every element of the free product has exactly one such form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import BadReference, FamilyMismatch, InvariantViolation, NotNormal, ParseError, StrictViolation
from .finite_group import FiniteGroup, SubgroupSet, quotient

MIN_STRICT_EXPONENT = 665


def strict_exponent_ok(n: int) -> bool:
    return n % 2 == 1 and n >= MIN_STRICT_EXPONENT


class FactorFamily:
    """The factors ``G_1, ..., G_m`` of a free (or n-periodic) product.

    ``strict`` demands odd ``n >= 665``.  ``proper=False`` lifts the
    requirement of at least two nontrivial factors; it is used for images
    under quotient maps, where a factor may collapse to the trivial group.
    """

    def __init__(self, factors: Sequence[FiniteGroup], n: int, strict: bool = True,
                 names: Sequence[str] | None = None, proper: bool = True):
        self.factors = tuple(factors)
        self.n = int(n)
        self.strict = strict
        self.names = tuple(names) if names is not None else tuple(f"g{i + 1}" for i in range(len(self.factors)))
        if len(self.names) != len(self.factors):
            raise ValueError("one name per factor required")
        if len(set(self.names)) != len(self.names):
            raise ValueError("factor names must be distinct")
        for name in self.names:
            if not name or ":" in name or any(c.isspace() for c in name):
                raise ValueError(f"bad factor name {name!r}")
        if self.n < 1:
            raise ValueError("exponent n must be positive")
        if proper:
            if len(self.factors) < 2:
                raise ValueError("a nontrivial product needs at least two factors")
            for name, g in zip(self.names, self.factors):
                if g.order < 2:
                    raise ValueError(f"factor {name} is trivial")
        if strict and not strict_exponent_ok(self.n):
            raise StrictViolation(f"strict mode requires odd n >= {MIN_STRICT_EXPONENT}, got {self.n}")
        self._index = {name: i for i, name in enumerate(self.names)}

    def __len__(self):
        return len(self.factors)

    def __getitem__(self, i) -> FiniteGroup:
        return self.factors[i]

    def factor_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise BadReference(f"no factor named {name!r}") from None

    def identity(self) -> Word:
        return Word(self, ())

    def letter(self, factor: int, element: int) -> Word:
        """The one-syllable word for a factor element (empty if identity)."""
        return reduce([(factor, element)], self)

    def replace_factor(self, i: int, group: FiniteGroup) -> FactorFamily:
        factors = list(self.factors)
        factors[i] = group
        return FactorFamily(factors, self.n, strict=False, names=self.names, proper=False)

    def __repr__(self):
        inner = ", ".join(f"{nm}={g.name}" for nm, g in zip(self.names, self.factors))
        return f"<FactorFamily n={self.n} {'strict' if self.strict else 'lenient'} {inner}>"


class Syllable(NamedTuple):
    factor: int
    element: int


class Word:
    """Reduced alternating word; construct with :func:`reduce` or :func:`parse_word`."""

    __slots__ = ("family", "syllables")

    def __init__(self, family: FactorFamily, syllables: Iterable[tuple[int, int]] = (), check: bool = True):
        self.family = family
        self.syllables = tuple(Syllable(int(f), int(x)) for f, x in syllables)
        if check:
            prev = None
            for f, x in self.syllables:
                if not 0 <= f < len(family.factors) or not 0 <= x < family.factors[f].order:
                    raise BadReference(f"syllable ({f}, {x}) out of range")
                if x == family.factors[f].identity:
                    raise ValueError("identity syllable in a reduced word")
                if f == prev:
                    raise ValueError("adjacent syllables from the same factor")
                prev = f

    def __len__(self):
        return len(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __getitem__(self, i):
        return self.syllables[i]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.family is other.family and self.syllables == other.syllables

    def __hash__(self):
        return hash((id(self.family), self.syllables))

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, m):
        return power(self, m)

    def inverse(self) -> Word:
        return invert(self)

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self) or '1'})"


def _same_family(u, v):
    if u.family is not v.family:
        raise FamilyMismatch("words belong to different factor families")


def reduce(raw: Iterable[tuple[int, int]], family: FactorFamily) -> Word:
    """Normal form of a product of factor letters (identities allowed)."""
    stack: list[tuple[int, int]] = []
    factors = family.factors
    for f, x in raw:
        f, x = int(f), int(x)
        if not 0 <= f < len(factors) or not 0 <= x < factors[f].order:
            raise BadReference(f"letter ({f}, {x}) does not exist in the family")
        g = factors[f]
        if x == g.identity:
            continue
        if stack and stack[-1][0] == f:
            y = g.mul(stack.pop()[1], x)
            if y != g.identity:
                stack.append((f, y))
        else:
            stack.append((f, x))
    return Word(family, stack, check=False)


def multiply(u: Word, v: Word) -> Word:
    _same_family(u, v)
    a, b = u.syllables, v.syllables
    i, j = len(a), 0
    factors = u.family.factors
    while i and j < len(b) and a[i - 1].factor == b[j].factor:
        g = factors[b[j].factor]
        y = g.mul(a[i - 1].element, b[j].element)
        if y != g.identity:
            return Word(u.family, a[:i - 1] + (Syllable(b[j].factor, y),) + b[j + 1:], check=False)
        i -= 1
        j += 1
    return Word(u.family, a[:i] + b[j:], check=False)


def invert(u: Word) -> Word:
    factors = u.family.factors
    return Word(u.family, [(f, factors[f].inv(x)) for f, x in reversed(u.syllables)], check=False)


def power(u: Word, m: int) -> Word:
    if m < 0:
        u, m = invert(u), -m
    result = u.family.identity()
    while m:
        if m & 1:
            result = multiply(result, u)
        u = multiply(u, u)
        m >>= 1
    return result


def conjugate(w: Word, c: Word) -> Word:
    """``c w c^-1``."""
    return multiply(multiply(c, w), invert(c))


# -- cyclic words ------------------------------------------------------------


def least_rotation(seq: Sequence) -> int:
    """Least index of the lexicographically minimal rotation (Booth's algorithm)."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) * 2
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


def rotate(w: Word, shift: int) -> Word:
    s = w.syllables
    if not s:
        return w
    shift %= len(s)
    return Word(w.family, s[shift:] + s[:shift], check=False)


def is_cyclically_reduced(w: Word) -> bool:
    return len(w) < 2 or w[0].factor != w[-1].factor


class CyclicWord:
    """A cyclically reduced word together with its canonical rotation.

    ``rotation`` is the least shift giving the lexicographically smallest
    rotation under the order (factor index, element index).  Equality and
    hashing go through the canonical rotation, so two cyclic words are equal
    exactly when they are conjugate in the free product.
    """

    __slots__ = ("word", "rotation")

    def __init__(self, word: Word):
        if not is_cyclically_reduced(word):
            raise ValueError(f"{word!r} is not cyclically reduced")
        self.word = word
        self.rotation = least_rotation(word.syllables)

    @property
    def family(self):
        return self.word.family

    @property
    def canonical(self) -> Word:
        return rotate(self.word, self.rotation)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return self.family is other.family and self.canonical.syllables == other.canonical.syllables

    def __hash__(self):
        return hash((id(self.family), self.canonical.syllables))

    def __str__(self):
        return format_word(self.canonical)

    def __repr__(self):
        return f"CyclicWord({self})"


def cyclic_reduce(w: Word):
    """Split ``w = conjugator * core * conjugator^-1`` with ``core`` cyclically reduced.

    Returns ``(core, conjugator)``; ``core`` is a :class:`CyclicWord` when it
    has at least two syllables and a plain :class:`Word` otherwise.  Equal-
    factor ends are peeled from the left.
    """
    family = w.family
    s = list(w.syllables)
    conj = []
    lo, hi = 0, len(s)  # core is s[lo:hi] plus an optional merged tail
    tail = None
    while hi - lo >= 2 and s[lo].factor == s[hi - 1].factor:
        first, last = s[lo], s[hi - 1]
        conj.append(first)
        g = family.factors[first.factor]
        y = g.mul(last.element, first.element)
        lo += 1
        hi -= 1
        if y != g.identity:
            tail = Syllable(first.factor, y)
            break
    core_syl = s[lo:hi] + ([tail] if tail is not None else [])
    core = Word(family, core_syl, check=False)
    conjugator = Word(family, conj, check=False)
    if len(core) >= 2:
        return CyclicWord(core), conjugator
    return core, conjugator


def _core_word(core):
    return core.word if isinstance(core, CyclicWord) else core


def is_conjugate(u: Word, v: Word) -> bool:
    _same_family(u, v)
    cu, _ = cyclic_reduce(u)
    cv, _ = cyclic_reduce(v)
    if isinstance(cu, CyclicWord) and isinstance(cv, CyclicWord):
        return cu == cv
    if isinstance(cu, CyclicWord) or isinstance(cv, CyclicWord):
        return False
    if cu.is_identity or cv.is_identity:
        return cu.is_identity and cv.is_identity
    (f, x), (h, y) = cu[0], cv[0]
    if f != h:
        return False
    g = u.family.factors[f]
    return any(g.conjugate(x, c) == y for c in range(g.order))


@dataclass(frozen=True)
class TorsionCore:
    """Factor element conjugate to a finite-order word; ``factor`` is None for the identity."""

    factor: int | None
    element: int | None
    conjugator: Word


def torsion_core(w: Word) -> TorsionCore | None:
    """The factor element ``w`` is conjugate to, or None if ``w`` has infinite order."""
    core, conj = cyclic_reduce(w)
    if isinstance(core, CyclicWord):
        return None
    if core.is_identity:
        return TorsionCore(None, None, conj)
    f, x = core[0]
    return TorsionCore(f, x, conj)


def is_involution(w: Word) -> bool:
    tc = torsion_core(w)
    if tc is None or tc.factor is None:
        return False
    g = w.family.factors[tc.factor]
    return g.mul(tc.element, tc.element) == g.identity


@dataclass(frozen=True)
class InvolutionWitness:
    """``w = c d`` with involutions ``c, d``.

    The rotation of ``w`` by ``shift`` has the normal form ``c1 z c2 z^-1``;
    ``c1`` sits at position ``shift`` of ``w`` and ``c2`` at ``c2_position``.
    """

    shift: int
    half: int
    c1_position: int
    c2_position: int
    z: Word
    c: Word
    d: Word


def two_involution_witness(w) -> InvolutionWitness | None:
    """Decide whether a cyclically reduced word is a product of two involutions.

    Accepts a :class:`CyclicWord` or a cyclically reduced :class:`Word` of
    length >= 2.  Rotations are scanned in order of shift; the first match
    is returned.  Words of odd length never match.
    """
    word = w.word if isinstance(w, CyclicWord) else w
    if len(word) < 2 or not is_cyclically_reduced(word):
        raise ValueError("need a cyclically reduced word of length >= 2")
    family = word.family
    s = word.syllables
    length = len(s)
    if length % 2:
        return None
    k = length // 2
    factors = family.factors

    def is_inv(syl):
        g = factors[syl.factor]
        return g.mul(syl.element, syl.element) == g.identity

    def inverse_pair(p, q):
        return p.factor == q.factor and factors[p.factor].inv(p.element) == q.element

    for shift in range(length):
        r = s[shift:] + s[:shift]
        if not (is_inv(r[0]) and is_inv(r[k])):
            continue
        if all(inverse_pair(r[i], r[length - i]) for i in range(1, k)):
            prefix = Word(family, s[:shift], check=False)
            c = conjugate(Word(family, [r[0]], check=False), prefix)
            d = multiply(invert(c), word)
            e = family.identity()
            if not (c * c == e and d * d == e and not c.is_identity and not d.is_identity and c * d == word):
                raise InvariantViolation(f"two-involution witness for {word} failed to verify")
            return InvolutionWitness(
                shift=shift,
                half=k,
                c1_position=shift,
                c2_position=(shift + k) % length,
                z=Word(family, r[1:k], check=False),
                c=c,
                d=d,
            )
    return None


# -- homomorphisms -------------------------------------------------------------


def deletion_retraction(w: Word, kill: Iterable[int]) -> Word:
    """Delete every syllable from the factors in ``kill`` and re-reduce."""
    kill = set(kill)
    return reduce([syl for syl in w.syllables if syl.factor not in kill], w.family)


class QuotientHom:
    """The map ``*G_j -> (G_i/N) * (other factors)`` induced by ``G_i -> G_i/N``."""

    def __init__(self, family: FactorFamily, factor: int, normal: SubgroupSet):
        group = family.factors[factor]
        if normal.parent is not group:
            raise ValueError("normal subgroup does not belong to the chosen factor")
        if not normal.is_normal:
            raise NotNormal(f"{normal!r} is not normal")
        self.source = family
        self.factor = factor
        self.normal = normal
        self.quotient_group, self.projection = quotient(group, normal)
        self.target = family.replace_factor(factor, self.quotient_group)

    def __call__(self, w: Word) -> Word:
        if w.family is not self.source:
            raise FamilyMismatch("word is not over the source family")
        proj = self.projection
        return reduce(
            [(f, int(proj[x])) if f == self.factor else (f, x) for f, x in w.syllables],
            self.target,
        )


def induced_quotient_hom(family: FactorFamily, factor: int, normal: SubgroupSet) -> QuotientHom:
    return QuotientHom(family, factor, normal)


# -- literals ------------------------------------------------------------------

_TOKEN = re.compile(r"\S+")


def format_word(w: Word) -> str:
    fam = w.family
    return " ".join(f"{fam.names[f]}:{fam.factors[f].names[x]}" for f, x in w.syllables)


def parse_letter(token: str, family: FactorFamily) -> tuple[int, int]:
    """``factor:element`` or ``factor:element^k`` to a (factor, element) pair."""
    if ":" not in token:
        raise ParseError(f"letter {token!r} must look like factor:element")
    fname, ename = token.split(":", 1)
    f = family.factor_index(fname)
    group = family.factors[f]
    try:
        return f, group.element(ename)
    except KeyError:
        pass
    if "^" in ename:
        base, _, exp = ename.rpartition("^")
        try:
            k = int(exp)
            x = group.element(base)
        except (ValueError, KeyError):
            raise BadReference(f"{token!r}: no such element in factor {fname}") from None
        return f, group.power(x, k)
    raise BadReference(f"{token!r}: no such element in factor {fname}")


def parse_word(text: str, family: FactorFamily) -> Word:
    letters = []
    for m in _TOKEN.finditer(text):
        try:
            letters.append(parse_letter(m.group(), family))
        except ParseError as exc:
            raise ParseError(str(exc), line=1, column=m.start() + 1) from None
    return reduce(letters, family)


def random_word(family: FactorFamily, length: int, rng) -> Word:
    """Uniform-ish random reduced word with exactly ``length`` syllables.

    ``rng`` needs a ``randrange(n)`` method (``random.Random`` or
    :class:`~periodic_products.rng.SplitMix64`).
    """
    syl, prev = [], None
    m = len(family.factors)
    for _ in range(length):
        f = rng.randrange(m - 1) if prev is not None else rng.randrange(m)
        if prev is not None and f >= prev:
            f += 1
        g = family.factors[f]
        if g.order < 2:
            raise ValueError("cannot draw letters from a trivial factor")
        x = rng.randrange(g.order - 1)
        if x >= g.identity:
            x += 1
        syl.append((f, x))
        prev = f
    return Word(family, syl, check=False)


def syllable_codes(w: Word) -> np.ndarray:
    """Injective integer encoding of the syllables (for fast comparisons)."""
    width = max(g.order for g in w.family.factors)
    return np.array([f * width + x for f, x in w.syllables], dtype=np.int64)
