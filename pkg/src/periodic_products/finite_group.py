"""Finite groups stored as Cayley tables, and their subgroup machinery.

Elements are the integers ``0 .. k-1``; ``table[x, y]`` is the index of
``x * y``.  Every operation here is a pure function of immutable inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundExceeded, NotAGroup, NotNormal

DEFAULT_ENUMERATION_BOUND = 4096


def _index_dtype(k):
    # Cayley tables dominate memory; store them as narrow as the order allows
    return np.int16 if k <= np.iinfo(np.int16).max else np.int32


def _readonly(arr, dtype=np.int64):
    arr = np.array(arr, dtype=dtype)
    arr.setflags(write=False)
    return arr


class FiniteGroup:
    """A validated finite group.

    Parameters
    ----------
    table : k x k array-like of element indices, ``table[x][y] = x*y``.
    names : display names, one per element (defaults to ``"0" .. "k-1"``).
    name : identifier used in reports.

    Raises :class:`NotAGroup` naming the first axiom that fails.
    """

    def __init__(self, table, names: Sequence[str] | None = None, name: str = "G"):
        self.name = name
        self._table = _check_table(table)
        k = self._table.shape[0]
        if names is None:
            names = [str(i) for i in range(k)]
        names = tuple(str(s) for s in names)
        if len(names) != k:
            raise ValueError(f"{len(names)} names given for a group of order {k}")
        if len(set(names)) != k:
            raise ValueError("element names must be distinct")
        self.names = names
        self._index = {s: i for i, s in enumerate(names)}
        self.identity = _find_identity(self._table)
        self._inv = _readonly(_find_inverses(self._table, self.identity))
        _check_associative(self._table, self.identity)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """Greedy generating set (by index); at most log2(order) elements."""
        return tuple(_greedy_generators(self, range(self.order)))

    # -- basic arithmetic ------------------------------------------------

    @property
    def order(self) -> int:
        return self._table.shape[0]

    def __len__(self):
        return self.order

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def inverses(self) -> np.ndarray:
        return self._inv

    def mul(self, x: int, y: int) -> int:
        return int(self._table[x, y])

    def inv(self, x: int) -> int:
        return int(self._inv[x])

    def power(self, x: int, m: int) -> int:
        """``x**m`` by repeated squaring; negative ``m`` allowed."""
        if m < 0:
            x, m = self.inv(x), -m
        result = self.identity
        while m:
            if m & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            m >>= 1
        return result

    def powers(self, m: int) -> np.ndarray:
        """Array whose entry ``x`` is ``x**m``, computed for all x at once."""
        base = np.arange(self.order)
        if m < 0:
            base, m = self._inv.copy(), -m
        result = np.full(self.order, self.identity)
        while m:
            if m & 1:
                result = self._table[result, base]
            base = self._table[base, base]
            m >>= 1
        return result

    def conjugate(self, x: int, g: int) -> int:
        """``g x g^-1``."""
        return int(self._table[self._table[g, x], self._inv[g]])

    def conjugacy_class(self, x: int) -> np.ndarray:
        t = self._table
        return np.unique(t[t[:, x], self._inv])

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """All classes, each sorted, ordered by least member."""
        seen = np.zeros(self.order, dtype=bool)
        classes = []
        for x in range(self.order):
            if not seen[x]:
                cls = self.conjugacy_class(x)
                seen[cls] = True
                classes.append(tuple(int(c) for c in cls))
        return tuple(classes)

    # -- names -----------------------------------------------------------

    def element(self, name: str) -> int:
        """Index of the element displayed as ``name``.

        Falls back to a bare integer index when no element has that name.
        """
        try:
            return self._index[name]
        except KeyError:
            pass
        if name.isdigit() and int(name) < self.order:
            return int(name)
        raise KeyError(f"{self.name} has no element {name!r}")

    def name_of(self, x: int) -> str:
        return self.names[x]

    def __repr__(self):
        return f"<FiniteGroup {self.name} of order {self.order}>"


# -- validation ------------------------------------------------------------


def _check_table(table):
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotAGroup("closure", (), f"table must be a non-empty square array, got shape {t.shape}")
    if not np.issubdtype(t.dtype, np.integer):
        raise NotAGroup("closure", (), "table entries must be integers")
    k = t.shape[0]
    if t.min() < 0 or t.max() >= k:
        x, y = (int(v) for v in np.argwhere((t < 0) | (t >= k))[0])
        raise NotAGroup("closure", (x, y), f"product {int(t[x, y])} is not an element")
    return _readonly(t, _index_dtype(k))


def _find_identity(t):
    k = t.shape[0]
    ar = np.arange(k)
    for e in range(k):
        if np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar):
            return e
    raise NotAGroup("identity", (), "no two-sided identity element")


def _find_inverses(t, e):
    hits = t == e
    counts = hits.sum(axis=1)
    if (counts != 1).any():
        x = int(np.flatnonzero(counts != 1)[0])
        raise NotAGroup("inverse", (x,), f"{int(counts[x])} right inverses")
    inv = hits.argmax(axis=1)
    bad = np.flatnonzero(t[inv, np.arange(t.shape[0])] != e)
    if bad.size:
        x = int(bad[0])
        raise NotAGroup("inverse", (x, int(inv[x])), "right inverse is not a left inverse")
    return inv


def _light_generators(t, e):
    """Greedy set ``A`` whose closure under right multiplication by ``A`` is everything.

    Elements passing Light's test form a submagma, so checking ``A`` is
    enough.  For a group each new generator at least doubles the reached
    subgroup, keeping ``|A|`` at most ``log2(k)``.
    """
    k = t.shape[0]
    reached = np.zeros(k, dtype=bool)
    reached[e] = True
    gens = []
    for x in range(k):
        if reached[x]:
            continue
        gens.append(x)
        reached[x] = True
        frontier = np.flatnonzero(reached)
        while frontier.size:
            prods = t[np.ix_(frontier, gens)].ravel()
            fresh = np.unique(prods[~reached[prods]])
            reached[fresh] = True
            frontier = fresh
    return gens


def _check_associative(t, e):
    """Exhaustive associativity decision via Light's test.

    ``(x a) y = x (a y)`` for all x, y and every ``a`` in a generating set is
    equivalent to associativity for all triples, at O(k^2 * |gens|) cost.
    """
    k = t.shape[0]
    block = max(1, (1 << 22) // k)  # rows per chunk, bounds peak memory
    for a in _light_generators(t, e):
        xa, ay = t[:, a], t[a, :]
        for lo in range(0, k, block):
            lhs = t[xa[lo:lo + block]]  # (x a) y
            rhs = np.take(t[lo:lo + block], ay, axis=1)  # x (a y)
            diff = lhs != rhs
            if diff.any():
                x, y = (int(v) for v in np.argwhere(diff)[0])
                raise NotAGroup("associativity", (lo + x, a, y))


# -- constructors ----------------------------------------------------------


def cyclic(r: int, gen: str = "a", name: str | None = None) -> FiniteGroup:
    """Z_r with elements named ``e, a, a^2, ...``."""
    if r < 1:
        raise ValueError("cyclic group order must be positive")
    # row i is 0..r-1 rotated left by i
    ring = np.tile(np.arange(r, dtype=_index_dtype(r)), 2)
    table = np.lib.stride_tricks.sliding_window_view(ring, r)[:r]
    names = ["e", gen] + [f"{gen}^{i}" for i in range(2, r)]
    return FiniteGroup(table, names[:r], name or f"Z{r}")


def dihedral(r: int, name: str | None = None) -> FiniteGroup:
    """Symmetries of the regular r-gon (order 2r); ``r^i*s`` means rotate after reflecting."""
    if r < 1:
        raise ValueError("dihedral parameter must be positive")
    k = 2 * r
    table = np.empty((k, k), dtype=np.int64)
    for x in range(k):
        i, j = x % r, x // r
        for y in range(k):
            p, q = y % r, y // r
            table[x, y] = (i + (-p if j else p)) % r + r * ((j + q) % 2)

    def label(x):
        i, j = x % r, x // r
        rot = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
        if j == 0:
            return rot or "e"
        return f"{rot}*s" if rot else "s"

    return FiniteGroup(table, [label(x) for x in range(k)], name or f"D{r}")


def _cycle_name(perm):
    seen, parts = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric(degree: int, name: str | None = None) -> FiniteGroup:
    """S_degree acting on 1..degree; ``x*y`` applies y first, then x."""
    if not 1 <= degree <= 5:
        raise ValueError("symmetric groups are supported for degree 1..5")
    perms = sorted(permutations(range(degree)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(degree))] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_name(p) for p in perms], name or f"S{degree}")


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    m = h.order
    tg, th = g.table, h.table
    x = np.arange(g.order * m)
    gi, hi = x // m, x % m
    table = tg[gi[:, None], gi[None, :]] * m + th[hi[:, None], hi[None, :]]
    names = [f"({g.names[a]},{h.names[b]})" for a, b in zip(gi, hi)]
    return FiniteGroup(table, names, name or f"{g.name}x{h.name}")


def quaternion(name: str = "Q8") -> FiniteGroup:
    """The quaternion group {±1, ±i, ±j, ±k}."""
    units = ["1", "i", "j", "k"]
    # unit products as (sign, unit)
    prod = {
        ("1", u): (1, u) for u in units
    } | {(u, "1"): (1, u) for u in units} | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }
    elems = [(s, u) for s in (1, -1) for u in units]
    index = {el: n for n, el in enumerate(elems)}
    table = []
    for s1, u1 in elems:
        row = []
        for s2, u2 in elems:
            s, u = prod[(u1, u2)]
            row.append(index[(s * s1 * s2, u)])
        table.append(row)
    names = ["e" if (s, u) == (1, "1") else ("" if s > 0 else "-") + u for s, u in elems]
    return FiniteGroup(table, names, name)


# -- subgroups -------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup of ``parent`` given by its member indices."""

    parent: FiniteGroup
    members: frozenset
    is_normal: bool

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, x):
        return x in self.members

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.parent.order

    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def issubset(self, other: SubgroupSet) -> bool:
        return self.members <= other.members

    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by index."""
        return _greedy_generators(self.parent, self.sorted_members())

    def __repr__(self):
        tag = "normal " if self.is_normal else ""
        return f"<{tag}subgroup of {self.parent.name}, order {self.order}>"


def _close(group, gens, mask=None):
    """Mask of the subgroup generated by ``gens`` together with ``mask``.

    ``mask`` must already be a subgroup generated by a subset of ``gens``.
    """
    t = group.table
    if mask is None:
        mask = np.zeros(group.order, dtype=bool)
        mask[group.identity] = True
    else:
        mask = mask.copy()
    gens = np.asarray(list(gens), dtype=np.int64)
    if not gens.size:
        return mask
    frontier = np.flatnonzero(mask)
    while frontier.size:
        prods = t[np.ix_(frontier, gens)].ravel()
        frontier = np.unique(prods[~mask[prods]])
        mask[frontier] = True
    return mask


def _greedy_generators(group, members):
    gens, mask = [], np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    for x in members:
        if not mask[x]:
            gens.append(int(x))
            mask = _close(group, gens, mask)
    return gens


def _is_normal_mask(group, mask):
    # conjugating generators of the subgroup by generators of the group suffices
    if mask.all():
        return True
    t = group.table
    hs = np.asarray(_greedy_generators(group, np.flatnonzero(mask)), dtype=np.int64)
    if not hs.size:
        return True
    gs = np.asarray(group.generators, dtype=np.int64)
    conj = t[t[np.ix_(gs, hs)], group.inverses[gs][:, None]]
    return bool(mask[conj].all())


def _subgroup_from_mask(group, mask, is_normal=None):
    if is_normal is None:
        is_normal = _is_normal_mask(group, mask)
    return SubgroupSet(group, frozenset(int(x) for x in np.flatnonzero(mask)), is_normal)


def _generated_mask(group, elements):
    gens, mask = [], np.zeros(group.order, dtype=bool)
    mask[group.identity] = True
    for x in sorted({int(s) for s in elements}):
        if not mask[x]:
            gens.append(x)
            mask = _close(group, gens, mask)
    return mask


def _check_elements(group, elements):
    elements = [int(x) for x in elements]
    for x in elements:
        if not 0 <= x < group.order:
            raise IndexError(f"{x} is not an element of {group.name}")
    return elements


def element_order(group: FiniteGroup, x: int) -> int:
    m, y = 1, x
    while y != group.identity:
        y = group.mul(y, x)
        m += 1
    return m


def involutions(group: FiniteGroup) -> list[int]:
    sq = group.table[np.arange(group.order), np.arange(group.order)]
    return [x for x in range(group.order) if x != group.identity and sq[x] == group.identity]


def subgroup_generated(group: FiniteGroup, elements: Iterable[int]) -> SubgroupSet:
    """Subgroup generated by ``elements``; normality is tested explicitly."""
    return _subgroup_from_mask(group, _generated_mask(group, _check_elements(group, elements)))


def normal_closure(group: FiniteGroup, elements: Iterable[int]) -> SubgroupSet:
    """Smallest normal subgroup containing ``elements``."""
    conjugates = set()
    for x in set(_check_elements(group, elements)):
        conjugates.update(int(c) for c in group.conjugacy_class(x))
    return _subgroup_from_mask(group, _generated_mask(group, conjugates), True)


def power_subgroup(group: FiniteGroup, n: int) -> SubgroupSet:
    """The subgroup G^n generated by all n-th powers.

    The generating set is closed under conjugation, so the result is
    normal; this is re-verified before returning.
    """
    if n < 1:
        raise ValueError("exponent must be positive")
    mask = _generated_mask(group, np.unique(group.powers(n)))
    if not _is_normal_mask(group, mask):
        raise AssertionError("power subgroup failed the normality check")
    return _subgroup_from_mask(group, mask, True)


def exponent_divides(group: FiniteGroup, n: int) -> bool:
    """True iff ``x**n == e`` for every element."""
    return bool((group.powers(n) == group.identity).all())


def is_normal(group: FiniteGroup, members: Iterable[int]) -> bool:
    mask = np.zeros(group.order, dtype=bool)
    mask[_check_elements(group, members)] = True
    return _is_normal_mask(group, mask)


def trivial_subgroup(group: FiniteGroup) -> SubgroupSet:
    return SubgroupSet(group, frozenset([group.identity]), True)


def whole_group(group: FiniteGroup) -> SubgroupSet:
    return SubgroupSet(group, frozenset(range(group.order)), True)


def enumerate_normal_subgroups(group: FiniteGroup, bound: int = DEFAULT_ENUMERATION_BOUND) -> list[SubgroupSet]:
    """All normal subgroups, ordered by (order, sorted member tuple).

    Every normal subgroup is a join of normal closures of single conjugacy
    classes, so the lattice is built by joining those principal ones.
    """
    if group.order > bound:
        raise BoundExceeded(f"{group.name} has order {group.order} > enumeration bound {bound}")
    e = group.identity

    principal = {}  # mask bytes -> (mask, class generators)
    done = np.zeros(group.order, dtype=bool)
    done[e] = True
    for cls in group.conjugacy_classes:
        x = cls[0]
        if done[x]:
            continue
        mask = _generated_mask(group, cls)
        principal.setdefault(mask.tobytes(), (mask, list(cls)))
        # x^j with j prime to ord(x) has the same normal closure
        m = element_order(group, x)
        y = x
        for j in range(1, m):
            if math.gcd(j, m) == 1:
                done[group.conjugacy_class(y)] = True
            y = group.mul(y, x)

    trivial = np.zeros(group.order, dtype=bool)
    trivial[e] = True
    found = {trivial.tobytes(): (trivial, [])}
    queue = [trivial.tobytes()]
    while queue:
        key = queue.pop()
        mask, gens = found[key]
        for pmask, pgens in principal.values():
            if not (pmask & ~mask).any():
                continue
            joined_gens = gens + pgens
            joined = _close(group, joined_gens, mask)
            jkey = joined.tobytes()
            if jkey not in found:
                found[jkey] = (joined, joined_gens)
                queue.append(jkey)

    subs = [_subgroup_from_mask(group, mask, True) for mask, _ in found.values()]
    subs.sort(key=lambda s: (s.order, s.sorted_members()))
    return subs


def quotient(group: FiniteGroup, normal: SubgroupSet) -> tuple[FiniteGroup, np.ndarray]:
    """Coset group G/N and the projection (array: element -> coset index).

    Cosets are represented by their least element index and numbered in
    increasing order of representative.
    """
    if normal.parent is not group:
        raise ValueError("subgroup belongs to a different group")
    if not normal.is_normal or not _is_normal_mask(group, normal.mask()):
        raise NotNormal(f"{normal!r} is not normal in {group.name}")
    t = group.table
    members = np.array(normal.sorted_members())
    rep = t[:, members].min(axis=1)
    reps = np.unique(rep)
    coset_of = np.full(group.order, -1)
    coset_of[reps] = np.arange(reps.size)
    proj = coset_of[rep]
    table = proj[t[np.ix_(reps, reps)]]
    names = [group.names[r] for r in reps]
    q = FiniteGroup(table, names, f"{group.name}/N{normal.order}")
    if not np.array_equal(proj[t], q.table[proj[:, None], proj[None, :]]):
        raise AssertionError("quotient projection is not a homomorphism")
    return q, _readonly(proj)


def subgroup_as_group(sub: SubgroupSet, name: str | None = None) -> FiniteGroup:
    """The subgroup as a standalone group (elements renumbered in index order)."""
    members = np.array(sub.sorted_members())
    pos = np.full(sub.parent.order, -1)
    pos[members] = np.arange(members.size)
    table = pos[sub.parent.table[np.ix_(members, members)]]
    return FiniteGroup(table, [sub.parent.names[m] for m in members], name or f"{sub.parent.name}_sub{sub.order}")
