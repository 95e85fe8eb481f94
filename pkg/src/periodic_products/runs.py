"""Maximal periodic segments of a sequence, Main-Lorentz style.

``periodic_segments(seq)`` returns every triple ``(i, j, p)`` such that
``seq[i:j]`` has period ``p`` (``seq[x] == seq[x + p]`` for ``i <= x < j - p``),
has length at least ``2p``, and cannot be extended by one position on either
side while keeping period ``p``.  Non-minimal periods are reported too.

Divide and conquer: segments crossing the split point are found with four
Z-function arrays per level, the halves are handled recursively, and a
final pass keeps only segments that are maximal in the whole sequence.
Total work is O(n log n) plus output size.
"""

from __future__ import annotations

from typing import Sequence

_SEP = object()


def z_function(s: Sequence) -> list[int]:
    """``z[i]`` is the length of the longest common prefix of ``s`` and ``s[i:]``."""
    n = len(s)
    z = [0] * n
    if n:
        z[0] = n
    lo = hi = 0
    for i in range(1, n):
        if i < hi:
            z[i] = min(hi - i, z[i - lo])
        while i + z[i] < n and s[z[i]] == s[i + z[i]]:
            z[i] += 1
        if i + z[i] > hi:
            lo, hi = i, i + z[i]
    return z


def _crossing(s, lo, mid, hi, out):
    u = s[lo:mid]
    v = s[mid:hi]
    nu, nv = len(u), len(v)
    ru, rv = u[::-1], v[::-1]
    zb = z_function(ru)  # zb[p]: common suffix of u and u[:nu-p]
    zf = z_function(v)  # zf[p]: common prefix of v and v[p:]
    zx = z_function(v + [_SEP] + u)  # LCP(u[c:], v), capped at the end of u
    zy = z_function(ru + [_SEP] + rv)  # common suffix of u and v[:p]

    def back(p):
        return zb[p] if p < nu else 0

    def fwd(p):
        return zf[p] if p < nv else 0

    # pair (mid - p, mid) inside the segment
    for p in range(1, nu + 1):
        c = nu - p
        k2 = zx[nv + 1 + c]
        right = k2 if k2 < p else p + fwd(p)
        left = back(p)
        if left + right >= p:
            out.add((lo + c - left, mid + right, p))
    # pair (mid, mid + p) inside the segment
    for p in range(1, nv):
        k1 = zy[nu + 1 + (nv - p)]
        left = k1 if k1 < p else p + back(p)
        right = fwd(p)
        if left + right >= p:
            out.add((mid - left, mid + p + right, p))


def _recurse(s, lo, hi, out):
    if hi - lo < 2:
        return
    mid = (lo + hi) // 2
    _crossing(s, lo, mid, hi, out)
    _recurse(s, lo, mid, out)
    _recurse(s, mid, hi, out)


def periodic_segments(seq: Sequence) -> set[tuple[int, int, int]]:
    s = list(seq)
    n = len(s)
    found: set[tuple[int, int, int]] = set()
    _recurse(s, 0, n, found)
    return {
        (i, j, p)
        for i, j, p in found
        if (i == 0 or s[i - 1] != s[i - 1 + p]) and (j == n or s[j] != s[j - p])
    }
