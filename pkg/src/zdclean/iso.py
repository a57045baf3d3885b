"""Brute-force ring isomorphism search with invariant pruning."""

from __future__ import annotations

import numpy as np

from .ring import CapExceeded, FiniteRing, RingMap

ISO_CAP = 64


def _additive_order(R: FiniteRing, x: int) -> int:
    k, acc = 1, x
    while acc != R.zero:
        acc = R.add(acc, x)
        k += 1
    return k


def _power_shape(R: FiniteRing, x: int) -> tuple[int, int]:
    """(m, n) for the first repeat x^m == x^n, m > n >= 1."""
    seen = {}
    acc, k = x, 1
    while acc not in seen:
        seen[acc] = k
        acc = R.mul(acc, x)
        k += 1
    return k, seen[acc]


def element_profile(R: FiniteRing, x: int) -> tuple:
    """Isomorphism-invariant fingerprint of one element."""
    sq = R.mul(x, x)
    left_ann = int((R.mul_table[x] == R.zero).sum())
    right_ann = int((R.mul_table[:, x] == R.zero).sum())
    central = bool((R.mul_table[x] == R.mul_table[:, x]).all())
    return (_additive_order(R, x), sq == x, sq == R.neg(x),
            _power_shape(R, x), left_ann, right_ann, central)


def _profiles(R: FiniteRing) -> list[tuple]:
    return R.memo("iso_profiles", lambda: [element_profile(R, x) for x in R.elements])


def find_isomorphism(R: FiniteRing, S: FiniteRing, cap: int = ISO_CAP) -> RingMap | None:
    """A verified ring isomorphism R -> S, or None if none exists.

    Backtracking over images of one unmapped element at a time; every choice
    is closed under + and * against the partial map so conflicts surface
    early. Candidates must share the element profile.
    """
    for ring in (R, S):
        if ring.order > cap:
            raise CapExceeded(f"isomorphism search on {ring.provenance or 'ring'}", ring.order, cap)
    if R.order != S.order:
        return None
    pr, ps = _profiles(R), _profiles(S)
    if sorted(pr) != sorted(ps):
        return None
    n = R.order
    by_profile: dict[tuple, list[int]] = {}
    for y in S.elements:
        by_profile.setdefault(ps[y], []).append(y)

    def extend(fwd: dict[int, int], bwd: dict[int, int], x: int, y: int):
        fwd, bwd = dict(fwd), dict(bwd)
        queue = [(x, y)]
        while queue:
            a, b = queue.pop()
            if a in fwd:
                if fwd[a] != b:
                    return None
                continue
            if b in bwd or pr[a] != ps[b]:
                return None
            fwd[a], bwd[b] = b, a
            for c, d in list(fwd.items()):
                queue.append((R.add(a, c), S.add(b, d)))
                queue.append((R.mul(a, c), S.mul(b, d)))
                queue.append((R.mul(c, a), S.mul(d, b)))
        return fwd, bwd

    def search(fwd, bwd):
        if len(fwd) == n:
            return fwd
        x = min(v for v in R.elements if v not in fwd)
        for y in by_profile.get(pr[x], []):
            if y in bwd:
                continue
            state = extend(fwd, bwd, x, y)
            if state is None:
                continue
            found = search(*state)
            if found is not None:
                return found
        return None

    start = extend({}, {}, R.zero, S.zero)
    if start is not None:
        start = extend(*start, R.one, S.one)
    if start is None:
        return None
    found = search(*start)
    if found is None:
        return None
    image = np.array([found[x] for x in R.elements])
    return RingMap(R, S, image)


def isomorphic(R: FiniteRing, S: FiniteRing, cap: int = ISO_CAP) -> bool:
    return find_isomorphism(R, S, cap) is not None
