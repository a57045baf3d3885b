"""Constructors for the ring and group families used throughout the package."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .ring import (
    DEFAULT_CAP,
    FiniteGroup,
    FiniteRing,
    RingMap,
    check_ideal,
    check_size,
    make_group,
    validate_axioms,
)


def _encode(digits: np.ndarray, base: int) -> np.ndarray:
    """Mixed-radix index with the first column most significant."""
    out = np.zeros(digits.shape[:-1], dtype=np.int64)
    for col in range(digits.shape[-1]):
        out = out * base + digits[..., col]
    return out


def _digits(n_elems: int, width: int, base: int) -> np.ndarray:
    """All ``base**width`` digit tuples in index order, shape (n, width)."""
    if width == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.array(list(product(range(base), repeat=width)), dtype=np.int64)
    assert grid.shape[0] == n_elems
    return grid


def make_zn(n: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    if n < 1:
        raise ValueError(f"Z_n needs n >= 1, got {n}")
    check_size(f"Z{n}", n, cap)
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return validate_axioms(add, mul, 0, 1 % n, provenance=f"Z{n}", trusted=True)


def boolean_ring(k: int, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Power set of a k-set: symmetric difference and intersection."""
    if k < 0:
        raise ValueError(f"Bool(k) needs k >= 0, got {k}")
    n = 2 ** k
    check_size(f"Bool({k})", n, cap)
    idx = np.arange(n)
    add = idx[:, None] ^ idx[None, :]
    mul = idx[:, None] & idx[None, :]
    labels = ["{" + ",".join(str(b) for b in range(k) if i >> b & 1) + "}" for i in range(n)]
    return validate_axioms(add, mul, 0, n - 1, labels=labels,
                           provenance=f"Bool({k})", trusted=True)


def direct_product(R: FiniteRing, S: FiniteRing, cap: int = DEFAULT_CAP) -> FiniteRing:
    """Componentwise ring on pairs; pair (r, s) has index ``r*|S| + s``."""
    n = R.order * S.order
    name = f"{R.provenance} x {S.provenance}"
    check_size(name, n, cap)
    m = S.order
    r = np.arange(n) // m
    s = np.arange(n) % m
    add = R.add_table[r[:, None], r[None, :]] * m + S.add_table[s[:, None], s[None, :]]
    mul = R.mul_table[r[:, None], r[None, :]] * m + S.mul_table[s[:, None], s[None, :]]
    labels = [f"({R.labels[i // m]},{S.labels[i % m]})" for i in range(n)]
    return validate_axioms(add, mul, R.zero * m + S.zero, R.one * m + S.one,
                           labels=labels, provenance=name, trusted=True)


def product_projections(R: FiniteRing, S: FiniteRing, P: FiniteRing) -> tuple[RingMap, RingMap]:
    """The two coordinate projections of ``P = direct_product(R, S)``."""
    idx = np.arange(P.order)
    return RingMap(P, R, idx // S.order), RingMap(P, S, idx % S.order)


def _positions(k: int, shape: str) -> list[tuple[int, int]]:
    if shape == "full":
        return [(i, j) for i in range(k) for j in range(k)]
    if shape == "upper_triangular":
        return [(i, j) for i in range(k) for j in range(i, k)]
    raise ValueError(f"unknown matrix shape {shape!r}")


def matrix_ring(R: FiniteRing, k: int, shape: str = "full", cap: int = DEFAULT_CAP) -> FiniteRing:
    """k x k matrices over R, full or upper triangular.

    Entries are stored row-major (triangular: upper entries only) and the
    element index is the mixed-radix number of the entry indices.
    """
    if k < 1:
        raise ValueError(f"matrix dimension must be >= 1, got {k}")
    pos = _positions(k, shape)
    prefix = "M" if shape == "full" else "T"
    name = f"{prefix}{k}({R.provenance})"
    base = R.order
    n = base ** len(pos)
    check_size(name, n, cap)
    where = {p: c for c, p in enumerate(pos)}
    D = _digits(n, len(pos), base)

    def entry(i: int, j: int) -> np.ndarray | None:
        c = where.get((i, j))
        return None if c is None else D[:, c]

    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for c, (i, j) in enumerate(pos):
        add = add * base + R.add_table[D[:, c][:, None], D[:, c][None, :]]
        acc = np.full((n, n), R.zero, dtype=np.int64)
        for l in range(k):
            x, y = entry(i, l), entry(l, j)
            if x is None or y is None:
                continue
            acc = R.add_table[acc, R.mul_table[x[:, None], y[None, :]]]
        mul = mul * base + acc
    zero = _encode(np.array([R.zero] * len(pos)), base)
    one = _encode(np.array([R.one if i == j else R.zero for i, j in pos]), base)

    def render(row: np.ndarray) -> str:
        rows = []
        for i in range(k):
            cells = [R.labels[row[where[(i, j)]]] if (i, j) in where else R.labels[R.zero]
                     for j in range(k)]
            rows.append(",".join(cells))
        return "[" + ";".join(rows) + "]"

    labels = [render(D[x]) for x in range(n)]
    return validate_axioms(add, mul, int(zero), int(one), labels=labels,
                           provenance=name, trusted=True)


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError(f"C_n needs n >= 1, got {n}")
    idx = np.arange(n)
    labels = ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return make_group((idx[:, None] + idx[None, :]) % n, 0, labels, name=f"C{n}")


def group_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    m = H.order
    n = G.order * m
    g = np.arange(n) // m
    h = np.arange(n) % m
    table = G.cayley[g[:, None], g[None, :]] * m + H.cayley[h[:, None], h[None, :]]
    labels = [f"({G.labels[i // m]},{H.labels[i % m]})" for i in range(n)]
    return make_group(table, G.identity * m + H.identity, labels, name=f"{G.name} x {H.name}")


def symmetric_group_s3() -> FiniteGroup:
    perms = sorted(permutations(range(3)))
    pos = {p: i for i, p in enumerate(perms)}
    # (p*q)(i) = p(q(i))
    table = [[pos[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    labels = ["".join(str(v + 1) for v in p) for p in perms]
    return make_group(table, pos[(0, 1, 2)], labels, name="S3")


@dataclass(frozen=True, eq=False)
class GroupRing:
    ring: FiniteRing
    base: FiniteRing
    group: FiniteGroup
    augmentation: RingMap

    def element(self, coeffs: Sequence[int]) -> int:
        """Index of ``sum coeffs[g] * g`` (coefficients in group order)."""
        return int(_encode(np.array(coeffs, dtype=np.int64), self.base.order))

    def coefficients(self, x: int) -> list[int]:
        digits = []
        for _ in range(self.group.order):
            digits.append(x % self.base.order)
            x //= self.base.order
        return digits[::-1]

    def embed(self, r: int) -> int:
        """r times the group identity."""
        coeffs = [self.base.zero] * self.group.order
        coeffs[self.group.identity] = r
        return self.element(coeffs)

    def augmentation_ideal(self) -> tuple[int, ...]:
        return self.augmentation.kernel()


def group_ring(R: FiniteRing, G: FiniteGroup, cap: int = DEFAULT_CAP) -> GroupRing:
    """The group ring RG together with its augmentation map onto R.

    Elements are coefficient vectors over the group elements; the product is
    the convolution along the Cayley table.
    """
    name = f"GR({R.provenance}, {G.name})"
    base = R.order
    n_g = G.order
    n = base ** n_g if base > 1 else 1
    check_size(name, n, cap)
    D = _digits(n, n_g, base)
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for h in range(n_g):
        add = add * base + R.add_table[D[:, h][:, None], D[:, h][None, :]]
        acc = np.full((n, n), R.zero, dtype=np.int64)
        for g1 in range(n_g):
            g2 = G.cayley[G.inverse(g1), h]
            acc = R.add_table[acc, R.mul_table[D[:, g1][:, None], D[:, g2][None, :]]]
        mul = mul * base + acc

    def coeff_index(g: int, r: int) -> np.ndarray:
        row = np.full(n_g, R.zero, dtype=np.int64)
        row[g] = r
        return _encode(row, base)

    zero = coeff_index(G.identity, R.zero)
    one = coeff_index(G.identity, R.one)

    def render(row: np.ndarray) -> str:
        terms = []
        for g in range(n_g):
            c = int(row[g])
            if c == R.zero:
                continue
            if g == G.identity:
                terms.append(R.labels[c])
            elif c == R.one:
                terms.append(G.labels[g])
            else:
                terms.append(f"{R.labels[c]}{G.labels[g]}")
        return "+".join(terms) if terms else R.labels[R.zero]

    labels = [render(D[x]) for x in range(n)]
    RG = validate_axioms(add, mul, int(zero), int(one), labels=labels,
                         provenance=name, trusted=True)
    sums = np.full(n, R.zero, dtype=np.int64)
    for g in range(n_g):
        sums = R.add_table[sums, D[:, g]]
    omega = RingMap(RG, R, sums)
    if not omega.is_surjective():
        raise AssertionError("augmentation map is not surjective")
    return GroupRing(RG, R, G, omega)


def quotient(R: FiniteRing, ideal: Sequence[int]) -> tuple[FiniteRing, RingMap]:
    """R/I with the projection. Coset representative = smallest index."""
    check_ideal(R, ideal)
    members = np.array(sorted(set(int(x) for x in ideal)), dtype=np.int64)
    reps_of = R.add_table[:, members].min(axis=1)
    reps = np.unique(reps_of)
    where = np.full(R.order, -1, dtype=np.int64)
    where[reps] = np.arange(len(reps))
    proj = where[reps_of]
    add = proj[R.add_table[reps[:, None], reps[None, :]]]
    mul = proj[R.mul_table[reps[:, None], reps[None, :]]]
    labels = [R.labels[r] + "+I" for r in reps]
    name = f"({R.provenance})/I" if R.provenance else "R/I"
    Q = validate_axioms(add, mul, int(proj[R.zero]), int(proj[R.one]), labels=labels,
                        provenance=name, trusted=True)
    return Q, RingMap(R, Q, proj)


def subring_on(R: FiniteRing, members: Sequence[int], one: int, provenance: str = "") -> FiniteRing:
    """Re-index a subset closed under + and * as a ring with identity ``one``.

    Used for Peirce corners fR, whose identity is f rather than 1.
    """
    elems = sorted(set(int(x) for x in members))
    pos = np.full(R.order, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    sub = np.array(elems, dtype=np.int64)
    add = pos[R.add_table[sub[:, None], sub[None, :]]]
    mul = pos[R.mul_table[sub[:, None], sub[None, :]]]
    if (add < 0).any() or (mul < 0).any():
        raise ValueError("subset is not closed under the ring operations")
    labels = [R.labels[x] for x in elems]
    return validate_axioms(add, mul, int(pos[R.zero]), int(pos[one]), labels=labels,
                           provenance=provenance, trusted=True)
