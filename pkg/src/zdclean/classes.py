"""Element classes, radicals and ring-level properties of a finite ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .ring import (
    FiniteRing,
    InternalConsistencyError,
    NotAnIdeal,
    TrivialRing,
    check_ideal,
    is_ideal,
)
from .scc import can_reach, strongly_connected_components

ROLES = (
    "idempotents",
    "neg_idempotents",
    "very_idempotents",
    "nilpotents",
    "units",
    "zero_divisors",
    "center",
    "jacobson",
    "prime_radical",
)


@dataclass(frozen=True)
class ElementSet:
    """A tagged subset of a ring, members strictly ascending.

    ``aux`` runs parallel to ``members``: the nilpotency index for
    ``nilpotents``, the inverse for ``units``, otherwise empty.
    """

    ring: FiniteRing = field(repr=False, compare=False)
    role: str
    members: tuple[int, ...]
    aux: tuple[int, ...] = ()

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.members, self.members[1:])):
            raise ValueError("ElementSet members must be strictly ascending")
        if self.aux and len(self.aux) != len(self.members):
            raise ValueError("aux must be parallel to members")
        object.__setattr__(self, "_set", frozenset(self.members))

    def __contains__(self, x: object) -> bool:
        return x in self._set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def mask(self) -> np.ndarray:
        m = np.zeros(self.ring.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def payload(self, x: int) -> int:
        return self.aux[self.members.index(x)]

    def labels(self) -> list[str]:
        return [self.ring.labels[x] for x in self.members]


def _make(R: FiniteRing, role: str, mask: np.ndarray, aux: Sequence[int] | None = None) -> ElementSet:
    members = tuple(int(x) for x in np.flatnonzero(mask))
    payload = () if aux is None else tuple(int(aux[x]) for x in members)
    return ElementSet(R, role, members, payload)


def nilpotency_indices(R: FiniteRing) -> np.ndarray:
    """Minimal k with x^k = 0 per element, 0 where x is not nilpotent.

    Search stops at exponent n: a power sequence cycles within n steps.
    """
    def compute():
        idx = np.zeros(R.order, dtype=np.int64)
        elems = np.arange(R.order)
        cur = elems.copy()
        for k in range(1, R.order + 1):
            fresh = (cur == R.zero) & (idx == 0)
            idx[fresh] = k
            cur = R.mul_table[cur, elems]
        idx.setflags(write=False)
        return idx
    return R.memo("nil_index", compute)


def periodic_witness(R: FiniteRing, x: int) -> tuple[int, int]:
    """(m, n) with m > n >= 1 and x^m = x^n, m minimal."""
    seen: dict[int, int] = {}
    acc, k = x, 1
    while acc not in seen:
        seen[acc] = k
        acc = R.mul(acc, x)
        k += 1
    return k, seen[acc]


def _compute(R: FiniteRing, role: str) -> ElementSet:
    mul = R.mul_table
    elems = np.arange(R.order)
    sq = mul[elems, elems]
    if role == "idempotents":
        return _make(R, role, sq == elems)
    if role == "neg_idempotents":
        return _make(R, role, sq == R.neg_table)
    if role == "very_idempotents":
        return _make(R, role, (sq == elems) | (sq == R.neg_table))
    if role == "nilpotents":
        idx = nilpotency_indices(R)
        return _make(R, role, idx > 0, idx)
    if role == "units":
        both = (mul == R.one) & (mul.T == R.one)
        return _make(R, role, both.any(axis=1), np.argmax(both, axis=1))
    if role == "zero_divisors":
        nonzero = elems != R.zero
        kills_right = ((mul == R.zero) & nonzero[None, :]).any(axis=1)   # a*b = 0, b != 0
        kills_left = ((mul == R.zero) & nonzero[:, None]).any(axis=0)    # c*a = 0, c != 0
        return _make(R, role, kills_right & kills_left)
    if role == "center":
        return _make(R, role, (mul == mul.T).all(axis=1))
    if role == "jacobson":
        return jacobson_radical(R)
    if role == "prime_radical":
        return prime_radical(R)
    raise ValueError(f"unknown element class {role!r}; expected one of {', '.join(ROLES)}")


def compute_class(R: FiniteRing, role: str) -> ElementSet:
    return R.memo(("class", role), lambda: _compute(R, role))


def _verified_ideal(R: FiniteRing, s: ElementSet) -> ElementSet:
    try:
        check_ideal(R, s.members)
    except NotAnIdeal as exc:
        raise InternalConsistencyError(f"{s.role} of {R!r} is not an ideal: {exc}") from exc
    return s


def jacobson_radical(R: FiniteRing) -> ElementSet:
    """J(R) = {x : 1 - a*x is a unit for every a}."""
    def compute():
        unit = compute_class(R, "units").mask()
        one_minus = R.add_table[R.one, R.neg_table[R.mul_table]]   # [a, x] -> 1 - a*x
        return _verified_ideal(R, _make(R, "jacobson", unit[one_minus].all(axis=0)))
    return R.memo(("class", "jacobson"), compute)


def strongly_nilpotent_graph(R: FiniteRing) -> list[list[int]]:
    """Successor lists of x -> x*r*x over all r."""
    xr = R.mul_table
    xrx = R.mul_table[xr, np.arange(R.order)[:, None]]
    return [sorted(set(int(v) for v in row)) for row in xrx]


def prime_radical(R: FiniteRing) -> ElementSet:
    """Strongly nilpotent elements: no x*r*x path from them hits a nonzero cycle."""
    def compute():
        succ = strongly_nilpotent_graph(R)
        cyclic = []
        for comp in strongly_connected_components(succ):
            if comp == [R.zero]:
                continue
            if len(comp) > 1 or comp[0] in succ[comp[0]]:
                cyclic.extend(comp)
        reach = can_reach(succ, cyclic)
        s = _make(R, "prime_radical", ~np.array(reach, dtype=bool))
        s = _verified_ideal(R, s)
        if not set(s.members) <= set(jacobson_radical(R).members):
            raise InternalConsistencyError(f"prime radical of {R!r} not inside J(R)")
        return s
    return R.memo(("class", "prime_radical"), compute)


def setwise_nilpotency(R: FiniteRing, members: Sequence[int]) -> int | None:
    """Least k with every k-fold product of members equal to zero, if k <= |R|."""
    base = sorted(set(int(x) for x in members))
    if not base:
        return None
    cur = set(base)
    for k in range(1, R.order + 1):
        if cur == {R.zero}:
            return k
        arr = np.array(sorted(cur))
        cur = set(int(v) for v in np.unique(R.mul_table[np.ix_(arr, base)]))
    return None


def is_nil(R: FiniteRing, members: Sequence[int]) -> bool:
    idx = nilpotency_indices(R)
    return all(idx[x] > 0 for x in members)


@dataclass(frozen=True)
class BasicProfile:
    abelian: bool
    boolean: bool
    field: bool
    local: bool
    d_ring: bool
    two_nilpotent: bool
    periodic_witnesses: tuple[tuple[int, int], ...]

    @property
    def periodic(self) -> bool:
        return all(m != n for m, n in self.periodic_witnesses)

    def as_dict(self) -> dict:
        ms = [m for m, _ in self.periodic_witnesses]
        return {
            "abelian": self.abelian,
            "boolean": self.boolean,
            "field": self.field,
            "local": self.local,
            "d_ring": self.d_ring,
            "two_nilpotent": self.two_nilpotent,
            "periodic": self.periodic,
            "periodic_max_exponent": max(ms),
        }


def require_nontrivial(R: FiniteRing) -> None:
    if R.trivial:
        raise TrivialRing("the zero ring is excluded from ring-level predicates")


def basic_profile(R: FiniteRing) -> BasicProfile:
    require_nontrivial(R)

    def compute():
        idem = set(compute_class(R, "idempotents").members)
        center = set(compute_class(R, "center").members)
        units = set(compute_class(R, "units").members)
        nil = set(compute_class(R, "nilpotents").members)
        zd = set(compute_class(R, "zero_divisors").members)
        commutative = len(center) == R.order
        non_units = sorted(set(R.elements) - units)
        two = R.add(R.one, R.one)
        return BasicProfile(
            abelian=idem <= center,
            boolean=len(idem) == R.order,
            field=commutative and len(units) == R.order - 1,
            local=bool(non_units) and is_ideal(R, non_units),
            d_ring=zd <= nil,
            two_nilpotent=two in nil,
            periodic_witnesses=tuple(periodic_witness(R, x) for x in R.elements),
        )
    return R.memo("basic_profile", compute)

