"""Finite unital rings and groups stored as dense operation tables."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

DEFAULT_CAP = 4096
# constructor-built rings above this order skip the O(n^3) axiom re-check
VALIDATE_LIMIT = 512


class RingError(Exception):
    """Base class for errors raised by this package."""


class MalformedTable(RingError):
    pass


class AxiomViolation(RingError):
    """A candidate table pair fails a ring (or group) axiom.

    ``axiom`` names the first law found broken and ``witness`` holds the
    offending element indices.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...]):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"{axiom} violated at {self.witness}")


class CapExceeded(RingError):
    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: order {size} exceeds cap {cap}")


class NotAnIdeal(RingError):
    def __init__(self, reason: str, witness: tuple[int, ...]):
        self.reason = reason
        self.witness = tuple(int(w) for w in witness)
        super().__init__(f"not a two-sided ideal: {reason} at {self.witness}")


class TrivialRing(RingError):
    """Raised by predicates that are undefined on the zero ring."""


class InternalConsistencyError(RuntimeError):
    """A computed object failed its own post-condition. Always a bug."""


def _frozen(table: Any) -> np.ndarray:
    arr = np.array(table, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def check_size(what: str, size: int, cap: int) -> None:
    if size > cap:
        raise CapExceeded(what, size, cap)


class FiniteRing:
    """A finite unital ring on the indices ``0..order-1``.

    Instances are immutable. Use :func:`validate_axioms` for tables coming
    from outside; constructors in :mod:`zdclean.constructors` go through the
    same entry point.
    """

    def __init__(self, add, mul, zero: int, one: int,
                 labels: Sequence[str] | None = None, provenance: str = ""):
        self.add_table = _frozen(add)
        self.mul_table = _frozen(mul)
        self.order = int(self.add_table.shape[0])
        self.zero = int(zero)
        self.one = int(one)
        if labels is None:
            labels = [str(i) for i in range(self.order)]
        self.labels = tuple(labels)
        self.provenance = provenance
        neg = np.argmax(self.add_table == self.zero, axis=1)
        neg.setflags(write=False)
        self.neg_table = neg
        self._memo: dict[Any, Any] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        name = self.provenance or "FiniteRing"
        return f"<{name} order={self.order}>"

    def __len__(self) -> int:
        return self.order

    @property
    def trivial(self) -> bool:
        return self.order == 1

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def power(self, a: int, k: int) -> int:
        acc = self.one
        for _ in range(k):
            acc = int(self.mul_table[acc, a])
        return acc

    def times(self, k: int) -> int:
        """The element ``k * 1`` (k-fold sum of the identity)."""
        acc = self.zero
        for _ in range(k):
            acc = int(self.add_table[acc, self.one])
        return acc

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def memo(self, key: Any, compute: Callable[[], Any]) -> Any:
        """Per-ring cache for derived data; values must be immutable."""
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    def __getstate__(self):
        state = self.__dict__.copy()
        del state["_lock"]
        state["_memo"] = {}
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.Lock()


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _check_tables(add, mul) -> tuple[np.ndarray, np.ndarray]:
    try:
        a = np.array(add, dtype=np.int64)
        m = np.array(mul, dtype=np.int64)
    except (ValueError, TypeError) as exc:
        raise MalformedTable(f"tables are not rectangular integer arrays: {exc}") from None
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise MalformedTable(f"add table has shape {a.shape}, expected n x n with n >= 1")
    if m.shape != a.shape:
        raise MalformedTable(f"mul table has shape {m.shape}, add table {a.shape}")
    n = a.shape[0]
    for name, t in (("add", a), ("mul", m)):
        if t.min() < 0 or t.max() >= n:
            bad = _first((t < 0) | (t >= n))
            raise MalformedTable(f"{name} table entry at {bad} outside 0..{n - 1}")
    return a, m


def _associativity(t: np.ndarray) -> tuple[int, int, int] | None:
    for a in range(t.shape[0]):
        left = t[t[a]]          # left[b, c] = (a*b)*c
        right = t[a][t]         # right[b, c] = a*(b*c)
        hit = _first(left != right)
        if hit is not None:
            return (a, *hit)
    return None


def find_violation(add, mul, zero: int, one: int) -> AxiomViolation | None:
    """First violated ring axiom as an :class:`AxiomViolation`, or None.

    Axioms are checked in a fixed order: additive identity, additive
    commutativity, additive associativity, additive inverses,
    multiplicative associativity, multiplicative identity, left then right
    distributivity, and finally ``zero != one`` for order >= 2.
    """
    a, m = _check_tables(add, mul)
    n = a.shape[0]
    if not (0 <= zero < n and 0 <= one < n):
        raise MalformedTable(f"zero={zero} or one={one} outside 0..{n - 1}")
    idx = np.arange(n)

    hit = _first((a[zero] != idx) | (a[:, zero] != idx))
    if hit is not None:
        return AxiomViolation("add_identity", hit)
    hit = _first(a != a.T)
    if hit is not None:
        return AxiomViolation("add_commutative", hit)
    hit = _associativity(a)
    if hit is not None:
        return AxiomViolation("add_associative", hit)
    has_inverse = (a == zero).any(axis=1)
    if not has_inverse.all():
        return AxiomViolation("add_inverse", (int(np.argmin(has_inverse)),))
    hit = _associativity(m)
    if hit is not None:
        return AxiomViolation("mul_associative", hit)
    hit = _first((m[one] != idx) | (m[:, one] != idx))
    if hit is not None:
        return AxiomViolation("mul_identity", hit)
    for x in range(n):
        # x*(y+z) == x*y + x*z
        lhs = m[x][a]
        rhs = a[m[x][:, None], m[x][None, :]]
        hit = _first(lhs != rhs)
        if hit is not None:
            return AxiomViolation("left_distributive", (x, *hit))
    for z in range(n):
        # (x+y)*z == x*z + y*z
        lhs = m[:, z][a]
        rhs = a[m[:, z][:, None], m[:, z][None, :]]
        hit = _first(lhs != rhs)
        if hit is not None:
            return AxiomViolation("right_distributive", (*hit, z))
    if n >= 2 and zero == one:
        return AxiomViolation("zero_ne_one", (zero,))
    return None


def validate_axioms(add, mul, zero: int = 0, one: int = 1,
                    labels: Sequence[str] | None = None, provenance: str = "",
                    trusted: bool = False) -> FiniteRing:
    """Build a :class:`FiniteRing` from raw tables after checking every axiom.

    ``trusted`` is for constructor output: the O(n^3) check is then skipped
    for orders above ``VALIDATE_LIMIT``. Raises :class:`MalformedTable` or
    :class:`AxiomViolation`.
    """
    a, m = _check_tables(add, mul)
    if a.shape[0] == 1:
        zero = one = 0
    if not (trusted and a.shape[0] > VALIDATE_LIMIT):
        violation = find_violation(a, m, zero, one)
        if violation is not None:
            raise violation
    return FiniteRing(a, m, zero, one, labels, provenance)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    cayley: np.ndarray
    identity: int
    labels: tuple[str, ...]
    name: str = ""

    @property
    def order(self) -> int:
        return int(self.cayley.shape[0])

    def inverse(self, g: int) -> int:
        return int(np.argmax(self.cayley[g] == self.identity))

    def element_order(self, g: int) -> int:
        k, acc = 1, g
        while acc != self.identity:
            acc = int(self.cayley[acc, g])
            k += 1
        return k


def make_group(cayley, identity: int = 0, labels: Sequence[str] | None = None,
               name: str = "") -> FiniteGroup:
    """Validate a Cayley table and wrap it as a :class:`FiniteGroup`."""
    t = np.array(cayley, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise MalformedTable(f"cayley table has shape {t.shape}")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise MalformedTable("cayley entry out of range")
    idx = np.arange(n)
    hit = _first((t[identity] != idx) | (t[:, identity] != idx))
    if hit is not None:
        raise AxiomViolation("group_identity", hit)
    hit = _associativity(t)
    if hit is not None:
        raise AxiomViolation("group_associative", hit)
    invertible = (t == identity).any(axis=1)
    if not invertible.all():
        raise AxiomViolation("group_inverse", (int(np.argmin(invertible)),))
    t.setflags(write=False)
    if labels is None:
        labels = [str(i) for i in range(n)]
    return FiniteGroup(t, int(identity), tuple(labels), name)


class RingMap:
    """A ring homomorphism, verified on every pair when constructed."""

    def __init__(self, source: FiniteRing, target: FiniteRing, image: Sequence[int]):
        img = np.array(image, dtype=np.int64)
        if img.shape != (source.order,):
            raise MalformedTable(f"image has shape {img.shape}, expected ({source.order},)")
        if img.min() < 0 or img.max() >= target.order:
            raise MalformedTable("image index outside target ring")
        if img[source.zero] != target.zero:
            raise AxiomViolation("map_zero", (source.zero,))
        if img[source.one] != target.one:
            raise AxiomViolation("map_one", (source.one,))
        hit = _first(img[source.add_table] != target.add_table[img[:, None], img[None, :]])
        if hit is not None:
            raise AxiomViolation("map_add", hit)
        hit = _first(img[source.mul_table] != target.mul_table[img[:, None], img[None, :]])
        if hit is not None:
            raise AxiomViolation("map_mul", hit)
        img.setflags(write=False)
        self.source = source
        self.target = target
        self.image = img

    def __call__(self, x: int) -> int:
        return int(self.image[x])

    @property
    def bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.image.tolist())) == self.source.order

    def kernel(self) -> tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.image == self.target.zero))

    def is_surjective(self) -> bool:
        return len(set(self.image.tolist())) == self.target.order

    def as_list(self) -> list[int]:
        return [int(v) for v in self.image]


def check_ideal(R: FiniteRing, members: Sequence[int]) -> None:
    """Raise :class:`NotAnIdeal` unless ``members`` is a two-sided ideal of R."""
    mem = np.zeros(R.order, dtype=bool)
    idx = np.array(sorted(set(int(x) for x in members)), dtype=np.int64)
    if len(idx) == 0 or not mem.size:
        raise NotAnIdeal("empty set", ())
    mem[idx] = True
    if not mem[R.zero]:
        raise NotAnIdeal("missing zero", (R.zero,))
    sums = R.add_table[np.ix_(idx, idx)]
    hit = _first(~mem[sums])
    if hit is not None:
        raise NotAnIdeal("not closed under addition", (idx[hit[0]], idx[hit[1]]))
    bad = idx[~mem[R.neg_table[idx]]]
    if len(bad):
        raise NotAnIdeal("not closed under negation", (bad[0],))
    left = R.mul_table[:, idx]      # r * x
    hit = _first(~mem[left])
    if hit is not None:
        raise NotAnIdeal("not closed under left multiplication", (hit[0], idx[hit[1]]))
    right = R.mul_table[idx, :]     # x * r
    hit = _first(~mem[right])
    if hit is not None:
        raise NotAnIdeal("not closed under right multiplication", (idx[hit[0]], hit[1]))


def is_ideal(R: FiniteRing, members: Sequence[int]) -> bool:
    try:
        check_ideal(R, members)
    except NotAnIdeal:
        return False
    return True
