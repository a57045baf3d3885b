"""Nil-clean and weakly nil-clean decompositions, decided by enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field

from .classes import compute_class, nilpotency_indices, require_nontrivial
from .ring import FiniteRing

FLAVORS = ("nil_clean", "weakly_nil_clean")
ELEMENT_MODES = ("weakly_nil_clean", "uniquely_weakly_nil_clean", "nil_clean", "uniquely_nil_clean")
RING_MODES = (
    "nil_clean",
    "weakly_nil_clean",
    "uniquely_nil_clean",
    "uniquely_weakly_nil_clean",
    "uniquely_weakly_D_nil_clean",
    "uniquely_D_nil_clean",
    "zerodiv_very_idem_or_nilpotent",
)


@dataclass(frozen=True, order=True)
class Decomposition:
    """``element = very_idempotent + nilpotent``.

    ``sign`` is "plus" when e^2 = e, "minus" when e^2 = -e and "both" when
    e^2 = e = -e.
    """

    very_idempotent: int
    nilpotent: int
    element: int = field(compare=False)
    sign: str = field(compare=False)
    nil_index: int = field(compare=False)
    square: int = field(compare=False)

    def as_dict(self, R: FiniteRing | None = None) -> dict:
        out = {
            "element": self.element,
            "e": self.very_idempotent,
            "w": self.nilpotent,
            "sign": self.sign,
            "nil_index": self.nil_index,
            "e_squared": self.square,
        }
        if R is not None:
            out["labels"] = {"element": R.labels[self.element],
                             "e": R.labels[self.very_idempotent],
                             "w": R.labels[self.nilpotent]}
        return out


def _sign(R: FiniteRing, e: int) -> str:
    sq = R.mul(e, e)
    plus, minus = sq == e, sq == R.neg(e)
    if plus and minus:
        return "both"
    return "plus" if plus else "minus"


def decompositions(R: FiniteRing, a: int, flavor: str = "weakly_nil_clean") -> list[Decomposition]:
    """Every a = e + w with e (very) idempotent and w nilpotent, sorted by (e, w).

    No commutation between e and w is required.
    """
    if flavor == "nil_clean":
        candidates = compute_class(R, "idempotents")
    elif flavor == "weakly_nil_clean":
        candidates = compute_class(R, "very_idempotents")
    else:
        raise ValueError(f"unknown flavor {flavor!r}; expected one of {', '.join(FLAVORS)}")
    if not 0 <= a < R.order:
        raise IndexError(f"element {a} outside ring of order {R.order}")
    nil_index = nilpotency_indices(R)
    out = []
    for e in candidates:
        w = R.sub(a, e)
        if nil_index[w]:
            out.append(Decomposition(e, w, a, _sign(R, e), int(nil_index[w]), R.mul(e, e)))
    return out


@dataclass(frozen=True)
class ElementVerdict:
    element: int
    mode: str
    decompositions: tuple[Decomposition, ...]
    holds: bool
    uniqueness_witness: tuple[Decomposition, Decomposition] | None = None

    def as_dict(self, R: FiniteRing | None = None) -> dict:
        return {
            "element": self.element,
            "mode": self.mode,
            "holds": self.holds,
            "decompositions": [d.as_dict(R) for d in self.decompositions],
            "uniqueness_witness": None if self.uniqueness_witness is None
            else [d.as_dict(R) for d in self.uniqueness_witness],
        }


def element_verdict(R: FiniteRing, a: int, mode: str) -> ElementVerdict:
    """Decide one element.

    Weak uniqueness compares e^2 across decompositions; plain uniqueness
    compares e itself.
    """
    if mode not in ELEMENT_MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(ELEMENT_MODES)}")
    weak = "weakly" in mode
    decs = tuple(decompositions(R, a, "weakly_nil_clean" if weak else "nil_clean"))
    if not mode.startswith("uniquely"):
        return ElementVerdict(a, mode, decs, bool(decs))
    key = (lambda d: d.square) if weak else (lambda d: d.very_idempotent)
    witness = None
    for d in decs[1:]:
        if key(d) != key(decs[0]):
            witness = (decs[0], d)
            break
    return ElementVerdict(a, mode, decs, bool(decs) and witness is None, witness)


@dataclass(frozen=True)
class RingVerdict:
    mode: str
    holds: bool
    counterexample: int | None = None
    detail: ElementVerdict | None = None

    def as_dict(self, R: FiniteRing | None = None) -> dict:
        out = {"mode": self.mode, "holds": self.holds, "counterexample": self.counterexample}
        if R is not None and self.counterexample is not None:
            out["counterexample_label"] = R.labels[self.counterexample]
        if self.detail is not None:
            out["detail"] = self.detail.as_dict(R)
        return out


_D_MODES = {
    "uniquely_weakly_D_nil_clean": "uniquely_weakly_nil_clean",
    "uniquely_D_nil_clean": "uniquely_nil_clean",
}


def ring_predicate(R: FiniteRing, mode: str) -> RingVerdict:
    """Quantify an element mode over all elements, or over zero-divisors.

    The counterexample, when the predicate fails, is the smallest failing
    index.
    """
    require_nontrivial(R)

    def compute() -> RingVerdict:
        if mode == "zerodiv_very_idem_or_nilpotent":
            vi = compute_class(R, "very_idempotents")
            nil = compute_class(R, "nilpotents")
            for a in compute_class(R, "zero_divisors"):
                if a not in vi and a not in nil:
                    return RingVerdict(mode, False, a)
            return RingVerdict(mode, True)
        if mode in _D_MODES:
            scope, elem_mode = compute_class(R, "zero_divisors").members, _D_MODES[mode]
        elif mode in ELEMENT_MODES:
            scope, elem_mode = R.elements, mode
        else:
            raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(RING_MODES)}")
        for a in scope:
            v = element_verdict(R, a, elem_mode)
            if not v.holds:
                return RingVerdict(mode, False, a, v)
        return RingVerdict(mode, True)

    return R.memo(("ring_predicate", mode), compute)


def all_ring_predicates(R: FiniteRing) -> dict[str, RingVerdict]:
    return {mode: ring_predicate(R, mode) for mode in RING_MODES}


@dataclass(frozen=True)
class UnitFormVerdict:
    holds: bool
    unit_not_of_form: int | None = None
    form_not_unit: int | None = None


def unit_form_check(R: FiniteRing) -> UnitFormVerdict:
    """Whether U(R) = {x + 1 : x nilpotent} | {x - 1 : x nilpotent}."""
    require_nontrivial(R)
    units = set(compute_class(R, "units").members)
    nil = compute_class(R, "nilpotents").members
    form = {R.add(x, R.one) for x in nil} | {R.sub(x, R.one) for x in nil}
    stray_units = sorted(units - form)
    stray_forms = sorted(form - units)
    return UnitFormVerdict(
        not stray_units and not stray_forms,
        stray_units[0] if stray_units else None,
        stray_forms[0] if stray_forms else None,
    )
