"""Peirce splitting along central idempotents and list classification."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .classes import basic_profile, compute_class, jacobson_radical, require_nontrivial
from .constructors import direct_product, make_zn, quotient, subring_on
from .iso import find_isomorphism
from .ring import FiniteRing, RingMap

LIST_TAGS = ("boolean", "z3", "z3_x_boolean", "z3_x_z3", "z3_x_z3_x_boolean")


@dataclass(frozen=True, eq=False)
class PeirceSplit:
    idempotent: int
    corner_f: FiniteRing
    corner_cof: FiniteRing
    pairing: RingMap

    @property
    def orders(self) -> tuple[int, int]:
        return self.corner_f.order, self.corner_cof.order


def central_idempotents(R: FiniteRing, nontrivial: bool = True) -> list[int]:
    idem = compute_class(R, "idempotents")
    center = compute_class(R, "center")
    out = [e for e in idem if e in center]
    if nontrivial:
        out = [e for e in out if e not in (R.zero, R.one)]
    return out


def peirce_split(R: FiniteRing, f: int) -> PeirceSplit:
    """R = fR x (1-f)R for a central idempotent f other than 0 and 1."""
    if R.mul(f, f) != f:
        raise ValueError(f"{R.labels[f]} is not idempotent")
    if f not in compute_class(R, "center"):
        raise ValueError(f"{R.labels[f]} is not central")
    if f in (R.zero, R.one):
        raise ValueError("Peirce split needs an idempotent other than 0 and 1")
    cof = R.sub(R.one, f)
    fR = sorted(set(int(v) for v in R.mul_table[f]))
    cofR = sorted(set(int(v) for v in R.mul_table[cof]))
    base = R.provenance or "R"
    A = subring_on(R, fR, f, provenance=f"{R.labels[f]}*({base})")
    B = subring_on(R, cofR, cof, provenance=f"{R.labels[cof]}*({base})")
    if A.order * B.order != R.order:
        raise AssertionError("corner orders do not multiply to |R|")
    P = direct_product(A, B, cap=max(R.order, 1))
    pos_a = {x: i for i, x in enumerate(fR)}
    pos_b = {x: i for i, x in enumerate(cofR)}
    image = [pos_a[R.mul(f, x)] * B.order + pos_b[R.mul(cof, x)] for x in R.elements]
    pairing = RingMap(R, P, image)
    if not pairing.bijective:
        raise AssertionError("Peirce pairing is not bijective")
    return PeirceSplit(f, A, B, pairing)


def peirce_splits(R: FiniteRing) -> list[PeirceSplit]:
    return R.memo("peirce_splits", lambda: [peirce_split(R, f) for f in central_idempotents(R)])


@lru_cache(maxsize=None)
def _z3() -> FiniteRing:
    return make_zn(3)


def is_z3(R: FiniteRing) -> bool:
    return R.order == 3 and find_isomorphism(R, _z3()) is not None


def is_boolean(R: FiniteRing) -> bool:
    return len(compute_class(R, "idempotents")) == R.order


@dataclass(frozen=True)
class StructureClass:
    """Satisfied list tags; ``witness`` maps product tags to the splitting idempotent."""

    verdicts: frozenset[str]
    witness: dict[str, int] = field(default_factory=dict, compare=False)

    def __contains__(self, tag: str) -> bool:
        return tag in self.verdicts

    @property
    def field_order(self) -> int | None:
        for tag in self.verdicts:
            if tag.startswith("field("):
                return int(tag[6:-1])
        return None

    @property
    def is_field(self) -> bool:
        return self.field_order is not None

    def matches(self, tags) -> bool:
        """Whether any of ``tags`` holds; "field" matches every field(q)."""
        for tag in tags:
            if tag == "field" and self.is_field:
                return True
            if tag in self.verdicts:
                return True
        return False

    def sorted_tags(self) -> list[str]:
        return sorted(self.verdicts)


def classify(R: FiniteRing) -> StructureClass:
    """Structural membership in the classification lists.

    Product tags are decided by Peirce splits, so no isomorphism search is
    run on R itself; only order-3 corners are certified against Z3.
    """
    require_nontrivial(R)

    def compute() -> StructureClass:
        prof = basic_profile(R)
        tags: set[str] = set()
        witness: dict[str, int] = {}
        if prof.field:
            tags.add(f"field({R.order})")
        if prof.boolean:
            tags.add("boolean")
        if prof.field and R.order == 3 and is_z3(R):
            tags.add("z3")
        if prof.d_ring:
            tags.add("d_ring")
        for split in peirce_splits(R):
            A, B = split.corner_f, split.corner_cof
            f = split.idempotent
            a_z3, b_z3 = is_z3(A), is_z3(B)
            if a_z3 and is_boolean(B) and "z3_x_boolean" not in witness:
                tags.add("z3_x_boolean")
                witness["z3_x_boolean"] = f
            if a_z3 and b_z3 and "z3_x_z3" not in witness:
                tags.add("z3_x_z3")
                witness["z3_x_z3"] = f
            if ("z3_x_z3_x_boolean" not in witness and A.order == 9 and is_boolean(B)
                    and "z3_x_z3" in classify(A)):
                tags.add("z3_x_z3_x_boolean")
                witness["z3_x_z3_x_boolean"] = f
        if not tags:
            tags.add("other")
        return StructureClass(frozenset(tags), witness)

    return R.memo("classify", compute)


def jacobson_quotient(R: FiniteRing) -> tuple[FiniteRing, RingMap]:
    return R.memo("mod_j", lambda: quotient(R, jacobson_radical(R).members))


def classify_mod_j(R: FiniteRing) -> StructureClass:
    require_nontrivial(R)
    Q, _ = jacobson_quotient(R)
    return classify(Q)

