"""Two-sided checks of the zero-divisor cleanness results over a ring corpus.

Every result is a pair of independently computed flags. The left side is the
brute-force predicate (element enumeration through :mod:`zdclean.cleanness`
or :mod:`zdclean.classes`); the right side is the structural condition
(profiles, radicals, Peirce splits and :mod:`zdclean.structure`). Results
marked ``bridge`` relate one cleanness predicate to another, so both of
their sides necessarily enumerate decompositions, each on its own ring or
mode.
"""

from __future__ import annotations

import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import classes, cleanness, structure
from .constructors import GroupRing, group_ring, make_zn, matrix_ring, quotient
from .iso import find_isomorphism
from .ring import DEFAULT_CAP, FiniteGroup, FiniteRing, RingError, is_ideal

DEFAULT_CORPUS = (
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z16",
    "Z3 x Z3", "Z3 x Bool(1)", "Z3 x Bool(2)",
    "Bool(1)", "Bool(2)", "Bool(3)", "Bool(4)",
    "Z3 x Z4", "Z2 x Z4", "Z4 x Z4",
    "T2(Z2)", "T2(Z3)", "M2(Z2)",
    "GR(Z2, C2)", "GR(Z3, C3)", "GR(Z4, C2)", "GR(Z2, C2 x C2)",
)

UWNC = "uniquely_weakly_nil_clean"
UNC = "uniquely_nil_clean"
UWDNC = "uniquely_weakly_D_nil_clean"
UDNC = "uniquely_D_nil_clean"

Side = tuple[bool, dict]


@dataclass
class Inputs:
    """What a check sees: the ring under test and, for group rings, R and G."""

    ring: FiniteRing
    base: FiniteRing | None = None
    group: FiniteGroup | None = None
    group_ring: GroupRing | None = None


@dataclass(frozen=True)
class Result:
    id: str
    kind: str
    lhs: Callable[[Inputs], Side]
    rhs: Callable[[Inputs], Side]
    needs_group: bool = False
    bridge: bool = False
    applicable: Callable[[Inputs], str | None] | None = None
    extra: Callable[[Inputs], dict[str, Side]] | None = None


REGISTRY: dict[str, Result] = {}


def _register(id: str, kind: str, *, needs_group: bool = False, bridge: bool = False,
              applicable=None, extra=None):
    def wrap(pair):
        lhs, rhs = pair()
        REGISTRY[id] = Result(id, kind, lhs, rhs, needs_group, bridge, applicable, extra)
        return pair
    return wrap


# ---------------------------------------------------------------- side helpers

def _pred(R: FiniteRing, mode: str, tag: str | None = None) -> Side:
    v = cleanness.ring_predicate(R, mode)
    w: dict = {}
    if not v.holds and v.counterexample is not None:
        w["counterexample"] = v.counterexample
        w["counterexample_label"] = R.labels[v.counterexample]
        if v.detail is not None:
            if v.detail.uniqueness_witness is not None:
                w["decomposition_pair"] = [d.as_dict() for d in v.detail.uniqueness_witness]
            elif not v.detail.decompositions:
                w["decompositions"] = []
    return v.holds, ({f"{tag or mode}": w} if w else {})


def _profile(R: FiniteRing) -> classes.BasicProfile:
    return classes.basic_profile(R)


def _periodic(R: FiniteRing) -> Side:
    """Re-evaluate every stored witness x^m = x^n instead of assuming it."""
    wit = _profile(R).periodic_witnesses
    ok = all(m != n and R.power(x, m) == R.power(x, n) for x, (m, n) in enumerate(wit))
    ms = [m for m, _ in wit]
    return ok, {"periodic_exponents": [min(ms), max(ms)]}


def _j_nil(R: FiniteRing) -> Side:
    k = classes.setwise_nilpotency(R, classes.jacobson_radical(R).members)
    return k is not None, {"j_nilpotency_index": k}


def _tags(sc: structure.StructureClass, key: str) -> dict:
    out = {key: sc.sorted_tags()}
    if sc.witness:
        out[key + "_split"] = dict(sorted(sc.witness.items()))
    return out


def _mod_j(R: FiniteRing, wanted: Iterable[str]) -> Side:
    sc = structure.classify_mod_j(R)
    return sc.matches(wanted), _tags(sc, "mod_j_tags")


def _classified(R: FiniteRing, wanted: Iterable[str]) -> Side:
    sc = structure.classify(R)
    return sc.matches(wanted), _tags(sc, "tags")


def _all(*sides: Side) -> Side:
    """Conjunction that evaluates every clause so the report shows each one."""
    ok, w = True, {}
    for flag, wit in sides:
        ok = ok and flag
        w.update(wit)
    return ok, w


def _flag(name: str, value: bool) -> Side:
    return value, {name: value}


def _abelian(R: FiniteRing) -> Side:
    # N(R) being an ideal is never assumed; reported alongside so rings where it fails show up
    nil_ideal = is_ideal(R, classes.compute_class(R, "nilpotents").members)
    return _profile(R).abelian, {"abelian": _profile(R).abelian, "nilpotents_form_ideal": nil_ideal}


def _d_ring(R: FiniteRing) -> Side:
    return _flag("d_ring", _profile(R).d_ring)


def _set_cover(R: FiniteRing, scope: str, cover: Sequence[str], name: str) -> Side:
    covered = set()
    for role in cover:
        covered |= set(classes.compute_class(R, role).members)
    for x in classes.compute_class(R, scope).members if scope != "all" else R.elements:
        if x not in covered:
            return False, {name: {"counterexample": x, "counterexample_label": R.labels[x]}}
    return True, {}


def _prime_power_of(n: int) -> int | None:
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


def _aug_nil(inp: Inputs) -> Side:
    ker = inp.group_ring.augmentation_ideal()
    return _flag("augmentation_ideal_nil", classes.is_nil(inp.ring, ker))


def _quotient_by_prime_radical(R: FiniteRing) -> FiniteRing:
    Q, _ = R.memo("mod_p", lambda: quotient(R, classes.prime_radical(R).members))
    return Q


# ---------------------------------------------------------------- unit and radical results

@_register("lem-2.1", "iff")
def _():
    def lhs(i):
        return _set_cover(i.ring, "all", ["very_idempotents"], "not_very_idempotent")

    def rhs(i):
        return _classified(i.ring, ["z3", "boolean", "z3_x_boolean"])
    return lhs, rhs


@_register("thm-2.2", "iff")
def _():
    def lhs(i):
        return _pred(i.ring, UWNC)

    def rhs(i):
        R = i.ring
        return _all(_abelian(R), _periodic(R), _mod_j(R, ["z3", "boolean", "z3_x_boolean"]))
    return lhs, rhs


@_register("cor-2.3", "iff")
def _():
    def lhs(i):
        return _pred(i.ring, UWNC)

    def rhs(i):
        R = i.ring
        return _all(_abelian(R), _j_nil(R), _mod_j(R, ["z3", "boolean", "z3_x_boolean"]))
    return lhs, rhs


@_register("cor-2.4", "iff", bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UWNC)

    def rhs(i):
        R = i.ring
        uf = cleanness.unit_form_check(R)
        form = uf.holds, {"unit_form": {"holds": uf.holds, "unit_not_of_form": uf.unit_not_of_form,
                                        "form_not_unit": uf.form_not_unit}}
        return _all(_periodic(R), _pred(R, UWDNC), form)
    return lhs, rhs


@_register("prop-2.5", "iff", bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UWNC)

    def rhs(i):
        R = i.ring
        Q = _quotient_by_prime_radical(R)
        return _all(_abelian(R), (True, {"r_mod_p_order": Q.order}), _pred(Q, UWNC, "r_mod_p_" + UWNC))
    return lhs, rhs


@_register("lem-2.6", "implication", needs_group=True, bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UWNC, "rg_" + UWNC)

    def rhs(i):
        return _pred(i.base, UWNC, "r_" + UWNC)
    return lhs, rhs


def _aug_nil_required(i: Inputs) -> str | None:
    if not _aug_nil(i)[0]:
        return "augmentation ideal is not nil"
    return None


@_register("thm-2.7", "iff", needs_group=True, bridge=True, applicable=_aug_nil_required)
def _():
    def lhs(i):
        return _pred(i.ring, UWNC, "rg_" + UWNC)

    def rhs(i):
        return _pred(i.base, UWNC, "r_" + UWNC)
    return lhs, rhs


def _p_group_condition(i: Inputs) -> str | None:
    p = _prime_power_of(i.group.order)
    if p is None:
        return f"|G| = {i.group.order} is not a prime power"
    if i.base.times(p) not in classes.jacobson_radical(i.base):
        return f"{p}*1 is not in J(R)"
    return None


@_register("cor-2.8", "iff", needs_group=True, bridge=True, applicable=_p_group_condition)
def _():
    def lhs(i):
        return _pred(i.ring, UWNC, "rg_" + UWNC)

    def rhs(i):
        return _pred(i.base, UWNC, "r_" + UWNC)
    return lhs, rhs


def _local_required(i: Inputs) -> str | None:
    return None if _profile(i.ring).local else "ring is not local"


@_register("rem-local", "iff", applicable=_local_required)
def _():
    def lhs(i):
        return _pred(i.ring, UWNC)

    def rhs(i):
        R = i.ring
        sc = structure.classify_mod_j(R)
        small = sc.field_order in (2, 3)
        return _all(_j_nil(R), (small, _tags(sc, "mod_j_tags")))
    return lhs, rhs


# ---------------------------------------------------------------- zero-divisor results

@_register("lem-3.1", "implication")
def _():
    def lhs(i):
        return _pred(i.ring, UWDNC)

    def rhs(i):
        return _abelian(i.ring)
    return lhs, rhs


@_register("thm-3.2", "implication", bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UWDNC)

    def rhs(i):
        R = i.ring
        if _profile(R).d_ring:
            return True, {"d_ring": True}
        for split in structure.peirce_splits(R):
            a = cleanness.ring_predicate(split.corner_f, UWNC).holds
            b = cleanness.ring_predicate(split.corner_cof, UWNC).holds
            if a and b:
                return True, {"d_ring": False, "split": split.idempotent,
                              "split_label": R.labels[split.idempotent],
                              "corner_orders": list(split.orders)}
        return False, {"d_ring": False, "splits_tried": len(structure.peirce_splits(R))}
    return lhs, rhs


@_register("lem-3.3", "iff")
def _():
    def lhs(i):
        return _set_cover(i.ring, "zero_divisors", ["very_idempotents"], "zero_divisor_not_very_idempotent")

    def rhs(i):
        return _classified(i.ring, ["field", "z3_x_z3", "z3_x_boolean", "boolean"])
    return lhs, rhs


@_register("thm-3.4", "iff")
def _():
    def lhs(i):
        return _pred(i.ring, UWDNC)

    def rhs(i):
        R = i.ring
        d = _d_ring(R)
        rest = _all(_abelian(R), _periodic(R),
                    _mod_j(R, ["field", "z3_x_z3", "z3_x_boolean", "boolean"]))
        return d[0] or rest[0], {**d[1], **rest[1]}
    return lhs, rhs


@_register("lem-3.5", "implication")
def _():
    def lhs(i):
        return _set_cover(i.ring, "all", ["very_idempotents", "nilpotents"], "neither")

    def rhs(i):
        return _abelian(i.ring)
    return lhs, rhs


def _z4_like(R: FiniteRing) -> bool:
    return R.order == 4 and find_isomorphism(R, make_zn(4)) is not None


@_register(
    "lem-3.6", "iff",
    extra=lambda i: {"jacobson_cover": _set_cover(
        i.ring, "all", ["jacobson", "idempotents", "neg_idempotents"], "outside_j_id_negid")},
)
def _():
    def lhs(i):
        return _set_cover(i.ring, "all", ["nilpotents", "idempotents", "neg_idempotents"],
                          "outside_n_id_negid")

    def rhs(i):
        R = i.ring
        listed, w = _classified(R, ["z3", "boolean", "z3_x_boolean"])
        z4 = _z4_like(R)
        return listed or z4, {**w, "isomorphic_to_z4": z4}
    return lhs, rhs


@_register("thm-3.7", "iff")
def _():
    def lhs(i):
        R = i.ring
        return _all(_abelian(R), _pred(R, "zerodiv_very_idem_or_nilpotent"))

    def rhs(i):
        R = i.ring
        d = _d_ring(R)
        listed, w = _classified(R, ["boolean", "z3_x_z3", "z3_x_boolean"])
        return d[0] or listed, {**d[1], **w}
    return lhs, rhs


@_register("cor-3.8", "iff")
def _():
    def lhs(i):
        R = i.ring
        return _all(_abelian(R), _set_cover(R, "zero_divisors", ["idempotents", "nilpotents"],
                                            "zero_divisor_not_idem_or_nil"))

    def rhs(i):
        R = i.ring
        p = _profile(R)
        return p.d_ring or p.boolean, {"d_ring": p.d_ring, "boolean": p.boolean}
    return lhs, rhs


def _t2z2() -> FiniteRing:
    return matrix_ring(make_zn(2), 2, "upper_triangular")


@_register("rem-t2z2", "implication")
def _():
    def lhs(i):
        R = i.ring
        iso = R.order == 8 and find_isomorphism(R, _t2z2()) is not None
        return iso, {"isomorphic_to_t2z2": iso}

    def rhs(i):
        R = i.ring
        p = _profile(R)
        cover = _set_cover(R, "zero_divisors", ["idempotents", "nilpotents"],
                           "zero_divisor_not_idem_or_nil")
        ok = cover[0] and not p.abelian and not p.boolean and not p.d_ring
        return ok, {**cover[1], "abelian": p.abelian, "boolean": p.boolean, "d_ring": p.d_ring}
    return lhs, rhs


# ---------------------------------------------------------------- plain nil-clean results

@_register("lem-4.1", "implication")
def _():
    def lhs(i):
        return _pred(i.ring, UDNC)

    def rhs(i):
        return _abelian(i.ring)
    return lhs, rhs


@_register("prop-4.2", "iff")
def _():
    def lhs(i):
        return _pred(i.ring, UDNC)

    def rhs(i):
        R = i.ring
        central = structure.central_idempotents(R, nontrivial=False)
        nil = classes.compute_class(R, "nilpotents")
        for a in classes.compute_class(R, "zero_divisors"):
            if not any(R.sub(a, e) in nil for e in central):
                return False, {"zero_divisor_without_central_idempotent": a,
                               "label": R.labels[a]}
        return True, {"central_idempotents": len(central)}
    return lhs, rhs


@_register("lem-4.3", "iff", bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UDNC)

    def rhs(i):
        R = i.ring
        d = _d_ring(R)
        u = _pred(R, UNC)
        return d[0] or u[0], {**d[1], UNC: u[0], **u[1]}
    return lhs, rhs


@_register("thm-4.4", "iff")
def _():
    def lhs(i):
        return _pred(i.ring, UDNC)

    def rhs(i):
        R = i.ring
        d = _d_ring(R)
        rest = _all(_abelian(R), _periodic(R), _mod_j(R, ["boolean"]))
        return d[0] or rest[0], {**d[1], **rest[1]}
    return lhs, rhs


@_register("lem-4.5", "iff")
def _():
    def lhs(i):
        return _pred(i.ring, UNC)

    def rhs(i):
        R = i.ring
        return _all(_abelian(R), _mod_j(R, ["boolean"]), _j_nil(R))
    return lhs, rhs


@_register("thm-4.6", "iff", bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UNC)

    def rhs(i):
        R = i.ring
        return _all(_flag("two_nilpotent", _profile(R).two_nilpotent), _pred(R, UWNC))
    return lhs, rhs


@_register("cor-4.7", "iff", bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UNC)

    def rhs(i):
        R = i.ring
        Q = _quotient_by_prime_radical(R)
        return _all(_abelian(R), (True, {"r_mod_p_order": Q.order}), _pred(Q, UNC, "r_mod_p_" + UNC))
    return lhs, rhs


@_register("cor-4.8", "iff", needs_group=True, bridge=True)
def _():
    def lhs(i):
        return _pred(i.ring, UNC, "rg_" + UNC)

    def rhs(i):
        return _all(_pred(i.base, UNC, "r_" + UNC), _aug_nil(i))
    return lhs, rhs


def _two_not_nilpotent(i: Inputs) -> str | None:
    return "2 is nilpotent" if _profile(i.ring).two_nilpotent else None


@_register("cor-4.9", "iff", bridge=True, applicable=_two_not_nilpotent)
def _():
    def lhs(i):
        return _pred(i.ring, UDNC)

    def rhs(i):
        return _pred(i.ring, UWDNC)
    return lhs, rhs


@_register("rem-z3g", "implication", needs_group=True, bridge=True)
def _():
    def lhs(i):
        is_z3 = structure.is_z3(i.base)
        three_group = _prime_power_of(i.group.order) == 3
        return is_z3 and three_group, {"base_is_z3": is_z3, "three_group": three_group}

    def rhs(i):
        uw = cleanness.ring_predicate(i.ring, UWNC).holds
        u = cleanness.ring_predicate(i.ring, UNC).holds
        return uw and not u, {"rg_" + UWNC: uw, "rg_" + UNC: u}
    return lhs, rhs


RESULT_IDS = tuple(REGISTRY)


# ---------------------------------------------------------------- verdicts

@dataclass
class TheoremVerdict:
    result_id: str
    ring: str
    kind: str
    status: str
    lhs: bool | None = None
    rhs: bool | None = None
    extra: dict[str, bool] = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    reason: str | None = None
    elapsed: float | None = None

    @property
    def consistent(self) -> bool | None:
        if self.status == "skipped":
            return None
        return judge(self.kind, self.lhs, self.rhs, self.extra)

    def as_record(self, timing: bool = False) -> dict:
        return {
            "result_id": self.result_id,
            "ring": self.ring,
            "kind": self.kind,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "extra": self.extra,
            "consistent": self.consistent,
            "reason": self.reason,
            "witnesses": self.witnesses,
            "elapsed": round(self.elapsed, 6) if timing and self.elapsed is not None else None,
        }


def judge(kind: str, lhs: bool, rhs: bool, extra: dict[str, bool] | None = None) -> bool:
    """iff: every listed condition agrees. implication: lhs => rhs."""
    if kind == "iff":
        return len({lhs, rhs, *(extra or {}).values()}) == 1
    if kind == "implication":
        return (not lhs) or rhs
    raise ValueError(f"unknown result kind {kind!r}")


def evaluate(result: Result, inp: Inputs) -> TheoremVerdict:
    start = time.perf_counter()
    name = inp.ring.provenance

    def skipped(reason: str) -> TheoremVerdict:
        return TheoremVerdict(result.id, name, result.kind, "skipped", reason=reason,
                              elapsed=time.perf_counter() - start)

    if inp.ring.trivial or (inp.base is not None and inp.base.trivial):
        return skipped("the zero ring is excluded")
    if result.needs_group and inp.group_ring is None:
        return skipped("requires a (ring, group) pair")
    if result.applicable is not None:
        reason = result.applicable(inp)
        if reason is not None:
            return skipped(reason)
    lhs, lw = result.lhs(inp)
    rhs, rw = result.rhs(inp)
    extra, ew = {}, {}
    if result.extra is not None:
        for key, (flag, wit) in result.extra(inp).items():
            extra[key] = bool(flag)
            ew.update(wit)
    verdict = TheoremVerdict(result.id, name, result.kind, "", bool(lhs), bool(rhs), extra,
                             {"lhs": lw, "rhs": rw, **({"extra": ew} if ew else {})})
    verdict.status = "consistent" if verdict.consistent else "inconsistent"
    verdict.elapsed = time.perf_counter() - start
    return verdict


def check_result(result_id: str, ring: FiniteRing, group: FiniteGroup | None = None,
                 cap: int = DEFAULT_CAP) -> TheoremVerdict:
    """Check one result on a ring, or on (R, G) for the group-ring results.

    For a group-ring result, ``ring`` is the coefficient ring R and the
    group ring RG is built here.
    """
    if result_id not in REGISTRY:
        raise KeyError(f"unknown result id {result_id!r}; known: {', '.join(RESULT_IDS)}")
    result = REGISTRY[result_id]
    if result.needs_group and group is not None:
        gr = group_ring(ring, group, cap)
        return evaluate(result, Inputs(gr.ring, ring, group, gr))
    return evaluate(result, Inputs(ring))


def inputs_for(ring: FiniteRing, gr: GroupRing | None) -> Inputs:
    if gr is None:
        return Inputs(ring)
    return Inputs(ring, gr.base, gr.group, gr)


# ---------------------------------------------------------------- battery

@dataclass
class BatteryReport:
    verdicts: list[TheoremVerdict]
    errors: list[tuple[int, str, str]]

    def summary(self) -> dict[str, int]:
        counts = {"consistent": 0, "inconsistent": 0, "skipped": 0}
        for v in self.verdicts:
            counts[v.status] += 1
        counts["rings"] = len({v.ring for v in self.verdicts})
        counts["errors"] = len(self.errors)
        return counts

    @property
    def inconsistent(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.status == "inconsistent"]

    def exit_status(self) -> int:
        if self.inconsistent:
            return 1
        return 2 if self.errors else 0

    def jsonl(self, timing: bool = False) -> str:
        return "".join(json.dumps(v.as_record(timing), sort_keys=True, separators=(",", ":")) + "\n"
                       for v in self.verdicts)


def parse_corpus(text: str) -> list[tuple[int, str]]:
    """(line number, expression) pairs; ``#`` comments and blank lines dropped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _run_entry(task: tuple[str, tuple[str, ...], int]) -> tuple[list[TheoremVerdict], str | None]:
    from .expr import eval_with_group

    text, ids, cap = task
    try:
        ring, gr = eval_with_group(text, cap)
    except RingError as exc:
        return [], str(exc)
    inp = inputs_for(ring, gr)
    return [evaluate(REGISTRY[rid], inp) for rid in ids], None


def run_battery(corpus: Sequence[str] | Sequence[tuple[int, str]] | None = None,
                results: Sequence[str] | None = None, jobs: int = 1,
                cap: int = DEFAULT_CAP) -> BatteryReport:
    """Evaluate every (ring, result) pair; order is corpus order x result order."""
    if corpus is None:
        corpus = DEFAULT_CORPUS
    entries = [c if isinstance(c, tuple) else (n, c) for n, c in enumerate(corpus, 1)]
    ids = tuple(RESULT_IDS if results is None else results)
    unknown = [r for r in ids if r not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown result ids: {', '.join(unknown)}")
    ids = tuple(r for r in RESULT_IDS if r in ids)
    tasks = [(text, ids, cap) for _, text in entries]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_entry, tasks))
    else:
        outcomes = [_run_entry(t) for t in tasks]
    verdicts: list[TheoremVerdict] = []
    errors = []
    for (lineno, text), (vs, err) in zip(entries, outcomes):
        if err is not None:
            errors.append((lineno, text, err))
        verdicts.extend(vs)
    return BatteryReport(verdicts, errors)


def print_errors(report: BatteryReport, stream=None) -> None:
    stream = sys.stderr if stream is None else stream
    for lineno, text, err in report.errors:
        print(f"corpus line {lineno}: {text!r}: {err}", file=stream)
