"""Acceptance criteria, one test each. Every test records a PASS/FAIL line,
printed at the end of the pytest run (and directly when run as a script)."""

import io
import json

import pytest

from zdclean.battery import DEFAULT_CORPUS, RESULT_IDS, run_battery
from zdclean.classes import (
    basic_profile,
    compute_class,
    jacobson_radical,
    prime_radical,
    setwise_nilpotency,
)
from zdclean.cleanness import RING_MODES, ring_predicate
from zdclean.cli import main
from zdclean.constructors import boolean_ring, direct_product, make_zn, quotient
from zdclean.expr import eval_expr, eval_with_group
from zdclean.iso import find_isomorphism
from zdclean.structure import classify_mod_j

RESULTS: dict[int, tuple[bool, str]] = {}


def cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def record(number, title, check):
    """Run ``check`` (returns a detail string or raises) and keep its outcome."""
    try:
        detail = check()
    except AssertionError as exc:
        reason = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        RESULTS[number] = (False, f"{title}: {reason}")
        print(f"FAIL criterion {number}: {title}: {reason}")
        raise
    RESULTS[number] = (True, f"{title}: {detail}")
    print(f"PASS criterion {number}: {title}: {detail}")


@pytest.fixture(scope="module")
def rings():
    return [eval_with_group(t)[0] for t in DEFAULT_CORPUS]


def test_criterion_01_z4_minus_one():
    def check():
        code, out = cli("--json", "decomp", "Z4", "3", "--flavor", "weakly_nil_clean")
        decs = json.loads(out)["decompositions"]
        got = [(d["e"], d["w"], d["e_squared"]) for d in decs]
        assert code == 0 and got == [(1, 2, 1), (3, 0, 1)], f"decompositions {got}"
        code, out = cli("--json", "analyze", "Z4")
        rec = json.loads(out)
        assert rec["uniquely_weakly_nil_clean"] is True and rec["uniquely_nil_clean"] is True
        return f"decompositions {got}; uniquely (weakly) nil-clean true"
    record(1, "Z4 example", check)


def test_criterion_02_discrimination_triple():
    def check():
        R = eval_expr("Z3 x Z3")
        v = ring_predicate(R, "uniquely_weakly_nil_clean")
        assert not v.holds and R.labels[v.counterexample] == "(1,2)", "Z3 x Z3 uwnc"
        assert ring_predicate(R, "uniquely_weakly_D_nil_clean").holds, "Z3 x Z3 uwDnc"
        Z5 = make_zn(5)
        assert not ring_predicate(Z5, "uniquely_weakly_nil_clean").holds, "Z5 uwnc"
        assert basic_profile(Z5).d_ring, "Z5 d_ring"
        Z6 = make_zn(6)
        assert ring_predicate(Z6, "uniquely_weakly_nil_clean").holds, "Z6 uwnc"
        assert "z3_x_boolean" in classify_mod_j(Z6), "Z6 mod J tags"
        return "Z3xZ3 fails at (1,2) but is uwDnc; Z5 D-ring only; Z6 z3_x_boolean"
    record(2, "discrimination triple", check)


def test_criterion_03_t2z2():
    def check():
        T = eval_expr("T2(Z2)")
        p = basic_profile(T)
        zd = ring_predicate(T, "zerodiv_very_idem_or_nilpotent").holds
        got = (zd, p.abelian, p.boolean, p.d_ring)
        assert got == (True, False, False, False), f"got {got}"
        return "zero-divisors very idempotent or nilpotent; not abelian, Boolean or D-ring"
    record(3, "T2(Z2) counterexample", check)


def test_criterion_04_z3_c3_group_ring():
    def check():
        RG, gr = eval_with_group("GR(Z3, C3)")
        uw = ring_predicate(RG, "uniquely_weakly_nil_clean").holds
        u = ring_predicate(RG, "uniquely_nil_clean").holds
        ker = gr.augmentation_ideal()
        nil = set(compute_class(RG, "nilpotents").members)
        assert uw and not u, f"uwnc={uw} unc={u}"
        assert len(ker) == 9 and set(ker) <= nil, "augmentation ideal"
        return "uwnc true, unc false, |I| = 9 and nil"
    record(4, "GR(Z3, C3) cleanness", check)


def test_criterion_05_full_battery():
    def check():
        assert len(DEFAULT_CORPUS) >= 24 and len(RESULT_IDS) >= 25
        code, out = cli("battery", "--json")
        recs = [json.loads(line) for line in out.splitlines()]
        group_pairs = {r["ring"] for r in recs if r["result_id"] == "lem-2.6" and r["status"] != "skipped"}
        assert len(group_pairs) == 4, f"group-ring pairs {sorted(group_pairs)}"
        bad = sorted({(r["result_id"], r["ring"]) for r in recs if r["status"] == "inconsistent"})
        assert not bad and code == 0, f"exit {code}, {len(bad)} inconsistent: {bad}"
        return f"{len(recs)} records, 0 inconsistent"
    record(5, "full battery", check)


def test_criterion_06_radical_oracles(rings):
    def check():
        for R in rings:
            P = set(prime_radical(R).members)
            J = set(jacobson_radical(R).members)
            if len(compute_class(R, "center")) == R.order:
                assert P == set(compute_class(R, "nilpotents").members), R.provenance
            assert P <= J, R.provenance
            Q, _ = quotient(R, sorted(J))
            assert jacobson_radical(Q).members == (Q.zero,), R.provenance
            k = setwise_nilpotency(R, sorted(J))
            assert k is not None and k <= R.order, R.provenance
        return f"{len(rings)} rings"
    record(6, "radical oracles", check)


def test_criterion_07_partition_law(rings):
    def check():
        for R in rings:
            units = set(compute_class(R, "units").members)
            zd = set(compute_class(R, "zero_divisors").members)
            assert units.isdisjoint(zd) and units | zd == set(R.elements), R.provenance
        return f"{len(rings)} rings"
    record(7, "partition law", check)


def test_criterion_08_isomorphism_suite():
    def check():
        Z6, P = make_zn(6), direct_product(make_zn(2), make_zn(3))
        phi = find_isomorphism(Z6, P)
        assert phi is not None, "Z6 vs Z2 x Z3"
        checked = 0
        for a in Z6.elements:
            for b in Z6.elements:
                assert phi(Z6.add(a, b)) == P.add(phi(a), phi(b))
                assert phi(Z6.mul(a, b)) == P.mul(phi(a), phi(b))
                checked += 1
        Z4 = make_zn(4)
        assert find_isomorphism(Z4, direct_product(make_zn(2), make_zn(2))) is None
        assert find_isomorphism(Z4, boolean_ring(2)) is None
        for mode in RING_MODES:
            assert ring_predicate(Z6, mode).holds == ring_predicate(P, mode).holds, mode
        return f"map verified on {checked} pairs; Z4 separated; predicates agree"
    record(8, "isomorphism suite", check)


def test_criterion_09_two_nilpotent_bridge(rings):
    def check():
        bad = []
        for R in rings:
            lhs = ring_predicate(R, "uniquely_nil_clean").holds
            rhs = basic_profile(R).two_nilpotent and ring_predicate(R, "uniquely_weakly_nil_clean").holds
            if lhs != rhs:
                bad.append(R.provenance)
        assert not bad, f"violations: {bad}"
        return f"{len(rings)} rings, 0 violations"
    record(9, "uniquely nil-clean vs 2 nilpotent and uwnc", check)


def test_criterion_10_determinism():
    def check():
        _, one = cli("battery", "--json", "--jobs", "1")
        _, eight = cli("battery", "--json", "--jobs", "8")
        assert one == eight, "reports differ"
        assert one == run_battery().jsonl(), "library and CLI reports differ"
        return f"{len(one.encode())} bytes identical"
    record(10, "determinism", check)


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
