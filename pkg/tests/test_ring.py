import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdclean.constructors import make_zn
from zdclean.ring import (
    AxiomViolation,
    CapExceeded,
    MalformedTable,
    NotAnIdeal,
    RingMap,
    check_ideal,
    find_violation,
    is_ideal,
    make_group,
    validate_axioms,
)

from conftest import naive_axioms_hold


def zn_tables(n):
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n, (idx[:, None] * idx[None, :]) % n


def test_z4_tables_valid():
    add, mul = zn_tables(4)
    R = validate_axioms(add, mul)
    assert R.order == 4
    assert not R.trivial


def test_z4_corrupted_entry_reports_first_broken_law():
    add, mul = zn_tables(4)
    mul = mul.copy()
    mul[2][3] = 1
    with pytest.raises(AxiomViolation) as info:
        validate_axioms(add, mul)
    assert info.value.axiom == "mul_associative"
    a, b, c = info.value.witness
    assert (mul[mul[a, b], c]) != mul[a, mul[b, c]]
    assert info.value.witness == (2, 2, 3)


def test_zero_ring_is_trivial():
    R = validate_axioms([[0]], [[0]])
    assert R.trivial and R.zero == R.one == 0


def test_zero_equal_one_rejected():
    add, mul = zn_tables(3)
    assert find_violation(add, mul, 0, 0).axiom in ("mul_identity", "zero_ne_one")


@pytest.mark.parametrize("add, mul", [
    ([[0, 1], [1]], [[0, 0], [0, 1]]),
    ([[0, 1], [1, 0]], [[0, 0, 0], [0, 1, 0], [0, 0, 1]]),
    ([[0, 1], [1, 2]], [[0, 0], [0, 1]]),
    ([], []),
])
def test_malformed_tables(add, mul):
    with pytest.raises(MalformedTable):
        validate_axioms(add, mul)


def test_non_commutative_addition():
    add = [[0, 1, 2], [2, 1, 0], [2, 0, 1]]
    _, mul = zn_tables(3)
    with pytest.raises(AxiomViolation):
        validate_axioms(add, mul)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.data())
def test_single_corruption_always_detected(n, data):
    add, mul = zn_tables(n)
    mul = mul.copy()
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    v = data.draw(st.integers(0, n - 1).filter(lambda v: v != mul[i, j]))
    mul[i, j] = v
    assert find_violation(add, mul, 0, 1) is not None


@pytest.mark.parametrize("n", range(1, 9))
def test_checker_agrees_with_naive_oracle(n):
    R = make_zn(n)
    assert naive_axioms_hold(R)
    assert find_violation(R.add_table, R.mul_table, R.zero, R.one) is None


def test_element_ops():
    R = make_zn(4)
    assert R.add(1, 2) == 3
    assert R.neg(1) == 3
    assert R.sub(1, 2) == 3
    assert R.power(2, 2) == 0
    assert R.power(3, 0) == R.one
    assert R.times(6) == 2
    assert R.index_of("3") == 3
    with pytest.raises(KeyError):
        R.index_of("9")


def test_tables_read_only():
    R = make_zn(3)
    with pytest.raises(ValueError):
        R.mul_table[0, 0] = 1


def test_cap():
    with pytest.raises(CapExceeded):
        make_zn(5000)
    with pytest.raises(CapExceeded):
        make_zn(10, cap=9)


def test_ideal_checks():
    R = make_zn(4)
    assert is_ideal(R, [0, 2])
    assert not is_ideal(R, [0, 1])
    with pytest.raises(NotAnIdeal):
        check_ideal(R, [0, 3])


def test_ring_map_verified():
    R, S = make_zn(4), make_zn(2)
    phi = RingMap(R, S, [0, 1, 0, 1])
    assert phi.kernel() == (0, 2)
    assert phi.is_surjective() and not phi.bijective
    with pytest.raises(AxiomViolation):
        RingMap(make_zn(3), make_zn(2), [0, 1, 0])


def test_group_validation():
    G = make_group([[0, 1], [1, 0]])
    assert G.order == 2 and G.inverse(1) == 1 and G.element_order(1) == 2
    with pytest.raises(AxiomViolation):
        make_group([[0, 1], [1, 1]])


def test_pickle_round_trip():
    import pickle

    R = make_zn(6)
    S = pickle.loads(pickle.dumps(R))
    assert np.array_equal(S.mul_table, R.mul_table)
    assert S.memo("k", lambda: 5) == 5
