import pytest

from zdclean.classes import (
    ROLES,
    basic_profile,
    compute_class,
    jacobson_radical,
    nilpotency_indices,
    periodic_witness,
    prime_radical,
    setwise_nilpotency,
)
from zdclean.constructors import boolean_ring, direct_product, make_zn, matrix_ring, quotient
from zdclean.expr import eval_expr
from zdclean.ring import TrivialRing

from conftest import naive_jacobson, naive_nilpotents, naive_strongly_nilpotent, naive_units


def test_z3_squared_idempotents():
    R = eval_expr("Z3 x Z3")
    assert compute_class(R, "idempotents").labels() == ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]


def test_z3_all_very_idempotent():
    assert compute_class(make_zn(3), "very_idempotents").members == (0, 1, 2)


def test_z4_nilpotents_with_indices():
    s = compute_class(make_zn(4), "nilpotents")
    assert s.members == (0, 2) and s.aux == (1, 2)


def test_z6_zero_divisors():
    assert compute_class(make_zn(6), "zero_divisors").members == (0, 2, 3, 4)


def test_units_carry_inverses():
    R = make_zn(7)
    s = compute_class(R, "units")
    for x in s:
        assert R.mul(x, s.payload(x)) == R.one


@pytest.mark.parametrize("expr, members", [("Z4", (0, 2)), ("Z6", (0,))])
def test_jacobson_examples(expr, members):
    assert jacobson_radical(eval_expr(expr)).members == members


def test_jacobson_t2z2():
    T = matrix_ring(make_zn(2), 2, "upper_triangular")
    assert jacobson_radical(T).labels() == ["[0,0;0,0]", "[0,1;0,0]"]


@pytest.mark.parametrize("R, members", [
    (make_zn(4), (0, 2)),
    (matrix_ring(make_zn(2), 2), (0,)),
    (boolean_ring(2), (0,)),
])
def test_prime_radical_examples(R, members):
    assert prime_radical(R).members == members


def test_profiles():
    T = basic_profile(matrix_ring(make_zn(2), 2, "upper_triangular"))
    assert (T.abelian, T.d_ring, T.boolean) == (False, False, False)
    Z5 = basic_profile(make_zn(5))
    assert Z5.field and Z5.d_ring
    Z4 = basic_profile(make_zn(4))
    assert Z4.local and Z4.two_nilpotent
    assert basic_profile(make_zn(6)).periodic


def test_trivial_rejected():
    with pytest.raises(TrivialRing):
        basic_profile(make_zn(1))


def test_periodic_witness():
    R = make_zn(4)
    for x in R.elements:
        m, n = periodic_witness(R, x)
        assert m > n >= 1 and R.power(x, m) == R.power(x, n)


def test_unknown_role():
    with pytest.raises(ValueError):
        compute_class(make_zn(2), "bogus")


def test_corpus_against_oracles(corpus_rings):
    for R in corpus_rings:
        if R.order > 64:
            continue
        assert set(compute_class(R, "units").members) == naive_units(R)
        assert set(compute_class(R, "nilpotents").members) == naive_nilpotents(R)
        assert set(jacobson_radical(R).members) == naive_jacobson(R)
        assert set(prime_radical(R).members) == naive_strongly_nilpotent(R)


def test_corpus_radical_laws(corpus_rings):
    for R in corpus_rings:
        nil = set(compute_class(R, "nilpotents").members)
        P, J = set(prime_radical(R).members), set(jacobson_radical(R).members)
        assert P <= J and P <= nil
        if len(compute_class(R, "center")) == R.order:
            assert P == nil
        assert setwise_nilpotency(R, sorted(J)) is not None
        Q, _ = quotient(R, sorted(J))
        assert jacobson_radical(Q).members == (Q.zero,)


def test_corpus_partition_and_nilpotents(corpus_rings):
    for R in corpus_rings:
        units = set(compute_class(R, "units").members)
        zd = set(compute_class(R, "zero_divisors").members)
        assert units | zd == set(R.elements) and not units & zd
        assert set(compute_class(R, "nilpotents").members) <= zd


def test_element_set_invariants(corpus_rings):
    R = corpus_rings[4]
    for role in ROLES:
        s = compute_class(R, role)
        assert list(s.members) == sorted(set(s.members))
        assert s.mask().sum() == len(s)


def test_setwise_nilpotency():
    R = make_zn(8)
    assert setwise_nilpotency(R, [0, 2, 4, 6]) == 3
    assert setwise_nilpotency(R, [1]) is None
    idx = nilpotency_indices(R)
    assert list(idx) == [1, 0, 3, 0, 2, 0, 3, 0]
