import pytest

from zdclean.classes import ROLES, compute_class
from zdclean.constructors import boolean_ring, direct_product, make_zn, matrix_ring
from zdclean.iso import ISO_CAP, find_isomorphism, isomorphic
from zdclean.ring import CapExceeded


def crt_map(n, p, q):
    """Chinese-remainder oracle r -> (r mod p, r mod q) as product indices."""
    return [(r % p) * q + (r % q) for r in range(n)]


def test_z6_against_crt():
    Z6, P = make_zn(6), direct_product(make_zn(2), make_zn(3))
    phi = find_isomorphism(Z6, P)
    assert phi is not None
    # Z6 has no nontrivial ring automorphism, so the map is forced
    assert phi.as_list() == crt_map(6, 2, 3)
    for a in Z6.elements:
        for b in Z6.elements:
            assert phi(Z6.add(a, b)) == P.add(phi(a), phi(b))
            assert phi(Z6.mul(a, b)) == P.mul(phi(a), phi(b))


def test_non_isomorphic():
    Z4 = make_zn(4)
    assert find_isomorphism(Z4, direct_product(make_zn(2), make_zn(2))) is None
    assert find_isomorphism(Z4, boolean_ring(2)) is None


def test_identity():
    Z3 = make_zn(3)
    assert find_isomorphism(Z3, Z3).as_list() == [0, 1, 2]


def test_different_orders():
    assert find_isomorphism(make_zn(3), make_zn(4)) is None


def test_cap():
    with pytest.raises(CapExceeded):
        find_isomorphism(make_zn(ISO_CAP + 1), make_zn(ISO_CAP + 1))


def test_reflexive_and_symmetric(corpus_rings):
    small = [R for R in corpus_rings if R.order <= ISO_CAP]
    for R in small:
        assert find_isomorphism(R, R) is not None
    for R in small:
        for S in small:
            if R.order == S.order and R is not S:
                assert (find_isomorphism(R, S) is None) == (find_isomorphism(S, R) is None)


def test_bool2_vs_z2_squared():
    assert isomorphic(boolean_ring(2), direct_product(make_zn(2), make_zn(2)))


def test_t2_not_commutative_partner():
    T = matrix_ring(make_zn(2), 2, "upper_triangular")
    assert not isomorphic(T, boolean_ring(3))
    assert not isomorphic(T, make_zn(8))


@pytest.mark.parametrize("left, right", [
    (make_zn(6), direct_product(make_zn(2), make_zn(3))),
    (make_zn(12), direct_product(make_zn(3), make_zn(4))),
    (boolean_ring(3), direct_product(boolean_ring(1), boolean_ring(2))),
])
def test_classes_transported(left, right):
    phi = find_isomorphism(left, right)
    for role in ROLES:
        image = sorted(phi(x) for x in compute_class(left, role))
        assert image == list(compute_class(right, role).members)
