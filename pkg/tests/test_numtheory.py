import pytest
from hypothesis import given, strategies as st

from qcongruence.numtheory import (
    DividesError,
    ResidueSet,
    complement_law_holds,
    euler_quotient_int,
    fermat_euler_relation_holds,
    fermat_quotient_int,
    floor_sum_half,
    image_partition_holds,
    is_prime,
    least_residue,
    legendre_euler,
    legendre_gauss,
    mod_inverse,
    parity_identity_check,
    primes_in_range,
    residue_set,
)

PRIMES_TO_97 = [p for p in range(5, 98) if all(p % d for d in range(2, p))]


def brute_legendre(p, m):
    """+1 iff m is a nonzero square mod p, by listing squares."""
    return 1 if m % p in {x * x % p for x in range(1, p)} else -1


def test_primes():
    assert primes_in_range(1, 20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(1) and not is_prime(91)
    assert PRIMES_TO_97 == primes_in_range(5, 97)


def test_least_residue():
    assert least_residue(7, 5) == 2
    assert least_residue(-3, 7) == 4
    assert least_residue(0, 11) == 0


def test_residue_set_examples():
    r = residue_set(5, 1)
    assert r.members == () and r.sigma == 0
    # j in {1,2}: <2>_5 = 2 < 2.5, <4>_5 = 4 > 2.5
    r = residue_set(5, 2)
    assert r.members == (2,) and r.sigma == 1
    # j in {1,2,3}: <3>=3, <6>=6, <9>=2; only j=2 exceeds 3.5
    r = residue_set(7, 3)
    assert r.members == (2,) and r.sigma == 1
    assert str(residue_set(5, 2)) == "R_5(2) = {2}, sigma = 1"
    with pytest.raises(DividesError):
        residue_set(7, 14)


def test_residue_set_invariants_enforced():
    with pytest.raises(ValueError):
        ResidueSet(7, 3, (1,), 1)
    with pytest.raises(ValueError):
        ResidueSet(7, 3, (2,), 2)


@given(st.sampled_from(PRIMES_TO_97), st.integers(-500, 500))
def test_residue_set_properties(p, m):
    if m % p == 0:
        return
    r = residue_set(p, m)
    assert all(1 <= j <= (p - 1) // 2 and (j * m) % p > p / 2 for j in r)
    assert all((j * m) % p < p / 2 for j in range(1, (p + 1) // 2) if j not in r)
    assert r.members == residue_set(p, m + p).members


def test_legendre_examples():
    assert legendre_gauss(5, 1) == 1
    assert legendre_gauss(5, 2) == -1
    assert legendre_gauss(7, 3) == -1
    assert legendre_euler(5, 2) == -1
    assert legendre_euler(7, 2) == 1
    assert legendre_euler(13, 1) == 1
    with pytest.raises(DividesError):
        legendre_euler(5, 10)


@pytest.mark.parametrize("p", [3] + PRIMES_TO_97)
def test_two_legendre_routes_agree(p):
    for m in range(1, p):
        assert legendre_gauss(p, m) == legendre_euler(p, m) == brute_legendre(p, m)


def test_mod_inverse():
    assert mod_inverse(2, 5) == 3
    assert mod_inverse(1, 7) == 1
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(-2, 7) == 3


def test_floor_sum_half():
    assert floor_sum_half(5, 1) == 0
    assert floor_sum_half(5, 3) == 1
    # floor(2/7) + floor(4/7) + floor(6/7)
    assert floor_sum_half(7, 2) == 0
    assert floor_sum_half(7, 4) == 2


def test_quotients():
    assert fermat_quotient_int(5, 2) == 3
    assert fermat_quotient_int(7, 2) == 9
    assert fermat_quotient_int(11, 1) == 0
    assert euler_quotient_int(5, 2) == 1
    assert euler_quotient_int(7, 2) == 1
    assert euler_quotient_int(13, 1) == 0
    with pytest.raises(DividesError):
        fermat_quotient_int(5, 25)


@pytest.mark.parametrize("p", PRIMES_TO_97)
def test_fermat_euler_relation(p):
    assert fermat_euler_relation_holds(p)


def test_parity_examples():
    assert parity_identity_check(5, 3)
    assert parity_identity_check(7, 2)
    assert parity_identity_check(5, 4)


@pytest.mark.parametrize("p", PRIMES_TO_97[:10])
def test_parity_and_set_identities(p):
    for m in range(-3 * p, 3 * p):
        if m % p == 0:
            continue
        assert complement_law_holds(p, m)
        assert image_partition_holds(p, m)
        if m >= 2:
            assert parity_identity_check(p, m)
