import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from filament_prng.errors import EvenModulus, NotCoprime, NotInvertible, RangeError
from filament_prng.modular import (
    MAX_MODULUS,
    FactoredModulus,
    Residue,
    coprime_residues,
    crt_combine,
    euler_totient,
    factor_pow2,
    fermat_inverse,
    is_probable_prime,
    jacobi,
    mod_inverse,
    phi_p,
)
from helpers import jacobi_by_factorization, sieve_primes, totient_by_count

PRIMES_1K = sieve_primes(1000)


@pytest.mark.parametrize("a,n,expected", [(1, 7, 1), (4, 5, 4), (3, 7, 5)])
def test_mod_inverse_examples(a, n, expected):
    assert mod_inverse(a, n) == Residue(expected, n)


def test_mod_inverse_mod_one_is_zero():
    assert mod_inverse(5, 1) == Residue(0, 1)
    assert mod_inverse(0, 1) == Residue(0, 1)


def test_mod_inverse_rejects_noncoprime():
    with pytest.raises(NotInvertible):
        mod_inverse(6, 9)


@given(st.integers(min_value=1, max_value=10**4), st.integers())
def test_mod_inverse_property(n, a):
    if math.gcd(a, n) == 1:
        inv = mod_inverse(a, n)
        assert (a * inv.value - 1) % n == 0 or n == 1
    elif n > 1:
        with pytest.raises(NotInvertible):
            mod_inverse(a, n)


def test_mod_inverse_exhaustive_small():
    for n in range(1, 120):
        for a in range(n):
            if math.gcd(a, n) == 1:
                assert a * mod_inverse(a, n).value % n == 1 % n


@pytest.mark.parametrize("a,n,expected", [(0, 5, 0), (2, 5, 3), (1, 2, 1)])
def test_fermat_inverse_examples(a, n, expected):
    assert fermat_inverse(a, n).value == expected


def test_fermat_inverse_matches_mod_inverse_on_primes():
    for p in PRIMES_1K:
        for a in range(1, p):
            assert fermat_inverse(a, p) == mod_inverse(a, p)


@pytest.mark.parametrize("a,n,expected", [(5, 1, 1), (2, 3, -1), (5, 9, 1)])
def test_jacobi_examples(a, n, expected):
    assert jacobi(a, n) == expected


def test_jacobi_even_modulus_rejected():
    with pytest.raises(EvenModulus):
        jacobi(3, 10)


def test_jacobi_matches_legendre_products():
    for n in range(1, 1000, 2):
        for a in range(n):
            assert jacobi(a, n) == jacobi_by_factorization(a, n), (a, n)


def test_jacobi_squared_is_one_when_coprime():
    for n in range(1, 200, 2):
        for a in range(n):
            symbol = jacobi(a, n)
            if math.gcd(a, n) == 1:
                assert symbol * symbol == 1
            else:
                assert symbol == 0


@pytest.mark.parametrize("q,expected", [(1, 1), (12, 4), (7, 6)])
def test_totient_examples(q, expected):
    assert euler_totient(q) == expected


def test_totient_against_direct_count():
    for q in range(1, 301):
        assert euler_totient(q) == totient_by_count(q)


@given(
    st.integers(min_value=1, max_value=999),
    st.integers(min_value=1, max_value=999),
)
def test_totient_multiplicative(a, b):
    if math.gcd(a, b) == 1 and a * b <= MAX_MODULUS:
        assert euler_totient(a * b) == euler_totient(a) * euler_totient(b)


def test_totient_halving_identity():
    # phi(q) = phi(q/2) whenever q = 2 mod 4
    for q in range(2, 1001, 4):
        assert euler_totient(q) == euler_totient(q // 2)


@pytest.mark.parametrize(
    "q,r,q_odd", [(12, 2, 3), (7, 0, 7), (8, 3, 1), (1, 0, 1)]
)
def test_factor_pow2_examples(q, r, q_odd):
    assert factor_pow2(q) == FactoredModulus(r=r, q_odd=q_odd, q=q)


@given(st.integers(min_value=1, max_value=MAX_MODULUS))
def test_factor_pow2_reconstructs(q):
    fac = factor_pow2(q)
    assert fac.q_odd % 2 == 1
    assert (1 << fac.r) * fac.q_odd == q


@pytest.mark.parametrize(
    "v1,n1,v2,n2,expected",
    [(0, 3, 0, 4, 0), (1, 3, 2, 4, 10), (2, 5, 3, 7, 17)],
)
def test_crt_examples(v1, n1, v2, n2, expected):
    combined = crt_combine(Residue(v1, n1), Residue(v2, n2))
    assert combined == Residue(expected, n1 * n2)


def test_crt_rejects_common_factor():
    with pytest.raises(NotCoprime):
        crt_combine(Residue(1, 6), Residue(1, 4))


def test_crt_bijection_small():
    for n1 in range(1, 32):
        for n2 in range(1, 32):
            if math.gcd(n1, n2) != 1 or n1 * n2 > 1000:
                continue
            images = {
                crt_combine(Residue(v1, n1), Residue(v2, n2)).value
                for v1 in range(n1)
                for v2 in range(n2)
            }
            assert images == set(range(n1 * n2))


@pytest.mark.parametrize(
    "p,q,phi,eff",
    [(1, 5, 4, 5), (1, 6, 1, 3), (3, 8, 3, 8)],
)
def test_phi_p_examples(p, q, phi, eff):
    result = phi_p(p, q)
    assert (result.phi, result.effective_modulus) == (phi, eff)


def test_phi_p_rejects_noncoprime():
    with pytest.raises(NotCoprime):
        phi_p(2, 6)


def test_phi_p_defining_congruence():
    for q in range(1, 150):
        for p in coprime_residues(q) or [1]:
            result = phi_p(p, q)
            if q % 2 == 1:
                assert 4 * p * result.phi % q == 1 % q
            elif q % 4 == 2:
                assert p * result.phi % (q // 2) == 1 % (q // 2)
            else:
                assert p * result.phi % q == 1 % q


def test_phi_p_bijection_on_units():
    # injective in p, and onto the unit group of the effective modulus
    for q in range(2, 200):
        residues = coprime_residues(q)
        values = [phi_p(p, q).phi for p in residues]
        assert len(set(values)) == len(residues)
        eff = phi_p(residues[0], q).effective_modulus
        assert set(values) == {v for v in range(eff) if math.gcd(v, eff) == 1}


def test_range_guard():
    with pytest.raises(RangeError):
        mod_inverse(3, MAX_MODULUS + 1)
    with pytest.raises(RangeError):
        euler_totient(0)


def test_is_probable_prime_against_sieve():
    prime_set = set(sieve_primes(2000))
    for n in range(2000):
        assert is_probable_prime(n) == (n in prime_set)
