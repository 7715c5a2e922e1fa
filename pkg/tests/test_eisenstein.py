"""Arithmetic in Z[zeta]: norms, division, primary normalization, factoring."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from purecubic.eisenstein import (
    Eisenstein,
    LAMBDA,
    UNITS,
    ZETA,
    associates,
    conj,
    divrem,
    factor,
    factor_rational_prime,
    gcd,
    is_primary,
    is_prime_element,
    norm,
    primary_associate,
    split_primaries,
    valuation,
)

elems = st.builds(Eisenstein, st.integers(-40, 40), st.integers(-40, 40))
nonzero = elems.filter(lambda z: not z.is_zero())


@given(elems, elems)
@settings(max_examples=150, deadline=None)
def test_norm_multiplicative(x, y):
    assert norm(x * y) == norm(x) * norm(y)


@given(elems)
@settings(max_examples=100, deadline=None)
def test_conj_is_ring_involution(x):
    assert conj(conj(x)) == x
    assert norm(x) == (x * conj(x)).a
    assert (x * conj(x)).b == 0


@given(elems, nonzero)
@settings(max_examples=150, deadline=None)
def test_divrem_euclidean(x, y):
    q, r = divrem(x, y)
    assert q * y + r == x
    assert norm(r) < norm(y)


@given(nonzero, nonzero)
@settings(max_examples=100, deadline=None)
def test_gcd_divides_both(x, y):
    g = gcd(x, y)
    for z in (x, y):
        q, r = divrem(z, g)
        assert r.is_zero()


def test_zeta_basics():
    assert ZETA * ZETA * ZETA == Eisenstein(1, 0)
    assert norm(LAMBDA) == 3
    assert len(UNITS) == 6
    assert len(set(UNITS)) == 6


@given(nonzero)
@settings(max_examples=100, deadline=None)
def test_primary_associate_unique(z):
    if norm(z) % 3 == 0:
        return
    u, p = primary_associate(z)
    assert u * p == z or u * z == p  # convention: z = u * p
    assert is_primary(p)
    assert sum(1 for w in associates(z) if is_primary(w)) == 1


def test_split_primaries_examples():
    pi1, pi2 = split_primaries(7)
    assert pi1 == Eisenstein(1, 3)
    assert norm(pi1) == norm(pi2) == 7
    assert is_primary(pi1) and is_primary(pi2)
    # the two are conjugate up to units
    assert norm(gcd(pi1, conj(pi2))) == 7
    pi1_19, pi2_19 = split_primaries(19)
    assert {norm(pi1_19), norm(pi2_19)} == {19}
    assert (pi1_19.a, pi1_19.b) < (pi2_19.a, pi2_19.b)


def test_factor_rational_prime():
    f3 = factor_rational_prime(3)
    assert f3.lambda_exponent == 2
    assert f3.value() == Eisenstein(3, 0)
    f7 = factor_rational_prime(7)
    assert len(f7.primary_primes) == 2
    assert f7.value() == Eisenstein(7, 0)
    f5 = factor_rational_prime(5)
    assert len(f5.primary_primes) == 1
    assert f5.primary_primes[0][0].a % 3 == 1
    assert f5.value() == Eisenstein(5, 0)


@given(nonzero)
@settings(max_examples=60, deadline=None)
def test_factor_reassembles(z):
    assert factor(z).value() == z


def test_valuation():
    pi1, _ = split_primaries(7)
    v, cof = valuation(pi1 * pi1 * Eisenstein(2, 0), pi1)
    assert v == 2
    assert cof * pi1 * pi1 == pi1 * pi1 * Eisenstein(2, 0)


def test_prime_recognition():
    assert is_prime_element(LAMBDA)
    assert is_prime_element(Eisenstein(2, 0))
    assert not is_prime_element(Eisenstein(7, 0))
    assert not is_prime_element(Eisenstein(1, 0))


def test_split_primaries_rejects_inert():
    with pytest.raises(ValueError):
        split_primaries(5)
