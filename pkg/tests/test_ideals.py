import math
import random
from fractions import Fraction

import pytest

from qrds.errors import UnsupportedField
from qrds.ideals import (
    FieldSpec,
    IdealQuery,
    canonical_reps,
    field_spec,
    ideal_count,
    ideal_series,
    kronecker_symbol,
    sieve_counts,
)


def test_field_table():
    assert field_spec(2) == FieldSpec(2, 8, 3, 2)
    assert field_spec(3) == FieldSpec(3, 12, 2, 1)
    assert field_spec(6) == FieldSpec(6, 24, 5, 2)
    for f in (field_spec(2), field_spec(3), field_spec(6)):
        assert f.x1 * f.x1 - f.D * f.y1 * f.y1 == 1  # fundamental Pell solution
    with pytest.raises(UnsupportedField):
        field_spec(5)


# ------------------------------------------------------------ the character


def _primes(limit):
    sieve = [True] * (limit + 1)
    sieve[0:2] = [False, False]
    for p in range(2, int(math.isqrt(limit)) + 1):
        if sieve[p]:
            sieve[p * p :: p] = [False] * len(sieve[p * p :: p])
    return [p for p, is_p in enumerate(sieve) if is_p]


def test_kronecker_euler_criterion():
    for delta in (8, 12, 24, 5, -4, 13):
        for p in _primes(500):
            if p == 2 or delta % p == 0:
                continue
            euler = pow(delta % p, (p - 1) // 2, p)
            want = 1 if euler == 1 else -1
            assert kronecker_symbol(delta, p) == want, (delta, p)


def test_kronecker_multiplicative_in_n():
    rng = random.Random(3)
    for _ in range(200):
        a = rng.randrange(-30, 31)
        m = rng.randrange(1, 60)
        n = rng.randrange(1, 60)
        assert kronecker_symbol(a, m * n) == kronecker_symbol(a, m) * kronecker_symbol(a, n)


def test_kronecker_frozen_patterns():
    # chi_8 depends on m mod 8 (1, 7 -> +1; 3, 5 -> -1), zero on evens
    for m in range(1, 50, 2):
        want = 1 if m % 8 in (1, 7) else -1
        assert kronecker_symbol(8, m) == want
    assert all(kronecker_symbol(8, m) == 0 for m in range(2, 40, 2))
    # chi_24 on units mod 24
    plus = {1, 5, 19, 23}
    for m in range(1, 100):
        if math.gcd(m, 24) == 1:
            assert kronecker_symbol(24, m) == (1 if m % 24 in plus else -1)


def test_kronecker_rejects_bad_modulus():
    with pytest.raises(ValueError):
        kronecker_symbol(5, 0)


# ------------------------------------------------------- canonical windows


def test_canonical_reps_frozen_cases():
    assert canonical_reps(2, 1) == [(1, 0)]
    assert canonical_reps(2, -1) == [(1, 1)]
    assert canonical_reps(2, 7) == [(3, -1), (3, 1)]
    assert canonical_reps(2, -7) == [(-1, 2), (1, 2)]  # mirror orbits
    assert canonical_reps(3, 1) == [(1, 0)]
    assert canonical_reps(3, -2) == [(1, 1)]
    assert canonical_reps(3, -3) == [(0, 1)]
    assert canonical_reps(6, 3) == [(3, 1)]
    assert canonical_reps(6, -2) == [(2, 1)]
    with pytest.raises(ValueError):
        canonical_reps(2, 0)


def test_reps_solve_the_norm_equation():
    for D in (2, 3, 6):
        for m in list(range(1, 40)) + [-m for m in range(1, 40)]:
            for u, v in canonical_reps(D, m):
                assert u * u - D * v * v == m


def test_window_picks_one_per_unit_orbit():
    # applying the fundamental unit moves every canonical representative out
    # of the window, so no two reps share an orbit "one step apart"
    for D in (2, 3, 6):
        f = field_spec(D)
        for m in list(range(1, 60)) + [-m for m in range(1, 60)]:
            reps = set(canonical_reps(D, m))
            for u, v in reps:
                succ = (f.x1 * u + D * f.y1 * v, f.y1 * u + f.x1 * v)
                pred = (f.x1 * u - D * f.y1 * v, -f.y1 * u + f.x1 * v)
                assert succ not in reps, (D, m, (u, v))
                assert pred not in reps, (D, m, (u, v))


def test_counts_match_divisor_sums():
    # D = 2 has a norm -1 unit: positive and negative windows both carry the
    # full ideal count.  D = 3, 6 do not: the two windows partition it.
    for m in range(1, 400):
        c2 = ideal_count(2, m)
        assert len(canonical_reps(2, m)) == c2
        assert len(canonical_reps(2, -m)) == c2
        for D in (3, 6):
            total = ideal_count(D, m)
            assert len(canonical_reps(D, m)) + len(canonical_reps(D, -m)) == total, (D, m)


def test_count_multiplicative_on_coprime_arguments():
    rng = random.Random(11)
    for D in (2, 3, 6):
        for _ in range(120):
            a = rng.randrange(1, 120)
            b = rng.randrange(1, 120)
            if math.gcd(a, b) != 1:
                continue
            assert ideal_count(D, a * b) == ideal_count(D, a) * ideal_count(D, b)


def test_ramified_prime_absorbs():
    # 2 ramifies in the D = 6 field, so multiplying an odd norm by 2 cannot
    # change the ideal count
    for m in range(1, 300, 2):
        assert ideal_count(6, m) == ideal_count(6, 2 * m)


def test_sieve_agrees_with_direct_counts():
    for D in (2, 3, 6):
        counts = sieve_counts(D, 500)
        for m in range(1, 501):
            assert counts[m] == ideal_count(D, m), (D, m)


# ------------------------------------------------------------------ series


def test_ideal_series_residue_class_and_weight():
    q = IdealQuery(2, 15, 32, "all")
    f = ideal_series(q, 200, weight=Fraction(1, 2))
    # 47 and 79 are primes that split (both are 7 mod 8); 111 = 3*37 and
    # 143 = 11*13 have inert factors and drop out; 175 = 5^2 * 7 counts 2
    assert dict(f.items()) == {47: 1, 79: 1, 175: 1}
    assert all(e % 32 == 15 for e, _ in f.items())


def test_ideal_series_negative_norms():
    q = IdealQuery(3, 0, 2, "neg")
    f = ideal_series(q, 40, weight=2)
    assert f.coefficient(2) == 2  # x^2 - 3 y^2 = -2 at (1, 1), one orbit
    for e, c in f.items():
        assert e % 2 == 0
        assert c == 2 * len(canonical_reps(3, -e))


def test_ideal_series_zero_residue_starts_at_modulus():
    q = IdealQuery(3, 0, 2, "neg")
    f = ideal_series(q, 10)
    assert f.valuation() == 2  # m = 0 is never queried


def test_query_validation():
    with pytest.raises(ValueError):
        IdealQuery(2, 32, 32, "all")
    with pytest.raises(ValueError):
        IdealQuery(2, -1, 32, "all")
    with pytest.raises(ValueError):
        IdealQuery(2, 0, 0, "all")
    with pytest.raises(ValueError):
        IdealQuery(2, 1, 32, "positive")
    with pytest.raises(UnsupportedField):
        IdealQuery(7, 1, 32, "all")
