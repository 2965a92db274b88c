from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest

from starlattice import (
    FourierSeq,
    LatticeSeq,
    TaylorCoeffs,
    falling_factorial,
    forward_transform,
    inverse_transform,
    recip_factorial,
    taylor_to_lattice,
)


def rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randrange(-99, 100), rng.randrange(1, 30))


def test_falling_factorial_values():
    assert falling_factorial(5, 0) == 1
    assert falling_factorial(2, 5) == 0
    assert falling_factorial(5, 3) == 60
    with pytest.raises(ValueError):
        falling_factorial(-1, 2)


def test_recip_factorial_values():
    assert recip_factorial(0) == 1
    assert recip_factorial(4) == Fraction(1, 24)
    assert recip_factorial(-2) == 0


def test_forward_transform_examples():
    assert forward_transform(FourierSeq((1, 0, 0))).values == (1, 1, 1)
    assert forward_transform(FourierSeq((0, 1, 0, 0))).values == (0, 1, 2, 3)
    assert forward_transform(FourierSeq((1, 1, 1))).values == (1, 2, 5)


def test_inverse_transform_examples():
    c = Fraction(7, 3)
    assert inverse_transform(LatticeSeq((c, c, c))).coeffs == (c, 0, 0)
    assert inverse_transform(LatticeSeq((0, 1, 2, 3))).coeffs == (0, 1, 0, 0)
    assert inverse_transform(LatticeSeq((1, 2, 5))).coeffs == (1, 1, 1)


def test_round_trip_random():
    rng = random.Random(2024)
    for _ in range(50):
        length = rng.randrange(1, 65)
        zeta = FourierSeq(tuple(rand_fraction(rng) for _ in range(length)))
        assert inverse_transform(forward_transform(zeta)) == zeta
        z = LatticeSeq(tuple(rand_fraction(rng) for _ in range(length)))
        assert forward_transform(inverse_transform(z)) == z


def test_triangularity():
    rng = random.Random(7)
    zeta = [rand_fraction(rng) for _ in range(10)]
    base = forward_transform(FourierSeq(tuple(zeta)))
    bumped = list(zeta)
    bumped[7] += 5
    changed = forward_transform(FourierSeq(tuple(bumped)))
    assert base.values[:7] == changed.values[:7]
    assert base.values[7:] != changed.values[7:]


def test_kronecker_identity():
    # The alternating factorial sum behind the transform pair collapses to a delta.
    for n in range(21):
        for k in range(n + 1):
            acc = Fraction(0)
            for l in range(k, n + 1):
                term = Fraction(1, factorial(n - l) * factorial(l - k))
                acc += term if (n - l) % 2 == 0 else -term
            assert acc == (1 if n == k else 0)


def test_taylor_to_lattice_constant():
    c = Fraction(5, 2)
    z = taylor_to_lattice(TaylorCoeffs((c, 0, 0, 0)), 6)
    assert all(v == c for v in z)


def test_taylor_to_lattice_exponential():
    L = 12
    b = TaylorCoeffs(tuple(Fraction(1, factorial(k)) for k in range(L + 1)))
    assert taylor_to_lattice(b, L).values == tuple(Fraction(2) ** n for n in range(L + 1))


def test_taylor_to_lattice_scaled_exponential():
    L = 10
    lam = Fraction(2)
    b = TaylorCoeffs(tuple(lam**k / factorial(k) for k in range(L + 1)))
    assert taylor_to_lattice(b, L).values == tuple(Fraction(3) ** n for n in range(L + 1))


def test_taylor_to_lattice_matches_forward_transform():
    rng = random.Random(99)
    for _ in range(20):
        length = rng.randrange(1, 13)
        b = tuple(rand_fraction(rng) for _ in range(length))
        L = length - 1
        assert taylor_to_lattice(TaylorCoeffs(b), L) == forward_transform(FourierSeq(b))


def test_sequences_reject_floats_and_out_of_range():
    with pytest.raises(TypeError):
        LatticeSeq((0.5, 1))
    z = LatticeSeq((1, 2, 3))
    with pytest.raises(IndexError):
        z[3]
    with pytest.raises(IndexError):
        z[-1]
    assert z.last_index == 2
