"""Falling-factorial basis change between lattice samples and coefficients.

With p_l(n) = n!/(n-l)! (zero for n < l), the pair

    z_n = sum_{l=0}^{n} zeta_l * p_l(n)                    (forward)
    zeta_n = sum_{l=0}^{n} (-1)^(n-l) * z_l / (l!(n-l)!)   (inverse)

is triangular and mutually inverse at every length. A power-series prefix
b_0..b_L maps to the lattice through the same forward rule with zeta = b.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, perm

from .sequences import FourierSeq, LatticeSeq, TaylorCoeffs


def falling_factorial(n: int, k: int) -> Fraction:
    """(n)_k = n(n-1)...(n-k+1); equals 0 for k > n and 1 for k = 0."""
    if n < 0 or k < 0:
        raise ValueError("falling_factorial needs nonnegative arguments")
    return Fraction(perm(n, k))


def recip_factorial(k: int) -> Fraction:
    """1/k! for k >= 0 and 0 for k < 0.

    The negative branch encodes the empty-sum convention: kernel sums may
    run over a full index box and out-of-range terms vanish by themselves.
    """
    if k < 0:
        return Fraction(0)
    return Fraction(1, factorial(k))


def forward_transform(zeta: FourierSeq) -> LatticeSeq:
    """z_n = sum_{l<=n} zeta_l (n)_l; entry n depends on zeta_0..zeta_n only."""
    values = []
    for n in range(len(zeta)):
        values.append(sum((zeta[l] * falling_factorial(n, l) for l in range(n + 1)), Fraction(0)))
    return LatticeSeq(tuple(values))


def inverse_transform(z: LatticeSeq) -> FourierSeq:
    """zeta_n = sum_{l<=n} (-1)^(n-l) z_l / (l!(n-l)!); exact inverse of the forward map."""
    coeffs = []
    for n in range(len(z)):
        acc = Fraction(0)
        for l in range(n + 1):
            term = z[l] * recip_factorial(l) * recip_factorial(n - l)
            acc += term if (n - l) % 2 == 0 else -term
        coeffs.append(acc)
    return FourierSeq(tuple(coeffs))


def taylor_to_lattice(b: TaylorCoeffs, L: int) -> LatticeSeq:
    """Lattice image z_n = sum_{k<=n} b_k (n)_k of a series prefix, n = 0..L.

    Coefficients beyond the stored prefix are taken as exact zeros, so a
    polynomial may be passed as its finite coefficient list. For a
    transcendental series supply at least L+1 coefficients.
    """
    if L < 0:
        raise ValueError("L must be nonnegative")
    top = len(b) - 1
    values = []
    for n in range(L + 1):
        acc = Fraction(0)
        for k in range(min(n, top) + 1):
            acc += b[k] * falling_factorial(n, k)
        values.append(acc)
    return LatticeSeq(tuple(values))
