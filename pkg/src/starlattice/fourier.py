"""Auxiliary dynamics on the transform coefficients.

For a constant-coefficient equation z^(m) = sum_j a_j z^j + b_0, the
coefficient stream obeys

    (n+m)!/n! * zeta_{n+m} = sum_{j>=2} a_j * conv_j(zeta, n) + a_1 zeta_n + b_0 [n = 0],

where conv_j is the j-term constrained convolution
sum_{l_1+...+l_{j-1} <= n} zeta_{l_1} ... zeta_{l_{j-1}} zeta_{n - l_1 - ... - l_{j-1}}.
The constant b_0 enters only at n = 0 because the constant function has
coefficient stream (b_0, 0, 0, ...). Forward-transforming the stream
reproduces the lattice recurrence exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LengthMismatch
from .rational import as_rational
from .sequences import FourierSeq, TaylorCoeffs
from .transforms import falling_factorial, recip_factorial


@dataclass(frozen=True)
class ConstNonlinearOde:
    """z^(m) = sum_{j=1}^{N} a_j z^j + b0 with rational constants."""

    m: int
    a: tuple[Fraction, ...]  # a_1 .. a_N
    b0: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(as_rational(v) for v in self.a))
        object.__setattr__(self, "b0", as_rational(self.b0))
        if self.m < 1:
            raise ValueError("derivative order m must be positive")
        if not self.a:
            raise ValueError("degree must be at least 1")
        if self.a[-1] == 0 and len(self.a) > 1:
            raise ValueError("leading coefficient a_N must be nonzero (drop it instead)")

    @property
    def degree(self) -> int:
        return len(self.a)


def constrained_convolution(zeta, j: int, n: int) -> Fraction:
    """conv_j at index n by direct nested summation over j-1 free indices."""
    if j == 1:
        return as_rational(zeta[n])

    def rec(level: int, budget: int, prod: Fraction) -> Fraction:
        if level == j - 1:
            return prod * zeta[budget]
        acc = Fraction(0)
        for l in range(budget + 1):
            if zeta[l]:
                acc += rec(level + 1, budget - l, prod * zeta[l])
        return acc

    return rec(0, n, Fraction(1))


def fourier_step(eq: ConstNonlinearOde, zeta_init, L: int) -> FourierSeq:
    """Coefficient stream zeta_0..zeta_L from the first m values."""
    zeta = [as_rational(v) for v in zeta_init]
    if len(zeta) != eq.m:
        raise LengthMismatch(f"need exactly {eq.m} initial coefficients, got {len(zeta)}")
    if L < eq.m - 1:
        raise ValueError(f"L={L} shorter than the {eq.m} initial coefficients")
    for n in range(L - eq.m + 1):
        rhs = Fraction(0)
        for j, a_j in enumerate(eq.a, start=1):
            if a_j:
                rhs += a_j * constrained_convolution(zeta, j, n)
        if n == 0:
            rhs += eq.b0
        zeta.append(rhs / falling_factorial(n + eq.m, eq.m))
    return FourierSeq(tuple(zeta[: L + 1]))


def fourier_solution(b: TaylorCoeffs, n: int) -> Fraction:
    """Literal double sum sum_{l<=n} sum_{k<=l} (-1)^(n-l) b_k / ((n-l)!(l-k)!).

    The inner alternating sum telescopes to a Kronecker delta, so the value
    is b_n (zero beyond the stored prefix).
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    acc = Fraction(0)
    for l in range(n + 1):
        sign = -1 if (n - l) % 2 else 1
        for k in range(min(l, len(b) - 1) + 1):
            acc += sign * b[k] * recip_factorial(n - l) * recip_factorial(l - k)
    return acc
