"""The star product on lattice sequences.

The product is defined on the falling-factorial basis by p_i * p_j = p_{i+j};
on coefficients it is the Cauchy convolution, so the fast route is
inverse-transform, convolve, forward-transform. The direct route evaluates
the closed-form power kernel

    K(n; k_1..k_p) = (-1)^n n! (p-1)^(n-s) / (n-s)!,   s = k_1+...+k_p <= n,

and a literal multi-sum over shift indices serves as its independent oracle.
Everything is triangular: entry n of any product depends only on entries
0..n of the factors, so truncation at a common length is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import ArityZero, LengthMismatch
from .sequences import FourierSeq, LatticeSeq
from .series import mul_trunc
from .transforms import falling_factorial, forward_transform, inverse_transform, recip_factorial


@dataclass(frozen=True)
class StarKernelArgs:
    """Index bundle (n; k_1..k_p) for the arity-p power kernel."""

    n: int
    ks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        if self.n < 0 or any(k < 0 for k in self.ks):
            raise ValueError("kernel indices must be nonnegative")
        if not self.ks:
            raise ArityZero("kernel arity must be at least 1")

    @property
    def p(self) -> int:
        return len(self.ks)


def star_multiply(u: LatticeSeq, v: LatticeSeq) -> LatticeSeq:
    """Star product of two equal-length sequences, truncated to that length."""
    if len(u) != len(v):
        raise LengthMismatch(f"lengths {len(u)} and {len(v)} differ")
    L = u.last_index
    cu = inverse_transform(u).coeffs
    cv = inverse_transform(v).coeffs
    conv = mul_trunc(list(cu), list(cv), L)
    return forward_transform(FourierSeq(tuple(conv)))


def star_power(z: LatticeSeq, p: int, path: str = "convolution") -> LatticeSeq:
    """p-fold star power by either route; both give identical exact results.

    The convolution route costs O(p L^2) scalar operations, the kernel route
    O(L^(p+1)); the latter exists as a permanently-tested redundancy.
    """
    if p < 1:
        raise ArityZero("star power needs arity >= 1; the unit is the all-ones sequence")
    if path == "convolution":
        return _star_power_convolution(z, p)
    if path == "kernel":
        return _star_power_kernel(z, p)
    raise ValueError(f"unknown path {path!r}")


def _star_power_convolution(z: LatticeSeq, p: int) -> LatticeSeq:
    L = z.last_index
    zeta = list(inverse_transform(z).coeffs)
    acc = zeta
    for _ in range(p - 1):
        acc = mul_trunc(acc, zeta, L)
    return forward_transform(FourierSeq(tuple(acc)))


def _star_power_kernel(z: LatticeSeq, p: int) -> LatticeSeq:
    L = z.last_index
    scaled = [z[k] * recip_factorial(k) * (-1 if k % 2 else 1) for k in range(L + 1)]
    out = []
    for n in range(L + 1):
        total = Fraction(0)

        def rec(level: int, budget: int, prod: Fraction) -> None:
            nonlocal total
            if level == p:
                s = n - budget
                total += prod * (p - 1) ** budget * falling_factorial(n, s)
            else:
                for k in range(budget + 1):
                    if scaled[k]:
                        rec(level + 1, budget - k, prod * scaled[k])

        rec(0, n, Fraction(1))
        out.append(total if n % 2 == 0 else -total)
    return LatticeSeq(tuple(out))


def star_kernel_closed(args: StarKernelArgs) -> Fraction:
    """Closed form of the power kernel; zero when n < sum(ks), with 0^0 = 1."""
    s = sum(args.ks)
    if args.n < s:
        return Fraction(0)
    sign = -1 if args.n % 2 else 1
    return Fraction(sign * factorial(args.n) * (args.p - 1) ** (args.n - s), factorial(args.n - s))


def star_kernel_bruteforce(args: StarKernelArgs) -> Fraction:
    """Literal multi-sum over shift indices l_1..l_p in [0, n]^p.

    Terms with l_i < k_i or sum(l) > n vanish through the reciprocal-factorial
    and falling-factorial conventions; zero factors prune the recursion, which
    skips exactly the vanishing terms. Intended for small instances.
    """
    n = args.n
    total = Fraction(0)

    def rec(level: int, lsum: int, prod: Fraction) -> None:
        nonlocal total
        if lsum > n:
            return  # falling_factorial(n, lsum) = 0 for every completion
        if level == args.p:
            term = prod * falling_factorial(n, lsum)
            total += term if lsum % 2 == 0 else -term
            return
        k = args.ks[level]
        for l in range(n + 1):
            f = recip_factorial(l - k)
            if f:
                rec(level + 1, lsum + l, prod * f)

    rec(0, 0, Fraction(1))
    return total


def monomial_kernel(k: int, j: int, m: int, n: int) -> Fraction:
    """Weight of w_j in the lattice image of t^m * w: nonzero only for j <= k - m."""
    f = recip_factorial(j) * recip_factorial(k - m - j)
    if f == 0:
        return Fraction(0)
    sign = -1 if (k - j - m) % 2 else 1
    return sign * f * falling_factorial(n, k)


def monomial_star(m: int, w: LatticeSeq, form: str = "shift") -> LatticeSeq:
    """Lattice image of t^m * w.

    Two equivalent formulas: the shift form (n)_m * w_{n-m} (zero for n < m)
    and the kernel form sum_{k<=n} sum_j K(k,j,m,n) w_j. The shift form is the
    cheap derived simplification; the kernel form is kept as its cross-check.
    """
    if m < 0:
        raise ValueError("monomial power must be nonnegative")
    L = w.last_index
    if form == "shift":
        values = [
            falling_factorial(n, m) * w[n - m] if n >= m else Fraction(0) for n in range(L + 1)
        ]
        return LatticeSeq(tuple(values))
    if form == "kernel":
        values = []
        for n in range(L + 1):
            acc = Fraction(0)
            for k in range(m, n + 1):
                for j in range(k - m + 1):
                    if w[j]:
                        acc += monomial_kernel(k, j, m, n) * w[j]
            values.append(acc)
        return LatticeSeq(tuple(values))
    raise ValueError(f"unknown form {form!r}")


def unit_sequence(length: int) -> LatticeSeq:
    """The star identity: the all-ones sequence (the basis element p_0)."""
    if length < 1:
        raise ValueError("length must be positive")
    return LatticeSeq((Fraction(1),) * length)
