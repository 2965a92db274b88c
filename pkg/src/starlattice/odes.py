"""Nonlocal discrete analogs of ODEs with polynomial coefficients.

A linear equation sum_l a_l(t) z^(l) + c_0(t) = 0 maps to the lattice by
sending d/dt to the forward difference and each coefficient monomial
t^m * w to its star image (n)_m * w_{n-m}; the inhomogeneity maps termwise,
gamma_r t^r -> gamma_r (n)_r. A nonlinear equation z^(m) = sum_j a_j(t) z^j
additionally replaces powers by star powers. Lattice images of power-series
solutions of the continuous equation satisfy the resulting recurrences
exactly, which is what the residual evaluators check.

Forward stepping solves the recurrences for z_{n+N} (resp. z_{n+m}); for
linear equations this needs a_N(0) != 0, since every nonlocal term reaches
at most index n+N-1 while the local one contributes a_N(0) * z_{n+N}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import IndexOutOfRange, NotForwardSolvable, OrderTooLarge
from .rational import as_rational
from .sequences import LatticeSeq, TaylorCoeffs
from .series import mul_trunc
from .star import monomial_star, star_power
from .transforms import falling_factorial


@dataclass(frozen=True)
class PolyCoeff:
    """Sparse polynomial in t: monomials (power, coefficient), powers increasing."""

    monomials: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        cleaned = []
        last_power = -1
        for power, coeff in self.monomials:
            power = int(power)
            coeff = as_rational(coeff)
            if power < 0:
                raise ValueError("monomial powers must be nonnegative")
            if power <= last_power:
                raise ValueError("monomial powers must be strictly increasing")
            last_power = power
            if coeff != 0:
                cleaned.append((power, coeff))
        object.__setattr__(self, "monomials", tuple(cleaned))

    @classmethod
    def from_pairs(cls, pairs) -> "PolyCoeff":
        merged: dict[int, Fraction] = {}
        for power, coeff in pairs:
            merged[int(power)] = merged.get(int(power), Fraction(0)) + as_rational(coeff)
        return cls(tuple(sorted((p, c) for p, c in merged.items() if c != 0)))

    @classmethod
    def constant(cls, value) -> "PolyCoeff":
        v = as_rational(value)
        return cls(((0, v),) if v != 0 else ())

    @property
    def is_zero(self) -> bool:
        return not self.monomials

    @property
    def constant_term(self) -> Fraction:
        for power, coeff in self.monomials:
            if power == 0:
                return coeff
        return Fraction(0)

    def image_at(self, n: int) -> Fraction:
        """Termwise lattice image sum_r gamma_r (n)_r evaluated at n."""
        return sum((c * falling_factorial(n, p) for p, c in self.monomials), Fraction(0))

    def eval_at(self, t: Fraction) -> Fraction:
        t = as_rational(t)
        return sum((c * t**p for p, c in self.monomials), Fraction(0))


@dataclass(frozen=True)
class LinearOde:
    """sum_{l=0}^{N} a_l(t) z^(l) + c_0(t) = 0 with polynomial a_l, c_0."""

    coeffs: tuple[PolyCoeff, ...]  # a_0 .. a_N
    c0: PolyCoeff = PolyCoeff(())

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise ValueError("a linear equation needs order at least 1")
        if self.coeffs[-1].is_zero:
            raise ValueError("leading coefficient a_N must not vanish identically")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class NonlinearOde:
    """z^(m) = sum_{j=0}^{N} a_j(t) z^j with polynomial a_j."""

    m: int
    coeffs: tuple[PolyCoeff, ...]  # a_0 .. a_N

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("derivative order m must be positive")
        if len(self.coeffs) < 2:
            raise ValueError("degree must be at least 1")
        if self.coeffs[-1].is_zero:
            raise ValueError("leading coefficient a_N must not vanish identically")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def delta_power(z: LatticeSeq, l: int) -> LatticeSeq:
    """l-fold forward difference; entry n is sum_j (-1)^(l-j) C(l,j) z_{n+j}."""
    if l < 0:
        raise ValueError("difference order must be nonnegative")
    if l > z.last_index:
        raise OrderTooLarge(f"difference order {l} exceeds stored range 0..{z.last_index}")
    if l == 0:
        return z
    L = z.last_index
    values = []
    for n in range(L + 1 - l):
        acc = Fraction(0)
        for j in range(l + 1):
            term = comb(l, j) * z[n + j]
            acc += term if (l - j) % 2 == 0 else -term
        values.append(acc)
    return LatticeSeq(tuple(values))


def lin_residual(eq: LinearOde, z: LatticeSeq, n: int, form: str = "shift") -> Fraction:
    """Left-hand side of the discrete linear equation at index n.

    Exactly zero when z is the lattice image of a power-series solution.
    ``form`` selects the monomial-image evaluation route (shift or kernel).
    """
    N = eq.order
    if n < 0 or n + N > z.last_index:
        raise IndexOutOfRange(f"residual at n={n} needs index {n + N}, stored 0..{z.last_index}")
    acc = Fraction(0)
    for l, a_l in enumerate(eq.coeffs):
        if a_l.is_zero:
            continue
        dz = delta_power(z, l)
        for power, coeff in a_l.monomials:
            acc += coeff * monomial_star(power, dz, form)[n]
    return acc + eq.c0.image_at(n)


def lin_residuals(eq: LinearOde, z: LatticeSeq, form: str = "shift") -> list[Fraction]:
    """Residuals for every index with all needed entries stored."""
    return [lin_residual(eq, z, n, form) for n in range(z.last_index - eq.order + 1)]


def nonlin_residual(eq: NonlinearOde, z: LatticeSeq, n: int) -> Fraction:
    """(Delta^m z)_n minus the star image of the right-hand side at n."""
    if n < 0 or n + eq.m > z.last_index:
        raise IndexOutOfRange(f"residual at n={n} needs index {n + eq.m}, stored 0..{z.last_index}")
    acc = delta_power(z, eq.m)[n]
    for j in range(1, eq.degree + 1):
        a_j = eq.coeffs[j]
        if a_j.is_zero:
            continue
        zj = star_power(z, j)
        for power, coeff in a_j.monomials:
            acc -= coeff * monomial_star(power, zj)[n]
    return acc - eq.coeffs[0].image_at(n)


def nonlin_residuals(eq: NonlinearOde, z: LatticeSeq) -> list[Fraction]:
    return [nonlin_residual(eq, z, n) for n in range(z.last_index - eq.m + 1)]


def lin_step(eq: LinearOde, init, L: int) -> LatticeSeq:
    """Unique sequence with the given first N values and zero residual up to L-N.

    The recurrence isolates z_{n+N} with coefficient a_N(0), so that constant
    term must be nonzero.
    """
    N = eq.order
    lead = eq.coeffs[-1].constant_term
    if lead == 0:
        raise NotForwardSolvable("a_N(0) = 0: the recurrence does not determine z_{n+N}")
    values = [as_rational(v) for v in init]
    if len(values) != N:
        raise ValueError(f"need exactly {N} initial values, got {len(values)}")
    if L < N - 1:
        raise IndexOutOfRange(f"length L={L} shorter than the {N} initial values")
    for n in range(L - N + 1):
        trial = LatticeSeq(tuple(values) + (Fraction(0),))
        base = lin_residual(eq, trial, n)
        values.append(-base / lead)
    return LatticeSeq(tuple(values))


def nonlin_step(eq: NonlinearOde, init, L: int) -> LatticeSeq:
    """Forward-solve the nonlinear recurrence; z_{n+m} always has coefficient 1."""
    m = eq.m
    values = [as_rational(v) for v in init]
    if len(values) != m:
        raise ValueError(f"need exactly {m} initial values, got {len(values)}")
    if L < m - 1:
        raise IndexOutOfRange(f"length L={L} shorter than the {m} initial values")
    for n in range(L - m + 1):
        trial = LatticeSeq(tuple(values) + (Fraction(0),))
        base = nonlin_residual(eq, trial, n)
        values.append(-base)
    return LatticeSeq(tuple(values))


def local_stencil(eq: LinearOde) -> tuple[Fraction, ...] | None:
    """Coefficients of z_{n+N}..z_n when every a_l is constant, else None.

    For constant coefficients the discrete equation collapses to the local
    recurrence sum_l a_l Delta^l z_n = 0; the returned tuple is descending in
    the shift.
    """
    if any(p != 0 for a in eq.coeffs for p, _ in a.monomials):
        return None
    N = eq.order
    out = [Fraction(0)] * (N + 1)  # out[j] multiplies z_{n+j}
    for l, a_l in enumerate(eq.coeffs):
        c = a_l.constant_term
        if c == 0:
            continue
        for j in range(l + 1):
            term = c * comb(l, j)
            out[j] += term if (l - j) % 2 == 0 else -term
    return tuple(reversed(out))


def taylor_solution_linear(eq: LinearOde, init, L: int) -> TaylorCoeffs:
    """Power-series solution b_0..b_L of the continuous equation.

    Solves the coefficient recurrence in t-space from N initial Taylor
    coefficients; requires a_N(0) != 0 (ordinary point at the origin).
    """
    N = eq.order
    lead = eq.coeffs[-1].constant_term
    if lead == 0:
        raise NotForwardSolvable("a_N(0) = 0: origin is a singular point of the equation")
    b = [as_rational(v) for v in init]
    if len(b) != N:
        raise ValueError(f"need exactly {N} initial Taylor coefficients, got {len(b)}")
    for s in range(L - N + 1):
        acc = _poly_coefficient(eq.c0, s)
        for l, a_l in enumerate(eq.coeffs):
            for power, coeff in a_l.monomials:
                if l == N and power == 0:
                    continue  # the unknown slot
                k = s - power + l
                if s - power < 0:
                    continue
                acc += coeff * b[k] * falling_factorial(k, l)
        unknown_weight = lead * falling_factorial(s + N, N)
        b.append(-acc / unknown_weight)
    return TaylorCoeffs(tuple(b[: L + 1]))


def _poly_coefficient(poly: PolyCoeff, power: int) -> Fraction:
    for p, c in poly.monomials:
        if p == power:
            return c
    return Fraction(0)


def taylor_solution_nonlinear(eq: NonlinearOde, init, L: int) -> TaylorCoeffs:
    """Power-series solution of z^(m) = sum_j a_j(t) z^j from m initial coefficients."""
    m = eq.m
    b = [as_rational(v) for v in init]
    if len(b) != m:
        raise ValueError(f"need exactly {m} initial Taylor coefficients, got {len(b)}")
    for s in range(L - m + 1):
        rhs = _poly_coefficient(eq.coeffs[0], s)
        zpow = [Fraction(1)] + [Fraction(0)] * s  # z^0 truncated at degree s
        prefix = b[: s + 1]
        for j in range(1, eq.degree + 1):
            zpow = mul_trunc(zpow, prefix, s)
            a_j = eq.coeffs[j]
            if a_j.is_zero:
                continue
            for power, coeff in a_j.monomials:
                if power <= s:
                    rhs += coeff * zpow[s - power]
        b.append(rhs / falling_factorial(s + m, m))
    return TaylorCoeffs(tuple(b[: L + 1]))
