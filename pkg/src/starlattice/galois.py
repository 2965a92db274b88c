"""Fundamental systems for constant-coefficient equations on both sides.

For a monic operator T with rational constants, the solution t^j e^(lt) of
the differential form maps to the lattice generator z_n = (n)_j (1+l)^(n-j),
which satisfies the difference form T[Delta] z = 0 with the same
coefficients. Roots are kept exact whenever possible (rational roots by the
rational root theorem, conjugate pairs as quadratic surds); factors of
degree >= 3 without rational roots fall back to certified float roots.

The modified Wronskian is the determinant of iterated forward differences
of the solution set; a nonzero value certifies a fundamental system, and an
exactly-zero value raises ``SingularSystem``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .errors import SingularSystem
from .rational import as_rational, format_rational
from .series import poly_deflate, poly_derivative, poly_divmod, poly_eval, poly_gcd, poly_trim
from .transforms import falling_factorial

FLOAT_ROOT_RESIDUAL_BOUND = 1e-12
FLOAT_SOLUTION_RESIDUAL_BOUND = 1e-9
_FLOAT_ZERO = 1e-12


@dataclass(frozen=True)
class QuadExt:
    """Element a + b*sqrt(d) of a quadratic extension of the rationals."""

    a: Fraction
    b: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        object.__setattr__(self, "d", as_rational(self.d))

    def __add__(self, other):
        o = _lift(other, self.d)
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-_lift(other, self.d))

    def __rsub__(self, other):
        return _lift(other, self.d) - self

    def __mul__(self, other):
        o = _lift(other, self.d)
        return QuadExt(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift(other, self.d)
        norm = o.a * o.a - o.b * o.b * o.d
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        conj = QuadExt(o.a / norm, -o.b / norm, self.d)
        return self * conj

    def __rtruediv__(self, other):
        return _lift(other, self.d) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return 1 / (self**-exponent)
        result = QuadExt(Fraction(1), Fraction(0), self.d)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __complex__(self) -> complex:
        return complex(self.a) + complex(self.b) * cmath.sqrt(complex(self.d))

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        sign = "-" if self.b < 0 else "+"
        return (
            f"{format_rational(self.a)}{sign}"
            f"{format_rational(abs(self.b))}*sqrt({format_rational(self.d)})"
        )


def _lift(value, d: Fraction) -> QuadExt:
    if isinstance(value, QuadExt):
        if value.d != d and value.b != 0:
            raise ValueError(f"mixed extensions sqrt({value.d}) and sqrt({d})")
        return QuadExt(value.a, value.b, d)
    return QuadExt(as_rational(value), Fraction(0), d)


Scalar = Fraction | QuadExt | complex


@dataclass(frozen=True)
class ConstLinearEq:
    """Monic operator of order N with constant coefficients a_0..a_{N-1}."""

    a: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(as_rational(v) for v in self.a))
        if not self.a:
            raise ValueError("order must be at least 1")

    @property
    def order(self) -> int:
        return len(self.a)

    def char_poly(self) -> list[Fraction]:
        return [*self.a, Fraction(1)]


@dataclass(frozen=True)
class RootDatum:
    value: Scalar
    multiplicity: int
    exact: bool
    residual: float = 0.0  # |charpoly(value)| for float roots, 0 for exact ones


@dataclass(frozen=True)
class FundamentalSystem:
    """Materialized solution set; one column per generator."""

    solutions: tuple[tuple[Scalar, ...], ...]
    generators: tuple[tuple[Scalar, int], ...] = ()  # (root, power j) when known

    def __post_init__(self) -> None:
        lengths = {len(s) for s in self.solutions}
        if len(lengths) != 1:
            raise ValueError("all solutions must share one length")

    @property
    def size(self) -> int:
        return len(self.solutions)

    @property
    def length(self) -> int:
        return len(self.solutions[0])


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    pn, pd = isqrt(x.numerator), isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.add(i)
            out.add(n // i)
        i += 1
    return sorted(out)


def _rational_roots(poly: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """All rational roots (with repetition) plus the deflated cofactor."""
    poly = poly_trim(poly)
    roots: list[Fraction] = []
    while len(poly) > 1 and poly[0] == 0:
        roots.append(Fraction(0))
        poly = poly[1:]
    if len(poly) <= 1:
        return roots, poly
    denominator = lcm(*(c.denominator for c in poly))
    ints = [int(c * denominator) for c in poly]
    candidates = [
        Fraction(sp * p, q)
        for p in _divisors(ints[0])
        for q in _divisors(ints[-1])
        for sp in (1, -1)
    ]
    for cand in dict.fromkeys(candidates):
        while len(poly) > 1 and poly_eval(poly, cand) == 0:
            roots.append(cand)
            poly = poly_deflate(poly, cand)
    return roots, poly


def _squarefree_factors(poly: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun decomposition: pairs (squarefree factor, multiplicity)."""
    out = []
    a = poly_trim(poly)
    g = poly_gcd(a, poly_derivative(a))
    if len(g) <= 1:
        return [(a, 1)]
    w, _ = poly_divmod(a, g)
    mult = 1
    while len(w) > 1:
        y = poly_gcd(w, g)
        factor, _ = poly_divmod(w, y)
        if len(factor) > 1:
            out.append((factor, mult))
        w = y
        g, _ = poly_divmod(g, y)
        mult += 1
    if len(g) > 1:
        # remaining part is a perfect power beyond the loop; recurse
        for sub, m in _squarefree_factors(g):
            out.append((sub, m * mult))
    return out


def char_roots(eq: ConstLinearEq) -> list[RootDatum]:
    """Exact roots where possible, certified float roots otherwise."""
    out: list[RootDatum] = []
    for factor, mult in _squarefree_factors(eq.char_poly()):
        rational, rest = _rational_roots(factor)
        for r in rational:
            out.append(RootDatum(r, mult, exact=True))
        deg = len(rest) - 1
        if deg <= 0:
            continue
        if deg == 2:
            c0, c1, c2 = rest
            beta, gamma = c1 / c2, c0 / c2
            disc = beta * beta - 4 * gamma
            s = _rational_sqrt(disc)
            if s is not None:
                for r in ((-beta + s) / 2, (-beta - s) / 2):
                    out.append(RootDatum(r, mult, exact=True))
            else:
                half_b = Fraction(1, 2)
                for sign in (half_b, -half_b):
                    out.append(RootDatum(QuadExt(-beta / 2, sign, disc), mult, exact=True))
            continue
        monic = [c / rest[-1] for c in rest]
        import numpy as np

        approx = np.roots([float(c) for c in reversed(monic)])
        for r in approx:
            value = complex(r)
            residual = abs(_eval_scalar_poly(monic, value))
            if residual >= FLOAT_ROOT_RESIDUAL_BOUND:
                raise ArithmeticError(
                    f"float root {value} fails certification: residual {residual:.3e}"
                )
            out.append(RootDatum(value, mult, exact=False, residual=residual))
    out.sort(key=_root_sort_key)
    return out


def _eval_scalar_poly(poly, x):
    acc = 0 * x
    for c in reversed(poly):
        acc = acc * x + (complex(c) if isinstance(x, complex) else c)
    return acc


def _root_sort_key(r: RootDatum):
    v = r.value
    if isinstance(v, Fraction):
        return (0, float(v), 0.0)
    if isinstance(v, QuadExt):
        c = complex(v)
        return (1, c.real, c.imag)
    return (2, v.real, v.imag)


def map_solution(root: RootDatum, j: int, L: int) -> tuple[Scalar, ...]:
    """Lattice generator (n)_j (1+root)^(n-j) for n = 0..L; zero below n = j."""
    if not 0 <= j < root.multiplicity:
        raise ValueError(f"power j={j} must lie below the multiplicity {root.multiplicity}")
    one_plus = 1 + root.value
    values: list[Scalar] = []
    for n in range(L + 1):
        if n < j:
            values.append(Fraction(0))
        else:
            values.append(falling_factorial(n, j) * one_plus ** (n - j))
    return tuple(values)


def build_fundamental_system(eq: ConstLinearEq, L: int) -> FundamentalSystem:
    roots = char_roots(eq)
    solutions = []
    generators = []
    for root in roots:
        for j in range(root.multiplicity):
            solutions.append(map_solution(root, j, L))
            generators.append((root.value, j))
    return FundamentalSystem(tuple(solutions), tuple(generators))


def system_from_sequences(seqs) -> FundamentalSystem:
    """Wrap explicit solution sequences (e.g. images of real Taylor series)."""
    return FundamentalSystem(tuple(tuple(as_rational(v) for v in s) for s in seqs))


def iterated_differences(values, order: int) -> list:
    out = list(values)
    for _ in range(order):
        out = [out[i + 1] - out[i] for i in range(len(out) - 1)]
    return out


def apply_operator(eq: ConstLinearEq, values, n: int):
    """T[Delta] z at index n: Delta^N z_n + sum a_i Delta^i z_n."""
    N = eq.order
    if n + N > len(values) - 1:
        raise IndexError(f"operator at n={n} needs index {n + N}")
    tables = [list(values)]
    for _ in range(N):
        prev = tables[-1]
        tables.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    acc = tables[N][n]
    for i, a_i in enumerate(eq.a):
        if a_i:
            acc = acc + a_i * tables[i][n]
    return acc


def _is_zero_scalar(x) -> bool:
    if isinstance(x, Fraction):
        return x == 0
    if isinstance(x, QuadExt):
        return x.is_zero
    return abs(x) < _FLOAT_ZERO


def _det(rows: list[list]) -> Scalar:
    """Gaussian elimination with exact division; entries may be any one field."""
    n = len(rows)
    mat = [list(r) for r in rows]
    det: Scalar = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if not _is_zero_scalar(mat[r][col])), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            det = det * Fraction(-1)
        det = det * mat[col][col]
        pivot_row = mat[col]
        for r in range(col + 1, n):
            if _is_zero_scalar(mat[r][col]):
                continue
            factor = mat[r][col] / pivot_row[col]
            mat[r] = [mat[r][c] - factor * pivot_row[c] for c in range(n)]
    return det


def _promote_matrix(rows: list[list]) -> list[list]:
    """Lift to a common field: rationals, one quadratic extension, or complex."""
    ds = {e.d for row in rows for e in row if isinstance(e, QuadExt)}
    has_complex = any(isinstance(e, complex) for row in rows for e in row)
    if has_complex or len(ds) > 1:
        return [[complex(e) if not isinstance(e, complex) else e for e in row] for row in rows]
    if len(ds) == 1:
        d = ds.pop()
        return [[_lift(e, d) for e in row] for row in rows]
    return rows


def modified_wronskian(sys: FundamentalSystem, n0: int = 0) -> Scalar:
    """Determinant of [Delta^i z^(j)] at base index n0; zero raises SingularSystem."""
    N = sys.size
    if sys.length - 1 < n0 + N - 1:
        raise IndexError(f"need indices up to {n0 + N - 1}, solutions stored to {sys.length - 1}")
    rows = []
    for i in range(N):
        row = []
        for sol in sys.solutions:
            row.append(iterated_differences(sol, i)[n0])
        rows.append(row)
    det = _det(_promote_matrix(rows))
    if _is_zero_scalar(det):
        raise SingularSystem(f"modified Wronskian vanishes at n0={n0}")
    return det


@dataclass(frozen=True)
class FundamentalReport:
    order: int
    dimension: int
    roots: tuple[RootDatum, ...]
    all_exact: bool
    residuals_ok: bool
    max_float_residual: float
    wronskian: Scalar | None
    wronskian_nonzero: bool
    singular: bool = False

    @property
    def ok(self) -> bool:
        return self.residuals_ok and self.wronskian_nonzero


def verify_fundamental(eq: ConstLinearEq, L: int) -> FundamentalReport:
    """Build the mapped system and check the defining certificates.

    Exact solutions must satisfy the difference operator identically; float
    solutions must stay below FLOAT_SOLUTION_RESIDUAL_BOUND. The modified
    Wronskian at n0 = 0 must be nonzero.
    """
    roots = char_roots(eq)
    N = eq.order
    residuals_ok = True
    max_float = 0.0
    solutions = []
    generators = []
    for root in roots:
        for j in range(root.multiplicity):
            sol = map_solution(root, j, L)
            solutions.append(sol)
            generators.append((root.value, j))
            for n in range(L - N + 1):
                value = apply_operator(eq, sol, n)
                if root.exact:
                    if not _is_zero_scalar(value):
                        residuals_ok = False
                else:
                    mag = abs(complex(value))
                    max_float = max(max_float, mag)
                    if mag >= FLOAT_SOLUTION_RESIDUAL_BOUND:
                        residuals_ok = False
    system = FundamentalSystem(tuple(solutions), tuple(generators))
    try:
        w = modified_wronskian(system, 0)
        nonzero = True
        singular = False
    except SingularSystem:
        w = None
        nonzero = False
        singular = True
    return FundamentalReport(
        order=N,
        dimension=sum(r.multiplicity for r in roots),
        roots=tuple(roots),
        all_exact=all(r.exact for r in roots),
        residuals_ok=residuals_ok,
        max_float_residual=max_float,
        wronskian=w,
        wronskian_nonzero=nonzero,
        singular=singular,
    )
