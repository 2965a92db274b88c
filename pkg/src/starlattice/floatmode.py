"""Float evaluation paths, used only for benchmarking.

Verification stays exact elsewhere; nothing here feeds back into it. The
transforms are reorganized for float range: the inverse goes through the
difference table (no factorials at all) and the forward map evaluates the
binomial form by nested Horner factors, so smooth decaying inputs stay
inside double range even at lengths in the thousands.

The direct power route evaluates the closed kernel term-by-term over all
index tuples, exactly like its exact counterpart; per-tuple weights are
built as binomial chains to avoid bare factorials. Its cost is
O(L^(p+1))-ish by construction, which is the point of the benchmark.
"""

from __future__ import annotations

import time
from operator import mul


def lattice_to_newton(z: list[float]) -> list[float]:
    """Divided coefficients w_l = (Delta^l z)_0 via the difference table."""
    row = list(z)
    out = [row[0]]
    for _ in range(len(z) - 1):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        out.append(row[0])
    return out


def newton_to_lattice(w: list[float]) -> list[float]:
    """z_n = sum_l C(n,l) w_l, evaluated as nested products for range safety."""
    L = len(w) - 1
    out = []
    for n in range(L + 1):
        top = min(n, L)
        acc = 0.0
        for l in range(top, 0, -1):
            acc = (acc + w[l]) * (n - l + 1) / l
        out.append(acc + w[0])
    return out


def _convolve(a: list[float], b: list[float]) -> list[float]:
    L = len(a) - 1
    out = [0.0] * (L + 1)
    for i, ai in enumerate(a):
        if ai == 0.0:
            continue
        for j in range(L - i + 1):
            out[i + j] += ai * b[j]
    return out


def star_power_convolution(z: list[float], p: int) -> list[float]:
    """Transform, convolve p-1 times on scaled coefficients, transform back."""
    if p < 1:
        raise ValueError("arity must be at least 1")
    w = lattice_to_newton(z)
    # scale to series coefficients zeta_l = w_l / l!
    zeta = list(w)
    fact = 1.0
    for l in range(1, len(zeta)):
        fact *= l
        zeta[l] /= fact
    acc = zeta
    for _ in range(p - 1):
        acc = _convolve(acc, zeta)
    fact = 1.0
    for l in range(1, len(acc)):
        fact *= l
        acc[l] *= fact
    return newton_to_lattice(acc)


def star_power_kernel(z: list[float], p: int) -> list[float]:
    """Literal tuple sum over the closed kernel; slow by design."""
    if p < 1:
        raise ValueError("arity must be at least 1")
    L = len(z) - 1
    y = [(-z[k] if k % 2 else z[k]) for k in range(L + 1)]
    # binomial rows and last-level weights C(r, k) * (p-1)^(r-k)
    binom = [[0.0] * (L + 1) for _ in range(L + 1)]
    for r in range(L + 1):
        binom[r][0] = 1.0
        for k in range(1, r + 1):
            binom[r][k] = binom[r - 1][k - 1] + (binom[r - 1][k] if k <= r - 1 else 0.0)
    base = float(p - 1)
    weights = [[0.0] * (r + 1) for r in range(L + 1)]
    for r in range(L + 1):
        pw = 1.0
        for k in range(r, -1, -1):
            weights[r][k] = binom[r][k] * pw
            pw *= base
    out = []
    for n in range(L + 1):
        total = 0.0

        def rec(level: int, rem: int, chain: float) -> float:
            if level == p - 1:
                wrow = weights[rem]
                return chain * sum(map(mul, y[: rem + 1], wrow))
            crow = binom[rem]
            acc = 0.0
            for k in range(rem + 1):
                yk = y[k]
                if yk != 0.0:
                    acc += rec(level + 1, rem - k, chain * crow[k] * yk)
            return acc

        total = rec(0, n, 1.0)
        out.append(-total if n % 2 else total)
    return out


def geometric_lattice(ratio: float, length: int) -> list[float]:
    """Bounded benchmark input: lattice image of a decaying exponential."""
    out = [1.0]
    for _ in range(length - 1):
        out.append(out[-1] * ratio)
    return out


def bench_star_power(p: int = 3, sizes=(64, 256), kernel_cap: int = 512) -> list[dict]:
    """Time both routes per size; the kernel route is skipped above the cap."""
    rows = []
    for length in sizes:
        z = geometric_lattice(0.5, length + 1)
        t0 = time.perf_counter()
        star_power_convolution(z, p)
        conv_s = time.perf_counter() - t0
        kernel_s = None
        if length <= kernel_cap:
            t0 = time.perf_counter()
            star_power_kernel(z, p)
            kernel_s = time.perf_counter() - t0
        rows.append(
            {
                "length": length,
                "arity": p,
                "convolution_seconds": conv_s,
                "kernel_seconds": kernel_s,
                "kernel_slower": None if kernel_s is None else kernel_s > conv_s,
            }
        )
    return rows
