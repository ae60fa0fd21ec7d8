"""Exact integer evaluation of the reliability formulas.

Everything here is a pure function of its integer arguments: densest-subset
degree sums for hypercubes and K4-hypercube members, the isoperimetric optimum
xi_m, the h-extra edge-connectivity lambda_h (both the defining suffix minimum
and the piecewise closed form), the concentration intervals where lambda_h is
constant, the four conditional edge-connectivities, and the cyclic
edge-connectivity.  All arithmetic is exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache


@dataclass(frozen=True)
class BinaryDecomposition:
    """m written as a sum of distinct powers of two, exponents descending."""

    m: int
    exponents: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.exponents) - 1


@dataclass(frozen=True)
class ConcentrationInterval:
    """A range [lower, upper] of h over which lambda_h is the constant `value`."""

    t: int
    length: int
    lower: int
    upper: int
    value: int


@dataclass(frozen=True)
class IsoperimetricProfile:
    """Per-m tables for a fixed n.  Index 0 of xi and lam is an unused placeholder."""

    n: int
    ex: tuple[int, ...]  # index 0 .. 2**n
    xi: tuple[int, ...]  # index 1 .. 2**(n-1)
    lam: tuple[int, ...]  # index 1 .. 2**(n-1)


class FaultPattern(Enum):
    SUPER_DEGREE = 1  # every surviving vertex keeps degree >= l
    AVERAGE_DEGREE = 2  # each component has average degree >= l
    EXTRA_SIZE = 3  # each component has at least 2**l vertices
    EMBEDDED = 4  # every vertex lies in an intact l-dimensional sub-member
    CYCLIC = 5  # each component contains a cycle


def gamma(n: int) -> int:
    """Parity indicator: 0 for even n, 1 for odd n."""
    return n & 1


def decompose(m: int) -> BinaryDecomposition:
    """Greedy descending binary expansion of a positive integer."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    exponents = []
    rest = m
    while rest:
        t = rest.bit_length() - 1
        exponents.append(t)
        rest -= 1 << t
    return BinaryDecomposition(m=m, exponents=tuple(exponents))


def ex_qn(m: int, n: int) -> int:
    """Densest m-subset degree sum in the hypercube (independent of n)."""
    if not 0 <= m <= (1 << n):
        raise ValueError(f"m must be in [0, {1 << n}], got {m}")
    if m == 0:
        return 0
    d = decompose(m)
    return sum(t << t for t in d.exponents) + sum(
        2 * i * (1 << t) for i, t in enumerate(d.exponents)
    )


def xi_qn(m: int, n: int) -> int:
    """Isoperimetric optimum of the hypercube: n*m - ex_m."""
    if not 1 <= m <= (1 << (n - 1)):
        raise ValueError(f"m must be in [1, {1 << (n - 1)}], got {m}")
    return n * m - ex_qn(m, n)


def f_value(m: int) -> int:
    """Densest m-subset degree sum in any K4-hypercube member; always even."""
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    if m == 0:
        return 0
    d = decompose(m)
    p, q = divmod(m, 4)
    base = sum(t << t for t in d.exponents) + sum(
        2 * i * (1 << t) for i, t in enumerate(d.exponents)
    )
    return base + 4 * p + (2 if q == 3 else 0)


def ex_h4(m: int, n: int) -> int:
    """Densest m-subset degree sum in an n-dimensional member: f(m)."""
    if not 0 <= m <= (1 << n):
        raise ValueError(f"m must be in [0, {1 << n}], got {m}")
    return f_value(m)


def xi_h4(m: int, n: int) -> int:
    """Isoperimetric optimum of an n-dimensional member: (n+1)*m - f(m)."""
    if not 1 <= m <= (1 << n) - 1:
        raise ValueError(f"m must be in [1, {(1 << n) - 1}], got {m}")
    return (n + 1) * m - f_value(m)


def _f_steps(limit: int):
    """Yield f(0), f(1), ..., f(limit) using the first-difference recurrence."""
    value = 0
    yield value
    for m in range(limit):
        value += 2 * m.bit_count() + (2 if m % 4 in (2, 3) else 0)
        yield value


@lru_cache(maxsize=8)
def _xi_suffix_min(n: int) -> tuple[int, ...]:
    """suffix[h] = min of xi over m in [h, 2**(n-1)]; index 0 unused."""
    half = 1 << (n - 1)
    xi = [0] * (half + 1)
    for m, f in enumerate(_f_steps(half)):
        if m:
            xi[m] = (n + 1) * m - f
    suffix = [0] * (half + 1)
    best = xi[half]
    for h in range(half, 0, -1):
        best = min(best, xi[h])
        suffix[h] = best
    return tuple(suffix)


def lambda_scan(h: int, n: int) -> int:
    """h-extra edge-connectivity by its defining minimum over the xi table."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if not 1 <= h <= (1 << (n - 1)):
        raise ValueError(f"h must be in [1, {1 << (n - 1)}], got {h}")
    return _xi_suffix_min(n)[h]


def g_interval_length(t: int, n: int) -> int:
    """Length of the t-th concentration interval: ceil(2**(2t+2+gamma) / 3)."""
    if not 0 <= t <= n // 2 - 1:
        raise ValueError(f"t must be in [0, {n // 2 - 1}], got {t}")
    power = 1 << (2 * t + 2 + gamma(n))
    return -(-power // 3)


def m_td(t: int, d: int, n: int) -> int:
    """The interval-subdivision points m_{t,d}; m_{t,t+1} is the lower endpoint."""
    if not 0 <= t <= n // 2 - 1:
        raise ValueError(f"t must be in [0, {n // 2 - 1}], got {t}")
    if not 0 <= d <= t + 1:
        raise ValueError(f"d must be in [0, {t + 1}], got {d}")
    value = 1 << (-(-n // 2) + t)
    value -= sum(1 << (2 * t - 2 * i + gamma(n)) for i in range(d))
    if d == t + 1:
        value -= 1
    return value


@lru_cache(maxsize=64)
def _intervals(n: int) -> tuple[ConcentrationInterval, ...]:
    out = []
    ceil_half = -(-n // 2)
    for t in range(n // 2):
        g = g_interval_length(t, n)
        upper = 1 << (ceil_half + t)
        out.append(
            ConcentrationInterval(
                t=t,
                length=g,
                lower=upper - g,
                upper=upper,
                value=(n // 2 - t) << (ceil_half + t),
            )
        )
    return tuple(out)


def concentration_intervals(n: int) -> list[ConcentrationInterval]:
    """One interval per t = 0 .. floor(n/2)-1, with its constant lambda value."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return list(_intervals(n))


def lambda_fast(h: int, n: int) -> int:
    """h-extra edge-connectivity via the piecewise closed form.

    Monotone range: lambda_h = xi_h.  Concentration intervals: the constant
    (floor(n/2)-t) * 2**(ceil(n/2)+t).  Tail h >= floor(2**(n-1)/3): 2**(n-1).
    The few h outside all three regimes fall back to the defining scan.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    half = 1 << (n - 1)
    if not 1 <= h <= half:
        raise ValueError(f"h must be in [1, {half}], got {h}")
    if h <= (1 << -(-n // 2)) - 2 - gamma(n):
        return xi_h4(h, n)
    for interval in _intervals(n):
        if interval.lower <= h <= interval.upper:
            return interval.value
    if h >= half // 3:
        return half
    return lambda_scan(h, n)


def conditional_lambda(pattern: FaultPattern, l: int, n: int) -> int:
    """Common value of the four non-cyclic conditional edge-connectivities."""
    if pattern is FaultPattern.CYCLIC:
        raise ValueError("use cyclic_lambda for the cyclic pattern")
    if 2 <= l <= n - 1:
        return (n - l) << l
    if l in (0, 1) and pattern is not FaultPattern.EMBEDDED:
        return (n + 1 - l) << l
    raise ValueError(f"l={l} out of range for pattern {pattern.name} at n={n}")


def cyclic_lambda(n: int) -> int:
    """Cyclic edge-connectivity: 4n-8 for n in {3, 4}, otherwise 3n-3."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    return 4 * n - 8 if n in (3, 4) else 3 * n - 3


def full_profile(n: int) -> IsoperimetricProfile:
    """Materialized ex / xi / lambda tables for one dimension."""
    if not 3 <= n <= 24:
        raise ValueError(f"n must be in [3, 24], got {n}")
    size = 1 << n
    half = size // 2
    ex = tuple(_f_steps(size))
    xi = [0] * (half + 1)
    for m in range(1, half + 1):
        xi[m] = (n + 1) * m - ex[m]
    lam = [0] * (half + 1)
    best = xi[half]
    for h in range(half, 0, -1):
        best = min(best, xi[h])
        lam[h] = best
    return IsoperimetricProfile(n=n, ex=ex, xi=tuple(xi), lam=tuple(lam))
