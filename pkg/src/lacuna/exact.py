"""Exact integer and rational kernel.

Everything here returns Python ints or :class:`fractions.Fraction`; nothing
touches floating point.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = [
    "Rational",
    "binomial",
    "factorial",
    "bernoulli",
    "zeta_ratio",
    "sigma_power",
    "HagenRotheDomainError",
    "hagen_rothe_sum",
    "hagen_rothe_check",
    "b_sum",
    "romik_coefficient",
]

Rational = Fraction


class HagenRotheDomainError(ValueError):
    """Raised when a + b*j vanishes for some j in the summation range."""


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


# Even-index Bernoulli numbers B_0, B_2, B_4, ... grown on demand.
_BERNOULLI_EVEN: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def _extend_bernoulli(m_max: int) -> None:
    # sum_{j=0}^{n} C(n+1, j) B_j = 0 with n = 2m, B_1 = -1/2, odd B_j = 0 for j >= 3
    with _BERNOULLI_LOCK:
        table = _BERNOULLI_EVEN
        for m in range(len(table), m_max + 1):
            n = 2 * m
            s = Fraction(-(n + 1), 2)
            for j, b in enumerate(table):
                s += math.comb(n + 1, 2 * j) * b
            table.append(-s / (n + 1))


def bernoulli(k: int) -> Fraction:
    """Exact Bernoulli number B_k for even k >= 0."""
    if k < 0 or k % 2:
        raise ValueError(f"bernoulli is only defined here for even k >= 0, got {k}")
    m = k // 2
    if m >= len(_BERNOULLI_EVEN):
        _extend_bernoulli(m)
    return _BERNOULLI_EVEN[m]


def zeta_ratio(k: int) -> Fraction:
    """The rational number zeta(k) / pi^k for even k >= 2.

    Uses zeta(k)/pi^k = (-1)^(k/2+1) * 2^(k-1) * B_k / k!.
    """
    if k < 2 or k % 2:
        raise ValueError(f"zeta_ratio needs even k >= 2, got {k}")
    sign = -1 if (k // 2) % 2 == 0 else 1
    return sign * Fraction(2 ** (k - 1), math.factorial(k)) * bernoulli(k)


def sigma_power(m: int, n: int) -> int:
    """Divisor power sum sigma_m(n) by trial division up to sqrt(n)."""
    if n <= 0:
        raise ValueError(f"sigma_power needs n >= 1, got {n}")
    if m < 0:
        raise ValueError(f"sigma_power needs m >= 0, got {m}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            e = n // d
            total += d**m
            if e != d:
                total += e**m
        d += 1
    return total


def _poly_binomial(x: int, m: int) -> int:
    # x(x-1)...(x-m+1)/m!, valid for any integer x
    if x >= 0:
        return binomial(x, m)
    return (-1) ** m * math.comb(m - x - 1, m)


def hagen_rothe_sum(a: int, b: int, c: int, k: int) -> Fraction:
    """Left side of the Hagen-Rothe convolution

        sum_{j=0}^{k} a/(a+bj) * C(a+bj, j) * C(c-bj, k-j)

    evaluated exactly. The identity is polynomial in c, so C(c-bj, k-j) is the
    generalized binomial when c - bj < 0.
    """
    if b < 0 or c < 0 or k < 0:
        raise ValueError(f"need b, c, k >= 0; got {(a, b, c, k)}")
    total = Fraction(0)
    for j in range(k + 1):
        denom = a + b * j
        if denom == 0:
            raise HagenRotheDomainError(f"a + b*j vanishes at j={j}")
        right = _poly_binomial(c - b * j, k - j)
        total += Fraction(a, denom) * binomial(denom, j) * right
    return total


def hagen_rothe_check(a: int, b: int, c: int, k: int) -> bool:
    """Whether the Hagen-Rothe sum equals C(a+c, k)."""
    return hagen_rothe_sum(a, b, c, k) == binomial(a + c, k)


def b_sum(n: int) -> int:
    """B(n) = sum_{j=1}^{2n+1} C(2n+j-1, 2n) * C(4n-j+1, 2n), by direct summation."""
    if n < 1:
        raise ValueError(f"b_sum needs n >= 1, got {n}")
    # walk both binomials along j with exact ratio updates
    m = 2 * n
    left = 1  # C(2n + j - 1, 2n) at j = 1
    right = math.comb(4 * n, m)  # C(4n - j + 1, 2n) at j = 1
    total = 0
    for j in range(1, 2 * n + 2):
        total += left * right
        left = left * (m + j) // j
        top = 4 * n - j + 1
        right = right * (top - m) // top if top > m else 0
    return total


def romik_coefficient(n: int, k: int) -> Fraction:
    """Coefficient of G_{2n+2k} G_{4n-2k+2} in the lacunary recurrence for G_{6n+2}."""
    if n < 1:
        raise ValueError(f"romik_coefficient needs n >= 1, got {n}")
    if not 1 <= k <= n:
        raise ValueError(f"romik_coefficient needs 1 <= k <= n, got k={k}, n={n}")
    prefactor = Fraction(math.factorial(4 * n + 1), (6 * n + 1) * math.factorial(2 * n) ** 2)
    return prefactor * Fraction(binomial(2 * n, 2 * k - 1), binomial(6 * n, 2 * n + 2 * k - 1))
