"""Normalized Eisenstein series and the products P_{r,s}.

``eisenstein_series(k, N)`` returns G_k / pi^k as a single-grade series at
grade k/2:

    G_k / pi^k = 2 zeta(k)/pi^k * (1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n)

For k = 2 this expansion is taken as the definition.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import bernoulli, sigma_power, zeta_ratio
from .qseries import GradedQSeries, QSeries

__all__ = [
    "EisensteinId",
    "eisenstein_series",
    "derivative",
    "p_series",
]


class EisensteinId(int):
    """An even weight k >= 2."""

    def __new__(cls, weight: int):
        if weight < 2 or weight % 2:
            raise ValueError(f"Eisenstein weight must be even and >= 2, got {weight}")
        return super().__new__(cls, weight)


@lru_cache(maxsize=None)
def _normalized_qseries(k: int, precision: int) -> QSeries:
    const = 2 * zeta_ratio(k)
    scale = const * Fraction(-2 * k) / bernoulli(k)
    coeffs = [const]
    coeffs.extend(scale * sigma_power(k - 1, n) for n in range(1, precision))
    return QSeries(coeffs)


def eisenstein_series(k: int, precision: int) -> GradedQSeries:
    """G_k / pi^k truncated to ``precision`` coefficients, stored at grade k/2."""
    EisensteinId(k)
    if precision < 1:
        raise ValueError(f"precision must be positive, got {precision}")
    return GradedQSeries.single(k // 2, _normalized_qseries(k, precision), weight_tag=k)


def derivative(x: GradedQSeries) -> GradedQSeries:
    """The derivative entering P_{2,s}, on normalized graded series.

    It is 2*pi*i d/dtau, which equals (2*pi*i)^2 q d/dq = -4 Pi q d/dq. This
    is the normalization under which G_2 G_s + G_s'/s is a modular form and
    every instance of the three-sum relation family vanishes.
    """
    return -4 * x.qderiv().shift_grade(1)


def p_series(r: int, s: int, precision: int) -> GradedQSeries:
    """P_{r,s} = G_r G_s + [r=2] G_s'/s + [s=2] G_r'/r, zero if r or s is odd."""
    if r < 1 or s < 1:
        raise ValueError(f"p_series needs r, s >= 1, got {(r, s)}")
    if r % 2 or s % 2:
        return GradedQSeries.zero(precision, weight_tag=r + s)
    out = eisenstein_series(r, precision) * eisenstein_series(s, precision)
    if r == 2:
        out = out + derivative(eisenstein_series(s, precision)) * Fraction(1, s)
    if s == 2:
        out = out + derivative(eisenstein_series(r, precision)) * Fraction(1, r)
    out.weight_tag = r + s
    return out
