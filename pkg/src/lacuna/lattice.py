"""Double-precision cross-check of the lattice sum against the q-expansion.

Both sides of

    sum_{(m,n) != 0} (m tau + n)^(-k)  =  pi^k * ghat_k(q),   q = exp(2 pi i tau)

are evaluated numerically with explicit truncation bounds. This is an oracle
for the exact modules, not a prover.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .eisenstein import eisenstein_series
from .exact import bernoulli, zeta_ratio

__all__ = [
    "UpperHalfPoint",
    "lattice_sum",
    "lattice_tail_bound",
    "qexp_eval",
    "qexp_tail_bound",
    "CompareReport",
    "UnreachableTolerance",
    "compare",
]

MAX_CUTOFF = 20_000
MAX_TERMS = 2_000


class UnreachableTolerance(RuntimeError):
    pass


@dataclass(frozen=True)
class UpperHalfPoint:
    real_part: float
    imag_part: float

    def __post_init__(self):
        if not self.imag_part > 0:
            raise ValueError(f"tau must lie in the upper half-plane, got Im={self.imag_part}")

    @property
    def tau(self) -> complex:
        return complex(self.real_part, self.imag_part)

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)

    @classmethod
    def parse(cls, text: str) -> UpperHalfPoint:
        re_, im_ = (float(x) for x in text.split(","))
        return cls(re_, im_)


def _as_point(tau) -> UpperHalfPoint:
    if isinstance(tau, UpperHalfPoint):
        return tau
    tau = complex(tau)
    return UpperHalfPoint(tau.real, tau.imag)


def _check_lattice_weight(k: int) -> None:
    if k < 4 or k % 2:
        raise ValueError(f"lattice_sum needs even k >= 4 (k=2 converges only conditionally), got {k}")


def lattice_sum(k: int, tau, cutoff: int) -> complex:
    """Partial sum over 0 < max(|m|, |n|) <= cutoff.

    Only m > 0 (all n) and m = 0, n > 0 are summed and the total doubled,
    since the summand is even in (m, n).
    """
    _check_lattice_weight(k)
    if cutoff < 1:
        raise ValueError(f"cutoff must be positive, got {cutoff}")
    t = _as_point(tau).tau
    ns = np.arange(-cutoff, cutoff + 1, dtype=np.float64)
    total = complex(np.sum(np.arange(1, cutoff + 1, dtype=np.float64) ** (-k)))
    # row sums in a fixed order keep the result reproducible
    rows = np.empty(cutoff, dtype=np.complex128)
    for m in range(1, cutoff + 1):
        rows[m - 1] = np.sum((m * t + ns) ** (-k))
    total += complex(np.sum(rows[::-1]))
    return 2 * total


def _shell_constant(t: complex) -> float:
    # min |x tau + y| over the boundary of the square max(|x|, |y|) = 1
    best = math.inf
    # sides x = +-1: distance from -tau (or tau) to the segment [-1, 1] of the real line
    dx = max(0.0, abs(t.real) - 1.0)
    best = min(best, math.hypot(dx, t.imag))
    # sides y = +-1: |x tau + 1| minimized over x in [-1, 1]
    denom = abs(t) ** 2
    for y in (1.0, -1.0):
        x = min(1.0, max(-1.0, -y * t.real / denom))
        best = min(best, abs(x * t + y))
    return best


def _shell_bound(k: int, t: complex, cutoff: int) -> float:
    # shell max(|m|,|n|) = R has 8R points, each with |m tau + n| >= c R
    c = _shell_constant(t)
    return 8.0 * c ** (-k) * cutoff ** (2 - k) / (k - 2)


def _line_integral(p: int) -> float:
    # int_R (1 + v^2)^(-p/2) dv
    return math.sqrt(math.pi) * math.gamma((p - 1) / 2) / math.gamma(p / 2)


def lattice_tail_bound(k: int, tau, cutoff: int) -> float:
    """Upper bound on the truncation error |G_k(tau) - lattice_sum(k, tau, cutoff)|.

    Floating-point rounding in lattice_sum is not included. The smaller of two bounds is returned.

    Shell bound: the shell max(|m|,|n|) = R has 8R points with
    |m tau + n| >= c R, giving 8 c^-k M^(2-k) / (k-2).

    Row bound (|Re tau| < 1): along a row m, f(u) = (m tau + u)^-k is summed
    at unit-spaced u, and each term differs from the integral of f over the
    surrounding unit interval by at most sup|f''|/24. The integrals are exact:
    the n-tails |n| > M of rows 1 <= |m| <= M integrate in closed form (their
    sum is taken as a complex number, which captures the cancellation between
    rows), and whole rows |m| > M integrate to 0. What is left is the m = 0
    row and the summed f'' remainders.
    """
    _check_lattice_weight(k)
    t = _as_point(tau).tau
    M = cutoff
    shell = _shell_bound(k, t, M)
    x, y = abs(t.real), t.imag
    if x >= 1:
        return shell
    d2 = k * (k + 1) / 24.0  # |f''| / 24 = d2 * |m tau + u|^-(k+2)
    p = k + 2
    zero_row = 2 * M ** (1 - k) / (k - 1)

    m = np.arange(1, M + 1, dtype=np.float64)
    mt = m * t
    edge = M + 0.5
    integrals = ((mt + edge) ** (1 - k) - (mt - edge) ** (1 - k)) / (k - 1)
    near_rows = 2 * abs(complex(np.sum(integrals)))

    a = m * y
    u0 = edge - m * x
    peak = (u0**2 + a**2) ** (-p / 2)
    rest = np.minimum(u0 ** (1 - p) / (p - 1), 0.5 * _line_integral(p) * a ** (1 - p))
    near_remainder = 2 * d2 * 2 * float(np.sum(peak + rest))

    # whole rows |m| > M: sum_n sup g <= 4 a^-p + 2 I a^(1-p), summed over m > M
    far_remainder = 2 * d2 * (
        4 * y ** (-p) * M ** (1 - p) / (p - 1)
        + _line_integral(p) * y ** (1 - p) * M ** (2 - p) / (p - 2)
    )
    return min(shell, zero_row + near_rows + near_remainder + far_remainder)


def _coefficient_scale(k: int) -> float:
    # |2 zeta(k)/pi^k * 2k/B_k| as a float
    return abs(float(2 * zeta_ratio(k) * 2 * k / bernoulli(k)))


def qexp_tail_bound(k: int, tau, precision: int) -> float:
    """Bound on the omitted terms n >= precision of pi^k * ghat_k(q).

    Uses sigma_{k-1}(n) <= zeta(k-1) n^(k-1) for k >= 4 and
    sigma_1(n) <= n (1 + log n) for k = 2, summed until the terms decay
    geometrically, then closed with a geometric remainder.
    """
    aq = abs(_as_point(tau).q)
    scale = math.pi**k * _coefficient_scale(k)
    zk = 1.0 if k == 2 else sum(d ** (1 - k) for d in range(1, 10_000)) + 1e-4

    def bound(n: int) -> float:
        if k == 2:
            return n * (1 + math.log(n)) * aq**n
        return zk * n ** (k - 1) * aq**n

    total = 0.0
    n = max(precision, 1)
    while True:
        term = bound(n)
        ratio = bound(n + 1) / term if term else 0.0
        if ratio < 1 and (ratio < 0.9 or n > 10 * k):
            total += term / (1 - ratio)
            break
        total += term
        n += 1
    return scale * total


def qexp_eval(k: int, tau, precision: int) -> complex:
    """Evaluate the truncated q-expansion of G_k at tau, with Pi -> pi^2."""
    q = _as_point(tau).q
    series = eisenstein_series(k, precision)
    value = 0j
    for grade, comp in series.components.items():
        acc = 0j
        for c in reversed(comp.coefficients):
            acc = acc * q + float(c)
        value += math.pi ** (2 * grade) * acc
    return value


def _smallest(ok, start: int, limit: int) -> int | None:
    # smallest n in [start, limit] with ok(n), assuming ok is monotone
    hi = start
    while not ok(hi):
        if hi >= limit:
            return None
        hi = min(2 * hi, limit)
    lo = max(start - 1, hi // 2)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class CompareReport:
    k: int
    tau: complex
    difference: float
    cutoff: int
    precision: int
    lattice_bound: float
    qexp_bound: float
    tolerance: float
    passed: bool


def compare(k: int, tau, target_tol: float) -> CompareReport:
    """Choose cutoff and precision so each side is within target_tol/4, then compare.

    Pass means |lattice - qexp| <= target_tol. Raises UnreachableTolerance
    when the required cutoff or precision exceeds the hard limits.
    """
    _check_lattice_weight(k)
    point = _as_point(tau)
    budget = target_tol / 4
    cutoff = _smallest(lambda M: lattice_tail_bound(k, point, M) <= budget, 4, MAX_CUTOFF)
    if cutoff is None:
        raise UnreachableTolerance(f"tolerance {target_tol} needs a lattice cutoff above {MAX_CUTOFF}")
    precision = _smallest(lambda N: qexp_tail_bound(k, point, N) <= budget, 1, MAX_TERMS)
    if precision is None:
        raise UnreachableTolerance(f"tolerance {target_tol} needs more than {MAX_TERMS} q-terms")
    lat = lattice_sum(k, point, cutoff)
    qv = qexp_eval(k, point, precision)
    diff = abs(lat - qv)
    return CompareReport(
        k=k,
        tau=point.tau,
        difference=diff,
        cutoff=cutoff,
        precision=precision,
        lattice_bound=lattice_tail_bound(k, point, cutoff),
        qexp_bound=qexp_tail_bound(k, point, precision),
        tolerance=target_tol,
        passed=diff <= target_tol,
    )
