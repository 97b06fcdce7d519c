"""Truncated q-series over the rationals and their Pi-graded wrapper.

A :class:`QSeries` holds the coefficients of q^0 .. q^(N-1). A
:class:`GradedQSeries` is a polynomial in the formal symbol Pi (standing for
pi^2) whose coefficients are QSeries; an Eisenstein series G_k lives at grade
k/2 once its transcendental prefactor is pulled out. Identities are checked
grade by grade, so no irrational number ever enters the arithmetic.

Binary operations silently truncate to the smaller precision.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "QSeries",
    "GradedQSeries",
    "SeriesKindError",
    "qs_add",
    "qs_sub",
    "qs_mul",
    "qs_scale",
    "qs_qderiv",
    "qs_is_zero",
]


class SeriesKindError(TypeError):
    """Raised when a plain and a graded series are combined."""


def _common_denominator(coeffs: tuple[Fraction, ...]) -> int:
    d = 1
    for c in coeffs:
        d = math.lcm(d, c.denominator)
    return d


class QSeries:
    """Immutable truncated power series sum_{n<N} c_n q^n with rational c_n."""

    __slots__ = ("_coeffs", "_denom", "_ints")

    def __init__(self, coeffs: Iterable, precision: int | None = None):
        cs = tuple(Fraction(c) for c in coeffs)
        if precision is not None:
            if precision < 1:
                raise ValueError(f"precision must be positive, got {precision}")
            cs = cs[:precision] + (Fraction(0),) * max(0, precision - len(cs))
        if not cs:
            raise ValueError("a QSeries needs at least one coefficient")
        self._coeffs = cs
        self._denom: int | None = None
        self._ints: tuple[int, ...] | None = None

    @classmethod
    def zero(cls, precision: int) -> QSeries:
        return cls((), precision)

    @classmethod
    def _from_scaled(cls, ints: list[int], denom: int) -> QSeries:
        out = cls.__new__(cls)
        out._coeffs = tuple(Fraction(v, denom) for v in ints)
        out._denom = None
        out._ints = None
        return out

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def _scaled(self) -> tuple[tuple[int, ...], int]:
        # integer numerators over one common denominator, cached
        if self._ints is None:
            d = _common_denominator(self._coeffs)
            self._denom = d
            self._ints = tuple(c.numerator * (d // c.denominator) for c in self._coeffs)
        return self._ints, self._denom

    def truncate(self, precision: int) -> QSeries:
        if precision >= self.precision:
            return self
        return QSeries(self._coeffs[:precision])

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self._coeffs[:4])
        tail = ", ..." if self.precision > 4 else ""
        return f"QSeries([{head}{tail}], precision={self.precision})"

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def __neg__(self) -> QSeries:
        return QSeries(-c for c in self._coeffs)

    def __add__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return QSeries(a + b for a, b in zip(self._coeffs[:n], other._coeffs[:n]))

    def __sub__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return QSeries(a - b for a, b in zip(self._coeffs[:n], other._coeffs[:n]))

    def __mul__(self, other: Union[QSeries, Fraction, int]) -> QSeries:
        if isinstance(other, QSeries):
            return self._cauchy(other)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QSeries(c * a for a in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def _cauchy(self, other: QSeries) -> QSeries:
        # Convolve integer numerators, divide once by the product of denominators.
        n = min(self.precision, other.precision)
        xs, dx = self._scaled()
        ys, dy = other._scaled()
        xs, ys = xs[:n], ys[:n]
        x_nz = [(i, v) for i, v in enumerate(xs) if v]
        y_nz = [(j, w) for j, w in enumerate(ys) if w]
        out = [0] * n
        for i, v in x_nz:
            lim = n - i
            for j, w in y_nz:
                if j >= lim:
                    break
                out[i + j] += v * w
        return QSeries._from_scaled(out, dx * dy)

    def qderiv(self) -> QSeries:
        """q d/dq, i.e. c_n -> n c_n."""
        return QSeries(n * c for n, c in enumerate(self._coeffs))


class GradedQSeries:
    """Finite sum of Pi^m * S_m with S_m a QSeries and Pi standing for pi^2.

    Zero components are dropped on construction. All components share one
    precision, which is kept even when the mapping is empty.
    """

    __slots__ = ("_components", "_precision", "weight_tag")

    def __init__(
        self,
        components: Mapping[int, QSeries],
        precision: int,
        weight_tag: int | None = None,
    ):
        if precision < 1:
            raise ValueError(f"precision must be positive, got {precision}")
        comps: dict[int, QSeries] = {}
        for grade, series in components.items():
            if grade < 0:
                raise ValueError(f"grades are nonnegative, got {grade}")
            if series.precision < precision:
                raise ValueError(
                    f"component at grade {grade} has precision {series.precision} < {precision}"
                )
            series = series.truncate(precision)
            if not series.is_zero():
                comps[grade] = series
        self._components = dict(sorted(comps.items()))
        self._precision = precision
        self.weight_tag = weight_tag

    @classmethod
    def zero(cls, precision: int, weight_tag: int | None = None) -> GradedQSeries:
        return cls({}, precision, weight_tag)

    @classmethod
    def single(cls, grade: int, series: QSeries, weight_tag: int | None = None) -> GradedQSeries:
        return cls({grade: series}, series.precision, weight_tag)

    @property
    def precision(self) -> int:
        return self._precision

    @property
    def components(self) -> dict[int, QSeries]:
        return dict(self._components)

    @property
    def grades(self) -> list[int]:
        return list(self._components)

    def __getitem__(self, grade: int) -> QSeries:
        return self._components.get(grade, QSeries.zero(self._precision))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedQSeries):
            return NotImplemented
        return self._precision == other._precision and self._components == other._components

    def __hash__(self) -> int:
        return hash((self._precision, tuple(self._components.items())))

    def __repr__(self) -> str:
        parts = ", ".join(f"{g}: {s!r}" for g, s in self._components.items())
        return f"GradedQSeries({{{parts}}}, precision={self._precision}, weight_tag={self.weight_tag})"

    def is_zero(self) -> bool:
        return not self._components

    def truncate(self, precision: int) -> GradedQSeries:
        if precision >= self._precision:
            return self
        return GradedQSeries(self._components, precision, self.weight_tag)

    def constant_terms(self) -> dict[int, Fraction]:
        """Coefficient of q^0 in every stored grade."""
        return {g: s[0] for g, s in self._components.items()}

    def _combine(self, other: GradedQSeries, sign: int) -> GradedQSeries:
        n = min(self._precision, other._precision)
        out = {g: s.truncate(n) for g, s in self._components.items()}
        for g, s in other._components.items():
            s = s.truncate(n) if sign > 0 else -s.truncate(n)
            out[g] = out[g] + s if g in out else s
        tag = self.weight_tag if self.weight_tag == other.weight_tag else None
        return GradedQSeries(out, n, tag)

    def __add__(self, other: GradedQSeries) -> GradedQSeries:
        if not isinstance(other, GradedQSeries):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: GradedQSeries) -> GradedQSeries:
        if not isinstance(other, GradedQSeries):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> GradedQSeries:
        return GradedQSeries({g: -s for g, s in self._components.items()}, self._precision, self.weight_tag)

    def __mul__(self, other: Union[GradedQSeries, Fraction, int]) -> GradedQSeries:
        if isinstance(other, GradedQSeries):
            n = min(self._precision, other._precision)
            out: dict[int, QSeries] = {}
            for ga, sa in self._components.items():
                for gb, sb in other._components.items():
                    prod = sa * sb
                    prod = prod.truncate(n)
                    g = ga + gb
                    out[g] = out[g] + prod if g in out else prod
            tag = None
            if self.weight_tag is not None and other.weight_tag is not None:
                tag = self.weight_tag + other.weight_tag
            return GradedQSeries(out, n, tag)
        if isinstance(other, (int, Fraction)):
            return GradedQSeries(
                {g: s * other for g, s in self._components.items()}, self._precision, self.weight_tag
            )
        return NotImplemented

    __rmul__ = __mul__

    def shift_grade(self, by: int) -> GradedQSeries:
        """Multiply by Pi^by."""
        return GradedQSeries(
            {g + by: s for g, s in self._components.items()}, self._precision, self.weight_tag
        )

    def qderiv(self) -> GradedQSeries:
        tag = None if self.weight_tag is None else self.weight_tag + 2
        return GradedQSeries(
            {g: s.qderiv() for g, s in self._components.items()}, self._precision, tag
        )


Series = Union[QSeries, GradedQSeries]


def _same_kind(x: Series, y: Series) -> None:
    if isinstance(x, GradedQSeries) != isinstance(y, GradedQSeries):
        raise SeriesKindError(
            f"cannot combine {type(x).__name__} with {type(y).__name__}"
        )


def qs_add(x: Series, y: Series) -> Series:
    _same_kind(x, y)
    return x + y


def qs_sub(x: Series, y: Series) -> Series:
    _same_kind(x, y)
    return x - y


def qs_mul(x: Series, y: Series) -> Series:
    _same_kind(x, y)
    return x * y


def qs_scale(c, x: Series) -> Series:
    return x * Fraction(c)


def qs_qderiv(x: Series) -> Series:
    """The operator q d/dq (coefficient c_n becomes n c_n), grade by grade."""
    return x.qderiv()


def qs_is_zero(x: Series) -> bool:
    return x.is_zero()
