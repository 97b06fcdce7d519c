"""Linear relations among G_k and the products P_{i,j}.

A :class:`RelationVector` encodes

    g_coeff * G_k = sum_{i<=j} p_coeffs[(i, j)] * P_{i,j}

and :func:`evaluate_relation` returns LHS - RHS on normalized series, so a
true relation evaluates to the zero graded series.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .eisenstein import eisenstein_series, p_series
from .exact import b_sum, binomial, romik_coefficient, zeta_ratio
from .qseries import GradedQSeries

__all__ = [
    "RelationSpec",
    "RelationVector",
    "BernoulliIdentity",
    "SearchHit",
    "default_precision",
    "hst_relation_vector",
    "evaluate_relation",
    "verify_vector",
    "verify_hst",
    "hurwitz_vector",
    "romik_vector",
    "theorem_6n_vector",
    "theorem_6n4_vector",
    "hurwitz_residual",
    "romik_residual",
    "theorem_6n_residual",
    "theorem_6n4_residual",
    "corollary_vector",
    "lacunarity_search",
    "bernoulli_identity",
    "BUILTINS",
]


def default_precision(weight: int) -> int:
    return max(weight, 20)


@dataclass(frozen=True, order=True)
class RelationSpec:
    """Parameters (r, s, t) of one relation, of weight k = r + s + t - 1."""

    r: int
    s: int
    t: int

    def __post_init__(self):
        if min(self.r, self.s, self.t) < 1:
            raise ValueError(f"r, s, t must be >= 1, got {(self.r, self.s, self.t)}")
        if self.weight < 4:
            raise ValueError(f"need k = r+s+t-1 >= 4, got k={self.weight}")

    @property
    def weight(self) -> int:
        return self.r + self.s + self.t - 1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.s, self.t)


@dataclass(frozen=True)
class RelationVector:
    weight: int
    g_coeff: Fraction
    p_coeffs: Mapping[tuple[int, int], Fraction]
    source: RelationSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.p_coeffs.items():
            if i > j:
                i, j = j, i
            if i < 2 or i % 2 or j % 2 or i + j != self.weight:
                raise ValueError(f"invalid P-key {(i, j)} for weight {self.weight}")
            c = Fraction(c)
            if c:
                clean[(i, j)] = clean.get((i, j), Fraction(0)) + c
        clean = {key: c for key, c in sorted(clean.items()) if c}
        object.__setattr__(self, "p_coeffs", clean)
        object.__setattr__(self, "g_coeff", Fraction(self.g_coeff))

    @property
    def is_degenerate(self) -> bool:
        return self.g_coeff == 0 and not self.p_coeffs

    @property
    def sparsity(self) -> int:
        """Number of nonzero P-coefficients."""
        return len(self.p_coeffs)

    @property
    def eisenstein_support(self) -> set[int]:
        """Weights of the lower Eisenstein series occurring on the right."""
        return {w for key in self.p_coeffs for w in key}

    def scaled(self, c) -> RelationVector:
        c = Fraction(c)
        return RelationVector(
            self.weight, self.g_coeff * c, {k: v * c for k, v in self.p_coeffs.items()}, self.source
        )

    def integer_normalized(self) -> RelationVector:
        """Smallest integer multiple with a positive leading coefficient."""
        values = [self.g_coeff, *self.p_coeffs.values()]
        if not any(values):
            return self
        denom = math.lcm(*(v.denominator for v in values))
        ints = [int(v * denom) for v in values]
        g = math.gcd(*ints)
        lead = next(v for v in ints if v)
        if lead < 0:
            g = -g
        return self.scaled(Fraction(denom, g))

    def with_g_coeff(self, target) -> RelationVector:
        if self.g_coeff == 0:
            raise ValueError("cannot rescale a vector whose G_k coefficient is zero")
        return self.scaled(Fraction(target) / self.g_coeff)


@dataclass(frozen=True)
class BernoulliIdentity:
    weight: int
    residuals: dict[int, Fraction]
    bernoulli_form: str
    zeta_form: str

    @property
    def holds(self) -> bool:
        return not any(self.residuals.values())


# ---------------------------------------------------------------------------
# the three-sum family


def hst_relation_vector(spec: RelationSpec) -> RelationVector:
    """Collect the three binomial sums of the relation family for (r, s, t).

    A P-term with an odd index vanishes but its companion G_k term does not;
    those are folded into g_coeff. The returned vector has the orientation
    g_coeff * G_k = sum p * P.
    """
    if not isinstance(spec, RelationSpec):
        spec = RelationSpec(*spec)
    r, s, t = spec.as_tuple()
    k = spec.weight
    if k % 2:
        return RelationVector(k, Fraction(0), {}, spec)

    g_total = 0
    p_total: dict[tuple[int, int], int] = {}

    def term(coeff: int, a: int, b: int, companion: int) -> None:
        # coeff * (P_{a,b} - (-1)^companion G_k)
        nonlocal g_total
        if not coeff:
            return
        if a % 2 == 0 and b % 2 == 0:
            key = (min(a, b), max(a, b))
            p_total[key] = p_total.get(key, 0) + coeff
        g_total -= coeff * (-1) ** companion

    for x in range(1, k):
        y = k - x
        # i + j = k
        i, j = x, y
        term(binomial(i - 1, t - 1) * binomial(j - 1, s - 1) * (-1) ** (i + r), i, j, j)
        # j + h = k
        j, h = x, y
        term(binomial(j - 1, r - 1) * binomial(h - 1, t - 1) * (-1) ** (j + s), h, j, h)
        # h + i = k
        h, i = x, y
        term(binomial(h - 1, s - 1) * binomial(i - 1, r - 1) * (-1) ** (h + t), h, i, i)

    # 0 = g_total G_k + sum p_total P  <=>  g_total G_k = sum (-p_total) P
    return RelationVector(
        k, Fraction(g_total), {key: Fraction(-c) for key, c in p_total.items()}, spec
    )


def evaluate_relation(vec: RelationVector, precision: int | None = None) -> GradedQSeries:
    """g_coeff * G_k - sum p * P_{i,j} on normalized series (zero iff the relation holds)."""
    n = default_precision(vec.weight) if precision is None else precision
    k = vec.weight
    out = GradedQSeries.zero(n, weight_tag=k)
    if vec.g_coeff and k % 2 == 0 and k >= 2:
        out = out + eisenstein_series(k, n) * vec.g_coeff
    for (i, j), c in vec.p_coeffs.items():
        out = out - p_series(i, j, n) * c
    return out


def verify_vector(vec: RelationVector, precision: int | None = None) -> bool:
    return evaluate_relation(vec, precision).is_zero()


def verify_hst(spec: RelationSpec, precision: int | None = None) -> bool:
    return verify_vector(hst_relation_vector(spec), precision)


# ---------------------------------------------------------------------------
# named recurrences


def _products(weight: int, pairs) -> dict[tuple[int, int], Fraction]:
    acc: dict[tuple[int, int], Fraction] = {}
    for a, b, c in pairs:
        key = (min(a, b), max(a, b))
        acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
    return acc


def hurwitz_vector(n: int) -> RelationVector:
    """(n-3)(2n-1)(2n+1) G_{2n} = 3 sum_{p+q=n, p,q>=2} (2p-1)(2q-1) G_{2p} G_{2q}."""
    if n < 4:
        raise ValueError(f"the Hurwitz recurrence needs n >= 4 (n=3 is 0 = 0), got {n}")
    pairs = [
        (2 * p, 2 * (n - p), 3 * (2 * p - 1) * (2 * (n - p) - 1)) for p in range(2, n - 1)
    ]
    return RelationVector(2 * n, Fraction((n - 3) * (2 * n - 1) * (2 * n + 1)), _products(2 * n, pairs))


def romik_vector(n: int) -> RelationVector:
    """G_{6n+2} = sum_{k=1}^{n} romik_coefficient(n, k) G_{2n+2k} G_{4n-2k+2}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    pairs = [(2 * n + 2 * k, 4 * n - 2 * k + 2, romik_coefficient(n, k)) for k in range(1, n + 1)]
    return RelationVector(6 * n + 2, Fraction(1), _products(6 * n + 2, pairs))


def theorem_6n_vector(n: int) -> RelationVector:
    """Lacunary recurrence for G_{6n}, n >= 2."""
    if n < 2:
        raise ValueError(f"the G_6n recurrence is stated for n >= 2, got {n}")
    pairs = []
    for k in range(1, n + 1):
        left = binomial(2 * n + 2 * k - 1, 2 * n)
        c = left * binomial(4 * n - 2 * k - 1, 2 * n) + 2 * left * binomial(4 * n - 2 * k - 1, 2 * n - 2)
        pairs.append((2 * n + 2 * k, 4 * n - 2 * k, c))
    return RelationVector(6 * n, Fraction(binomial(6 * n + 1, 2 * n)), _products(6 * n, pairs))


def theorem_6n4_vector(n: int) -> RelationVector:
    """Lacunary recurrence for G_{6n+4}, n >= 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    pairs = []
    for k in range(1, n + 2):
        left = binomial(2 * n + 2 * k - 1, 2 * n)
        c = left * binomial(4 * n - 2 * k + 3, 2 * n) + 2 * left * binomial(4 * n - 2 * k + 3, 2 * n + 2)
        pairs.append((2 * n + 2 * k, 4 * n - 2 * k + 4, c))
    g = binomial(6 * n + 3, 2 * n + 2) + 2 * binomial(6 * n + 3, 2 * n)
    return RelationVector(6 * n + 4, Fraction(g), _products(6 * n + 4, pairs))


def _residual(builder: Callable[[int], RelationVector], n: int, precision: int | None) -> GradedQSeries:
    return evaluate_relation(builder(n), precision)


def hurwitz_residual(n: int, precision: int | None = None) -> GradedQSeries:
    return _residual(hurwitz_vector, n, precision)


def romik_residual(n: int, precision: int | None = None) -> GradedQSeries:
    return _residual(romik_vector, n, precision)


def theorem_6n_residual(n: int, precision: int | None = None) -> GradedQSeries:
    return _residual(theorem_6n_vector, n, precision)


def theorem_6n4_residual(n: int, precision: int | None = None) -> GradedQSeries:
    return _residual(theorem_6n4_vector, n, precision)


BUILTINS: dict[str, Callable[[int], RelationVector]] = {
    "hurwitz": hurwitz_vector,
    "romik": romik_vector,
    "g6n": theorem_6n_vector,
    "g6n4": theorem_6n4_vector,
}


def corollary_vector(n: int) -> RelationVector:
    """The (2n+1, 2n+1, 2n+1) instance scaled so that g_coeff = B(n)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = 2 * n + 1
    return hst_relation_vector(RelationSpec(m, m, m)).with_g_coeff(b_sum(n))


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class SearchHit:
    spec: RelationSpec
    vector: RelationVector
    sparsity: int


def lacunarity_search(k: int, max_results: int = 10) -> list[SearchHit]:
    """Sparsest relations giving G_k among all r <= s <= t with r + s + t = k + 1.

    Vectors that are empty or have no G_k term are skipped. Ordering: fewer
    nonzero P-coefficients first, then lexicographically larger (r, s, t).
    """
    if k % 2 or k < 4:
        raise ValueError(f"search needs an even weight >= 4, got {k}")
    hits = []
    for r in range(1, (k + 1) // 3 + 1):
        for s in range(r, (k + 1 - r) // 2 + 1):
            t = k + 1 - r - s
            spec = RelationSpec(r, s, t)
            vec = hst_relation_vector(spec)
            if vec.g_coeff == 0:
                continue
            hits.append(SearchHit(spec, vec, vec.sparsity))
    hits.sort(key=lambda h: (h.sparsity, tuple(-x for x in h.spec.as_tuple())))
    return hits[:max_results]


# ---------------------------------------------------------------------------
# constant terms


def _fmt_coeff(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    body = "" if mag == 1 else f"{mag}*"
    if first:
        return f"{sign}{body}"
    return f" {sign} {body}"


def bernoulli_identity(vec: RelationVector) -> BernoulliIdentity:
    """Constant-term identity among Bernoulli numbers implied by a relation.

    Residuals are read off ``evaluate_relation`` at precision 1, grade by
    grade. The rendered forms use the integer-normalized vector; the
    Bernoulli form is  g B_k/k! + sum p B_i B_j/(i! j!) = 0.
    """
    residual = evaluate_relation(vec, precision=1)
    norm = vec.integer_normalized()
    k = vec.weight

    bern_terms = []
    zeta_lhs = f"{norm.g_coeff}*zeta({k})"
    zeta_rhs = []
    if norm.g_coeff:
        bern_terms.append((norm.g_coeff, f"B_{k}/{k}!"))
    for (i, j), c in norm.p_coeffs.items():
        if i == j:
            bern_terms.append((c, f"B_{i}^2/({i}!)^2"))
            zeta_rhs.append((2 * c, f"zeta({i})^2"))
        else:
            bern_terms.append((c, f"B_{i}*B_{j}/({i}!*{j}!)"))
            zeta_rhs.append((2 * c, f"zeta({i})*zeta({j})"))
    bern = "".join(_fmt_coeff(c, n == 0) + s for n, (c, s) in enumerate(bern_terms)) or "0"
    rhs = "".join(_fmt_coeff(c, n == 0) + s for n, (c, s) in enumerate(zeta_rhs)) or "0"
    return BernoulliIdentity(
        weight=k,
        residuals=residual.constant_terms(),
        bernoulli_form=f"{bern} = 0",
        zeta_form=f"{zeta_lhs} = {rhs}",
    )


def constant_term_residuals(vec: RelationVector) -> dict[int, Fraction]:
    """Same residuals as :func:`bernoulli_identity`, straight from zeta(k)/pi^k.

    G_k contributes 2 zeta(k)/pi^k and P_{i,j} contributes 4 zeta(i) zeta(j)/pi^k,
    both at grade k/2; derivative parts have no constant term.
    """
    k = vec.weight
    if k % 2:
        return {}
    total = Fraction(0)
    if vec.g_coeff:
        total += 2 * zeta_ratio(k) * vec.g_coeff
    for (i, j), c in vec.p_coeffs.items():
        total -= 4 * zeta_ratio(i) * zeta_ratio(j) * c
    return {k // 2: total} if total else {}
