import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lacuna.eisenstein import eisenstein_series
from lacuna.exact import b_sum, binomial, romik_coefficient, zeta_ratio
from lacuna.relations import (
    RelationSpec,
    RelationVector,
    bernoulli_identity,
    constant_term_residuals,
    corollary_vector,
    default_precision,
    evaluate_relation,
    hst_relation_vector,
    hurwitz_residual,
    hurwitz_vector,
    lacunarity_search,
    romik_residual,
    romik_vector,
    theorem_6n4_residual,
    theorem_6n4_vector,
    theorem_6n_residual,
    theorem_6n_vector,
    verify_hst,
    verify_vector,
)


def brute_hst(r, s, t):
    """Direct transcription of the three sums as (coefficient, object) terms.

    Objects are ('G',) or ('P', i, j) with i, j as written; no merging or
    dropping. Returns the dict of total coefficients after the odd-index
    convention only.
    """
    k = r + s + t - 1
    terms = []
    for i in range(1, k):
        j = k - i
        c = binomial(i - 1, t - 1) * binomial(j - 1, s - 1) * (-1) ** (i + r)
        terms += [(c, ("P", i, j)), (-c * (-1) ** j, ("G",))]
    for j in range(1, k):
        h = k - j
        c = binomial(j - 1, r - 1) * binomial(h - 1, t - 1) * (-1) ** (j + s)
        terms += [(c, ("P", h, j)), (-c * (-1) ** h, ("G",))]
    for h in range(1, k):
        i = k - h
        c = binomial(h - 1, s - 1) * binomial(i - 1, r - 1) * (-1) ** (h + t)
        terms += [(c, ("P", h, i)), (-c * (-1) ** i, ("G",))]
    return terms


def brute_coefficients(r, s, t):
    k = r + s + t - 1
    g, p = Fraction(0), {}
    for c, obj in brute_hst(r, s, t):
        if obj[0] == "G":
            if k % 2 == 0:
                g += c
        elif obj[1] % 2 == 0 and obj[2] % 2 == 0:
            key = tuple(sorted(obj[1:]))
            p[key] = p.get(key, 0) + c
    return g, {key: c for key, c in p.items() if c}


def test_spec_validation():
    with pytest.raises(ValueError):
        RelationSpec(0, 2, 3)
    with pytest.raises(ValueError):
        RelationSpec(1, 1, 2)
    assert RelationSpec(1, 1, 3).weight == 4


def test_vector_normalizes_keys_and_zeros():
    v = RelationVector(12, 1, {(8, 4): 1, (4, 8): 2, (6, 6): 0})
    assert v.p_coeffs == {(4, 8): Fraction(3)}
    with pytest.raises(ValueError):
        RelationVector(12, 1, {(3, 9): 1})
    with pytest.raises(ValueError):
        RelationVector(12, 1, {(4, 6): 1})


def test_vector_matches_brute_transcription():
    for r in range(1, 9):
        for s_ in range(1, 9):
            for t in range(1, 9):
                if r + s_ + t - 1 < 4:
                    continue
                vec = hst_relation_vector(RelationSpec(r, s_, t))
                g, p = brute_coefficients(r, s_, t)
                # "0 = g G + sum p P" is stored as g G = sum (-p) P
                assert vec.g_coeff == g
                assert vec.p_coeffs == {key: -c for key, c in p.items()}


def test_corollary_n1():
    v = hst_relation_vector(RelationSpec(3, 3, 3))
    assert v.with_g_coeff(21).p_coeffs == {(4, 4): Fraction(9)}
    assert corollary_vector(1).g_coeff == 21
    assert corollary_vector(1).p_coeffs == {(4, 4): Fraction(9)}


def test_theorem_6n_instance_integer_form():
    v = hst_relation_vector(RelationSpec(3, 5, 5)).integer_normalized()
    assert v.g_coeff == 143
    assert v.p_coeffs == {(4, 8): 42, (6, 6): 25}
    assert v.scaled(5).g_coeff == 715
    assert v.scaled(5).p_coeffs == {(4, 8): 210, (6, 6): 125}


def test_odd_weight_is_degenerate():
    v = hst_relation_vector(RelationSpec(1, 2, 9))
    assert v.is_degenerate
    assert evaluate_relation(v, 10).is_zero()
    assert verify_hst(RelationSpec(1, 2, 3))
    with pytest.raises(ValueError):
        RelationSpec(1, 1, 2)


@pytest.mark.parametrize("spec", [(3, 3, 3), (5, 5, 5), (1, 2, 10), (3, 5, 5), (3, 3, 5)])
def test_verify_hst_examples(spec):
    assert verify_hst(RelationSpec(*spec), 40)


def test_derivative_terms_present_in_small_t_instances():
    v = hst_relation_vector(RelationSpec(1, 2, 10))
    assert (2, 10) in v.p_coeffs
    assert verify_vector(v, 30)


def test_perturbed_g_coeff_fails():
    v = hst_relation_vector(RelationSpec(3, 3, 3))
    bad = RelationVector(v.weight, v.g_coeff + 1, v.p_coeffs)
    assert not verify_vector(bad, 40)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([(3, 3, 3), (1, 2, 10), (3, 5, 5), (2, 6, 9), (1, 4, 12), (7, 7, 7)]),
    st.builds(Fraction, st.integers(-500, 500).filter(bool), st.integers(1, 50)),
    st.integers(0, 10),
)
def test_single_coefficient_perturbation_fails(spec, delta, which):
    v = hst_relation_vector(RelationSpec(*spec))
    keys = list(v.p_coeffs)
    if which == 0 or not keys:
        bad = RelationVector(v.weight, v.g_coeff + delta, v.p_coeffs)
    else:
        key = keys[which % len(keys)]
        p = dict(v.p_coeffs)
        p[key] += delta
        bad = RelationVector(v.weight, v.g_coeff, p)
    assert not verify_vector(bad)


def test_residual_orientation():
    # 7 G_8 - 3 G_4^2 with G_8 coefficient perturbed by +1 leaves exactly G_8
    v = RelationVector(8, 8, {(4, 4): 3})
    assert evaluate_relation(v, 20) == eisenstein_series(8, 20)


@pytest.mark.parametrize("n, precision", [(4, 30), (5, 30), (20, 60)])
def test_hurwitz(n, precision):
    assert hurwitz_residual(n, precision).is_zero()


def test_hurwitz_small_cases():
    v = hurwitz_vector(4)
    # 63 G_8 = 27 G_4^2
    assert v.g_coeff == 63 and v.p_coeffs == {(4, 4): 27}
    v = hurwitz_vector(5)
    # 198 G_10 = 3*(3*5 + 5*3) G_4 G_6
    assert v.g_coeff == 198 and v.p_coeffs == {(4, 6): 90}
    with pytest.raises(ValueError):
        hurwitz_vector(3)


@pytest.mark.parametrize("n, precision", [(1, 40), (2, 40), (10, 80)])
def test_romik(n, precision):
    assert romik_residual(n, precision).is_zero()


def test_romik_n1_is_classical():
    assert romik_vector(1).p_coeffs == {(4, 4): Fraction(3, 7)}


@pytest.mark.parametrize("n, precision", [(2, 40), (3, 40), (4, 60)])
def test_theorem_6n(n, precision):
    assert theorem_6n_residual(n, precision).is_zero()


def test_theorem_6n_rejects_n1():
    with pytest.raises(ValueError):
        theorem_6n_vector(1)


@pytest.mark.parametrize("n, precision", [(1, 40), (2, 40), (3, 60)])
def test_theorem_6n4(n, precision):
    assert theorem_6n4_residual(n, precision).is_zero()


def test_theorem_6n4_n1_coefficients():
    v = theorem_6n4_vector(1)
    # 126 + 72 = 198; (30 + 30) + 30 + 0 = 90
    assert v.g_coeff == 198
    assert v.p_coeffs == {(4, 6): 90}


def test_theorem_vectors_are_hst_instances():
    for n in range(2, 11):
        a = theorem_6n_vector(n)
        b = hst_relation_vector(RelationSpec(2 * n - 1, 2 * n + 1, 2 * n + 1))
        assert a == b.with_g_coeff(a.g_coeff)
    for n in range(1, 11):
        a = theorem_6n4_vector(n)
        b = hst_relation_vector(RelationSpec(2 * n + 1, 2 * n + 1, 2 * n + 3))
        assert a == b.with_g_coeff(a.g_coeff)


def test_corollary_matches_romik():
    for n in range(1, 51):
        v = corollary_vector(n)
        assert v.g_coeff == b_sum(n)
        expected = {}
        for k in range(1, n + 1):
            a, b = 2 * n + 2 * k, 4 * n - 2 * k + 2
            key = (min(a, b), max(a, b))
            expected[key] = expected.get(key, 0) + binomial(2 * n + 2 * k - 1, 2 * n) * binomial(4 * n - 2 * k + 1, 2 * n)
        assert v.p_coeffs == expected
        assert v.scaled(Fraction(1, b_sum(n))) == romik_vector(n)


def test_corollary_n2():
    v = corollary_vector(2)
    assert v.g_coeff == 715
    # k = 1 and k = 2 both land on G_6 G_8: 175 + 175
    assert v.p_coeffs == {(6, 8): 350}
    assert romik_coefficient(2, 1) + romik_coefficient(2, 2) == Fraction(350, 715)


def brute_search(k):
    out = []
    for r in range(1, k + 2):
        for s in range(r, k + 2):
            t = k + 1 - r - s
            if t >= s:
                v = hst_relation_vector(RelationSpec(r, s, t))
                if v.g_coeff:
                    out.append(((r, s, t), len(v.p_coeffs)))
    return out


def test_search_k8():
    hits = lacunarity_search(8, 3)
    best = min(sp for _, sp in brute_search(8))
    assert best == 1
    assert hits[0].spec == RelationSpec(3, 3, 3)
    assert hits[0].sparsity == 1


def test_search_k12_contains_theorem_instance():
    hits = lacunarity_search(12, 5)
    assert hits[0].sparsity == 2
    assert hits[0].spec == RelationSpec(3, 5, 5)
    target = theorem_6n_vector(2)
    assert any(h.vector.integer_normalized() == target.integer_normalized() for h in hits)


def test_search_is_exhaustive_and_ordered():
    for k in range(4, 31, 2):
        hits = lacunarity_search(k, 1000)
        assert sorted((h.spec.as_tuple(), h.sparsity) for h in hits) == sorted(brute_search(k))
        keys = [(h.sparsity, tuple(-x for x in h.spec.as_tuple())) for h in hits]
        assert keys == sorted(keys)


def test_search_symmetric_triples():
    for n in range(1, 9):
        k = 6 * n + 2
        hits = lacunarity_search(k, 1000)
        sym = next(h for h in hits if h.spec == RelationSpec(2 * n + 1, 2 * n + 1, 2 * n + 1))
        # n products G_{2n+2k} G_{4n-2k+2}; k and n+1-k give the same pair
        assert sym.sparsity == math.ceil(n / 2)
        assert len(sym.vector.eisenstein_support) == n
        assert sym.sparsity == hits[0].sparsity


def test_bernoulli_identity_weight8():
    ident = bernoulli_identity(hst_relation_vector(RelationSpec(3, 3, 3)))
    assert ident.holds and ident.residuals == {}
    assert ident.zeta_form == "7*zeta(8) = 6*zeta(4)^2"
    assert ident.bernoulli_form == "7*B_8/8! + 3*B_4^2/(4!)^2 = 0"
    # forced value
    assert Fraction(6, 7) * zeta_ratio(4) ** 2 == Fraction(1, 9450)


def test_bernoulli_identity_derivative_terms_have_no_constant_term():
    v = hst_relation_vector(RelationSpec(1, 2, 10))
    assert (2, 10) in v.p_coeffs
    assert bernoulli_identity(v).holds
    assert constant_term_residuals(v) == {}


def test_bernoulli_identity_perturbed():
    v = hst_relation_vector(RelationSpec(3, 3, 3))
    bad = RelationVector(8, v.g_coeff + 1, v.p_coeffs)
    ident = bernoulli_identity(bad)
    assert not ident.holds
    assert ident.residuals == {4: 2 * zeta_ratio(8)}
    assert ident.residuals == constant_term_residuals(bad)


def test_random_specs_verify():
    rng = random.Random(20240601)
    for _ in range(20):
        r, s = rng.randint(1, 15), rng.randint(1, 15)
        t = rng.randint(max(1, 5 - r - s), 40 - r - s)
        spec = RelationSpec(r, s, t)
        assert verify_hst(spec)
