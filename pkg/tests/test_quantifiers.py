import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coherence_lab.core import StateVector, diagonal, state_to_density
from coherence_lab.errors import IndexOutOfRange, InvalidState, NotPureState
from coherence_lab.quantifiers import (
    MixtureSpec,
    Quantifier,
    assert_pure,
    build_two_state_mixture,
    c_l1_normalized,
    c_pdd,
    c_re_normalized,
    distance_to_max,
    mixed_offdiag_magnitude,
    pairwise_diagonal_sum,
    quantify,
)

from conftest import haar_state

R = 1 / math.sqrt(2)
PSI_82 = StateVector([math.sqrt(0.8), math.sqrt(0.2)])


def brute_pdd(pops):
    """Independent oracle: explicit ordered-pair enumeration."""
    n = len(pops)
    s = sum(abs(pops[i] - pops[j]) for i in range(n) for j in range(n) if i != j)
    return 1 - s / (2 * (n - 1))


def brute_l1(rho):
    m = np.asarray(rho)
    n = m.shape[0]
    return sum(abs(m[i, j]) for i in range(n) for j in range(n) if i != j) / (n - 1)


def test_c_pdd_examples():
    assert c_pdd(StateVector.basis(2, 0)).value == 0.0
    for n in (2, 3, 5, 16):
        assert c_pdd(StateVector.maximally_coherent(n)).value == pytest.approx(1.0, abs=1e-12)
    assert brute_pdd([0.8, 0.2]) == pytest.approx(0.4, abs=1e-15)
    assert c_pdd(PSI_82).value == pytest.approx(0.4, abs=1e-12)
    psi3 = StateVector.from_populations([0.5, 0.3, 0.2], phases=[0.0, 1.0, -2.0])
    assert brute_pdd([0.5, 0.3, 0.2]) == pytest.approx(0.7, abs=1e-15)
    assert 1 - (0.5 + (0.5 + 0.3) - 1) == pytest.approx(0.7, abs=1e-15)
    assert c_pdd(psi3).value == pytest.approx(0.7, abs=1e-12)


def test_coherence_value_tagging():
    v = c_pdd(PSI_82)
    assert v.quantifier is Quantifier.PDD and v.dim == 2
    assert float(v) == v.value
    assert c_l1_normalized(PSI_82).quantifier is Quantifier.L1
    assert c_re_normalized(PSI_82).quantifier is Quantifier.RE


def test_distance_to_max_examples():
    for n in (2, 4, 7):
        assert distance_to_max(StateVector.maximally_coherent(n)) == pytest.approx(0.0, abs=1e-12)
        assert distance_to_max(StateVector.basis(n, n - 1)) == 1.0
    assert distance_to_max(PSI_82) == pytest.approx(0.6, abs=1e-12)


def test_c_l1_examples():
    assert c_l1_normalized(StateVector.basis(3, 1)).value == 0.0
    for n in (2, 3, 8):
        assert c_l1_normalized(StateVector.maximally_coherent(n)).value == pytest.approx(1.0, abs=1e-12)
    rho = state_to_density(PSI_82)
    assert brute_l1(rho) == pytest.approx(2 * math.sqrt(0.8 * 0.2), abs=1e-15)
    assert c_l1_normalized(rho).value == pytest.approx(0.8, abs=1e-12)


def test_c_re_examples():
    assert c_re_normalized(StateVector.basis(4, 2)).value == 0.0
    for n in (2, 3, 8):
        assert c_re_normalized(StateVector.maximally_coherent(n)).value == pytest.approx(1.0, abs=1e-12)
    assert c_re_normalized(PSI_82).value == pytest.approx(0.72192809488736234787, abs=1e-12)


def test_general_quantifiers_accept_mixed_states():
    rho = np.array([[0.5, 0.25], [0.25, 0.5]])
    assert c_l1_normalized(rho).value == pytest.approx(0.5)
    assert 0 < c_re_normalized(rho).value < 1
    with pytest.raises(NotPureState):
        c_pdd(rho)
    with pytest.raises(NotPureState):
        distance_to_max(rho)


def test_assert_pure_examples():
    assert_pure(state_to_density(PSI_82))
    with pytest.raises(NotPureState) as err:
        assert_pure(np.diag([0.5, 0.5]))
    assert err.value.purity == pytest.approx(0.5)
    # orthogonal mixture: purity p^2 + (1 - p)^2
    p = 0.99
    rho = p * np.diag([1.0, 0.0]) + (1 - p) * np.diag([0.0, 1.0])
    with pytest.raises(NotPureState) as err:
        assert_pure(rho)
    assert err.value.purity == pytest.approx(p * p + (1 - p) ** 2, abs=1e-14)
    assert err.value.purity == pytest.approx(0.9802, abs=1e-14)


def test_quantify_bundle_identity():
    vals = quantify(PSI_82)
    assert vals["c_pdd"] + vals["distance_to_max"] == 1.0
    assert set(vals) == {"c_pdd", "distance_to_max", "c_l1", "c_re"}


# -- mixtures -----------------------------------------------------------------


def _spec(p1, a1, a2, f1, f2):
    return MixtureSpec(p1, 1 - p1, a1, a2, f1, f2)


def test_mixture_spec_validation():
    with pytest.raises(InvalidState):
        MixtureSpec(0.6, 0.6, (1, 0), (1, 0), (0, 0), (0, 0))
    with pytest.raises(InvalidState):
        MixtureSpec(0.5, 0.5, (1, 1), (1, 0), (0, 0), (0, 0))
    with pytest.raises(InvalidState):
        MixtureSpec(0.5, 0.5, (1, 0), (1, 0, 0), (0, 0), (0, 0, 0))


def test_mixture_reduces_to_pure_state():
    spec = _spec(1.0, (math.sqrt(0.8), math.sqrt(0.2)), (1, 0), (0.3, -1.1), (0, 0))
    psi = StateVector(np.array(spec.amps1) * np.exp(1j * np.array(spec.phases1)))
    np.testing.assert_allclose(build_two_state_mixture(spec).entries, state_to_density(psi).entries, atol=1e-15)
    assert mixed_offdiag_magnitude(spec, 0, 1) == pytest.approx(math.sqrt(0.8) * math.sqrt(0.2), abs=1e-15)


def test_plus_minus_mixture_dephases():
    spec = _spec(0.5, (R, R), (R, R), (0, 0), (0, math.pi))
    rho = build_two_state_mixture(spec).entries
    np.testing.assert_allclose(rho, np.diag([0.5, 0.5]), atol=1e-15)
    assert mixed_offdiag_magnitude(spec, 0, 1) == pytest.approx(0.0, abs=1e-15)


def test_quarter_phase_mixture():
    spec = _spec(0.5, (R, R), (R, R), (0, 0), (0, math.pi / 2))
    rho = build_two_state_mixture(spec).entries
    # direct complex arithmetic: 0.5 * 0.5 + 0.5 * 0.5 * exp(-i pi/2)
    direct = 0.5 * (R * R) + 0.5 * (R * R) * complex(math.cos(-math.pi / 2), math.sin(-math.pi / 2))
    assert rho[0, 1] == pytest.approx(direct, abs=1e-15)
    assert mixed_offdiag_magnitude(spec, 0, 1) == pytest.approx(abs(direct), abs=1e-15)
    assert abs(direct) == pytest.approx(math.sqrt(2) / 4, abs=1e-15)


def test_aligned_phases_add_moduli():
    a1 = (math.sqrt(0.7), math.sqrt(0.3))
    a2 = (math.sqrt(0.4), math.sqrt(0.6))
    spec = _spec(0.25, a1, a2, (0.4, 0.1), (1.3, 1.0))
    expected = 0.25 * a1[0] * a1[1] + 0.75 * a2[0] * a2[1]
    assert mixed_offdiag_magnitude(spec, 0, 1) == pytest.approx(expected, abs=1e-15)


def test_offdiag_index_errors():
    spec = _spec(0.5, (R, R), (R, R), (0, 0), (0, 0))
    with pytest.raises(IndexOutOfRange):
        mixed_offdiag_magnitude(spec, 0, 0)
    with pytest.raises(IndexOutOfRange):
        mixed_offdiag_magnitude(spec, 0, 2)


def random_mixture_spec(rng, n):
    p1 = float(rng.uniform())
    a1 = np.sqrt(rng.dirichlet(np.ones(n)))
    a2 = np.sqrt(rng.dirichlet(np.ones(n)))
    return MixtureSpec(
        p1, 1 - p1, a1 / np.linalg.norm(a1), a2 / np.linalg.norm(a2),
        rng.uniform(-np.pi, np.pi, n), rng.uniform(-np.pi, np.pi, n),
    )


def test_offdiag_formula_matches_direct_construction(rng):
    for _ in range(1000):
        n = int(rng.integers(2, 7))
        spec = random_mixture_spec(rng, n)
        rho = build_two_state_mixture(spec).entries
        for i, j in itertools.permutations(range(n), 2):
            assert abs(mixed_offdiag_magnitude(spec, i, j) - abs(rho[i, j])) < 1e-12


def equal_diagonal_witness():
    """Two mixtures with the same diagonal but different off-diagonal moduli."""
    amps = (R, R)
    aligned = _spec(0.5, amps, amps, (0, 0), (0, 0))
    opposed = _spec(0.5, amps, amps, (0, 0), (0, math.pi))
    return build_two_state_mixture(aligned), build_two_state_mixture(opposed)


def test_equal_diagonal_witness():
    rho_a, rho_b = equal_diagonal_witness()
    np.testing.assert_allclose(diagonal(rho_a), diagonal(rho_b), atol=1e-15)
    assert abs(c_l1_normalized(rho_a).value - c_l1_normalized(rho_b).value) > 0.1
    assert pairwise_diagonal_sum(rho_a) == pairwise_diagonal_sum(rho_b)
    with pytest.raises(NotPureState):
        c_pdd(rho_b)
    # rho_a happens to be pure (|+><+|); a genuine mixed pair follows
    spec1 = _spec(0.5, (math.sqrt(0.6), math.sqrt(0.4)), (math.sqrt(0.4), math.sqrt(0.6)), (0, 0), (0, 0))
    spec2 = _spec(0.5, (math.sqrt(0.6), math.sqrt(0.4)), (math.sqrt(0.4), math.sqrt(0.6)), (0, 0), (0, math.pi))
    m1, m2 = build_two_state_mixture(spec1), build_two_state_mixture(spec2)
    np.testing.assert_allclose(diagonal(m1), diagonal(m2), atol=1e-15)
    assert abs(c_l1_normalized(m1).value - c_l1_normalized(m2).value) > 0.1
    for m in (m1, m2):
        with pytest.raises(NotPureState):
            assert_pure(m)


# -- properties ---------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 8, 16])
def test_bounds_on_random_pure_states(n, rng):
    for _ in range(10_000 if n <= 4 else 2_000):
        rho = state_to_density(haar_state(rng, n))
        for f in (c_pdd, c_l1_normalized, c_re_normalized):
            v = f(rho).value
            assert 0.0 <= v <= 1.0 + 1e-12


@settings(max_examples=300, deadline=None)
@given(n=st.integers(2, 10), seed=st.integers(0, 2**32 - 1))
def test_pdd_distance_identity_and_oracle(n, seed):
    rng = np.random.default_rng(seed)
    psi = haar_state(rng, n)
    assert c_pdd(psi).value + distance_to_max(psi) == 1.0
    assert c_pdd(psi).value == pytest.approx(brute_pdd(list(psi.populations)), abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(n=st.integers(2, 8), seed=st.integers(0, 2**32 - 1))
def test_permutation_invariance(n, seed):
    rng = np.random.default_rng(seed)
    psi = haar_state(rng, n)
    perm = rng.permutation(n)
    moved = StateVector(psi.amplitudes[perm])
    for f in (c_pdd, c_l1_normalized, c_re_normalized):
        assert f(moved).value == pytest.approx(f(psi).value, abs=1e-12)


@settings(max_examples=200, deadline=None)
@given(n=st.integers(2, 16), seed=st.integers(0, 2**32 - 1))
def test_maximally_coherent_phase_independence(n, seed):
    rng = np.random.default_rng(seed)
    psi = StateVector.maximally_coherent(n, phases=rng.uniform(0, 2 * np.pi, n))
    for f in (c_pdd, c_l1_normalized, c_re_normalized):
        assert abs(f(psi).value - 1.0) < 1e-9


@settings(max_examples=200, deadline=None)
@given(n=st.integers(2, 8), seed=st.integers(0, 2**32 - 1))
def test_faithfulness(n, seed):
    rng = np.random.default_rng(seed)
    k = int(rng.integers(n))
    basis = StateVector.basis(n, k)
    assert c_pdd(basis).value == 0.0
    psi = haar_state(rng, n)
    pops = psi.populations
    is_basis = np.isclose(pops.max(), 1.0, atol=1e-9)
    is_flat = np.allclose(pops, 1.0 / n, atol=1e-9)
    assert (abs(c_pdd(psi).value) < 1e-9) == is_basis
    assert (abs(c_pdd(psi).value - 1.0) < 1e-9) == is_flat
    # slightly off a basis state is already coherent
    eps = 1e-4
    near = StateVector.from_populations(np.where(np.arange(n) == k, 1 - eps, eps / (n - 1)))
    assert c_pdd(near).value > 0
