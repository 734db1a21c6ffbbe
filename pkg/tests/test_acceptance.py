"""Acceptance criteria, one test each, at the stated tolerances."""

import random

import numpy as np
import pytest

from oracles import direct_matrix, eig, lambda_multiplicities, nonzero
from threshold_spectra.exact_scalar import LAMBDA, ZERO
from threshold_spectra.matrix import assemble, pattern_check
from threshold_spectra.oracle import count_distinct, eigenvalues_jacobi, match_spectrum
from threshold_spectra.reduction import predicted_spectrum, run_full_reduction
from threshold_spectra.threshold_model import BlockSequence, enumerate_threshold_graphs, parse_sequence
from threshold_spectra.verify import construct, verify_sequence, verify_union
from threshold_spectra.weights import algorithm1_matrix_weights

SEED = 20261016


def random_sequence(rng: random.Random, n_max: int) -> BlockSequence:
    n = rng.randint(1, n_max)
    bits = [0] + [rng.randint(0, 1) for _ in range(n - 1)]
    return BlockSequence.from_bits(bits)


@pytest.mark.criterion(1, "n <= 12 sweep: pattern, spectrum residual, at most 4 distinct")
def test_criterion_1_full_sweep(criterion):
    worst = {}
    for lam in (1.0, -2.0, 0.37):
        bound = 1e-9 * max(1.0, abs(lam))
        count = 0
        for seq in enumerate_threshold_graphs(12):
            rep = verify_sequence(seq, lam)
            assert rep.pattern_ok, (seq, lam)
            assert rep.spectrum_ok and rep.residual_max <= bound, (seq, lam, rep.residual_max)
            assert rep.distinct_count <= 4, (seq, lam)
            worst[lam] = max(worst.get(lam, 0.0), rep.residual_max)
            count += 1
        assert count == 4095
    print(f"max residual per lambda: {worst}")


@pytest.mark.criterion(2, "exact reduction equals the closed-form multiplicities, n <= 12")
def test_criterion_2_formulas(criterion):
    for seq in enumerate_threshold_graphs(12):
        _, spec = run_full_reduction(seq)
        assert spec == predicted_spectrum(seq), seq


@pytest.mark.criterion(3, "golden trace for 0 1 0 1 0 1")
def test_criterion_3_golden_trace(criterion):
    trace, spec = run_full_reduction(parse_sequence("0 1 0 1 0 1"))
    assert trace.chain_values == (-LAMBDA, LAMBDA, 2 * LAMBDA, ZERO, -LAMBDA)
    assert trace.final_singleton == LAMBDA
    assert spec.mult == {-1: 2, 0: 1, 1: 2, 2: 1}


@pytest.mark.criterion(4, "six-bag parametric family, 20 random size vectors")
def test_criterion_4_six_bag_family(criterion):
    rng = random.Random(SEED)
    for _ in range(20):
        a = [rng.randint(1, 5) for _ in range(6)]
        seq = BlockSequence(tuple(a))
        expected = {-1: 2, 0: a[0] + a[3] + a[4] - 2, 1: a[1] + a[2] + a[5] - 1, 2: 1}
        _, spec = run_full_reduction(seq)
        assert spec.mult == expected, a
        match = match_spectrum(eigenvalues_jacobi(construct(seq, 1.0)), spec, 1.0, tol=1e-9)
        assert match.ok and match.residual_max <= 1e-9, (a, match.residual_max)
        # second opinion from LAPACK on an independently built matrix
        assert lambda_multiplicities(eig(direct_matrix(a, 1.0)), 1.0, 1e-9) == nonzero(expected)


@pytest.mark.criterion(5, "tightness witnesses attain exactly 4 distinct eigenvalues")
def test_criterion_5_tightness(criterion):
    for k1 in (3, 4, 5):
        for k2 in (2, 3, 4):
            seq = parse_sequence(f"0^{k1} 1 0^{k2} 1")
            spectrum = eigenvalues_jacobi(construct(seq, 1.0))
            assert count_distinct(spectrum, 1e-8) == 4, (k1, k2)


@pytest.mark.criterion(6, "disjoint unions: union of spectra, at most 4 distinct")
def test_criterion_6_unions(criterion):
    rng = random.Random(SEED + 6)
    for _ in range(10):
        parts = [random_sequence(rng, 8) for _ in range(rng.randint(1, 4))]
        rep = verify_union(parts, 1.0)
        assert rep.pattern_ok and rep.spectrum_ok, parts
        assert rep.residual_max <= 1e-9
        assert rep.distinct_count <= 4
        component_values = np.sort(np.concatenate([eig(construct(p).entries) for p in parts]))
        np.testing.assert_allclose(rep.numeric_eigenvalues, component_values, atol=1e-9)


@pytest.mark.criterion(7, "lambda homogeneity of entries and spectra")
def test_criterion_7_homogeneity(criterion):
    rng = random.Random(SEED + 7)
    for _ in range(50):
        seq = random_sequence(rng, 10)
        w = algorithm1_matrix_weights(seq)
        lam = rng.choice([1.0, -0.5, 2.25])
        base = assemble(seq, w, lam)
        base_spec = np.array(eigenvalues_jacobi(base).values)
        for c in (-1.0, 3.0, 1e6):
            scaled = assemble(seq, w, c * lam)
            np.testing.assert_allclose(scaled.entries, c * base.entries, rtol=1e-14, atol=0)
            assert pattern_check(scaled, seq)
            spec = np.array(eigenvalues_jacobi(scaled).values)
            np.testing.assert_allclose(
                spec, np.sort(c * base_spec), atol=1e-9 * abs(c * lam) * max(1.0, seq.n)
            )


@pytest.mark.criterion(8, "Jacobi trace and Frobenius identities on random matrices")
def test_criterion_8_oracle_identities(criterion):
    rng = np.random.default_rng(SEED + 8)
    for _ in range(100):
        n = int(rng.integers(1, 11))
        a = rng.standard_normal((n, n)) * 10 ** rng.uniform(-3, 3)
        a = (a + a.T) / 2
        vals = np.array(eigenvalues_jacobi(a).values)
        fro = np.linalg.norm(a)
        bound = 1e-10 * n * fro
        assert abs(vals.sum() - np.trace(a)) <= bound
        assert abs((vals**2).sum() - fro**2) <= bound
