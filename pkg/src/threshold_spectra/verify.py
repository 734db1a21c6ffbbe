"""End-to-end checks combining construction, exact reduction and the numeric oracle."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from .matrix import DenseSymmetricMatrix, assemble, block_diagonal, pattern_check
from .oracle import count_distinct, eigenvalues_jacobi, match_spectrum
from .reduction import SymbolicSpectrum, run_full_reduction
from .threshold_model import BlockSequence
from .weights import algorithm1_matrix_weights

DEFAULT_TOL = 1e-9
DEFAULT_JACOBI_TOL = 1e-12


def default_cluster_tol(lam: float) -> float:
    return 1e-8 * max(1.0, abs(lam))


def construct(seq: BlockSequence, lam: float = 1.0) -> DenseSymmetricMatrix:
    return assemble(seq, algorithm1_matrix_weights(seq), lam)


@dataclass(frozen=True)
class VerificationReport:
    n: int
    r: int
    sequence: str | list[str]
    lam: float
    pattern_ok: bool
    spectrum_ok: bool
    distinct_count: int
    residual_max: float
    predicted: SymbolicSpectrum
    numeric_eigenvalues: tuple[float, ...]

    @property
    def ok(self) -> bool:
        return self.pattern_ok and self.spectrum_ok and self.distinct_count <= 4

    def to_json(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "r": self.r,
            "sequence": self.sequence,
            "lambda": self.lam,
            "pattern_ok": self.pattern_ok,
            "spectrum_ok": self.spectrum_ok,
            "distinct_count": self.distinct_count,
            "residual_max": self.residual_max,
            "predicted_multiplicities": self.predicted.to_json(),
            "numeric_eigenvalues": list(self.numeric_eigenvalues),
        }


def verify_sequence(
    seq: BlockSequence,
    lam: float = 1.0,
    tol: float = DEFAULT_TOL,
    jacobi_tol: float = DEFAULT_JACOBI_TOL,
    cluster_tol: float | None = None,
) -> VerificationReport:
    M = construct(seq, lam)
    _, sym = run_full_reduction(seq)
    spectrum = eigenvalues_jacobi(M, jacobi_tol)
    match = match_spectrum(spectrum, sym, lam, tol)
    distinct = count_distinct(spectrum, cluster_tol or default_cluster_tol(lam))
    return VerificationReport(
        n=seq.n,
        r=seq.r,
        sequence=seq.render(),
        lam=lam,
        pattern_ok=pattern_check(M, seq),
        spectrum_ok=match.ok,
        distinct_count=distinct,
        residual_max=match.residual_max,
        predicted=sym,
        numeric_eigenvalues=spectrum.values,
    )


def union_matrix(seqs: Sequence[BlockSequence], lam: float = 1.0) -> DenseSymmetricMatrix:
    return block_diagonal([construct(s, lam) for s in seqs])


def verify_union(
    seqs: Sequence[BlockSequence],
    lam: float = 1.0,
    tol: float = DEFAULT_TOL,
    jacobi_tol: float = DEFAULT_JACOBI_TOL,
    cluster_tol: float | None = None,
) -> VerificationReport:
    """Verify the direct sum of the components' matrices against the union of their spectra."""
    if not seqs:
        raise ValueError("need at least one component")
    parts = [construct(s, lam) for s in seqs]
    M = block_diagonal(parts)
    sym = SymbolicSpectrum({})
    for s in seqs:
        sym = sym + run_full_reduction(s)[1]
    spectrum = eigenvalues_jacobi(M, jacobi_tol)
    match = match_spectrum(spectrum, sym, lam, tol)
    return VerificationReport(
        n=M.n,
        r=sum(s.r for s in seqs),
        sequence=[s.render() for s in seqs],
        lam=lam,
        pattern_ok=all(pattern_check(part, s) for part, s in zip(parts, seqs)),
        spectrum_ok=match.ok,
        distinct_count=count_distinct(spectrum, cluster_tol or default_cluster_tol(lam)),
        residual_max=match.residual_max,
        predicted=sym,
        numeric_eigenvalues=spectrum.values,
    )
