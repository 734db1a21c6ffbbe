"""Matrices with at most four distinct eigenvalues for every threshold graph.

For a threshold graph ``G`` and nonzero ``lam`` the package builds a
symmetric matrix with the sparsity pattern of ``G`` whose eigenvalues lie in
``{-lam, 0, lam, 2 lam}``, derives the exact multiplicities by reduction,
and checks them against a Jacobi eigensolver.
"""

from .exact_scalar import ExactScalar
from .matrix import DenseSymmetricMatrix, assemble, block_diagonal, pattern_check
from .oracle import NumericSpectrum, count_distinct, eigenvalues_jacobi, match_spectrum
from .reduction import (
    ReductionTrace,
    SymbolicSpectrum,
    lemma1_step,
    predicted_spectrum,
    run_full_reduction,
    theorem2_collapse,
)
from .threshold_model import (
    BlockSequence,
    adjacency,
    enumerate_threshold_graphs,
    is_connected,
    parse_sequence,
)
from .verify import construct, verify_sequence, verify_union
from .weights import algorithm1_matrix_weights, corollary_weights, lemma3_reduced_cross_weights

__all__ = [
    "BlockSequence",
    "DenseSymmetricMatrix",
    "ExactScalar",
    "NumericSpectrum",
    "ReductionTrace",
    "SymbolicSpectrum",
    "adjacency",
    "algorithm1_matrix_weights",
    "assemble",
    "block_diagonal",
    "construct",
    "corollary_weights",
    "count_distinct",
    "eigenvalues_jacobi",
    "enumerate_threshold_graphs",
    "is_connected",
    "lemma1_step",
    "lemma3_reduced_cross_weights",
    "match_spectrum",
    "parse_sequence",
    "pattern_check",
    "predicted_spectrum",
    "run_full_reduction",
    "theorem2_collapse",
    "verify_sequence",
    "verify_union",
]
