"""Independent numeric check of the exact spectrum.

The eigensolver is a plain cyclic Jacobi iteration.  It shares no code with
the reduction path, which is the point: the two routes must agree.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError, NonSymmetricError, SizeMismatchError
from .matrix import DenseSymmetricMatrix
from .reduction import COEFFICIENTS, SymbolicSpectrum

MAX_SWEEPS = 100


@dataclass(frozen=True)
class NumericSpectrum:
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(sorted(float(v) for v in self.values)))

    def __len__(self) -> int:
        return len(self.values)


def eigenvalues_jacobi(
    M: DenseSymmetricMatrix | np.ndarray, tol: float = 1e-12, max_sweeps: int = MAX_SWEEPS
) -> NumericSpectrum:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm is at most
    ``tol * ||M||_F``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.array(M.entries if isinstance(M, DenseSymmetricMatrix) else M, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    if n and float(np.max(np.abs(a - a.T))) > 1e-12 * norm:
        raise NonSymmetricError("matrix is not symmetric")
    a = (a + a.T) / 2
    if norm == 0.0:
        return NumericSpectrum(tuple(np.diag(a)))

    target = tol * norm
    offdiag = ~np.eye(n, dtype=bool)
    # entries below this are left alone; their total contribution stays under target
    skip = 0.1 * target / max(n, 1)
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a[offdiag]))
        if off <= target:
            return NumericSpectrum(tuple(np.diag(a)))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app, aqq = a[p, p], a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                new_p = c * col_p - s * col_q
                new_q = s * col_p + c * col_q
                new_p[p] = app - t * apq
                new_q[q] = aqq + t * apq
                new_p[q] = new_q[p] = 0.0
                a[:, p] = new_p
                a[p, :] = new_p
                a[:, q] = new_q
                a[q, :] = new_q
    raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


@dataclass(frozen=True)
class SpectrumMatch:
    ok: bool
    residual_max: float
    assignments: tuple[tuple[float, int, float], ...]  # (value, coefficient, residual)
    counts: dict[int, int]


def match_spectrum(
    num: NumericSpectrum | Sequence[float], sym: SymbolicSpectrum, lam: float, tol: float = 1e-9
) -> SpectrumMatch:
    """Assign each numeric eigenvalue to the nearest ``c * lam`` present in ``sym``.

    Passes iff every residual is at most ``tol * max(|lam|, 1)`` and the
    per-target counts reproduce the symbolic multiplicities.
    """
    values = num.values if isinstance(num, NumericSpectrum) else tuple(sorted(num))
    if len(values) != sym.n:
        raise SizeMismatchError(f"{len(values)} numeric eigenvalues vs {sym.n} symbolic")
    targets = [c for c in COEFFICIENTS if sym.mult[c]]
    counts = dict.fromkeys(COEFFICIENTS, 0)
    rows = []
    worst = 0.0
    for v in values:
        c = min(targets, key=lambda c: abs(v - c * lam))
        res = abs(v - c * lam)
        counts[c] += 1
        worst = max(worst, res)
        rows.append((v, c, res))
    ok = worst <= tol * max(abs(lam), 1.0) and counts == sym.mult
    return SpectrumMatch(ok, worst, tuple(rows), counts)


def count_distinct(num: NumericSpectrum | Sequence[float], cluster_tol: float = 1e-8) -> int:
    """Number of clusters when sorted values are split at gaps larger than ``cluster_tol``."""
    values = num.values if isinstance(num, NumericSpectrum) else tuple(sorted(num))
    if not values:
        return 0
    return 1 + sum(1 for lo, hi in zip(values, values[1:]) if hi - lo > cluster_tol)
