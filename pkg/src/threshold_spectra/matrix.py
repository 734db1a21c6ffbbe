"""Numeric realisation of weighted threshold graphs as symmetric matrices."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import DimensionMismatchError, LambdaZeroError, NonSymmetricError
from .threshold_model import BlockSequence, adjacency
from .weights import UniformWeights


@dataclass(frozen=True, eq=False)
class DenseSymmetricMatrix:
    """Symmetric ``n x n`` float matrix.

    ``support`` optionally records which off-diagonal entries were assigned a
    weight; :func:`pattern_check` prefers it over testing entries against 0.
    """

    entries: np.ndarray
    support: np.ndarray | None = None

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(m, m.T):
            raise NonSymmetricError("matrix is not symmetric")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        if self.support is not None:
            s = np.array(self.support, dtype=bool)
            if s.shape != m.shape:
                raise DimensionMismatchError("support mask shape differs from matrix shape")
            s.setflags(write=False)
            object.__setattr__(self, "support", s)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def nonzero_pattern(self) -> np.ndarray:
        if self.support is not None:
            return self.support
        return self.entries != 0

    def to_csv(self) -> str:
        return "".join(",".join(f"{v:.17g}" for v in row) + "\n" for row in self.entries)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "rows": [[float(v) for v in row] for row in self.entries]}


def assemble(seq: BlockSequence, w: UniformWeights, lam: float) -> DenseSymmetricMatrix:
    if lam == 0:
        raise LambdaZeroError("lambda must be nonzero")
    if not math.isfinite(lam):
        raise ValueError("lambda must be finite")
    n = seq.n
    m = np.zeros((n, n))
    support = np.zeros((n, n), dtype=bool)
    layout = seq.layout
    for i in range(1, seq.r + 1):
        block = slice(layout.offsets[i - 1], layout.offsets[i])
        if seq.is_join_bag(i) and seq.a(i) > 1:
            m[block, block] = w.eps_internal[i].to_float(lam)
            support[block, block] = True
        idx = np.arange(block.start, block.stop)
        m[idx, idx] = w.p[i].to_float(lam)
        support[idx, idx] = False
    for (i, j), cw in w.eps_cross.items():
        rows = slice(layout.offsets[i - 1], layout.offsets[i])
        cols = slice(layout.offsets[j - 1], layout.offsets[j])
        value = cw.to_float(lam)
        m[rows, cols] = value
        m[cols, rows] = value
        support[rows, cols] = support[cols, rows] = True
    return DenseSymmetricMatrix(m, support)


def pattern_check(M: DenseSymmetricMatrix, seq: BlockSequence) -> bool:
    """True iff the off-diagonal nonzero pattern of ``M`` is exactly the graph's edge set."""
    if M.n != seq.n:
        raise DimensionMismatchError(f"matrix is {M.n}x{M.n} but the graph has {seq.n} vertices")
    adj = adjacency(seq)
    off = ~np.eye(M.n, dtype=bool)
    pattern = M.nonzero_pattern()
    if not np.array_equal(pattern[off], adj[off]):
        return False
    # recorded support must agree with the numbers actually stored
    return bool(np.array_equal((M.entries != 0)[off], adj[off]))


def block_diagonal(parts: Sequence[DenseSymmetricMatrix]) -> DenseSymmetricMatrix:
    if not parts:
        raise ValueError("block_diagonal needs at least one part")
    n = sum(p.n for p in parts)
    m = np.zeros((n, n))
    support = np.zeros((n, n), dtype=bool)
    at = 0
    for part in parts:
        sl = slice(at, at + part.n)
        m[sl, sl] = part.entries
        support[sl, sl] = part.nonzero_pattern()
        at += part.n
    return DenseSymmetricMatrix(m, support)
