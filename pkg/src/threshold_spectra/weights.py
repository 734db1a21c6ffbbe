"""Vertex and edge weights for the four-eigenvalue construction.

Weights depend on the bag index modulo 4.  Cross-bag weights are first
computed for the collapsed graph with one vertex per bag (``eps1``) and
then divided by ``sqrt(a_i * a_j)``; that radical is kept as an integer so
the exact part stays in Q[sqrt 2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from .errors import TooFewBagsError
from .exact_scalar import LAMBDA, ZERO, ExactScalar
from .threshold_model import BlockSequence


@dataclass(frozen=True)
class CrossWeight:
    """The edge weight ``exact / sqrt(radical)``."""

    exact: ExactScalar
    radical: int = 1

    def to_float(self, lam: float) -> float:
        value = self.exact.to_float(lam)
        if self.radical == 1:
            return value
        return value / math.sqrt(self.radical)

    def to_json(self, i: int, j: int) -> dict[str, Any]:
        return {"i": i, "j": j, "exact": self.exact.to_json(), "radical": self.radical}


@dataclass(frozen=True)
class UniformWeights:
    """One vertex weight and one internal edge weight per bag, one weight per joined bag pair.

    ``eps_cross`` is keyed by ``(i, j)`` with ``i < j`` and ``j`` even; absent
    pairs have no edges.
    """

    p: dict[int, ExactScalar]
    eps_internal: dict[int, ExactScalar]
    eps_cross: dict[tuple[int, int], CrossWeight] = field(default_factory=dict)

    def cross(self, i: int, j: int) -> CrossWeight | None:
        return self.eps_cross.get((i, j))

    def to_json(self) -> dict[str, Any]:
        bags = sorted(self.p)
        return {
            "p": [self.p[i].to_json() for i in bags],
            "eps_internal": [self.eps_internal[i].to_json() for i in bags],
            "eps_cross": [cw.to_json(i, j) for (i, j), cw in sorted(self.eps_cross.items())],
        }


@dataclass(frozen=True)
class ReducedWeights:
    """Weights of the collapsed graph ``T_1`` (one vertex per bag)."""

    p1: dict[int, ExactScalar]
    eps1: dict[tuple[int, int], ExactScalar]

    def eps(self, i: int, j: int) -> ExactScalar:
        return self.eps1.get((i, j), ZERO)


def reduced_vertex_weight(i: int) -> ExactScalar:
    """Vertex weight of bag ``i`` after collapsing: 0 for i = 1, 2 and lambda for i = 3, 0 (mod 4)."""
    return ZERO if i % 4 in (1, 2) else LAMBDA


def corollary_weights(seq: BlockSequence) -> UniformWeights:
    p: dict[int, ExactScalar] = {}
    eps: dict[int, ExactScalar] = {}
    for i, a in enumerate(seq.counts, start=1):
        match i % 4:
            case 1:
                p[i], eps[i] = ZERO, ZERO
            case 2:
                p[i], eps[i] = LAMBDA * (a - 1) / a, -LAMBDA / a
            case 3:
                p[i], eps[i] = LAMBDA, ZERO
            case 0:
                p[i], eps[i] = LAMBDA / a, LAMBDA / a
    return UniformWeights(p, eps)


def lemma3_reduced_cross_weights(seq: BlockSequence) -> ReducedWeights:
    """Closed-form cross weights of ``T_1``.

    For ``2 <= i < j`` with ``j`` even the weight is ``+-lambda / sqrt(2)**(j - i)``,
    positive iff ``j = 2 (mod 4)``.  Bag 1 copies bag 2 except for the edge
    ``(1, 2)`` which gets ``lambda``.
    """
    r = seq.r
    if r < 2:
        raise TooFewBagsError(f"need at least two bags, got r={r}")
    eps1: dict[tuple[int, int], ExactScalar] = {}
    for i in range(2, r):
        for j in range(i + 1, r + 1):
            if j % 2:
                continue
            sign = LAMBDA if j % 4 == 2 else -LAMBDA
            eps1[(i, j)] = sign.div_sqrt2(j - i)
    eps1[(1, 2)] = LAMBDA
    for j in range(4, r + 1, 2):
        eps1[(1, j)] = eps1[(2, j)]
    p1 = {i: reduced_vertex_weight(i) for i in range(1, r + 1)}
    return ReducedWeights(p1, dict(sorted(eps1.items())))


def algorithm1_matrix_weights(seq: BlockSequence) -> UniformWeights:
    base = corollary_weights(seq)
    if seq.r < 2:
        return base
    reduced = lemma3_reduced_cross_weights(seq)
    cross = {
        (i, j): CrossWeight(e, seq.a(i) * seq.a(j)) for (i, j), e in reduced.eps1.items()
    }
    return UniformWeights(base.p, base.eps_internal, cross)
