"""Exact spectrum of the constructed matrix by spectrum-preserving reductions.

Two moves are used.  The bag collapse replaces every bag of ``a_i`` vertices
by one vertex plus ``a_i - 1`` isolated vertices.  The chain step removes the
leading singleton bag ``k`` of ``T_k`` and splits off one eigenvalue ``x_k``;
it is valid only when bag ``k`` and bag ``k + 1`` look alike from the rest of
the graph, which is checked exactly at every step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import HypothesisViolation
from .exact_scalar import LAMBDA, ZERO, ExactScalar, sqrt_rational
from .threshold_model import BlockSequence
from .weights import CrossWeight, UniformWeights, algorithm1_matrix_weights, reduced_vertex_weight

COEFFICIENTS = (-1, 0, 1, 2)


@dataclass(frozen=True)
class SingletonBagGraph:
    """Weighted threshold graph ``T_k`` whose bags ``start..stop`` hold one vertex each.

    Bag ``i`` keeps its global parity: even bags are joined to every earlier
    bag still present.  ``eps`` is keyed by ``(i, j)`` with ``j`` even.
    """

    start: int
    stop: int
    p: dict[int, ExactScalar]
    eps: dict[tuple[int, int], ExactScalar]

    def edge(self, i: int, j: int) -> ExactScalar:
        return self.eps.get((i, j), ZERO)

    def to_json(self) -> dict[str, Any]:
        return {
            "bags": [self.start, self.stop],
            "p": {str(i): v.to_json() for i, v in sorted(self.p.items())},
            "eps": [{"i": i, "j": j, "exact": v.to_json()} for (i, j), v in sorted(self.eps.items())],
        }


@dataclass(frozen=True)
class SymbolicSpectrum:
    """Multiset over ``{-lambda, 0, lambda, 2 lambda}`` keyed by the coefficient of lambda."""

    mult: dict[int, int]

    def __post_init__(self) -> None:
        extra = set(self.mult) - set(COEFFICIENTS)
        if extra:
            raise ValueError(f"eigenvalue coefficients outside {COEFFICIENTS}: {sorted(extra)}")
        if any(m < 0 for m in self.mult.values()):
            raise ValueError("negative multiplicity")
        object.__setattr__(self, "mult", {c: int(self.mult.get(c, 0)) for c in COEFFICIENTS})

    @classmethod
    def from_scalars(cls, values: list[ExactScalar]) -> SymbolicSpectrum:
        mult = dict.fromkeys(COEFFICIENTS, 0)
        for v in values:
            c = v.lambda_multiple()
            if c not in mult:
                raise ValueError(f"eigenvalue {v} is not in {{-λ, 0, λ, 2λ}}")
            mult[c] += 1
        return cls(mult)

    @property
    def n(self) -> int:
        return sum(self.mult.values())

    @property
    def distinct(self) -> int:
        return sum(1 for m in self.mult.values() if m)

    def __add__(self, other: SymbolicSpectrum) -> SymbolicSpectrum:
        return SymbolicSpectrum({c: self.mult[c] + other.mult[c] for c in COEFFICIENTS})

    def values(self, lam: float) -> list[float]:
        return sorted(c * lam for c in COEFFICIENTS for _ in range(self.mult[c]))

    def to_json(self) -> dict[str, int]:
        return {str(c): self.mult[c] for c in COEFFICIENTS}

    def __str__(self) -> str:
        names = {-1: "-λ", 0: "0", 1: "λ", 2: "2λ"}
        return "{" + ", ".join(f"{names[c]}^{m}" for c, m in self.mult.items() if m) + "}"


@dataclass(frozen=True)
class Check:
    """An exact equality verified during the reduction."""

    name: str
    lhs: ExactScalar
    rhs: ExactScalar

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


def _require(name: str, lhs: ExactScalar, rhs: ExactScalar) -> Check:
    if lhs != rhs:
        raise HypothesisViolation(name, lhs, rhs)
    return Check(name, lhs, rhs)


@dataclass(frozen=True)
class ReductionStep:
    k: int
    checks: tuple[Check, ...]
    x: ExactScalar
    graph: SingletonBagGraph  # T_k before the step

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "verified": [c.to_json() for c in self.checks],
            "x": self.x.to_json(),
            "x_text": str(self.x),
            "weights": self.graph.to_json(),
        }


@dataclass(frozen=True)
class ReductionTrace:
    sequence: str
    isolated_zero_count: int
    isolated_lambda_count: int
    chain_values: tuple[ExactScalar, ...]
    final_singleton: ExactScalar
    steps: tuple[ReductionStep, ...] = field(default=())

    def to_json(self) -> dict[str, Any]:
        return {
            "sequence": self.sequence,
            "isolated_zero_count": self.isolated_zero_count,
            "isolated_lambda_count": self.isolated_lambda_count,
            "chain_values": [x.to_json() for x in self.chain_values],
            "chain_text": [str(x) for x in self.chain_values],
            "final_singleton": self.final_singleton.to_json(),
            "steps": [s.to_json() for s in self.steps],
        }


def _rescale(cw: CrossWeight, size_product: int) -> ExactScalar:
    """``sqrt(size_product) * cw`` computed exactly."""
    if cw.radical == size_product:
        return cw.exact
    factor = sqrt_rational(Fraction(size_product, cw.radical))
    if factor is None:
        raise ValueError(
            f"sqrt({size_product}/{cw.radical}) is not in Q[sqrt 2]; cannot collapse exactly"
        )
    return cw.exact * factor


def theorem2_collapse(
    seq: BlockSequence, w: UniformWeights
) -> tuple[SingletonBagGraph, list[ExactScalar]]:
    """Collapse each bag to a single vertex.

    Returns the singleton-bag graph with ``p'_i = p_i + (a_i - 1) eps_i`` and
    ``eps'_ij = sqrt(a_i a_j) eps_ij``, and the weights of the ``n - r``
    split-off isolated vertices (``a_i - 1`` copies of ``p_i - eps_i`` per bag).
    """
    p: dict[int, ExactScalar] = {}
    isolated: list[ExactScalar] = []
    for i, a in enumerate(seq.counts, start=1):
        p[i] = w.p[i] + w.eps_internal[i] * (a - 1)
        isolated.extend([w.p[i] - w.eps_internal[i]] * (a - 1))
    eps = {
        (i, j): _rescale(cw, seq.a(i) * seq.a(j)) for (i, j), cw in sorted(w.eps_cross.items())
    }
    return SingletonBagGraph(1, seq.r, p, eps), isolated


def lemma1_hypotheses(t: SingletonBagGraph) -> tuple[Check, ...]:
    """Verify that bags ``k`` and ``k + 1`` of ``T_k`` carry equal weights."""
    k = t.start
    if k >= t.stop:
        raise ValueError("T_k has a single bag; nothing to reduce")
    checks = [_require(f"p[{k}] == p[{k + 1}]", t.p[k], t.p[k + 1])]
    for j in range(k + 2, t.stop + 1):
        if j % 2 == 0:
            checks.append(_require(f"eps[{k},{j}] == eps[{k + 1},{j}]", t.edge(k, j), t.edge(k + 1, j)))
    return tuple(checks)


def lemma1_step(t: SingletonBagGraph) -> tuple[SingletonBagGraph, ExactScalar]:
    """Remove bag ``k`` from ``T_k``; return ``T_{k+1}`` and the split-off eigenvalue."""
    lemma1_hypotheses(t)
    k = t.start
    link = t.edge(k, k + 1)  # zero when k + 1 is odd
    p = {i: v for i, v in t.p.items() if i >= k + 2}
    p[k + 1] = t.p[k] + link
    eps: dict[tuple[int, int], ExactScalar] = {}
    for (i, j), v in t.eps.items():
        if i >= k + 2:
            eps[(i, j)] = v
        elif i == k + 1:
            eps[(i, j)] = v.mul_sqrt2()
    nxt = SingletonBagGraph(k + 1, t.stop, dict(sorted(p.items())), dict(sorted(eps.items())))
    return nxt, t.p[k] - link


def _chain_audits(t: SingletonBagGraph) -> list[Check]:
    """Closed-form edge weights expected in ``T_k`` for the constructed family.

    Every surviving edge ``(k, j)`` from the leading bag must equal
    ``+-lambda / sqrt(2)**(j - 1 - k)`` with sign ``+`` iff ``j = 2 (mod 4)``;
    for ``j = k + 1`` this is the requirement ``eps[k, k+1] = (q - 1) lambda``.
    """
    k = t.start
    audits = []
    for j in range(k + 1, t.stop + 1):
        if j % 2:
            continue
        expected = (LAMBDA if j % 4 == 2 else -LAMBDA).div_sqrt2(j - 1 - k)
        audits.append(_require(f"eps[{k},{j}] closed form", t.edge(k, j), expected))
    return audits


def run_full_reduction(seq: BlockSequence) -> tuple[ReductionTrace, SymbolicSpectrum]:
    w = algorithm1_matrix_weights(seq)
    t, isolated = theorem2_collapse(seq, w)
    zeros = sum(1 for v in isolated if v == ZERO)
    lams = sum(1 for v in isolated if v == LAMBDA)
    if zeros + lams != len(isolated):
        bad = next(v for v in isolated if v not in (ZERO, LAMBDA))
        raise HypothesisViolation("isolated vertex weight in {0, λ}", bad, LAMBDA)
    for i in range(1, seq.r + 1):
        _require(f"collapsed p[{i}]", t.p[i], reduced_vertex_weight(i))

    steps: list[ReductionStep] = []
    chain: list[ExactScalar] = []
    for k in range(1, seq.r):
        checks = lemma1_hypotheses(t) + tuple(_chain_audits(t))
        nxt, x = lemma1_step(t)
        steps.append(ReductionStep(k, checks, x, t))
        chain.append(x)
        t = nxt
    final = t.p[seq.r]
    trace = ReductionTrace(seq.render(), zeros, lams, tuple(chain), final, tuple(steps))
    return trace, SymbolicSpectrum.from_scalars(isolated + chain + [final])


def predicted_spectrum(seq: BlockSequence) -> SymbolicSpectrum:
    """Multiplicities from the closed-form case analysis on ``r = 4k + q``."""
    if seq.r == 1:
        return SymbolicSpectrum({0: seq.n})
    A = sum(a - 1 for i, a in enumerate(seq.counts, start=1) if i % 4 in (0, 1))
    B = sum(a - 1 for i, a in enumerate(seq.counts, start=1) if i % 4 in (2, 3))
    k, q = divmod(seq.r, 4)
    if q == 0:
        mult = {-1: k, 0: A + k, 1: B + k, 2: k}
    elif q == 1:
        mult = {-1: k, 0: A + k + 1, 1: B + k, 2: k}
    elif q == 2:
        mult = {-1: k + 1, 0: A + k, 1: B + k + 1, 2: k}
    else:
        mult = {-1: k + 1, 0: A + k, 1: B + k + 2, 2: k}
    return SymbolicSpectrum(mult)
