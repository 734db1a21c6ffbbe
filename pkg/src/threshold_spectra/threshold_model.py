"""Threshold graphs as binary sequences, block sequences and bag layouts.

A threshold graph on ``n`` vertices is grown one vertex at a time; bit ``0``
adds an isolated vertex and bit ``1`` a dominating one.  Runs of equal bits
form *blocks* ``0^a1 1^a2 0^a3 ...``; the vertices of block ``i`` form bag
``B_i``.  Bags are numbered from 1, odd bags are union bags (independent
sets) and even bags are join bags (cliques adjacent to every earlier bag).

Vertices are numbered from 0, bag by bag, contiguously within each bag.
"""

from __future__ import annotations

import re
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import (
    EmptyInputError,
    LeadingOneError,
    MalformedTokenError,
    SequenceParseError,
    ZeroCountError,
)

_RAW = re.compile(r"[01]+")
_CARET = re.compile(r"([01])\^\{?(\d+)\}?")


@dataclass(frozen=True)
class BlockSequence:
    """Block sizes ``(a_1, ..., a_r)``; block ``i`` has bit ``(i + 1) % 2``."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(int(a) for a in self.counts)
        if not counts:
            raise EmptyInputError("a threshold graph needs at least one vertex")
        if any(a < 1 for a in counts):
            raise ZeroCountError(f"block sizes must be positive, got {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BlockSequence:
        if not bits:
            raise EmptyInputError("empty binary sequence")
        if bits[0] != 0:
            raise LeadingOneError("the first vertex must be added as isolated (bit 0)")
        counts: list[int] = []
        prev = None
        for b in bits:
            if b not in (0, 1):
                raise MalformedTokenError(f"bit {b!r} is not 0 or 1")
            if b == prev:
                counts[-1] += 1
            else:
                counts.append(1)
                prev = b
        return cls(tuple(counts))

    @property
    def r(self) -> int:
        return len(self.counts)

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def blocks(self) -> list[tuple[int, int]]:
        return [(1 - i % 2, a) for i, a in enumerate(self.counts, start=1)]

    def a(self, i: int) -> int:
        """Size of bag ``i`` (1-based)."""
        return self.counts[i - 1]

    @staticmethod
    def is_join_bag(i: int) -> bool:
        return i % 2 == 0

    @property
    def bits(self) -> list[int]:
        return [bit for bit, a in self.blocks for _ in range(a)]

    @cached_property
    def layout(self) -> BagLayout:
        return BagLayout.of(self)

    def render(self, style: str = "caret") -> str:
        if style == "caret":
            return " ".join(f"{bit}^{a}" for bit, a in self.blocks)
        if style == "raw":
            return "".join(str(b) for b in self.bits)
        raise ValueError(f"unknown render style {style!r}")

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class BagLayout:
    """Mapping between 0-based vertices and 1-based bags."""

    bag_of_vertex: tuple[int, ...]
    offsets: tuple[int, ...]  # offsets[i-1] is the first vertex of bag i; last entry is n

    @classmethod
    def of(cls, seq: BlockSequence) -> BagLayout:
        offsets = [0]
        bags: list[int] = []
        for i, a in enumerate(seq.counts, start=1):
            bags.extend([i] * a)
            offsets.append(offsets[-1] + a)
        return cls(tuple(bags), tuple(offsets))

    def vertex_range(self, i: int) -> range:
        return range(self.offsets[i - 1], self.offsets[i])


def parse_sequence(text: str) -> BlockSequence:
    """Parse a raw bit string or caret notation into a :class:`BlockSequence`.

    Accepted forms include ``"001110011"``, ``"0^2 1^3 0^2 1^2"`` and
    ``"0^3 1 0^2 1"`` (a bare bit means exponent 1).  Adjacent runs of the
    same bit are merged.
    """
    if not isinstance(text, str):
        raise SequenceParseError(f"expected a string, got {type(text).__name__}")
    tokens = text.split()
    if not tokens:
        raise EmptyInputError("empty sequence")
    bits: list[int] = []
    for tok in tokens:
        if _RAW.fullmatch(tok):
            bits.extend(int(c) for c in tok)
            continue
        m = _CARET.fullmatch(tok)
        if m is None:
            raise MalformedTokenError(f"cannot parse token {tok!r}")
        count = int(m.group(2))
        if count == 0:
            raise ZeroCountError(f"block {tok!r} has zero length")
        bits.extend([int(m.group(1))] * count)
    if bits[0] == 1:
        raise LeadingOneError(f"sequence {text!r} starts with 1")
    return BlockSequence.from_bits(bits)


def is_connected(seq: BlockSequence) -> bool:
    return seq.r % 2 == 0 or (seq.r == 1 and seq.counts[0] == 1)


def adjacency(seq: BlockSequence) -> np.ndarray:
    """Boolean ``n x n`` adjacency matrix in layout order."""
    bag = np.asarray(seq.layout.bag_of_vertex)
    join = bag % 2 == 0
    later_or_same = bag[:, None] <= bag[None, :]
    adj = (join[None, :] & later_or_same) | (join[:, None] & later_or_same.T)
    np.fill_diagonal(adj, False)
    return adj


def bfs_connected(adj: np.ndarray) -> bool:
    """Connectivity by breadth-first search; used to cross-check :func:`is_connected`."""
    n = adj.shape[0]
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in np.flatnonzero(adj[u]):
            if v not in seen:
                seen.add(int(v))
                queue.append(int(v))
    return len(seen) == n


def enumerate_threshold_graphs(n_max: int) -> Iterator[BlockSequence]:
    """Yield every binary sequence with leading 0 of each length ``1..n_max``."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    for n in range(1, n_max + 1):
        for mask in range(2 ** (n - 1)):
            bits = [0] + [(mask >> (n - 2 - t)) & 1 for t in range(n - 1)]
            yield BlockSequence.from_bits(bits)
