"""Instance families: complete, random, imported graphs, and near-regular.

Randomness comes from ``numpy.random.Generator`` with the PCG64 bit
generator, seeded explicitly, so a seed fixes the output.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from .combinatorics import Simplex, binomial, colex_rank, colex_unrank, faces
from .complex import Complex, DegreeProfile, degree_profile, from_ranks, new_complex
from .errors import InvalidEdgeError, ParameterError

__all__ = [
    "GenSpec",
    "complete",
    "random_uniform",
    "graph_import",
    "named_graph",
    "named_graph_edges",
    "near_regular",
    "generate",
]


def _rng(seed: int | None) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def complete(n: int, d: int) -> Complex:
    return from_ranks(n, d, np.arange(binomial(n, d + 1), dtype=np.int64))


def random_uniform(n: int, d: int, p: float, seed: int | None = None) -> Complex:
    """Keep each possible facet independently with probability ``p``.

    Facets are visited in colex rank order, one uniform draw each.
    """
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"probability p={p} outside [0, 1]")
    total = binomial(n, d + 1)
    keep = _rng(seed).random(total) < p
    return from_ranks(n, d, np.flatnonzero(keep))


def graph_import(edges: Iterable[Iterable[int]], n: int) -> Complex:
    """Simple graph on ``1..n`` as a 1-dimensional complex (edges are facets)."""
    checked = []
    for e in edges:
        u, v = (int(x) for x in e)
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise InvalidEdgeError(f"edge ({u}, {v}) outside 1..{n}")
        checked.append((u, v))
    return new_complex(n, 1, checked)


def named_graph_edges(name: str, m: int | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Vertex count and edge list of a named graph.

    ``name`` is one of ``cycle``, ``circular_ladder``, ``petersen``,
    ``complete_graph``; the size may be given inline as ``"cycle(6)"``.
    """
    match = re.fullmatch(r"\s*([a-z_]+)\s*(?:\(\s*(\d+)\s*\))?\s*", name)
    if not match:
        raise ParameterError(f"cannot parse graph name {name!r}")
    kind, inline = match.group(1), match.group(2)
    if inline is not None:
        m = int(inline)
    if kind == "petersen":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(5 + i, 5 + (i + 1) % 5 + 1) for i in range(1, 6)]
        return 10, outer + spokes + inner
    if kind not in {"cycle", "circular_ladder", "complete_graph"}:
        raise ParameterError(f"unknown graph {kind!r}")
    if m is None:
        raise ParameterError(f"graph {kind!r} needs a size")
    if kind == "cycle":
        if m < 3:
            raise ParameterError("cycle needs m >= 3")
        return m, [(i, i % m + 1) for i in range(1, m + 1)]
    if kind == "circular_ladder":
        if m < 3:
            raise ParameterError("circular_ladder needs m >= 3")
        outer = [(i, i % m + 1) for i in range(1, m + 1)]
        inner = [(m + i, m + i % m + 1) for i in range(1, m + 1)]
        rungs = [(i, m + i) for i in range(1, m + 1)]
        return 2 * m, outer + inner + rungs
    if m < 2:
        raise ParameterError("complete_graph needs m >= 2")
    return m, [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


def named_graph(name: str, m: int | None = None) -> Complex:
    n, edges = named_graph_edges(name, m)
    return graph_import(edges, n)


class _DegreeSearch:
    """Facet-swap search state for :func:`near_regular`."""

    def __init__(self, n: int, d: int, r: int, rng: np.random.Generator, initial: np.ndarray):
        self.n, self.d, self.r, self.rng = n, d, r, rng
        self.N = binomial(n, d)
        self.present = np.zeros(binomial(n, d + 1), dtype=bool)
        self.present[initial] = True
        self.deg = np.zeros(self.N, dtype=np.int64)
        for t in initial:
            self.deg[self._faces(int(t))] += 1

    def _faces(self, t: int) -> list[int]:
        return [colex_rank(f) for f in faces(colex_unrank(t, self.d, self.n))]

    def _cofaces(self, s: int) -> list[int]:
        sigma = colex_unrank(s, self.d - 1, self.n)
        members = set(sigma)
        return [
            colex_rank(Simplex.of(members | {v})) for v in range(1, self.n + 1) if v not in members
        ]

    def objective(self) -> int:
        return int(np.abs(self.deg - self.r).sum())

    def delta(self, removed: list[int], added: list[int]) -> int:
        change: dict[int, int] = {}
        for t in removed:
            for f in self._faces(t):
                change[f] = change.get(f, 0) - 1
        for t in added:
            for f in self._faces(t):
                change[f] = change.get(f, 0) + 1
        r = self.r
        return sum(
            abs(int(self.deg[f]) + c - r) - abs(int(self.deg[f]) - r) for f, c in change.items()
        )

    def apply(self, removed: list[int], added: list[int]) -> None:
        for t in removed:
            self.present[t] = False
            self.deg[self._faces(t)] -= 1
        for t in added:
            self.present[t] = True
            self.deg[self._faces(t)] += 1

    def _best(self, candidates: list[int], remove: bool) -> int | None:
        if not candidates:
            return None
        scores = [self.delta([t], []) if remove else self.delta([], [t]) for t in candidates]
        low = min(scores)
        ties = [t for t, s in zip(candidates, scores) if s == low]
        return ties[int(self.rng.integers(len(ties)))]

    def step(self) -> bool:
        """Try one move; return whether it was accepted."""
        over = np.flatnonzero(self.deg > self.r)
        under = np.flatnonzero(self.deg < self.r)
        removed: list[int] = []
        added: list[int] = []
        if over.size:
            s = int(over[self.rng.integers(over.size)])
            t = self._best([t for t in self._cofaces(s) if self.present[t]], remove=True)
            if t is not None:
                removed.append(t)
        if under.size:
            s = int(under[self.rng.integers(under.size)])
            t = self._best(
                [t for t in self._cofaces(s) if not self.present[t] and t not in removed],
                remove=False,
            )
            if t is not None:
                added.append(t)
        if not removed and not added:
            return False
        change = self.delta(removed, added)
        # a lone insertion or deletion shifts the facet count, so demand progress
        if change > 0 or (change == 0 and not (removed and added)):
            return False
        self.apply(removed, added)
        return True


def near_regular(
    n: int,
    d: int,
    r: int,
    seed: int | None = None,
    max_iters: int = 1000,
    trace: list[int] | None = None,
) -> tuple[Complex, DegreeProfile]:
    """Best-effort r-regular complex by greedy facet swaps.

    Starts from ``ceil(r * C(n, d) / (d + 1))`` random facets and swaps one
    facet incident to an over-full simplex for one incident to an under-full
    simplex whenever that does not increase ``sum |deg - r|``. Always check
    ``regular_r`` on the returned profile: it may not reach ``r``. If given,
    ``trace`` receives the objective before the first and after every
    accepted move.
    """
    if r < 1:
        raise ParameterError("r must be at least 1")
    if max_iters < 0:
        raise ParameterError("max_iters must be non-negative")
    rng = _rng(seed)
    total = binomial(n, d + 1)
    m = min(total, math.ceil(r * binomial(n, d) / (d + 1)))
    from_ranks(n, d, [])  # dimension and capacity checks before allocating
    initial = np.sort(rng.choice(total, size=m, replace=False)).astype(np.int64)
    search = _DegreeSearch(n, d, r, rng, initial)
    if trace is not None:
        trace.append(search.objective())
    for _ in range(max_iters):
        if search.objective() == 0:
            break
        if search.step() and trace is not None:
            trace.append(search.objective())
    X = from_ranks(n, d, np.flatnonzero(search.present))
    return X, degree_profile(X)


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int | None = None
    d: int | None = None
    p: float | None = None
    r: int | None = None
    seed: int | None = None
    max_iters: int | None = None
    name: str | None = None
    m: int | None = None

    def to_dict(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if v is not None}


def generate(spec: GenSpec) -> Complex:
    kind = spec.kind.replace("-", "_")
    if kind == "complete":
        return complete(spec.n, spec.d)
    if kind in {"random", "random_uniform"}:
        return random_uniform(spec.n, spec.d, spec.p if spec.p is not None else 0.5, spec.seed)
    if kind == "named":
        if spec.name is None:
            raise ParameterError("named graphs need a name")
        return named_graph(spec.name, spec.m)
    if kind == "near_regular":
        if spec.r is None:
            raise ParameterError("near_regular needs r")
        iters = spec.max_iters if spec.max_iters is not None else 10 * spec.n
        return near_regular(spec.n, spec.d, spec.r, spec.seed, iters)[0]
    raise ParameterError(f"unknown generator kind {spec.kind!r}")
