"""Complexes with a complete (d-1)-skeleton and a chosen set of d-facets."""

from __future__ import annotations

import os
import warnings
from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .combinatorics import (
    Simplex,
    binomial,
    binomial_table,
    check_index_capacity,
    colex_enumerate,
    colex_rank,
    colex_rank_array,
    colex_unrank_array,
)
from .errors import CapacityError, DimensionError, InvalidSimplexError

__all__ = [
    "Complex",
    "DegreeProfile",
    "DuplicateFacetWarning",
    "new_complex",
    "degree",
    "degree_profile",
    "facet_neighbors",
    "connected_components",
    "metric_capacity",
    "from_ranks",
    "component_labels",
]

CAP_ENV = "MOORE_COMPLEX_CAP"
DEFAULT_CAP = 200_000


class DuplicateFacetWarning(UserWarning):
    pass


def metric_capacity() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise CapacityError(f"{CAP_ENV}={raw!r} is not an integer") from None


def _check_dimensions(n: int, d: int) -> None:
    if d < 1:
        raise DimensionError(f"dimension d={d} must be at least 1")
    if d + 1 > n:
        raise DimensionError(f"need d+1 <= n, got n={n}, d={d}")


class Complex:
    """A d-complex over ``1..n``.

    Every ``d``-subset of the vertices is present (the skeleton is complete);
    only the facets, ``(d+1)``-subsets, are chosen. Facets are stored as a
    sorted array of colex ranks. Instances are immutable.
    """

    def __init__(self, n: int, d: int, facet_ranks: np.ndarray, duplicates_removed: int = 0):
        self.n = int(n)
        self.d = int(d)
        ranks = np.unique(np.asarray(facet_ranks, dtype=np.int64))
        ranks.setflags(write=False)
        self.facet_ranks = ranks
        self.duplicates_removed = duplicates_removed

    @property
    def N(self) -> int:
        """Number of (d-1)-simplices, the points of the metric space."""
        return binomial(self.n, self.d)

    @property
    def num_facets(self) -> int:
        return int(self.facet_ranks.shape[0])

    @property
    def facets(self) -> list[Simplex]:
        """Facets in lexicographic order of their sorted vertex lists."""
        rows = sorted(map(tuple, self.facet_vertices.tolist()))
        return [Simplex(*row) for row in rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Complex):
            return NotImplemented
        return (
            self.n == other.n
            and self.d == other.d
            and np.array_equal(self.facet_ranks, other.facet_ranks)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Complex(n={self.n}, d={self.d}, facets={self.num_facets}, N={self.N})"

    # -- lookup --------------------------------------------------------------

    def simplex(self, vertices: Iterable[int]) -> Simplex:
        """Canonicalize and validate a (d-1)-simplex for this complex."""
        return Simplex.of(vertices, self.n).validate(self.n, self.d - 1)

    def rank(self, s: Iterable[int]) -> int:
        return colex_rank(self.simplex(s))

    def simplex_at(self, rank: int) -> Simplex:
        return Simplex(*self.simplex_vertices[rank].tolist())

    def has_facet(self, t: Iterable[int]) -> bool:
        r = colex_rank(Simplex.of(t))
        i = int(np.searchsorted(self.facet_ranks, r))
        return i < self.num_facets and int(self.facet_ranks[i]) == r

    # -- lazily built tables -------------------------------------------------

    @cached_property
    def _table(self) -> np.ndarray:
        return binomial_table(self.n, self.d + 1)

    @cached_property
    def simplex_vertices(self) -> np.ndarray:
        """``(N, d)`` array; row ``r`` holds the (d-1)-simplex of rank ``r``."""
        out = colex_enumerate(self.n, self.d)
        out.setflags(write=False)
        return out

    @cached_property
    def facet_vertices(self) -> np.ndarray:
        out = colex_unrank_array(self.facet_ranks, self.d + 1, self._table)
        out.setflags(write=False)
        return out

    @cached_property
    def facet_faces(self) -> np.ndarray:
        """``(M, d+1)`` ranks of the boundary (d-1)-simplices of each facet."""
        fv = self.facet_vertices
        m = self.d + 1
        out = np.empty((fv.shape[0], m), dtype=np.int64)
        for j in range(m):
            out[:, j] = colex_rank_array(np.delete(fv, j, axis=1), self._table)
        out.setflags(write=False)
        return out

    @cached_property
    def incidence(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR map simplex rank -> facet row indices, as ``(indptr, facet_ids)``."""
        flat = self.facet_faces.ravel()
        order = np.argsort(flat, kind="stable")
        facet_ids = (order // (self.d + 1)).astype(np.int64)
        counts = np.bincount(flat, minlength=self.N)
        indptr = np.zeros(self.N + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return indptr, facet_ids

    @cached_property
    def degrees(self) -> np.ndarray:
        out = np.bincount(self.facet_faces.ravel(), minlength=self.N).astype(np.int64)
        out.setflags(write=False)
        return out


def new_complex(
    n: int,
    d: int,
    facets: Iterable[Iterable[int]],
    *,
    cap: int | None = None,
) -> Complex:
    """Build a validated complex, deduplicating repeated facets with a warning."""
    _check_dimensions(n, d)
    limit = metric_capacity() if cap is None else cap
    if binomial(n, d) > limit:
        raise CapacityError(
            f"N = C({n},{d}) = {binomial(n, d)} exceeds the capacity guard {limit}"
        )
    check_index_capacity(binomial(n, d + 1), f"C({n},{d + 1})")
    ranks = []
    for f in facets:
        s = Simplex.of(f, n)
        if s.dim != d:
            raise InvalidSimplexError(f"facet {s!r} is not a {d}-simplex")
        ranks.append(colex_rank(s))
    unique = set(ranks)
    dupes = len(ranks) - len(unique)
    if dupes:
        warnings.warn(
            f"{dupes} duplicate facet(s) removed", DuplicateFacetWarning, stacklevel=2
        )
    return Complex(n, d, np.fromiter(unique, dtype=np.int64, count=len(unique)), dupes)


def from_ranks(n: int, d: int, ranks: Iterable[int] | np.ndarray, *, cap: int | None = None) -> Complex:
    """Build a complex straight from facet colex ranks (used by generators)."""
    _check_dimensions(n, d)
    limit = metric_capacity() if cap is None else cap
    if binomial(n, d) > limit:
        raise CapacityError(
            f"N = C({n},{d}) = {binomial(n, d)} exceeds the capacity guard {limit}"
        )
    total = check_index_capacity(binomial(n, d + 1), f"C({n},{d + 1})")
    arr = np.asarray(list(ranks) if not isinstance(ranks, np.ndarray) else ranks, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= total):
        raise InvalidSimplexError("facet rank out of range")
    return Complex(n, d, arr)


# -- degrees -----------------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    degrees: np.ndarray = field(repr=False)
    min_degree: int
    max_degree: int
    histogram: dict[int, int]
    regular_r: int | None

    @property
    def is_regular(self) -> bool:
        return self.regular_r is not None

    def to_dict(self) -> dict:
        return {
            "min": self.min_degree,
            "max": self.max_degree,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "regular_r": self.regular_r,
        }


def degree(X: Complex, sigma: Iterable[int]) -> int:
    s = X.simplex(sigma)
    members = set(s)
    return sum(
        X.has_facet(s + (v,)) for v in range(1, X.n + 1) if v not in members
    )


def degree_profile(X: Complex) -> DegreeProfile:
    degs = X.degrees
    lo, hi = int(degs.min()), int(degs.max())
    hist = Counter(degs.tolist())
    return DegreeProfile(
        degrees=degs,
        min_degree=lo,
        max_degree=hi,
        histogram=dict(sorted(hist.items())),
        regular_r=lo if lo == hi else None,
    )


def facet_neighbors(X: Complex, sigma: Iterable[int]) -> set[Simplex]:
    """(d-1)-simplices sharing a facet with ``sigma``.

    For every extension vertex ``v`` with ``sigma + v`` a facet, swapping any
    one vertex of ``sigma`` for ``v`` gives a neighbor.
    """
    s = X.simplex(sigma)
    out: set[Simplex] = set()
    members = set(s)
    for v in range(1, X.n + 1):
        if v in members or not X.has_facet(s + (v,)):
            continue
        for u in s:
            out.add(Simplex.of((members - {u}) | {v}))
    return out


def component_labels(X: Complex) -> tuple[int, np.ndarray]:
    """Label every (d-1)-simplex by connected component of facet adjacency."""
    m = X.d + 1
    faces = X.facet_faces
    if faces.shape[0] == 0:
        return X.N, np.arange(X.N, dtype=np.int64)
    # simplex -- facet bipartite graph; facets are nodes N..N+M-1
    rows = faces.ravel()
    cols = X.N + np.repeat(np.arange(faces.shape[0], dtype=np.int64), m)
    size = X.N + faces.shape[0]
    graph = coo_matrix((np.ones(rows.shape[0], dtype=np.int8), (rows, cols)), shape=(size, size))
    _, labels = _cc(graph, directed=False)
    labels = labels[: X.N]
    # relabel so components are numbered by their smallest simplex rank
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    order = np.argsort(np.argsort(first))
    return int(first.shape[0]), order[inverse].astype(np.int64)


def connected_components(X: Complex) -> list[np.ndarray]:
    """Partition of all simplex ranks, each part sorted, parts ordered by minimum."""
    count, labels = component_labels(X)
    order = np.argsort(labels, kind="stable")
    splits = np.cumsum(np.bincount(labels, minlength=count))[:-1]
    return np.split(order, splits)
