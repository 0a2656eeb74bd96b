"""Facet-path metric on (d-1)-simplices.

Two (d-1)-simplices are one step apart when some facet contains both.
Single-source distances come from layered breadth-first search that expands
frontier simplices through the facets containing them. The all-pairs oracle
builds an explicit adjacency matrix and relaxes it with Floyd-Warshall, so
the two routes share no traversal code.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .complex import Complex, component_labels
from .errors import CapacityError

__all__ = [
    "UNREACHABLE",
    "DistanceMap",
    "MetricReport",
    "bfs_distances",
    "distance",
    "eccentricity",
    "all_eccentricities",
    "diameter",
    "ball_growth",
    "layer_counts",
    "metric_report",
    "all_pairs_oracle",
    "ORACLE_CAP",
]

UNREACHABLE = -1
ORACLE_CAP = 512


@dataclass(frozen=True)
class DistanceMap:
    source: int
    dist: np.ndarray = field(repr=False)

    def __getitem__(self, rank: int) -> int | None:
        v = int(self.dist[rank])
        return None if v == UNREACHABLE else v

    @property
    def reachable(self) -> np.ndarray:
        return self.dist != UNREACHABLE

    @property
    def all_reachable(self) -> bool:
        return bool(self.reachable.all())


def _source_rank(X: Complex, source: int | Iterable[int]) -> int:
    if isinstance(source, (int, np.integer)):
        if not 0 <= source < X.N:
            raise IndexError(f"source rank {source} outside [0, {X.N})")
        return int(source)
    return X.rank(source)


def _bfs(X: Complex, src: int) -> np.ndarray:
    indptr, facet_ids = X.incidence
    faces = X.facet_faces
    dist = np.full(X.N, UNREACHABLE, dtype=np.int64)
    expanded = np.zeros(faces.shape[0], dtype=bool)
    dist[src] = 0
    frontier = np.array([src], dtype=np.int64)
    level = 0
    while frontier.size:
        starts = indptr[frontier]
        counts = indptr[frontier + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        # gather the CSR slices of every frontier simplex in one shot
        offsets = np.repeat(starts - np.cumsum(counts) + counts, counts)
        incident = facet_ids[offsets + np.arange(total)]
        incident = incident[~expanded[incident]]
        if incident.size == 0:
            break
        incident = np.unique(incident)
        expanded[incident] = True
        candidates = faces[incident].ravel()
        candidates = np.unique(candidates[dist[candidates] == UNREACHABLE])
        level += 1
        dist[candidates] = level
        frontier = candidates
    return dist


def bfs_distances(X: Complex, source: int | Iterable[int]) -> DistanceMap:
    """Shortest facet-path lengths from ``source`` (a rank or a vertex list)."""
    src = _source_rank(X, source)
    dist = _bfs(X, src)
    dist.setflags(write=False)
    return DistanceMap(src, dist)


def distance(X: Complex, a: int | Iterable[int], b: int | Iterable[int]) -> int | None:
    return bfs_distances(X, a)[_source_rank(X, b)]


def eccentricity(X: Complex, sigma: int | Iterable[int]) -> int | None:
    """Largest distance from ``sigma``, or ``None`` when some simplex is unreachable."""
    dm = bfs_distances(X, sigma)
    if not dm.all_reachable:
        return None
    return int(dm.dist.max())


def layer_counts(dist: np.ndarray) -> list[int]:
    finite = dist[dist != UNREACHABLE]
    return np.bincount(finite).tolist()


def ball_growth(X: Complex, source: int | Iterable[int]) -> list[int]:
    """Number of simplices at exact distance 0, 1, 2, ... from ``source``."""
    return layer_counts(bfs_distances(X, source).dist)


def _ecc_chunk(X: Complex, sources: Sequence[int]) -> list[tuple[int, bool]]:
    out = []
    for s in sources:
        dist = _bfs(X, s)
        out.append((int(dist.max()), bool((dist != UNREACHABLE).all())))
    return out


def all_eccentricities(X: Complex, workers: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Per-source eccentricity within its own component, plus a reach-all flag.

    Returns ``(ecc, full)`` where ``ecc[s]`` is the largest finite distance
    from ``s`` and ``full[s]`` says whether every simplex was reached. Output
    order never depends on ``workers``.
    """
    sources = list(range(X.N))
    if not workers or workers <= 1 or X.N < 64:
        results = _ecc_chunk(X, sources)
    else:
        X.incidence  # build shared tables before fanning out
        size = -(-X.N // (workers * 4))
        chunks = [sources[i : i + size] for i in range(0, X.N, size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(lambda c: _ecc_chunk(X, c), chunks) for r in part]
    ecc = np.fromiter((e for e, _ in results), dtype=np.int64, count=X.N)
    full = np.fromiter((f for _, f in results), dtype=bool, count=X.N)
    return ecc, full


def diameter(X: Complex, workers: int | None = None) -> int | None:
    """Maximum eccentricity, ``None`` if the complex is disconnected."""
    count, _ = component_labels(X)
    if count != 1:
        return None
    ecc, _ = all_eccentricities(X, workers)
    return int(ecc.max())


@dataclass
class MetricReport:
    N: int
    eccentricities: list[int | None]
    diameter: int | None
    undefined_reason: str | None
    component_sizes: list[int]
    component_diameters: list[int]
    component_eccentricities: np.ndarray = field(repr=False)
    source: int = 0
    layer_profile: list[int] = field(default_factory=list)

    @property
    def connected(self) -> bool:
        return len(self.component_sizes) == 1

    def eccentricity_summary(self) -> dict[str, int | None]:
        finite = [e for e in self.eccentricities if e is not None]
        if not finite:
            return {"min": None, "max": None}
        return {"min": min(finite), "max": max(finite)}


def metric_report(X: Complex, source: int | Iterable[int] = 0, workers: int | None = None) -> MetricReport:
    src = _source_rank(X, source)
    count, labels = component_labels(X)
    ecc, full = all_eccentricities(X, workers)
    sizes = np.bincount(labels, minlength=count)
    comp_diam = np.zeros(count, dtype=np.int64)
    np.maximum.at(comp_diam, labels, ecc)
    connected = count == 1
    return MetricReport(
        N=X.N,
        eccentricities=[int(e) if f else None for e, f in zip(ecc, full)],
        diameter=int(ecc.max()) if connected else None,
        undefined_reason=None if connected else "disconnected",
        component_sizes=sizes.tolist(),
        component_diameters=comp_diam.tolist(),
        component_eccentricities=ecc,
        source=src,
        layer_profile=ball_growth(X, src),
    )


def all_pairs_oracle(X: Complex, cap: int = ORACLE_CAP) -> np.ndarray:
    """Distance matrix by explicit adjacency and Floyd-Warshall relaxation.

    Indexing follows colex rank. Unreachable pairs hold ``UNREACHABLE``.
    """
    N = X.N
    if N > cap:
        raise CapacityError(f"oracle limited to N <= {cap}, got N = {N}")
    # colex order: sort d-subsets by their reversed vertex tuple
    subsets = sorted(combinations(range(1, X.n + 1), X.d), key=lambda t: t[::-1])
    index = {t: i for i, t in enumerate(subsets)}
    inf = np.iinfo(np.int64).max // 4
    dist = np.full((N, N), inf, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    for facet in X.facets:
        boundary = [index[t] for t in combinations(facet, X.d)]
        for a, b in combinations(boundary, 2):
            dist[a, b] = dist[b, a] = 1
    for k in range(N):
        np.minimum(dist, dist[:, k : k + 1] + dist[k : k + 1, :], out=dist)
    dist[dist >= inf] = UNREACHABLE
    return dist
