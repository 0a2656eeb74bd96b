"""Exact subset combinatorics on 1-based vertex sets.

Ranks follow the colexicographic combinatorial number system: a sorted
subset ``s_1 < ... < s_m`` maps to ``sum(C(s_i - 1, i))``. The rank does not
depend on ``n``, only on the subset.
"""

from __future__ import annotations

from collections.abc import Iterable
from math import comb

import numpy as np

from .errors import CapacityError, InvalidSimplexError, RankRangeError

__all__ = [
    "Simplex",
    "binomial",
    "colex_rank",
    "colex_unrank",
    "faces",
    "binomial_table",
    "colex_rank_array",
    "colex_enumerate",
    "colex_unrank_array",
    "check_index_capacity",
]

INDEX_LIMIT = np.iinfo(np.int64).max


class Simplex(tuple):
    """A strictly increasing tuple of positive vertex labels.

    ``Simplex(3, 1, 2)`` is rejected; use :meth:`of` to canonicalize
    arbitrary input.
    """

    __slots__ = ()

    def __new__(cls, *vertices: int) -> Simplex:
        if len(vertices) == 1 and not isinstance(vertices[0], (int, np.integer)):
            vertices = tuple(vertices[0])
        vs = tuple(int(v) for v in vertices)
        if not vs:
            raise InvalidSimplexError("a simplex needs at least one vertex")
        if vs[0] < 1:
            raise InvalidSimplexError(f"vertex {vs[0]} is not a positive label")
        for a, b in zip(vs, vs[1:]):
            if a >= b:
                raise InvalidSimplexError(f"vertices must be strictly increasing: {vs}")
        return super().__new__(cls, vs)

    @classmethod
    def of(cls, vertices: Iterable[int], n: int | None = None) -> Simplex:
        """Sort ``vertices`` and validate them against ``1..n``."""
        vs = sorted(int(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise InvalidSimplexError(f"repeated vertex in {vs}")
        s = cls(*vs)
        if n is not None:
            s.validate(n)
        return s

    @property
    def dim(self) -> int:
        return len(self) - 1

    def validate(self, n: int, dim: int | None = None) -> Simplex:
        if self[-1] > n:
            raise InvalidSimplexError(f"vertex {self[-1]} outside 1..{n}")
        if dim is not None and self.dim != dim:
            raise InvalidSimplexError(
                f"expected a {dim}-simplex, got {self.dim}-simplex {tuple(self)}"
            )
        return self

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return comb(n, k)


def check_index_capacity(count: int, what: str = "index space") -> int:
    if count > INDEX_LIMIT:
        raise CapacityError(f"{what} of size {count} does not fit a 64-bit index")
    return count


def colex_rank(s: Simplex | Iterable[int], n: int | None = None) -> int:
    if not isinstance(s, Simplex):
        s = Simplex(*s)
    if n is not None:
        s.validate(n)
    return sum(comb(v - 1, i) for i, v in enumerate(s, start=1))


def colex_unrank(r: int, k: int, n: int) -> Simplex:
    """Return the ``k``-simplex over ``1..n`` with colex rank ``r``."""
    m = k + 1
    total = comb(n, m)
    if k < 0 or not 0 <= r < total:
        raise RankRangeError(f"rank {r} outside [0, C({n},{m}) = {total})")
    out = [0] * m
    top = n
    for i in range(m, 0, -1):
        # largest c with C(c, i) <= r; c ranges below the previous pick
        c = top - 1
        while comb(c, i) > r:
            c -= 1
        out[i - 1] = c + 1
        r -= comb(c, i)
        top = c
    return Simplex(*out)


def faces(s: Simplex) -> list[Simplex]:
    """Codimension-one faces, ordered by which vertex is dropped (last first).

    The ordering ``{1,2,3} -> [{1,2}, {1,3}, {2,3}]`` is colex.
    """
    if len(s) <= 1:
        return []
    return [Simplex(*(s[:i] + s[i + 1 :])) for i in range(len(s) - 1, -1, -1)]


# -- vectorized helpers ------------------------------------------------------


def binomial_table(n: int, m: int) -> np.ndarray:
    """``T[a, i] = C(a, i)`` for ``0 <= a <= n``, ``0 <= i <= m`` as int64."""
    check_index_capacity(comb(n, min(m, n // 2)), "binomial table")
    table = np.zeros((n + 1, m + 1), dtype=np.int64)
    for a in range(n + 1):
        for i in range(min(a, m) + 1):
            table[a, i] = comb(a, i)
    return table


def colex_rank_array(vertices: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Row-wise colex ranks of a ``(rows, m)`` array of sorted 1-based subsets."""
    vertices = np.asarray(vertices, dtype=np.int64)
    if vertices.ndim != 2:
        raise ValueError("expected a 2-d array of subsets")
    positions = np.arange(1, vertices.shape[1] + 1)
    return table[vertices - 1, positions].sum(axis=1)


def colex_enumerate(n: int, m: int) -> np.ndarray:
    """All ``m``-subsets of ``1..n`` as rows, row ``r`` having colex rank ``r``.

    Subsets with largest vertex ``top`` occupy one contiguous block of
    ``C(top-1, m-1)`` ranks, so we fill block by block.
    """
    count = check_index_capacity(comb(n, m), f"C({n},{m})")
    out = np.empty((count, m), dtype=np.int64)
    if m == 0:
        return out
    row = 0
    for top in range(m, n + 1):
        block = comb(top - 1, m - 1)
        if m == 1:
            out[row, 0] = top
        else:
            out[row : row + block, : m - 1] = colex_enumerate(top - 1, m - 1)
            out[row : row + block, m - 1] = top
        row += block
    return out


def colex_unrank_array(ranks: np.ndarray, m: int, table: np.ndarray) -> np.ndarray:
    """Vectorized inverse of :func:`colex_rank_array` for ``m``-subsets."""
    r = np.array(ranks, dtype=np.int64, copy=True)
    out = np.empty((r.shape[0], m), dtype=np.int64)
    for i in range(m, 0, -1):
        # column i of the table is non-decreasing in its first index
        c = np.searchsorted(table[:, i], r, side="right") - 1
        out[:, i - 1] = c + 1
        r -= table[c, i]
    return out
