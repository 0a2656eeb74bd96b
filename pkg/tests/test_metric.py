import random

import networkx as nx
import numpy as np
import pytest

from moore_complex.bounds import moore_layer_bound
from moore_complex.complex import degree_profile, new_complex
from moore_complex.errors import CapacityError, InvalidSimplexError
from moore_complex.generators import complete, named_graph, named_graph_edges
from moore_complex.metric import (
    UNREACHABLE,
    all_eccentricities,
    all_pairs_oracle,
    ball_growth,
    bfs_distances,
    diameter,
    distance,
    eccentricity,
    metric_report,
)


def bfs_matrix(X):
    return np.stack([bfs_distances(X, s).dist for s in range(X.N)])


def johnson_matrix(X):
    sets = [set(X.simplex_at(r)) for r in range(X.N)]
    return np.array([[X.d - len(a & b) for b in sets] for a in sets])


def test_bfs_examples():
    X = complete(6, 2)
    dm = bfs_distances(X, [1, 2])
    assert dm[X.rank([3, 4])] == 2
    assert dm[X.rank([1, 3])] == 1
    assert dm[X.rank([1, 2])] == 0

    Y = new_complex(4, 2, [[1, 2, 3]])
    assert bfs_distances(Y, [1, 2])[Y.rank([1, 4])] is None
    assert distance(Y, [1, 2], [1, 4]) is None

    with pytest.raises(InvalidSimplexError):
        bfs_distances(X, [1, 7])


def test_distance_map_invariants(corpus):
    for label, X in corpus:
        nbr = all_pairs_oracle(X) == 1
        for s in range(0, X.N, max(1, X.N // 7)):
            dm = bfs_distances(X, s)
            assert dm.dist[s] == 0
            for t, v in enumerate(dm.dist):
                if v > 0:
                    assert (dm.dist[nbr[t]] == v - 1).any(), label


def test_eccentricity_examples():
    X = complete(5, 2)
    assert {eccentricity(X, r) for r in range(X.N)} == {2}
    assert eccentricity(complete(3, 2), [1, 2]) == 1
    assert eccentricity(new_complex(4, 2, [[1, 2, 3]]), [1, 2]) is None


def test_diameter_examples():
    assert diameter(complete(5, 2)) == 2
    assert diameter(named_graph("petersen")) == 2
    assert diameter(complete(6, 3)) == 3
    assert diameter(new_complex(4, 2, [[1, 2, 3]])) is None


def test_ball_growth_examples():
    assert ball_growth(complete(4, 2), [1, 2]) == [1, 4, 1]
    assert ball_growth(complete(5, 2), [1, 2]) == [1, 6, 3]
    assert ball_growth(new_complex(4, 2, [[1, 2, 3]]), [1, 4]) == [1]


def test_oracle_examples():
    X = complete(5, 2)
    assert np.array_equal(all_pairs_oracle(X), johnson_matrix(X))

    Y = new_complex(4, 2, [[1, 2, 3]])
    D = all_pairs_oracle(Y)
    block = [Y.rank(s) for s in ([1, 2], [1, 3], [2, 3])]
    expected = np.full((6, 6), UNREACHABLE)
    np.fill_diagonal(expected, 0)
    for a in block:
        for b in block:
            expected[a, b] = 0 if a == b else 1
    assert np.array_equal(D, expected)

    E = all_pairs_oracle(new_complex(4, 2, []))
    assert np.array_equal(E, np.where(np.eye(6, dtype=bool), 0, UNREACHABLE))


def test_oracle_capacity():
    with pytest.raises(CapacityError):
        all_pairs_oracle(complete(12, 5))
    with pytest.raises(CapacityError):
        all_pairs_oracle(complete(5, 2), cap=9)


def test_bfs_matches_oracle(corpus):
    for label, X in corpus:
        assert np.array_equal(bfs_matrix(X), all_pairs_oracle(X)), label


def test_symmetry_and_triangle_inequality(corpus):
    for label, X in corpus:
        if X.N > 40:
            continue
        D = bfs_matrix(X)
        assert np.array_equal(D, D.T), label
        fin = D != UNREACHABLE
        for j in range(X.N):
            via = D[:, j : j + 1] + D[j : j + 1, :]
            ok = fin[:, j : j + 1] & fin[j : j + 1, :]
            assert (D[ok] <= via[ok]).all(), label
            assert fin[ok].all(), label


def test_triangle_inequality_sampled_large():
    X = complete(12, 3)
    rng = random.Random(7)
    rows = {}
    for _ in range(300):
        a, b, c = (rng.randrange(X.N) for _ in range(3))
        for s in (a, b):
            if s not in rows:
                rows[s] = bfs_distances(X, s).dist
        assert rows[a][c] <= rows[a][b] + rows[b][c]


def test_johnson_distance_law():
    for n in range(2, 10):
        for d in range(1, 5):
            if d + 1 > n:
                continue
            X = complete(n, d)
            assert np.array_equal(bfs_matrix(X), johnson_matrix(X)), (n, d)
            assert diameter(X) == min(d, n - d)


@pytest.mark.parametrize(
    "name", ["petersen", "cycle(5)", "cycle(6)", "cycle(9)", "circular_ladder(16)", "complete_graph(4)"]
)
def test_graph_metric_matches_networkx(name):
    n, edges = named_graph_edges(name)
    G = nx.Graph(edges)
    X = named_graph(name)
    for u, lengths in nx.all_pairs_shortest_path_length(G):
        dm = bfs_distances(X, [u])
        for v, length in lengths.items():
            assert dm[X.rank([v])] == length
    assert diameter(X) == nx.diameter(G)


def test_layer_dominance_on_regular_corpus(corpus):
    checked = 0
    for label, X in corpus:
        r = degree_profile(X).regular_r
        if r is None:
            continue
        for s in range(X.N):
            for i, count in enumerate(ball_growth(X, s)):
                assert count <= moore_layer_bound(r, X.d, i), (label, s, i)
        checked += 1
    assert checked >= 30


def test_metric_report_disconnected():
    X = new_complex(4, 2, [[1, 2, 3]])
    rep = metric_report(X)
    assert rep.diameter is None and rep.undefined_reason == "disconnected"
    assert rep.eccentricities == [None] * 6
    assert sorted(rep.component_sizes) == [1, 1, 1, 3]
    assert sorted(rep.component_diameters) == [0, 0, 0, 1]
    assert sum(rep.layer_profile) == 3


def test_metric_report_connected():
    rep = metric_report(complete(6, 2), source=[3, 4])
    assert rep.connected and rep.diameter == 2
    assert rep.layer_profile == [1, 8, 6]
    assert sum(rep.layer_profile) == rep.N == 15
    assert rep.eccentricity_summary() == {"min": 2, "max": 2}


def test_parallel_sweep_is_deterministic():
    X = named_graph("circular_ladder(40)")
    serial = all_eccentricities(X)
    for workers in (2, 3, 8):
        par = all_eccentricities(X, workers=workers)
        assert np.array_equal(serial[0], par[0]) and np.array_equal(serial[1], par[1])
