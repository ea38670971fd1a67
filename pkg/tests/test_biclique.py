import numpy as np
import pytest

from conftest import naive_maximal_bicliques
from hmrnet.biclique import (
    Biclique,
    BicliqueOverflowError,
    enumerate_maximal_bicliques,
    validate_biclique,
)
from hmrnet.graph import build_hetero


class TestEnumerate:
    def test_complete_bipartite_is_one_biclique(self):
        h = build_hetero([(x, y) for x in range(2) for y in range(2)])
        assert enumerate_maximal_bicliques(h, 1, 1) == [Biclique((0, 1), (0, 1))]

    def test_non_maximal_excluded(self):
        h = build_hetero([(0, 0), (1, 0)])
        assert enumerate_maximal_bicliques(h, 1, 1) == [Biclique((0, 1), (0,))]

    def test_empty_edge_set(self):
        assert enumerate_maximal_bicliques(build_hetero([]), 1, 1) == []

    def test_size_minima_filter(self):
        # K_{2,2} plus a pendant edge (2, 2)
        h = build_hetero([(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])
        assert enumerate_maximal_bicliques(h, 2, 2) == [Biclique((0, 1), (0, 1))]
        with_singletons = enumerate_maximal_bicliques(h, 1, 1)
        assert Biclique((2,), (2,)) in with_singletons

    def test_overlapping_bicliques_allowed(self):
        # x=1 belongs to two maximal bicliques
        h = build_hetero([(0, 0), (1, 0), (1, 1), (2, 1)])
        out = enumerate_maximal_bicliques(h, 1, 1)
        assert Biclique((0, 1), (0,)) in out
        assert Biclique((1, 2), (1,)) in out

    def test_invalid_parameters(self):
        h = build_hetero([(0, 0)])
        for bad in [(0, 1, 10), (1, 0, 10), (1, 1, 0)]:
            with pytest.raises(ValueError):
                enumerate_maximal_bicliques(h, *bad)

    def test_cap_overflow(self):
        # crown graph K_{n,n} minus a perfect matching has many maximal bicliques
        n = 8
        edges = [(x, y) for x in range(n) for y in range(n) if x != y]
        with pytest.raises(BicliqueOverflowError):
            enumerate_maximal_bicliques(build_hetero(edges), 1, 1, cap=10)

    def test_deterministic_order(self):
        rng = np.random.default_rng(11)
        edges = [
            (int(x), int(y))
            for x, y in zip(rng.integers(0, 6, 25), rng.integers(0, 6, 25))
        ]
        h = build_hetero(edges)
        first = enumerate_maximal_bicliques(h, 1, 1)
        second = enumerate_maximal_bicliques(h, 1, 1)
        assert first == second
        assert first == sorted(first, key=lambda b: (b.x_members, b.y_members))

    def test_matches_brute_force_on_random_graphs(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            nx, ny = int(rng.integers(1, 7)), int(rng.integers(1, 7))
            edges = [
                (x, y)
                for x in range(nx)
                for y in range(ny)
                if rng.random() < 0.4
            ]
            got = enumerate_maximal_bicliques(build_hetero(edges), 1, 1)
            expected = naive_maximal_bicliques(nx, ny, edges)
            assert [(b.x_members, b.y_members) for b in got] == expected

    def test_full_connectivity_invariant(self):
        rng = np.random.default_rng(6)
        edges = [
            (x, y) for x in range(8) for y in range(8) if rng.random() < 0.35
        ]
        h = build_hetero(edges)
        for bc in enumerate_maximal_bicliques(h, 1, 1):
            assert validate_biclique(bc, h)


class TestValidate:
    def test_valid(self):
        h = build_hetero([(0, 0), (0, 1), (1, 0), (1, 1)])
        assert validate_biclique(Biclique((0, 1), (0, 1)), h)

    def test_invalid(self):
        h = build_hetero([(0, 0), (1, 1)])
        assert not validate_biclique(Biclique((0, 1), (0, 1)), h)
