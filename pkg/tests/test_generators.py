import numpy as np
import pytest

from nodal_expansion.generators import (
    GenerationError,
    enumerate_connected_graphs,
    gen_complete,
    gen_cycle,
    gen_expander_path_expander,
    gen_gnp,
    gen_path,
    gen_random_regular,
    sample_connected_graphs,
)
from nodal_expansion.graph import is_connected


class TestBasicFamilies:
    def test_path2_is_k2(self):
        g = gen_path(2)
        assert g.n == 2 and g.edges == ((0, 1),)

    def test_cycle4(self):
        g = gen_cycle(4)
        assert g.n == 4 and g.m == 4
        assert np.array_equal(g.degrees(), [2, 2, 2, 2])

    def test_complete4(self):
        assert gen_complete(4).m == 6

    def test_range_errors(self):
        with pytest.raises(GenerationError):
            gen_path(0)
        with pytest.raises(GenerationError):
            gen_cycle(2)


class TestRandomRegular:
    def test_n4_d3_forced_to_k4(self):
        g = gen_random_regular(4, 3, seed=123)
        assert g.edges == gen_complete(4).edges

    def test_degrees(self):
        g = gen_random_regular(10, 3, seed=1)
        assert np.array_equal(g.degrees(), [3] * 10)

    def test_odd_product_rejected(self):
        with pytest.raises(GenerationError):
            gen_random_regular(5, 3, seed=0)

    def test_deterministic(self):
        a = gen_random_regular(12, 4, seed=99)
        b = gen_random_regular(12, 4, seed=99)
        assert a.edges == b.edges
        c = gen_random_regular(12, 4, seed=100)
        assert a.edges != c.edges  # overwhelmingly likely for distinct seeds


class TestGnp:
    def test_deterministic(self):
        assert gen_gnp(10, 0.4, 5).edges == gen_gnp(10, 0.4, 5).edges

    def test_extremes(self):
        assert gen_gnp(6, 0.0, 1).m == 0
        assert gen_gnp(6, 1.0, 1).m == 15


class TestExpanderPathExpander:
    def test_small_structure(self):
        g = gen_expander_path_expander(4, 3, 8, seed=0)
        assert g.n == 16 and g.m == 6 + 6 + 7 + 2
        k4 = gen_complete(4).edges
        assert set(k4) <= set(g.edges)
        assert {(u + 4, v + 4) for u, v in k4} <= set(g.edges)
        assert (0, 8) in g.edges and (4, 15) in g.edges

    def test_blocks_isomorphic_by_shift(self):
        g = gen_expander_path_expander(10, 3, 5, seed=3)
        block1 = {e for e in g.edges if e[0] < 10 and e[1] < 10}
        block2 = {e for e in g.edges if 10 <= e[0] < 20 and 10 <= e[1] < 20}
        assert {(u + 10, v + 10) for u, v in block1} == block2

    def test_connected(self):
        for seed in (0, 1, 7):
            assert is_connected(gen_expander_path_expander(6, 3, 4, seed=seed))

    def test_default_path_len(self):
        g = gen_expander_path_expander(6, 3, seed=0)
        assert g.n == 6 * 2 + 12

    def test_deterministic(self):
        a = gen_expander_path_expander(8, 3, 10, seed=7)
        b = gen_expander_path_expander(8, 3, 10, seed=7)
        assert a.edges == b.edges


class TestEnumeration:
    def test_connected_counts(self):
        # known labeled connected graph counts: 1, 1, 4, 38, 728
        for n, expect in ((1, 1), (2, 1), (3, 4), (4, 38), (5, 728)):
            assert sum(1 for _ in enumerate_connected_graphs(n)) == expect

    def test_sampler_distinct_connected(self):
        seen = set()
        for g in sample_connected_graphs(6, 40, seed=0):
            assert is_connected(g)
            assert g.edges not in seen
            seen.add(g.edges)
        assert len(seen) == 40
