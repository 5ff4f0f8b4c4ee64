import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphcomp.bipartite import count_bipartite
from graphcomp.multipartite import PartSpec, count_multipartite, multipartite_edge_count
from graphcomp.oracle import complete_multipartite, count_compositions
from oracles import nx_compositions

parts_lists = st.lists(st.integers(0, 4), min_size=1, max_size=4).filter(lambda p: sum(p) <= 8)


@pytest.mark.parametrize("parts, expected", [((2, 3), 34), ((1, 1, 1), 5), ((0,), 1), ((7,), 1)])
def test_examples(parts, expected):
    assert count_multipartite(parts) == expected


def test_triangle_against_networkx():
    assert nx_compositions(nx.complete_multipartite_graph(1, 1, 1)) == 5
    assert nx_compositions(nx.complete_multipartite_graph(2, 2, 1)) == count_multipartite((2, 2, 1))


@pytest.mark.parametrize("parts, expected", [((2, 3), 6), ((1, 1, 1), 3), ((5,), 0), ((0, 0), 0)])
def test_edge_count_examples(parts, expected):
    assert multipartite_edge_count(parts) == expected


@pytest.mark.parametrize("m, n", list(itertools.product(range(6), repeat=2)))
def test_reduces_to_bipartite(m, n):
    assert count_multipartite((m, n)) == count_bipartite(m, n)


@given(parts_lists, st.randoms())
def test_permutation_invariant(parts, rnd):
    shuffled = list(parts)
    rnd.shuffle(shuffled)
    assert count_multipartite(shuffled) == count_multipartite(parts)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=3).filter(lambda p: sum(p) <= 6), st.integers(0, 3))
def test_zero_part_absorbed(parts, position):
    position = min(position, len(parts))
    padded = parts[:position] + [0] + parts[position:]
    assert count_multipartite(padded) == count_multipartite(parts)


@given(parts_lists)
def test_matches_oracle(parts):
    assert count_multipartite(parts) == count_compositions(complete_multipartite(parts))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=5).filter(lambda p: sum(p) <= 10))
def test_edge_count_matches_graph(parts):
    assert multipartite_edge_count(parts) == complete_multipartite(parts).edge_count
    assert multipartite_edge_count(parts) == sum(a * b for a, b in itertools.combinations(parts, 2))


def test_partspec_validation():
    with pytest.raises(ValueError):
        PartSpec(())
    with pytest.raises(ValueError):
        PartSpec((1, -1))
    spec = PartSpec((2, 3))
    assert PartSpec.of(spec) is spec
    assert spec.total == 5 and len(spec) == 2
