from __future__ import annotations

import random

import pytest

from classgraph import (
    BadPartition,
    BlockPartition,
    PrimeGraph,
    TooManyVertices,
    canonical_partition,
    find_block_partitions,
    is_admissible_block_square,
    is_block_square_partition,
)
from classgraph.blocks import SQUARE_SYMMETRIES, apply_symmetry
from oracles import fast_block_square_exists, naive_block_square_exists

PRIMES = (2, 3, 5, 7, 11, 13, 17)

SQUARE = PrimeGraph((3, 5, 7, 11), frozenset({(3, 5), (3, 11), (5, 7), (7, 11)}))


def graph_from_bits(n: int, bits: int) -> PrimeGraph:
    vertices = PRIMES[:n]
    edges = set()
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits >> k & 1:
                edges.add((vertices[i], vertices[j]))
            k += 1
    return PrimeGraph(vertices, frozenset(edges))


def adjacency_bitmasks(graph: PrimeGraph) -> list[int]:
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj = [0] * len(graph.vertices)
    for p, q in graph.edges:
        adj[index[p]] |= 1 << index[q]
        adj[index[q]] |= 1 << index[p]
    return adj


# -- is_block_square_partition ------------------------------------------------


def test_square_partition_true():
    part = BlockPartition((3,), (5,), (11,), (7,))
    assert is_block_square_partition(SQUARE, part)


def test_square_partition_middle_swap_symmetry():
    part = BlockPartition((3,), (11,), (5,), (7,))
    assert is_block_square_partition(SQUARE, part)


def test_square_partition_wrong_pairing():
    part = BlockPartition((3,), (7,), (5,), (11,))
    assert not is_block_square_partition(SQUARE, part)  # 3-11 is an edge


def test_partition_validation():
    with pytest.raises(BadPartition):
        is_block_square_partition(SQUARE, BlockPartition((3,), (3, 5), (11,), (7,)))
    with pytest.raises(BadPartition):
        is_block_square_partition(SQUARE, BlockPartition((3,), (5,), (11,), ()))
    with pytest.raises(BadPartition):
        is_block_square_partition(SQUARE, BlockPartition((3,), (5,), (11,), (13,)))


def test_strict_vs_weak_witness_reading():
    # pi1 = {3, 5}: 3 reaches pi2, only 5 reaches pi3; no single witness.
    g = PrimeGraph(
        (2, 3, 5, 7, 11),
        frozenset({(3, 7), (5, 11), (2, 7), (2, 11)}),
    )
    part = BlockPartition((3, 5), (7,), (11,), (2,))
    assert not is_block_square_partition(g, part)
    assert is_block_square_partition(g, part, weak_witness=True)


# -- symmetries ------------------------------------------------------------------


def test_symmetry_group_has_eight_elements():
    assert len(SQUARE_SYMMETRIES) == 8


def test_symmetry_images_of_square_partition_all_valid():
    part = BlockPartition((3,), (5,), (11,), (7,))
    images = {apply_symmetry(part, sym).blocks() for sym in SQUARE_SYMMETRIES}
    assert len(images) == 8
    for blocks in images:
        assert is_block_square_partition(SQUARE, BlockPartition(*blocks))


def test_canonical_partition_is_least_valid_image():
    part = BlockPartition((7,), (11,), (5,), (3,))
    canon = canonical_partition(SQUARE, part)
    assert canon == BlockPartition((3,), (5,), (11,), (7,))


def test_weak_witness_preserved_by_all_symmetries_on_random_graphs():
    rng = random.Random(7)
    checked = 0
    for _ in range(300):
        n = rng.randint(4, 7)
        bits = rng.getrandbits(n * (n - 1) // 2)
        g = graph_from_bits(n, bits)
        for part in find_block_partitions(g, weak_witness=True):
            for sym in SQUARE_SYMMETRIES:
                image = apply_symmetry(part, sym)
                assert is_block_square_partition(g, image, weak_witness=True)
                checked += 1
    assert checked > 50


# -- find_block_partitions ----------------------------------------------------------


def test_too_few_vertices():
    assert find_block_partitions(PrimeGraph((2, 3, 5), frozenset())) == []


def test_too_many_vertices_guard():
    vertices = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)
    g = PrimeGraph(vertices, frozenset())
    with pytest.raises(TooManyVertices):
        find_block_partitions(g)
    with pytest.raises(TooManyVertices):
        find_block_partitions(SQUARE, max_vertices=3)


def test_square_has_exactly_one_canonical_partition():
    parts = find_block_partitions(SQUARE)
    assert parts == [BlockPartition((3,), (5,), (11,), (7,))]


def test_complete_graph_has_no_partition():
    k4 = PrimeGraph(
        (2, 3, 5, 7),
        frozenset({(2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7)}),
    )
    assert find_block_partitions(k4) == []


def test_empty_graph_has_no_partition():
    g = PrimeGraph((2, 3, 5, 7), frozenset())
    assert find_block_partitions(g) == []


def test_returned_partitions_pass_the_predicate():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(4, 7)
        g = graph_from_bits(n, rng.getrandbits(n * (n - 1) // 2))
        for weak in (False, True):
            for part in find_block_partitions(g, weak_witness=weak):
                assert is_block_square_partition(g, part, weak_witness=weak)


def test_detector_agrees_with_naive_public_api_oracle():
    # Exhaustive on <= 4 vertices, random beyond, both witness readings.
    cases = [
        graph_from_bits(n, bits) for n in range(5) for bits in range(1 << (n * (n - 1) // 2))
    ]
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(5, 6)
        cases.append(graph_from_bits(n, rng.getrandbits(n * (n - 1) // 2)))
    for g in cases:
        for weak in (False, True):
            found = bool(find_block_partitions(g, weak_witness=weak))
            assert found == naive_block_square_exists(g, weak=weak), (g, weak)


def test_fast_oracle_agrees_with_naive_oracle():
    # The bitmask set-partition oracle used in the big acceptance sweeps
    # must agree with the straightforward public-API oracle.
    cases = [
        graph_from_bits(n, bits) for n in range(5) for bits in range(1 << (n * (n - 1) // 2))
    ]
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(5, 7)
        cases.append(graph_from_bits(n, rng.getrandbits(n * (n - 1) // 2)))
    for g in cases:
        adj = adjacency_bitmasks(g)
        n = len(g.vertices)
        for weak in (False, True):
            assert fast_block_square_exists(adj, n, weak=weak) == naive_block_square_exists(
                g, weak=weak
            ), (g, weak)


# -- admissibility ---------------------------------------------------------------------


def test_square_is_admissible():
    part = BlockPartition((3,), (5,), (11,), (7,))
    assert is_admissible_block_square(SQUARE, part)


def test_block_square_with_non_clique_block_is_not_admissible():
    # Complete bipartite {3,7,13} x {5,11} but 3-7 missing inside pi1.
    g = PrimeGraph(
        (3, 5, 7, 11, 13),
        frozenset({(3, 5), (3, 11), (7, 5), (7, 11), (13, 5), (13, 11)}),
    )
    part = BlockPartition((3, 7), (5,), (11,), (13,))
    assert is_block_square_partition(g, part)
    assert not is_admissible_block_square(g, part)


def test_missing_cross_edge_is_not_admissible():
    g = PrimeGraph(
        (2, 3, 5, 7, 11),
        frozenset({(2, 3), (2, 5), (2, 11), (3, 7), (5, 7), (7, 11)}),
    )
    parts = find_block_partitions(g)
    for part in parts:
        assert not is_admissible_block_square(g, part)
