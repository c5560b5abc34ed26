"""Realize an admissible block square of prescribed block sizes as a group.

Given block sizes (m1, m2, m3, m4), build G = A x B where A and B are
Frobenius groups with squarefree cyclic kernel and cyclic complement:
pi4 = complement primes of A, pi1 = kernel primes of A, pi3 = complement
primes of B, pi2 = kernel primes of B.  The class-size prime graph of G is
then the admissible block square on those four blocks.

A cyclic complement of order n acts fixed-point-freely on a kernel prime p
exactly when the unit group mod p has an element of order n, i.e. when
p = 1 (mod n).  The complement primes are therefore chosen FIRST and the
kernel primes are found afterwards in the progression 1 (mod n) by a
deterministic Dirichlet search.

Prime selection policy: complement primes are the smallest available odd
primes (2 is never used in a complement order, so the smallest realization
of the plain square lands on {3, 5, 7, 11}); kernel primes are the
smallest qualifying primes in their progression.  ``avoid`` excludes
primes from every choice.  The whole procedure is deterministic.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .blocks import BlockPartition, is_admissible_block_square
from .construction import Direct, Frobenius, class_size_spectrum, evaluate
from .dirichlet import DEFAULT_SEARCH_BOUND, PrimeRequest, find_primes_in_ap
from .errors import BoundExhausted, PredictionMismatch
from .graph import PrimeGraph, delta_of
from .primes import is_prime

CONGRUENCE_NOTE = (
    "kernel primes are chosen congruent to 1 modulo the complement order, "
    "which is the sufficient condition for a fixed-point-free multiplier "
    "action of the cyclic complement; the construction is re-verified "
    "against the computed class-size spectrum"
)


@dataclass(frozen=True)
class ConstructionResult:
    """A built group expression together with its verified prediction."""

    blocks: tuple[int, int, int, int]
    expr: Direct
    graph: PrimeGraph
    partition: BlockPartition
    order: int

    @property
    def factor_a(self) -> Frobenius:
        return self.expr.factors[0]  # type: ignore[return-value]

    @property
    def factor_b(self) -> Frobenius:
        return self.expr.factors[1]  # type: ignore[return-value]


def _next_odd_primes(count: int, used: set[int]) -> list[int]:
    out: list[int] = []
    candidate = 3
    while len(out) < count:
        if candidate not in used and is_prime(candidate):
            out.append(candidate)
        candidate += 2
    return out


def _predicted_graph(
    pi1: tuple[int, ...],
    pi2: tuple[int, ...],
    pi3: tuple[int, ...],
    pi4: tuple[int, ...],
) -> PrimeGraph:
    vertices = pi1 + pi2 + pi3 + pi4
    edges: set[tuple[int, int]] = set()
    for block in (pi1, pi2, pi3, pi4):
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                edges.add((min(block[i], block[j]), max(block[i], block[j])))
    for p in pi1 + pi4:
        for q in pi2 + pi3:
            edges.add((min(p, q), max(p, q)))
    return PrimeGraph(tuple(sorted(vertices)), frozenset(edges))


def _build_once(
    m1: int, m2: int, m3: int, m4: int, avoid: frozenset[int], bound: int
) -> ConstructionResult:
    used: set[int] = set(avoid)
    pi4 = tuple(_next_odd_primes(m4, used))
    used.update(pi4)
    n4 = math.prod(pi4)
    pi1 = tuple(
        find_primes_in_ap(
            PrimeRequest(count=m1, modulus=n4, residue=1, exclude=frozenset(used), bound=bound)
        )
    )
    used.update(pi1)
    pi3 = tuple(_next_odd_primes(m3, used))
    used.update(pi3)
    n3 = math.prod(pi3)
    pi2 = tuple(
        find_primes_in_ap(
            PrimeRequest(count=m2, modulus=n3, residue=1, exclude=frozenset(used), bound=bound)
        )
    )
    used.update(pi2)

    factor_a = Frobenius(kernel=pi1, complement=n4)
    factor_b = Frobenius(kernel=pi2, complement=n3)
    expr = Direct((factor_a, factor_b))
    partition = BlockPartition(pi1, pi2, pi3, pi4)
    predicted = _predicted_graph(pi1, pi2, pi3, pi4)

    group = evaluate(expr)
    if group.factors is None or not all(f.frobenius for f in group.factors):
        raise PredictionMismatch("constructed factors lost their Frobenius structure")
    computed = delta_of(class_size_spectrum(group))
    if computed != predicted:
        raise PredictionMismatch(
            f"computed graph {computed.to_json_obj()} differs from "
            f"predicted {predicted.to_json_obj()}"
        )
    if not is_admissible_block_square(predicted, partition):
        raise PredictionMismatch("predicted partition is not an admissible block square")
    return ConstructionResult(
        blocks=(m1, m2, m3, m4),
        expr=expr,
        graph=predicted,
        partition=partition,
        order=group.order,
    )


def construct_block_square_group(
    m1: int,
    m2: int,
    m3: int,
    m4: int,
    *,
    avoid: Iterable[int] = (),
    bound: int = DEFAULT_SEARCH_BOUND,
) -> ConstructionResult:
    """Build, and self-verify, a group whose prime graph is the (m1,m2,m3,m4)
    block square.

    Retries once with a doubled search bound before surfacing
    BoundExhausted; raises PredictionMismatch if the verification pass ever
    disagrees with the prediction (an internal bug, never expected).
    """
    for m in (m1, m2, m3, m4):
        if m < 1:
            raise ValueError(f"block sizes must be >= 1, got {(m1, m2, m3, m4)}")
    avoid_set = frozenset(int(p) for p in avoid)
    try:
        return _build_once(m1, m2, m3, m4, avoid_set, bound)
    except BoundExhausted:
        return _build_once(m1, m2, m3, m4, avoid_set, bound * 2)
