"""Structure recognition: D-groups, central stripping, block-square splitting.

A D-group is a group G = AB with A normal abelian, B abelian, |A| and |B|
coprime, Z(G) <= B, and G/Z(G) Frobenius with kernel AZ(G)/Z(G).  These
are exactly the groups whose class-size prime graph is disconnected, and
they have class-size set {1, |A|, |B|/|Z(G)|}.

Two independent recognizers are provided: a spectral one (count the
components of the graph) and a structural one (exhibit A and B and check
the Frobenius condition elementwise).  The block-square verifier combines
them: a group whose graph is a block square must split, up to central
Sylow factors, as a direct product of two coprime D-groups, one per
non-adjacent block pair.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass

from .blocks import BlockPartition, find_block_partitions
from .construction import MetabelianGroup, class_size_spectrum, to_permutation
from .errors import CapExceeded, DecompositionFailure
from .graph import PrimeGraph, delta_of
from .perm import PermGroup, Permutation, SubgroupWitness
from .primes import prime_factors, valuation

VERIFIED = "VERIFIED"
COUNTEREXAMPLE_CANDIDATE = "COUNTEREXAMPLE_CANDIDATE"
NOT_BLOCK_SQUARE = "not a block square"

# Budget for the complement search inside dgroup_witness; prevents silent
# wrong answers by failing loudly instead of giving up quietly.
_SEARCH_BUDGET = 200_000


@dataclass(frozen=True)
class DGroupWitness:
    """Certificate that a group is a D-group, with the decomposition orders."""

    a_order: int
    b_order: int
    center_order: int
    class_sizes: frozenset[int]
    a_part: SubgroupWitness | None = None
    b_part: SubgroupWitness | None = None

    def to_json_obj(self) -> dict:
        return {
            "a_order": self.a_order,
            "b_order": self.b_order,
            "center_order": self.center_order,
            "class_sizes": sorted(self.class_sizes),
        }


@dataclass(frozen=True)
class CentralSplit:
    """G written as (core) x (central Hall part), prime set by prime set."""

    central_primes: tuple[int, ...]
    core: PermGroup
    core_elements: frozenset[Permutation]


@dataclass(frozen=True)
class DecompositionWitness:
    """Certificate aligning a block partition with a product of two D-groups."""

    central_primes: tuple[int, ...]
    a_order: int
    b_order: int
    a_witness: DGroupWitness
    b_witness: DGroupWitness
    partition: BlockPartition

    def to_json_obj(self) -> dict:
        return {
            "central_primes": list(self.central_primes),
            "a_order": self.a_order,
            "b_order": self.b_order,
            "a": self.a_witness.to_json_obj(),
            "b": self.b_witness.to_json_obj(),
            "partition": self.partition.to_json_obj(),
        }


@dataclass(frozen=True)
class DecompositionReport:
    status: str
    spectrum: Counter[int]
    graph: PrimeGraph
    partitions: tuple[BlockPartition, ...]
    witness: DecompositionWitness | None


def is_dgroup_spectral(spectrum: Counter[int] | list[int]) -> bool:
    """Spectral recognizer: the class-size prime graph is disconnected."""
    return len(delta_of(spectrum).components()) >= 2


# -- structural recognizer, permutation route --------------------------------


def _find_subgroup_of_order(group: PermGroup, target: int) -> frozenset[Permutation] | None:
    """First subgroup of exactly `target` elements all of order dividing target.

    Deterministic breadth-first search over generated subgroups, seeded
    from single elements and extended one candidate at a time.  All
    elements of such a subgroup necessarily have order dividing target, so
    candidates are prefiltered accordingly.
    """
    if target == 1:
        return frozenset([group.identity()])
    candidates = [
        p for p in group.elements() if target % p.order() == 0 and not p.is_identity()
    ]
    # Cyclic seeds first: the closure of a single element is its power list,
    # so the first element of order exactly `target` decides immediately.
    for x in candidates:
        if x.order() == target:
            grown = _generated_subgroup(group, (x,), limit=target)
            assert grown is not None and len(grown) == target
            return grown
    budget = _SEARCH_BUDGET
    seen: set[frozenset[Permutation]] = set()
    queue: deque[tuple[frozenset[Permutation], tuple[Permutation, ...]]] = deque(
        [(frozenset([group.identity()]), ())]
    )
    while queue:
        closure, gens = queue.popleft()
        for x in candidates:
            if x in closure:
                continue
            budget -= 1
            if budget < 0:
                raise CapExceeded("complement search budget exceeded")
            new_gens = gens + (x,)
            grown = _generated_subgroup(group, new_gens, limit=target)
            if grown is None or target % len(grown) != 0:
                continue
            if len(grown) == target:
                # Lagrange keeps element orders dividing target automatically.
                return grown
            if grown not in seen:
                seen.add(grown)
                queue.append((grown, new_gens))
    return None


def _generated_subgroup(
    group: PermGroup, gens: tuple[Permutation, ...], *, limit: int
) -> frozenset[Permutation] | None:
    out = {group.identity()}
    frontier = [group.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in out:
                    if len(out) >= limit:
                        return None
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(out)


def _is_abelian_set(elements: frozenset[Permutation]) -> bool:
    elems = sorted(elements)
    return all(
        a * b == b * a for i, a in enumerate(elems) for b in elems[i + 1 :]
    )


def dgroup_witness(group: PermGroup) -> DGroupWitness | None:
    """Structural D-group recognizer on an enumerated permutation group.

    A is taken to be the derived subgroup (it must be nontrivial, abelian,
    and of order coprime to its index).  B is the first subgroup of the
    complementary order found among elements of coprime order; all such
    complements are conjugate, so one candidate decides.  The Frobenius
    condition is checked as: C_B(a) <= Z(G) for every nontrivial a in A.
    """
    order = group.order()
    derived = group.derived_subgroup()
    a_order = derived.order
    if a_order == 1 or order % a_order != 0:
        return None
    b_order = order // a_order
    if math.gcd(a_order, b_order) != 1:
        return None
    if not _is_abelian_set(derived.elements):
        return None
    b_set = _find_subgroup_of_order(group, b_order)
    if b_set is None:
        return None
    if not _is_abelian_set(b_set):
        return None
    center = group.center()
    if not center.elements <= b_set:
        return None
    # Frobenius condition, quotient-free: nontrivial kernel elements may
    # only be centralized inside B by central elements.
    for a in derived.elements:
        if a.is_identity():
            continue
        for b in b_set:
            if a * b == b * a and b not in center.elements:
                return None
    sizes = frozenset(group.class_size_spectrum())
    expected = frozenset({1, a_order, b_order // center.order})
    if sizes != expected:  # pragma: no cover - excluded by the checks above
        return None
    return DGroupWitness(
        a_order=a_order,
        b_order=b_order,
        center_order=center.order,
        class_sizes=sizes,
        a_part=derived,
        b_part=SubgroupWitness(b_set, group._set_is_normal(b_set)),
    )


# -- structural recognizer, construction route --------------------------------

_UNDECIDED = object()


def _structural_parts(
    g: MetabelianGroup,
) -> tuple[list[MetabelianGroup], list[MetabelianGroup]] | None:
    """Split a structured group into (abelian parts, Frobenius parts).

    Returns None when some part is neither: those groups fall back to the
    permutation route.
    """
    parts = g.factors if g.factors else (g,)
    abelian = [p for p in parts if p.is_abelian]
    frobenius = [p for p in parts if not p.is_abelian and p.frobenius]
    if len(abelian) + len(frobenius) != len(parts):
        return None
    return abelian, frobenius


def structural_dgroup_witness(g: MetabelianGroup):
    """D-group decision from construction provenance, without enumerating.

    Returns a DGroupWitness, None (definitely not a D-group), or the
    _UNDECIDED sentinel when the structure does not determine the answer.
    """
    split = _structural_parts(g)
    if split is None:
        return _UNDECIDED
    abelian, frobenius = split
    if len(frobenius) != 1:
        return None
    frob = frobenius[0]
    central = math.prod(p.order for p in abelian)
    kernel_order = frob.kernel.order
    complement = frob.top.order
    return DGroupWitness(
        a_order=kernel_order,
        b_order=complement * central,
        center_order=central,
        class_sizes=frozenset({1, kernel_order, complement}),
    )


def dgroup_witness_of(
    group: MetabelianGroup | PermGroup,
    *,
    cap: int | None = None,
) -> DGroupWitness | None:
    """Dispatch: structural decision when provenance allows, else enumerate."""
    if isinstance(group, PermGroup):
        return dgroup_witness(group)
    result = structural_dgroup_witness(group)
    if result is not _UNDECIDED:
        return result
    return dgroup_witness(to_permutation(group, cap=cap))


# -- central stripping ---------------------------------------------------------


def strip_central_sylows(group: PermGroup) -> CentralSplit:
    """Split off the primes whose full Sylow subgroup is central.

    The remaining core is the set of elements whose orders avoid the
    central primes; it must form a (normal) subgroup, and together with
    the central Hall part it multiplies back to |G|.
    """
    order = group.order()
    center_order = group.center().order
    central = tuple(
        p for p in prime_factors(order) if valuation(center_order, p) == valuation(order, p)
    )
    core_primes = frozenset(prime_factors(order)) - frozenset(central)
    pi = group.pi_elements(core_primes)
    if not pi.is_subgroup:
        raise DecompositionFailure(
            "elements of non-central order do not form a subgroup"
        )
    central_part = math.prod(p ** valuation(order, p) for p in central) if central else 1
    if len(pi.elements) * central_part != order:
        raise DecompositionFailure(
            f"core order {len(pi.elements)} times central part {central_part} "
            f"is not the group order {order}"
        )
    core = group.restricted(pi.elements, name=f"{group.name}-core" if group.name else "")
    return CentralSplit(central, core, pi.elements)


# -- block-square decomposition verifier ---------------------------------------


def spectrum_of(group: MetabelianGroup | PermGroup) -> Counter[int]:
    if isinstance(group, PermGroup):
        return group.class_size_spectrum()
    return class_size_spectrum(group)


def _structural_decomposition(
    g: MetabelianGroup, partitions: tuple[BlockPartition, ...]
) -> DecompositionWitness | None:
    split = _structural_parts(g)
    assert split is not None
    abelian, frobenius = split
    if len(frobenius) != 2:
        return None
    fa, fb = frobenius
    if math.gcd(fa.order, fb.order) != 1:
        return None
    central_primes: set[int] = set()
    for part in abelian:
        central_primes.update(prime_factors(part.order))
    for partition in partitions:
        sigma_a = frozenset(partition.pi1) | frozenset(partition.pi4)
        sigma_b = frozenset(partition.pi2) | frozenset(partition.pi3)
        for first, second in ((fa, fb), (fb, fa)):
            if (
                frozenset(prime_factors(first.order)) == sigma_a
                and frozenset(prime_factors(second.order)) == sigma_b
            ):
                wa = structural_dgroup_witness(first)
                wb = structural_dgroup_witness(second)
                assert isinstance(wa, DGroupWitness) and isinstance(wb, DGroupWitness)
                return DecompositionWitness(
                    central_primes=tuple(sorted(central_primes)),
                    a_order=first.order,
                    b_order=second.order,
                    a_witness=wa,
                    b_witness=wb,
                    partition=partition,
                )
    return None


def _permutation_decomposition(
    group: PermGroup, partitions: tuple[BlockPartition, ...]
) -> DecompositionWitness | None:
    split = strip_central_sylows(group)
    core = split.core
    core_order = core.order()
    for partition in partitions:
        sigma_a = frozenset(partition.pi1) | frozenset(partition.pi4)
        sigma_b = frozenset(partition.pi2) | frozenset(partition.pi3)
        a_pi = core.pi_elements(sigma_a)
        b_pi = core.pi_elements(sigma_b)
        if not (a_pi.is_subgroup and b_pi.is_subgroup):
            continue
        a_order = len(a_pi.elements)
        b_order = len(b_pi.elements)
        if a_order * b_order != core_order or math.gcd(a_order, b_order) != 1:
            continue
        a_group = core.restricted(a_pi.elements)
        b_group = core.restricted(b_pi.elements)
        wa = dgroup_witness(a_group)
        wb = dgroup_witness(b_group)
        if wa is None or wb is None:
            continue
        return DecompositionWitness(
            central_primes=split.central_primes,
            a_order=a_order,
            b_order=b_order,
            a_witness=wa,
            b_witness=wb,
            partition=partition,
        )
    return None


def verify_decomposition(
    group: MetabelianGroup | PermGroup,
    *,
    spectrum: Counter[int] | None = None,
    graph: PrimeGraph | None = None,
    partitions: tuple[BlockPartition, ...] | None = None,
    weak_witness: bool = False,
    cap: int | None = None,
) -> DecompositionReport:
    """Check that a block-square graph forces the predicted product structure.

    When the graph is a block square, the group must split (after removing
    central Sylow subgroups) as A x B with A, B D-groups of coprime orders
    whose prime sets match the non-adjacent block pairs; the report status
    is VERIFIED when a witness is found and COUNTEREXAMPLE_CANDIDATE when
    not (the latter is never expected).  Conversely, a group built as a
    coprime product of two D-groups must yield a block square, so an empty
    partition list is also flagged for those inputs.
    """
    if spectrum is None:
        spectrum = spectrum_of(group)
    if graph is None:
        graph = delta_of(spectrum)
    if partitions is None:
        partitions = tuple(find_block_partitions(graph, weak_witness=weak_witness))
    declared_product = False
    if isinstance(group, MetabelianGroup):
        split = _structural_parts(group)
        declared_product = split is not None and len(split[1]) == 2
    if not partitions:
        status = COUNTEREXAMPLE_CANDIDATE if declared_product else NOT_BLOCK_SQUARE
        return DecompositionReport(status, spectrum, graph, partitions, None)
    witness: DecompositionWitness | None
    if isinstance(group, MetabelianGroup) and _structural_parts(group) is not None:
        witness = _structural_decomposition(group, partitions)
    else:
        perm_group = (
            group if isinstance(group, PermGroup) else to_permutation(group, cap=cap)
        )
        witness = _permutation_decomposition(perm_group, partitions)
    status = VERIFIED if witness is not None else COUNTEREXAMPLE_CANDIDATE
    return DecompositionReport(status, spectrum, graph, partitions, witness)
