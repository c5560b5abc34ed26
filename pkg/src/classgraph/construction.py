"""Structured group constructions with fast class-size computation.

The groups built here are the ones the block-square theory actually needs:
abelian groups, semidirect products of two abelian groups where the top
acts by componentwise multipliers (metabelian), Frobenius groups with
squarefree cyclic kernel and cyclic complement, and direct products of
those.  Each carries enough structure to compute its conjugacy class-size
spectrum without enumerating elements whenever a fast path applies; the
permutation engine (``to_permutation``) stays available as the independent
cross-check.

Elements of a :class:`MetabelianGroup` are pairs ``(k, l)`` of residue
tuples with multiplication ``(k1, l1) * (k2, l2) = (k1 + phi_l1(k2), l1 + l2)``,
where ``phi_l`` multiplies kernel factor ``j`` by ``prod_i u[i][j] ** l[i]``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .errors import (
    CapExceeded,
    CoprimalityViolation,
    ExprError,
    FaithfulnessFailure,
    InvalidMultiplier,
)
from .perm import Permutation, PermGroup
from .primes import is_prime, multiplicative_order

DEFAULT_SPECTRUM_CAP = 10**7

Element = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum of cyclic groups; elements are reduced residue tuples."""

    factor_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "factor_orders", tuple(int(n) for n in self.factor_orders))
        if any(n < 2 for n in self.factor_orders):
            raise ExprError(f"cyclic factor orders must be >= 2, got {self.factor_orders}")

    @property
    def order(self) -> int:
        return math.prod(self.factor_orders)

    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.factor_orders)

    def add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.factor_orders))

    def neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        return tuple((-x) % n for x, n in zip(a, self.factor_orders))

    def elements(self):
        return product(*(range(n) for n in self.factor_orders))


@dataclass(frozen=True)
class MultiplierAction:
    """Unit multipliers ``multipliers[i][j]`` of top generator i on kernel factor j."""

    multipliers: tuple[tuple[int, ...], ...]

    def multiplier_for(self, l: tuple[int, ...], j: int, modulus: int) -> int:
        m = 1
        for i, li in enumerate(l):
            if li:
                m = m * pow(self.multipliers[i][j], li, modulus) % modulus
        return m

    def apply(
        self, l: tuple[int, ...], k: tuple[int, ...], kernel_orders: tuple[int, ...]
    ) -> tuple[int, ...]:
        return tuple(
            k[j] * self.multiplier_for(l, j, n) % n for j, n in enumerate(kernel_orders)
        )

    def is_trivial(self) -> bool:
        return all(u == 1 for row in self.multipliers for u in row)


@dataclass(frozen=True)
class MetabelianGroup:
    """Semidirect product kernel x| top, with optional provenance flags.

    ``frobenius`` marks a group built from a Frobenius construction node
    whose action was verified fixed-point-free (enables the closed-form
    spectrum).  ``factors`` records the coprime direct-product parts a
    folded product was assembled from (enables the convolution spectrum).
    """

    kernel: AbelianGroup
    top: AbelianGroup
    action: MultiplierAction
    frobenius: bool = False
    factors: tuple["MetabelianGroup", ...] | None = None

    def __post_init__(self) -> None:
        rows = self.action.multipliers
        if len(rows) != len(self.top.factor_orders) or any(
            len(row) != len(self.kernel.factor_orders) for row in rows
        ):
            raise ExprError("action shape does not match kernel/top factors")

    @property
    def order(self) -> int:
        return self.kernel.order * self.top.order

    @property
    def is_abelian(self) -> bool:
        return self.action.is_trivial()

    def identity(self) -> Element:
        return (self.kernel.identity(), self.top.identity())

    def mul(self, x: Element, y: Element) -> Element:
        (k1, l1), (k2, l2) = x, y
        shifted = self.action.apply(l1, k2, self.kernel.factor_orders)
        return (self.kernel.add(k1, shifted), self.top.add(l1, l2))

    def inv(self, x: Element) -> Element:
        k, l = x
        lneg = self.top.neg(l)
        return (self.action.apply(lneg, self.kernel.neg(k), self.kernel.factor_orders), lneg)

    def conjugate(self, g: Element, x: Element) -> Element:
        return self.mul(self.mul(g, x), self.inv(g))

    def elements(self):
        for k in self.kernel.elements():
            for l in self.top.elements():
                yield (k, l)

    def generators(self) -> list[Element]:
        """Standard generators: one unit vector per kernel and top factor."""
        gens = []
        nk, nt = len(self.kernel.factor_orders), len(self.top.factor_orders)
        for j in range(nk):
            k = tuple(1 if i == j else 0 for i in range(nk))
            gens.append((k, self.top.identity()))
        for j in range(nt):
            l = tuple(1 if i == j else 0 for i in range(nt))
            gens.append((self.kernel.identity(), l))
        return gens


# -- construction tree -------------------------------------------------------


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Abelian:
    orders: tuple[int, ...]


@dataclass(frozen=True)
class Frobenius:
    """Squarefree cyclic kernel (distinct primes) with a cyclic complement.

    ``multipliers`` aligns with ``kernel``; omitted multipliers are chosen
    automatically: the smallest unit of multiplicative order exactly
    ``complement`` modulo each kernel prime.
    """

    kernel: tuple[int, ...]
    complement: int
    multipliers: tuple[int, ...] | None = None


@dataclass(frozen=True)
class Semidirect:
    kernel: tuple[int, ...]
    top: tuple[int, ...]
    multipliers: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Direct:
    factors: tuple["GroupExpr", ...]


@dataclass(frozen=True)
class Perm:
    degree: int
    generators: tuple[tuple[int, ...], ...]


GroupExpr = Cyclic | Abelian | Frobenius | Semidirect | Direct | Perm


def auto_multiplier(p: int, n: int) -> int:
    """Smallest unit of multiplicative order exactly n modulo the prime p."""
    if (p - 1) % n != 0:
        raise InvalidMultiplier(
            f"no unit of order {n} mod {p}: {n} does not divide {p - 1}"
        )
    for u in range(2, p):
        if multiplicative_order(u, p) == n:
            return u
    raise InvalidMultiplier(f"no unit of order {n} mod {p}")  # pragma: no cover


def _abelian_group(orders: tuple[int, ...]) -> MetabelianGroup:
    orders = tuple(n for n in orders if n > 1)
    top = AbelianGroup(orders)
    return MetabelianGroup(
        kernel=AbelianGroup(()),
        top=top,
        action=MultiplierAction(tuple(() for _ in orders)),
    )


def _frobenius_group(node: Frobenius) -> MetabelianGroup:
    kernel = tuple(node.kernel)
    n = node.complement
    if not kernel:
        raise ExprError("Frobenius node needs at least one kernel prime")
    if len(set(kernel)) != len(kernel):
        raise ExprError(f"kernel primes must be distinct, got {kernel}")
    for p in kernel:
        if not is_prime(p):
            raise ExprError(f"kernel entry {p} is not prime")
    if n < 2:
        raise ExprError(f"complement order must be >= 2, got {n}")
    if any(math.gcd(p, n) != 1 for p in kernel):
        raise CoprimalityViolation(
            f"complement order {n} shares a prime with kernel {kernel}"
        )
    if node.multipliers is None:
        mults = tuple(auto_multiplier(p, n) for p in kernel)
    else:
        if len(node.multipliers) != len(kernel):
            raise ExprError("one multiplier per kernel prime required")
        mults = tuple(int(u) % p for u, p in zip(node.multipliers, kernel))
        for u, p in zip(mults, kernel):
            if math.gcd(u, p) != 1:
                raise InvalidMultiplier(f"{u} is not a unit mod {p}")
            order = multiplicative_order(u, p)
            if n % order != 0:
                raise InvalidMultiplier(
                    f"{u} has order {order} mod {p}, not dividing {n}"
                )
    group = MetabelianGroup(
        kernel=AbelianGroup(kernel),
        top=AbelianGroup((n,)),
        action=MultiplierAction((mults,)),
    )
    return MetabelianGroup(
        kernel=group.kernel,
        top=group.top,
        action=group.action,
        frobenius=is_frobenius_action(group),
    )


def _semidirect_group(node: Semidirect) -> MetabelianGroup:
    kernel = AbelianGroup(tuple(node.kernel))
    top = AbelianGroup(tuple(node.top))
    rows = tuple(tuple(int(u) for u in row) for row in node.multipliers)
    if len(rows) != len(top.factor_orders) or any(
        len(row) != len(kernel.factor_orders) for row in rows
    ):
        raise ExprError("multiplier matrix must be top-factors x kernel-factors")
    for i, row in enumerate(rows):
        for j, u in enumerate(row):
            m = kernel.factor_orders[j]
            u %= m
            if math.gcd(u, m) != 1:
                raise InvalidMultiplier(f"{u} is not a unit mod {m}")
            order = multiplicative_order(u, m)
            if top.factor_orders[i] % order != 0:
                raise InvalidMultiplier(
                    f"{u} has order {order} mod {m}, "
                    f"not dividing top factor order {top.factor_orders[i]}"
                )
    rows = tuple(
        tuple(u % m for u, m in zip(row, kernel.factor_orders)) for row in rows
    )
    return MetabelianGroup(kernel=kernel, top=top, action=MultiplierAction(rows))


def _fold_direct(parts: list[MetabelianGroup]) -> MetabelianGroup:
    """Block-diagonal fold of pairwise-coprime metabelian factors."""
    kernel_orders: list[int] = []
    top_orders: list[int] = []
    k_offsets: list[int] = []
    for g in parts:
        k_offsets.append(len(kernel_orders))
        kernel_orders.extend(g.kernel.factor_orders)
        top_orders.extend(g.top.factor_orders)
    rows = []
    for idx, g in enumerate(parts):
        for row in g.action.multipliers:
            full = [1] * len(kernel_orders)
            for j, u in enumerate(row):
                full[k_offsets[idx] + j] = u
            rows.append(tuple(full))
    return MetabelianGroup(
        kernel=AbelianGroup(tuple(kernel_orders)),
        top=AbelianGroup(tuple(top_orders)),
        action=MultiplierAction(tuple(rows)),
        factors=tuple(parts),
    )


def evaluate(expr: GroupExpr, *, cap: int | None = None) -> MetabelianGroup | PermGroup:
    """Evaluate a construction tree to a concrete group.

    Direct products of structured children fold into one metabelian group
    (block-diagonal action) when the children's orders are pairwise
    coprime; any prime overlap, or any permutation child, routes the whole
    product through the permutation engine instead.
    """
    if isinstance(expr, Cyclic):
        if expr.n < 1:
            raise ExprError(f"cyclic order must be >= 1, got {expr.n}")
        return _abelian_group((expr.n,) if expr.n > 1 else ())
    if isinstance(expr, Abelian):
        if any(n < 1 for n in expr.orders):
            raise ExprError(f"abelian orders must be >= 1, got {expr.orders}")
        return _abelian_group(tuple(expr.orders))
    if isinstance(expr, Frobenius):
        return _frobenius_group(expr)
    if isinstance(expr, Semidirect):
        return _semidirect_group(expr)
    if isinstance(expr, Perm):
        gens = [Permutation(tuple(images)) for images in expr.generators]
        if any(g.degree != expr.degree for g in gens):
            raise ExprError("generator degree does not match declared degree")
        if cap is not None:
            return PermGroup(gens, cap=cap)
        return PermGroup(gens)
    if isinstance(expr, Direct):
        if not expr.factors:
            raise ExprError("direct product needs at least one factor")
        parts = [evaluate(child, cap=cap) for child in expr.factors]
        if len(parts) == 1:
            return parts[0]
        if all(isinstance(g, MetabelianGroup) for g in parts):
            orders = [g.order for g in parts]
            coprime = all(
                math.gcd(orders[i], orders[j]) == 1
                for i in range(len(orders))
                for j in range(i + 1, len(orders))
            )
            if coprime:
                flat: list[MetabelianGroup] = []
                for g in parts:
                    flat.extend(g.factors if g.factors else (g,))
                return _fold_direct(flat)
        perm_parts = [
            g if isinstance(g, PermGroup) else to_permutation(g, cap=cap)
            for g in parts
        ]
        out = perm_parts[0]
        for g in perm_parts[1:]:
            out = out.direct_product(g)
        return out
    raise ExprError(f"unknown construction node {expr!r}")


# -- class sizes -------------------------------------------------------------


def is_frobenius_action(g: MetabelianGroup) -> bool:
    """True iff every nontrivial top element fixes only the zero kernel element.

    The fixed points of ``phi_l`` on cyclic factor ``Z_m`` are the solutions
    of ``(u - 1) k = 0 (mod m)``, trivial exactly when ``gcd(u - 1, m) == 1``.
    """
    if g.kernel.order == 1 or g.top.order == 1:
        return False
    orders = g.kernel.factor_orders
    if len(g.top.factor_orders) == 1 and all(is_prime(m) for m in orders):
        # One cyclic top generator on prime factors: fixed-point-free iff
        # each multiplier has order exactly |top|.
        n = g.top.factor_orders[0]
        return all(
            multiplicative_order(u, p) == n
            for u, p in zip(g.action.multipliers[0], orders)
        )
    for l in g.top.elements():
        if all(x == 0 for x in l):
            continue
        for j, m in enumerate(orders):
            u = g.action.multiplier_for(l, j, m)
            if math.gcd(u - 1, m) != 1:
                return False
    return True


def class_size(g: MetabelianGroup, x: Element) -> int:
    """Conjugacy class size of x, via the kernel fast path or orbit closure."""
    k, l = x
    if all(v == 0 for v in l):
        # Kernel elements: conjugation by the kernel fixes them (kernel is
        # abelian), so the class is the top-orbit of k under the action.
        stab = 0
        for t in g.top.elements():
            if g.action.apply(t, k, g.kernel.factor_orders) == k:
                stab += 1
        return g.top.order // stab
    gens = g.generators()
    gens += [g.inv(e) for e in gens]
    orbit = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for e in gens:
                z = g.conjugate(e, y)
                if z not in orbit:
                    orbit.add(z)
                    nxt.append(z)
        frontier = nxt
    return len(orbit)


def convolve_spectra(a: Counter[int], b: Counter[int]) -> Counter[int]:
    """Spectrum of a direct product: pairwise products with multiplicity."""
    out: Counter[int] = Counter()
    for s1, c1 in a.items():
        for s2, c2 in b.items():
            out[s1 * s2] += c1 * c2
    return out


def spectrum_total(spectrum: Counter[int]) -> int:
    """Sum of the multiset, i.e. the group order it came from."""
    return sum(size * count for size, count in spectrum.items())


def class_size_spectrum(
    g: MetabelianGroup, *, cap: int = DEFAULT_SPECTRUM_CAP
) -> Counter[int]:
    """Full class-size multiset of g as {size: multiplicity}.

    Fast paths: trivial action (all singletons), verified Frobenius groups
    (three sizes in closed form), and coprime direct products (convolution
    of factor spectra).  Otherwise the orbit partition runs over all
    elements, capped at ``cap``.
    """
    if g.factors:
        out = Counter({1: 1})
        for part in g.factors:
            out = convolve_spectra(out, class_size_spectrum(part, cap=cap))
        if spectrum_total(out) != g.order:  # pragma: no cover - internal sanity
            raise AssertionError("product spectrum does not sum to group order")
        return out
    if g.is_abelian:
        return Counter({1: g.order})
    if g.frobenius:
        kernel_order = g.kernel.order
        n = g.top.order
        return Counter({1: 1, n: (kernel_order - 1) // n, kernel_order: n - 1})
    if g.order > cap:
        raise CapExceeded(
            f"group of order {g.order} exceeds spectrum cap {cap} "
            "and no structured fast path applies"
        )
    return _orbit_partition_spectrum(g)


def _orbit_partition_spectrum(g: MetabelianGroup) -> Counter[int]:
    gens = g.generators()
    gens += [g.inv(e) for e in gens]
    unseen = set(g.elements())
    spectrum: Counter[int] = Counter()
    while unseen:
        x = min(unseen)
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for e in gens:
                    z = g.conjugate(e, y)
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        unseen -= orbit
        spectrum[len(orbit)] += 1
    return spectrum


# -- permutation realization -------------------------------------------------


def to_permutation(
    g: MetabelianGroup,
    *,
    cap: int | None = None,
    verify_order: bool | None = None,
) -> PermGroup:
    """Faithful permutation realization on one point block per cyclic factor.

    Kernel generators translate their own block; each top generator
    multiplies every kernel block by its unit and translates its own top
    block.  The top blocks make the top part faithful, the kernel blocks
    the rest; the enumerated order is checked against |g| whenever the
    group is small enough to enumerate (FaithfulnessFailure otherwise).
    """
    kernel_orders = g.kernel.factor_orders
    top_orders = g.top.factor_orders
    blocks = list(kernel_orders) + list(top_orders)
    if not blocks:
        return PermGroup([Permutation.identity(1)], name="1")
    offsets = []
    off = 0
    for n in blocks:
        offsets.append(off)
        off += n
    degree = off
    gens = []
    for j, m in enumerate(kernel_orders):
        images = list(range(degree))
        base = offsets[j]
        for x in range(m):
            images[base + x] = base + (x + 1) % m
        gens.append(Permutation(tuple(images)))
    for i, n in enumerate(top_orders):
        images = list(range(degree))
        for j, m in enumerate(kernel_orders):
            base = offsets[j]
            u = g.action.multipliers[i][j]
            for x in range(m):
                images[base + x] = base + (x * u) % m
        base = offsets[len(kernel_orders) + i]
        for x in range(n):
            images[base + x] = base + (x + 1) % n
        gens.append(Permutation(tuple(images)))
    group = PermGroup(gens) if cap is None else PermGroup(gens, cap=cap)
    if verify_order is None:
        verify_order = g.order <= group.cap
    if verify_order:
        if group.order() != g.order:
            raise FaithfulnessFailure(
                f"permutation realization has order {group.order()}, expected {g.order}"
            )
    return group
