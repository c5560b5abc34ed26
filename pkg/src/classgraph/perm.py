"""Brute-force permutation group engine.

This is the slow, trusted side of every computation in the package: groups
are enumerated as explicit element sets (breadth-first closure over the
generators, capped), and every query below is a direct scan or orbit walk
over those elements.  No stabilizer chains, no cleverness; at the scale
this package targets (orders in the tens of thousands) the simple thing is
fast enough and easy to trust.

Composition convention: ``(p * q)(i) == p(q(i))`` (apply q first).
Iteration order is deterministic everywhere: elements are reported sorted
lexicographically by image sequence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .errors import CapExceeded, ElementNotInGroup, NotNormal, NotSubgroup
from .primes import prime_factors, valuation

DEFAULT_ENUMERATION_CAP = 10**6

Images = tuple[int, ...]


def _compose(a: Images, b: Images) -> Images:
    return tuple(a[i] for i in b)


def _invert(a: Images) -> Images:
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {0, ..., degree-1}, stored as its image sequence."""

    images: Images

    def __post_init__(self) -> None:
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        seen = [False] * len(images)
        for i in images:
            if not isinstance(i, int) or not 0 <= i < len(images) or seen[i]:
                raise ValueError(f"not a permutation: {images!r}")
            seen[i] = True

    @property
    def degree(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles: list[list[int]]) -> "Permutation":
        """Build from disjoint cycles; points not mentioned are fixed."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                images[a] = b
        return Permutation(tuple(images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(_compose(self.images, other.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> "Permutation":
        return Permutation(_invert(self.images))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        return _order_of_images(self.images)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its least point, ascending."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return tuple(out)

    def moved_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.images) if i != j)


@dataclass(frozen=True)
class SubgroupWitness:
    """A subgroup given as an explicit element set, with a normality flag."""

    elements: frozenset[Permutation]
    is_normal: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def sorted_elements(self) -> tuple[Permutation, ...]:
        return tuple(sorted(self.elements))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    size: int
    members: frozenset[Permutation]


@dataclass(frozen=True)
class PiElements:
    """Elements whose order only involves primes from pi, plus a closure verdict."""

    elements: frozenset[Permutation]
    is_subgroup: bool


def _order_of_images(images: Images) -> int:
    seen = [False] * len(images)
    order = 1
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        order = math.lcm(order, length)
    return order


def _closure(
    seed: set[Images], generators: list[Images], limit: int | None = None
) -> set[Images] | None:
    """Right-multiplication closure of seed under generators.

    Returns None when the closure grows past `limit` (finite groups make
    right-closure sufficient: inverses appear as powers).
    """
    out = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = _compose(x, g)
                if y not in out:
                    out.add(y)
                    if limit is not None and len(out) > limit:
                        return None
                    nxt.append(y)
        frontier = nxt
    return out


def _generating_subset(elements: list[Images]) -> list[Images]:
    """A small generating set for the subgroup formed by `elements`."""
    degree = len(elements[0]) if elements else 1
    ident = tuple(range(degree))
    gens: list[Images] = []
    have: set[Images] = {ident}
    for x in sorted(elements):
        if x in have:
            continue
        gens.append(x)
        closed = _closure(have, gens)
        assert closed is not None
        have = closed
    return gens


class PermGroup:
    """A finite group given by permutation generators; queries enumerate it."""

    def __init__(
        self,
        generators: list[Permutation] | tuple[Permutation, ...],
        *,
        name: str = "",
        cap: int = DEFAULT_ENUMERATION_CAP,
    ) -> None:
        gens = tuple(generators)
        if not gens:
            raise ValueError("a permutation group needs at least one generator")
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators must share a degree")
        if cap < 1:
            raise ValueError(f"cap must be >= 1, got {cap}")
        self.generators = gens
        self.degree = degree
        self.name = name
        self.cap = cap
        self._elements: tuple[Permutation, ...] | None = None
        self._element_set: frozenset[Images] | None = None
        self._classes: tuple[ConjugacyClass, ...] | None = None
        self._class_size_by_images: dict[Images, int] | None = None

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"PermGroup({label}, {len(self.generators)} generators)"

    # -- enumeration ---------------------------------------------------

    def elements(self) -> tuple[Permutation, ...]:
        """All elements, sorted lexicographically by image sequence."""
        if self._elements is None:
            ident = tuple(range(self.degree))
            gens = [g.images for g in self.generators]
            closed = _closure({ident}, gens, limit=self.cap)
            if closed is None:
                raise CapExceeded(
                    f"group closure exceeded cap {self.cap} "
                    f"(degree {self.degree}, {len(gens)} generators)"
                )
            self._elements = tuple(Permutation(x) for x in sorted(closed))
            self._element_set = frozenset(closed)
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def _images_set(self) -> frozenset[Images]:
        self.elements()
        assert self._element_set is not None
        return self._element_set

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and p.images in self._images_set()

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    # -- conjugacy -----------------------------------------------------

    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Classes via conjugation-orbit closure under the generators."""
        if self._classes is not None:
            return self._classes
        elems = self.elements()
        gen_pairs = [(g.images, _invert(g.images)) for g in self.generators]
        unseen = set(self._images_set())
        classes = []
        size_by_images: dict[Images, int] = {}
        for rep in elems:
            x = rep.images
            if x not in unseen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                nxt = []
                for y in frontier:
                    for g, ginv in gen_pairs:
                        z = _compose(_compose(g, y), ginv)
                        if z not in orbit:
                            orbit.add(z)
                            nxt.append(z)
                frontier = nxt
            unseen -= orbit
            members = frozenset(Permutation(y) for y in orbit)
            classes.append(ConjugacyClass(rep, len(orbit), members))
            for y in orbit:
                size_by_images[y] = len(orbit)
        total = sum(c.size for c in classes)
        if total != len(elems):  # pragma: no cover - internal sanity
            raise AssertionError("conjugacy classes do not partition the group")
        self._classes = tuple(classes)
        self._class_size_by_images = size_by_images
        return self._classes

    def class_size_spectrum(self) -> Counter[int]:
        """Multiset of conjugacy class sizes, as {size: multiplicity}."""
        return Counter(c.size for c in self.conjugacy_classes())

    def class_size_of(self, g: Permutation) -> int:
        if g not in self:
            raise ElementNotInGroup(f"{g!r} is not in {self!r}")
        self.conjugacy_classes()
        assert self._class_size_by_images is not None
        return self._class_size_by_images[g.images]

    # -- subgroup queries ------------------------------------------------

    def centralizer(self, g: Permutation) -> SubgroupWitness:
        """All elements commuting with g."""
        if g not in self:
            raise ElementNotInGroup(f"{g!r} is not in {self!r}")
        gi = g.images
        hits = [h for h in self.elements() if _compose(h.images, gi) == _compose(gi, h.images)]
        elems = frozenset(hits)
        return SubgroupWitness(elems, self._set_is_normal(elems))

    def center(self) -> SubgroupWitness:
        """Elements commuting with every generator (hence with everything)."""
        gens = [g.images for g in self.generators]
        hits = [
            h
            for h in self.elements()
            if all(_compose(h.images, g) == _compose(g, h.images) for g in gens)
        ]
        return SubgroupWitness(frozenset(hits), True)

    def derived_subgroup(self) -> SubgroupWitness:
        """Normal closure of the commutators of all generator pairs."""
        gens = [g.images for g in self.generators]
        inv = {g: _invert(g) for g in gens}
        ident = tuple(range(self.degree))
        comms = {
            _compose(_compose(inv[a], inv[b]), _compose(a, b))
            for a in gens
            for b in gens
        }
        comms.discard(ident)
        current = _closure({ident}, sorted(comms)) or {ident}
        while True:
            new = {
                _compose(_compose(g, x), inv[g])
                for g in gens
                for x in current
            } - current
            if not new:
                break
            current = _closure(current, sorted(new)) or current
        return SubgroupWitness(frozenset(Permutation(x) for x in current), True)

    def sylow_is_central(self, p: int) -> bool:
        """True iff the p-part of |Z(G)| equals the p-part of |G|."""
        return valuation(self.center().order, p) == valuation(self.order(), p)

    def pi_elements(self, pi: set[int] | frozenset[int]) -> PiElements:
        """Elements whose order has all prime divisors in pi, plus closure check."""
        pi = frozenset(pi)
        hits = [
            h for h in self.elements() if set(prime_factors(_order_of_images(h.images))) <= pi
        ]
        return PiElements(frozenset(hits), self._is_subgroup_images({h.images for h in hits}))

    def _is_subgroup_images(self, images: set[Images]) -> bool:
        if not images or tuple(range(self.degree)) not in images:
            return False
        if len(images) == self.order():
            return True
        if self.order() % len(images) != 0:
            return False
        gens = _generating_subset(sorted(images))
        closed = _closure({tuple(range(self.degree))}, gens, limit=len(images))
        return closed is not None and len(closed) == len(images)

    def is_subgroup_set(self, elements: frozenset[Permutation]) -> bool:
        return self._is_subgroup_images({p.images for p in elements})

    def _set_is_normal(self, elements: frozenset[Permutation]) -> bool:
        images = {p.images for p in elements}
        for g in self.generators:
            gi, ginv = g.images, _invert(g.images)
            if any(_compose(_compose(gi, x), ginv) not in images for x in images):
                return False
        return True

    # -- Frobenius pair test ---------------------------------------------

    def frobenius_pair_check(
        self, kernel: SubgroupWitness, complement: SubgroupWitness
    ) -> bool:
        """True iff (kernel, complement) exhibits this group as Frobenius.

        Checks: kernel normal, trivial intersection, orders multiplying to
        |G|, and every nontrivial complement element conjugating no
        nontrivial kernel element to itself.
        """
        n_imgs = {p.images for p in kernel.elements}
        c_imgs = {p.images for p in complement.elements}
        if not self._is_subgroup_images(set(n_imgs)):
            raise NotSubgroup("kernel candidate is not a subgroup")
        if not self._is_subgroup_images(set(c_imgs)):
            raise NotSubgroup("complement candidate is not a subgroup")
        if not self._set_is_normal(kernel.elements):
            raise NotNormal("kernel candidate is not normal")
        ident = tuple(range(self.degree))
        if n_imgs & c_imgs != {ident}:
            return False
        if len(n_imgs) * len(c_imgs) != self.order():
            return False
        for c in c_imgs:
            if c == ident:
                continue
            cinv = _invert(c)
            for x in n_imgs:
                if x != ident and _compose(_compose(c, x), cinv) == x:
                    return False
        return True

    # -- constructions -----------------------------------------------------

    def direct_product(self, other: "PermGroup") -> "PermGroup":
        """Action on the disjoint union of the two point sets."""
        d1, d2 = self.degree, other.degree
        gens = [
            Permutation(g.images + tuple(range(d1, d1 + d2))) for g in self.generators
        ] + [
            Permutation(tuple(range(d1)) + tuple(i + d1 for i in g.images))
            for g in other.generators
        ]
        name = f"{self.name}x{other.name}" if self.name and other.name else ""
        return PermGroup(gens, name=name, cap=max(self.cap, other.cap))

    def restricted(self, elements: frozenset[Permutation], *, name: str = "") -> "PermGroup":
        """The subgroup on `elements`, re-indexed to the points it moves."""
        support = sorted({pt for p in elements for pt in p.moved_points()})
        if not support:
            return PermGroup([Permutation.identity(1)], name=name, cap=self.cap)
        index = {pt: i for i, pt in enumerate(support)}
        restricted = [
            tuple(index[p.images[pt]] for pt in support) for p in sorted(elements)
        ]
        gens = _generating_subset(restricted)
        return PermGroup([Permutation(g) for g in gens], name=name, cap=self.cap)


def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup([Permutation.identity(degree)], name="1")


def symmetric_group(degree: int) -> PermGroup:
    """S_n on {0..n-1}; handy for tests and spec files."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    if degree == 1:
        return trivial_group(1)
    cycle = Permutation(tuple(range(1, degree)) + (0,))
    swap = Permutation((1, 0) + tuple(range(2, degree)))
    return PermGroup([cycle, swap], name=f"S{degree}")
