"""Finite permutation groups: closure, conjugacy classes, and the built-in catalog.

Conjugacy classes are ordered canonically (identity class first, then by
element order and lexicographically smallest representative) so that every
derived table and report is stable across runs.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from .errors import NonPermutation, NotInGroup, SizeLimit, UnknownName
from .perms import Permutation

DEFAULT_ORDER_CAP = 10_000

CATALOG_NAMES = ("C2", "C4", "C6", "V4", "S3", "D4", "Q8", "A4", "C4xC2semiC2")


class Group:
    """A finite permutation group with precomputed conjugacy data."""

    def __init__(self, generators, elements) -> None:
        self.generators: tuple[Permutation, ...] = tuple(generators)
        self.elements: tuple[Permutation, ...] = tuple(sorted(elements))
        self.degree: int = self.elements[0].degree
        self.order: int = len(self.elements)
        self._index = {g: i for i, g in enumerate(self.elements)}
        self.classes: tuple[tuple[Permutation, ...], ...] = _conjugacy_classes(
            self.elements, self.generators
        )
        self.class_reps: tuple[Permutation, ...] = tuple(c[0] for c in self.classes)
        self.class_sizes: tuple[int, ...] = tuple(len(c) for c in self.classes)
        self._class_of = {}
        for idx, cls in enumerate(self.classes):
            for g in cls:
                self._class_of[g] = idx
        self.exponent: int = lcm(*(g.order() for g in self.elements))

    # Groups compare by their underlying element set; all derived data is
    # a function of it.
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Group)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def __repr__(self) -> str:
        return f"Group(order={self.order}, degree={self.degree}, classes={len(self.classes)})"

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, g) -> bool:
        return isinstance(g, Permutation) and g in self._index

    def __iter__(self):
        return iter(self.elements)

    def require(self, g: Permutation) -> Permutation:
        if g not in self:
            raise NotInGroup(f"{g!r} is not an element of this group")
        return g

    def class_index(self, g: Permutation) -> int:
        self.require(g)
        return self._class_of[g]

    def is_abelian(self) -> bool:
        return all(s == 1 for s in self.class_sizes)


def _conjugacy_classes(elements, generators):
    """Orbits of the conjugation action, enumerated deterministically."""
    remaining = set(elements)
    classes = []
    for x in elements:
        if x not in remaining:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for s in generators:
                z = s * y * s.inverse()
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        remaining -= orbit
        classes.append(tuple(sorted(orbit)))
    classes.sort(key=lambda c: (c[0].order(), c[0].images))
    return tuple(classes)


def group_from_generators(gens, max_order: int = DEFAULT_ORDER_CAP) -> Group:
    """Close a generator list under composition and inverse.

    Raises SizeLimit if the closure exceeds ``max_order`` elements.
    """
    gens = tuple(gens)
    if not gens:
        raise NonPermutation("at least one generator is required")
    degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise NotInGroup("generators have mixed degrees")
    identity = Permutation.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = s * x
            if y not in elements:
                if len(elements) >= max_order:
                    raise SizeLimit(f"closure exceeds {max_order} elements")
                elements.add(y)
                frontier.append(y)
    return Group(gens, elements)


def element_order(group: Group, g: Permutation) -> int:
    group.require(g)
    return g.order()


def cyclic_subgroup(group: Group, g: Permutation) -> frozenset[Permutation]:
    group.require(g)
    out = set()
    x = group.identity
    while True:
        out.add(x)
        x = x * g
        if x in out:
            break
    return frozenset(out)


def centralizer_order(group: Group, g: Permutation) -> int:
    group.require(g)
    return sum(1 for x in group.elements if x * g == g * x)


def power_map(group: Group, k: int) -> tuple[int, ...]:
    """Class index of rep**k for each class; well defined on classes."""
    return tuple(group.class_index(rep ** k) for rep in group.class_reps)


# -- catalog ----------------------------------------------------------------

def _regular_generators(elements, mul, gens):
    """Left-multiplication permutations of abstractly given generators.

    ``elements`` must be sorted; positions are 1-based so that the identity
    (smallest element) sits at point 1.
    """
    index = {x: i + 1 for i, x in enumerate(elements)}
    perms = []
    for s in gens:
        images = [0] * len(elements)
        for x in elements:
            images[index[x] - 1] = index[mul(s, x)]
        perms.append(Permutation(images))
    return perms


def _quaternion_generators():
    # Elements x^a y^b with x^4 = 1, y^2 = x^2, y x y^-1 = x^-1.
    els = sorted((a, b) for a in range(4) for b in range(2))

    def mul(u, v):
        a, b = u
        c, d = v
        a2 = (a + (c if b == 0 else -c) + (2 if b and d else 0)) % 4
        return (a2, (b + d) % 2)

    return _regular_generators(els, mul, [(1, 0), (0, 1)])


def _pauli_generators():
    # Central product of a dihedral group of order 8 with C4: elements
    # w^a x^b z^c with w central of order 4, x^2 = z^2 = 1, z x = w^2 x z.
    els = sorted((a, b, c) for a in range(4) for b in range(2) for c in range(2))

    def mul(u, v):
        a1, b1, c1 = u
        a2, b2, c2 = v
        return ((a1 + a2 + 2 * c1 * b2) % 4, (b1 + b2) % 2, (c1 + c2) % 2)

    return _regular_generators(els, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def _catalog_generators(name: str):
    if name == "C2":
        return [Permutation((2, 1))]
    if name == "C4":
        return [Permutation((2, 3, 4, 1))]
    if name == "C6":
        return [Permutation((2, 3, 4, 5, 6, 1))]
    if name == "V4":
        return [Permutation((2, 1, 4, 3)), Permutation((3, 4, 1, 2))]
    if name == "S3":
        return [Permutation((2, 1, 3)), Permutation((2, 3, 1))]
    if name == "D4":
        return [Permutation((2, 3, 4, 1)), Permutation((3, 2, 1, 4))]
    if name == "A4":
        return [Permutation((2, 1, 4, 3)), Permutation((2, 3, 1, 4))]
    if name == "Q8":
        return _quaternion_generators()
    if name == "C4xC2semiC2":
        return _pauli_generators()
    raise UnknownName(f"unknown catalog group {name!r}; known: {', '.join(CATALOG_NAMES)}")


@lru_cache(maxsize=None)
def catalog_group(name: str) -> Group:
    """Fixed permutation realization of a named group; stable across runs."""
    return group_from_generators(_catalog_generators(name))
