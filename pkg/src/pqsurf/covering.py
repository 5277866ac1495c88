"""Generating vectors for group actions on curves.

A generating vector (a_1, b_1, ..., a_g0, b_g0; c_1, ..., c_r) encodes a
branched G-cover of a genus-g0 curve with r branch points: the handles map
to the a/b generators of the base surface group, the c_i are the local
monodromies, and the long relation prod [a_j, b_j] * prod c_i = 1 holds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .chars import ClassFunction, induced_trivial
from .errors import (
    GroupMismatch,
    IdentityElement,
    NotGenerating,
    OrderMismatch,
    RelationFails,
    SearchSpaceTooLarge,
    TrivialMonodromy,
)
from .groups import Group, cyclic_subgroup
from .perms import Permutation

DEFAULT_SEARCH_LIMIT = 10 ** 8


@dataclass(frozen=True)
class GeneratingVector:
    group: Group
    base_genus: int
    handles: tuple[tuple[Permutation, Permutation], ...]
    monodromies: tuple[Permutation, ...]
    orders: tuple[int, ...]

    def __post_init__(self):
        if self.base_genus < 0:
            raise ValueError("base genus must be nonnegative")
        if len(self.handles) != self.base_genus:
            raise ValueError("need one handle pair per unit of base genus")
        if len(self.monodromies) != len(self.orders):
            raise OrderMismatch("one declared order per monodromy required")
        for a, b in self.handles:
            self.group.require(a)
            self.group.require(b)
        for c in self.monodromies:
            self.group.require(c)

    @property
    def num_branch_points(self) -> int:
        return len(self.monodromies)

    def listed_elements(self) -> tuple[Permutation, ...]:
        flat = []
        for a, b in self.handles:
            flat.extend((a, b))
        flat.extend(self.monodromies)
        return tuple(flat)

    def signature(self) -> tuple[int, tuple[int, ...]]:
        return (self.base_genus, self.orders)


def _commutator(a: Permutation, b: Permutation) -> Permutation:
    return a * b * a.inverse() * b.inverse()


def validate(gv: GeneratingVector) -> None:
    """Check the three defining invariants; raises the named violation."""
    group = gv.group
    for c in gv.monodromies:
        if c.is_identity():
            raise TrivialMonodromy("a local monodromy is the identity")
    for c, m in zip(gv.monodromies, gv.orders):
        if m < 2 or c.order() != m:
            raise OrderMismatch(f"monodromy has order {c.order()}, declared {m}")
    word = group.identity
    for a, b in gv.handles:
        word = word * _commutator(a, b)
    for c in gv.monodromies:
        word = word * c
    if not word.is_identity():
        raise RelationFails("long relation does not close up")
    listed = gv.listed_elements()
    if _closure_size(listed, group) != group.order:
        raise NotGenerating("listed elements generate a proper subgroup")


def _closure_size(elements, group: Group) -> int:
    seen = {group.identity}
    frontier = [group.identity]
    gens = [g for g in elements if not g.is_identity()]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = s * x
            if y not in seen:
                seen.add(y)
                frontier.append(y)
                if len(seen) == group.order:
                    return group.order
    return len(seen)


def genus(gv: GeneratingVector) -> int:
    """Genus of the covering curve by Riemann-Hurwitz."""
    validate(gv)
    n = gv.group.order
    rhs = n * (2 * gv.base_genus - 2) + sum(
        (n // m) * (m - 1) for m in gv.orders
    )
    assert rhs % 2 == 0
    g = (rhs + 2) // 2
    assert g >= 0
    return g


def hurwitz_character(gv: GeneratingVector) -> ClassFunction:
    """Character of the group action on H^1 of the covering curve:
    2*triv + 2(g0-1)*regular + sum_i (regular - induced from <c_i>)."""
    validate(gv)
    group = gv.group
    k = len(group.classes)
    regular = induced_trivial(group, (group.identity,)).values
    values = [2 + 2 * (gv.base_genus - 1) * regular[c] for c in range(k)]
    for ci in gv.monodromies:
        ind = induced_trivial(group, cyclic_subgroup(group, ci)).values
        for c in range(k):
            values[c] += regular[c] - ind[c]
    cf = ClassFunction(group, tuple(values))
    assert cf.values[0] == 2 * genus(gv)
    return cf


# -- fixed points ----------------------------------------------------------

@dataclass(frozen=True)
class FixedPoint:
    """A point of the covering curve fixed by a queried element: the coset
    x<c_j> above branch point j, with the local rotation exponent of the
    element (the distinguished stabilizer generator x c_j x^-1 rotates by
    the primitive root of unity of order m_j)."""

    branch_index: int
    coset_rep: Permutation
    rotation_exponent: int


def _cosets(group: Group, subgroup: frozenset[Permutation]):
    seen: set[frozenset] = set()
    out = []
    for x in group.elements:
        coset = frozenset(x * h for h in subgroup)
        if coset not in seen:
            seen.add(coset)
            out.append(coset)
    return out


def _discrete_log(base: Permutation, target: Permutation, order: int) -> int:
    x = Permutation.identity(base.degree)
    for s in range(order):
        if x == target:
            return s
        x = x * base
    raise ValueError("element not in cyclic subgroup")


def fixed_point_data(gv: GeneratingVector, g: Permutation) -> tuple[FixedPoint, ...]:
    """All fixed points of g on the covering curve, organised by branch fiber."""
    group = gv.group
    group.require(g)
    if g.is_identity():
        raise IdentityElement("fixed points are only reported for nontrivial elements")
    validate(gv)
    out = []
    for j, (c, m) in enumerate(zip(gv.monodromies, gv.orders), start=1):
        sub = cyclic_subgroup(group, c)
        for coset in _cosets(group, sub):
            x = min(coset)
            conj = x.inverse() * g * x
            if conj not in sub:
                continue
            s = _discrete_log(c, conj, m)
            n = g.order()
            # conj = c^s with gcd(s, m) = m/n; rotation exponent is s/(m/n)
            assert s % (m // n) == 0
            t = (s // (m // n)) % n
            out.append(FixedPoint(branch_index=j, coset_rep=x, rotation_exponent=t))
    return tuple(out)


# -- exhaustive search -------------------------------------------------------

def search_generating_vectors(
    group: Group,
    base_genus: int,
    orders,
    max_space: int = DEFAULT_SEARCH_LIMIT,
) -> tuple[GeneratingVector, ...]:
    """All generating vectors with the given signature, up to simultaneous
    conjugation, in a deterministic order.  The final monodromy is forced by
    the long relation, so the scan runs over |G|^(2*g0 + r - 1) tuples."""
    orders = tuple(int(m) for m in orders)
    r = len(orders)
    if group.order ** (2 * base_genus + r) > max_space:
        raise SearchSpaceTooLarge(
            f"|G|^(2g0+r) = {group.order ** (2 * base_genus + r)} exceeds {max_space}"
        )
    for m in orders:
        if m < 2:
            raise OrderMismatch("branching orders must be at least 2")

    by_order: dict[int, list[Permutation]] = {}
    for m in set(orders):
        by_order[m] = [g for g in group.elements if g.order() == m]
    if any(not by_order[m] for m in set(orders)):
        return ()

    conjugators = [(x, x.inverse()) for x in group.elements]

    def canonical(vec: tuple[Permutation, ...]) -> tuple:
        return min(
            tuple((x * g * xi).images for g in vec) for x, xi in conjugators
        )

    found: dict[tuple, tuple[Permutation, ...]] = {}
    handle_pool = [group.elements] * (2 * base_genus)
    free_monos = [by_order[m] for m in orders[:-1]] if r else []

    for handle_vals in itertools.product(*handle_pool):
        word = group.identity
        for i in range(0, len(handle_vals), 2):
            word = word * _commutator(handle_vals[i], handle_vals[i + 1])
        if r == 0:
            if not word.is_identity():
                continue
            candidates = [()]
        else:
            candidates = itertools.product(*free_monos)
        for mono_head in candidates:
            if r:
                prefix = word
                for c in mono_head:
                    prefix = prefix * c
                last = prefix.inverse()
                if last.is_identity() or last.order() != orders[-1]:
                    continue
                monos = mono_head + (last,)
            else:
                monos = ()
            listed = handle_vals + monos
            if _closure_size(listed, group) != group.order:
                continue
            key = canonical(listed)
            if key not in found:
                found[key] = listed
    vectors = []
    for key in sorted(found):
        flat = found[key]
        handles = tuple(
            (flat[2 * i], flat[2 * i + 1]) for i in range(base_genus)
        )
        monos = flat[2 * base_genus:]
        gv = GeneratingVector(group, base_genus, handles, monos, orders)
        validate(gv)
        vectors.append(gv)
    return tuple(vectors)


def require_same_group(gv1: GeneratingVector, gv2: GeneratingVector) -> Group:
    if gv1.group != gv2.group:
        raise GroupMismatch("generating vectors live over different groups")
    return gv1.group
