"""Finite-group arithmetic on dense Cayley tables.

Every group is a `FiniteGroup` whose elements are the indices ``0..n-1`` with
the identity always at index 0. Construction, subgroups, quotients,
homomorphisms and conjugacy classes live here; every other module builds on
these types.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from hvnfinite.errors import (
    GroupError,
    GroupMismatch,
    InvariantViolation,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotNormal,
    OrderCapExceeded,
)
from hvnfinite.utils.config import Limits, resolve_limits

logger = logging.getLogger(__name__)

Permutation = tuple[int, ...]


# ---------------------------------------------------------------------------
# Permutation helpers
# ---------------------------------------------------------------------------


def identity_permutation(degree: int) -> Permutation:
    """Return the identity permutation of ``range(degree)``."""
    return tuple(range(degree))


def compose_permutations(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Return ``p ∘ q`` (apply ``q`` first, then ``p``)."""
    return tuple(p[x] for x in q)


def invert_permutation(p: Sequence[int]) -> Permutation:
    """Return the inverse permutation of ``p``."""
    inverse = [0] * len(p)
    for x, y in enumerate(p):
        inverse[y] = x
    return tuple(inverse)


def is_permutation(images: Sequence[int], degree: int) -> bool:
    """Whether ``images`` is a bijection of ``range(degree)``."""
    return len(images) == degree and sorted(images) == list(range(degree))


def cycle_notation(p: Sequence[int]) -> str:
    """Render a permutation in cycle notation, e.g. ``(0 1 2)(3 4)``."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p[x]
        cycles.append("(" + " ".join(str(x) for x in cycle) + ")")
    return "".join(cycles) or "()"


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    Attributes:
        table: ``table[a][b]`` is the index of the product ``a·b``
        labels: optional display string per element

    Equality and hashing go through the content hash of the table, so two
    groups with identical tables are interchangeable as cache keys.
    """

    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conjugate(self, g: int, x: int) -> int:
        """Return ``g·x·g⁻¹``."""
        return self.table[self.table[g][x]][self.inverses[g]]

    def power(self, a: int, k: int) -> int:
        k %= self.element_orders[a]
        result = 0
        for _ in range(k):
            result = self.table[result][a]
        return result

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return self.labels[a]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for a in self.elements:
            k, x = 1, a
            while x != 0:
                x = self.table[x][a]
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*self.element_orders)

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in self.elements
            for b in range(a + 1, self.order)
        )

    @cached_property
    def content_hash(self) -> str:
        """SHA-256 of the canonical JSON form of the table."""
        payload = json.dumps(self.table, separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or self.content_hash == other.content_hash

    def __hash__(self) -> int:
        return hash(self.content_hash)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, hash={self.content_hash[:12]})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    @classmethod
    def from_members(cls, parent: FiniteGroup, members: Iterable[int]) -> Subgroup:
        """Build a subgroup, validating closure, inverses and Lagrange."""
        member_set = set(members)
        if 0 not in member_set:
            raise GroupError("Subgroup must contain the identity 0")
        for a in member_set:
            if not 0 <= a < parent.order:
                raise GroupError(f"Element {a} is out of range for order {parent.order}")
            if parent.inv(a) not in member_set:
                raise GroupError(f"Subgroup is not closed under the inverse of {a}")
            for b in member_set:
                if parent.mul(a, b) not in member_set:
                    raise GroupError(
                        f"Subgroup is not closed under the product of {a} and {b}"
                    )
        if parent.order % len(member_set) != 0:
            raise InvariantViolation(
                f"Subgroup of size {len(member_set)} does not divide {parent.order}"
            )
        return cls(parent, tuple(sorted(member_set)))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, element: object) -> bool:
        return element in self.member_set

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={list(self.members)})"


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism given by the image index of every source element."""

    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, element: int) -> int:
        return self.images[element]

    def validate(self) -> GroupHom:
        """Check the homomorphism law exhaustively; return self."""
        if len(self.images) != self.source.order:
            raise GroupError("Homomorphism must assign an image to every element")
        if self.images[0] != 0:
            raise GroupError("Homomorphism must send the identity to the identity")
        for s in self.source.elements:
            for t in self.source.elements:
                lhs = self.images[self.source.mul(s, t)]
                rhs = self.target.mul(self.images[s], self.images[t])
                if lhs != rhs:
                    raise GroupError(
                        f"Map is not a homomorphism on the pair ({s}, {t})"
                    )
        return self

    def kernel(self) -> Subgroup:
        return Subgroup(
            self.source, tuple(g for g in self.source.elements if self.images[g] == 0)
        )

    def image(self) -> Subgroup:
        return Subgroup(self.target, tuple(sorted(set(self.images))))

    @property
    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.target.order

    @property
    def is_injective(self) -> bool:
        return len(set(self.images)) == self.source.order

    def compose(self, other: GroupHom) -> GroupHom:
        """Return ``other ∘ self`` (apply this map first)."""
        if other.source != self.target:
            raise GroupMismatch("Cannot compose homomorphisms with mismatched groups")
        return GroupHom(
            self.source, other.target, tuple(other.images[x] for x in self.images)
        )


@dataclass(frozen=True)
class ConjugacyClass:
    """A conjugacy class with its smallest member as representative."""

    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _check_order_cap(what: str, order: int, cap: int) -> None:
    if order > cap:
        raise OrderCapExceeded(what, order, cap)


def _from_trusted_table(
    table: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> FiniteGroup:
    return FiniteGroup(
        tuple(tuple(row) for row in table),
        tuple(labels) if labels is not None else None,
    )


def group_from_cayley_table(
    table: Sequence[Sequence[int]],
    labels: Sequence[str] | None = None,
    limits: Limits | None = None,
) -> FiniteGroup:
    """Validate a multiplication table and return the group it defines.

    The identity is moved to index 0 by swapping it with element 0 when
    necessary. Errors name elements by their indices in the input table.

    Raises:
        NoIdentity: no two-sided identity exists
        NoInverse: some row or column is not a permutation
        NotAssociative: some triple violates associativity
    """
    limits = resolve_limits(limits)
    n = len(table)
    if n == 0:
        raise GroupError("Cayley table must have at least one row")
    _check_order_cap("Cayley table", n, limits.table_order)
    for r, row in enumerate(table):
        if len(row) != n:
            raise GroupError(f"Row {r} has {len(row)} entries, expected {n}")
        for entry in row:
            if not 0 <= entry < n:
                raise GroupError(f"Row {r} has entry {entry} outside [0, {n})")
    if labels is not None and len(labels) != n:
        raise GroupError(f"Expected {n} labels, got {len(labels)}")

    identity = next(
        (
            e
            for e in range(n)
            if all(table[e][a] == a and table[a][e] == a for a in range(n))
        ),
        None,
    )
    if identity is None:
        raise NoIdentity()

    full = list(range(n))
    for a in range(n):
        if sorted(table[a]) != full:
            raise NoInverse(a)
    for b in range(n):
        seen: set[int] = set()
        for a in range(n):
            if table[a][b] in seen:
                raise NoInverse(b, row=a)
            seen.add(table[a][b])

    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            row_b = table[b]
            row_ab = table[ab]
            for c in range(n):
                if row_ab[c] != row_a[row_b[c]]:
                    raise NotAssociative(a, b, c)

    if identity == 0:
        return _from_trusted_table(table, labels)

    swap = list(range(n))
    swap[0], swap[identity] = identity, 0
    relabeled = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            relabeled[swap[a]][swap[b]] = swap[table[a][b]]
    new_labels = None
    if labels is not None:
        new_labels = [labels[swap[a]] for a in range(n)]
    logger.debug("Relabeled identity %d to index 0", identity)
    return _from_trusted_table(relabeled, new_labels)


def group_cyclic(n: int, limits: Limits | None = None) -> FiniteGroup:
    """Return the cyclic group of order ``n`` with ``table[a][b] = (a+b) mod n``."""
    if n < 1:
        raise GroupError(f"Cyclic group order must be positive, got {n}")
    _check_order_cap("Cyclic group", n, resolve_limits(limits).table_order)
    return _from_trusted_table(
        [[(a + b) % n for b in range(n)] for a in range(n)],
        [str(a) for a in range(n)],
    )


def group_direct_product(
    a: FiniteGroup, b: FiniteGroup, limits: Limits | None = None
) -> FiniteGroup:
    """Return ``A × B`` with the pair ``(x, y)`` encoded as ``x·|B| + y``."""
    order = a.order * b.order
    _check_order_cap("Direct product", order, resolve_limits(limits).table_order)
    m = b.order
    table = [
        [a.table[x1][x2] * m + b.table[y1][y2] for x2 in a.elements for y2 in b.elements]
        for x1 in a.elements
        for y1 in b.elements
    ]
    labels = [f"({a.label(x)},{b.label(y)})" for x in a.elements for y in b.elements]
    return _from_trusted_table(table, labels)


def group_from_permutations(
    degree: int,
    generators: Sequence[Sequence[int]],
    limits: Limits | None = None,
) -> tuple[FiniteGroup, tuple[Permutation, ...]]:
    """Close permutation generators under composition.

    Elements are discovered breadth-first from the identity by right
    multiplication with the generators. The returned tuple holds, for every
    element index, the permutation it acts by; the action satisfies
    ``perm[s·t] = perm[s] ∘ perm[t]``.
    """
    if degree < 1:
        raise GroupError(f"Permutation degree must be positive, got {degree}")
    cap = resolve_limits(limits).table_order
    gens = []
    for k, generator in enumerate(generators):
        if not is_permutation(list(generator), degree):
            raise GroupError(f"Generator {k} is not a bijection of [0, {degree})")
        gens.append(tuple(generator))

    start = time.time()
    identity = identity_permutation(degree)
    elements: list[Permutation] = [identity]
    index = {identity: 0}
    position = 0
    while position < len(elements):
        x = elements[position]
        position += 1
        for s in gens:
            y = compose_permutations(x, s)
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                if len(elements) > cap:
                    raise OrderCapExceeded("Permutation group closure", len(elements), cap)

    table = [
        [index[compose_permutations(p, q)] for q in elements] for p in elements
    ]
    logger.info(
        "Closed %d generators of degree %d to a group of order %d in %.2f seconds",
        len(gens),
        degree,
        len(elements),
        time.time() - start,
    )
    labels = [cycle_notation(p) for p in elements]
    return _from_trusted_table(table, labels), tuple(elements)


def relabel_group(group: FiniteGroup, relabeling: Sequence[int]) -> tuple[FiniteGroup, GroupHom]:
    """Rename elements by ``relabeling`` (old index → new index, fixing 0).

    Returns the relabeled group and the isomorphism from the old group.
    """
    n = group.order
    if not is_permutation(list(relabeling), n) or relabeling[0] != 0:
        raise GroupError("Relabeling must be a permutation fixing the identity 0")
    table = [[0] * n for _ in range(n)]
    for a in group.elements:
        for b in group.elements:
            table[relabeling[a]][relabeling[b]] = relabeling[group.table[a][b]]
    labels = None
    if group.labels is not None:
        inverse = invert_permutation(relabeling)
        labels = [group.labels[inverse[x]] for x in range(n)]
    relabeled = _from_trusted_table(table, labels)
    return relabeled, GroupHom(group, relabeled, tuple(relabeling))


# ---------------------------------------------------------------------------
# Conjugacy
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def conjugacy_classes(group: FiniteGroup) -> tuple[ConjugacyClass, ...]:
    """Partition the group into conjugacy classes.

    Classes are sorted by (size, smallest member); the identity class is
    therefore first.
    """
    assigned = [False] * group.order
    classes = []
    for x in group.elements:
        if assigned[x]:
            continue
        members = sorted({group.conjugate(g, x) for g in group.elements})
        for m in members:
            assigned[m] = True
        classes.append(ConjugacyClass(members[0], tuple(members)))
    classes.sort(key=lambda c: (c.size, c.representative))
    return tuple(classes)


@lru_cache(maxsize=256)
def class_index(group: FiniteGroup) -> tuple[int, ...]:
    """Map every element to the position of its conjugacy class."""
    positions = [0] * group.order
    for i, cls in enumerate(conjugacy_classes(group)):
        for m in cls.members:
            positions[m] = i
    return tuple(positions)


def class_inverse_map(group: FiniteGroup) -> tuple[int, ...]:
    """Map class ``i`` to the class containing the inverses of its members."""
    positions = class_index(group)
    return tuple(
        positions[group.inv(cls.representative)] for cls in conjugacy_classes(group)
    )


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------


def _closure(group: FiniteGroup, seed: Iterable[int], generators: Sequence[int]) -> list[int]:
    elements = list(dict.fromkeys([0, *seed]))
    seen = set(elements)
    position = 0
    while position < len(elements):
        x = elements[position]
        position += 1
        row = group.table[x]
        for s in generators:
            y = row[s]
            if y not in seen:
                seen.add(y)
                elements.append(y)
    return elements


def subgroup_generated(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Return the subgroup generated by the given elements."""
    gens = list(dict.fromkeys(generators))
    return Subgroup(group, tuple(sorted(_closure(group, (), gens))))


def is_normal_subgroup(group: FiniteGroup, subgroup: Subgroup) -> bool:
    """Whether the subgroup is a union of conjugacy classes."""
    if subgroup.parent != group:
        raise GroupMismatch("Subgroup does not belong to the given group")
    members = subgroup.member_set
    positions = class_index(group)
    classes = conjugacy_classes(group)
    return all(
        all(m in members for m in classes[positions[h]].members) for h in subgroup.members
    )


def normal_closure(group: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    """Return the smallest normal subgroup containing the given elements."""
    positions = class_index(group)
    classes = conjugacy_classes(group)
    gens: set[int] = set()
    for x in elements:
        gens.update(classes[positions[x]].members)
    return subgroup_generated(group, sorted(gens))


def _sorted_subgroups(group: FiniteGroup, member_sets: Iterable[frozenset[int]]) -> list[Subgroup]:
    keyed = sorted((len(s), tuple(sorted(s))) for s in member_sets)
    return [Subgroup(group, members) for _, members in keyed]


@lru_cache(maxsize=128)
def normal_subgroups(group: FiniteGroup, limits: Limits | None = None) -> tuple[Subgroup, ...]:
    """Enumerate all normal subgroups, sorted by (size, members).

    Every normal subgroup is a product of normal closures of single classes,
    so the lattice is generated from those closures by pairwise products.
    """
    limits = resolve_limits(limits)
    _check_order_cap("Normal subgroup enumeration", group.order, limits.enumeration_order)
    closures = {
        normal_closure(group, [cls.representative]).member_set
        for cls in conjugacy_classes(group)
    }
    found = {frozenset([0])}
    frontier = list(found)
    while frontier:
        next_frontier = []
        for n in frontier:
            for m in closures:
                if m <= n:
                    continue
                product = frozenset(group.mul(a, b) for a in n for b in m)
                if product not in found:
                    found.add(product)
                    next_frontier.append(product)
        frontier = next_frontier
    return tuple(_sorted_subgroups(group, found))


@lru_cache(maxsize=64)
def all_subgroups(group: FiniteGroup, limits: Limits | None = None) -> tuple[Subgroup, ...]:
    """Enumerate every subgroup, sorted by (size, members).

    Starts from the cyclic subgroups and repeatedly joins a found subgroup with
    a cyclic subgroup it does not contain.
    """
    limits = resolve_limits(limits)
    _check_order_cap("Subgroup enumeration", group.order, limits.enumeration_order)
    start = time.time()
    cyclic: dict[frozenset[int], int] = {}
    for g in group.elements:
        members = frozenset(_closure(group, (), [g]))
        cyclic.setdefault(members, g)
    cyclic_items = sorted(cyclic.items(), key=lambda item: (len(item[0]), item[1]))

    found: dict[frozenset[int], tuple[int, ...]] = {frozenset([0]): ()}
    queue = [frozenset([0])]
    position = 0
    while position < len(queue):
        h = queue[position]
        position += 1
        gens = found[h]
        for members, g in cyclic_items:
            if g in h:
                continue
            joined_gens = (*gens, g)
            joined = frozenset(_closure(group, h, joined_gens))
            if joined not in found:
                found[joined] = joined_gens
                queue.append(joined)
    logger.info(
        "Enumerated %d subgroups of a group of order %d in %.2f seconds",
        len(found),
        group.order,
        time.time() - start,
    )
    return tuple(_sorted_subgroups(group, found))


def conjugate_subgroup(group: FiniteGroup, subgroup: Subgroup, g: int) -> Subgroup:
    """Return ``g·H·g⁻¹``."""
    return Subgroup(group, tuple(sorted(group.conjugate(g, h) for h in subgroup.members)))


@lru_cache(maxsize=64)
def subgroups_up_to_conjugacy(
    group: FiniteGroup, limits: Limits | None = None
) -> tuple[Subgroup, ...]:
    """One representative per conjugacy class of subgroups.

    The representative is the lexicographically smallest member tuple within
    its class; representatives are sorted by (size, members).
    """
    assigned: set[tuple[int, ...]] = set()
    representatives = []
    for h in all_subgroups(group, limits):
        if h.members in assigned:
            continue
        conjugates = {conjugate_subgroup(group, h, g).members for g in group.elements}
        assigned.update(conjugates)
        representatives.append(Subgroup(group, min(conjugates)))
    representatives.sort(key=lambda s: (s.order, s.members))
    return tuple(representatives)


def are_conjugate_subgroups(group: FiniteGroup, a: Subgroup, b: Subgroup) -> int | None:
    """Return a conjugator ``g`` with ``g·A·g⁻¹ = B``, or None."""
    if a.order != b.order:
        return None
    for g in group.elements:
        if conjugate_subgroup(group, a, g).members == b.members:
            return g
    return None


# ---------------------------------------------------------------------------
# Quotients and isomorphisms
# ---------------------------------------------------------------------------


def quotient(group: FiniteGroup, normal: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Return ``G/N`` and the canonical surjection.

    Cosets are numbered by their smallest element, so the coset of the
    identity is index 0.

    Raises:
        NotNormal: the subgroup is not normal in the group
    """
    if not is_normal_subgroup(group, normal):
        raise NotNormal(f"Subgroup {list(normal.members)} is not normal")
    coset_of = [-1] * group.order
    representatives = []
    for g in group.elements:
        if coset_of[g] != -1:
            continue
        for h in normal.members:
            coset_of[group.mul(g, h)] = len(representatives)
        representatives.append(g)
    table = [
        [coset_of[group.mul(r, s)] for s in representatives] for r in representatives
    ]
    labels = [f"{group.label(r)}N" for r in representatives]
    factor = _from_trusted_table(table, labels)
    return factor, GroupHom(group, factor, tuple(coset_of))


def subgroup_as_group(subgroup: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Return the subgroup as a standalone group and its inclusion into the parent.

    The k-th element of the standalone group is the k-th sorted member.
    """
    parent = subgroup.parent
    position = {m: k for k, m in enumerate(subgroup.members)}
    table = [
        [position[parent.mul(a, b)] for b in subgroup.members] for a in subgroup.members
    ]
    labels = [parent.label(m) for m in subgroup.members]
    standalone = _from_trusted_table(table, labels)
    return standalone, GroupHom(standalone, parent, subgroup.members)


def generating_set(group: FiniteGroup) -> list[int]:
    """Greedy generating set preferring elements of large order."""
    candidates = sorted(group.elements, key=lambda g: (-group.element_orders[g], g))
    gens: list[int] = []
    covered = {0}
    for g in candidates:
        if len(covered) == group.order:
            break
        if g in covered:
            continue
        gens.append(g)
        covered = set(_closure(group, covered, gens))
    return gens


def _extend_to_hom(
    a: FiniteGroup, b: FiniteGroup, assignment: Sequence[tuple[int, int]]
) -> dict[int, int] | None:
    images = {0: 0}
    used = {0}
    queue = [0]
    position = 0
    while position < len(queue):
        x = queue[position]
        position += 1
        for s, t in assignment:
            y = a.mul(x, s)
            image = b.mul(images[x], t)
            known = images.get(y)
            if known is None:
                if image in used:
                    return None
                images[y] = image
                used.add(image)
                queue.append(y)
            elif known != image:
                return None
    return images


def group_is_isomorphic(
    a: FiniteGroup, b: FiniteGroup, limits: Limits | None = None
) -> GroupHom | None:
    """Search for an isomorphism ``A → B`` by backtracking over generator images."""
    limits = resolve_limits(limits)
    _check_order_cap("Isomorphism search", max(a.order, b.order), limits.enumeration_order)
    if a.order != b.order:
        return None
    if Counter(a.element_orders) != Counter(b.element_orders):
        return None
    sizes_a = sorted(c.size for c in conjugacy_classes(a))
    sizes_b = sorted(c.size for c in conjugacy_classes(b))
    if sizes_a != sizes_b:
        return None

    gens = generating_set(a)
    class_size_a = [conjugacy_classes(a)[i].size for i in class_index(a)]
    class_size_b = [conjugacy_classes(b)[i].size for i in class_index(b)]
    candidates = [
        [
            y
            for y in b.elements
            if b.element_orders[y] == a.element_orders[g] and class_size_b[y] == class_size_a[g]
        ]
        for g in gens
    ]

    def search(assignment: list[tuple[int, int]]) -> dict[int, int] | None:
        depth = len(assignment)
        if depth == len(gens):
            images = _extend_to_hom(a, b, assignment)
            return images if images is not None and len(images) == a.order else None
        for y in candidates[depth]:
            trial = [*assignment, (gens[depth], y)]
            if _extend_to_hom(a, b, trial) is None:
                continue
            result = search(trial)
            if result is not None:
                return result
        return None

    images = search([])
    if images is None:
        return None
    return GroupHom(a, b, tuple(images[x] for x in a.elements))
