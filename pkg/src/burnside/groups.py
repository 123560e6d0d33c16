"""Orbit machinery and bounded enumeration for generated permutation groups.

Everything here is breadth-first search over a fixed generator order, so
element lists, orbits and reports come out deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceeded, FieldMismatch, InputError
from .fields import PrimeField
from .permutations import Perm


@dataclass(frozen=True)
class GroupSpec:
    """A permutation group of F_p given by a non-empty generator list."""

    field: PrimeField
    generators: tuple[Perm, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise InputError("a group needs at least one generator")
        for g in gens:
            if g.field != self.field:
                raise FieldMismatch(
                    f"generator degree {g.field.p} does not match p={self.field.p}"
                )


@dataclass(frozen=True)
class EnumeratedGroup:
    """A fully enumerated group: identity included, closed under products."""

    field: PrimeField
    elements: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def orbit_of_point(spec: GroupSpec, x: int) -> list[int]:
    """Closure of {x} under the generators, in ascending order."""
    p = spec.field.p
    if not 0 <= x < p:
        raise InputError(f"point {x} outside 0..{p - 1}")
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g in spec.generators:
            z = g.images[y]
            if z not in seen:
                seen.add(z)
                queue.append(z)
    return sorted(seen)


def orbit_of_pair(spec: GroupSpec, pair: tuple[int, int]) -> list[tuple[int, int]]:
    """Closure of an ordered pair under the diagonal action, sorted."""
    i, j = pair
    p = spec.field.p
    if i == j:
        raise InputError("pair orbits are defined for ordered pairs with i != j")
    if not (0 <= i < p and 0 <= j < p):
        raise InputError(f"pair {pair} outside 0..{p - 1}")
    seen = {(i, j)}
    queue = deque([(i, j)])
    while queue:
        a, b = queue.popleft()
        for g in spec.generators:
            nxt = (g.images[a], g.images[b])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen)


def transitivity_tests(spec: GroupSpec) -> tuple[bool, bool]:
    """(is_transitive, is_doubly_transitive) from single-orbit closures.

    The pair test uses the base pair (1, 0); a full pair orbit has size
    p*(p-1) exactly when the group is doubly transitive.
    """
    p = spec.field.p
    transitive = len(orbit_of_point(spec, 0)) == p
    doubly = len(orbit_of_pair(spec, (1, 0))) == p * (p - 1)
    return transitive, doubly


def closure(field: PrimeField, seeds: Iterable[Perm], cap: int) -> list[Perm]:
    """BFS closure of the seeds under composition, identity included.

    Raises CapExceeded when more than ``cap`` distinct elements appear.
    """
    if cap < 1:
        raise InputError(f"enumeration cap must be >= 1, got {cap}")
    seed_list = [g for g in seeds]
    identity = Perm.identity(field)
    elements: dict[tuple[int, ...], Perm] = {identity.images: identity}
    queue: deque[Perm] = deque()
    for g in seed_list:
        if g.images not in elements:
            elements[g.images] = g
            queue.append(g)
    if len(elements) > cap:
        raise CapExceeded(
            f"group closure exceeded cap {cap}", len(elements), cap
        )
    while queue:
        h = queue.popleft()
        for g in seed_list:
            q = h.compose(g)
            if q.images not in elements:
                elements[q.images] = q
                if len(elements) > cap:
                    raise CapExceeded(
                        f"group closure exceeded cap {cap}", len(elements), cap
                    )
                queue.append(q)
    return list(elements.values())


def enumerate_group(spec: GroupSpec, cap: int) -> EnumeratedGroup:
    """Enumerate the generated group, erroring past ``cap`` elements."""
    elements = closure(spec.field, spec.generators, cap)
    return EnumeratedGroup(spec.field, tuple(elements))


def derived_series(group: EnumeratedGroup) -> list[int]:
    """Orders of the iterated commutator subgroups, until 1 or stabilization.

    The group is solvable exactly when the list ends at 1.
    """
    orders = [group.order]
    current: Sequence[Perm] = group.elements
    while orders[-1] > 1:
        commutators = _commutator_generators(current)
        sub = closure(group.field, commutators, cap=len(current))
        orders.append(len(sub))
        if len(sub) == len(current):
            break  # perfect subgroup: series stabilized above 1
        current = sub
    return orders


def _commutator_generators(elements: Sequence[Perm]) -> list[Perm]:
    inverses = {g.images: g.inverse() for g in elements}
    out: dict[tuple[int, ...], Perm] = {}
    for a in elements:
        a_inv = inverses[a.images]
        for b in elements:
            c = a_inv.compose(inverses[b.images]).compose(a).compose(b)
            if c.images not in out:
                out[c.images] = c
    return list(out.values())
