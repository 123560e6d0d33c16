"""Shared helpers for the test suite."""

import itertools
import random

from burnside import DiffSet, Perm, PrimeField


def qr_set(field: PrimeField) -> DiffSet:
    """The nonzero quadratic residues mod p as a difference set."""
    p = field.p
    return DiffSet(field, tuple(sorted({i * i % p for i in range(1, p)})))


def all_perms(field: PrimeField):
    """Every permutation of F_p, in lexicographic image order."""
    for images in itertools.permutations(range(field.p)):
        yield Perm(field, images)


def random_perm(field: PrimeField, rng: random.Random) -> Perm:
    images = list(range(field.p))
    rng.shuffle(images)
    return Perm(field, tuple(images))


def random_p_cycle(field: PrimeField, rng: random.Random) -> Perm:
    """A uniformly random permutation with a single cycle of length p."""
    points = list(range(field.p))
    rng.shuffle(points)
    images = [0] * field.p
    for a, b in zip(points, points[1:]):
        images[a] = b
    images[points[-1]] = points[0]
    return Perm(field, tuple(images))
