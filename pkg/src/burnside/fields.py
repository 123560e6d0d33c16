"""Arithmetic over F_p plus the symmetric-function helpers built on it.

Residues are canonical representatives in [0, p-1]; every operation
normalizes its result so values compare bit-exactly across modules.
"""

from __future__ import annotations

import math
from dataclasses import InitVar, dataclass

from .errors import InputError, InternalInvariantViolation

# Trial division is deterministic and instant at desk scale; the cap keeps
# accidental huge moduli out rather than limiting the mathematics.
DEFAULT_PRIME_CAP = 97


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The prime field F_p; carries the modulus and residue arithmetic."""

    p: int
    cap: InitVar[int] = DEFAULT_PRIME_CAP

    def __post_init__(self, cap: int) -> None:
        if not isinstance(self.p, int) or isinstance(self.p, bool):
            raise InputError(f"modulus must be an integer, got {self.p!r}")
        if self.p > cap:
            raise InputError(f"modulus {self.p} exceeds the supported cap {cap}")
        if not is_prime(self.p):
            raise InputError(f"modulus {self.p} is not prime")

    def elements(self) -> range:
        return range(self.p)

    def nonzero(self) -> range:
        return range(1, self.p)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a % self.p, e, self.p)


@dataclass(frozen=True)
class DiffSet:
    """A non-empty proper subset of F_p \\ {0}, stored as a sorted tuple.

    These are the connection sets of circulant digraphs on F_p: the pairs
    (i, j) with i - j in the set are the arcs whose preservation is tested.
    """

    field: PrimeField
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        elems = tuple(sorted({int(u) for u in self.elements}))
        object.__setattr__(self, "elements", elems)
        p = self.field.p
        if any(not 1 <= u <= p - 1 for u in elems):
            raise InputError(
                f"difference-set elements must lie in 1..{p - 1}, got {elems}"
            )
        if not 1 <= len(elems) <= p - 2:
            raise InputError(
                f"difference set must be a non-empty proper subset of 1..{p - 1}"
            )

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: int) -> bool:
        return u in self.elements

    def complement(self) -> "DiffSet":
        """The complement within 1..p-1 (never empty, never full)."""
        inside = set(self.elements)
        rest = tuple(u for u in self.field.nonzero() if u not in inside)
        return DiffSet(self.field, rest)

    def indicator(self) -> tuple[bool, ...]:
        """Membership table indexed by residue, for hot loops."""
        table = [False] * self.field.p
        for u in self.elements:
            table[u] = True
        return tuple(table)


def binomial_mod_p(n: int, k: int, field: PrimeField) -> int:
    """C(n, k) reduced mod p; nonzero whenever 0 <= k <= n <= p-1."""
    if n < 0 or k < 0 or k > n:
        raise InputError(f"binomial requires 0 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k) % field.p


def power_sum(dset: DiffSet, k: int) -> int:
    """Sum of u**k over the set, mod p."""
    if k < 1:
        raise InputError(f"power-sum exponent must be >= 1, got {k}")
    p = dset.field.p
    return sum(pow(u, k, p) for u in dset.elements) % p


def min_nonzero_power_sum(dset: DiffSet) -> int:
    """Smallest k in 1..p-1 whose power sum is nonzero.

    A valid set always has one (its Vandermonde matrix is nonsingular), so
    an all-zero scan signals a bug.
    """
    p = dset.field.p
    for k in range(1, p):
        if power_sum(dset, k) != 0:
            return k
    raise InternalInvariantViolation(
        "every power sum vanished for a non-empty proper subset",
        payload={"p": p, "elements": list(dset.elements)},
    )


def elementary_symmetric_via_newton(dset: DiffSet, m: int) -> list[int]:
    """First m elementary symmetric functions of the set, from its power sums.

    Uses the Newton recurrence k*e_k = sum_{i=1..k} (-1)**(i-1) e_{k-i} S(i);
    the divisions by 1..m force m <= p-1.
    """
    p = dset.field.p
    if m >= p:
        raise InputError(f"Newton recurrence needs m < p, got m={m}, p={p}")
    if not 1 <= m <= len(dset):
        raise InputError(f"need 1 <= m <= |set|={len(dset)}, got m={m}")
    sums = [power_sum(dset, k) for k in range(1, m + 1)]
    es = [1]  # e_0
    for k in range(1, m + 1):
        acc = 0
        for i in range(1, k + 1):
            term = es[k - i] * sums[i - 1] % p
            acc = (acc - term if i % 2 == 0 else acc + term) % p
        es.append(acc * pow(k, -1, p) % p)
    return es[1:]


def vandermonde_det(dset: DiffSet) -> int:
    """Determinant of the matrix (u_j ** k), k = 1..|set|, over F_p.

    Distinct nonzero entries make this provably nonzero; a zero result is
    reported as an internal error.
    """
    p = dset.field.p
    elems = dset.elements
    m = len(elems)
    rows = [[pow(u, k, p) for u in elems] for k in range(1, m + 1)]
    det = _det_mod_p(rows, p)
    if det == 0:
        raise InternalInvariantViolation(
            "Vandermonde determinant of a valid difference set vanished",
            payload={"p": p, "elements": list(elems)},
        )
    return det


def _det_mod_p(rows: list[list[int]], p: int) -> int:
    """Determinant by Gaussian elimination over F_p."""
    n = len(rows)
    m = [row[:] for row in rows]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det % p
        det = det * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            factor = m[r][col] * inv % p
            if factor:
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[col])]
    return det % p
