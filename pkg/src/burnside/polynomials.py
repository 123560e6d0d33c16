"""Dense polynomial arithmetic over F_p and Lagrange interpolation.

Coefficient lists are indexed by exponent and never carry trailing zeros.
The zero polynomial has an empty list and degree negative infinity, so
degree comparisons can never silently treat it as a constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FieldMismatch, InputError
from .fields import PrimeField

NEG_INFINITY = float("-inf")


@dataclass(frozen=True)
class FpPoly:
    """A polynomial over F_p, stored densely with canonical coefficients."""

    field: PrimeField
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.field.p
        cs = [int(c) % p for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, field: PrimeField) -> "FpPoly":
        return cls(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> "FpPoly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: PrimeField) -> "FpPoly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> "FpPoly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: PrimeField, exponent: int, c: int = 1) -> "FpPoly":
        if exponent < 0:
            raise InputError(f"monomial exponent must be >= 0, got {exponent}")
        return cls(field, (0,) * exponent + (c,))

    @classmethod
    def from_roots(cls, field: PrimeField, roots: Iterable[int]) -> "FpPoly":
        """Expand the monic product of (X - r) over the given roots."""
        p = field.p
        coeffs = [1]
        for r in roots:
            coeffs.insert(0, 0)
            for j in range(len(coeffs) - 1):
                coeffs[j] = (coeffs[j] - coeffs[j + 1] * r) % p
        return cls(field, coeffs)

    @property
    def degree(self) -> int | float:
        if not self.coeffs:
            return NEG_INFINITY
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_field(self, other: "FpPoly") -> None:
        if self.field != other.field:
            raise FieldMismatch(
                f"mixed moduli {self.field.p} and {other.field.p}"
            )

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % self.field.p
        return FpPoly(self.field, out)

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __mul__(self, other: "FpPoly") -> "FpPoly":
        self._check_field(other)
        if self.is_zero or other.is_zero:
            return FpPoly.zero(self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % p
        return FpPoly(self.field, out)

    def scale(self, c: int) -> "FpPoly":
        p = self.field.p
        return FpPoly(self.field, tuple(a * c % p for a in self.coeffs))

    def __pow__(self, exponent: int) -> "FpPoly":
        if exponent < 0:
            raise InputError(f"polynomial power must be >= 0, got {exponent}")
        result = FpPoly.one(self.field)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def evaluate(self, x: int) -> int:
        p = self.field.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def derivative(self) -> "FpPoly":
        p = self.field.p
        return FpPoly(
            self.field,
            tuple(k * c % p for k, c in enumerate(self.coeffs) if k >= 1),
        )

    def shift(self, u: int) -> "FpPoly":
        """The composition f(X + u), via Horner rebasing; degree preserved."""
        p = self.field.p
        acc: list[int] = []
        for c in reversed(self.coeffs):
            # acc := acc * (X + u) + c
            new = [0] * (len(acc) + 1)
            for j, a in enumerate(acc):
                new[j + 1] = (new[j + 1] + a) % p
                new[j] = (new[j] + a * u) % p
            new[0] = (new[0] + c) % p
            acc = new
        return FpPoly(self.field, acc)

    def render(self) -> str:
        """Human-readable form "c0 + c1*X + c2*X^2 + ..." (render-only)."""
        if self.is_zero:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*X")
            else:
                terms.append(f"{c}*X^{k}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def _lagrange_basis(p: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Numerator polynomials and inverted denominators for nodes 0..p-1."""
    # Master product over all of F_p; divide back out one node at a time.
    master = [1]
    for x in range(p):
        master.insert(0, 0)
        for j in range(len(master) - 1):
            master[j] = (master[j] - master[j + 1] * x) % p
    nums = []
    denom_invs = []
    for x in range(p):
        # Synthetic division of the master polynomial by (X - x).
        num = [0] * p
        num[p - 1] = master[p]
        for j in range(p - 2, -1, -1):
            num[j] = (master[j + 1] + num[j + 1] * x) % p
        value = 0
        for c in reversed(num):
            value = (value * x + c) % p
        nums.append(tuple(num))
        denom_invs.append(pow(value, -1, p))
    return tuple(nums), tuple(denom_invs)


def interpolate(field: PrimeField, images) -> FpPoly:
    """The unique polynomial of degree <= p-1 through (i, images[i]) for all i.

    Accepts any length-p sequence of residues, or an object exposing an
    ``images`` attribute (a permutation).
    """
    values: Sequence[int] = getattr(images, "images", images)
    p = field.p
    if len(values) != p:
        raise InputError(
            f"interpolation needs exactly {p} values, one per point, got {len(values)}"
        )
    nums, denom_invs = _lagrange_basis(p)
    out = [0] * p
    for i, y in enumerate(values):
        c = y % p * denom_invs[i] % p
        if c == 0:
            continue
        num = nums[i]
        for j in range(p):
            out[j] = (out[j] + c * num[j]) % p
    return FpPoly(field, out)
