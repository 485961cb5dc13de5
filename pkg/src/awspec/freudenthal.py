"""Exact weight arithmetic and the Freudenthal Casimir evaluator.

Weights are stored with doubled integer coordinates, so a stored coordinate
``c`` means ``c/2`` times the basis vector.  This keeps half-integral weights
such as rho exact without putting fractions in the enumeration loops.

The Casimir eigenvalue of the irreducible representation with highest weight
``lam`` is ``g(lam, lam + 2 rho)`` where ``g`` is the (possibly indefinite)
bi-invariant form restricted to the dual torus.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction

#: rank of each named weight basis
BASIS_RANK = {
    "su3": 2,  # (lambda_1, lambda_2); lambda_3 = -lambda_1 - lambda_2
    "so3": 1,  # (mu_1,)
    "su3+so3": 3,  # (lambda_1, lambda_2, mu_1)
    "sp2+sp1": 3,  # (nu_0, nu_1, nu_1')
}


class BasisMismatchError(ValueError):
    """Two weights (or a weight and a form) live in different bases."""


@dataclass(frozen=True)
class Weight:
    coords: tuple[int, ...]  # doubled
    basis: str

    def __post_init__(self):
        if self.basis not in BASIS_RANK:
            raise ValueError(f"unknown weight basis {self.basis!r}")
        if len(self.coords) != BASIS_RANK[self.basis]:
            raise ValueError(
                f"basis {self.basis} has rank {BASIS_RANK[self.basis]}, "
                f"got {len(self.coords)} coordinates"
            )

    @classmethod
    def of(cls, basis: str, *values) -> "Weight":
        """Build a weight from its true (undoubled) coefficients."""
        doubled = []
        for v in values:
            d = Fraction(v) * 2
            if d.denominator != 1:
                raise ValueError(f"coefficient {v} is not a half-integer")
            doubled.append(int(d))
        return cls(tuple(doubled), basis)

    @classmethod
    def zero(cls, basis: str) -> "Weight":
        return cls((0,) * BASIS_RANK[basis], basis)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.coords)

    def _check(self, other: "Weight"):
        if self.basis != other.basis:
            raise BasisMismatchError(f"{self.basis} vs {other.basis}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.basis)

    def __mul__(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords), self.basis)

    __rmul__ = __mul__


@dataclass(frozen=True)
class GramData:
    """Bilinear form on a weight basis together with 2*rho."""

    basis: str
    gram: tuple[tuple[Fraction, ...], ...]
    two_rho: Weight

    def __post_init__(self):
        n = BASIS_RANK[self.basis]
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError(f"gram matrix must be {n}x{n}")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("gram matrix is not symmetric")
        if self.two_rho.basis != self.basis:
            raise BasisMismatchError(f"{self.two_rho.basis} vs {self.basis}")

    def pair(self, a: Weight, b: Weight) -> Fraction:
        if a.basis != self.basis or b.basis != self.basis:
            raise BasisMismatchError(f"form on {self.basis}, weights on {a.basis}/{b.basis}")
        # doubled coordinates on both sides -> divide by 4
        total = sum(
            self.gram[i][j] * a.coords[i] * b.coords[j]
            for i in range(len(a.coords))
            for j in range(len(b.coords))
        )
        return Fraction(total) / 4


def _gram(rows: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


# Inner products of the dual vectors w.r.t. the metric with t0 = t1 = 1.
SU3 = GramData(
    "su3",
    _gram([[Fraction(4, 3), Fraction(-2, 3)], [Fraction(-2, 3), Fraction(4, 3)]]),
    Weight.of("su3", 4, 2),  # rho = 2 lambda_1 + lambda_2
)
SO3 = GramData("so3", _gram([[4]]), Weight.of("so3", 1))  # rho = nu_1 = mu_1 / 2
SU3_SO3 = GramData(
    "su3+so3",
    _gram(
        [
            [Fraction(4, 3), Fraction(-2, 3), 0],
            [Fraction(-2, 3), Fraction(4, 3), 0],
            [0, 0, 4],
        ]
    ),
    Weight.of("su3+so3", 4, 2, 1),
)

PRESETS = {"su3": SU3, "so3": SO3, "su3+so3": SU3_SO3}

#: positive roots per preset basis
POSITIVE_ROOTS = {
    "su3": (
        Weight.of("su3", 1, -1),  # lambda_1 - lambda_2
        Weight.of("su3", 2, 1),  # lambda_1 - lambda_3
        Weight.of("su3", 1, 2),  # lambda_2 - lambda_3
    ),
    "so3": (Weight.of("so3", 1),),
    "su3+so3": (
        Weight.of("su3+so3", 1, -1, 0),
        Weight.of("su3+so3", 2, 1, 0),
        Weight.of("su3+so3", 1, 2, 0),
        Weight.of("su3+so3", 0, 0, 1),
    ),
}


def casimir_eigenvalue(lam: Weight, data: GramData) -> Fraction:
    """Return ``g(lam, lam + 2 rho)``."""
    if lam.basis != data.basis:
        raise BasisMismatchError(f"weight in {lam.basis}, form on {data.basis}")
    return data.pair(lam, lam + data.two_rho)


def _require_nonneg(**kw):
    for name, value in kw.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def su3_casimir(z1: int, z2: int) -> Fraction:
    """Closed form of the SU(3) Casimir for highest weight z1*lambda_1 + z2*lambda_2."""
    _require_nonneg(z2=z2)
    if z1 < z2:
        raise ValueError(f"need z1 >= z2, got ({z1}, {z2})")
    return Fraction(4 * (z1 * z1 + z2 * z2 - z1 * (z2 - 3)), 3)


def so3_casimir(z3: int) -> Fraction:
    _require_nonneg(z3=z3)
    return Fraction(4 * z3 * (z3 + 1))


def sp2_casimir_killing(n1: int, n2: int) -> Fraction:
    """Killing-normalized Casimir of Sp(2) for highest weight n1*w1 + n2*w2."""
    _require_nonneg(n1=n1, n2=n2)
    num = (
        n1 * (n1 + 2)
        + n1 * (n2 + 2)
        + n2 * (n1 + 2)
        + n2 * (n2 + 2)
        + 2 * n2 * (n2 + 2)
    )
    return Fraction(num, 12)


def su5_casimir_killing(n1: int, n2: int, n3: int, n4: int) -> Fraction:
    """Killing-normalized Casimir of SU(5) for highest weight sum n_i * w_i."""
    _require_nonneg(n1=n1, n2=n2, n3=n3, n4=n4)
    num = (
        (4 * n1 + 3 * n2 + 2 * n3 + n4) * (2 + n1)
        + (3 * n1 + 6 * n2 + 4 * n3 + 2 * n4) * (2 + n2)
        + (2 * n1 + 4 * n2 + 6 * n3 + 3 * n4) * (2 + n3)
        + (n1 + 2 * n2 + 3 * n3 + 4 * n4) * (2 + n4)
    )
    return Fraction(num, 50)
