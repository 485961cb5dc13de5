"""Branching combinatorics for W^{1,1} = SU(3)/S^1 and its SU(3) x SO(3) model.

A representation rho(z1, z2, z3) of SU(3) x SO(3) has highest weight
z1*lambda_1 + z2*lambda_2 + z3*mu_1.  It contributes eigenvalues exactly when
its restriction to the isotropy group U(2) contains the trivial
representation; ``multiplicity_m`` counts how often.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .freudenthal import so3_casimir, su3_casimir


class NotSphericalError(ValueError):
    """The triple does not occur in the spectrum."""


def _check_triple(z1: int, z2: int, z3: int = 0):
    if z2 < 0 or z3 < 0 or z1 < z2:
        raise ValueError(f"need z1 >= z2 >= 0 and z3 >= 0, got ({z1}, {z2}, {z3})")


def partition(a1: int, a2: int) -> int:
    """Number of (m1, m2, m3) in N^3 with a1 = 3(m1 + m2) and a2 = m3 - m1 - 2 m2.

    Defined for every integer pair; zero off the lattice.
    """
    if a1 < 0 or a1 % 3:
        return 0
    q = a1 // 3
    return max(0, q + 1 + min(0, a2 + q))


def multiplicity_m(z1: int, z2: int, z3: int) -> int:
    """Multiplicity of the trivial U(2)-representation in rho(z1, z2, z3)."""
    _check_triple(z1, z2, z3)
    s = z1 + z2
    t = z1 - 2 * z2 - 3
    return (
        partition(s, -z3 - z1 - 2)
        + partition(s, z3 - z2)
        - partition(s, -z3 - z2 - 1)
        - partition(s, z3 - z1 - 1)
        + partition(t, z2 + 1 - z3)
        + partition(t, z2 - z1 + z3)
        - partition(t, z2 + 2 + z3)
    )


def is_s1_spherical(z1: int, z2: int) -> bool:
    return (z1 + z2) % 3 == 0


def dim_su3(z1: int, z2: int) -> int:
    _check_triple(z1, z2)
    return (z1 - z2 + 1) * (z1 + 2) * (z2 + 1) // 2


def dim_so3(z3: int) -> int:
    if z3 < 0:
        raise ValueError(f"z3 must be nonnegative, got {z3}")
    return 2 * z3 + 1


@dataclass(frozen=True, order=True)
class SphericalTriple:
    z1: int
    z2: int
    z3: int
    m: int
    dim_su3: int
    dim_so3: int
    total_mult: int

    @classmethod
    def of(cls, z1: int, z2: int, z3: int) -> "SphericalTriple":
        m = multiplicity_m(z1, z2, z3)
        if m <= 0:
            raise NotSphericalError(f"rho({z1}, {z2}, {z3}) is not U(2)-spherical")
        d0, d1 = dim_su3(z1, z2), dim_so3(z3)
        return cls(z1, z2, z3, m, d0, d1, m * d0 * d1)

    @property
    def z(self) -> tuple[int, int, int]:
        return (self.z1, self.z2, self.z3)


class EigenPair(NamedTuple):
    """Eigenvalue ``h/t0 + v/t1`` stored by its two coefficients."""

    h: Fraction
    v: Fraction

    def at(self, t0, t1) -> Fraction:
        t0, t1 = Fraction(t0), Fraction(t1)
        if t0 <= 0 or t1 <= 0:
            raise ValueError(f"metric parameters must be positive, got ({t0}, {t1})")
        return self.h / t0 + self.v / t1


def eigen_pair(z1: int, z2: int, z3: int) -> EigenPair:
    if multiplicity_m(z1, z2, z3) <= 0:
        raise NotSphericalError(f"rho({z1}, {z2}, {z3}) is not U(2)-spherical")
    v = so3_casimir(z3)
    return EigenPair(su3_casimir(z1, z2) - v, v)


def eigenvalue_at(z1: int, z2: int, z3: int, t0, t1) -> Fraction:
    return eigen_pair(z1, z2, z3).at(t0, t1)


def iter_spherical(z1_max: int, z1_min: int = 0):
    """Yield every spherical triple with z1_min <= z1 <= z1_max, lexicographically."""
    for z1 in range(z1_min, z1_max + 1):
        for z2 in range(z1 + 1):
            if not is_s1_spherical(z1, z2):
                continue
            # m vanishes once 3*z3 exceeds z1 + z2
            for z3 in range((z1 + z2) // 3 + 1):
                if multiplicity_m(z1, z2, z3) > 0:
                    yield SphericalTriple.of(z1, z2, z3)


def first_triples(n: int) -> list[SphericalTriple]:
    """The first ``n`` spherical triples in lexicographic (z1, z2, z3) order."""
    out: list[SphericalTriple] = []
    z1 = 0
    while len(out) < n:
        for tr in iter_spherical(z1, z1):
            out.append(tr)
            if len(out) == n:
                break
        z1 += 1
    return out
