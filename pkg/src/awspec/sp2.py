"""S^7 = Sp(2) x Sp(1) / Sp(1)': partition function and branching to Sp(1)'.

Weights of sp(2) + sp(1) are written in the basis (nu_0, nu_1, nu_1') with
doubled integer coordinates.  The fundamental weights are
w1 = nu_1/2, w2 = (nu_0 + nu_1)/2, w3 = nu_1'/2 and rho = nu_0/2 + nu_1 + nu_1'/2.
Restriction to the torus of Sp(1)' sends nu_0 -> nu_0 and nu_1, nu_1' -> nu_1.
"""
from __future__ import annotations

from itertools import product
from typing import NamedTuple

from .freudenthal import Weight

RHO = Weight.of("sp2+sp1", "1/2", 1, "1/2")


def restrict(coords: tuple[int, int, int]) -> tuple[int, int]:
    """Doubled (nu_0, nu_1, nu_1') -> doubled (nu_0, nu_1) on the torus of Sp(1)'."""
    return (coords[0], coords[1] + coords[2])


RHO_BAR = restrict(RHO.coords)  # nu_0/2 + (3/2) nu_1


class Sp2Triple(NamedTuple):
    n1: int
    n2: int
    n3: int

    def highest_weight(self) -> Weight:
        w1 = Weight.of("sp2+sp1", 0, "1/2", 0)
        w2 = Weight.of("sp2+sp1", "1/2", "1/2", 0)
        w3 = Weight.of("sp2+sp1", 0, 0, "1/2")
        return self.n1 * w1 + self.n2 * w2 + self.n3 * w3


def sp2_partition(a0_doubled: int, a1_doubled: int) -> int:
    """Ways to write a0*nu_0 + a1*nu_1 over (nu_0+nu_1)/2, (nu_1-nu_0)/2, nu_1.

    Arguments are 2*a0 and 2*a1.  Solutions need m1 - m2 = 2 a0 and
    m1 + m2 + 2 m3 = 2 a1, so a0 + a1 must be an integer; then m3 runs over
    0 .. a1 - |a0|.
    """
    if (a0_doubled + a1_doubled) % 2:
        return 0
    top = a1_doubled - abs(a0_doubled)  # 2 * (a1 - |a0|), even here
    return max(0, top // 2 + 1)


def weyl_group():
    """The 16 elements of W(Sp(2)) x W(Sp(1)) as (swap, s0, s1, s1') with sign det."""
    for swap, s0, s1, s2 in product((False, True), (1, -1), (1, -1), (1, -1)):
        yield (swap, s0, s1, s2), (-1 if swap else 1) * s0 * s1 * s2


def _act(element, coords):
    swap, s0, s1, s2 = element
    x0, x1, x2 = coords
    if swap:
        x0, x1 = x1, x0
    return (s0 * x0, s1 * x1, s2 * x2)


def sp2_multiplicity(n1: int, n2: int, n3: int) -> int:
    """Multiplicity of the trivial Sp(1)'-representation in rho(n1, n2, n3)."""
    if min(n1, n2, n3) < 0:
        raise ValueError(f"need nonnegative coefficients, got ({n1}, {n2}, {n3})")
    shifted = (Sp2Triple(n1, n2, n3).highest_weight() + RHO).coords
    total = 0
    for w, sign in weyl_group():
        a0, a1 = restrict(_act(w, shifted))
        total += sign * sp2_partition(a0 - RHO_BAR[0], a1 - RHO_BAR[1])
    return total


def is_sp1prime_spherical(n1: int, n2: int, n3: int) -> bool:
    return sp2_multiplicity(n1, n2, n3) > 0
