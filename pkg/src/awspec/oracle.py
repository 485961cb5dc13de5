"""Brute-force branching oracle, independent of the partition-function formula.

For rho(z1, z2) of SU(3) we compute every weight multiplicity with the
Freudenthal recursion, keep the weights that vanish on the S^1 generator
E_0 (coordinates c1 + c2 = 0 in the (lambda_1, lambda_2) basis), and split the
resulting SU(2)-weight multiset into strings.  The number of strings with top
weight z3 * mu_1 is the multiplicity of the SO(3) representation rho(z3).
"""
from __future__ import annotations

import os
from collections import Counter
from functools import lru_cache
from itertools import permutations

from .aloff_wallach import _check_triple, dim_su3

ENV_MAX = "AWSPEC_ORACLE_MAX"
DEFAULT_MAX = 60

# 3 * (Gram matrix of lambda_1, lambda_2); the recursion only needs ratios.
_G = ((4, -2), (-2, 4))
_POS_ROOTS = ((1, -1), (1, 2), (2, 1))
_RHO = (2, 1)


class OracleBoundError(RuntimeError):
    """Requested representation is beyond the configured oracle size."""


def oracle_max() -> int:
    return int(os.environ.get(ENV_MAX, DEFAULT_MAX))


def _ip(a, b) -> int:
    return (
        _G[0][0] * a[0] * b[0]
        + _G[0][1] * a[0] * b[1]
        + _G[1][0] * a[1] * b[0]
        + _G[1][1] * a[1] * b[1]
    )


def _dominant(c1: int, c2: int) -> tuple[int, int]:
    a, b, c = sorted((c1, c2, 0), reverse=True)
    return (a - c, b - c)


def _orbit(c1: int, c2: int) -> set[tuple[int, int]]:
    return {(p[0] - p[2], p[1] - p[2]) for p in permutations((c1, c2, 0))}


@lru_cache(maxsize=None)
def _dominant_multiplicities(z1: int, z2: int) -> dict[tuple[int, int], int]:
    top = (z1, z2)
    # dominant weights below the highest weight, ordered by depth
    dominant = []
    for depth in range(z1 + z2 + 1):
        for a in range(depth + 1):
            b = depth - a
            mu = (z1 - a - b, z2 + a - 2 * b)
            if mu[0] >= mu[1] >= 0:
                dominant.append(mu)
    shifted_top = (top[0] + _RHO[0], top[1] + _RHO[1])
    norm_top = _ip(shifted_top, shifted_top)
    mult = {top: 1}
    for mu in dominant[1:]:
        acc = 0
        for alpha in _POS_ROOTS:
            k = 1
            while True:
                nu = (mu[0] + k * alpha[0], mu[1] + k * alpha[1])
                m = mult.get(_dominant(*nu))
                if m is None:
                    break
                acc += m * _ip(nu, alpha)
                k += 1
        shifted = (mu[0] + _RHO[0], mu[1] + _RHO[1])
        denom = norm_top - _ip(shifted, shifted)
        value, rem = divmod(2 * acc, denom)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {mu} in ({z1}, {z2})")
        mult[mu] = value
    return mult


def weight_multiplicities_su3(z1: int, z2: int) -> dict[tuple[int, int], int]:
    """All weights of rho(z1, z2) as (c1, c2) -> multiplicity, c_i the lambda_i coefficients."""
    _check_triple(z1, z2)
    if z1 > oracle_max():
        raise OracleBoundError(f"z1 = {z1} exceeds oracle bound {oracle_max()} (set {ENV_MAX})")
    out = {}
    for mu, m in _dominant_multiplicities(z1, z2).items():
        for w in _orbit(*mu):
            out[w] = m
    return out


def s1_fixed_weights(z1: int, z2: int) -> Counter:
    """SU(2)-torus weights (as multiples of mu_1) on the S^1-fixed subspace."""
    fixed = Counter()
    for (c1, c2), m in weight_multiplicities_su3(z1, z2).items():
        if c1 + c2 == 0:
            fixed[c1] += m
    return fixed


def sl2_strings(weights: Counter) -> dict[int, int]:
    """Decompose a symmetric sl2 weight multiset into irreducible strings.

    Keys are top weights, values are how many strings reach that top.
    """
    for w, m in weights.items():
        if weights.get(-w, 0) != m:
            raise ValueError(f"weight multiset is not symmetric at {w}")
    out = {}
    for top in sorted(w for w in weights if w >= 0):
        count = weights[top] - weights.get(top + 1, 0)
        if count < 0:
            raise ValueError(f"weight multiset is not a sum of strings at {top}")
        if count:
            out[top] = count
    return out


def so3_content(z1: int, z2: int) -> dict[int, int]:
    """SO(3) content of the S^1-fixed vectors: z3 -> multiplicity."""
    return sl2_strings(s1_fixed_weights(z1, z2))


def weight_count(z1: int, z2: int) -> int:
    return sum(weight_multiplicities_su3(z1, z2).values())


def scan_for_higher_multiplicity(z1_max: int):
    """First triple (lexicographic) whose SO(3) content exceeds 1, or None."""
    for z1 in range(z1_max + 1):
        for z2 in range(z1 + 1):
            for z3, m in sorted(so3_content(z1, z2).items()):
                if m > 1:
                    return (z1, z2, z3, m)
    return None


__all__ = [
    "OracleBoundError",
    "dim_su3",
    "s1_fixed_weights",
    "scan_for_higher_multiplicity",
    "sl2_strings",
    "so3_content",
    "weight_count",
    "weight_multiplicities_su3",
]
