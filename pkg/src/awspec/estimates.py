"""Parameter conversions, curvature regimes and first-eigenvalue estimates.

Three parameterizations of the same metrics are used:

* ``(t0, t1)``: scale factors on the horizontal space and on su(2);
* ``(r0, r1)``: the restricted form r0*g|su(3) + r1*g|su(2) on SU(3) x SO(3),
  with t0 = r0 and t1 = r0 r1 / (r0 + r1);
* ``(alpha, delta)``: 3-(alpha, delta)-Sasaki constants, t0 = 1/(2 alpha delta)
  and t1 = 1/delta**2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .spectrum import MetricParams, first_eigenvalue


class ParallelPointError(ValueError):
    """t1 == t0: the SU(3) x SO(3) form degenerates (r1 is infinite)."""


@dataclass(frozen=True)
class SasakiParams:
    alpha: Fraction | float
    delta: Fraction | float

    def __post_init__(self):
        if self.alpha == 0:
            raise ValueError("alpha must be nonzero")


@dataclass(frozen=True)
class NormalParams:
    r0: Fraction
    r1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r0", Fraction(self.r0))
        object.__setattr__(self, "r1", Fraction(self.r1))
        if self.r0 <= 0:
            raise ValueError(f"r0 must be positive, got {self.r0}")
        if -self.r0 <= self.r1 <= 0:
            raise ValueError(
                f"r1 must lie in (-inf, -r0) or (0, inf); got r1 = {self.r1} with r0 = {self.r0}"
            )


def convert_r_to_t(r: NormalParams) -> MetricParams:
    return MetricParams(r.r0, r.r0 * r.r1 / (r.r0 + r.r1))


def convert_t_to_r(t: MetricParams) -> NormalParams:
    if t.t0 == t.t1:
        raise ParallelPointError("parallel/normal point t1 == t0: r1 is undefined (infinite)")
    return NormalParams(t.t0, t.t1 * t.t0 / (t.t0 - t.t1))


def convert_sasaki(alpha, delta) -> MetricParams:
    alpha, delta = Fraction(alpha), Fraction(delta)
    if alpha * delta <= 0:
        raise ValueError(f"need alpha * delta > 0, got alpha={alpha}, delta={delta}")
    return MetricParams(1 / (2 * alpha * delta), 1 / (delta * delta))


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def exact_root(q: Fraction, k: int = 2) -> Fraction | None:
    """The positive rational k-th root of q when it exists (k a power of two)."""
    while k > 1:
        n, d = _isqrt_exact(q.numerator), _isqrt_exact(q.denominator)
        if n is None or d is None:
            return None
        q, k = Fraction(n, d), k // 2
    return q


def convert_t_to_sasaki(t: MetricParams) -> SasakiParams:
    """Inverse of ``convert_sasaki`` with delta > 0.

    Exact when 1/t1 is the square of a rational, floating point otherwise.
    """
    delta = exact_root(1 / t.t1)
    if delta is None:
        d = 1 / math.sqrt(t.t1)
        return SasakiParams(1 / (2 * float(t.t0) * d), d)
    return SasakiParams(1 / (2 * t.t0 * delta), delta)


class Regime(enum.Enum):
    POSITIVE_NORMAL = "positive_normal"  # t1 < t0, SU(3) x SO(3)-normal
    PARALLEL = "parallel"  # t1 == t0, SU(3)-normal
    NATURALLY_REDUCTIVE_ONLY = "naturally_reductive_only"  # t1 > t0


def curvature_regime(params: MetricParams) -> Regime:
    if params.t1 < params.t0:
        return Regime.POSITIVE_NORMAL
    if params.t1 == params.t0:
        return Regime.PARALLEL
    return Regime.NATURALLY_REDUCTIVE_ONLY


# multiples of 2*alpha*delta; the first two depend on n
_BASIC_BOUNDS = {
    "SU/SO_even": lambda n: 4 * (n + 2),
    "SO_odd/Sp": lambda n: 4 * (n + 1),
    "E6": lambda n: 48,
    "E7": lambda n: 72,
    "E8": lambda n: 120,
    "F4": lambda n: 32,
    "G2": lambda n: 12,
}
FAMILIES = tuple(_BASIC_BOUNDS)


def basic_lower_bound(family: str, n: int, alpha, delta) -> Fraction:
    """Lower bound on the first basic eigenvalue of a positive 3-(alpha, delta)-Sasaki space."""
    if family not in _BASIC_BOUNDS:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    alpha, delta = Fraction(alpha), Fraction(delta)
    if alpha * delta <= 0:
        raise ValueError("need alpha * delta > 0")
    return 2 * alpha * delta * _BASIC_BOUNDS[family](n)


def f1_branches(t1, n: int) -> tuple[Fraction, Fraction]:
    """Both closed-form pieces of f1 evaluated at t1: (t1 >= 1 piece, t1 <= 1 piece)."""
    t1 = Fraction(t1)
    return 8 * (n + 1 / t1), Fraction(8 * (n + 1))


def f1(t1, n: int) -> Fraction:
    """Lower bound on the first eigenvalue for t0 = 1/2 and quaternionic dimension n."""
    t1 = Fraction(t1)
    if t1 <= 0:
        raise ValueError(f"t1 must be positive, got {t1}")
    upper, lower = f1_branches(t1, n)
    return upper if t1 >= 1 else lower


class Bound(NamedTuple):
    value: Fraction
    valid: bool


def f2(t1, n: int) -> Bound:
    """Lichnerowicz-Obata bound for t0 = 1/2; ``valid`` is False once Ric > 0 fails."""
    t1 = Fraction(t1)
    if t1 <= 0:
        raise ValueError(f"t1 must be positive, got {t1}")
    valid = t1 < Fraction(2 * n + 4, 3)
    horizontal, vertical = f2_branches(t1, n)
    value = vertical if Fraction(1, 2 * n + 3) < t1 < 1 else horizontal
    return Bound(value, valid)


def f2_branches(t1, n: int) -> tuple[Fraction, Fraction]:
    """Both pieces of f2 at t1: (horizontal-minimum piece, vertical-minimum piece)."""
    t1 = Fraction(t1)
    horizontal = (4 * n + 3) * (2 * n + 4 - 3 * t1) / (2 * n + 1)
    vertical = (2 * n * t1 * t1 * (4 * n + 3) + 4 * n + 3) / (t1 * (2 * n + 1))
    return horizontal, vertical


def f2_limit(n: int) -> Fraction:
    """Limit of f2 as t1 -> 0."""
    return Fraction(2 * (n + 2) * (4 * n + 3), 2 * n + 1)


def volume_factor(params: MetricParams) -> Fraction:
    """Square of the volume up to a constant: vol ~ t0**2 * t1**(3/2)."""
    return params.t0**4 * params.t1**3


def volume_normalized_eigenvalue(params: MetricParams) -> float:
    """eta_1 * vol**(2/7), up to a universal constant."""
    return float(first_eigenvalue(params)) * float(volume_factor(params)) ** (1 / 7)


def constant_volume_params(s) -> MetricParams:
    """Point t1 = s**4, t0 = s**-3 on the unit-volume curve t0 = t1**(-3/4)."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError(f"s must be positive, got {s}")
    return MetricParams(s**-3, s**4)
