"""Spectrum enumeration and spectral queries for (W^{1,1}, g_{t0,t1}).

Every eigenvalue has the form ``h/t0 + v/t1`` for a spherical triple.  The
enumeration is complete below a bound: ``v/t1 <= bound`` caps z3, and since
``h >= 0`` the SU(3) Casimir ``h + v`` is at most ``t0*(bound - v/t1) + v``,
which caps z1 through ``c_su3(z1, z2) >= z1**2``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .aloff_wallach import (
    SphericalTriple,
    dim_su3,
    eigen_pair,
    multiplicity_m,
)
from .freudenthal import so3_casimir


@dataclass(frozen=True)
class MetricParams:
    t0: Fraction
    t1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t0", Fraction(self.t0))
        object.__setattr__(self, "t1", Fraction(self.t1))
        if self.t0 <= 0 or self.t1 <= 0:
            raise ValueError(f"t0 and t1 must be positive, got ({self.t0}, {self.t1})")

    def eta(self, triple: SphericalTriple) -> Fraction:
        return eigen_pair(triple.z1, triple.z2, triple.z3).at(self.t0, self.t1)


class SpectrumEntry(NamedTuple):
    eigenvalue: Fraction
    multiplicity: int
    triples: tuple[SphericalTriple, ...]


@dataclass(frozen=True)
class Spectrum:
    params: MetricParams
    entries: tuple[SpectrumEntry, ...]
    bound: Fraction  # every eigenvalue <= bound is present

    def eigenvalues(self) -> list[Fraction]:
        return [e.eigenvalue for e in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def enumerate_spherical(bound, params: MetricParams) -> list[SphericalTriple]:
    """All spherical triples whose eigenvalue is at most ``bound``, lexicographically."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    t0, t1 = params.t0, params.t1
    found = []
    z3 = 0
    while so3_casimir(z3) / t1 <= bound:
        v = so3_casimir(z3)
        cmax = t0 * (bound - v / t1) + v
        z1_max = isqrt(int(cmax))  # floor(sqrt(floor(c))) == floor(sqrt(c))
        for z1 in range(z1_max + 1):
            for z2 in range(z1 + 1):
                if (z1 + z2) % 3 or z1 + z2 < 3 * z3 or 2 * z1 - z2 < 3 * z3:
                    continue
                if multiplicity_m(z1, z2, z3) <= 0:
                    continue
                if eigen_pair(z1, z2, z3).at(t0, t1) <= bound:
                    found.append(SphericalTriple.of(z1, z2, z3))
        z3 += 1
    found.sort()
    return found


def merge(triples, params: MetricParams) -> list[SpectrumEntry]:
    """Group triples by exact eigenvalue, ascending."""
    groups: dict[Fraction, list[SphericalTriple]] = defaultdict(list)
    for tr in triples:
        groups[params.eta(tr)].append(tr)
    return [
        SpectrumEntry(ev, sum(t.total_mult for t in trs), tuple(sorted(trs)))
        for ev, trs in sorted(groups.items())
    ]


def build_spectrum(params: MetricParams, up_to=None, first_n: int | None = None) -> Spectrum:
    """Merged spectrum either up to an eigenvalue bound or for the first ``first_n`` values."""
    if (up_to is None) == (first_n is None):
        raise ValueError("give exactly one of up_to and first_n")
    if up_to is not None:
        bound = Fraction(up_to)
        entries = merge(enumerate_spherical(bound, params), params)
        return Spectrum(params, tuple(entries), bound)
    if first_n < 1:
        raise ValueError(f"first_n must be positive, got {first_n}")
    bound = 12 / params.t0  # the first nonzero eigenvalue never exceeds this
    while True:
        entries = merge(enumerate_spherical(bound, params), params)
        if len(entries) >= first_n:
            entries = entries[:first_n]
            return Spectrum(params, tuple(entries), entries[-1].eigenvalue)
        bound *= 2


def first_eigenvalue(params: MetricParams) -> Fraction:
    return first_entry(params).eigenvalue


def first_entry(params: MetricParams) -> SpectrumEntry:
    """Lowest nonzero eigenvalue with its multiplicity and realizing triples."""
    return build_spectrum(params, first_n=2).entries[1]


def first_eigenvalue_closed_form(params: MetricParams) -> Fraction:
    if params.t1 < params.t0:
        return 12 / params.t0
    return 4 / params.t0 + 8 / params.t1


def basic_spectrum(params: MetricParams, bound) -> Spectrum:
    """Eigenvalues from triples with z3 = 0, i.e. functions constant along the fibres."""
    bound = Fraction(bound)
    triples = [t for t in enumerate_spherical(bound, params) if t.z3 == 0]
    return Spectrum(params, tuple(merge(triples, params)), bound)


def fiber_spectrum(t1, z3_max: int) -> list[tuple[Fraction, int]]:
    """Spectrum of the SO(3) fibre: 4 z3 (z3 + 1)/t1 with multiplicity (2 z3 + 1)**2."""
    t1 = Fraction(t1)
    if t1 <= 0:
        raise ValueError(f"t1 must be positive, got {t1}")
    return [(so3_casimir(z3) / t1, (2 * z3 + 1) ** 2) for z3 in range(z3_max + 1)]


def aggregate_su3_multiplicity(z1: int, z2: int) -> int:
    """Total multiplicity of the (z1, z2) class, i.e. the SU(3)-normal limit t1 -> t0."""
    d = dim_su3(z1, z2)
    return sum(
        multiplicity_m(z1, z2, z3) * d * (2 * z3 + 1)
        for z3 in range((z1 + z2) // 3 + 1)
    )


class BergerMode(NamedTuple):
    n1: int
    n2: int
    mult: int  # dimension of the SU(2) representation


def su2_berger_spectrum(t0, t1, n1_max: int, so3_only: bool = False) -> list[tuple[Fraction, BergerMode]]:
    """Eigenvalues of SU(2) (or SO(3)) with the metric deformed along a circle.

    The mode (n1, n2) is the S^1-weight (n1 - 2 n2) nu_1 inside rho(n1), where
    |nu_1|**2 = 1, so the full Casimir is n1 (n1 + 2).  Each mode carries the
    dimension n1 + 1; at t0 == t1 this is the round spectrum k (k + 2) with
    multiplicity (k + 1)**2.
    """
    t0, t1 = Fraction(t0), Fraction(t1)
    if t0 <= 0 or t1 <= 0:
        raise ValueError(f"t0 and t1 must be positive, got ({t0}, {t1})")
    out = []
    for n1 in range(n1_max + 1):
        if so3_only and n1 % 2:
            continue
        for n2 in range(n1 + 1):
            k = (n1 - 2 * n2) ** 2
            out.append(((n1 * (n1 + 2) - k) / t0 + k / t1, BergerMode(n1, n2, n1 + 1)))
    return out
