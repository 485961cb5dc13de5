"""Invariant suites shared by ``awspec check`` and the test-suite.

Each suite returns a ``CheckResult``; a failing result carries the first
counterexample found.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .aloff_wallach import dim_su3, multiplicity_m
from .estimates import f1, f1_branches, f2, f2_branches
from .oracle import so3_content, weight_count
from .sp2 import is_sp1prime_spherical
from .spectrum import (
    MetricParams,
    aggregate_su3_multiplicity,
    first_eigenvalue,
)

#: (z1, z2) -> aggregated multiplicity in the SU(3)-normal limit
URAKAWA_TABLE = {
    (0, 0): 1,
    (2, 1): 32,
    (3, 0): 30,
    (3, 3): 30,
    (4, 2): 243,
    (5, 1): 280,
    (5, 4): 280,
    (6, 0): 140,
}


@dataclass
class CheckResult:
    suite: str
    passed: bool
    counterexample: str = ""
    checked: int = 0


def check_oracle(depth: int) -> CheckResult:
    """multiplicity_m against the weight-multiplicity oracle for z1 <= depth."""
    n = 0
    for z1 in range(depth + 1):
        for z2 in range(z1 + 1):
            if weight_count(z1, z2) != dim_su3(z1, z2):
                return CheckResult("oracle", False, f"weight count of ({z1},{z2}) != dimension", n)
            content = so3_content(z1, z2)
            # two rows past the last possible nonzero z3
            for z3 in range((z1 + z2) // 3 + 3):
                n += 1
                want, got = content.get(z3, 0), multiplicity_m(z1, z2, z3)
                if want != got:
                    return CheckResult(
                        "oracle", False, f"m({z1},{z2},{z3})={got} but oracle gives {want}", n
                    )
    return CheckResult("oracle", True, checked=n)


def check_urakawa() -> CheckResult:
    for (z1, z2), want in URAKAWA_TABLE.items():
        got = aggregate_su3_multiplicity(z1, z2)
        if got != want:
            return CheckResult("urakawa", False, f"({z1},{z2}) aggregates to {got}, expected {want}")
    return CheckResult("urakawa", True, checked=len(URAKAWA_TABLE))


def check_sp2(depth: int) -> CheckResult:
    n = 0
    for n1 in range(depth + 1):
        for n2 in range(depth + 1):
            for n3 in range(depth + 1):
                n += 1
                if is_sp1prime_spherical(n1, n2, n3) != (n1 == n3):
                    return CheckResult("sp2", False, f"({n1},{n2},{n3})", n)
    return CheckResult("sp2", True, checked=n)


def estimate_grid(samples: int = 50) -> list[Fraction]:
    """t1 values k/10 for k = 1 .. samples (0.1 to 5.0 for 50 samples)."""
    return [Fraction(k, 10) for k in range(1, samples + 1)]


def check_estimates(samples: int = 50, n: int = 1) -> CheckResult:
    t0 = Fraction(1, 2)
    for t1 in estimate_grid(samples):
        eta = first_eigenvalue(MetricParams(t0, t1))
        if eta < f1(t1, n):
            return CheckResult("estimates", False, f"eta1={eta} < f1={f1(t1, n)} at t1={t1}")
        bound = f2(t1, n)
        if bound.valid and not eta > bound.value:
            return CheckResult("estimates", False, f"eta1={eta} <= f2={bound.value} at t1={t1}")
    upper, lower = f1_branches(1, n)
    if upper != lower:
        return CheckResult("estimates", False, "f1 jumps at t1=1")
    for t1 in (Fraction(1), Fraction(1, 2 * n + 3)):
        horizontal, vertical = f2_branches(t1, n)
        if horizontal != vertical:
            return CheckResult("estimates", False, f"f2 jumps at t1={t1}")
    return CheckResult("estimates", True, checked=samples)


SUITES = ("oracle", "urakawa", "sp2", "estimates")


def run_suite(name: str, depth: int) -> list[CheckResult]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, depth)]
    if name == "oracle":
        return [check_oracle(depth)]
    if name == "urakawa":
        return [check_urakawa()]
    if name == "sp2":
        return [check_sp2(depth)]
    if name == "estimates":
        return [check_estimates()]
    raise ValueError(f"unknown suite {name!r}")
