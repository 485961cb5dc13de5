"""The ten acceptance criteria, one test each.

Every test records a pass/fail line that is printed in the pytest summary.
"""
import csv
from collections import Counter
import subprocess
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

from awspec.aloff_wallach import eigen_pair, first_triples, iter_spherical, multiplicity_m, partition
from awspec.checks import URAKAWA_TABLE, check_estimates, check_oracle, check_sp2
from awspec.estimates import (
    constant_volume_params,
    f1_branches,
    f2_branches,
    volume_normalized_eigenvalue,
)
from awspec.freudenthal import sp2_casimir_killing, su5_casimir_killing
from awspec.sp2 import sp2_partition
from awspec.spectrum import (
    MetricParams,
    aggregate_su3_multiplicity,
    first_eigenvalue,
)

GOLDEN = Path(__file__).parent / "golden" / "table3.csv"


def test_01_golden_table(criterion):
    with GOLDEN.open() as fh:
        want = [tuple(int(x) for x in row.values()) for row in csv.DictReader(fh)]
    got = []
    for t in first_triples(78):
        h, v = eigen_pair(t.z1, t.z2, t.z3)
        got.append((t.z1, t.z2, t.z3, h, v, t.total_mult))
    samples = {(2, 1, 1): (4, 8, 24), (8, 4, 4): (16, 80, 1125)}
    ok = got == want and len(got) == 78
    ok = ok and all(row[3:] == samples[row[:3]] for row in got if row[:3] in samples)
    assert criterion(1, "golden table of the first 78 spherical triples", ok)


def test_02_urakawa(criterion):
    got = {k: aggregate_su3_multiplicity(*k) for k in URAKAWA_TABLE}
    assert criterion(2, "SU(3)-normal aggregated multiplicities", got == URAKAWA_TABLE)


def test_03_oracle(criterion):
    result = check_oracle(12)
    assert criterion(3, "partition formula equals weight-multiplicity oracle, z1 <= 12", result.passed), (
        result.counterexample
    )


def _grid_pairs():
    values = [Fraction(k, 4) for k in range(1, 13)]  # 1/4 .. 3
    return list(product(values, values))


def test_04_first_eigenvalue(criterion):
    pairs = _grid_pairs()
    assert len(pairs) >= 100
    bad = []
    for t0, t1 in pairs:
        want = 12 / t0 if t1 < t0 else 4 / t0 + 8 / t1
        if first_eigenvalue(MetricParams(t0, t1)) != want:
            bad.append((t0, t1))
    assert criterion(4, f"first eigenvalue closed form on {len(pairs)} pairs", not bad), bad[:5]


def test_05_horizontal_minimum(criterion):
    ok = True
    for t in iter_spherical(30):
        h = eigen_pair(t.z1, t.z2, t.z3).h
        on_diagonal = t.z == (2 * t.z3, t.z3, t.z3)
        if h < 4 * t.z3 or (h == 4 * t.z3) != on_diagonal:
            ok = False
            break
    for z2 in range(21):
        for z3 in range(2 * z2 + 3):
            if (multiplicity_m(2 * z2, z2, z3) == 1) != (z3 <= z2):
                ok = False
    assert criterion(5, "h >= 4 z3 with equality only at (2z3, z3, z3)", ok)


def test_06_sp2_criterion(criterion):
    result = check_sp2(10)
    assert criterion(6, "Sp(1)'-spherical iff n1 == n3, n_i <= 10", result.passed), result.counterexample


def test_07_casimir_values(criterion):
    ok = sp2_casimir_killing(4, 0) == Fraction(8, 3) and su5_casimir_killing(1, 0, 0, 1) == 1
    run = subprocess.run(
        [sys.executable, "-m", "awspec", "first", "--r0", "12", "--r1", "8"],
        capture_output=True,
        text=True,
        check=False,
    )
    lines = run.stdout.splitlines()
    ok = ok and run.returncode == 0 and lines[1].split(",")[0] == "1"
    assert criterion(7, "Casimir table values and first --r0 12 --r1 8 == 1", ok), run.stdout + run.stderr


def test_08_estimates(criterion):
    result = check_estimates(samples=50, n=1)
    ok = result.passed and result.checked == 50
    # breakpoints for n = 1 are t1 = 1 and t1 = 1/5
    ok = ok and len(set(f1_branches(1, 1))) == 1
    ok = ok and all(len(set(f2_branches(t, 1))) == 1 for t in (Fraction(1), Fraction(1, 5)))
    assert criterion(8, "eta1 dominates f1 and f2 on 50 points; breakpoints continuous", ok), (
        result.counterexample
    )


def test_09_volume_trend(criterion):
    scales = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(4)]
    reports = [volume_normalized_eigenvalue(constant_volume_params(s)) for s in scales]
    ok = all(a < b for a, b in zip(reports, reports[1:]))
    assert criterion(9, "volume-normalized eta1 increases along the unit-volume curve", ok), reports


def _tally_partition(limit):
    """Counts of m1*(3, -1) + m2*(3, -2) + m3*(0, 1) over all (m1, m2, m3) reaching the box."""
    tally = Counter()
    for m1 in range(limit // 3 + 1):
        for m2 in range(limit // 3 + 1 - m1):
            for m3 in range(limit + m1 + 2 * m2 + 1):
                tally[(3 * (m1 + m2), m3 - m1 - 2 * m2)] += 1
    return tally


def _tally_sp2(limit):
    """Same for the doubled generators (1, 1), (-1, 1), (0, 2)."""
    tally = Counter()
    for m1 in range(limit + 1):
        for m2 in range(limit + 1 - m1):
            for m3 in range((limit - m1 - m2) // 2 + 1):
                tally[(m1 - m2, m1 + m2 + 2 * m3)] += 1
    return tally


def test_10_partition_functions(criterion):
    su3, sp2 = _tally_partition(60), _tally_sp2(40)
    ok = all(
        partition(a1, a2) == su3[(a1, a2)]
        for a1 in range(-60, 61)
        for a2 in range(-60, 61)
    )
    ok = ok and all(
        sp2_partition(A0, A1) == sp2[(A0, A1)]
        for A0 in range(-40, 41)
        for A1 in range(-40, 41)
    )
    assert criterion(10, "partition functions equal brute-force enumeration", ok)
