"""Exit criteria for the package; each test prints one PASS/FAIL line."""
import json
import subprocess
import sys
import time
from fractions import Fraction
from math import comb

import pytest

from fibsum import sequences
from fibsum.catalog import ParamTuple, Side, enumerate_catalog, eval_side, get_identity
from fibsum.mutants import all_mutants
from fibsum.poly import Dattoli, check_dattoli
from fibsum.sequences import (
    check_binet,
    check_lemma1,
    check_lemma2,
    fib,
    fib_oracle,
    lucas,
    lucas_oracle,
)
from fibsum.verifier import GridSpec, verify_grid


@pytest.fixture
def say(capsys):
    def _say(number, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}: {detail}")
    return _say


def fibsum(*args):
    start = time.perf_counter()
    res = subprocess.run([sys.executable, "-m", "fibsum", *args], capture_output=True, text=True)
    return res, time.perf_counter() - start


@pytest.fixture(scope="module")
def full_run_jobs1():
    return fibsum("verify", "--all", "--format", "json", "--jobs", "1")


def test_1_full_catalog_default_grid(say, full_run_jobs1):
    res, elapsed = full_run_jobs1
    doc = json.loads(res.stdout)
    by_id = {r["identity_id"]: r for r in doc["reports"]}
    catalog_ids = [d.id for d in enumerate_catalog()]
    three_way = [d.id for d in enumerate_catalog() if d.three_way and d.id.startswith("REL")]
    ok = (
        res.returncode == 0
        and doc["total_failures"] == 0
        and all(i in by_id and by_id[i]["tuples_tested"] > 0 for i in catalog_ids)
        and len(three_way) == 8
        and elapsed <= 120
    )
    say(1, ok, f"{len(catalog_ids)} entries, {doc['total_failures']} failures, "
               f"{len(three_way)} three-way REL entries, {elapsed:.1f}s (limit 120s)")
    assert res.returncode == 0, res.stderr
    assert doc["total_failures"] == 0
    assert ok


def test_2_polynomial_identities(say):
    start = time.perf_counter()
    bad = [(w.name, n) for w in Dattoli for n in range(0, 65) if not check_dattoli(w, n)]
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed <= 10
    say(2, ok, f"DAT1/DAT2/DAT3/REL4 for n = 0..64, {len(bad)} failures, {elapsed:.2f}s (limit 10s)")
    assert ok, bad


def test_3_kernel_oracle_equivalence(say):
    sequences.fib_lucas.cache_clear()
    start = time.perf_counter()
    mismatches = [n for n in range(-2000, 2001) if fib(n) != fib_oracle(n) or lucas(n) != lucas_oracle(n)]
    sign_bad = [
        n for n in range(0, 2001)
        if fib(-n) != (-1) ** (n + 1) * fib(n) or lucas(-n) != (-1) ** n * lucas(n)
    ]
    elapsed = time.perf_counter() - start
    ok = not mismatches and not sign_bad and elapsed <= 5
    say(3, ok, f"fib/lucas vs iterative oracle on [-2000, 2000] and sign rules, {elapsed:.2f}s (limit 5s)")
    assert ok, (mismatches[:5], sign_bad[:5])


def test_4_field_lemmas(say):
    start = time.perf_counter()
    binet = [n for n in range(-500, 501) if not check_binet(n)]
    lem1 = [s for s in range(-100, 101) if not check_lemma1(s)]
    lem2 = [(r, s) for r in range(-50, 51) for s in range(-50, 51) if not check_lemma2(r, s)]
    elapsed = time.perf_counter() - start
    ok = not (binet or lem1 or lem2) and elapsed <= 30
    say(4, ok, f"Binet |n|<=500, first lemma |s|<=100, four shifted-index relations |r|,|s|<=50, "
               f"{elapsed:.2f}s (limit 30s)")
    assert ok, (binet[:3], lem1[:3], lem2[:3])


def test_5_remark_thm2_at_s2_equals_cor8(say):
    bad = []
    for x in "FL":
        thm2, cor8 = get_identity(f"THM2-{x}"), get_identity(f"COR8-{x}")
        for n in range(0, 25):
            for t in range(-6, 7):
                for side in (Side.LHS, Side.RHS):
                    if eval_side(thm2, side, ParamTuple(n, 0, 2, t)) != eval_side(cor8, side, ParamTuple(n, 0, 0, t)):
                        bad.append((x, n, t, side.value))
    say(5, not bad, f"THM2-F/L at s=2 vs COR8-F/L, n<=24, |t|<=6, both sides, {len(bad)} mismatches")
    assert not bad


def _direct_rel2p_lhs(G, n):
    # plain summation, independent of the catalog's common-denominator kernel
    return sum(
        (Fraction(comb(n, k), k + 2) * (-1) ** k * 3 ** (n - k) * G(2 * (n + k)) for k in range(n + 1)),
        Fraction(0),
    )


def test_6_numeric_anchors(say):
    f_entry, l_entry = get_identity("REL2P-F"), get_identity("REL2P-L")
    anchor = eval_side(f_entry, Side.RHS, ParamTuple(0))
    bad = []
    for entry, G in ((f_entry, fib_oracle), (l_entry, lucas_oracle)):
        for n in range(0, 31):
            direct = _direct_rel2p_lhs(G, n)
            p = ParamTuple(n)
            values = [eval_side(entry, side, p) for side in (Side.LHS, Side.MID, Side.RHS)]
            if any(v != direct for v in values):
                bad.append((entry.id, n))
    ok = anchor == 0 and not bad
    say(6, ok, f"REL2P-F RHS(n=0) = {anchor}; REL2P-F/L (constants 21, 47, 7) vs direct sums n<=30, "
               f"{len(bad)} mismatches")
    assert ok, bad


def test_7_mutation_sensitivity(say):
    mutants = all_mutants()
    detected = {}
    for m in mutants:
        rep = verify_grid(m.descriptor, GridSpec())
        detected[m.name] = len(rep.failures)
    missed = [name for name, count in detected.items() if count == 0]
    ok = len(mutants) >= 5 and not missed
    say(7, ok, f"{len(mutants)} single-token mutants on the default grid, missed: {missed or 'none'}")
    assert ok


def test_8_determinism(say, full_run_jobs1):
    first, _ = full_run_jobs1
    many, _ = fibsum("verify", "--all", "--format", "json", "--jobs", "8")
    seeded_a, _ = fibsum("verify", "--seed", "1", "--samples", "500", "--format", "json")
    seeded_b, _ = fibsum("verify", "--seed", "1", "--samples", "500", "--format", "json")
    grid_same = first.stdout == many.stdout and first.returncode == many.returncode == 0
    seed_same = seeded_a.stdout == seeded_b.stdout and seeded_a.returncode == 0
    ok = grid_same and seed_same and len(first.stdout) > 0
    say(8, ok, f"--jobs 1 vs --jobs 8 identical: {grid_same}; --seed 1 --samples 500 twice identical: {seed_same}")
    assert ok
