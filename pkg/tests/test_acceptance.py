"""Acceptance criteria 1-9; each test prints one ``ACCEPTANCE <n> PASS|FAIL`` line.

Run ``python3 tests/test_acceptance.py`` for the report alone, or through pytest.
"""

import functools
import sys
import time
from collections import Counter

import pytest

from treeseries import trees as T
from treeseries.coeff import Poly
from treeseries.verify import (
    NAMED,
    Params,
    check_as_oracle,
    check_coactions,
    check_composition_example,
    check_decompositions,
    check_duality,
    check_golden_tables,
    check_group_axioms,
    check_hopf_axioms,
    check_morphisms,
    check_power_expansion,
    check_projection_sections,
    check_structure,
    composition_example,
)

PARAMS = Params(seed=42)


@functools.lru_cache(maxsize=None)
def timed(check):
    """Run a check family once per session; returns (results, seconds)."""
    t0 = time.perf_counter()
    results = check(PARAMS)
    return results, time.perf_counter() - t0


def pick(check, *needles):
    results, _ = timed(check)
    if not needles:
        return list(results)
    chosen = [r for r in results if any(n in r.name for n in needles)]
    assert chosen, f"no {check.__name__} result matches {needles}"
    return chosen


def report(number, ok, detail, capsys=None):
    line = f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {detail}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def summarize(results):
    failed = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    return not failed, "; ".join(failed) if failed else f"{len(results)} checks"


def criterion_1(capsys=None):
    a, b, c, d = (Poly.var(v) for v in "abcd")
    t0 = time.perf_counter()
    out = composition_example()
    elapsed = time.perf_counter() - t0
    low = {"vtx": 1, "AB": a + c, "BA": b + d, "ABC": 2 * a * c, "BAC": a * d,
           "ACA": a * d + b * c, "CAB": b * c, "CBA": 2 * b * d}
    low_ok = all(out[NAMED[k]] == v for k, v in low.items())
    order4 = [v for t, v in out.items() if t.order == 4]
    want4 = [a * c * c, a * c * d, a * c * d, a * d * d, b * c * c, b * c * d, b * c * d, b * d * d]
    multiset_ok = len(order4) == 8 and Counter(map(str, order4)) == Counter(map(str, want4))
    ok = len(out) == 16 and low_ok and multiset_ok and elapsed < 1.0
    ok = ok and all(r.passed for r in pick(check_composition_example))
    report(1, ok, f"{len(out)} terms, order <= 3 match: {low_ok}, order-4 multiset match: {multiset_ok}, "
                  f"{elapsed:.3f}s", capsys)


def criterion_2(capsys=None):
    t0 = time.perf_counter()
    results = check_golden_tables(PARAMS)
    elapsed = time.perf_counter() - t0
    ok, detail = summarize(results)
    report(2, ok and len(results) == 3 and elapsed < 1.0, f"{detail} (dif 7, inv coaction 8, rho 8), {elapsed:.3f}s", capsys)


def criterion_3(capsys=None):
    T.enumerate_trees.cache_clear()
    t0 = time.perf_counter()
    counts = [len(T.enumerate_trees(n)) for n in range(11)]
    elapsed = time.perf_counter() - t0
    want = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
    report(3, counts == want and elapsed < 5.0, f"|Y_n| = {counts}, n=10 in {elapsed:.2f}s", capsys)


def criterion_4(capsys=None):
    results, seconds = timed(check_group_axioms)
    ok, detail = summarize(results)
    names = " ".join(r.name for r in results)
    covered = all(k in names for k in ("over-monoid", "under-monoid", "tree diffeomorphism",
                                       "classic diffeomorphism", "lambda", "rho", "alpha", "semidirect"))
    triples = all("50 triples" in r.detail for r in results)
    report(4, ok and covered and triples and seconds < 120,
           f"{detail} at N=6 with 50 triples each, {seconds:.1f}s", capsys)


def criterion_5(capsys=None):
    results, seconds = timed(check_hopf_axioms)
    ok, detail = summarize(results)
    report(5, ok and len(results) == 20 and seconds < 300,
           f"{detail} (5 coproducts x nc/comm x coassociativity+counit/antipode), {seconds:.1f}s", capsys)


def criterion_6(capsys=None):
    results, seconds = timed(check_duality)
    ok, detail = summarize(results)
    pairs = all(int(r.detail.split()[0]) >= 20 for r in results)
    report(6, ok and len(results) == 5 and pairs and all("N=4" in r.name for r in results),
           f"{detail}, >= 20 pairs each at N=4, {seconds:.1f}s", capsys)


def criterion_7(capsys=None):
    results = pick(check_projection_sections) + pick(
        check_morphisms, "embeddings and comb sections", "projection identities", "Faa di Bruno")
    ok, detail = summarize(results)
    report(7, ok and len(results) == 5, detail, capsys)


def criterion_8(capsys=None):
    results = (
        pick(check_structure)
        + pick(check_coactions, "comodule-coalgebra")
        + pick(check_group_axioms, "alpha subgroup")
    )
    ok, detail = summarize(results)
    report(8, ok and len(results) == 8, detail, capsys)


def criterion_9(capsys=None):
    results = (
        pick(check_decompositions)
        + pick(check_power_expansion)
        + pick(check_as_oracle, "polynomial substitution")
        + pick(check_morphisms, "recursive alpha")
    )
    ok, detail = summarize(results)
    report(9, ok and len(results) == 4, detail, capsys)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion, capsys):
    criterion(capsys)


if __name__ == "__main__":
    failures = 0
    for crit in CRITERIA:
        try:
            crit()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
