"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line, which is printed in the pytest
terminal summary.  Running this file directly prints the same lines without
pytest.
"""

import sys
import time

import pytest

from pwlie.oracle import string_by_counting
from pwlie.pweights import maximal_classes
from pwlie.verify import check_appendix, check_conjugation, check_oracle, check_signatures, load_fixtures
from pwlie.weights import AffineDominant, AlgebraContext, from_dynkin
from pwlie.weylkac import residuals, solve_strings

A5 = AlgebraContext(5)

EXPECTED_STRINGS = [
    [1, 10, 70, 380, 1740, 7012, 25585, 86130, 271225, 807100],
    [2, 22, 148, 770, 3382, 13134, 46382, 151734, 465894],
    [5, 50, 315, 1550, 6506, 24320, 83140, 264460],
]
PARTITION_HORIZON = 20

_tables = {}


def _strings_a5():
    if "a5" not in _tables:
        start = time.perf_counter()
        _tables["a5"] = solve_strings(AffineDominant((1, 1, 0, 0, 0, 0)), 9, A5)
        _tables["a5_time"] = time.perf_counter() - start
    return _tables["a5"]


def _strings_a1():
    if "a1" not in _tables:
        _tables["a1"] = solve_strings(AffineDominant((1, 0)), PARTITION_HORIZON)
    return _tables["a1"]


def criterion_1():
    start = time.perf_counter()
    fixtures = load_fixtures()
    tables = check_appendix(["A.2", "A.3", "A.4", "A.5"], fixtures, label="A.2..A.5")
    conj = check_conjugation()
    n_a2 = len(fixtures["tables"]["A.2"]["entries"])
    ok = tables.ok and conj.ok
    detail = (
        f"{tables.summary()}; {conj.summary()}; A.2 has {n_a2} weights; "
        f"{time.perf_counter() - start:.1f}s"
    )
    return ok, detail, tables.mismatches + conj.mismatches


def criterion_2():
    start = time.perf_counter()
    res = check_appendix(["A.6", "A.7", "A.8", "A.9", "A.10"], label="A.6..A.10")
    elapsed = time.perf_counter() - start
    return res.ok and elapsed < 60, f"{res.summary()}; {elapsed:.1f}s (limit 60s)", res.mismatches


def criterion_3():
    table = _strings_a5()
    got = [table.series(j) for j in range(len(table.classes))]
    elapsed = _tables["a5_time"]
    ok = got == EXPECTED_STRINGS and elapsed < 180
    lines = [] if got == EXPECTED_STRINGS else [f"got {got}"]
    return ok, f"3 classes, exact integer match={got == EXPECTED_STRINGS}; {elapsed:.1f}s", lines


def criterion_4():
    table = _strings_a1()
    expected = string_by_counting(PARTITION_HORIZON)
    got = table.series(0)
    ok = got == expected and len(table.classes) == 1
    return ok, f"A_1 Lambda_0, K={PARTITION_HORIZON}: p(0..K) = {got[:11]}...", [] if ok else [f"got {got}"]


def criterion_5():
    oracle = check_oracle(max_rank=3, max_level=3, K=5)
    signs = check_signatures(max_rank=3, K=5)
    ok = oracle.ok and signs.ok
    n = len(oracle.mismatches) + len(signs.mismatches)
    return ok, f"N<=3, level<=3, K=5 sets and signs: {n} diffs; {signs.summary()}", oracle.mismatches + signs.mismatches


def criterion_6():
    got = [(m.finite, m.offset) for m in maximal_classes(AffineDominant((1, 1, 0, 0, 0, 0)), A5)]
    expected = [
        (from_dynkin((1, 0, 0, 0, 0)), 0),
        (from_dynkin((0, 1, 0, 0, 1)), 1),
        (from_dynkin((0, 0, 1, 1, 0)), 2),
    ]
    return got == expected, f"classes {[(w.labels, m) for w, m in got]}", []


def criterion_7():
    problems = []
    for name, table in (("A_5 L0+L1", _strings_a5()), ("A_1 L0", _strings_a1())):
        for J, r in enumerate(residuals(table)):
            if not r.is_zero():
                problems.append(f"{name}: residual at J={J} is {r}")
        for cs in table.coeffs:
            if any(not isinstance(c, int) or c < 0 for c in cs):
                problems.append(f"{name}: bad coefficient in {cs}")
    return not problems, "residuals zero at every order; coefficients non-negative integers", problems


CRITERIA = [
    (1, "fundamental tables A.2-A.5 and conjugation", criterion_1),
    (2, "composite tables A.6-A.10", criterion_2),
    (3, "A_5 Lambda_0+Lambda_1 string functions", criterion_3),
    (4, "A_1 partition cross-check", criterion_4),
    (5, "oracle equivalence", criterion_5),
    (6, "maximal classes", criterion_6),
    (7, "exactness", criterion_7),
]


def _line(number, title, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} -- {detail}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, acceptance_lines):
    ok, detail, problems = check()
    acceptance_lines.append((number, _line(number, title, ok, detail)))
    assert ok, "\n".join([detail] + problems[:20])


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        ok, detail, problems = check()
        print(_line(number, title, ok, detail), flush=True)
        for p in problems[:20]:
            print("    " + p)
        failed += not ok
    sys.exit(1 if failed else 0)
