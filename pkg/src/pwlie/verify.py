"""Regression checks against the bundled appendix tables and the brute-force oracle."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations_with_replacement
from pathlib import Path

from .oracle import diff_report, orbit_bruteforce
from .pweights import pweights
from .signatures import signature_index
from .weights import AffineDominant, AlgebraContext, FiniteWeight, parse_display

__all__ = [
    "CheckResult",
    "load_fixtures",
    "load_misprints",
    "expected_table",
    "check_appendix",
    "check_conjugation",
    "check_oracle",
    "check_signatures",
    "run_verification",
    "GROUPS",
    "dominant_labels",
]

GROUPS = {
    "a2..a5": ["A.2", "A.3", "A.4", "A.5"],
    "a6..a8": ["A.6", "A.7", "A.8"],
    "a9..a10": ["A.9", "A.10"],
}


@dataclass
class CheckResult:
    name: str
    mismatches: list[str] = field(default_factory=list)
    allowlisted: int = 0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        if not self.ok:
            return f"{self.name}: FAIL ({len(self.mismatches)} differences)"
        if self.allowlisted:
            s = "" if self.allowlisted == 1 else "s"
            return f"{self.name}: OK ({self.allowlisted} allowlisted misprint{s})"
        return f"{self.name}: OK"


def _read_json(path, default_name: str) -> dict:
    if path is None:
        return json.loads(resources.files("pwlie.data").joinpath(default_name).read_text("utf-8"))
    return json.loads(Path(path).read_text("utf-8"))


def load_fixtures(path=None) -> dict:
    return _read_json(path, "appendix.json")


def load_misprints(path=None) -> dict:
    return _read_json(path, "misprints.json")


def expected_table(
    name: str, fixtures: dict, misprints: dict
) -> tuple[dict[int, set[FiniteWeight]], list[dict], list[str]]:
    """Printed table with allowlisted corrections applied.

    Returns per-depth sets, the allowlist entries actually used, and
    problems (entries that neither parse nor appear in the allowlist).
    """
    table = fixtures["tables"][name]
    rank = fixtures["rank"]
    fixes = {m["printed"]: m for m in misprints.get(name, [])}
    expected: dict[int, set[FiniteWeight]] = {d: set() for d in range(table["horizon"] + 1)}
    used, problems = [], []
    for entry in table["entries"]:
        text = entry
        if entry in fixes:
            used.append(fixes[entry])
            text = fixes[entry]["correction"]
            if text is None:
                continue
        try:
            w, d = parse_display(text, rank)
        except ValueError as exc:
            problems.append(f"{name}: unreadable entry {entry!r}: {exc}")
            continue
        if d not in expected:
            problems.append(f"{name}: entry {entry!r} beyond horizon")
            continue
        expected[d].add(w)
    return expected, used, problems


def check_appendix(names, fixtures=None, misprints=None, cache=None, label=None) -> CheckResult:
    fixtures = fixtures or load_fixtures()
    misprints = misprints if misprints is not None else load_misprints()
    rank = fixtures["rank"]
    ctx = AlgebraContext(rank)
    result = CheckResult(label or "..".join([names[0], names[-1]]))
    for name in names:
        table = fixtures["tables"][name]
        source = AffineDominant(tuple(table["labels"]))
        K = table["horizon"]
        expected, used, problems = expected_table(name, fixtures, misprints)
        result.mismatches.extend(problems)
        computed = pweights(source, K, ctx, cache)
        for d in range(K + 1):
            got = set(computed[d])
            for w in sorted(got - expected[d], key=lambda w: w.coords, reverse=True):
                result.mismatches.append(f"{name}: computed but not printed {w.display(d)}")
            for w in sorted(expected[d] - got, key=lambda w: w.coords, reverse=True):
                result.mismatches.append(f"{name}: printed but not computed {w.display(d)}")
        if used:
            # every allowlisted correction must be what the oracle says
            orbit = orbit_bruteforce(source, K, ctx)
            truth = {d: {w for w, _ in orbit[d]} for d in orbit}
            for fix in used:
                try:
                    bad, bad_d = parse_display(fix["printed"], rank)
                    if bad in truth.get(bad_d, ()):
                        result.mismatches.append(
                            f"{name}: allowlisted {fix['printed']} is actually correct"
                        )
                except ValueError:
                    pass
                if fix["correction"] is not None:
                    good, good_d = parse_display(fix["correction"], rank)
                    if good not in truth.get(good_d, ()):
                        result.mismatches.append(
                            f"{name}: correction {fix['correction']} not confirmed by the oracle"
                        )
            result.allowlisted += len(used)
    return result


def check_conjugation(cache=None, K: int = 9) -> CheckResult:
    """Diagram-automorphism symmetry of the fundamental sets of A_5^(1)."""
    ctx = AlgebraContext(5)
    result = CheckResult("conjugation")
    sets = {}
    for nu in range(6):
        labels = [0] * 6
        labels[nu] = 1
        sets[nu] = pweights(AffineDominant(tuple(labels)), K, ctx, cache)
    for nu, mate in ((0, 0), (3, 3), (1, 5), (2, 4)):
        if sets[nu].conjugate().as_sets() != sets[mate].as_sets():
            result.mismatches.append(f"conjugate of Lambda_{nu} differs from Lambda_{mate}")
    return result


def dominant_labels(rank: int, level: int):
    """All affine label vectors of the given rank and level."""
    for combo in combinations_with_replacement(range(rank + 1), level):
        labels = [0] * (rank + 1)
        for nu in combo:
            labels[nu] += 1
        yield AffineDominant(tuple(labels))


def check_oracle(max_rank: int = 3, max_level: int = 3, K: int = 5, cache=None) -> CheckResult:
    """Main-path permutation weights (and signs where defined) against the orbit scan."""
    result = CheckResult("oracle")
    for rank in range(1, max_rank + 1):
        ctx = AlgebraContext(rank)
        for level in range(1, max_level + 1):
            for source in dominant_labels(rank, level):
                result.mismatches.extend(_compare_with_oracle(source, K, ctx, cache))
    return result


def _compare_with_oracle(source: AffineDominant, K: int, ctx: AlgebraContext, cache=None, modulus=None) -> list[str]:
    strict = source.is_strictly_dominant()
    main = pweights(source, K, ctx, cache)
    orbit = orbit_bruteforce(source, K, ctx)
    ours, theirs = {}, {}
    for d in range(K + 1):
        if strict:
            ours[d] = {w: signature_index(w, source.level, ctx, modulus) for w in main[d]}
            theirs[d] = {w: s for w, s in orbit[d]}
        else:
            ours[d] = {w: 0 for w in main[d]}
            theirs[d] = {w: 0 for w, _ in orbit[d]}
    return diff_report(ours, theirs, label=f"A_{ctx.rank}^(1) {source}: ")


def check_signatures(max_rank: int = 3, K: int = 5, cache=None, modulus=None) -> CheckResult:
    """Signature index against oracle determinants, strictly dominant sources of level <= N+3."""
    result = CheckResult("signatures")
    for rank in range(1, max_rank + 1):
        ctx = AlgebraContext(rank)
        for level in range(rank + 1, rank + 4):
            for source in dominant_labels(rank, level):
                if source.is_strictly_dominant():
                    result.mismatches.extend(_compare_with_oracle(source, K, ctx, cache, modulus))
    return result


def run_verification(only=None, fixtures_path=None, misprints_path=None, cache=None) -> list[CheckResult]:
    fixtures = load_fixtures(fixtures_path)
    misprints = load_misprints(misprints_path)
    selected = _select(only)
    results = []
    for key, names in GROUPS.items():
        chosen = [n for n in names if selected is None or n in selected]
        if not chosen:
            continue
        label = ("A" + chosen[0][1:] + "..A" + chosen[-1][1:]) if len(chosen) > 1 else chosen[0]
        results.append(check_appendix(chosen, fixtures, misprints, cache, label))
        if key == "a2..a5" and (selected is None or "conjugation" in selected):
            results.append(check_conjugation(cache))
    if selected is None or "oracle" in selected:
        results.append(check_oracle(cache=cache))
    if selected is None or "signatures" in selected:
        results.append(check_signatures(cache=cache))
    return results


def _select(only):
    if not only:
        return None
    chosen = set()
    for item in only:
        key = item.strip().lower().replace("a.", "a")
        if key in ("oracle", "signatures", "conjugation"):
            chosen.add(key)
            continue
        if key in GROUPS:
            chosen.update(GROUPS[key])
            continue
        if key.startswith("a") and key[1:].isdigit():
            name = "A." + key[1:]
            if any(name in names for names in GROUPS.values()):
                chosen.add(name)
                continue
        raise ValueError(f"unknown check {item!r}")
    return chosen
