"""Permutation weight sets of affine dominant weights of A_N^(1).

For an affine dominant weight of level k, the dominant finite parts found at
depth order d of its affine Weyl orbit form a finite set.  For the level-1
(fundamental) weights they are exactly the dominant solutions of the depth
equation

    sum_i r_i (r_i + p_i) - sum_i r_i r_{i+1} = k d,   r_i >= 0,

where ``p`` are the Dynkin labels of the finite part and the solution weight
is ``Lambda_bar + sum_i r_i alpha_i``.  Higher levels are assembled by adding
members of the sets of their fundamental constituents.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import HorizonTooSmall
from .weights import (
    AffineDominant,
    AlgebraContext,
    FiniteWeight,
    class_of,
    fundamental,
    from_dynkin,
    inner,
)

log = logging.getLogger(__name__)

__all__ = [
    "DepthSolution",
    "PermutationWeightSet",
    "MaximalClass",
    "depth_form",
    "solve_depth_equation",
    "root_coefficients",
    "in_orbit",
    "pweights_fundamental",
    "pweights_compose",
    "maximal_classes",
    "pweights",
    "clear_memory_cache",
]


@dataclass(frozen=True)
class DepthSolution:
    r: tuple[int, ...]
    weight: FiniteWeight
    depth: int


def depth_form(r: Sequence[int], p: Sequence[int]) -> int:
    """Q(r; p) = sum r_i (r_i + p_i) - sum r_i r_{i+1}."""
    n = len(r)
    return sum(r[i] * (r[i] + p[i]) for i in range(n)) - sum(
        r[i] * r[i + 1] for i in range(n - 1)
    )


def _add_roots(base: Sequence[int], r: Sequence[int]) -> FiniteWeight:
    # alpha_i = mu_i - mu_{i+1}
    c = list(base)
    for i, ri in enumerate(r):
        c[i] += ri
        c[i + 1] -= ri
    return FiniteWeight(tuple(c))


def solve_depth_equation(p: Sequence[int], k: int, d: int) -> list[DepthSolution]:
    """All non-negative integer ``r`` with Q(r; p) = k*d.

    Depth-first over r_1, r_2, ...  With r_1..r_j fixed and n = N - j
    coordinates left, the rest of Q is at least ``-r_j**2 * n / (2(n+1))``
    (the minimum of the A_n quadratic form against the coupling term; the
    linear p-terms are non-negative), which gives an exact pruning bound.
    """
    p = tuple(int(v) for v in p)
    n_total = len(p)
    if n_total < 1:
        raise ValueError("need at least one label")
    if any(v < 0 for v in p):
        raise ValueError("labels must be non-negative")
    if k < 1 or d < 0:
        raise ValueError("need k >= 1 and d >= 0")
    target = k * d
    base = from_dynkin(p).coords
    out: list[DepthSolution] = []
    r: list[int] = []

    def bound_exceeds(partial: int, last: int, left: int) -> bool:
        # partial - last**2 * left / (2(left+1)) > target, in integers
        return 2 * (left + 1) * partial - left * last * last > 2 * (left + 1) * target

    def descend(j: int, partial: int):
        if j == n_total:
            if partial == target:
                rr = tuple(r)
                out.append(DepthSolution(rr, _add_roots(base, rr), d))
            return
        prev = r[-1] if r else 0
        left = n_total - j - 1
        # the bound is convex in v; its vertex sits at (prev - p_j) / (2a)
        a = Fraction(left + 2, 2 * (left + 1))
        vertex = Fraction(prev - p[j], 2) / a
        v = 0
        while True:
            new_partial = partial + v * (v + p[j]) - prev * v
            if bound_exceeds(new_partial, v, left):
                if v >= vertex:
                    break
            else:
                r.append(v)
                descend(j + 1, new_partial)
                r.pop()
            v += 1

    descend(0, 0)
    return out


def root_coefficients(target: FiniteWeight, source: FiniteWeight) -> tuple[int, ...] | None:
    """Integers r with target - source = sum r_i alpha_i, or None across classes."""
    diff = [a - b for a, b in zip(target.coords, source.coords)]
    n1 = len(diff)
    total = sum(diff)
    if total % n1:
        return None
    shift = total // n1
    r, acc = [], 0
    for x in diff[:-1]:
        acc += x - shift
        r.append(acc)
    return tuple(r)


def in_orbit(w: Sequence[int], source: Sequence[int], level: int) -> bool:
    """Whether ``w`` is a finite part of the affine Weyl orbit of ``source``.

    The orbit's finite parts are the permutations of ``source + level*beta``
    with beta in the root lattice.  Writing ``w = pi(source) + level*beta +
    m(1,...,1)``, ``m`` is fixed by the coordinate sums, and a permutation
    exists exactly when the residues modulo ``level`` agree as multisets.
    """
    n1 = len(w)
    s = sum(w) - sum(source)
    if s % n1:
        return False
    m = s // n1
    return Counter((x - m) % level for x in w) == Counter(x % level for x in source)


@dataclass
class PermutationWeightSet:
    """Dominant finite parts of an affine orbit, keyed by depth order 0..horizon."""

    source: AffineDominant
    horizon: int
    depths: dict[int, tuple[FiniteWeight, ...]] = field(default_factory=dict)

    def __post_init__(self):
        self.depths = {
            d: tuple(sorted(set(self.depths.get(d, ())), key=lambda w: w.coords, reverse=True))
            for d in range(self.horizon + 1)
        }

    @property
    def rank(self) -> int:
        return self.source.rank

    @property
    def level(self) -> int:
        return self.source.level

    def __getitem__(self, d: int) -> tuple[FiniteWeight, ...]:
        if d > self.horizon:
            raise HorizonTooSmall(f"depth {d} beyond horizon {self.horizon}")
        return self.depths[d]

    def __len__(self) -> int:
        return sum(len(ws) for ws in self.depths.values())

    def items(self) -> Iterator[tuple[int, FiniteWeight]]:
        for d in range(self.horizon + 1):
            for w in self.depths[d]:
                yield d, w

    def depth_of(self, w: FiniteWeight) -> int | None:
        for d, ws in self.depths.items():
            if w in ws:
                return d
        return None

    def restrict(self, horizon: int) -> "PermutationWeightSet":
        if horizon > self.horizon:
            raise HorizonTooSmall(f"cannot restrict horizon {self.horizon} to {horizon}")
        return PermutationWeightSet(
            self.source, horizon, {d: self.depths[d] for d in range(horizon + 1)}
        )

    def conjugate(self) -> "PermutationWeightSet":
        """Image under the diagram automorphism that reverses A_N labels."""
        labels = self.source.labels
        src = AffineDominant((labels[0],) + tuple(reversed(labels[1:])))
        return PermutationWeightSet(
            src, self.horizon, {d: [w.conjugate() for w in ws] for d, ws in self.depths.items()}
        )

    def as_sets(self) -> dict[int, set[FiniteWeight]]:
        return {d: set(ws) for d, ws in self.depths.items()}

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "labels": list(self.source.labels),
            "level": self.level,
            "horizon": self.horizon,
            "depths": {
                str(d): [list(w.coords) for w in ws] for d, ws in self.depths.items()
            },
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PermutationWeightSet":
        source = AffineDominant(tuple(data["labels"]))
        if data["rank"] != source.rank or data["level"] != source.level:
            raise ValueError("inconsistent rank/level in permutation weight data")
        horizon = int(data["horizon"])
        depths = {}
        for key, rows in data["depths"].items():
            d = int(key)
            if not 0 <= d <= horizon:
                raise ValueError(f"depth {d} outside horizon {horizon}")
            ws = []
            for row in rows:
                if len(row) != source.rank + 1:
                    raise ValueError(f"bad coordinate row {row}")
                w = FiniteWeight(tuple(row))
                if tuple(row) != w.coords or not w.is_dominant():
                    raise ValueError(f"non-canonical or non-dominant row {row}")
                ws.append(w)
            depths[d] = ws
        missing = set(range(horizon + 1)) - set(depths)
        if missing:
            raise ValueError(f"depths {sorted(missing)} missing")
        return cls(source, horizon, depths)

    def display_lines(self) -> list[str]:
        return [" ".join(w.display(d) for w in ws) for d, ws in self.depths.items() if ws]


def pweights_fundamental(nu: int, K: int, ctx: AlgebraContext) -> PermutationWeightSet:
    """Permutation weights of Lambda_nu up to depth K from the depth equation."""
    source = fundamental(ctx, nu)
    p = source.labels[1:]
    depths = {}
    for d in range(K + 1):
        depths[d] = [
            s.weight for s in solve_depth_equation(p, 1, d) if s.weight.is_dominant()
        ]
    return PermutationWeightSet(source, K, depths)


def pweights_compose(parts: Sequence[PermutationWeightSet], K: int, ctx: AlgebraContext) -> PermutationWeightSet:
    """Combine permutation weight sets of several summands, left to right.

    Candidates are sums of members; a candidate survives when its depth, read
    off from the norm, is an integer in 0..K and it really lies in the orbit
    of the running sum (the norm condition alone admits strays).
    """
    if not parts:
        raise ValueError("nothing to compose")
    for part in parts:
        if part.horizon < K:
            raise HorizonTooSmall(
                f"component {part.source} only known to depth {part.horizon} < {K}"
            )
        if part.rank != ctx.rank:
            raise ValueError("component rank does not match the algebra")
    acc = parts[0].restrict(K)
    for part in parts[1:]:
        acc = _compose_pair(acc, part.restrict(K), K)
    return acc


def _compose_pair(a: PermutationWeightSet, b: PermutationWeightSet, K: int) -> PermutationWeightSet:
    source = a.source + b.source
    k = source.level
    base = source.finite
    base_coords = base.coords
    base_norm = inner(base, base)
    n1 = len(base_coords)
    strict = source.is_strictly_dominant()
    found: dict[int, set[FiniteWeight]] = {d: set() for d in range(K + 1)}
    seen: set[tuple[int, ...]] = set()
    members_b = [w.coords for _, w in b.items()]
    for _, wa in a.items():
        ca = wa.coords
        for cb in members_b:
            c = tuple(x + y for x, y in zip(ca, cb))
            if c in seen:
                continue
            seen.add(c)
            if strict and len(set(c)) < n1:
                continue
            s = sum(c)
            norm = Fraction(sum(x * x for x in c)) - Fraction(s * s, n1)
            depth = (norm - base_norm) / (2 * k)
            if depth.denominator != 1 or not 0 <= depth <= K:
                continue
            if not in_orbit(c, base_coords, k):
                continue
            found[int(depth)].add(FiniteWeight(c))
    return PermutationWeightSet(source, K, found)


@dataclass(frozen=True)
class MaximalClass:
    """A maximal dominant weight: its finite part and its depth offset M0."""

    finite: FiniteWeight
    offset: int

    def affine(self, level: int) -> AffineDominant:
        return AffineDominant.from_finite(self.finite, level)


def _dominant_with_label_sum(rank: int, total: int) -> Iterator[tuple[int, ...]]:
    if rank == 1:
        for a in range(total + 1):
            yield (a,)
        return
    for a in range(total + 1):
        for rest in _dominant_with_label_sum(rank - 1, total - a):
            yield (a,) + rest


def maximal_classes(source: AffineDominant, ctx: AlgebraContext | None = None) -> list[MaximalClass]:
    """Maximal dominant weights of the irreducible module with highest weight ``source``.

    Every dominant finite weight in the right congruence class whose labels
    sum to at most the level lifts to a maximal weight.  Its offset is the
    smallest M0 >= 0 making ``source - (lambda - M0 delta)`` a non-negative
    combination of affine simple roots, i.e. M0 = max(0, max_i r_i) where
    ``lambda_bar - source_bar = sum r_i alpha_i``.
    """
    ctx = ctx or source.context
    base = source.finite
    cls = class_of(base)
    out = []
    for labels in _dominant_with_label_sum(ctx.rank, source.level):
        w = from_dynkin(labels)
        if class_of(w) != cls:
            continue
        r = root_coefficients(w, base)
        out.append(MaximalClass(w, max([0, *r])))
    out.sort(key=lambda m: (m.offset, [-c for c in m.finite.coords]))
    return out


_MEMORY: dict[tuple[int, tuple[int, ...]], PermutationWeightSet] = {}


def clear_memory_cache() -> None:
    _MEMORY.clear()


def _memo_get(source: AffineDominant, K: int) -> PermutationWeightSet | None:
    hit = _MEMORY.get((source.rank, source.labels))
    if hit is not None and hit.horizon >= K:
        return hit if hit.horizon == K else hit.restrict(K)
    return None


def pweights(source: AffineDominant, K: int, ctx: AlgebraContext | None = None, cache=None) -> PermutationWeightSet:
    """Permutation weight set of any affine dominant weight up to depth K.

    ``cache`` is an optional :class:`pwlie.cache.PWeightCache`; storage
    failures are logged and recorded on the cache object, never raised.
    """
    ctx = ctx or source.context
    if source.rank != ctx.rank:
        raise ValueError("weight rank does not match the algebra")
    if K < 0:
        raise ValueError("horizon must be non-negative")
    hit = _memo_get(source, K)
    if hit is not None:
        return hit
    if cache is not None:
        stored = cache.load(source, K)
        if stored is not None:
            _MEMORY[(source.rank, source.labels)] = stored
            return stored.restrict(K) if stored.horizon > K else stored

    if source.is_fundamental():
        result = pweights_fundamental(source.fundamental_indices()[0], K, ctx)
    else:
        indices = source.fundamental_indices()
        # reuse the largest proper prefix already built
        prefix_labels = [0] * ctx.dim
        for nu in indices[:-1]:
            prefix_labels[nu] += 1
        prefix = pweights(AffineDominant(tuple(prefix_labels)), K, ctx)
        last = pweights_fundamental(indices[-1], K, ctx)
        result = pweights_compose([prefix, last], K, ctx)

    _MEMORY[(source.rank, source.labels)] = result
    if cache is not None:
        cache.store(result)
    return result
