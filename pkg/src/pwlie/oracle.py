"""Brute-force ground truth from the translation picture of the affine Weyl group.

Every element of the affine Weyl group of A_N^(1) is a finite permutation
composed with a translation by a root-lattice vector beta.  On a level-k
weight, the translation moves the finite part to ``Lambda_bar + k*beta`` and
lowers it by ``((Lambda_bar,beta) + k|beta|^2/2)`` units of delta.  Scanning
a box of beta values therefore lists the whole orbit slice up to a depth.

Nothing here calls into :mod:`pwlie.pweights` or :mod:`pwlie.signatures`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ResourceLimitExceeded
from .weights import AffineDominant, AlgebraContext, FiniteWeight, dominant_representative, inner

__all__ = [
    "TranslationBall",
    "translation_ball",
    "orbit_bruteforce",
    "string_by_counting",
    "diff_report",
    "DEFAULT_MAX_POINTS",
]

DEFAULT_MAX_POINTS = 5_000_000


@dataclass(frozen=True)
class TranslationBall:
    """Root-lattice vectors (sum-zero mu-coordinates) with depth <= horizon."""

    source: AffineDominant
    horizon: int
    vectors: tuple[tuple[int, ...], ...]
    depths: tuple[int, ...]


def _box_radius(source: AffineDominant, K: int) -> int:
    # |k beta|^2 <= 2kK + 2|Lambda_bar||k beta|  =>  |k beta| <= R
    k = source.level
    base = source.finite
    n = float(inner(base, base)) ** 0.5
    radius = n + math.sqrt(n * n + 2 * k * K)
    # for a sum-zero vector, |x_I| <= |x| * sqrt(N/(N+1)) <= |x|
    return int(math.floor(radius / k + 1e-9)) + 1


def translation_ball(
    source: AffineDominant, K: int, max_points: int = DEFAULT_MAX_POINTS
) -> TranslationBall:
    n1 = source.rank + 1
    k = source.level
    base = source.finite
    base_norm = inner(base, base)
    b = _box_radius(source, K)
    volume = (2 * b + 1) ** (n1 - 1)
    if volume > max_points:
        raise ResourceLimitExceeded(
            f"translation box of {volume} points exceeds the limit {max_points}"
        )
    vectors, depths = [], []
    for head in itertools.product(range(-b, b + 1), repeat=n1 - 1):
        last = -sum(head)
        if abs(last) > b:
            continue
        beta = head + (last,)
        v = tuple(c + k * x for c, x in zip(base.coords, beta))
        norm = Fraction(sum(x * x for x in v)) - Fraction(sum(v) ** 2, n1)
        depth = (norm - base_norm) / (2 * k)
        if depth > K:
            continue
        if depth.denominator != 1 or depth < 0:
            raise AssertionError(f"non-integral depth {depth} for beta={beta}")
        vectors.append(beta)
        depths.append(int(depth))
    return TranslationBall(source, K, tuple(vectors), tuple(depths))


def orbit_bruteforce(
    source: AffineDominant,
    K: int,
    ctx: AlgebraContext | None = None,
    max_points: int = DEFAULT_MAX_POINTS,
) -> dict[int, list[tuple[FiniteWeight, int]]]:
    """Dominant representatives of the orbit slice at depths 0..K with signs.

    The sign is the parity of the permutation sorting ``Lambda_bar + k*beta``
    (0 when coordinates collide).  It is a genuine determinant only for
    strictly dominant sources; otherwise it is reported but not meaningful.
    """
    ctx = ctx or source.context
    if ctx.rank != source.rank:
        raise ValueError("weight rank does not match the algebra")
    ball = translation_ball(source, K, max_points)
    k = source.level
    base = source.finite.coords
    found: list[dict[FiniteWeight, int]] = [dict() for _ in range(K + 1)]
    for beta, d in zip(ball.vectors, ball.depths):
        v = tuple(c + k * x for c, x in zip(base, beta))
        rep, sign = dominant_representative(v)
        found[d].setdefault(rep, sign)
    return {
        d: sorted(found[d].items(), key=lambda item: item[0].coords, reverse=True)
        for d in range(K + 1)
    }


def string_by_counting(K: int) -> list[int]:
    """Partition numbers p(0..K) by Euler's pentagonal recurrence."""
    if K < 0:
        raise ValueError("K must be non-negative")
    p = [1] + [0] * K
    for n in range(1, K + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > n:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[n - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            j += 1
        p[n] = total
    return p


def diff_report(
    main: Mapping[int, Mapping[FiniteWeight, int]],
    oracle: Mapping[int, Mapping[FiniteWeight, int]],
    label: str = "",
) -> list[str]:
    """Plain-text lines for every (depth, weight, sign) present on one side only."""
    lines = []
    for d in sorted(set(main) | set(oracle)):
        a = {(w, s) for w, s in main.get(d, {}).items()}
        b = {(w, s) for w, s in oracle.get(d, {}).items()}
        for w, s in sorted(a - b, key=lambda t: t[0].coords, reverse=True):
            lines.append(f"{label}only-main   depth={d} {w.display(d)} sign={s:+d}")
        for w, s in sorted(b - a, key=lambda t: t[0].coords, reverse=True):
            lines.append(f"{label}only-oracle depth={d} {w.display(d)} sign={s:+d}")
    return lines
