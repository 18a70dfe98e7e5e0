"""Weights of A_N and A_N^(1) in the fundamental-weight basis.

A finite weight is stored by its coordinates ``c = (c_1, ..., c_{N+1})`` with
respect to the vectors ``mu_1, ..., mu_{N+1}``.  Those vectors sum to zero, so
coordinates are only defined up to adding a constant to every entry; the
canonical form subtracts the minimum.  The finite Weyl group acts by permuting
coordinates, which makes dominance a sortedness check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

__all__ = [
    "AlgebraContext",
    "FiniteWeight",
    "AffineWeight",
    "AffineDominant",
    "inner",
    "to_dynkin",
    "from_dynkin",
    "dominant_representative",
    "permutation_sign",
    "class_of",
    "weyl_vector",
    "affine_weyl_vector",
    "fundamental",
    "parse_int_list",
    "parse_display",
]


def _canonical(coords: Iterable[int]) -> tuple[int, ...]:
    coords = tuple(int(c) for c in coords)
    m = min(coords)
    return tuple(c - m for c in coords)


@dataclass(frozen=True)
class AlgebraContext:
    """The finite algebra A_N; ``rank`` is N."""

    rank: int

    def __post_init__(self):
        if int(self.rank) != self.rank or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")

    @property
    def dim(self) -> int:
        """Number of fundamental-weight basis vectors, N+1."""
        return self.rank + 1

    def zero(self) -> "FiniteWeight":
        return FiniteWeight((0,) * self.dim)


@dataclass(frozen=True, slots=True)
class FiniteWeight:
    """An A_N weight in canonical (min-normalized) mu-coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError("a weight of A_N needs at least two coordinates")
        object.__setattr__(self, "coords", _canonical(self.coords))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "FiniteWeight":
        return from_dynkin(labels)

    @property
    def rank(self) -> int:
        return len(self.coords) - 1

    @property
    def labels(self) -> tuple[int, ...]:
        return to_dynkin(self)

    def is_dominant(self) -> bool:
        c = self.coords
        return all(c[i] >= c[i + 1] for i in range(len(c) - 1))

    def is_strictly_dominant(self) -> bool:
        c = self.coords
        return all(c[i] > c[i + 1] for i in range(len(c) - 1))

    def norm(self) -> Fraction:
        return inner(self, self)

    def __add__(self, other: "FiniteWeight") -> "FiniteWeight":
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch("weights of different rank")
        return FiniteWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "FiniteWeight") -> "FiniteWeight":
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch("weights of different rank")
        return FiniteWeight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def conjugate(self) -> "FiniteWeight":
        """Image under the diagram automorphism (labels reversed)."""
        return from_dynkin(tuple(reversed(self.labels)))

    def display(self, depth: int | None = None) -> str:
        """Appendix-style text, ``(c_1,...,c_N)_d``; the trailing 0 is dropped.

        Only meaningful for dominant weights, whose last canonical coordinate
        is zero.
        """
        body = "(" + ",".join(str(c) for c in self.coords[:-1]) + ")"
        return body if depth is None else f"{body}_{depth}"

    def __str__(self):
        return self.display()


@dataclass(frozen=True)
class AffineWeight:
    """``k Lambda_0 - depth*delta + finite`` relative to a reference weight."""

    level: int
    depth: int
    finite: FiniteWeight

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be positive")
        if self.depth < 0:
            raise ValueError("depth order must be non-negative")


@dataclass(frozen=True)
class AffineDominant:
    """Dominant weight of A_N^(1) given by its labels ``(a_0, a_1, ..., a_N)``."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(a) for a in self.labels)
        if len(labels) < 2:
            raise ValueError("affine labels need at least two entries")
        if any(a < 0 for a in labels):
            raise ValueError(f"affine labels must be non-negative: {labels}")
        if sum(labels) < 1:
            raise ValueError("affine labels must not all vanish")
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.labels) - 1

    @property
    def context(self) -> AlgebraContext:
        return AlgebraContext(self.rank)

    @property
    def level(self) -> int:
        return sum(self.labels)

    @property
    def finite(self) -> FiniteWeight:
        return from_dynkin(self.labels[1:])

    def is_fundamental(self) -> bool:
        return self.level == 1

    def is_strictly_dominant(self) -> bool:
        return all(a >= 1 for a in self.labels)

    def fundamental_indices(self) -> list[int]:
        """Indices nu of the fundamental weights summing to this one, in order."""
        return [nu for nu, a in enumerate(self.labels) for _ in range(a)]

    def __add__(self, other: "AffineDominant") -> "AffineDominant":
        if other.rank != self.rank:
            raise DimensionMismatch("affine weights of different rank")
        return AffineDominant(tuple(a + b for a, b in zip(self.labels, other.labels)))

    @classmethod
    def from_finite(cls, finite: FiniteWeight, level: int) -> "AffineDominant":
        """Lift a dominant finite weight to the given level."""
        rest = finite.labels
        return cls((level - sum(rest),) + rest)

    def __str__(self):
        terms = [
            (f"{a}*L{nu}" if a > 1 else f"L{nu}")
            for nu, a in enumerate(self.labels)
            if a
        ]
        return "+".join(terms)


def inner(a: FiniteWeight, b: FiniteWeight, ctx: AlgebraContext | None = None) -> Fraction:
    """Scalar product from (mu_I, mu_J) = delta_IJ - 1/(N+1)."""
    ca, cb = a.coords, b.coords
    if len(ca) != len(cb) or (ctx is not None and len(ca) != ctx.dim):
        raise DimensionMismatch(f"cannot pair weights of lengths {len(ca)} and {len(cb)}")
    return Fraction(sum(x * y for x, y in zip(ca, cb))) - Fraction(sum(ca) * sum(cb), len(ca))


def to_dynkin(w: FiniteWeight) -> tuple[int, ...]:
    c = w.coords
    return tuple(c[i] - c[i + 1] for i in range(len(c) - 1))


def from_dynkin(labels: Sequence[int]) -> FiniteWeight:
    coords = [0]
    for a in reversed(labels):
        coords.append(coords[-1] + int(a))
    return FiniteWeight(tuple(reversed(coords)))


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of ``range(len(perm))``."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def dominant_representative(w: FiniteWeight | Sequence[int]) -> tuple[FiniteWeight, int]:
    """Sort coordinates decreasingly; also return the sorting parity.

    The parity is 0 when two coordinates coincide, since then the stabilizer
    contains a transposition and no sign is well defined.
    """
    coords = w.coords if isinstance(w, FiniteWeight) else tuple(w)
    order = sorted(range(len(coords)), key=lambda i: -coords[i])
    rep = FiniteWeight(tuple(coords[i] for i in order))
    if len(set(coords)) < len(coords):
        return rep, 0
    return rep, permutation_sign(order)


def class_of(w: FiniteWeight) -> int:
    """Congruence class modulo the root lattice, in 0..N."""
    return sum(w.coords) % len(w.coords)


def weyl_vector(ctx: AlgebraContext) -> FiniteWeight:
    return FiniteWeight(tuple(range(ctx.rank, -1, -1)))


def affine_weyl_vector(ctx: AlgebraContext) -> AffineDominant:
    return AffineDominant((1,) * ctx.dim)


def fundamental(ctx: AlgebraContext, nu: int) -> AffineDominant:
    """The affine fundamental weight Lambda_nu."""
    if not 0 <= nu <= ctx.rank:
        raise ValueError(f"fundamental index {nu} out of range for A_{ctx.rank}")
    labels = [0] * ctx.dim
    labels[nu] = 1
    return AffineDominant(tuple(labels))


def parse_int_list(text: str) -> tuple[int, ...]:
    """Parse ``"1,0,0"`` (brackets and blanks tolerated)."""
    stripped = text.strip().strip("()[]")
    if not stripped:
        return ()
    return tuple(int(part) for part in stripped.split(","))


_DISPLAY_RE = re.compile(r"^\(\s*([-\d,\s]*)\)\s*_\s*\{?(-?\d+)\}?$")


def parse_display(text: str, rank: int) -> tuple[FiniteWeight, int]:
    """Inverse of :meth:`FiniteWeight.display` with the depth subscript."""
    m = _DISPLAY_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a weight of the form (p1,...,pN)_d: {text!r}")
    body = m.group(1).strip()
    if not body:
        raise ValueError(f"empty weight in {text!r}")
    coords = tuple(int(p) for p in body.split(","))
    if len(coords) != rank:
        raise ValueError(f"expected {rank} entries in {text!r}")
    return FiniteWeight(coords + (0,)), int(m.group(2))
