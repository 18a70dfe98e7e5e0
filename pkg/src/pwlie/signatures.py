"""Signatures of dominant weights in the affine orbit of a strictly dominant weight.

The sign of an orbit element is the determinant of the affine Weyl group
element producing it.  Translations have determinant +1, so only the finite
permutation matters, and it can be read off from residues: writing each
canonical coordinate as ``s_i + m*n_i`` with ``0 <= s_i < m``, the residues
``s`` of an orbit element are a permutation of those of the source weight.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotStrictlyDominant
from .pweights import pweights
from .weights import AffineDominant, AlgebraContext, FiniteWeight, dominant_representative

__all__ = [
    "SignatureDecomposition",
    "SignedWeight",
    "decompose",
    "signature_index",
    "signed_pweights",
    "MODULUS_LEVEL",
    "MODULUS_RANK",
]

MODULUS_LEVEL = "level"
MODULUS_RANK = "rank"


@dataclass(frozen=True)
class SignatureDecomposition:
    residues: tuple[int, ...]
    quotients: tuple[int, ...]
    modulus: int


@dataclass(frozen=True)
class SignedWeight:
    weight: FiniteWeight
    sign: int

    def to_json(self) -> dict:
        return {"coords": list(self.weight.coords), "sign": self.sign}


def decompose(w: FiniteWeight, modulus: int) -> SignatureDecomposition:
    """Split the first N canonical coordinates into residues and quotients."""
    if modulus < 2:
        raise ValueError("modulus must be at least 2")
    head = w.coords[:-1]
    return SignatureDecomposition(
        tuple(c % modulus for c in head), tuple(c // modulus for c in head), modulus
    )


def _resolve_modulus(modulus, level: int, rank: int) -> int:
    if modulus is None or modulus == MODULUS_LEVEL:
        return level
    if modulus == MODULUS_RANK:
        return rank + 1
    return int(modulus)


def signature_index(
    w: FiniteWeight,
    level: int,
    ctx: AlgebraContext | None = None,
    modulus: int | str | None = None,
) -> int:
    """Sign of a strictly dominant orbit member, from its residue pattern.

    The sign is the parity of sorting the residues decreasingly, times
    ``(-1)**(N * n_i)`` for every quotient ``n_i``.  Each unit of ``n_i``
    records a wrap of a residue past the modulus, i.e. a cyclic shift of the
    N+1 coordinates, whose parity is ``(-1)**N``.

    ``modulus`` defaults to the level (``"level"``); ``"rank"`` selects N+1.
    The two coincide for the affine Weyl vector.  Only the level modulus is
    correct for other strictly dominant sources.
    """
    if not w.is_strictly_dominant():
        raise NotStrictlyDominant(f"{w.coords} is not strictly dominant")
    rank = w.rank
    if ctx is not None and ctx.rank != rank:
        raise ValueError("weight rank does not match the algebra")
    dec = decompose(w, _resolve_modulus(modulus, level, rank))
    if len(set(dec.residues)) < len(dec.residues):
        return 0
    _, parity = dominant_representative(dec.residues + (min(dec.residues) - 1,))
    if rank % 2 and sum(dec.quotients) % 2:
        parity = -parity
    return parity


def signed_pweights(
    source: AffineDominant,
    K: int,
    ctx: AlgebraContext | None = None,
    cache=None,
    modulus: int | str | None = None,
) -> dict[int, list[SignedWeight]]:
    """Permutation weights of a strictly dominant source paired with their signs.

    Members whose signature vanishes are dropped.
    """
    if not source.is_strictly_dominant():
        raise NotStrictlyDominant(f"{source} has a vanishing label")
    ctx = ctx or source.context
    pws = pweights(source, K, ctx, cache)
    out: dict[int, list[SignedWeight]] = {}
    for d in range(K + 1):
        row = []
        for w in pws[d]:
            sign = signature_index(w, source.level, ctx, modulus)
            if sign:
                row.append(SignedWeight(w, sign))
        out[d] = row
    return out
