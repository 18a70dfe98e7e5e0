"""Exact Laurent polynomials, truncated q-series and specialized Schur polynomials.

Every character is evaluated under a specialization ``u_I = kappa**t_I`` with
``sum(t) == 0``, so the only polynomial ring needed is Q[kappa, 1/kappa].
Power sums ``K_q = sum_I u_I**q`` define ``x_q = K_q / q``; the complete
homogeneous polynomials are the classical Schur polynomials ``S_q`` in the
``x`` variables, and ``S_q`` for ``q > N`` follows from the constraint
``prod_I u_I = 1``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence, TypeVar

from .weights import AlgebraContext, FiniteWeight

__all__ = [
    "LaurentPoly",
    "QSeries",
    "Specialization",
    "SchurContext",
    "orbit_sum",
    "power_sum_value",
    "vandermonde",
    "newton_schur",
    "degenerated_schur_values",
    "jacobi_trudi",
]

T = TypeVar("T")


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class LaurentPoly:
    """Immutable Laurent polynomial in one variable with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def degree(self) -> int:
        """Highest exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, value):
        """Evaluate at a non-zero rational (or any field element)."""
        total = 0
        for e, c in self._terms.items():
            total += c * value**e
        return total

    def invert_variable(self) -> "LaurentPoly":
        """kappa -> 1/kappa."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def is_palindromic(self) -> bool:
        return self == self.invert_variable()

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def to_json(self) -> dict[str, str]:
        return {str(e): _fraction_str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): Fraction(c) for e, c in data.items()})

    def __repr__(self):
        return f"LaurentPoly({self.to_json()!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = _fraction_str(a)
            else:
                var = "k" if e == 1 else f"k^{e}"
                body = var if a == 1 else f"{_fraction_str(a)}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _fraction_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


class QSeries:
    """Power series in q truncated after q**order, coefficients in Q[kappa, 1/kappa]."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[LaurentPoly], order: int | None = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        padded = list(coeffs[: order + 1])
        padded += [ZERO] * (order + 1 - len(padded))
        self.order = order
        self.coeffs = tuple(padded)

    def __getitem__(self, j: int) -> LaurentPoly:
        return self.coeffs[j]

    def _check(self, other: "QSeries"):
        if not isinstance(other, QSeries):
            raise TypeError("expected a QSeries")
        return min(self.order, other.order)

    def __add__(self, other):
        k = self._check(other)
        return QSeries([self.coeffs[j] + other.coeffs[j] for j in range(k + 1)], k)

    def __sub__(self, other):
        k = self._check(other)
        return QSeries([self.coeffs[j] - other.coeffs[j] for j in range(k + 1)], k)

    def __mul__(self, other):
        k = self._check(other)
        out = []
        for j in range(k + 1):
            acc = ZERO
            for i in range(j + 1):
                a = self.coeffs[i]
                b = other.coeffs[j - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return QSeries(out, k)

    def __truediv__(self, other):
        """Truncated quotient; the divisor's q**0 term must be a non-zero constant."""
        k = self._check(other)
        lead = other.coeffs[0]
        if lead.exponents() != [0]:
            raise ZeroDivisionError(
                "series division needs a non-zero constant leading coefficient"
            )
        inv = 1 / lead.coeff(0)
        out = []
        for j in range(k + 1):
            acc = self.coeffs[j]
            for i in range(1, j + 1):
                b = other.coeffs[i]
                if b:
                    acc = acc - b * out[j - i]
            out.append(acc * inv)
        return QSeries(out, k)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"QSeries(order={self.order}, coeffs={list(self.coeffs)!r})"


@dataclass(frozen=True)
class Specialization:
    """Exponents ``t`` of ``u_I = kappa**t_I``; must sum to zero."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(t) for t in self.exponents)
        if len(exps) < 2:
            raise ValueError("a specialization needs at least two exponents")
        if sum(exps) != 0:
            raise ValueError(f"specialization exponents must sum to 0, got {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def default(cls, rank: int) -> "Specialization":
        """u_1 = kappa, u_2 = 1/kappa, all other u_I = 1."""
        return cls((1, -1) + (0,) * (rank - 1))

    @property
    def rank(self) -> int:
        return len(self.exponents) - 1

    def is_regular(self) -> bool:
        return len(set(self.exponents)) == len(self.exponents)


def orbit_sum(w: FiniteWeight, spec: Specialization) -> LaurentPoly:
    """Character of the finite Weyl orbit of ``w`` under ``spec``.

    Only positions with a non-zero exponent influence the power of kappa, so
    values are placed there explicitly and the remaining coordinates are
    counted with a multinomial coefficient.
    """
    coords = w.coords
    t = spec.exponents
    if len(coords) != len(t):
        raise ValueError("weight and specialization ranks differ")
    active = [e for e in t if e]
    counts = Counter(coords)
    out: dict[int, int] = {}

    def place(i: int, exp: int):
        if i == len(active):
            rest = sum(counts.values())
            ways = math.factorial(rest)
            for m in counts.values():
                ways //= math.factorial(m)
            out[exp] = out.get(exp, 0) + ways
            return
        for value in list(counts):
            if counts[value] == 0:
                continue
            counts[value] -= 1
            place(i + 1, exp + active[i] * value)
            counts[value] += 1

    place(0, 0)
    return LaurentPoly(out)


def power_sum_value(q: int, spec: Specialization) -> LaurentPoly:
    """K_q = sum_I u_I**q under the specialization."""
    if q < 1:
        raise ValueError("power sums are indexed from 1")
    out: dict[int, int] = {}
    for t in spec.exponents:
        out[q * t] = out.get(q * t, 0) + 1
    return LaurentPoly(out)


def vandermonde(spec: Specialization) -> LaurentPoly:
    """prod_{i<j} (u_i - u_j); identically zero when two exponents agree."""
    result = ONE
    t = spec.exponents
    for i, j in itertools.combinations(range(len(t)), 2):
        result = result * (LaurentPoly.monomial(t[i]) - LaurentPoly.monomial(t[j]))
    return result


def newton_schur(x: Sequence[T], q: int, one: T, negate: bool = False) -> list[T]:
    """Classical Schur polynomials S_0..S_q from power-sum variables.

    Uses ``q S_q = sum_{r=1}^q r x_r S_{q-r}``; ``x[r-1]`` is x_r.  With
    ``negate`` the variables are replaced by ``-x_r`` (the starred family).
    Works over any ring whose elements accept rational scalars.
    """
    if q > len(x):
        raise ValueError(f"need x_1..x_{q}, got {len(x)} variables")
    s = [one]
    for n in range(1, q + 1):
        acc = None
        for r in range(1, n + 1):
            term = x[r - 1] * s[n - r] * r
            if negate:
                term = -term
            acc = term if acc is None else acc + term
        s.append(acc * Fraction(1, n))
    return s


def degenerated_schur_values(
    classical: Sequence[T], starred: Sequence[T], rank: int, q_max: int
) -> list[T]:
    """Extend S_0..S_N to S_0..S_{q_max} under prod(u) = 1.

    ``classical`` and ``starred`` hold S_0..S_N and S*_0..S*_N.  The
    recurrence is ``S_q = (-1)**N S_{q-N-1} - sum_{r=1}^{N} S*_r S_{q-r}``,
    i.e. the vanishing of ``sum_r (-1)**r e_r h_{q-r}`` with e_{N+1} = 1.
    """
    s = list(classical[: rank + 1])
    sign = -1 if rank % 2 else 1
    for q in range(rank + 1, q_max + 1):
        acc = s[q - rank - 1] * sign
        for r in range(1, rank + 1):
            acc = acc - starred[r] * s[q - r]
        s.append(acc)
    return s[: q_max + 1]


def jacobi_trudi(partition: Sequence[int], h: Callable[[int], T], one: T, zero: T) -> T:
    """det[h(q_i - i + j)] with h(n) = 0 for n < 0, by Laplace expansion.

    The expansion along rows is memoised on the set of used columns, which
    costs O(s * 2**s) ring operations for s parts.
    """
    parts = [p for p in partition if p]
    s = len(parts)
    if s == 0:
        return one
    memo: dict[tuple[int, int], T] = {}

    def entry(i: int, j: int) -> T:
        n = parts[i] - i + j
        return h(n) if n >= 0 else zero

    def minor(row: int, used: int) -> T:
        if row == s:
            return one
        key = (row, used)
        if key in memo:
            return memo[key]
        acc = zero
        sign = 1
        for col in range(s):
            if used >> col & 1:
                continue
            e = entry(row, col)
            if e:
                sub = minor(row + 1, used | (1 << col))
                if sub:
                    term = e * sub
                    acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, 0)


@dataclass
class SchurContext:
    """Specialized values of x_q and of the Schur families for A_N.

    Caches grow on demand.  Call :meth:`extend` to a known maximum before
    sharing the context between threads; after that only reads happen.
    """

    ctx: AlgebraContext
    spec: Specialization
    _x: list[LaurentPoly] = field(default_factory=list, repr=False)
    _h: list[LaurentPoly] = field(default_factory=list, repr=False)
    _starred: list[LaurentPoly] = field(default_factory=list, repr=False)
    _multi: dict[tuple[int, ...], LaurentPoly] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.spec.rank != self.ctx.rank:
            raise ValueError("specialization rank does not match the algebra")
        n = self.ctx.rank
        self._x = [power_sum_value(q, self.spec) * Fraction(1, q) for q in range(1, n + 1)]
        self._h = newton_schur(self._x, n, ONE)
        self._starred = newton_schur(self._x, n, ONE, negate=True)

    @property
    def rank(self) -> int:
        return self.ctx.rank

    def x(self, q: int) -> LaurentPoly:
        """x_q = K_q / q, valid for every q >= 1."""
        if q <= len(self._x):
            return self._x[q - 1]
        return power_sum_value(q, self.spec) * Fraction(1, q)

    def extend(self, q_max: int) -> None:
        if q_max >= len(self._h):
            self._h = degenerated_schur_values(self._h, self._starred, self.rank, q_max)

    def classical_schur(self, q: int) -> LaurentPoly:
        if q < 0:
            raise ValueError("Schur index must be non-negative")
        if q > self.rank:
            raise ValueError(
                f"classical S_{q} needs x_{q}; only x_1..x_{self.rank} are independent"
            )
        return self._h[q]

    def starred_schur(self, q: int) -> LaurentPoly:
        if not 0 <= q <= self.rank + 1:
            raise ValueError(f"S*_{q} is only needed for q <= N+1")
        if q == self.rank + 1:
            # (-1)**(N+1) e_{N+1} with e_{N+1} = prod(u) = 1
            return ONE if q % 2 == 0 else -ONE
        return self._starred[q]

    def degenerated_schur(self, q: int) -> LaurentPoly:
        """S_q for any q >= 0; agrees with :meth:`classical_schur` for q <= N."""
        if q < 0:
            raise ValueError("Schur index must be non-negative")
        self.extend(q)
        return self._h[q]

    def schur_multi(self, partition: Sequence[int]) -> LaurentPoly:
        """Specialized character of the A_N irrep with the given partition."""
        parts = tuple(p for p in partition if p)
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"not a partition: {tuple(partition)}")
        if len(parts) > self.rank + 1:
            raise ValueError("partition has more than N+1 parts")
        hit = self._multi.get(parts)
        if hit is not None:
            return hit
        if parts:
            self.extend(parts[0] + len(parts))
        value = jacobi_trudi(parts, self.degenerated_schur, ONE, ZERO)
        self._multi[parts] = value
        return value

    def character(self, w: FiniteWeight) -> LaurentPoly:
        """Irreducible character with highest weight ``w`` (dominant)."""
        return self.schur_multi(w.coords[:-1])
