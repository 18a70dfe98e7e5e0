"""String functions of A_N^(1) modules from the Weyl-Kac character formula.

Both sides of the character formula are expanded in q = e^{-delta} after the
specialization ``u_I = kappa**t_I``:

* the orbit side sums, for each maximal class j and relative depth m, the
  orbit characters of the permutation weights of that class, weighted by the
  unknown string coefficients c_j;
* the alternant side is the quotient of two signed sums of Schur polynomials,
  one for rho + Lambda and one for rho.

Matching the coefficients of every power of kappa at each order of q gives a
small exact linear system for the new coefficients c_j(J).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    HorizonExceeded,
    InconsistentSystem,
    NegativeCoefficient,
    NonIntegralCoefficient,
    RankDeficientSystem,
)
from .polyalg import ZERO, LaurentPoly, QSeries, SchurContext, Specialization, orbit_sum
from .pweights import MaximalClass, PermutationWeightSet, maximal_classes, pweights
from .signatures import signed_pweights
from .weights import (
    AffineDominant,
    AffineWeight,
    AlgebraContext,
    FiniteWeight,
    affine_weyl_vector,
    class_of,
    dominant_representative,
    weyl_vector,
)

__all__ = [
    "StringFunctionTable",
    "OrbitSumCache",
    "lhs_coefficient_matrix",
    "rhs_series",
    "solve_strings",
    "residuals",
    "multiplicity",
    "format_series",
]


@dataclass
class OrbitSumCache:
    """P[j][m]: summed orbit characters of the class-j permutation weights at depth m."""

    classes: list[MaximalClass]
    horizon: int
    orbits: list[PermutationWeightSet]
    sums: list[list[LaurentPoly]]

    @classmethod
    def build(cls, source: AffineDominant, K: int, ctx: AlgebraContext, spec: Specialization, cache=None):
        classes = [c for c in maximal_classes(source, ctx) if c.offset <= K]
        orbits, sums = [], []
        for mc in classes:
            pws = pweights(mc.affine(source.level), K - mc.offset, ctx, cache)
            orbits.append(pws)
            row = []
            for m in range(pws.horizon + 1):
                acc = ZERO
                for w in pws[m]:
                    acc = acc + orbit_sum(w, spec)
                row.append(acc)
            sums.append(row)
        return cls(classes, K, orbits, sums)

    def get(self, j: int, m: int) -> LaurentPoly:
        row = self.sums[j]
        return row[m] if m < len(row) else ZERO


def lhs_coefficient_matrix(
    source: AffineDominant,
    K: int,
    ctx: AlgebraContext | None = None,
    spec: Specialization | None = None,
    cache=None,
    orbit_cache: OrbitSumCache | None = None,
) -> list[dict[tuple[int, int], LaurentPoly]]:
    """Orbit-side linear forms: ``LEFT_J = sum P[j][J-M] * c_j(M)``.

    Entry J maps the unknown ``(j, M)`` to its Laurent-polynomial coefficient.
    Unknowns with M below the class offset are omitted (they vanish).
    """
    ctx = ctx or source.context
    spec = spec or Specialization.default(ctx.rank)
    oc = orbit_cache or OrbitSumCache.build(source, K, ctx, spec, cache)
    forms = []
    for J in range(K + 1):
        form = {}
        for j, mc in enumerate(oc.classes):
            for M in range(mc.offset, J + 1):
                p = oc.get(j, J - M)
                if p:
                    form[(j, M)] = p
        forms.append(form)
    return forms


def _signed_schur_series(
    source: AffineDominant, K: int, ctx: AlgebraContext, sc: SchurContext, cache, modulus
) -> QSeries:
    rho = weyl_vector(ctx)
    coeffs = []
    signed = signed_pweights(source, K, ctx, cache, modulus)
    for d in range(K + 1):
        acc = ZERO
        for sw in signed[d]:
            chi = sc.character(sw.weight - rho)
            acc = acc + chi if sw.sign > 0 else acc - chi
        coeffs.append(acc)
    return QSeries(coeffs, K)


def rhs_series(
    source: AffineDominant,
    K: int,
    ctx: AlgebraContext | None = None,
    spec: Specialization | None = None,
    cache=None,
    modulus=None,
    schur: SchurContext | None = None,
) -> QSeries:
    """Alternant side ``A(rho + Lambda) / A(rho)`` as a truncated q-series.

    Each alternant is a sum of signed orbit alternants of strictly dominant
    finite weights w; dividing by the finite Vandermonde turns each of them
    into the Schur polynomial of ``w - rho``.  The Vandermonde itself is
    never evaluated, as it vanishes under the default specialization.
    """
    ctx = ctx or source.context
    spec = spec or Specialization.default(ctx.rank)
    sc = schur or SchurContext(ctx, spec)
    rho_aff = affine_weyl_vector(ctx)
    num = _signed_schur_series(rho_aff + source, K, ctx, sc, cache, modulus)
    den = _signed_schur_series(rho_aff, K, ctx, sc, cache, modulus)
    return num / den


def _solve_exact(columns: Sequence[LaurentPoly], target: LaurentPoly) -> list[Fraction] | None:
    """Exact solution of sum_i x_i * columns[i] == target, or None if inconsistent.

    Raises RankDeficientSystem when the columns are linearly dependent.
    """
    exps = sorted(set(target.exponents()).union(*(c.exponents() for c in columns)))
    n = len(columns)
    rows = [[c.coeff(e) for c in columns] + [target.coeff(e)] for e in exps]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if len(pivots) < n:
        raise RankDeficientSystem(
            f"specialized orbit characters of {n} classes have rank {len(pivots)}"
        )
    if any(row[n] for row in rows[r:]):
        return None
    return [rows[i][n] for i in range(n)]


@dataclass
class StringFunctionTable:
    """Solved string coefficients c_j(M) for M = M0(j)..horizon."""

    ctx: AlgebraContext
    source: AffineDominant
    horizon: int
    classes: list[MaximalClass]
    coeffs: list[list[int]]
    spec: Specialization
    orbits: list[PermutationWeightSet] = field(default_factory=list, repr=False)
    right: QSeries | None = field(default=None, repr=False)
    forms: list[dict] = field(default_factory=list, repr=False)

    def coefficient(self, j: int, M: int) -> int:
        mc = self.classes[j]
        if M > self.horizon:
            raise HorizonExceeded(f"depth {M} beyond solved horizon {self.horizon}")
        if M < mc.offset:
            return 0
        return self.coeffs[j][M - mc.offset]

    def class_index(self, finite: FiniteWeight) -> int | None:
        for j, mc in enumerate(self.classes):
            if mc.finite == finite:
                return j
        return None

    def series(self, j: int) -> list[int]:
        return list(self.coeffs[j])

    def to_json(self) -> dict:
        return {
            "rank": self.ctx.rank,
            "labels": list(self.source.labels),
            "horizon": self.horizon,
            "specialization": list(self.spec.exponents),
            "classes": [
                {"labels": list(mc.finite.labels), "M0": mc.offset, "coeffs": list(cs)}
                for mc, cs in zip(self.classes, self.coeffs)
            ],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["labels", "M0", "M", "coefficient"])
        for mc, cs in zip(self.classes, self.coeffs):
            lab = " ".join(str(a) for a in mc.finite.labels)
            for i, c in enumerate(cs):
                writer.writerow([lab, mc.offset, mc.offset + i, c])
        return buf.getvalue()

    def to_text(self) -> str:
        head = f"A_{self.ctx.rank}^(1)  {self.source}  level {self.source.level}  K={self.horizon}"
        names = [mc.finite.display(mc.offset) for mc in self.classes]
        width = max([len(n) for n in names] + [5])
        lines = [head, f"{'class'.ljust(width)}  M0  coefficients c(M0), c(M0+1), ..."]
        for name, mc, cs in zip(names, self.classes, self.coeffs):
            lines.append(f"{name.ljust(width)}  {mc.offset:>2}  " + " ".join(str(c) for c in cs))
        return "\n".join(lines)

    def to_series_text(self) -> str:
        return "\n".join(
            f"{mc.finite.display(mc.offset)}: {format_series(cs, mc.offset)}"
            for mc, cs in zip(self.classes, self.coeffs)
        )


def format_series(coeffs: Sequence[int], offset: int = 0) -> str:
    """``q^2 (5 + 50 q + 315 q^2 + ...)`` style rendering."""
    terms = []
    for i, c in enumerate(coeffs):
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c} q")
        else:
            terms.append(f"{c} q^{i}")
    body = " + ".join(terms) + " + ..."
    if offset == 0:
        return body
    prefix = "q" if offset == 1 else f"q^{offset}"
    return f"{prefix} ({body})"


def solve_strings(
    source: AffineDominant,
    K: int,
    ctx: AlgebraContext | None = None,
    spec: Specialization | None = None,
    cache=None,
    modulus=None,
) -> StringFunctionTable:
    """Solve the specialized character identity order by order up to q**K."""
    ctx = ctx or source.context
    if source.rank != ctx.rank:
        raise ValueError("weight rank does not match the algebra")
    spec = spec or Specialization.default(ctx.rank)
    oc = OrbitSumCache.build(source, K, ctx, spec, cache)
    forms = lhs_coefficient_matrix(source, K, ctx, spec, orbit_cache=oc)
    right = rhs_series(source, K, ctx, spec, cache, modulus)
    classes = oc.classes
    coeffs: list[list[int]] = [[] for _ in classes]

    for J in range(K + 1):
        target = right[J]
        for (j, M), p in forms[J].items():
            if M < J:
                target = target - p * coeffs[j][M - classes[j].offset]
        active = [j for j, mc in enumerate(classes) if mc.offset <= J]
        columns = [oc.get(j, 0) for j in active]
        if not active:
            if target:
                raise InconsistentSystem(
                    f"order {J}: no unknowns but non-zero residual", J, target
                )
            continue
        solution = _solve_exact(columns, target)
        if solution is None:
            raise InconsistentSystem(
                f"order {J}: kappa-coefficient equations have no common solution",
                J,
                target,
            )
        for j, value in zip(active, solution):
            if value.denominator != 1:
                raise NonIntegralCoefficient(
                    f"order {J}: coefficient of {classes[j].finite.display()} is {value}",
                    J,
                    target,
                )
            if value < 0:
                raise NegativeCoefficient(
                    f"order {J}: coefficient of {classes[j].finite.display()} is {value}",
                    J,
                    target,
                )
            coeffs[j].append(int(value))

    return StringFunctionTable(ctx, source, K, classes, coeffs, spec, oc.orbits, right, forms)


def residuals(table: StringFunctionTable) -> list[LaurentPoly]:
    """LEFT_J - RIGHT_J for every solved order; all zero for a correct table."""
    out = []
    for J in range(table.horizon + 1):
        acc = ZERO
        for (j, M), p in table.forms[J].items():
            acc = acc + p * table.coefficient(j, M)
        out.append(acc - table.right[J])
    return out


def multiplicity(table: StringFunctionTable, weight: AffineWeight) -> int:
    """Multiplicity of a weight given relative to the highest weight of ``table``."""
    if weight.level != table.source.level:
        raise ValueError("weight level differs from the module's level")
    if weight.finite.rank != table.ctx.rank:
        raise ValueError("weight rank does not match the algebra")
    if weight.depth > table.horizon:
        raise HorizonExceeded(
            f"depth {weight.depth} beyond solved horizon {table.horizon}"
        )
    if class_of(weight.finite) != class_of(table.source.finite):
        return 0
    rep, _ = dominant_representative(weight.finite)
    for j, pws in enumerate(table.orbits):
        M0 = table.classes[j].offset
        for m in range(0, min(weight.depth - M0, pws.horizon) + 1):
            if rep in pws[m]:
                return table.coefficient(j, weight.depth - m)
    return 0
