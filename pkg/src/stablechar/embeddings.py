"""Embeddings of the Schur ring into the stable sp/o ring.

A candidate embedding is pinned down by the images of single columns, so it
is stored as a triangular table of constants m[i][j]: the image of the i-th
elementary generator is  sp[1^i] + sum_j m[i][j] sp[1^j].  Two independent
constructions are provided and used as mutual oracles:

* ``image_by_skewing(p, lam)`` skews lam by the kappa kernel of the series
  p.  Only subdiagrams of lam contribute, so the result is exact with no
  cutoff artifacts; each kernel coefficient is a skew-shaped determinant in
  the coefficients of p.
* ``image_from_table(table, lam)`` pushes the table's generator images
  through the dual Jacobi-Trudi determinant with Newell-Littlewood
  multiplication.

``table_from_series`` bridges the two: the table of the embedding built
from p has constants b_{i-j}, where 1 + b_1 x + b_2 x^2 + ... is the dual
series of p.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .bcd import bcd_multiply
from .partitions import (
    EMPTY,
    Partition,
    all_even_columns,
    subpartitions,
)
from .schur import FormalSum, _normalize, dual_jacobi_trudi, skew_expand
from .series import Series, TruncationError, _det, dual, random_rational

__all__ = [
    "CutoffError",
    "EmbeddingTable",
    "Decomposition",
    "table_from_series",
    "kappa_coefficient",
    "image_by_skewing",
    "image_from_table",
    "LinearIdentityReport",
    "verify_linear_identity",
    "ConstantIdentityReport",
    "verify_constant_identity",
    "ParityReport",
    "parity_coefficient",
    "random_table",
]


class CutoffError(ValueError):
    """A table entry beyond the stored cutoff was required."""


class EmbeddingTable:
    """Triangular constants m[i][j] for 0 <= j <= i <= cutoff, m[i][i] = 1.

    Entries above the diagonal are implicitly zero; missing entries default
    to the identity table (delta_{ij}).
    """

    __slots__ = ("cutoff", "_m")

    def __init__(self, cutoff: int, entries=None):
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.cutoff = cutoff
        self._m: dict[tuple[int, int], object] = {}
        for (i, j), value in (entries or {}).items():
            if not (0 <= j <= i <= cutoff):
                raise ValueError(f"entry ({i},{j}) outside table bounds")
            value = _normalize(Fraction(value))
            if i == j:
                if value != 1:
                    raise ValueError("diagonal entries must equal 1")
                continue
            if value:
                self._m[(i, j)] = value

    def entry(self, i: int, j: int):
        if i > self.cutoff:
            raise CutoffError(f"entry ({i},{j}) beyond cutoff {self.cutoff}")
        if j > i:
            return 0
        if i == j:
            return 1
        return self._m.get((i, j), 0)

    def generator_image(self, k: int) -> FormalSum:
        """Image of the k-th elementary generator as an sp-basis sum."""
        terms = {Partition([1] * j): self.entry(k, j) for j in range(k + 1)}
        return FormalSum("sp", terms)

    def constant_below(self, d: int) -> bool:
        """True iff m[i][j] depends only on i - j whenever i - j < d."""
        for diff in range(1, d):
            values = {self.entry(i, i - diff) for i in range(diff, self.cutoff + 1)}
            if len(values) > 1:
                return False
        return True

    @classmethod
    def identity(cls, cutoff: int) -> "EmbeddingTable":
        return cls(cutoff)

    def to_json(self) -> dict:
        entries = [
            [i, j, str(v)] for (i, j), v in sorted(self._m.items())
        ]
        return {"schema": 1, "cutoff": self.cutoff, "m": entries}

    @classmethod
    def from_json(cls, data: dict) -> "EmbeddingTable":
        entries = {(i, j): Fraction(v) for i, j, v in data.get("m", [])}
        return cls(data["cutoff"], entries)

    @classmethod
    def load(cls, path) -> "EmbeddingTable":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_json(json.load(handle))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EmbeddingTable)
            and self.cutoff == other.cutoff
            and self._m == other._m
        )

    def __repr__(self) -> str:
        return f"EmbeddingTable(cutoff={self.cutoff}, {len(self._m)} off-diagonal entries)"


def table_from_series(p: Series, cutoff: int) -> EmbeddingTable:
    """Constants of the embedding built from p: m[i][j] = b_{i-j} with b the
    dual series of p."""
    q = dual(p, order=cutoff)
    entries = {}
    for i in range(cutoff + 1):
        for j in range(i + 1):
            entries[(i, j)] = q.coeffs[i - j]
    return EmbeddingTable(cutoff, entries)


def random_table(cutoff: int, d: int, rng: random.Random, bound: int = 100) -> EmbeddingTable:
    """Seeded table that is constant on diagonals below d and random on and
    above diagonal d (the shape needed by the verification identities)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    below = {diff: random_rational(rng, bound) for diff in range(1, d)}
    entries = {}
    for i in range(cutoff + 1):
        for j in range(i):
            diff = i - j
            entries[(i, j)] = below[diff] if diff < d else random_rational(rng, bound)
    return EmbeddingTable(cutoff, entries)


@dataclass(frozen=True)
class Decomposition:
    """Image of one Schur basis element: source shape, basis tag, and the
    exact multiplicity of every shape appearing."""

    source: Partition
    basis: str
    terms: dict

    def __post_init__(self):
        if self.terms.get(self.source, 0) != 1:
            raise ValueError("leading coefficient of a decomposition must be 1")

    def coefficient(self, mu: Partition):
        return self.terms.get(mu, 0)

    def as_sum(self) -> FormalSum:
        return FormalSum(self.basis, dict(self.terms))

    def sorted_terms(self, ascending: bool = False):
        return self.as_sum().sorted_terms(ascending=ascending)

    def __str__(self) -> str:
        return str(self.as_sum())

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "lambda": self.source.to_json(),
            "basis": self.basis,
            "terms": [
                {"mu": mu.to_json(), "coeff": str(c)}
                for mu, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        terms = {
            Partition.from_json(t["mu"]): _normalize(Fraction(t["coeff"]))
            for t in data["terms"]
        }
        return cls(Partition.from_json(data["lambda"]), data["basis"], terms)


_kappa_coeff_cache: dict[tuple, object] = {}


def kappa_coefficient(p: Series, mu: Partition):
    """Coefficient of s_mu in the kappa kernel of p.

    Splitting the kernel into its two factors gives a sum of skew-shaped
    Jacobi-Trudi determinants det(a_{mu_i - rho_j - i + j}) over the
    even-column subdiagrams rho of mu.
    """
    key = (p, mu.parts)
    cached = _kappa_coeff_cache.get(key)
    if cached is not None:
        return cached
    n = len(mu)
    total = Fraction(0)
    for rho in subpartitions(mu):
        if not all_even_columns(rho):
            continue
        if n == 0:
            total += 1
            continue
        rows = [
            [p.coeff(mu.parts[i] - rho.part(j) - i + j) for j in range(n)]
            for i in range(n)
        ]
        total += _det(rows)
    total = _normalize(total)
    _kappa_coeff_cache[key] = total
    return total


def image_by_skewing(p: Series, lam: Partition) -> Decomposition:
    """Image of s_lam under the embedding built from p, by skewing.

    Exact for any lam with p known through order |lam|: only subdiagrams of
    lam meet the kernel, so no truncation of the kernel is involved.
    """
    if not p.polynomial and p.order < lam.size:
        raise TruncationError(
            f"series truncated at order {p.order} cannot embed a shape of size {lam.size}"
        )
    terms: dict[Partition, object] = {}
    for mu in subpartitions(lam):
        c = kappa_coefficient(p, mu)
        if not c:
            continue
        for nu, mult in skew_expand(lam, mu).terms.items():
            cur = terms.get(nu, 0) + c * mult
            if cur:
                terms[nu] = _normalize(cur)
            else:
                terms.pop(nu, None)
    return Decomposition(lam, "sp", terms)


def image_from_table(
    table: EmbeddingTable, lam: Partition, max_deficit: int | None = None
) -> Decomposition:
    """Image of s_lam rebuilt from generator images via dual Jacobi-Trudi.

    Needs table entries up to lam'_1 + (number of columns of lam) - 1, the
    largest generator index in the determinant.  ``max_deficit`` keeps only
    the top degrees (see :func:`stablechar.schur.dual_jacobi_trudi`).
    """
    lam_t = lam.transpose()
    need = (lam_t.part(0) + len(lam_t) - 1) if len(lam_t) else 0
    if need > table.cutoff:
        raise CutoffError(
            f"shape {lam} needs table entries through {need}, cutoff is {table.cutoff}"
        )
    result = dual_jacobi_trudi(
        lam, table.generator_image, bcd_multiply, max_deficit=max_deficit
    )
    return Decomposition(lam, "sp", result.terms)


# ---------------------------------------------------------------------------
# Verification of the coefficient identities satisfied by any embedding
# whose table is constant on low diagonals.
# ---------------------------------------------------------------------------


def _require_hypothesis(table: EmbeddingTable, d: int, k: int) -> None:
    if d < 1:
        raise ValueError("d must be at least 1")
    if k < d + 2:
        raise ValueError(f"identities need k >= d + 2, got k={k}, d={d}")
    if not table.constant_below(d):
        raise ValueError(f"table must be constant on diagonals below {d}")


@dataclass(frozen=True)
class LinearIdentityReport:
    d: int
    k: int
    row_coefficient: object  # m for the single row (k) at column shape (1^{k-d})
    second_difference: object  # signed second difference of diagonal-d entries
    rectangle_coefficient: object  # m for (k-1,k-1) at (k-2,1^{k-d})
    equal: bool


def verify_linear_identity(table: EmbeddingTable, d: int, k: int) -> LinearIdentityReport:
    """Check the two closed forms tying single-row image coefficients to the
    diagonal-d table entries (the source of the linearity constraint)."""
    _require_hypothesis(table, d, k)
    if table.cutoff < k:
        raise CutoffError(f"need cutoff >= {k}, have {table.cutoff}")
    row = image_from_table(table, Partition([k]), max_deficit=d)
    lhs1 = row.coefficient(Partition([1] * (k - d)))
    sign = 1 if (k - 1) % 2 == 0 else -1
    rhs1 = sign * (
        table.entry(k, k - d)
        - 2 * table.entry(k - 1, k - 1 - d)
        + table.entry(k - 2, k - 2 - d)
    )
    f_k = row.as_sum()
    f_k1 = image_from_table(table, Partition([k - 1]), max_deficit=d).as_sum()
    f_k2 = image_from_table(table, Partition([k - 2]), max_deficit=d).as_sum()
    floor = 2 * k - 2 - d
    two_row = bcd_multiply(f_k1, f_k1, min_degree=floor) - bcd_multiply(
        f_k, f_k2, min_degree=floor
    )
    lhs2 = two_row.coefficient(Partition([k - 2] + [1] * (k - d)))
    return LinearIdentityReport(
        d=d,
        k=k,
        row_coefficient=lhs1,
        second_difference=_normalize(Fraction(rhs1)),
        rectangle_coefficient=lhs2,
        equal=(lhs1 == rhs1) and (lhs2 == -lhs1),
    )


@dataclass(frozen=True)
class ConstantIdentityReport:
    d: int
    k: int
    rectangle_coefficient: object  # m for (k^d) at ((k-1)^d)
    table_combination: object  # k*m[d][0] - (k-1)*m[d+1][1]
    equal: bool


def verify_constant_identity(table: EmbeddingTable, d: int, k: int) -> ConstantIdentityReport:
    """Check the rectangle coefficient against its two-entry closed form
    (the source of the constancy constraint on diagonal d)."""
    _require_hypothesis(table, d, k)
    if table.cutoff < k + d:
        raise CutoffError(f"need cutoff >= {k + d}, have {table.cutoff}")
    lhs = image_from_table(table, Partition([k] * d), max_deficit=d).coefficient(
        Partition([k - 1] * d)
    )
    rhs = k * table.entry(d, 0) - (k - 1) * table.entry(d + 1, 1)
    return ConstantIdentityReport(
        d=d,
        k=k,
        rectangle_coefficient=lhs,
        table_combination=_normalize(Fraction(rhs)),
        equal=lhs == rhs,
    )


@dataclass(frozen=True)
class ParityReport:
    k: int
    computed: object
    expected: object
    equal: bool


def parity_coefficient(p: Series, k: int) -> ParityReport:
    """For even p, the empty-shape coefficient in the image of (2k+1, 1)
    equals a_{2k} - a_{2k+2}."""
    expected = p.coeff(2 * k) - p.coeff(2 * k + 2)  # also validates the order
    if not p.is_even(through=2 * k + 2):
        raise ValueError("parity_coefficient needs an even series")
    lam = Partition([2 * k + 1, 1])
    computed = image_by_skewing(p, lam).coefficient(EMPTY)
    return ParityReport(
        k=k, computed=computed, expected=_normalize(Fraction(expected)), equal=computed == expected
    )


def clear_caches() -> None:
    _kappa_coeff_cache.clear()
