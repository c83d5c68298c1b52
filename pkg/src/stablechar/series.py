"""Truncated power series, the kappa kernel, duality, and positivity tests.

A :class:`Series` stores exact rational coefficients a_0 = 1, a_1, ...  up
to a truncation order.  Series built from an explicit finite coefficient
list are flagged ``polynomial`` and extend by zeros for free; truncations of
rational functions (the geom/geom2 presets, duals) refuse to report
coefficients past their order rather than silently padding.

The kappa kernel of p is  prod_i p(x_i) / prod_{i<j} (1 - x_i x_j).  Its
numerator expands in the Schur basis with coefficient of s_lam equal to the
determinant det(a_{lam_i - i + j}); the denominator contributes the classical
sum of s_lam over shapes with all column heights even.  ``kappa_expansion``
multiplies the two factors degree by degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .partitions import EMPTY, Partition, partitions_of
from .schur import FormalSum, schur_multiply

__all__ = [
    "Series",
    "TruncationError",
    "KappaExpansion",
    "PositivityVerdict",
    "product_expansion",
    "kappa_expansion",
    "dual",
    "is_kappa_positive",
    "is_product_s_positive",
    "real_negative_roots",
    "QuadraticScanReport",
    "quadratic_scan",
    "quadratic_boundary",
    "root_of_critical_cubic",
    "random_rational",
]


class TruncationError(ValueError):
    """A coefficient past the stored truncation order was requested."""


def _norm_coeff(c):
    c = Fraction(c) if not isinstance(c, (int, Fraction)) else c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Series:
    """p(x) = 1 + a_1 x + ... + a_N x^N with exact rational coefficients."""

    __slots__ = ("coeffs", "polynomial")

    def __init__(self, coeffs: Iterable, polynomial: bool = True):
        coeffs = tuple(_norm_coeff(c) for c in coeffs)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("series must start with constant term 1")
        self.coeffs = coeffs
        self.polynomial = polynomial

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if k < 0:
            return 0
        if k <= self.order:
            return self.coeffs[k]
        if self.polynomial:
            return 0
        raise TruncationError(
            f"coefficient {k} requested but series is truncated at order {self.order}"
        )

    def is_even(self, through: int | None = None) -> bool:
        """True iff every available odd coefficient up to ``through`` is zero."""
        top = self.order if through is None else min(through, self.order)
        return all(self.coeffs[k] == 0 for k in range(1, top + 1, 2))

    def negated_argument(self) -> "Series":
        """p(-x), same truncation."""
        return Series(
            (c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)),
            polynomial=self.polynomial,
        )

    def times(self, other: "Series") -> "Series":
        if self.polynomial and other.polynomial:
            n = self.order + other.order
            poly = True
        else:
            n = min(
                s.order for s in (self, other) if not s.polynomial
            )
            poly = False
        out = [0] * (n + 1)
        for i in range(min(self.order, n) + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(min(other.order, n - i) + 1):
                out[i + j] += a * other.coeffs[j]
        return Series(out, polynomial=poly)

    def reciprocal(self, order: int) -> "Series":
        """1/p up to the given order; needs coefficients through that order."""
        if not self.polynomial and order > self.order:
            raise TruncationError(
                f"reciprocal to order {order} needs coefficients past order {self.order}"
            )
        out = [Fraction(1)] + [Fraction(0)] * order
        for n in range(1, order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                ak = self.coeff(k)
                if ak:
                    acc += ak * out[n - k]
            out[n] = -acc
        return Series(out, polynomial=False)

    def truncated(self, order: int) -> "Series":
        if order <= self.order:
            return Series(self.coeffs[: order + 1], polynomial=self.polynomial)
        if not self.polynomial:
            raise TruncationError(f"cannot extend truncation {self.order} to {order}")
        return Series(self.coeffs + (0,) * (order - self.order), polynomial=True)

    # Named presets.  The rational ones take the truncation order they are
    # wanted at; `one` is the exact polynomial 1.

    @classmethod
    def one(cls) -> "Series":
        return cls((1,), polynomial=True)

    @classmethod
    def geom(cls, order: int) -> "Series":
        return cls((1,) * (order + 1), polynomial=False)

    @classmethod
    def geom2(cls, order: int) -> "Series":
        return cls((1 if k % 2 == 0 else 0 for k in range(order + 1)), polynomial=False)

    @classmethod
    def from_text(cls, text: str) -> "Series":
        try:
            coeffs = [Fraction(piece.strip()) for piece in text.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad series {text!r}: {exc}") from None
        return cls(coeffs, polynomial=True)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series)
            and self.coeffs == other.coeffs
            and self.polynomial == other.polynomial
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.polynomial))

    def __repr__(self) -> str:
        kind = "polynomial" if self.polynomial else "truncated"
        return f"Series({list(self.coeffs)!r}, {kind})"


def random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    """Seeded rational with numerator and denominator bounded by ``bound``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


# ---------------------------------------------------------------------------
# Schur expansions.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KappaExpansion:
    """Degree-graded Schur expansion, exact through total degree ``cutoff``."""

    cutoff: int
    graded: dict[int, FormalSum]

    def slice(self, degree: int) -> FormalSum:
        if degree < 0 or degree > self.cutoff:
            raise ValueError(f"degree {degree} outside cutoff {self.cutoff}")
        return self.graded[degree]

    def coefficient(self, lam: Partition):
        return self.slice(lam.size).coefficient(lam)

    def first_negative(self) -> tuple[Partition, object] | None:
        """First negative coefficient in canonical scan order, if any."""
        for d in range(self.cutoff + 1):
            for lam in partitions_of(d):
                c = self.graded[d].coefficient(lam)
                if c < 0:
                    return (lam, c)
        return None


def _det(rows: list[list]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def product_coefficient(p: Series, lam: Partition):
    """Coefficient of s_lam in prod_i p(x_i): det(a_{lam_i - i + j})."""
    n = len(lam)
    if n == 0:
        return 1
    rows = [
        [p.coeff(lam.parts[i] - i + j) for j in range(n)]
        for i in range(n)
    ]
    return _norm_coeff(_det(rows))


def product_expansion(p: Series, cutoff: int) -> KappaExpansion:
    """Schur expansion of prod_i p(x_i) through total degree ``cutoff``."""
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    graded = {}
    for d in range(cutoff + 1):
        terms = {}
        for lam in partitions_of(d):
            c = product_coefficient(p, lam)
            if c:
                terms[lam] = c
        graded[d] = FormalSum("schur", terms)
    return KappaExpansion(cutoff, graded)


def even_column_slice(degree: int) -> FormalSum:
    """Sum of s_lam over shapes of the given size with all columns even."""
    terms = {}
    if degree % 2 == 0:
        for mu in partitions_of(degree // 2):
            terms[Partition(2 * p for p in mu).transpose()] = 1
    return FormalSum("schur", terms)


def kappa_expansion(p: Series, cutoff: int) -> KappaExpansion:
    """Expansion of the kappa kernel of p through total degree ``cutoff``.

    Computed as the product expansion times the even-column sum, one graded
    slice at a time.
    """
    prod = product_expansion(p, cutoff)
    graded = {}
    for d in range(cutoff + 1):
        acc = FormalSum.zero("schur")
        for d1 in range(d + 1):
            left = prod.graded[d1]
            if left.is_zero:
                continue
            right = even_column_slice(d - d1)
            if right.is_zero:
                continue
            acc = acc + schur_multiply(left, right)
        graded[d] = acc
    return KappaExpansion(cutoff, graded)


@dataclass(frozen=True)
class PositivityVerdict:
    through: int
    violation: tuple[Partition, object] | None

    @property
    def positive(self) -> bool:
        return self.violation is None

    def __str__(self) -> str:
        if self.violation is None:
            return f"positive-through-{self.through}"
        lam, c = self.violation
        return f"violation: s[{','.join(str(x) for x in lam)}] coeff {c}"


def is_kappa_positive(p: Series, cutoff: int) -> PositivityVerdict:
    """Bounded verdict: no claim is made past the cutoff degree."""
    return PositivityVerdict(cutoff, kappa_expansion(p, cutoff).first_negative())


def is_product_s_positive(p: Series, cutoff: int) -> PositivityVerdict:
    return PositivityVerdict(cutoff, product_expansion(p, cutoff).first_negative())


def dual(p: Series, order: int | None = None) -> Series:
    """The involution q = 1 / ((1 - x^2) p(-x)).

    The result carries p's truncation order unless p is an exact polynomial,
    in which case any requested order is available.
    """
    target = p.order if order is None else order
    if not p.polynomial and target > p.order:
        raise TruncationError(
            f"dual to order {target} needs p through order {target}, have {p.order}"
        )
    one_minus_x2 = Series((1, 0, -1), polynomial=True)
    denom = one_minus_x2.times(p.negated_argument())
    return denom.reciprocal(target)


# ---------------------------------------------------------------------------
# Root location for polynomial inputs (exact, via Sturm chains).
# ---------------------------------------------------------------------------


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = a[:]
    lead = b[-1]
    while len(a) >= len(b) and a:
        factor = a[-1] / lead
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] -= factor * bc
        _poly_trim(a)
        if not a:
            break
    return a


def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    chain = [p, _poly_trim([c * k for k, c in enumerate(p)][1:])]
    while chain[-1]:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-c for c in rem])
    return [q for q in chain if q]


def _variations(signs: list[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sign_at_zero(q: list[Fraction]) -> int:
    c = q[0]
    return (c > 0) - (c < 0)


def _sign_at_inf(q: list[Fraction], negative: bool) -> int:
    lead = q[-1]
    s = (lead > 0) - (lead < 0)
    if negative and (len(q) - 1) % 2 == 1:
        s = -s
    return s


def real_negative_roots(p: Series) -> bool:
    """Exact test that every root of a polynomial is real and negative.

    Degree-zero input (the constant 1) has no roots and passes vacuously.
    Rejects truncated non-polynomial series.
    """
    if not p.polynomial:
        raise ValueError("real_negative_roots needs a finite polynomial")
    poly = _poly_trim([Fraction(c) for c in p.coeffs])
    if len(poly) <= 1:
        return True
    deriv = _poly_trim([c * k for k, c in enumerate(poly)][1:])
    # Distinct-root count: Sturm chains count distinct real roots even for
    # non-squarefree input; deg(p) - deg(gcd(p, p')) counts distinct complex
    # roots.
    a, b = poly[:], deriv[:]
    while b:
        a, b = b, _poly_rem(a, b)
    distinct_total = (len(poly) - 1) - (len(a) - 1)
    chain = _sturm_chain(poly)
    at_neg = _variations([_sign_at_inf(q, True) for q in chain])
    at_zero = _variations([_sign_at_zero(q) for q in chain])
    at_pos = _variations([_sign_at_inf(q, False) for q in chain])
    real_all = at_neg - at_pos
    real_negative = at_neg - at_zero
    return real_all == distinct_total and real_negative == distinct_total


# ---------------------------------------------------------------------------
# The generic quadratic scan.
# ---------------------------------------------------------------------------

_CRITICAL_SHAPE = Partition((3, 2, 2, 1, 1))


@dataclass(frozen=True)
class QuadraticScanReport:
    """Exact kappa data for p = 1 + b x + a x^2 through a degree bound.

    ``critical_coefficient`` is None when the degree bound is below 9, i.e.
    when s[3,2,2,1,1] is out of range.
    """

    a: Fraction
    b: Fraction
    degree: int
    critical_coefficient: object  # coefficient of s[3,2,2,1,1]
    hook_coefficients: tuple  # ((t, coeff of s[2^t,1^t]), ...)
    per_degree_minimum: tuple  # ((degree, shape, coeff), ...)
    binding_shape: Partition
    binding_coefficient: object

    @property
    def all_nonnegative(self) -> bool:
        return self.binding_coefficient >= 0


def quadratic_scan(a, b, degree: int = 11) -> QuadraticScanReport:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    a = Fraction(a)
    b = Fraction(b)
    kappa = kappa_expansion(Series((1, b, a)), degree)
    hooks = []
    t = 1
    while 3 * t <= degree:
        shape = Partition([2] * t + [1] * t)
        hooks.append((t, kappa.coefficient(shape)))
        t += 1
    per_degree = []
    best_shape, best_coeff = EMPTY, 1
    for d in range(degree + 1):
        d_shape, d_coeff = None, None
        for lam in partitions_of(d):
            c = kappa.graded[d].coefficient(lam)
            if d_coeff is None or c < d_coeff:
                d_shape, d_coeff = lam, c
        per_degree.append((d, d_shape, d_coeff))
        if d_coeff < best_coeff:
            best_shape, best_coeff = d_shape, d_coeff
    critical = kappa.coefficient(_CRITICAL_SHAPE) if degree >= 9 else None
    return QuadraticScanReport(
        a=a,
        b=b,
        degree=degree,
        critical_coefficient=critical,
        hook_coefficients=tuple(hooks),
        per_degree_minimum=tuple(per_degree),
        binding_shape=best_shape,
        binding_coefficient=best_coeff,
    )


def quadratic_boundary(a) -> tuple[Fraction | None, float]:
    """The curve b = a sqrt(a+2) / (a+1); exact when a+2 is a rational square.

    Returns (exact value or None, float approximation).
    """
    a = Fraction(a)
    if a == -1:
        raise ValueError("a = -1 is a pole of the boundary curve")
    radicand = a + 2
    if radicand < 0:
        raise ValueError("a + 2 must be nonnegative")
    num, den = radicand.numerator, radicand.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    exact = None
    if rn is not None and rd is not None:
        exact = a * Fraction(rn, rd) / (a + 1)
    approx = float(a) * float(radicand) ** 0.5 / float(a + 1)
    return exact, approx


def _isqrt_exact(n: int) -> int | None:
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def _critical_cubic(z: Fraction) -> Fraction:
    return 2 * z**3 + 3 * z**2 + z - 1


def root_of_critical_cubic(tolerance: Fraction = Fraction(1, 10**7)) -> Fraction:
    """Real root of 2z^3 + 3z^2 + z - 1, bracketed by exact sign bisection."""
    lo, hi = Fraction(0), Fraction(1)
    assert _critical_cubic(lo) < 0 < _critical_cubic(hi)
    while hi - lo > tolerance:
        mid = (lo + hi) / 2
        if _critical_cubic(mid) < 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2
