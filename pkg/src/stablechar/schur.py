"""The type-A ring: Littlewood-Richardson combinatorics on formal sums.

Two independent tableau algorithms live here and are cross-checked by the
test suite:

* ``lr_coefficient`` / ``skew_expand`` enumerate column-strict fillings of a
  fixed skew shape whose reverse reading word (right to left, top to bottom)
  is a lattice word.
* ``schur_multiply`` expands a product by growing the first shape with
  successive horizontal strips, one strip per row of the second shape,
  keeping the prefix condition that makes the combined filling a lattice
  filling.

``dual_jacobi_trudi`` is the ring-generic determinant evaluator used to
rebuild images of arbitrary shapes from images of single columns.  Its
minors are memoized on the surviving column set, and it can truncate every
minor below a degree floor (each minor is homogeneous in the generator
grading, so the floor is well defined).

The module-level memo tables hold immutable values keyed by partition
tuples; entries are only ever inserted, and recomputing one is harmless, so
sharing them across threads is safe under the usual dict guarantees.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .partitions import EMPTY, Partition, canonical_key

__all__ = [
    "BASES",
    "BasisMismatchError",
    "FormalSum",
    "lr_coefficient",
    "skew_expand",
    "schur_multiply",
    "omega",
    "dual_jacobi_trudi",
]

BASES = ("schur", "sp", "o")
_SYMBOL = {"schur": "s", "sp": "sp", "o": "o"}


class BasisMismatchError(ValueError):
    """Raised when an operation mixes formal sums over different bases."""


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class FormalSum:
    """Sparse linear combination of partitions with exact coefficients.

    Coefficients are ints or ``Fraction``; zero coefficients are never
    stored.  Ring multiplication depends on the basis and lives in module
    functions (``schur_multiply`` here, ``bcd_multiply`` in :mod:`bcd`).
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms: dict[Partition, object] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for lam, c in items:
                if c:
                    cur = self.terms.get(lam, 0) + c
                    if cur:
                        self.terms[lam] = _normalize(cur)
                    else:
                        self.terms.pop(lam, None)

    @classmethod
    def zero(cls, basis: str) -> "FormalSum":
        return cls(basis)

    @classmethod
    def unit(cls, basis: str) -> "FormalSum":
        return cls(basis, {EMPTY: 1})

    @classmethod
    def single(cls, basis: str, lam: Partition, coeff=1) -> "FormalSum":
        return cls(basis, {lam: coeff})

    def coefficient(self, lam: Partition):
        return self.terms.get(lam, 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: "FormalSum") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(f"{self.basis} vs {other.basis}")

    def __add__(self, other: "FormalSum") -> "FormalSum":
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            cur = out.get(lam, 0) + c
            if cur:
                out[lam] = _normalize(cur)
            else:
                out.pop(lam, None)
        return FormalSum._raw(self.basis, out)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __neg__(self) -> "FormalSum":
        return FormalSum._raw(self.basis, {lam: -c for lam, c in self.terms.items()})

    def scaled(self, factor) -> "FormalSum":
        if not factor:
            return FormalSum.zero(self.basis)
        return FormalSum._raw(
            self.basis, {lam: _normalize(c * factor) for lam, c in self.terms.items()}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormalSum)
            and self.basis == other.basis
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("FormalSum is mutable in principle; not hashable")

    @classmethod
    def _raw(cls, basis: str, terms: dict) -> "FormalSum":
        out = cls.__new__(cls)
        out.basis = basis
        out.terms = terms
        return out

    def sorted_terms(self, ascending: bool = False) -> list[tuple[Partition, object]]:
        """Terms ordered by size then descending lex; largest size first
        unless ``ascending``."""
        if ascending:
            return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))
        return sorted(
            self.terms.items(), key=lambda kv: (-kv[0].size, tuple(-p for p in kv[0]))
        )

    def map_partitions(self, fn: Callable[[Partition], Partition]) -> "FormalSum":
        out: dict[Partition, object] = {}
        for lam, c in self.terms.items():
            key = fn(lam)
            cur = out.get(key, 0) + c
            if cur:
                out[key] = cur
            else:
                out.pop(key, None)
        return FormalSum._raw(self.basis, out)

    def relabeled(self, basis: str) -> "FormalSum":
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        return FormalSum._raw(basis, dict(self.terms))

    def restricted(self, min_degree: int | None = None, max_degree: int | None = None) -> "FormalSum":
        out = {
            lam: c
            for lam, c in self.terms.items()
            if (min_degree is None or lam.size >= min_degree)
            and (max_degree is None or lam.size <= max_degree)
        }
        return FormalSum._raw(self.basis, out)

    def graded(self) -> dict[int, "FormalSum"]:
        slices: dict[int, dict] = {}
        for lam, c in self.terms.items():
            slices.setdefault(lam.size, {})[lam] = c
        return {d: FormalSum._raw(self.basis, t) for d, t in sorted(slices.items())}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = _SYMBOL[self.basis]
        pieces = []
        for lam, c in self.sorted_terms():
            body = f"{sym}[{','.join(str(p) for p in lam)}]"
            mag = abs(c)
            text = body if mag == 1 else f"{mag}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"FormalSum({self.basis!r}, {self.terms!r})"


# ---------------------------------------------------------------------------
# Lattice fillings of a fixed skew shape.
# ---------------------------------------------------------------------------

_lr_cache: dict[tuple, int] = {}
_skew_cache: dict[tuple, dict[Partition, int]] = {}
_product_cache: dict[tuple, dict[Partition, int]] = {}


def _lattice_fillings(lam: Partition, mu: Partition, content: Partition | None):
    """Backtrack over column-strict lattice fillings of lam/mu.

    Cells are visited in reverse reading order so the lattice condition can
    be enforced as each entry is placed.  With ``content`` fixed the return
    value is the number of fillings; otherwise a dict counting fillings by
    their content.
    """
    lamp = lam.parts
    nrows = len(lamp)
    mup = [mu.part(i) for i in range(nrows)]
    counts = [0] * nrows  # entry values never exceed the row index + 1
    cap = content.parts if content is not None else None
    if cap is not None and len(cap) > nrows:
        return 0
    tally: dict[tuple, int] = {}
    total = 0

    def do_row(r: int, prev_row: tuple) -> None:
        nonlocal total
        if r == nrows:
            if cap is None:
                key = tuple(counts)
                while key and key[-1] == 0:
                    key = key[:-1]
                tally[key] = tally.get(key, 0) + 1
            else:
                total += 1
            return
        width = lamp[r]
        inner = mup[r]
        cur = [0] * (width + 1)

        def do_cell(c: int) -> None:
            nonlocal total
            if c < inner:
                do_row(r + 1, tuple(cur))
                return
            vmin = 1
            if c < len(prev_row) and prev_row[c]:
                vmin = prev_row[c] + 1
            vmax = cur[c + 1] if c + 1 < width else r + 1
            if cap is not None and vmax > len(cap):
                vmax = len(cap)
            for v in range(vmin, vmax + 1):
                idx = v - 1
                if v > 1 and counts[idx - 1] <= counts[idx]:
                    continue
                if cap is not None and counts[idx] >= cap[idx]:
                    continue
                counts[idx] += 1
                cur[c] = v
                do_cell(c - 1)
                counts[idx] -= 1
            cur[c] = 0

        do_cell(width - 1)

    do_row(0, ())
    return total if cap is not None else tally


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient: multiplicity of lam in mu * nu.

    Counts column-strict fillings of lam/mu with content nu whose reverse
    reading word is a lattice word; zero whenever the sizes do not add up
    or mu is not contained in lam.
    """
    if lam.size != mu.size + nu.size or not lam.contains(mu):
        return 0
    key = (lam.parts, mu.parts, nu.parts)
    cached = _lr_cache.get(key)
    if cached is None:
        cached = _lattice_fillings(lam, mu, nu)
        _lr_cache[key] = cached
    return cached


def skew_expand(lam: Partition, mu: Partition) -> FormalSum:
    """Schur expansion of the skew shape lam/mu (zero if mu is not inside)."""
    if not lam.contains(mu):
        return FormalSum.zero("schur")
    key = (lam.parts, mu.parts)
    cached = _skew_cache.get(key)
    if cached is None:
        raw = _lattice_fillings(lam, mu, None)
        cached = {Partition(t): c for t, c in raw.items()}
        _skew_cache[key] = cached
    return FormalSum._raw("schur", dict(cached))


# ---------------------------------------------------------------------------
# Products by iterated horizontal strips.
# ---------------------------------------------------------------------------


def _strip_product(base_parts: tuple, content_parts: tuple) -> dict[tuple, int]:
    """Expand s_base * s_content by adding one horizontal strip per row of
    ``content``, subject to the prefix condition: cells of row t in the
    first r rows never exceed cells of row t-1 in the first r-1 rows."""
    shapes: dict[tuple, int] = {}

    def distribute(t: int, shape: tuple, prev_prefix: tuple | None) -> None:
        if t == len(content_parts):
            shapes[shape] = shapes.get(shape, 0) + 1
            return
        need = content_parts[t]
        base = shape
        nbase = len(base)

        def rows(r: int, remaining: int, adds: tuple, cum: int) -> None:
            if remaining == 0:
                new_shape = tuple(
                    (base[i] if i < nbase else 0) + (adds[i] if i < len(adds) else 0)
                    for i in range(max(nbase, len(adds)))
                )
                while new_shape and new_shape[-1] == 0:
                    new_shape = new_shape[:-1]
                prefix = [0]
                run = 0
                for i in range(len(new_shape) + 1):
                    run += adds[i] if i < len(adds) else 0
                    prefix.append(run)
                distribute(t + 1, new_shape, tuple(prefix))
                return
            if r > nbase:
                return
            if r == 0:
                cap = remaining
            else:
                cap = base[r - 1] - (base[r] if r < nbase else 0)
                if cap > remaining:
                    cap = remaining
            if prev_prefix is not None:
                bound = prev_prefix[r if r < len(prev_prefix) else -1] - cum
                if cap > bound:
                    cap = bound
            for a in range(cap, -1, -1):
                rows(r + 1, remaining - a, adds + (a,), cum + a)

        rows(0, need, (), 0)

    distribute(0, base_parts, None)
    return shapes


def _schur_basis_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    # The strip recursion branches over rows of the content; keep the
    # content short.
    if (len(nu), nu.size) > (len(mu), mu.size):
        mu, nu = nu, mu
    key = (mu.parts, nu.parts)
    cached = _product_cache.get(key)
    if cached is None:
        raw = _strip_product(mu.parts, nu.parts)
        cached = {Partition(t): c for t, c in raw.items()}
        _product_cache[key] = cached
    return cached


def schur_multiply(a: FormalSum, b: FormalSum) -> FormalSum:
    """Bilinear extension of the Littlewood-Richardson product."""
    if a.basis != "schur" or b.basis != "schur":
        raise BasisMismatchError("schur_multiply needs both operands in the schur basis")
    out: dict[Partition, object] = {}
    for mu, cm in a.terms.items():
        for nu, cn in b.terms.items():
            factor = cm * cn
            if mu.is_empty:
                cur = out.get(nu, 0) + factor
                if cur:
                    out[nu] = _normalize(cur)
                else:
                    out.pop(nu, None)
                continue
            if nu.is_empty:
                cur = out.get(mu, 0) + factor
                if cur:
                    out[mu] = _normalize(cur)
                else:
                    out.pop(mu, None)
                continue
            for lam, mult in _schur_basis_product(mu, nu).items():
                cur = out.get(lam, 0) + factor * mult
                if cur:
                    out[lam] = _normalize(cur)
                else:
                    out.pop(lam, None)
    return FormalSum._raw("schur", out)


def omega(a: FormalSum) -> FormalSum:
    """Transpose every indexing partition, keeping coefficients and basis.

    On the schur basis this is the classical degree-preserving involution;
    on sp/o tags it is a plain relabeling utility.
    """
    return a.map_partitions(Partition.transpose)


# ---------------------------------------------------------------------------
# Generic dual Jacobi-Trudi determinant.
# ---------------------------------------------------------------------------


def dual_jacobi_trudi(
    lam: Partition,
    gen: Callable[[int], FormalSum],
    mult: Callable[[FormalSum, FormalSum], FormalSum],
    max_deficit: int | None = None,
) -> FormalSum:
    """Determinant of the matrix with (i, j) entry gen(lam'_i - i + j).

    ``gen(0)`` must be the ring unit and ``gen(n) = 0`` for n < 0 is implied
    (such entries prune the expansion).  ``mult`` supplies the ring product.
    With ``max_deficit`` set, every minor is truncated to terms of degree at
    least (its generator weight) - max_deficit; minors are homogeneous in
    that weight, so this computes the top ``max_deficit`` degrees of the
    full determinant exactly.  In that mode ``mult`` is called with a third
    argument, the degree floor of the product, so it can skip dead terms.
    """
    lam_t = lam.transpose().parts
    r = len(lam_t)
    unit = gen(0)
    basis = unit.basis
    if r == 0:
        return unit
    shift = [lam_t[i] - i for i in range(r)]
    suffix = [0] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = suffix[i + 1] + shift[i]

    gens: dict[int, FormalSum] = {0: unit}

    def gen_at(n: int) -> FormalSum | None:
        if n < 0:
            return None
        g = gens.get(n)
        if g is None:
            g = gen(n)
            gens[n] = g
        return g if g else None

    memo: dict[int, FormalSum] = {}
    full = (1 << r) - 1

    def minor(mask: int) -> FormalSum:
        if mask == 0:
            return unit
        got = memo.get(mask)
        if got is not None:
            return got
        i = r - bin(mask).count("1")
        floor = None
        if max_deficit is not None:
            weight = suffix[i] + sum(j for j in range(r) if mask & (1 << j))
            floor = weight - max_deficit
        acc = FormalSum.zero(basis)
        pos = 0
        for j in range(r):
            bit = 1 << j
            if not mask & bit:
                continue
            g = gen_at(shift[i] + j)
            if g is not None:
                sub = minor(mask ^ bit)
                if sub:
                    term = mult(g, sub) if floor is None else mult(g, sub, floor)
                    acc = acc + (term.scaled(-1) if pos % 2 else term)
            pos += 1
        memo[mask] = acc
        return acc

    return minor(full)


def clear_caches() -> None:
    """Drop all memoized tableau data (mainly for benchmarks and tests)."""
    _lr_cache.clear()
    _skew_cache.clear()
    _product_cache.clear()
