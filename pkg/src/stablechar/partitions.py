"""Integer partitions (Young diagrams) and the order predicates built on them.

Partitions index every basis handled by this package.  They are immutable,
hashable, stored free of trailing zeros, and cheap enough to use as dict keys
throughout.  The canonical ordering used for all deterministic output is
size ascending, then descending lexicographic within a size.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "EMPTY",
    "leq_extended",
    "contains",
    "partitions_of",
    "partitions_through",
    "subpartitions",
    "all_even_columns",
    "all_even_rows",
    "canonical_key",
]


class Partition:
    """A weakly decreasing sequence of positive integers; () is empty."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        self.parts = parts

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def transpose(self) -> "Partition":
        """Conjugate diagram: the i-th part becomes #{j : parts[j] > i}."""
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Row-by-row diagram containment (other fits inside self)."""
        return len(other.parts) <= len(self.parts) and all(
            o <= s for o, s in zip(other.parts, self.parts)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return self.to_text()

    # Text form: comma-separated parts, "-" for the empty partition.
    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        text = text.strip()
        if text == "-" or text == "":
            return EMPTY
        try:
            return cls(int(piece) for piece in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, data) -> "Partition":
        return cls(data)


EMPTY = Partition()


def canonical_key(lam: Partition) -> tuple:
    """Sort key for (size ascending, descending lexicographic) order."""
    return (lam.size, tuple(-p for p in lam.parts))


def leq_extended(mu: Partition, lam: Partition) -> bool:
    """Extended dominance: every partial sum of mu is bounded by lam's.

    Sizes need not match; lam is padded with zeros on the right.
    """
    total_mu = 0
    total_lam = 0
    for k in range(len(mu)):
        total_mu += mu.parts[k]
        total_lam += lam.part(k)
        if total_mu > total_lam:
            return False
    return True


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff mu's diagram fits inside lam's."""
    return lam.contains(mu)


@lru_cache(maxsize=None)
def _partitions_tuples(n: int, cap: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions_tuples(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, descending lexicographic (canonical order)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(t) for t in _partitions_tuples(n, n)]


def partitions_through(max_size: int) -> Iterator[Partition]:
    """All partitions of size 0..max_size in canonical order."""
    for n in range(max_size + 1):
        yield from partitions_of(n)


def subpartitions(lam: Partition) -> list[Partition]:
    """All partitions contained in lam's diagram (lam itself included)."""
    parts = lam.parts
    out: list[Partition] = []

    def rec(i: int, cap: int, acc: list[int]) -> None:
        out.append(Partition(acc))
        if i == len(parts):
            return
        for v in range(1, min(parts[i], cap) + 1):
            rec(i + 1, v, acc + [v])

    rec(0, parts[0] if parts else 0, [])
    return out


def all_even_columns(lam: Partition) -> bool:
    """True iff every column height is even (lam = (2mu)' for some mu)."""
    return all(p % 2 == 0 for p in lam.transpose().parts)


def all_even_rows(lam: Partition) -> bool:
    """True iff every part is even."""
    return all(p % 2 == 0 for p in lam.parts)
