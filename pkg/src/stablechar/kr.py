"""Rectangle decompositions in the stable sp/o rings and weight notation.

The two distinguished embeddings (kernels p = 1 and p = 1/(1-x^2)) give a
candidate decomposition for every shape; on rectangles these match the
classical domino-removal description, which ``rectangle_check`` verifies by
computing both sides independently.  ``quadratic_identity_check`` tests the
square-of-a-rectangle identity in the character ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bcd import bcd_multiply
from .embeddings import Decomposition, image_by_skewing
from .partitions import Partition
from .schur import FormalSum
from .series import Series

__all__ = [
    "FAMILIES",
    "domino_removals",
    "kr_decomposition",
    "RectangleReport",
    "rectangle_check",
    "QuadraticIdentityReport",
    "quadratic_identity_check",
    "fundamental_weights",
    "weight_notation",
    "weights_json",
    "weights_to_partition",
    "format_weight_decomposition",
]

FAMILIES = ("C", "BD")
ORIENTATIONS = ("horizontal", "vertical")


def _single_removals(lam: Partition, orientation: str) -> list[Partition]:
    parts = lam.parts
    out = []
    if orientation == "horizontal":
        for r in range(len(parts)):
            nxt = parts[r + 1] if r + 1 < len(parts) else 0
            if parts[r] - 2 >= nxt:
                out.append(Partition(parts[:r] + (parts[r] - 2,) + parts[r + 1 :]))
    else:
        for r in range(len(parts) - 1):
            below = parts[r + 2] if r + 2 < len(parts) else 0
            if parts[r] == parts[r + 1] and parts[r + 1] - 1 >= below:
                new = parts[:r] + (parts[r] - 1, parts[r + 1] - 1) + parts[r + 2 :]
                out.append(Partition(new))
    return out


def domino_removals(lam: Partition, orientation: str) -> set[Partition]:
    """Closure of lam under removing one domino at a time (lam included)."""
    if orientation not in ORIENTATIONS:
        raise ValueError(f"orientation must be one of {ORIENTATIONS}")
    seen = {lam}
    frontier = [lam]
    while frontier:
        cur = frontier.pop()
        for nxt in _single_removals(cur, orientation):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def kr_decomposition(lam: Partition, family: str) -> Decomposition:
    """Candidate decomposition of the reducible module attached to lam.

    Family C uses the even-row kernel in the sp basis; family BD the
    even-column kernel in the o basis.  Valid in the stable range, i.e. for
    ranks exceeding the number of parts of lam plus two.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if family == "C":
        return image_by_skewing(Series.geom2(lam.size), lam)
    dec = image_by_skewing(Series.one(), lam)
    return Decomposition(dec.source, "o", dec.terms)


@dataclass(frozen=True)
class RectangleReport:
    height: int
    width: int
    family: str
    matches: bool
    decomposition: Decomposition
    expected: frozenset


def rectangle_check(height: int, width: int, family: str) -> RectangleReport:
    """Compare the rectangle decomposition with the domino-removal closure,
    every shape with multiplicity exactly one."""
    if height < 1 or width < 1:
        raise ValueError("rectangle needs positive height and width")
    rect = Partition([width] * height)
    dec = kr_decomposition(rect, family)
    orientation = "horizontal" if family == "C" else "vertical"
    expected = frozenset(domino_removals(rect, orientation))
    matches = set(dec.terms) == set(expected) and all(
        c == 1 for c in dec.terms.values()
    )
    return RectangleReport(height, width, family, matches, dec, expected)


@dataclass(frozen=True)
class QuadraticIdentityReport:
    height: int
    width: int
    family: str
    holds: bool
    lhs: FormalSum
    rhs: FormalSum


def _w_character(height: int, width: int, family: str) -> FormalSum:
    basis = "sp" if family == "C" else "o"
    if height == 0 or width == 0:
        return FormalSum.unit(basis)
    return kr_decomposition(Partition([width] * height), family).as_sum()


def quadratic_identity_check(height: int, width: int, family: str) -> QuadraticIdentityReport:
    """W(m w_l)^2 = W((m+1) w_l) W((m-1) w_l) + W(m w_{l-1}) W(m w_{l+1})
    in the stable character ring, with all four W's built by
    ``kr_decomposition`` (empty rectangles give the trivial character)."""
    if height < 1 or width < 1:
        raise ValueError("rectangle needs positive height and width")
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    w = _w_character
    lhs = bcd_multiply(w(height, width, family), w(height, width, family))
    rhs = bcd_multiply(w(height, width + 1, family), w(height, width - 1, family)) + bcd_multiply(
        w(height - 1, width, family), w(height + 1, width, family)
    )
    return QuadraticIdentityReport(height, width, family, lhs == rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# Fundamental-weight notation.
# ---------------------------------------------------------------------------


def fundamental_weights(lam: Partition) -> list[tuple[int, int]]:
    """Pairs (l, c_l) with c_l = lam_l - lam_{l+1} > 0: the number of columns
    of height l."""
    out = []
    for i in range(len(lam)):
        c = lam.parts[i] - lam.part(i + 1)
        if c:
            out.append((i + 1, c))
    return out


def weight_notation(lam: Partition) -> str:
    """Render lam as a sum of fundamental weights, e.g. ``w1 + 2*w3``."""
    pairs = fundamental_weights(lam)
    if not pairs:
        return "0"
    return " + ".join(f"w{l}" if c == 1 else f"{c}*w{l}" for l, c in pairs)


def weights_json(lam: Partition) -> dict:
    """JSON form of the weight notation: {"fundamental": [[l, c], ...]}."""
    return {"fundamental": [[l, c] for l, c in fundamental_weights(lam)]}


def weights_to_partition(pairs) -> Partition:
    """Inverse of :func:`fundamental_weights`."""
    heights = {}
    for l, c in pairs:
        if l < 1 or c < 0:
            raise ValueError("weights need positive index and nonnegative coefficient")
        heights[l] = heights.get(l, 0) + c
    top = max(heights, default=0)
    parts = []
    for i in range(1, top + 1):
        parts.append(sum(c for l, c in heights.items() if l >= i))
    return Partition(parts)


def format_weight_decomposition(dec: Decomposition) -> str:
    """One-line rendering ``W(...) = V(...) + ...`` in weight notation."""
    pieces = []
    for mu, c in dec.sorted_terms():
        body = f"V({weight_notation(mu)})"
        pieces.append(body if c == 1 else f"{c}*{body}")
    return f"W({weight_notation(dec.source)}) = " + " + ".join(pieces)
