"""Finite sections of connection (Hankel) matrices and their exact ranks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .graphs import MultiGraph, build_named, combine, to_graph6
from .harary import harary_polynomial
from .polyring import MPoly
from .properties import GraphProperty

__all__ = [
    "HankelSection",
    "family_graphs",
    "hankel_section",
    "rank_exact",
    "ZeroPattern",
    "zero_pattern",
]


@dataclass
class HankelSection:
    op: str
    rows: list[MultiGraph]
    cols: list[MultiGraph]
    entries: list[list[MPoly]]
    name: str = ""

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def rank(self) -> int:
        return rank_exact(self.entries)

    def to_json(self) -> dict:
        return {
            "polynomial": self.name,
            "op": self.op,
            "rows": [to_graph6(G) for G in self.rows],
            "cols": [to_graph6(G) for G in self.cols],
            "entries": [[e.to_json() for e in row] for row in self.entries],
        }

    def evaluated(self, **point: int) -> list[list[Fraction]]:
        """The section with every entry evaluated at ``point`` (e.g. ``x=3``)."""
        return [[e.eval(point) for e in row] for row in self.entries]


def family_graphs(family: str, size: int, start: int = 1) -> list[MultiGraph]:
    """``[F_start, ..., F_size]`` for a one-parameter family tag (K, E, P, M, C)."""
    return [build_named(family, i) for i in range(start, size + 1)]


def hankel_section(
    F: Callable[[MultiGraph], MPoly],
    op: str,
    rows: Sequence[MultiGraph],
    cols: Sequence[MultiGraph] | None = None,
    name: str = "",
) -> HankelSection:
    cols = list(rows if cols is None else cols)
    rows = list(rows)
    cache: dict[MultiGraph, MPoly] = {}
    entries = []
    for G in rows:
        line = []
        for H in cols:
            GH = combine(G, H, op)
            key = GH.simple_view() if GH.simple else GH
            if key not in cache:
                cache[key] = F(GH)
            line.append(cache[key])
        entries.append(line)
    return HankelSection("join" if op in ("join", "⋈") else "union", rows, cols, entries, name)


def rank_exact(matrix: Sequence[Sequence[MPoly]]) -> int:
    """Rank over the rational-function field by fraction-free elimination.

    Bareiss elimination with full pivoting; every update divides exactly by
    the previous pivot, so entries stay integer polynomials.
    """
    M = [[e if isinstance(e, MPoly) else MPoly.const(e) for e in row] for row in matrix]
    if not M or not M[0]:
        return 0
    nr, nc = len(M), len(M[0])
    prev = MPoly.const(1)
    rank = 0
    for k in range(min(nr, nc)):
        pivot = next(
            ((i, j) for i in range(k, nr) for j in range(k, nc) if not M[i][j].is_zero()),
            None,
        )
        if pivot is None:
            break
        i, j = pivot
        M[k], M[i] = M[i], M[k]
        if j != k:
            for row in M:
                row[k], row[j] = row[j], row[k]
        pk = M[k][k]
        for i in range(k + 1, nr):
            for j in range(k + 1, nc):
                M[i][j] = (pk * M[i][j] - M[i][k] * M[k][j]).exact_div(prev)
            M[i][k] = MPoly()
        prev = pk
        rank += 1
    return rank


@dataclass
class ZeroPattern:
    family: str
    property: str
    i_range: tuple[int, int]
    k_range: tuple[int, int]
    zero: dict[tuple[int, int], bool] = field(default_factory=dict)
    thresholds: dict[int, int | None] = field(default_factory=dict)

    @property
    def suffix_pattern(self) -> bool:
        """For every k the zero set in i is ``{i > f(k)}`` on the window."""
        lo, hi = self.i_range
        for k in range(self.k_range[0], self.k_range[1] + 1):
            t = self.thresholds[k]
            for i in range(lo, hi + 1):
                if self.zero[(i, k)] != (t is not None and i >= t):
                    return False
        return True

    def matches(self, rule: Callable[[int, int], bool]) -> bool:
        """Does ``value is zero  <=>  rule(i, k)`` hold on the whole window?"""
        return all(z == bool(rule(i, k)) for (i, k), z in self.zero.items())

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "property": self.property,
            "i_range": list(self.i_range),
            "k_range": list(self.k_range),
            "thresholds": {str(k): t for k, t in self.thresholds.items()},
            "suffix_pattern": self.suffix_pattern,
            "zero": {f"{i},{k}": z for (i, k), z in sorted(self.zero.items())},
        }


def zero_pattern(P: GraphProperty, family: str, i_max: int, k_max: int) -> ZeroPattern:
    """Table of ``chi_P(F_i; k) == 0`` for ``1 <= i <= i_max``, ``1 <= k <= k_max``.

    ``thresholds[k]`` is the least ``i`` with a zero value (None if none in
    the window).
    """
    zp = ZeroPattern(family, P.name, (1, i_max), (1, k_max))
    polys = {i: harary_polynomial(P, build_named(family, i)).poly for i in range(1, i_max + 1)}
    for k in range(1, k_max + 1):
        for i in range(1, i_max + 1):
            zp.zero[(i, k)] = polys[i].eval(x=k) == 0
        zp.thresholds[k] = next((i for i in range(1, i_max + 1) if zp.zero[(i, k)]), None)
    return zp
