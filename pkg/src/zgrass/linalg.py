"""Exact sparse row reduction over Q and F_p."""
from __future__ import annotations

from typing import Iterable, Mapping

from .fields import Field

Vector = dict  # column index -> nonzero coefficient


class Subspace:
    """A subspace of F^dim kept in reduced row echelon form.

    Rows are sparse dicts; ``_rows[pivot]`` has a 1 at ``pivot`` and zeros in
    every other pivot column.
    """

    def __init__(self, field: Field, dim: int | None = None, vectors: Iterable[Mapping] = ()):
        self.field = field
        self.dim = dim
        self._rows: dict[int, dict] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def basis(self) -> list[dict]:
        return [dict(self._rows[p]) for p in self.pivots()]

    def _clean(self, v: Mapping) -> dict:
        norm = self.field.norm
        out = {}
        for j, c in v.items():
            c = norm(self.field(c) if not isinstance(c, int) else c)
            if c:
                out[j] = c
        return out

    def reduce(self, v: Mapping) -> dict:
        """Residual of ``v`` after eliminating every pivot column."""
        F = self.field
        r = self._clean(v)
        for p in sorted(set(r) & set(self._rows)):
            c = r.get(p)
            if not c:
                continue
            for j, a in self._rows[p].items():
                x = F.norm(r.get(j, 0) - c * a)
                if x:
                    r[j] = x
                else:
                    r.pop(j, None)
        # pivots introduced by elimination are impossible: rows vanish on other pivots
        return r

    def add(self, v: Mapping) -> bool:
        """Insert ``v``; returns True when the dimension grew."""
        F = self.field
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        inv = F.inv(r[p])
        r = {j: F.norm(c * inv) for j, c in r.items()}
        for q, row in self._rows.items():
            c = row.get(p)
            if c:
                for j, a in r.items():
                    x = F.norm(row.get(j, 0) - c * a)
                    if x:
                        row[j] = x
                    else:
                        row.pop(j, None)
        self._rows[p] = r
        return True

    def extend(self, vectors: Iterable[Mapping]) -> int:
        return sum(1 for v in vectors if self.add(v))

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)

    __contains__ = contains

    def issubset(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self._rows.values())

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rank == other.rank and self._rows == other._rows

    def gap(self, other: "Subspace") -> dict | None:
        """Smallest-pivot basis vector of ``self`` outside ``other`` (None if contained)."""
        for p in self.pivots():
            if not other.contains(self._rows[p]):
                return dict(self._rows[p])
        return None

    def copy(self) -> "Subspace":
        s = Subspace(self.field, self.dim)
        s._rows = {p: dict(r) for p, r in self._rows.items()}
        return s


def row_reduce(field: Field, rows: Iterable[Mapping], dim: int | None = None) -> Subspace:
    return Subspace(field, dim, rows)


def kernel(field: Field, rows: Iterable[Mapping], dim: int) -> Subspace:
    """``{v in F^dim : r . v = 0 for every row r}``."""
    R = Subspace(field, dim, rows)
    pivots = set(R.pivots())
    out = Subspace(field, dim)
    for free in range(dim):
        if free in pivots:
            continue
        v = {free: field.one}
        for p, row in R._rows.items():
            c = row.get(free)
            if c:
                v[p] = field.norm(-c)
        out.add(v)
    return out


def rank(field: Field, rows: Iterable[Mapping]) -> int:
    return Subspace(field, None, rows).rank
