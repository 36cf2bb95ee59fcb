"""Exact arithmetic in the rank-N truncation of the Grassmann algebra.

A basis word ``e_{i1} e_{i2} ... e_{is}`` (i1 < ... < is) is encoded as the bitmask
with bits ``i1-1, ..., is-1`` set; the unit is ``0``. Python integers are unbounded,
so the same encoding serves every rank.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping

from . import kernels
from .errors import MismatchError, ParseError
from .fields import QQ, Field

DEFAULT_RANK = 24


def word(*indices: int) -> int:
    """Bitmask of the basis word with the given (1-based, distinct) generator indices."""
    m = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"generator indices are 1-based, got {i}")
        bit = 1 << (i - 1)
        if m & bit:
            raise ValueError(f"repeated generator e{i}")
        m |= bit
    return m


def support(w: int) -> tuple[int, ...]:
    """Ascending generator indices of a word."""
    out = []
    i = 1
    while w:
        if w & 1:
            out.append(i)
        w >>= 1
        i += 1
    return tuple(out)


def length(w: int) -> int:
    return w.bit_count()


def word_key(w: int):
    """Canonical order on words: by length, then lexicographically by support."""
    return (w.bit_count(), support(w))


def word_str(w: int) -> str:
    return "".join(f"e{i}" for i in support(w)) if w else "1"


def mul_words(u: int, v: int) -> tuple[int, int]:
    """Return ``(sign, w)`` with ``u*v = sign * w``; ``(0, 0)`` when supports meet."""
    return kernels.mul_words(u, v)


class Element:
    """An element of the rank-``rank`` Grassmann algebra over ``field``.

    Immutable; ``terms`` maps word bitmasks to nonzero coefficients.
    """

    __slots__ = ("field", "rank", "_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None, field: Field = QQ,
                 rank: int = DEFAULT_RANK, *, _clean: bool = False):
        self.field = field
        self.rank = rank
        if _clean:
            self._terms = dict(terms)
        else:
            limit = 1 << rank
            clean = {}
            for w, c in (terms or {}).items():
                if w < 0 or w >= limit:
                    raise ValueError(f"word {word_str(w)} exceeds rank {rank}")
                c = field(c)
                if c:
                    clean[w] = c
            self._terms = clean
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field: Field = QQ, rank: int = DEFAULT_RANK) -> "Element":
        return cls({}, field, rank, _clean=True)

    @classmethod
    def one(cls, field: Field = QQ, rank: int = DEFAULT_RANK) -> "Element":
        return cls({0: field.one}, field, rank, _clean=True)

    @classmethod
    def gen(cls, i: int, field: Field = QQ, rank: int = DEFAULT_RANK) -> "Element":
        return cls({word(i): 1}, field, rank)

    @classmethod
    def from_word(cls, w: int, coef=1, field: Field = QQ, rank: int = DEFAULT_RANK) -> "Element":
        return cls({w: coef}, field, rank)

    @classmethod
    def from_indices(cls, indices: Iterable[int], coef=1, field: Field = QQ,
                     rank: int = DEFAULT_RANK) -> "Element":
        """The product ``e_{i1} ... e_{is}`` taken in the given order (sign included)."""
        acc = cls.one(field, rank)
        for i in indices:
            acc = acc * cls.gen(i, field, rank)
        return acc * field(coef)

    def _new(self, terms: dict) -> "Element":
        norm = self.field.norm
        clean = {}
        for w, c in terms.items():
            c = norm(c)
            if c:
                clean[w] = c
        return Element(clean, self.field, self.rank, _clean=True)

    # access -------------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def words(self) -> list[int]:
        return sorted(self._terms, key=word_key)

    def coef(self, w: int):
        return self._terms.get(w, self.field.zero)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_even(self) -> bool:
        return all(w.bit_count() % 2 == 0 for w in self._terms)

    def is_odd(self) -> bool:
        return all(w.bit_count() % 2 == 1 for w in self._terms)

    def with_rank(self, rank: int) -> "Element":
        return Element(self._terms, self.field, rank)

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Element") -> None:
        if self.field != other.field:
            raise MismatchError(f"field mismatch: {self.field} vs {other.field}")
        if self.rank != other.rank:
            raise MismatchError(f"rank mismatch: {self.rank} vs {other.rank}")

    def _coerce(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        return Element({0: other}, self.field, self.rank)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = self.field(other)
            return self._new({w: c * v for w, v in self._terms.items()})
        self._check(other)
        return self._new(kernels.mul_dicts(self._terms, other._terms))

    def __rmul__(self, other):
        c = self.field(other)
        return self._new({w: c * v for w, v in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = Element.one(self.field, self.rank)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.field == other.field and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Element({to_text(self)!r})"

    def __str__(self):
        return to_text(self)


def mul(a: Element, b: Element) -> Element:
    return a * b


def commutator(a: Element, b: Element, *rest: Element) -> Element:
    """Left-normed commutator ``[a, b, c, ...] = [[a, b], c, ...]``."""
    out = a * b - b * a
    for c in rest:
        out = out * c - c * out
    return out


# canonical text form --------------------------------------------------------

def _fmt_term(field: Field, c, w: int, first: bool) -> str:
    neg = field.is_negative(c)
    mag = -c if neg else c
    ws = word_str(w)
    if w == 0:
        body = field.fmt(mag)
    elif mag == 1:
        body = ws
    else:
        body = f"{field.fmt(mag)}*{ws}"
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def to_text(x: Element) -> str:
    """Terms ordered by word length then support, e.g. ``3/2*e1e2 - e3``."""
    ws = x.words()
    if not ws:
        return "0"
    return "".join(_fmt_term(x.field, x.coef(w), w, i == 0) for i, w in enumerate(ws))


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?((?:e\d+)+|1)?\s*")


def parse_element(text: str, field: Field = QQ, rank: int = DEFAULT_RANK) -> Element:
    """Inverse of :func:`to_text`; also accepts ``e3e1`` (reordered with sign)."""
    s = text.strip()
    if s == "0":
        return Element.zero(field, rank)
    pos = 0
    acc = Element.zero(field, rank)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError("malformed element", pos, s)
        sign, num, body = m.groups()
        if sign is None and not first:
            raise ParseError("expected '+' or '-'", pos, s)
        if num is None and body is None:
            raise ParseError("empty term", pos, s)
        coef = field(num) if num is not None else field.one
        if sign == "-":
            coef = field.norm(-coef)
        if body is None or body == "1":
            term = Element.one(field, rank) * coef
        else:
            idx = [int(t) for t in re.findall(r"e(\d+)", body)]
            if len(set(idx)) != len(idx):
                term = Element.zero(field, rank)
            else:
                term = Element.from_indices(idx, coef, field, rank)
        acc = acc + term
        first = False
        pos = m.end()
    return acc
