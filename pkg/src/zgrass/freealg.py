"""The free Z-graded associative algebra on degree-annotated variables."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from itertools import permutations
from typing import Iterable, Mapping

from .errors import DegreeError, MismatchError
from .fields import QQ, Field
from .grassmann import Element


def natural_key(name: str) -> tuple:
    """Sort key treating digit runs as integers, so ``x2 < x10``."""
    return tuple((0, int(t)) if t.isdigit() else (1, t) for t in re.findall(r"\d+|\D+", name))


@total_ordering
@dataclass(frozen=True)
class GVar:
    """A free variable of fixed Z-degree; ``x1@1`` and ``x1@2`` are different variables."""
    name: str
    degree: int

    def key(self):
        return (self.degree, natural_key(self.name))

    def __lt__(self, other: "GVar"):
        return self.key() < other.key()

    def __str__(self):
        return f"{self.name}@{self.degree}"

    def __repr__(self):
        return f"GVar({self.name!r}, {self.degree})"


Monomial = tuple  # tuple[GVar, ...]


def mono_key(m: Monomial):
    return (len(m), tuple(v.key() for v in m))


class FreePoly:
    """A polynomial in F<X|Z>: a map from monomials (tuples of GVar) to coefficients."""

    __slots__ = ("field", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, field: Field = QQ,
                 *, _clean: bool = False):
        self.field = field
        if _clean:
            self._terms = dict(terms)
        else:
            clean = {}
            for m, c in (terms or {}).items():
                c = field(c)
                if c:
                    clean[tuple(m)] = c
            self._terms = clean
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, field: Field = QQ) -> "FreePoly":
        return cls({}, field, _clean=True)

    @classmethod
    def one(cls, field: Field = QQ) -> "FreePoly":
        return cls({(): field.one}, field, _clean=True)

    @classmethod
    def var(cls, v: GVar, field: Field = QQ) -> "FreePoly":
        return cls({(v,): field.one}, field, _clean=True)

    @classmethod
    def monomial(cls, vs: Iterable[GVar], coef=1, field: Field = QQ) -> "FreePoly":
        return cls({tuple(vs): coef}, field)

    def _new(self, terms: dict) -> "FreePoly":
        norm = self.field.norm
        clean = {}
        for m, c in terms.items():
            c = norm(c)
            if c:
                clean[m] = c
        return FreePoly(clean, self.field, _clean=True)

    # access -------------------------------------------------------------
    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=mono_key)

    def coef(self, m: Monomial):
        return self._terms.get(tuple(m), self.field.zero)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def variables(self) -> list[GVar]:
        return sorted({v for m in self._terms for v in m})

    def degree_in(self, v: GVar) -> set[int]:
        return {m.count(v) for m in self._terms}

    def multidegree(self) -> dict[GVar, int] | None:
        """Per-variable degree when ``f`` is multihomogeneous, else None."""
        out = {}
        for v in self.variables():
            ds = self.degree_in(v)
            if len(ds) != 1:
                return None
            out[v] = ds.pop()
        return out

    def zdegrees(self) -> set[int]:
        return {sum(v.degree for v in m) for m in self._terms}

    def is_multihomogeneous(self) -> bool:
        return self.multidegree() is not None

    def is_multilinear(self) -> bool:
        md = self.multidegree()
        return md is not None and all(d == 1 for d in md.values())

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "FreePoly":
        if isinstance(other, FreePoly):
            if other.field != self.field:
                raise MismatchError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return FreePoly({(): other}, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            c = self.field(other)
            return self._new({m: c * v for m, v in self._terms.items()})
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 + m2
                out[m] = out.get(m, 0) + c1 * c2
        return self._new(out)

    def __rmul__(self, other):
        c = self.field(other)
        return self._new({m: c * v for m, v in self._terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        acc = FreePoly.one(self.field)
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, FreePoly):
            return self.field == other.field and self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"FreePoly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    # structural maps ----------------------------------------------------
    def rename(self, mapping: Mapping[GVar, GVar]) -> "FreePoly":
        return self._new_sum((tuple(mapping.get(v, v) for v in m), c) for m, c in self._terms.items())

    def _new_sum(self, pairs) -> "FreePoly":
        out: dict = {}
        for m, c in pairs:
            out[m] = out.get(m, 0) + c
        return self._new(out)

    def substitute_poly(self, mapping: Mapping[GVar, "FreePoly"], check_degrees: bool = True) -> "FreePoly":
        """Graded endomorphism image: each variable replaced by a polynomial of the same degree."""
        if check_degrees:
            for v, p in mapping.items():
                bad = [d for d in p.zdegrees() if d != v.degree]
                if bad:
                    raise DegreeError(f"{v} cannot be replaced by a polynomial of degree {bad[0]}")
        acc = FreePoly.zero(self.field)
        for m, c in self._terms.items():
            t = FreePoly({(): c}, self.field, _clean=True)
            for v in m:
                t = t * (mapping[v] if v in mapping else FreePoly.var(v, self.field))
            acc = acc + t
        return acc

    def change_field(self, field: Field) -> "FreePoly":
        return FreePoly({m: field(c) for m, c in self._terms.items()}, field)


def var(name: str, degree: int, field: Field = QQ) -> FreePoly:
    return FreePoly.var(GVar(name, degree), field)


def comm(a: FreePoly, b: FreePoly, *rest: FreePoly) -> FreePoly:
    """Left-normed commutator, expanded into monomials."""
    out = a * b - b * a
    for c in rest:
        out = out * c - c * out
    return out


def product(polys: Iterable[FreePoly], field: Field = QQ) -> FreePoly:
    acc = FreePoly.one(field)
    for p in polys:
        acc = acc * p
    return acc


# evaluation ----------------------------------------------------------------

def check_assignment(assignment: Mapping[GVar, Element], A) -> None:
    """Raise DegreeError unless every image is homogeneous of its variable's degree in ``A``."""
    for v, x in assignment.items():
        if x.field != A.field:
            raise MismatchError(f"field mismatch for {v}")
        if x.rank != A.rank:
            raise MismatchError(f"rank mismatch for {v}: {x.rank} vs {A.rank}")
        if x and not A.is_homogeneous_of(x, v.degree):
            raise DegreeError(f"image of {v} is not homogeneous of degree {v.degree}")


def substitute(f: FreePoly, assignment: Mapping[GVar, Element], A, check: bool = True) -> Element:
    """Image of ``f`` in ``A`` under the graded homomorphism given by ``assignment``.

    Variables missing from ``assignment`` must have an empty component in ``A``
    (within its rank); they are then sent to zero.
    """
    if f.field != A.field:
        raise MismatchError(f"field mismatch: {f.field} vs {A.field}")
    if check:
        check_assignment(assignment, A)
    images = dict(assignment)
    for v in f.variables():
        if v not in images:
            if A.has_component(v.degree):
                raise DegreeError(f"no value given for {v}")
            images[v] = Element.zero(A.field, A.rank)
    one = Element.one(A.field, A.rank)
    total = Element.zero(A.field, A.rank)
    cache: dict = {(): one}
    for m in sorted(f._terms, key=mono_key):
        prefix = m[:-1]
        if prefix not in cache:
            acc = one
            for v in prefix:
                acc = acc * images[v]
            cache[prefix] = acc
        val = cache[prefix] * images[m[-1]] if m else one
        total = total + val * f._terms[m]
    return total


# text form -----------------------------------------------------------------

def _fmt_var(v: GVar) -> str:
    return str(v)


def _fmt_mono(m: Monomial) -> str:
    parts = []
    i = 0
    while i < len(m):
        j = i
        while j < len(m) and m[j] == m[i]:
            j += 1
        parts.append(_fmt_var(m[i]) + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "*".join(parts)


def to_text(f: FreePoly) -> str:
    """Canonical printing: monomials by (length, variable keys), e.g. ``x1@1*x2@1 - x2@1*x1@1``."""
    ms = f.monomials()
    if not ms:
        return "0"
    out = []
    for i, m in enumerate(ms):
        c = f.coef(m)
        neg = f.field.is_negative(c)
        mag = -c if neg else c
        if not m:
            body = f.field.fmt(mag)
        elif mag == 1:
            body = _fmt_mono(m)
        else:
            body = f"{f.field.fmt(mag)}*{_fmt_mono(m)}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# classification ------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    multilinear: bool
    multihomogeneous: bool
    zero_proper: bool
    proper: bool


def classify(f: FreePoly) -> Classification:
    """Structural flags; properness is read off the PBW normal form."""
    from .rewrite import to_pbw

    pbw = to_pbw(f)
    lead_vars = {v for (lead, _), _ in pbw.items() for v in lead}
    return Classification(
        multilinear=f.is_multilinear(),
        multihomogeneous=f.is_multihomogeneous(),
        zero_proper=all(v.degree != 0 for v in lead_vars),
        proper=not lead_vars,
    )


def standard(n: int, degree: int = 0, name: str = "x", field: Field = QQ) -> FreePoly:
    """The standard polynomial s_n: signed sum over all orderings of x1..xn."""
    if n < 1:
        raise ValueError("standard polynomial needs n >= 1")
    vs = [GVar(f"{name}{i}", degree) for i in range(1, n + 1)]
    terms = {}
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        terms[tuple(vs[i] for i in perm)] = -1 if inv % 2 else 1
    return FreePoly(terms, field)
