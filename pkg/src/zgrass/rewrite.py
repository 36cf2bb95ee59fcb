"""PBW normal forms and reduction modulo the T-ideal of the triple commutator.

The free Lie algebra is given the Lyndon basis: a Lyndon word ``w`` stands for
its standard bracketing ``P(w)``. Letters (variables) are ordered by
``(degree, natural name)``, words lexicographically, and basis elements by
``(length, word)`` so that variables precede every commutator.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

from .errors import UnsupportedInput
from .fields import Field
from .freealg import FreePoly, GVar, comm, product

Word = tuple  # tuple[GVar, ...]


def _wkey(w: Word):
    return tuple(v.key() for v in w)


def basis_key(w: Word):
    return (len(w), _wkey(w))


def is_lyndon(w: Word) -> bool:
    """Strictly smaller than each of its proper rotations (equivalently, suffixes)."""
    if not w:
        return False
    k = _wkey(w)
    return all(k < k[i:] for i in range(1, len(k)))


def standard_factorization(w: Word) -> tuple[Word, Word]:
    """``w = u v`` with ``v`` the longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if is_lyndon(w[i:]):
            return w[:i], w[i:]
    raise ValueError("a letter has no standard factorization")


@lru_cache(maxsize=None)
def _bracket_terms(w: Word) -> tuple:
    """Associative expansion of ``P(w)`` as ((monomial, coef), ...) over the integers."""
    if len(w) == 1:
        return ((w, 1),)
    u, v = standard_factorization(w)
    a, b = dict(_bracket_terms(u)), dict(_bracket_terms(v))
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            out[m2 + m1] = out.get(m2 + m1, 0) - c1 * c2
    return tuple((m, c) for m, c in out.items() if c)


def lyndon_poly(w: Word, field: Field) -> FreePoly:
    return FreePoly(dict(_bracket_terms(w)), field)


def bracket_text(w: Word) -> str:
    if len(w) == 1:
        return str(w[0])
    u, v = standard_factorization(w)
    return f"[{_inner(u)},{_inner(v)}]"


def _inner(w: Word) -> str:
    return str(w[0]) if len(w) == 1 else bracket_text(w)


def lie_decompose(terms: dict) -> dict:
    """Write a Lie element (given by its monomial expansion) in the Lyndon basis.

    The lexicographically least monomial of a nonzero Lie element is a Lyndon
    word ``w`` and ``P(w) = w + (larger words)``, so peeling minimal words
    terminates.
    """
    rest = {m: c for m, c in terms.items() if c}
    out: dict = {}
    while rest:
        w = min(rest, key=_wkey)
        c = rest[w]
        if not is_lyndon(w):
            raise ValueError("input is not a Lie element")
        out[w] = c
        for m, d in _bracket_terms(w):
            v = rest.get(m, 0) - c * d
            if v:
                rest[m] = v
            else:
                rest.pop(m, None)
    return out


@lru_cache(maxsize=None)
def _lie_bracket(a: Word, b: Word) -> tuple:
    """``[P(a), P(b)]`` in the Lyndon basis, integer coefficients."""
    ta, tb = _bracket_terms(a), _bracket_terms(b)
    out: dict = {}
    for m1, c1 in ta:
        for m2, c2 in tb:
            out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            out[m2 + m1] = out.get(m2 + m1, 0) - c1 * c2
    return tuple(lie_decompose(out).items())


def _straighten(seq: tuple, coef, out: dict) -> None:
    stack = [(seq, coef)]
    while stack:
        s, c = stack.pop()
        for i in range(len(s) - 1):
            if basis_key(s[i]) > basis_key(s[i + 1]):
                swapped = s[:i] + (s[i + 1], s[i]) + s[i + 2:]
                stack.append((swapped, c))
                for w, d in _lie_bracket(s[i], s[i + 1]):
                    stack.append((s[:i] + (w,) + s[i + 2:], c * d))
                break
        else:
            out[s] = out.get(s, 0) + c


class ProperForm:
    """Linear combination of ``(sorted variables) * (sorted Lie basis elements)``.

    Keys are ``(lead, comms)``: ``lead`` a nondecreasing tuple of variables and
    ``comms`` a nondecreasing tuple of Lyndon words of length >= 2.
    """

    __slots__ = ("field", "_terms")

    def __init__(self, terms: dict, field: Field):
        self.field = field
        self._terms = {k: field.norm(c) for k, c in terms.items() if field.norm(c)}

    def items(self):
        return self._terms.items()

    def keys(self):
        return sorted(self._terms, key=lambda k: (len(k[0]), [basis_key(w) for w in k[1]],
                                                  _wkey(k[0])))

    def coef(self, key):
        return self._terms.get(key, self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return isinstance(other, ProperForm) and self.field == other.field and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def max_comm_length(self) -> int:
        return max((len(w) for (_, cs) in self._terms for w in cs), default=0)

    def to_poly(self) -> FreePoly:
        F = self.field
        acc = FreePoly.zero(F)
        for (lead, cs), c in self._terms.items():
            t = FreePoly.monomial(lead, c, F)
            for w in cs:
                t = t * lyndon_poly(w, F)
            acc = acc + t
        return acc

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for i, key in enumerate(self.keys()):
            lead, cs = key
            c = self._terms[key]
            neg = self.field.is_negative(c)
            mag = -c if neg else c
            body = "*".join([str(v) for v in lead] + [bracket_text(w) for w in cs]) or "1"
            if mag != 1:
                body = f"{self.field.fmt(mag)}*{body}" if (lead or cs) else self.field.fmt(mag)
            out.append((f"-{body}" if neg else body) if i == 0 else (f" - {body}" if neg else f" + {body}"))
        return "".join(out)

    __repr__ = __str__


def to_pbw(f: FreePoly) -> ProperForm:
    """Rewrite ``f`` in the PBW basis (variables first, then commutators by length)."""
    raw: dict = {}
    for m, c in f.items():
        _straighten(tuple((v,) for v in m), c, raw)
    out: dict = {}
    for seq, c in raw.items():
        lead = tuple(w[0] for w in seq if len(w) == 1)
        cs = tuple(w for w in seq if len(w) > 1)
        key = (lead, cs)
        out[key] = out.get(key, 0) + c
    return ProperForm(out, f.field)


def _sort_sign(entries: list) -> tuple[int, tuple]:
    """Parity of the permutation sorting ``entries`` (distinct), and the sorted tuple."""
    keys = [v.key() for v in entries]
    inv = sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[i] > keys[j])
    return (-1 if inv % 2 else 1), tuple(sorted(entries))


def reduce_mod_I(f: FreePoly, multihomogeneous: bool = False,
                 kill_power: Callable[[GVar, int], bool] | None = None) -> ProperForm:
    """Canonical representative of ``f`` modulo the triple-commutator ideal.

    Commutators of length >= 3 are dropped, the remaining length-2 commutators
    are central and alternating, so their entries are sorted with the sign of
    the sorting permutation. For multilinear ``f`` this is canonical.

    With ``multihomogeneous=True`` non-multilinear input is accepted: products
    of commutators with a repeated entry vanish, and ``kill_power(x, e)``
    (if given) removes terms whose leading part contains ``x^e``.
    """
    if not multihomogeneous and not f.is_multilinear():
        raise UnsupportedInput("reduce_mod_I expects a multilinear polynomial "
                               "(pass multihomogeneous=True for the power-rule variant)")
    pbw = to_pbw(f)
    out: dict = {}
    for (lead, cs), c in pbw.items():
        if any(len(w) > 2 for w in cs):
            continue
        entries = [v for w in cs for v in w]
        if len(set(entries)) != len(entries):
            continue
        if kill_power is not None and lead:
            counts: dict = {}
            for v in lead:
                counts[v] = counts.get(v, 0) + 1
            if any(kill_power(v, e) for v, e in counts.items()):
                continue
        sign, srt = _sort_sign(entries)
        pairs = tuple(srt[i:i + 2] for i in range(0, len(srt), 2))
        key = (lead, pairs)
        out[key] = out.get(key, 0) + sign * c
    return ProperForm(out, f.field)


def proper_to_poly(p: ProperForm) -> FreePoly:
    return p.to_poly()


def is_zero_proper(f: FreePoly) -> bool:
    return all(v.degree != 0 for (lead, _), _ in to_pbw(f).items() for v in lead)


def gamma_decompose(f: FreePoly) -> tuple[FreePoly, FreePoly]:
    """Split a 0-proper multilinear ``f`` as ``g * tail`` modulo the ideal.

    With l degree-0 variables ``y1 < ... < yl``:
    l even -> ``tail = [y1,y2]...[y_{l-1},y_l]`` and ``g`` has no y;
    l odd  -> ``tail = [y2,y3]...[y_{l-1},y_l]`` and ``g`` holds ``y1`` in a
    commutator ``[z, y1]``.
    """
    if not f.is_multilinear():
        raise UnsupportedInput("gamma_decompose expects a multilinear polynomial")
    F = f.field
    vs = f.variables()
    ys = [v for v in vs if v.degree == 0]
    zs = [v for v in vs if v.degree != 0]
    if any(v.degree < 0 for v in zs):
        raise UnsupportedInput("variables must have non-negative degree")
    red = reduce_mod_I(f)
    if any(v.degree == 0 for (lead, _), _ in red.items() for v in lead):
        raise UnsupportedInput("f is not 0-proper")
    l = len(ys)
    if l % 2 == 1 and not zs:
        raise UnsupportedInput("odd number of degree-0 variables needs at least one other variable")
    yv = [FreePoly.var(y, F) for y in ys]
    if l % 2 == 0:
        tail = product((comm(a, b) for a, b in zip(yv[0::2], yv[1::2])), F)
    else:
        tail = product((comm(a, b) for a, b in zip(yv[1::2], yv[2::2])), F)
    g = FreePoly.zero(F)
    for (lead, pairs), c in red.items():
        entries = [v for w in pairs for v in w]
        zent = [v for v in entries if v.degree != 0]
        if l % 2 == 0:
            core = zent
            sign = 1
        else:
            if not zent:
                raise UnsupportedInput("f is not 0-proper")
            order = [zent[0], ys[0]] + ys[1:] + zent[1:]
            sign, _ = _sort_sign(order)
            core = [zent[0], ys[0]] + zent[1:]
        t = FreePoly.monomial(lead, c * sign, F)
        cv = [FreePoly.var(v, F) for v in core]
        for a, b in zip(cv[0::2], cv[1::2]):
            t = t * comm(a, b)
        g = g + t
    if reduce_mod_I(f - g * tail):
        raise AssertionError("gamma decomposition failed to verify")
    return g, tail
