"""Deciding graded identities of graded Grassmann algebras.

Multilinear input is decided exactly through parity profiles: under a
substitution by basis words with pairwise disjoint supports, a multilinear
``f`` evaluates to ``S(h) * a_1 ... a_n`` where ``h`` records which words have
odd length, and ``S(h)`` is the coefficient sum with signs from inversions
among the odd variables. Overlapping supports kill every monomial. So ``f`` is
an identity iff ``S(h) = 0`` for every parity vector realizable by disjoint
words of the prescribed degrees.

Multihomogeneous input is decided the same way with one word slot per\noccurrence of a variable (see :func:`slot_profiles`).
"""
from __future__ import annotations

import random
from bisect import insort
from dataclasses import dataclass, field
from math import factorial
from itertools import combinations_with_replacement, permutations, product
from typing import Iterable, Mapping, Sequence

from . import kernels
from .errors import BudgetExceeded, UnsupportedInput
from .freealg import FreePoly, GVar, substitute
from .grading import GradedAlgebra, GradingSpec
from .grassmann import Element, word, word_str, to_text as element_text

DEFAULT_TERM_BUDGET = 2_000_000


# profiles --------------------------------------------------------------------

@dataclass(frozen=True)
class ShapeProfile:
    """Per-variable block usage; ``parities[i]`` is the length parity of variable i's word."""
    variables: tuple
    usage: tuple            # usage[i][j]: generators of block j used by variable i
    parities: tuple

    @property
    def total(self) -> int:
        return sum(sum(u) for u in self.usage)

    def key(self):
        return (self.total, self.usage)


def _blocks(g: GradingSpec, rank: int | None) -> list[tuple[int, int | None]]:
    if g.is_list:
        return list(g.blocks)
    if rank is None:
        raise UnsupportedInput("the index grading needs an explicit rank")
    return g.block_table(rank)


def variable_options(d: int, g: GradingSpec, rank: int | None = None) -> list[tuple[int, ...]]:
    """Block-usage vectors realizing degree ``d`` by a single word, up to parity-preserving moves.

    Infinite degree-0 blocks contribute 0 or 1 generators; with a modulus ``m``
    infinite blocks contribute at most ``2m - 1`` generators (adding ``2m``
    changes neither the degree class nor the parity).
    """
    blocks = _blocks(g, rank)
    m = g.modulus
    M = max((abs(n) for n, _ in blocks), default=0)
    mixed = any(n < 0 for n, _ in blocks) and any(n > 0 for n, _ in blocks)
    bounds = []
    for n, cap in blocks:
        if cap is not None:
            bounds.append(cap)
        elif n == 0:
            bounds.append(1)
        elif m:
            bounds.append(2 * m - 1)
        elif mixed:
            bounds.append(abs(d) + 2 * M * M)
        else:
            bounds.append(abs(d) // abs(n) if (d > 0) == (n > 0) and d != 0 else 0)
    target = g.reduce(d)
    out = []

    def rec(j, acc, s):
        if j == len(blocks):
            if g.reduce(s) == target and (m or s == d):
                out.append(tuple(acc))
            return
        n = blocks[j][0]
        for a in range(bounds[j] + 1):
            acc.append(a)
            rec(j + 1, acc, s + a * n)
            acc.pop()

    rec(0, [], 0)
    out.sort(key=lambda u: (sum(u), u))
    return out


def _finite_caps(g: GradingSpec, rank):
    blocks = _blocks(g, rank)
    return [j for j, (_, c) in enumerate(blocks) if c is not None], [c for _, c in blocks]


def realizable_parities(degs: Sequence[int], g: GradingSpec, rank: int | None = None) -> set[tuple]:
    """All parity vectors ``h`` realizable by words with pairwise disjoint supports."""
    opts = [variable_options(d, g, rank) for d in degs]
    finite, caps = _finite_caps(g, rank)
    out: set = set()
    seen: set = set()

    def rec(i, used, par):
        key = (i, used, par)
        if key in seen:
            return
        seen.add(key)
        if i == len(opts):
            out.add(par)
            return
        for u in opts[i]:
            new = tuple(used[t] + u[j] for t, j in enumerate(finite))
            if any(new[t] > caps[j] for t, j in enumerate(finite)):
                continue
            rec(i + 1, new, par + (sum(u) % 2,))

    rec(0, tuple(0 for _ in finite), ())
    return out


def enumerate_profiles(f: FreePoly | Sequence[GVar], g: GradingSpec | GradedAlgebra,
                       rank: int | None = None) -> list[ShapeProfile]:
    """Every realizable profile (usage reduced as in :func:`variable_options`)."""
    if isinstance(g, GradedAlgebra):
        rank = g.rank if rank is None else rank
        g = g.grading
    if isinstance(f, FreePoly):
        if not f.is_multilinear():
            raise UnsupportedInput("profiles are defined for multilinear polynomials")
        vs = f.variables()
    else:
        vs = list(f)
    opts = [variable_options(v.degree, g, rank) for v in vs]
    finite, caps = _finite_caps(g, rank)
    out = []

    def rec(i, used, acc):
        if i == len(opts):
            out.append(ShapeProfile(tuple(vs), tuple(acc), tuple(sum(u) % 2 for u in acc)))
            return
        for u in opts[i]:
            new = tuple(used[t] + u[j] for t, j in enumerate(finite))
            if any(new[t] > caps[j] for t, j in enumerate(finite)):
                continue
            acc.append(u)
            rec(i + 1, new, acc)
            acc.pop()

    rec(0, tuple(0 for _ in finite), [])
    out.sort(key=ShapeProfile.key)
    return out


def _profile_for(vs, g, rank, h) -> ShapeProfile | None:
    """A profile with parities ``h`` of least total usage (ties: least usage tuple)."""
    opts = [[u for u in variable_options(v.degree, g, rank) if sum(u) % 2 == p] for v, p in zip(vs, h)]
    finite, caps = _finite_caps(g, rank)
    best = [None]

    def rec(i, used, acc, tot):
        if best[0] is not None and tot > best[0][0]:
            return
        if i == len(opts):
            cand = (tot, tuple(acc))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        for u in opts[i]:
            new = tuple(used[t] + u[j] for t, j in enumerate(finite))
            if any(new[t] > caps[j] for t, j in enumerate(finite)):
                continue
            acc.append(u)
            rec(i + 1, new, acc, tot + sum(u))
            acc.pop()

    rec(0, tuple(0 for _ in finite), [], 0)
    if best[0] is None:
        return None
    usage = best[0][1]
    return ShapeProfile(tuple(vs), usage, tuple(h))


# verdicts ----------------------------------------------------------------------

@dataclass
class Witness:
    """A degree-respecting substitution with nonzero value."""
    assignment: dict
    value: Element

    def to_text(self) -> str:
        lines = [f"{v} -> {element_text(x)}" for v, x in sorted(self.assignment.items())]
        lines.append(f"value = {element_text(self.value)}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"assignment": {str(v): element_text(x) for v, x in sorted(self.assignment.items())},
                "value": element_text(self.value)}

    def verify(self, f: FreePoly, A: GradedAlgebra) -> bool:
        return bool(self.value) and substitute(f, self.assignment, A) == self.value


@dataclass
class Verdict:
    identity: bool
    certificate: str
    witness: Witness | None = None
    profiles_checked: int = 0
    rank: int | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.identity

    def to_text(self) -> str:
        head = "identity" if self.identity else "not an identity"
        out = [f"{head} ({self.certificate})"]
        if self.witness is not None:
            out.append(self.witness.to_text())
        return "\n".join(out)

    def to_json(self) -> dict:
        d = {"identity": self.identity, "certificate": self.certificate,
             "profiles_checked": self.profiles_checked, "rank": self.rank}
        if self.witness is not None:
            d["witness"] = self.witness.to_json()
        d.update(self.details)
        return d


# multilinear decision -----------------------------------------------------------

def _perm_data(f: FreePoly, vs: list[GVar]):
    idx = {v: i for i, v in enumerate(vs)}
    perms, coefs = [], []
    for m, c in f.items():
        perms.append(tuple(idx[v] for v in m))
        coefs.append(c)
    return perms, coefs


def parity_sums(f: FreePoly, vs: list[GVar], hs: Sequence[tuple]) -> list:
    """``S(h)`` for each parity vector in ``hs``."""
    F = f.field
    perms, coefs = _perm_data(f, vs)
    masks = [sum(1 << i for i, b in enumerate(h) if b) for h in hs]
    signs = kernels.perm_signs(perms, masks)  # signs[i][j]: monomial i, parity vector j
    out = [0] * len(masks)
    for c, row in zip(coefs, signs):
        for j, s in enumerate(row):
            out[j] += c if s > 0 else -c
    return [F.norm(x) for x in out]


def profile_words(profile: ShapeProfile, g: GradingSpec, rank: int) -> list[int]:
    """Lowest-index disjoint words realizing ``profile``, finite blocks consumed first."""
    blocks = _blocks(g, rank)
    pools = {j: g.block_generators(j, rank) if g.is_list else [j + 1] for j in range(len(blocks))}
    order = [j for j, (_, c) in enumerate(blocks) if c is not None] + \
            [j for j, (_, c) in enumerate(blocks) if c is None]
    nxt = {j: 0 for j in pools}
    words = []
    for u in profile.usage:
        idx = []
        for j in order:
            a = u[j]
            if nxt[j] + a > len(pools[j]):
                raise BudgetExceeded(f"rank {rank} has too few generators in block {j} for the witness")
            idx.extend(pools[j][nxt[j]:nxt[j] + a])
            nxt[j] += a
        words.append(word(*idx))
    return words


def is_identity_multilinear(f: FreePoly, A: GradedAlgebra) -> Verdict:
    if not f.is_multilinear():
        raise UnsupportedInput("is_identity_multilinear expects a multilinear polynomial")
    if f.field != A.field:
        raise UnsupportedInput("polynomial and algebra are over different fields")
    g = A.grading
    rank = None if g.is_list else A.rank
    vs = f.variables()
    if not f:
        return Verdict(True, "zero polynomial", rank=A.rank)
    for v in vs:
        if not variable_options(v.degree, g, rank):
            return Verdict(True, f"component empty: no word of degree {v.degree} for {v}", rank=A.rank)
    hs = sorted(realizable_parities([v.degree for v in vs], g, rank))
    if not hs:
        return Verdict(True, "component empty: capacities cannot be met by disjoint words", rank=A.rank)
    sums = parity_sums(f, vs, hs)
    bad = [h for h, s in zip(hs, sums) if s]
    if not bad:
        return Verdict(True, f"profile certificate: S(h) = 0 for all {len(hs)} realizable parity vectors",
                       profiles_checked=len(hs), rank=A.rank,
                       details={"parity_vectors": ["".join(map(str, h)) for h in hs]})
    cands = [p for p in (_profile_for(vs, g, rank, h) for h in bad) if p is not None]
    cands.sort(key=lambda p: (p.total, p.usage))
    prof = cands[0]
    B = A
    if g.is_list:
        need = g.rank_for({j: sum(u[j] for u in prof.usage) for j in range(len(g.blocks))})
        if need > A.rank:
            B = A.with_rank(need)
    words = profile_words(prof, g, B.rank)
    assignment = {v: Element.from_word(w, 1, B.field, B.rank) for v, w in zip(vs, words)}
    value = substitute(f, assignment, B)
    return Verdict(False, f"parity vector {''.join(map(str, prof.parities))} has nonzero signed sum",
                   witness=Witness(assignment, value), profiles_checked=len(hs), rank=B.rank)


# multihomogeneous decision ----------------------------------------------------------
#
# A variable of exponent e is evaluated at e word slots. In f(generic elements)
# a nonzero term picks pairwise disjoint words, except that the unit may be
# picked repeatedly. The coefficient of a fixed choice therefore depends only on
# how many units, even words and odd words each variable received.

def slot_profiles(variables: Sequence[GVar], exponents: Sequence[int], g: GradingSpec,
                  rank: int | None = None) -> dict:
    """Realizable ``((units, even, odd) per variable)`` -> least-usage slot usages.

    The value lists, per variable, the usage vectors of its nonempty slots.
    """
    finite, caps = _finite_caps(g, rank)
    opts = [variable_options(v.degree, g, rank) for v in variables]
    best: dict = {}
    seen: set = set()

    def rec(i, used, key, acc, tot):
        if (i, used, key, tot) in seen:
            return
        seen.add((i, used, key, tot))
        if i == len(opts):
            if key not in best or (tot, acc) < best[key][0]:
                best[key] = ((tot, acc), acc)
            return
        for choice in combinations_with_replacement(opts[i], exponents[i]):
            new = list(used)
            counts = [0, 0, 0]
            words = []
            for u in choice:
                if not any(u):
                    counts[0] += 1
                    continue
                counts[1 + sum(u) % 2] += 1
                words.append(u)
                for t, j in enumerate(finite):
                    new[t] += u[j]
            if any(new[t] > caps[j] for t, j in enumerate(finite)):
                continue
            rec(i + 1, tuple(new), key + (tuple(counts),), acc + (tuple(words),),
                tot + sum(map(sum, words)))

    rec(0, tuple(0 for _ in finite), (), (), 0)
    return {k: v[1] for k, v in best.items()}


def slot_coefficient(mono: tuple, variables: Sequence[GVar], counts: tuple) -> int:
    """Signed number of ways ``mono`` produces the union word of a fixed slot choice."""
    pos = {v: i for i, v in enumerate(variables)}
    slots: list[list[int]] = [[] for _ in variables]
    for t, v in enumerate(mono):
        slots[pos[v]].append(t)
    fills = []
    for i, (nu, ne, no) in enumerate(counts):
        labels = [(i, -1, 0)] * nu + [(i, j, 0) for j in range(ne)] + [(i, j, 1) for j in range(no)]
        fills.append(set(permutations(labels)))
    total = 0
    for choice in product(*fills):
        seq = [None] * len(mono)
        for i, arr in enumerate(choice):
            for t, lab in zip(slots[i], arr):
                seq[t] = lab
        odd = [lab for lab in seq if lab[2]]
        inv = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd)) if odd[a] > odd[b])
        total += -1 if inv % 2 else 1
    return total


def _slot_witness(f: FreePoly, A: GradedAlgebra, vs, usages) -> Witness:
    g = A.grading
    flat = [u for us in usages for u in us]
    B = A
    if g.is_list:
        nb = len(g.blocks)
        need = g.rank_for({j: sum(u[j] for u in flat) for j in range(nb)})
        if need > A.rank:
            B = A.with_rank(need)
    words = profile_words(ShapeProfile(tuple(), tuple(flat), ()), g, B.rank)
    F = A.field
    assignment = {}
    it = iter(words)
    md = f.multidegree()
    for v, us in zip(vs, usages):
        terms = {w: 1 for w in (next(it) for _ in us)}
        if len(us) < md[v]:
            terms[0] = 1
        assignment[v] = Element(terms, F, B.rank)
    return Witness(assignment, substitute(f, assignment, B))



def default_rank(f: FreePoly, A: GradedAlgebra) -> tuple[int, int, str]:
    """Rank and word-length bounds for the generic check, with a short derivation."""
    g = A.grading
    md = f.multidegree() or {}
    rank = None if g.is_list else A.rank
    nblocks = len(_blocks(g, rank))
    demand = {j: 0 for j in range(nblocks)}
    max_len = 0
    for v, r in md.items():
        opts = variable_options(v.degree, g, rank)
        if not opts:
            continue
        for j in range(nblocks):
            demand[j] += r * max(u[j] for u in opts)
        max_len = max(max_len, max(sum(u) for u in opts))
    N = g.rank_for(demand) if g.is_list else A.rank
    why = (f"rank {N}: per block, the sum over variables of (multiplicity x largest usage of that block "
           f"in a single word of the variable's degree); word length <= {max_len}")
    return max(N, 1), max_len, why


def _generic_expand(f: FreePoly, comps: dict, budget: int):
    total: dict = {}
    sign = kernels.word_sign
    for m, c in f.items():
        cur = {(0, ()): c}
        for v in m:
            nxt: dict = {}
            for (mask, ct), a in cur.items():
                for w, cid in comps[v]:
                    if mask & w:
                        continue
                    s = sign(mask, w)
                    lst = list(ct)
                    insort(lst, cid)
                    key = (mask | w, tuple(lst))
                    nxt[key] = nxt.get(key, 0) + (a if s > 0 else -a)
            cur = nxt
            if len(cur) > budget:
                raise BudgetExceeded(f"generic expansion exceeded {budget} terms")
        for k, a in cur.items():
            total[k] = total.get(k, 0) + a
        if len(total) > budget:
            raise BudgetExceeded(f"generic expansion exceeded {budget} terms")
    return total


def is_identity_multihomogeneous(f: FreePoly, A: GradedAlgebra, rank: int | None = None,
                                 max_len: int | None = None, budget: int = DEFAULT_TERM_BUDGET,
                                 seed: int = 0) -> Verdict:
    """Exact slot-profile decision; with ``rank`` or ``max_len`` given, a generic check at that rank."""
    if not f.is_multihomogeneous():
        raise UnsupportedInput("is_identity_multihomogeneous expects a multihomogeneous polynomial")
    F = A.field
    if f.field != F:
        raise UnsupportedInput("polynomial and algebra are over different fields")
    if rank is None and max_len is None:
        return _slot_decision(f, A)
    N0, L0, why = default_rank(f, A)
    N = rank if rank is not None else N0
    L = max_len if max_len is not None else L0
    if rank is not None or max_len is not None:
        why = f"rank {N}, word length <= {L} (caller override)"
    B = A.with_rank(N)
    vs = f.variables()
    if not f:
        return Verdict(True, "zero polynomial", rank=N)
    comps = {}
    cid = 0
    for v in vs:
        ws = B.component_basis(v.degree, L)
        if not ws:
            if not variable_options(v.degree, A.grading, None if A.grading.is_list else N):
                return Verdict(True, f"component empty: no word of degree {v.degree} for {v}", rank=N)
            raise BudgetExceeded(f"rank {N} too small to realize degree {v.degree}")
        comps[v] = [(w, cid + i) for i, w in enumerate(ws)]
        cid += len(ws)
    total = _generic_expand(f, comps, budget)
    nonzero = sorted((k for k, a in total.items() if F.norm(a)), key=lambda k: (k[1], k[0]))
    if not nonzero:
        return Verdict(True, f"identity at rank {N}: every generic coefficient vanishes ({why})",
                       rank=N, details={"word_length": L})
    owner = {c: (v, w) for v, lst in comps.items() for w, c in lst}
    for mask, ct in nonzero[:200]:
        chosen = set(ct)
        assignment = {v: Element({w: 1 for w, c in comps[v] if c in chosen}, F, N) for v in vs}
        value = substitute(f, assignment, B, check=False)
        if value:
            return Verdict(False, "nonzero generic coefficient; 0/1 specialization",
                           witness=Witness(assignment, value), rank=N)
    rng = random.Random(seed)
    for _ in range(200):
        assignment = {v: Element({w: rng.randint(-3, 3) for w, _ in comps[v]}, F, N) for v in vs}
        value = substitute(f, assignment, B, check=False)
        if value:
            return Verdict(False, "nonzero generic coefficient; random specialization",
                           witness=Witness(assignment, value), rank=N)
    raise BudgetExceeded("found a nonzero generic coefficient but no explicit witness")


def _slot_decision(f: FreePoly, A: GradedAlgebra) -> Verdict:
    g = A.grading
    rank = None if g.is_list else A.rank
    if not f:
        return Verdict(True, "zero polynomial", rank=A.rank)
    md = f.multidegree()
    vs = sorted(md)
    for v in vs:
        if not variable_options(v.degree, g, rank):
            return Verdict(True, f"component empty: no word of degree {v.degree} for {v}", rank=A.rank)
    profiles = slot_profiles(vs, [md[v] for v in vs], g, rank)
    if not profiles:
        return Verdict(True, "component empty: capacities cannot be met by disjoint words", rank=A.rank)
    F = A.field
    bad = []
    for key in sorted(profiles):
        s = F.norm(sum(c * slot_coefficient(m, vs, key) for m, c in f.items()))
        if s:
            bad.append(key)
    if not bad:
        return Verdict(True, f"slot-profile certificate: all {len(profiles)} realizable slot profiles "
                             "have vanishing signed sums", profiles_checked=len(profiles), rank=A.rank)
    key = min(bad, key=lambda k: (sum(sum(u) for us in profiles[k] for u in us), k))
    wit = _slot_witness(f, A, vs, profiles[key])
    if not wit.value:
        raise AssertionError("slot-profile witness evaluated to zero")
    return Verdict(False, "a slot profile has nonzero signed sum", witness=wit,
                   profiles_checked=len(profiles), rank=wit.value.rank)


def multihomogeneous_components(f: FreePoly) -> list[FreePoly]:
    groups: dict = {}
    vs = f.variables()
    for m, c in f.items():
        key = tuple(m.count(v) for v in vs)
        groups.setdefault(key, {})[m] = c
    return [FreePoly(t, f.field) for _, t in sorted(groups.items())]


def is_identity(f: FreePoly, A: GradedAlgebra, **kw) -> Verdict:
    """Dispatch: parity profiles for multilinear ``f``, slot profiles for other
    multihomogeneous ``f``; passing ``rank`` or ``max_len`` selects the generic
    finite-rank check instead.

    A non-multihomogeneous ``f`` is an identity iff each multihomogeneous
    component is. The "only if" direction scales variables by field elements,
    so over F_p it needs every variable degree below p unless an explicit
    witness for ``f`` itself is found.
    """
    if f.is_multilinear() and kw.get("rank") is None and kw.get("max_len") is None:
        return is_identity_multilinear(f, A)
    if f.is_multihomogeneous():
        return is_identity_multihomogeneous(f, A, **kw)
    last = None
    for part in multihomogeneous_components(f):
        v = is_identity(part, A, **kw)
        if not v.identity:
            B = A.with_rank(v.rank)
            asg = dict(v.witness.assignment)
            for x in f.variables():
                asg.setdefault(x, Element.zero(B.field, B.rank))
            value = substitute(f, asg, B, check=False)
            if value:
                return Verdict(False, v.certificate + " (on a multihomogeneous component)",
                               witness=Witness(asg, value), rank=v.rank)
            p = f.field.char
            if p and any(max(f.degree_in(x)) >= p for x in f.variables()):
                raise UnsupportedInput(f"a component is not an identity, but splitting components needs "
                                       f"degrees below {p} in every variable")
            return Verdict(False, v.certificate + " (on a multihomogeneous component)",
                           witness=None, rank=v.rank)
        last = v
    return Verdict(True, "every multihomogeneous component is an identity"
                   + (f"; {last.certificate}" if last else ""), rank=last.rank if last else None)


# explicit evaluations --------------------------------------------------------------

def explicit_witness(kind: str, A: GradedAlgebra | None = None, **params) -> Witness:
    """The explicit non-vanishing substitutions.

    ``t2n``: ``n``, ``k``; z_i -> e_{k+i} in E^{k*}, value ``2^n e_{k+1}...e_{k+2n}``.
    ``central_powers``: ``k``, ``exps`` = list of (degree i, exponent r); each variable x of
    degree i is sent to a sum of r central words of E^{k*}; the monomial
    ``prod x^r`` evaluates to ``prod r! * m`` for a single signed word ``m``.
    ``can_monomial``: ``degs``; consecutive words of lengths ``degs`` in E^can and
    the monomial x1...xn.
    """
    from .families import t_2n
    from .fields import QQ
    from .grading import preset

    if kind == "t2n":
        n, k = params["n"], params["k"]
        if n < 1 or k < 0:
            raise ValueError("t2n needs n >= 1 and k >= 0")
        if A is None:
            A = GradedAlgebra(preset("k_star", k=k), max(24, k + 2 * n), QQ)
        f = t_2n(n, field=A.field)
        asg = {v: Element.gen(k + i, A.field, A.rank) for i, v in enumerate(f.variables(), 1)}
        val = substitute(f, asg, A)
        expect = Element.from_word(word(*range(k + 1, k + 2 * n + 1)), 2 ** n, A.field, A.rank)
        if val != expect:
            raise AssertionError("t_2n evaluation does not match 2^n e_{k+1}...e_{k+2n}")
        return Witness(asg, val)
    if kind == "central_powers":
        k = params["k"]
        exps = [tuple(e) for e in params["exps"]]
        if any(i < 1 or i > k or r < 1 for i, r in exps):
            raise ValueError("each variable needs degree 1..k and exponent >= 1")
        if sum(i * r for i, r in exps) > k:
            raise ValueError("hypothesis violated: sum of i*r must be at most k")
        if A is None:
            A = GradedAlgebra(preset("k_star", k=k), 24, QQ)
        F = A.field
        rmax = max(r for _, r in exps)
        if F.char and F.char <= rmax:
            raise ValueError("hypothesis violated: p must exceed every exponent")
        nxt_fin, nxt_star = 1, k + 1
        asg = {}
        mono = []
        m = Element.one(A.field, A.rank)
        for t, (i, r) in enumerate(exps, 1):
            x = GVar(f"x{i}_{t}", i)
            terms = {}
            for _ in range(r):
                idx = list(range(nxt_fin, nxt_fin + i))
                nxt_fin += i
                if i % 2:
                    idx.append(nxt_star)
                    nxt_star += 1
                terms[word(*idx)] = 1
                m = m * Element.from_indices(idx, 1, A.field, A.rank)
            if max(nxt_star - 1, nxt_fin - 1) > A.rank:
                raise BudgetExceeded("rank too small for the construction")
            asg[x] = Element(terms, F, A.rank)
            mono.extend([x] * r)
        f = FreePoly.monomial(mono, 1, F)
        val = substitute(f, asg, A)
        coef = 1
        for _, r in exps:
            coef *= factorial(r)
        # m is the product of the central words w w*, a single signed basis word
        if val != m * F(coef):
            raise AssertionError(f"evaluation is not {coef} times the product of the chosen words")
        return Witness(asg, val)
    if kind == "can_monomial":
        degs = list(params["degs"])
        if any(d < 0 for d in degs):
            raise ValueError("degrees must be non-negative")
        if A is None:
            A = GradedAlgebra(preset("can"), max(24, sum(degs)), QQ)
        vs = [GVar(f"x{i}", d) for i, d in enumerate(degs, 1)]
        evens = [v for v in vs if v.degree % 2 == 0]
        odds = [v for v in vs if v.degree % 2 == 1]
        start = 1
        asg = {}
        for v in evens + odds:
            asg[v] = Element.from_word(word(*range(start, start + v.degree)), 1, A.field, A.rank)
            start += v.degree
        f = FreePoly.monomial(evens + odds, 1, A.field)
        val = substitute(f, asg, A)
        if not val:
            raise AssertionError("evaluation vanished")
        return Witness(asg, val)
    raise ValueError(f"unknown construction {kind!r}")
