"""Independent reference implementations used to cross-check the package.

Nothing here imports the package kernels: words are sorted index tuples,
products are computed by bubble sort, ranks by plain Gaussian elimination
modulo a large prime.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

P_BIG = 1_000_003


# Grassmann words as sorted tuples ------------------------------------------------

def bubble_sign(u, v) -> int:
    """Sign of the product e_u e_v written in increasing order, 0 if supports meet."""
    seq = list(u) + list(v)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign


def mask_to_tuple(mask: int) -> tuple:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def tuple_to_mask(t) -> int:
    return sum(1 << (i - 1) for i in t)


def mul(a: dict, b: dict, mod: int | None = None) -> dict:
    """Product of elements stored as {sorted tuple: coefficient}."""
    out: dict = {}
    for u, x in a.items():
        for v, y in b.items():
            s = bubble_sign(u, v)
            if s:
                w = tuple(sorted(u + v))
                out[w] = out.get(w, 0) + s * x * y
    if mod:
        out = {w: c % mod for w, c in out.items()}
    return {w: c for w, c in out.items() if c}


def evaluate(mono_terms: dict, assignment: dict, mod: int | None = None) -> dict:
    """Evaluate {monomial tuple of keys: coef} at {key: element}."""
    total: dict = {}
    for m, c in mono_terms.items():
        acc = {(): 1}
        for v in m:
            acc = mul(acc, assignment[v], mod)
            if not acc:
                break
        for w, x in acc.items():
            total[w] = total.get(w, 0) + c * x
    if mod:
        total = {w: c % mod for w, c in total.items()}
    return {w: c for w, c in total.items() if c}


# gradings by brute force ------------------------------------------------------------

def words_of_degree(gen_degree, rank: int, d: int, max_len: int, modulus: int | None = None) -> list[tuple]:
    out = []
    for L in range(0, max_len + 1):
        for t in itertools.combinations(range(1, rank + 1), L):
            s = sum(gen_degree(i) for i in t)
            if (s - d) % modulus == 0 if modulus else s == d:
                out.append(t)
    return out


def brute_force_is_identity(f, degree_of_gen, rank: int, max_len: int, modulus: int | None = None) -> bool:
    """Multilinear ``f``: try every assignment of basis words (exhaustive at this rank)."""
    vs = f.variables()
    terms = {m: int(c) if f.field.char else c for m, c in f.items()}
    choices = [words_of_degree(degree_of_gen, rank, v.degree, max_len, modulus) for v in vs]
    for pick in itertools.product(*choices):
        flat = [i for w in pick for i in w]
        if len(set(flat)) != len(flat):
            continue
        asg = {v: {w: 1} for v, w in zip(vs, pick)}
        val = evaluate(terms, asg)
        if f.field.char:
            val = {w: c % f.field.char for w, c in val.items() if c % f.field.char}
        if val:
            return False
    return True


# linear algebra modulo a large prime ---------------------------------------------------

def rank_mod(rows: list[dict], p: int = P_BIG) -> int:
    pivots: dict = {}
    r = 0
    for row in rows:
        v = {j: c % p for j, c in row.items() if c % p}
        while v:
            j = min(v)
            if j not in pivots:
                inv = pow(v[j], p - 2, p)
                pivots[j] = {k: c * inv % p for k, c in v.items()}
                r += 1
                break
            c = v[j]
            for k, a in pivots[j].items():
                v[k] = (v.get(k, 0) - c * a) % p
                if not v[k]:
                    del v[k]
    return r


def random_identity_dim(basis: list[tuple], components: dict, samples: int, seed: int = 1,
                        p: int = P_BIG) -> int:
    """dim of {f in span(basis) : f(x) = 0} estimated by random evaluations mod p.

    ``components[v]`` lists the basis words (tuples) of v's component; each
    sample sends v to a random combination of them. The result is an upper
    bound that is exact with high probability once ``samples`` is large.
    """
    rng = random.Random(seed)
    rows: dict = {}
    for s in range(samples):
        asg = {v: {w: rng.randrange(1, p) for w in ws} for v, ws in components.items()}
        for j, m in enumerate(basis):
            val = evaluate({m: 1}, asg, p)
            for w, c in val.items():
                rows.setdefault((s, w), {})[j] = c
    return len(basis) - rank_mod(list(rows.values()), p)


def parity_codim(n: int, p: int = P_BIG) -> int:
    """Codimension of V_n ∩ T(E) by evaluating at every parity pattern with concrete words."""
    basis = list(itertools.permutations(range(n)))
    rows = []
    for h in itertools.product((0, 1), repeat=n):
        nxt = 1
        asg = {}
        for i in range(n):
            size = 1 if h[i] else 2
            asg[i] = {tuple(range(nxt, nxt + size)): 1}
            nxt += size
        row = {}
        for j, m in enumerate(basis):
            val = evaluate({m: 1}, asg)
            (w, c), = val.items()
            row[j] = c
        rows.append(row)
    return rank_mod(rows, p)


# g_m by its definition ---------------------------------------------------------------

def g_m_expansion(m: int) -> dict:
    """{monomial of indices 1..m: Fraction} for sum over even T of (-2)^(-|T|/2) f_T."""
    out: dict = {}
    for t in range(0, m + 1, 2):
        for T in itertools.combinations(range(1, m + 1), t):
            lead = tuple(i for i in range(1, m + 1) if i not in T)
            coef = Fraction(-2) ** (-(t // 2))
            # product of commutators [a,b] = ab - ba, expanded pair by pair
            parts = [((), 1)]
            for a, b in zip(T[0::2], T[1::2]):
                parts = [(w + (a, b), c) for w, c in parts] + [(w + (b, a), -c) for w, c in parts]
            for w, c in parts:
                key = lead + w
                out[key] = out.get(key, 0) + coef * c
    return {k: v for k, v in out.items() if v}
