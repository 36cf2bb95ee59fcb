"""Acceptance suite: nine criteria, exact arithmetic, zero tolerance.

Each criterion is a function returning ``(ok, detail)``. Under pytest every
test prints one ``criterion N: PASS|FAIL`` line; ``python tests/test_acceptance.py``
prints the same lines without pytest.
"""
from __future__ import annotations

import itertools
import math
import os
import random
import sys
import time

sys.path.insert(0, os.path.dirname(__file__))

import pytest

import oracles
from zgrass.checker import is_identity, explicit_witness
from zgrass.families import (Ecan_generators, Einfinity_generators, Ek_star_generators, Pk_generators,
                             g_m, g_m_summands, generators_for, t_2n)
from zgrass.fields import GF, QQ
from zgrass.freealg import FreePoly, GVar, substitute
from zgrass.grading import GradedAlgebra, preset
from zgrass.grassmann import Element
from zgrass.kernels import mul_words
from zgrass.rewrite import reduce_mod_I
from zgrass.theorems import Params, run_theorem
from zgrass.tideal import (SignatureSpace, identity_space, multihomogeneous_signatures, normal_form_check,
                           psi_check, quotient_transfer_check)

WINDOW = list(range(-1, 5))


def _instances(fam, degrees, field=QQ):
    for degs in itertools.product(degrees, repeat=fam.arity):
        if fam.accepts(degs):
            yield degs, fam.instantiate(degs, field)


def _certified(v) -> bool:
    return v.identity and ("certificate" in v.certificate or v.certificate.startswith("component empty"))


# 1 -------------------------------------------------------------------------------------

def criterion_1():
    n = 0
    for u in range(1 << 8):
        tu = oracles.mask_to_tuple(u)
        for v in range(1 << 8):
            s, w = mul_words(u, v)
            t = oracles.bubble_sign(tu, oracles.mask_to_tuple(v))
            if s != t or (t and w != u | v):
                return False, f"sign mismatch at {u:b} * {v:b}"
            n += 1
    rng = random.Random(2024)

    def rand_elem():
        terms = {rng.randrange(1 << 10): rng.randint(-3, 3) for _ in range(rng.randint(1, 6))}
        return Element(terms, QQ, 10)

    for _ in range(1000):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        if (a * b) * c != a * (b * c):
            return False, "associativity fails"
        ref = oracles.mul({oracles.mask_to_tuple(w): x for w, x in a.items()},
                          {oracles.mask_to_tuple(w): x for w, x in b.items()})
        if {oracles.tuple_to_mask(t): x for t, x in ref.items()} != dict((a * b).items()):
            return False, "product differs from the tuple oracle"
    return True, f"{n} word pairs at rank 8, 1000 random triples at rank 10"


# 2 -------------------------------------------------------------------------------------

def _suite(A, fams, degrees):
    count = 0
    for fam in fams:
        for degs, f in _instances(fam, degrees, A.field):
            v = is_identity(f, A)
            if not _certified(v):
                return count, f"{fam.name}{list(degs)}: {v.certificate}"
            count += 1
    return count, None


def criterion_2():
    jobs = [
        (GradedAlgebra(preset("can")), Ecan_generators(), WINDOW),
        (GradedAlgebra(preset("infinity")), Einfinity_generators(), WINDOW),
    ]
    for k in (1, 2, 3):
        jobs.append((GradedAlgebra(preset("k_star", k=k)), Ek_star_generators(k), WINDOW))
        jobs.append((GradedAlgebra(preset("k", k=k)), Pk_generators(k), WINDOW))
    g = preset("r_infinity", r=3)
    jobs.append((GradedAlgebra(g), generators_for(g), [-1, 0, 1, 3, 6, 9]))
    pq_degs = [0, 1, 3, 5, 6, 8, 10]
    for g in (preset("pq_1_infinity", p=3, q=5), preset("pq_k_infinity", p=3, q=5, k=2)):
        jobs.append((GradedAlgebra(g), generators_for(g), pq_degs))
    total = 0
    for A, fams, degs in jobs:
        n, err = _suite(A, fams, degs)
        total += n
        if err:
            return False, f"{A.grading.describe()}: {err}"
    return True, f"{total} generator instances certified over {len(jobs)} gradings"


# 3 -------------------------------------------------------------------------------------

def _central_exps(k):
    """Lists of (degree i, exponent r) with sum i*r <= k, sorted to skip repeats."""
    pairs = [(i, r) for i in range(1, k + 1) for r in range(1, k + 1) if i * r <= k]
    for size in range(1, k + 1):
        for combo in itertools.combinations_with_replacement(pairs, size):
            if sum(i * r for i, r in combo) <= k:
                yield list(combo)


def criterion_3():
    count = 0
    for n in (1, 2):
        for k in range(0, 5):
            A = GradedAlgebra(preset("k_star", k=k))
            f = t_2n(n)
            v = is_identity(f, A)
            if v.identity or not v.witness.verify(f, A):
                return False, f"t_2n n={n} k={k}: checker found no witness"
            w = explicit_witness("t2n", n=n, k=k)
            (word, coef), = w.value.items()
            if coef != 2 ** n or oracles.mask_to_tuple(word) != tuple(range(k + 1, k + 2 * n + 1)):
                return False, f"t_2n n={n} k={k}: value {w.value}"
            # independent evaluation: z_i -> e_{k+i}
            asg = {x: {(k + i,): 1} for i, x in enumerate(f.variables(), 1)}
            ref = oracles.evaluate(dict(f.items()), asg)
            if ref != {tuple(range(k + 1, k + 2 * n + 1)): 2 ** n}:
                return False, f"t_2n oracle disagrees at n={n} k={k}"
            count += 1
    F5 = GF(5)
    for k in range(1, 5):
        A = GradedAlgebra(preset("k_star", k=k), 24, F5)
        for exps in _central_exps(k):
            w = explicit_witness("central_powers", A, k=k, exps=exps)
            coef = math.prod(math.factorial(r) for _, r in exps)
            asg = {x: {oracles.mask_to_tuple(u): 1 for u in val.words()} for x, val in w.assignment.items()}
            mono = tuple(x for x, (_, r) in zip(w.assignment, exps) for _ in range(r))
            ref = oracles.evaluate({mono: 1}, asg, 5)
            prod_words = {(): 1}
            for x in w.assignment:
                for u in sorted(asg[x]):
                    prod_words = oracles.mul(prod_words, {u: 1})
            expect = {t: c * coef % 5 for t, c in prod_words.items() if c * coef % 5}
            if not expect or ref != expect:
                return False, f"central powers k={k} exps={exps}: {ref} != {expect}"
            got = {oracles.mask_to_tuple(u): int(c) for u, c in w.value.items()}
            if got != expect:
                return False, f"central powers k={k} exps={exps}: package value {w.value}"
            count += 1
    return True, f"{count} evaluations with exact values"


# 4 -------------------------------------------------------------------------------------

def _theorem_ok(tid, **kw):
    rep = run_theorem(tid, Params(**kw))
    return rep.ok, len(rep.rows)


def criterion_4():
    runs = [("Ecan-char0", {}), ("Einf-main", {})]
    runs += [("Ekstar-main", {"k": k}) for k in (1, 2, 3)]
    runs += [("Ek-main", {"k": k}) for k in (1, 2)]
    runs += [("r-infinity", {"r": 3}), ("pq-1-infinity", {"p": 3, "q": 5}),
             ("pq-k-infinity", {"p": 3, "q": 5, "k": 2})]
    rows = 0
    for tid, kw in runs:
        ok, n = _theorem_ok(tid, **kw)
        rows += n
        if not ok:
            return False, f"{tid} {kw} reports a dimension gap"
    return True, f"{len(runs)} generation runs, {rows} signatures with span = identities"


# 5 -------------------------------------------------------------------------------------

def criterion_5():
    checks = 0
    for p in (3, 5):
        F = GF(p)
        A = GradedAlgebra(preset("can"), 24, F)
        for d in (2, 4):
            f = FreePoly.var(GVar("x", d), F) ** p
            if not _certified(is_identity(f, A)):
                return False, f"(x@{d})^{p} not certified over E^can"
            checks += 1
        # the exponent p is sharp for positive even degree
        if is_identity(FreePoly.var(GVar("x", 2), F) ** (p - 1), A).identity:
            return False, f"(x@2)^{p - 1} is wrongly an identity"
    F3 = GF(3)
    A = GradedAlgebra(preset("k_star", k=6), 24, F3)
    for t in (1, 2):
        if not _certified(is_identity(FreePoly.var(GVar("x", t), F3) ** 3, A)):
            return False, f"(x@{t})^3 over E^(6*)"
        checks += 1
    if is_identity(FreePoly.var(GVar("x", 1), F3) ** 2, A).identity:
        return False, "(x@1)^2 is wrongly an identity of E^(6*)"
    for p in (3, 5):
        F = GF(p)
        for name, kw in (("can", {}), ("infinity", {}), ("k_star", {"k": 3}), ("k_star", {"k": 6})):
            g = preset(name, **kw)
            A = GradedAlgebra(g, 24, F)
            sigs = multihomogeneous_signatures(3, range(0, 4), total_max=5, exp_max=p - 1, field=F)
            rep = normal_form_check(A, generators_for(g, p), sigs)
            if not rep.ok:
                return False, f"normal forms for {g.describe()} over F_{p}"
            checks += len(rep.rows)
    return True, f"{checks} power identities and normal-form signatures"


# 6 -------------------------------------------------------------------------------------

def criterion_6():
    a = psi_check(GradedAlgebra(preset("infinity")), 4)
    b = psi_check(GradedAlgebra(preset("k_star", k=3)), 4, weight_max=3)
    if not (a.ok and b.ok):
        return False, "psi image differs from the graded identity space"
    return True, f"{len(a.rows)} splits for E^inf, {len(b.rows)} for E^(3*)"


# 7 -------------------------------------------------------------------------------------

def criterion_7():
    rows = 0
    for k in (1, 2, 3):
        rep = quotient_transfer_check(GradedAlgebra(preset("k", k=k)), Pk_generators(k), 2, WINDOW)
        if not rep.ok:
            bad = next(r for r in rep.rows if not r["ok"])
            return False, f"k={k}: {bad['generator']} {bad['degrees']}"
        rows += len(rep.rows)
    return True, f"{rows} projected generator instances hold in E_k"


# 8 -------------------------------------------------------------------------------------

PRESET_ARGS = [("can", {}), ("k", {"k": 2}), ("k_star", {"k": 2}), ("infinity", {}),
               ("r_infinity", {"r": 2}), ("pq_1_infinity", {"p": 3, "q": 5}),
               ("pq_k_infinity", {"p": 3, "q": 5, "k": 2}), ("index", {})]


def _random_multilinear(rng, degrees):
    n = rng.randint(1, 5)
    vs = [GVar(f"x{i}", rng.choice(degrees)) for i in range(1, n + 1)]
    perms = list(itertools.permutations(vs))
    terms = {tuple(m): rng.randint(-4, 4) for m in rng.sample(perms, min(len(perms), rng.randint(1, 8)))}
    return FreePoly(terms, QQ)


def _random_homogeneous(rng, A, d):
    basis = A.component_basis(d, max_len=4)
    pick = rng.sample(basis, min(len(basis), 3))
    return Element({w: rng.randint(-3, 3) or 1 for w in pick}, A.field, A.rank)


def criterion_8():
    rng = random.Random(8)
    per = 125
    for name, kw in PRESET_ARGS:
        A = GradedAlgebra(preset(name, **kw), 10, QQ)
        degrees = [d for d in range(-1, 11) if A.component_basis(d, max_len=4)]
        for _ in range(per):
            f = _random_multilinear(rng, degrees)
            asg = {v: _random_homogeneous(rng, A, v.degree) for v in f.variables()}
            lhs = substitute(f, asg, A)
            rhs = substitute(reduce_mod_I(f).to_poly(), asg, A)
            if lhs != rhs:
                return False, f"{name}: f={f}"
            ref = oracles.evaluate(dict(f.items()),
                                   {v: {oracles.mask_to_tuple(w): c for w, c in x.items()} for v, x in asg.items()})
            if {oracles.tuple_to_mask(t): c for t, c in ref.items()} != dict(lhs.items()):
                return False, f"{name}: substitute differs from the tuple oracle"
    for m in range(1, 9):
        if len(g_m_summands(m)) != 2 ** (m - 1):
            return False, f"g_{m} has {len(g_m_summands(m))} summands"
        ref = oracles.g_m_expansion(m)
        got = {tuple(int(v.name[1:]) for v in mono): c for mono, c in g_m(m).items()}
        if got != ref:
            return False, f"g_{m} expansion differs from its definition"
    return True, f"{per * len(PRESET_ARGS)} random polynomials over {len(PRESET_ARGS)} gradings; g_m for m <= 8"


# 9 -------------------------------------------------------------------------------------

def criterion_9():
    A = GradedAlgebra(preset("k_star", k=0))
    got = []
    for n in range(1, 7):
        S = SignatureSpace.multilinear([0] * n)
        codim = S.dim - identity_space(A, S).rank
        ref = oracles.parity_codim(n)
        if not codim == ref == 2 ** (n - 1):
            return False, f"n={n}: package {codim}, oracle {ref}"
        got.append(codim)
    return True, "codimensions " + ", ".join(map(str, got))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _run(i):
    t = time.perf_counter()
    ok, detail = CRITERIA[i - 1]()
    return ok, f"criterion {i}: {'PASS' if ok else 'FAIL'} ({detail}; {time.perf_counter() - t:.1f}s)"


@pytest.mark.parametrize("i", range(1, 10))
def test_criterion(i, capsys):
    ok, line = _run(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [_run(i) for i in range(1, 10)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
