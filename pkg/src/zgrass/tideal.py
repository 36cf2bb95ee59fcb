"""Identity spaces and consequence spans inside finite polynomial spaces.

A :class:`SignatureSpace` is the span of all monomials with a fixed multidegree
in a fixed list of variables (the multilinear space V_n when every exponent is
1). Inside it we compare two subspaces: the graded identities of an algebra,
and the consequences of a candidate generator list.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations, product
from typing import Callable, Iterable, Sequence

from . import kernels
from .checker import (_generic_expand, default_rank, realizable_parities, slot_coefficient,
                      slot_profiles, variable_options)
from .errors import BudgetExceeded, UnsupportedInput
from .families import Family
from .fields import QQ, Field
from .freealg import FreePoly, GVar, mono_key
from .grading import GradedAlgebra, preset, quotient
from .linalg import Subspace, kernel
from .rewrite import reduce_mod_I


# signature spaces --------------------------------------------------------------

def _arrangements(letters: Sequence) -> list[tuple]:
    """Distinct orderings of a multiset, in lexicographic order of positions."""
    out = []
    counts: dict = {}
    order = []
    for x in letters:
        if x not in counts:
            order.append(x)
            counts[x] = 0
        counts[x] += 1
    n = len(letters)

    def rec(acc):
        if len(acc) == n:
            out.append(tuple(acc))
            return
        for x in order:
            if counts[x]:
                counts[x] -= 1
                acc.append(x)
                rec(acc)
                acc.pop()
                counts[x] += 1

    rec([])
    return out


class SignatureSpace:
    """All monomials in ``variables`` with the given exponents."""

    def __init__(self, variables: Sequence[GVar], exponents: Sequence[int] | None = None,
                 field: Field = QQ):
        pairs = sorted(zip(variables, exponents or [1] * len(variables)))
        if len({v for v, _ in pairs}) != len(pairs):
            raise ValueError("variables must be distinct")
        if any(e < 1 for _, e in pairs):
            raise ValueError("exponents must be positive")
        self.variables = [v for v, _ in pairs]
        self.exponents = [e for _, e in pairs]
        self.field = field
        letters = [v for v, e in pairs for _ in range(e)]
        self.basis = _arrangements(letters)
        self.index = {m: i for i, m in enumerate(self.basis)}

    @classmethod
    def multilinear(cls, degs: Sequence[int], field: Field = QQ, prefix: str = "x") -> "SignatureSpace":
        return cls([GVar(f"{prefix}{i}", d) for i, d in enumerate(degs, 1)], None, field)

    @classmethod
    def gamma(cls, l: int, zdegs: Sequence[int], field: Field = QQ) -> "SignatureSpace":
        """Variables y1..yl of degree 0 and z1..zm of the given positive degrees."""
        vs = [GVar(f"y{i}", 0) for i in range(1, l + 1)] + \
             [GVar(f"z{i}", d) for i, d in enumerate(zdegs, 1)]
        return cls(vs, None, field)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_multilinear(self) -> bool:
        return all(e == 1 for e in self.exponents)

    @property
    def n(self) -> int:
        return len(self.variables)

    def label(self) -> str:
        parts = [str(v) + (f"^{e}" if e > 1 else "") for v, e in zip(self.variables, self.exponents)]
        return "(" + ", ".join(parts) + ")"

    def vector(self, f: FreePoly) -> dict:
        out = {}
        for m, c in f.items():
            if m not in self.index:
                raise ValueError(f"monomial {m} is outside the signature space {self.label()}")
            out[self.index[m]] = c
        return out

    def poly(self, vec: dict) -> FreePoly:
        return FreePoly({self.basis[j]: c for j, c in vec.items()}, self.field)

    def with_field(self, field: Field) -> "SignatureSpace":
        return SignatureSpace(self.variables, self.exponents, field)


# identity spaces --------------------------------------------------------------------

def identity_space(A: GradedAlgebra, S: SignatureSpace) -> Subspace:
    """Graded identities of ``A`` inside ``S``: parity profiles if multilinear, slot profiles otherwise."""
    F = A.field
    if S.field != F:
        raise UnsupportedInput("signature space and algebra are over different fields")
    g = A.grading
    rank = None if g.is_list else A.rank
    whole = Subspace(F, S.dim, ({j: 1} for j in range(S.dim)))
    if any(not variable_options(v.degree, g, rank) for v in S.variables):
        return whole
    if S.is_multilinear:
        hs = sorted(realizable_parities([v.degree for v in S.variables], g, rank))
        if not hs:
            return whole
        pos = {v: i for i, v in enumerate(S.variables)}
        perms = [tuple(pos[v] for v in m) for m in S.basis]
        masks = [sum(1 << i for i, b in enumerate(h) if b) for h in hs]
        signs = kernels.perm_signs(perms, masks)
        rows = [{j: signs[j][r] for j in range(S.dim)} for r in range(len(hs))]
        return kernel(F, rows, S.dim)
    return _profile_identity_space(A, S)


def _profile_identity_space(A: GradedAlgebra, S: SignatureSpace) -> Subspace:
    F = A.field
    g = A.grading
    keys = sorted(slot_profiles(S.variables, S.exponents, g, None if g.is_list else A.rank))
    rows = ({j: slot_coefficient(m, S.variables, k) for j, m in enumerate(S.basis)} for k in keys)
    return kernel(F, rows, S.dim)


def generic_identity_space(A: GradedAlgebra, S: SignatureSpace, budget: int = 2_000_000) -> Subspace:
    """Identity space from generic elements at the default finite rank (slow cross-check)."""
    F = A.field
    probe = FreePoly({m: 1 for m in S.basis}, F)
    N, L, _ = default_rank(probe, A)
    B = A.with_rank(N)
    comps = {}
    cid = 0
    for v in S.variables:
        ws = B.component_basis(v.degree, L)
        comps[v] = [(w, cid + i) for i, w in enumerate(ws)]
        cid += len(ws)
    rows: dict = {}
    for j, m in enumerate(S.basis):
        ev = _generic_expand(FreePoly({m: 1}, F), comps, budget)
        for key, a in ev.items():
            a = F.norm(a)
            if a:
                rows.setdefault(key, {})[j] = a
    return kernel(F, rows.values(), S.dim)


# consequence spans ---------------------------------------------------------------------

def _cuts(length: int, s: int, empty_ok: Sequence[bool]):
    """Cut points ``0 <= c_0 <= ... <= c_s <= length`` (piece j is ``w[c_{j-1}:c_j]``)."""
    def rec(j, start, acc):
        if j == s:
            yield tuple(acc)
            return
        lo = start if empty_ok[j] else start + 1
        for c in range(lo, length + 1):
            acc.append(c)
            yield from rec(j + 1, c, acc)
            acc.pop()

    for c0 in range(length + 1):
        yield from rec(0, c0, [c0])


class _Instances:
    """Cache of family instantiations keyed by slot degrees, as (slot-index tuple, coef) lists."""

    def __init__(self, field: Field):
        self.field = field
        self.cache: dict = {}

    def get(self, fam: Family, degs: tuple):
        key = (fam.name, id(fam), degs)
        if key not in self.cache:
            if not fam.accepts(degs):
                self.cache[key] = None
            else:
                names = fam.names()
                vs = [GVar(n, d) for n, d in zip(names, degs)]
                g = fam.build(vs, self.field)
                pos = {v: i for i, v in enumerate(vs)}
                self.cache[key] = [(tuple(pos[v] for v in m), c) for m, c in g.items()]
        return self.cache[key]


def consequence_rows(G: Sequence[Family], S: SignatureSpace, max_piece: int | None = None) -> Iterable[dict]:
    """Vectors ``u0 * g(m_1, ..., m_s) * u1`` lying in ``S``.

    Every tuple of monomials (u0, m_1, ..., m_s, u1) whose concatenation is a
    basis monomial is visited once through the cut points of that monomial.
    ``m_j`` may be empty (the unit) only in a degree-0 slot. Power families are
    partially linearized: ``x^e`` yields the sum over distinct arrangements of
    the multiset of pieces.
    """
    F = S.field
    inst = _Instances(F)
    basis = S.basis
    index = S.index
    for fam in G:
        s = fam.arity if fam.kind == "multilinear" else fam.exponent
        for w in basis:
            L = len(w)
            for cuts in _cuts(L, s, [True] * s):
                pieces = [w[cuts[j]:cuts[j + 1]] for j in range(s)]
                if max_piece is not None and any(len(p) > max_piece for p in pieces):
                    continue
                degs = tuple(sum(v.degree for v in p) for p in pieces)
                if any(not p and d != 0 for p, d in zip(pieces, degs)):
                    continue
                u0, u1 = w[:cuts[0]], w[cuts[-1]:]
                if fam.kind == "multilinear":
                    if any(not p for p, d in zip(pieces, degs) if d != 0):
                        continue
                    terms = inst.get(fam, degs)
                    if terms is None:
                        continue
                    vec: dict = {}
                    for slots, c in terms:
                        m = u0 + tuple(v for j in slots for v in pieces[j]) + u1
                        j = index[m]
                        vec[j] = vec.get(j, 0) + c
                else:
                    if len(set(degs)) != 1 or not fam.accepts((degs[0],)):
                        continue
                    # distinct arrangements of the multiset of pieces
                    seen = set()
                    vec = {}
                    for arr in permutations(range(s)):
                        key = tuple(pieces[j] for j in arr)
                        if key in seen:
                            continue
                        seen.add(key)
                        m = u0 + tuple(v for p in key for v in p) + u1
                        vec[index[m]] = vec.get(index[m], 0) + 1
                vec = {j: F.norm(c) for j, c in vec.items() if F.norm(c)}
                if vec:
                    yield vec


def consequence_span(G: Sequence[Family], S: SignatureSpace, max_piece: int | None = None,
                     stop_at: int | None = None) -> Subspace:
    """Row-reduced span of :func:`consequence_rows`; stops early once ``stop_at`` is reached."""
    sp = Subspace(S.field, S.dim)
    for vec in consequence_rows(G, S, max_piece):
        sp.add(vec)
        if stop_at is not None and sp.rank >= stop_at:
            break
    return sp


# reports -------------------------------------------------------------------------------

@dataclass
class Report:
    title: str
    columns: list
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.get("ok", True) for r in self.rows)

    def add(self, **row):
        self.rows.append(row)

    def to_text(self) -> str:
        cols = self.columns
        table = [[str(r.get(c, "")) for c in cols] for r in self.rows]
        widths = [max([len(c)] + [len(t[i]) for t in table]) for i, c in enumerate(cols)]
        line = lambda cells: "  ".join(x.ljust(w) for x, w in zip(cells, widths)).rstrip()
        out = [self.title, line(cols), line(["-" * w for w in widths])]
        out += [line(t) for t in table]
        for r in self.rows:
            if r.get("gap"):
                out.append(f"gap at {r.get('signature')}: {r['gap']}")
        out += self.notes
        out.append("verdict: " + ("verified" if self.ok else "FAILED"))
        return "\n".join(out)

    def to_json(self) -> dict:
        return {"title": self.title, "ok": self.ok, "rows": self.rows, "notes": self.notes}


def compare(A: GradedAlgebra, G: Sequence[Family], S: SignatureSpace, early_stop: bool = True) -> dict:
    ids = identity_space(A, S)
    sp = consequence_span(G, S, stop_at=ids.rank if early_stop else None)
    contained = sp.issubset(ids)
    equal = contained and sp.rank == ids.rank
    row = {"signature": S.label(), "dim V": S.dim, "dim span": sp.rank, "dim identities": ids.rank,
           "ok": equal}
    if not contained:
        bad = sp.gap(ids)
        row["gap"] = "span not contained in identities: " + str(S.poly(bad))
    elif not equal:
        row["gap"] = str(S.poly(ids.gap(sp)))
    return row


def verify_generation(A: GradedAlgebra, G: Sequence[Family], signatures: Iterable[SignatureSpace],
                      title: str = "", early_stop: bool = True) -> Report:
    """Compare consequence span and identity space on each signature."""
    rep = Report(title or f"generation check for {A.grading.describe()}",
                 ["signature", "dim V", "dim span", "dim identities", "verdict"])
    for S in signatures:
        row = compare(A, G, S.with_field(A.field) if S.field != A.field else S, early_stop)
        row["verdict"] = "equal" if row["ok"] else "DIFFERENT"
        rep.rows.append(row)
    return rep


# signature families ------------------------------------------------------------------

def multilinear_signatures(n_max: int, degrees: Sequence[int], n_min: int = 1,
                           field: Field = QQ) -> list[SignatureSpace]:
    out = []
    for n in range(n_min, n_max + 1):
        for degs in combinations_with_replacement(sorted(degrees), n):
            out.append(SignatureSpace.multilinear(degs, field))
    return out


def gamma_signatures(l_max: int, m_max: int, zdegrees: Sequence[int], n_max: int | None = None,
                     field: Field = QQ) -> list[SignatureSpace]:
    """Variables y1..yl (degree 0) and z1..zm of positive degrees, as in the spaces Gamma_{l,m}."""
    out = []
    for l in range(0, l_max + 1):
        for m in range(0, m_max + 1):
            if l + m == 0 or (n_max is not None and l + m > n_max):
                continue
            for zd in combinations_with_replacement(sorted(zdegrees), m):
                out.append(SignatureSpace.gamma(l, zd, field))
    return out


# the psi correspondence ----------------------------------------------------------------

def psi_variables(ls: Sequence[int], m: int) -> list[GVar]:
    """Targets in order: l_1 variables of degree 1, ..., l_t of degree t, then m of degree 0."""
    out = []
    for t, l in enumerate(ls, 1):
        out += [GVar(f"x{t}_{j}", t) for j in range(1, l + 1)]
    out += [GVar(f"z{j}", 0) for j in range(1, m + 1)]
    return out


def psi(f: FreePoly, ls: Sequence[int], m: int) -> FreePoly:
    """Relabel the variables of ``f`` (in their sorted order) as graded variables."""
    vs = f.variables()
    n = sum(ls) + m
    if len(vs) != n:
        raise ValueError(f"arity mismatch: f has {len(vs)} variables, split needs {n}")
    return f.rename(dict(zip(vs, psi_variables(ls, m))))


def psi_inverse(f: FreePoly, n_vars: Sequence[GVar], ls: Sequence[int], m: int) -> FreePoly:
    return f.rename(dict(zip(psi_variables(ls, m), n_vars)))


def _splits(n: int, max_t: int, weight_max: int | None = None):
    """All (l_1..l_T, m) with T = max_t, sum = n, optional weight bound sum i*l_i."""
    for m in range(n, -1, -1):
        rest = n - m

        def rec(i, left, acc):
            if i > max_t:
                if left == 0:
                    yield tuple(acc)
                return
            for l in range(left, -1, -1):
                if weight_max is not None and sum(j * x for j, x in enumerate(acc, 1)) + i * l > weight_max:
                    continue
                yield from rec(i + 1, left - l, acc + [l])

        for ls in rec(1, rest, []):
            yield ls, m


def psi_check(A: GradedAlgebra, n_max: int, weight_max: int | None = None, max_t: int | None = None) -> Report:
    """psi maps the ungraded identities of V_n onto the graded identities of each target space."""
    F = A.field
    ungraded = GradedAlgebra(preset("k_star", k=0), A.rank, F)
    rep = Report(f"psi correspondence for {A.grading.describe()}",
                 ["split", "dim V", "dim psi(Id)", "dim identities", "verdict"])
    for n in range(1, n_max + 1):
        src = SignatureSpace([GVar(f"x{i}", 0) for i in range(1, n + 1)], None, F)
        src_ids = identity_space(ungraded, src)
        for ls, m in _splits(n, max_t if max_t is not None else n, weight_max):
            tgt = SignatureSpace(psi_variables(ls, m), None, F)
            image = Subspace(F, tgt.dim, (tgt.vector(psi(src.poly(r), ls, m)) for r in src_ids.basis()))
            ids = identity_space(A, tgt)
            ok = image == ids
            row = {"split": f"l={list(ls)}, m={m}", "dim V": tgt.dim, "dim psi(Id)": image.rank,
                   "dim identities": ids.rank, "ok": ok, "verdict": "equal" if ok else "DIFFERENT"}
            if not ok:
                gap = ids.gap(image) or image.gap(ids)
                row["gap"] = str(tgt.poly(gap))
            rep.rows.append(row)
    return rep


# characteristic p -------------------------------------------------------------------

def power_rule(grading, char: int) -> Callable[[GVar, int], bool] | None:
    """``kill(x, e)``: whether ``x^e`` lies in the T-ideal by the grading's power identities."""
    name = grading.name
    prm = dict(grading.params)
    if name == "k_star":
        k = prm["k"]
        return lambda v, e: v.degree >= 1 and e >= char and char * v.degree <= k
    if name == "infinity":
        return lambda v, e: v.degree >= 1 and e >= char
    return None


def _normal_forms_I(S: SignatureSpace, A: GradedAlgebra, char: int) -> list[FreePoly]:
    """Distinct reduced forms (modulo I and the power rules) of the basis monomials."""
    kill = power_rule(A.grading, char)
    g = A.grading
    if any(not variable_options(v.degree, g) for v in S.variables):
        return []
    if not variable_options(sum(v.degree * e for v, e in zip(S.variables, S.exponents)), g):
        return []
    keys = {}
    for m in S.basis:
        red = reduce_mod_I(FreePoly({m: 1}, S.field), multihomogeneous=True, kill_power=kill)
        for key, _ in red.items():
            keys[key] = None
    from .rewrite import ProperForm
    return [ProperForm({k: 1}, S.field).to_poly() for k in keys]


def _normal_forms_can(S: SignatureSpace, A: GradedAlgebra, char: int) -> list[FreePoly]:
    """Canonical-grading normal form: one sorted monomial unless a rule kills it."""
    r = dict(A.grading.params).get("r", 1) if A.grading.name == "r_infinity" else 1
    for v, e in zip(S.variables, S.exponents):
        d = v.degree
        if d < 0 or d % r:
            return []
        q = d // r
        if q % 2 == 1 and e >= 2:
            return []
        if q % 2 == 0 and q > 0 and char and e >= char:
            return []
    lead = sorted(S.variables, key=lambda v: ((v.degree // r) % 2, v.key()))
    mono = tuple(v for v in lead for _ in range(S.exponents[S.variables.index(v)]))
    return [FreePoly({mono: 1}, S.field)]


def normal_form_check(A: GradedAlgebra, G: Sequence[Family], signatures: Iterable[SignatureSpace],
                      title: str = "") -> Report:
    """Multihomogeneous check mirroring the char-p normal-form argument.

    Per signature: (1) the consequence span equals the identity space;
    (2) the candidate normal forms are independent modulo identities and their
    number is the codimension.
    """
    F = A.field
    char = F.char
    rep = Report(title or f"normal-form check for {A.grading.describe()} over {F}",
                 ["signature", "dim V", "dim span", "dim identities", "normal forms", "verdict"])
    for S in signatures:
        S = S.with_field(F) if S.field != F else S
        ids = identity_space(A, S)
        sp = consequence_span(G, S, stop_at=ids.rank)
        contained = sp.issubset(ids)
        if A.grading.name in ("can", "r_infinity"):
            nfs = _normal_forms_can(S, A, char)
        else:
            nfs = _normal_forms_I(S, A, char)
        ext = ids.copy()
        indep = all(ext.add(S.vector(p)) for p in nfs)
        codim = S.dim - ids.rank
        ok = contained and sp.rank == ids.rank and indep and len(nfs) == codim
        row = {"signature": S.label(), "dim V": S.dim, "dim span": sp.rank, "dim identities": ids.rank,
               "normal forms": len(nfs), "ok": ok, "verdict": "equal" if ok else "DIFFERENT"}
        if not ok and contained and sp.rank < ids.rank:
            row["gap"] = str(S.poly(ids.gap(sp)))
        rep.rows.append(row)
    return rep


def multihomogeneous_signatures(nvars_max: int, degrees: Sequence[int], total_max: int,
                                exp_max: int, field: Field = QQ) -> list[SignatureSpace]:
    """Signatures with at most ``nvars_max`` variables, exponents <= ``exp_max``, total degree <= ``total_max``."""
    out = []
    for nv in range(1, nvars_max + 1):
        for degs in combinations_with_replacement(sorted(degrees), nv):
            def rec(i, acc):
                if i == nv:
                    if sum(acc) <= total_max:
                        out.append(SignatureSpace([GVar(f"x{j}", d) for j, d in enumerate(degs, 1)],
                                                  acc, field))
                    return
                for e in range(1, exp_max + 1):
                    if sum(acc) + e > total_max:
                        break
                    rec(i + 1, acc + [e])
            rec(0, [])
    return out


# quotient transfer ----------------------------------------------------------------------

def project(f: FreePoly, m: int) -> FreePoly:
    """Reduce every variable degree modulo ``m``."""
    return f.rename({v: GVar(v.name, v.degree % m) for v in f.variables()})


def quotient_transfer_check(A: GradedAlgebra, G: Sequence[Family], m: int, degrees: Sequence[int],
                            max_arity: int = 6) -> Report:
    """Each instantiated generator, projected mod ``m``, is an identity of the quotient grading.

    If some variable has an empty Z-component it may only be sent to 0 (the
    assignment is restricted to the original components) and the projected
    generator vanishes trivially.
    """
    from .checker import is_identity

    Q = GradedAlgebra(quotient(A.grading, m), A.rank, A.field)
    rep = Report(f"quotient transfer {A.grading.describe()} -> mod {m}",
                 ["generator", "degrees", "reading", "verdict"])
    for fam in G:
        if fam.arity > max_arity:
            continue
        for degs in _degree_tuples(fam, degrees):
            f = fam.instantiate(degs, A.field)
            if any(not variable_options(d, A.grading) for d in degs):
                reading, ok = "restricted (empty component)", True
            else:
                reading = "full quotient components"
                ok = is_identity(project(f, m), Q).identity
            rep.rows.append({"generator": fam.name, "degrees": list(degs), "reading": reading,
                             "ok": ok, "verdict": "identity" if ok else "NOT AN IDENTITY"})
    return rep


def _degree_tuples(fam: Family, degrees: Sequence[int]):
    for degs in product(sorted(degrees), repeat=fam.arity):
        if fam.accepts(degs):
            yield degs
