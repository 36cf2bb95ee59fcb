"""Named desk-scale verifications, one per generation or correspondence result.

Each entry builds a :class:`~zgrass.tideal.Report` from a small parameter set
(``k``, ``r``, ``p``, ``q``, ``n_max``, ``deg_max``, ``field``). The ids are the
arguments of ``zgrass verify``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .fields import QQ, GF, Field
from .families import (Ecan_generators, Einfinity_generators, Ek_star_generators, Pk_generators,
                       generators_for)
from .grading import GradedAlgebra, preset
from .tideal import (Report, SignatureSpace, gamma_signatures, identity_space,
                     multihomogeneous_signatures, multilinear_signatures, normal_form_check,
                     psi_check, quotient_transfer_check, verify_generation)


@dataclass
class Params:
    k: int = 1
    r: int = 3
    p: int = 3
    q: int = 5
    n_max: int = 4
    deg_max: int = 3
    field: Field = QQ
    rank: int = 24

    def degrees(self, lo: int = -1) -> list[int]:
        return list(range(lo, self.deg_max + 1))


def _char_field(P: Params) -> Field:
    if P.field.char == 0:
        return GF(3)
    return P.field


def _mh_signatures(P: Params, F: Field, degrees):
    c = F.char
    return multihomogeneous_signatures(3, degrees, total_max=5, exp_max=min(c, 3), field=F)


def ecan_char0(P: Params) -> Report:
    A = GradedAlgebra(preset("can"), P.rank, P.field)
    return verify_generation(A, Ecan_generators(P.field.char), multilinear_signatures(P.n_max, P.degrees()),
                             "E^can: graded identities generated by the three basic families")


def ecan_charp(P: Params) -> Report:
    F = _char_field(P)
    A = GradedAlgebra(preset("can"), P.rank, F)
    return normal_form_check(A, Ecan_generators(F.char), _mh_signatures(P, F, range(0, P.deg_max + 1)),
                             f"E^can over {F}: basic families plus x^p for x of even degree")


def einf_main(P: Params) -> Report:
    A = GradedAlgebra(preset("infinity"), P.rank, P.field)
    return verify_generation(A, Einfinity_generators(), multilinear_signatures(P.n_max, P.degrees()),
                             "E^inf: negative degrees and the triple commutator")


def ekstar_main(P: Params) -> Report:
    A = GradedAlgebra(preset("k_star", k=P.k), P.rank, P.field)
    degs = list(range(-1, max(P.deg_max, P.k + 1) + 1))
    return verify_generation(A, Ek_star_generators(P.k), multilinear_signatures(P.n_max, degs),
                             f"E^(k*) with k={P.k}: degrees outside 0..k and the triple commutator")


def einf_charp(P: Params) -> Report:
    F = _char_field(P)
    A = GradedAlgebra(preset("infinity"), P.rank, F)
    return normal_form_check(A, Einfinity_generators(F.char), _mh_signatures(P, F, range(0, P.deg_max + 1)),
                             f"E^inf over {F}: triple commutator plus x^p for positive degree")


def ekstar_charp(P: Params) -> Report:
    F = _char_field(P)
    A = GradedAlgebra(preset("k_star", k=P.k), P.rank, F)
    return normal_form_check(A, Ek_star_generators(P.k, F.char),
                             _mh_signatures(P, F, range(0, P.deg_max + 1)),
                             f"E^(k*) with k={P.k} over {F}: plus (x^t)^p when pt <= k")


def ek_main(P: Params) -> Report:
    A = GradedAlgebra(preset("k", k=P.k), P.rank, P.field)
    zdegs = list(range(1, P.deg_max + 1))
    sigs = gamma_signatures(3, 2, zdegs, n_max=P.n_max) + multilinear_signatures(P.n_max, P.degrees())
    return verify_generation(A, Pk_generators(P.k), sigs,
                             f"E^k with k={P.k}: the seven-item list P^k")


def r_infinity(P: Params) -> Report:
    g = preset("r_infinity", r=P.r)
    A = GradedAlgebra(g, P.rank, P.field)
    degs = sorted({-1, 0, 1} | {P.r * i for i in range(1, 4)})
    return verify_generation(A, generators_for(g, P.field.char), multilinear_signatures(P.n_max, degs),
                             f"E_(r)^(inf) with r={P.r}")


def _pq_degrees(P: Params) -> list[int]:
    return sorted({0, 1, P.p, P.q, P.p + P.q, 2 * P.q})


def pq_1_infinity(P: Params) -> Report:
    g = preset("pq_1_infinity", p=P.p, q=P.q)
    A = GradedAlgebra(g, P.rank, P.field)
    return verify_generation(A, generators_for(g, max_arity=P.n_max), multilinear_signatures(P.n_max, _pq_degrees(P)),
                             f"E_(p,q)^(1,inf) with (p,q)=({P.p},{P.q})")


def pq_k_infinity(P: Params) -> Report:
    g = preset("pq_k_infinity", p=P.p, q=P.q, k=P.k)
    A = GradedAlgebra(g, P.rank, P.field)
    return verify_generation(A, generators_for(g, max_arity=P.n_max), multilinear_signatures(P.n_max, _pq_degrees(P)),
                             f"E_(p,q)^(k,inf) with (p,q)=({P.p},{P.q}), k={P.k}")


def psi_einf(P: Params) -> Report:
    return psi_check(GradedAlgebra(preset("infinity"), P.rank, P.field), P.n_max)


def psi_ekstar(P: Params) -> Report:
    return psi_check(GradedAlgebra(preset("k_star", k=P.k), P.rank, P.field), P.n_max, weight_max=P.k)


def quotient_ek(P: Params) -> Report:
    A = GradedAlgebra(preset("k", k=P.k), P.rank, P.field)
    return quotient_transfer_check(A, Pk_generators(P.k), 2, P.degrees())


def codim_e(P: Params) -> Report:
    """Multilinear codimensions of the ungraded algebra against 2^(n-1)."""
    A = GradedAlgebra(preset("k_star", k=0), P.rank, P.field)
    rep = Report("multilinear codimensions of ungraded E", ["n", "dim V", "dim identities", "codim", "2^(n-1)",
                                                            "verdict"])
    for n in range(1, P.n_max + 1):
        S = SignatureSpace.multilinear([0] * n, P.field)
        ids = identity_space(A, S)
        codim = S.dim - ids.rank
        ok = codim == 2 ** (n - 1)
        rep.rows.append({"n": n, "dim V": S.dim, "dim identities": ids.rank, "codim": codim,
                         "2^(n-1)": 2 ** (n - 1), "ok": ok, "verdict": "equal" if ok else "DIFFERENT"})
    return rep


@dataclass(frozen=True)
class Theorem:
    id: str
    summary: str
    run: Callable[[Params], Report]


THEOREMS: dict[str, Theorem] = {t.id: t for t in [
    Theorem("Ecan-char0", "E^can, characteristic 0: three basic families generate", ecan_char0),
    Theorem("Ecan-charp", "E^can over F_p: basic families and x^p generate", ecan_charp),
    Theorem("Einf-main", "E^inf: negative degrees and [x1,x2,x3] generate", einf_main),
    Theorem("Ekstar-main", "E^(k*): degrees outside 0..k and [x1,x2,x3] generate", ekstar_main),
    Theorem("Einf-charp", "E^inf over F_p: normal forms with x^p", einf_charp),
    Theorem("Ekstar-charp", "E^(k*) over F_p: normal forms with (x^t)^p, pt <= k", ekstar_charp),
    Theorem("Ek-main", "E^k: the list P^k generates", ek_main),
    Theorem("r-infinity", "E_(r)^(inf): its identity list generates", r_infinity),
    Theorem("pq-1-infinity", "E_(p,q)^(1,inf): its identity list generates", pq_1_infinity),
    Theorem("pq-k-infinity", "E_(p,q)^(k,inf): its identity list generates", pq_k_infinity),
    Theorem("psi-Einf", "psi carries ungraded identities onto those of E^inf", psi_einf),
    Theorem("psi-Ekstar", "psi for E^(k*) at weights <= k", psi_ekstar),
    Theorem("quotient-Ek", "P^k projected mod 2 holds in the quotient Z_2-grading", quotient_ek),
    Theorem("codim-E", "ungraded multilinear codimension is 2^(n-1)", codim_e),
]}


def run_theorem(tid: str, params: Params | None = None) -> Report:
    if tid not in THEOREMS:
        raise KeyError(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}")
    return THEOREMS[tid].run(params or Params())
