"""Named polynomial families and the generator lists attached to each grading.

A generator list is a sequence of :class:`Family` objects. A family stands for
"this polynomial, for every admissible choice of variable degrees": ``accepts``
decides admissibility of a degree tuple and ``build`` instantiates the
polynomial on given variables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .errors import UnsupportedInput
from .fields import QQ, Field
from .freealg import FreePoly, GVar, comm, product
from .grading import pq_class, pq_decompose


def _vars(prefix: str, degs: Sequence[int]) -> list[GVar]:
    return [GVar(f"{prefix}{i}", d) for i, d in enumerate(degs, 1)]


def _v(x: GVar, field: Field) -> FreePoly:
    return FreePoly.var(x, field)


def _comm_chain(pairs, field: Field) -> FreePoly:
    return product((comm(_v(a, field), _v(b, field)) for a, b in pairs), field)


# single polynomials ---------------------------------------------------------

def triple_comm(a: FreePoly, b: FreePoly, c: FreePoly) -> FreePoly:
    return comm(a, b, c)


def t_2n(n: int, degs: Sequence[int] | None = None, field: Field = QQ) -> FreePoly:
    """``[z1,z2][z3,z4]...[z_{2n-1},z_{2n}]``, all degrees 0 unless given."""
    if n < 1:
        raise ValueError("t_2n needs n >= 1")
    degs = [0] * (2 * n) if degs is None else list(degs)
    if len(degs) != 2 * n:
        raise ValueError(f"t_2n({n}) needs {2 * n} degrees, got {len(degs)}")
    zs = _vars("z", degs)
    return _comm_chain(zip(zs[0::2], zs[1::2]), field)


def f_T(T: Sequence[int], degs: Sequence[int], field: Field = QQ, zs: Sequence[GVar] | None = None) -> FreePoly:
    """``z_{i1}...z_{ir}[z_{j1},z_{j2}]...[z_{j(t-1)},z_{jt}]`` with ``T = {j1 < ... < jt}``, |T| even."""
    m = len(degs) if zs is None else len(zs)
    zs = _vars("z", degs) if zs is None else list(zs)
    T = sorted(set(T))
    if len(T) % 2:
        raise ValueError("f_T needs |T| even")
    if any(j < 1 or j > m for j in T):
        raise ValueError(f"T must be a subset of 1..{m}")
    lead = [zs[i - 1] for i in range(1, m + 1) if i not in T]
    tail = [zs[j - 1] for j in T]
    return FreePoly.monomial(lead, 1, field) * _comm_chain(zip(tail[0::2], tail[1::2]), field)


def f_T_prime(T: Sequence[int], degs: Sequence[int], last: GVar, field: Field = QQ,
              zs: Sequence[GVar] | None = None) -> FreePoly:
    """``z_{i1}...z_{ir}[z_{j1},z_{j2}]...[z_{jt},last]`` with |T| odd.

    ``last`` is the even-degree variable ``z_m`` or the degree-0 variable ``y``.
    """
    zs = _vars("z", degs) if zs is None else list(zs)
    m = len(zs)
    T = sorted(set(T))
    if len(T) % 2 == 0:
        raise ValueError("f_T' needs |T| odd")
    if any(j < 1 or j > m for j in T):
        raise ValueError(f"T must be a subset of 1..{m}")
    lead = [zs[i - 1] for i in range(1, m + 1) if i not in T]
    tail = [zs[j - 1] for j in T] + [last]
    return FreePoly.monomial(lead, 1, field) * _comm_chain(zip(tail[0::2], tail[1::2]), field)


def g_m_summands(m: int, degs: Sequence[int] | None = None, field: Field = QQ,
                 zs: Sequence[GVar] | None = None) -> list[tuple[Fraction, FreePoly]]:
    """The pairs ``((-2)^(-|T|/2), f_T)`` over even subsets T of {1..m}."""
    if m < 1:
        raise ValueError("g_m needs m >= 1")
    zs = _vars("z", degs if degs is not None else [1] * m) if zs is None else list(zs)
    if len(zs) != m:
        raise ValueError(f"g_{m} needs {m} variables")
    out = []
    for t in range(0, m + 1, 2):
        for T in combinations(range(1, m + 1), t):
            out.append((Fraction(-2) ** (-(t // 2)), f_T(T, [z.degree for z in zs], field, zs)))
    return out


def g_m(m: int, degs: Sequence[int] | None = None, field: Field = QQ,
        zs: Sequence[GVar] | None = None) -> FreePoly:
    """``sum over even T of (-2)^(-|T|/2) f_T``; ``g_1 = z1``."""
    acc = FreePoly.zero(field)
    for c, f in g_m_summands(m, degs, field, zs):
        acc = acc + f * field(c)
    return acc


def C_D_monomials(k: int, ls: Sequence[int], field: Field = QQ) -> FreePoly:
    """``x1 x2 ... xn`` with ``ls[i-1]`` variables of degree i, provided sum i*l_i >= k+1."""
    if len(ls) != k:
        raise ValueError(f"need k={k} multiplicities, got {len(ls)}")
    if any(l < 0 for l in ls):
        raise ValueError("multiplicities must be non-negative")
    if sum(i * l for i, l in enumerate(ls, 1)) < k + 1:
        raise ValueError("C_D needs 1*l_1 + ... + k*l_k >= k+1")
    vs = [GVar(f"x{i}_{j}", i) for i, l in enumerate(ls, 1) for j in range(1, l + 1)]
    return FreePoly.monomial(vs, 1, field)


def Pk_item(k: int, item: int, l: int | None = None, degs: Sequence[int] | None = None,
            field: Field = QQ) -> FreePoly:
    """One member of the P^k list; ``degs`` gives the variable degrees in slot order."""
    fam = {f.name: f for f in Pk_generators(k)}
    key = f"P{item}" if item in (1, 2, 3, 4) else f"P{item}[l={l}]"
    if key not in fam:
        raise ValueError(f"P^{k} has no item {item}" + (f" with l={l}" if l is not None else ""))
    F = fam[key]
    if degs is None:
        degs = F.default_degrees
    degs = tuple(degs)
    if len(degs) != F.arity or not F.accepts(degs):
        raise ValueError(f"degrees {degs} are not admissible for {key} of P^{k}")
    return F.instantiate(degs, field)


# families --------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """A generator family: one polynomial shape for every admissible degree tuple."""
    name: str
    arity: int
    accepts: Callable[[tuple], bool]
    build: Callable[[list, Field], FreePoly]
    kind: str = "multilinear"           # or "power"
    exponent: int = 1
    default_degrees: tuple = ()
    slot_names: tuple = field(default=())

    def names(self) -> tuple:
        return self.slot_names or tuple(f"u{i}" for i in range(1, self.arity + 1))

    def instantiate(self, degs: Sequence[int], field: Field = QQ) -> FreePoly:
        vs = [GVar(n, d) for n, d in zip(self.names(), degs)]
        return self.build(vs, field)

    def __repr__(self):
        return f"Family({self.name})"


def _neg_family(pred: Callable[[int], bool], name: str, default: int) -> Family:
    return Family(name, 1, lambda d: pred(d[0]), lambda vs, F: _v(vs[0], F),
                  default_degrees=(default,), slot_names=("x",))


def _triple() -> Family:
    return Family("triple", 3, lambda d: True,
                  lambda vs, F: comm(_v(vs[0], F), _v(vs[1], F), _v(vs[2], F)),
                  default_degrees=(0, 0, 0), slot_names=("x1", "x2", "x3"))


def _power(name: str, p: int, pred: Callable[[int], bool], default: int) -> Family:
    return Family(name, 1, lambda d: pred(d[0]), lambda vs, F: _v(vs[0], F) ** p,
                  kind="power", exponent=p, default_degrees=(default,), slot_names=("x",))


def _commutator(name: str, pred, default) -> Family:
    return Family(name, 2, lambda d: pred(*d), lambda vs, F: comm(_v(vs[0], F), _v(vs[1], F)),
                  default_degrees=default, slot_names=("x1", "x2"))


def _anticommutator(name: str, pred, default) -> Family:
    def build(vs, F):
        a, b = _v(vs[0], F), _v(vs[1], F)
        return a * b + b * a
    return Family(name, 2, lambda d: pred(*d), build, default_degrees=default, slot_names=("x1", "x2"))


def _monomial(name: str, n: int, pred, default) -> Family:
    return Family(name, n, pred, lambda vs, F: FreePoly.monomial(vs, 1, F),
                  default_degrees=default, slot_names=tuple(f"x{i}" for i in range(1, n + 1)))


def Ecan_generators(char: int = 0) -> list[Family]:
    """The three identity families for the canonical grading, plus x^p in char p."""
    gens = [
        _neg_family(lambda d: d < 0, "neg", -1),
        _commutator("comm_even", lambda a, b: a % 2 == 0 or b % 2 == 0, (2, 1)),
        _anticommutator("anticomm_odd", lambda a, b: a % 2 == 1 and b % 2 == 1, (1, 1)),
    ]
    if char:
        gens.append(_power("power_even", char, lambda d: d >= 2 and d % 2 == 0, 2))
    return gens


def Einfinity_generators(char: int = 0) -> list[Family]:
    gens = [_neg_family(lambda d: d < 0, "neg", -1), _triple()]
    if char:
        gens.append(_power("power", char, lambda d: d >= 1, 1))
    return gens


def Ek_star_generators(k: int, char: int = 0) -> list[Family]:
    gens = [_neg_family(lambda d: not 0 <= d <= k, "outside", k + 1), _triple()]
    if char and char <= k:
        gens.append(_power("power_t", char, lambda d: d >= 1 and char * d <= k, 1))
    return gens


def _is_u(d: int) -> bool:
    return d >= 0 and d % 2 == 0


def _is_z(d: int) -> bool:
    return d > 0 and d % 2 == 1


def Pk_generators(k: int, extended_u: bool = True) -> list[Family]:
    """The seven-item list for E^k (item 3 only for even k, item 4 only for odd k).

    ``extended_u`` (default) lets the degree-0 slots of items 3 and 4 take any
    even non-negative degree, like the ``u`` slots of items 5-7. With False the
    slots are degree 0 only, which misses e.g. ``[z1, z2]`` with ``z`` of even
    positive degree for k = 1.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    ydeg = _is_u if extended_u else (lambda d: d == 0)
    gens = [_neg_family(lambda d: d < 0, "P1", -1), _triple()]
    gens[1] = Family("P2", 3, gens[1].accepts, gens[1].build, default_degrees=(0, 0, 0),
                     slot_names=("x1", "x2", "x3"))
    if k % 2 == 0:
        n = k + 2
        names = tuple(f"y{i}" for i in range(1, k + 2)) + ("x",)

        def build3(vs, F):
            ys = vs[:k + 1]
            return _comm_chain(list(zip(ys[0:k:2], ys[1:k:2])) + [(ys[k], vs[k + 1])], F)
        gens.append(Family("P3", n, lambda d: all(ydeg(a) for a in d[:k + 1]), build3,
                           default_degrees=(0,) * (k + 2), slot_names=names))
    else:
        n = k + 1
        names = tuple(f"y{i}" for i in range(1, k + 2))
        gens.append(Family("P4", n, lambda d: all(ydeg(a) for a in d),
                           lambda vs, F: _comm_chain(zip(vs[0::2], vs[1::2]), F),
                           default_degrees=(0,) * n, slot_names=names))
    for l in range(0, k + 1):
        r = k - l + 2
        znames = tuple(f"z{i}" for i in range(1, r + 1))
        if l % 2 == 0:
            unames = tuple(f"u{i}" for i in range(1, l + 1))

            def build5(vs, F, r=r):
                us = vs[r:]
                return g_m(r, field=F, zs=vs[:r]) * _comm_chain(zip(us[0::2], us[1::2]), F)
            gens.append(Family(f"P5[l={l}]", r + l,
                               lambda d, r=r: all(_is_z(a) for a in d[:r]) and all(_is_u(a) for a in d[r:]),
                               build5, default_degrees=(1,) * r + (0,) * l, slot_names=znames + unames))
        else:
            unames = tuple(f"u{i}" for i in range(1, l + 1))

            def build6(vs, F, r=r):
                us = vs[r:]
                head = comm(g_m(r, field=F, zs=vs[:r]), _v(us[0], F))
                return head * _comm_chain(zip(us[1::2], us[2::2]), F)
            gens.append(Family(f"P6[l={l}]", r + l,
                               lambda d, r=r: all(_is_z(a) for a in d[:r]) and all(_is_u(a) for a in d[r:]),
                               build6, default_degrees=(1,) * r + (0,) * l, slot_names=znames + unames))

            def build7(vs, F, r=r):
                zlast, us = vs[r], vs[r + 1:]
                pairs = [(zlast, us[0])] + list(zip(us[1::2], us[2::2]))
                return g_m(r, field=F, zs=vs[:r]) * _comm_chain(pairs, F)
            gens.append(Family(f"P7[l={l}]", r + 1 + l,
                               lambda d, r=r: all(_is_z(a) for a in d[:r + 1]) and all(_is_u(a) for a in d[r + 1:]),
                               build7, default_degrees=(1,) * (r + 1) + (0,) * l,
                               slot_names=znames + (f"z{r + 1}",) + unames))
    return gens


def r_infinity_generators(r: int, char: int = 0) -> list[Family]:
    inC = lambda d: d >= 0 and d % r == 0
    gens = [
        _neg_family(lambda d: not inC(d), "outside", r + 1 if r > 1 else -1),
        _commutator("comm_2r", lambda a, b: a >= 0 and a % (2 * r) == 0 and inC(b), (2 * r, r)),
        _anticommutator("anticomm_odd", lambda a, b: inC(a) and inC(b) and (a // r) % 2 == 1
                        and (b // r) % 2 == 1, (r, r)),
    ]
    if char:
        gens.append(_power("power_even", char, lambda d: inC(d) and d > 0 and (d // r) % 2 == 0, 2 * r))
    return gens


def pq_generators(p: int, q: int, k: int = 1, max_arity: int = 4) -> list[Family]:
    """Identity lists for the (p,q) gradings with k generators of degree p."""
    cls = lambda d: pq_class(d, p, q, k) if d >= 0 else None
    inC = lambda d: d == 0 or (d > 0 and cls(d) is not None)
    if k == 1:
        central = {"C1", "C4"}
        odd = {"C2", "C3"}
    else:
        central = {"C1"} | {f"Dhat{i}" for i in range(1, k + 1)}
        odd = {"C2"} | {f"D{i}" for i in range(1, k + 1)}

    def c_deg(d):
        return 0 if d == 0 else cls(d)

    default_out = next(d for d in range(1, p + q + 2) if not inC(d))
    gens = [
        _neg_family(lambda d: not inC(d), "outside", default_out),
        # the unit-only component (degree 0) is central as well
        _commutator("comm_central", lambda a, b: inC(a) and inC(b) and (a == 0 or c_deg(a) in central),
                    (q * 2, q)),
        _anticommutator("anticomm_odd", lambda a, b: c_deg(a) in odd and c_deg(b) in odd, (q, q)),
    ]

    def weight(d):
        if d <= 0:
            return 0
        dec = pq_decompose(d, p, q, k)
        return dec[0] if dec else 0

    for n in range(2, max_arity + 1):
        gens.append(_monomial(
            f"mono{n}", n,
            lambda ds: all(inC(d) and weight(d) >= 1 for d in ds) and sum(weight(d) for d in ds) > k,
            tuple([p] * n)))
    return gens


def family_from_poly(f: FreePoly, name: str = "g") -> Family:
    """A one-member family for a fixed generator: multilinear ``f`` or a pure power ``x^e``."""
    vs = f.variables()
    if f.is_multilinear():
        degs = tuple(v.degree for v in vs)

        def build(new, F):
            g = f.rename(dict(zip(vs, new)))
            return g if F == f.field else g.change_field(F)
        return Family(name, len(vs), lambda d: tuple(d) == degs, build, default_degrees=degs,
                      slot_names=tuple(v.name for v in vs))
    if len(vs) == 1 and len(f) == 1:
        (m, c), = f.items()
        x = vs[0]
        if c == f.field.one:
            return _power(name, len(m), lambda d: d == x.degree, x.degree)
    raise UnsupportedInput("a generator must be multilinear or a single power x^e")


def generators_for(grading, char: int = 0, **opts) -> list[Family]:
    """The generator list attached to a named grading preset."""
    name = grading.name
    prm = dict(grading.params)
    if name == "can":
        return Ecan_generators(char)
    if name == "infinity":
        return Einfinity_generators(char)
    if name == "k_star":
        return Ek_star_generators(prm["k"], char)
    if name == "k":
        if char:
            raise ValueError("no generator list is known for E^k in positive characteristic")
        return Pk_generators(prm["k"], **opts)
    if name == "r_infinity":
        return r_infinity_generators(prm["r"], char)
    if name in ("pq_1_infinity", "pq_k_infinity"):
        if char:
            raise ValueError("the (p,q) lists are stated in characteristic 0")
        return pq_generators(prm["p"], prm["q"], prm.get("k", 1), opts.get("max_arity", 4))
    raise ValueError(f"no generator list for grading {grading.describe()}")
