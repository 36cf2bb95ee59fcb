"""Degree assignments on the generators of E and the gradings they induce.

A list grading is given by blocks ``(degree, capacity)``; capacity ``None`` means
infinitely many generators. Finite blocks take the lowest generator indices in
list order, the remaining generators cycle through the infinite blocks in
``cycle`` order. The index grading ``||e_i|| = i`` is the one non-list preset.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Iterator

from .errors import ZGrassError
from .fields import QQ, Field, is_prime
from .grassmann import DEFAULT_RANK, Element, word, word_key

INF = None

PRESETS = ("can", "k", "k_star", "infinity", "r_infinity", "pq_1_infinity",
           "pq_k_infinity", "index")


@dataclass(frozen=True)
class GradingSpec:
    blocks: tuple[tuple[int, int | None], ...] = ((1, INF),)
    cycle: tuple[int, ...] = ()
    modulus: int | None = None
    rule: str = "list"
    name: str = ""
    params: tuple = ()

    def __post_init__(self):
        if self.rule not in ("list", "index"):
            raise ValueError(f"unknown grading rule {self.rule!r}")
        if self.modulus is not None and self.modulus < 1:
            raise ValueError("modulus must be positive")
        if self.rule == "index":
            return
        if not self.blocks:
            raise ValueError("a list grading needs at least one block")
        degs = [d for d, _ in self.blocks]
        if any(a >= b for a, b in zip(degs, degs[1:])):
            raise ValueError(f"block degrees must be strictly increasing: {degs}")
        for d, c in self.blocks:
            if c is not None and c < 1:
                raise ValueError(f"block capacities must be positive, got {c}")
        infinite = [j for j, (_, c) in enumerate(self.blocks) if c is None]
        if not infinite:
            raise ValueError("at least one block must have infinite capacity")
        if not self.cycle:
            object.__setattr__(self, "cycle", tuple(infinite))
        elif sorted(set(self.cycle)) != infinite:
            raise ValueError("cycle must list every infinite block exactly once")

    # generator degrees ----------------------------------------------------
    @property
    def is_list(self) -> bool:
        return self.rule == "list"

    @property
    def finite_prefix(self) -> int:
        return sum(c for _, c in self.blocks if c is not None) if self.is_list else 0

    def generator_block(self, i: int) -> int:
        """Block index of generator ``e_i`` (1-based); for the index rule, ``i - 1``."""
        if i < 1:
            raise ValueError("generator indices are 1-based")
        if not self.is_list:
            return i - 1
        start = 0
        for j, (_, c) in enumerate(self.blocks):
            if c is not None:
                if i <= start + c:
                    return j
                start += c
        return self.cycle[(i - start - 1) % len(self.cycle)]

    def integer_degree(self, i: int) -> int:
        """Degree of ``e_i`` in Z, before any quotient."""
        if not self.is_list:
            return i
        return self.blocks[self.generator_block(i)][0]

    def reduce(self, d: int) -> int:
        return d % self.modulus if self.modulus else d

    def same_degree(self, a: int, b: int) -> bool:
        return self.reduce(a) == self.reduce(b)

    def generator_degree(self, i: int) -> int:
        return self.reduce(self.integer_degree(i))

    def degrees(self, rank: int) -> tuple[int, ...]:
        return _degree_table(self, rank)

    def degree_of_word(self, w: int) -> int:
        d = 0
        i = 1
        while w:
            if w & 1:
                d += self.integer_degree(i)
            w >>= 1
            i += 1
        return self.reduce(d)

    def block_generators(self, j: int, rank: int) -> list[int]:
        return [i for i in range(1, rank + 1) if self.generator_block(i) == j]

    def block_table(self, rank: int) -> list[tuple[int, int | None]]:
        """Blocks as ``(degree, capacity)``; the index rule becomes rank-many unit blocks."""
        if self.is_list:
            return list(self.blocks)
        return [(i, 1) for i in range(1, rank + 1)]

    def rank_for(self, demand: dict[int, int]) -> int:
        """Smallest rank providing ``demand[j]`` generators in block ``j`` (capped by capacity)."""
        need = {}
        table = self.block_table(10**6) if not self.is_list else self.blocks
        for j, k in demand.items():
            cap = table[j][1]
            need[j] = min(k, cap) if cap is not None else k
        if not self.is_list:
            return max((j + 1 for j, k in need.items() if k > 0), default=0)
        have = {j: 0 for j in need}
        n = 0
        while any(have[j] < k for j, k in need.items()):
            n += 1
            b = self.generator_block(n)
            if b in have:
                have[b] += 1
        return n

    def describe(self) -> str:
        if self.name:
            label = self.name + (f"({', '.join(f'{k}={v}' for k, v in self.params)})" if self.params else "")
        elif self.is_list:
            label = "blocks " + ";".join(f"({d},{'inf' if c is None else c})" for d, c in self.blocks)
        else:
            label = "index"
        if self.modulus:
            label += f" mod {self.modulus}"
        return label


@lru_cache(maxsize=512)
def _degree_table(g: GradingSpec, rank: int) -> tuple[int, ...]:
    return tuple(g.generator_degree(i) for i in range(1, rank + 1))


def _check_nonneg(name, v, lo=0):
    if not isinstance(v, int) or v < lo:
        raise ValueError(f"{name} must be an integer >= {lo}, got {v!r}")


def preset(name: str, **params) -> GradingSpec:
    """The named gradings: ``can``, ``k``, ``k_star``, ``infinity``, ``r_infinity``,
    ``pq_1_infinity``, ``pq_k_infinity`` and ``index``."""
    if name == "can":
        return GradingSpec(((1, INF),), name="can")
    if name == "k":
        k = params.get("k")
        _check_nonneg("k", k)
        blocks = ((0, k), (1, INF)) if k else ((1, INF),)
        return GradingSpec(blocks, name="k", params=(("k", k),))
    if name == "k_star":
        k = params.get("k")
        _check_nonneg("k", k)
        blocks = ((0, INF), (1, k)) if k else ((0, INF),)
        return GradingSpec(blocks, name="k_star", params=(("k", k),))
    if name == "infinity":
        # odd generators degree 1, even generators degree 0
        return GradingSpec(((0, INF), (1, INF)), cycle=(1, 0), name="infinity")
    if name == "r_infinity":
        r = params.get("r")
        _check_nonneg("r", r, 1)
        return GradingSpec(((r, INF),), name="r_infinity", params=(("r", r),))
    if name in ("pq_1_infinity", "pq_k_infinity"):
        p, q = params.get("p"), params.get("q")
        k = 1 if name == "pq_1_infinity" else params.get("k")
        if not (isinstance(p, int) and isinstance(q, int) and is_prime(p) and is_prime(q) and p < q):
            raise ValueError(f"need primes p < q, got p={p!r}, q={q!r}")
        _check_nonneg("k", k, 1)
        if name == "pq_k_infinity" and not k < p:
            raise ValueError(f"need k < p, got k={k}, p={p}")
        prm = (("p", p), ("q", q)) if name == "pq_1_infinity" else (("p", p), ("q", q), ("k", k))
        return GradingSpec(((p, k), (q, INF)), name=name, params=prm)
    if name == "index":
        return GradingSpec((), rule="index", name="index")
    raise ValueError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")


_PARAM_ORDER = {"k": ("k",), "k_star": ("k",), "r_infinity": ("r",),
                "pq_1_infinity": ("p", "q"), "pq_k_infinity": ("p", "q", "k")}


def parse_preset(text: str) -> GradingSpec:
    """Parse ``k_star(k=2)``, ``k_star(2)``, ``pq_k_infinity(3,5,2)`` or a bare name."""
    m = re.fullmatch(r"\s*([a-z_0-9]+)\s*(?:\((.*)\))?\s*", text)
    if not m:
        raise ValueError(f"malformed preset {text!r}")
    name, args = m.group(1), m.group(2)
    params = {}
    if args and args.strip():
        order = _PARAM_ORDER.get(name, ())
        for pos, item in enumerate(a.strip() for a in args.split(",")):
            if "=" in item:
                key, val = (s.strip() for s in item.split("=", 1))
            else:
                if pos >= len(order):
                    raise ValueError(f"too many parameters for preset {name!r}")
                key, val = order[pos], item
            params[key] = int(val)
    return preset(name, **params)


def parse_blocks(text: str) -> GradingSpec:
    """Parse ``(0,inf);(1,2)`` or ``[(0, inf), (1, 2)]`` into a list grading."""
    pairs = re.findall(r"\(\s*(-?\d+)\s*,\s*(inf|\d+)\s*\)", text)
    if not pairs:
        raise ValueError(f"malformed blocks {text!r}")
    blocks = tuple((int(d), None if c == "inf" else int(c)) for d, c in pairs)
    return GradingSpec(blocks)


def quotient(g: GradingSpec, m: int) -> GradingSpec:
    """The Z_m-grading obtained by reducing all degrees modulo ``m``."""
    if m < 2:
        raise ValueError("quotient modulus must be >= 2")
    if g.modulus is not None and g.modulus % m:
        raise ValueError(f"Z_{g.modulus} does not map onto Z_{m}")
    return replace(g, modulus=m)


@dataclass(frozen=True)
class GradedAlgebra:
    grading: GradingSpec = field(default_factory=lambda: preset("can"))
    rank: int = DEFAULT_RANK
    field: Field = QQ

    def with_rank(self, rank: int) -> "GradedAlgebra":
        return replace(self, rank=rank)

    def degree_of_word(self, w: int) -> int:
        return self.grading.degree_of_word(w)

    def degree(self, x: Element) -> int | None:
        """Degree of a homogeneous nonzero element, ``None`` if inhomogeneous or zero."""
        degs = {self.grading.degree_of_word(w) for w, _ in x.items()}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous_of(self, x: Element, d: int) -> bool:
        g = self.grading
        return all(g.degree_of_word(w) == g.reduce(d) for w, _ in x.items())

    def _classes(self) -> list[tuple[int, list[int]]]:
        by_deg: dict[int, list[int]] = {}
        for i in range(1, self.rank + 1):
            by_deg.setdefault(self.grading.integer_degree(i), []).append(i)
        return sorted(by_deg.items())

    def _count_vectors(self, n: int, max_len: int) -> Iterator[tuple[int, ...]]:
        classes = self._classes()
        g = self.grading
        target = g.reduce(n)

        def rec(j, left, deg, acc):
            if j == len(classes):
                if g.reduce(deg) == target:
                    yield tuple(acc)
                return
            d, gens = classes[j]
            for c in range(min(left, len(gens)) + 1):
                acc.append(c)
                yield from rec(j + 1, left - c, deg + c * d, acc)
                acc.pop()

        yield from rec(0, max_len, 0, [])

    def component_basis(self, n: int, max_len: int | None = None) -> list[int]:
        """All words of degree ``n`` and length at most ``max_len`` (unit included for n=0)."""
        max_len = self.rank if max_len is None else min(max_len, self.rank)
        classes = self._classes()
        out = []
        for counts in self._count_vectors(n, max_len):
            pools = [combinations(gens, c) for (_, gens), c in zip(classes, counts)]
            for parts in product(*[list(p) for p in pools]):
                out.append(word(*[i for part in parts for i in part]))
        return sorted(out, key=word_key)

    def has_component(self, n: int, max_len: int | None = None) -> bool:
        max_len = self.rank if max_len is None else min(max_len, self.rank)
        return next(self._count_vectors(n, max_len), None) is not None

    def support_and_coverage(self, window: Iterable[int]) -> tuple[list[int], bool]:
        """Degrees in ``window`` with a nonempty component (within rank), and finite coverage."""
        supp = [n for n in window if self.has_component(n)]
        return supp, self.grading.is_list

    def gens(self) -> list[Element]:
        return [Element.gen(i, self.field, self.rank) for i in range(1, self.rank + 1)]


def component_basis(A: GradedAlgebra, n: int, max_len: int | None = None) -> list[int]:
    return A.component_basis(n, max_len)


def degree_of_word(g: GradingSpec, w: int) -> int:
    return g.degree_of_word(w)


def support_and_coverage(A: GradedAlgebra, window: Iterable[int]) -> tuple[list[int], bool]:
    return A.support_and_coverage(window)


# degree classes of the (p, q) gradings ------------------------------------------

def pq_decompose(n: int, p: int, q: int, k: int = 1) -> tuple[int, int] | None:
    """``(i, y)`` with ``n = p*i + q*y``, ``0 <= i <= k``, ``y >= 0``; None if n is outside C."""
    for i in range(k + 1):
        rest = n - p * i
        if rest >= 0 and rest % q == 0:
            return i, rest // q
    return None


def pq_class(n: int, p: int, q: int, k: int = 1) -> str | None:
    """Name of the set among C1, C2 and D_i / Dhat_i (C3 = D_1, C4 = Dhat_1 when k = 1)."""
    dec = pq_decompose(n, p, q, k)
    if dec is None:
        return None
    i, y = dec
    if i == 0:
        return "C1" if y % 2 == 0 else "C2"
    if k == 1:
        return "C3" if y % 2 == 0 else "C4"
    return f"D{i}" if y % 2 == (i + 1) % 2 else f"Dhat{i}"


class GradingError(ZGrassError):
    pass
