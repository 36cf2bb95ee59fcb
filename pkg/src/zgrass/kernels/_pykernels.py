"""Pure-Python kernels; reference semantics for the compiled twin in ``_ckernels.pyx``.

Basis words of the Grassmann algebra are bitmasks: bit ``i - 1`` set means the
generator ``e_i`` occurs.
"""
from itertools import product


def word_sign(u: int, v: int) -> int:
    """Sign of ``u * v`` relative to the ascending word ``u | v``; 0 if they overlap."""
    if u & v:
        return 0
    par = 0
    while v:
        low = v & -v
        par ^= (u >> low.bit_length()).bit_count() & 1
        v ^= low
    return -1 if par else 1


def mul_words(u: int, v: int) -> tuple[int, int]:
    s = word_sign(u, v)
    return (s, u | v) if s else (0, 0)


def mul_dicts(a: dict, b: dict) -> dict:
    """Bilinear product of two word->coefficient maps (coefficients unnormalized)."""
    out: dict = {}
    get = out.get
    for u, ca in a.items():
        for v, cb in b.items():
            if u & v:
                continue
            s = word_sign(u, v)
            w = u | v
            c = ca * cb
            out[w] = get(w, 0) + (c if s > 0 else -c)
    return out


def perm_signs(perms, hmasks) -> list[list[int]]:
    """``out[i][j]`` = (-1)^(inversions of perms[i] among variables odd under hmasks[j])."""
    out = []
    for perm in perms:
        n = len(perm)
        row = []
        for h in hmasks:
            par = 0
            for a in range(n):
                pa = perm[a]
                if not (h >> pa) & 1:
                    continue
                for b in range(a + 1, n):
                    pb = perm[b]
                    if pb < pa and (h >> pb) & 1:
                        par ^= 1
            row.append(-1 if par else 1)
        out.append(row)
    return out


def first_nonzero(perms, coefs, word_lists, modulus: int = 0):
    """Search all tuples of words for one where the multilinear sum is nonzero.

    ``perms[i]`` lists variable indices of the i-th monomial left to right and
    ``coefs[i]`` is its integer coefficient. Returns the first index tuple (in
    lexicographic order) with a nonzero value, or ``None``.
    """
    for idx in product(*[range(len(ws)) for ws in word_lists]):
        words = [word_lists[i][j] for i, j in enumerate(idx)]
        total = 0
        for perm, c in zip(perms, coefs):
            acc = 0
            sign = 1
            for var in perm:
                w = words[var]
                s = word_sign(acc, w)
                if not s:
                    sign = 0
                    break
                sign *= s
                acc |= w
            if sign:
                total += c if sign > 0 else -c
        if modulus:
            total %= modulus
        if total:
            return idx
    return None
