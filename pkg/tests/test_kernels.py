import itertools
import random

import pytest

import oracles
from zgrass import kernels
from zgrass.kernels import python_backend

BACKENDS = [python_backend] + ([kernels.compiled_backend] if kernels.compiled_backend else [])


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("K", BACKENDS)
def test_word_sign_exhaustive_rank6(K):
    for u, v in itertools.product(range(64), repeat=2):
        assert K.word_sign(u, v) == oracles.bubble_sign(oracles.mask_to_tuple(u), oracles.mask_to_tuple(v))


@pytest.mark.parametrize("K", BACKENDS)
def test_mul_dicts_agree(K):
    rng = random.Random(3)
    for _ in range(200):
        a = {rng.randrange(1 << 9): rng.randint(-5, 5) for _ in range(4)}
        b = {rng.randrange(1 << 9): rng.randint(-5, 5) for _ in range(4)}
        got = {w: c for w, c in K.mul_dicts(a, b).items() if c}
        assert got == {w: c for w, c in python_backend.mul_dicts(a, b).items() if c}


@pytest.mark.parametrize("K", BACKENDS)
def test_perm_signs(K):
    perms = list(itertools.permutations(range(4)))
    hs = list(range(16))
    out = K.perm_signs(perms, hs)
    for perm, row in zip(perms, out):
        for h, s in zip(hs, row):
            odd = [i for i in perm if h >> i & 1]
            inv = sum(1 for a in range(len(odd)) for b in range(a + 1, len(odd)) if odd[a] > odd[b])
            assert s == (-1) ** inv


@pytest.mark.parametrize("K", BACKENDS)
def test_first_nonzero(K):
    # x1 x2 - x2 x1 with one-letter words: e1e2 - e2e1 = 2 e1e2
    perms = [(0, 1), (1, 0)]
    lists = [[0b11, 0b1], [0b100, 0b10]]
    assert K.first_nonzero(perms, [1, -1], lists) == (1, 0)
    # x1 x2 + x2 x1 never survives with odd words, and with modulus 2 nothing does
    assert K.first_nonzero(perms, [1, 1], [[0b1], [0b10]]) is None
    assert K.first_nonzero(perms, [1, -1], [[0b1], [0b10]], 2) is None


def test_backends_identical_on_random_inputs():
    if kernels.compiled_backend is None:
        pytest.skip("extension not built")
    C = kernels.compiled_backend
    rng = random.Random(11)
    perms = [tuple(rng.sample(range(5), 5)) for _ in range(30)]
    hs = [rng.randrange(32) for _ in range(20)]
    assert C.perm_signs(perms, hs) == python_backend.perm_signs(perms, hs)
