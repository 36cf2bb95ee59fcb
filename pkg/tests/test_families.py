import pytest

import oracles
from zgrass.checker import is_identity
from zgrass.errors import UnsupportedInput
from zgrass.families import (C_D_monomials, Ecan_generators, Ek_star_generators, Pk_generators, Pk_item,
                             family_from_poly, f_T, g_m, g_m_summands, generators_for, pq_generators,
                             r_infinity_generators, t_2n)
from zgrass.fields import GF, QQ
from zgrass.freealg import GVar, comm, var
from zgrass.grading import GradedAlgebra, preset
from zgrass.parser import parse_poly


@pytest.mark.parametrize("m", range(1, 7))
def test_g_m_matches_definition(m):
    assert len(g_m_summands(m)) == 2 ** (m - 1)
    got = {tuple(int(v.name[1:]) for v in mono): c for mono, c in g_m(m).items()}
    assert got == oracles.g_m_expansion(m)


def test_g_m_degrees():
    f = g_m(3, [1, 3, 5])
    assert sorted(v.degree for v in f.variables()) == [1, 3, 5]


def test_f_T():
    # f_{12} on three letters: z3 [z1, z2]
    f = f_T([1, 2], [1, 1, 1])
    z = [var(f"z{i}", 1) for i in (1, 2, 3)]
    assert f == z[2] * comm(z[0], z[1])


def test_t_2n():
    z = [var(f"z{i}", 0) for i in range(1, 5)]
    assert t_2n(1) == comm(z[0], z[1])
    assert t_2n(2) == comm(z[0], z[1]) * comm(z[2], z[3])


def test_Pk_lists():
    names = lambda k: [f.name for f in Pk_generators(k)]
    assert names(1) == ["P1", "P2", "P4", "P5[l=0]", "P6[l=1]", "P7[l=1]"]
    assert names(2) == ["P1", "P2", "P3", "P5[l=0]", "P6[l=1]", "P7[l=1]", "P5[l=2]"]
    with pytest.raises(ValueError):
        Pk_generators(-1)


def test_Pk_extended_reading():
    # [z1, z2] with z of degree 2 is an identity of E^1; only the extended u slots cover it
    fams = {f.name: f for f in Pk_generators(1)}
    literal = {f.name: f for f in Pk_generators(1, extended_u=False)}
    assert fams["P4"].accepts((2, 2))
    assert not literal["P4"].accepts((2, 2))
    assert is_identity(fams["P4"].instantiate((2, 2)), GradedAlgebra(preset("k", k=1))).identity


def test_Pk_item_and_C_D():
    assert Pk_item(1, 5, 0) == g_m(3)
    assert C_D_monomials(2, [1, 1]) == parse_poly("x1_1@1 x2_1@2")


def test_power_families_only_in_char_p():
    assert len(Ecan_generators(0)) == 3 and len(Ecan_generators(3)) == 4
    assert len(Ek_star_generators(6, 3)) == 3
    assert len(Ek_star_generators(2, 3)) == 2     # 3t <= 2 has no solution


def test_generators_for():
    assert [f.name for f in generators_for(preset("k_star", k=2))] == ["outside", "triple"]
    assert len(generators_for(preset("r_infinity", r=3))) == len(r_infinity_generators(3))
    assert len(pq_generators(3, 5, 1, max_arity=3)) == 5
    with pytest.raises(ValueError):
        generators_for(preset("k", k=1), 3)
    with pytest.raises(ValueError):
        generators_for(preset("index"))


def test_family_from_poly():
    fam = family_from_poly(parse_poly("[a@1, b@2]"))
    assert fam.accepts((1, 2)) and not fam.accepts((2, 1))
    assert fam.instantiate((1, 2)) == parse_poly("[a@1, b@2]")
    pw = family_from_poly(parse_poly("x@2^3"))
    assert pw.kind == "power" and pw.exponent == 3
    with pytest.raises(UnsupportedInput):
        family_from_poly(parse_poly("x@1^2 + y@0"))


# instances against exhaustive evaluation at a finite rank -------------------------

def _small_instances(fams, degrees, max_arity=3):
    import itertools
    for fam in fams:
        if fam.arity > max_arity or fam.kind != "multilinear":
            continue
        for degs in itertools.product(degrees, repeat=fam.arity):
            if fam.accepts(degs):
                yield fam.name, fam.instantiate(degs)


@pytest.mark.parametrize(("g", "degrees"), [
    (preset("can"), [-1, 0, 1, 2]),
    (preset("infinity"), [0, 1, 2]),
    (preset("k_star", k=2), [0, 1, 2, 3]),
    (preset("k", k=1), [0, 1, 2]),
    (preset("k", k=2), [0, 1, 2]),
], ids=lambda x: getattr(x, "describe", lambda: "")())
def test_generators_vanish_by_brute_force(g, degrees):
    for name, f in _small_instances(generators_for(g), degrees):
        assert oracles.brute_force_is_identity(f, g.generator_degree, 7, 3), (name, f)
