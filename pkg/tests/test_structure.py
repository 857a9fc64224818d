import pytest

from gpi.catalog import build_group
from gpi.groups import Subgroup, closure_ids
from gpi.perm import Perm
from gpi.structure import (
    centralizer,
    centre,
    derived_series,
    derived_subgroup,
    element_power,
    factor_centralizer,
    frattini_subgroup_of_p_subgroup,
    is_perfect,
    normal_closure,
    normalizer,
    normalizer_index,
    p_prime_residual,
    p_residual,
)

from oracles import brute_centralizer, brute_normalizer

cyc = Perm.from_cycles


def sub_of(G, *perms):
    return G.generated([G.id_of_perm(p) for p in perms])


@pytest.fixture(scope="module")
def s4():
    return build_group("S4")


@pytest.fixture(scope="module")
def s4_probes(s4):
    return [
        sub_of(s4, cyc(4, [(0, 1)])),
        sub_of(s4, cyc(4, [(0, 1, 2, 3)])),
        sub_of(s4, cyc(4, [(0, 1), (2, 3)]), cyc(4, [(0, 2), (1, 3)])),
        sub_of(s4, cyc(4, [(0, 1, 2)])),
        s4.trivial_subgroup(),
        s4.full_subgroup(),
    ]


def test_normalizer_matches_brute(s4, s4_probes):
    for H in s4_probes:
        assert normalizer(s4, H).ids == brute_normalizer(s4, H.ids)


def test_normalizer_index_equals_orbit_free_count(s4, s4_probes):
    for H in s4_probes:
        assert normalizer_index(s4, H) == s4.n // len(brute_normalizer(s4, H.ids))
    d8 = build_group("D8")
    r = d8.generated([d8.generator_ids[0]])
    assert normalizer_index(d8, r) == 1  # the rotation subgroup is normal


def test_centralizer_and_centre(s4):
    t = s4.id_of_perm(cyc(4, [(0, 1)]))
    assert centralizer(s4, [t]).ids == brute_centralizer(s4, [t])
    assert centre(s4).is_trivial
    d8 = build_group("D8")
    z = centre(d8)
    assert z.order == 2 and d8.element_order(next(iter(z.ids - {0}))) == 2
    assert centre(build_group("Q8")).order == 2
    assert centre(build_group("C12")).is_full


def test_factor_centralizer(s4):
    v4 = sub_of(s4, cyc(4, [(0, 1), (2, 3)]), cyc(4, [(0, 2), (1, 3)]))
    a4 = sub_of(s4, cyc(4, [(0, 1, 2)]), cyc(4, [(0, 1), (2, 3)]))
    assert factor_centralizer(s4, v4, s4.trivial_subgroup()) == v4
    assert factor_centralizer(s4, a4, v4) == a4
    assert factor_centralizer(s4, s4.full_subgroup(), a4) == s4.full_subgroup()
    with pytest.raises(ValueError):
        factor_centralizer(s4, v4, a4)  # K not inside L


def test_normal_closure(s4):
    t = s4.id_of_perm(cyc(4, [(0, 1)]))
    dd = s4.id_of_perm(cyc(4, [(0, 1), (2, 3)]))
    r3 = s4.id_of_perm(cyc(4, [(0, 1, 2)]))
    assert normal_closure(s4, [t]).is_full
    assert normal_closure(s4, [dd]).order == 4
    assert normal_closure(s4, [r3]).order == 12
    assert normal_closure(s4, []).is_trivial


def test_derived_subgroup_chain(s4):
    der = derived_subgroup(s4)
    assert der.order == 12
    orders = [t.order for t in derived_series(s4)]
    assert orders == [24, 12, 4, 1]
    assert derived_subgroup(build_group("D8")).order == 2
    assert derived_subgroup(build_group("Q8")).order == 2
    assert derived_subgroup(build_group("C12")).is_trivial
    assert is_perfect(build_group("A5"))
    assert not is_perfect(s4)


def test_residuals(s4):
    assert p_residual(s4, 2).order == 12  # odd-order elements generate A4
    assert p_prime_residual(s4, 2).is_full  # 2-elements include all transpositions
    assert p_residual(s4, 3).is_full
    assert p_prime_residual(s4, 3).order == 12
    with pytest.raises(ValueError):
        p_residual(s4, 5)
    a5 = build_group("A5")
    assert p_residual(a5, 2).is_full and p_prime_residual(a5, 5).is_full


def test_frattini_of_p_subgroups():
    d8 = build_group("D8")
    phi = frattini_subgroup_of_p_subgroup(d8.full_subgroup(), 2)
    assert phi.order == 2
    q8 = build_group("Q8")
    assert frattini_subgroup_of_p_subgroup(q8.full_subgroup(), 2).order == 2
    c8 = build_group("C8")
    assert frattini_subgroup_of_p_subgroup(c8.full_subgroup(), 2).order == 4
    ea = build_group("C2^3")
    assert frattini_subgroup_of_p_subgroup(ea.full_subgroup(), 2).is_trivial
    s4 = build_group("S4")
    with pytest.raises(ValueError):
        frattini_subgroup_of_p_subgroup(s4.full_subgroup(), 2)
    assert frattini_subgroup_of_p_subgroup(s4.trivial_subgroup(), 2).is_trivial


def test_element_power(s4):
    r = s4.id_of_perm(cyc(4, [(0, 1, 2, 3)]))
    assert element_power(s4, r, 2) == s4.mul(r, r)
    assert element_power(s4, r, 4) == 0
    assert element_power(s4, r, -1) == s4.inv(r)
    assert element_power(s4, r, 0) == 0
    assert element_power(s4, r, 7) == s4.mul(s4.mul(r, r), r)


def test_closure_respects_trivial_seeds(s4):
    assert closure_ids(s4, []) == frozenset({0})
    assert closure_ids(s4, [0]) == frozenset({0})
