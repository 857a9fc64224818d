"""Sylow subgroups and p-group subgroup families against brute enumeration."""

from __future__ import annotations

import pytest

from gpi.arith import p_part
from gpi.catalog import build_group
from gpi.groups import LimitExceeded, Subgroup, closure_ids, recognize_small
from gpi.structure import p_prime_residual
from gpi.sylow import (
    all_subgroups,
    cyclic_subgroups_of_order,
    is_quaternion_free,
    maximal_subgroups_of_p_group,
    sylow_subgroup,
    two_maximal_subgroups_of_p_group,
    two_minimal_subgroups,
)

from oracles import brute_all_subgroups, brute_subgroups_of_order


def _is_sylow(G, P, p, within=None):
    total = len(within.ids) if within is not None else G.n
    if len(P.ids) != p_part(total, p):
        return False
    if within is not None and not P.ids <= within.ids:
        return False
    return closure_ids(G, P.gens) == P.ids


def test_sylow_orders_across_catalog():
    for name, p in [
        ("S4", 2), ("S4", 3), ("S6", 2), ("S6", 3), ("S6", 5),
        ("A5", 2), ("A5", 5), ("SL(2,3)", 2), ("GL(2,3)", 2),
        ("SL(2,5)", 2), ("SL(2,5)", 3), ("SL(2,5)", 5), ("5^4:3", 5), ("5^4:3", 3),
    ]:
        G = build_group(name)
        P = sylow_subgroup(G, p)
        assert _is_sylow(G, P, p), (name, p)


def test_sylow_shapes():
    q8 = sylow_subgroup(build_group("SL(2,3)"), 2)
    assert recognize_small(q8).is_q8
    d8 = sylow_subgroup(build_group("S4"), 2)
    assert recognize_small(d8).is_dihedral_2group
    uv = sylow_subgroup(build_group("5^4:3"), 5).as_group()[0]
    assert uv.is_abelian() and uv.exponent() == 5


def test_sylow_within_subgroup():
    G = build_group("S4")
    a4 = p_prime_residual(G, 3)
    assert a4.order == 12
    P = sylow_subgroup(G, 2, within=a4)
    assert _is_sylow(G, P, 2, within=a4)
    assert P.order == 4


def test_sylow_missing_prime_is_trivial():
    G = build_group("S4")
    assert sylow_subgroup(G, 7).is_trivial


def test_sylow_counts_one_mod_p():
    for name, p, expected in [("S4", 2, 3), ("S4", 3, 4), ("A5", 2, 5), ("A5", 5, 6)]:
        G = build_group(name)
        P = sylow_subgroup(G, p)
        orbit = {P.ids}
        frontier = [P.ids]
        while frontier:
            ids = frontier.pop()
            for g in G.generator_ids:
                moved = frozenset(G.conj(a, g) for a in ids)
                if moved not in orbit:
                    orbit.add(moved)
                    frontier.append(moved)
        assert len(orbit) == expected
        assert len(orbit) % p == 1


def test_cyclic_subgroup_counts():
    S4 = build_group("S4")
    assert len(cyclic_subgroups_of_order(S4, 2)) == 9
    assert len(cyclic_subgroups_of_order(S4, 4)) == 3
    Q8 = build_group("Q8")
    assert len(cyclic_subgroups_of_order(Q8, 4)) == 3
    assert len(cyclic_subgroups_of_order(Q8, 2)) == 1


def test_two_minimal_against_brute():
    for name, p in [("D8", 2), ("Q8", 2), ("D16", 2), ("SD16", 2), ("M16", 2),
                    ("Q16", 2), ("C2^4", 2), ("C4xC2", 2), ("S4", 2), ("C3^2", 3)]:
        G = build_group(name)
        P = sylow_subgroup(G, p)
        got = {H.ids for H in two_minimal_subgroups(P, p)}
        want = brute_subgroups_of_order(P.as_group()[0], p * p)
        back = sorted(P.ids)
        want = {frozenset(back[i] for i in ids) for ids in want}
        assert got == want, name


def test_two_minimal_counts():
    assert len(two_minimal_subgroups(build_group("Q8").full_subgroup(), 2)) == 3
    assert len(two_minimal_subgroups(build_group("C2^4").full_subgroup(), 2)) == 35
    uv = sylow_subgroup(build_group("5^4:3"), 5)
    assert len(two_minimal_subgroups(uv, 5)) == 806


def test_maximal_subgroups_against_brute():
    for name in ["D8", "Q8", "D16", "SD16", "M16", "Q16", "C8", "C4xC2", "C2^4", "C2xD8"]:
        G = build_group(name)
        P = G.full_subgroup()
        got = {H.ids for H in maximal_subgroups_of_p_group(P)}
        want = brute_subgroups_of_order(G, G.n // 2)
        assert got == want, name


def test_maximal_subgroup_counts():
    assert len(maximal_subgroups_of_p_group(build_group("D8").full_subgroup())) == 3
    assert len(maximal_subgroups_of_p_group(build_group("C8").full_subgroup())) == 1
    assert len(maximal_subgroups_of_p_group(build_group("C2^4").full_subgroup())) == 15
    uv = sylow_subgroup(build_group("5^4:3"), 5)
    assert len(maximal_subgroups_of_p_group(uv)) == 156


def test_maximal_subgroups_reject_mixed_order():
    G = build_group("S4")
    with pytest.raises(ValueError):
        maximal_subgroups_of_p_group(G.full_subgroup())


def test_two_maximal_against_brute():
    for name in ["D8", "Q8", "D16", "SD16", "M16", "Q16", "C8", "C2^4", "C2xD8"]:
        G = build_group(name)
        got = {H.ids for H in two_maximal_subgroups_of_p_group(G.full_subgroup())}
        want = brute_subgroups_of_order(G, G.n // 4)
        assert got == want, name


def test_two_maximal_counts():
    assert len(two_maximal_subgroups_of_p_group(build_group("Q8").full_subgroup())) == 1
    assert len(two_maximal_subgroups_of_p_group(build_group("D8").full_subgroup())) == 5
    uv = sylow_subgroup(build_group("5^4:3"), 5)
    assert len(two_maximal_subgroups_of_p_group(uv)) == 806


def test_all_subgroups_against_brute():
    for name in ["D8", "Q8", "C12", "S4"]:
        G = build_group(name)
        got = {H.ids for H in all_subgroups(G)}
        assert got == brute_all_subgroups(G), name


def test_all_subgroups_closed_and_bounded():
    G = build_group("5^4:3")
    with pytest.raises(LimitExceeded):
        all_subgroups(G)
    S4 = build_group("S4")
    for H in all_subgroups(S4):
        assert closure_ids(S4, H.gens) == H.ids


def test_quaternion_free():
    expected = {
        "Q8": False,
        "Q16": False,
        "SD16": False,
        "D8": True,
        "D16": True,
        "M16": True,
        "C8": True,
        "C2^4": True,
        "C2xD8": True,
        "C4xC2": True,
    }
    for name, want in expected.items():
        G = build_group(name)
        assert is_quaternion_free(G) is want, name


def test_quaternion_free_whole_group_scan():
    assert is_quaternion_free(build_group("S4")) is True
    assert is_quaternion_free(build_group("SL(2,3)")) is False
    assert is_quaternion_free(build_group("C12")) is True
    P = sylow_subgroup(build_group("GL(2,3)"), 2)
    assert is_quaternion_free(P) is False
