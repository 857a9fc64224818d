import pytest

from gpi.perm import Perm, compose


def test_identity_and_degree():
    e = Perm.identity(5)
    assert e.degree == 5
    assert e.is_identity()
    assert e(3) == 3


def test_from_cycles_basic():
    p = Perm.from_cycles(4, [(0, 1, 2)])
    assert p.images == (1, 2, 0, 3)
    q = Perm.from_cycles(4, [(0, 1), (2, 3)])
    assert q.images == (1, 0, 3, 2)


def test_from_cycles_rejects_overlap_and_range():
    with pytest.raises(ValueError):
        Perm.from_cycles(4, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        Perm.from_cycles(3, [(0, 5)])


def test_compose_applies_left_factor_first():
    a = Perm.from_cycles(3, [(0, 1)])
    b = Perm.from_cycles(3, [(1, 2)])
    # (a*b)(x) == b(a(x)): 0 -a-> 1 -b-> 2
    assert (a * b)(0) == 2
    assert compose(a, b).images == (a * b).images
    assert (b * a)(0) == 1


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(Perm.identity(3), Perm.identity(4))


def test_inverse_and_pow():
    p = Perm.from_cycles(5, [(0, 1, 2, 3, 4)])
    assert (p * p.inverse()).is_identity()
    assert p**5 == Perm.identity(5)
    assert p**-2 == p**3
    assert (p**0).is_identity()


def test_order_is_lcm_of_cycle_lengths():
    p = Perm.from_cycles(6, [(0, 1), (2, 3, 4)])
    assert p.order() == 6
    assert Perm.identity(4).order() == 1


def test_cycles_and_string():
    p = Perm.from_cycles(5, [(0, 1), (2, 3, 4)])
    assert p.cycles() == [(0, 1), (2, 3, 4)]
    assert p.cycle_string() == "(0 1)(2 3 4)"
    assert Perm.identity(3).cycle_string() == "()"


def test_validation_rejects_non_bijections():
    with pytest.raises(ValueError):
        Perm((0, 0, 1))
    with pytest.raises(ValueError):
        Perm((0, 3, 1))


def test_hash_eq():
    a = Perm.from_cycles(4, [(0, 1)])
    b = Perm((1, 0, 2, 3))
    assert a == b and hash(a) == hash(b)
    assert a != Perm.identity(4)
