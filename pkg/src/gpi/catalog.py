"""Named builders for the benchmark groups.

Permutation entries are written as cycle tuples; the table-backed entries
(the dicyclic group of order 16, the big semidirect example) carry explicit
product formulas.  Built groups are cached per name, since every handle
memoises its own lattice work; pass fresh=True to rebuild from scratch.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass, field
from typing import Callable

from .groups import CayleyGroup, FiniteGroup, PermGroup, TableGroup, semidirect_product
from .perm import Perm

cyc = Perm.from_cycles


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    description: str
    tags: frozenset
    build: Callable[[], FiniteGroup] = field(compare=False)


def _perm(name, degree, gen_cycles):
    return PermGroup([cyc(degree, cs) for cs in gen_cycles], degree=degree, name=name)


def _symmetric(n):
    return _perm(f"S{n}", n, [[tuple(range(n))], [(0, 1)]])


def _cyclic(name, n):
    return _perm(name, n, [[tuple(range(n))]])


def _elementary(name, p, k):
    gens = [[tuple(range(i * p, (i + 1) * p))] for i in range(k)]
    return _perm(name, p * k, gens)


def _dicyclic16():
    dom = sorted(((k, e) for e in (0, 1) for k in range(8)), key=lambda t: (t[1], t[0]))

    def mul(x, y):
        k1, e1 = x
        k2, e2 = y
        if e1 == 0:
            return ((k1 + k2) % 8, e2)
        if e2 == 0:
            return ((k1 - k2) % 8, 1)
        return ((k1 - k2 + 4) % 8, 0)

    def inv(x):
        k, e = x
        return ((-k) % 8, 0) if e == 0 else ((k + 4) % 8, 1)

    def show(x):
        k, e = x
        return f"a{k}" + ("b" if e else "")

    return TableGroup(dom, mul, inv, gens=[(1, 0), (0, 1)], label_fn=show, name="Q16")


def _linear(name, p, mats, degree=None):
    """Matrix generators acting on the nonzero vectors of GF(p)^2."""
    vecs = [(x, y) for x in range(p) for y in range(p)][1:]
    idx = {v: i for i, v in enumerate(vecs)}
    gens = []
    for (a, b), (c, d) in mats:
        gens.append(Perm(idx[((a * x + b * y) % p, (c * x + d * y) % p)] for x, y in vecs))
    return PermGroup(gens, degree=degree or len(vecs), name=name)


def _sl23():
    return _linear("SL(2,3)", 3, [(((0, 2), (1, 0))), (((1, 1), (0, 1)))])


def _gl23():
    return _linear("GL(2,3)", 3, [(((0, 2), (1, 0))), (((1, 1), (0, 1))), (((1, 0), (0, 2)))])


def _sl25():
    return _linear("SL(2,5)", 5, [(((0, 4), (1, 0))), (((1, 1), (0, 1)))])


def _big_example():
    """Elementary abelian 5^4 extended by a fixed-point-free order-3 map.

    The normal part is two planes swapped into each other by the action, so
    its minimal normal subgroups come in a large family; the whole group has
    elements of orders 1, 3 and 5 only.
    """
    base = list(itertools.product(range(5), repeat=4))
    idx = {v: i for i, v in enumerate(base)}
    table = array("H", bytes(2 * 625 * 625))
    for i, v in enumerate(base):
        row = i * 625
        v0, v1, v2, v3 = v
        for j, w in enumerate(base):
            table[row + j] = idx[
                ((v0 + w[0]) % 5, (v1 + w[1]) % 5, (v2 + w[2]) % 5, (v3 + w[3]) % 5)
            ]
    gens = [idx[(1, 0, 0, 0)], idx[(0, 1, 0, 0)], idx[(0, 0, 1, 0)], idx[(0, 0, 0, 1)]]
    N = CayleyGroup(table, gens, labels=[str(v) for v in base], name="C5^4")
    C3 = CayleyGroup(array("H", [(a + b) % 3 for a in range(3) for b in range(3)]),
                     [1], labels=["e", "t", "t2"], name="C3")
    action = [[idx[(0, 1, 0, 0)], idx[(4, 4, 0, 0)], idx[(0, 0, 0, 1)], idx[(0, 0, 4, 4)]]]
    return semidirect_product(N, C3, action, name="5^4:3")


def _entries() -> list[CatalogEntry]:
    corpus = {"corpus"}
    two = {"2-group"}
    e = [
        ("S3", 6, "symmetric group on 3 points", corpus, _symmetric, (3,)),
        ("S4", 24, "symmetric group on 4 points", corpus, _symmetric, (4,)),
        ("S5", 120, "symmetric group on 5 points", corpus, _symmetric, (5,)),
        ("S6", 720, "symmetric group on 6 points", corpus, _symmetric, (6,)),
        ("A4", 12, "alternating group on 4 points", corpus,
         _perm, ("A4", 4, [[(0, 1, 2)], [(0, 1), (2, 3)]])),
        ("A5", 60, "alternating group on 5 points", corpus,
         _perm, ("A5", 5, [[(0, 1, 2, 3, 4)], [(0, 1, 2)]])),
        ("C2", 2, "cyclic of order 2", two, _cyclic, ("C2", 2)),
        ("C3", 3, "cyclic of order 3", set(), _cyclic, ("C3", 3)),
        ("C4", 4, "cyclic of order 4", two, _cyclic, ("C4", 4)),
        ("C5", 5, "cyclic of order 5", set(), _cyclic, ("C5", 5)),
        ("C8", 8, "cyclic of order 8", two, _cyclic, ("C8", 8)),
        ("C9", 9, "cyclic of order 9", set(), _cyclic, ("C9", 9)),
        ("C12", 12, "cyclic of order 12", corpus, _cyclic, ("C12", 12)),
        ("C2^2", 4, "elementary abelian of order 4", two, _elementary, ("C2^2", 2, 2)),
        ("C2^3", 8, "elementary abelian of order 8", two, _elementary, ("C2^3", 2, 3)),
        ("C2^4", 16, "elementary abelian of order 16", corpus | two,
         _elementary, ("C2^4", 2, 4)),
        ("C3^2", 9, "elementary abelian of order 9", corpus, _elementary, ("C3^2", 3, 2)),
        ("C5^2", 25, "elementary abelian of order 25", set(), _elementary, ("C5^2", 5, 2)),
        ("C4xC2", 8, "abelian of type (4,2)", two,
         _perm, ("C4xC2", 6, [[(0, 1, 2, 3)], [(4, 5)]])),
        ("D8", 8, "dihedral of order 8", corpus | two,
         _perm, ("D8", 4, [[(0, 1, 2, 3)], [(1, 3)]])),
        ("D16", 16, "dihedral of order 16", corpus | two,
         _perm, ("D16", 8, [[tuple(range(8))], [(1, 7), (2, 6), (3, 5)]])),
        ("Q8", 8, "quaternion group", corpus | two,
         _perm, ("Q8", 8, [[(0, 1, 2, 3), (4, 7, 5, 6)], [(0, 4, 2, 5), (1, 6, 3, 7)]])),
        ("Q16", 16, "generalized quaternion of order 16", corpus | two, _dicyclic16, ()),
        ("SD16", 16, "semidihedral of order 16", corpus | two,
         _perm, ("SD16", 8, [[tuple(range(8))], [(1, 3), (2, 6), (5, 7)]])),
        ("M16", 16, "modular maximal-cyclic of order 16", corpus | two,
         _perm, ("M16", 8, [[tuple(range(8))], [(1, 5), (3, 7)]])),
        ("C2xD8", 16, "direct product of C2 and D8", two,
         _perm, ("C2xD8", 6, [[(0, 1)], [(2, 3, 4, 5)], [(3, 5)]])),
        ("SL(2,3)", 24, "special linear group over GF(3)", corpus, _sl23, ()),
        ("GL(2,3)", 48, "general linear group over GF(3)", corpus, _gl23, ()),
        ("SL(2,5)", 120, "special linear group over GF(5)", corpus, _sl25, ()),
        ("5^4:3", 1875, "elementary abelian 5^4 by a fixed-point-free C3", corpus,
         _big_example, ()),
    ]
    out = []
    for name, order, desc, tags, fn, args in e:
        out.append(CatalogEntry(name, order, desc, frozenset(tags),
                                (lambda f=fn, a=args: f(*a))))
    return out


_ENTRIES = {entry.name: entry for entry in _entries()}
_BUILT: dict[str, FiniteGroup] = {}


def catalog() -> dict[str, CatalogEntry]:
    return dict(_ENTRIES)


def group_names() -> list[str]:
    return list(_ENTRIES)


def corpus_names() -> list[str]:
    return [n for n, e in _ENTRIES.items() if "corpus" in e.tags]


def two_group_names() -> list[str]:
    return [n for n, e in _ENTRIES.items() if "2-group" in e.tags]


def build_group(name: str, fresh: bool = False) -> FiniteGroup:
    entry = _ENTRIES.get(name)
    if entry is None:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(_ENTRIES)}")
    if fresh:
        return entry.build()
    got = _BUILT.get(name)
    if got is None:
        got = _BUILT[name] = entry.build()
    return got


def from_description(desc) -> FiniteGroup:
    """Build a group from a catalog name or a JSON description.

    Objects carry a "type": {"type": "catalog", "name": str};
    {"type": "perm", "degree": int, "generators": [cycle lists]};
    {"type": "semidirect", "normal": desc, "quotient": desc, "action":
    [cycle lists per quotient generator, one image per normal generator]}.
    """
    if isinstance(desc, str):
        return build_group(desc)
    if not isinstance(desc, dict):
        raise ValueError("group description must be a name or an object")
    kind = desc.get("type")
    if kind == "catalog":
        return build_group(desc["name"])
    if kind == "perm":
        degree = desc["degree"]
        gens = [cyc(degree, [tuple(c) for c in g]) for g in desc["generators"]]
        return PermGroup(gens, degree=degree, name=desc.get("name", f"perm{degree}"))
    if kind == "semidirect":
        N = from_description(desc["normal"])
        Q = from_description(desc["quotient"])
        if not isinstance(N, PermGroup):
            raise ValueError("semidirect descriptions act on a permutation-backed normal part")
        action = [
            [cyc(N.degree, [tuple(c) for c in img]) for img in row]
            for row in desc["action"]
        ]
        return semidirect_product(N, Q, action, name=desc.get("name", f"{N.name}:{Q.name}"))
    raise ValueError(f"unknown group description type {kind!r}")
