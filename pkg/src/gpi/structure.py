"""Pointwise structural operators: normalizers, centralizers, closures, residuals.

Everything lattice-shaped (normal subgroup enumeration, chief series, cores,
socle) lives in `series`; this module stays at the level of single subgroups
and element scans.
"""

from __future__ import annotations

from .arith import factorize
from .groups import FiniteGroup, Subgroup, closure_ids, conj_set


def normalizer(G: FiniteGroup, sub: Subgroup) -> Subgroup:
    """N_G(H) by a full element scan; fine at desk scale, not for hot loops."""
    ids, gens = sub.ids, sub.gens
    return Subgroup(G, (g for g in range(G.n) if all(G.conj(m, g) in ids for m in gens)))


def normalizer_index(G: FiniteGroup, ids) -> int:
    """|G : N_G(H)| as the size of the conjugation orbit of H's id-set.

    This is the hot path of the factor checks: no normalizer is materialised,
    and each orbit point costs two products per element of H.
    """
    if isinstance(ids, Subgroup):
        ids = ids.ids
    start = ids if isinstance(ids, frozenset) else frozenset(ids)
    gens = G.reduced_generator_ids()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for S in frontier:
            for g in gens:
                T = conj_set(G, S, g)
                if T not in seen:
                    seen.add(T)
                    nxt.append(T)
        frontier = nxt
    return len(seen)


def centralizer(G: FiniteGroup, elems) -> Subgroup:
    if isinstance(elems, Subgroup):
        elems = elems.gens
    elems = list(elems)
    return Subgroup(
        G, (g for g in range(G.n) if all(G.mul(g, a) == G.mul(a, g) for a in elems))
    )


def centre(G: FiniteGroup) -> Subgroup:
    return centralizer(G, G.reduced_generator_ids())


def factor_centralizer(G: FiniteGroup, L: Subgroup, K: Subgroup) -> Subgroup:
    """C_G(L/K): elements whose commutator with all of L falls into K.

    K must be normal in G and contained in L; generators of L then suffice.
    """
    if not K <= L:
        raise ValueError("K must be contained in L")
    kids, lgens = K.ids, L.gens
    return Subgroup(
        G,
        (g for g in range(G.n) if all(G.commutator(g, m) in kids for m in lgens)),
    )


def normal_closure(G: FiniteGroup, seed_ids) -> Subgroup:
    """Smallest normal subgroup of G containing the seeds.

    Generators are grown one conjugate at a time, so the closure is recomputed
    only when the subgroup actually grows.
    """
    gens = G.reduced_generator_ids()
    hgens = [s for s in dict.fromkeys(seed_ids) if s != 0]
    H = closure_ids(G, hgens)
    grew = True
    while grew:
        grew = False
        for x in list(hgens):
            for g in gens:
                y = G.conj(x, g)
                if y not in H:
                    hgens.append(y)
                    H = closure_ids(G, hgens)
                    grew = True
    return Subgroup(G, H, gens=hgens)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    gens = G.reduced_generator_ids()
    comms = {G.commutator(a, b) for a in gens for b in gens}
    return normal_closure(G, comms)


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    """G >= G' >= G'' >= ... down to the stable term (included once)."""
    out = [G.full_subgroup()]
    while True:
        cur = out[-1]
        sub, to_new = cur.as_group()
        der = derived_subgroup(sub)
        back = sorted(cur.sorted_ids[i] for i in der.ids)
        nxt = Subgroup(G, back)
        if nxt == cur:
            return out
        out.append(nxt)


def is_perfect(G: FiniteGroup) -> bool:
    return derived_subgroup(G).is_full


def p_residual(G: FiniteGroup, p: int) -> Subgroup:
    """O^p(G): generated by all elements of order prime to p."""
    if p not in factorize(G.n):
        raise ValueError(f"{p} does not divide the group order {G.n}")
    return normal_closure(
        G, (a for a in range(G.n) if G.element_order(a) % p)
    )


def p_prime_residual(G: FiniteGroup, p: int) -> Subgroup:
    """O^{p'}(G): generated by all elements of p-power order."""
    if p not in factorize(G.n):
        raise ValueError(f"{p} does not divide the group order {G.n}")
    pk = 1
    while G.n % (pk * p) == 0:
        pk *= p
    return normal_closure(
        G, (a for a in range(G.n) if pk % G.element_order(a) == 0)
    )


def frattini_subgroup_of_p_subgroup(sub: Subgroup, p: int) -> Subgroup:
    """Frattini subgroup of a p-subgroup: commutators and p-th powers.

    Returned as a subgroup of the same ambient group.
    """
    if factorize(sub.order).keys() - {p}:
        raise ValueError(f"subgroup of order {sub.order} is not a {p}-group")
    G = sub.group
    seeds = {G.commutator(a, b) for a in sub.gens for b in sub.gens}
    seeds |= {_power(G, x, p) for x in sub.ids}
    return Subgroup(G, closure_ids(G, seeds), gens=sorted(seeds - {0}))


def _power(G: FiniteGroup, a: int, k: int) -> int:
    out = 0
    for _ in range(k):
        out = G.mul(out, a)
    return out


def element_power(G: FiniteGroup, a: int, k: int) -> int:
    """a**k on ids, with negative powers via the inverse."""
    if k < 0:
        return element_power(G, G.inv(a), -k)
    out, base = 0, a
    while k:
        if k & 1:
            out = G.mul(out, base)
        base = G.mul(base, base)
        k >>= 1
    return out
