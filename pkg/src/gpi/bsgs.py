"""Deterministic Schreier-Sims order computation for permutation groups.

Works on raw image tuples so group handles can ask for an order before any
element enumeration happens.  The classic recursive scheme is plenty at desk
scale: orbit plus transversal at each level, Schreier generators for the
stabilizer, recurse.  Schreier generators that turn out to be the identity
are discarded before recursing, which keeps the generator sets small.
"""

from __future__ import annotations

_MAX_LEVELS = 64


def _first_moved(perm) -> int | None:
    for i, v in enumerate(perm):
        if v != i:
            return i
    return None


def _orbit_transversal(point: int, gens: list[tuple]) -> dict[int, tuple]:
    """Map each orbit point b to a group word u with u[point] == b."""
    degree = len(gens[0])
    ident = tuple(range(degree))
    transversal = {point: ident}
    frontier = [point]
    while frontier:
        nxt = []
        for b in frontier:
            u = transversal[b]
            for g in gens:
                c = g[b]
                if c not in transversal:
                    # u * g, applying u first
                    transversal[c] = tuple(g[x] for x in u)
                    nxt.append(c)
        frontier = nxt
    return transversal


def stabilizer_chain(gens) -> list[dict]:
    """Chain of (base point, transversal) pairs down to the trivial group."""
    gens = [tuple(g) for g in gens]
    gens = [g for g in gens if _first_moved(g) is not None]
    chain = []
    while gens:
        if len(chain) >= _MAX_LEVELS:
            raise RuntimeError("stabilizer chain implausibly deep; generators corrupt?")
        point = min(m for g in gens if (m := _first_moved(g)) is not None)
        transversal = _orbit_transversal(point, gens)
        chain.append({"point": point, "transversal": transversal, "gens": gens})
        # Schreier generators for the point stabilizer.  u_b * g lands in the
        # coset of u_{b^g}; the quotient is a stabilizer element, trivial
        # exactly when the two words agree.
        sub = set()
        for b, u in transversal.items():
            for g in gens:
                w = tuple(g[x] for x in u)
                t = transversal[g[b]]
                if w != t:
                    t_inv = [0] * len(t)
                    for i, v in enumerate(t):
                        t_inv[v] = i
                    s = tuple(t_inv[x] for x in w)
                    sub.add(s)
        gens = sorted(sub)
    return chain


def order_from_chain(chain: list[dict]) -> int:
    out = 1
    for level in chain:
        out *= len(level["transversal"])
    return out


def group_order(gens) -> int:
    """Order of the permutation group generated by image tuples."""
    return order_from_chain(stabilizer_chain(gens))
