"""Normal subgroup lattice, chief series, and the predicates built on them.

The lattice is generated from principal normal closures (one per conjugacy
class) and cached on the group handle, as are the minimal normal overgroups
of each visited subgroup; those are the successor moves of every series walk
in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import factorize, is_prime, p_part
from .groups import FiniteGroup, Subgroup, is_normal, product_ids, quotient
from .structure import centre, normal_closure


def principal_normal_closures(G: FiniteGroup) -> list[Subgroup]:
    """Normal closures of single elements, one per conjugacy class, deduped."""
    got = G.cache.get("principal_closures")
    if got is None:
        seen: dict[frozenset, Subgroup] = {}
        for rep in G.conjugacy_class_reps():
            if rep == 0:
                continue
            P = normal_closure(G, [rep])
            seen.setdefault(P.ids, P)
        got = sorted(seen.values(), key=lambda S: (S.order, S.sorted_ids))
        G.cache["principal_closures"] = got
    return list(got)


def _join_normal(G: FiniteGroup, A: Subgroup, B: Subgroup) -> Subgroup:
    # Both normal, so the product set is already the join.
    if A.ids <= B.ids:
        return B
    if B.ids <= A.ids:
        return A
    return Subgroup(G, product_ids(G, A.ids, B.ids), gens=A.gens + B.gens)


def minimal_normal_overgroups(G: FiniteGroup, N: Subgroup) -> list[Subgroup]:
    """Normal subgroups M > N with nothing normal strictly between.

    Every normal overgroup of N contains the closure of one of its elements,
    so the inclusion-minimal joins N v P over principal closures P are exactly
    the chief steps out of N.
    """
    table = G.cache.setdefault("min_overgroups", {})
    key = N.sorted_ids
    got = table.get(key)
    if got is None:
        cand: dict[frozenset, Subgroup] = {}
        for P in principal_normal_closures(G):
            if P.ids <= N.ids:
                continue
            J = _join_normal(G, N, P)
            cand.setdefault(J.ids, J)
        got = []
        for J in sorted(cand.values(), key=lambda S: (S.order, S.sorted_ids)):
            if not any(R.ids <= J.ids for R in got):
                got.append(J)
        table[key] = got
    return list(got)


def minimal_normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    if G.n == 1:
        raise ValueError("the trivial group has no minimal normal subgroups")
    return minimal_normal_overgroups(G, G.trivial_subgroup())


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """The full normal subgroup lattice, as a join-closure of the principal ones."""
    got = G.cache.get("normal_lattice")
    if got is None:
        triv = G.trivial_subgroup()
        seen: dict[frozenset, Subgroup] = {triv.ids: triv}
        frontier = [triv]
        prins = principal_normal_closures(G)
        while frontier:
            nxt = []
            for N in frontier:
                for P in prins:
                    if P.ids <= N.ids:
                        continue
                    J = _join_normal(G, N, P)
                    if J.ids not in seen:
                        seen[J.ids] = J
                        nxt.append(J)
            frontier = nxt
        got = sorted(seen.values(), key=lambda S: (S.order, S.sorted_ids))
        G.cache["normal_lattice"] = got
    return list(got)


@dataclass
class ChiefSeries:
    """A maximal normal chain 1 = T0 < T1 < ... < Tk = G."""

    group: FiniteGroup
    terms: list[Subgroup]

    def factors(self) -> list[tuple[Subgroup, Subgroup]]:
        return list(zip(self.terms, self.terms[1:]))

    def factor_orders(self) -> list[int]:
        return [m.order // k.order for k, m in self.factors()]

    def __len__(self) -> int:
        return len(self.terms) - 1

    def validate(self) -> None:
        terms = self.terms
        G = self.group
        if not terms or not terms[0].is_trivial or not terms[-1].is_full:
            raise ValueError("series must run from the trivial subgroup to the group")
        for K, M in self.factors():
            if not K < M:
                raise ValueError("series terms must increase strictly")
            if not is_normal(G, M):
                raise ValueError("series term is not normal")
            if M not in minimal_normal_overgroups(G, K):
                raise ValueError(
                    f"factor of order {M.order // K.order} above order {K.order} "
                    "is not a chief factor"
                )

    def describe(self) -> str:
        return " < ".join(str(t.order) for t in self.terms)


def one_chief_series(G: FiniteGroup) -> ChiefSeries:
    """The deterministic chief series: always take the first minimal step."""
    G.materialize()
    terms = [G.trivial_subgroup()]
    while not terms[-1].is_full:
        terms.append(minimal_normal_overgroups(G, terms[-1])[0])
    return ChiefSeries(G, terms)


def chief_factors(G: FiniteGroup) -> list[tuple[Subgroup, Subgroup]]:
    return one_chief_series(G).factors()


# -- series-driven predicates.  Factor orders are series-independent, so one
# -- deterministic series decides each of these.


def is_soluble(G: FiniteGroup) -> bool:
    return all(len(factorize(k)) == 1 for k in one_chief_series(G).factor_orders())


def is_p_soluble(G: FiniteGroup, p: int) -> bool:
    return all(
        k % p or factorize(k).keys() == {p} for k in one_chief_series(G).factor_orders()
    )


def is_supersoluble(G: FiniteGroup) -> bool:
    return all(len(factorize(k)) == 1 and max(factorize(k).values()) == 1
               for k in one_chief_series(G).factor_orders())


def is_p_supersoluble(G: FiniteGroup, p: int) -> bool:
    return all(k % p or k == p for k in one_chief_series(G).factor_orders())


def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """O_p(G): the largest normal p-subgroup, read off the lattice."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    members = [N for N in normal_subgroups(G) if factorize(N.order).keys() <= {p}]
    top = max(members, key=lambda N: N.order)
    bad = [N for N in members if not N <= top]
    if bad:
        raise RuntimeError("normal p-subgroups are not directed; lattice corrupt?")
    return top


def p_prime_core(G: FiniteGroup, p: int) -> Subgroup:
    """O_{p'}(G): the largest normal subgroup of order prime to p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    members = [N for N in normal_subgroups(G) if N.order % p]
    top = max(members, key=lambda N: N.order)
    bad = [N for N in members if not N <= top]
    if bad:
        raise RuntimeError("normal p'-subgroups are not directed; lattice corrupt?")
    return top


def fitting_subgroup(G: FiniteGroup) -> Subgroup:
    out = G.trivial_subgroup()
    for p in factorize(G.n):
        out = _join_normal(G, out, p_core(G, p))
    return out


def socle(G: FiniteGroup) -> Subgroup:
    out = G.trivial_subgroup()
    for M in minimal_normal_subgroups(G):
        out = _join_normal(G, out, M)
    return out


def hypercenter(G: FiniteGroup) -> Subgroup:
    """Top of the ascending central series."""
    cur = centre(G)
    while not (cur.is_trivial or cur.is_full):
        Q, pr = quotient(G, cur)
        z = centre(Q)
        if z.is_trivial:
            break
        cur = pr.preimage(z)
    return cur


def is_nilpotent(G: FiniteGroup) -> bool:
    return hypercenter(G).is_full


def is_p_nilpotent(G: FiniteGroup, p: int) -> bool:
    """A normal p-complement exists: |G : O_{p'}(G)| is the p-part of |G|."""
    return G.n // p_prime_core(G, p).order == p_part(G.n, p)


@dataclass
class UpperPSeries:
    """Strict terms of 1 <= O_{p'} <= preimage of O_p <= ... up to G.

    `kinds` records, per step, whether the jump was a p'-step or a p-step.
    """

    group: FiniteGroup
    p: int
    terms: list[Subgroup]
    kinds: list[str]

    @property
    def p_length(self) -> int:
        return self.kinds.count("p")


def upper_p_series(G: FiniteGroup, p: int) -> UpperPSeries:
    terms = [G.trivial_subgroup()]
    kinds: list[str] = []
    want = "p'"
    misses = 0
    while not terms[-1].is_full:
        if terms[-1].is_trivial:
            # Quotient by 1 is the group itself; skip the coset action.
            core = p_prime_core(G, p) if want == "p'" else p_core(G, p)
            lifted = core
        else:
            Q, pr = quotient(G, terms[-1])
            core = p_prime_core(Q, p) if want == "p'" else p_core(Q, p)
            lifted = pr.preimage(core)
        if core.is_trivial:
            misses += 1
            if misses == 2:
                raise ValueError(f"group is not {p}-soluble; upper {p}-series stalls")
        else:
            misses = 0
            terms.append(lifted)
            kinds.append(want)
        want = "p" if want == "p'" else "p'"
    return UpperPSeries(G, p, terms, kinds)


def p_length(G: FiniteGroup, p: int) -> int:
    return upper_p_series(G, p).p_length
