"""Deciding the partial Pi-property of a subgroup over chief series.

A subgroup H of G has the property when some chief series
1 = T0 < T1 < ... < Tn = G exists such that for every factor M/K the
normalizer of (HK meet M)/K in G/K has index a pi-number, where pi is
the set of primes dividing |(HK meet M)/K|.  A trivial meet makes the
factor pass vacuously: pi is empty and only the index 1 is an
empty-pi-number.

Everything is evaluated inside G.  With K normal and K <= M, the
modular law gives HK meet M = (H meet M)K, and the preimage of the
normalizer of (HK meet M)/K is the normalizer of HK meet M, so the
index in the quotient equals the index in G.  No quotient group is
ever materialised on this path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import is_pi_number, prime_set
from .groups import FiniteGroup, Subgroup, is_normal, product_ids
from .series import ChiefSeries, minimal_normal_overgroups
from .structure import normalizer_index


@dataclass(frozen=True)
class FactorCheck:
    """One chief factor M/K tested against a fixed subgroup H."""

    k_order: int
    m_order: int
    meet_order: int
    index: int
    pi: tuple[int, ...]
    passed: bool

    @property
    def vacuous(self) -> bool:
        return self.meet_order == self.k_order

    def to_json(self) -> dict:
        return {
            "k": self.k_order,
            "m": self.m_order,
            "meet": self.meet_order,
            "index": self.index,
            "pi": list(self.pi),
            "passed": self.passed,
        }


def factor_condition(G: FiniteGroup, H: Subgroup, K: Subgroup, M: Subgroup) -> FactorCheck:
    """Test the factor M/K against H, entirely inside G."""
    meet = product_ids(G, H.ids & M.ids, K.ids)
    pi = prime_set(len(meet) // K.order)
    if len(meet) == K.order or len(meet) == M.order:
        # The meet is K or M itself; both are normal, so the index is 1.
        return FactorCheck(K.order, M.order, len(meet), 1, pi, True)
    idx = normalizer_index(G, meet)
    return FactorCheck(K.order, M.order, len(meet), idx, pi, is_pi_number(idx, pi))


@dataclass
class PiWitness:
    """A chief series over which every factor check passes."""

    group: FiniteGroup
    subgroup: Subgroup
    terms: list[Subgroup]
    checks: list[FactorCheck]

    satisfied = True

    def series(self) -> ChiefSeries:
        return ChiefSeries(self.group, self.terms)

    def verify(self) -> bool:
        """Revalidate the series and recompute every factor from scratch."""
        try:
            self.series().validate()
        except ValueError:
            return False
        if len(self.checks) != len(self.terms) - 1:
            return False
        for K, M, want in zip(self.terms, self.terms[1:], self.checks):
            if factor_condition(self.group, self.subgroup, K, M) != want:
                return False
            if not want.passed:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "verdict": "witness",
            "subgroup": _describe(self.subgroup),
            "series": [t.order for t in self.terms],
            "checks": [c.to_json() for c in self.checks],
        }


@dataclass
class PiRefusal:
    """Proof that no chief series works: every maximal normal chain from
    the trivial subgroup runs into a blocked term.

    `blocked` maps each explored term to the checks of all its chief
    factors; entries that passed lead to terms that are blocked too.
    """

    group: FiniteGroup
    subgroup: Subgroup
    blocked: list[tuple[Subgroup, list[FactorCheck]]] = field(repr=False)

    satisfied = False

    @property
    def explored(self) -> int:
        return len(self.blocked)

    def to_json(self) -> dict:
        return {
            "verdict": "refusal",
            "subgroup": _describe(self.subgroup),
            "explored": self.explored,
            "blocked": [
                {"at": state.order, "factors": [c.to_json() for c in checks]}
                for state, checks in self.blocked
            ],
        }


def _describe(H: Subgroup) -> dict:
    return {
        "order": H.order,
        "generators": [H.group.label(g) for g in H.gens],
    }


def satisfies_partial_pi(G: FiniteGroup, H: Subgroup, reverse: bool = False):
    """Decide the property for H in G.

    Depth-first search over the chief series tree, one minimal normal
    overgroup at a time.  Terms from which no passing completion exists
    are memoised, so each is expanded once.  `reverse` flips the
    successor order; the verdict must not depend on it.
    """
    G.materialize()
    if H.group is not G:
        raise ValueError("subgroup belongs to a different group")
    key = ("pi", H.ids, reverse)
    got = G.cache.get(key)
    if got is not None:
        return got

    dead: dict[frozenset[int], list[FactorCheck]] = {}

    def explore(state: Subgroup, terms: list[Subgroup], checks: list[FactorCheck]):
        if state.is_full:
            return PiWitness(G, H, terms, checks)
        seen: list[FactorCheck] = []
        succ = minimal_normal_overgroups(G, state)
        for M in reversed(succ) if reverse else succ:
            fc = factor_condition(G, H, state, M)
            seen.append(fc)
            if not fc.passed or M.ids in dead:
                continue
            found = explore(M, terms + [M], checks + [fc])
            if found is not None:
                return found
        dead[state.ids] = seen
        return None

    trivial = G.trivial_subgroup()
    found = explore(trivial, [trivial], [])
    if found is None:
        states = sorted(dead, key=lambda ids: (len(ids), sorted(ids)))
        found = PiRefusal(G, H, [(Subgroup(G, ids), dead[ids]) for ids in states])
    G.cache[key] = found
    return found


def satisfies_partial_pi_within(G: FiniteGroup, H: Subgroup, N: Subgroup, reverse: bool = False):
    """Decide the property for H inside the intermediate group N."""
    if not H.ids <= N.ids:
        raise ValueError("subgroup does not lie inside the intermediate group")
    sub, to_new = N.as_group()
    H2 = Subgroup(sub, frozenset(to_new[a] for a in H.ids))
    return satisfies_partial_pi(sub, H2, reverse=reverse)


def witness_series_through(G: FiniteGroup, H: Subgroup, N: Subgroup) -> PiWitness | None:
    """A passing chief series with N as one of its terms, if one exists.

    While the current term does not yet contain N, only steps inside N
    are taken; maximal normal chains below N end at N, so any witness
    found here passes through it.
    """
    G.materialize()
    if not H.ids <= N.ids:
        raise ValueError("subgroup does not lie inside the target term")
    if not is_normal(G, N):
        raise ValueError("target term is not normal")

    dead: set[frozenset[int]] = set()

    def explore(state: Subgroup, terms: list[Subgroup], checks: list[FactorCheck]):
        if state.is_full:
            return PiWitness(G, H, terms, checks)
        succ = minimal_normal_overgroups(G, state)
        if not N.ids <= state.ids:
            succ = [M for M in succ if M.ids <= N.ids]
        for M in succ:
            fc = factor_condition(G, H, state, M)
            if not fc.passed or M.ids in dead:
                continue
            found = explore(M, terms + [M], checks + [fc])
            if found is not None:
                return found
        dead.add(state.ids)
        return None

    trivial = G.trivial_subgroup()
    return explore(trivial, [trivial], [])
