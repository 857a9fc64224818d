"""Group handles with a uniform integer-id face.

Two backends exist: permutation groups (generators given as `Perm`s, order
decided by a stabilizer chain, elements enumerated lazily) and table-backed
groups (an explicit element domain with a product function; semidirect
products are the main producer).  Once materialised, every handle looks the
same: elements are the ids 0..n-1 with 0 the identity, `mul`/`inv` work on
ids, and a subgroup is a canonical frozen set of ids.  All structural
algorithms in the package are written once against that face.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import bsgs
from .arith import factorize
from .perm import Perm


@dataclass(frozen=True)
class Limits:
    """Desk-scale ceilings.  Raise them deliberately, not by accident."""

    max_elements: int = 1_000_000
    max_degree: int = 4096
    recognize_bound: int = 512
    subgroup_scan_bound: int = 256


DEFAULT_LIMITS = Limits()


class LimitExceeded(RuntimeError):
    """The computation would overrun a configured desk-scale ceiling."""


class FiniteGroup:
    """Common face of all backends.

    Subclasses fill in `order`, `_build`, `mul`, `inv` and `label`; everything
    else (element orders, conjugacy class representatives, generator
    reduction, subgroup constructors) is shared.
    """

    def __init__(self, limits: Limits | None = None, name: str = ""):
        self.limits = limits or DEFAULT_LIMITS
        self.name = name
        self.cache: dict = {}
        self._n: int | None = None
        self._gen_ids: list[int] | None = None
        self._orders: dict[int, int] = {}
        self._reduced: list[int] | None = None
        self._parent_tree: tuple[list[int], dict] | None = None

    # -- subclass contract -------------------------------------------------

    def order(self) -> int:
        raise NotImplementedError

    def _build(self) -> None:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def label(self, a: int) -> str:
        raise NotImplementedError

    # -- materialisation -----------------------------------------------------

    def materialize(self) -> "FiniteGroup":
        if self._n is None:
            if self.order() > self.limits.max_elements:
                raise LimitExceeded(
                    f"group of order {self.order()} exceeds the element ceiling "
                    f"{self.limits.max_elements}"
                )
            self._build()
        return self

    @property
    def n(self) -> int:
        self.materialize()
        assert self._n is not None
        return self._n

    @property
    def generator_ids(self) -> list[int]:
        self.materialize()
        assert self._gen_ids is not None
        return list(self._gen_ids)

    # -- shared machinery ----------------------------------------------------

    def conj(self, a: int, g: int) -> int:
        """g^-1 * a * g."""
        return self.mul(self.mul(self.inv(g), a), g)

    def commutator(self, a: int, b: int) -> int:
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def element_order(self, a: int) -> int:
        got = self._orders.get(a)
        if got is None:
            cur, got = a, 1
            while cur != 0:
                cur = self.mul(cur, a)
                got += 1
            self._orders[a] = got
        return got

    def reduced_generator_ids(self) -> list[int]:
        """A greedily pruned generating subset; orbit loops run faster on it."""
        if self._reduced is None:
            gens = [g for g in self.generator_ids if g != 0]
            keep = list(dict.fromkeys(gens))
            for g in list(keep):
                if len(keep) == 1:
                    break
                rest = [h for h in keep if h != g]
                if len(closure_ids(self, rest)) == self.n:
                    keep = rest
            self._reduced = keep
        return list(self._reduced)

    def conjugacy_class_reps(self) -> list[int]:
        got = self.cache.get("class_reps")
        if got is None:
            gens = self.reduced_generator_ids()
            seen = bytearray(self.n)
            got = []
            for a in range(self.n):
                if seen[a]:
                    continue
                got.append(a)
                seen[a] = 1
                frontier = [a]
                while frontier:
                    nxt = []
                    for x in frontier:
                        for g in gens:
                            y = self.conj(x, g)
                            if not seen[y]:
                                seen[y] = 1
                                nxt.append(y)
                    frontier = nxt
            self.cache["class_reps"] = got
        return list(got)

    def is_abelian(self) -> bool:
        gens = self.generator_ids
        return all(
            self.mul(a, b) == self.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :]
        )

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in range(self.n)), 1)

    def parent_tree(self) -> tuple[list[int], dict[int, tuple[int, int]]]:
        """BFS discovery order and parent links (parent id, generator index).

        Used to extend generator-defined homomorphisms over the whole group.
        """
        if self._parent_tree is None:
            gens = self.generator_ids
            parents: dict[int, tuple[int, int]] = {}
            seen = {0}
            order_out = [0]
            frontier = [0]
            while frontier:
                nxt = []
                for a in frontier:
                    for gi, g in enumerate(gens):
                        b = self.mul(a, g)
                        if b not in seen:
                            seen.add(b)
                            parents[b] = (a, gi)
                            order_out.append(b)
                            nxt.append(b)
                frontier = nxt
            if len(seen) != self.n:
                raise ValueError("stored generators do not generate the group")
            self._parent_tree = (order_out, parents)
        return self._parent_tree

    # -- subgroup constructors ------------------------------------------------

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,), gens=())

    def full_subgroup(self) -> "Subgroup":
        self.materialize()
        return Subgroup(self, range(self.n), gens=self.reduced_generator_ids())

    def generated(self, seed_ids) -> "Subgroup":
        seeds = [s for s in dict.fromkeys(seed_ids) if s != 0]
        return Subgroup(self, closure_ids(self, seeds), gens=seeds)

    def __repr__(self) -> str:
        tag = self.name or type(self).__name__
        return f"<{tag} order={self.order()}>"


# -- id-set algebra -----------------------------------------------------------


def closure_ids(G: FiniteGroup, seed_ids) -> frozenset:
    """Ids of the subgroup generated by the seeds (BFS over right products)."""
    gens = [s for s in dict.fromkeys(seed_ids) if s != 0]
    els = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in els:
                    els.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(els)


def product_ids(G: FiniteGroup, left, right: frozenset) -> frozenset:
    """The product set left*right, where right is a subgroup's id-set.

    Walks left cosets, so the work is proportional to the size of the result
    rather than to len(left) * len(right).
    """
    out: set[int] = set()
    for a in left:
        if a in out:
            continue
        out.update(G.mul(a, b) for b in right)
    return frozenset(out)


def conj_set(G: FiniteGroup, ids, g: int) -> frozenset:
    ig = G.inv(g)
    return frozenset(G.mul(G.mul(ig, s), g) for s in ids)


class Subgroup:
    """A subgroup of a materialised group, held as a frozen set of ids.

    The sorted id sequence is the canonical identity: two references are the
    same subgroup exactly when group and id-set agree.
    """

    __slots__ = ("group", "ids", "_gens")

    def __init__(self, group: FiniteGroup, ids, gens=None, check: bool = False):
        group.materialize()
        idset = frozenset(ids) or frozenset((0,))
        if 0 not in idset:
            raise ValueError("subgroup is missing the identity")
        if group.n % len(idset):
            raise ValueError(
                f"set of size {len(idset)} cannot be a subgroup of a group of order {group.n}"
            )
        self.group = group
        self.ids = idset
        self._gens = None if gens is None else [g for g in dict.fromkeys(gens) if g != 0]
        if check:
            self._verify()

    def _verify(self) -> None:
        if closure_ids(self.group, self.gens) != self.ids:
            raise ValueError("id-set is not closed under the group product")

    @property
    def order(self) -> int:
        return len(self.ids)

    @property
    def index(self) -> int:
        return self.group.n // len(self.ids)

    @property
    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.ids))

    @property
    def gens(self) -> list[int]:
        """A small generating list, computed greedily on first use."""
        if self._gens is None:
            gens: list[int] = []
            span = frozenset((0,))
            for e in sorted(self.ids):
                if e not in span:
                    gens.append(e)
                    span = closure_ids(self.group, gens)
                    if span == self.ids:
                        break
            if span != self.ids:
                raise ValueError("id-set is not closed under the group product")
            self._gens = gens
        return list(self._gens)

    @property
    def is_trivial(self) -> bool:
        return len(self.ids) == 1

    @property
    def is_full(self) -> bool:
        return len(self.ids) == self.group.n

    def __contains__(self, a: int) -> bool:
        return a in self.ids

    def __le__(self, other: "Subgroup") -> bool:
        self._same_ambient(other)
        return self.ids <= other.ids

    def __lt__(self, other: "Subgroup") -> bool:
        self._same_ambient(other)
        return self.ids < other.ids

    def _same_ambient(self, other: "Subgroup") -> None:
        if self.group is not other.group:
            raise ValueError("subgroups live in different ambient groups")

    def intersection(self, other: "Subgroup") -> "Subgroup":
        self._same_ambient(other)
        return Subgroup(self.group, self.ids & other.ids)

    def conjugate(self, g: int) -> "Subgroup":
        return Subgroup(
            self.group,
            conj_set(self.group, self.ids, g),
            gens=[self.group.conj(x, g) for x in self.gens],
        )

    def element_orders(self):
        return sorted(self.group.element_order(a) for a in self.ids)

    def as_group(self) -> tuple["TableGroup", dict[int, int]]:
        """Re-root as a standalone group; also returns the ambient->new id map.

        The new handle shares the ambient product, so the action is faithful
        by construction regardless of backend.
        """
        amb = self.group
        got = amb.cache.get(("asgroup", self.ids))
        if got is not None:
            return got
        domain = sorted(self.ids)
        to_new = {a: i for i, a in enumerate(domain)}
        sub = TableGroup(
            domain,
            mul_fn=amb.mul,
            inv_fn=amb.inv,
            gens=self.gens,
            label_fn=amb.label,
            limits=amb.limits,
            name=f"{amb.name}|{len(domain)}" if amb.name else f"sub{len(domain)}",
        )
        amb.cache[("asgroup", self.ids)] = (sub, to_new)
        return sub, to_new

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup) and self.group is other.group and self.ids == other.ids
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.ids))

    def __repr__(self) -> str:
        gens = ", ".join(self.group.label(g) for g in self.gens[:4])
        if len(self.gens) > 4:
            gens += ", ..."
        return f"<subgroup order={self.order} gens=[{gens}]>"


def subgroup_generated(G: FiniteGroup, elems) -> Subgroup:
    """Subgroup generated by element ids of G."""
    return G.generated(elems)


# -- permutation backend --------------------------------------------------------


class PermGroup(FiniteGroup):
    """Group generated by permutations; order comes from a stabilizer chain."""

    def __init__(
        self,
        gens,
        degree: int | None = None,
        limits: Limits | None = None,
        name: str = "",
    ):
        super().__init__(limits, name)
        gens = list(gens)
        for g in gens:
            if not isinstance(g, Perm):
                raise ValueError(f"not a Perm: {g!r}")
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise ValueError(f"generator degrees disagree: {sorted(degrees)}")
        if degree is None:
            degree = degrees.pop() if degrees else 1
        elif degrees and degrees.pop() != degree:
            raise ValueError("explicit degree disagrees with the generators")
        if degree > self.limits.max_degree:
            raise LimitExceeded(
                f"degree {degree} exceeds the ceiling {self.limits.max_degree}"
            )
        self.degree = degree
        self._given = [g for g in dict.fromkeys(gens) if not g.is_identity()]
        self._order: int | None = None
        self._els: list[tuple[int, ...]] = []
        self._ids: dict[tuple[int, ...], int] = {}
        self._inv_arr: list[int] = []

    def order(self) -> int:
        if self._order is None:
            self._order = bsgs.group_order([g.images for g in self._given]) if self._given else 1
        return self._order

    def _build(self) -> None:
        ident = tuple(range(self.degree))
        els = [ident]
        ids = {ident: 0}
        gens = [g.images for g in self._given]
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = tuple(g[x] for x in a)
                    if b not in ids:
                        ids[b] = len(els)
                        els.append(b)
                        nxt.append(b)
            frontier = nxt
        self._els = els
        self._ids = ids
        self._n = len(els)
        if self._n != self.order():
            raise RuntimeError(
                f"enumeration found {self._n} elements but the stabilizer chain says "
                f"{self.order()}"
            )
        inv = []
        for img in els:
            out = [0] * self.degree
            for i, v in enumerate(img):
                out[v] = i
            inv.append(ids[tuple(out)])
        self._inv_arr = inv
        self._gen_ids = [ids[g] for g in gens]

    def mul(self, a: int, b: int) -> int:
        bb = self._els[b]
        return self._ids[tuple(bb[x] for x in self._els[a])]

    def inv(self, a: int) -> int:
        return self._inv_arr[a]

    def act(self, a: int, point: int) -> int:
        return self._els[a][point]

    def perm(self, a: int) -> Perm:
        self.materialize()
        return Perm(self._els[a])

    def id_of_perm(self, p: Perm) -> int:
        self.materialize()
        got = self._ids.get(p.images)
        if got is None:
            raise ValueError(f"{p!r} is not an element of {self!r}")
        return got

    def label(self, a: int) -> str:
        return self.perm(a).cycle_string()


# -- table backend ---------------------------------------------------------------


class TableGroup(FiniteGroup):
    """Group over an explicit element domain with caller-supplied operations.

    domain[0] must be the identity.  Used for re-rooted subgroups (domain =
    ambient ids) and for small hand-built groups with a product formula.
    """

    def __init__(
        self,
        domain,
        mul_fn,
        inv_fn,
        gens=None,
        label_fn=None,
        limits: Limits | None = None,
        name: str = "",
    ):
        super().__init__(limits, name)
        self._domain = list(domain)
        if len(self._domain) > self.limits.max_elements:
            raise LimitExceeded(
                f"domain of size {len(self._domain)} exceeds the element ceiling"
            )
        if not self._domain:
            raise ValueError("empty domain")
        self._mul_fn = mul_fn
        self._inv_fn = inv_fn
        self._label_fn = label_fn
        self._given_gens = list(gens) if gens is not None else None
        e = self._domain[0]
        if mul_fn(e, e) != e:
            raise ValueError("domain[0] is not the identity")

    def order(self) -> int:
        return len(self._domain)

    def _build(self) -> None:
        self._n = len(self._domain)
        self._ids = {x: i for i, x in enumerate(self._domain)}
        if len(self._ids) != self._n:
            raise ValueError("domain contains repeated elements")
        if self._given_gens is None:
            gens = [i for i in range(1, self._n)]
        else:
            gens = [self._ids[x] if x in self._ids else x for x in self._given_gens]
            for g in gens:
                if not isinstance(g, int) or not 0 <= g < self._n:
                    raise ValueError(f"generator {g!r} is not in the domain")
        self._gen_ids = gens

    def mul(self, a: int, b: int) -> int:
        return self._ids[self._mul_fn(self._domain[a], self._domain[b])]

    def inv(self, a: int) -> int:
        return self._ids[self._inv_fn(self._domain[a])]

    def raw(self, a: int):
        return self._domain[a]

    def id_of(self, x) -> int:
        self.materialize()
        got = self._ids.get(x)
        if got is None:
            raise ValueError(f"{x!r} is not in the domain")
        return got

    def label(self, a: int) -> str:
        if self._label_fn is not None:
            return self._label_fn(self._domain[a])
        return repr(self._domain[a])


class CayleyGroup(FiniteGroup):
    """Group over ids 0..n-1 with a flat precomputed product table.

    The fastest backend by a wide margin; used where products dominate the
    runtime (the normal part of large semidirect products).
    """

    def __init__(self, table, gens, labels=None, limits: Limits | None = None, name: str = ""):
        super().__init__(limits, name)
        self._table = table
        n = math.isqrt(len(table))
        if n * n != len(table):
            raise ValueError("table length is not a perfect square")
        if n > self.limits.max_elements:
            raise LimitExceeded(f"table for {n} elements exceeds the element ceiling")
        self._size = n
        for a in range(n):
            if table[a * n] != a or table[a] != a:
                raise ValueError("row 0 and column 0 must fix every element")
        inv = [-1] * n
        for a in range(n):
            row = table[a * n : (a + 1) * n]
            for b, v in enumerate(row):
                if v == 0:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise ValueError(f"element {a} has no inverse; not a group table")
        self._inv_arr = inv
        self._gens = [g for g in dict.fromkeys(gens) if g != 0]
        self._labels = list(labels) if labels is not None else None

    def order(self) -> int:
        return self._size

    def _build(self) -> None:
        self._n = self._size
        self._gen_ids = list(self._gens)

    def mul(self, a: int, b: int) -> int:
        return self._table[a * self._size + b]

    def inv(self, a: int) -> int:
        return self._inv_arr[a]

    def label(self, a: int) -> str:
        return self._labels[a] if self._labels else str(a)


# -- homomorphism extension --------------------------------------------------------


def hom_from_generators(G: FiniteGroup, gen_images: list[int], target_mul, target_identity=0):
    """Extend generator images to a map on all of G along the BFS parent tree.

    Returns the full image list; the caller decides what to validate.  The
    extension is well defined only if the assignment really is a
    homomorphism, so run `hom_defect` afterwards.
    """
    order_out, parents = G.parent_tree()
    if len(gen_images) != len(G.generator_ids):
        raise ValueError("one image per generator, in order, is required")
    phi: list = [None] * G.n
    phi[0] = target_identity
    for e in order_out[1:]:
        p, gi = parents[e]
        phi[e] = target_mul(phi[p], gen_images[gi])
    return phi


def hom_defect(G: FiniteGroup, phi, target_mul) -> tuple[int, int] | None:
    """First (element, generator) pair violating phi(e*g) == phi(e)*phi(g), if any."""
    for e in range(G.n):
        pe = phi[e]
        for g in G.generator_ids:
            if phi[G.mul(e, g)] != target_mul(pe, phi[g]):
                return (e, g)
    return None


# -- semidirect products -------------------------------------------------------------


class SemidirectGroup(FiniteGroup):
    """Table-backed product N x| Q with (n1,q1)(n2,q2) = (n1 * q1(n2), q1 q2)."""

    def __init__(self, N: FiniteGroup, Q: FiniteGroup, auts, limits=None, name=""):
        super().__init__(limits or N.limits, name)
        self.N = N
        self.Q = Q
        self._auts = auts
        self._qn = Q.n
        if N.n * Q.n > self.limits.max_elements:
            raise LimitExceeded(
                f"product of order {N.n * Q.n} exceeds the element ceiling"
            )

    def order(self) -> int:
        return self.N.n * self.Q.n

    def _build(self) -> None:
        qn = self._qn
        self._n = self.N.n * qn
        self._gen_ids = [ng * qn for ng in self.N.generator_ids] + list(self.Q.generator_ids)

    def mul(self, a: int, b: int) -> int:
        qn = self._qn
        n1, q1 = divmod(a, qn)
        n2, q2 = divmod(b, qn)
        return self.N.mul(n1, self._auts[q1][n2]) * qn + self.Q.mul(q1, q2)

    def inv(self, a: int) -> int:
        qn = self._qn
        n, q = divmod(a, qn)
        qi = self.Q.inv(q)
        return self._auts[qi][self.N.inv(n)] * qn + qi

    def label(self, a: int) -> str:
        n, q = divmod(a, self._qn)
        return f"({self.N.label(n)}; {self.Q.label(q)})"

    def normal_part(self) -> Subgroup:
        qn = self._qn
        return Subgroup(
            self,
            (i * qn for i in range(self.N.n)),
            gens=[g * qn for g in self.N.generator_ids],
        )

    def encode(self, n_id: int, q_id: int) -> int:
        return n_id * self._qn + q_id


def semidirect_product(N: FiniteGroup, Q: FiniteGroup, action, limits=None, name="") -> SemidirectGroup:
    """Build N x| Q from the action of Q's generators on N's generators.

    `action[i][j]` is the image of N's j-th generator under the automorphism
    attached to Q's i-th generator, given as an N element id or a Perm (for
    permutation-backed N).  The assignment is validated: each generator image
    list must extend to an automorphism of N, and the automorphisms must
    compose the way Q's generators multiply.
    """
    N.materialize()
    Q.materialize()
    ngens = N.generator_ids
    qgens = Q.generator_ids
    if len(action) != len(qgens):
        raise ValueError(f"need one action row per quotient generator ({len(qgens)})")

    base_auts = []
    for qi, row in enumerate(action):
        row = list(row)
        if len(row) != len(ngens):
            raise ValueError(
                f"action row {qi} has {len(row)} images; the normal part has {len(ngens)} generators"
            )
        images = [N.id_of_perm(x) if isinstance(x, Perm) else x for x in row]
        aut = hom_from_generators(N, images, N.mul)
        bad = hom_defect(N, aut, N.mul)
        if bad is not None:
            raise ValueError(
                f"action row {qi} does not define an endomorphism of the normal part; "
                f"first failure at element pair {bad}"
            )
        if len(set(aut)) != N.n:
            raise ValueError(f"action row {qi} defines a non-bijective endomorphism")
        base_auts.append(aut)

    # Extend q -> aut_q over all of Q along its parent tree, then verify that
    # the extension is a homomorphism into Aut(N) (left action).
    order_out, parents = Q.parent_tree()
    auts: list = [None] * Q.n
    auts[0] = list(range(N.n))
    gen_aut = {g: base_auts[i] for i, g in enumerate(qgens)}
    for q in order_out[1:]:
        p, gi = parents[q]
        pa, ga = auts[p], base_auts[gi]
        auts[q] = [pa[ga[x]] for x in range(N.n)]
    for q in range(Q.n):
        qa = auts[q]
        for g, ga in gen_aut.items():
            prod = Q.mul(q, g)
            expect = [qa[ga[x]] for x in range(N.n)]
            if auts[prod] != expect:
                raise ValueError(
                    f"action is not a homomorphism: quotient pair ({q}, {g}) misbehaves"
                )
    return SemidirectGroup(N, Q, auts, limits=limits or N.limits, name=name)


def direct_product(A: FiniteGroup, B: FiniteGroup, limits=None, name="") -> SemidirectGroup:
    """Direct product as a semidirect product with trivial action."""
    A.materialize()
    B.materialize()
    trivial = [[g for g in A.generator_ids] for _ in B.generator_ids]
    return semidirect_product(A, B, trivial, limits=limits, name=name)


# -- quotients ------------------------------------------------------------------------


class QuotientMap:
    """Projection G -> G/N for the coset action quotient."""

    def __init__(self, group: FiniteGroup, quot: PermGroup, sub: Subgroup, labels, reps):
        self.group = group
        self.quot = quot
        self.sub = sub
        self.labels = labels
        self.reps = reps
        self._proj: dict[int, int] = {}

    def __call__(self, gid: int) -> int:
        got = self._proj.get(gid)
        if got is None:
            G, labels, reps = self.group, self.labels, self.reps
            img = tuple(labels[G.mul(r, gid)] for r in reps)
            got = self.quot.id_of_perm(Perm(img))
            self._proj[gid] = got
        return got

    def image(self, sub: Subgroup) -> Subgroup:
        if sub.group is not self.group:
            raise ValueError("subgroup lives in a different group")
        return self.quot.generated([self(g) for g in sub.gens])

    def preimage(self, subq: Subgroup) -> Subgroup:
        """Pull back a subgroup of the quotient; costs one scan, no products."""
        if subq.group is not self.quot:
            raise ValueError("subgroup does not live in the quotient")
        cosets = {self.quot.act(w, 0) for w in subq.ids}
        ids = [g for g, c in enumerate(self.labels) if c in cosets]
        return Subgroup(self.group, ids)

    def kernel(self) -> Subgroup:
        return Subgroup(self.group, (g for g, c in enumerate(self.labels) if c == 0))


def is_normal(G: FiniteGroup, sub: Subgroup) -> bool:
    if sub.group is not G:
        raise ValueError("subgroup lives in a different group")
    ids = sub.ids
    return all(G.conj(m, g) in ids for g in G.reduced_generator_ids() for m in sub.gens)


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[PermGroup, QuotientMap]:
    """G/N as a permutation group on the cosets of N, plus the projection."""
    G.materialize()
    if not is_normal(G, N):
        raise ValueError("cannot form the quotient: subgroup is not normal")
    k = G.n // N.order
    if k > G.limits.max_degree:
        raise LimitExceeded(f"index {k} exceeds the degree ceiling {G.limits.max_degree}")

    labels = [-1] * G.n
    reps = [0]
    for m in N.ids:
        labels[m] = 0
    frontier = [0]
    gens = G.reduced_generator_ids()
    while frontier:
        nxt = []
        for r in frontier:
            for g in gens:
                t = G.mul(r, g)
                if labels[t] < 0:
                    c = len(reps)
                    reps.append(t)
                    for m in N.ids:
                        labels[G.mul(m, t)] = c
                    nxt.append(t)
        frontier = nxt
    if len(reps) != k:
        raise RuntimeError("coset walk lost cosets; product tables corrupt?")

    qgens = [
        Perm(tuple(labels[G.mul(r, g)] for r in reps)) for g in G.generator_ids
    ]
    quot = PermGroup(
        qgens,
        degree=k,
        limits=G.limits,
        name=f"{G.name}/N{N.order}" if G.name else f"quotient{k}",
    )
    quot.materialize()
    if quot.n != k:
        raise RuntimeError("coset action is not regular on the cosets; N not normal?")
    return quot, QuotientMap(G, quot, N, labels, reps)


# -- small-group recognition ------------------------------------------------------------


class StructureFingerprint:
    """Order statistics of a small group, with the handful of shape tests we need."""

    def __init__(self, order: int, abelian: bool, histogram: dict[int, int]):
        self.order = order
        self.abelian = abelian
        self.histogram = dict(sorted(histogram.items()))
        self.exponent = math.lcm(*self.histogram, 1)

    @property
    def is_cyclic(self) -> bool:
        return self.histogram.get(self.order, 0) > 0

    @property
    def involutions(self) -> int:
        return self.histogram.get(2, 0)

    def _two_group_with_cyclic_maximal(self) -> bool:
        fac = factorize(self.order)
        if set(fac) != {2} or self.order < 8:
            return False
        return self.histogram.get(self.order // 2, 0) > 0

    @property
    def is_dihedral_2group(self) -> bool:
        return (
            not self.abelian
            and self._two_group_with_cyclic_maximal()
            and self.involutions == self.order // 2 + 1
        )

    @property
    def is_semidihedral_2group(self) -> bool:
        return (
            not self.abelian
            and self.order >= 16
            and self._two_group_with_cyclic_maximal()
            and self.involutions == self.order // 4 + 1
        )

    @property
    def is_generalized_quaternion(self) -> bool:
        return (
            not self.abelian
            and self._two_group_with_cyclic_maximal()
            and self.involutions == 1
        )

    @property
    def is_q8(self) -> bool:
        return self.order == 8 and self.is_generalized_quaternion

    def is_elementary_abelian(self, p: int) -> bool:
        return self.abelian and (self.order == 1 or (self.exponent == p and factorize(self.order).keys() == {p}))

    def __repr__(self) -> str:
        return (
            f"<fingerprint order={self.order} abelian={self.abelian} "
            f"orders={self.histogram}>"
        )


def recognize_small(x) -> StructureFingerprint:
    """Fingerprint a group or subgroup of order up to the recognition bound."""
    if isinstance(x, Subgroup):
        G, ids, gens = x.group, sorted(x.ids), x.gens
    else:
        G = x.materialize()
        ids, gens = range(G.n), G.generator_ids
    bound = G.limits.recognize_bound
    if len(ids) > bound:
        raise LimitExceeded(f"recognition is limited to order <= {bound}")
    hist: dict[int, int] = {}
    for a in ids:
        o = G.element_order(a)
        hist[o] = hist.get(o, 0) + 1
    abelian = all(
        G.mul(a, b) == G.mul(b, a) for i, a in enumerate(gens) for b in list(gens)[i + 1 :]
    )
    return StructureFingerprint(len(ids), abelian, hist)
