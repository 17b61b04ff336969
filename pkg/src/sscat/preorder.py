"""Finite relations, preorders and Alexandroff topologies."""

from __future__ import annotations

from itertools import chain, combinations
from typing import Hashable, Iterable, Sequence

import networkx as nx

from .category import FiniteCategory


def _key(x):
    return (type(x).__name__, str(x))


class Relation:
    """A binary relation on a finite domain."""

    def __init__(self, domain: Iterable[Hashable], pairs: Iterable[tuple]):
        self.domain = tuple(dict.fromkeys(domain))
        self.pairs = frozenset((a, b) for a, b in pairs)
        dom = set(self.domain)
        bad = [(a, b) for a, b in self.pairs if a not in dom or b not in dom]
        if bad:
            raise ValueError(f"pairs outside the domain: {bad[:3]}")

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return set(self.domain) == set(other.domain) and self.pairs == other.pairs

    def __hash__(self):
        return hash((frozenset(self.domain), self.pairs))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.domain)}, {sorted(self.pairs, key=lambda p: (_key(p[0]), _key(p[1])))})"

    def __contains__(self, pair):
        return pair in self.pairs

    def le(self, a, b) -> bool:
        return (a, b) in self.pairs

    def is_reflexive(self) -> bool:
        return all((a, a) in self.pairs for a in self.domain)

    def is_transitive(self) -> bool:
        succ = self.successors()
        return all(c in succ[a] for a, b in self.pairs for c in succ[b])

    def is_antisymmetric(self) -> bool:
        return all(a == b or (b, a) not in self.pairs for a, b in self.pairs)

    def successors(self) -> dict:
        succ = {a: set() for a in self.domain}
        for a, b in self.pairs:
            succ[a].add(b)
        return succ


class Preorder(Relation):
    """A reflexive and transitive relation."""

    def __init__(self, domain, pairs):
        super().__init__(domain, pairs)
        if not self.is_reflexive():
            raise ValueError("relation is not reflexive")
        if not self.is_transitive():
            raise ValueError("relation is not transitive")

    def is_poset(self) -> bool:
        return self.is_antisymmetric()

    def up(self, p) -> frozenset:
        return frozenset(b for a, b in self.pairs if a == p)

    def down(self, p) -> frozenset:
        return frozenset(a for a, b in self.pairs if b == p)

    def is_up_set(self, subset) -> bool:
        s = set(subset)
        return all(b in s for a, b in self.pairs if a in s)

    def thin_category(self) -> FiniteCategory:
        return FiniteCategory.from_preorder(self.domain, self.pairs)

    @classmethod
    def chain(cls, n: int) -> "Preorder":
        """``[n] = {0 < 1 < ... < n}`` on the names ``"0"..str(n)``."""
        names = [str(i) for i in range(n + 1)]
        return cls(names, [(names[i], names[j]) for i in range(n + 1) for j in range(i, n + 1)])

    @classmethod
    def discrete(cls, domain) -> "Preorder":
        return cls(domain, [(a, a) for a in domain])

    @classmethod
    def chaotic(cls, domain) -> "Preorder":
        domain = list(domain)
        return cls(domain, [(a, b) for a in domain for b in domain])


class Poset(Preorder):
    """An antisymmetric preorder."""

    def __init__(self, domain, pairs):
        super().__init__(domain, pairs)
        if not self.is_antisymmetric():
            raise ValueError("relation is not antisymmetric")


class FiniteTopology:
    """A finite set with an explicit family of open subsets."""

    def __init__(self, points: Iterable[Hashable], opens: Iterable[Iterable]):
        self.points = tuple(dict.fromkeys(points))
        self.opens = frozenset(frozenset(u) for u in opens)
        pts = frozenset(self.points)
        if frozenset() not in self.opens or pts not in self.opens:
            raise ValueError("a topology contains the empty set and the whole space")
        for u in self.opens:
            if not u <= pts:
                raise ValueError(f"open {set(u)} is not a subset of the points")
        for u in self.opens:
            for v in self.opens:
                if u | v not in self.opens or u & v not in self.opens:
                    raise ValueError("opens are not closed under unions and intersections")

    def __eq__(self, other):
        if not isinstance(other, FiniteTopology):
            return NotImplemented
        return set(self.points) == set(other.points) and self.opens == other.opens

    def __hash__(self):
        return hash((frozenset(self.points), self.opens))

    def __repr__(self):
        return f"FiniteTopology({list(self.points)}, {len(self.opens)} opens)"

    def closure(self, subset) -> frozenset:
        s = frozenset(subset)
        pts = frozenset(self.points)
        closed = [pts - u for u in self.opens if s <= pts - u]
        return frozenset.intersection(*closed)

    def is_T0(self) -> bool:
        for a, b in combinations(self.points, 2):
            if all((a in u) == (b in u) for u in self.opens):
                return False
        return True


def closure(R: Relation) -> Preorder:
    """Reflexive-transitive closure: ``R¹ = R ∪ Δ``, ``Rⁿ⁺¹ = Rⁿ ∘ R¹`` until stable."""
    step = set(R.pairs) | {(a, a) for a in R.domain}
    succ = {a: set() for a in R.domain}
    for a, b in step:
        succ[a].add(b)
    current = set(step)
    while True:
        nxt = current | {(a, c) for a, b in current for c in succ[b]}
        if nxt == current:
            return Preorder(R.domain, current)
        current = nxt


def alexandroff_opens(P: Preorder) -> FiniteTopology:
    """Opens are the up-sets of ``P``: all unions of principal up-sets."""
    opens = {frozenset()}
    for p in P.domain:
        u = P.up(p)
        opens |= {v | u for v in opens}
    return FiniteTopology(P.domain, opens)


def specialisation(T: FiniteTopology) -> Preorder:
    """``x <= y`` iff ``x`` lies in the closure of ``{y}``, i.e. every open
    containing ``x`` contains ``y``."""
    pairs = [(x, y) for x in T.points for y in T.points if all(y in u for u in T.opens if x in u)]
    return Preorder(T.points, pairs)


def condense(P: Preorder):
    """Quotient by ``p ~ q`` iff ``p <= q <= p``.

    Returns the poset of classes (as frozensets) and the quotient map.
    """
    g = nx.DiGraph()
    g.add_nodes_from(P.domain)
    g.add_edges_from(P.pairs)
    classes = {}
    for comp in nx.strongly_connected_components(g):
        cls = frozenset(comp)
        for x in comp:
            classes[x] = cls
    order = sorted(set(classes.values()), key=lambda c: sorted(map(_key, c)))
    pairs = {(classes[a], classes[b]) for a, b in P.pairs}
    return Poset(order, pairs), classes


def sieve(P: Preorder, p) -> frozenset:
    """``P_{<=p}``."""
    if p not in P.domain:
        raise KeyError(p)
    return P.down(p)


def cosieve(P: Preorder, p) -> frozenset:
    """``P_{>=p}``."""
    if p not in P.domain:
        raise KeyError(p)
    return P.up(p)


def _check_map(f: dict, domain, codomain, what: str):
    if set(f) != set(domain):
        raise ValueError(f"{what}: map is not defined on the whole domain")
    cod = set(codomain)
    if any(v not in cod for v in f.values()):
        raise ValueError(f"{what}: map leaves the codomain")


def join_structure(S: Sequence[Hashable], maps: Sequence[tuple]) -> Preorder:
    """Final preorder on ``S`` for maps ``f_i: P_i -> S`` given as ``(P_i, f_i)``.

    The closure of the union of the images of the graphs.
    """
    pairs = set()
    for k, (P, f) in enumerate(maps):
        _check_map(f, P.domain, S, f"map {k}")
        pairs |= {(f[a], f[b]) for a, b in P.pairs}
    return closure(Relation(S, pairs))


def meet_structure(S: Sequence[Hashable], maps: Sequence[tuple]) -> Preorder:
    """Initial preorder on ``S`` for maps ``f_i: S -> P_i`` given as ``(P_i, f_i)``.

    The intersection of the pulled back graphs.
    """
    pairs = {(a, b) for a in S for b in S}
    for k, (P, f) in enumerate(maps):
        _check_map(f, S, P.domain, f"map {k}")
        pairs &= {(a, b) for a in S for b in S if P.le(f[a], f[b])}
    return Preorder(S, pairs)


def is_monotone(f: dict, P: Preorder, Q: Preorder) -> bool:
    return all(Q.le(f[a], f[b]) for a, b in P.pairs)


def exit_path_of_poset(P: Preorder, cap: int = 2):
    """``τ₁`` of the nerve of ``P`` viewed as a thin category."""
    from .fpcat import fundamental_category
    from .sset import nerve

    return fundamental_category(nerve(P.thin_category(), max(cap, 2)))


def powerset(xs):
    xs = list(xs)
    return chain.from_iterable(combinations(xs, k) for k in range(len(xs) + 1))
