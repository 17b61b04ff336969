"""Seeded random bases, representations and maps for property checks."""

from __future__ import annotations

import random
from itertools import combinations

from .covers import Representation
from .fpcat import fundamental_category
from .ordinal import OrdinalMap
from .sset import SimplexRef, SimplicialMap, SimplicialSet, simplex_map, simplex_subcomplex, walking_retraction

DEFAULT_SEED = 20240611


def random_base(rng: random.Random, retraction_weight: float = 0.2) -> tuple[SimplicialSet, str]:
    """A random 2-dimensional base with finite fundamental category.

    Either ``R`` (kind ``"retraction"``) or a subcomplex of the 2-skeleton of
    ``Δ³`` containing all four vertices (kind ``"chain"``).
    """
    if rng.random() < retraction_weight:
        return walking_retraction(), "retraction"
    tris = [c for c in combinations(range(4), 3) if rng.random() < 0.5]
    edges = [c for c in combinations(range(4), 2) if rng.random() < 0.5]
    return simplex_subcomplex(3, [(v,) for v in range(4)] + edges + tris, cap=2), "chain"


def random_representation(rng: random.Random, X: SimplicialSet, kind: str, max_size: int = 3) -> Representation:
    """A random functor ``τ₁X -> Set``.

    Over a subcomplex of ``Δ³`` it is the restriction of a random functor on
    the chain ``0 -> 1 -> 2 -> 3``; over ``R`` the edge ``i`` is injective and
    ``r`` is a retraction of it.
    """
    base = fundamental_category(X)
    if kind == "retraction":
        k = rng.randint(1, max_size)
        low = [f"a{t}" for t in range(k)]
        high = [f"b{t}" for t in range(k + rng.randint(0, 2))]
        i = {a: b for a, b in zip(low, high)}
        r = {b: a for a, b in i.items()}
        for b in high[k:]:
            r[b] = rng.choice(low)
        return Representation(base, {"0": low, "1": high}, {"i": i, "r": r})
    sets = {str(j): [f"{j}{c}" for c in "abcdef"[: rng.randint(1, max_size)]] for j in range(4)}
    step = {j: {x: rng.choice(sets[str(j + 1)]) for x in sets[str(j)]} for j in range(3)}
    maps = {}
    for g in base.generators:
        a, b = int(g.src), int(g.tgt)
        f = {}
        for x in sets[g.src]:
            y = x
            for j in range(a, b):
                y = step[j][y]
            f[x] = y
        maps[g.name] = f
    return Representation(base, {a: sets[a] for a in base.objects}, maps)


def random_simplex(rng: random.Random, X: SimplicialSet, max_dim: int) -> SimplexRef:
    n = rng.randint(0, min(max_dim, X.cap))
    return rng.choice(X.simplices(n))


def random_simplex_map(rng: random.Random, X: SimplicialSet, max_dim: int = 2) -> SimplicialMap:
    """The Yoneda map of a random simplex of ``X``."""
    return simplex_map(X, random_simplex(rng, X, max_dim))


def random_ordinal_map(rng: random.Random, m: int, n: int) -> OrdinalMap:
    return OrdinalMap(tuple(sorted(rng.randint(0, n) for _ in range(m + 1))), n)
