"""Left, right and two-sided covers and their representations.

A map ``p: E -> X`` is a left cover when every simplex of ``X`` lifts uniquely
once the lift of its first vertex is chosen, i.e. when
``E_n -> E_0 ×_{X_0} X_n`` (first vertex, ``p``) is a bijection for all ``n``.
Left covers over ``X`` correspond to functors ``τ₁X -> Set``: :func:`fibre`
goes one way and :func:`reconstruct` the other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import CapError, NonFunctorialError, NotACoverError, PresentationError
from .fpcat import (
    CatPresentation,
    MorphismWord,
    complete_rewriting,
    edge_names,
    fundamental_category,
    hom_set,
    vertex_names,
)
from .ordinal import OrdinalMap
from .sset import SimplexRef, SimplicialMap, SimplicialSet, from_levelwise, is_isomorphic


class Representation:
    """A functor from a presented category to finite sets.

    ``vertex_sets[a]`` is the set over object ``a`` (a tuple, order irrelevant)
    and ``edge_maps[g]`` the function of generator ``g`` as a dict.
    """

    def __init__(self, base: CatPresentation, vertex_sets: dict, edge_maps: dict, check: bool = True):
        self.base = base
        self.vertex_sets = {a: tuple(vertex_sets[a]) for a in base.objects}
        self.edge_maps = {g.name: dict(edge_maps[g.name]) for g in base.generators}
        if check:
            self.check()

    def __repr__(self):
        sizes = {a: len(s) for a, s in self.vertex_sets.items()}
        return f"Representation(sizes={sizes})"

    def check(self):
        """Raise :class:`NonFunctorialError` unless this is a functor."""
        for g in self.base.generators:
            f = self.edge_maps[g.name]
            src, tgt = set(self.vertex_sets[g.src]), set(self.vertex_sets[g.tgt])
            if set(f) != src:
                raise NonFunctorialError(f"edge map of {g.name} is not defined on F({g.src})")
            if not set(f.values()) <= tgt:
                raise NonFunctorialError(f"edge map of {g.name} leaves F({g.tgt})")
        for w1, w2 in self.base.relations:
            for x in self.vertex_sets[w1.src]:
                if self.apply(w1, x) != self.apply(w2, x):
                    raise NonFunctorialError(f"relation {w1} = {w2} fails at {x!r}")

    def apply(self, w: MorphismWord, x):
        for letter in w.letters:
            x = self.edge_maps[letter][x]
        return x

    def is_bijective(self) -> bool:
        return all(
            len(set(self.edge_maps[g.name].values())) == len(self.vertex_sets[g.tgt]) == len(self.vertex_sets[g.src])
            for g in self.base.generators
        )

    @classmethod
    def constant(cls, base: CatPresentation, point="*") -> "Representation":
        return cls(base, {a: (point,) for a in base.objects}, {g.name: {point: point} for g in base.generators})


@dataclass
class CoverReport:
    """Per-dimension bijectivity verdicts of the comparison maps."""

    ok: bool
    per_dim: list
    counterexample: Optional[tuple] = None
    kind: str = "left"
    monodromy_ok: Optional[bool] = None

    def __bool__(self):
        return self.ok

    @property
    def agree(self) -> Optional[bool]:
        return None if self.monodromy_ok is None else self.ok == self.monodromy_ok


def _check_caps(p: SimplicialMap) -> int:
    if p.source.cap != p.target.cap:
        raise CapError(f"cover check needs equal caps, got {p.source.cap} and {p.target.cap}")
    return p.source.cap


def _fibre_sizes(p: SimplicialMap) -> dict:
    sizes: dict = {}
    for v in range(p.source.count(0)):
        x = p(SimplexRef.nd(0, v)).index
        sizes[x] = sizes.get(x, 0) + 1
    return sizes


def _dim_check(p: SimplicialMap, n: int, position: int, sizes: dict):
    """Is ``E_n -> E_0 ×_{X_0} X_n`` via vertex ``position`` bijective?"""
    E, X = p.source, p.target
    seen: dict = {}
    for e in E.simplices(n):
        key = (E.vertices(e)[position], p(e))
        if key in seen:
            return False, (n, position, "two lifts", seen[key], e)
        seen[key] = e
    hits: dict = {}
    for _, x in seen:
        hits[x] = hits.get(x, 0) + 1
    for x in X.simplices(n):
        if hits.get(x, 0) != sizes.get(X.vertices(x)[position], 0):
            return False, (n, position, "missing lift", x)
    return True, None


def _vertex_check(p: SimplicialMap, position: Callable[[int], int], kind: str) -> CoverReport:
    cap = _check_caps(p)
    sizes = _fibre_sizes(p)
    per_dim, counter = [], None
    for n in range(cap + 1):
        ok, bad = _dim_check(p, n, position(n), sizes)
        per_dim.append(ok)
        counter = counter or bad
    return CoverReport(all(per_dim), per_dim, counter, kind)


def is_left_cover(p: SimplicialMap) -> CoverReport:
    """Check ``E_n -> E_0 ×_{X_0} X_n`` via first vertices for every ``n <= cap``."""
    return _vertex_check(p, lambda n: 0, "left")


def is_right_cover(p: SimplicialMap) -> CoverReport:
    """Left cover condition for the opposite map, i.e. via last vertices."""
    report = is_left_cover(p.opposite())
    report.kind = "right"
    return report


def is_cover(p: SimplicialMap) -> CoverReport:
    """Two-sided cover: the comparison is bijective for every vertex inclusion.

    The report also carries the second characterization (left cover with
    bijective monodromy) in ``monodromy_ok``.
    """
    cap = _check_caps(p)
    sizes = _fibre_sizes(p)
    per_dim, counter = [], None
    for n in range(cap + 1):
        ok = True
        for j in range(n + 1):
            ok, bad = _dim_check(p, n, j, sizes)
            if not ok:
                counter = counter or bad
                break
        per_dim.append(ok)
    left = is_left_cover(p)
    monodromy = bool(left) and fibre(p, report=left).is_bijective()
    return CoverReport(all(per_dim), per_dim, counter, "two-sided", monodromy)


def fibre(p: SimplicialMap, report: Optional[CoverReport] = None) -> Representation:
    """The monodromy representation of a left cover.

    An edge ``α: x -> x'`` sends ``e`` over ``x`` to the last vertex of the
    unique lift of ``α`` starting at ``e``.
    """
    report = report if report is not None else is_left_cover(p)
    if not report:
        raise NotACoverError(f"not a left cover: {report.counterexample}")
    E, X = p.source, p.target
    base = fundamental_category(X)
    vn, en = vertex_names(X), edge_names(X)
    sets = {a: [] for a in base.objects}
    for v in range(E.count(0)):
        sets[vn[p(SimplexRef.nd(0, v)).index]].append(v)
    lift = {}
    for e in E.simplices(1):
        img = p(e)
        if not img.is_degenerate():
            lift[(E.first_vertex(e), img.index)] = E.last_vertex(e)
    maps = {}
    for j, name in enumerate(en):
        src = vn[X.first_vertex(SimplexRef.nd(1, j))]
        maps[name] = {v: lift[(v, j)] for v in sets[src]}
    return Representation(base, sets, maps)


def _total_space(X: SimplicialSet, elements: Callable[[int], list], transport: Callable, keep=None):
    """Simplices ``(σ, e)`` with ``e`` over the first vertex of ``σ``.

    Face 0 moves ``e`` along the edge ``σ|{0,1}``; the other faces and all
    degeneracies keep it.  ``keep`` optionally filters the pairs.
    """
    levels = []
    for n in range(X.cap + 1):
        level = []
        for s in X._simplices(n):
            for e in elements(X.first_vertex(s)):
                if keep is None or keep(s, e):
                    level.append((s, e))
        levels.append(level)

    def face(key, i):
        s, e = key
        d = X._act(s, OrdinalMap.face(s.dim, i))
        if i == 0:
            e = transport(X.edge_between(s, 0, 1), e)
        return d, e

    def degeneracy(key, i):
        s, e = key
        return X._act(s, OrdinalMap.degeneracy(s.dim, i)), e

    vn = vertex_names(X)

    def label(key):
        s, e = key
        return f"{vn[s.index]}|{e}" if s.dim == 0 else None

    E, ez = from_levelwise(levels, face, degeneracy, X.cap, label)
    nd = {(r.dim, r.index): k for k, r in ez.items() if not r.is_degenerate()}
    p = SimplicialMap(E, X, {k: v[0] for k, v in nd.items()}, check=False)
    return p, ez


def _edge_transport(X: SimplicialSet, F: Representation):
    en = edge_names(X)

    def transport(edge: SimplexRef, e):
        if edge.is_degenerate():
            return e
        return F.edge_maps[en[edge.index]][e]

    return transport


def reconstruct(X: SimplicialSet, F: Representation) -> SimplicialMap:
    """The left cover ``E -> X`` with ``E_n = ⊔_{σ ∈ X_n} F(σ_0)``."""
    F.check()
    vn = vertex_names(X)
    if set(F.base.objects) != set(vn) or {g.name for g in F.base.generators} != set(edge_names(X)):
        raise PresentationError("representation is not over the fundamental category of X")
    p, _ = _total_space(X, lambda v: list(F.vertex_sets[vn[v]]), _edge_transport(X, F))
    return p


@dataclass
class UniversalCover:
    map: SimplicialMap
    basepoint: int
    truncated: bool
    bound: int
    hom_sets: dict = field(default_factory=dict)


def universal_left_cover(X: SimplicialSet, x: int, hom_bound: int = 8, max_rules: int = 5000) -> UniversalCover:
    """``X̃_x``: simplices ``(σ, a)`` with ``a`` a morphism ``x -> σ_0`` of ``τ₁X``.

    Morphisms are enumerated as normal forms.  When some hom-set is not
    certified finite within ``hom_bound``, the result is truncated: only pairs
    all of whose vertex transports stay among the enumerated words are kept,
    and the ``truncated`` flag is set.
    """
    p = fundamental_category(X)
    rs = complete_rewriting(p, max_rules=max_rules)
    vn, en = vertex_names(X), edge_names(X)
    homs = {v: hom_set(p, rs, vn[x], vn[v], hom_bound) for v in range(X.count(0))}
    truncated = not all(h.finite for h in homs.values())
    known = {v: {w.letters for w in h.words} for v, h in homs.items()}

    def transport(edge: SimplexRef, a):
        if edge.is_degenerate():
            return a
        return rs.reduce(a + (en[edge.index],))

    def keep(s: SimplexRef, a):
        verts = X.vertices(s)
        return all(transport(X.edge_between(s, 0, j), a) in known[verts[j]] for j in range(s.dim + 1))

    q, ez = _total_space(X, lambda v: sorted(known[v], key=p.shortlex), transport, keep if truncated else None)
    base = ez[(SimplexRef.nd(0, x), ())].index
    return UniversalCover(q, base, truncated, hom_bound, homs)


# ---------------------------------------------------------------------------
# comparisons


def natural_isomorphism(F: Representation, G: Representation) -> Optional[dict]:
    """Per-object bijections ``F(a) -> G(a)`` commuting with all edge maps, or ``None``."""
    if F.base.objects != G.base.objects or [g.name for g in F.base.generators] != [g.name for g in G.base.generators]:
        return None
    if any(len(F.vertex_sets[a]) != len(G.vertex_sets[a]) for a in F.base.objects):
        return None
    gens = F.base.generators
    phi: dict = {}
    used: set = set()

    def assign(a, x, y, trail):
        stack = [(a, x, y)]
        while stack:
            a, x, y = stack.pop()
            if (a, x) in phi:
                if phi[(a, x)] != y:
                    return False
                continue
            if (a, y) in used:
                return False
            phi[(a, x)] = y
            used.add((a, y))
            trail.append((a, x, y))
            for g in gens:
                if g.src == a:
                    stack.append((g.tgt, F.edge_maps[g.name][x], G.edge_maps[g.name][y]))
        return True

    def undo(trail):
        for a, x, y in trail:
            del phi[(a, x)]
            used.discard((a, y))

    todo = [(a, x) for a in F.base.objects for x in F.vertex_sets[a]]

    def extend(i):
        while i < len(todo) and todo[i] in phi:
            i += 1
        if i == len(todo):
            return True
        a, x = todo[i]
        for y in G.vertex_sets[a]:
            if (a, y) in used:
                continue
            trail: list = []
            if assign(a, x, y, trail) and extend(i + 1):
                return True
            undo(trail)
        return False

    if not extend(0):
        return None
    for g in gens:
        for x in F.vertex_sets[g.src]:
            if phi[(g.tgt, F.edge_maps[g.name][x])] != G.edge_maps[g.name][phi[(g.src, x)]]:
                return None
    return {a: {x: phi[(a, x)] for x in F.vertex_sets[a]} for a in F.base.objects}


@dataclass
class RecFibReport:
    ok: bool
    representations: list
    covers: list


def verify_recfib(X: SimplicialSet, representations=(), covers=()) -> RecFibReport:
    """Round trips ``fib ∘ rec ≅ id`` and ``rec ∘ fib ≅ id`` over ``X``.

    Each entry of the report is ``True`` when an explicit witness was found:
    a natural isomorphism for representations, an isomorphism over ``X`` for
    covers.
    """
    reps = []
    for F in representations:
        G = fibre(reconstruct(X, F))
        reps.append(natural_isomorphism(F, G) is not None)
    cov = []
    for p in covers:
        q = reconstruct(X, fibre(p))
        cov.append(is_isomorphic(p.source, q.source, over=(p, q)) is not None)
    return RecFibReport(all(reps) and all(cov), reps, cov)


@dataclass
class Pi1Report:
    two_sided: bool
    left: bool
    monodromy_bijective: Optional[bool]
    agree: bool
    converse: Optional[bool]


def pi1_cover_correspondence(X: SimplicialSet, p: SimplicialMap) -> Pi1Report:
    """Compare the two-sided cover test with bijectivity of the monodromy.

    ``converse`` records whether reconstructing a bijective monodromy gives a
    map that passes :func:`is_cover` again.
    """
    both = is_cover(p)
    left = is_left_cover(p)
    mono = fibre(p, report=left).is_bijective() if left else None
    converse = None
    if mono:
        converse = bool(is_cover(reconstruct(X, fibre(p, report=left))))
    return Pi1Report(both.ok, left.ok, mono, both.ok == bool(left.ok and mono), converse)


def maps_over(source: SimplicialMap, target: SimplicialMap, limit: Optional[int] = None) -> list:
    """All maps ``source.source -> target.source`` commuting with the projections."""
    from .sset import enumerate_maps

    return enumerate_maps(source.source, target.source, over=(source, target), limit=limit)
