"""Finite simplicial sets stored by their non-degenerate simplices.

Every simplex is represented in Eilenberg-Zilber form: a non-degenerate base
simplex together with a surjection ``[dim] -> [base_dim]`` (:class:`SimplexRef`).
A :class:`SimplicialSet` stores, for each non-degenerate ``k``-simplex, its
``k+1`` faces as such references; the full presheaf action is recovered by
:meth:`SimplicialSet.evaluate`.

Each set carries an explicit dimension ``cap``.  It never holds non-degenerate
simplices above the cap, and public queries for simplices above it raise
:class:`~sscat.errors.CapError` instead of truncating.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .category import FiniteCategory
from .errors import BudgetExceeded, CapError
from .ordinal import OrdinalMap, surjections

DEFAULT_PRODUCT_LIMIT = 6


@dataclass(frozen=True, order=True)
class SimplexRef:
    """A ``dim``-simplex ``degeneracy^*(y)`` where ``y`` is the non-degenerate
    simplex number ``index`` in dimension ``degeneracy.target_dim``."""

    dim: int
    index: int
    degeneracy: OrdinalMap = field(compare=True)

    def __post_init__(self):
        if self.degeneracy.source_dim != self.dim or not self.degeneracy.is_surjective():
            raise ValueError(f"{self.degeneracy} is not a surjection out of [{self.dim}]")

    @classmethod
    def nd(cls, dim: int, index: int) -> "SimplexRef":
        return cls(dim, index, OrdinalMap.identity(dim))

    @property
    def base_dim(self) -> int:
        return self.degeneracy.target_dim

    @property
    def base(self) -> "SimplexRef":
        return SimplexRef.nd(self.base_dim, self.index)

    def is_degenerate(self) -> bool:
        return self.dim != self.base_dim

    def __repr__(self):
        if not self.is_degenerate():
            return f"<{self.dim}:{self.index}>"
        return f"<{self.dim}:{self.index}@{list(self.degeneracy.values)}>"


# OrdinalMap is a frozen dataclass without ordering; give refs a usable sort key.
def _ref_key(s: SimplexRef):
    return (s.dim, s.base_dim, s.index, s.degeneracy.values)


class SimplicialSet:
    """A finite simplicial set.

    ``faces[k][j]`` is the tuple of faces ``(d_0 x, ..., d_k x)`` of the
    non-degenerate ``k``-simplex ``x`` with index ``j`` (empty for vertices).
    ``labels`` mirrors that shape and holds optional names.
    """

    def __init__(self, cap: int, faces: Sequence[Sequence[Sequence[SimplexRef]]], labels=None, check: bool = True):
        faces = [list(level) for level in faces]
        while len(faces) > 1 and not faces[-1]:
            faces.pop()
        if not faces:
            faces = [[]]
        self._faces = tuple(tuple(tuple(fs) for fs in level) for level in faces)
        if labels is None:
            labels = [[None] * len(level) for level in self._faces]
        labels = [list(level) for level in labels][: len(self._faces)]
        labels += [[None] * len(level) for level in self._faces[len(labels):]]
        self._labels = tuple(tuple(level) for level in labels)
        self.cap = int(cap)
        self._cache: dict = {}
        if self.dimension > self.cap:
            raise CapError(f"non-degenerate simplices in dimension {self.dimension} exceed cap {self.cap}")
        if check:
            problems = self._reference_problems()
            if problems:
                raise ValueError("; ".join(problems))

    # basic structure

    @property
    def dimension(self) -> int:
        """Top dimension carrying a non-degenerate simplex (``-1`` if empty)."""
        for k in range(len(self._faces) - 1, -1, -1):
            if self._faces[k]:
                return k
        return -1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._faces)

    def count(self, k: int) -> int:
        return len(self._faces[k]) if k < len(self._faces) else 0

    def nd(self, k: int) -> list[SimplexRef]:
        return [SimplexRef.nd(k, j) for j in range(self.count(k))]

    def all_nd(self) -> list[SimplexRef]:
        return [s for k in range(len(self._faces)) for s in self.nd(k)]

    def faces_of(self, k: int, index: int) -> tuple[SimplexRef, ...]:
        return self._faces[k][index]

    def label(self, k: int, index: int):
        return self._labels[k][index]

    @property
    def labels(self):
        return self._labels

    @property
    def face_table(self):
        return self._faces

    def __eq__(self, other):
        if not isinstance(other, SimplicialSet):
            return NotImplemented
        return (self.cap, self._faces, self._labels) == (other.cap, other._faces, other._labels)

    def __hash__(self):
        return hash((self.cap, self._faces))

    def __repr__(self):
        return f"SimplicialSet(cap={self.cap}, counts={list(self.counts())})"

    def with_cap(self, cap: int) -> "SimplicialSet":
        return SimplicialSet(cap, self._faces, self._labels, check=False)

    def relabel(self, labels) -> "SimplicialSet":
        return SimplicialSet(self.cap, self._faces, labels, check=False)

    def _reference_problems(self) -> list[str]:
        problems = []
        for k, level in enumerate(self._faces):
            for j, fs in enumerate(level):
                if len(fs) != (k + 1 if k else 0):
                    problems.append(f"simplex <{k}:{j}> has {len(fs)} faces")
                    continue
                for i, f in enumerate(fs):
                    if f.dim != k - 1:
                        problems.append(f"face {i} of <{k}:{j}> has dimension {f.dim}")
                    elif f.base_dim >= len(self._faces) or not 0 <= f.index < len(self._faces[f.base_dim]):
                        problems.append(f"face {i} of <{k}:{j}> references a missing simplex {f}")
        return problems

    # presheaf action

    def _check_cap(self, n: int):
        if n > self.cap:
            raise CapError(f"simplices of dimension {n} exceed cap {self.cap}")

    def evaluate(self, s: SimplexRef, a: OrdinalMap) -> SimplexRef:
        """``a^* s`` in Eilenberg-Zilber form; ``a`` must end in ``[s.dim]``."""
        if a.target_dim != s.dim:
            raise ValueError(f"{a} does not act on a {s.dim}-simplex")
        self._check_cap(a.source_dim)
        return self._act(s, a)

    def _act(self, s: SimplexRef, a: OrdinalMap) -> SimplexRef:
        surj, inj = s.degeneracy.compose(a).factor()
        base = self._restrict(s.base_dim, s.index, inj)
        return SimplexRef(a.source_dim, base.index, base.degeneracy.compose(surj))

    def _restrict(self, dim: int, index: int, inj: OrdinalMap) -> SimplexRef:
        # inj^* of a non-degenerate simplex, peeling off one face at a time
        key = ("r", dim, index, inj.values)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if inj.is_identity():
            out = SimplexRef.nd(dim, index)
        else:
            i = inj.missing()[-1]
            inner = OrdinalMap(tuple(v if v < i else v - 1 for v in inj.values), dim - 1)
            out = self._act(self._faces[dim][index][i], inner)
        self._cache[key] = out
        return out

    def face(self, s: SimplexRef, i: int) -> SimplexRef:
        """``d_i s``."""
        return self._act(s, OrdinalMap.face(s.dim, i))

    def degeneracy(self, s: SimplexRef, i: int) -> SimplexRef:
        """``s_i s``."""
        return self.evaluate(s, OrdinalMap.degeneracy(s.dim, i))

    def vertices(self, s: SimplexRef) -> tuple[int, ...]:
        base = self._nd_vertices(s.base_dim, s.index)
        return tuple(base[v] for v in s.degeneracy.values)

    def _nd_vertices(self, k: int, index: int) -> tuple[int, ...]:
        key = ("v", k, index)
        hit = self._cache.get(key)
        if hit is None:
            hit = tuple(self._restrict(k, index, OrdinalMap.vertex(k, j)).index for j in range(k + 1))
            self._cache[key] = hit
        return hit

    def first_vertex(self, s: SimplexRef) -> int:
        return self.vertices(s)[0]

    def last_vertex(self, s: SimplexRef) -> int:
        return self.vertices(s)[-1]

    def edge_between(self, s: SimplexRef, i: int, j: int) -> SimplexRef:
        """The 1-simplex of ``s`` spanned by its vertices ``i <= j``."""
        return self._act(s, OrdinalMap.edge(s.dim, i, j))

    def simplices(self, n: int) -> list[SimplexRef]:
        """All ``n``-simplices, degenerate ones included."""
        self._check_cap(n)
        return self._simplices(n)

    def _simplices(self, n: int) -> list[SimplexRef]:
        key = ("all", n)
        hit = self._cache.get(key)
        if hit is None:
            hit = []
            for k in range(min(n, len(self._faces) - 1) + 1):
                surjs = surjections(n, k)
                for j in range(self.count(k)):
                    hit.extend(SimplexRef(n, j, eta) for eta in surjs)
            self._cache[key] = hit
        return hit


# ---------------------------------------------------------------------------
# maps


class SimplicialMap:
    """A map of simplicial sets given on non-degenerate simplices.

    ``assignment[(k, j)]`` is the image (any ``k``-simplex of the target) of the
    non-degenerate simplex ``<k:j>`` of the source.
    """

    def __init__(self, source: SimplicialSet, target: SimplicialSet, assignment: dict, check: bool = True):
        self.source = source
        self.target = target
        self.assignment = {tuple(k): v for k, v in assignment.items()}
        if check:
            self.check()

    def __repr__(self):
        return f"SimplicialMap({self.source!r} -> {self.target!r})"

    def check(self):
        for s in self.source.all_nd():
            img = self.assignment.get((s.dim, s.index))
            if img is None or img.dim != s.dim:
                raise ValueError(f"no image of the right dimension for {s}")
            t = self.target
            if img.base_dim >= len(t.face_table) or img.index >= t.count(img.base_dim):
                raise ValueError(f"image {img} of {s} is not a simplex of the target")
        for s in self.source.all_nd():
            for i in range(s.dim + 1 if s.dim else 0):
                if self.target._act(self(s), OrdinalMap.face(s.dim, i)) != self(self.source.face(s, i)):
                    raise ValueError(f"map does not commute with d_{i} at {s}")

    def __call__(self, s: SimplexRef) -> SimplexRef:
        img = self.assignment[(s.base_dim, s.index)]
        return self.target._act(img, s.degeneracy)

    def then(self, other: "SimplicialMap") -> "SimplicialMap":
        """``other ∘ self``."""
        return SimplicialMap(
            self.source, other.target, {(s.dim, s.index): other(self(s)) for s in self.source.all_nd()}, check=False
        )

    def on_vertices(self) -> dict[int, int]:
        return {j: self(SimplexRef.nd(0, j)).index for j in range(self.source.count(0))}

    def is_injective_on_nd(self) -> bool:
        imgs = [self(s) for s in self.source.all_nd()]
        return all(not i.is_degenerate() for i in imgs) and len(set(imgs)) == len(imgs)

    @classmethod
    def identity(cls, X: SimplicialSet) -> "SimplicialMap":
        return cls(X, X, {(s.dim, s.index): s for s in X.all_nd()}, check=False)

    @classmethod
    def from_vertices(cls, source: SimplicialSet, target: SimplicialSet, vertex_map: dict) -> "SimplicialMap":
        """The map determined by a vertex assignment.

        Only valid when every mapped vertex sequence is realised by exactly one
        simplex of the target (e.g. ordered simplicial complexes).
        """
        index: dict = {}
        assignment = {}
        for s in source.all_nd():
            seq = tuple(vertex_map[v] for v in source.vertices(s))
            if s.dim not in index:
                table: dict = {}
                for t in target._simplices(s.dim):
                    table.setdefault(target.vertices(t), []).append(t)
                index[s.dim] = table
            hits = index[s.dim].get(seq, [])
            if len(hits) != 1:
                raise ValueError(f"vertex sequence {seq} has {len(hits)} simplices in the target")
            assignment[(s.dim, s.index)] = hits[0]
        return cls(source, target, assignment)

    def opposite(self) -> "SimplicialMap":
        op = lambda r: SimplexRef(r.dim, r.index, r.degeneracy.opposite())  # noqa: E731
        return SimplicialMap(opposite(self.source), opposite(self.target),
                             {k: op(v) for k, v in self.assignment.items()}, check=False)


def simplex_map(X: SimplicialSet, s: SimplexRef, cap: Optional[int] = None) -> SimplicialMap:
    """The Yoneda map ``Δⁿ -> X`` classifying the ``n``-simplex ``s``."""
    n = s.dim
    D = standard_simplex(n, cap=X.cap if cap is None else cap)
    assignment = {}
    for t in D.all_nd():
        verts = tuple(int(c) for c in _delta_vertices(D, t))
        assignment[(t.dim, t.index)] = X._act(s, OrdinalMap(verts, n))
    return SimplicialMap(D, X, assignment)


def _delta_vertices(D: SimplicialSet, t: SimplexRef) -> tuple[int, ...]:
    return D.vertices(t)


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    ok: bool
    violations: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate(X: SimplicialSet) -> ValidationReport:
    """Check references and every identity ``d_i d_j = d_{j-1} d_i`` (``i < j``).

    Violations are reported as ``("identity", (k, index), i, j)`` or
    ``("reference", message)``.
    """
    problems = X._reference_problems()
    if problems:
        return ValidationReport(False, [("reference", p) for p in problems])
    violations = []
    for k in range(2, len(X.face_table)):
        for s in X.nd(k):
            for j in range(k + 1):
                for i in range(j):
                    lhs = X.face(X.face(s, j), i)
                    rhs = X.face(X.face(s, i), j - 1)
                    if lhs != rhs:
                        violations.append(("identity", (k, s.index), i, j))
    return ValidationReport(not violations, violations)


# ---------------------------------------------------------------------------
# generic levelwise builder


def from_levelwise(
    levels: Sequence[Sequence[Hashable]],
    face: Callable[[Hashable, int], Hashable],
    degeneracy: Callable[[Hashable, int], Hashable],
    cap: int,
    label: Optional[Callable[[Hashable], object]] = None,
) -> tuple[SimplicialSet, dict]:
    """Build a simplicial set from explicit simplex sets ``levels[0..N]``.

    ``face(x, i)`` and ``degeneracy(x, i)`` give ``d_i x`` and ``s_i x`` as keys
    of the neighbouring levels.  Keys hit by some ``s_i`` are degenerate;
    the rest become the stored non-degenerate simplices.  Returns the set and
    the map from keys to their Eilenberg-Zilber references.
    """
    ez: dict = {}
    faces_out, labels_out = [], []
    for n, level in enumerate(levels):
        if n > 0:
            for key in levels[n - 1]:
                y = ez[key]
                for i in range(n):
                    cand = SimplexRef(n, y.index, y.degeneracy.compose(OrdinalMap.degeneracy(n - 1, i)))
                    k2 = degeneracy(key, i)
                    prev = ez.get(k2)
                    if prev is not None and prev != cand:
                        raise ValueError(f"inconsistent degeneracies at {k2!r}")
                    ez[k2] = cand
        nd_keys = []
        for key in level:
            if key not in ez:
                ez[key] = SimplexRef.nd(n, len(nd_keys))
                nd_keys.append(key)
        faces_out.append([tuple(ez[face(key, i)] for i in range(n + 1)) if n else () for key in nd_keys])
        labels_out.append([label(key) if label else None for key in nd_keys])
    return SimplicialSet(cap, faces_out, labels_out), ez


# ---------------------------------------------------------------------------
# constructors


def _vertex_label(comb: Sequence[int], n: int) -> str:
    return "".join(map(str, comb)) if n < 10 else "-".join(map(str, comb))


def _delta_subcomplex(n: int, keep: Callable[[tuple], bool], cap: Optional[int]) -> SimplicialSet:
    index: dict = {}
    faces, labels = [], []
    for k in range(n + 1):
        level, lab = [], []
        for comb in combinations(range(n + 1), k + 1):
            if not keep(comb):
                continue
            index[comb] = len(level)
            fs = ()
            if k:
                fs = tuple(SimplexRef.nd(k - 1, index[comb[:i] + comb[i + 1:]]) for i in range(k + 1))
            level.append(fs)
            lab.append(_vertex_label(comb, n))
        faces.append(level)
        labels.append(lab)
    return SimplicialSet(n if cap is None else cap, faces, labels)


def simplex_subcomplex(n: int, simplices: Iterable[Sequence[int]], cap: Optional[int] = None) -> SimplicialSet:
    """The subcomplex of ``Δⁿ`` generated by the given vertex subsets (closed under faces)."""
    gens = [tuple(sorted(set(c))) for c in simplices]
    keep = set()
    for c in gens:
        for k in range(1, len(c) + 1):
            keep.update(combinations(c, k))
    return _delta_subcomplex(n, keep.__contains__, cap)


def standard_simplex(n: int, cap: Optional[int] = None) -> SimplicialSet:
    """``Δⁿ``: non-degenerate simplices are the non-empty subsets of ``{0..n}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _delta_subcomplex(n, lambda c: True, cap)


def boundary(n: int, cap: Optional[int] = None) -> SimplicialSet:
    if n < 1:
        raise ValueError("boundary needs n >= 1")
    return _delta_subcomplex(n, lambda c: len(c) <= n, cap)


def horn(n: int, k: int, cap: Optional[int] = None) -> SimplicialSet:
    """``Λⁿₖ``: the union of all faces of ``Δⁿ`` except the ``k``-th."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"no horn Λ^{n}_{k}")
    missing_k = tuple(v for v in range(n + 1) if v != k)
    return _delta_subcomplex(n, lambda c: len(c) <= n and c != missing_k, cap)


def spine(n: int, cap: Optional[int] = None) -> SimplicialSet:
    """``Spⁿ``: the consecutive edges ``01, 12, ..., (n-1)n`` of ``Δⁿ``."""
    if n < 1:
        raise ValueError("spine needs n >= 1")
    return _delta_subcomplex(n, lambda c: len(c) == 1 or (len(c) == 2 and c[1] == c[0] + 1), cap)


def circle(cap: int = 2) -> SimplicialSet:
    """``S¹ = Δ¹/∂Δ¹``: one vertex and one non-degenerate loop."""
    v = SimplexRef.nd(0, 0)
    return SimplicialSet(cap, [[()], [(v, v)]], [["0"], ["alpha"]])


def walking_retraction() -> SimplicialSet:
    """``R``: ``Δ¹`` with a freely added left inverse ``r`` of its edge ``i``.

    Built by the two pushouts: adjoin an edge ``r: 1 -> 0`` along ``∂Δ¹``, then
    glue a 2-simplex along ``∂Δ²`` with boundary ``(d_0, d_1, d_2) = (r, 1_0, i)``.
    """
    X = standard_simplex(1, cap=2).relabel([["0", "1"], ["i"]])
    bd1 = boundary(1, cap=2)
    # (x', x) = (1, 0): the adjoined edge runs 1 -> 0
    attach = SimplicialMap(bd1, X, {(0, 0): SimplexRef.nd(0, 1), (0, 1): SimplexRef.nd(0, 0)})
    new_edge = SimplicialMap(bd1, standard_simplex(1, cap=2).relabel([["0", "1"], ["r"]]),
                             {(0, 0): SimplexRef.nd(0, 0), (0, 1): SimplexRef.nd(0, 1)})
    Xb, _, _ = pushout(attach, new_edge)

    edge = {Xb.label(1, j): SimplexRef.nd(1, j) for j in range(Xb.count(1))}
    vert = {Xb.label(0, j): SimplexRef.nd(0, j) for j in range(Xb.count(0))}
    bd2 = boundary(2)
    e = {bd2.label(1, j): j for j in range(bd2.count(1))}
    triangle = SimplicialMap(bd2, Xb, {
        (0, 0): vert["0"], (0, 1): vert["1"], (0, 2): vert["0"],
        (1, e["01"]): edge["i"],
        (1, e["12"]): edge["r"],
        (1, e["02"]): Xb.degeneracy(vert["0"], 0),
    })
    fill = SimplicialMap(bd2, standard_simplex(2).relabel([["0", "1", "2"], ["01", "02", "12"], ["c"]]),
                         {(s.dim, s.index): s for s in bd2.all_nd()})
    R, _, _ = pushout(triangle, fill)
    return R


def nerve(C: FiniteCategory, cap: int) -> SimplicialSet:
    """``sk_cap Nerv C``: strings of composable non-identity morphisms."""
    C.check()
    ident = {C.identities[a] for a in C.objects}

    def normal(start, morphs):
        # drop identity components; degeneracy records the collapsed vertices
        vals, v = [0], 0
        kept = []
        for f in morphs:
            if f not in ident:
                v += 1
                kept.append(f)
            vals.append(v)
        return (start, tuple(kept)), OrdinalMap(tuple(vals), v)

    levels = [[(a, ()) for a in C.objects]]
    for k in range(1, cap + 1):
        nxt = []
        for start, ms in levels[-1]:
            end = C.tgt(ms[-1]) if ms else start
            for f in C.non_identities():
                if C.src(f) == end:
                    nxt.append((start, ms + (f,)))
        levels.append(nxt)

    index = {}
    for k, level in enumerate(levels):
        for j, key in enumerate(level):
            index[key] = SimplexRef.nd(k, j)

    def face_ref(start, ms, i):
        k = len(ms)
        if i == 0:
            new_start, new = C.tgt(ms[0]), ms[1:]
        elif i == k:
            new_start, new = start, ms[:-1]
        else:
            new_start, new = start, ms[: i - 1] + (C.then(ms[i - 1], ms[i]),) + ms[i + 1:]
        key, eta = normal(new_start, new)
        base = index[key]
        return SimplexRef(k - 1, base.index, eta)

    faces, labels = [], []
    for k, level in enumerate(levels):
        faces.append([tuple(face_ref(s, ms, i) for i in range(k + 1)) if k else () for s, ms in level])
        labels.append([str(s) if not ms else "|".join(map(str, ms)) for s, ms in level])
    return SimplicialSet(cap, faces, labels)


# ---------------------------------------------------------------------------
# operations


def evaluate(X: SimplicialSet, s: SimplexRef, a: OrdinalMap) -> SimplexRef:
    return X.evaluate(s, a)


def ez_normalize(X: SimplicialSet, s: SimplexRef, word: Iterable[tuple[str, int]]) -> SimplexRef:
    """Apply a word of simplicial operators to ``s``, left to right.

    ``("d", i)`` is the face operator ``d_i`` and ``("s", i)`` the degeneracy
    ``s_i``.  The result is the unique Eilenberg-Zilber form.
    """
    out = s
    for op, i in word:
        n = out.dim
        if op == "d":
            if n < 1 or not 0 <= i <= n:
                raise ValueError(f"d_{i} does not apply to a {n}-simplex")
            out = X.evaluate(out, OrdinalMap.face(n, i))
        elif op == "s":
            if not 0 <= i <= n:
                raise ValueError(f"s_{i} does not apply to a {n}-simplex")
            out = X.evaluate(out, OrdinalMap.degeneracy(n, i))
        else:
            raise ValueError(f"unknown operator {op!r}")
    return out


def _lattice_paths(p: int, q: int):
    """Strictly increasing paths (0,0) -> (p,q) with unit and diagonal steps."""
    if p == 0 and q == 0:
        yield ((0, 0),)
        return
    for dx, dy in ((1, 0), (0, 1), (1, 1)):
        if p - dx >= 0 and q - dy >= 0:
            for path in _lattice_paths(p - dx, q - dy):
                yield path + ((p, q),)


def _collapse_pair(eta: OrdinalMap, theta: OrdinalMap):
    """Split a pair of surjections out of ``[n]`` through their common degeneracy.

    Returns ``(zeta, eta', theta')`` with ``eta = eta' ∘ zeta`` and
    ``theta = theta' ∘ zeta`` and ``(eta', theta')`` jointly injective.
    """
    vals, v = [0], 0
    for t in range(eta.source_dim):
        if eta(t) != eta(t + 1) or theta(t) != theta(t + 1):
            v += 1
        vals.append(v)
    zeta = OrdinalMap(tuple(vals), v)
    e2 = [0] * (v + 1)
    t2 = [0] * (v + 1)
    for t, z in enumerate(vals):
        e2[z], t2[z] = eta(t), theta(t)
    return zeta, OrdinalMap(tuple(e2), eta.target_dim), OrdinalMap(tuple(t2), theta.target_dim)


def product_with_projections(X: SimplicialSet, Y: SimplicialSet, limit: int = DEFAULT_PRODUCT_LIMIT):
    """``X × Y`` via shuffles, with its two projections.

    Non-degenerate ``n``-simplices are triples of base simplices ``a ∈ X_p``,
    ``b ∈ Y_q`` and a lattice path of length ``n`` in ``[p] × [q]``.
    """
    out_cap = min(X.cap + Y.cap, limit)
    if max(X.dimension, 0) + max(Y.dimension, 0) > out_cap:
        raise CapError(f"X × Y has non-degenerate simplices up to dimension "
                       f"{X.dimension + Y.dimension}, above the limit {out_cap}")
    keys: list[list] = [[] for _ in range(out_cap + 1)]
    for p in range(X.dimension + 1):
        for q in range(Y.dimension + 1):
            paths = list(_lattice_paths(p, q))
            for a in range(X.count(p)):
                for b in range(Y.count(q)):
                    for path in paths:
                        n = len(path) - 1
                        eta = OrdinalMap(tuple(x for x, _ in path), p)
                        theta = OrdinalMap(tuple(y for _, y in path), q)
                        keys[n].append((a, b, eta, theta))
    for level in keys:
        level.sort(key=lambda k: (k[2].target_dim, k[3].target_dim, k[0], k[1], k[2].values, k[3].values))
    index = {key: j for level in keys for j, key in enumerate(level)}

    def pair_ref(x: SimplexRef, y: SimplexRef) -> SimplexRef:
        zeta, e2, t2 = _collapse_pair(x.degeneracy, y.degeneracy)
        return SimplexRef(x.dim, index[(x.index, y.index, e2, t2)], zeta)

    faces, labels = [], []
    for n, level in enumerate(keys):
        fs_level, lab_level = [], []
        for a, b, eta, theta in level:
            x = SimplexRef(n, a, eta)
            y = SimplexRef(n, b, theta)
            fs = ()
            if n:
                fs = tuple(pair_ref(X._act(x, OrdinalMap.face(n, i)), Y._act(y, OrdinalMap.face(n, i)))
                           for i in range(n + 1))
            fs_level.append(fs)
            xv, yv = X.vertices(x), Y.vertices(y)
            lab_level.append("".join(f"({_name0(X, u)},{_name0(Y, w)})" for u, w in zip(xv, yv)))
        faces.append(fs_level)
        labels.append(lab_level)
    P = SimplicialSet(out_cap, faces, labels)
    px = SimplicialMap(P, X.with_cap(max(X.cap, out_cap)),
                       {(n, j): SimplexRef(n, a, eta) for n, level in enumerate(keys)
                        for j, (a, b, eta, theta) in enumerate(level)}, check=False)
    py = SimplicialMap(P, Y.with_cap(max(Y.cap, out_cap)),
                       {(n, j): SimplexRef(n, b, theta) for n, level in enumerate(keys)
                        for j, (a, b, eta, theta) in enumerate(level)}, check=False)
    return P, px, py


def _name0(X: SimplicialSet, v: int) -> str:
    lab = X.label(0, v)
    return str(v) if lab is None else str(lab)


def product(X: SimplicialSet, Y: SimplicialSet, limit: int = DEFAULT_PRODUCT_LIMIT) -> SimplicialSet:
    return product_with_projections(X, Y, limit)[0]


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b, order):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if order[rb] < order[ra]:
                ra, rb = rb, ra
            self.parent[rb] = ra


def pushout(f: SimplicialMap, g: SimplicialMap, cap: Optional[int] = None):
    """Pushout of ``B <-f- A -g-> C``, computed dimensionwise on all simplices.

    Returns ``(P, iB, iC)``.  Labels come from ``B`` first, then ``C``.
    """
    if f.source is not g.source and f.source != g.source:
        raise ValueError("pushout legs must share their source")
    A, B, C = f.source, f.target, g.target
    N = max(B.cap, C.cap) if cap is None else cap
    if max(A.dimension, B.dimension, C.dimension) > N:
        raise CapError(f"pushout inputs have simplices above cap {N}")

    levels, classes = [], []
    for n in range(N + 1):
        elems = [("B", s) for s in B._simplices(n)] + [("C", s) for s in C._simplices(n)]
        order = {e: k for k, e in enumerate(elems)}
        uf = _UnionFind()
        for e in elems:
            uf.add(e)
        for a in A._simplices(n):
            uf.union(("B", f(a)), ("C", g(a)), order)
        cls = {e: uf.find(e) for e in elems}
        classes.append(cls)
        levels.append(sorted(set(cls.values()), key=order.__getitem__))

    def op(key, i, fn, shift):
        side, s = key
        X = B if side == "B" else C
        return classes[s.dim + shift][(side, fn(X, s, i))]

    def label(key):
        side, s = key
        X = B if side == "B" else C
        return X.label(0 if not s.dim else s.base_dim, s.index) if not s.is_degenerate() else None

    P, ez = from_levelwise(
        levels,
        lambda k, i: op(k, i, lambda X, s, i: X._act(s, OrdinalMap.face(s.dim, i)), -1),
        lambda k, i: op(k, i, lambda X, s, i: X._act(s, OrdinalMap.degeneracy(s.dim, i)), +1),
        N,
        label,
    )
    iB = SimplicialMap(B, P, {(s.dim, s.index): ez[classes[s.dim][("B", s)]] for s in B.all_nd()}, check=False)
    iC = SimplicialMap(C, P, {(s.dim, s.index): ez[classes[s.dim][("C", s)]] for s in C.all_nd()}, check=False)
    return P, iB, iC


def pullback(p: SimplicialMap, f: SimplicialMap):
    """Pullback of ``E -p-> X <-f- X'``; returns ``(E', p', q)`` with
    ``p': E' -> X'`` and ``q: E' -> E``."""
    E, Xp = p.source, f.source
    top = max(E.dimension, 0) + max(Xp.dimension, 0)
    cap = max(E.cap, Xp.cap)
    levels = []
    for n in range(top + 1):
        by_image: dict = {}
        for e in E._simplices(n):
            by_image.setdefault(p(e), []).append(e)
        levels.append([(e, x) for x in Xp._simplices(n) for e in by_image.get(f(x), [])])
    P, ez = from_levelwise(
        levels,
        lambda k, i: (E._act(k[0], OrdinalMap.face(k[0].dim, i)), Xp._act(k[1], OrdinalMap.face(k[1].dim, i))),
        lambda k, i: (E._act(k[0], OrdinalMap.degeneracy(k[0].dim, i)),
                      Xp._act(k[1], OrdinalMap.degeneracy(k[1].dim, i))),
        top,
    )
    if P.dimension > cap:
        raise CapError(f"pullback has non-degenerate simplices in dimension {P.dimension} above cap {cap}")
    P = P.with_cap(cap)
    nd_keys = {(r.dim, r.index): k for k, r in ez.items() if not r.is_degenerate()}
    to_base = SimplicialMap(P, Xp.with_cap(cap), {k: v[1] for k, v in nd_keys.items()}, check=False)
    to_total = SimplicialMap(P, E.with_cap(cap), {k: v[0] for k, v in nd_keys.items()}, check=False)
    return P, to_base, to_total


def skeleton(X: SimplicialSet, n: int) -> SimplicialSet:
    """``sk_n X``: keep non-degenerate simplices of dimension ``<= n``."""
    if n > X.cap:
        raise CapError(f"skeleton {n} above cap {X.cap}")
    return SimplicialSet(X.cap, X.face_table[: n + 1], X.labels[: n + 1], check=False)


def pi0(X: SimplicialSet) -> list[list[int]]:
    """Connected components as sorted lists of vertex indices."""
    uf = _UnionFind()
    order = {v: v for v in range(X.count(0))}
    for v in order:
        uf.add(v)
    for fs in X.face_table[1] if len(X.face_table) > 1 else ():
        uf.union(fs[0].index, fs[1].index, order)
    comps: dict = {}
    for v in order:
        comps.setdefault(uf.find(v), []).append(v)
    return sorted(comps.values())


def opposite(X: SimplicialSet) -> SimplicialSet:
    """``X^op``: same simplices, ``d_i`` replaced by ``d_{n-i}``."""
    op = lambda r: SimplexRef(r.dim, r.index, r.degeneracy.opposite())  # noqa: E731
    faces = [[tuple(op(f) for f in reversed(fs)) for fs in level] for level in X.face_table]
    return SimplicialSet(X.cap, faces, X.labels, check=False)


def coproduct(Xs: Sequence[SimplicialSet]) -> SimplicialSet:
    """Disjoint union; simplices of ``Xs[m]`` follow those of ``Xs[:m]``."""
    Xs = list(Xs)
    if not Xs:
        return SimplicialSet(0, [[]])
    top = max(len(X.face_table) for X in Xs)
    faces = [[] for _ in range(top)]
    labels = [[] for _ in range(top)]
    offset = [0] * top
    for X in Xs:
        shift = lambda r: SimplexRef(r.dim, r.index + offset[r.base_dim], r.degeneracy)  # noqa: E731
        for k, level in enumerate(X.face_table):
            faces[k].extend(tuple(shift(f) for f in fs) for fs in level)
            labels[k].extend(X.labels[k])
        for k, level in enumerate(X.face_table):
            offset[k] += len(level)
    return SimplicialSet(max(X.cap for X in Xs), faces, labels)


# ---------------------------------------------------------------------------
# searches


def _vertex_signature(X: SimplicialSet):
    sig = {v: [] for v in range(X.count(0))}
    for s in X.all_nd():
        for pos, v in enumerate(X.vertices(s)):
            sig[v].append((s.dim, pos))
    return {v: tuple(sorted(x)) for v, x in sig.items()}


def is_isomorphic(X: SimplicialSet, Y: SimplicialSet, budget: int = 200_000, over=None):
    """Search for an isomorphism ``X -> Y``.

    ``over=(f, g)`` restricts to isomorphisms ``φ`` with ``g ∘ φ = f``.
    Returns ``(φ, φ⁻¹)`` or ``None``; raises :class:`BudgetExceeded`.
    Caps are ignored: only the simplicial structure is compared.
    """
    if X.counts() != Y.counts():
        return None
    sx, sy = _vertex_signature(X), _vertex_signature(Y)
    if sorted(sx.values()) != sorted(sy.values()):
        return None
    order = X.all_nd()
    by_faces: dict = {}
    for t in Y.all_nd():
        by_faces.setdefault((t.dim, Y.faces_of(t.dim, t.index)), []).append(t)
    phi: dict = {}
    used: set = set()
    steps = 0

    def image(r: SimplexRef) -> SimplexRef:
        return SimplexRef(r.dim, phi[(r.base_dim, r.index)].index, r.degeneracy)

    def candidates(s):
        if s.dim == 0:
            return [t for t in Y.nd(0) if sy[t.index] == sx[s.index]]
        fs = tuple(image(r) for r in X.faces_of(s.dim, s.index))
        return by_faces.get((s.dim, fs), [])

    def extend(i):
        nonlocal steps
        if i == len(order):
            return True
        s = order[i]
        for t in candidates(s):
            if t in used:
                continue
            if over is not None and over[1](t) != over[0](s):
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded("simplicial isomorphism search")
            phi[(s.dim, s.index)] = t
            used.add(t)
            if extend(i + 1):
                return True
            del phi[(s.dim, s.index)]
            used.discard(t)
        return False

    if not extend(0):
        return None
    fwd = SimplicialMap(X, Y, dict(phi))
    inv = SimplicialMap(Y, X, {(t.dim, t.index): s_key_ref(k) for k, t in phi.items()})
    return fwd, inv


def s_key_ref(key) -> SimplexRef:
    return SimplexRef.nd(*key)


def enumerate_maps(S: SimplicialSet, T: SimplicialSet, over=None, limit: Optional[int] = None,
                   budget: int = 1_000_000) -> list[SimplicialMap]:
    """All simplicial maps ``S -> T`` (optionally over ``(f: S -> B, g: T -> B)``)."""
    order = S.all_nd()
    by_faces: dict = {}
    for k in range(S.dimension + 1):
        for t in T._simplices(k):
            fs = tuple(T._act(t, OrdinalMap.face(k, i)) for i in range(k + 1)) if k else ()
            by_faces.setdefault((k, fs), []).append(t)
    out = []
    phi: dict = {}
    steps = 0

    def image(r):
        return T._act(phi[(r.base_dim, r.index)], r.degeneracy)

    def extend(i):
        nonlocal steps
        if limit is not None and len(out) >= limit:
            return
        if i == len(order):
            out.append(SimplicialMap(S, T, dict(phi), check=False))
            return
        s = order[i]
        fs = tuple(image(r) for r in S.faces_of(s.dim, s.index)) if s.dim else ()
        for t in by_faces.get((s.dim, fs), []):
            if over is not None and over[1](t) != over[0](s):
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded("map enumeration")
            phi[(s.dim, s.index)] = t
            extend(i + 1)
            del phi[(s.dim, s.index)]

    extend(0)
    return out
