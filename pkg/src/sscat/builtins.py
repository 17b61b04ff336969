"""Named example objects for the command line.

=========================  ===============================================
name                       object
=========================  ===============================================
``delta:n``                standard simplex
``boundary:n``             its boundary
``horn:n:k``               horn missing the ``k``-th face
``spine:n``                chain of consecutive edges
``circle``                 one vertex and one loop
``walking-retraction``     ``R``, the set presenting ``Ret``
``nerve-ordinal:n``        2-skeleton of the nerve of ``[n]``
``nerve-ret``              2-skeleton of the nerve of ``Ret``
``nerve-cyclic:n``         2-skeleton of the nerve of ``Z/n``
``horn-cover``             the map ``Λ²₂ -> Δ¹`` collapsing ``0, 1``
``double-cover``           the connected double cover of the circle
``vertex:n:k``             inclusion of vertex ``k`` into ``Δⁿ``
``sierpinski``             the preorder ``0 <= 1``
``chain:n``                the preorder ``[n]``
``grid``                   the product order on ``[1] × [1]``
``ret``                    presentation of ``Ret``
``nat``                    presentation of the monoid ``N``
=========================  ===============================================

Simplicial sets get cap ``max(n, 2)`` unless a cap is given, so that the
fundamental category can always be read off.
"""

from __future__ import annotations

from typing import Optional

from .category import FiniteCategory
from .fpcat import CatPresentation
from .preorder import Preorder
from .sset import (
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    boundary,
    circle,
    horn,
    nerve,
    spine,
    standard_simplex,
    walking_retraction,
)


def horn_cover(cap: int = 2) -> SimplicialMap:
    """``Λ²₂ -> Δ¹`` sending vertices ``0, 1`` to ``0`` and ``2`` to ``1``."""
    return SimplicialMap.from_vertices(horn(2, 2, cap), standard_simplex(1, cap), {0: 0, 1: 0, 2: 1})


def double_cover(cap: int = 2) -> SimplicialMap:
    """Two vertices and two edges in a cycle, mapped edgewise onto the circle."""
    v = [SimplexRef.nd(0, 0), SimplexRef.nd(0, 1)]
    E = SimplicialSet(cap, [[(), ()], [(v[1], v[0]), (v[0], v[1])]], [["a", "b"], ["ab", "ba"]])
    S = circle(cap)
    loop = SimplexRef.nd(1, 0)
    return SimplicialMap(E, S, {(0, 0): SimplexRef.nd(0, 0), (0, 1): SimplexRef.nd(0, 0),
                                (1, 0): loop, (1, 1): loop})


def vertex_inclusion(n: int, k: int, cap: Optional[int] = None) -> SimplicialMap:
    cap = max(n, 2) if cap is None else cap
    return SimplicialMap.from_vertices(standard_simplex(0, cap), standard_simplex(n, cap), {0: k})


def spine_over_circle(N: int, cap: int = 2) -> SimplicialMap:
    """``Sp^N -> S¹`` sending every edge to the loop."""
    Sp, S = spine(N, cap), circle(cap)
    assignment = {(0, j): SimplexRef.nd(0, 0) for j in range(Sp.count(0))}
    assignment.update({(1, j): SimplexRef.nd(1, 0) for j in range(Sp.count(1))})
    return SimplicialMap(Sp, S, assignment)


def ret_presentation() -> CatPresentation:
    p = CatPresentation(["0", "1"], [("i", "0", "1"), ("r", "1", "0")])
    return CatPresentation(p.objects, p.generators, [p.relation_words(["i", "r"], [])])


def nat_presentation() -> CatPresentation:
    return CatPresentation(["*"], [("alpha", "*", "*")])


def grid() -> Preorder:
    pts = [f"{a}{b}" for a in "01" for b in "01"]
    return Preorder(pts, [(x, y) for x in pts for y in pts if x[0] <= y[0] and x[1] <= y[1]])


def _int(s: str) -> int:
    v = int(s)
    if v < 0:
        raise ValueError(f"negative parameter {s}")
    return v


def builtin(name: str, cap: Optional[int] = None):
    """Resolve a registry name to a simplicial set, map, presentation or preorder."""
    head, *args = name.split(":")
    ints = [_int(a) for a in args]

    def c(n):
        return max(n, 2) if cap is None else cap

    if head == "delta" and len(ints) == 1:
        return standard_simplex(ints[0], c(ints[0]))
    if head == "boundary" and len(ints) == 1:
        return boundary(ints[0], c(ints[0]))
    if head == "horn" and len(ints) == 2:
        return horn(ints[0], ints[1], c(ints[0]))
    if head == "spine" and len(ints) == 1:
        return spine(ints[0], c(ints[0]))
    if head == "circle" and not ints:
        return circle(c(2))
    if head == "walking-retraction" and not ints:
        R = walking_retraction()
        return R if cap is None else R.with_cap(cap)
    if head == "nerve-ordinal" and len(ints) == 1:
        return nerve(FiniteCategory.ordinal(ints[0]), c(2))
    if head == "nerve-ret" and not ints:
        return nerve(FiniteCategory.walking_retraction(), c(2))
    if head == "nerve-cyclic" and len(ints) == 1:
        return nerve(FiniteCategory.cyclic_group(ints[0]), c(2))
    if head == "horn-cover" and not ints:
        return horn_cover(c(2))
    if head == "double-cover" and not ints:
        return double_cover(c(2))
    if head == "vertex" and len(ints) == 2:
        return vertex_inclusion(ints[0], ints[1], cap)
    if head == "sierpinski" and not ints:
        return Preorder(["0", "1"], [("0", "0"), ("1", "1"), ("0", "1")])
    if head == "chain" and len(ints) == 1:
        return Preorder.chain(ints[0])
    if head == "grid" and not ints:
        return grid()
    if head == "ret" and not ints:
        return ret_presentation()
    if head == "nat" and not ints:
        return nat_presentation()
    raise KeyError(f"unknown builtin {name!r}")


NAMES = [
    "delta:n", "boundary:n", "horn:n:k", "spine:n", "circle", "walking-retraction",
    "nerve-ordinal:n", "nerve-ret", "nerve-cyclic:n", "horn-cover", "double-cover",
    "vertex:n:k", "sierpinski", "chain:n", "grid", "ret", "nat",
]
