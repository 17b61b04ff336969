"""Brute-force reference computations used to cross-check the main routines.

Nothing here shares code paths with the implementations it checks: simplices
of ``Δⁿ`` are plain vertex sequences, relations are bitmasks, topologies are
found by enumerating families of subsets.
"""

from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product


# simplices of Δⁿ as weakly increasing vertex sequences


def delta_sequences(n: int, m: int) -> list[tuple[int, ...]]:
    """All ``m``-simplices of ``Δⁿ``."""
    return list(combinations_with_replacement(range(n + 1), m + 1))


def apply_word_to_sequence(seq: tuple, word) -> tuple:
    """``d_i`` deletes entry ``i``, ``s_i`` repeats entry ``i``."""
    seq = tuple(seq)
    for op, i in word:
        if not 0 <= i < len(seq) or (op == "d" and len(seq) == 1):
            raise ValueError("operator does not apply")
        seq = seq[:i] + seq[i + 1:] if op == "d" else seq[: i + 1] + seq[i:]
    return seq


def circle_point(seq: tuple):
    """Simplices of ``Δ¹/∂Δ¹``: sequences in ``{0, 1}`` with constants identified."""
    return "pt" if len(set(seq)) == 1 else tuple(seq)


# relations on small sets as bitmasks


def _bit(i: int, j: int, n: int) -> int:
    return 1 << (i * n + j)


def all_preorder_masks(n: int) -> list[int]:
    out = []
    diag = sum(_bit(i, i, n) for i in range(n))
    for mask in range(1 << (n * n)):
        if mask & diag != diag:
            continue
        ok = True
        for i in range(n):
            for j in range(n):
                if mask & _bit(i, j, n):
                    for k in range(n):
                        if mask & _bit(j, k, n) and not mask & _bit(i, k, n):
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    return out


def mask_to_pairs(mask: int, domain) -> set:
    n = len(domain)
    return {(domain[i], domain[j]) for i in range(n) for j in range(n) if mask & _bit(i, j, n)}


def pairs_to_mask(pairs, domain) -> int:
    pos = {x: k for k, x in enumerate(domain)}
    n = len(domain)
    return sum(_bit(pos[a], pos[b], n) for a, b in set(pairs))


def closure_by_minimum(mask: int, preorders: list[int], full: int) -> int:
    """Intersection of every preorder containing ``mask``."""
    out = full
    for p in preorders:
        if p & mask == mask:
            out &= p
    return out


def all_topologies(points) -> list[frozenset]:
    """Every topology on ``points`` as a frozenset of frozenset opens."""
    points = list(points)
    subsets = [frozenset(c) for k in range(len(points) + 1) for c in combinations(points, k)]
    inner = [s for s in subsets if s and len(s) < len(points)]
    empty, whole = frozenset(), frozenset(points)
    out = []
    for choice in product((False, True), repeat=len(inner)):
        fam = {empty, whole} | {s for s, keep in zip(inner, choice) if keep}
        if all(u | v in fam and u & v in fam for u in fam for v in fam):
            out.append(frozenset(fam))
    return out


def chaotic_classes(domain, pairs) -> set:
    """Classes of ``p ~ q`` iff both ``(p, q)`` and ``(q, p)`` are pairs."""
    pairs = set(pairs)
    return {frozenset(q for q in domain if (p, q) in pairs and (q, p) in pairs) for p in domain}


def final_preorder_by_chains(S, images: set) -> set:
    """``x <= y`` iff a finite chain of image pairs leads from ``x`` to ``y``."""
    reach = {x: {x} for x in S}
    changed = True
    while changed:
        changed = False
        for x in S:
            new = {b for a, b in images if a in reach[x]} - reach[x]
            if new:
                reach[x] |= new
                changed = True
    return {(x, y) for x in S for y in reach[x]}


# products


def product_nd_count(X, Y, n: int) -> int:
    """Non-degenerate ``n``-simplices of ``X × Y``: pairs not both ``s_i`` of something.

    Uses only the degeneracy operators of the factors.
    """
    from .ordinal import OrdinalMap

    def degenerate_positions(Z, z):
        out = set()
        for i in range(n):
            if z.dim > 0 and Z._act(Z._act(z, OrdinalMap.face(n, i + 1)), OrdinalMap.degeneracy(n - 1, i)) == z:
                out.add(i)
        return out

    xs = [(x, degenerate_positions(X, x)) for x in X._simplices(n)]
    ys = [(y, degenerate_positions(Y, y)) for y in Y._simplices(n)]
    return sum(1 for _, dx in xs for _, dy in ys if not dx & dy)
