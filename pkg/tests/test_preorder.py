from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sscat import oracles
from sscat.builtins import grid
from sscat.category import find_isomorphism
from sscat.fpcat import complete_rewriting, hom_set, realize_finite
from sscat.preorder import (
    FiniteTopology,
    Poset,
    Preorder,
    Relation,
    alexandroff_opens,
    closure,
    condense,
    cosieve,
    exit_path_of_poset,
    is_monotone,
    join_structure,
    meet_structure,
    sieve,
    specialisation,
)

NAMES = "abcd"


def all_preorders(n):
    dom = list(NAMES[:n])
    return [Preorder(dom, oracles.mask_to_pairs(m, dom)) for m in oracles.all_preorder_masks(n)]


def all_maps(xs, ys):
    for values in product(ys, repeat=len(xs)):
        yield dict(zip(xs, values))


# closure


def test_closure_examples():
    R = Relation("abc", [("a", "b"), ("b", "c")])
    P = closure(R)
    assert P.pairs - R.pairs == {("a", "a"), ("b", "b"), ("c", "c"), ("a", "c")}
    assert closure(Relation("abc", [])) == Preorder.discrete("abc")
    Q = Preorder.chain(3)
    assert closure(Q) == Q


@pytest.mark.parametrize("n", range(4))
def test_closure_is_brute_force_minimum(n):
    dom = list(NAMES[:n])
    pre = oracles.all_preorder_masks(n)
    full = (1 << (n * n)) - 1
    for mask in range(1 << (n * n)):
        R = Relation(dom, oracles.mask_to_pairs(mask, dom))
        expected = oracles.closure_by_minimum(mask, pre, full)
        assert oracles.pairs_to_mask(closure(R).pairs, dom) == expected


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(st.sampled_from(NAMES), st.sampled_from(NAMES))),
       st.sets(st.tuples(st.sampled_from(NAMES), st.sampled_from(NAMES))))
def test_closure_idempotent_and_monotone(a, b):
    R, S = Relation(NAMES, a), Relation(NAMES, a | b)
    assert closure(closure(R)) == closure(R)
    assert closure(R).pairs <= closure(S).pairs


def test_relation_checks():
    with pytest.raises(ValueError):
        Relation("ab", [("a", "z")])
    with pytest.raises(ValueError):
        Preorder("ab", [("a", "b")])
    with pytest.raises(ValueError):
        Preorder("abc", [(x, x) for x in "abc"] + [("a", "b"), ("b", "c")])
    with pytest.raises(ValueError):
        Poset("ab", [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")])


# Alexandroff topology


def test_alexandroff_examples():
    T = alexandroff_opens(Preorder.chain(3))
    assert T.opens == {frozenset()} | {frozenset(str(j) for j in range(k, 4)) for k in range(4)}
    S = FiniteTopology(["0", "1"], [[], ["1"], ["0", "1"]])
    assert specialisation(S) == Preorder(["0", "1"], [("0", "0"), ("1", "1"), ("0", "1")])
    assert alexandroff_opens(Preorder.chaotic("ab")).opens == {frozenset(), frozenset("ab")}


def test_topology_validation():
    with pytest.raises(ValueError):
        FiniteTopology("ab", [[], ["a"]])
    with pytest.raises(ValueError):
        FiniteTopology("abc", [[], ["a"], ["b"], ["a", "b", "c"]])


@pytest.mark.parametrize("n", range(4))
def test_alexandroff_specialisation_bijection(n):
    dom = list(NAMES[:n])
    preorders = all_preorders(n)
    topologies = oracles.all_topologies(dom)
    assert len(preorders) == len(topologies)
    images = set()
    for P in preorders:
        T = alexandroff_opens(P)
        assert specialisation(T) == P
        assert T.is_T0() == P.is_poset()
        images.add(T.opens)
    assert images == set(topologies)
    for opens in topologies:
        T = FiniteTopology(dom, opens)
        assert alexandroff_opens(specialisation(T)) == T


def test_specialisation_is_closure_of_points():
    T = alexandroff_opens(grid())
    P = specialisation(T)
    for x in T.points:
        for y in T.points:
            assert P.le(x, y) == (x in T.closure({y}))


# condensation


def test_condense_examples():
    P, q = condense(Preorder.chaotic("abc"))
    assert len(P.domain) == 1 and set(q.values()) == {frozenset("abc")}
    R = closure(Relation("abc", [("a", "b"), ("b", "a"), ("b", "c")]))
    P, q = condense(R)
    assert set(P.domain) == {frozenset("ab"), frozenset("c")}
    assert P.le(frozenset("ab"), frozenset("c")) and not P.le(frozenset("c"), frozenset("ab"))
    G = grid()
    P, q = condense(G)
    assert all(len(c) == 1 for c in P.domain) and len(P.pairs) == len(G.pairs)


@pytest.mark.parametrize("n", range(5))
def test_condense_matches_classes(n):
    for P in all_preorders(n):
        Q, q = condense(P)
        assert Q.is_poset()
        assert set(Q.domain) == oracles.chaotic_classes(P.domain, P.pairs)
        assert all(x in q[x] for x in P.domain)
        assert is_monotone(q, P, Q)


@pytest.mark.parametrize("n", range(4))
def test_condense_is_universal(n):
    targets = [P for k in range(3) for P in all_preorders(k) if P.is_poset()]
    for P in all_preorders(n):
        Q, q = condense(P)
        for T in targets:
            for f in all_maps(P.domain, T.domain):
                if not is_monotone(f, P, T):
                    continue
                # f factors uniquely: it is constant on classes and the induced map is monotone
                g = {c: f[next(iter(c))] for c in Q.domain}
                assert all(f[x] == g[q[x]] for x in P.domain)
                assert is_monotone(g, Q, T)


# sieves


def test_sieves():
    C = Preorder.chain(3)
    assert sieve(C, "1") == {"0", "1"} and cosieve(C, "1") == {"1", "2", "3"}
    D = Preorder.discrete("abc")
    assert sieve(D, "b") == cosieve(D, "b") == {"b"}
    X = Preorder.chaotic("abc")
    assert sieve(X, "a") == cosieve(X, "a") == set("abc")
    with pytest.raises(KeyError):
        sieve(C, "7")


@pytest.mark.parametrize("n", range(4))
def test_cosieves_open_and_sieves_closed(n):
    for P in all_preorders(n):
        T = alexandroff_opens(P)
        pts = frozenset(P.domain)
        for p in P.domain:
            assert cosieve(P, p) in T.opens
            assert pts - sieve(P, p) in T.opens


# final and initial structures


def test_join_of_two_edges_is_a_chain():
    one = Preorder.chain(1)
    S = ["x", "y", "z"]
    J = join_structure(S, [(one, {"0": "x", "1": "y"}), (one, {"0": "y", "1": "z"})])
    assert J == Preorder(S, [(a, b) for i, a in enumerate(S) for b in S[i:]])
    assert J == Preorder(S, oracles.final_preorder_by_chains(S, {("x", "y"), ("y", "z")}))


def test_single_identity_structures():
    G = grid()
    ident = {x: x for x in G.domain}
    assert join_structure(G.domain, [(G, ident)]) == G
    assert meet_structure(G.domain, [(G, ident)]) == G


def test_meet_over_projections_is_product_order():
    C1, C2 = Preorder.chain(1), Preorder.chain(2)
    S = [(a, b) for a in C1.domain for b in C2.domain]
    M = meet_structure(S, [(C1, {s: s[0] for s in S}), (C2, {s: s[1] for s in S})])
    assert M.pairs == {(s, t) for s in S for t in S if C1.le(s[0], t[0]) and C2.le(s[1], t[1])}


def test_structures_reject_bad_maps():
    one = Preorder.chain(1)
    with pytest.raises(ValueError):
        join_structure(["x"], [(one, {"0": "x"})])
    with pytest.raises(ValueError):
        meet_structure(["x"], [(one, {"x": "7"})])


def test_final_and_initial_are_universal():
    S = ["x", "y", "z"]
    small = all_preorders(2)
    for P in small:
        for f in all_maps(P.domain, S):
            J = join_structure(S, [(P, f)])
            assert J == Preorder(S, oracles.final_preorder_by_chains(S, {(f[a], f[b]) for a, b in P.pairs}))
            for T in small:
                for g in all_maps(S, T.domain):
                    composite = {a: g[f[a]] for a in P.domain}
                    assert is_monotone(g, J, T) == is_monotone(composite, P, T)
        for g in all_maps(S, P.domain):
            M = meet_structure(S, [(P, g)])
            for T in small:
                for h in all_maps(T.domain, S):
                    composite = {t: g[h[t]] for t in T.domain}
                    assert is_monotone(h, T, M) == is_monotone(composite, T, P)


# exit paths


def thin(p):
    rs = complete_rewriting(p)
    return rs.complete and all(len(hom_set(p, rs, a, b)) <= 1 for a in p.objects for b in p.objects), rs


@pytest.mark.parametrize("P", [Preorder.chain(3), Preorder.discrete("abc"), grid()], ids=["chain", "discrete", "grid"])
def test_exit_path_of_poset(P):
    p = exit_path_of_poset(P)
    ok, rs = thin(p)
    assert ok
    assert find_isomorphism(realize_finite(p, rs), P.thin_category()) is not None


def test_grid_exit_path_has_nine_arrows():
    p = exit_path_of_poset(grid())
    rs = complete_rewriting(p)
    sizes = [len(hom_set(p, rs, a, b)) for a in p.objects for b in p.objects]
    assert sum(sizes) == 9 and max(sizes) == 1
