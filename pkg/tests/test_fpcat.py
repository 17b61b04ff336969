import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sscat.builtins import nat_presentation, ret_presentation
from sscat.category import FiniteCategory, find_isomorphism
from sscat.errors import BudgetExceeded, CapError, PresentationError
from sscat.fpcat import (
    CatPresentation,
    Decision,
    MorphismWord,
    RewriteSystem,
    Verdict,
    complete_rewriting,
    dpi1_surrogate,
    equivalent_to_terminal,
    free_category,
    fundamental_category,
    groupoidify,
    hom_set,
    inverse_name,
    localize,
    realize_finite,
    split_monos,
    tau_nerve_roundtrip,
    words_equal,
)
from sscat.sset import boundary, circle, nerve, product, standard_simplex, walking_retraction


def tau(X):
    p = fundamental_category(X)
    return p, complete_rewriting(p)


# fundamental categories


@pytest.mark.parametrize("n", range(5))
def test_tau1_of_simplex_is_ordinal(n):
    p, rs = tau(standard_simplex(n, max(n, 2)))
    assert rs.complete
    for a in p.objects:
        for b in p.objects:
            hs = hom_set(p, rs, a, b)
            assert hs.finite
            assert len(hs) == (1 if int(a) <= int(b) else 0)


def test_tau1_of_circle_is_free():
    p = fundamental_category(circle())
    assert (len(p.objects), len(p.generators), len(p.relations)) == (1, 1, 0)


def test_tau1_of_r_is_ret():
    p = fundamental_category(walking_retraction())
    assert [(g.name, g.src, g.tgt) for g in p.generators] == [("i", "0", "1"), ("r", "1", "0")]
    assert [(w1.letters, w2.letters) for w1, w2 in p.relations] == [((), ("i", "r"))]


def test_tau1_needs_two_simplices():
    with pytest.raises(CapError):
        fundamental_category(standard_simplex(1))


def test_free_category():
    p = free_category(["*"], [("alpha", "*", "*")])
    assert p == nat_presentation() and not p.relations
    q = fundamental_category(boundary(2, 2))
    assert not q.relations
    assert len(hom_set(q, complete_rewriting(q), "0", "2")) == 2
    d = free_category(["a", "b"], [])
    rs = complete_rewriting(d)
    assert len(realize_finite(d, rs).morphisms) == 2
    with pytest.raises(PresentationError):
        free_category(["a"], [("f", "a", "b")])


def test_presentation_validation():
    with pytest.raises(PresentationError):
        CatPresentation(["a"], [("f", "a", "a"), ("f", "a", "a")])
    p = CatPresentation(["a", "b"], [("f", "a", "b")])
    with pytest.raises(PresentationError):
        p.word(["f", "f"])
    with pytest.raises(PresentationError):
        CatPresentation(p.objects, p.generators, [(["f"], [])])


# rewriting


def test_completion_examples():
    p = ret_presentation()
    rs = complete_rewriting(p)
    assert rs.complete and rs.rules == {("i", "r"): ()}
    R = realize_finite(p, rs)
    assert sorted(R.morphisms) == ["i", "id_0", "id_1", "r", "r;i"]
    for f in R.morphisms:
        for g in R.morphisms:
            if R.tgt(f) == R.src(g):
                assert R.then(f, g) in R.morphisms

    rs = complete_rewriting(nat_presentation())
    assert rs.complete and not rs.rules

    p, rs = tau(standard_simplex(2))
    assert rs.complete and rs.rules == {("01", "12"): ("02",)}
    assert [w.letters for w in hom_set(p, rs, "0", "2").words] == [("02",)]


def test_rules_decrease_and_confluence():
    for p in (ret_presentation(), fundamental_category(standard_simplex(3)),
              fundamental_category(nerve(FiniteCategory.cyclic_group(3), 2)),
              groupoidify(fundamental_category(standard_simplex(2)))):
        rs = complete_rewriting(p)
        assert rs.complete and rs.is_locally_confluent()
        for lhs, rhs in rs.rules.items():
            assert p.shortlex(rhs) < p.shortlex(lhs)


BRAID = CatPresentation(["*"], [("a", "*", "*"), ("b", "*", "*")], [(["a", "b", "a"], ["b", "a", "b"])])


def test_completion_budget_is_reported():
    # the braid relation aba = bab has no finite shortlex system with a < b
    rs = complete_rewriting(BRAID, max_rules=20, max_len=12)
    assert not rs.complete
    assert rs.status.startswith("incomplete(")


def test_words_equal_examples():
    p = ret_presentation()
    rs = complete_rewriting(p)
    ir = p.word(["r", "i"])
    assert words_equal(p, rs, p.compose(ir, ir), ir) == Verdict.EQUAL
    n = nat_presentation()
    rn = complete_rewriting(n)
    assert words_equal(n, rn, n.word(["alpha"] * 3), n.word(["alpha"] * 2)) == Verdict.NOT_EQUAL
    q, rq = tau(standard_simplex(2))
    assert words_equal(q, rq, q.word(["01", "12"]), q.word(["02"])) == Verdict.EQUAL
    with pytest.raises(PresentationError):
        words_equal(p, rs, p.word(["i"]), p.word(["r"]))


def test_words_equal_without_completion():
    p = ret_presentation()
    empty = RewriteSystem(p, {}, False, "not run")
    ir = p.word(["r", "i"])
    assert words_equal(p, empty, p.compose(ir, ir), ir) == Verdict.EQUAL
    rs = RewriteSystem(BRAID, {}, False, "not run")
    w = BRAID.word(["a", "b", "a", "b", "a"])
    assert words_equal(BRAID, rs, w, BRAID.word(["b", "a", "b", "b", "a"])) == Verdict.EQUAL
    # the relation preserves length, so classes are finite and NotEqual is certain
    assert words_equal(BRAID, rs, w, BRAID.word(["a"] * 5)) == Verdict.NOT_EQUAL
    assert words_equal(BRAID, rs, w, BRAID.word(["a"] * 5), bfs_budget=2) == Verdict.UNKNOWN


def congruence_class(p, word, src, max_len, budget=20000):
    """Words reachable from ``word`` by applying relations in either direction.

    Returns ``(class, exact)``; ``exact`` is false when the length cap or budget cut the search.
    """
    eqs = []
    for w1, w2 in p.relations:
        eqs += [(w1.letters, w2.letters, w1.src), (w2.letters, w1.letters, w1.src)]
    seen = {word}
    todo = deque([word])
    exact = True
    while todo:
        w = todo.popleft()
        objs = [src] + [p.generator(x).tgt for x in w]
        for u, v, u_src in eqs:
            if u:
                spots = [i for i in range(len(w) - len(u) + 1) if w[i:i + len(u)] == u]
                new = [w[:i] + v + w[i + len(u):] for i in spots]
            else:
                new = [w[:i] + v + w[i:] for i, o in enumerate(objs) if o == u_src]
            for x in new:
                if len(x) > max_len:
                    exact = False
                elif x not in seen:
                    seen.add(x)
                    todo.append(x)
        if len(seen) > budget:
            return seen, False
    return seen, exact


def random_presentation(rng):
    objects = ["a", "b"][: rng.randint(1, 2)]
    gens = [(f"g{k}", rng.choice(objects), rng.choice(objects)) for k in range(rng.randint(1, 4))]
    p = CatPresentation(objects, gens)
    rels = []
    for _ in range(rng.randint(1, 2)):
        w = random_word(rng, p, rng.choice(objects), rng.randint(1, 3))
        if w is None:
            continue
        # a second word with the same endpoints, found by sampling
        for _ in range(50):
            v = random_word(rng, p, w.src, rng.randint(0, 3))
            if v is not None and v.tgt == w.tgt and v != w:
                rels.append((w, v))
                break
    return CatPresentation(objects, gens, rels)


def random_word(rng, p, src, length):
    out, obj = [], src
    for _ in range(length):
        options = [g for g in p.generators if g.src == obj]
        if not options:
            return None
        g = rng.choice(options)
        out.append(g.name)
        obj = g.tgt
    return MorphismWord(src, obj, tuple(out))


def test_completion_agrees_with_congruence_search():
    rng = random.Random(20240611)
    checked = exact_checks = 0
    for _ in range(120):
        p = random_presentation(rng)
        rs = complete_rewriting(p, max_rules=60, max_len=12)
        if not rs.complete:
            continue
        words = [w for w in (random_word(rng, p, rng.choice(p.objects), rng.randint(0, 6)) for _ in range(40)) if w]
        for w in words:
            nf = rs.normalize(w)
            assert rs.normalize(nf) == nf
            cls, exact = congruence_class(p, w.letters, w.src, max_len=9)
            assert nf.letters in cls or not exact
            for v in words:
                if (v.src, v.tgt) != (w.src, w.tgt):
                    continue
                checked += 1
                same = words_equal(p, rs, w, v) == Verdict.EQUAL
                if v.letters in cls:
                    assert same
                elif exact:
                    exact_checks += 1
                    assert not same
    assert checked > 200 and exact_checks > 50


# hom-sets and realizations


def test_hom_set_examples():
    n = nat_presentation()
    hs = hom_set(n, complete_rewriting(n), "*", "*", 5)
    assert not hs.finite and [len(w) for w in hs.words] == [0, 1, 2, 3, 4, 5]
    p = ret_presentation()
    hs = hom_set(p, complete_rewriting(p), "1", "1")
    assert hs.finite and [w.letters for w in hs.words] == [(), ("r", "i")]


def test_realize_finite():
    p, rs = tau(standard_simplex(2))
    R = realize_finite(p, rs)
    assert len(R.morphisms) == 6
    assert find_isomorphism(R, FiniteCategory.ordinal(2)) is not None
    d = free_category(["x", "y", "z"], [])
    assert sorted(realize_finite(d, complete_rewriting(d)).morphisms) == ["id_x", "id_y", "id_z"]
    n = nat_presentation()
    with pytest.raises(BudgetExceeded):
        realize_finite(n, complete_rewriting(n), 4)


def test_realized_ret_has_five_morphisms():
    # τ₁R is Ret: id_0, id_1, i, r and the idempotent i∘r
    p, rs = tau(walking_retraction())
    R = realize_finite(p, rs)
    assert len(R.morphisms) == 5
    assert find_isomorphism(R, FiniteCategory.walking_retraction()) is not None


@pytest.mark.parametrize("C", [
    FiniteCategory.ordinal(3),
    FiniteCategory.walking_retraction(),
    FiniteCategory.cyclic_group(2),
    FiniteCategory.cyclic_group(3),
    FiniteCategory.discrete(["a", "b"]),
], ids=["[3]", "Ret", "Z2", "Z3", "discrete"])
def test_tau_nerve_roundtrip(C):
    rep = tau_nerve_roundtrip(C)
    assert rep.ok
    assert find_isomorphism(rep.realized, C) is not None


def test_tau_preserves_products():
    D1 = standard_simplex(1, 2)
    P = product(D1, D1)
    p, rs = tau(P)
    square = FiniteCategory.product(FiniteCategory.ordinal(1), FiniteCategory.ordinal(1))
    assert find_isomorphism(realize_finite(p, rs), square) is not None


# localization


def test_localize_nat_is_z():
    n = nat_presentation()
    z = localize(n, ["alpha"])
    rs = complete_rewriting(z)
    assert rs.complete
    inv = inverse_name(n, "alpha")
    assert words_equal(z, rs, z.word(["alpha", inv]), z.identity("*")) == Verdict.EQUAL
    assert words_equal(z, rs, z.word([inv, "alpha"]), z.identity("*")) == Verdict.EQUAL
    assert words_equal(z, rs, z.word(["alpha"]), z.word([inv])) == Verdict.NOT_EQUAL
    assert not hom_set(z, rs, "*", "*", 4).finite


def test_localize_ret_at_i():
    loc = localize(ret_presentation(), ["i"])
    rs = complete_rewriting(loc)
    for a in loc.objects:
        for b in loc.objects:
            hs = hom_set(loc, rs, a, b)
            assert hs.finite and len(hs) == 1
    assert words_equal(loc, rs, loc.word(["r"]), loc.word(["i^-1"])) == Verdict.EQUAL
    assert equivalent_to_terminal(loc, rs) == Decision.YES


def test_localize_edge_cases():
    p = ret_presentation()
    assert localize(p, []) is p
    with pytest.raises(PresentationError):
        localize(p, ["nope"])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.sets(st.integers(0, 5)))
def test_localized_generators_become_invertible(n, picks):
    p = fundamental_category(standard_simplex(n, max(n, 2)))
    names = [g.name for g in p.generators]
    S = [names[k] for k in sorted(picks) if k < len(names)]
    loc = localize(p, S)
    rs = complete_rewriting(loc)
    assert rs.complete
    # the old relations still hold, so p maps into loc by the identity on generators
    for w1, w2 in p.relations:
        assert words_equal(loc, rs, w1, w2) == Verdict.EQUAL
    for s in S:
        g, inv = loc.generator(s), inverse_name(p, s)
        assert words_equal(loc, rs, loc.word([s, inv]), loc.identity(g.src)) == Verdict.EQUAL
        assert words_equal(loc, rs, loc.word([inv, s]), loc.identity(g.tgt)) == Verdict.EQUAL


@pytest.mark.parametrize("n", range(4))
def test_groupoidify_simplex_is_contractible(n):
    g = groupoidify(fundamental_category(standard_simplex(n, max(n, 2))))
    rs = complete_rewriting(g)
    assert all(len(hom_set(g, rs, a, b)) == 1 for a in g.objects for b in g.objects)


def test_groupoidify_other_examples():
    g = groupoidify(fundamental_category(circle()))
    rs = complete_rewriting(g)
    hs = hom_set(g, rs, "0", "0", 3)
    assert [len(w) for w in hs.words] == [0, 1, 1, 2, 2, 3, 3]
    d = free_category(["a", "b"], [])
    assert groupoidify(d) == d


def test_split_monos():
    p = ret_presentation()
    pairs = split_monos(p, complete_rewriting(p))
    assert [(m.letters, r.letters) for m, r in pairs] == [(("i",), ("r",))]
    n = nat_presentation()
    assert split_monos(n, complete_rewriting(n)) == []
    with_ids = split_monos(n, complete_rewriting(n), include_identities=True)
    assert [(m.letters, r.letters) for m, r in with_ids] == [((), ())]
    for k in range(4):
        q, rq = tau(standard_simplex(k, max(k, 2)))
        assert split_monos(q, rq) == []


def test_equivalent_to_terminal():
    n = nat_presentation()
    assert equivalent_to_terminal(n, complete_rewriting(n)) == Decision.NO
    q, rq = tau(standard_simplex(1, 2))
    assert equivalent_to_terminal(q, rq) == Decision.NO
    z = localize(BRAID, ["a", "b"])
    rs = complete_rewriting(z, max_rules=10, max_len=8)
    assert not rs.complete
    assert equivalent_to_terminal(z, rs, 3) == Decision.UNKNOWN


@pytest.mark.parametrize("n", range(5))
def test_dpi1_of_simplex(n):
    loc, rep = dpi1_surrogate(standard_simplex(n, max(n, 2)))
    assert rep.inverted == [] and loc == rep.tau1
    assert rep.morphism_count == (n + 1) * (n + 2) // 2
    assert rep.conjecture_surrogate


def test_dpi1_of_circle_and_retractions():
    loc, rep = dpi1_surrogate(circle())
    assert rep.inverted == [] and rep.terminal == Decision.NO and rep.morphism_count is None
    _, rep = dpi1_surrogate(walking_retraction())
    assert rep.inverted == ["i"] and rep.terminal == Decision.YES and rep.morphism_count == 4
    _, rep = dpi1_surrogate(nerve(FiniteCategory.walking_retraction(), 2))
    assert rep.terminal == Decision.YES
