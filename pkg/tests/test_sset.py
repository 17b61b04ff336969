from itertools import product as cartesian

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sscat import oracles
from sscat.category import FiniteCategory
from sscat.errors import CapError
from sscat.ordinal import OrdinalMap, all_maps
from sscat.sset import (
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    boundary,
    circle,
    coproduct,
    enumerate_maps,
    evaluate,
    ez_normalize,
    horn,
    is_isomorphic,
    nerve,
    opposite,
    pi0,
    product,
    product_with_projections,
    pullback,
    pushout,
    skeleton,
    spine,
    standard_simplex,
    validate,
    walking_retraction,
)


def nd(k, j):
    return SimplexRef.nd(k, j)


# constructors


@pytest.mark.parametrize("n,counts", [(0, (1,)), (2, (3, 3, 1)), (4, (5, 10, 10, 5, 1))])
def test_standard_simplex_counts(n, counts):
    D = standard_simplex(n)
    assert D.counts() == counts
    assert D.cap == n
    assert validate(D).ok


def test_standard_simplex_nd_are_increasing_subsets():
    D = standard_simplex(3)
    for k in range(4):
        assert sorted(D.vertices(s) for s in D.nd(k)) == [
            seq for seq in oracles.delta_sequences(3, k) if len(set(seq)) == k + 1
        ]


def test_boundary_horn_spine():
    assert boundary(2).counts() == (3, 3)
    assert is_isomorphic(horn(2, 1), spine(2)) is not None
    S = spine(3)
    assert S.counts() == (4, 3)
    assert sorted(S.vertices(e) for e in S.nd(1)) == [(0, 1), (1, 2), (2, 3)]
    assert horn(3, 0).counts() == (4, 6, 3)
    for bad in (lambda: boundary(0), lambda: horn(2, 3), lambda: spine(0)):
        with pytest.raises(ValueError):
            bad()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_boundary_is_skeleton(n):
    assert skeleton(standard_simplex(n), n - 1) == boundary(n)


def test_circle():
    S = circle()
    assert S.counts() == (1, 1)
    assert S.faces_of(1, 0) == (nd(0, 0), nd(0, 0))
    assert S.cap == 2
    assert len(pi0(S)) == 1
    assert validate(S).ok


def r_by_hand():
    # vertices 0, 1; edges i: 0 -> 1, r: 1 -> 0; one triangle with d2 = i, d0 = r, d1 = s0(0)
    s00 = SimplexRef(1, 0, OrdinalMap((0, 0), 0))
    return SimplicialSet(2, [[(), ()], [(nd(0, 1), nd(0, 0)), (nd(0, 0), nd(0, 1))], [(nd(1, 1), s00, nd(1, 0))]])


def test_walking_retraction():
    R = walking_retraction()
    assert R.counts() == (2, 2, 1)
    assert validate(R).ok
    assert is_isomorphic(R, r_by_hand()) is not None


def test_constructors_validate():
    for X in (standard_simplex(3), boundary(3), horn(3, 1), spine(4), circle(), walking_retraction(),
              nerve(FiniteCategory.walking_retraction(), 2), nerve(FiniteCategory.cyclic_group(3), 3),
              product(circle(), standard_simplex(1)), opposite(walking_retraction())):
        assert validate(X).ok


# validation


def test_validate_detects_swapped_edge():
    D = standard_simplex(2)
    faces = [list(level) for level in D.face_table]
    faces[1][1] = tuple(reversed(faces[1][1]))  # edge 02 now runs 2 -> 0
    bad = SimplicialSet(2, faces, check=False)
    report = validate(bad)
    assert not report.ok

    # brute force: every face of the 2-simplex is non-degenerate, so look faces up directly
    top = bad.faces_of(2, 0)
    expected = []
    for j in range(3):
        for i in range(j):
            lhs = bad.faces_of(1, top[j].index)[i]
            rhs = bad.faces_of(1, top[i].index)[j - 1]
            if lhs != rhs:
                expected.append(("identity", (2, 0), i, j))
    assert sorted(report.violations) == sorted(expected) == [("identity", (2, 0), 0, 1), ("identity", (2, 0), 1, 2)]


def test_validate_reports_dangling_reference():
    X = SimplicialSet(1, [[()], [(nd(0, 0), nd(0, 3))]], check=False)
    report = validate(X)
    assert not report.ok and report.violations[0][0] == "reference"
    with pytest.raises(ValueError):
        SimplicialSet(1, [[()], [(nd(0, 0), nd(0, 3))]])


# nerve


def test_nerve_of_ordinal_is_simplex():
    for n in range(4):
        assert is_isomorphic(nerve(FiniteCategory.ordinal(n), n), standard_simplex(n)) is not None


def test_nerve_of_discrete_category():
    X = nerve(FiniteCategory.discrete(["a", "b"]), 2)
    assert X.counts() == (2,)
    assert is_isomorphic(X, coproduct([standard_simplex(0), standard_simplex(0)])) is not None


def test_nerve_of_ret_counts():
    C = FiniteCategory.walking_retraction()
    X = nerve(C, 2)
    # oracle: composable pairs of non-identity morphisms from the table
    pairs = [(f, g) for f in C.non_identities() for g in C.non_identities() if C.tgt(f) == C.src(g)]
    assert X.counts() == (2, 3, len(pairs))
    assert len(pairs) == 5


def test_nerve_rejects_bad_table():
    C = FiniteCategory.walking_retraction()
    C.composition[("r", "i")] = "r"  # wrong type on purpose
    with pytest.raises(ValueError):
        nerve(C, 2)


# evaluate and Eilenberg-Zilber forms


def test_evaluate_examples():
    D = standard_simplex(2)
    top = nd(2, 0)
    assert evaluate(D, top, OrdinalMap.identity(2)) == top
    assert D.vertices(evaluate(D, top, OrdinalMap.face(2, 1))) == (0, 2)
    with pytest.raises(CapError):
        evaluate(D, top, OrdinalMap.degeneracy(2, 0))


def circle_oracle(r: SimplexRef):
    return "pt" if r.base_dim == 0 else tuple(r.degeneracy.values)


def test_circle_evaluate_against_oracle():
    S = circle(cap=3)
    for n in range(4):
        for s in S.simplices(n):
            seq = (0,) * (n + 1) if s.base_dim == 0 else s.degeneracy.values
            for m in range(4):
                for a in all_maps(m, n):
                    expected = oracles.circle_point(tuple(seq[v] for v in a.values))
                    assert circle_oracle(evaluate(S, s, a)) == expected


def test_circle_degenerate_faces():
    S = circle()
    alpha = nd(1, 0)
    s0 = S.degeneracy(alpha, 0)
    s1 = S.degeneracy(alpha, 1)
    assert S.face(s0, 0) == alpha and S.face(s0, 1) == alpha
    assert S.face(s0, 2) == S.degeneracy(nd(0, 0), 0)
    assert S.face(s1, 2) == alpha


def test_ez_normalize_examples():
    D = standard_simplex(3, cap=4)
    s = nd(2, 0)
    assert ez_normalize(D, s, []) == s
    v = nd(0, 2)
    assert ez_normalize(D, v, [("s", 0), ("d", 1), ("s", 0)]) == SimplexRef(1, 2, OrdinalMap((0, 0), 0))
    with pytest.raises(ValueError):
        ez_normalize(D, v, [("d", 0)])


def test_ez_forms_biject_with_sequences():
    D = standard_simplex(3, cap=4)
    for m in range(5):
        seqs = [D.vertices(s) for s in D.simplices(m)]
        assert sorted(seqs) == oracles.delta_sequences(3, m)


DELTA3 = standard_simplex(3, cap=4)


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_ez_normalize_matches_sequence_oracle(data):
    dim = data.draw(st.integers(0, 4))
    s = data.draw(st.sampled_from(DELTA3.simplices(dim)))
    word = []
    for _ in range(6):
        choices = [("s", i) for i in range(dim + 1)] if dim < 4 else []
        if dim > 0:
            choices += [("d", i) for i in range(dim + 1)]
        op = data.draw(st.sampled_from(choices))
        word.append(op)
        dim += 1 if op[0] == "s" else -1
    out = ez_normalize(DELTA3, s, word)
    assert DELTA3.vertices(out) == oracles.apply_word_to_sequence(DELTA3.vertices(s), word)
    assert ez_normalize(DELTA3, out, []) == out


FUNCTORIAL_BASES = {"delta3": standard_simplex(3), "circle": circle(cap=3), "R": walking_retraction().with_cap(3)}


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(sorted(FUNCTORIAL_BASES)), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3),
       st.randoms(use_true_random=False))
def test_evaluate_is_functorial(name, n, m, k, rng):
    X = FUNCTORIAL_BASES[name]
    s = rng.choice(X.simplices(n))
    a = rng.choice(all_maps(m, n))
    b = rng.choice(all_maps(k, m))
    assert evaluate(X, evaluate(X, s, a), b) == evaluate(X, s, a.compose(b))


# products


def test_product_unit():
    for X in (circle(), walking_retraction(), spine(2)):
        assert is_isomorphic(product(X, standard_simplex(0)), X) is not None


def test_square_counts():
    P = product(standard_simplex(1), standard_simplex(1))
    assert P.counts() == (4, 5, 2)
    X = standard_simplex(1)
    assert [oracles.product_nd_count(X, X, n) for n in range(3)] == [4, 5, 2]


@pytest.mark.parametrize("X,Y", [
    (standard_simplex(2), standard_simplex(1)),
    (circle(), circle()),
    (walking_retraction(), standard_simplex(1)),
    (horn(2, 0), circle()),
])
def test_product_counts_match_oracle(X, Y):
    P = product(X, Y)
    for n in range(P.cap + 1):
        assert P.count(n) == oracles.product_nd_count(X, Y, n)
    assert validate(P).ok


def test_product_limit():
    with pytest.raises(CapError):
        product(standard_simplex(4), standard_simplex(3))
    assert product(standard_simplex(2), standard_simplex(2), limit=4).cap == 4


@pytest.mark.parametrize("Z", [standard_simplex(1, 2), spine(2, 2), circle(), horn(2, 1, 2)])
def test_product_universal_property(Z):
    X, Y = circle(), standard_simplex(1, 2)
    P, px, py = product_with_projections(X, Y)
    to_x, to_y = enumerate_maps(Z, X), enumerate_maps(Z, Y)
    to_p = enumerate_maps(Z, P)
    assert len(to_p) == len(to_x) * len(to_y)
    pairs = set()
    for h in to_p:
        hx, hy = h.then(px), h.then(py)
        pairs.add((tuple(sorted(hx.assignment.items())), tuple(sorted(hy.assignment.items()))))
    assert len(pairs) == len(to_p)


# pushouts and pullbacks


def test_pushout_circle():
    A, B, C = boundary(1, 2), standard_simplex(1, 2), standard_simplex(0, 2)
    f = SimplicialMap.from_vertices(A, B, {0: 0, 1: 1})
    g = SimplicialMap.from_vertices(A, C, {0: 0, 1: 0})
    P, iB, iC = pushout(f, g)
    assert is_isomorphic(P, circle()) is not None
    assert f.then(iB).assignment == g.then(iC).assignment


def test_pushout_along_identity():
    X = walking_retraction()
    f = SimplicialMap.from_vertices(standard_simplex(0, 2), X, {0: 1})
    P, iB, _ = pushout(f, SimplicialMap.identity(f.source))
    assert is_isomorphic(P, X) is not None


def test_pullback_of_product_projection():
    X, Y = circle(), standard_simplex(1, 2)
    _, px, _ = product_with_projections(X, Y)
    v = SimplicialMap.from_vertices(standard_simplex(0, 2), X, {0: 0})
    P, _, _ = pullback(px, v)
    assert is_isomorphic(P, Y) is not None


# skeleton, pi0, opposite, coproduct


def test_skeleton():
    D = standard_simplex(3)
    assert skeleton(D, 2).counts() == (4, 6, 4)
    assert skeleton(D, 3) == D
    with pytest.raises(CapError):
        skeleton(D, 4)


def test_pi0():
    assert len(pi0(boundary(1))) == 2
    X, Y = walking_retraction(), coproduct([circle(), standard_simplex(0, 2)])
    assert len(pi0(coproduct([X, Y]))) == len(pi0(X)) + len(pi0(Y)) == 3


def test_opposite():
    for X in (standard_simplex(3), walking_retraction(), horn(2, 0)):
        assert opposite(opposite(X)) == X
        assert validate(opposite(X)).ok
    assert is_isomorphic(opposite(horn(2, 0)), horn(2, 2)) is not None
    assert is_isomorphic(horn(2, 0), horn(2, 2)) is None


# isomorphism search


def test_is_isomorphic_examples():
    assert is_isomorphic(standard_simplex(2), nerve(FiniteCategory.ordinal(2), 2)) is not None
    assert is_isomorphic(standard_simplex(1), boundary(2)) is None


def test_is_isomorphic_ignores_ids():
    A, B = walking_retraction(), horn(2, 0)
    X, Y = coproduct([A, B]), coproduct([B, A])
    assert X != Y
    fwd, inv = is_isomorphic(X, Y)
    assert fwd.then(inv).assignment == SimplicialMap.identity(X).assignment
    assert inv.then(fwd).assignment == SimplicialMap.identity(Y).assignment


def test_caps_are_explicit():
    D = standard_simplex(2)
    with pytest.raises(CapError):
        D.simplices(3)
    with pytest.raises(CapError):
        SimplicialSet(1, standard_simplex(2).face_table)
    assert len(D.with_cap(3).simplices(3)) == len(oracles.delta_sequences(2, 3))


def test_maps_commute_with_faces():
    D = standard_simplex(2)
    with pytest.raises(ValueError):
        SimplicialMap(standard_simplex(1, 2), D, {(0, 0): nd(0, 0), (0, 1): nd(0, 1), (1, 0): D.nd(1)[2]})
    for a, b in cartesian(range(3), range(3)):
        if a <= b:
            SimplicialMap.from_vertices(standard_simplex(1, 2), D, {0: a, 1: b})
