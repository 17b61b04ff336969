"""Executable acceptance checks.

``CHECKS`` lists every check with its criterion number; :func:`run_check`
times one of them.  The ``verify-examples`` verb and the acceptance tests
both run this registry.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import oracles
from .builtins import double_cover, horn_cover, spine_over_circle, vertex_inclusion
from .category import FiniteCategory, find_isomorphism, is_isomorphism
from .corpus import (
    DEFAULT_SEED,
    random_base,
    random_ordinal_map,
    random_representation,
    random_simplex,
    random_simplex_map,
)
from .covers import (
    Representation,
    fibre,
    is_cover,
    is_left_cover,
    is_right_cover,
    reconstruct,
    universal_left_cover,
    verify_recfib,
)
from .fpcat import (
    Decision,
    complete_rewriting,
    dpi1_surrogate,
    functor_on_words,
    fundamental_category,
    hom_set,
    product_comparison,
    realize_finite,
    tau_nerve_roundtrip,
)
from .preorder import (
    FiniteTopology,
    Preorder,
    Relation,
    alexandroff_opens,
    closure,
    condense,
    exit_path_of_poset,
    specialisation,
)
from .sset import (
    SimplicialMap,
    boundary,
    circle,
    coproduct,
    ez_normalize,
    horn,
    is_isomorphic,
    nerve,
    opposite,
    product,
    pullback,
    skeleton,
    spine,
    standard_simplex,
    validate,
    walking_retraction,
)


@dataclass
class Check:
    criterion: int
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] criterion {self.criterion}: {self.name}{extra}  [{self.seconds:.2f}s]"


def _timed(criterion: int, name: str, fn) -> Check:
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return Check(criterion, name, bool(ok), detail, time.perf_counter() - start)


# 1. fundamental categories


def ordinal_comparison(n: int):
    """``realize_finite(τ₁Δⁿ)`` against ``[n]`` via the canonical functor."""
    p = fundamental_category(standard_simplex(n, max(n, 2)))
    R = realize_finite(p, complete_rewriting(p))
    C = FiniteCategory.ordinal(n)
    on_obj = {a: a for a in p.objects}
    on_gen = {g.name: f"{g.src}<{g.tgt}" for g in p.generators}
    on_mor = {name: functor_on_words(C, on_obj, on_gen, w) for name, w in R.words.items()}
    return R, C, is_isomorphism(R, C, on_obj, on_mor)


def _c1_delta():
    bad = []
    for n in range(6):
        R, C, canonical = ordinal_comparison(n)
        if not canonical or find_isomorphism(R, C) is None:
            bad.append(n)
    return not bad, f"failing n: {bad}" if bad else "n = 0..5"


def _c1_circle():
    p = fundamental_category(circle())
    rs = complete_rewriting(p)
    shape = (len(p.objects), len(p.generators), len(p.relations), len(rs.rules))
    sizes = []
    for bound in range(6):
        hs = hom_set(p, rs, p.objects[0], p.objects[0], bound)
        sizes.append((len(hs.words), hs.finite))
    ok = shape == (1, 1, 0, 0) and sizes == [(k + 1, False) for k in range(6)]
    return ok, f"shape {shape}, truncations {[s for s, _ in sizes]}"


def _ret_realized():
    p = fundamental_category(walking_retraction())
    rs = complete_rewriting(p)
    return realize_finite(p, rs), rs


def _c1_ret_iso():
    R, rs = _ret_realized()
    return rs.complete and find_isomorphism(R, FiniteCategory.walking_retraction()) is not None, \
        f"{len(R.morphisms)} morphisms, rewriting {rs.status}"


def _c1_ret_count():
    R, _ = _ret_realized()
    return len(R.morphisms) == 6, f"expected 6 morphisms, found {len(R.morphisms)}: {sorted(R.morphisms)}"


# 2. nerve round trip


def all_posets(max_size: int = 4):
    for n in range(max_size + 1):
        domain = [chr(ord("a") + k) for k in range(n)]
        for mask in oracles.all_preorder_masks(n):
            pairs = oracles.mask_to_pairs(mask, domain)
            if all(a == b or (b, a) not in pairs for a, b in pairs):
                yield Preorder(domain, pairs)


def _c2_posets():
    count, bad = 0, []
    for P in all_posets(4):
        C = P.thin_category()
        rep = tau_nerve_roundtrip(C)
        count += 1
        if not rep.ok or find_isomorphism(rep.realized, C) is None:
            bad.append(P)
    return not bad, f"{count} posets, {len(bad)} failures"


def _c2_small():
    cats = {
        "Ret": FiniteCategory.walking_retraction(),
        "Z/2": FiniteCategory.cyclic_group(2),
        "Z/3": FiniteCategory.cyclic_group(3),
    }
    bad = [name for name, C in cats.items()
           if not tau_nerve_roundtrip(C).ok or find_isomorphism(tau_nerve_roundtrip(C).realized, C) is None]
    return not bad, f"failures: {bad}" if bad else "Ret, Z/2, Z/3"


# 3. products


def product_check(X, Y):
    """Canonical comparison is an isomorphism, and hom sizes multiply."""
    RP, prod, on_obj, on_mor = product_comparison(X, Y)
    canonical = is_isomorphism(RP, prod, on_obj, on_mor)
    sizes = {}
    for f, (s, t) in RP.morphisms.items():
        sizes[(s, t)] = sizes.get((s, t), 0) + 1
    inv = {v: k for k, v in on_obj.items()}
    table = all(sizes.get((inv[a], inv[b]), 0) == len(prod.hom(a, b)) for a in prod.objects for b in prod.objects)
    return canonical and table


def _c3(seed: int):
    rng = random.Random(seed)
    bad = []
    for k in range(25):
        (X, _), (Y, _) = random_base(rng), random_base(rng)
        if not product_check(X, Y):
            bad.append(k)
    return not bad, f"25 pairs, failing: {bad}"


# 4. universal covers


def _c4_delta():
    bad = []
    for n in range(5):
        cap = max(n, 2)
        D = standard_simplex(n, cap)
        for k in range(n + 1):
            U = universal_left_cover(D, k)
            shift = SimplicialMap.from_vertices(standard_simplex(n - k, cap), D, {j: k + j for j in range(n - k + 1)})
            if U.truncated or is_isomorphic(U.map.source, shift.source, over=(U.map, shift)) is None:
                bad.append((n, k))
    return not bad, f"failing (n, k): {bad}" if bad else "0 <= k <= n <= 4"


def _c4_circle():
    bad = []
    for N in range(1, 7):
        U = universal_left_cover(circle(), 0, hom_bound=N)
        target = spine_over_circle(N)
        if not U.truncated or is_isomorphic(U.map.source, target.source, over=(U.map, target)) is None:
            bad.append(N)
    return not bad, f"failing N: {bad}" if bad else "N = 1..6, truncated"


# 5. rec/fib


def _c5_horn():
    p = horn_cover()
    X = p.target
    tau = fundamental_category(X)
    F = Representation(tau, {"0": ["a", "b"], "1": ["c"]}, {"01": {"a": "c", "b": "c"}})
    q = reconstruct(X, F)
    same = is_isomorphic(q.source, p.source, over=(q, p)) is not None
    rep = verify_recfib(X, [F, fibre(p)], [p])
    return same and rep.ok, f"reconstruct matches horn: {same}, round trips: {rep.ok}"


def _c5_circle():
    p = double_cover()
    X = p.target
    F = Representation(fundamental_category(X), {"0": ["a", "b"]}, {"alpha": {"a": "b", "b": "a"}})
    q = reconstruct(X, F)
    same = is_isomorphic(q.source, p.source, over=(q, p)) is not None
    rep = verify_recfib(X, [F, fibre(p)], [p, q])
    return same and rep.ok, f"reconstruct matches double cover: {same}, round trips: {rep.ok}"


def random_corpus(seed: int, count: int = 50):
    """Seeded (base, representation) pairs with certified finite hom-sets."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        X, kind = random_base(rng)
        p = fundamental_category(X)
        realize_finite(p, complete_rewriting(p))
        out.append((X, random_representation(rng, X, kind)))
    return out


def _c5_random(seed: int):
    bad = []
    for k, (X, F) in enumerate(random_corpus(seed)):
        rep = verify_recfib(X, [F], [reconstruct(X, F)])
        if not rep.ok:
            bad.append(k)
    return not bad, f"50 representations, failing: {bad}"


# 6. cover characterizations


def cover_corpus(seed: int):
    maps = [horn_cover(), double_cover(), vertex_inclusion(1, 0), vertex_inclusion(1, 1),
            SimplicialMap.identity(circle()), SimplicialMap.identity(walking_retraction())]
    for n in range(4):
        for k in range(n + 1):
            maps.append(universal_left_cover(standard_simplex(n, max(n, 2)), k).map)
    rng = random.Random(seed + 1)
    for X, F in random_corpus(seed, 20):
        maps.append(reconstruct(X, F))
        maps.append(random_simplex_map(rng, X))
    return maps


def _c6_agree(seed: int):
    bad = []
    maps = cover_corpus(seed)
    for k, p in enumerate(maps):
        r = is_cover(p)
        if not r.agree:
            bad.append(k)
    return not bad, f"{len(maps)} maps, disagreements: {bad}"


def _c6_examples():
    h = horn_cover()
    v0, v1 = vertex_inclusion(1, 0), vertex_inclusion(1, 1)
    facts = {
        "horn left": is_left_cover(h).ok,
        "horn not right": not is_right_cover(h).ok,
        "horn not two-sided": not is_cover(h).ok,
        "vertex 0 not left": not is_left_cover(v0).ok,
        "vertex 1 left": is_left_cover(v1).ok,
        "double cover two-sided": is_cover(double_cover()).ok,
    }
    bad = [k for k, v in facts.items() if not v]
    return not bad, f"failing: {bad}" if bad else "all positive/negative examples"


# 7. localization surrogate


def _c7_delta():
    bad = []
    for n in range(5):
        loc, rep = dpi1_surrogate(standard_simplex(n, max(n, 2)))
        R = realize_finite(loc, complete_rewriting(loc))
        if rep.inverted or find_isomorphism(R, FiniteCategory.ordinal(n)) is None:
            bad.append(n)
    return not bad, f"failing n: {bad}" if bad else "n = 0..4"


def _c7_circle():
    loc, rep = dpi1_surrogate(circle())
    rs = complete_rewriting(loc)
    hs = hom_set(loc, rs, loc.objects[0], loc.objects[0], 5)
    ok = (not rep.inverted and (len(loc.objects), len(loc.generators), len(loc.relations)) == (1, 1, 0)
          and len(hs.words) == 6 and not hs.finite and rep.terminal == Decision.NO)
    return ok, f"inverted {rep.inverted}, terminal {rep.terminal.value}"


def _c7_terminal():
    verdicts = {
        "R": dpi1_surrogate(walking_retraction())[1].terminal,
        "sk2 Nerv Ret": dpi1_surrogate(nerve(FiniteCategory.walking_retraction(), 2))[1].terminal,
    }
    return all(v == Decision.YES for v in verdicts.values()), ", ".join(f"{k}: {v.value}" for k, v in verdicts.items())


# 8. preorders


def _domains(max_size: int = 4):
    return [[chr(ord("a") + k) for k in range(n)] for n in range(max_size + 1)]


def _c8_closure():
    bad = 0
    total = 0
    for domain in _domains():
        n = len(domain)
        pre = oracles.all_preorder_masks(n)
        full = (1 << (n * n)) - 1
        for mask in range(1 << (n * n)):
            total += 1
            got = oracles.pairs_to_mask(closure(Relation(domain, oracles.mask_to_pairs(mask, domain))).pairs, domain)
            if got != oracles.closure_by_minimum(mask, pre, full):
                bad += 1
    return bad == 0, f"{total} relations, {bad} mismatches"


def _c8_alexandroff():
    bad = []
    for domain in _domains():
        n = len(domain)
        preorders = [Preorder(domain, oracles.mask_to_pairs(m, domain)) for m in oracles.all_preorder_masks(n)]
        tops = oracles.all_topologies(domain)
        images = set()
        for P in preorders:
            T = alexandroff_opens(P)
            images.add(T.opens)
            if specialisation(T) != P:
                bad.append(("round trip", P))
            if P.is_poset() != T.is_T0():
                bad.append(("T0", P))
        if images != set(tops) or len(preorders) != len(tops):
            bad.append(("bijection", n))
        for fam in tops:
            T = FiniteTopology(domain, fam)
            if alexandroff_opens(specialisation(T)) != T:
                bad.append(("inverse", n))
    return not bad, f"{len(bad)} failures"


def _c8_condense():
    bad = 0
    for domain in _domains():
        for mask in oracles.all_preorder_masks(len(domain)):
            P = Preorder(domain, oracles.mask_to_pairs(mask, domain))
            Q, quotient = condense(P)
            classes = set(quotient.values())
            if classes != oracles.chaotic_classes(domain, P.pairs) or not Q.is_antisymmetric():
                bad += 1
    return bad == 0, f"{bad} mismatches"


def _c8_exit():
    bad = 0
    for P in all_posets(4):
        p = exit_path_of_poset(P)
        rs = complete_rewriting(p)
        R = realize_finite(p, rs)
        thin = all(len(hom_set(p, rs, a, b).words) <= 1 for a in p.objects for b in p.objects)
        C = P.thin_category()
        on_obj = {a: a for a in p.objects}
        on_gen = {g.name: g.name for g in p.generators}
        on_mor = {name: functor_on_words(C, on_obj, on_gen, w) for name, w in R.words.items()}
        if not thin or not is_isomorphism(R, C, on_obj, on_mor):
            bad += 1
    return bad == 0, f"{bad} failures"


# 9. structural properties


def constructor_corpus():
    out = [standard_simplex(n) for n in range(6)]
    out += [boundary(n) for n in range(1, 5)]
    out += [horn(n, k) for n in range(1, 5) for k in range(n + 1)]
    out += [spine(n) for n in range(1, 6)]
    out += [circle(), walking_retraction()]
    out += [nerve(FiniteCategory.ordinal(3), 3), nerve(FiniteCategory.walking_retraction(), 3),
            nerve(FiniteCategory.cyclic_group(3), 3)]
    out += [product(standard_simplex(1), standard_simplex(1)), product(circle(), circle()),
            product(walking_retraction(), standard_simplex(1)), product(standard_simplex(2), standard_simplex(2))]
    out += [opposite(X) for X in list(out)]
    out += [coproduct([circle(), walking_retraction()]), skeleton(standard_simplex(3), 2)]
    out += [double_cover().source, horn_cover().source]
    out += [universal_left_cover(circle(), 0, 4).map.source]
    return out


def _c9_identities():
    corpus = constructor_corpus()
    bad = [k for k, X in enumerate(corpus) if not validate(X).ok]
    return not bad, f"{len(corpus)} sets, failing: {bad}"


def _c9_ez(seed: int):
    D = standard_simplex(3, 4)
    bad = 0
    seqs = {}
    for m in range(5):
        for s in D.simplices(m):
            seqs[s] = D.vertices(s)
        if sorted(seqs[s] for s in D.simplices(m)) != oracles.delta_sequences(3, m):
            bad += 1
    ops = []
    for s, seq in seqs.items():
        for i in range(s.dim + 1):
            if s.dim >= 1:
                ops.append((s, [("d", i)]))
            if s.dim < 4:
                ops.append((s, [("s", i)]))
    rng = random.Random(seed)
    refs = list(seqs)
    while len(ops) < len(seqs) * 4 + 500:
        s = rng.choice(refs)
        word, dim = [], s.dim
        for _ in range(6):
            choices = [("d", i) for i in range(dim + 1) if dim >= 1] + [("s", i) for i in range(dim + 1) if dim < 4]
            op = rng.choice(choices)
            word.append(op)
            dim += 1 if op[0] == "s" else -1
        ops.append((s, word))
    for s, word in ops:
        out = ez_normalize(D, s, word)
        if D.vertices(out) != oracles.apply_word_to_sequence(seqs[s], word) or ez_normalize(D, out, []) != out:
            bad += 1
    return bad == 0, f"{len(ops)} words, {bad} mismatches"


def _c9_functorial(seed: int):
    rng = random.Random(seed)
    spaces = [standard_simplex(3), circle(), walking_retraction()]
    bad = 0
    for _ in range(1000):
        X = rng.choice(spaces)
        s = random_simplex(rng, X, X.cap)
        m, k = rng.randint(0, X.cap), rng.randint(0, X.cap)
        a = random_ordinal_map(rng, m, s.dim)
        b = random_ordinal_map(rng, k, m)
        if X.evaluate(X.evaluate(s, a), b) != X.evaluate(s, a.compose(b)):
            bad += 1
    return bad == 0, f"1000 samples, {bad} violations"


def _c9_base_change(seed: int):
    rng = random.Random(seed + 2)
    bad = 0
    for X, F in random_corpus(seed + 3, 20):
        p = reconstruct(X, F)
        f = random_simplex_map(rng, X)
        _, q, _ = pullback(p, f)
        if not is_left_cover(q).ok:
            bad += 1
    return bad == 0, f"20 pullbacks, {bad} failures"


# (criterion, name, function of the seed returning (ok, detail))
CHECKS = [
    (1, "tau1 of the standard simplices is the ordinal", lambda seed: _c1_delta()),
    (1, "tau1 of the circle is free on one loop", lambda seed: _c1_circle()),
    (1, "tau1 of R is isomorphic to Ret", lambda seed: _c1_ret_iso()),
    (1, "tau1 of R has exactly 6 morphisms", lambda seed: _c1_ret_count()),
    (2, "nerve round trip on all posets with at most 4 elements", lambda seed: _c2_posets()),
    (2, "nerve round trip on Ret, Z/2, Z/3", lambda seed: _c2_small()),
    (3, "tau1 preserves products on 25 random pairs", _c3),
    (4, "universal left cover of a simplex at k is the top face", lambda seed: _c4_delta()),
    (4, "universal left cover of the circle is a spine", lambda seed: _c4_circle()),
    (5, "rec/fib round trip on the horn example", lambda seed: _c5_horn()),
    (5, "rec/fib round trip on the circle double cover", lambda seed: _c5_circle()),
    (5, "rec/fib round trip on 50 random representations", _c5_random),
    (6, "two-sided cover iff left cover with bijective monodromy", _c6_agree),
    (6, "named positive and negative cover examples", lambda seed: _c6_examples()),
    (7, "surrogate leaves the ordinals unchanged", lambda seed: _c7_delta()),
    (7, "surrogate leaves the free monoid on the circle", lambda seed: _c7_circle()),
    (7, "surrogate of R and of the nerve of Ret is terminal", lambda seed: _c7_terminal()),
    (8, "closure equals the brute-force minimum", lambda seed: _c8_closure()),
    (8, "Alexandroff/specialisation bijection and poset iff T0", lambda seed: _c8_alexandroff()),
    (8, "condensation equals the chaotic classes", lambda seed: _c8_condense()),
    (8, "exit path category of a poset is the poset", lambda seed: _c8_exit()),
    (9, "simplicial identities on all constructors", lambda seed: _c9_identities()),
    (9, "EZ normalization against vertex sequences on the 3-simplex", _c9_ez),
    (9, "functoriality of evaluate on 1000 samples", _c9_functorial),
    (9, "base change of left covers on 20 pullbacks", _c9_base_change),
]


def run_check(index: int, seed: int = DEFAULT_SEED) -> Check:
    criterion, name, fn = CHECKS[index]
    return _timed(criterion, name, lambda: fn(seed))


def run_all(seed: int = DEFAULT_SEED, only=None) -> list[Check]:
    return [run_check(k, seed) for k, (c, _, _) in enumerate(CHECKS) if only is None or c in only]
