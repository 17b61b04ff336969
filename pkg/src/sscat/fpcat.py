"""Finitely presented categories and the word problem.

Words are tuples of generator names in diagrammatic order: ``(f, g)`` means
"``f`` then ``g``", i.e. ``g ∘ f``.  Every generator fixes its endpoints, so a
word together with its source object determines a morphism of the free
category; the empty word at ``a`` is the identity of ``a``.

Rewriting is shortlex Knuth-Bendix completion.  Because rules have non-empty
left-hand sides, any occurrence of a left-hand side inside a composable word
is automatically well typed, so the usual string algorithms apply verbatim.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .category import FiniteCategory, is_isomorphism
from .errors import BudgetExceeded, CapError, PresentationError
from .sset import SimplexRef, SimplicialSet, nerve


class Verdict(enum.Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"
    UNKNOWN = "Unknown"


class Decision(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Generator:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class MorphismWord:
    src: str
    tgt: str
    letters: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self):
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self):
        return f"id_{self.src}" if not self.letters else ";".join(self.letters)


class CatPresentation:
    """Objects, generating arrows and relations between composable words."""

    def __init__(self, objects: Iterable[str], generators: Iterable, relations: Iterable = ()):
        self.objects = tuple(objects)
        gens = []
        for g in generators:
            gens.append(g if isinstance(g, Generator) else Generator(*g))
        self.generators = tuple(gens)
        self._gen = {}
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise PresentationError("duplicate objects")
        for g in self.generators:
            if g.name in self._gen:
                raise PresentationError(f"duplicate generator name {g.name!r}")
            if g.src not in objs or g.tgt not in objs:
                raise PresentationError(f"generator {g.name!r} has unknown endpoints")
            self._gen[g.name] = g
        rels = []
        for w1, w2 in relations:
            if not isinstance(w1, MorphismWord) or not isinstance(w2, MorphismWord):
                w1, w2 = self.relation_words(w1, w2)
            self.check_word(w1)
            self.check_word(w2)
            if (w1.src, w1.tgt) != (w2.src, w2.tgt):
                raise PresentationError(f"relation {w1} = {w2} has mismatched endpoints")
            rels.append((w1, w2))
        self.relations = tuple(rels)
        self.order = {g.name: k for k, g in enumerate(self.generators)}

    def __repr__(self):
        return (f"CatPresentation({len(self.objects)} objects, {len(self.generators)} generators, "
                f"{len(self.relations)} relations)")

    def __eq__(self, other):
        if not isinstance(other, CatPresentation):
            return NotImplemented
        return (self.objects, self.generators, self.relations) == (other.objects, other.generators, other.relations)

    def generator(self, name: str) -> Generator:
        try:
            return self._gen[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r}") from None

    def word(self, letters: Sequence[str], src: Optional[str] = None) -> MorphismWord:
        """The word with the given letters; ``src`` is needed for the empty word."""
        letters = tuple(letters)
        if not letters:
            if src is None:
                raise PresentationError("the empty word needs an explicit object")
            if src not in self.objects:
                raise PresentationError(f"unknown object {src!r}")
            return MorphismWord(src, src, ())
        w = MorphismWord(self.generator(letters[0]).src, self.generator(letters[-1]).tgt, letters)
        self.check_word(w)
        if src is not None and src != w.src:
            raise PresentationError(f"word {w} does not start at {src}")
        return w

    def identity(self, a: str) -> MorphismWord:
        return self.word((), a)

    def relation_words(self, l1: Sequence[str], l2: Sequence[str]):
        """Words for a relation given as letter lists; endpoints of an empty side
        are read off the other side."""
        l1, l2 = tuple(l1), tuple(l2)
        if not l1 and not l2:
            raise PresentationError("a relation needs at least one non-empty side")
        ref = self.word(l1 or l2)
        return self.word(l1, ref.src), self.word(l2, ref.src)

    def check_word(self, w: MorphismWord):
        obj = w.src
        for letter in w.letters:
            g = self.generator(letter)
            if g.src != obj:
                raise PresentationError(f"word {w} is not composable at {letter}")
            obj = g.tgt
        if obj != w.tgt:
            raise PresentationError(f"word {w} does not end at {w.tgt}")

    def compose(self, w1: MorphismWord, w2: MorphismWord) -> MorphismWord:
        """``w1`` then ``w2``."""
        if w1.tgt != w2.src:
            raise PresentationError(f"{w1} and {w2} are not composable")
        return MorphismWord(w1.src, w2.tgt, w1.letters + w2.letters)

    def shortlex(self, letters: Sequence[str]):
        return (len(letters), tuple(self.order[x] for x in letters))


# ---------------------------------------------------------------------------
# tau_1 of a simplicial set


def vertex_names(X: SimplicialSet) -> list[str]:
    """Object names for the vertices: labels when present and distinct, else ids."""
    labels = [X.label(0, j) for j in range(X.count(0))]
    if all(lab is not None for lab in labels) and len(set(map(str, labels))) == len(labels):
        return [str(lab) for lab in labels]
    return [str(j) for j in range(X.count(0))]


def edge_names(X: SimplicialSet) -> list[str]:
    """Generator names for the non-degenerate edges, same policy with ``e{id}``."""
    n = X.count(1)
    labels = [X.label(1, j) for j in range(n)]
    if all(lab is not None for lab in labels) and len(set(map(str, labels))) == n:
        return [str(lab) for lab in labels]
    return [f"e{j}" for j in range(n)]


def edge_word(X: SimplicialSet, e: SimplexRef, names: Optional[list[str]] = None) -> tuple:
    """The word of a 1-simplex: its generator, or empty when degenerate."""
    if e.is_degenerate():
        return ()
    return ((names or edge_names(X))[e.index],)


def fundamental_category(X: SimplicialSet) -> CatPresentation:
    """``τ₁X``: vertices, non-degenerate edges, one relation per 2-simplex.

    For a non-degenerate 2-simplex ``x`` the relation reads
    ``d_1 x = (d_2 x) then (d_0 x)``.
    """
    if X.cap < 2:
        raise CapError(f"the fundamental category needs cap >= 2, got {X.cap}")
    vn, en = vertex_names(X), edge_names(X)
    gens = []
    for j in range(X.count(1)):
        d0, d1 = X.faces_of(1, j)
        gens.append(Generator(en[j], vn[d1.index], vn[d0.index]))
    relations = []
    for j in range(X.count(2)):
        d0, d1, d2 = X.faces_of(2, j)
        src = vn[X.first_vertex(SimplexRef.nd(2, j))]
        lhs = MorphismWord(src, src, edge_word(X, d1, en))
        rhs = MorphismWord(src, src, edge_word(X, d2, en) + edge_word(X, d0, en))
        relations.append(_typed_pair(vn, gens, lhs.letters, rhs.letters, src))
    return CatPresentation(vn, gens, relations)


def _typed_pair(objects, gens, l1, l2, src):
    lookup = {g.name: g for g in gens}

    def mk(letters):
        tgt = lookup[letters[-1]].tgt if letters else src
        return MorphismWord(src, tgt, letters)

    return mk(l1), mk(l2)


def free_category(objects: Iterable[str], arrows: Iterable) -> CatPresentation:
    """The free category on a quiver given as ``(name, src, tgt)`` triples."""
    return CatPresentation(objects, arrows, ())


# ---------------------------------------------------------------------------
# rewriting


class RewriteSystem:
    """Oriented rules ``lhs -> rhs`` (shortlex decreasing) over a presentation."""

    def __init__(self, presentation: CatPresentation, rules, complete: bool, note: str = ""):
        self.presentation = presentation
        self.rules = dict(rules)
        self.complete = complete
        self.note = note
        self._lens = sorted({len(lhs) for lhs in self.rules}, reverse=True)

    @property
    def status(self) -> str:
        return "complete" if self.complete else f"incomplete({self.note})"

    def __repr__(self):
        return f"RewriteSystem({len(self.rules)} rules, {self.status})"

    def reduce(self, letters: Sequence[str]) -> tuple:
        """Leftmost-innermost normal form with respect to the rules."""
        out: list = []
        todo = list(reversed(tuple(letters)))
        rules, lens = self.rules, self._lens
        while todo:
            out.append(todo.pop())
            for L in lens:
                if L <= len(out):
                    rhs = rules.get(tuple(out[-L:]))
                    if rhs is not None:
                        del out[-L:]
                        todo.extend(reversed(rhs))
                        break
        return tuple(out)

    def normalize(self, w: MorphismWord) -> MorphismWord:
        return MorphismWord(w.src, w.tgt, self.reduce(w.letters))

    def is_irreducible(self, letters: Sequence[str]) -> bool:
        letters = tuple(letters)
        for L in self._lens:
            for i in range(len(letters) - L + 1):
                if letters[i:i + L] in self.rules:
                    return False
        return True

    def suffix_irreducible(self, letters: tuple) -> bool:
        """No rule matches a suffix; enough for extensions of irreducible words."""
        return not any(L <= len(letters) and letters[-L:] in self.rules for L in self._lens)

    def _refresh(self):
        self._lens = sorted({len(lhs) for lhs in self.rules}, reverse=True)

    def critical_pairs(self):
        """All critical pairs ``(word, reduct1, reduct2)`` from overlaps and inclusions."""
        items = list(self.rules.items())
        for l1, r1 in items:
            for l2, r2 in items:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        yield l1 + l2[k:], r1 + l2[k:], l1[:-k] + r2
                if l1 != l2 and len(l2) <= len(l1):
                    for j in range(len(l1) - len(l2) + 1):
                        if l1[j:j + len(l2)] == l2:
                            yield l1, r1, l1[:j] + r2 + l1[j + len(l2):]

    def is_locally_confluent(self) -> bool:
        return all(self.reduce(a) == self.reduce(b) for _, a, b in self.critical_pairs())


def complete_rewriting(p: CatPresentation, max_rules: int = 5000, max_len: int = 24) -> RewriteSystem:
    """Knuth-Bendix completion with shortlex order and explicit budgets.

    The status is complete only after a final pass confirms that every critical
    pair of the resulting system resolves.
    """
    key = p.shortlex
    rs = RewriteSystem(p, {}, False)
    rules = rs.rules
    pending = deque((w1.letters, w2.letters) for w1, w2 in p.relations)

    def stop(msg):
        return RewriteSystem(p, rules, False, msg)

    while True:
        while pending:
            a, b = pending.popleft()
            a, b = rs.reduce(a), rs.reduce(b)
            if a == b:
                continue
            lhs, rhs = (a, b) if key(a) > key(b) else (b, a)
            if len(lhs) > max_len:
                return stop(f"equation longer than {max_len}")
            # interreduce: rules whose lhs contains the new lhs are re-queued
            for l2 in list(rules):
                if _contains(l2, lhs):
                    pending.append((l2, rules.pop(l2)))
            rules[lhs] = rhs
            rs._refresh()
            for l2 in list(rules):
                rules[l2] = rs.reduce(rules[l2])
            if len(rules) > max_rules:
                return stop(f"more than {max_rules} rules")
        for _, x, y in list(rs.critical_pairs()):
            x, y = rs.reduce(x), rs.reduce(y)
            if x != y:
                pending.append((x, y))
        if not pending:
            final = RewriteSystem(p, rules, True)
            if not final.is_locally_confluent():
                return stop("local confluence check failed")
            return final


def _contains(word: tuple, sub: tuple) -> bool:
    n = len(sub)
    return any(word[i:i + n] == sub for i in range(len(word) - n + 1))


# ---------------------------------------------------------------------------
# word problem and hom-sets


def _objects_along(p: CatPresentation, w: tuple, src: str) -> list:
    objs = [src]
    for letter in w:
        objs.append(p.generator(letter).tgt)
    return objs


def _neighbours(p: CatPresentation, equations, w: tuple, src: str):
    objs = None
    for u, v, u_src in equations:
        if u:
            n = len(u)
            for i in range(len(w) - n + 1):
                if w[i:i + n] == u:
                    yield w[:i] + v + w[i + n:]
        else:
            if objs is None:
                objs = _objects_along(p, w, src)
            for i, obj in enumerate(objs):
                if obj == u_src:
                    yield w[:i] + v + w[i:]


def words_equal(p: CatPresentation, rs: RewriteSystem, w1: MorphismWord, w2: MorphismWord,
                bfs_budget: int = 20_000) -> Verdict:
    """Decide ``w1 = w2`` in the presented category.

    With a complete system normal forms are compared.  Otherwise a
    bidirectional search over the congruence runs until the budget is spent;
    ``NotEqual`` is only returned when one side's class was exhausted.
    """
    if (w1.src, w1.tgt) != (w2.src, w2.tgt):
        raise PresentationError(f"{w1} and {w2} have different endpoints")
    a, b = rs.reduce(w1.letters), rs.reduce(w2.letters)
    if a == b:
        return Verdict.EQUAL
    if rs.complete:
        return Verdict.NOT_EQUAL
    equations = []
    for r1, r2 in p.relations:
        equations.append((r1.letters, r2.letters, r1.src))
        equations.append((r2.letters, r1.letters, r1.src))
    for lhs, rhs in rs.rules.items():
        src = p.generator(lhs[0]).src
        equations.append((lhs, rhs, src))
        equations.append((rhs, lhs, src))
    seen = [{a}, {b}]
    frontier = [deque([a]), deque([b])]
    steps = 0
    while frontier[0] or frontier[1]:
        for side in (0, 1):
            if not frontier[side]:
                continue
            w = frontier[side].popleft()
            for nxt in _neighbours(p, equations, w, w1.src):
                steps += 1
                if nxt in seen[1 - side]:
                    return Verdict.EQUAL
                if nxt not in seen[side]:
                    seen[side].add(nxt)
                    frontier[side].append(nxt)
                if steps > bfs_budget:
                    return Verdict.UNKNOWN
            if not frontier[side]:
                return Verdict.NOT_EQUAL
    return Verdict.NOT_EQUAL


@dataclass
class HomSet:
    """Irreducible words ``a -> b`` of length at most ``bound``.

    ``exhausted`` means every irreducible word from ``a`` was enumerated (some
    length level came out empty); ``finite`` additionally needs a complete
    system, so that the words are exactly the morphisms.
    """

    src: str
    tgt: str
    words: list
    finite: bool
    exhausted: bool
    bound: int

    def __len__(self):
        return len(self.words)


def irreducible_words_from(p: CatPresentation, rs: RewriteSystem, a: str, bound: int):
    """Irreducible words out of ``a`` by length, up to ``bound``.

    Returns ``(words, exhausted)``.  Irreducible words are prefix closed, so each
    level is obtained by extending the previous one; an empty level at length
    ``<= bound + 1`` proves the list is exhaustive.
    """
    level = [()]
    out = [()]
    for _ in range(bound + 1):
        nxt = []
        for w in level:
            end = p.generator(w[-1]).tgt if w else a
            for g in p.generators:
                if g.src == end:
                    cand = w + (g.name,)
                    if rs.suffix_irreducible(cand):
                        nxt.append(cand)
        if not nxt:
            return out, True
        if len(nxt[0]) > bound:
            return out, False
        out.extend(nxt)
        level = nxt
    return out, False


def hom_set(p: CatPresentation, rs: RewriteSystem, a: str, b: str, length_bound: int = 8) -> HomSet:
    if a not in p.objects or b not in p.objects:
        raise PresentationError(f"unknown object in hom({a}, {b})")
    words, exhausted = irreducible_words_from(p, rs, a, length_bound)
    hits = []
    for w in words:
        end = p.generator(w[-1]).tgt if w else a
        if end == b:
            hits.append(MorphismWord(a, b, w))
    return HomSet(a, b, hits, rs.complete and exhausted, exhausted, length_bound)


def morphism_name(w: MorphismWord) -> str:
    return str(w)


def realize_finite(p: CatPresentation, rs: RewriteSystem, bound: int = 12) -> FiniteCategory:
    """The explicit finite category; composition is concatenate then normalize.

    Morphisms are named ``id_a`` for identities and ``f;g;...`` otherwise.
    """
    morphisms, words = {}, {}
    for a in p.objects:
        for b in p.objects:
            hs = hom_set(p, rs, a, b, bound)
            if not hs.finite:
                raise BudgetExceeded(f"hom({a}, {b}) is not certified finite within length {bound}")
            for w in hs.words:
                morphisms[morphism_name(w)] = (a, b)
                words[morphism_name(w)] = w
    composition = {}
    for f, wf in words.items():
        for g, wg in words.items():
            if wf.tgt == wg.src:
                composition[(f, g)] = morphism_name(rs.normalize(p.compose(wf, wg)))
    identities = {a: morphism_name(p.identity(a)) for a in p.objects}
    C = FiniteCategory(p.objects, morphisms, identities, composition)
    C.words = words
    return C


def functor_on_words(C: FiniteCategory, on_objects: dict, on_generators: dict, w: MorphismWord):
    """Image of a word under a functor given on generators (each a morphism of ``C``)."""
    out = C.identities[on_objects[w.src]]
    for letter in w.letters:
        out = C.then(out, on_generators[letter])
    return out


@dataclass
class RoundTripReport:
    ok: bool
    realized: Optional[FiniteCategory]
    on_objects: dict = field(default_factory=dict)
    on_morphisms: dict = field(default_factory=dict)
    detail: str = ""


def tau_nerve_roundtrip(C: FiniteCategory, bound: int = 12, max_rules: int = 5000) -> RoundTripReport:
    """Realize ``τ₁ Nerv C`` and check the canonical comparison to ``C`` is an isomorphism.

    The comparison sends the vertex named after an object to that object and
    the generator named after a morphism to that morphism.
    """
    N = nerve(C, 2)
    p = fundamental_category(N)
    rs = complete_rewriting(p, max_rules=max_rules)
    try:
        R = realize_finite(p, rs, bound)
    except BudgetExceeded as exc:
        return RoundTripReport(False, None, detail=str(exc))
    obj_by_name = {str(a): a for a in C.objects}
    mor_by_name = {str(f): f for f in C.morphisms}
    on_objects = {name: obj_by_name[name] for name in p.objects}
    on_generators = {g.name: mor_by_name[g.name] for g in p.generators}
    on_morphisms = {name: functor_on_words(C, on_objects, on_generators, w) for name, w in R.words.items()}
    ok = is_isomorphism(R, C, on_objects, on_morphisms)
    return RoundTripReport(ok, R, on_objects, on_morphisms, "" if ok else "canonical comparison is not invertible")


def product_comparison(X: SimplicialSet, Y: SimplicialSet, bound: int = 12, limit: int = 6):
    """The canonical functor ``τ₁(X×Y) -> τ₁X × τ₁Y`` on finite realizations.

    Returns ``(source, target, on_objects, on_morphisms)``.
    """
    from .sset import product_with_projections

    P, px, py = product_with_projections(X, Y, limit)
    tp, tx, ty = fundamental_category(P), fundamental_category(X), fundamental_category(Y)
    RP = realize_finite(tp, complete_rewriting(tp), bound)
    rsx, rsy = complete_rewriting(tx), complete_rewriting(ty)
    RX, RY = realize_finite(tx, rsx, bound), realize_finite(ty, rsy, bound)
    prod = FiniteCategory.product(RX, RY)
    vx, vy, vp = vertex_names(X), vertex_names(Y), vertex_names(P)
    ex, ey, ep = edge_names(X), edge_names(Y), edge_names(P)
    on_objects = {}
    for j in range(P.count(0)):
        v = SimplexRef.nd(0, j)
        on_objects[vp[j]] = (vx[px(v).index], vy[py(v).index])
    on_generators = {}
    for j in range(P.count(1)):
        e = SimplexRef.nd(1, j)
        a, b = px(e), py(e)
        wa = rsx.normalize(tx.word(edge_word(X, a, ex), vx[X.first_vertex(a)]))
        wb = rsy.normalize(ty.word(edge_word(Y, b, ey), vy[Y.first_vertex(b)]))
        on_generators[ep[j]] = (morphism_name(wa), morphism_name(wb))
    on_morphisms = {name: functor_on_words(prod, on_objects, on_generators, w) for name, w in RP.words.items()}
    return RP, prod, on_objects, on_morphisms


# ---------------------------------------------------------------------------
# localization


def inverse_name(p: CatPresentation, s: str) -> str:
    name = f"{s}^-1"
    taken = {g.name for g in p.generators}
    while name in taken:
        name += "'"
    return name


def localize(p: CatPresentation, S: Iterable[str]) -> CatPresentation:
    """Freely invert the generators in ``S``.

    Each ``s: a -> b`` gets a new generator ``s^-1: b -> a`` with relations
    ``(s, s^-1) = id_a`` and ``(s^-1, s) = id_b``.
    """
    S = list(dict.fromkeys(S))
    if not S:
        return p
    gens = list(p.generators)
    rels = list(p.relations)
    for s in S:
        g = p.generator(s)
        inv = inverse_name(CatPresentation(p.objects, gens, ()), s)
        gens.append(Generator(inv, g.tgt, g.src))
        rels.append((MorphismWord(g.src, g.src, (s, inv)), MorphismWord(g.src, g.src, ())))
        rels.append((MorphismWord(g.tgt, g.tgt, (inv, s)), MorphismWord(g.tgt, g.tgt, ())))
    return CatPresentation(p.objects, gens, rels)


def groupoidify(p: CatPresentation) -> CatPresentation:
    """Invert every generator."""
    return localize(p, [g.name for g in p.generators])


def split_monos(p: CatPresentation, rs: RewriteSystem, word_bound: int = 6,
                include_identities: bool = False) -> list[tuple[MorphismWord, MorphismWord]]:
    """Pairs ``(m, r)`` of irreducible words with ``m then r = id``.

    Both words range over irreducible words of length at most ``word_bound``.
    """
    by_src = {a: irreducible_words_from(p, rs, a, word_bound)[0] for a in p.objects}
    out = []
    for a in p.objects:
        for m in by_src[a]:
            b = p.generator(m[-1]).tgt if m else a
            if not m and not include_identities:
                continue
            for r in by_src[b]:
                end = p.generator(r[-1]).tgt if r else b
                if end == a and rs.reduce(m + r) == ():
                    out.append((MorphismWord(a, b, m), MorphismWord(b, a, r)))
    return out


def equivalent_to_terminal(p: CatPresentation, rs: RewriteSystem, bound: int = 8) -> Decision:
    """Whether the presented category is equivalent to the terminal category.

    ``NO`` needs a witness: no objects, an empty hom-set, or two distinct
    normal forms under a complete system.
    """
    if not p.objects:
        return Decision.NO
    undecided = False
    for a in p.objects:
        for b in p.objects:
            hs = hom_set(p, rs, a, b, bound)
            if not hs.words and hs.exhausted:
                return Decision.NO
            if len(hs.words) >= 2 and rs.complete:
                return Decision.NO
            if not (hs.finite and len(hs.words) == 1):
                undecided = True
    return Decision.UNKNOWN if undecided else Decision.YES


@dataclass
class Dpi1Report:
    """Outcome of the split-mono localization surrogate.

    This is the localization of ``τ₁X`` at the generators whose class is a
    split monomorphism: a conjectural description, checked only on examples.
    """

    tau1: CatPresentation
    localized: CatPresentation
    tau1_status: str
    status: str
    split_monos: list
    inverted: list
    terminal: Decision
    morphism_count: Optional[int]
    conjecture_surrogate: bool = True


def dpi1_surrogate(X: SimplicialSet, word_bound: int = 6, hom_bound: int = 12,
                   max_rules: int = 5000, max_len: int = 24):
    """Localize ``τ₁X`` at the generators that are split monomorphisms."""
    tau = fundamental_category(X)
    rs = complete_rewriting(tau, max_rules, max_len)
    pairs = split_monos(tau, rs, word_bound)
    monos = {m.letters for m, _ in pairs}
    inverted = [g.name for g in tau.generators if rs.reduce((g.name,)) in monos]
    loc = localize(tau, inverted)
    rs_loc = complete_rewriting(loc, max_rules, max_len)
    terminal = equivalent_to_terminal(loc, rs_loc, hom_bound)
    try:
        count = len(realize_finite(loc, rs_loc, hom_bound).morphisms)
    except BudgetExceeded:
        count = None
    report = Dpi1Report(tau, loc, rs.status, rs_loc.status, pairs, inverted, terminal, count)
    return loc, report
