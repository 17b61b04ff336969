"""Finite categories given by explicit hom-sets and a composition table."""

from __future__ import annotations

from itertools import permutations, product as cartesian

from .errors import BudgetExceeded, PresentationError


class FiniteCategory:
    """A category with finitely many objects and morphisms.

    ``composition[(f, g)]`` is the composite "f then g", i.e. ``g ∘ f``; it is
    defined exactly when ``tgt(f) == src(g)``.
    """

    def __init__(self, objects, morphisms, identities, composition, check=True):
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.identities = dict(identities)
        self.composition = dict(composition)
        if check:
            self.check()

    def __repr__(self):
        return f"FiniteCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def then(self, f, g):
        """The composite ``g ∘ f``."""
        try:
            return self.composition[(f, g)]
        except KeyError:
            raise PresentationError(f"{f} and {g} are not composable") from None

    def hom(self, a, b) -> list:
        return [f for f, (s, t) in self.morphisms.items() if s == a and t == b]

    def is_identity(self, f) -> bool:
        return self.identities[self.src(f)] == f

    def non_identities(self) -> list:
        return [f for f in self.morphisms if not self.is_identity(f)]

    def is_thin(self) -> bool:
        return all(len(self.hom(a, b)) <= 1 for a in self.objects for b in self.objects)

    def check(self):
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise PresentationError("duplicate objects")
        for f, (s, t) in self.morphisms.items():
            if s not in objs or t not in objs:
                raise PresentationError(f"morphism {f} has unknown endpoints")
        for a in self.objects:
            e = self.identities.get(a)
            if e is None or self.morphisms.get(e) != (a, a):
                raise PresentationError(f"bad identity for {a}")
        for f in self.morphisms:
            for g in self.morphisms:
                composable = self.tgt(f) == self.src(g)
                h = self.composition.get((f, g))
                if composable != (h is not None):
                    raise PresentationError(f"composition table wrong at ({f}, {g})")
                if h is not None and self.morphisms.get(h) != (self.src(f), self.tgt(g)):
                    raise PresentationError(f"{f};{g} = {h} has wrong endpoints")
        for f in self.morphisms:
            if self.then(self.identities[self.src(f)], f) != f or self.then(f, self.identities[self.tgt(f)]) != f:
                raise PresentationError(f"unit law fails at {f}")
        for f in self.morphisms:
            for g in self.hom_from(self.tgt(f)):
                fg = self.then(f, g)
                for h in self.hom_from(self.tgt(g)):
                    if self.then(fg, h) != self.then(f, self.then(g, h)):
                        raise PresentationError(f"associativity fails at ({f}, {g}, {h})")

    def hom_from(self, a) -> list:
        return [f for f, (s, _) in self.morphisms.items() if s == a]

    # constructors

    @classmethod
    def from_preorder(cls, elements, pairs) -> "FiniteCategory":
        """The thin category with an arrow ``a -> b`` iff ``(a, b)`` is in ``pairs``."""
        elements = [str(e) for e in elements]
        pairs = {(str(a), str(b)) for a, b in pairs}

        def name(a, b):
            return f"id_{a}" if a == b else f"{a}<{b}"

        morphisms = {name(a, b): (a, b) for a, b in pairs}
        identities = {a: name(a, a) for a in elements}
        composition = {}
        for a, b in pairs:
            for b2, c in pairs:
                if b == b2:
                    composition[(name(a, b), name(b, c))] = name(a, c)
        return cls(elements, morphisms, identities, composition)

    @classmethod
    def ordinal(cls, n: int) -> "FiniteCategory":
        """The poset ``[n] = {0 < 1 < ... < n}`` as a category."""
        return cls.from_preorder(range(n + 1), [(i, j) for i in range(n + 1) for j in range(i, n + 1)])

    @classmethod
    def discrete(cls, objects) -> "FiniteCategory":
        objects = [str(o) for o in objects]
        return cls.from_preorder(objects, [(o, o) for o in objects])

    @classmethod
    def cyclic_group(cls, n: int, obj: str = "*") -> "FiniteCategory":
        """The group ``Z/n`` as a one-object category; ``g^k`` is named ``g{k}``, unit ``e``."""

        def name(k):
            k %= n
            return "e" if k == 0 else ("g" if k == 1 else f"g{k}")

        morphisms = {name(k): (obj, obj) for k in range(n)}
        composition = {(name(a), name(b)): name(a + b) for a in range(n) for b in range(n)}
        return cls([obj], morphisms, {obj: "e"}, composition)

    @classmethod
    def walking_retraction(cls) -> "FiniteCategory":
        """Objects ``0, 1``; arrows ``i: 0 -> 1``, ``r: 1 -> 0`` with ``r ∘ i = id_0``."""
        morphisms = {"id0": ("0", "0"), "id1": ("1", "1"), "i": ("0", "1"), "r": ("1", "0"), "ir": ("1", "1")}
        # (f, g) -> g ∘ f
        table = {
            ("i", "r"): "id0",
            ("r", "i"): "ir",
            ("i", "ir"): "i",
            ("ir", "r"): "r",
            ("ir", "ir"): "ir",
        }
        for f, (s, t) in morphisms.items():
            table[(f"id{s}", f)] = f
            table[(f, f"id{t}")] = f
        return cls(["0", "1"], morphisms, {"0": "id0", "1": "id1"}, table)

    @classmethod
    def product(cls, C: "FiniteCategory", D: "FiniteCategory") -> "FiniteCategory":
        objects = [(a, b) for a in C.objects for b in D.objects]
        morphisms = {(f, g): ((C.src(f), D.src(g)), (C.tgt(f), D.tgt(g))) for f in C.morphisms for g in D.morphisms}
        identities = {(a, b): (C.identities[a], D.identities[b]) for a, b in objects}
        composition = {}
        for (f1, g1), (f2, g2) in cartesian(morphisms, repeat=2):
            if C.tgt(f1) == C.src(f2) and D.tgt(g1) == D.src(g2):
                composition[((f1, g1), (f2, g2))] = (C.then(f1, f2), D.then(g1, g2))
        return cls(objects, morphisms, identities, composition, check=False)


def check_functor(C: FiniteCategory, D: FiniteCategory, on_objects: dict, on_morphisms: dict) -> bool:
    """True iff the assignment is a functor ``C -> D``."""
    for f, (s, t) in C.morphisms.items():
        g = on_morphisms.get(f)
        if g is None or D.morphisms.get(g) != (on_objects[s], on_objects[t]):
            return False
    for a in C.objects:
        if on_morphisms[C.identities[a]] != D.identities[on_objects[a]]:
            return False
    for (f, g), h in C.composition.items():
        if D.then(on_morphisms[f], on_morphisms[g]) != on_morphisms[h]:
            return False
    return True


def is_isomorphism(C: FiniteCategory, D: FiniteCategory, on_objects: dict, on_morphisms: dict) -> bool:
    if not check_functor(C, D, on_objects, on_morphisms):
        return False
    return (
        len(set(on_objects.values())) == len(C.objects) == len(D.objects)
        and len(set(on_morphisms.values())) == len(C.morphisms) == len(D.morphisms)
    )


def find_isomorphism(C: FiniteCategory, D: FiniteCategory, budget: int = 200_000):
    """Search for an isomorphism of categories ``C -> D``.

    Returns ``(on_objects, on_morphisms)`` or ``None``.  Raises
    :class:`BudgetExceeded` when the backtracking budget runs out.
    """
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None

    def signature(cat, a):
        return (
            sorted(len(cat.hom(a, b)) for b in cat.objects),
            sorted(len(cat.hom(b, a)) for b in cat.objects),
            len(cat.hom(a, a)),
        )

    c_sig = {a: signature(C, a) for a in C.objects}
    d_sig = {b: signature(D, b) for b in D.objects}
    steps = 0
    c_objs = list(C.objects)

    for perm in permutations(D.objects):
        obj = dict(zip(c_objs, perm))
        if any(c_sig[a] != d_sig[obj[a]] for a in c_objs):
            continue
        if any(len(C.hom(a, b)) != len(D.hom(obj[a], obj[b])) for a in c_objs for b in c_objs):
            continue
        order = sorted(C.morphisms, key=lambda f: (C.is_identity(f), f))
        mor = {C.identities[a]: D.identities[obj[a]] for a in c_objs}
        used = set(mor.values())
        todo = [f for f in order if f not in mor]

        def consistent(f):
            for (g, h), k in C.composition.items():
                if f not in (g, h, k):
                    continue
                if g in mor and h in mor and k in mor and D.then(mor[g], mor[h]) != mor[k]:
                    return False
            return True

        def extend(i):
            nonlocal steps
            if i == len(todo):
                return True
            f = todo[i]
            s, t = C.morphisms[f]
            for g in D.hom(obj[s], obj[t]):
                if g in used:
                    continue
                steps += 1
                if steps > budget:
                    raise BudgetExceeded("category isomorphism search")
                mor[f] = g
                used.add(g)
                if consistent(f) and extend(i + 1):
                    return True
                del mor[f]
                used.discard(g)
            return False

        if extend(0) and is_isomorphism(C, D, obj, mor):
            return obj, dict(mor)
    return None
