"""Weakly monotonic maps between finite ordinals ``[m] -> [n]``.

These are the morphisms of the simplex category.  Faces ``∂ⁿᵢ`` and
degeneracies ``σⁿᵢ`` are the injective and surjective generators; every map
factors uniquely as a surjection followed by an injection.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement


@dataclass(frozen=True)
class OrdinalMap:
    """A weakly monotonic map ``[source_dim] -> [target_dim]``.

    ``values[i]`` is the image of ``i``.
    """

    values: tuple[int, ...]
    target_dim: int

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("an ordinal map needs at least one value")
        if any(b < a for a, b in zip(vals, vals[1:])):
            raise ValueError(f"values {vals} are not weakly monotonic")
        if vals[0] < 0 or vals[-1] > self.target_dim:
            raise ValueError(f"values {vals} do not land in [{self.target_dim}]")

    @property
    def source_dim(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __repr__(self):
        return f"OrdinalMap({list(self.values)} -> [{self.target_dim}])"

    # constructors

    @classmethod
    def identity(cls, n: int) -> "OrdinalMap":
        return cls(tuple(range(n + 1)), n)

    @classmethod
    def face(cls, n: int, i: int) -> "OrdinalMap":
        """``∂ⁿᵢ : [n-1] -> [n]``, the injection skipping ``i``."""
        if n < 1 or not 0 <= i <= n:
            raise ValueError(f"no face map ∂^{n}_{i}")
        return cls(tuple(j for j in range(n + 1) if j != i), n)

    @classmethod
    def degeneracy(cls, n: int, i: int) -> "OrdinalMap":
        """``σⁿᵢ : [n+1] -> [n]``, the surjection hitting ``i`` twice."""
        if n < 0 or not 0 <= i <= n:
            raise ValueError(f"no degeneracy map σ^{n}_{i}")
        return cls(tuple(j if j <= i else j - 1 for j in range(n + 2)), n)

    @classmethod
    def vertex(cls, n: int, j: int) -> "OrdinalMap":
        """The map ``[0] -> [n]`` picking ``j``."""
        return cls((j,), n)

    @classmethod
    def edge(cls, n: int, i: int, j: int) -> "OrdinalMap":
        return cls((i, j), n)

    # structure

    def compose(self, other: "OrdinalMap") -> "OrdinalMap":
        """``self ∘ other`` (apply ``other`` first)."""
        if other.target_dim != self.source_dim:
            raise ValueError(f"cannot compose {self} after {other}")
        return OrdinalMap(tuple(self.values[v] for v in other.values), self.target_dim)

    def is_identity(self) -> bool:
        return self.target_dim == self.source_dim and self.is_injective()

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target_dim + 1))

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def factor(self) -> tuple["OrdinalMap", "OrdinalMap"]:
        """Epi-mono factorisation: returns ``(surj, inj)`` with ``self == inj ∘ surj``."""
        img = self.image()
        position = {v: k for k, v in enumerate(img)}
        surj = OrdinalMap(tuple(position[v] for v in self.values), len(img) - 1)
        inj = OrdinalMap(img, self.target_dim)
        return surj, inj

    def opposite(self) -> "OrdinalMap":
        """Conjugate by order reversal of source and target."""
        m, n = self.source_dim, self.target_dim
        return OrdinalMap(tuple(n - self.values[m - t] for t in range(m + 1)), n)

    def missing(self) -> tuple[int, ...]:
        hit = set(self.values)
        return tuple(j for j in range(self.target_dim + 1) if j not in hit)


def all_maps(m: int, n: int) -> list[OrdinalMap]:
    """Every weakly monotonic map ``[m] -> [n]``, in lexicographic order."""
    return [OrdinalMap(vals, n) for vals in combinations_with_replacement(range(n + 1), m + 1)]


def surjections(m: int, n: int) -> list[OrdinalMap]:
    """Every surjection ``[m] -> [n]``.

    A surjection is fixed by the ``n`` positions ``i`` where ``values[i+1] > values[i]``.
    """
    out = []
    for steps in combinations(range(1, m + 1), n):
        vals, v = [], 0
        stepset = set(steps)
        for i in range(m + 1):
            if i in stepset:
                v += 1
            vals.append(v)
        out.append(OrdinalMap(tuple(vals), n))
    return out


def injections(m: int, n: int) -> list[OrdinalMap]:
    return [OrdinalMap(vals, n) for vals in combinations(range(n + 1), m + 1)]
