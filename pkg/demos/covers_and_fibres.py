"""Left covers, their fibre representations and reconstruction from fibres."""
from sscat.builtins import double_cover, horn_cover, vertex_inclusion
from sscat.covers import fibre, is_cover, is_left_cover, is_right_cover, reconstruct, universal_left_cover
from sscat.sset import circle, is_isomorphic, standard_simplex

for label, p in [("horn over an edge", horn_cover()), ("double cover of the circle", double_cover()),
                 ("vertex 0 into an edge", vertex_inclusion(1, 0))]:
    left, right, both = is_left_cover(p), is_right_cover(p), is_cover(p)
    print(f"{label}: left={left.ok} right={right.ok} two-sided={both.ok} monodromy bijective={both.monodromy_ok}")
    if not left.ok:
        print("   counterexample:", left.counterexample[:3])
        continue
    F = fibre(p)
    print("   fibre sizes:", {a: len(s) for a, s in F.vertex_sets.items()})
    q = reconstruct(p.target, F)
    print("   reconstruction isomorphic over the base:", is_isomorphic(q.source, p.source, over=(q, p)) is not None)

D3 = standard_simplex(3)
for k in range(4):
    U = universal_left_cover(D3, k)
    print(f"universal left cover of Delta^3 at {k}: {U.map.source.count(0)} vertices, truncated={U.truncated}")

U = universal_left_cover(circle(), 0, hom_bound=4)
print("universal left cover of the circle, bound 4:", [U.map.source.count(n) for n in range(3)], "truncated", U.truncated)
