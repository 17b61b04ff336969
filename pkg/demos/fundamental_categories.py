"""Fundamental categories of a few small simplicial sets, computed by completion."""
from sscat.fpcat import complete_rewriting, fundamental_category, hom_set, morphism_name, realize_finite
from sscat.sset import circle, standard_simplex, walking_retraction


def show(label, X):
    p = fundamental_category(X)
    rs = complete_rewriting(p)
    print(f"{label}: {len(p.objects)} objects, {len(p.generators)} generators, "
          f"{len(p.relations)} relations, rewriting {'complete' if rs.complete else 'incomplete'}")
    return p, rs


for n in range(4):
    p, rs = show(f"Delta^{n}", standard_simplex(n, max(n, 2)))
    print("   morphisms:", len(realize_finite(p, rs).morphisms))

p, rs = show("circle", circle())
for bound in range(5):
    h = hom_set(p, rs, "0", "0", length_bound=bound)
    print(f"   words of length <= {bound}:", [morphism_name(w) for w in h.words])

p, rs = show("R", walking_retraction())
C = realize_finite(p, rs)
print("   morphisms:", sorted(C.morphisms))
