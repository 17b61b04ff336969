"""Finite spaces as preorders: closure, opens, condensation and exit paths."""
from sscat.builtins import grid
from sscat.fpcat import complete_rewriting, realize_finite
from sscat.preorder import Relation, alexandroff_opens, closure, condense, exit_path_of_poset, specialisation

R = Relation("abcd", [("a", "b"), ("b", "a"), ("b", "c")])
P = closure(R)
print("closure adds:", sorted(P.pairs - R.pairs))

T = alexandroff_opens(P)
print("open sets:", sorted(sorted(u) for u in T.opens))
print("specialisation recovers the preorder:", specialisation(T) == P, "| T0:", T.is_T0())

Q, q = condense(P)
print("condensation classes:", sorted(sorted(c) for c in Q.domain))

G = grid()
p = exit_path_of_poset(G)
C = realize_finite(p, complete_rewriting(p))
print(f"exit paths of the 2x2 grid: {len(C.objects)} objects, {len(C.morphisms)} morphisms, {len(G.pairs)} order pairs")
