"""Folding a simply laced diagram along an admissible automorphism.

The flip of the three-node path produces the rank-two matrix [[2,-1],[-2,2]];
the orbit lowering operators acting inside the unfolded crystal generate a
subcrystal isomorphic to the one the folded matrix produces directly.
"""
from kmcrystals import enumerate_crystal, fold, graphs_isomorphic, highest
from kmcrystals.folding import folded_graph

folded = fold(3, [(0, 1), (1, 2)], [2, 1, 0])
print("folding the path 0 - 1 - 2 along the end-swapping automorphism:")
print("  orbits:       ", folded.orbits)
print("  orbit matrix M:", [list(r) for r in folded.m])
print("  orbit sizes D: ", list(folded.d))
print("  C = D^-1 M:    ", [list(r) for r in folded.cartan.matrix])
print("  symmetrizer of C:", list(folded.cartan.d))

unfolded = folded.source
lam = unfolded.weight(lam=(1, 0, 1))  # invariant under the flip
sub = folded_graph(highest(unfolded, lam), folded)
direct = enumerate_crystal(folded.cartan, folded.cartan.weight(lam=(1, 0)))
print()
print("orbit-operator subcrystal of the unfolded B(omega_0 + omega_2):")
print(f"  {sub.node_count()} nodes, {len(sub.edges)} orbit-colored edges")
print(f"direct crystal of the folded matrix at the matching weight:")
print(f"  {direct.node_count()} nodes, {len(direct.edges)} edges")
print("isomorphic as colored weighted rooted graphs:", graphs_isomorphic(sub, direct))

print()
print("another example: the triple-leg star folds to the rank-two matrix")
star_fold = fold(4, [(0, 1), (0, 2), (0, 3)], [0, 2, 3, 1])
print("  C =", [list(r) for r in star_fold.cartan.matrix])
