"""Walk through the tensor product rule on small crystals.

Builds the two-dimensional sl2 crystal, tensors it with itself, and shows how
the case split routes each lowering operator; then draws the full graph of an
eight-element rank-two crystal.
"""
from kmcrystals import TensorElem, enumerate_crystal, highest, validate_cartan

sl2 = validate_cartan([[2]])
omega = sl2.weight(lam=(1,))
b = highest(sl2, omega)
fb = b.f(0)

print("the sl2 crystal B(omega) is a two-element string:")
print("  b      wt", b.wt().lam, b.wt().root)
print("  f b    wt", fb.wt().lam, fb.wt().root)

print()
print("tensor square B(omega) (x) B(omega):")
for left in (b, fb):
    for right in (b, fb):
        pair = TensorElem((left, right))
        lowered = pair.f(0)
        phi, eps = left.phi(0), right.eps(0)
        side = "left " if phi > eps else "right"
        target = "0 (string exhausted)" if lowered is None else ""
        print(
            f"  phi(left) = {phi}, eps(right) = {eps}:"
            f" f_0 acts on the {side} factor {target}"
        )

pair = TensorElem((b, b))
print()
print("statistics of b (x) b:")
print("  eps_0 =", pair.eps(0), " phi_0 =", pair.phi(0), " wt =", pair.wt().lam)
print("the four elements split into a 3-string and a singleton, as the")
print("decomposition B(2) + B(0) predicts:")
chain = pair
while chain is not None:
    print("   ", [x.wt().lam[0] + x.wt().root[0] * 2 for x in chain.factors])
    chain = chain.f(0)

a2 = validate_cartan([[2, -1], [-1, 2]])
graph = enumerate_crystal(a2, a2.weight(lam=(1, 1)))
print()
print(f"rank-two example: B(omega_0 + omega_1) has {graph.node_count()} elements")
print("edges (source --color--> target), nodes numbered in search order:")
for u, i, v in graph.edges:
    print(f"  {u} --{i}--> {v}")
