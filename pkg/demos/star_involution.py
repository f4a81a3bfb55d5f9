"""The star involution on B(infinity), computed two independent ways.

Elements of B(infinity) are finite coordinate sequences along a cyclic node
order.  The starred operators come from replaying lowering words through the
embedding into B(infinity) (x) B_i; an independent oracle computes the same
operator by rotating the cyclic order so that it starts at i, where the starred
lowering operator is simply "add one to the first coordinate".
"""
from kmcrystals import eps_star, from_word, standard_iota, star, validate_cartan
from kmcrystals.binf import star_f, star_f_rotated_oracle
from kmcrystals.crystal import hw_reduce

a2 = validate_cartan([[2, -1], [-1, 2]])
iota = standard_iota(a2)

words = [[], [0], [0, 1], [1, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1, 0]]
print("word -> coordinates, star word, eps*:")
for word in words:
    b = from_word(iota, word)
    sb = star(b)
    print(
        f"  {word!s:<14} coords {dict(b.coords)!s:<22}"
        f" star {hw_reduce(sb)[1]!s:<14} eps* {eps_star(b).lam}"
    )

print()
print("star is a weight-preserving involution; spot check:")
b = from_word(iota, [0, 1, 0, 1])
print("  b  :", dict(b.coords), " wt", b.wt().root)
print("  b* :", dict(star(b).coords), " wt", star(b).wt().root)
print("  b**:", dict(star(star(b)).coords))

print()
print("embedding-based star_f against the rotated-model oracle:")
for word in words:
    b = from_word(iota, word)
    for i in a2.index_set:
        via_embedding = star_f(b, i)
        via_rotation = star_f_rotated_oracle(b, i)
        marker = "ok" if via_embedding == via_rotation else "MISMATCH"
        print(f"  word {word!s:<14} i={i}: {marker}")
