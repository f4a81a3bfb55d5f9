"""Exact rational checks on framed quiver representation points.

A point is arrow maps x (both directions of each edge) with framing maps s and
coframing maps t.  Everything below is computed over the rationals: the moment
map, nilpotency, the stability conditions, the string statistics, and the
transpose point that exchanges stable with costable.
"""
from fractions import Fraction

from kmcrystals import (
    QuiverData,
    dagger,
    eps_i_point,
    is_costable,
    is_nilpotent,
    is_stable,
    make_point,
    nakajima_moment,
    phi_i_point,
    point_to_json,
)
from kmcrystals.quiver import moment_is_zero
from kmcrystals.ratmat import mat

a2 = QuiverData(2, ((0, 1),))
fwd = (0, True)

point = make_point(
    a2,
    v=(1, 1),
    w=(2, 1),
    x={fwd: mat([[Fraction(2, 3)]])},
    s=[mat([[0, 1]]), mat([[0]])],
    t=[mat([[1], [0]]), mat([[1]])],
)

print("a framed point on the oriented path 0 -> 1 with dims v=(1,1), w=(2,1):")
print("  moment map zero:", moment_is_zero(point))
print("  nilpotent:      ", is_nilpotent(point))
print("  stable:         ", is_stable(point))
print("  costable:       ", is_costable(point))
print("  eps:            ", [eps_i_point(point, i) for i in range(2)])
print("  phi:            ", [phi_i_point(point, i) for i in range(2)])
print("costable indeed matches eps vanishing at every node.")

dp = dagger(point)
print()
print("the transpose point swaps the two stability conditions:")
print("  stable(p)  =", is_stable(point), " costable(p^T) =", is_costable(dp))
print("  costable(p)=", is_costable(point), " stable(p^T)   =", is_stable(dp))
print("and its moment map blocks are the transposes:")
print("  mu(p)   blocks:", [m.tolists() for m in nakajima_moment(point)])
print("  mu(p^T) blocks:", [m.tolists() for m in nakajima_moment(dp)])

print()
print("a point that is NOT nilpotent despite its total endomorphism being")
print("nilpotent as a matrix (two parallel edges with cancelling path sums):")
double = QuiverData(2, ((0, 1), (0, 1)))
tricky = make_point(
    double,
    (1, 1),
    (0, 0),
    x={
        (0, True): mat([[1]]),
        (1, True): mat([[1]]),
        (0, False): mat([[1]]),
        (1, False): mat([[-1]]),
    },
)
print("  is_nilpotent:", is_nilpotent(tricky))

print()
print("points serialize to JSON with rationals as p/q strings:")
import json

print(json.dumps(point_to_json(point), indent=2, sort_keys=True))
