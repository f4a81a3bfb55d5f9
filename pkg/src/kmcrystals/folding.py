"""Orbit operators on crystals of a symmetric Cartan matrix.

For an admissible diagram automorphism, nodes in one orbit are never adjacent,
so their operators commute and the orbit products f_I = prod_{i in I} f_i and
e_I = prod e_i are well defined.  The subcrystal generated from a fixed highest
weight element by the orbit lowering operators is a crystal for the folded
Cartan matrix; its graph is produced here with orbit colors and weights mapped
to the folded lattice, directly comparable with the graph built from the folded
matrix itself.
"""
from __future__ import annotations

from .cartan import FoldedCartan, Weight
from .crystal import bfs_graph


def orbit_f(elem, orbit):
    cur = elem
    for i in orbit:
        cur = cur.f(i)
        if cur is None:
            return None
    return cur


def orbit_e(elem, orbit):
    cur = elem
    for i in orbit:
        cur = cur.e(i)
        if cur is None:
            return None
    return cur


def orbit_eps(elem, orbit):
    k = 0
    cur = orbit_e(elem, orbit)
    while cur is not None:
        k += 1
        cur = orbit_e(cur, orbit)
    return k


def fold_weight(folded: FoldedCartan, w: Weight) -> Weight:
    """Map an automorphism-invariant weight to folded coordinates (value per orbit)."""
    lam, root = [], []
    for orb in folded.orbits:
        lvals = {w.lam[i] for i in orb}
        rvals = {w.root[i] for i in orb}
        if len(lvals) != 1 or len(rvals) != 1:
            raise ValueError("weight is not invariant under the automorphism")
        lam.append(lvals.pop())
        root.append(rvals.pop())
    return Weight(tuple(lam), tuple(root))


def folded_graph(root_elem, folded: FoldedCartan, depth=None, node_cap=None):
    """Orbit-colored closure of a highest weight element of the unfolded crystal.

    Node weights are written in folded coordinates, so the result compares
    against a graph generated directly from folded.cartan via graphs_isomorphic.
    """
    colors = range(folded.rank)
    return bfs_graph(
        root_elem,
        colors,
        lambda x, k: orbit_f(x, folded.orbits[k]),
        lambda x: fold_weight(folded, x.wt()),
        depth=depth,
        node_cap=node_cap,
    )
