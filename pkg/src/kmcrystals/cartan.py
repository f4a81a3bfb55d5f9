"""Cartan data for symmetrizable Kac-Moody algebras.

A generalized Cartan matrix (GCM) is validated together with a minimal positive
integral symmetrizer.  Weights are kept split into a fundamental-weight part and
a simple-root part, so weights of highest-weight crystals (fundamental lattice)
and of the big crystal below the identity (root lattice) mix without any change
of basis.  The module also implements the orbit construction that produces a
symmetrizable Cartan matrix C = D^-1 M from a graph with an admissible
automorphism.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import CartanError, FoldingError


@dataclass(frozen=True)
class Weight:
    """Integral weight: lam[i] coefficients of fundamental weights, root[j] of simple roots."""

    lam: tuple
    root: tuple

    def __add__(self, other):
        return Weight(
            tuple(a + b for a, b in zip(self.lam, other.lam)),
            tuple(a + b for a, b in zip(self.root, other.root)),
        )

    def __sub__(self, other):
        return Weight(
            tuple(a - b for a, b in zip(self.lam, other.lam)),
            tuple(a - b for a, b in zip(self.root, other.root)),
        )

    def __neg__(self):
        return Weight(tuple(-a for a in self.lam), tuple(-a for a in self.root))

    def is_zero(self):
        return all(a == 0 for a in self.lam) and all(a == 0 for a in self.root)

    def height(self):
        """Negative of the total root coordinate; counts lowering steps below a highest weight."""
        return -sum(self.root)


@dataclass(frozen=True)
class CartanData:
    """Validated GCM with minimal positive symmetrizer.  Nodes are 0..rank-1."""

    matrix: tuple
    d: tuple

    @property
    def rank(self):
        return len(self.matrix)

    @property
    def index_set(self):
        return range(len(self.matrix))

    def a(self, i, j):
        return self.matrix[i][j]

    def weight(self, lam=None, root=None):
        n = self.rank
        lam = tuple(lam) if lam is not None else (0,) * n
        root = tuple(root) if root is not None else (0,) * n
        if len(lam) != n or len(root) != n:
            raise ValueError("weight coordinates must match the rank")
        return Weight(lam, root)

    def zero(self):
        return self.weight()

    def omega(self, i):
        return self.weight(lam=tuple(1 if j == i else 0 for j in self.index_set))

    def alpha(self, j):
        return self.weight(root=tuple(1 if k == j else 0 for k in self.index_set))

    def pair(self, i, w: Weight):
        """<h_i, w> = lam_i + sum_j a_ij root_j."""
        if not 0 <= i < self.rank:
            raise ValueError(f"unknown node {i!r}")
        return w.lam[i] + sum(self.matrix[i][j] * w.root[j] for j in self.index_set)

    def dominant(self, w: Weight):
        return all(c == 0 for c in w.root) and all(c >= 0 for c in w.lam)

    def pairing_dominant(self, w: Weight):
        """All <h_i, w> >= 0.  Weights of highest weight elements inside tensor
        products carry a root part in split coordinates, so this is the right
        notion for building their model crystals."""
        return all(self.pair(i, w) >= 0 for i in self.index_set)

    def geq(self, v: Weight, w: Weight):
        """Dominance order on the fundamental lattice: v >= w iff v - w has nonnegative
        fundamental coordinates and no root part."""
        diff = v - w
        if any(c != 0 for c in diff.root):
            raise ValueError("dominance comparison requires equal root parts")
        return all(c >= 0 for c in diff.lam)

    def describe(self):
        return {"cartan": [list(row) for row in self.matrix], "symmetrizer": list(self.d)}


def _minimal_symmetrizer(a):
    """Positive integral d with d_i a_ij = d_j a_ji, gcd 1 per connected component."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or a[i][j] == 0:
                    continue
                forced = d[i] * Fraction(a[i][j], a[j][i])
                if d[j] is None:
                    d[j] = forced
                    comp.append(j)
                    stack.append(j)
                elif d[j] != forced:
                    raise CartanError("no positive symmetrizer exists")
        m = lcm(*[d[i].denominator for i in comp])
        scaled = [int(d[i] * m) for i in comp]
        g = gcd(*scaled)
        for i, v in zip(comp, scaled):
            d[i] = v // g
    return tuple(d)


def validate_cartan(matrix) -> CartanData:
    """Check the GCM axioms and attach the minimal symmetrizer."""
    rows = tuple(tuple(int(x) for x in row) for row in matrix)
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise CartanError("matrix must be square")
    for i in range(n):
        if rows[i][i] != 2:
            raise CartanError(f"diagonal entry a_{i}{i} = {rows[i][i]} != 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise CartanError(f"off-diagonal entry a_{i}{j} = {rows[i][j]} > 0")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise CartanError(f"a_{i}{j} = 0 but a_{j}{i} != 0")
    data = CartanData(rows, _minimal_symmetrizer(rows))
    # d_i a_ij must be symmetric entrywise
    for i in range(n):
        for j in range(n):
            assert data.d[i] * rows[i][j] == data.d[j] * rows[j][i]
    return data


@lru_cache(maxsize=None)
def is_finite_type(cartan: CartanData) -> bool:
    """Finite type iff the symmetrized matrix DA is positive definite."""
    n = cartan.rank
    sym = [[Fraction(cartan.d[i] * cartan.matrix[i][j]) for j in range(n)] for i in range(n)]
    # leading principal minors via fraction-free forward elimination
    for k in range(n):
        minor = [row[: k + 1] for row in sym[: k + 1]]
        det = _det(minor)
        if det <= 0:
            return False
    return True


def _det(m):
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def graph_cartan(num_nodes, edges) -> CartanData:
    """Symmetric GCM of a loop-free multigraph: a_ij = -(number of edges {i,j})."""
    a = [[2 if i == j else 0 for j in range(num_nodes)] for i in range(num_nodes)]
    for i, j in edges:
        if i == j:
            raise CartanError(f"loop at node {i}")
        a[i][j] -= 1
        a[j][i] -= 1
    return validate_cartan(a)


@dataclass(frozen=True)
class FoldedCartan:
    """Result of folding a loop-free graph along an admissible automorphism.

    orbits partition the source nodes; m is the symmetric orbit matrix with
    m_II = 2 |I| and m_IJ = -(edges between orbits I and J); d_I = |I| and
    cartan holds C = D^-1 M.  The source graph's own symmetric GCM is kept for
    cross-checking against the orbit construction.
    """

    orbits: tuple
    m: tuple
    d: tuple
    cartan: CartanData
    source: CartanData
    orbit_of: tuple

    @property
    def rank(self):
        return len(self.orbits)


def fold(num_nodes, edges, autom) -> FoldedCartan:
    """Fold a graph along a diagram automorphism.

    autom is the permutation as a sequence: node i maps to autom[i].  Orbits are
    ordered by their smallest node.  Raises FoldingError if autom does not
    preserve the edge multiset or if an edge joins two nodes of one orbit.
    """
    perm = tuple(autom)
    if sorted(perm) != list(range(num_nodes)):
        raise FoldingError("automorphism must be a permutation of the nodes")
    edges = [tuple(sorted(e)) for e in edges]
    multiset = {}
    for e in edges:
        multiset[e] = multiset.get(e, 0) + 1
    mapped = {}
    for (i, j), k in multiset.items():
        key = tuple(sorted((perm[i], perm[j])))
        mapped[key] = mapped.get(key, 0) + k
    if mapped != multiset:
        raise FoldingError("permutation is not a graph automorphism")

    seen = [False] * num_nodes
    orbits = []
    for i in range(num_nodes):
        if seen[i]:
            continue
        orb = []
        j = i
        while not seen[j]:
            seen[j] = True
            orb.append(j)
            j = perm[j]
        orbits.append(tuple(sorted(orb)))
    orbits.sort(key=lambda o: o[0])
    orbit_of = [None] * num_nodes
    for k, orb in enumerate(orbits):
        for i in orb:
            orbit_of[i] = k

    for (i, j), k in multiset.items():
        if orbit_of[i] == orbit_of[j]:
            raise FoldingError(f"not admissible: edge {{{i},{j}}} joins one orbit")

    r = len(orbits)
    m = [[0] * r for _ in range(r)]
    for k, orb in enumerate(orbits):
        m[k][k] = 2 * len(orb)
    for (i, j), mult in multiset.items():
        oi, oj = orbit_of[i], orbit_of[j]
        m[oi][oj] -= mult
        m[oj][oi] -= mult
    d = tuple(len(orb) for orb in orbits)
    c = [[0] * r for _ in range(r)]
    for a in range(r):
        for b in range(r):
            q, rem = divmod(m[a][b], d[a])
            assert rem == 0, "orbit matrix not divisible by orbit sizes"
            c[a][b] = q
    folded = FoldedCartan(
        orbits=tuple(orbits),
        m=tuple(tuple(row) for row in m),
        d=d,
        cartan=validate_cartan(c),
        source=graph_cartan(num_nodes, edges),
        orbit_of=tuple(orbit_of),
    )
    return folded


def folded_entry_from_source(folded: FoldedCartan, a, b):
    """c_ab recomputed from the unfolded data: pair the averaged coroot over orbit a
    with the summed simple roots over orbit b."""
    src = folded.source
    total = Fraction(0)
    for i in folded.orbits[a]:
        for j in folded.orbits[b]:
            total += src.a(i, j)
    return total / folded.d[a]
