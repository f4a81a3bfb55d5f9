"""Exact checks on framed quiver representation points.

A point consists of arrow maps x (both orientations of every edge), framing
maps s: W -> V and coframing maps t: V -> W over graded rational vector spaces.
All characteristic quantities are exact ranks:

    moment map        mu_i  = sum_{h: inc(h)=i} sign(h) x_h x_hbar + s_i t_i
    string statistics eps_i = dim V_i - rank tau_i,
                      phi_i = dim(ker tau_i / im gamma_i)       (needs mu = 0)
    with  tau_i = [sign(h) x_h | s_i]  and  gamma_i = [x_hbar ; t_i].

Stability means no nonzero invariant graded subspace inside ker t; costability
means no proper invariant graded subspace containing im s.  The transpose point
(x^T on reversed arrows, with s and t swapped-transposed) exchanges the two.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import ratmat as rm
from .errors import MomentMapError


@dataclass(frozen=True)
class QuiverData:
    """Loop-free multigraph with a chosen orientation; edges are the oriented pairs."""

    num_nodes: int
    edges: tuple  # (tail, head) per edge, as oriented

    def __post_init__(self):
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at node {i}")
            if not (0 <= i < self.num_nodes and 0 <= j < self.num_nodes):
                raise ValueError(f"edge ({i},{j}) out of range")

    def arrows(self):
        """All arrows as (edge index, forward?); forward arrows form the orientation."""
        return [(e, True) for e in range(len(self.edges))] + [
            (e, False) for e in range(len(self.edges))
        ]

    def out_node(self, arrow):
        e, fwd = arrow
        return self.edges[e][0] if fwd else self.edges[e][1]

    def inc_node(self, arrow):
        e, fwd = arrow
        return self.edges[e][1] if fwd else self.edges[e][0]

    def sign(self, arrow):
        return 1 if arrow[1] else -1

    @staticmethod
    def reverse(arrow):
        return (arrow[0], not arrow[1])

    def arrows_into(self, i):
        return [a for a in self.arrows() if self.inc_node(a) == i]


@dataclass(frozen=True)
class QuiverPoint:
    quiver: QuiverData
    v: tuple
    w: tuple
    x: tuple  # Mat per arrow, ordered as quiver.arrows()
    s: tuple  # Mat per node, W_i -> V_i
    t: tuple  # Mat per node, V_i -> W_i

    def x_of(self, arrow):
        return self.x[self._arrow_index(arrow)]

    def _arrow_index(self, arrow):
        e, fwd = arrow
        return e if fwd else len(self.quiver.edges) + e

    def dim_v(self):
        return sum(self.v)


def make_point(quiver, v, w, x=None, s=None, t=None):
    """Build a point, filling unspecified maps with zeros and checking shapes."""
    v, w = tuple(v), tuple(w)
    assert len(v) == len(w) == quiver.num_nodes
    x = dict(x or {})
    xs = []
    for arrow in quiver.arrows():
        m = x.get(arrow)
        tgt, src = v[quiver.inc_node(arrow)], v[quiver.out_node(arrow)]
        if m is None:
            m = rm.zeros(tgt, src)
        assert (m.rows, m.cols) == (tgt, src), f"x{arrow} must be {tgt}x{src}"
        xs.append(m)
    s = list(s) if s is not None else [None] * quiver.num_nodes
    t = list(t) if t is not None else [None] * quiver.num_nodes
    for i in range(quiver.num_nodes):
        if s[i] is None:
            s[i] = rm.zeros(v[i], w[i])
        if t[i] is None:
            t[i] = rm.zeros(w[i], v[i])
        assert (s[i].rows, s[i].cols) == (v[i], w[i])
        assert (t[i].rows, t[i].cols) == (w[i], v[i])
    return QuiverPoint(quiver, v, w, tuple(xs), tuple(s), tuple(t))


def is_nilpotent(p: QuiverPoint):
    """All long enough directed path compositions vanish.

    Iterates the decreasing filtration U <- sum_h x_h(U); the spans of length-k
    path images strictly decrease until they hit zero (nilpotent) or stabilize
    at a nonzero space (not nilpotent).  This tracks individual paths, so sums
    of distinct path compositions cancelling does not fool it.
    """
    q = p.quiver
    u = [rm.eye(d) for d in p.v]
    for _ in range(p.dim_v() + 1):
        nxt = []
        for i in range(q.num_nodes):
            images = [rm.matmul(p.x_of(a), u[q.out_node(a)]) for a in q.arrows_into(i)]
            nxt.append(rm.colspace(rm.hstack(images, p.v[i])) if images else rm.zeros(p.v[i], 0))
        if all(m.cols == 0 for m in nxt):
            return True
        if all(rm.span_eq(a, b) for a, b in zip(u, nxt)):
            return False
        u = nxt
    raise AssertionError("path-image filtration failed to stabilize")


def lusztig_moment(p: QuiverPoint):
    """Graded endomorphism psi(x)_i = sum_{h: inc(h)=i} sign(h) x_h x_hbar."""
    q = p.quiver
    out = []
    for i in range(q.num_nodes):
        acc = rm.zeros(p.v[i], p.v[i])
        for a in q.arrows_into(i):
            term = rm.matmul(p.x_of(a), p.x_of(q.reverse(a)))
            acc = rm.add(acc, rm.scale(term, q.sign(a)))
        out.append(acc)
    return tuple(out)


def eps_i_lusztig(p: QuiverPoint, i):
    """Corank at node i of the unsigned stacked arrow map into i."""
    q = p.quiver
    stacked = rm.hstack([p.x_of(a) for a in q.arrows_into(i)] or [rm.zeros(p.v[i], 0)], p.v[i])
    return p.v[i] - rm.rank(stacked)


def nakajima_moment(p: QuiverPoint):
    psi = lusztig_moment(p)
    return tuple(rm.add(psi[i], rm.matmul(p.s[i], p.t[i])) for i in range(p.quiver.num_nodes))


def moment_is_zero(p: QuiverPoint):
    return all(rm.is_zero(m) for m in nakajima_moment(p))


def tau(p: QuiverPoint, i):
    q = p.quiver
    blocks = [rm.scale(p.x_of(a), q.sign(a)) for a in q.arrows_into(i)] + [p.s[i]]
    return rm.hstack(blocks, p.v[i])


def gamma(p: QuiverPoint, i):
    q = p.quiver
    blocks = [p.x_of(q.reverse(a)) for a in q.arrows_into(i)] + [p.t[i]]
    return rm.vstack(blocks, p.v[i])


def eps_i_point(p: QuiverPoint, i):
    return p.v[i] - rm.rank(tau(p, i))


def phi_i_point(p: QuiverPoint, i):
    """dim(ker tau_i / im gamma_i); only defined on the zero level of the moment map."""
    if not moment_is_zero(p):
        raise MomentMapError("phi requires mu(x,s,t) = 0")
    ti = tau(p, i)
    gi = gamma(p, i)
    # tau_i . gamma_i = mu_i = 0, so im gamma_i sits inside ker tau_i
    return (ti.cols - rm.rank(ti)) - rm.rank(gi)


def _assert_invariant(p, spaces):
    q = p.quiver
    for a in q.arrows():
        img = rm.matmul(p.x_of(a), spaces[q.out_node(a)])
        assert rm.span_contains(spaces[q.inc_node(a)], img)


def is_stable(p: QuiverPoint):
    """No nonzero x-invariant graded subspace inside ker t.

    Shrinks S = ker t by S_i <- S_i intersect all x_h^{-1}(S_inc(h)); the fixed
    point is the largest invariant subspace inside ker t.
    """
    q = p.quiver
    s = [rm.nullspace(p.t[i]) for i in range(q.num_nodes)]
    for _ in range(p.dim_v() + 1):
        nxt = []
        for i in range(q.num_nodes):
            cur = s[i]
            for a in q.arrows():
                if q.out_node(a) != i:
                    continue
                cur = rm.intersect(cur, rm.preimage(p.x_of(a), s[q.inc_node(a)]))
            nxt.append(cur)
        if all(rm.span_eq(a, b) for a, b in zip(s, nxt)):
            _assert_invariant(p, nxt)
            return all(m.cols == 0 for m in nxt)
        s = nxt
    raise AssertionError("stability iteration failed to stabilize")


def is_costable(p: QuiverPoint):
    """The smallest x-invariant graded subspace containing im s is all of V."""
    q = p.quiver
    cur = [rm.colspace(p.s[i]) for i in range(q.num_nodes)]
    for _ in range(p.dim_v() + 1):
        nxt = []
        for i in range(q.num_nodes):
            blocks = [cur[i]] + [
                rm.matmul(p.x_of(a), cur[q.out_node(a)]) for a in q.arrows_into(i)
            ]
            nxt.append(rm.colspace(rm.hstack(blocks, p.v[i])))
        if all(rm.span_eq(a, b) for a, b in zip(cur, nxt)):
            _assert_invariant(p, nxt)
            return all(m.cols == m.rows for m in nxt)
        cur = nxt
    raise AssertionError("costability iteration failed to stabilize")


def dagger(p: QuiverPoint):
    """The transpose point: x_h <- x_hbar^T, s <- t^T, t <- s^T."""
    q = p.quiver
    x = {a: rm.transpose(p.x_of(q.reverse(a))) for a in q.arrows()}
    s = [rm.transpose(p.t[i]) for i in range(q.num_nodes)]
    t = [rm.transpose(p.s[i]) for i in range(q.num_nodes)]
    return make_point(q, p.v, p.w, x, s, t)


def weight_pairing(p: QuiverPoint, cartan, i):
    """<h_i, lam_w + v> where v is minus the sum of v_j alpha_j."""
    return p.w[i] - sum(cartan.a(i, j) * p.v[j] for j in range(p.quiver.num_nodes))


# ---------------------------------------------------------------------------
# JSON round trip; rationals travel as "p/q" strings


def _frac_to_str(x):
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def _frac_from(obj):
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    raise ValueError(f"rational entries must be ints or 'p/q' strings, got {obj!r}")


def _mat_to_json(m):
    return [[_frac_to_str(x) for x in row] for row in m.data]


def _mat_from_json(rows, shape):
    if shape[0] == 0 or shape[1] == 0:
        return rm.zeros(*shape)
    if len(rows) != shape[0]:
        raise ValueError(f"expected {shape[0]} rows, got {len(rows)}")
    return rm.mat([[_frac_from(x) for x in row] for row in rows], shape)


def point_to_json(p: QuiverPoint):
    q = p.quiver
    return {
        "graph": {
            "nodes": list(range(q.num_nodes)),
            "edges": [list(e) for e in q.edges],
        },
        "orientation": [list(e) for e in q.edges],
        "v": list(p.v),
        "w": list(p.w),
        "x": {
            f"{q.out_node(a)}->{q.inc_node(a)}": _mat_to_json(p.x_of(a))
            for a in q.arrows()
            if not rm.is_zero(p.x_of(a))
        },
        "s": {str(i): _mat_to_json(p.s[i]) for i in range(q.num_nodes) if not rm.is_zero(p.s[i])},
        "t": {str(i): _mat_to_json(p.t[i]) for i in range(q.num_nodes) if not rm.is_zero(p.t[i])},
    }


def point_from_json(d):
    graph = d["graph"]
    nodes = graph["nodes"]
    if nodes != list(range(len(nodes))):
        raise ValueError("graph nodes must be 0..n-1")
    edges = [tuple(e) for e in d.get("orientation", graph["edges"])]
    pairs = {frozenset(e) for e in edges}
    if len(pairs) != len(edges):
        raise ValueError("multiple edges between one node pair are not supported in JSON")
    if {frozenset(e) for e in map(tuple, graph["edges"])} != pairs:
        raise ValueError("orientation must orient exactly the graph edges")
    q = QuiverData(len(nodes), tuple(edges))
    v, w = tuple(d["v"]), tuple(d["w"])
    arrow_by_key = {}
    for a in q.arrows():
        arrow_by_key[f"{q.out_node(a)}->{q.inc_node(a)}"] = a
    x = {}
    for key, rows in d.get("x", {}).items():
        if key not in arrow_by_key:
            raise ValueError(f"unknown arrow {key!r}")
        a = arrow_by_key[key]
        x[a] = _mat_from_json(rows, (v[q.inc_node(a)], v[q.out_node(a)]))
    s = [None] * q.num_nodes
    t = [None] * q.num_nodes
    for key, rows in d.get("s", {}).items():
        i = int(key)
        s[i] = _mat_from_json(rows, (v[i], w[i]))
    for key, rows in d.get("t", {}).items():
        i = int(key)
        t[i] = _mat_from_json(rows, (w[i], v[i]))
    return make_point(q, v, w, x, s, t)
