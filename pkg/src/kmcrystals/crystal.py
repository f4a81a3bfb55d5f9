"""Core crystal operations shared by every element kind.

Elements implement wt() -> Weight, eps(i), phi(i), e(i), f(i) (partial operators
return None where undefined) and carry their CartanData as .cartan.  Statistics
of ordered products are computed by a left fold of the two-factor tensor rule:

    e_i acts on the left factor iff phi_i(b1) >= eps_i(b2), else on the right;
    f_i acts on the left factor iff phi_i(b1) >  eps_i(b2), else on the right;
    wt adds; eps_i = max(eps_i(b1), eps_i(b2) - <h_i, wt(b1)>);
    phi_i = max(phi_i(b2), phi_i(b1) + <h_i, wt(b2)>).

Factors may report eps/phi = -inf at foreign colors (elementary strings do);
the fold treats -inf as absorbing under + and minimal under max, which the
float value provides natively.  -inf never appears in the statistics of the
supported top-level crystals.
"""
from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field

from .errors import NodeCapError, TransportError

NEG_INF = float("-inf")

DEFAULT_NODE_CAP = 1_000_000
NODE_CAP_ENV = "KMCRYSTALS_NODE_CAP"


def fold_stats(factors, i):
    """Left fold of the two-factor rule over an ordered factor list.

    Returns (wt, eps, phi, act_e, act_f) where act_e/act_f index the factor on
    which the raising/lowering operator acts.
    """
    cartan = factors[0].cartan
    wt = factors[0].wt()
    eps = factors[0].eps(i)
    phi = factors[0].phi(i)
    act_e = act_f = 0
    for k in range(1, len(factors)):
        b = factors[k]
        b_eps = b.eps(i)
        b_wt = b.wt()
        if phi < b_eps:
            act_e = k
        if phi <= b_eps:
            act_f = k
        eps = max(eps, b_eps - cartan.pair(i, wt))
        phi = max(b.phi(i), phi + cartan.pair(i, b_wt))
        wt = wt + b_wt
    return wt, eps, phi, act_e, act_f


@dataclass(frozen=True)
class TensorElem:
    """Ordered product of crystal elements; factors may themselves be tensors."""

    factors: tuple

    def __post_init__(self):
        assert len(self.factors) >= 2
        assert all(f.cartan == self.factors[0].cartan for f in self.factors)

    @property
    def cartan(self):
        return self.factors[0].cartan

    def wt(self):
        total = self.factors[0].wt()
        for f in self.factors[1:]:
            total = total + f.wt()
        return total

    def eps(self, i):
        return fold_stats(self.factors, i)[1]

    def phi(self, i):
        return fold_stats(self.factors, i)[2]

    def _apply(self, i, which):
        _, _, _, act_e, act_f = fold_stats(self.factors, i)
        k = act_e if which == "e" else act_f
        moved = self.factors[k].e(i) if which == "e" else self.factors[k].f(i)
        if moved is None:
            return None
        parts = list(self.factors)
        parts[k] = moved
        return TensorElem(tuple(parts))

    def e(self, i):
        return self._apply(i, "e")

    def f(self, i):
        return self._apply(i, "f")


def tensor_ops(elem, i):
    """All statistics of an element at one node: (wt, eps, phi, e result, f result)."""
    return elem.wt(), elem.eps(i), elem.phi(i), elem.e(i), elem.f(i)


def leaves(elem):
    """Flatten nested tensor structure into the ordered list of leaf factors."""
    if isinstance(elem, TensorElem):
        out = []
        for f in elem.factors:
            out.extend(leaves(f))
        return out
    return [elem]


def from_leaves(factors):
    factors = list(factors)
    if not factors:
        return None
    if len(factors) == 1:
        return factors[0]
    return TensorElem(tuple(factors))


def is_highest(elem):
    return all(elem.eps(i) == 0 for i in elem.cartan.index_set)


def hw_reduce(elem):
    """Raise to the highest weight element of the component.

    Always raises at the smallest applicable node.  Returns (hw, word) with the
    word in replay order: elem = f_{word[-1]} ... f_{word[0]} hw.
    """
    raised = []
    cur = elem
    while True:
        i = next((i for i in cur.cartan.index_set if cur.eps(i) > 0), None)
        if i is None:
            return cur, list(reversed(raised))
        nxt = cur.e(i)
        assert nxt is not None, "eps > 0 but raising operator vanished"
        raised.append(i)
        cur = nxt


def replay(start, word):
    cur = start
    for step, i in enumerate(word):
        cur = cur.f(i)
        if cur is None:
            raise TransportError(f"lowering word vanished at step {step} (node {i})")
    return cur


def transport(elem, source_hw, target_hw):
    """Carry elem along the unique component isomorphism source_hw -> target_hw.

    Raises TransportError when the replay vanishes, i.e. the components are not
    isomorphic.
    """
    hw, word = hw_reduce(elem)
    if hw != source_hw:
        raise ValueError("element does not lie in the component of source_hw")
    if source_hw == target_hw:
        return elem
    return replay(target_hw, word)


@dataclass
class CrystalGraph:
    """BFS closure of a highest weight element under the lowering operators."""

    nodes: list
    weights: list
    words: list
    edges: list  # (source index, color, target index)
    num_colors: int
    depth: object = None
    complete: bool = True
    index: dict = field(default_factory=dict)

    @property
    def root(self):
        return 0

    def node_count(self):
        return len(self.nodes)

    def out_edge_map(self):
        out = {}
        for u, i, v in self.edges:
            assert (u, i) not in out, "duplicate colored edge"
            out[(u, i)] = v
        return out

    def to_json_dict(self):
        return {
            "root": 0,
            "depth": self.depth,
            "complete": self.complete,
            "num_colors": self.num_colors,
            "nodes": [
                {
                    "id": k,
                    "word": list(self.words[k]),
                    "weight": {"lam": list(w.lam), "root": list(w.root)},
                }
                for k, w in enumerate(self.weights)
            ],
            "edges": [
                {"source": u, "color": i, "target": v} for u, i, v in self.edges
            ],
        }

    def to_dot(self):
        lines = ["digraph crystal {", "  rankdir=TB;"]
        for k, w in enumerate(self.weights):
            word = ",".join(str(i) for i in self.words[k])
            lam = ",".join(str(c) for c in w.lam)
            root = ",".join(str(c) for c in w.root)
            lines.append(f'  n{k} [label="word=[{word}] lam=({lam}) root=({root})"];')
        for u, i, v in self.edges:
            lines.append(f'  n{u} -> n{v} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


_DOT_NODE = re.compile(r'^\s*n(\d+) \[label="([^"]*)"\];$')
_DOT_EDGE = re.compile(r'^\s*n(\d+) -> n(\d+) \[label="(\d+)"\];$')


def parse_dot(text):
    """Recover the node id set and colored edge set from a graph in our DOT dialect."""
    nodes, edges = set(), set()
    for line in text.splitlines():
        m = _DOT_EDGE.match(line)
        if m:
            edges.add((int(m.group(1)), int(m.group(3)), int(m.group(2))))
            continue
        m = _DOT_NODE.match(line)
        if m:
            nodes.add(int(m.group(1)))
    return nodes, edges


def node_cap_limit(node_cap=None):
    if node_cap is not None:
        return node_cap
    env = os.environ.get(NODE_CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_NODE_CAP


def bfs_graph(root, colors, lower, weight_of, depth=None, node_cap=None):
    """Generic colored BFS used for both plain and orbit-folded crystal graphs."""
    cap = node_cap_limit(node_cap)
    nodes = [root]
    weights = [weight_of(root)]
    words = [()]
    index = {root: 0}
    edges = []
    complete = True
    queue = deque([0])
    levels = {0: 0}
    while queue:
        u = queue.popleft()
        for i in colors:
            v = lower(nodes[u], i)
            if v is None:
                continue
            if depth is not None and levels[u] + 1 > depth:
                complete = False
                continue
            if v not in index:
                if len(nodes) >= cap:
                    raise NodeCapError(f"node cap {cap} exceeded")
                index[v] = len(nodes)
                levels[index[v]] = levels[u] + 1
                nodes.append(v)
                weights.append(weight_of(v))
                words.append(words[u] + (i,))
                queue.append(index[v])
            edges.append((u, i, index[v]))
    return CrystalGraph(
        nodes=nodes,
        weights=weights,
        words=words,
        edges=edges,
        num_colors=len(list(colors)),
        depth=depth,
        complete=complete,
        index=index,
    )


def generate_graph(hw, depth=None, node_cap=None):
    """f-closure of a highest weight element, truncated at the given height."""
    assert is_highest(hw), "root must be a highest weight element"
    colors = list(hw.cartan.index_set)
    return bfs_graph(
        hw, colors, lambda x, i: x.f(i), lambda x: x.wt(), depth=depth, node_cap=node_cap
    )


def graphs_isomorphic(g1, g2):
    """Color- and weight-preserving rooted digraph isomorphism.

    Edge colors force the matching, so a simultaneous BFS from the roots either
    produces the unique candidate bijection or fails.
    """
    if g1.node_count() != g2.node_count() or len(g1.edges) != len(g2.edges):
        return False
    if g1.num_colors != g2.num_colors:
        return False
    if g1.weights[0] != g2.weights[0]:
        return False
    out1, out2 = g1.out_edge_map(), g2.out_edge_map()
    mapping = {0: 0}
    used = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        v = mapping[u]
        for i in range(g1.num_colors):
            t1 = out1.get((u, i))
            t2 = out2.get((v, i))
            if (t1 is None) != (t2 is None):
                return False
            if t1 is None:
                continue
            if t1 in mapping:
                if mapping[t1] != t2:
                    return False
                continue
            if t2 in used:
                return False
            if g1.weights[t1] != g2.weights[t2]:
                return False
            mapping[t1] = t2
            used.add(t2)
            queue.append(t1)
    return len(mapping) == g1.node_count()
