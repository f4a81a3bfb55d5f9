"""The crystal B(infinity) in the semi-infinite string model.

An element is a finite-support sequence of nonnegative coordinates along a
cyclic node sequence iota (one period lists every node once); position 1 is the
rightmost tensor slot.  Crystal operators are evaluated by the tensor-rule fold
over a finite prefix: the support rounded up to whole periods plus one extra
period, which is long enough that every statistic stabilizes (extending the
prefix by further zero periods is a no-op, a tested invariant).

The star structure is computed through the strict embedding of B(infinity)
into B(infinity) (x) B_i that sends the top element to (top, level 0): the
i-level of the right leg realizes eps*_i, moving that level realizes the
starred operators, and the involution itself replays a lowering word through
the starred operators.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanData
from .crystal import NEG_INF, TensorElem, hw_reduce, replay
from .errors import ModelError, TransportError


@dataclass(frozen=True)
class IotaSequence:
    """One period of the cyclic node sequence; position k has color period[(k-1) % rank]."""

    cartan: CartanData
    period: tuple

    def __post_init__(self):
        assert sorted(self.period) == list(self.cartan.index_set), "period must list every node once"

    @property
    def rank(self):
        return len(self.period)

    def color(self, pos):
        return self.period[(pos - 1) % self.rank]


def standard_iota(cartan):
    return IotaSequence(cartan, tuple(cartan.index_set))


def rotated_iota(iota, i):
    """The period rotated to start at node i (cyclic order preserved)."""
    k = iota.period.index(i)
    return IotaSequence(iota.cartan, iota.period[k:] + iota.period[:k])


@dataclass(frozen=True)
class ElementaryFactor:
    """Single-string crystal element b_i(n), n <= 0: eps_i = -n, phi_i = n, -inf elsewhere."""

    cartan: CartanData
    color: int
    level: int

    def __post_init__(self):
        assert self.level <= 0

    def wt(self):
        return self.cartan.weight(
            root=tuple(self.level if j == self.color else 0 for j in self.cartan.index_set)
        )

    def eps(self, i):
        return -self.level if i == self.color else NEG_INF

    def phi(self, i):
        return self.level if i == self.color else NEG_INF

    def e(self, i):
        if i != self.color or self.level == 0:
            return None
        return ElementaryFactor(self.cartan, self.color, self.level + 1)

    def f(self, i):
        if i != self.color:
            return None
        return ElementaryFactor(self.cartan, self.color, self.level - 1)


@dataclass(frozen=True)
class BinfElem:
    """Finite-support coordinate sequence; coords is a sorted tuple of (position, value >= 1)."""

    iota: IotaSequence
    coords: tuple = ()

    @property
    def cartan(self):
        return self.iota.cartan

    def coord(self, pos):
        for p, v in self.coords:
            if p == pos:
                return v
        return 0

    def coords_dict(self):
        return dict(self.coords)

    def height(self):
        return sum(v for _, v in self.coords)

    def wt(self):
        return _wt(self)

    def eps(self, i):
        return _ops(self, i)[0]

    def phi(self, i):
        return _ops(self, i)[1]

    def e(self, i):
        return _ops(self, i)[2]

    def f(self, i):
        return _ops(self, i)[3]


def highest(iota):
    return BinfElem(iota, ())


def from_word(iota, word):
    """Element reached by applying the lowering word to the top element."""
    return replay(highest(iota), word)


def _with_coord(b, pos, val):
    d = {p: v for p, v in b.coords if p != pos}
    if val:
        d[pos] = val
    return BinfElem(b.iota, tuple(sorted(d.items())))


@lru_cache(maxsize=None)
def _wt(b):
    n = b.cartan.rank
    root = [0] * n
    for pos, val in b.coords:
        root[b.iota.color(pos)] -= val
    return b.cartan.weight(root=root)


def _prefix(b):
    """Elementary factors of the evaluation window, leftmost (highest position) first."""
    n = b.iota.rank
    maxpos = max((p for p, _ in b.coords), default=0)
    periods = (maxpos + n - 1) // n + 1
    length = periods * n
    return [
        ElementaryFactor(b.cartan, b.iota.color(pos), -b.coord(pos))
        for pos in range(length, 0, -1)
    ]


@lru_cache(maxsize=None)
def _ops(b, i):
    from .crystal import fold_stats

    factors = _prefix(b)
    length = len(factors)
    _, eps, phi, act_e, act_f = fold_stats(factors, i)
    assert isinstance(eps, int) and eps >= 0

    f_pos = length - act_f
    assert b.iota.color(f_pos) == i
    f_res = _with_coord(b, f_pos, b.coord(f_pos) + 1)

    if eps == 0:
        e_res = None
    else:
        e_pos = length - act_e
        assert b.iota.color(e_pos) == i and b.coord(e_pos) >= 1
        e_res = _with_coord(b, e_pos, b.coord(e_pos) - 1)
    return eps, phi, e_res, f_res


def binf_ops(b, i):
    """(wt, eps_i, phi_i, e_i result or None, f_i result) of a model element."""
    eps, phi, e_res, f_res = _ops(b, i)
    return b.wt(), eps, phi, e_res, f_res


@lru_cache(maxsize=None)
def kashiwara_embed(b, i):
    """Image of b under the strict embedding into B(infinity) (x) B_i.

    Returns (left leg, m) where m is the negated i-level of the right leg; m
    realizes eps*_i(b) and the left leg is b with the starred i-string removed.
    """
    top = highest(b.iota)
    hw, word = hw_reduce(b)
    assert hw == top
    pair = TensorElem((top, ElementaryFactor(b.cartan, i, 0)))
    try:
        out = replay(pair, word)
    except TransportError as exc:  # pragma: no cover - model integrity
        raise ModelError("embedding replay vanished") from exc
    left, right = out.factors
    assert isinstance(right, ElementaryFactor) and right.color == i
    return left, -right.level


def eps_star_i(b, i):
    return kashiwara_embed(b, i)[1]


def eps_star(b):
    """Dominant weight with coordinates eps*_i(b)."""
    return b.cartan.weight(lam=tuple(eps_star_i(b, i) for i in b.cartan.index_set))


def eps_weight(b):
    """Dominant weight with coordinates eps_i(b)."""
    return b.cartan.weight(lam=tuple(b.eps(i) for i in b.cartan.index_set))


def _move_star_level(b, i, delta):
    left, m = kashiwara_embed(b, i)
    target_level = -(m + delta)
    if target_level > 0:
        return None
    top = highest(b.iota)
    pair = TensorElem((left, ElementaryFactor(b.cartan, i, target_level)))
    hw, word = hw_reduce(pair)
    if hw != TensorElem((top, ElementaryFactor(b.cartan, i, 0))):
        raise ModelError("starred operator reduction missed the embedded top element")
    return replay(top, word)


def star_f(b, i):
    """Starred lowering operator; never vanishes."""
    out = _move_star_level(b, i, +1)
    assert out is not None
    return out


def star_e(b, i):
    """Starred raising operator; None iff eps*_i(b) = 0."""
    return _move_star_level(b, i, -1)


@lru_cache(maxsize=None)
def star(b):
    """The weight-preserving involution: replay the lowering word of b through
    the starred lowering operators."""
    _, word = hw_reduce(b)
    cur = highest(b.iota)
    for i in word:
        cur = star_f(cur, i)
    return cur


def convert_model(b, target_iota):
    """The same abstract element written along another period order."""
    if b.iota == target_iota:
        return b
    assert b.cartan == target_iota.cartan
    _, word = hw_reduce(b)
    return replay(highest(target_iota), word)


def star_f_rotated_oracle(b, i):
    """Independent computation of star_f: in the model whose period starts at i,
    the starred lowering operator increments the coordinate at position 1."""
    rot = rotated_iota(b.iota, i)
    br = convert_model(b, rot)
    bumped = _with_coord(br, 1, br.coord(1) + 1)
    return convert_model(bumped, b.iota)


def eps_star_rotated_oracle(b, i):
    """In the rotated model, eps*_i is the coordinate at position 1."""
    return convert_model(b, rotated_iota(b.iota, i)).coord(1)
