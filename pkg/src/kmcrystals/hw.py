"""Highest-weight crystals B(lambda) realized as cuts of B(infinity).

An element is a dominant weight lambda together with a model element whose
starred string lengths fit under lambda: eps*_i(body) <= <h_i, lambda> for all
i.  Raising acts on the body unchanged; lowering is cut off exactly when the
result would leave the cut.  The inclusions B(lambda) -> B(lambda + mu) of the
directed system are then literally the identity on bodies.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binf import BinfElem, eps_star_i, highest as binf_highest, standard_iota
from .cartan import Weight, is_finite_type
from .crystal import generate_graph, hw_reduce


@dataclass(frozen=True)
class HwElem:
    lam: Weight
    body: BinfElem

    @property
    def cartan(self):
        return self.body.cartan

    def wt(self):
        return self.lam + self.body.wt()

    def height(self):
        return self.body.height()

    def eps(self, i):
        return self.body.eps(i)

    def phi(self, i):
        return self.eps(i) + self.cartan.pair(i, self.wt())

    def e(self, i):
        nb = self.body.e(i)
        if nb is None:
            return None
        return HwElem(self.lam, nb)

    def f(self, i):
        nb = self.body.f(i)
        if not contains(self.lam, nb):
            return None
        return HwElem(self.lam, nb)


def hw_ops(x, i):
    """(wt, eps, phi, e result, f result) of a cut element at one node."""
    return x.wt(), x.eps(i), x.phi(i), x.e(i), x.f(i)


def contains(lam, b):
    """Membership of the cut: eps*_i(b) <= <h_i, lam> for every node."""
    ca = b.cartan
    if not ca.pairing_dominant(lam):
        raise ValueError("lambda must be dominant")
    return all(eps_star_i(b, i) <= ca.pair(i, lam) for i in ca.index_set)


def apply_to_hw(b, lam):
    """Push a model element into B(lambda): HwElem(lam, b) if it fits, else None."""
    if contains(lam, b):
        return HwElem(lam, b)
    return None


def highest(cartan, lam, iota=None):
    """The highest weight element b_lambda."""
    if not cartan.pairing_dominant(lam):
        raise ValueError("lambda must be dominant")
    if iota is None:
        iota = standard_iota(cartan)
    return HwElem(lam, binf_highest(iota))


def iota(x, mu):
    """Directed-system inclusion B(lambda) -> B(lambda + mu): same body, larger cut."""
    ca = x.cartan
    if not ca.dominant(mu):
        raise ValueError("mu must be dominant")
    return HwElem(x.lam + mu, x.body)


def enumerate_crystal(cartan, lam, depth=None, iota_seq=None, node_cap=None):
    """Crystal graph of B(lambda); a depth is mandatory outside finite type."""
    if depth is None and not is_finite_type(cartan):
        raise ValueError("depth required: Cartan matrix is not of finite type")
    return generate_graph(highest(cartan, lam, iota_seq), depth=depth, node_cap=node_cap)


def serialize(x):
    """{"lambda": [...], "word": [...]}: the lowering word from b_lambda."""
    hw, word = hw_reduce(x)
    assert hw == HwElem(x.lam, binf_highest(x.body.iota))
    return {"lambda": list(x.lam.lam), "word": word}


def deserialize(cartan, payload, iota_seq=None):
    from .crystal import replay

    lam = cartan.weight(lam=payload["lambda"])
    return replay(highest(cartan, lam, iota_seq), payload["word"])
