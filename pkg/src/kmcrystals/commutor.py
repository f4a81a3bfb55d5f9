"""The crystal commutor, tensor decompositions, and the cactus-relation checker.

The commutor swaps an ordered pair of crystals through the star involution: on
a highest weight element b_alpha (x) b of B(alpha) (x) B(beta) it is

    b_alpha (x) b  |->  b_beta (x) b*,

where b* (star applied to the body of b) lives in B(alpha) because the starred
string lengths of b* are the plain string lengths of b, bounded by alpha.  The
map extends to arbitrary pairs componentwise: carry both sides into model
crystals along their component isomorphisms, apply the defining rule at the
highest weight element of the pair, and carry back.

The checkers below verify, element by element and with exact arithmetic, that
the two ways around the coboundary hexagon agree, that the commutor squares to
the identity, and that the decomposition data of the composite is the reversed,
starred decomposition data of the input.
"""
from __future__ import annotations

from dataclasses import dataclass

from .binf import highest as binf_highest, standard_iota, star
from .crystal import (
    TensorElem,
    from_leaves,
    hw_reduce,
    is_highest,
    leaves,
    replay,
    transport,
)
from .errors import ModelError, TransportError
from .hw import HwElem, apply_to_hw, enumerate_crystal, highest


def _iota_of(elem):
    leaf = leaves(elem)[0]
    return leaf.body.iota if isinstance(leaf, HwElem) else leaf.iota


def commute(left, right):
    """sigma(left (x) right) as the swapped pair (right', left')."""
    ca = left.cartan
    assert right.cartan == ca
    iota_seq = _iota_of(left)

    left_hw, left_word = hw_reduce(left)
    right_hw, right_word = hw_reduce(right)
    alpha, beta = left_hw.wt(), right_hw.wt()
    amodel = highest(ca, alpha, iota_seq)
    bmodel = highest(ca, beta, iota_seq)

    x = replay(amodel, left_word)
    y = replay(bmodel, right_word)
    pair_hw, pair_word = hw_reduce(TensorElem((x, y)))
    assert pair_hw.factors[0] == amodel

    c = pair_hw.factors[1]
    swapped = apply_to_hw(star(c.body), alpha)
    if swapped is None:
        raise ModelError("starred body does not fit under the left highest weight")
    try:
        image = replay(TensorElem((bmodel, swapped)), pair_word)
    except TransportError as exc:
        raise ModelError("commutor replay vanished; components not isomorphic") from exc
    y_out, x_out = image.factors
    return transport(y_out, bmodel, right_hw), transport(x_out, amodel, left_hw)


def sigma(pair: TensorElem) -> TensorElem:
    """The commutor on a two-part tensor element."""
    assert len(pair.factors) == 2
    new_left, new_right = commute(pair.factors[0], pair.factors[1])
    return TensorElem((new_left, new_right))


def cactus_composites(x1, x2, x3):
    """Both ways around the coboundary hexagon, flattened to ordered triples.

    Returns (via id (x) sigma then sigma, via sigma (x) id then sigma); the
    cactus relation asserts they are equal maps into the reversed product.
    """
    a, b = commute(x2, x3)
    right_first = commute(x1, TensorElem((a, b)))
    t1 = tuple(leaves(right_first[0])) + (right_first[1],)

    c, d = commute(x1, x2)
    left_first = commute(TensorElem((c, d)), x3)
    t2 = (left_first[0],) + tuple(leaves(left_first[1]))
    return t1, t2


# ---------------------------------------------------------------------------
# element windows and reports


def _window(cartan, lam, depth, iota_seq):
    g = enumerate_crystal(cartan, lam, depth=depth, iota_seq=iota_seq)
    return [(g.nodes[k], len(g.words[k])) for k in range(g.node_count())]


def _factor_word(x):
    hw, word = hw_reduce(x)
    assert hw == highest(x.cartan, x.lam, x.body.iota)
    return word


def _serialize_triple(factors):
    return [_factor_word(x) for x in factors]


def _base_report(cartan, lams, depth, extra=None):
    from .cartan import is_finite_type

    report = {
        "algebra": [list(row) for row in cartan.matrix],
        "finite_type": is_finite_type(cartan),
        "weights": [list(l.lam) for l in lams],
        "depth": depth,
        "elements_checked": 0,
        "violations": [],
        "holds": True,
    }
    if extra:
        report.update(extra)
    return report


def cactus_check(cartan, lams, depth=None, all_elements=False, iota_seq=None):
    """Verify both hexagon composites agree on B(lam1) (x) B(lam2) (x) B(lam3).

    Checks every highest weight element in the window (equality there settles
    equality of the crystal morphisms); with all_elements also every other
    element.  Violations are report entries, never exceptions.
    """
    if iota_seq is None:
        iota_seq = standard_iota(cartan)
    l1, l2, l3 = lams
    w1 = _window(cartan, l1, depth, iota_seq)
    w2 = _window(cartan, l2, depth, iota_seq)
    w3 = _window(cartan, l3, depth, iota_seq)
    report = _base_report(cartan, lams, depth, {"all_elements": all_elements})

    def run(x1, x2, x3):
        t1, t2 = cactus_composites(x1, x2, x3)
        report["elements_checked"] += 1
        if t1 != t2:
            report["violations"].append(
                {
                    "element": _serialize_triple((x1, x2, x3)),
                    "left_image": _serialize_triple(t2),
                    "right_image": _serialize_triple(t1),
                }
            )

    if all_elements:
        for x1, h1 in w1:
            for x2, h2 in w2:
                if depth is not None and h1 + h2 > depth:
                    continue
                for x3, h3 in w3:
                    if depth is not None and h1 + h2 + h3 > depth:
                        continue
                    run(x1, x2, x3)
    else:
        top1 = highest(cartan, l1, iota_seq)
        for x2, h2 in w2:
            for x3, h3 in w3:
                if depth is not None and h2 + h3 > depth:
                    continue
                if is_highest(TensorElem((top1, x2, x3))):
                    run(top1, x2, x3)
    report["holds"] = not report["violations"]
    return report


def symmetry_check(cartan, lam_a, lam_b, depth=None, iota_seq=None):
    """sigma_{B,A} after sigma_{A,B} must be the identity on every element."""
    if iota_seq is None:
        iota_seq = standard_iota(cartan)
    wa = _window(cartan, lam_a, depth, iota_seq)
    wb = _window(cartan, lam_b, depth, iota_seq)
    report = _base_report(cartan, (lam_a, lam_b), depth)
    for x, hx in wa:
        for y, hy in wb:
            if depth is not None and hx + hy > depth:
                continue
            y1, x1 = commute(x, y)
            x2, y2 = commute(y1, x1)
            report["elements_checked"] += 1
            if (x2, y2) != (x, y):
                report["violations"].append(
                    {
                        "element": _serialize_triple((x, y)),
                        "round_trip": _serialize_triple((x2, y2)),
                    }
                )
    report["holds"] = not report["violations"]
    return report


# ---------------------------------------------------------------------------
# decompositions


@dataclass(frozen=True)
class Decomposition:
    """Split data of a tensor element along positions p_1 <= ... <= p_k.

    slots[i] = (body, part): body in B(infinity) and part the highest weight
    element of the i-th segment crystal (None for an empty segment, whose body
    is the top element and whose weight is zero).
    """

    points: tuple
    flavor: str
    slots: tuple

    def nu_weights(self):
        zero = self.slots[0][0].cartan.zero()
        return tuple(zero if part is None else part.wt() for _, part in self.slots)

    def bodies(self):
        return tuple(body for body, _ in self.slots)

    def parts(self):
        return tuple(part for _, part in self.slots)


def _segments(points, n):
    k = len(points)
    if k == 0:
        raise ValueError("invalid split points: need k >= 1")
    if not all(isinstance(p, int) for p in points):
        raise ValueError("invalid split points: integers required")
    if not (0 < points[0] and all(points[i] <= points[i + 1] for i in range(k - 1)) and points[-1] <= n):
        raise ValueError(f"invalid split points {points} for {n} factors")
    bounds = [0, *points, n]
    return [(bounds[i], bounds[i + 1]) for i in range(k + 1)]


def _embed_body(elem):
    """(component hw, replay word, image of elem in the model crystal body)."""
    hw, word = hw_reduce(elem)
    model = highest(elem.cartan, hw.wt(), _iota_of(elem))
    return hw, word, replay(model, word).body


def decompose(b, points, flavor="nested"):
    """Extract the split data of b along the given points.

    nested peels highest-weight prefixes right-to-left through repeated
    reduction; flat splits the single reduction of b segment by segment.  Both
    reconstruct b (see reconstruct) and agree when k = 1.
    """
    if flavor not in ("nested", "flat"):
        raise ValueError(f"unknown flavor {flavor!r}")
    factors = leaves(b)
    segs = _segments(tuple(points), len(factors))
    top = binf_highest(_iota_of(b))
    slots = []

    if flavor == "nested":
        rest = b
        for lo, hi in segs:
            if lo == hi:
                slots.append((top, None))
                continue
            assert rest is not None
            hw, _, body = _embed_body(rest)
            hw_leaves = leaves(hw)
            slots.append((body, from_leaves(hw_leaves[: hi - lo])))
            rest = from_leaves(hw_leaves[hi - lo :])
        assert rest is None
    else:
        hw, _, body = _embed_body(b)
        hw_leaves = leaves(hw)
        first = True
        for lo, hi in segs:
            piece = from_leaves(hw_leaves[lo:hi])
            if first:
                assert piece is not None and is_highest(piece)
                slots.append((body, piece))
                first = False
            elif piece is None:
                slots.append((top, None))
            else:
                _, _, seg_body = _embed_body(piece)
                slots.append((seg_body, hw_reduce(piece)[0]))
    return Decomposition(tuple(points), flavor, tuple(slots))


def push_body(body, hw_target):
    """The element of hw_target's component whose image in B(infinity) is body."""
    assert is_highest(hw_target)
    lam = hw_target.wt()
    model_elem = apply_to_hw(body, lam)
    if model_elem is None:
        raise ModelError("body does not lie in the component's cut")
    return transport(model_elem, highest(body.cartan, lam, body.iota), hw_target)


def reconstruct(d: Decomposition):
    """Reassemble the element a decomposition was extracted from."""
    if d.flavor == "nested":
        cur = None
        for body, part in reversed(d.slots):
            if part is None:
                assert body.height() == 0
                continue
            arg = part if cur is None else from_leaves(leaves(part) + leaves(cur))
            assert is_highest(arg)
            cur = push_body(body, arg)
        return cur
    body1, part1 = d.slots[0]
    pieces = leaves(part1)
    for body, part in d.slots[1:]:
        if part is None:
            assert body.height() == 0
            continue
        pieces.extend(leaves(push_body(body, part)))
    whole = from_leaves(pieces)
    assert is_highest(whole)
    return push_body(body1, whole)


def hw_star_swap_check(cartan, lams, depth=None, iota_seq=None):
    """Decomposition bookkeeping of the hexagon composites on highest weight triples.

    For each highest weight b with nested data (top, b_l1, b2, b_l2, b3, b_l3)
    and flat data (top, b_l1, B2, b_l2, B3, b_l3), both composites must agree
    and the image's data is the starred reversal with the two flavors crossed:
    reversing the factor order turns the right-nested bracketing into the
    left-nested one, so the flat data of the image is (top, b_l3, b3*, b_l2,
    b2*, b_l1) and its nested data is (top, b_l3, B3*, b_l2, B2*, b_l1).
    """
    if iota_seq is None:
        iota_seq = standard_iota(cartan)
    l1, l2, l3 = lams
    w2 = _window(cartan, l2, depth, iota_seq)
    w3 = _window(cartan, l3, depth, iota_seq)
    top1 = highest(cartan, l1, iota_seq)
    tops = [highest(cartan, l, iota_seq) for l in lams]
    binf_top = binf_highest(iota_seq)
    report = _base_report(cartan, lams, depth)

    for x2, h2 in w2:
        for x3, h3 in w3:
            if depth is not None and h2 + h3 > depth:
                continue
            b = TensorElem((top1, x2, x3))
            if not is_highest(b):
                continue
            report["elements_checked"] += 1
            problems = []

            d_nested = decompose(b, (1, 2), "nested")
            d_flat = decompose(b, (1, 2), "flat")
            if d_nested.parts() != (tops[0], tops[1], tops[2]):
                problems.append("nested segment parts are not the highest weight elements")
            if d_nested.slots[0][0] != binf_top or d_flat.slots[0][0] != binf_top:
                problems.append("leading body is not the top element")

            t1, t2 = cactus_composites(*b.factors)
            if t1 != t2:
                problems.append("composites disagree")
            else:
                image = TensorElem(t1)
                want_parts = (tops[2], tops[1], tops[0])
                df = decompose(image, (1, 2), "flat")
                expect_flat = (
                    binf_top,
                    star(d_nested.slots[2][0]),
                    star(d_nested.slots[1][0]),
                )
                if df.bodies() != expect_flat or df.parts() != want_parts:
                    problems.append(
                        "flat data of composite is not the starred reversal of the nested data"
                    )
                dn = decompose(image, (1, 2), "nested")
                expect_nested = (
                    binf_top,
                    star(d_flat.slots[2][0]),
                    star(d_flat.slots[1][0]),
                )
                if dn.bodies() != expect_nested or dn.parts() != want_parts:
                    problems.append(
                        "nested data of composite is not the starred reversal of the flat data"
                    )

            if problems:
                report["violations"].append(
                    {"element": _serialize_triple(b.factors), "problems": problems}
                )
    report["holds"] = not report["violations"]
    return report
