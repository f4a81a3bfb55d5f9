"""Exact linear algebra over the rationals with explicit (possibly zero) shapes.

Matrices carry their row and column counts so that maps into or out of the zero
space keep well-defined shapes; entries are Fractions throughout, so rank and
kernel dimensions are exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    data: tuple  # rows tuples, each of length cols

    def __post_init__(self):
        assert len(self.data) == self.rows
        assert all(len(r) == self.cols for r in self.data)

    def __getitem__(self, rc):
        return self.data[rc[0]][rc[1]]

    def tolists(self):
        return [list(r) for r in self.data]


def mat(rows, shape=None):
    data = tuple(tuple(Fraction(x) for x in r) for r in rows)
    if shape is not None:
        r, c = shape
        assert len(data) == r and all(len(row) == c for row in data)
        return Mat(r, c, data)
    r = len(data)
    c = len(data[0]) if r else 0
    return Mat(r, c, data)


def zeros(r, c):
    return Mat(r, c, tuple(tuple(Fraction(0) for _ in range(c)) for _ in range(r)))


def eye(n):
    return Mat(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))


def transpose(m):
    return Mat(m.cols, m.rows, tuple(tuple(m.data[r][c] for r in range(m.rows)) for c in range(m.cols)))


def add(a, b):
    assert (a.rows, a.cols) == (b.rows, b.cols)
    return Mat(a.rows, a.cols, tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.data, b.data)))


def scale(a, k):
    k = Fraction(k)
    return Mat(a.rows, a.cols, tuple(tuple(k * x for x in r) for r in a.data))


def matmul(a, b):
    assert a.cols == b.rows, f"shape mismatch {a.rows}x{a.cols} @ {b.rows}x{b.cols}"
    bt = transpose(b)
    return Mat(
        a.rows,
        b.cols,
        tuple(tuple(sum(x * y for x, y in zip(ra, cb)) for cb in bt.data) for ra in a.data),
    )


def hstack(mats, rows):
    mats = list(mats)
    assert all(m.rows == rows for m in mats)
    cols = sum(m.cols for m in mats)
    data = tuple(tuple(x for m in mats for x in m.data[r]) for r in range(rows))
    return Mat(rows, cols, data)


def vstack(mats, cols):
    mats = list(mats)
    assert all(m.cols == cols for m in mats)
    data = tuple(row for m in mats for row in m.data)
    return Mat(len(data), cols, data)


def is_zero(m):
    return all(x == 0 for r in m.data for x in r)


def _rref(m):
    """Reduced row echelon form; returns (rows as lists, pivot column list)."""
    a = [list(r) for r in m.data]
    pivots = []
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m):
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_rref(m)[1])


def nullspace(m):
    """Matrix whose columns are a basis of the kernel."""
    if m.cols == 0:
        return zeros(0, 0)
    if m.rows == 0:
        return eye(m.cols)
    a, pivots = _rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * m.cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        basis.append(vec)
    return transpose(mat(basis)) if basis else zeros(m.cols, 0)


def colspace(m):
    """Matrix whose columns are a basis of the column space (pivot columns)."""
    if m.rows == 0 or m.cols == 0:
        return zeros(m.rows, 0)
    _, pivots = _rref(m)
    data = tuple(tuple(m.data[r][c] for c in pivots) for r in range(m.rows))
    return Mat(m.rows, len(pivots), data)


def span_contains(space, vecs):
    """Does the column span of `space` contain every column of `vecs`?"""
    assert space.rows == vecs.rows
    if vecs.cols == 0:
        return True
    return rank(hstack([space, vecs], space.rows)) == rank(space)


def span_eq(a, b):
    return span_contains(a, b) and span_contains(b, a)


def intersect(a, b):
    """Basis of the intersection of two column spans in the same ambient space."""
    assert a.rows == b.rows
    if a.cols == 0 or b.cols == 0:
        return zeros(a.rows, 0)
    ker = nullspace(hstack([a, scale(b, -1)], a.rows))
    coeff = Mat(a.cols, ker.cols, tuple(ker.data[r] for r in range(a.cols)))
    return colspace(matmul(a, coeff))


def preimage(f, space):
    """Basis of f^{-1}(column span of space); includes the kernel of f."""
    assert f.rows == space.rows
    if space.cols == 0:
        return nullspace(f)
    ker = nullspace(hstack([f, scale(space, -1)], f.rows))
    top = Mat(f.cols, ker.cols, tuple(ker.data[r] for r in range(f.cols)))
    return colspace(top)
