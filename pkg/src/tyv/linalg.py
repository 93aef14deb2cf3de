"""Exact dense linear algebra over Q(sqrt2, sqrt3)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from . import field as kf
from .field import Scalar


def inv(x: Scalar) -> Scalar:
    if isinstance(x, kf.QSqrt):
        return kf.normalize(x.inverse())
    if x == 0:
        raise ZeroDivisionError("inverse of 0")
    return kf.normalize(Fraction(1) / x)


def _echelon(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        iv = inv(m[r][c])
        m[r] = [kf.normalize(v * iv) for v in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [kf.normalize(a - f * b) for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    if not rows:
        return 0
    ncols = len(rows[0])
    return len(_echelon([list(r) for r in rows], ncols)[1])


def inverse(mat: Sequence[Sequence[Scalar]]) -> list[list[Scalar]]:
    n = len(mat)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(mat)]
    red, piv = _echelon(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]
