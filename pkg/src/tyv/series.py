"""Truncated formal series in u^{-1}.

A series of order N stores the coefficients c_0, ..., c_N of
u^0, u^{-1}, ..., u^{-N}.  Coefficients are exact scalars (``ring=None``) or
elements of a single :class:`~tyv.pbw.PbwAlgebra`; products keep the
coefficient order, so noncommutative coefficient rings are fine.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from . import field as kf
from .field import Scalar
from .pbw import PbwAlgebra, PbwElement


class RingMismatch(TypeError):
    pass


class NotInvertible(ArithmeticError):
    pass


def _zero(ring):
    return 0 if ring is None else ring.zero()


def _one(ring):
    return 1 if ring is None else ring.one()


def _is_zero(x) -> bool:
    return x == 0 if not isinstance(x, PbwElement) else x.is_zero()


class TruncatedSeries:
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Sequence, ring: PbwAlgebra | None = None):
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        if ring is None:
            for c in coeffs:
                if not kf.is_scalar(c):
                    raise RingMismatch("scalar series with non-scalar coefficient")
            self.coeffs = [kf.normalize(c) for c in coeffs]
        else:
            out = []
            for c in coeffs:
                if isinstance(c, PbwElement):
                    if c.alg is not ring:
                        raise RingMismatch("coefficient from a different algebra")
                    out.append(c)
                elif kf.is_scalar(c):
                    out.append(ring.scalar(c))
                else:
                    raise RingMismatch(f"bad coefficient {c!r}")
            self.coeffs = out
        self.ring = ring

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int, ring=None) -> "TruncatedSeries":
        return cls([f(k) for k in range(order + 1)], ring)

    @classmethod
    def one(cls, order: int, ring=None) -> "TruncatedSeries":
        return cls([_one(ring)] + [_zero(ring)] * order, ring)

    @classmethod
    def generating(cls, coeff: Callable[[int], object], order: int, ring=None, constant=0) -> "TruncatedSeries":
        """constant + sum_{r>=0} coeff(r) u^{-r-1}."""
        return cls([constant] + [coeff(k - 1) for k in range(1, order + 1)], ring)

    # -- basic data -------------------------------------------------------
    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        if k < 0:
            return _zero(self.ring)
        if k > self.order:
            raise IndexError(f"coefficient u^-{k} beyond order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[: order + 1], self.ring)

    def _check(self, o: "TruncatedSeries") -> None:
        if not isinstance(o, TruncatedSeries):
            raise RingMismatch("not a series")
        if o.ring is not self.ring:
            raise RingMismatch("series over different rings")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, o):
        if kf.is_scalar(o) or isinstance(o, PbwElement):
            cs = list(self.coeffs)
            cs[0] = cs[0] + o
            return TruncatedSeries(cs, self.ring)
        self._check(o)
        n = min(self.order, o.order)
        return TruncatedSeries([self.coeffs[k] + o.coeffs[k] for k in range(n + 1)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.ring)

    def __sub__(self, o):
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if kf.is_scalar(o):
            return TruncatedSeries([c * o for c in self.coeffs], self.ring)
        if isinstance(o, PbwElement):
            return TruncatedSeries([c * o for c in self.coeffs], self.ring)
        self._check(o)
        n = min(self.order, o.order)
        out = []
        for k in range(n + 1):
            acc = _zero(self.ring)
            for i in range(k + 1):
                a, b = self.coeffs[i], o.coeffs[k - i]
                if _is_zero(a) or _is_zero(b):
                    continue
                acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(out, self.ring)

    def __rmul__(self, o):
        if kf.is_scalar(o):
            return self * o
        if isinstance(o, PbwElement):
            return TruncatedSeries([o * c for c in self.coeffs], self.ring)
        return NotImplemented

    def commutator(self, o: "TruncatedSeries") -> "TruncatedSeries":
        return self * o - o * self

    def anticommutator(self, o: "TruncatedSeries") -> "TruncatedSeries":
        return self * o + o * self

    def constant_scalar(self) -> Scalar:
        c = self.coeffs[0]
        if isinstance(c, PbwElement):
            if not c.is_scalar():
                raise NotInvertible("constant coefficient is not a scalar")
            c = c.scalar_part()
        if c == 0:
            raise NotInvertible("constant coefficient vanishes")
        return c

    def invert(self) -> "TruncatedSeries":
        c0 = self.constant_scalar()
        inv0 = kf.lift(c0).inverse() if isinstance(c0, kf.QSqrt) else Fraction(1) / c0
        inv0 = kf.normalize(inv0)
        out = [_one(self.ring) * inv0]
        for k in range(1, self.order + 1):
            acc = _zero(self.ring)
            for i in range(1, k + 1):
                if _is_zero(self.coeffs[i]):
                    continue
                acc = acc + self.coeffs[i] * out[k - i]
            out.append(acc * (-inv0))
        return TruncatedSeries(out, self.ring)

    # -- argument changes ---------------------------------------------------
    def negate_arg(self) -> "TruncatedSeries":
        """f(-u)."""
        return TruncatedSeries([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)], self.ring)

    def shift_arg(self, c: Scalar) -> "TruncatedSeries":
        """f(u + c), re-expanded in u^{-1} to the same order."""
        n = self.order
        out = [_zero(self.ring) for _ in range(n + 1)]
        out[0] = self.coeffs[0]
        for r in range(1, n + 1):
            cr = self.coeffs[r]
            if _is_zero(cr):
                continue
            # (u + c)^{-r} = sum_m C(-r, m) c^m u^{-r-m}
            for m in range(0, n - r + 1):
                factor = (-1) ** m * comb(r + m - 1, m) * (kf.lift(c) ** m if m else 1)
                factor = kf.normalize(factor)
                if factor != 0:
                    out[r + m] = out[r + m] + cr * factor
        return TruncatedSeries(out, self.ring)

    def mul_u_principal(self) -> "TruncatedSeries":
        """Principal part of u*f(u): coefficients f_{k+1} for k >= 1, order N-1."""
        cs = [_zero(self.ring)] + [self.coeffs[k + 1] for k in range(1, self.order)]
        return TruncatedSeries(cs, self.ring)

    def div_u(self) -> "TruncatedSeries":
        """f(u)/u, order N+1."""
        return TruncatedSeries([_zero(self.ring)] + list(self.coeffs), self.ring)

    def map(self, f: Callable, ring=None) -> "TruncatedSeries":
        return TruncatedSeries([f(c) for c in self.coeffs], ring)

    # -- comparison ---------------------------------------------------------
    def difference_orders(self, o: "TruncatedSeries") -> list[int]:
        """Indices k <= min order where the coefficients differ."""
        self._check(o)
        n = min(self.order, o.order)
        return [k for k in range(n + 1) if not _is_zero(self.coeffs[k] - o.coeffs[k])]

    def equals(self, o: "TruncatedSeries") -> bool:
        return not self.difference_orders(o)

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.coeffs)

    def odd_part_vanishes(self) -> bool:
        return all(_is_zero(c) for k, c in enumerate(self.coeffs) if k % 2)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"


def iweight_eigenvalue(roots: Sequence[Scalar], d: Scalar, order: int) -> TruncatedSeries:
    """Expansion of Xi(u+d/2) Xi^-(u-d/2) / (Xi(u-d/2) Xi^-(u+d/2)).

    Xi(u) = prod (u - a) over ``roots`` and Xi^-(u) = (-1)^deg Xi(-u).  The
    powers of u cancel, so the monic normalization u^{-deg} Xi(u) is used.
    """
    xi_hat = TruncatedSeries.one(order)
    for a in roots:
        xi_hat = xi_hat * TruncatedSeries([1, -a] + [0] * (order - 1) if order >= 1 else [1])
    xi_minus = xi_hat.negate_arg()
    half = Fraction(d) / 2 if not isinstance(d, kf.QSqrt) else d * Fraction(1, 2)
    num = xi_hat.shift_arg(half) * xi_minus.shift_arg(-half)
    den = xi_hat.shift_arg(-half) * xi_minus.shift_arg(half)
    return num * den.invert()
