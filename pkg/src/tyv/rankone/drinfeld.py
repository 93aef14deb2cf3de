"""The Yangian of sl2 in current generators, with brackets forced by recursion.

Generators x^-_r < xi_r < x^+_r (ascending r inside each block) for
0 <= r <= R.  Only the lowest brackets are given; everything else is
unrolled from the two shift relations, each step lowering the total index
of the bracket that is still unresolved.  With (alpha, alpha) = 2::

    [xi_r, x^-_s] = [xi_{r-1}, x^-_{s+1}] - {xi_{r-1}, x^-_s},  [xi_0, x^-_s] = -2 x^-_s
    [xi_s, x^+_r] = [xi_{s-1}, x^+_{r+1}] + {xi_{s-1}, x^+_r},  [xi_0, x^+_r] =  2 x^+_r
    [x^+_r, x^-_s] = xi_{r+s}
    [x^s_r, x^s_t] = [x^s_{r-1}, x^s_{t+1}] +- {x^s_{r-1}, x^s_t}   (r > t + 1)
    [x^s_{t+1}, x^s_t] = +- (x^s_t)^2
"""

from __future__ import annotations

from fractions import Fraction

from ..pbw import BudgetExceeded, PbwAlgebra, PbwElement, TensorSquare, apply_hom
from ..series import TruncatedSeries

DEFAULT_MAXIDX = 10

XM, XI, XP = "x-", "xi", "x+"
_SIGN = {XM: -1, XI: 0, XP: 1}


def _bracket(alg: "DrinfeldSl2", a: int, b: int):
    (ka, r), (kb, s) = alg.names[a], alg.names[b]
    if ka == XI and kb == XI:
        return {}
    if ka == XP and kb == XM:
        return alg.xi(r + s)
    if ka == XI and kb == XM:
        if r == 0:
            return alg.x(XM, s) * -2
        return alg.xi(r - 1) * alg.x(XM, s + 1) - alg.x(XM, s + 1) * alg.xi(r - 1) - alg.xi(r - 1).anticommutator(alg.x(XM, s))
    if ka == XP and kb == XI:
        # [x^+_r, xi_s] = -[xi_s, x^+_r]
        if s == 0:
            return alg.x(XP, r) * -2
        inner = alg.xi(s - 1).commutator(alg.x(XP, r + 1)) + alg.xi(s - 1).anticommutator(alg.x(XP, r))
        return -inner
    if ka == kb:
        sign = _SIGN[ka]
        if r == s + 1:
            return alg.x(ka, s) * alg.x(ka, s) * sign
        return alg.x(ka, r - 1).commutator(alg.x(ka, s + 1)) + alg.x(ka, r - 1).anticommutator(alg.x(ka, s)) * sign
    raise AssertionError(f"unordered pair {alg.names[a]}, {alg.names[b]}")


class DrinfeldSl2(PbwAlgebra):
    def __init__(self, maxidx: int = DEFAULT_MAXIDX):
        if maxidx < 1:
            raise ValueError("index budget must be at least 1")
        self.R = maxidx
        names = [(k, r) for k in (XM, XI, XP) for r in range(maxidx + 1)]
        degrees = [r for _, r in names]
        weights = [(_SIGN[k],) for k, _ in names]
        super().__init__(names, degrees, weights, _bracket, label=f"Y(sl2)[R={maxidx}]")

    def x(self, kind: str, r: int) -> PbwElement:
        if r > self.R:
            raise BudgetExceeded(f"x{kind[1]}_{r} beyond index budget {self.R}")
        return self.gen((kind, r))

    def xp(self, r: int) -> PbwElement:
        return self.x(XP, r)

    def xm(self, r: int) -> PbwElement:
        return self.x(XM, r)

    def xi(self, r: int) -> PbwElement:
        if r > self.R:
            raise BudgetExceeded(f"xi_{r} beyond index budget {self.R}")
        return self.gen((XI, r))

    def xi_tilde1(self) -> PbwElement:
        return self.xi(1) - self.xi(0) * self.xi(0) * Fraction(1, 2)

    def mono_str(self, m) -> str:
        if not m:
            return "1"
        return "*".join(f"{self.names[g][0]}{self.names[g][1]}" for g in m)

    # -- monomial predicates ------------------------------------------
    def count(self, m, kind: str) -> int:
        return sum(1 for g in m if self.names[g][0] == kind)

    def weight_of(self, m) -> int:
        return self.mono_weight(m)[0]

    def in_borel_plus(self, m) -> bool:
        """Monomial lies in the subalgebra generated by xi and x^+."""
        return self.count(m, XM) == 0

    def in_borel_minus(self, m) -> bool:
        return self.count(m, XP) == 0

    # -- generating series ----------------------------------------------
    def xi_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.generating(self.xi, order, self, constant=1)

    def x_series(self, kind: str, order: int) -> TruncatedSeries:
        return TruncatedSeries.generating(lambda r: self.x(kind, r), order, self)

    # -- anti-involution ---------------------------------------------------
    def tau_image(self, g: int) -> PbwElement:
        k, r = self.names[g]
        swap = {XP: XM, XM: XP, XI: XI}[k]
        return self.gen((swap, r))

    def tau(self, e: PbwElement) -> PbwElement:
        return apply_hom(e, self.tau_image, self, anti=True)


class TwistedSl2:
    """b_r and h_{2r+1} inside Y(sl2)."""

    def __init__(self, Y: DrinfeldSl2):
        self.Y = Y
        self._b: dict[int, PbwElement] = {}
        self._h: dict[int, PbwElement] = {}
        Y_ = Y
        self._b[0] = Y_.xp(0) - Y_.xm(0)
        self.h1 = Y_.xi(1) * 2 - Y_.xi(0) * Y_.xi(0) + Y_.xp(0) * Y_.xp(0) * 2

    def b(self, r: int) -> PbwElement:
        if r not in self._b:
            if r > self.Y.R:
                raise BudgetExceeded(f"b_{r} beyond index budget {self.Y.R}")
            self._b[r] = self.h1.commutator(self.b(r - 1)) * Fraction(1, 4)
        return self._b[r]

    def h_extracted(self, k: int) -> PbwElement:
        """Coefficient of u^{-k-1} in [b_0, b(u)] + b(u)^2; vanishes for even k."""
        if k not in self._h:
            out = self.b(0).commutator(self.b(k))
            for p in range(k):
                out = out + self.b(p) * self.b(k - 1 - p)
            self._h[k] = out
        return self._h[k]

    def h(self, k: int) -> PbwElement:
        """h_k with the literal conventions h_{-1} = 1 and h_even = 0."""
        if k == -1:
            return self.Y.one()
        if k < -1 or k % 2 == 0:
            return self.Y.zero()
        return self.h_extracted(k)

    def b_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.generating(self.b, order, self.Y)

    def h_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.generating(self.h, order, self.Y, constant=1)


class Sl2Coproduct:
    """The coproduct on generators, extended by the degree-raising brackets."""

    def __init__(self, Y: DrinfeldSl2):
        self.Y = Y
        self.T = TensorSquare(Y)
        self._img: dict[int, PbwElement] = {}

    def _prim(self, e: PbwElement) -> PbwElement:
        return self.T.left(e) + self.T.right(e)

    def gen_image(self, g: int) -> PbwElement:
        hit = self._img.get(g)
        if hit is not None:
            return hit
        Y, T = self.Y, self.T
        kind, r = Y.names[g]
        e = PbwElement(Y, {(g,): 1})
        if r == 0:
            val = self._prim(e)
        elif r == 1 and kind == XI:
            val = self._prim(e) + T.tensor(Y.xi(0), Y.xi(0)) - T.tensor(Y.xm(0), Y.xp(0)) * 2
        elif r == 1 and kind == XP:
            val = self._prim(e) + T.tensor(Y.xi(0), Y.xp(0))
        elif r == 1 and kind == XM:
            val = self._prim(e) + T.tensor(Y.xm(0), Y.xi(0))
        elif kind == XI:
            val = self.gen_image(Y.index[(XP, 1)]).commutator(self.gen_image(Y.index[(XM, r - 1)]))
        else:
            xt = self.delta(Y.xi_tilde1())
            prev = self.gen_image(Y.index[(kind, r - 1)])
            val = xt.commutator(prev) * Fraction(_SIGN[kind], 2)
        self._img[g] = val
        return val

    def delta(self, e: PbwElement, memo: dict | None = None) -> PbwElement:
        return apply_hom(e, self.gen_image, self.T, memo=memo)
