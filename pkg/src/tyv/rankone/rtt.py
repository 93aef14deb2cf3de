"""The gl2 Yangian in R-matrix form and its twisted S-matrix subalgebra.

Generators t_ij^(r), 1 <= r <= B, ordered by (r, i, j).  The commutator is
the closed form

    [t_ij^(r), t_kl^(s)] = sum_{a=1}^{min(r,s)} t_kj^(a-1) t_il^(r+s-a) - t_kj^(r+s-a) t_il^(a-1)

with t^(0) = identity.  ``rtt_recursion_words`` unrolls the raw coefficient
recursion instead and is kept as the oracle the closed form is tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..pbw import BudgetExceeded, PbwAlgebra, PbwElement, TensorSquare
from ..series import TruncatedSeries

HALF = Fraction(1, 2)
IDX = (1, 2)


def _closed_form_words(i, j, r, k, l, s) -> dict[tuple, int]:
    """Closed form as a sum of free words; letters are (i, j, r) with r >= 1."""
    out: dict[tuple, int] = {}
    for a in range(1, min(r, s) + 1):
        _word_acc(out, (k, j, a - 1), (i, l, r + s - a), 1)
        _word_acc(out, (k, j, r + s - a), (i, l, a - 1), -1)
    return {w: c for w, c in out.items() if c}


def _word_acc(out, x, y, c):
    word = []
    for (p, q, n) in (x, y):
        if n == 0:
            if p != q:
                return
            continue
        word.append((p, q, n))
    w = tuple(word)
    out[w] = out.get(w, 0) + c


def rtt_recursion_words(i, j, r, k, l, s) -> dict[tuple, int]:
    """[t_ij^(r), t_kl^(s)] from the coefficient recursion of the RTT relation.

    (u - v)[t_ij(u), t_kl(v)] = t_kj(u) t_il(v) - t_kj(v) t_il(u) at u^-p v^-q
    reads B(p+1, q) = B(p, q+1) + t_kj^(p) t_il^(q) - t_kj^(q) t_il^(p),
    with B(0, q) = 0.
    """
    out: dict[tuple, int] = {}
    p, q = r - 1, s
    while p >= 0:
        _word_acc(out, (k, j, p), (i, l, q), 1)
        _word_acc(out, (k, j, q), (i, l, p), -1)
        p, q = p - 1, q + 1
    return {w: c for w, c in out.items() if c}


def _rtt_bracket(alg: "RttGl2", a: int, b: int):
    _, i, j, r = alg.names[a]
    _, k, l, s = alg.names[b]
    out = alg.zero()
    for a_ in range(1, min(r, s) + 1):
        out = out + alg.t(k, j, a_ - 1) * alg.t(i, l, r + s - a_) - alg.t(k, j, r + s - a_) * alg.t(i, l, a_ - 1)
    return out


class RttGl2(PbwAlgebra):
    def __init__(self, budget: int):
        if budget < 1:
            raise ValueError("budget must be at least 1")
        self.B = budget
        names = [("t", i, j, r) for r in range(1, budget + 1) for i in IDX for j in IDX]
        degrees = [n[3] - 1 for n in names]
        weights = [(n[1] - n[2],) for n in names]
        super().__init__(names, degrees, weights, _rtt_bracket, label=f"Y(gl2)[B={budget}]")

    def t(self, i: int, j: int, r: int) -> PbwElement:
        if r == 0:
            return self.one() if i == j else self.zero()
        if r > self.B:
            raise BudgetExceeded(f"t_{i}{j}^({r}) beyond budget {self.B}")
        return self.gen(("t", i, j, r))

    def words(self, w: dict[tuple, int]) -> PbwElement:
        out = self.zero()
        for word, c in w.items():
            e = self.one()
            for (i, j, r) in word:
                e = e * self.t(i, j, r)
            out = out + e * c
        return out

    def mono_str(self, m) -> str:
        if not m:
            return "1"
        return "*".join(f"t{self.names[g][1]}{self.names[g][2]}({self.names[g][3]})" for g in m)

    def series(self, i: int, j: int, order: int) -> TruncatedSeries:
        return TruncatedSeries([self.t(i, j, r) for r in range(order + 1)], self)

    def T(self, order: int) -> dict[tuple[int, int], TruncatedSeries]:
        return {(i, j): self.series(i, j, order) for i in IDX for j in IDX}

    def copro_gen(self, T2: TensorSquare, g: int) -> PbwElement:
        """Delta t_ij^(r) = sum_a sum_{p+q=r} t_ia^(p) (x) t_aj^(q)."""
        _, i, j, r = self.names[g]
        out = T2.zero()
        for a in IDX:
            for p in range(r + 1):
                x, y = self.t(i, a, p), self.t(a, j, r - p)
                if not x.is_zero() and not y.is_zero():
                    out = out + T2.tensor(x, y)
        return out


@dataclass
class GaussData:
    D1: TruncatedSeries
    D2: TruncatedSeries
    E: TruncatedSeries
    F: TruncatedSeries
    D1inv: TruncatedSeries

    def reconstruct(self) -> dict[tuple[int, int], TruncatedSeries]:
        return {
            (1, 1): self.D1,
            (1, 2): self.D1 * self.E,
            (2, 1): self.F * self.D1,
            (2, 2): self.D2 + self.F * self.D1 * self.E,
        }


def gauss_decompose(M: dict[tuple[int, int], TruncatedSeries]) -> GaussData:
    D1 = M[(1, 1)]
    D1inv = D1.invert()
    E = D1inv * M[(1, 2)]
    F = M[(2, 1)] * D1inv
    D2 = M[(2, 2)] - F * D1 * E
    return GaussData(D1, D2, E, F, D1inv)


def s_matrix(T: dict[tuple[int, int], TruncatedSeries]) -> dict[tuple[int, int], TruncatedSeries]:
    """s_ij(u) = sum_a t_ai(-u) t_aj(u)."""
    return {(i, j): sum((T[(a, i)].negate_arg() * T[(a, j)] for a in IDX[1:]), T[(1, i)].negate_arg() * T[(1, j)])
            for i in IDX for j in IDX}


def qdet(T: dict[tuple[int, int], TruncatedSeries]) -> TruncatedSeries:
    return T[(1, 1)] * T[(2, 2)].shift_arg(-1) - T[(2, 1)] * T[(1, 2)].shift_arg(-1)


def sdet(S: dict[tuple[int, int], TruncatedSeries], second=(1, 2)) -> TruncatedSeries:
    """s11(-u) s22(u-1) - s12(-u) s_(second)(u-1)."""
    return (S[(1, 1)].negate_arg() * S[(2, 2)].shift_arg(-1)
            - S[(1, 2)].negate_arg() * S[second].shift_arg(-1))


def half_shift(x: TruncatedSeries) -> TruncatedSeries:
    """x(u - 1/2)."""
    return x.shift_arg(-HALF)


class RttModel:
    """Everything the rank-one checks need on the R-matrix side, to order N."""

    def __init__(self, order: int, budget: int | None = None):
        self.N = order
        self.A = RttGl2(budget if budget is not None else 2 * order + 2)
        self.T = self.A.T(order)
        self.gauss = gauss_decompose(self.T)
        self.S = s_matrix(self.T)
        self.sgauss = gauss_decompose(self.S)
        g = self.gauss
        self.x_plus = half_shift(g.F)
        self.x_minus = half_shift(g.E)
        self.xi = half_shift(g.D1inv * g.D2)
        sg = self.sgauss
        self.b = half_shift(sg.F)
        self.h = half_shift(sg.D1inv * sg.D2)

    # Drinfeld-style coefficients: x_r at u^{-r-1}
    def drinfeld_gen(self, kind: str, r: int) -> PbwElement:
        if r + 1 > self.N:
            raise BudgetExceeded(f"{kind}_{r} beyond series order {self.N}")
        src = {"x+": self.x_plus, "x-": self.x_minus, "xi": self.xi}[kind]
        return src[r + 1]

    def b_coeff(self, r: int) -> PbwElement:
        if r < 0:
            return self.A.zero()
        if r + 1 > self.N:
            raise BudgetExceeded(f"b_{r} beyond series order {self.N}")
        return self.b[r + 1]

    def h_coeff(self, k: int) -> PbwElement:
        """h_k with h_{-1} = 1; the even coefficients are checked, not assumed."""
        if k == -1:
            return self.A.one()
        if k < -1:
            return self.A.zero()
        if k + 1 > self.N:
            raise BudgetExceeded(f"h_{k} beyond series order {self.N}")
        return self.h[k + 1]
