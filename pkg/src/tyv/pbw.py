"""Normal-form engine for filtered algebras with an ordered PBW basis.

An algebra is described by a totally ordered generator table and a
commutator oracle ``bracket(alg, a, b)`` for ``a > b`` that returns the
normal form of ``[g_a, g_b]``.  Elements are finite sums of ordered
monomials (non-decreasing tuples of generator indices) with exact
coefficients.  Products are straightened by the rewrite

    ... g_a g_b ...  ->  ... g_b g_a ...  +  ... [g_a, g_b] ...   (a > b)

with memoization on (monomial, generator) pairs.
"""

from __future__ import annotations

import random
import sys
from bisect import bisect_left
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from . import field as kf
from .field import Scalar
from .rootdata import ChevalleyBasis, GElem

Mono = tuple[int, ...]
Terms = dict[Mono, Scalar]
Bracket = Callable[["PbwAlgebra", int, int], "Terms | PbwElement"]

sys.setrecursionlimit(max(sys.getrecursionlimit(), 50000))


class BudgetExceeded(RuntimeError):
    """A computation needed a generator outside the truncation budget."""


def _acc(out: Terms, mono: Mono, c: Scalar) -> None:
    v = out.get(mono)
    if v is None:
        out[mono] = c
    else:
        v = v + c
        if v == 0:
            del out[mono]
        else:
            out[mono] = v


def _clean(t: Terms) -> Terms:
    return {m: kf.normalize(c) for m, c in t.items() if c != 0}


class PbwAlgebra:
    def __init__(
        self,
        names: Sequence[Hashable],
        degrees: Sequence[int],
        weights: Sequence[tuple[int, ...]],
        bracket: Bracket,
        label: str = "",
    ):
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        if len(self.index) != len(self.names):
            raise ValueError("duplicate generator names")
        self.degrees = list(degrees)
        self.weights = [tuple(w) for w in weights]
        self._bracket = bracket
        self.label = label
        self._br: dict[tuple[int, int], Terms] = {}
        self._mg: dict[tuple[Mono, int], Terms] = {}
        self._mm: dict[tuple[Mono, Mono], Terms] = {}
        self.oracle_calls = 0

    # -- construction of elements --------------------------------------
    @property
    def ngens(self) -> int:
        return len(self.names)

    def element(self, terms: Terms) -> "PbwElement":
        return PbwElement(self, _clean(terms))

    def zero(self) -> "PbwElement":
        return PbwElement(self, {})

    def one(self) -> "PbwElement":
        return PbwElement(self, {(): 1})

    def scalar(self, c: Scalar) -> "PbwElement":
        return PbwElement(self, {(): c} if c != 0 else {})

    def gen(self, name: Hashable) -> "PbwElement":
        try:
            return PbwElement(self, {(self.index[name],): 1})
        except KeyError:
            raise BudgetExceeded(f"{self.label}: no generator {name!r}") from None

    def has(self, name: Hashable) -> bool:
        return name in self.index

    def word(self, names: Iterable[Hashable]) -> "PbwElement":
        """Normal form of an arbitrary (unsorted) word of generators."""
        out = self.one()
        for n in names:
            out = out * self.gen(n)
        return out

    # -- monomial data ---------------------------------------------------
    def mono_degree(self, m: Mono) -> int:
        return sum(self.degrees[g] for g in m)

    def mono_weight(self, m: Mono) -> tuple[int, ...]:
        w = [0] * len(self.weights[0]) if self.weights else []
        for g in m:
            for k, x in enumerate(self.weights[g]):
                w[k] += x
        return tuple(w)

    def mono_str(self, m: Mono) -> str:
        if not m:
            return "1"
        parts: list[str] = []
        k = 0
        while k < len(m):
            j = k
            while j < len(m) and m[j] == m[k]:
                j += 1
            name = str(self.names[m[k]])
            parts.append(name if j - k == 1 else f"{name}^{j - k}")
            k = j
        return "*".join(parts)

    # -- commutator oracle ----------------------------------------------
    def bracket_gens(self, a: int, b: int) -> Terms:
        if a == b:
            return {}
        if a < b:
            return {m: -c for m, c in self.bracket_gens(b, a).items()}
        key = (a, b)
        hit = self._br.get(key)
        if hit is not None:
            return hit
        self.oracle_calls += 1
        res = self._bracket(self, a, b)
        if isinstance(res, PbwElement):
            res = res.terms
        res = _clean(res)
        self._br[key] = res
        return res

    # -- straightening ---------------------------------------------------
    def _mul_mg(self, m: Mono, g: int) -> Terms:
        if not m or m[-1] <= g:
            return {m + (g,): 1}
        key = (m, g)
        hit = self._mg.get(key)
        if hit is not None:
            return hit
        a = m[-1]
        rest = m[:-1]
        out: Terms = {}
        # rest * g * a
        for mono, c in self._mul_mg(rest, g).items():
            for mono2, c2 in self._mul_mg(mono, a).items():
                _acc(out, mono2, c * c2)
        # rest * [a, g]
        for bm, bc in self.bracket_gens(a, g).items():
            for mono2, c2 in self._mul_mm(rest, bm).items():
                _acc(out, mono2, bc * c2)
        self._mg[key] = out
        return out

    def _mul_mm(self, m1: Mono, m2: Mono) -> Terms:
        if not m2:
            return {m1: 1}
        if not m1 or m1[-1] <= m2[0]:
            return {m1 + m2: 1}
        key = (m1, m2)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        cur: Terms = {m1: 1}
        for g in m2:
            nxt: Terms = {}
            for mono, c in cur.items():
                for mono2, c2 in self._mul_mg(mono, g).items():
                    _acc(nxt, mono2, c * c2)
            cur = nxt
        self._mm[key] = cur
        return cur

    def mul_terms(self, x: Terms, y: Terms) -> Terms:
        out: Terms = {}
        for m1, c1 in x.items():
            for m2, c2 in y.items():
                c = c1 * c2
                for m, c3 in self._mul_mm(m1, m2).items():
                    _acc(out, m, c * c3)
        return out

    def clear_caches(self) -> None:
        self._mg.clear()
        self._mm.clear()

    # -- expression trees -----------------------------------------------
    def evaluate(self, tree) -> "PbwElement":
        """Normal form of a raw expression tree.

        A tree is a generator name, a scalar, a PbwElement, or a list
        ``[op, arg, ...]`` with op one of ``"+"``, ``"*"``, ``"[,]"``, ``"{,}"``.
        """
        if isinstance(tree, PbwElement):
            return tree
        if isinstance(tree, list):
            op, *args = tree
            vals = [self.evaluate(a) for a in args]
            if op == "+":
                out = self.zero()
                for v in vals:
                    out = out + v
                return out
            if op == "*":
                out = self.one()
                for v in vals:
                    out = out * v
                return out
            if op == "[,]":
                return vals[0].commutator(vals[1])
            if op == "{,}":
                return vals[0].anticommutator(vals[1])
            raise ValueError(f"unknown operator {op!r}")
        if kf.is_scalar(tree) and tree not in self.index:
            return self.scalar(tree)
        return self.gen(tree)

    # -- self-checks -----------------------------------------------------
    def jacobi_failures(self, triples: Iterable[tuple[int, int, int]]) -> list[tuple[int, int, int]]:
        """Overlap ambiguities g_c g_b g_a (c > b > a) that fail to resolve."""
        bad = []
        for c, b, a in triples:
            gc, gb, ga = (PbwElement(self, {(i,): 1}) for i in (c, b, a))
            left = (gc * gb) * ga
            right = gc * (gb * ga)
            if left != right:
                bad.append((c, b, a))
            j = gc.commutator(gb.commutator(ga)) + gb.commutator(ga.commutator(gc)) + ga.commutator(gc.commutator(gb))
            if not j.is_zero():
                bad.append((c, b, a))
        return bad

    def confluence_trials(self, trials: int, length: int, rng: random.Random, pool: Sequence[int] | None = None) -> int:
        """Random words multiplied under two random bracketings; returns mismatches."""
        pool = list(pool if pool is not None else range(self.ngens))
        bad = 0
        for _ in range(trials):
            word = [PbwElement(self, {(rng.choice(pool),): 1}) for _ in range(length)]
            if _random_product(word, rng) != _random_product(word, rng):
                bad += 1
        return bad


def _random_product(items: list["PbwElement"], rng: random.Random) -> "PbwElement":
    if len(items) == 1:
        return items[0]
    k = rng.randrange(1, len(items))
    return _random_product(items[:k], rng) * _random_product(items[k:], rng)


class PbwElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: PbwAlgebra, terms: Terms):
        self.alg = alg
        self.terms = terms

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, o) -> "PbwElement | None":
        if isinstance(o, PbwElement):
            if o.alg is not self.alg:
                raise ValueError("elements of different algebras")
            return o
        if kf.is_scalar(o):
            return self.alg.scalar(o)
        return None

    def __add__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            _acc(out, m, c)
        return PbwElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return PbwElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if kf.is_scalar(o):
            if o == 0:
                return PbwElement(self.alg, {})
            return PbwElement(self.alg, {m: kf.normalize(c * o) for m, c in self.terms.items()})
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return PbwElement(self.alg, _clean(self.alg.mul_terms(self.terms, o.terms)))

    def __rmul__(self, o):
        if kf.is_scalar(o):
            return self * o
        return NotImplemented

    def __truediv__(self, o):
        if not kf.is_scalar(o):
            return NotImplemented
        inv = kf.lift(o).inverse() if isinstance(o, kf.QSqrt) else kf.Fraction(1) / o
        return self * inv

    def __pow__(self, n: int):
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, o: "PbwElement") -> "PbwElement":
        return self * o - o * self

    def anticommutator(self, o: "PbwElement") -> "PbwElement":
        return self * o + o * self

    # -- inspection -------------------------------------------------------
    def __eq__(self, o):
        o = self._coerce(o)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    def __hash__(self):
        raise TypeError("PbwElement is unhashable")

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Mono, Scalar]]:
        return iter(self.terms.items())

    def coefficient(self, mono: Mono) -> Scalar:
        return self.terms.get(mono, 0)

    def scalar_part(self) -> Scalar:
        return self.terms.get((), 0)

    def is_scalar(self) -> bool:
        return all(m == () for m in self.terms)

    def degree(self) -> int:
        return max((self.alg.mono_degree(m) for m in self.terms), default=-1)

    def weight_filter(self, pred: Callable[[tuple[int, ...]], bool]) -> "PbwElement":
        return PbwElement(self.alg, {m: c for m, c in self.terms.items() if pred(self.alg.mono_weight(m))})

    def filter(self, pred: Callable[[Mono], bool]) -> "PbwElement":
        return PbwElement(self.alg, {m: c for m, c in self.terms.items() if pred(m)})

    def top_degree_part(self) -> "PbwElement":
        d = self.degree()
        return self.filter(lambda m: self.alg.mono_degree(m) == d)

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        return " + ".join(f"({c})*{self.alg.mono_str(m)}" for m, c in items)

    def summary(self, limit: int = 6) -> dict:
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        return {
            "terms": len(items),
            "sample": [f"({c})*{self.alg.mono_str(m)}" for m, c in items[:limit]],
        }


# ---------------------------------------------------------------------------
# Homomorphisms


def apply_hom(
    x: PbwElement,
    images: Callable[[int], PbwElement],
    target: PbwAlgebra,
    anti: bool = False,
    memo: dict | None = None,
) -> PbwElement:
    """Image of ``x`` under the (anti-)homomorphism fixed by generator images."""
    memo = {} if memo is None else memo
    out = target.zero()

    def mono_image(m: Mono) -> PbwElement:
        if m in memo:
            return memo[m]
        if not m:
            val = target.one()
        elif anti:
            val = images(m[-1]) * mono_image(m[:-1])
        else:
            val = mono_image(m[:-1]) * images(m[-1])
        memo[m] = val
        return val

    for m, c in x.terms.items():
        out = out + mono_image(m) * c
    return out


# ---------------------------------------------------------------------------
# Tensor squares


class TensorSquare(PbwAlgebra):
    """A (x) A on the doubled generator table; left factors precede right ones."""

    def __init__(self, base: PbwAlgebra):
        n = base.ngens
        self.base = base
        self.n = n
        names = [("L", x) for x in base.names] + [("R", x) for x in base.names]

        def br(alg, a, b):
            if a >= n and b >= n:
                return {tuple(g + n for g in m): c for m, c in base.bracket_gens(a - n, b - n).items()}
            if a < n and b < n:
                return base.bracket_gens(a, b)
            return {}

        super().__init__(names, base.degrees * 2, base.weights * 2, br, label=f"{base.label}^(x)2")

    def split(self, m: Mono) -> tuple[Mono, Mono]:
        k = bisect_left(m, self.n)
        return m[:k], tuple(g - self.n for g in m[k:])

    def join(self, left: Mono, right: Mono) -> Mono:
        return left + tuple(g + self.n for g in right)

    def _mul_mm(self, m1: Mono, m2: Mono) -> Terms:
        if not m2:
            return {m1: 1}
        if not m1 or m1[-1] <= m2[0]:
            return {m1 + m2: 1}
        key = (m1, m2)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        l1, r1 = self.split(m1)
        l2, r2 = self.split(m2)
        lp = self.base._mul_mm(l1, l2)
        rp = self.base._mul_mm(r1, r2)
        out: Terms = {}
        for lm, lc in lp.items():
            for rm, rc in rp.items():
                _acc(out, self.join(lm, rm), lc * rc)
        self._mm[key] = out
        return out

    def tensor(self, a: PbwElement, b: PbwElement) -> PbwElement:
        out: Terms = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                _acc(out, self.join(ma, mb), ca * cb)
        return PbwElement(self, _clean(out))

    def left(self, a: PbwElement) -> PbwElement:
        return self.tensor(a, self.base.one())

    def right(self, b: PbwElement) -> PbwElement:
        return self.tensor(self.base.one(), b)

    def factors(self, x: PbwElement) -> Iterator[tuple[Mono, Mono, Scalar]]:
        for m, c in x.terms.items():
            l, r = self.split(m)
            yield l, r, c

    def swap(self, x: PbwElement) -> PbwElement:
        out: Terms = {}
        for l, r, c in self.factors(x):
            _acc(out, self.join(r, l), c)
        return PbwElement(self, out)

    def cross_commutation_failures(self) -> int:
        bad = 0
        for a in range(self.n):
            for b in range(self.n):
                x = self.gen(("L", self.base.names[a]))
                y = self.gen(("R", self.base.names[b]))
                if x * y != y * x:
                    bad += 1
        return bad


# ---------------------------------------------------------------------------
# Current algebras U(g[z]/z^{D+1})


class CurrentAlgebra(PbwAlgebra):
    """U(g[z]/z^{D+1}); generator (b, r) is basis vector b of g times z^r."""

    def __init__(self, cb: ChevalleyBasis, D: int):
        self.cb = cb
        self.D = D
        names = [(b, r) for b in range(cb.dim) for r in range(D + 1)]
        degrees = [r for _, r in names]
        weights = [cb.weight(b) for b, _ in names]

        def br(alg, a, b):
            (x, r), (y, s) = alg.names[a], alg.names[b]
            if r + s > D:
                return {}
            return {(alg.index[(c, r + s)],): v for c, v in cb.bracket_basis(x, y).items()}

        super().__init__(names, degrees, weights, br, label=f"U({cb.rs.lie_type}[z]/z^{D + 1})")

    def lie(self, x: GElem, r: int = 0) -> PbwElement:
        """Image of x z^r (zero beyond the truncation)."""
        if r > self.D or r < 0:
            return self.zero()
        return self.element({(self.index[(b, r)],): c for b, c in x.items()})

    def xp(self, k: int, r: int = 0) -> PbwElement:
        return self.lie({self.cb.xp(k): 1}, r)

    def xm(self, k: int, r: int = 0) -> PbwElement:
        return self.lie({self.cb.xm(k): 1}, r)

    def xi(self, i: int, r: int = 0) -> PbwElement:
        return self.lie({self.cb.h(i): 1}, r)

    def mono_str(self, m: Mono) -> str:
        if not m:
            return "1"
        out = []
        for g in m:
            b, r = self.names[g]
            lab = self.cb.labels[b]
            out.append(lab if (r == 0 and self.D == 0) else f"{lab}z{r}")
        return "*".join(out)


def enveloping_algebra(cb: ChevalleyBasis) -> CurrentAlgebra:
    return CurrentAlgebra(cb, 0)


def to_lie(x: PbwElement) -> dict[tuple[int, int], Scalar] | None:
    """Coefficients of a linear element on generators, or None if nonlinear."""
    out = {}
    for m, c in x.terms.items():
        if len(m) != 1:
            return None
        out[x.alg.names[m[0]]] = c
    return out
