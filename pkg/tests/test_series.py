from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from tyv.series import NotInvertible, RingMismatch, TruncatedSeries, iweight_eigenvalue

ORDER = 6
w = sympy.Symbol("w")  # w = 1/u
rat = st.fractions(min_value=-5, max_value=5, max_denominator=6)
coeffs = st.lists(rat, min_size=ORDER + 1, max_size=ORDER + 1)


def to_sympy(f: TruncatedSeries):
    return sum(sympy.Rational(c) * w ** k for k, c in enumerate(f.coeffs))


def from_sympy(expr, order=ORDER):
    s = sympy.series(expr, w, 0, order + 1).removeO()
    return TruncatedSeries([Fraction(str(s.coeff(w, k))) for k in range(order + 1)])


def test_product_example():
    a = Fraction(3, 7)
    f = TruncatedSeries([1, a, 0, 0])
    g = TruncatedSeries([1, -a, 0, 0])
    assert (f * g).coeffs == [1, 0, -a * a, 0]
    assert (f * TruncatedSeries.one(3)).equals(f)


def test_order_is_minimum():
    f, g = TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 1, 1, 1, 1])
    assert (f * g).order == 2
    assert (f + g).order == 2


def test_geometric_inverse():
    a = Fraction(2, 3)
    inv = TruncatedSeries([1, a, 0, 0]).invert()
    assert inv.coeffs == [1, -a, a ** 2, -a ** 3]
    assert TruncatedSeries.one(4).invert().equals(TruncatedSeries.one(4))


def test_not_invertible():
    with pytest.raises(NotInvertible):
        TruncatedSeries([0, 1, 2]).invert()


@given(coeffs)
def test_invert_matches_sympy(c):
    c[0] = c[0] or 1
    f = TruncatedSeries(c)
    assert f.invert().equals(from_sympy(1 / to_sympy(f)))
    assert f.invert().invert().equals(f)


@given(coeffs, coeffs)
def test_product_matches_sympy(c, d):
    f, g = TruncatedSeries(c), TruncatedSeries(d)
    assert (f * g).equals(from_sympy(sympy.expand(to_sympy(f) * to_sympy(g))))


@given(coeffs)
def test_negate_arg(c):
    f = TruncatedSeries(c)
    assert f.negate_arg().coeffs == [x * (-1) ** k for k, x in enumerate(c)]
    assert f.negate_arg().negate_arg().equals(f)


@given(coeffs, rat)
def test_shift_matches_sympy(c, shift):
    f = TruncatedSeries(c)
    # f(u + s) with u = 1/w: u^-k -> w^k / (1 + s w)^k
    expr = sum(sympy.Rational(x) * (w / (1 + sympy.Rational(shift) * w)) ** k for k, x in enumerate(c))
    assert f.shift_arg(shift).equals(from_sympy(expr))
    assert f.shift_arg(shift).shift_arg(-shift).equals(f)
    assert f.shift_arg(0).equals(f)


def test_shift_geometric_example():
    a, c = Fraction(5), Fraction(1, 2)
    f = TruncatedSeries([0, a, 0, 0, 0])
    assert f.shift_arg(c).coeffs == [0, a, -a * c, a * c * c, -a * c ** 3]


def test_generating_layout():
    f = TruncatedSeries.generating(lambda r: r + 10, 3, constant=1)
    assert f.coeffs == [1, 10, 11, 12]


def test_principal_part_and_div():
    f = TruncatedSeries([7, 1, 2, 3])
    assert f.div_u().coeffs[:4] == [0, 7, 1, 2]
    assert f.mul_u_principal().coeffs == [0, 2, 3]


def test_difference_orders_and_odd_part():
    f, g = TruncatedSeries([1, 0, 2, 0, 5]), TruncatedSeries([1, 0, 2, 1, 4])
    assert f.difference_orders(g) == [3, 4]
    assert f.odd_part_vanishes()
    assert not g.odd_part_vanishes()


def test_ring_mismatch(chevalley):
    from tyv.pbw import enveloping_algebra

    A = enveloping_algebra(chevalley("A1"))
    with pytest.raises(RingMismatch):
        TruncatedSeries.one(3, A) + TruncatedSeries.one(3)


def test_noncommutative_coefficients(chevalley):
    from tyv.pbw import enveloping_algebra

    A = enveloping_algebra(chevalley("A1"))
    xp = TruncatedSeries([A.zero(), A.xp(0), A.zero()], A)
    xm = TruncatedSeries([A.zero(), A.xm(0), A.zero()], A)
    assert xp.commutator(xm)[2] == A.xi(0)
    assert xp.anticommutator(xm)[2] == A.xp(0) * A.xm(0) + A.xm(0) * A.xp(0)
    one = TruncatedSeries.one(2, A)
    assert ((one + xp).invert() * (one + xp)).equals(one)


# --- the integral-weight eigenvalue expansion ------------------------------

u = sympy.Symbol("u")


def eigen_oracle(roots, d, order=ORDER):
    xi = sympy.Mul(*[u - sympy.Rational(a) for a in roots])
    xim = (-1) ** len(roots) * xi.subs(u, -u)
    h = sympy.Rational(d) / 2
    expr = xi.subs(u, u + h) * xim.subs(u, u - h) / (xi.subs(u, u - h) * xim.subs(u, u + h))
    return from_sympy(sympy.simplify(expr.subs(u, 1 / w)), order)


def test_eigen_trivial_cases():
    assert iweight_eigenvalue([], 1, ORDER).equals(TruncatedSeries.one(ORDER))
    assert iweight_eigenvalue([0], 1, ORDER).equals(TruncatedSeries.one(ORDER))
    a = Fraction(2, 5)
    assert iweight_eigenvalue([a, -a], 3, ORDER).equals(TruncatedSeries.one(ORDER))


def test_eigen_single_root():
    a = Fraction(1, 3)
    f = iweight_eigenvalue([a], 1, ORDER)
    assert f[1] == 0
    assert f[2] == 2 * a
    assert f[4] == 2 * a * (Fraction(1, 2) + a) ** 2


@given(st.lists(rat, max_size=3), st.sampled_from([1, 2, 3]))
def test_eigen_matches_rational_function(roots, d):
    f = iweight_eigenvalue(roots, d, ORDER)
    assert f.equals(eigen_oracle(roots, d))
    assert f.odd_part_vanishes()
    assert f[0] == 1
