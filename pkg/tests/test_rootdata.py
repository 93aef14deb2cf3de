import json
from fractions import Fraction
from itertools import product

import pytest

from tyv import field as kf
from tyv import rootdata
from tyv.rootdata import LieType, LieTypeError, build_chevalley, build_root_system

from conftest import ACCEPTANCE_TYPES


def test_rank_one_data():
    rs = build_root_system("A1")
    assert rs.positive == [(1,)]
    assert rs.gram == [[2]]
    assert rs.d == [1]


def test_c2_data():
    rs = build_root_system("C2")
    assert set(rs.positive) == {(1, 0), (0, 1), (1, 1), (2, 1)}
    assert rs.d == [1, 2]


def test_g2_data():
    rs = build_root_system("G2")
    assert len(rs.positive) == 6
    assert rs.d == [1, 3]


def test_inner_products():
    assert build_root_system("A2").ip((1, 0), (0, 1)) == -1
    # B2 with the first simple root long
    b2 = build_root_system("B2")
    assert b2.half_norm((1, 0)) == 2
    assert b2.ip((1, 0), (0, 1)) == -2


@pytest.mark.parametrize("t", ACCEPTANCE_TYPES)
def test_root_norms_are_twice_d(t):
    rs = build_root_system(t)
    short = min(rs.half_norm(r) for r in rs.positive)
    assert short == 1
    for r in rs.positive:
        assert rs.ip(r, r) == 2 * rs.half_norm(r)
    for i in range(rs.rank):
        assert rs.ip(rs.simple(i), rs.simple(i)) == 2 * rs.d[i]


@pytest.mark.parametrize("text, expected", [("A2", "A2"), ("c_3", "C3"), (" g2 ", "G2")])
def test_parse(text, expected):
    assert str(LieType.parse(text)) == expected


@pytest.mark.parametrize("text", ["B1", "D3", "G3", "X2", "A", "F5"])
def test_parse_rejects(text):
    with pytest.raises(LieTypeError):
        LieType.parse(text)


def test_a2_sign_convention(chevalley):
    assert chevalley("A2").eta[((1, 0), (0, 1))] == 1


@pytest.mark.parametrize("t", ACCEPTANCE_TYPES)
def test_eta_vanishes_off_roots(chevalley, t):
    cb = chevalley(t)
    for (r, s) in cb.eta:
        assert cb.rs.is_root(tuple(a + b for a, b in zip(r, s)))


def test_b2_eta_symmetry_table(chevalley):
    cb = chevalley("B2")
    rs = cb.rs
    pairs = 0
    for a, b in product(rs.roots, repeat=2):
        if (a, b) in cb.eta:
            neg = (tuple(-c for c in b), tuple(-c for c in a))
            assert cb.eta[(a, b)] == cb.eta[neg]
            pairs += 1
    assert pairs == len(cb.eta)
    assert sum(1 for a, b in cb.eta if all(c >= 0 for c in a + b)) == 4


def _string_below(rs, a, b):
    p = 0
    while rs.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
        p += 1
    return p


@pytest.mark.parametrize("t", ACCEPTANCE_TYPES)
def test_eta_magnitude_from_root_strings(chevalley, t):
    """eta^2 = d_a d_b (p+1)^2 / d_{a+b}, from the root string of b through a."""
    cb = chevalley(t)
    rs = cb.rs
    for (a, b), e in cb.eta.items():
        s = tuple(x + y for x, y in zip(a, b))
        p = _string_below(rs, a, b)
        expected = Fraction(rs.half_norm(a) * rs.half_norm(b), rs.half_norm(s)) * (p + 1) ** 2
        assert e * e == expected


def _adjoint(cb, b):
    n = cb.dim
    m = [[0] * n for _ in range(n)]
    for c in range(n):
        for k, v in cb.bracket_basis(b, c).items():
            m[k][c] = v
    return m


def _matmul(x, y):
    n = len(x)
    return [[sum(x[i][k] * y[k][j] for k in range(n) if x[i][k] and y[k][j]) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("t", ["A2", "B2", "G2"])
def test_adjoint_representation_oracle(chevalley, t):
    cb = chevalley(t)
    ads = [_adjoint(cb, b) for b in range(cb.dim)]
    n = cb.dim
    for a in range(n):
        for b in range(n):
            lhs = [[p - q for p, q in zip(r1, r2)] for r1, r2 in zip(_matmul(ads[a], ads[b]), _matmul(ads[b], ads[a]))]
            rhs = [[0] * n for _ in range(n)]
            for k, v in cb.bracket_basis(a, b).items():
                for i in range(n):
                    for j in range(n):
                        rhs[i][j] += v * ads[k][i][j]
            assert lhs == rhs


@pytest.mark.parametrize("t", ACCEPTANCE_TYPES)
def test_structural_invariants(chevalley, t):
    cb = chevalley(t)
    assert rootdata.jacobi_failures(cb) == []
    assert rootdata.eta_symmetry_failures(cb) == []
    assert rootdata.invariance_failures(cb) == []
    assert rootdata.omega_failures(cb) == []
    assert rootdata.symmetric_pair_failures(cb) == []
    assert rootdata.killing_proportionality(cb)[1]


def test_cartan_brackets(chevalley):
    cb = chevalley("C3")
    rs = cb.rs
    for i in range(rs.rank):
        xp, xm = cb.xp(rs.index[rs.simple(i)]), cb.xm(rs.index[rs.simple(i)])
        assert cb.bracket_basis(xp, xm) == {cb.h(i): 1}
        for j in range(rs.rank):
            xj = cb.xp(rs.index[rs.simple(j)])
            expected = {xj: rs.gram[i][j]} if rs.gram[i][j] else {}
            assert cb.bracket_basis(cb.h(i), xj) == expected
        assert cb.bracket_basis(xp, xp) == {}


def test_omega(chevalley):
    cb = chevalley("B3")
    for i in range(cb.rs.rank):
        assert cb.omega({cb.h(i): 1}) == {cb.h(i): -1}
    for b in range(cb.dim):
        assert cb.omega(cb.omega({b: 1})) == {b: 1}
    for k in range(len(cb.rs.positive)):
        bv, yv = cb.b_vector(k), cb.y_vector(k)
        assert cb.omega(bv) == bv
        assert cb.omega(yv) == {a: -c for a, c in yv.items()}


def test_cache_written_then_verified(tmp_path, monkeypatch):
    monkeypatch.setenv("TYV_CACHE_DIR", str(tmp_path))
    assert build_chevalley("B2", use_cache=True).cache_status == "written"
    assert build_chevalley("B2", use_cache=True).cache_status == "verified"


def test_cache_is_advisory(tmp_path, monkeypatch):
    monkeypatch.setenv("TYV_CACHE_DIR", str(tmp_path))
    build_chevalley("C2", use_cache=True)
    (path,) = tmp_path.glob("C2-*.json")
    doc = json.loads(path.read_text())
    doc["eta"][0][2] = kf.to_json(99)
    path.write_text(json.dumps(doc))
    cb = build_chevalley("C2", use_cache=True)
    assert cb.cache_status == "mismatch-rebuilt"
    assert rootdata.jacobi_failures(cb) == []
    assert build_chevalley("C2", use_cache=True).cache_status == "verified"
