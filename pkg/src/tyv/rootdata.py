"""Root systems and normalized Chevalley bases of simple Lie algebras.

Normalization: short roots have squared length 2, so d_i = (a_i, a_i)/2 lies in
{1, 2, 3}.  Simple roots follow Bourbaki labelling.  The Gram matrix of the
invariant form on the Cartan subalgebra is ``d_i * c_ij``.

Basis of g: ``x_a^+``, ``x_a^-`` for positive roots ``a`` and ``xi_i`` for
simple indices, with

* ``xi_i = [x_i^+, x_i^-]`` and ``[xi_i, x_j^(+/-)] = +/- (a_i, a_j) x_j^(+/-)``,
* ``(x_a^+, x_a^-) = 1`` and ``(xi_i, xi_j) = (a_i, a_j)``,
* ``omega(x_a^(+/-)) = -x_a^(-/+)`` and ``omega(xi_i) = -xi_i`` is an automorphism.

Signs come from the extraspecial-pair construction (all extraspecial
constants positive); the Chevalley vectors ``e_a`` are then rescaled by
``sqrt(d_a)``, which is what forces coefficients into Q(sqrt2, sqrt3).
"""

from __future__ import annotations

import json
import logging
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from . import field as kf
from .field import Scalar

log = logging.getLogger(__name__)

NORMALIZATION = "short-roots-squared-length-2"
CACHE_VERSION = 1

Root = tuple[int, ...]
GElem = dict[int, Scalar]


class LieTypeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Cartan data


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise LieTypeError(f"cannot parse Lie type {text!r}")
        family, rank = m.group(1).upper(), int(m.group(2))
        ok = {
            "A": rank >= 1,
            "B": rank >= 2,
            "C": rank >= 2,
            "D": rank >= 4,
            "E": 6 <= rank <= 8,
            "F": rank == 4,
            "G": rank == 2,
        }[family]
        if not ok:
            raise LieTypeError(f"no simple Lie algebra of type {family}{rank}")
        return cls(family, rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _symmetrizer_and_links(t: LieType) -> tuple[list[int], dict[tuple[int, int], int]]:
    """Half squared lengths and the nonzero off-diagonal Gram entries."""
    n, f = t.rank, t.family
    links: dict[tuple[int, int], int] = {}

    def chain(lo: int, hi: int, value: int) -> None:
        for i in range(lo, hi):
            links[(i, i + 1)] = value

    if f == "A":
        d = [1] * n
        chain(0, n - 1, -1)
    elif f == "B":
        d = [2] * (n - 1) + [1]
        chain(0, n - 1, -2)
    elif f == "C":
        d = [1] * (n - 1) + [2]
        chain(0, n - 1, -1)
        links[(n - 2, n - 1)] = -2
    elif f == "D":
        d = [1] * n
        chain(0, n - 2, -1)
        links[(n - 3, n - 1)] = -1
    elif f == "E":
        d = [1] * n
        links[(0, 2)] = -1
        links[(1, 3)] = -1
        chain(2, n - 1, -1)
    elif f == "F":
        d = [2, 2, 1, 1]
        links.update({(0, 1): -2, (1, 2): -2, (2, 3): -1})
    else:
        d = [1, 3]
        links[(0, 1)] = -3
    return d, links


# ---------------------------------------------------------------------------
# Root system


@dataclass
class RootSystem:
    lie_type: LieType
    d: list[int]
    gram: list[list[int]]
    cartan: list[list[int]]
    positive: list[Root]

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    @cached_property
    def index(self) -> dict[Root, int]:
        return {r: k for k, r in enumerate(self.positive)}

    @cached_property
    def roots(self) -> set[Root]:
        neg = {tuple(-c for c in r) for r in self.positive}
        return set(self.positive) | neg

    def simple(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def ip(self, r: Root, s: Root) -> int:
        g = self.gram
        return sum(r[i] * g[i][j] * s[j] for i in range(self.rank) for j in range(self.rank) if r[i] and s[j])

    def half_norm(self, r: Root) -> int:
        return self.ip(r, r) // 2

    def height(self, r: Root) -> int:
        return sum(r)

    def is_root(self, r: Root) -> bool:
        return r in self.roots

    def highest_root(self) -> Root:
        return self.positive[-1]

    def summary(self) -> dict:
        return {
            "type": str(self.lie_type),
            "rank": self.rank,
            "d": self.d,
            "cartan": self.cartan,
            "gram": self.gram,
            "n_positive": len(self.positive),
            "positive_roots": [list(r) for r in self.positive],
            "heights": [self.height(r) for r in self.positive],
            "highest_root": list(self.highest_root()),
        }


def _root_key(r: Root) -> tuple:
    return (sum(r), tuple(-c for c in r))


def build_root_system(lie_type: LieType | str) -> RootSystem:
    t = LieType.parse(lie_type) if isinstance(lie_type, str) else lie_type
    n = t.rank
    d, links = _symmetrizer_and_links(t)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2 * d[i]
    for (i, j), v in links.items():
        gram[i][j] = gram[j][i] = v
    cartan = [[gram[i][j] // d[i] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            assert cartan[i][j] * d[i] == gram[i][j]

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found: set[Root] = set(simple)
    layer = list(simple)
    while layer:
        nxt: list[Root] = []
        for b in layer:
            for i in range(n):
                # alpha_i-string through b: p - q = -<b, alpha_i^vee>
                pair = sum(b[j] * cartan[i][j] for j in range(n))
                q = 0
                probe = list(b)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in found:
                        q += 1
                    else:
                        break
                if q - pair > 0:
                    c = list(b)
                    c[i] += 1
                    c = tuple(c)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
        layer = nxt
    positive = sorted(found, key=_root_key)
    return RootSystem(t, d, gram, cartan, positive)


# ---------------------------------------------------------------------------
# Chevalley structure constants (extraspecial pairs)


def _neg(r: Root) -> Root:
    return tuple(-c for c in r)


def _add(r: Root, s: Root) -> Root:
    return tuple(a + b for a, b in zip(r, s))


def _positive(r: Root) -> bool:
    return any(c > 0 for c in r)


class _StructureConstants:
    """Integer constants N_{r,s} of a Chevalley basis with N_{-r,-s} = -N_{r,s}."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.order = {r: k for k, r in enumerate(rs.positive)}
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        for xi in rs.positive:
            for a in rs.positive:
                b = tuple(x - y for x, y in zip(xi, a))
                if rs.is_root(b) and _positive(b):
                    self.extraspecial[xi] = (a, b)
                    break
        self.memo: dict[tuple[Root, Root], int] = {}

    def p(self, r: Root, s: Root) -> int:
        k = 0
        probe = s
        while True:
            probe = tuple(x - y for x, y in zip(probe, r))
            if not self.rs.is_root(probe):
                return k
            k += 1

    def N(self, r: Root, s: Root) -> int:
        key = (r, s)
        if key in self.memo:
            return self.memo[key]
        val = self._compute(r, s)
        self.memo[key] = val
        return val

    def _compute(self, r: Root, s: Root) -> int:
        rs = self.rs
        t = _add(r, s)
        if not rs.is_root(t):
            return 0
        pr, ps = _positive(r), _positive(s)
        if pr and ps:
            if self.order[r] > self.order[s]:
                return -self.N(s, r)
            a, b = self.extraspecial[t]
            if (r, s) == (a, b):
                return self.p(a, b) + 1
            # four-root identity with r + s - a - b = 0
            total = Fraction(0)
            sa = tuple(x - y for x, y in zip(s, a))
            if rs.is_root(sa):
                total += Fraction(self.N(s, _neg(a)) * self.N(r, _neg(b)), rs.ip(sa, sa))
            ra = tuple(x - y for x, y in zip(r, a))
            if rs.is_root(ra):
                total += Fraction(self.N(_neg(a), r) * self.N(s, _neg(b)), rs.ip(ra, ra))
            val = total * rs.ip(t, t) / self.N(a, b)
            assert val.denominator == 1
            return int(val)
        if not pr and not ps:
            return -self.N(_neg(r), _neg(s))
        # mixed signs: N_{r,s}/(u,u) = N_{s,u}/(r,r) = N_{u,r}/(s,s), u = -(r+s)
        u = _neg(t)
        tt = rs.ip(t, t)
        if _positive(u) == _positive(s):
            val = Fraction(tt * self.N(s, u), rs.ip(r, r))
        else:
            val = Fraction(tt * self.N(u, r), rs.ip(s, s))
        assert val.denominator == 1
        return int(val)


# ---------------------------------------------------------------------------
# Normalized basis


@dataclass
class ChevalleyBasis:
    """Bracket table of g in the normalized basis.

    Basis order: negative root vectors (by height, then root index), the
    Cartan elements xi_1..xi_n, then positive root vectors.
    """

    rs: RootSystem
    labels: list[str]
    kinds: list[tuple[str, int]]  # ('-', k) | ('h', i) | ('+', k)
    table: dict[tuple[int, int], GElem]
    eta: dict[tuple[Root, Root], Scalar]
    cache_status: str = "disabled"
    _index: dict[tuple[str, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self._index = {k: i for i, k in enumerate(self.kinds)}

    @property
    def dim(self) -> int:
        return len(self.labels)

    # index helpers
    def xp(self, k: int) -> int:
        return self._index[("+", k)]

    def xm(self, k: int) -> int:
        return self._index[("-", k)]

    def h(self, i: int) -> int:
        return self._index[("h", i)]

    def root_vector(self, r: Root) -> int:
        if _positive(r):
            return self.xp(self.rs.index[r])
        return self.xm(self.rs.index[_neg(r)])

    def weight(self, b: int) -> Root:
        kind, k = self.kinds[b]
        if kind == "h":
            return (0,) * self.rs.rank
        r = self.rs.positive[k]
        return r if kind == "+" else _neg(r)

    def height(self, b: int) -> int:
        return sum(self.weight(b))

    def bracket_basis(self, a: int, b: int) -> GElem:
        return self.table.get((a, b), {})

    def bracket(self, x: GElem, y: GElem) -> GElem:
        out: GElem = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, cc in self.table.get((a, b), {}).items():
                    out[c] = out.get(c, 0) + ca * cb * cc
        return {k: kf.normalize(v) for k, v in out.items() if v != 0}

    def form_basis(self, a: int, b: int) -> Scalar:
        ka, kb = self.kinds[a], self.kinds[b]
        if ka[0] == "h" and kb[0] == "h":
            return self.rs.gram[ka[1]][kb[1]]
        if {ka[0], kb[0]} == {"+", "-"} and ka[1] == kb[1]:
            return 1
        return 0

    def form(self, x: GElem, y: GElem) -> Scalar:
        out: Scalar = 0
        for a, ca in x.items():
            for b, cb in y.items():
                f = self.form_basis(a, b)
                if f:
                    out = out + ca * cb * f
        return kf.normalize(out)

    def omega_basis(self, a: int) -> tuple[int, Scalar]:
        kind, k = self.kinds[a]
        if kind == "h":
            return a, -1
        other = "-" if kind == "+" else "+"
        return self._index[(other, k)], -1

    def omega(self, x: GElem) -> GElem:
        out: GElem = {}
        for a, c in x.items():
            b, s = self.omega_basis(a)
            out[b] = out.get(b, 0) + s * c
        return out

    def b_vector(self, k: int) -> GElem:
        """x_a^+ - x_a^- spanning the fixed points of omega."""
        return {self.xp(k): 1, self.xm(k): -1}

    def y_vector(self, k: int) -> GElem:
        return {self.xp(k): 1, self.xm(k): 1}

    def k_basis(self) -> list[GElem]:
        return [self.b_vector(k) for k in range(len(self.rs.positive))]

    def p_basis(self) -> list[GElem]:
        hs = [{self.h(i): 1} for i in range(self.rs.rank)]
        return [self.y_vector(k) for k in range(len(self.rs.positive))] + hs

    def coroot_combination(self, k: int) -> GElem:
        """[x_a^+, x_a^-] = sum_j k_j xi_j for a = sum_j k_j a_j."""
        r = self.rs.positive[k]
        return {self.h(j): c for j, c in enumerate(r) if c}


def build_chevalley(lie_type: LieType | str, use_cache: bool = False) -> ChevalleyBasis:
    rs = build_root_system(lie_type)
    n = rs.rank
    sc = _StructureConstants(rs)
    npos = len(rs.positive)

    kinds: list[tuple[str, int]] = []
    neg_order = sorted(range(npos), key=lambda k: _root_key(rs.positive[k]))
    kinds += [("-", k) for k in neg_order]
    kinds += [("h", i) for i in range(n)]
    kinds += [("+", k) for k in neg_order]
    index = {kd: i for i, kd in enumerate(kinds)}

    def label(kd: tuple[str, int]) -> str:
        if kd[0] == "h":
            return f"xi{kd[1] + 1}"
        r = "".join(str(c) for c in rs.positive[kd[1]])
        return f"x{kd[0]}[{r}]"

    signed = list(rs.positive) + [_neg(r) for r in rs.positive]

    def vec(r: Root) -> int:
        if _positive(r):
            return index[("+", rs.index[r])]
        return index[("-", rs.index[_neg(r)])]

    table: dict[tuple[int, int], GElem] = {}
    eta: dict[tuple[Root, Root], Scalar] = {}
    for r in signed:
        for s in signed:
            t = _add(r, s)
            if rs.is_root(t):
                N = sc.N(r, s)
                ratio = Fraction(rs.half_norm(r) * rs.half_norm(s), rs.half_norm(t))
                val = kf.normalize(kf.sqrt(ratio) * N)
                eta[(r, s)] = val
                table[(vec(r), vec(s))] = {vec(t): val}
            elif all(a + b == 0 for a, b in zip(r, s)) and _positive(r):
                co = {index[("h", j)]: c for j, c in enumerate(r) if c}
                table[(vec(r), vec(s))] = co
                table[(vec(s), vec(r))] = {k: -c for k, c in co.items()}
    for i in range(n):
        hi = index[("h", i)]
        for r in signed:
            w = sum(r[j] * rs.gram[i][j] for j in range(n))
            if w:
                table[(hi, vec(r))] = {vec(r): w}
                table[(vec(r), hi)] = {vec(r): -w}

    cb = ChevalleyBasis(rs, [label(k) for k in kinds], kinds, table, eta)
    if use_cache:
        cb.cache_status = _sync_cache(cb)
    return cb


# ---------------------------------------------------------------------------
# Consistency checks


def jacobi_failures(cb: ChevalleyBasis) -> list[tuple[int, int, int]]:
    bad = []
    dim = cb.dim
    for a in range(dim):
        for b in range(a + 1, dim):
            ab = cb.bracket_basis(a, b)
            for c in range(b + 1, dim):
                x = cb.bracket(ab, {c: 1})
                y = cb.bracket(cb.bracket_basis(b, c), {a: 1})
                z = cb.bracket(cb.bracket_basis(c, a), {b: 1})
                tot: GElem = {}
                for part in (x, y, z):
                    for k, v in part.items():
                        tot[k] = tot.get(k, 0) + v
                if any(v != 0 for v in tot.values()):
                    bad.append((a, b, c))
    return bad


def invariance_failures(cb: ChevalleyBasis) -> list[tuple[int, int, int]]:
    """([a,b],c) = (a,[b,c]) on all basis triples."""
    bad = []
    dim = cb.dim
    for a in range(dim):
        for b in range(dim):
            ab = cb.bracket_basis(a, b)
            for c in range(dim):
                lhs = cb.form(ab, {c: 1})
                rhs = cb.form({a: 1}, cb.bracket_basis(b, c))
                if lhs != rhs:
                    bad.append((a, b, c))
    return bad


def killing_matrix(cb: ChevalleyBasis) -> list[list[Scalar]]:
    dim = cb.dim
    ads = []
    for a in range(dim):
        m: dict[tuple[int, int], Scalar] = {}
        for b in range(dim):
            for c, v in cb.bracket_basis(a, b).items():
                m[(c, b)] = v
        ads.append(m)
    out = [[0] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            tr: Scalar = 0
            ma, mb = ads[a], ads[b]
            for (i, j), v in ma.items():
                w = mb.get((j, i))
                if w is not None:
                    tr = tr + v * w
            out[a][b] = kf.normalize(tr)
    return out


def killing_proportionality(cb: ChevalleyBasis) -> tuple[Scalar, bool]:
    """Killing form = c * declared form; returns (c, agreement)."""
    km = killing_matrix(cb)
    h0 = cb.h(0)
    c = km[h0][h0] / Fraction(cb.rs.gram[0][0])
    ok = True
    for a in range(cb.dim):
        for b in range(cb.dim):
            if km[a][b] != c * cb.form_basis(a, b):
                ok = False
    return kf.normalize(c), ok


def eta_symmetry_failures(cb: ChevalleyBasis) -> list[str]:
    """eta_{a,b} = -eta_{b,a} = eta_{-b,-a} = eta_{-a,a+b} for positive a, b."""
    rs = cb.rs
    bad = []
    for a in rs.positive:
        for b in rs.positive:
            t = _add(a, b)
            if not rs.is_root(t):
                continue
            e = cb.eta[(a, b)]
            if cb.eta[(b, a)] != -e:
                bad.append(f"antisym {a} {b}")
            if cb.eta[(_neg(b), _neg(a))] != e:
                bad.append(f"neg {a} {b}")
            if cb.eta[(_neg(a), t)] != e:
                bad.append(f"shift {a} {b}")
    return bad


def omega_failures(cb: ChevalleyBasis) -> list[tuple[int, int]]:
    bad = []
    for a in range(cb.dim):
        for b in range(cb.dim):
            lhs = cb.omega(cb.bracket_basis(a, b))
            oa, sa = cb.omega_basis(a)
            ob, sb = cb.omega_basis(b)
            rhs = {k: v * sa * sb for k, v in cb.bracket_basis(oa, ob).items()}
            keys = set(lhs) | set(rhs)
            if any(lhs.get(k, 0) != rhs.get(k, 0) for k in keys):
                bad.append((a, b))
    return bad


def _in_span(cb: ChevalleyBasis, x: GElem, which: str) -> bool:
    # k is spanned by x^+ - x^-, p by x^+ + x^- and Cartan
    for a, c in x.items():
        kind, k = cb.kinds[a]
        if kind == "h":
            if which == "k" and c != 0:
                return False
            continue
        other = cb._index[("-" if kind == "+" else "+", k)]
        partner = x.get(other, 0)
        if which == "k" and partner != -c:
            return False
        if which == "p" and partner != c:
            return False
    return True


def symmetric_pair_failures(cb: ChevalleyBasis) -> list[str]:
    """[k,k] in k, [k,p] in p, [p,p] in k."""
    bad = []
    kb, pb = cb.k_basis(), cb.p_basis()
    for name, xs, ys, target in (("kk", kb, kb, "k"), ("kp", kb, pb, "p"), ("pp", pb, pb, "k")):
        for x in xs:
            for y in ys:
                if not _in_span(cb, cb.bracket(x, y), target):
                    bad.append(name)
    return bad


# ---------------------------------------------------------------------------
# Cache


def cache_dir() -> Path:
    env = os.environ.get("TYV_CACHE_DIR")
    if env:
        return Path(env)
    import platformdirs

    return Path(platformdirs.user_cache_dir("tyv"))


def _cache_payload(cb: ChevalleyBasis) -> dict:
    t = cb.rs.lie_type
    return {
        "family": t.family,
        "rank": t.rank,
        "normalization": NORMALIZATION,
        "version": CACHE_VERSION,
        "eta": sorted([list(r), list(s), kf.to_json(v)] for (r, s), v in cb.eta.items()),
    }


def _sync_cache(cb: ChevalleyBasis) -> str:
    t = cb.rs.lie_type
    path = cache_dir() / f"{t.family}{t.rank}-{NORMALIZATION}-v{CACHE_VERSION}.json"
    payload = _cache_payload(cb)
    status = "written"
    if path.exists():
        try:
            stored = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            stored = None
        if stored == payload:
            return "verified"
        log.warning("structure-constant cache %s disagrees with rebuild; rewriting", path)
        status = "mismatch-rebuilt"
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload))
    except OSError as exc:
        log.warning("cannot write cache %s: %s", path, exc)
        return "unwritable"
    return status
