"""Dense matrices over the scalar field, for representation oracles."""


def zeros(n):
    return [[0] * n for _ in range(n)]


def eye(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mul(x, y):
    n = len(x)
    out = zeros(n)
    for i in range(n):
        xi = x[i]
        for k in range(n):
            if xi[k]:
                a, yk = xi[k], y[k]
                row = out[i]
                for j in range(n):
                    if yk[j]:
                        row[j] = row[j] + a * yk[j]
    return out


def add(*ms):
    n = len(ms[0])
    out = zeros(n)
    for m in ms:
        for i in range(n):
            for j in range(n):
                out[i][j] = out[i][j] + m[i][j]
    return out


def scale(c, m):
    return [[c * v for v in row] for row in m]


def comm(x, y):
    return add(mul(x, y), scale(-1, mul(y, x)))


def anti(x, y):
    return add(mul(x, y), mul(y, x))


def is_zero(m):
    return all(not v for row in m for v in row)


def adjoint(cb):
    """ad of every basis vector, built from the bracket table alone."""
    n = cb.dim
    out = []
    for b in range(n):
        m = zeros(n)
        for c in range(n):
            for k, v in cb.bracket_basis(b, c).items():
                m[k][c] = v
        out.append(m)
    return out


def image(e, mats):
    """Image of a PbwElement whose generators all have matrices."""
    n = len(mats[0])
    out = zeros(n)
    for mono, c in e.terms.items():
        p = eye(n)
        for g in mono:
            p = mul(p, mats[g])
        out = add(out, scale(c, p))
    return out
