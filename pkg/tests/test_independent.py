"""Independent route for the adjoint cone of sl3: matrices over sympy,
no grading, no shared code with the oracle beyond the final comparison."""

import itertools

import pytest

sp = pytest.importorskip("sympy")

from wonderful.monoids import make_monoid  # noqa: E402
from wonderful.oracle import obstruction, tangent_space  # noqa: E402


def E(i, j):
    m = sp.zeros(3)
    m[i, j] = 1
    return m


BASIS = [E(0, 1), E(1, 2), E(0, 2), E(1, 0), E(2, 1), E(2, 0), E(0, 0) - E(1, 1), E(1, 1) - E(2, 2)]
FLAT = sp.Matrix([list(b) for b in BASIS]).T


def coords(m):
    return (FLAT.T * FLAT).inv() * FLAT.T * sp.Matrix(list(m))


def ad(x):
    return sp.Matrix.hstack(*[coords(x * b - b * x) for b in BASIS])


@pytest.fixture(scope="module")
def sl3():
    v = sp.zeros(8, 1)
    v[2] = 1  # E13 spans the highest weight line of the adjoint module
    gv = [E(0, 1), E(1, 2), E(0, 2), sp.diag(1, -2, 1)]
    acts = [ad(x) for x in gv]
    assert all((a * v).is_zero_matrix for a in acts)
    image = sp.Matrix.hstack(*[ad(b) * v for b in BASIS])
    gdotv = image.columnspace()
    assert len(gdotv) + len(gv) == 8
    return v, gv, acts, sp.Matrix.hstack(*gdotv)


def _h1(sl3):
    """Cocycles phi: g_v -> V modulo g.v, and the trivial ones."""
    v, gv, acts, P = sl3
    k = len(gv)
    phis = sp.symbols("p0:32")

    def phi(i):
        return sp.Matrix(phis[8 * i:8 * i + 8])

    flat_gv = sp.Matrix.hstack(*[sp.Matrix(list(x)) for x in gv])
    eqs, extra = [], []
    for i, j in itertools.combinations(range(k), 2):
        c = gv[i] * gv[j] - gv[j] * gv[i]
        sol = flat_gv.solve_least_squares(sp.Matrix(list(c)))
        assert flat_gv * sol == sp.Matrix(list(c))
        ts = sp.symbols(f"t{i}{j}_0:{P.shape[1]}")
        extra += ts
        rhs = sum((sol[m] * phi(m) for m in range(k)), sp.zeros(8, 1))
        eqs += list(acts[i] * phi(j) - acts[j] * phi(i) - rhs - P * sp.Matrix(ts))
    unknowns = list(phis) + extra
    M = sp.Matrix([[sp.diff(e, x) for x in unknowns] for e in eqs])
    Z = sp.Matrix.hstack(*[x[:32, :] for x in M.nullspace()])
    trivial = []
    for i in range(k):
        for c in range(P.shape[1]):
            w = sp.zeros(32, 1)
            w[8 * i:8 * i + 8, 0] = P[:, c]
            trivial.append(w)
    for b in range(8):
        e = sp.zeros(8, 1)
        e[b] = 1
        w = sp.zeros(32, 1)
        for i in range(k):
            w[8 * i:8 * i + 8, 0] = acts[i] * e
        trivial.append(w)
    T = sp.Matrix.hstack(*trivial)
    return Z, T


def test_tangent_space_sl3(sl3):
    v, gv, acts, P = sl3
    # w with x.w in g.v for all x in g_v, modulo g.v
    ws = sp.symbols("w0:8")
    w = sp.Matrix(ws)
    eqs, extra = [], []
    for i, a in enumerate(acts):
        ts = sp.symbols(f"s{i}_0:{P.shape[1]}")
        extra += ts
        eqs += list(a * w - P * sp.Matrix(ts))
    unknowns = list(ws) + extra
    M = sp.Matrix([[sp.diff(e, x) for x in unknowns] for e in eqs])
    fixed = sp.Matrix.hstack(*[x[:8, :] for x in M.nullspace()])
    dim = sp.Matrix.hstack(fixed, P).rank() - P.rank()
    rep = tangent_space(make_monoid("A2", [[1, 1]]))
    assert dim == rep.lie_dimension == 1


def test_h1_and_obstruction_sl3(sl3):
    v, gv, acts, P = sl3
    Z, T = _h1(sl3)
    h1_dim = sp.Matrix.hstack(Z, T).rank() - T.rank()
    # Cartan component V(2 theta) inside S^2 V as symmetric matrices
    adall = [ad(b) for b in BASIS]

    def act2(a, S):
        return a * S + S * a.T

    def vec_s(S):
        return sp.Matrix([S[i, j] for i in range(8) for j in range(i, 8)])

    cur = vec_s(v * v.T)
    frontier = [v * v.T]
    while frontier:
        nxt = []
        for S in frontier:
            for a in adall:
                S2 = act2(a, S)
                t = sp.Matrix.hstack(cur, vec_s(S2))
                if t.rank() > cur.rank():
                    cur = t
                    nxt.append(S2)
        frontier = nxt
    assert cur.shape[1] == 27
    # phi in ker f: phi(x).v = x.m modulo V(2 theta) for one m in S^2 V
    ms = sp.symbols("m0:36")
    mS = sp.zeros(8)
    it = iter(ms)
    for i in range(8):
        for j in range(i, 8):
            mS[i, j] = mS[j, i] = next(it)
    zs = sp.symbols(f"z0:{Z.shape[1]}")
    phi = Z * sp.Matrix(zs)
    eqs, extra = [], []
    for i, a in enumerate(acts):
        p = phi[8 * i:8 * i + 8, 0]
        prod = (p * v.T + v * p.T) / 2
        us = sp.symbols(f"u{i}_0:{cur.shape[1]}")
        extra += us
        eqs += list(vec_s(act2(a, mS)) - vec_s(prod) - cur * sp.Matrix(us))
    unknowns = list(zs) + list(ms) + extra
    M = sp.Matrix([[sp.diff(e, x) for x in unknowns] for e in eqs])
    ns = M.nullspace()
    K = sp.Matrix.hstack(*[Z * x[:len(zs), :] for x in ns])
    ker_dim = sp.Matrix.hstack(K, T).rank() - T.rank()
    o = obstruction(make_monoid("A2", [[1, 1]]))
    assert h1_dim == o.h1_lie_dim == 2
    assert ker_dim == o.lie_kernel_dim == 1
