from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wonderful.liealg import act, build_irreducible, cartan_kernel, lie_algebra, mat_apply
from wonderful.rootsystem import ResourceError, build_diagram

ALGEBRAS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "A1xA1", "A2xA1"]


@pytest.mark.parametrize("spec,dim", [("A1", 3), ("A2", 8), ("G2", 14), ("B3", 21), ("A1xA1", 6)])
def test_dimensions(spec, dim):
    assert lie_algebra(build_diagram(spec)).dim == dim


def test_sl2_brackets():
    L = lie_algebra(build_diagram("A1"))
    e, f, h = (L.index[lab] for lab in (("e", (1,)), ("f", (1,)), ("h", 0)))
    assert L.bracket({e: 1}, {f: 1}) == {h: 1}
    assert L.bracket({h: 1}, {e: 1}) == {e: 2}
    assert L.bracket({h: 1}, {f: 1}) == {f: -2}


@pytest.mark.parametrize("spec", ALGEBRAS)
def test_jacobi_exhaustive(spec):
    assert lie_algebra(build_diagram(spec)).jacobi_violations(limit=1) == []


@pytest.mark.parametrize("spec", ALGEBRAS)
def test_chevalley_relations(spec):
    d = build_diagram(spec)
    L = lie_algebra(d)
    for beta in d.positive_roots:
        e, f = L.index[("e", beta)], L.index[("f", beta)]
        cv = d.coroot_coeffs(beta)
        assert L.bracket({e: 1}, {f: 1}) == {L.index[("h", k)]: c for k, c in enumerate(cv) if c}
        for k in d.nodes:
            assert L.bracket({L.index[("h", k)]: 1}, {e: 1}) == (
                {e: d.pairing(k, beta)} if d.pairing(k, beta) else {})


@pytest.mark.parametrize("spec,lam,dim", [("A1", (2,), 3), ("A2", (1, 1), 8), ("G2", (1, 0), 7),
                                          ("B2", (1, 1), 16), ("C3", (0, 1, 0), 14)])
def test_module_dimensions(spec, lam, dim):
    assert build_irreducible(build_diagram(spec), lam).dim == dim


@st.composite
def modules(draw):
    spec = draw(st.sampled_from(["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A2xA1"]))
    d = build_diagram(spec)
    lam = tuple(draw(st.lists(st.integers(0, 2), min_size=d.rank, max_size=d.rank)))
    return d, lam


@given(modules())
def test_module_invariants(dl):
    d, lam = dl
    if d.weyl_dimension(lam) > 200:
        return
    V = build_irreducible(d, lam)
    assert V.dim == d.weyl_dimension(lam)
    mult = V.weight_multiplicities()
    assert mult[lam] == 1
    v = V.highest_vector()
    for k in d.nodes:
        assert V.act(("e", d.simple_root(k)), v) == {}
        # simple reflections permute the weight multiset
        refl = {}
        for mu, m in mult.items():
            image = tuple(x - mu[k] * d.cartan[j][k] for j, x in enumerate(mu))
            refl[image] = m
        assert refl == mult
    for i in range(V.dim):
        for k in d.nodes:
            assert V.act(("h", k), {i: Fraction(1)}) == (
                {i: Fraction(V.weight(i)[k])} if V.weight(i)[k] else {})


@given(modules())
def test_module_is_a_representation(dl):
    d, lam = dl
    if d.weyl_dimension(lam) > 60:
        return
    V = build_irreducible(d, lam)
    L = V.algebra
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            br = V.element_matrix(L.bracket_basis(a, b))
            ma, mb = V.matrix(L.labels[a]), V.matrix(L.labels[b])
            for i in range(V.dim):
                x = {i: Fraction(1)}
                lhs = mat_apply(ma, mat_apply(mb, x))
                for k, c in mat_apply(mb, mat_apply(ma, x)).items():
                    lhs[k] = lhs.get(k, 0) - c
                assert {k: c for k, c in lhs.items() if c} == mat_apply(br, x)


def test_act_examples():
    d = build_diagram("A1")
    V = build_irreducible(d, (2,))
    v = V.highest_vector()
    f = ("f", (1,))
    assert act(V, [f, f], v) != {}
    assert act(V, [f, f, f], v) == {}
    assert V.act(f, v, power=3) == {}


def test_module_cap():
    with pytest.raises(ResourceError):
        build_irreducible(build_diagram("A3"), (3, 3, 3), cap=100)


@pytest.mark.parametrize("spec,a,b,sym,kdim", [
    ("A1", (1,), (1,), True, 0),
    ("A1", (1,), (1,), False, 1),
    ("A2", (1, 0), (0, 1), False, 1),
    ("A2", (1, 0), (1, 0), True, 0),
    ("A2", (1, 1), (1, 1), True, 9),
    ("B2", (1, 0), (0, 1), False, 4),
    ("G2", (1, 0), (1, 0), True, 1),
    ("A3", (0, 1, 0), (0, 1, 0), True, 1),
    ("B2", (0, 2), (1, 0), False, 15),
    ("A2xA1", (1, 0, 1), (0, 1, 1), False, 12),
])
def test_cartan_kernel(spec, a, b, sym, kdim):
    d = build_diagram(spec)
    K = cartan_kernel(build_irreducible(d, a), build_irreducible(d, b), symmetric=sym)
    top = tuple(x + y for x, y in zip(a, b))
    assert K.product.dim == K.dim + d.weyl_dimension(top)
    assert K.dim == kdim
    assert K.is_submodule()
