from fractions import Fraction

import pytest

from wonderful.corpus import HAND_PICKED
from wonderful.liealg import build_irreducible, cartan_kernel, lie_algebra
from wonderful.monoids import in_lattice, make_monoid
from wonderful.oracle import (
    GradedModule,
    QuotientOfV,
    Subalgebra,
    SymmetricSquareModCartan,
    _add,
    cochain_degrees,
    h1,
    invariants,
    obstruction,
    orbit_data,
    tangent_space,
    verify_cocycle_basis,
)
from wonderful.rootsystem import InputError, ResourceError, build_diagram

SMALL = [make_monoid(s, g) for s, g in HAND_PICKED if build_diagram(s).rank <= 2]


def weights(spec, gens):
    rep = tangent_space(make_monoid(spec, gens))
    return rep.dimension, rep.weight_set()


def test_orbit_data_examples():
    od = orbit_data(make_monoid("A1", [[2]]))
    assert od.isotropy.dim == 1 and od.tangent_image.rank == 2
    (x,) = od.isotropy.basis
    assert [od.algebra.labels[a] for a in x] == [("e", (1,))]
    od = orbit_data(make_monoid("A1", [[1]]))
    assert od.tangent_image.rank == 2 == od.ambient.dim


@pytest.mark.parametrize("m", SMALL, ids=str)
def test_rank_nullity_and_closure(m):
    od = orbit_data(m)
    assert od.tangent_image.rank + od.isotropy.dim == od.algebra.dim
    # from_basis asserts homogeneity and bracket closure; rebuild to re-check
    Subalgebra.from_basis(od.algebra, od.isotropy.basis)
    for x in od.isotropy.basis:
        assert od.ambient.act(x, od.v) == {}


def test_tangent_spot_values():
    assert weights("A1", [[2]]) == (1, {(2,)})
    assert weights("A1", [[1]]) == (0, set())
    assert weights("A1xA1", [[1, 1]]) == (1, {(1, 1)})
    assert weights("B2", [[1, 0], [0, 2]]) == (2, {(1, 1), (0, 2)})
    assert weights("G2", [[1, 0]]) == (1, {(4, 2)})
    assert weights("A3", [[0, 1, 0]]) == (1, {(1, 2, 1)})
    assert weights("B3", [[0, 0, 1]]) == (1, {(1, 2, 3)})


def test_lie_level_weights_outside_lattice():
    # A1 <4w>: the class at 2a is T_v-invariant, the one at a is not
    rep = tangent_space(make_monoid("A1", [[4]]))
    assert rep.weight_set() == {(2,)}
    assert all(not in_lattice(rep.monoid, w.weight) for w in rep.lie_weights if w.weight != (2,))


@pytest.mark.parametrize("m", SMALL, ids=str)
def test_tangent_representatives_are_invariant(m):
    od = orbit_data(m)
    rep = tangent_space(m, od, check_homogeneous=True)
    for tw in rep.weights:
        assert tw.multiplicity == len(tw.representatives)
        for r in tw.representatives:
            for x in od.isotropy.basis:
                assert od.tangent_image.contains(od.ambient.act(x, r))


def test_resource_cap():
    with pytest.raises(ResourceError):
        orbit_data(make_monoid("B3", [[2, 2, 2]]))


class _Trivial(GradedModule):
    def __init__(self, n, deg):
        self.n, self.deg = n, deg

    def basis(self, deg):
        return list(range(self.n)) if deg == self.deg else []

    def act(self, xi, c):
        return {}

    def degree_of(self, c):
        return self.deg


def test_h1_abelian_trivial_action():
    L = lie_algebra(build_diagram("A1xA1"))
    sub = Subalgebra.from_basis(L, [{L.index[("e", (1, 0))]: Fraction(1)},
                                    {L.index[("e", (0, 1))]: Fraction(1)}])
    mod = _Trivial(3, (0, 0))
    out = h1(sub, mod, cochain_degrees(sub, [(0, 0)]))
    assert sum(hd.dim for hd in out.values()) == sub.dim * 3


def test_h1_zero_module():
    m = make_monoid("A1", [[1]])
    od = orbit_data(m)
    M = QuotientOfV(od.ambient, od.isotropy, od.tangent_image)
    assert M.degrees() == []
    assert obstruction(m, od).h1_dim == 0


@pytest.mark.parametrize("m", SMALL, ids=str)
def test_h1_independent_of_isotropy_basis(m):
    od = orbit_data(m)
    M = QuotientOfV(od.ambient, od.isotropy, od.tangent_image)
    degrees = cochain_degrees(od.isotropy, M.degrees())
    before = {nu: hd.dim for nu, hd in h1(od.isotropy, M, degrees, od.split).items()}
    lie_before = {nu: hd.dim for nu, hd in h1(od.isotropy, M, degrees).items()}
    for seed in (1, 2):
        sub = od.isotropy.changed_basis(seed)
        M2 = QuotientOfV(od.ambient, sub, od.tangent_image)
        assert {nu: hd.dim for nu, hd in h1(sub, M2, degrees, od.split).items()} == before
        assert {nu: hd.dim for nu, hd in h1(sub, M2, degrees).items()} == lie_before


@pytest.mark.parametrize("spec,gens", [("A2", [[1, 0], [0, 1]]), ("B2", [[1, 0], [0, 1]]),
                                       ("A1xA1", [[1, 1]]), ("A2", [[1, 1]]), ("G2", [[1, 0]])])
def test_cartan_components_agree_with_cartan_kernel(spec, gens):
    m = make_monoid(spec, gens)
    od = orbit_data(m)
    S2 = SymmetricSquareModCartan(od.ambient, od.isotropy)
    depths = list(od.ambient.by_depth)
    degs = {_add(a, b) for a in depths for b in depths}
    total = sum(len(S2.basis(deg)) for deg in degs)
    mods = [build_irreducible(m.diagram, lam) for lam in m.generators]
    expected = sum(cartan_kernel(mods[i], mods[j], symmetric=(i == j)).dim
                   for i in range(len(mods)) for j in range(i, len(mods)))
    assert total == expected


def test_obstruction_examples():
    o = obstruction(make_monoid("A1", [[2]]))
    assert o.h1_dims == {(3,): 1} and o.kernel_dims == {(3,): 0} and o.smooth
    o = obstruction(make_monoid("A1", [[1]]))
    assert o.smooth and o.kernel_dim == 0
    with pytest.raises(InputError):
        obstruction(make_monoid("A2", [[1, 1], [3, 0]]))


def test_obstruction_adjoint_a2_kernel():
    # a nonzero kernel: the class in degree 2(a1+a2) maps to a coboundary
    o = obstruction(make_monoid("A2", [[1, 1]]))
    assert o.h1_dims == {(2, 2): 1}
    assert o.kernel_dims == {(2, 2): 1}
    assert o.h1_lie_dims == {(1, 1): 1, (2, 2): 1}
    assert o.lie_kernel_dims == {(1, 1): 0, (2, 2): 1}
    assert o.kernel_dim <= o.h1_dim


def test_cocycle_examples():
    r = verify_cocycle_basis(make_monoid("A1", [[2]]))
    assert r.all_cocycles and r.spans
    assert all(c.is_cocycle for c in r.checks if c.nonzero)
    r = verify_cocycle_basis(make_monoid("A1xA1", [[1, 0], [0, 1]]))
    assert r.all_cocycles and r.spans


def test_cocycle_failure_b2():
    # phi_{a1, 2a2}: e_a1 -> [f_a1^2 v_{2a2}] has no cocycle extension
    r = verify_cocycle_basis(make_monoid("B2", [[1, 0], [0, 2]]))
    bad = [c for c in r.checks if c.nonzero and c.invariant_degree and not c.is_cocycle]
    assert {(c.alpha, c.gamma, c.r) for c in bad} == {(0, (0, 2), 2)}
    assert not r.all_cocycles
