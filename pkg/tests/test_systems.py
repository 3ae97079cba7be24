import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wonderful.monoids import GeneratorMonoid, is_saturated
from wonderful.rootsystem import InputError, ResourceError, build_diagram
from wonderful.sphroots import apply_automorphism
from wonderful.systems import (
    SphericalSystem,
    check_axioms,
    colors,
    enumerate_systems,
    is_primitive,
    make_system,
)

RANK_LE_3 = ["A1", "A1xA1", "A2", "B2", "G2", "A3", "B3", "C3", "A2xA1", "A1xA1xA1"]


def weights(sys):
    return {c.weight for c in colors(sys)}


def test_axiom_examples():
    assert check_axioms(make_system("B2", [], [(1, 1)])).valid
    rep = check_axioms(make_system("B2", ["a2"], [(1, 1)]))
    assert not rep.valid
    assert rep.passed == {"Sigma1": True, "Sigma2": True, "S": True, "St": False}
    assert rep.witnesses["St"][0]["sigma"] == [1, 1]
    assert rep.witnesses["St"][0]["spp"] == rep.witnesses["St"][0]["sp_sigma"] == ["a2"]
    for spec in RANK_LE_3:
        assert check_axioms(make_system(spec, [], [])).valid


def test_unknown_root_rejected():
    with pytest.raises(InputError):
        make_system("A2", [], [(1, 2)])


def test_sigma_axioms_detect_violations():
    # <a2^vee, 2a1> = -2 is even, but 2a1 with a1+a2 gives <a1^vee, a1+a2> = 1
    assert not check_axioms(make_system("A2", [], [(2, 0), (1, 1)])).passed["Sigma1"]
    # a1+a3 in A3 with 2a2: <a1^vee, 2a2> = -2 = <a3^vee, 2a2>, so (Sigma2) holds
    assert check_axioms(make_system("A3", [], [(1, 0, 1), (0, 2, 0)])).passed["Sigma2"]
    assert not check_axioms(make_system("A3", [], [(1, 0, 1), (0, 2, 0), (1, 1, 0)])).valid


def test_color_examples():
    assert weights(make_system("B2", [], [(1, 1)])) == {(1, 0), (0, 1)}
    assert weights(make_system("A1", [], [(2,)])) == {(2,)}
    assert weights(make_system("A1xA1", [], [(1, 1)])) == {(1, 1)}
    with pytest.raises(InputError):
        colors(make_system("B2", ["a2"], [(1, 1)]))


def test_enumeration_examples():
    a1 = [(sorted(s.sp), s.vectors()) for s in enumerate_systems(build_diagram("A1"))]
    assert a1 == [([], []), ([0], []), ([], [(2,)])]
    b2 = [(s.sp, tuple(s.vectors())) for s in enumerate_systems(build_diagram("B2"))]
    assert (frozenset(), ((1, 1),)) in b2
    assert (frozenset({1}), ((1, 1),)) not in b2
    with pytest.raises(ResourceError):
        enumerate_systems(build_diagram("E8"))


def test_primitivity_examples():
    assert is_primitive(make_system("A1", [], [(2,)]))
    assert not is_primitive(make_system("B2", [], [(1, 1)]))  # (0,2) can be added
    assert is_primitive(make_system("B2", [], [(1, 1), (0, 2)]))
    assert not is_primitive(make_system("A2", [], [(2, 0)]))


@pytest.mark.parametrize("spec", RANK_LE_3)
def test_enumeration_properties(spec):
    d = build_diagram(spec)
    systems = enumerate_systems(d)
    keys = [(s.sp, s.sigma) for s in systems]
    assert len(set(keys)) == len(keys)
    assert systems == enumerate_systems(d)
    for sp in itertools.chain.from_iterable(itertools.combinations(d.nodes, k) for k in range(d.rank + 1)):
        assert (frozenset(sp), ()) in keys
    valid = set(keys)
    for s in systems:
        cols = colors(s)
        assert all(min(c.weight) >= 0 for c in cols)
        assert len({c.weight for c in cols}) == len(cols)
        for perm in d.automorphisms():
            image = SphericalSystem(d, {perm[k] for k in s.sp},
                                    tuple(make_system(d, [], [apply_automorphism(perm, v)]).sigma[0]
                                          for v in s.vectors()))
            assert (image.sp, image.sigma) in valid
            assert weights(image) == {apply_automorphism(perm, w) for w in weights(s)}


@pytest.mark.parametrize("spec", RANK_LE_3)
def test_removing_roots_keeps_sigma1(spec):
    d = build_diagram(spec)
    for s in enumerate_systems(d):
        for drop in s.sigma:
            rest = SphericalSystem(d, s.sp, tuple(t for t in s.sigma if t != drop))
            assert check_axioms(rest).passed["Sigma1"]


@pytest.mark.parametrize("spec", RANK_LE_3)
def test_full_support_color_monoids_saturated(spec):
    d = build_diagram(spec)
    for s in enumerate_systems(d):
        if s.support == frozenset(d.nodes):
            m = GeneratorMonoid(d, tuple(c.weight for c in colors(s)))
            assert is_saturated(m), s.to_json()


@given(st.sampled_from(RANK_LE_3), st.data())
def test_random_subsets_agree_with_enumeration(spec, data):
    from wonderful.sphroots import enumerate_spherical_roots
    d = build_diagram(spec)
    cat = list(enumerate_spherical_roots(d))
    sp = data.draw(st.sets(st.sampled_from(list(d.nodes))))
    sig = data.draw(st.sets(st.sampled_from(cat), max_size=3))
    sys_ = SphericalSystem(d, frozenset(sp), tuple(sig))
    from wonderful import linalg
    indep = linalg.independent([linalg.from_list(s.vector) for s in sys_.sigma])
    listed = (sys_.sp, sys_.sigma) in {(s.sp, s.sigma) for s in enumerate_systems(d)}
    assert listed == (check_axioms(sys_).valid and indep)
