"""Free monoids of dominant weights: saturation, S^p(Gamma), generator
classification and the combinatorial prediction of tangent weights."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg
from .rootsystem import DynkinDiagram, InputError, Weight, build_diagram

Ineq = Tuple[Fraction, ...]


@dataclass(frozen=True)
class GeneratorMonoid:
    """Monoid spanned by linearly independent dominant weights."""

    diagram: DynkinDiagram
    generators: Tuple[Weight, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(c) for c in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        d = self.diagram
        for g in gens:
            if len(g) != d.rank:
                raise InputError(f"generator {list(g)} has wrong length for {d.spec}")
            if any(c < 0 for c in g) or not any(g):
                raise InputError(f"generator {list(g)} is not a nonzero dominant weight")
        if not linalg.independent([linalg.from_list(g) for g in gens]):
            raise InputError("generators are linearly dependent")

    @property
    def s(self) -> int:
        return len(self.generators)

    def to_json(self) -> dict:
        return {"diagram": self.diagram.spec, "generators": [list(g) for g in self.generators]}

    def __str__(self):
        from .rootsystem import weight_str
        return f"{self.diagram.spec}<" + ", ".join(weight_str(self.diagram, g) for g in self.generators) + ">"


def make_monoid(diagram, generators) -> GeneratorMonoid:
    d = build_diagram(diagram) if isinstance(diagram, str) else diagram
    return GeneratorMonoid(d, tuple(tuple(g) for g in generators))


def monoid_from_json(obj: dict) -> GeneratorMonoid:
    try:
        return make_monoid(obj["diagram"], obj["generators"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed monoid: {exc}") from exc


# saturation ------------------------------------------------------------------


def _fm_eliminate(ineqs: List[Ineq], var: int) -> List[Ineq]:
    """Fourier-Motzkin: project ``{c : a.c >= 0}`` along coordinate ``var``."""
    pos = [a for a in ineqs if a[var] > 0]
    neg = [a for a in ineqs if a[var] < 0]
    out = [a for a in ineqs if a[var] == 0]
    for p in pos:
        for q in neg:
            lp, lq = -q[var], p[var]
            comb = tuple(lp * x + lq * y for x, y in zip(p, q))
            out.append(_normalize(comb))
    return _dedupe(out)


def _normalize(a: Ineq) -> Ineq:
    nz = [abs(x) for x in a if x]
    if not nz:
        return a
    m = min(nz)
    return tuple(Fraction(x) / m for x in a)


def _dedupe(ineqs: List[Ineq]) -> List[Ineq]:
    seen, out = set(), []
    for a in ineqs:
        if any(a) and a not in seen:
            seen.add(a)
            out.append(a)
    return out


def dominance_cone(g: GeneratorMonoid) -> List[Ineq]:
    """Inequalities on c with sum c_i lambda_i dominant."""
    d = g.diagram
    return _dedupe([_normalize(tuple(Fraction(lam[k]) for lam in g.generators)) for k in d.nodes])


def is_saturated(g: GeneratorMonoid) -> bool:
    """ZGamma cap Lambda^+ == Gamma, decided on the rational cone.

    For each coordinate k the cone is projected onto c_k by eliminating all
    other coordinates; saturation holds iff every projection lies in
    ``c_k >= 0``.
    """
    cone = dominance_cone(g)
    for k in range(g.s):
        ineqs = cone
        for j in range(g.s):
            if j != k:
                ineqs = _fm_eliminate(ineqs, j)
        if not any(a[k] > 0 for a in ineqs):
            return False
    return True


def is_saturated_bruteforce(g: GeneratorMonoid, box: int = 6) -> bool:
    """Search integer c in [-box, box]^s for a dominant non-monoid element."""
    d = g.diagram
    for c in itertools.product(range(-box, box + 1), repeat=g.s):
        if all(x >= 0 for x in c):
            continue
        if all(sum(ci * lam[k] for ci, lam in zip(c, g.generators)) >= 0 for k in d.nodes):
            return False
    return True


def saturation_witness(g: GeneratorMonoid, box: int = 6) -> Optional[Tuple[int, ...]]:
    d = g.diagram
    for c in itertools.product(range(-box, box + 1), repeat=g.s):
        if any(x < 0 for x in c) and all(
                sum(ci * lam[k] for ci, lam in zip(c, g.generators)) >= 0 for k in d.nodes):
            return c
    return None


def sp_of_monoid(g: GeneratorMonoid) -> FrozenSet[int]:
    """Simple roots orthogonal to every generator."""
    return frozenset(k for k in g.diagram.nodes if all(lam[k] == 0 for lam in g.generators))


def lattice_coordinates(g: GeneratorMonoid, weight: Sequence[int]) -> Optional[Tuple[Fraction, ...]]:
    """Rational x with sum x_i lambda_i = weight, or None outside the span."""
    d = g.diagram
    rows = [[lam[k] for lam in g.generators] for k in d.nodes]
    return None if (x := linalg.solve_dense(rows, list(weight))) is None else tuple(x)


def in_lattice(g: GeneratorMonoid, root: Sequence[int]) -> bool:
    """Whether a root-lattice element lies in ZGamma."""
    x = lattice_coordinates(g, g.diagram.root_to_weight(root))
    return x is not None and all(c.denominator == 1 for c in x)


# prediction of tangent weights -------------------------------------------------
#
# Orthogonality "(lambda, alpha) = 0" is tested as <alpha^vee, lambda> = 0 throughout.

FILTERS = ("compatible", "strict", "root_support", "pair_ruleout", "two_weights",
           "f4", "lattice", "generators")
# filters whose lemmas assume the tangent weights have full support
GATED_FILTERS = ("pair_ruleout", "two_weights")

COLOR_MULTIPLE = "COLOR_MULTIPLE"
PAIR_WEIGHT = "PAIR_WEIGHT"
THIRD_CASE = "THIRD_CASE"
NONE = "NONE"


def _non_orth(g: GeneratorMonoid, k: int) -> List[int]:
    return [i for i, lam in enumerate(g.generators) if lam[k] != 0]


def filter_compatible(g: GeneratorMonoid, gamma) -> bool:
    from .sphroots import is_compatible
    return is_compatible(g.diagram, sp_of_monoid(g), gamma)


def filter_strict(g: GeneratorMonoid, gamma) -> bool:
    from .systems import st_ok
    return st_ok(g.diagram, sp_of_monoid(g), gamma)


def filter_root_support(g: GeneratorMonoid, gamma) -> bool:
    """For delta in Supp gamma with gamma - delta not a root: <delta^vee, gamma> >= 0,
    and delta orthogonal to every generator when equality holds."""
    d = g.diagram
    vec = gamma.vector
    sp = sp_of_monoid(g)
    for k in gamma.support:
        diff = list(vec)
        diff[k] -= 1
        if tuple(diff) in d.root_set:
            continue
        p = d.pairing(k, vec)
        if p < 0 or (p == 0 and k not in sp):
            return False
    return True


def filter_pair_ruleout(g: GeneratorMonoid, gamma) -> bool:
    """If S(gamma) = {a, b} and a generator pairs with both, the others pair with neither."""
    from .sphroots import s_of_gamma
    s = s_of_gamma(g.diagram, gamma)
    if len(s) != 2:
        return True
    a, b = sorted(s)
    both = [i for i, lam in enumerate(g.generators) if lam[a] and lam[b]]
    if not both:
        return True
    return all(not lam[a] and not lam[b] for i, lam in enumerate(g.generators) if i != both[0])


def filter_two_weights(g: GeneratorMonoid, gamma) -> bool:
    """A simple root paired with two generators is orthogonal to gamma."""
    d = g.diagram
    return all(d.pairing(k, gamma.vector) == 0 for k in d.nodes if len(_non_orth(g, k)) >= 2)


def filter_f4(g: GeneratorMonoid, gamma) -> bool:
    """F4 with lambda_1 = omega_4 + a omega_3 and another generator a multiple of omega_3:
    the tangent space vanishes."""
    from .rootsystem import classify_connected
    d = g.diagram
    for comp in d.components:
        if comp.letter != "F":
            continue
        nodes = list(range(comp.offset, comp.offset + comp.rank))
        _, order = classify_connected(d, nodes)[0]
        a3, a4 = order[2], order[3]
        others = [n for n in nodes if n not in (a3, a4)]
        for i, lam in enumerate(g.generators):
            if lam[a4] != 1 or any(lam[n] for n in others):
                continue
            for j, mu in enumerate(g.generators):
                if j != i and mu[a3] > 0 and not any(mu[n] for n in nodes if n != a3):
                    return False
    return True


def filter_lattice(g: GeneratorMonoid, gamma) -> bool:
    return in_lattice(g, gamma.vector)


def _scalar(w: Sequence[int], c: Sequence[int]) -> Optional[int]:
    """Positive integer a with w = a*c, else None."""
    a = None
    for x, y in zip(w, c):
        if y == 0:
            if x != 0:
                return None
            continue
        r = Fraction(x, y)
        if a is None:
            a = r
        elif r != a:
            return None
    if a is None or a <= 0 or a.denominator != 1:
        return None
    return int(a)


def filter_generators(g: GeneratorMonoid, gamma) -> bool:
    """For gamma not a root, every generator restricted to Supp gamma is zero or a
    color multiple of the rank-one system (S^p(Gamma), {gamma}) restricted likewise.

    For gamma a root the highest weight vectors of several modules can carry the
    tangent vector and no condition is imposed.
    """
    from .systems import SphericalSystem, colors
    d = g.diagram
    if gamma.vector in d.root_set:
        return True
    sup = sorted(gamma.support)
    local = SphericalSystem(d, sp_of_monoid(g), (gamma,))
    cols = [tuple(c.weight[k] for k in sup) for c in colors(local, validate=False)]
    cols = [c for c in cols if any(c)]
    for lam in g.generators:
        loc = tuple(lam[k] for k in sup)
        if any(loc) and not any(_scalar(loc, c) for c in cols):
            return False
    return True


_FILTER_FUNCS = {
    "compatible": filter_compatible,
    "strict": filter_strict,
    "root_support": filter_root_support,
    "pair_ruleout": filter_pair_ruleout,
    "two_weights": filter_two_weights,
    "f4": filter_f4,
    "lattice": filter_lattice,
    "generators": filter_generators,
}


@dataclass(frozen=True)
class GeneratorClass:
    tag: str
    scalar: Optional[int] = None
    side_condition: bool = True

    @property
    def accepted(self) -> bool:
        return self.tag != NONE and self.side_condition


def classify_generator(g: GeneratorMonoid, lam: Sequence[int], sigma, delta) -> GeneratorClass:
    """Match a generator against the patterns allowed for a candidate system.

    ``sigma`` is an iterable of SphericalRoot, ``delta`` of color weights.
    THIRD_CASE reading: lam = omega_a + sum a_d omega_d with coefficient 1 at a,
    every other node d of lam orthogonal to all of sigma, and no gamma in sigma has
    S(gamma) a two-element set containing a.
    """
    from .sphroots import s_of_gamma
    d = g.diagram
    lam = tuple(int(c) for c in lam)
    if lam not in g.generators:
        raise InputError(f"{list(lam)} is not a generator of {g}")
    sigma = list(sigma)
    delta = [tuple(getattr(c, "weight", c)) for c in delta]
    for c in delta:
        a = _scalar(lam, c)
        if a is not None:
            return GeneratorClass(COLOR_MULTIPLE, a, a == 1 or len(sigma) == 1)
    nodes = [k for k in d.nodes if lam[k]]
    if len(nodes) == 2 and all(lam[k] == 1 for k in nodes):
        a, b = nodes
        if any(d.pairing(a, s.vector) > 0 and d.pairing(b, s.vector) > 0 for s in sigma):
            others = [mu for mu in g.generators if mu != lam]
            return GeneratorClass(PAIR_WEIGHT, None, all(not mu[a] and not mu[b] for mu in others))
    for a in nodes:
        if lam[a] != 1:
            continue
        rest = [k for k in nodes if k != a]
        if all(d.pairing(k, s.vector) == 0 for k in rest for s in sigma) and not any(
                len(sg := s_of_gamma(d, s)) == 2 and a in sg for s in sigma):
            return GeneratorClass(THIRD_CASE)
    return GeneratorClass(NONE)


@dataclass
class Prediction:
    """Candidate tangent weights with the verdict of every filter per catalog root."""

    monoid: GeneratorMonoid
    tags: Dict[Tuple[int, ...], Dict[str, bool]]
    gated: bool                      # whether the full-support filters were applied
    weights: Tuple = ()
    component_group_caveat: bool = False

    @property
    def weight_set(self):
        return {s.vector for s in self.weights}

    def to_json(self) -> dict:
        d = self.monoid.diagram
        return {
            "monoid": self.monoid.to_json(),
            "sp": [d.node_name(k) for k in sorted(sp_of_monoid(self.monoid))],
            "sigma": [s.to_json() for s in self.weights],
            "full_support_filters_applied": self.gated,
            "component_group_caveat": self.component_group_caveat,
            "filters": {",".join(map(str, v)): t for v, t in self.tags.items()},
        }


def predict_tangent_weights(g: GeneratorMonoid) -> Prediction:
    """Run every filter on every catalog root.

    The pair and two-weight filters rest on lemmas that assume the tangent
    weights have support S; they are applied only when the roots surviving the
    other filters already cover every simple root.
    """
    from .sphroots import enumerate_spherical_roots
    from .systems import SphericalSystem, check_axioms, colors
    if not is_saturated(g):
        raise InputError(f"{g} is not saturated")
    d = g.diagram
    cat = enumerate_spherical_roots(d)
    tags = {s.vector: {name: f(g, s) for name, f in _FILTER_FUNCS.items()} for s in cat}
    core = [s for s in cat if all(v for k, v in tags[s.vector].items() if k not in GATED_FILTERS)]
    cover = frozenset().union(*(s.support for s in core)) if core else frozenset()
    gated = cover == frozenset(d.nodes)
    keep = [s for s in core if not gated or all(tags[s.vector][k] for k in GATED_FILTERS)]
    caveat = False
    system = SphericalSystem(d, sp_of_monoid(g), tuple(keep))
    if check_axioms(system).valid:
        cols = colors(system, validate=False)
        caveat = any(classify_generator(g, lam, keep, cols).scalar not in (None, 1)
                     for lam in g.generators)
    return Prediction(g, tags, gated, system.sigma, caveat)


def candidate_tangent_weights(g: GeneratorMonoid):
    """Catalog roots predicted to be the T_ad-weights of the tangent space."""
    return set(predict_tangent_weights(g).weights)
