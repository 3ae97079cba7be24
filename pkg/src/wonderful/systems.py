"""Strict spherical systems: axioms, colors, enumeration, primitivity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .rootsystem import DynkinDiagram, InputError, ResourceError, Weight, build_diagram
from .sphroots import (
    A1xA1,
    SphericalRoot,
    doubled,
    enumerate_spherical_roots,
    is_compatible,
    lookup,
    spp_of_sigma,
    sp_of_sigma,
)

DEFAULT_CATALOG_CAP = 24
AXIOMS = ("Sigma1", "Sigma2", "S", "St")


@dataclass(frozen=True)
class SphericalSystem:
    diagram: DynkinDiagram
    sp: FrozenSet[int]
    sigma: Tuple[SphericalRoot, ...]

    def __post_init__(self):
        object.__setattr__(self, "sp", frozenset(self.sp))
        object.__setattr__(self, "sigma", tuple(sorted(set(self.sigma), key=_root_key)))

    @property
    def support(self) -> FrozenSet[int]:
        out = set()
        for s in self.sigma:
            out |= s.support
        return frozenset(out)

    def vectors(self) -> List[Tuple[int, ...]]:
        return [s.vector for s in self.sigma]

    def to_json(self) -> dict:
        d = self.diagram
        return {
            "diagram": d.spec,
            "sp": [d.node_name(k) for k in sorted(self.sp)],
            "sigma": [s.to_json() for s in self.sigma],
        }

    def sort_key(self):
        return (len(self.sigma), tuple(_root_key(s) for s in self.sigma), tuple(sorted(self.sp)))


def _root_key(s: SphericalRoot):
    return tuple(-c for c in s.vector)


def make_system(diagram, sp: Iterable = (), sigma: Iterable = ()) -> SphericalSystem:
    """Build a system from node names/indices and coefficient vectors.

    Raises InputError for vectors outside the catalog.
    """
    d = build_diagram(diagram) if isinstance(diagram, str) else diagram
    sp_idx = frozenset(d.parse_node(x) for x in sp)
    roots = []
    for s in sigma:
        if isinstance(s, SphericalRoot):
            roots.append(s)
            continue
        vec = s["coeffs"] if isinstance(s, dict) else s
        if len(vec) != d.rank:
            raise InputError(f"root {vec} has wrong length for {d.spec}")
        r = lookup(d, vec)
        if r is None:
            raise InputError(f"{list(vec)} is not a spherical root of {d.spec}")
        roots.append(r)
    return SphericalSystem(d, sp_idx, tuple(roots))


def system_from_json(obj: dict) -> SphericalSystem:
    try:
        return make_system(obj["diagram"], obj.get("sp", []), obj.get("sigma", []))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed system: {exc}") from exc


@dataclass
class AxiomReport:
    passed: Dict[str, bool] = field(default_factory=lambda: {a: True for a in AXIOMS})
    witnesses: Dict[str, List[dict]] = field(default_factory=lambda: {a: [] for a in AXIOMS})

    @property
    def valid(self) -> bool:
        return all(self.passed.values())

    def fail(self, axiom: str, **witness):
        self.passed[axiom] = False
        self.witnesses[axiom].append(witness)

    def to_json(self) -> dict:
        return {"valid": self.valid, "axioms": dict(self.passed),
                "witnesses": {a: w for a, w in self.witnesses.items() if w}}


def _two_alpha_node(s: SphericalRoot) -> Optional[int]:
    if len(s.support) == 1 and max(s.vector) == 2:
        return next(iter(s.support))
    return None


def _pair_nodes(s: SphericalRoot) -> Optional[Tuple[int, int]]:
    if s.row == A1xA1:
        i, j = sorted(s.support)
        return i, j
    return None


def sigma1_ok(d: DynkinDiagram, s: SphericalRoot, t: SphericalRoot) -> bool:
    """(Sigma1) for the ordered pair (2alpha = s, sigma = t)."""
    a = _two_alpha_node(s)
    if a is None or s == t:
        return True
    p = d.pairing(a, t.vector)
    return p <= 0 and p % 2 == 0


def sigma2_ok(d: DynkinDiagram, s: SphericalRoot, t: SphericalRoot) -> bool:
    """(Sigma2) for the ordered pair (alpha+beta = s, sigma = t)."""
    pair = _pair_nodes(s)
    if pair is None:
        return True
    i, j = pair
    return d.pairing(i, t.vector) == d.pairing(j, t.vector)


def st_ok(d: DynkinDiagram, sp, s: SphericalRoot) -> bool:
    dbl = doubled(d, s)
    return dbl is None or not is_compatible(d, sp, dbl)


def check_axioms(sys: SphericalSystem) -> AxiomReport:
    d = sys.diagram
    cat = set(enumerate_spherical_roots(d))
    for s in sys.sigma:
        if s not in cat:
            raise InputError(f"{s.vector} is not a spherical root of {d.spec}")
    rep = AxiomReport()
    names = d.node_name
    for s in sys.sigma:
        a = _two_alpha_node(s)
        if a is not None:
            for t in sys.sigma:
                if not sigma1_ok(d, s, t):
                    rep.fail("Sigma1", alpha=names(a), sigma=list(t.vector),
                             pairing=d.pairing(a, t.vector))
        pair = _pair_nodes(s)
        if pair is not None:
            for t in sys.sigma:
                if not sigma2_ok(d, s, t):
                    rep.fail("Sigma2", alpha=names(pair[0]), beta=names(pair[1]),
                             sigma=list(t.vector))
    for s in sys.sigma:
        if not is_compatible(d, sys.sp, s):
            rep.fail("S", sigma=list(s.vector),
                     spp=[names(k) for k in sorted(spp_of_sigma(d, s))],
                     sp_sigma=[names(k) for k in sorted(sp_of_sigma(d, s))])
        if not st_ok(d, sys.sp, s):
            dbl = doubled(d, s)
            rep.fail("St", sigma=list(s.vector), doubled=list(dbl.vector),
                     spp=[names(k) for k in sorted(spp_of_sigma(d, dbl))],
                     sp_sigma=[names(k) for k in sorted(sp_of_sigma(d, dbl))])
    return rep


@dataclass(frozen=True, order=True)
class Color:
    weight: Weight
    origin: Tuple[int, ...]

    def to_json(self, d: DynkinDiagram) -> dict:
        return {"weight": list(self.weight), "origin": [d.node_name(k) for k in self.origin]}


def colors(sys: SphericalSystem, validate: bool = True) -> List[Color]:
    """Color weights; an A1xA1 root alpha+beta yields the single omega_a+omega_b."""
    if validate and not check_axioms(sys).valid:
        raise InputError("colors() needs a valid spherical system")
    d = sys.diagram
    vecs = set(sys.vectors())
    paired = set()
    out: Dict[Weight, Color] = {}
    for s in sys.sigma:
        pair = _pair_nodes(s)
        if pair is not None:
            paired.update(pair)
            w = [0] * d.rank
            w[pair[0]] = w[pair[1]] = 1
            out.setdefault(tuple(w), Color(tuple(w), pair))
    for a in d.nodes:
        if a in sys.sp or a in paired:
            continue
        two_a = tuple(2 if k == a else 0 for k in d.nodes)
        w = [0] * d.rank
        w[a] = 2 if two_a in vecs else 1
        out.setdefault(tuple(w), Color(tuple(w), (a,)))
    return sorted(out.values())


def _independent(vectors) -> bool:
    return linalg.independent([linalg.from_list(v) for v in vectors])


def _check_cap(d: DynkinDiagram, cap: Optional[int]):
    n = len(enumerate_spherical_roots(d))
    cap = DEFAULT_CATALOG_CAP if cap is None else cap
    if n > cap:
        raise ResourceError(f"|Sigma({d.spec})| = {n} exceeds the enumeration cap {cap}")


def _allowed_for_sp(d: DynkinDiagram, sp) -> List[SphericalRoot]:
    return [s for s in enumerate_spherical_roots(d)
            if is_compatible(d, sp, s) and st_ok(d, sp, s)]


def _pair_ok(d, s, t) -> bool:
    return (sigma1_ok(d, s, t) and sigma1_ok(d, t, s)
            and sigma2_ok(d, s, t) and sigma2_ok(d, t, s))


def _cliques(d: DynkinDiagram, roots: List[SphericalRoot], base: Sequence[SphericalRoot] = ()):
    """All sets of mutually axiom-compatible, linearly independent roots."""
    out = []

    def rec(start, chosen, vecs):
        out.append(tuple(chosen))
        for k in range(start, len(roots)):
            t = roots[k]
            if all(_pair_ok(d, s, t) for s in chosen) and _pair_ok(d, t, t):
                red = linalg.Reducer()
                for v in vecs:
                    red.add(v)
                tv = linalg.from_list(t.vector)
                if red.add(tv):
                    rec(k + 1, chosen + [t], vecs + [tv])

    rec(0, list(base), [linalg.from_list(s.vector) for s in base])
    return out


def enumerate_systems(d: DynkinDiagram, cap: Optional[int] = None) -> List[SphericalSystem]:
    """All valid systems with linearly independent Sigma, deterministic order."""
    _check_cap(d, cap)
    out = []
    for size in range(d.rank + 1):
        for sp in itertools.combinations(d.nodes, size):
            allowed = _allowed_for_sp(d, sp)
            for sig in _cliques(d, allowed):
                sys = SphericalSystem(d, frozenset(sp), sig)
                assert check_axioms(sys).valid
                out.append(sys)
    out.sort(key=SphericalSystem.sort_key)
    return out


def is_primitive(sys: SphericalSystem, cap: Optional[int] = None) -> bool:
    """Supp Sigma = S and Sigma is maximal among valid systems with this S^p."""
    d = sys.diagram
    _check_cap(d, cap)
    if sys.support != frozenset(d.nodes):
        return False
    if not check_axioms(sys).valid:
        raise InputError("is_primitive() needs a valid spherical system")
    current = set(sys.sigma)
    vecs = [linalg.from_list(s.vector) for s in sys.sigma]
    for t in _allowed_for_sp(d, sys.sp):
        if t in current:
            continue
        if not all(_pair_ok(d, s, t) for s in sys.sigma) or not _pair_ok(d, t, t):
            continue
        red = linalg.span_basis(vecs)
        if red.add(linalg.from_list(t.vector)):
            # one more root already gives a valid strict superset
            return False
    return True
