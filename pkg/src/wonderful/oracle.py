"""Direct linear-algebra computation of the tangent and obstruction data of
the invariant Hilbert scheme at the multi-cone point.

Everything is graded by the T_ad-degree: a vector of V(lambda_i) of
T-weight mu has degree lambda_i - mu, an element of V(lambda_i)V(lambda_j)
of weight mu has degree lambda_i + lambda_j - mu, and a root vector of
weight beta shifts degrees by -beta.  The isotropy algebra g_v is spanned
by degree-homogeneous elements, so every invariant, cocycle and coboundary
computation splits degree by degree.

Group-level invariants.  Write v = sum v_i.  Its stabilizer is
G_v = T_v . G_v^0 with T_v = {t : lambda_i(t) = 1 for all i}; T_v acts on
the degree-nu part of V/g.v and of H^1 through the character -nu.  Since
the characters trivial on T_v are exactly ZGamma (G simply connected),
G_v-invariants are the g_v-invariants in degrees nu in ZGamma.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from . import linalg
from .liealg import IrreducibleModule, LieAlgebra, Mat, build_irreducible, lie_algebra, mat_apply
from .linalg import Reducer, Vec, nullspace, viadd, vscale
from .monoids import GeneratorMonoid, in_lattice, is_saturated, sp_of_monoid
from .rootsystem import DynkinDiagram, InputError, ResourceError, Root, root_str
from .sphroots import lookup

log = logging.getLogger(__name__)

DEFAULT_V_CAP = 300


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _nonneg(a: Root) -> bool:
    return all(x >= 0 for x in a)


class Ambient:
    """V = V(lambda_1) + ... + V(lambda_s) with global basis indices."""

    def __init__(self, monoid: GeneratorMonoid, algebra: LieAlgebra, cap: int = DEFAULT_V_CAP):
        d = monoid.diagram
        total = sum(d.weyl_dimension(lam) for lam in monoid.generators)
        if total > cap:
            raise ResourceError(f"dim V = {total} exceeds the cap {cap}")
        self.algebra = algebra
        self.modules: List[IrreducibleModule] = [build_irreducible(algebra, lam) for lam in monoid.generators]
        self.offsets: List[int] = []
        self.depth: List[Root] = []
        self.owner: List[int] = []
        self.by_depth: Dict[Root, List[int]] = {}
        for i, m in enumerate(self.modules):
            self.offsets.append(len(self.depth))
            for loc in range(m.dim):
                g = len(self.depth)
                self.depth.append(m.depth[loc])
                self.owner.append(i)
                self.by_depth.setdefault(m.depth[loc], []).append(g)
        self._mats: Dict[int, Mat] = {}

    @property
    def dim(self) -> int:
        return len(self.depth)

    def highest(self, i: int) -> int:
        return self.offsets[i]

    def matrix(self, a: int) -> Mat:
        """Action of Lie basis element ``a`` on V in global indices."""
        m = self._mats.get(a)
        if m is None:
            m = {}
            lab = self.algebra.labels[a]
            for i, mod in enumerate(self.modules):
                off = self.offsets[i]
                for j, col in mod.matrix(lab).items():
                    m[j + off] = {r + off: c for r, c in col.items()}
            self._mats[a] = m
        return m

    def act(self, x: Vec, w: Vec) -> Vec:
        out: Vec = {}
        for a, c in x.items():
            viadd(out, mat_apply(self.matrix(a), w), c)
        return out


@dataclass
class Subalgebra:
    """Degree-homogeneous basis of a subalgebra, with internal brackets."""

    algebra: LieAlgebra
    basis: List[Vec]
    shifts: List[Root]
    brackets: Dict[Tuple[int, int], Vec] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_basis(cls, algebra: LieAlgebra, basis: List[Vec]) -> "Subalgebra":
        shifts = []
        for x in basis:
            sh = {algebra.shift(a) for a in x}
            if len(sh) != 1:
                raise AssertionError("subalgebra basis element is not homogeneous")
            shifts.append(sh.pop())
        sub = cls(algebra, basis, shifts)
        red = Reducer(track=True)
        for x in basis:
            red.add(x)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                br = algebra.bracket(basis[i], basis[j])
                if not br:
                    continue
                coef = red.express(br)
                if coef is None:
                    raise AssertionError("basis does not span a subalgebra")
                sub.brackets[(i, j)] = coef
        return sub

    def bracket_coeffs(self, i: int, j: int) -> Vec:
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return vscale(self.brackets.get((j, i), {}), -1)

    def changed_basis(self, seed: int = 0) -> "Subalgebra":
        """Same subalgebra, basis changed by a random triangular map within each degree."""
        import random
        rng = random.Random(seed)
        groups: Dict[Root, List[int]] = {}
        for i, s in enumerate(self.shifts):
            groups.setdefault(s, []).append(i)
        new = [None] * self.dim
        for s, idx in groups.items():
            for pos, i in enumerate(idx):
                v = vscale(self.basis[i], Fraction(rng.randint(1, 5)))
                for j in idx[pos + 1:]:
                    viadd(v, self.basis[j], Fraction(rng.randint(-3, 3)))
                new[i] = v
        return Subalgebra.from_basis(self.algebra, new)


class GradedModule:
    """Interface: finite-dimensional module of a Subalgebra, graded by degree."""

    def basis(self, deg: Root) -> List[int]:
        raise NotImplementedError

    def act(self, xi: int, c: int) -> Vec:
        """Image of basis coordinate ``c`` under g_v basis element ``xi``."""
        raise NotImplementedError

    def degree_of(self, c: int) -> Root:
        raise NotImplementedError


class QuotientOfV(GradedModule):
    """V / g.v, coordinates = global V indices that are not pivots of g.v."""

    def __init__(self, amb: Ambient, sub: Subalgebra, red: Reducer):
        self.amb, self.sub, self.red = amb, sub, red
        self._cache: Dict[Tuple[int, int], Vec] = {}

    def basis(self, deg):
        return [g for g in self.amb.by_depth.get(deg, []) if g not in self.red.rows]

    def degree_of(self, c):
        return self.amb.depth[c]

    def act(self, xi, c):
        key = (xi, c)
        r = self._cache.get(key)
        if r is None:
            r = self.red.reduce(self.amb.act(self.sub.basis[xi], {c: Fraction(1)}))
            self._cache[key] = r
        return r

    def degrees(self) -> List[Root]:
        return sorted(d for d in self.amb.by_depth if self.basis(d))


class SymmetricSquareModCartan(GradedModule):
    """S^2 V modulo the Cartan components V(lambda_i + lambda_j), built lazily.

    Basis coordinates are ids of monomials p.q (p <= q global V indices).
    """

    def __init__(self, amb: Ambient, sub: Subalgebra):
        self.amb, self.sub = amb, sub
        self.ids: Dict[Tuple[int, int], int] = {}
        self.monos: List[Tuple[int, int]] = []
        self._cartan: Dict[Tuple[int, int, Root], List[Vec]] = {}
        self._reducers: Dict[Root, Reducer] = {}
        self._cache: Dict[Tuple[int, int], Vec] = {}
        n = amb.algebra.diagram.rank
        self._f_idx = [amb.algebra.index[("f", amb.algebra.diagram.simple_root(k))] for k in range(n)]

    def mono(self, p: int, q: int) -> int:
        key = (p, q) if p <= q else (q, p)
        i = self.ids.get(key)
        if i is None:
            i = self.ids[key] = len(self.monos)
            self.monos.append(key)
        return i

    def degree_of(self, c):
        p, q = self.monos[c]
        return _add(self.amb.depth[p], self.amb.depth[q])

    def product(self, a: Vec, b: Vec) -> Vec:
        out: Vec = {}
        for p, x in a.items():
            for q, y in b.items():
                k = self.mono(p, q)
                out[k] = out.get(k, 0) + x * y
        return linalg.vclean(out)

    def act_lie(self, x: Vec, vec: Vec) -> Vec:
        out: Vec = {}
        for c, coef in vec.items():
            p, q = self.monos[c]
            xp = self.amb.act(x, {p: Fraction(1)})
            xq = self.amb.act(x, {q: Fraction(1)})
            viadd(out, self.product(xp, {q: Fraction(1)}), coef)
            viadd(out, self.product({p: Fraction(1)}, xq), coef)
        return out

    def _cartan_part(self, i: int, j: int, deg: Root) -> List[Vec]:
        key = (i, j, deg)
        got = self._cartan.get(key)
        if got is not None:
            return got
        if not any(deg):
            got = [self.product({self.amb.highest(i): Fraction(1)}, {self.amb.highest(j): Fraction(1)})]
        else:
            red = Reducer()
            got = []
            for k, fk in enumerate(self._f_idx):
                if deg[k] == 0:
                    continue
                prev = deg[:k] + (deg[k] - 1,) + deg[k + 1:]
                for w in self._cartan_part(i, j, prev):
                    img = self.act_lie({fk: Fraction(1)}, w)
                    if img and red.add(img):
                        got.append(img)
        self._cartan[key] = got
        return got

    def reducer(self, deg: Root) -> Reducer:
        red = self._reducers.get(deg)
        if red is None:
            red = Reducer()
            s = len(self.amb.modules)
            for i in range(s):
                for j in range(i, s):
                    for w in self._cartan_part(i, j, deg):
                        red.add(w)
            self._reducers[deg] = red
        return red

    def reduce(self, vec: Vec, deg: Root) -> Vec:
        return self.reducer(deg).reduce(vec)

    def basis(self, deg):
        red = self.reducer(deg)
        amb = self.amb
        out = []
        for d1, idx1 in amb.by_depth.items():
            d2 = _sub(deg, d1)
            if not _nonneg(d2):
                continue
            for p in idx1:
                for q in amb.by_depth.get(d2, []):
                    if p <= q:
                        c = self.mono(p, q)
                        if c not in red.rows:
                            out.append(c)
        return sorted(out)

    def act(self, xi, c):
        key = (xi, c)
        r = self._cache.get(key)
        if r is None:
            img = self.act_lie(self.sub.basis[xi], {c: Fraction(1)})
            deg = _add(self.degree_of(c), self.sub.shifts[xi])
            r = self.reduce(img, deg) if img else {}
            self._cache[key] = r
        return r


# cohomology --------------------------------------------------------------------


class _Encoder:
    def __init__(self):
        self.ids: Dict[object, int] = {}
        self.keys: List[object] = []

    def __call__(self, key) -> int:
        i = self.ids.get(key)
        if i is None:
            i = self.ids[key] = len(self.keys)
            self.keys.append(key)
        return i


def invariants(sub: Subalgebra, mod: GradedModule, deg: Root,
               among: Optional[Sequence[int]] = None) -> List[Vec]:
    """Basis of the invariants of ``mod`` in degree ``deg`` under the listed
    basis elements (all of g_v by default)."""
    cols = mod.basis(deg)
    if not cols:
        return []
    enc = _Encoder()
    rows: Dict[int, Vec] = {}
    for ci, c in enumerate(cols):
        for xi in (range(sub.dim) if among is None else among):
            for coord, val in mod.act(xi, c).items():
                rows.setdefault(enc((xi, coord)), {})[ci] = val
    ker = nullspace(rows.values(), len(cols))
    return [{cols[k]: v for k, v in x.items()} for x in ker]


@dataclass
class CochainSpace:
    """Degree-nu 1-cochains: unknown (xi, coord) meaning phi(x_xi) has coord."""

    unknowns: List[Tuple[int, int]]
    index: Dict[Tuple[int, int], int]


def cochains(sub: Subalgebra, mod: GradedModule, nu: Root,
             support: Optional[Sequence[int]] = None) -> CochainSpace:
    """Cochains of degree nu, nonzero only on the basis elements in ``support``."""
    unknowns = []
    for xi in (range(sub.dim) if support is None else support):
        deg = _add(nu, sub.shifts[xi])
        if _nonneg(deg):
            for c in mod.basis(deg):
                unknowns.append((xi, c))
    return CochainSpace(unknowns, {u: k for k, u in enumerate(unknowns)})


def coboundary_rows(sub: Subalgebra, mod: GradedModule, cs: CochainSpace,
                    scope: Optional[Set[int]] = None) -> List[Vec]:
    """Equations (one per (pair, coordinate)) cutting out Z^1 in the cochain space.

    With ``scope`` only pairs of basis elements inside it are imposed.
    """
    enc = _Encoder()
    rows: Dict[int, Vec] = {}

    def put(pair, vec, col, sign):
        for coord, val in vec.items():
            r = rows.setdefault(enc((pair, coord)), {})
            nv = r.get(col, 0) + sign * val
            if nv:
                r[col] = nv
            else:
                r.pop(col, None)

    n = sub.dim
    for col, (y, c) in enumerate(cs.unknowns):
        for x in range(n):
            if x == y or (scope is not None and x not in scope):
                continue
            # (d phi)(a, b) = a.phi(b) - b.phi(a) - phi([a, b]) for a < b
            if x < y:
                put((x, y), mod.act(x, c), col, 1)
            else:
                put((y, x), mod.act(x, c), col, -1)
        for (a, b), coeffs in sub.brackets.items():
            if scope is not None and (a not in scope or b not in scope):
                continue
            cy = coeffs.get(y)
            if cy:
                put((a, b), {c: Fraction(1)}, col, -cy)
    return [r for r in rows.values() if r]


def coboundary_vector(sub: Subalgebra, mod: GradedModule, cs: CochainSpace, m) -> Vec:
    """The 1-cochain x -> x.m in cochain coordinates (m a coordinate or a vector)."""
    if not isinstance(m, dict):
        m = {m: Fraction(1)}
    out: Vec = {}
    for xi in range(sub.dim):
        img: Vec = {}
        for c, val in m.items():
            viadd(img, mod.act(xi, c), val)
        for coord, val in img.items():
            k = cs.index.get((xi, coord))
            if k is None:
                raise AssertionError("coboundary leaves the cochain support")
            out[k] = val
    return out


@dataclass
class H1Degree:
    degree: Root
    cochains: CochainSpace
    cocycles: List[Vec]
    coboundaries: Reducer
    representatives: List[Vec]

    @property
    def dim(self) -> int:
        return len(self.representatives)


@dataclass(frozen=True)
class Splitting:
    """g_v = l + u: ``levi`` spans the reductive part (toral elements and the
    root vectors of the Levi factor), ``nil`` the remaining root vectors."""

    levi: Tuple[int, ...]
    nil: Tuple[int, ...]


def h1_degree(sub: Subalgebra, mod: GradedModule, nu: Root,
              split: Optional[Splitting] = None) -> H1Degree:
    """Degree-nu part of H^1(g_v, M), or of H^1(g_v, l; M) = H^1(u, M)^l when
    a splitting is given (cochains vanish on l, coboundaries come from M^l)."""
    support = None if split is None else split.nil
    cs = cochains(sub, mod, nu, support)
    if not cs.unknowns:
        return H1Degree(nu, cs, [], Reducer(), [])
    z = nullspace(coboundary_rows(sub, mod, cs), len(cs.unknowns))
    b = Reducer()
    if _nonneg(nu):
        if split is None:
            zeros = [{c: Fraction(1)} for c in mod.basis(nu)]
        else:
            zeros = invariants(sub, mod, nu, split.levi) if split.levi else [
                {c: Fraction(1)} for c in mod.basis(nu)]
        for m in zeros:
            b.add(coboundary_vector(sub, mod, cs, m))
    reps = []
    red = Reducer()
    for v in b.basis():
        red.add(v)
    for v in z:
        if red.add(v):
            reps.append(v)
    if b.rank + len(reps) != len(z):
        raise AssertionError("coboundaries are not contained in the cocycles")
    return H1Degree(nu, cs, z, b, reps)


def cochain_degrees(sub: Subalgebra, mod_degrees: Iterable[Root]) -> List[Root]:
    out = set()
    for d in mod_degrees:
        for s in set(sub.shifts):
            out.add(_sub(d, s))
    return sorted(out)


def h1(sub: Subalgebra, mod: GradedModule, degrees: Iterable[Root],
       split: Optional[Splitting] = None) -> Dict[Root, H1Degree]:
    """H^1 for every listed degree with nonzero cohomology."""
    out = {}
    for nu in degrees:
        hd = h1_degree(sub, mod, nu, split)
        if hd.dim:
            out[nu] = hd
    return out


# orbit, tangent, obstruction -----------------------------------------------------


@dataclass
class OrbitData:
    monoid: GeneratorMonoid
    ambient: Ambient
    v: Vec
    tangent_image: Reducer  # g.v
    isotropy: Subalgebra  # g_v
    split: Splitting

    @property
    def algebra(self) -> LieAlgebra:
        return self.ambient.algebra


def orbit_data(monoid: GeneratorMonoid, cap: int = DEFAULT_V_CAP) -> OrbitData:
    alg = lie_algebra(monoid.diagram)
    amb = Ambient(monoid, alg, cap=cap)
    v = {amb.highest(i): Fraction(1) for i in range(len(amb.modules))}
    images = [amb.act({a: Fraction(1)}, v) for a in range(alg.dim)]
    rows: Dict[int, Vec] = {}
    red = Reducer()
    for a, img in enumerate(images):
        red.add(img)
        for r, c in img.items():
            rows.setdefault(r, {})[a] = c
    ker = nullspace(rows.values(), alg.dim)
    sub = Subalgebra.from_basis(alg, ker)
    if red.rank + sub.dim != alg.dim:
        raise AssertionError("rank-nullity failed for x -> x.v")
    sp = sp_of_monoid(monoid)
    levi, nil = [], []
    for xi, x in enumerate(sub.basis):
        labs = [alg.labels[a] for a in x]
        if len(labs) == 1 and labs[0][0] == "e" and not {k for k, c in enumerate(labs[0][1]) if c} <= sp:
            nil.append(xi)
        else:
            levi.append(xi)
    return OrbitData(monoid, amb, v, red, sub, Splitting(tuple(levi), tuple(nil)))


@dataclass
class TangentWeight:
    weight: Root
    multiplicity: int
    representatives: List[Vec]
    in_lattice: bool
    catalog_row: Optional[str]

    def to_json(self) -> dict:
        return {"weight": list(self.weight), "multiplicity": self.multiplicity,
                "in_ZGamma": self.in_lattice, "row": self.catalog_row,
                "representative": [[k, str(v)] for k, v in sorted(self.representatives[0].items())]}


@dataclass
class TangentReport:
    """Tangent space (V/g.v)^{G_v} with its T_ad-weight decomposition.

    ``weights`` holds the group-level (G_v-invariant) part; ``lie_weights``
    the g_v-invariants in every degree, including degrees outside ZGamma.
    """

    monoid: GeneratorMonoid
    weights: List[TangentWeight]
    lie_weights: List[TangentWeight]
    homogeneity_checked: bool = False

    @property
    def dimension(self) -> int:
        return sum(w.multiplicity for w in self.weights)

    @property
    def lie_dimension(self) -> int:
        return sum(w.multiplicity for w in self.lie_weights)

    def weight_set(self) -> Set[Root]:
        return {w.weight for w in self.weights}

    @property
    def multiplicity_free(self) -> bool:
        return all(w.multiplicity == 1 for w in self.weights)

    def to_json(self) -> dict:
        return {"monoid": self.monoid.to_json(), "dimension": self.dimension,
                "weights": [w.to_json() for w in self.weights],
                "lie_dimension": self.lie_dimension,
                "lie_only_weights": [list(w.weight) for w in self.lie_weights if not w.in_lattice],
                "homogeneity_checked": self.homogeneity_checked}


def tangent_space(monoid: GeneratorMonoid, od: Optional[OrbitData] = None, *,
                  check_homogeneous: Optional[bool] = None) -> TangentReport:
    od = od or orbit_data(monoid)
    M = QuotientOfV(od.ambient, od.isotropy, od.tangent_image)
    lie = []
    for deg in M.degrees():
        inv = invariants(od.isotropy, M, deg)
        if not inv:
            continue
        lie.append(TangentWeight(deg, len(inv), inv, in_lattice(monoid, deg),
                                 (lookup(monoid.diagram, deg) or _NoRow).row))
    if check_homogeneous is None:
        check_homogeneous = od.ambient.dim <= 120
    if check_homogeneous:
        _check_homogeneous(od, M, lie)
    group = [w for w in lie if w.in_lattice]
    return TangentReport(monoid, group, lie, check_homogeneous)


class _NoRow:
    row = None


def _check_homogeneous(od: OrbitData, M: QuotientOfV, graded: List[TangentWeight]):
    """Ungraded fixed-space computation; every degree component must be fixed."""
    cols = [c for deg in M.degrees() for c in M.basis(deg)]
    enc = _Encoder()
    rows: Dict[int, Vec] = {}
    for ci, c in enumerate(cols):
        for xi in range(od.isotropy.dim):
            for coord, val in M.act(xi, c).items():
                rows.setdefault(enc((xi, coord)), {})[ci] = val
    ker = nullspace(rows.values(), len(cols))
    total = sum(w.multiplicity for w in graded)
    if len(ker) != total:
        raise AssertionError(f"ungraded fixed space has dim {len(ker)}, graded sum {total}")
    for x in ker:
        parts: Dict[Root, Vec] = {}
        for k, v in x.items():
            parts.setdefault(M.degree_of(cols[k]), {})[cols[k]] = v
        for part in parts.values():
            for xi in range(od.isotropy.dim):
                img: Vec = {}
                for c, v in part.items():
                    viadd(img, M.act(xi, c), v)
                if img:
                    raise AssertionError("fixed vector has a non-fixed homogeneous component")


@dataclass
class ObstructionReport:
    monoid: GeneratorMonoid
    h1_dims: Dict[Root, int]            # G_v-invariant part, by degree
    h1_lie_dims: Dict[Root, int]        # all degrees
    target_h1_dims: Dict[Root, int]     # H^1(g_v, S^2V/V(2lambda)) at the same degrees
    kernel_dims: Dict[Root, int]
    cocycle_basis: Dict[Root, List[Vec]]
    component_group_flag: bool = False
    lie_kernel_dims: Dict[Root, int] = field(default_factory=dict)

    @property
    def h1_dim(self) -> int:
        return sum(self.h1_dims.values())

    @property
    def h1_lie_dim(self) -> int:
        return sum(self.h1_lie_dims.values())

    @property
    def kernel_dim(self) -> int:
        return sum(self.kernel_dims.values())

    @property
    def smooth(self) -> bool:
        return self.kernel_dim == 0

    @property
    def lie_kernel_dim(self) -> int:
        return sum(self.lie_kernel_dims.values())

    def to_json(self) -> dict:
        def keyed(dct):
            return [{"degree": list(k), "dim": v} for k, v in sorted(dct.items())]
        return {"monoid": self.monoid.to_json(), "h1_dim": self.h1_dim,
                "h1_lie_dim": self.h1_lie_dim, "h1": keyed(self.h1_dims),
                "target_h1": keyed(self.target_h1_dims),
                "kernel_dim": self.kernel_dim, "kernel": keyed(self.kernel_dims),
                "smooth": self.smooth,
                "lie_kernel_dim": self.lie_kernel_dim, "lie_kernel": keyed(self.lie_kernel_dims),
                "component_group_flag": self.component_group_flag,
                "cocycles": {root_str(k): [_cochain_str(v) for v in reps]
                             for k, reps in sorted(self.cocycle_basis.items())}}


def _cochain_str(v: Vec) -> str:
    return " + ".join(f"{c}*u{k}" for k, c in sorted(v.items()))


def _f_image(od: OrbitData, S2: SymmetricSquareModCartan, sub: Subalgebra,
             cs: CochainSpace, phi: Vec, target: CochainSpace) -> Vec:
    """f(phi)(x) = sum_i phi(x) . v_i modulo Cartan components."""
    amb = od.ambient
    his = [amb.highest(i) for i in range(len(amb.modules))]
    out: Vec = {}
    for k, coef in phi.items():
        xi, c = cs.unknowns[k]
        prod: Vec = {}
        for h in his:
            viadd(prod, S2.product({c: Fraction(1)}, {h: Fraction(1)}))
        red = S2.reduce(prod, amb.depth[c])
        for coord, val in red.items():
            viadd(out, {target.index[(xi, coord)]: val}, coef)
    return out


def _kernel_at(od: OrbitData, S2: SymmetricSquareModCartan, hd: H1Degree,
               split: Optional[Splitting]) -> Tuple[int, int]:
    """(dim of the target H^1, dim ker f) in the degree of ``hd``."""
    sub = od.isotropy
    nu = hd.degree
    support = None if split is None else split.nil
    tcs = cochains(sub, S2, nu, support)
    tz = nullspace(coboundary_rows(sub, S2, tcs), len(tcs.unknowns)) if tcs.unknowns else []
    if split is None or not split.levi:
        zeros = [{c: Fraction(1)} for c in S2.basis(nu)]
    else:
        zeros = invariants(sub, S2, nu, split.levi)
    tb = Reducer()
    for m in zeros:
        tb.add(coboundary_vector(sub, S2, tcs, m))
    # unknowns: cocycle coefficients z_k, then the 0-cochain m
    nz = len(hd.cocycles)
    cols: List[Vec] = [_f_image(od, S2, sub, hd.cochains, z, tcs) for z in hd.cocycles]
    cols += [vscale(coboundary_vector(sub, S2, tcs, m), -1) for m in zeros]
    rows: Dict[int, Vec] = {}
    for j, col in enumerate(cols):
        for r, val in col.items():
            rows.setdefault(r, {})[j] = val
    zproj = Reducer()
    for x in nullspace(rows.values(), len(cols)):
        zpart = {k: v for k, v in x.items() if k < nz}
        if zpart:
            zproj.add(zpart)
    ker = zproj.rank - hd.coboundaries.rank
    if ker < 0:
        raise AssertionError("f does not map coboundaries to coboundaries")
    return len(tz) - tb.rank, ker


def obstruction(monoid: GeneratorMonoid, od: Optional[OrbitData] = None, *,
                lie_level: bool = True) -> ObstructionReport:
    """Kernel of f : H^1(G_v, V/g.v) -> H^1(G_v, S^2V/V(2lambda)).

    The primary computation uses rational cohomology of G_v = R.U, i.e.
    H^1(u, M)^R with R = T_v.L' reductive; T_v-invariance is the condition
    that the degree lies in ZGamma.  With ``lie_level`` the same kernel is
    also computed with H^1(g_v, M) in the same degrees (toral elements of
    g_v included), reported as ``lie_kernel_dims``.
    """
    if not is_saturated(monoid):
        raise InputError(f"{monoid} is not saturated")
    od = od or orbit_data(monoid)
    sub = od.isotropy
    M = QuotientOfV(od.ambient, sub, od.tangent_image)
    degrees = cochain_degrees(sub, M.degrees())
    inv_degrees = [nu for nu in degrees if in_lattice(monoid, nu)]
    S2 = SymmetricSquareModCartan(od.ambient, sub)
    h1_dims, tgt_dims, ker_dims, reps = {}, {}, {}, {}
    for nu, hd in h1(sub, M, inv_degrees, od.split).items():
        h1_dims[nu] = hd.dim
        reps[nu] = hd.representatives
        tgt_dims[nu], ker_dims[nu] = _kernel_at(od, S2, hd, od.split)
    lie_dims: Dict[Root, int] = {}
    lie_ker: Dict[Root, int] = {}
    if lie_level:
        for nu, hd in h1(sub, M, degrees).items():
            lie_dims[nu] = hd.dim
            if nu in inv_degrees:
                lie_ker[nu] = _kernel_at(od, S2, hd, None)[1]
    flag = _component_group_configuration(monoid)
    return ObstructionReport(monoid, h1_dims, lie_dims, tgt_dims, ker_dims, reps, flag, lie_ker)


def _component_group_configuration(monoid: GeneratorMonoid) -> bool:
    """True if some generator is a proper multiple of a primitive lattice weight."""
    from math import gcd
    for lam in monoid.generators:
        g = 0
        for c in lam:
            g = gcd(g, c)
        if g > 1:
            return True
    return False


# cocycle verification ------------------------------------------------------------


@dataclass
class CocycleCheck:
    alpha: int
    gamma: Root
    source: str             # "tangent" or "generator"
    rule: str               # "support" or "max"
    r: Optional[int]
    degree: Root
    is_cocycle: bool        # identity on pairs of root vectors of u
    equivariant: bool       # also compatible with the reductive part (relative cocycle)
    nonzero: bool
    invariant_degree: bool = False  # degree in ZGamma, i.e. a candidate for a G_v-invariant class
    zero_elsewhere: bool = False    # a relative cocycle even with phi = 0 on non-simple root vectors

    def to_json(self, d) -> dict:
        return {"alpha": d.node_name(self.alpha), "gamma": list(self.gamma), "source": self.source,
                "rule": self.rule, "r": self.r, "degree": list(self.degree),
                "cocycle": self.is_cocycle, "equivariant": self.equivariant,
                "nonzero": self.nonzero, "invariant_degree": self.invariant_degree,
                "zero_elsewhere": self.zero_elsewhere}


@dataclass
class CocycleReport:
    monoid: GeneratorMonoid
    checks: List[CocycleCheck]
    span_ok: Dict[Root, bool]
    rules_agree: Dict[Tuple[int, Root], bool]

    @property
    def all_cocycles(self) -> bool:
        """Every nonzero phi_{alpha,gamma} of degree in ZGamma satisfies the cocycle identity.

        Maps in other degrees cannot represent G_v-invariant classes; they are
        still listed in ``checks``.
        """
        return all(c.is_cocycle for c in self.checks if c.nonzero and c.invariant_degree)

    @property
    def spans(self) -> bool:
        return all(self.span_ok.values())

    def to_json(self) -> dict:
        d = self.monoid.diagram
        return {"monoid": self.monoid.to_json(),
                "all_cocycles": self.all_cocycles, "spans_h1": self.spans,
                "checks": [c.to_json(d) for c in self.checks],
                "span": [{"degree": list(k), "ok": v} for k, v in sorted(self.span_ok.items())],
                "rules_agree": [{"alpha": d.node_name(a), "gamma": list(g), "agree": v}
                                for (a, g), v in sorted(self.rules_agree.items())]}


def _r_support_rule(d: DynkinDiagram, alpha: int, gamma: Root) -> int:
    return -d.pairing(alpha, gamma) if gamma[alpha] == 0 else 0


def _r_max_rule(amb: Ambient, f_alpha: int, vec: Vec) -> int:
    r = 0
    cur = vec
    while True:
        nxt = amb.act({f_alpha: Fraction(1)}, cur)
        if not nxt:
            return r
        r += 1
        cur = nxt


def verify_cocycle_basis(monoid: GeneratorMonoid, od: Optional[OrbitData] = None,
                         tangent: Optional[TangentReport] = None,
                         obstr: Optional[ObstructionReport] = None) -> CocycleReport:
    """Build phi_{alpha,gamma} : e_alpha -> [f_alpha^r v_gamma], other root
    vectors of u -> 0, for alpha simple outside S^p(Gamma) and gamma a tangent
    weight or a generator; check them and whether they span H^1."""
    od = od or orbit_data(monoid)
    tangent = tangent or tangent_space(monoid, od)
    d = monoid.diagram
    alg = od.algebra
    amb = od.ambient
    sub = od.isotropy
    split = od.split
    nil = set(split.nil)
    M = QuotientOfV(amb, sub, od.tangent_image)
    sp = sp_of_monoid(monoid)
    e_pos = {}
    for xi in split.nil:
        (a, _), = sub.basis[xi].items()
        lab = alg.labels[a]
        if sum(lab[1]) == 1:
            e_pos[lab[1].index(1)] = xi
    sources: List[Tuple[Root, str, Vec]] = []
    for tw in tangent.weights:
        for rep in tw.representatives:
            sources.append((tw.weight, "tangent", rep))
    zero = (0,) * d.rank
    for i in range(len(amb.modules)):
        sources.append((zero, "generator", {amb.highest(i): Fraction(1)}))
    checks: List[CocycleCheck] = []
    by_degree: Dict[Root, List[Vec]] = {}
    rules: Dict[Tuple[int, Root], bool] = {}
    h1_cache: Dict[Root, H1Degree] = {}

    def h1_at(nu):
        hd = h1_cache.get(nu)
        if hd is None:
            hd = h1_cache[nu] = h1_degree(sub, M, nu, split)
        return hd

    f_of = {k: alg.index[("f", d.simple_root(k))] for k in d.nodes}
    simple_e = set(e_pos.values())
    gv_by_depth: Dict[Root, List[Vec]] = {}
    for w in od.tangent_image.basis():
        gv_by_depth.setdefault(amb.depth[next(iter(w))], []).append(w)
    for alpha in d.nodes:
        if alpha in sp or alpha not in e_pos:
            continue
        xi = e_pos[alpha]
        f_alpha = f_of[alpha]
        for gamma, src, vec in sources:
            r_max = _r_max_rule(amb, f_alpha, vec)
            r_sup = _r_support_rule(d, alpha, gamma) if src == "tangent" else None
            if src == "tangent":
                key = (alpha, gamma)
                rules[key] = rules.get(key, True) and (r_sup == r_max)
            # v_gamma is only defined modulo g.v: search the whole coset
            coset = gv_by_depth.get(amb.depth[next(iter(vec))], [])
            for rule, r in (("support", r_sup), ("max", r_max)):
                if r is None:
                    continue
                if r < 0:
                    checks.append(CocycleCheck(alpha, gamma, src, rule, r, zero, True, True, False))
                    continue
                imgs = []
                for w in [vec] + coset:
                    img = dict(w)
                    for _ in range(r):
                        img = amb.act({f_alpha: Fraction(1)}, img)
                    imgs.append(od.tangent_image.reduce(img))
                if not imgs[0]:
                    checks.append(CocycleCheck(alpha, gamma, src, rule, r, zero, True, True, False))
                    continue
                nu = _sub(amb.depth[next(iter(imgs[0]))], sub.shifts[xi])
                cs = cochains(sub, M, nu, split.nil)
                phis = [{cs.index[(xi, c)]: v for c, v in img.items()} for img in imgs]
                # values on non-simple root vectors are left free: a cocycle on u
                # is pinned down by the simple root vectors
                free = [{k: Fraction(1)} for k, (xj, _) in enumerate(cs.unknowns) if xj not in simple_e]
                rows_u = coboundary_rows(sub, M, cs, scope=nil)
                rows_all = coboundary_rows(sub, M, cs)
                strict = _solve_affine(rows_all, phis) is not None
                ok = _solve_affine(rows_u, phis + free) is not None
                phi = _solve_affine(rows_all, phis + free)
                inv_deg = in_lattice(monoid, nu)
                checks.append(CocycleCheck(alpha, gamma, src, rule, r, nu, ok, phi is not None,
                                           True, inv_deg, strict))
                if phi and inv_deg:
                    by_degree.setdefault(nu, []).append(phi)
    span_ok: Dict[Root, bool] = {}
    if obstr is not None:
        inv = list(obstr.h1_dims)
    else:
        M_deg = cochain_degrees(sub, M.degrees())
        inv = [nu for nu in M_deg if in_lattice(monoid, nu) and h1_at(nu).dim]
    for nu in inv:
        hd = h1_at(nu)
        red = Reducer()
        for b in hd.coboundaries.basis():
            red.add(b)
        base = red.rank
        for phi in by_degree.get(nu, []):
            # the cochain spaces of h1_at(nu) and of the check coincide
            red.add(phi)
        span_ok[nu] = red.rank - base == hd.dim
    return CocycleReport(monoid, checks, span_ok, rules)


def _solve_affine(rows: List[Vec], phis: List[Vec]) -> Optional[Vec]:
    """Some phis[0] + sum c_k phis[k] killed by all rows, or None."""
    n = len(phis)
    mat: List[Vec] = []
    for r in rows:
        row = {}
        for j, phi in enumerate(phis):
            val = sum(r.get(k, 0) * v for k, v in phi.items())
            if val:
                row[j] = val
        if row:
            mat.append(row)
    if not mat:
        return dict(phis[0])
    for x in nullspace(mat, n):
        t = x.get(0)
        if t:
            out: Vec = {}
            for j, c in x.items():
                viadd(out, phis[j], c / t)
            return out
    return None
