"""Exact models of semisimple Lie algebras and their irreducible modules.

The Lie algebra has basis ``e_beta, f_beta`` (beta positive) and ``h_k``
(k simple).  Non-simple root vectors are defined recursively by

    e_beta = [e_i, e_{beta - alpha_i}] / (p + 1)
    f_beta = c_beta [f_{beta - alpha_i}, f_i]

where ``alpha_i`` is the first simple root with ``beta - alpha_i`` a root,
``p`` is the depth of the alpha_i-string through ``beta - alpha_i`` and
``c_beta`` is fixed by ``[e_beta, f_beta] = h_beta`` (the coroot).  The same
recipe evaluated on the simple generators of any module gives the module
action of every basis element, so structure constants and module actions
are consistent by construction.

Irreducible modules are built weight space by weight space from the
highest weight vector: the candidates ``f_k b`` spanning a weight space are
compared through their images under all ``e_j``, which is injective below
the top weight of an irreducible module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg
from .linalg import Reducer, Vec, vadd, viadd, vscale
from .rootsystem import DynkinDiagram, ResourceError, Root, Weight

Mat = Dict[int, Vec]  # column j -> image of basis vector j
Label = Tuple[str, object]  # ("e", root) | ("f", root) | ("h", k)

DEFAULT_DIM_CAP = 2000


# sparse matrices ----------------------------------------------------------


def mat_apply(m: Mat, v: Vec) -> Vec:
    out: Vec = {}
    for j, c in v.items():
        col = m.get(j)
        if col:
            viadd(out, col, c)
    return out


def mat_mul(a: Mat, b: Mat) -> Mat:
    out = {}
    for j, col in b.items():
        img = mat_apply(a, col)
        if img:
            out[j] = img
    return out


def mat_comm(a: Mat, b: Mat) -> Mat:
    ab, ba = mat_mul(a, b), mat_mul(b, a)
    out = {}
    for j in set(ab) | set(ba):
        col = vadd(ab.get(j, {}), ba.get(j, {}), -1)
        if col:
            out[j] = col
    return out


def mat_scale(a: Mat, c) -> Mat:
    return {j: vscale(col, c) for j, col in a.items()} if c else {}


def mat_lincomb(terms: Iterable[Tuple[object, Mat]]) -> Mat:
    out: Mat = {}
    for c, m in terms:
        for j, col in m.items():
            viadd(out.setdefault(j, {}), col, c)
    return {j: col for j, col in out.items() if col}


def mat_equal(a: Mat, b: Mat) -> bool:
    keys = {j for j in a if a[j]} | {j for j in b if b[j]}
    return all(a.get(j, {}) == b.get(j, {}) for j in keys)


# irreducible modules -------------------------------------------------------


class IrreducibleModule:
    """V(lambda) with an exact weight basis.

    ``depth[i]`` is lambda - (weight of basis vector i) in simple-root
    coordinates; basis vector 0 is the highest weight vector.
    """

    def __init__(self, diagram: DynkinDiagram, lam: Sequence[int], cap: int = DEFAULT_DIM_CAP,
                 algebra: "LieAlgebra" = None):
        if len(lam) != diagram.rank or any(c < 0 for c in lam):
            raise ValueError(f"{list(lam)} is not a dominant weight of {diagram.spec}")
        self.diagram = diagram
        self.lam: Weight = tuple(lam)
        self.expected_dim = diagram.weyl_dimension(self.lam)
        if self.expected_dim > cap:
            raise ResourceError(
                f"dim V({list(lam)}) = {self.expected_dim} exceeds the module cap {cap}")
        self._algebra = algebra
        self.depth: List[Root] = []
        self.by_depth: Dict[Root, List[int]] = {}
        n = diagram.rank
        self.E: List[Mat] = [dict() for _ in range(n)]
        self.F: List[Mat] = [dict() for _ in range(n)]
        self._build()
        self._cache: Dict[Label, Mat] = {}

    @property
    def dim(self) -> int:
        return len(self.depth)

    def weight(self, i: int) -> Weight:
        d = self.diagram.root_to_weight(self.depth[i])
        return tuple(a - b for a, b in zip(self.lam, d))

    def _new(self, dep: Root) -> int:
        idx = len(self.depth)
        self.depth.append(dep)
        self.by_depth.setdefault(dep, []).append(idx)
        return idx

    def _build(self):
        d = self.diagram
        n = d.rank
        zero = (0,) * n
        self._new(zero)
        level = [zero]
        while level:
            targets: Dict[Root, List[Tuple[int, int]]] = {}
            for dep in level:
                for k in range(n):
                    t = list(dep)
                    t[k] += 1
                    targets.setdefault(tuple(t), [])
            for t in sorted(targets):
                cands = []
                for k in range(n):
                    if t[k] == 0:
                        continue
                    src = list(t)
                    src[k] -= 1
                    for b in self.by_depth.get(tuple(src), []):
                        cands.append((k, b))
                if not cands:
                    continue
                red = Reducer(track=True)
                images = []
                basis_ids = {}
                for pos, (k, b) in enumerate(cands):
                    img = self._e_of_f(k, b)
                    images.append(img)
                    if red.add(img):
                        basis_ids[pos] = None
                if not basis_ids:
                    continue
                for pos in basis_ids:
                    basis_ids[pos] = self._new(t)
                for pos, (k, b) in enumerate(cands):
                    coef = red.express(images[pos])
                    assert coef is not None
                    col = {basis_ids[p]: c for p, c in coef.items() if c}
                    if col:
                        self.F[k][b] = col
                for pos, idx in basis_ids.items():
                    for j in range(n):
                        tj = t[:j] + (t[j] - 1,) + t[j + 1:]
                        part = {r: c for r, c in images[pos].items() if self.depth[r] == tj}
                        if part:
                            self.E[j][idx] = part
            level = [t for t in sorted(targets) if t in self.by_depth]
        if self.dim != self.expected_dim:
            raise AssertionError(
                f"built dim {self.dim} != Weyl dimension {self.expected_dim} for {self.lam}")

    def _e_of_f(self, k: int, b: int) -> Vec:
        """Image of f_k b under all e_j, as one vector over lower-depth indices."""
        d = self.diagram
        out: Vec = {}
        for j in range(d.rank):
            eb = self.E[j].get(b)
            if eb:
                viadd(out, mat_apply(self.F[k], eb))
        mu_k = self.lam[k] - d.pairing(k, self.depth[b])
        if mu_k:
            viadd(out, {b: Fraction(1)}, mu_k)
        return out

    # actions -----------------------------------------------------------

    def h_matrix(self, k: int) -> Mat:
        d = self.diagram
        out = {}
        for i, dep in enumerate(self.depth):
            c = self.lam[k] - d.pairing(k, dep)
            if c:
                out[i] = {i: Fraction(c)}
        return out

    @property
    def algebra(self) -> "LieAlgebra":
        if self._algebra is None:
            self._algebra = lie_algebra(self.diagram)
        return self._algebra

    def matrix(self, label: Label) -> Mat:
        """Action matrix of a Lie algebra basis element."""
        m = self._cache.get(label)
        if m is not None:
            return m
        kind, x = label
        d = self.diagram
        if kind == "h":
            m = self.h_matrix(x)
        else:
            beta = tuple(x)
            if sum(beta) == 1:
                k = beta.index(1)
                m = self.E[k] if kind == "e" else self.F[k]
            else:
                i, rest, se, sf = self.algebra.recipe[beta]
                if kind == "e":
                    m = mat_scale(mat_comm(self.matrix(("e", d.simple_root(i))),
                                           self.matrix(("e", rest))), se)
                else:
                    m = mat_scale(mat_comm(self.matrix(("f", rest)),
                                           self.matrix(("f", d.simple_root(i)))), sf)
        self._cache[label] = m
        return m

    def element_matrix(self, x: Vec) -> Mat:
        """Action of a Lie algebra element given in basis-index coordinates."""
        labels = self.algebra.labels
        return mat_lincomb((c, self.matrix(labels[a])) for a, c in x.items())

    def act(self, label, v: Vec, power: int = 1) -> Vec:
        m = self.matrix(label) if isinstance(label, tuple) else self.element_matrix(label)
        for _ in range(power):
            v = mat_apply(m, v)
        return v

    def highest_vector(self) -> Vec:
        return {0: Fraction(1)}

    def weight_multiplicities(self) -> Dict[Weight, int]:
        out: Dict[Weight, int] = {}
        for i in range(self.dim):
            w = self.weight(i)
            out[w] = out.get(w, 0) + 1
        return out


# Lie algebra -----------------------------------------------------------------


class LieAlgebra:
    """Chevalley-type basis with exact structure constants."""

    def __init__(self, diagram: DynkinDiagram):
        self.diagram = diagram
        d = diagram
        pos = d.positive_roots
        self.labels: List[Label] = ([("e", r) for r in pos] + [("f", r) for r in pos]
                                    + [("h", k) for k in d.nodes])
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.recipe: Dict[Root, Tuple[int, Root, Fraction, Fraction]] = {}
        for beta in pos:
            if sum(beta) == 1:
                continue
            for i in d.nodes:
                rest = list(beta)
                rest[i] -= 1
                rest = tuple(rest)
                if beta[i] > 0 and rest in d.root_set:
                    break
            p = 0
            down = list(rest)
            while True:
                down[i] -= 1
                if tuple(down) in d.root_set:
                    p += 1
                else:
                    break
            self.recipe[beta] = (i, rest, Fraction(1, p + 1), Fraction(1, p + 1))
        self._fix_f_scalars()
        self.brackets = self._structure_constants()

    @property
    def dim(self) -> int:
        return len(self.labels)

    def weight(self, a: int) -> Root:
        kind, x = self.labels[a]
        if kind == "h":
            return (0,) * self.diagram.rank
        return tuple(x) if kind == "e" else tuple(-c for c in x)

    def shift(self, a: int) -> Root:
        """Change of T_ad-degree (lambda - mu) under the action of basis element a."""
        return tuple(-c for c in self.weight(a))

    @cached_property
    def _faithful(self) -> List[IrreducibleModule]:
        d = self.diagram
        mods = []
        for theta in d.highest_roots:
            mods.append(IrreducibleModule(d, d.root_to_weight(theta), cap=10 ** 6, algebra=self))
        return mods

    def _rep(self, label: Label) -> Mat:
        """Matrix in the direct sum of the adjoint modules of the components."""
        out: Mat = {}
        off = 0
        for m in self._faithful:
            for j, col in m.matrix(label).items():
                out[j + off] = {i + off: c for i, c in col.items()}
            off += m.dim
        return out

    def _fix_f_scalars(self):
        d = self.diagram
        hs = [self._rep(("h", k)) for k in d.nodes]
        for beta in d.positive_roots:
            if sum(beta) == 1:
                continue
            for m in self._faithful:
                m._cache.clear()
            br = mat_comm(self._rep(("e", beta)), self._rep(("f", beta)))
            cv = d.coroot_coeffs(beta)
            target = mat_lincomb((cv[k], hs[k]) for k in d.nodes)
            j = next(j for j in target if target[j])
            i = next(iter(target[j]))
            c = br[j][i] / target[j][i]
            assert mat_equal(br, mat_scale(target, c)), beta
            i_, rest, se, sf = self.recipe[beta]
            self.recipe[beta] = (i_, rest, se, sf / c)
        for m in self._faithful:
            m._cache.clear()

    def _structure_constants(self) -> Dict[Tuple[int, int], Vec]:
        d = self.diagram
        reps = [self._rep(lab) for lab in self.labels]
        h_idx = [self.index[("h", k)] for k in d.nodes]
        diag_pos = sorted({j for a in h_idx for j in reps[a]})
        out = {}
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                m = mat_comm(reps[a], reps[b])
                if not any(m.values()):
                    continue
                w = tuple(x + y for x, y in zip(self.weight(a), self.weight(b)))
                if any(w):
                    lab = ("e", w) if all(c >= 0 for c in w) else ("f", tuple(-c for c in w))
                    c_idx = self.index[lab]
                    ref = reps[c_idx]
                    j = next(j for j in ref if ref[j])
                    i = next(iter(ref[j]))
                    coef = m[j][i] / ref[j][i]
                    assert mat_equal(m, mat_scale(ref, coef))
                    vec = {c_idx: coef}
                else:
                    rows = [[reps[h].get(p, {}).get(p, 0) for h in h_idx] for p in diag_pos]
                    rhs = [m.get(p, {}).get(p, 0) for p in diag_pos]
                    sol = linalg.solve_dense(rows, rhs)
                    assert sol is not None
                    vec = {h_idx[k]: c for k, c in enumerate(sol) if c}
                    assert mat_equal(m, mat_lincomb((c, reps[h]) for h, c in vec.items()))
                out[(a, b)] = vec
        return out

    def bracket_basis(self, a: int, b: int) -> Vec:
        if a == b:
            return {}
        if a < b:
            return self.brackets.get((a, b), {})
        return vscale(self.brackets.get((b, a), {}), -1)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        out: Vec = {}
        for a, ca in x.items():
            for b, cb in y.items():
                viadd(out, self.bracket_basis(a, b), ca * cb)
        return out

    def jacobi_violations(self, limit: Optional[int] = None) -> List[Tuple[int, int, int]]:
        bad = []
        n = self.dim
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    x, y, z = ({a: 1}, {b: 1}, {c: 1})
                    s = self.bracket(x, self.bracket(y, z))
                    viadd(s, self.bracket(y, self.bracket(z, x)))
                    viadd(s, self.bracket(z, self.bracket(x, y)))
                    if s:
                        bad.append((a, b, c))
                        if limit and len(bad) >= limit:
                            return bad
        return bad


_ALGEBRAS: Dict[DynkinDiagram, LieAlgebra] = {}


def lie_algebra(d: DynkinDiagram) -> LieAlgebra:
    """Build (or fetch the cached) Lie algebra model of a diagram."""
    alg = _ALGEBRAS.get(d)
    if alg is None:
        alg = _ALGEBRAS[d] = LieAlgebra(d)
    return alg


build_lie_algebra = lie_algebra


_MODULES: Dict[Tuple[DynkinDiagram, Weight], IrreducibleModule] = {}


def build_irreducible(L, lam: Sequence[int], cap: int = DEFAULT_DIM_CAP) -> IrreducibleModule:
    """V(lambda) over the algebra ``L`` (a LieAlgebra or a DynkinDiagram)."""
    alg = L if isinstance(L, LieAlgebra) else lie_algebra(L)
    key = (alg.diagram, tuple(lam))
    mod = _MODULES.get(key)
    if mod is None:
        mod = IrreducibleModule(alg.diagram, lam, cap=cap, algebra=alg)
        _MODULES[key] = mod
    return mod


def act(module: IrreducibleModule, word: Sequence[Label], v: Vec) -> Vec:
    """Apply a word of basis elements, rightmost letter first."""
    for lab in reversed(list(word)):
        v = module.act(lab, v)
    return v


# tensor and symmetric squares ------------------------------------------------


class ProductModule:
    """V_i (x) V_j, or S^2 V_i when ``symmetric``.

    Basis: pairs (p, q) of module indices, with p <= q in the symmetric case
    where (p, q) stands for the product p.q = (p(x)q + q(x)p)/2 up to scaling.
    """

    def __init__(self, vi: IrreducibleModule, vj: IrreducibleModule, symmetric: bool = False):
        if vi.diagram != vj.diagram:
            raise ValueError("modules over different algebras")
        if symmetric and vi is not vj and vi.lam != vj.lam:
            raise ValueError("symmetric square needs i = j")
        self.vi, self.vj, self.symmetric = vi, vj, symmetric
        self.pairs: List[Tuple[int, int]] = []
        for p in range(vi.dim):
            for q in range(p if symmetric else 0, vj.dim):
                self.pairs.append((p, q))
        self.index = {pq: n for n, pq in enumerate(self.pairs)}
        self.by_depth: Dict[Root, List[int]] = {}
        for n, (p, q) in enumerate(self.pairs):
            dep = tuple(a + b for a, b in zip(vi.depth[p], vj.depth[q]))
            self.by_depth.setdefault(dep, []).append(n)

    @property
    def dim(self) -> int:
        return len(self.pairs)

    def _pair(self, p: int, q: int) -> int:
        return self.index[(min(p, q), max(p, q)) if self.symmetric else (p, q)]

    def act(self, label: Label, v: Vec) -> Vec:
        mi, mj = self.vi.matrix(label), self.vj.matrix(label)
        out: Vec = {}
        for n, c in v.items():
            p, q = self.pairs[n]
            for p2, x in mi.get(p, {}).items():
                viadd(out, {self._pair(p2, q): x}, c)
            for q2, y in mj.get(q, {}).items():
                viadd(out, {self._pair(p, q2): y}, c)
        return out

    def singular_vectors(self) -> Dict[Root, List[Vec]]:
        """Joint kernel of the simple raising operators, per depth."""
        d = self.vi.diagram
        out = {}
        for dep, cols in sorted(self.by_depth.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            rows: Dict[Tuple[int, int], Vec] = {}
            for local, n in enumerate(cols):
                for k in d.nodes:
                    for t, c in self.act(("e", d.simple_root(k)), {n: Fraction(1)}).items():
                        rows.setdefault((k, t), {})[local] = c
            ker = linalg.nullspace(rows.values(), len(cols))
            if ker:
                out[dep] = [{cols[i]: c for i, c in v.items()} for v in ker]
        return out


@dataclass
class CartanKernel:
    """Complement K of the Cartan component V(lambda_i + lambda_j) in a product."""

    product: ProductModule
    basis: List[Vec]
    cartan_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_submodule(self) -> bool:
        red = linalg.span_basis(self.basis)
        alg = self.product.vi.algebra
        return all(red.contains(self.product.act(lab, v)) for lab in alg.labels for v in self.basis)


def cartan_kernel(vi: IrreducibleModule, vj: IrreducibleModule, symmetric: bool = False) -> CartanKernel:
    """Submodule generated by the singular vectors below the top weight.

    The product is completely reducible and the top weight has multiplicity
    one, so the remaining singular vectors generate exactly the sum of the
    non-Cartan isotypic components.
    """
    d = vi.diagram
    prod = ProductModule(vi, vj, symmetric)
    zero = (0,) * d.rank
    seeds = [v for dep, vs in prod.singular_vectors().items() if dep != zero for v in vs]
    red = Reducer()
    frontier = [v for v in seeds if red.add(v)]
    lowering = [("f", d.simple_root(k)) for k in d.nodes]
    while frontier:
        nxt = []
        for v in frontier:
            for lab in lowering:
                w = prod.act(lab, v)
                if w and red.add(w):
                    nxt.append(w)
        frontier = nxt
    top = tuple(a + b for a, b in zip(vi.lam, vj.lam))
    cdim = d.weyl_dimension(top)
    basis = red.basis()
    assert len(basis) + cdim == prod.dim, "dimension identity violated"
    return CartanKernel(prod, basis, cdim)
