"""Dynkin diagrams, Cartan matrices, roots and weights (Bourbaki numbering).

Roots are integer tuples in simple-root coordinates, weights are integer
tuples in fundamental-weight coordinates.  Node ``k`` of a diagram carries
the simple root ``alpha_{k+1}``; nodes are numbered globally, components in
the order they appear in the type string.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, List, Sequence, Tuple

Root = Tuple[int, ...]
Weight = Tuple[int, ...]


class InputError(ValueError):
    """Malformed user input (bad type string, inconsistent data, ...)."""


class ResourceError(RuntimeError):
    """A configured size cap was exceeded."""


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TYPE_RE = re.compile(r"^([A-G])([0-9]+)$")


def _component_cartan(letter: str, n: int) -> List[List[int]]:
    """Cartan matrix a[i][j] = <alpha_i^vee, alpha_j> of an irreducible type."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if letter in "ABCD":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif letter == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
        elif letter == "D":
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0
            link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        # alpha_3, alpha_4 short
        link(1, 2, -1, -2)
        link(2, 3)
    elif letter == "G":
        # alpha_1 short
        link(0, 1, -3, -1)
    return a


def _component_lengths(letter: str, n: int) -> List[int]:
    """Half squared lengths d_i, short roots having d = 1."""
    if letter == "B":
        return [2] * (n - 1) + [1]
    if letter == "C":
        return [1] * (n - 1) + [2]
    if letter == "F":
        return [2, 2, 1, 1]
    if letter == "G":
        return [1, 3]
    return [1] * n


@dataclass(frozen=True)
class Component:
    letter: str
    rank: int
    offset: int

    @property
    def label(self) -> str:
        return f"{self.letter}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(self.offset, self.offset + self.rank)


@dataclass(frozen=True)
class DynkinDiagram:
    """A semisimple Dynkin diagram built from a type string like ``"B2xA1"``."""

    spec: str
    components: Tuple[Component, ...]
    cartan: Tuple[Tuple[int, ...], ...] = field(repr=False)
    lengths: Tuple[int, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def nodes(self) -> range:
        return range(self.rank)

    def node_name(self, k: int) -> str:
        return f"a{k + 1}"

    def parse_node(self, name) -> int:
        if isinstance(name, int):
            k = name
        else:
            m = re.fullmatch(r"a([0-9]+)", str(name).strip())
            if not m:
                raise InputError(f"bad node name {name!r}")
            k = int(m.group(1)) - 1
        if not 0 <= k < self.rank:
            raise InputError(f"node {name!r} out of range for {self.spec}")
        return k

    def component_of(self, k: int) -> Component:
        for c in self.components:
            if k in c.nodes:
                return c
        raise IndexError(k)

    def edges(self) -> List[Tuple[int, int, int]]:
        """(i, j, multiplicity) with i < j; the arrow points to the short end."""
        out = []
        for i, j in itertools.combinations(self.nodes, 2):
            if self.cartan[i][j]:
                out.append((i, j, self.cartan[i][j] * self.cartan[j][i]))
        return out

    # roots -------------------------------------------------------------

    def pairing(self, k: int, x: Sequence[int], basis: str = "root") -> int:
        """<alpha_k^vee, x> for x in the simple-root or fundamental-weight basis."""
        if basis == "weight":
            return x[k]
        return sum(self.cartan[k][j] * x[j] for j in self.nodes if x[j])

    def root_to_weight(self, x: Sequence[int]) -> Weight:
        return tuple(self.pairing(k, x) for k in self.nodes)

    def symmetric_form(self, x: Sequence, y: Sequence) -> Fraction:
        """W-invariant form, short roots of each component of squared length 2."""
        return sum(
            (Fraction(self.lengths[i] * self.cartan[i][j]) * x[i] * y[j]
             for i in self.nodes if x[i] for j in self.nodes if y[j]),
            Fraction(0),
        )

    def simple_root(self, k: int) -> Root:
        return tuple(int(i == k) for i in self.nodes)

    @cached_property
    def positive_roots(self) -> Tuple[Root, ...]:
        """All positive roots, sorted by height then coefficients.

        Grown height by height with root strings: if ``beta - q*alpha`` is the
        bottom of the alpha-string through beta then ``beta + alpha`` is a
        root iff ``q - <alpha^vee, beta> > 0``.
        """
        simple = [self.simple_root(k) for k in self.nodes]
        found = set(simple)
        layer = list(simple)
        while layer:
            nxt = set()
            for beta in layer:
                for k in self.nodes:
                    q = 0
                    down = list(beta)
                    while True:
                        down[k] -= 1
                        if tuple(down) in found:
                            q += 1
                        else:
                            break
                    if q - self.pairing(k, beta) > 0:
                        up = list(beta)
                        up[k] += 1
                        nxt.add(tuple(up))
            nxt -= found
            found |= nxt
            layer = list(nxt)
        return tuple(sorted(found, key=lambda r: (sum(r), tuple(-c for c in r))))

    @cached_property
    def root_set(self) -> FrozenSet[Root]:
        return frozenset(self.positive_roots)

    def is_root(self, x: Sequence[int]) -> bool:
        x = tuple(x)
        if all(c >= 0 for c in x):
            return x in self.root_set
        if all(c <= 0 for c in x):
            return tuple(-c for c in x) in self.root_set
        return False

    @cached_property
    def highest_roots(self) -> Tuple[Root, ...]:
        """Highest root of each component."""
        out = []
        for c in self.components:
            rs = [r for r in self.positive_roots if any(r[k] for k in c.nodes)]
            out.append(max(rs, key=sum))
        return tuple(out)

    def coroot_coeffs(self, beta: Sequence[int]) -> Tuple[Fraction, ...]:
        """beta^vee in the simple-coroot basis."""
        d_beta = self.symmetric_form(beta, beta) / 2
        return tuple(Fraction(beta[i] * self.lengths[i]) / d_beta for i in self.nodes)

    def weyl_dimension(self, lam: Sequence[int]) -> int:
        """dim V(lambda) by the Weyl dimension formula."""
        num = Fraction(1)
        for beta in self.positive_roots:
            cv = self.coroot_coeffs(beta)
            num *= sum(cv[i] * (lam[i] + 1) for i in self.nodes) / sum(cv)
        assert num.denominator == 1
        return int(num)

    def automorphisms(self) -> List[Tuple[int, ...]]:
        """All node permutations preserving the Cartan matrix."""
        return [p for p in itertools.permutations(self.nodes)
                if all(self.cartan[p[i]][p[j]] == self.cartan[i][j]
                       for i in self.nodes for j in self.nodes)]


def build_diagram(spec: str) -> DynkinDiagram:
    """Parse ``TYPE := [A-G][0-9]+ ("x" TYPE)*`` into a diagram."""
    if not isinstance(spec, str) or not spec.strip():
        raise InputError("empty type string")
    parts = spec.strip().split("x")
    comps = []
    offset = 0
    for part in parts:
        m = _TYPE_RE.match(part)
        if not m:
            raise InputError(f"malformed type {part!r} in {spec!r}")
        letter, n = m.group(1), int(m.group(2))
        if letter in _EXCEPTIONAL:
            if n not in _EXCEPTIONAL[letter]:
                raise InputError(f"no type {letter}{n}")
        elif n < _MIN_RANK[letter]:
            raise InputError(f"rank of {letter}{n} below {_MIN_RANK[letter]}")
        comps.append(Component(letter, n, offset))
        offset += n
    cartan = [[0] * offset for _ in range(offset)]
    lengths = [1] * offset
    for c in comps:
        sub = _component_cartan(c.letter, c.rank)
        for i in range(c.rank):
            for j in range(c.rank):
                cartan[c.offset + i][c.offset + j] = sub[i][j]
        for i, d in enumerate(_component_lengths(c.letter, c.rank)):
            lengths[c.offset + i] = d
    return DynkinDiagram(
        spec="x".join(c.label for c in comps),
        components=tuple(comps),
        cartan=tuple(tuple(r) for r in cartan),
        lengths=tuple(lengths),
    )


def cartan_matrix(d: DynkinDiagram) -> List[List[int]]:
    return [list(r) for r in d.cartan]


def pairing(d: DynkinDiagram, k: int, x: Sequence[int], basis: str = "root") -> int:
    return d.pairing(k, x, basis)


def symmetric_form(d: DynkinDiagram, x, y) -> Fraction:
    return d.symmetric_form(x, y)


def positive_roots(d: DynkinDiagram) -> Tuple[Root, ...]:
    return d.positive_roots


def support(x: Sequence[int]) -> FrozenSet[int]:
    return frozenset(i for i, c in enumerate(x) if c)


def fundamental_weight(d: DynkinDiagram, k: int) -> Weight:
    return tuple(int(i == k) for i in d.nodes)


# sub-diagram typing ----------------------------------------------------


def _connected_components(d: DynkinDiagram, nodes) -> List[List[int]]:
    nodes = set(nodes)
    out = []
    while nodes:
        start = min(nodes)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in list(nodes - comp):
                if d.cartan[i][j]:
                    comp.add(j)
                    stack.append(j)
        nodes -= comp
        out.append(sorted(comp))
    out.sort()
    return out


def _chain_from(d: DynkinDiagram, nodes: List[int], start: int) -> List[int]:
    chain, prev = [start], None
    while True:
        nbrs = [j for j in nodes if j != chain[-1] and d.cartan[chain[-1]][j] and j != prev]
        if not nbrs:
            return chain
        prev = chain[-1]
        chain.append(nbrs[0])


def classify_connected(d: DynkinDiagram, nodes: List[int]) -> List[Tuple[str, Tuple[int, ...]]]:
    """All Bourbaki labelings of a connected sub-diagram.

    Returns ``[(label, ordering), ...]`` where ``ordering[i]`` is the diagram
    node playing the role of ``alpha_{i+1}``.  The first entry is the
    canonical labeling; the others differ by a diagram automorphism of the
    sub-diagram.  Canonical orientation rule: among admissible labelings,
    take the lexicographically smallest ordering tuple.
    """
    n = len(nodes)
    if n == 1:
        return [("A1", (nodes[0],))]
    a = d.cartan
    deg = {i: sum(1 for j in nodes if j != i and a[i][j]) for i in nodes}
    bonds = [(i, j, a[i][j] * a[j][i]) for i, j in itertools.combinations(nodes, 2) if a[i][j]]
    mults = sorted(m for _, _, m in bonds)
    labelings: List[Tuple[str, Tuple[int, ...]]] = []

    def longer(i, j):
        return d.lengths[i] > d.lengths[j]

    if mults[-1] == 3:
        i, j, _ = bonds[0]
        short, long_ = (i, j) if longer(j, i) else (j, i)
        labelings.append(("G2", (short, long_)))
    elif mults[-1] == 2:
        di, dj, _ = next(b for b in bonds if b[2] == 2)
        if n == 4 and deg[di] == 2 and deg[dj] == 2:
            lng, sht = (di, dj) if longer(di, dj) else (dj, di)
            end1 = next(j for j in nodes if j not in (di, dj) and a[lng][j])
            end2 = next(j for j in nodes if j not in (di, dj) and a[sht][j])
            labelings.append(("F4", (end1, lng, sht, end2)))
        else:
            # chain with the double bond at one end
            end = di if deg[di] == 1 else dj
            other = dj if end == di else di
            if n == 2:
                lng, sht = (di, dj) if longer(di, dj) else (dj, di)
                labelings.append(("B2", (lng, sht)))
            else:
                start = next(i for i in nodes if deg[i] == 1 and i != end)
                chain = _chain_from(d, nodes, start)
                assert chain[-1] == end and chain[-2] == other
                letter = "B" if longer(other, end) else "C"
                labelings.append((f"{letter}{n}", tuple(chain)))
    else:
        branch = [i for i in nodes if deg[i] == 3]
        if not branch:
            ends = sorted(i for i in nodes if deg[i] == 1)
            for e in ends:
                labelings.append((f"A{n}", tuple(_chain_from(d, nodes, e))))
        else:
            c = branch[0]
            arms = []
            for j in nodes:
                if j != c and a[c][j]:
                    arm = [j]
                    prev = c
                    while True:
                        nb = [k for k in nodes if k not in (prev, arm[-1]) and a[arm[-1]][k]]
                        if not nb:
                            break
                        prev = arm[-1]
                        arm.append(nb[0])
                    arms.append(arm)
            arms.sort(key=len)
            lens = tuple(len(x) for x in arms)
            if lens[0] == 1 and lens[1] == 1:
                # D_n: long arm ends at alpha_1, branch is alpha_{n-2}
                for long_arm in (arms if n == 4 else [arms[2]]):
                    rest = [x[0] for x in arms if x is not long_arm]
                    for p, q in itertools.permutations(rest):
                        order = tuple(reversed(long_arm)) + (c, p, q)
                        labelings.append((f"D{n}", order))
            elif lens[:2] == (1, 2) and lens[2] in (2, 3, 4):
                short = arms[0][0]
                two_arms = [x for x in arms[1:] if len(x) == 2] if n == 6 else [arms[1]]
                for arm2 in two_arms:
                    other = next(x for x in arms[1:] if x is not arm2)
                    order = (arm2[1], short, arm2[0], c) + tuple(other)
                    labelings.append((f"E{n}", order))
            else:
                raise InputError(f"sub-diagram {nodes} is not of finite type")
    labelings.sort(key=lambda t: t[1])
    return labelings


def sub_diagram_type(d: DynkinDiagram, subset) -> List[Tuple[str, Tuple[int, ...]]]:
    """Decompose the induced sub-diagram into irreducible types.

    Returns ``[(label, bourbaki_ordering), ...]`` sorted by smallest node;
    each ordering is the canonical one of :func:`classify_connected`.
    """
    return [classify_connected(d, comp)[0] for comp in _connected_components(d, subset)]


def is_connected(d: DynkinDiagram, subset) -> bool:
    return len(_connected_components(d, subset)) == 1


def type_label(d: DynkinDiagram, subset) -> str:
    return "x".join(lbl for lbl, _ in sub_diagram_type(d, subset))


def root_json(x: Sequence[int]) -> List[int]:
    return [int(c) for c in x]


def name_set(d: DynkinDiagram, nodes) -> List[str]:
    return [d.node_name(k) for k in sorted(nodes)]


def weight_str(d: DynkinDiagram, w: Sequence[int], sym: str = "w") -> str:
    terms = []
    for k, c in enumerate(w):
        if c:
            terms.append(f"{'' if c == 1 else c}{sym}{k + 1}")
    return "+".join(terms).replace("+-", "-") if terms else "0"


def root_str(x: Sequence[int]) -> str:
    return weight_str(None, x, "a")
