"""Catalog of spherical roots of a semisimple group and the sets attached
to a spherical root (S(gamma), S^p(sigma), S^pp(sigma), compatibility)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .rootsystem import (
    DynkinDiagram,
    InputError,
    Root,
    _connected_components,
    classify_connected,
    support,
)

# Row tags, one per line of the table of spherical roots.
A1xA1 = "A1xA1"
A_SUM = "An-sum"
TWO_ALPHA = "2alpha"
A3_MIDDLE = "A3-middle"
B_SUM = "Bn-sum"
TWO_B_SUM = "2Bn-sum"
B3_SPECIAL = "B3-special"
C_ROW = "Cn"
D_ROW = "Dn"
D4_SPECIAL_1 = "D4-special-1"
D4_SPECIAL_2 = "D4-special-2"
F4_ROW = "F4"
G2_DOUBLE = "G2-double"
G2_SUM = "G2-sum"

ROW_TAGS = (A1xA1, A_SUM, TWO_ALPHA, A3_MIDDLE, B_SUM, TWO_B_SUM, B3_SPECIAL,
            C_ROW, D_ROW, D4_SPECIAL_1, D4_SPECIAL_2, F4_ROW, G2_DOUBLE, G2_SUM)


def _rows_for_type(letter: str, n: int) -> List[Tuple[str, Tuple[int, ...]]]:
    """Coefficient patterns (in Bourbaki labels of the support) per type."""
    if letter == "A":
        if n == 1:
            return [(TWO_ALPHA, (2,))]
        rows = [(A_SUM, (1,) * n)]
        if n == 3:
            rows.append((A3_MIDDLE, (1, 2, 1)))
        return rows
    if letter == "B":
        rows = [(B_SUM, (1,) * n), (TWO_B_SUM, (2,) * n)]
        if n == 3:
            rows.append((B3_SPECIAL, (1, 2, 3)))
        return rows
    if letter == "C":
        return [(C_ROW, (1,) + (2,) * (n - 2) + (1,))]
    if letter == "D":
        rows = [(D_ROW, (2,) * (n - 2) + (1, 1))]
        if n == 4:
            rows += [(D4_SPECIAL_1, (1, 2, 2, 1)), (D4_SPECIAL_2, (1, 2, 1, 2))]
        return rows
    if letter == "F" and n == 4:
        return [(F4_ROW, (1, 2, 3, 2))]
    if letter == "G" and n == 2:
        return [(G2_DOUBLE, (4, 2)), (G2_SUM, (1, 1))]
    return []


@dataclass(frozen=True, order=True)
class SphericalRoot:
    """A spherical root: coefficient vector plus its table row."""

    vector: Root
    row: str
    support: FrozenSet[int]
    # Bourbaki ordering of the support used to produce the row pattern
    labeling: Tuple[int, ...] = ()

    def __str__(self):
        from .rootsystem import root_str
        return root_str(self.vector)

    def to_json(self) -> dict:
        return {"coeffs": list(self.vector), "row": self.row}


@lru_cache(maxsize=None)
def enumerate_spherical_roots(d: DynkinDiagram) -> Tuple[SphericalRoot, ...]:
    """The catalog Sigma(G), sorted by (support size, vector)."""
    found: Dict[Root, SphericalRoot] = {}
    n = d.rank

    def emit(vec, row, labeling):
        vec = tuple(vec)
        if vec not in found:
            found[vec] = SphericalRoot(vec, row, support(vec), tuple(labeling))

    for size in range(1, n + 1):
        for subset in itertools.combinations(d.nodes, size):
            if len(_connected_components(d, subset)) != 1:
                continue
            for label, order in classify_connected(d, list(subset)):
                letter, rk = label[0], int(label[1:])
                for row, pattern in _rows_for_type(letter, rk):
                    vec = [0] * n
                    for node, c in zip(order, pattern):
                        vec[node] = c
                    emit(vec, row, order)
    for i, j in itertools.combinations(d.nodes, 2):
        if d.cartan[i][j] == 0:
            vec = [0] * n
            vec[i] = vec[j] = 1
            emit(vec, A1xA1, (i, j))
    return tuple(sorted(found.values(), key=lambda s: (len(s.support), tuple(-c for c in s.vector))))


@lru_cache(maxsize=None)
def catalog_index(d: DynkinDiagram) -> Dict[Root, SphericalRoot]:
    return {s.vector: s for s in enumerate_spherical_roots(d)}


def lookup(d: DynkinDiagram, vector: Sequence[int]) -> Optional[SphericalRoot]:
    return catalog_index(d).get(tuple(vector))


def spherical_root(d: DynkinDiagram, vector: Sequence[int]) -> SphericalRoot:
    s = lookup(d, vector)
    if s is None:
        raise InputError(f"{list(vector)} is not a spherical root of {d.spec}")
    return s


def s_of_gamma(d: DynkinDiagram, gamma) -> FrozenSet[int]:
    """S(gamma): simple roots delta with gamma - delta a positive root."""
    vec = _vec(gamma)
    out = set()
    for k in d.nodes:
        diff = list(vec)
        diff[k] -= 1
        if all(c >= 0 for c in diff) and tuple(diff) in d.root_set:
            out.add(k)
    return frozenset(out)


def sp_of_sigma(d: DynkinDiagram, sigma) -> FrozenSet[int]:
    """S^p(sigma): simple roots alpha with <alpha^vee, sigma> = 0."""
    vec = _vec(sigma)
    return frozenset(k for k in d.nodes if d.pairing(k, vec) == 0)


def spp_of_sigma(d: DynkinDiagram, sigma: SphericalRoot) -> FrozenSet[int]:
    base = sp_of_sigma(d, sigma) & sigma.support
    if sigma.row == B_SUM:
        return base - {sigma.labeling[-1]}
    letter = _support_letter(d, sigma)
    if letter == "C":
        return base - {sigma.labeling[0]}
    return base


def _support_letter(d: DynkinDiagram, sigma: SphericalRoot) -> str:
    if sigma.row == A1xA1:
        return "A1xA1"
    label, _ = classify_connected(d, sorted(sigma.support))[0]
    # B2 and C2 coincide; only n >= 3 counts as type C
    if label[0] == "C" and int(label[1:]) >= 3:
        return "C"
    return label[0]


def is_compatible(d: DynkinDiagram, sp, sigma: SphericalRoot) -> bool:
    sp = frozenset(sp)
    return spp_of_sigma(d, sigma) <= sp <= sp_of_sigma(d, sigma)


def doubled(d: DynkinDiagram, sigma: SphericalRoot) -> Optional[SphericalRoot]:
    """2*sigma if it is again in the catalog, else None."""
    return lookup(d, tuple(2 * c for c in sigma.vector))


def _vec(x) -> Tuple[int, ...]:
    return x.vector if isinstance(x, SphericalRoot) else tuple(x)


def apply_automorphism(perm: Sequence[int], vec: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * len(vec)
    for i, c in enumerate(vec):
        out[perm[i]] = c
    return tuple(out)
