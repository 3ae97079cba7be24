"""Exact sparse linear algebra over the rationals.

Vectors are plain ``dict`` objects mapping an integer coordinate to a
nonzero :class:`fractions.Fraction` (or ``int``).  Zero entries are never
stored, so ``not v`` is the zero test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

Vec = Dict[int, Fraction]


def vadd(a: Vec, b: Vec, c=1) -> Vec:
    """Return ``a + c*b`` as a new vector."""
    out = dict(a)
    if not c:
        return out
    for k, x in b.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def viadd(a: Vec, b: Vec, c=1) -> None:
    """In-place ``a += c*b``."""
    if not c:
        return
    for k, x in b.items():
        y = a.get(k, 0) + c * x
        if y:
            a[k] = y
        else:
            a.pop(k, None)


def vscale(a: Vec, c) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in a.items()}


def vclean(a: Vec) -> Vec:
    return {k: x for k, x in a.items() if x}


class Reducer:
    """Incremental reduced row echelon basis of a subspace.

    Every stored row has coefficient 1 at its pivot and 0 at every other
    pivot, which makes :meth:`reduce` a single linear pass.  If ``track`` is
    set, each row also records its expression in terms of the vectors passed
    to :meth:`add`, so :meth:`express` can solve membership problems.
    """

    def __init__(self, track: bool = False):
        self.rows: Dict[int, Vec] = {}
        self.track = track
        self.combos: Dict[int, Vec] = {}
        self._count = 0

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def _reduce(self, v: Vec, combo: Optional[Vec]):
        res = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = res.get(p)
            if c:
                viadd(res, self.rows[p], -c)
                if combo is not None:
                    viadd(combo, self.combos[p], -c)
        return res

    def reduce(self, v: Vec) -> Vec:
        """Residual of ``v`` modulo the span; zero iff ``v`` lies in it."""
        return self._reduce(v, None)

    def contains(self, v: Vec) -> bool:
        return not self._reduce(v, None)

    def add(self, v: Vec) -> bool:
        """Add ``v`` to the span.  Returns True iff the rank increased."""
        idx = self._count
        self._count += 1
        combo = {idx: Fraction(1)} if self.track else None
        res = self._reduce(v, combo)
        if not res:
            return False
        p = min(res)
        c = res[p]
        if c != 1:
            inv = 1 / Fraction(c)
            res = vscale(res, inv)
            if combo is not None:
                combo = vscale(combo, inv)
        for q, row in self.rows.items():
            d = row.get(p)
            if d:
                viadd(row, res, -d)
                if combo is not None:
                    viadd(self.combos[q], combo, -d)
        self.rows[p] = res
        if combo is not None:
            self.combos[p] = combo
        return True

    def express(self, v: Vec) -> Optional[Vec]:
        """Coefficients of ``v`` in terms of the added vectors, or None.

        Requires ``track=True``.  Added vectors that turned out dependent
        never receive a coefficient.
        """
        if not self.track:
            raise ValueError("express() needs a tracking reducer")
        out: Vec = {}
        res = dict(v)
        for p in [k for k in v if k in self.rows]:
            c = res.get(p)
            if c:
                viadd(res, self.rows[p], -c)
                viadd(out, self.combos[p], c)
        if res:
            return None
        return out

    def basis(self) -> List[Vec]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]


def span_basis(vectors: Iterable[Vec]) -> Reducer:
    red = Reducer()
    for v in vectors:
        red.add(v)
    return red


def rank(vectors: Iterable[Vec]) -> int:
    return span_basis(vectors).rank


def nullspace(rows: Iterable[Vec], ncols: int) -> List[Vec]:
    """Basis of ``{x : r.x = 0 for every row r}`` in ``Q^ncols``.

    Rows are sparse with column indices in ``range(ncols)``.  The basis is
    the standard one attached to the free columns of the reduced echelon
    form, in increasing order of free column.
    """
    red = span_basis(rows)
    out = []
    for f in range(ncols):
        if f in red.rows:
            continue
        x: Vec = {f: Fraction(1)}
        for p, row in red.rows.items():
            c = row.get(f)
            if c:
                x[p] = -c
        out.append(x)
    return out


def independent(vectors: Sequence[Vec]) -> bool:
    return rank(vectors) == len(vectors)


def solve_dense(a: Sequence[Sequence], b: Sequence) -> Optional[List[Fraction]]:
    """One solution of ``a x = b`` (dense, exact), or None if inconsistent."""
    n = len(a[0]) if a else 0
    red = Reducer()
    for row, rhs in zip(a, b):
        v = {j: Fraction(x) for j, x in enumerate(row) if x}
        if rhs:
            v[n] = Fraction(rhs)
        red.add(v)
    if n in red.rows:
        return None
    x = [Fraction(0)] * n
    for p, row in red.rows.items():
        x[p] = row.get(n, Fraction(0))
    return x


def from_list(xs: Sequence) -> Vec:
    return {i: Fraction(x) for i, x in enumerate(xs) if x}


def to_list(v: Vec, n: int) -> List[Fraction]:
    return [v.get(i, Fraction(0)) for i in range(n)]
