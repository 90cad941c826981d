"""Exact arithmetic in finitely generated abelian groups.

A group is presented as ``Z/o_1 x ... x Z/o_n`` where each order ``o_i >= 0``
and ``o_i = 0`` marks an infinite cyclic factor.  Elements are integer
coefficient vectors, stored canonically (torsion coordinates reduced into
``[0, o_i)``).  A subgroup is stored as the column-style Hermite normal form
of the integer lattice spanned by its generators together with the relation
vectors ``o_i * e_i`` inside the free cover ``Z^n``.  Because the HNF is
canonical, two subgroups are equal if and only if their stored matrices are
identical, and membership reduces to back-substitution along pivot rows.

Quotients are described by invariant factors ``d_1 | d_2 | ...`` obtained
from the Smith normal form; factors equal to 1 are suppressed and ``0``
denotes a free summand and sorts last, so e.g. ``(2, 4, 0)`` means
``Z/2 + Z/4 + Z``.

Everything runs on plain Python integers, so there is no overflow anywhere.

>>> pres = GroupPresentation((2, 0), ("t", "u"))
>>> s = subgroup_from_generators(pres, [pres.element((1, 2))])
>>> s.contains(pres.element((1, 2))), s.contains(pres.element((0, 1)))
(True, False)
>>> quotient_invariants(pres, s)
(4,)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class GroupPresentation:
    """Direct sum of cyclic groups, given by orders (0 = infinite cyclic)."""

    orders: tuple[int, ...]
    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.orders) != len(self.names):
            raise ValueError("orders and names must have equal length")
        if any(o < 0 for o in self.orders):
            raise ValueError("orders must be non-negative")

    @property
    def rank(self) -> int:
        return len(self.orders)

    def reduce(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        if len(coeffs) != self.rank:
            raise ValueError(
                "coefficient vector of length %d for presentation of rank %d"
                % (len(coeffs), self.rank)
            )
        return tuple(
            c % o if o else c for c, o in zip(coeffs, self.orders)
        )

    def element(self, coeffs: Sequence[int]) -> "GroupElement":
        return GroupElement(self, self.reduce(coeffs))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def basis_element(self, i: int) -> "GroupElement":
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return self.element(coeffs)

    def basis(self) -> tuple["GroupElement", ...]:
        return tuple(self.basis_element(i) for i in range(self.rank))

    def torsion_elements(self) -> Iterator["GroupElement"]:
        """All elements of the finite torsion subgroup (free coords zero)."""
        ranges = [range(o) if o else range(1) for o in self.orders]
        for coeffs in _iproduct(*ranges):
            yield GroupElement(self, tuple(coeffs))

    def torsion_order(self) -> int:
        n = 1
        for o in self.orders:
            if o:
                n *= o
        return n


@dataclass(frozen=True)
class GroupElement:
    """Canonical coefficient vector in a fixed presentation."""

    pres: GroupPresentation
    coeffs: tuple[int, ...]

    def _check(self, other: "GroupElement") -> None:
        if self.pres != other.pres:
            raise ValueError("elements belong to different presentations")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.pres.element(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.pres.element(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "GroupElement":
        return self.pres.element(tuple(-a for a in self.coeffs))

    def __mul__(self, n: int) -> "GroupElement":
        if not isinstance(n, int):
            return NotImplemented
        return self.pres.element(tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def hnf_columns(
    vectors: Iterable[Sequence[int]], rank: int
) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Canonical column-style Hermite normal form of an integer lattice.

    Returns ``(columns, pivot_rows)``.  Column ``j`` has its topmost nonzero
    entry (the pivot, always positive) in row ``pivot_rows[j]``, pivot rows
    strictly increase with ``j``, and every other entry in a pivot row is
    reduced into ``[0, pivot)``.  Equal lattices yield bit-identical output.
    """
    cols = [list(v) for v in vectors if any(v)]
    for c in cols:
        if len(c) != rank:
            raise ValueError("generator of wrong length")
    h = 0
    pivot_rows = []
    for r in range(rank):
        if h == len(cols):
            break
        # gcd-eliminate until at most one column c >= h is nonzero in row r
        while True:
            live = [c for c in range(h, len(cols)) if cols[c][r] != 0]
            if len(live) <= 1:
                break
            c0 = min(live, key=lambda c: abs(cols[c][r]))
            for c in live:
                if c == c0:
                    continue
                q = cols[c][r] // cols[c0][r]
                if q:
                    for i in range(rank):
                        cols[c][i] -= q * cols[c0][i]
        live = [c for c in range(h, len(cols)) if cols[c][r] != 0]
        if not live:
            continue
        c0 = live[0]
        cols[h], cols[c0] = cols[c0], cols[h]
        if cols[h][r] < 0:
            cols[h] = [-x for x in cols[h]]
        p = cols[h][r]
        for c in range(h):
            q = cols[c][r] // p  # floor => remainder in [0, p)
            if q:
                for i in range(rank):
                    cols[c][i] -= q * cols[h][i]
        pivot_rows.append(r)
        h += 1
    return tuple(tuple(c) for c in cols[:h]), tuple(pivot_rows)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup in canonical HNF; includes the relation lattice by design."""

    pres: GroupPresentation
    columns: tuple[tuple[int, ...], ...]
    pivot_rows: tuple[int, ...]

    def _solve(self, target: Sequence[int]) -> list[int] | None:
        """Integer coordinates of target in the column lattice, or None."""
        v = list(target)
        out = []
        for col, r in zip(self.columns, self.pivot_rows):
            p = col[r]
            if v[r] % p:
                return None
            q = v[r] // p
            out.append(q)
            if q:
                for i in range(len(v)):
                    v[i] -= q * col[i]
        if any(v):
            return None
        return out

    def contains(self, elem: GroupElement) -> bool:
        if elem.pres != self.pres:
            raise ValueError("element from a different presentation")
        return self._solve(elem.coeffs) is not None

    def __le__(self, other: "Subgroup") -> bool:
        if self.pres != other.pres:
            raise ValueError("subgroups of different presentations")
        return all(other._solve(c) is not None for c in self.columns)

    @property
    def ncols(self) -> int:
        return len(self.columns)


def subgroup_from_generators(
    pres: GroupPresentation, gens: Iterable[GroupElement]
) -> Subgroup:
    vectors = []
    for g in gens:
        if g.pres != pres:
            raise ValueError("generator from a different presentation")
        vectors.append(g.coeffs)
    for i, o in enumerate(pres.orders):
        if o:
            rel = [0] * pres.rank
            rel[i] = o
            vectors.append(rel)
    cols, pivots = hnf_columns(vectors, pres.rank)
    return Subgroup(pres, cols, pivots)


def zero_subgroup(pres: GroupPresentation) -> Subgroup:
    return subgroup_from_generators(pres, [])


def full_subgroup(pres: GroupPresentation) -> Subgroup:
    return subgroup_from_generators(pres, pres.basis())


def smith_normal_form(
    rows: Sequence[Sequence[int]],
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Smith normal form ``U * A * V = D`` over the integers.

    Returns ``(diag, U, V)`` with ``U``, ``V`` unimodular and the diagonal
    satisfying ``d_1 | d_2 | ...`` with all ``d_i >= 0``.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst -= q * row_src
        for k in range(n):
            a[dst][k] -= q * a[src][k]
        for k in range(m):
            u[dst][k] -= q * u[src][k]

    def add_col(src, dst, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < best[0]):
                    best = (abs(a[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            swap_rows(t, bi)
        if bj != t:
            swap_cols(t, bj)
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # enforce divisibility of the remaining block by the pivot
        fixed = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    add_row(i, t, -1)  # row_t += row_i
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        if a[t][t] < 0:
            for k in range(n):
                a[t][k] = -a[t][k]
            for k in range(m):
                u[t][k] = -u[t][k]
        t += 1
    diag = [a[i][i] for i in range(min(m, n))]
    return diag, u, v


def _invariants_from_diag(diag: Sequence[int], free: int) -> tuple[int, ...]:
    invs = [d for d in diag if d > 1]
    return tuple(invs) + (0,) * free


def quotient_invariants(
    pres: GroupPresentation, sub: Subgroup
) -> tuple[int, ...]:
    """Invariant factors of the quotient of the presented group by `sub`."""
    if sub.pres != pres:
        raise ValueError("subgroup of a different presentation")
    if not sub.columns:
        return _invariants_from_diag([], pres.rank)
    rows = [
        [col[i] for col in sub.columns] for i in range(pres.rank)
    ]
    diag, _, _ = smith_normal_form(rows)
    return _invariants_from_diag(diag, pres.rank - sub.ncols)


def relative_quotient_invariants(
    big: Subgroup, small: Subgroup
) -> tuple[int, ...]:
    """Invariant factors of ``big / small`` for nested subgroups.

    Each generator of `small` is lifted into the lattice basis of `big`;
    the quotient is then read off the Smith normal form of the lifts.
    """
    if big.pres != small.pres:
        raise ValueError("subgroups of different presentations")
    lifts = []
    for col in small.columns:
        y = big._solve(col)
        if y is None:
            raise ValueError("subgroups are not nested")
        lifts.append(y)
    if not lifts:
        return _invariants_from_diag([], big.ncols)
    rows = [[lift[i] for lift in lifts] for i in range(big.ncols)]
    diag, _, _ = smith_normal_form(rows)
    return _invariants_from_diag(diag, big.ncols - len(lifts))


def kernel_basis(row: Sequence[int]) -> list[tuple[int, ...]]:
    """Lattice basis of the kernel of a single linear form on Z^n."""
    n = len(row)
    # column-reduce [row; I]: columns whose row-part hits zero give the kernel
    cols = [[row[j]] + [int(i == j) for i in range(n)] for j in range(n)]
    while True:
        live = [c for c in cols if c[0] != 0]
        if len(live) <= 1:
            break
        c0 = min(live, key=lambda c: abs(c[0]))
        for c in live:
            if c is c0:
                continue
            q = c[0] // c0[0]
            if q:
                for i in range(n + 1):
                    c[i] -= q * c0[i]
    return [tuple(c[1:]) for c in cols if c[0] == 0]


def quotient_presentation(
    pres: GroupPresentation, sub: Subgroup, prefix: str = "q"
) -> tuple[GroupPresentation, list[list[int]]]:
    """Presentation of the quotient group and the projection matrix.

    The projection maps old coefficient vectors to new ones by ordinary
    matrix multiplication; coordinates with invariant factor 1 are dropped.
    """
    if sub.pres != pres:
        raise ValueError("subgroup of a different presentation")
    n = pres.rank
    k = sub.ncols
    if k:
        rows = [[col[i] for col in sub.columns] for i in range(n)]
        diag, u, _ = smith_normal_form(rows)
    else:
        diag, u = [], [[int(i == j) for j in range(n)] for i in range(n)]
    orders = list(diag) + [0] * (n - k)
    kept = [i for i, d in enumerate(orders) if d != 1]
    new_orders = tuple(orders[i] for i in kept)
    names = tuple("%s%d" % (prefix, i) for i in range(len(kept)))
    projection = [u[i] for i in kept]
    return GroupPresentation(new_orders, names), projection


def project_element(
    target: GroupPresentation, projection: Sequence[Sequence[int]], elem: GroupElement
) -> GroupElement:
    coeffs = [
        sum(row[j] * elem.coeffs[j] for j in range(len(elem.coeffs)))
        for row in projection
    ]
    return target.element(coeffs)
