"""Exact sparse linear algebra over the rationals.

Everything downstream (root decompositions, equivariant cochain bases,
differential ranks) reduces to kernels and ranks of sparse matrices with
rational entries.  Ranks and kernels are computed by fraction-free
elimination on integer-scaled rows: each row is multiplied by the lcm of
its denominators, and after every combination step the row is divided by
the gcd of its entries.  This keeps intermediate entries small without
ever leaving exact arithmetic.

Pivoting is deterministic (first nonzero row in original order, columns
left to right), so kernel bases are reproducible across runs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch

Vector = tuple[Fraction, ...]


class SparseMatrix:
    """Immutable sparse matrix over Q.

    Entries are stored as a dict keyed by (row, col); zeros are never
    stored and duplicate positions are rejected.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries: Iterable[tuple[int, int, Fraction]] = ()):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative shape {rows}x{cols}")
        data: dict[tuple[int, int], Fraction] = {}
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise DimensionMismatch(f"entry ({r},{c}) outside {rows}x{cols}")
            if (r, c) in data:
                raise DimensionMismatch(f"duplicate entry at ({r},{c})")
            v = Fraction(v)
            if v != 0:
                data[r, c] = v
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "SparseMatrix":
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        entries = []
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise DimensionMismatch("ragged rows")
            for j, v in enumerate(row):
                if v:
                    entries.append((i, j, Fraction(v)))
        return cls(nr, nc, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, ((i, i, Fraction(1)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "SparseMatrix":
        return cls(rows, cols)

    def entry(self, r: int, c: int) -> Fraction:
        return self._data.get((r, c), Fraction(0))

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for (r, c) in sorted(self._data):
            yield r, c, self._data[r, c]

    @property
    def nnz(self) -> int:
        return len(self._data)

    def is_zero(self) -> bool:
        return not self._data

    def is_diagonal(self) -> bool:
        return all(r == c for (r, c) in self._data)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, ((c, r, v) for (r, c), v in self._data.items()))

    def row_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.rows)]
        for (r, c), v in self._data.items():
            out[r][c] = v
        return out

    def col_dicts(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in range(self.cols)]
        for (r, c), v in self._data.items():
            out[c][r] = v
        return out

    def matvec(self, vec: Sequence[Fraction]) -> Vector:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector length {len(vec)} != cols {self.cols}")
        acc = [Fraction(0)] * self.rows
        for (r, c), v in self._data.items():
            x = vec[c]
            if x:
                acc[r] += v * x
        return tuple(acc)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (r, c), v in other._data.items():
            by_row.setdefault(r, []).append((c, v))
        acc: dict[tuple[int, int], Fraction] = {}
        for (r, k), v in self._data.items():
            for c, w in by_row.get(k, ()):
                key = (r, c)
                s = acc.get(key, Fraction(0)) + v * w
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
        return SparseMatrix(self.rows, other.cols, ((r, c, v) for (r, c), v in acc.items()))

    def scaled(self, a: Fraction) -> "SparseMatrix":
        if a == 0:
            return SparseMatrix(self.rows, self.cols)
        return SparseMatrix(self.rows, self.cols, ((r, c, a * v) for (r, c), v in self._data.items()))

    def add(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in add")
        acc = dict(self._data)
        for key, v in other._data.items():
            s = acc.get(key, Fraction(0)) + v
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        return SparseMatrix(self.rows, self.cols, ((r, c, v) for (r, c), v in acc.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._data.items())))

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _int_rows(m: SparseMatrix) -> list[dict[int, int]]:
    """Scale each row to integer entries (kernel and rank are unchanged)."""
    rows: list[dict[int, Fraction]] = [dict() for _ in range(m.rows)]
    for (r, c), v in m._data.items():
        rows[r][c] = v
    out = []
    for row in rows:
        if not row:
            continue
        scale = math.lcm(*(v.denominator for v in row.values()))
        ints = {c: int(v * scale) for c, v in row.items()}
        g = math.gcd(*ints.values())
        if g > 1:
            ints = {c: v // g for c, v in ints.items()}
        out.append(ints)
    return out


def _echelon(rows: list[dict[int, int]], cols: int) -> list[tuple[int, dict[int, int]]]:
    """Fraction-free forward elimination.

    Returns the pivot rows as (pivot column, row) pairs, in pivot-column
    order.  Input rows are consumed destructively.
    """
    # col -> set of active row ids having a nonzero entry there
    occupancy: dict[int, set[int]] = {}
    for i, row in enumerate(rows):
        for c in row:
            occupancy.setdefault(c, set()).add(i)
    active = set(range(len(rows)))
    pivots: list[tuple[int, dict[int, int]]] = []
    for c in range(cols):
        holders = occupancy.get(c)
        if not holders:
            continue
        pivot_id = min(holders)
        pivot = rows[pivot_id]
        active.discard(pivot_id)
        for cc in pivot:
            occupancy[cc].discard(pivot_id)
        a = pivot[c]
        for rid in sorted(holders & active):
            row = rows[rid]
            b = row[c]
            # new = a*row - b*pivot; entry at c cancels exactly
            new: dict[int, int] = {k: a * v for k, v in row.items()}
            for k, v in pivot.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                elif k in new:
                    del new[k]
            if new:
                g = math.gcd(*new.values())
                if g > 1:
                    new = {k: v // g for k, v in new.items()}
            for k in row:
                if k not in new:
                    occupancy[k].discard(rid)
            for k in new:
                if k not in row:
                    occupancy.setdefault(k, set()).add(rid)
            rows[rid] = new
        pivots.append((c, pivot))
    return pivots


def rank(m: SparseMatrix) -> int:
    """Rank over Q, computed exactly."""
    return len(_echelon(_int_rows(m), m.cols))


def kernel_basis_with_free(m: SparseMatrix) -> tuple[list[Vector], list[int]]:
    """Kernel basis plus the free columns anchoring it.

    Basis vector i has entry 1 at free column i and entry 0 at every other
    free column, so expanding a kernel element in this basis amounts to
    reading its values at the free columns.
    """
    pivots = _echelon(_int_rows(m), m.cols)
    pivot_cols = {c for c, _ in pivots}
    free_cols = [c for c in range(m.cols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        x: dict[int, Fraction] = {f: Fraction(1)}
        for c, row in reversed(pivots):
            s = Fraction(0)
            for k, v in row.items():
                if k != c and k in x:
                    s += v * x[k]
            if s:
                x[c] = -s / row[c]
        basis.append(tuple(x.get(c, Fraction(0)) for c in range(m.cols)))
    return basis, free_cols


def kernel_basis(m: SparseMatrix) -> list[Vector]:
    """Basis of the right null space of ``m``.

    One basis vector per free column f, normalized so that the entry at f
    is 1 and the entries at all other free columns are 0.  The basis is
    therefore canonical given the deterministic pivoting.
    """
    return kernel_basis_with_free(m)[0]


def nullity(m: SparseMatrix) -> int:
    return m.cols - rank(m)


def stack(ms: Sequence[SparseMatrix]) -> SparseMatrix:
    """Stack matrices vertically; all must share a column count."""
    if not ms:
        raise DimensionMismatch("cannot stack an empty list without a column count")
    cols = ms[0].cols
    entries = []
    offset = 0
    for m in ms:
        if m.cols != cols:
            raise DimensionMismatch(f"column counts differ: {m.cols} != {cols}")
        for r, c, v in m.entries():
            entries.append((offset + r, c, v))
        offset += m.rows
    return SparseMatrix(offset, cols, entries)


def simultaneous_kernel(ms: Sequence[SparseMatrix], cols: int | None = None) -> list[Vector]:
    """Basis of the intersection of the kernels of all matrices.

    Equals ``kernel_basis`` of the vertically stacked matrix.  ``cols``
    is required when the list is empty (no constraints).
    """
    if not ms:
        if cols is None:
            raise DimensionMismatch("empty constraint list needs an explicit column count")
        eye = [Fraction(0)] * cols
        out = []
        for i in range(cols):
            v = list(eye)
            v[i] = Fraction(1)
            out.append(tuple(v))
        return out
    if cols is not None and ms[0].cols != cols:
        raise DimensionMismatch(f"column counts differ: {ms[0].cols} != {cols}")
    return kernel_basis(stack(ms))


class SpanSolver:
    """Row-reduced form of a list of vectors, for membership and coordinates.

    Gauss-Jordan with leading-1 normalization; pivot columns are
    deterministic (leftmost possible, rows processed in input order).
    Used for subalgebra spans: ``reduce`` splits an ambient vector into
    its component inside the span and a residual supported on the
    non-pivot columns.
    """

    def __init__(self, vectors: Sequence[Sequence[Fraction]], ambient_dim: int):
        self.ambient_dim = ambient_dim
        # each reduced row carries the combination of input vectors producing it
        rows: list[tuple[dict[int, Fraction], dict[int, Fraction]]] = []
        for idx, vec in enumerate(vectors):
            if len(vec) != ambient_dim:
                raise DimensionMismatch(f"span vector {idx} has length {len(vec)} != {ambient_dim}")
            row = {i: Fraction(v) for i, v in enumerate(vec) if v}
            comb = {idx: Fraction(1)}
            row, comb = self._reduce_row(rows, row, comb)
            if row:
                lead = min(row)
                inv = 1 / row[lead]
                row = {k: v * inv for k, v in row.items()}
                comb = {k: v * inv for k, v in comb.items()}
                rows.append((row, comb))
                rows.sort(key=lambda rc: min(rc[0]))
                # re-reduce upper entries so the form stays fully reduced
                rows = self._normalize(rows)
        self._rows = rows
        self.pivot_cols = [min(r) for r, _ in rows]
        self.rank = len(rows)
        self.n_inputs = len(vectors)

    @staticmethod
    def _reduce_row(rows, row: dict[int, Fraction], comb: dict[int, Fraction]):
        for prow, pcomb in rows:
            lead = min(prow)
            coef = row.get(lead)
            if coef:
                for k, v in prow.items():
                    w = row.get(k, Fraction(0)) - coef * v
                    if w:
                        row[k] = w
                    elif k in row:
                        del row[k]
                for k, v in pcomb.items():
                    w = comb.get(k, Fraction(0)) - coef * v
                    if w:
                        comb[k] = w
                    elif k in comb:
                        del comb[k]
        return row, comb

    @staticmethod
    def _normalize(rows):
        out = []
        for i, (row, comb) in enumerate(rows):
            row = dict(row)
            comb = dict(comb)
            for j, (prow, pcomb) in enumerate(rows):
                if i == j:
                    continue
                lead = min(prow)
                coef = row.get(lead)
                if coef and lead != min(row):
                    for k, v in prow.items():
                        w = row.get(k, Fraction(0)) - coef * v
                        if w:
                            row[k] = w
                        elif k in row:
                            del row[k]
                    for k, v in pcomb.items():
                        w = comb.get(k, Fraction(0)) - coef * v
                        if w:
                            comb[k] = w
                        elif k in comb:
                            del comb[k]
            out.append((row, comb))
        return out

    def reduce(self, vec: Sequence[Fraction]) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
        """Split ``vec`` = (span part) + residual.

        Returns (residual as sparse dict, coordinates of the span part in
        terms of the input vectors).
        """
        if len(vec) != self.ambient_dim:
            raise DimensionMismatch("vector length mismatch in reduce")
        row = {i: Fraction(v) for i, v in enumerate(vec) if v}
        comb: dict[int, Fraction] = {}
        for prow, pcomb in self._rows:
            lead = min(prow)
            coef = row.get(lead)
            if coef:
                for k, v in prow.items():
                    w = row.get(k, Fraction(0)) - coef * v
                    if w:
                        row[k] = w
                    elif k in row:
                        del row[k]
                for k, v in pcomb.items():
                    comb[k] = comb.get(k, Fraction(0)) + coef * v
        return row, comb

    def contains(self, vec: Sequence[Fraction]) -> bool:
        residual, _ = self.reduce(vec)
        return not residual

    def coordinates(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
        """Coordinates of ``vec`` in terms of the input vectors, or None."""
        residual, comb = self.reduce(vec)
        if residual:
            return None
        return tuple(comb.get(i, Fraction(0)) for i in range(self.n_inputs))
