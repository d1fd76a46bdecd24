"""Exact dense linear algebra over any of the package's scalar fields.

Elimination pivots on the first nonzero entry in column order; with exact
arithmetic there is nothing to gain from pivot selection, and a fixed rule
makes every kernel basis and inverse reproducible across runs.
"""

from __future__ import annotations

from .cyclo import C8_ONE, C8_ZERO, Cyclo8
from .scalars import LRAT_ONE, LRAT_ZERO, as_lrat
from .tpoly import TRAT_ONE, TRAT_ZERO, as_trat


class Singular(ArithmeticError):
    pass


def _lift_c8(x):
    if isinstance(x, Cyclo8):
        return x
    if isinstance(x, int):
        return Cyclo8(x)
    raise TypeError(f"cannot place {type(x).__name__} in Q(z)")


class Field:
    """Zero/one samples plus a lift into the field, enough to run elimination generically."""

    __slots__ = ("name", "zero", "one", "lift")

    def __init__(self, name, zero, one, lift):
        self.name = name
        self.zero = zero
        self.one = one
        self.lift = lift

    def __repr__(self):
        return f"Field({self.name})"


FIELD_C8 = Field("Q(z)", C8_ZERO, C8_ONE, _lift_c8)
FIELD_LRAT = Field("Q(z)(l)", LRAT_ZERO, LRAT_ONE, as_lrat)
FIELD_TRAT = Field("Q(z)(l)(t)", TRAT_ZERO, TRAT_ONE, as_trat)


class Matrix:
    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, rows, cols, entries, field):
        entries = tuple(field.lift(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.entries, self.field = rows, cols, entries, field

    @classmethod
    def from_rows(cls, row_lists, field):
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = [e for row in row_lists for e in row]
        return cls(rows, cols, flat, field)

    @classmethod
    def identity(cls, n, field):
        flat = [field.one if r == c else field.zero for r in range(n) for c in range(n)]
        return cls(n, n, flat, field)

    def at(self, r, c):
        return self.entries[r * self.cols + c]

    def row(self, r):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def column(self, c):
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def to_lists(self):
        return [list(self.row(r)) for r in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(a == b for a, b in zip(self.entries, other.entries))

    __hash__ = None

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        z = self.field.zero
        flat = []
        for r in range(self.rows):
            row = self.row(r)
            for c in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = row[k]
                    if a.is_zero():
                        continue
                    acc = acc + a * other.at(k, c)
                flat.append(acc)
        return Matrix(self.rows, other.cols, flat, self.field)

    def apply(self, vec):
        z = self.field.zero
        out = []
        for r in range(self.rows):
            acc = z
            row = self.row(r)
            for k, x in enumerate(vec):
                x = self.field.lift(x)
                if not x.is_zero():
                    acc = acc + row[k] * x
            out.append(acc)
        return tuple(out)

    def transpose(self):
        flat = [self.at(r, c) for c in range(self.cols) for r in range(self.rows)]
        return Matrix(self.cols, self.rows, flat, self.field)

    def map_entries(self, fn, field=None):
        field = field or self.field
        return Matrix(self.rows, self.cols, [fn(e) for e in self.entries], field)

    def _echelon(self, m):
        """In-place forward elimination on list-of-lists m; returns pivot columns."""
        pivots = []
        pr = 0
        for pc in range(self.cols):
            pivot = None
            for r in range(pr, len(m)):
                if not m[r][pc].is_zero():
                    pivot = r
                    break
            if pivot is None:
                continue
            if pivot != pr:
                m[pr], m[pivot] = m[pivot], m[pr]
            inv = 1 / m[pr][pc]
            m[pr] = [inv * e for e in m[pr]]
            for r in range(len(m)):
                if r == pr:
                    continue
                f = m[r][pc]
                if f.is_zero():
                    continue
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == len(m):
                break
        return pivots

    def rank(self) -> int:
        return len(self._echelon(self.to_lists()))

    def kernel_basis(self):
        """Basis of the right kernel, one vector per free column, in column order."""
        m = self.to_lists()
        pivots = self._echelon(m)
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        z, one = self.field.zero, self.field.one
        basis = []
        for f in free:
            v = [z] * self.cols
            v[f] = one
            for r, pc in enumerate(pivots):
                v[pc] = -m[r][f]
            basis.append(tuple(v))
        assert len(pivots) + len(basis) == self.cols
        return basis

    def determinant(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = self.to_lists()
        n = self.rows
        z = self.field.zero
        det = self.field.one
        for pc in range(n):
            pivot = None
            for r in range(pc, n):
                if not m[r][pc].is_zero():
                    pivot = r
                    break
            if pivot is None:
                return z
            if pivot != pc:
                m[pc], m[pivot] = m[pivot], m[pc]
                det = -det
            det = det * m[pc][pc]
            inv = 1 / m[pc][pc]
            for r in range(pc + 1, n):
                f = m[r][pc]
                if f.is_zero():
                    continue
                m[r] = [a - f * inv * b for a, b in zip(m[r], m[pc])]
        return det

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        z, one = self.field.zero, self.field.one
        m = [list(self.row(r)) + [one if c == r else z for c in range(n)] for r in range(n)]
        pr = 0
        for pc in range(n):
            pivot = None
            for r in range(pr, n):
                if not m[r][pc].is_zero():
                    pivot = r
                    break
            if pivot is None:
                raise Singular("matrix is singular")
            if pivot != pr:
                m[pr], m[pivot] = m[pivot], m[pr]
            inv = 1 / m[pr][pc]
            m[pr] = [inv * e for e in m[pr]]
            for r in range(n):
                if r == pr:
                    continue
                f = m[r][pc]
                if f.is_zero():
                    continue
                m[r] = [a - f * b for a, b in zip(m[r], m[pr])]
            pr += 1
        flat = [m[r][n + c] for r in range(n) for c in range(n)]
        return Matrix(n, n, flat, self.field)

    def solve(self, rhs):
        """One solution x of self @ x = rhs, or None if inconsistent."""
        n, c = self.rows, self.cols
        m = [list(self.row(r)) + [self.field.lift(rhs[r])] for r in range(n)]
        aug = Matrix(n, c + 1, [e for row in m for e in row], self.field)
        rows = aug.to_lists()
        pivots = aug._echelon(rows)
        if c in pivots:
            return None
        z = self.field.zero
        x = [z] * c
        for r, pc in enumerate(pivots):
            x[pc] = rows[r][c]
        return tuple(x)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in self.row(r)) for r in range(self.rows))
        return f"Matrix[{body}]"


def matrix_over_trat(m: Matrix) -> Matrix:
    if m.field is FIELD_TRAT:
        return m
    return m.map_entries(as_trat, FIELD_TRAT)
