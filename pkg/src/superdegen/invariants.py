"""Transport-invariant data of a superalgebra point.

The stabilizer dimension is computed as the dimension of the space of
derivations commuting with the involution: one exact kernel computation,
and in characteristic 0 it equals the dimension of the automorphism group.
The orbit dimension follows by subtracting from the group dimension n^2 - n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix
from .structure import StructureConstants, grading_split


class NotClosed(ValueError):
    pass


class WrongComponent(ValueError):
    pass


def derivation_system(sc: StructureConstants, graded: bool = True):
    """Rows of the linear system cutting out (graded) derivations D, as vectors
    in the n*n unknowns D[r][c] (row-major)."""
    n = sc.n
    z = sc.field.zero
    alpha, gamma = sc.alpha, sc.gamma
    rows = []
    # D(e_i e_j) = D(e_i) e_j + e_i D(e_j), coefficient of e_k
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [z] * (n * n)
                for l in range(n):
                    a = alpha[i][j][l]
                    if not a.is_zero():
                        row[k * n + l] = row[k * n + l] + a
                    b = alpha[l][j][k]
                    if not b.is_zero():
                        row[l * n + i] = row[l * n + i] - b
                    c = alpha[i][l][k]
                    if not c.is_zero():
                        row[l * n + j] = row[l * n + j] - c
                rows.append(row)
    if graded:
        # D gamma = gamma D
        for r in range(n):
            for c in range(n):
                row = [z] * (n * n)
                for l in range(n):
                    g = gamma[l][c]
                    if not g.is_zero():
                        row[r * n + l] = row[r * n + l] + g
                    g2 = gamma[r][l]
                    if not g2.is_zero():
                        row[l * n + c] = row[l * n + c] - g2
                rows.append(row)
    return rows


def stabilizer_dim(sc: StructureConstants, graded: bool = True) -> int:
    """Kernel dimension of the derivation system; with graded=False the
    grading is ignored and the result is the underlying algebra's value."""
    rows = derivation_system(sc, graded)
    m = Matrix.from_rows(rows, sc.field)
    return m.cols - m.rank()


def orbit_dim(sc: StructureConstants) -> int:
    return sc.n * sc.n - sc.n - stabilizer_dim(sc)


def _span_rank(sc, vectors) -> int:
    if not vectors:
        return 0
    return Matrix.from_rows([list(v) for v in vectors], sc.field).rank()


def _coords_in(sc, basis, vector):
    m = Matrix.from_rows([list(b) for b in basis], sc.field).transpose()
    return m.solve(vector)


def subalgebra_multiplication(sc: StructureConstants, basis):
    """Coefficient table of the restricted product; NotClosed if it leaves the span."""
    table = []
    for u in basis:
        row = []
        for v in basis:
            coords = _coords_in(sc, basis, sc.multiply(u, v))
            if coords is None:
                raise NotClosed("products leave the span of the given basis")
            row.append(coords)
        table.append(row)
    return table


def radical_basis(sc: StructureConstants, basis):
    """Basis of the radical of a subalgebra, by the trace form of left multiplication.

    Characteristic 0 only: x is in the radical exactly when tr(L_{xy}) vanishes
    for all y in the subalgebra.
    """
    m = len(basis)
    table = subalgebra_multiplication(sc, basis)
    z = sc.field.zero
    # tr of left multiplication by each basis element
    traces = []
    for p in range(m):
        tr = z
        for q in range(m):
            tr = tr + table[p][q][q]
        traces.append(tr)
    gram = []
    for p in range(m):
        row = []
        for q in range(m):
            acc = z
            for r in range(m):
                c = table[p][q][r]
                if not c.is_zero():
                    acc = acc + c * traces[r]
            row.append(acc)
        gram.append(row)
    kernel = Matrix.from_rows(gram, sc.field).kernel_basis()
    out = []
    for coeffs in kernel:
        vec = [z] * sc.n
        for c, b in zip(coeffs, basis):
            if not c.is_zero():
                for k in range(sc.n):
                    vec[k] = vec[k] + c * sc.field.lift(b[k])
        out.append(tuple(vec))
    return out


def square_zero_subspace_dim2(sc: StructureConstants, basis0):
    """Direct solve of {x in A_0 : x^2 = 0} when A_0 is 2-dimensional and unital.

    Writing A_0 = span{1, u} with u^2 = c0 + c1 u, the solutions form the zero
    space unless c1^2 + 4 c0 = 0, in which case they are the line through
    u - (c1/2).  This is the independent oracle for the trace-form radical.
    """
    n = sc.n
    if len(basis0) != 2:
        raise WrongComponent("square-zero solve needs a 2-dimensional even part")
    e1 = tuple(sc.field.one if k == 0 else sc.field.zero for k in range(n))
    coords_e1 = _coords_in(sc, basis0, e1)
    if coords_e1 is None:
        raise NotClosed("the unit is not in the span of the even basis")
    # pick a basis {1, u} of the span
    if not coords_e1[0].is_zero():
        u = basis0[1]
    else:
        u = basis0[0]
    pair = (e1, tuple(sc.field.lift(x) for x in u))
    usq = sc.multiply(pair[1], pair[1])
    coords = _coords_in(sc, pair, usq)
    if coords is None:
        raise NotClosed("the even part is not closed under multiplication")
    c0, c1 = coords
    disc = c1 * c1 + 4 * c0
    if not disc.is_zero():
        return []
    shift = c1 / 2
    line = tuple(sc.field.lift(pair[1][k]) - shift * e1[k] for k in range(n))
    return [line]


CLOSED_SETS = ("A", "B", "C", "D", "E")


def closed_set_member(sc: StructureConstants, name: str, split=None) -> bool:
    """Membership in one of the closed, transport-stable subsets:

    A: the odd part squares to zero.       B: the even part is commutative.
    C: dim J(A_0) = 1 (even part of dimension 2 only); J is the square-zero
       subspace of A_0.
    D: C and J(A_0) * A_1 = 0.             E: C and A_1 * J(A_0) = 0.
    """
    if name not in CLOSED_SETS:
        raise ValueError(f"unknown closed set {name!r}")
    split = split or grading_split(sc)
    if name == "A":
        for u in split.basis1:
            for v in split.basis1:
                if any(not c.is_zero() for c in sc.multiply(u, v)):
                    return False
        return True
    if name == "B":
        for u in split.basis0:
            for v in split.basis0:
                uv = sc.multiply(u, v)
                vu = sc.multiply(v, u)
                if any(not (a - b).is_zero() for a, b in zip(uv, vu)):
                    return False
        return True
    if split.dim0 != 2:
        raise WrongComponent(f"set ({name}) is defined on the component with a 2-dimensional even part")
    j = square_zero_subspace_dim2(sc, split.basis0)
    if len(j) != 1:
        return False
    if name == "C":
        return True
    for w in split.basis1:
        prod = sc.multiply(j[0], w) if name == "D" else sc.multiply(w, j[0])
        if any(not c.is_zero() for c in prod):
            return False
    return True


@dataclass(frozen=True)
class Fingerprint:
    """Per-orbit record; every field is invariant under transport."""

    n: int
    dim0: int
    stab_dim: int
    orbit_dim: int
    flag_a: bool
    flag_b: bool
    dim_j: int | None
    flag_d: bool | None
    flag_e: bool | None
    dim_odd_square: int
    dim_radical: int


def fingerprint(sc: StructureConstants) -> Fingerprint:
    split = grading_split(sc)
    stab = stabilizer_dim(sc)
    flag_a = closed_set_member(sc, "A", split)
    flag_b = closed_set_member(sc, "B", split)
    if split.dim0 == 2:
        dim_j = len(square_zero_subspace_dim2(sc, split.basis0))
        flag_d = closed_set_member(sc, "D", split)
        flag_e = closed_set_member(sc, "E", split)
    else:
        dim_j = flag_d = flag_e = None
    products = [sc.multiply(u, v) for u in split.basis1 for v in split.basis1]
    dim_odd_square = _span_rank(sc, [p for p in products if any(not c.is_zero() for c in p)])
    n = sc.n
    full = [tuple(sc.field.one if k == i else sc.field.zero for k in range(n)) for i in range(n)]
    dim_radical = len(radical_basis(sc, full))
    return Fingerprint(
        n=n,
        dim0=split.dim0,
        stab_dim=stab,
        orbit_dim=n * n - n - stab,
        flag_a=flag_a,
        flag_b=flag_b,
        dim_j=dim_j,
        flag_d=flag_d,
        flag_e=flag_e,
        dim_odd_square=dim_odd_square,
        dim_radical=dim_radical,
    )
