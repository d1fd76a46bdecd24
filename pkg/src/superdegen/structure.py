"""Superalgebra points: structure constants, defining equations, transport.

A point is (alpha, gamma) where alpha[i][j][k] is the coefficient of e_k in
e_i e_j and gamma is the matrix of the involution, column i holding the image
of e_i.  Basis index 0 is always the unit.  The defining equation families
are numbered 1..6:

  1: e_1 e_i = e_i            4: sigma(e_1) = e_1
  2: e_i e_1 = e_i            5: sigma(e_i e_j) = sigma(e_i) sigma(e_j)
  3: associativity             6: sigma^2 = id

The non-unital variant checks only families 3, 5, 6.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import FIELD_C8, Matrix, Singular


class AxiomError(ValueError):
    def __init__(self, report):
        self.report = report
        worst = ", ".join(f"({k}): {len(v)} violations" for k, v in sorted(report.items()) if v)
        super().__init__(f"structure constants violate the defining equations: {worst}")


class NotAnInvolution(ValueError):
    pass


class NotInGroup(ValueError):
    pass


class StructureConstants:
    __slots__ = ("n", "alpha", "gamma", "field", "validated")

    def __init__(self, n, alpha, gamma, field, validated=False):
        self.n = n
        self.alpha = tuple(tuple(tuple(field.lift(x) for x in row) for row in plane) for plane in alpha)
        self.gamma = tuple(tuple(field.lift(x) for x in row) for row in gamma)
        self.field = field
        self.validated = validated

    def gamma_matrix(self) -> Matrix:
        return Matrix.from_rows(self.gamma, self.field)

    def multiply(self, x, y):
        """Coordinates of the product of two coordinate vectors."""
        z = self.field.zero
        out = [z] * self.n
        for i, xi in enumerate(x):
            xi = self.field.lift(xi)
            if xi.is_zero():
                continue
            arow = self.alpha[i]
            for j, yj in enumerate(y):
                yj = self.field.lift(yj)
                if yj.is_zero():
                    continue
                f = xi * yj
                for k, a in enumerate(arow[j]):
                    if not a.is_zero():
                        out[k] = out[k] + f * a
        return tuple(out)

    def sigma(self, x):
        return self.gamma_matrix().apply(x)

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        if self.n != other.n:
            return False
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    if not (self.alpha[i][j][k] == other.alpha[i][j][k]):
                        return False
        for r in range(self.n):
            for c in range(self.n):
                if not (self.gamma[r][c] == other.gamma[r][c]):
                    return False
        return True

    __hash__ = None

    def __repr__(self):
        return f"StructureConstants(n={self.n}, field={self.field.name}, validated={self.validated})"


def check_axioms(sc: StructureConstants, unital: bool = True) -> dict:
    """Evaluate the defining equations; maps family number -> violated index tuples."""
    n, alpha, gamma = sc.n, sc.alpha, sc.gamma
    z = sc.field.zero
    one = sc.field.one
    report = {k: [] for k in ((1, 2, 3, 4, 5, 6) if unital else (3, 5, 6))}

    def delta(a, b):
        return one if a == b else z

    if unital:
        for i in range(n):
            for j in range(n):
                if not (alpha[0][i][j] == delta(i, j)):
                    report[1].append((i + 1, j + 1))
                if not (alpha[i][0][j] == delta(i, j)):
                    report[2].append((i + 1, j + 1))
        for j in range(n):
            if not (gamma[j][0] == delta(j, 0)):
                report[4].append((j + 1,))
    # associativity: (e_i e_j) e_k = e_i (e_j e_k), coefficient of e_m
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    lhs = z
                    for l in range(n):
                        a1 = alpha[i][j][l]
                        if not a1.is_zero():
                            lhs = lhs + a1 * alpha[l][k][m]
                        a2 = alpha[j][k][l]
                        if not a2.is_zero():
                            lhs = lhs - alpha[i][l][m] * a2
                    if not lhs.is_zero():
                        report[3].append((i + 1, j + 1, k + 1, m + 1))
    # sigma multiplicative
    for i in range(n):
        for j in range(n):
            for m in range(n):
                acc = z
                for k in range(n):
                    a = alpha[i][j][k]
                    if not a.is_zero():
                        acc = acc + a * gamma[m][k]
                for k in range(n):
                    gk = gamma[k][i]
                    if gk.is_zero():
                        continue
                    for l in range(n):
                        gl = gamma[l][j]
                        if not gl.is_zero():
                            acc = acc - gk * gl * alpha[k][l][m]
                if not acc.is_zero():
                    report[5].append((i + 1, j + 1, m + 1))
    # sigma involutive
    for i in range(n):
        for k in range(n):
            acc = -delta(i, k)
            for j in range(n):
                g = gamma[j][i]
                if not g.is_zero():
                    acc = acc + g * gamma[k][j]
            if not acc.is_zero():
                report[6].append((i + 1, k + 1))
    return {k: tuple(v) for k, v in report.items()}


def axioms_ok(report: dict) -> bool:
    return all(not v for v in report.values())


def validate(sc: StructureConstants) -> StructureConstants:
    if sc.validated:
        return sc
    report = check_axioms(sc, unital=True)
    if not axioms_ok(report):
        raise AxiomError(report)
    sc.validated = True
    return sc


@dataclass(frozen=True)
class GradedSplit:
    basis0: tuple
    basis1: tuple
    dim0: int


def grading_split(sc: StructureConstants) -> GradedSplit:
    """Eigenbasis of the involution; checks the trace and determinant laws."""
    n = sc.n
    g = sc.gamma_matrix()
    ident = Matrix.identity(n, sc.field)
    if g * g != ident:
        raise NotAnInvolution("gamma squared is not the identity")
    plus_rows = [[g.at(r, c) - (sc.field.one if r == c else sc.field.zero) for c in range(n)] for r in range(n)]
    minus_rows = [[g.at(r, c) + (sc.field.one if r == c else sc.field.zero) for c in range(n)] for r in range(n)]
    basis0 = Matrix.from_rows(plus_rows, sc.field).kernel_basis()
    basis1 = Matrix.from_rows(minus_rows, sc.field).kernel_basis()
    i = len(basis0)
    if i + len(basis1) != n:
        raise NotAnInvolution("eigenspaces of gamma do not span")
    tr = sc.field.zero
    for r in range(n):
        tr = tr + g.at(r, r)
    if not (tr == 2 * i - n):
        raise NotAnInvolution(f"trace of gamma is not 2*{i}-{n}")
    if not (g.determinant() == (-1) ** (n - i)):
        raise NotAnInvolution(f"det of gamma is not (-1)^({n}-{i})")
    e1 = tuple(sc.field.one if k == 0 else sc.field.zero for k in range(n))
    if sc.sigma(e1) != e1:
        raise NotAnInvolution("the unit is not even")
    return GradedSplit(tuple(basis0), tuple(basis1), i)


def group_element(matrix: Matrix) -> Matrix:
    """Check membership in the basis-change group fixing the unit."""
    n = matrix.rows
    if matrix.cols != n:
        raise NotInGroup("group elements are square")
    first = matrix.column(0)
    expected = tuple(matrix.field.one if r == 0 else matrix.field.zero for r in range(n))
    if not all(a == b for a, b in zip(first, expected)):
        raise NotInGroup("first column must be the unit vector e_1")
    if matrix.determinant().is_zero():
        raise NotInGroup("matrix is singular")
    return matrix


def transport(g: Matrix, sc: StructureConstants, field=None, revalidate=True) -> StructureConstants:
    """Structure constants in the new basis whose vectors are the columns of g."""
    field = field or sc.field
    group_element(g)
    n = sc.n
    try:
        nu = g.inverse()
    except Singular as exc:  # pragma: no cover - group_element already checked
        raise NotInGroup(str(exc)) from exc
    z = field.zero
    lam = [[field.lift(g.at(r, c)) for c in range(n)] for r in range(n)]
    # C[i][q][l] = sum_p lam[p][i] * alpha[p][q][l]
    C = [[[z] * n for _ in range(n)] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            for l in range(n):
                a = sc.alpha[p][q][l]
                if a.is_zero():
                    continue
                a = field.lift(a)
                for i in range(n):
                    lpi = lam[p][i]
                    if not lpi.is_zero():
                        C[i][q][l] = C[i][q][l] + lpi * a
    # B[i][j][l] = sum_q lam[q][j] * C[i][q][l]
    B = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for q in range(n):
            Ciq = C[i][q]
            for l in range(n):
                c = Ciq[l]
                if c.is_zero():
                    continue
                for j in range(n):
                    lqj = lam[q][j]
                    if not lqj.is_zero():
                        B[i][j][l] = B[i][j][l] + lqj * c
    alpha = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            Bij = B[i][j]
            for k in range(n):
                acc = z
                for l in range(n):
                    nk = nu.at(k, l)
                    if not (nk.is_zero() or Bij[l].is_zero()):
                        acc = acc + nk * Bij[l]
                alpha[i][j][k] = acc
    gmat = nu * sc.gamma_matrix().map_entries(field.lift, field) * g
    out = StructureConstants(n, alpha, gmat.to_lists(), field)
    if revalidate:
        validate(out)
    return out


def transport_algebra(g: Matrix, alpha, field):
    """The same base change on a bare algebra point (no grading)."""
    n = len(alpha)
    ident = [[field.one if r == c else field.zero for c in range(n)] for r in range(n)]
    sc = StructureConstants(n, alpha, ident, field)
    return transport(g, sc, revalidate=False).alpha


def forget_grading(sc: StructureConstants):
    """The underlying algebra point: the alpha block alone."""
    return sc.alpha


def with_trivial_grading(alpha, field) -> StructureConstants:
    """Endow an algebra point with the grading whose involution is the identity."""
    n = len(alpha)
    ident = [[field.one if r == c else field.zero for c in range(n)] for r in range(n)]
    return validate(StructureConstants(n, alpha, ident, field))


def cn_structure(n: int, i: int, field=FIELD_C8) -> StructureConstants:
    """The square-zero-radical superalgebra with an i-dimensional even part.

    Products of the non-unit basis vectors all vanish; the first i basis
    vectors (including the unit) are even, the rest odd.
    """
    if not 1 <= i <= n:
        raise ValueError(f"even dimension {i} out of range 1..{n}")
    z, one = field.zero, field.one
    alpha = [[[z] * n for _ in range(n)] for _ in range(n)]
    for j in range(n):
        alpha[0][j][j] = one
        alpha[j][0][j] = one
    gamma = [[(one if r < i else -one) if r == c else z for c in range(n)] for r in range(n)]
    return validate(StructureConstants(n, alpha, gamma, field))


def random_group_element(rng, n, field=FIELD_C8, span=2) -> Matrix:
    """Random small-integer member of the basis-change group (unit fixed)."""
    while True:
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                if c == 0:
                    row.append(field.one if r == 0 else field.zero)
                else:
                    row.append(field.lift(rng.randint(-span, span)))
            rows.append(row)
        m = Matrix.from_rows(rows, field)
        if not m.determinant().is_zero():
            return m
