#
# Framed three-loop quiver representations and the superpotential tr(X[Y,Z])
#
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

import hilbtan as ht


@dataclass(frozen=True)
class TorusWeights:
    """
    The action (t^a, t^b, t^c) scaling (X, Y, Z)

    The superpotential is semi-invariant of weight a + b + c.

    """

    a: int
    b: int
    c: int

    @property
    def weight(self):
        return self.a + self.b + self.c

    def as_tuple(self):
        return (self.a, self.b, self.c)


TORUS_T0 = TorusWeights(2, 1, -3)
TORUS_G = TorusWeights(0, 0, 1)
TORUS_H = TorusWeights(1, 1, 0)


class QuiverRep:
    """
    Representation of the framed three-loop quiver on Q^n

    Args:
        X, Y, Z (RationalMatrix or nested lists):
            The loops, n x n.
        v (sequence):
            The framing vector, length n.

    """

    def __init__(self, X, Y, Z, v):
        self.X = ht.RationalMatrix(X)
        self.Y = ht.RationalMatrix(Y, cols=self.X.cols)
        self.Z = ht.RationalMatrix(Z, cols=self.X.cols)
        self.v = tuple(Fraction(x) for x in v)
        n = len(self.v)
        for name, m in zip("XYZ", self.matrices):
            if m.shape != (n, n):
                raise ValueError(f"{name} has shape {m.shape}, expected ({n}, {n})")

    @property
    def n(self):
        return len(self.v)

    @property
    def matrices(self):
        return (self.X, self.Y, self.Z)

    def scaled(self, t1, t2, t3):
        """The representation (t1 X, t2 Y, t3 Z, v)."""
        return QuiverRep(self.X.scale(t1), self.Y.scale(t2), self.Z.scale(t3), self.v)

    def __repr__(self):
        return f"QuiverRep(n={self.n})"


def commutator(A, B):
    return A @ B - B @ A


def rep_from_ideal(I):
    """
    Multiplication representation of S/I

    Args:
        I (Ideal):
            Ideal of finite colength in a ring with three variables.

    Returns:
        QuiverRep:
            X, Y, Z multiply by the three variables on the standard-monomial
            basis; v is the class of 1.

    Raises:
        InfiniteQuotientError

    """
    if I.ring.nvars != 3:
        raise ValueError("The quiver representation needs a ring in three variables")
    qb = ht.standard_monomials(I.groebner_basis)
    X, Y, Z = (qb.multiplication_matrix(i) for i in range(3))
    v = qb.coordinates(I.ring.one()) if qb.colength else ()
    return QuiverRep(X, Y, Z, v)


def is_cyclic(r):
    """
    Whether Q<X, Y, Z> v is the whole space

    Args:
        r (QuiverRep):
            The representation.

    Returns:
        bool

    """
    n = r.n
    form = ht.EchelonForm(n)
    pending = [r.v]
    while pending:
        w = pending.pop()
        if not form.add_row({i: x for i, x in enumerate(w) if x}):
            continue
        if form.rank == n:
            break
        pending.extend(m.apply(w) for m in r.matrices)
    return form.rank == n


def superpotential(r):
    """The value tr(X (YZ - ZY))."""
    return (r.X @ commutator(r.Y, r.Z)).trace()


def gradient_superpotential(r):
    """
    Entry-wise partial derivatives of tr(X[Y,Z])

    Entry (i, j) of each returned matrix is the derivative with respect to
    entry (i, j) of X, Y or Z. The derivative in the framing vector is
    identically zero.

    Returns:
        tuple:
            ([Y,Z]^T, [Z,X]^T, [X,Y]^T) as RationalMatrix.

    """
    X, Y, Z = r.matrices
    return (commutator(Y, Z).T, commutator(Z, X).T, commutator(X, Y).T)


def _laurent_ring():
    localization = ht.localize_invert(ht.RingContext(("t",)), "t")
    return localization, ht.Ideal(localization.ring, [localization.relation]).groebner_basis


def _polynomial_matrix(m, scale):
    out = np.empty(m.shape, dtype=object)
    for i in range(m.rows):
        for j in range(m.cols):
            out[i, j] = scale.scale(m[i, j])
    return out


def check_torus_weights(r, w):
    """
    Semi-invariance of the superpotential as a Laurent identity in t

    Expands f(t^a X, t^b Y, t^c Z, v) with polynomial entries in
    Q[t, u]/(tu - 1) and compares with t^(a+b+c) f(X, Y, Z, v).

    Args:
        r (QuiverRep):
            The representation.
        w (TorusWeights):
            The weights (a, b, c).

    Returns:
        tuple:
            (identity holds, weight a + b + c).

    """
    localization, relation = _laurent_ring()
    ring = localization.ring
    PX, PY, PZ = (
        _polynomial_matrix(m, localization.inverse_power(k))
        for m, k in zip(r.matrices, w.as_tuple())
    )
    product = PX @ (PY @ PZ - PZ @ PY)
    lhs = ring.zero()
    for i in range(r.n):
        lhs = lhs + product[i, i]
    rhs = localization.inverse_power(w.weight).scale(superpotential(r))
    holds = ht.normal_form(lhs - rhs, relation).is_zero()
    return holds, w.weight


def random_reps(count, n, seed=0):
    """
    Pseudo-random representations with integer entries in [-9, 9]

    Args:
        count (int):
            Number of representations.
        n (int):
            Dimension.
        seed (int):
            Seed of ``numpy.random.default_rng``.

    Returns:
        list:
            QuiverRep instances.

    """
    rng = np.random.default_rng(seed)
    reps = []
    for _ in range(count):
        X, Y, Z = (rng.integers(-9, 10, size=(n, n)).tolist() for _ in range(3))
        v = rng.integers(-9, 10, size=n).tolist()
        reps.append(QuiverRep(X, Y, Z, v))
    return reps


def coordinate_ring(n):
    """
    Ring of the 3n^2 + n coordinates of the framed quiver

    Variables are named ``X_i_j``, ``Y_i_j``, ``Z_i_j`` and ``v_i``,
    counting from 1.

    """
    names = [
        f"{m}_{i + 1}_{j + 1}" for m in "XYZ" for i in range(n) for j in range(n)
    ]
    names += [f"v_{i + 1}" for i in range(n)]
    return ht.RingContext(names)


def superpotential_polynomial(n):
    """tr(X[Y,Z]) expanded as a polynomial in the quiver coordinates."""
    ring = coordinate_ring(n)
    mats = []
    for m in "XYZ":
        a = np.empty((n, n), dtype=object)
        for i in range(n):
            for j in range(n):
                a[i, j] = ring.gen(f"{m}_{i + 1}_{j + 1}")
        mats.append(a)
    X, Y, Z = mats
    product = X @ (Y @ Z - Z @ Y)
    f = ring.zero()
    for i in range(n):
        f = f + product[i, i]
    return f


def symbolic_gradient(r):
    """
    Gradient of the superpotential by differentiating its expansion

    Returns:
        tuple:
            (dX, dY, dZ, dv), the matrices of partial derivatives evaluated
            at r and the derivative in the framing vector.

    """
    n = r.n
    f = superpotential_polynomial(n)
    point = {}
    for name, m in zip("XYZ", r.matrices):
        for i in range(n):
            for j in range(n):
                point[f"{name}_{i + 1}_{j + 1}"] = m[i, j]
    for i in range(n):
        point[f"v_{i + 1}"] = r.v[i]
    grads = []
    for name in "XYZ":
        grads.append(
            ht.RationalMatrix(
                [
                    [f.derivative(f"{name}_{i + 1}_{j + 1}").evaluate(point) for j in range(n)]
                    for i in range(n)
                ],
                cols=n,
            )
        )
    dv = tuple(f.derivative(f"v_{i + 1}").evaluate(point) for i in range(n))
    return (*grads, dv)


def critical_tangent_dim(r):
    """
    Dimension of the tangent space to Z(df) modulo GL(V) at a commuting rep

    The tangent space to the critical locus is the kernel of the linearised
    commutator map (A, B, C) -> ([A,Y] + [X,B], [A,Z] + [X,C], [B,Z] + [Y,C])
    plus the n framing directions; the free GL(V) orbit removes n^2.

    Args:
        r (QuiverRep):
            A commuting, cyclic representation.

    Returns:
        int

    """
    n = r.n
    X, Y, Z = (m.to_list() for m in r.matrices)
    size = n * n

    def col(block, i, j):
        return block * size + i * n + j

    def bracket(row, block, left, i, j, sign):
        # sign * ([E, M])_{ij} where E is the unknown block and M a fixed matrix
        for k in range(n):
            for c, key in ((left[k][j], col(block, i, k)), (-left[i][k], col(block, k, j))):
                if c:
                    row[key] = row.get(key, 0) + sign * c

    # [A, Y] + [X, B] = [A, Y] - [B, X]
    equations = [(0, Y, 1, X), (0, Z, 2, X), (1, Z, 2, Y)]
    rows = []
    for first, m1, second, m2 in equations:
        for i in range(n):
            for j in range(n):
                row = {}
                bracket(row, first, m1, i, j, 1)
                bracket(row, second, m2, i, j, -1)
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    kernel = 3 * size - ht.echelon(rows, 3 * size).rank
    return kernel + n - size
