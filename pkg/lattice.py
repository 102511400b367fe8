"""
RootLab - Integer Lattice Utilities
Smith and Hermite normal forms, finitely generated abelian quotients,
integer kernels, exact rational solves and extreme rays of rational cones.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.matrices.normalforms import hermite_normal_form as normal_hermite_form

from errors import NonIntegralError

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def _matrix(rows: Sequence[Sequence[int]], ncols: int) -> np.ndarray:
    """Object-dtype integer matrix; keeps its shape when there are no rows."""
    A = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            A[i, j] = int(value)
    return A


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _gcd_step(a: int, b: int) -> np.ndarray:
    """2x2 determinant-one matrix M with M @ [a, b] = [g, 0], |g| = gcd(a, b)."""
    if a != 0 and b % a == 0:
        # plain elimination keeps the pivot in place
        return np.array([[1, 0], [-(b // a), 1]], dtype=object)
    g, s, t = _ext_gcd(a, b)
    if g == 0:
        return np.array([[1, 0], [0, 1]], dtype=object)
    return np.array([[s, t], [-b // g, a // g]], dtype=object)


# =============================================================================
# SMITH NORMAL FORM
# =============================================================================

@dataclass(frozen=True)
class SmithForm:
    """U @ A @ V == D with U, V unimodular and D diagonal, d_1 | d_2 | ..."""
    diagonal: Tuple[int, ...]
    left: np.ndarray
    right: np.ndarray

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SmithForm:
    """
    Smith normal form with transforms.

    Rows and columns are cleared alternately until the pivot row and column
    are both clear. Each step either eliminates with the pivot or replaces it
    by a strictly smaller gcd, so the alternation ends. Divisibility is then
    enforced on the diagonal with gcd/lcm 2x2 moves.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    A = _matrix(rows, ncols)
    D = A.copy()
    m, n = D.shape
    U = np.eye(m, dtype=object)
    V = np.eye(n, dtype=object)

    def clear_col(i: int) -> bool:
        if all(D[k, i] == 0 for k in range(i + 1, m)):
            return False
        for k in range(i + 1, m):
            M = _gcd_step(D[i, i], D[k, i])
            D[[i, k]] = M @ D[[i, k]]
            U[[i, k]] = M @ U[[i, k]]
        return True

    def clear_row(i: int) -> bool:
        if all(D[i, k] == 0 for k in range(i + 1, n)):
            return False
        for k in range(i + 1, n):
            M = _gcd_step(D[i, i], D[i, k]).T
            D[:, [i, k]] = D[:, [i, k]] @ M
            V[:, [i, k]] = V[:, [i, k]] @ M
        return True

    k = min(m, n)
    for i in range(k):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass

    # zeros last
    for i in range(k):
        if D[i, i] != 0:
            continue
        for j in range(i + 1, k):
            if D[j, j] != 0:
                D[[i, j]] = D[[j, i]]
                U[[i, j]] = U[[j, i]]
                D[:, [i, j]] = D[:, [j, i]]
                V[:, [i, j]] = V[:, [j, i]]
                break

    # divisibility chain
    for i in range(k):
        for j in range(i + 1, k):
            a, b = D[i, i], D[j, j]
            if a == 0 or b == 0 or b % a == 0:
                continue
            g, s, t = _ext_gcd(a, b)
            L = np.array([[s, t], [-b // g, a // g]], dtype=object)
            R = np.array([[1, -t * b // g], [1, s * a // g]], dtype=object)
            U[[i, j]] = L @ U[[i, j]]
            V[:, [i, j]] = V[:, [i, j]] @ R
            D[i, i], D[j, j] = g, a * b // g

    for i in range(k):
        if D[i, i] < 0:
            D[i] = -D[i]
            U[i] = -U[i]

    assert (U @ A @ V == D).all(), "Smith form transforms do not reproduce the diagonal"
    return SmithForm(tuple(int(D[i, i]) for i in range(k)), U, V)


# =============================================================================
# HERMITE NORMAL FORM
# =============================================================================

def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> List[Vector]:
    """
    Canonical basis of the lattice spanned by ``rows``.

    The vectors go in as columns of sympy's Hermite normal form, which puts
    positive pivots in the bottom rows and reduces the entries beside a pivot
    into [0, pivot). Zero vectors drop out. Two generating sets span the same
    lattice iff their forms coincide.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows or ncols == 0:
        return []
    columns = sympy.Matrix([[int(c) for c in row] for row in rows]).T
    W = normal_hermite_form(columns)
    return [tuple(int(W[i, j]) for i in range(W.rows)) for j in range(W.cols)]


def lattice_index(vectors: Sequence[Sequence[int]], dim: int) -> int:
    """Index of the span of ``vectors`` in Z^dim (0 when not of full rank)."""
    basis = hermite_normal_form(vectors, dim)
    if len(basis) < dim:
        return 0
    return abs(int(sympy.Matrix(basis).det()))


def spans_full_lattice(vectors: Sequence[Sequence[int]], dim: int) -> bool:
    return lattice_index(vectors, dim) == 1


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> List[Vector]:
    """Z-basis of {x in Z^ncols : rows @ x = 0}."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    snf = smith_normal_form(rows, ncols)
    V = snf.right
    return [tuple(int(V[i, j]) for i in range(ncols)) for j in range(snf.rank, ncols)]


# =============================================================================
# ABELIAN QUOTIENTS
# =============================================================================

@dataclass(frozen=True)
class AbelianQuotient:
    """
    Z^n / span(generators) written as (+) Z/d_i (+) Z^f.

    ``projection`` rows map ambient coordinates to quotient coordinates; the
    first ``len(torsion)`` coordinates are read modulo the matching factor.
    """
    ambient_rank: int
    torsion: Tuple[int, ...]
    free_rank: int
    projection: Tuple[Vector, ...]
    generators: Tuple[Vector, ...]

    @property
    def is_free_rank_one(self) -> bool:
        return not self.torsion and self.free_rank == 1

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.torsion + (0,) * self.free_rank

    def project(self, x: Sequence[int]) -> Vector:
        values = [sum(p * c for p, c in zip(row, x)) for row in self.projection]
        for i, d in enumerate(self.torsion):
            values[i] %= d
        return tuple(values)

    def in_kernel(self, x: Sequence[int]) -> bool:
        return all(v == 0 for v in self.project(x))

    def order_of(self, x: Sequence[int]) -> Optional[int]:
        """Order of the class of x; None when it has infinite order."""
        image = self.project(x)
        if any(image[len(self.torsion):]):
            return None
        orders = [d // gcd(d, v) for d, v in zip(self.torsion, image)]
        return reduce(lambda a, b: a * b // gcd(a, b), orders, 1)


def quotient(ambient_rank: int, generators: Sequence[Sequence[int]]) -> AbelianQuotient:
    """Z^ambient_rank modulo the span of ``generators``."""
    generators = tuple(tuple(int(c) for c in g) for g in generators)
    if not generators:
        identity = tuple(tuple(1 if i == j else 0 for j in range(ambient_rank)) for i in range(ambient_rank))
        return AbelianQuotient(ambient_rank, (), ambient_rank, identity, ())
    columns = [[g[i] for g in generators] for i in range(ambient_rank)]
    snf = smith_normal_form(columns, len(generators))
    U = snf.left
    torsion_rows, torsion = [], []
    free_rows = []
    for i in range(ambient_rank):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        row = tuple(int(U[i, j]) for j in range(ambient_rank))
        if d == 0:
            free_rows.append(row)
        elif d > 1:
            torsion.append(d)
            torsion_rows.append(row)
    return AbelianQuotient(
        ambient_rank=ambient_rank,
        torsion=tuple(torsion),
        free_rank=len(free_rows),
        projection=tuple(torsion_rows + free_rows),
        generators=generators,
    )


# =============================================================================
# EXACT RATIONAL LINEAR ALGEBRA
# =============================================================================

def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return sympy.Matrix([list(r) for r in rows]).rank()


def integral_inverse(rows: Sequence[Sequence[int]]) -> List[Vector]:
    """Inverse of a unimodular integer matrix; NonIntegralError otherwise."""
    M = sympy.Matrix([list(r) for r in rows])
    if M.det() == 0:
        raise NonIntegralError(f"Singular matrix {rows}")
    inverse = M.inv()
    if any(not entry.is_integer for entry in inverse):
        raise NonIntegralError(f"Inverse of {rows} is not integral (det {M.det()})")
    return [tuple(int(inverse[i, j]) for j in range(M.cols)) for i in range(M.rows)]


@dataclass(frozen=True)
class LeftInverse:
    """
    Rational left inverse of a full-column-rank integer matrix C, stored as an
    integer numerator matrix over a common denominator.
    """
    columns: Tuple[Vector, ...]
    numerator: Tuple[Vector, ...]
    denominator: int

    def solve(self, x: Sequence[int]) -> Optional[Tuple[Fraction, ...]]:
        """Coefficients c with sum c_i columns_i == x, or None when x is outside the span."""
        coefficients = tuple(
            Fraction(sum(a * b for a, b in zip(row, x)), self.denominator) for row in self.numerator
        )
        rebuilt = [sum(c * col[i] for c, col in zip(coefficients, self.columns)) for i in range(len(x))]
        if any(r != v for r, v in zip(rebuilt, x)):
            return None
        return coefficients


def left_inverse(columns: Sequence[Sequence[int]], dim: int) -> LeftInverse:
    columns = tuple(tuple(int(c) for c in col) for col in columns)
    if not columns:
        return LeftInverse((), (), 1)
    C = sympy.Matrix([list(col) for col in columns]).T
    pseudo = (C.T * C).inv() * C.T
    denominator = int(reduce(lambda a, b: a * b // gcd(a, b), [int(sympy.fraction(e)[1]) for e in pseudo], 1))
    numerator = tuple(
        tuple(int(pseudo[i, j] * denominator) for j in range(dim)) for i in range(pseudo.rows)
    )
    return LeftInverse(columns, numerator, denominator)


def primitive_vector(values: Sequence) -> Vector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fractions = [sympy.Rational(v) for v in values]
    denominator = reduce(lambda a, b: a * b // gcd(a, b), [int(f.q) for f in fractions], 1)
    integers = [int(f * denominator) for f in fractions]
    common = reduce(gcd, (abs(v) for v in integers), 0)
    if common == 0:
        return tuple(integers)
    return tuple(v // common for v in integers)


def extreme_rays(normals: Sequence[Sequence[int]], dim: int) -> List[Vector]:
    """
    Primitive generators of the extreme rays of {x : <n, x> >= 0 for all normals}.

    The cone must be pointed. Every extreme ray is the kernel line of dim-1
    linearly independent tight normals, so candidates are enumerated over
    subsets and filtered by feasibility.
    """
    normals = sorted({tuple(int(c) for c in n) for n in normals if any(n)})
    if dim == 0:
        return []
    if dim == 1:
        rays = [v for v in ((1,), (-1,)) if all(n[0] * v[0] >= 0 for n in normals)]
        return rays
    rays = set()
    for subset in itertools.combinations(normals, dim - 1):
        M = sympy.Matrix([list(n) for n in subset])
        if M.rank() != dim - 1:
            continue
        kernel = M.nullspace()
        ray = primitive_vector(list(kernel[0]))
        for candidate in (ray, tuple(-c for c in ray)):
            if all(sum(a * b for a, b in zip(n, candidate)) >= 0 for n in normals):
                rays.add(candidate)
    logger.debug("cone with %d normals in dim %d has %d rays", len(normals), dim, len(rays))
    return sorted(rays)
