"""Smith normal form over the integers and the abelianised-fiber quotients
used for the braid-group cohomological dimension computations.

Matrices are plain lists of rows of Python ints (arbitrary precision), so the
classical pivot blow-up is harmless.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]


@dataclass(frozen=True)
class AbelianGroup:
    """Invariant-factor form: Z^free_rank + Z/d1 + ... with d1 | d2 | ..."""

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for prev, cur in zip(self.torsion, self.torsion[1:]):
            if cur % prev:
                raise ValueError(f"torsion {self.torsion} violates divisibility")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple[int, ...]
    U: tuple[tuple[int, ...], ...] | None = None
    V: tuple[tuple[int, ...], ...] | None = None


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def _validate(mat: Sequence[Sequence[int]]) -> Matrix:
    A = [list(row) for row in mat]
    if A and any(len(row) != len(A[0]) for row in A):
        raise ValueError("ragged matrix")
    return A


def smith_normal_form(mat: Sequence[Sequence[int]], transforms: bool = False) -> SNFResult:
    """Diagonalise by unimodular row/column operations.  The diagonal entries
    are nonnegative and form a divisibility chain; when requested, U and V
    satisfy U * M * V = D with det U, det V in {+1, -1}.
    """
    A = _validate(mat)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        for j in range(cols):
            A[dst][j] += q * A[src][j]
        for j in range(rows):
            U[dst][j] += q * U[src][j]

    def add_col(src, dst, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    while t < min(rows, cols):
        # Pick the nonzero entry of smallest magnitude as pivot.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            swap_rows(t, pivot[0])
        if pivot[1] != t:
            swap_cols(t, pivot[1])
        # Clear the pivot row and column by Euclidean steps.
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
        # Enforce divisibility of the remaining block by the pivot.
        offender = None
        d = A[t][t]
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if A[i][j] % d:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if d < 0:
            negate_row(t)
        t += 1

    diagonal = tuple(A[i][i] for i in range(min(rows, cols)))
    if transforms:
        return SNFResult(diagonal, tuple(map(tuple, U)), tuple(map(tuple, V)))
    return SNFResult(diagonal)


def cokernel(mat: Sequence[Sequence[int]]) -> AbelianGroup:
    """Z^cols modulo the row lattice of the matrix, in invariant-factor form."""
    A = _validate(mat)
    cols = len(A[0]) if A else 0
    diagonal = smith_normal_form(A).diagonal if A else ()
    nonzero = [d for d in diagonal if d]
    return AbelianGroup(cols - len(nonzero), tuple(d for d in nonzero if d > 1))


NONORIENTABLE_RANK_NOTE = (
    "source rank formula g+k disagrees with the explicit basis of size g+k-1; "
    "the quotient is computed from the explicit basis/relation data"
)


def _check_gk(g: int, k: int) -> None:
    if g < 1 or k < 1:
        raise ValueError(f"requires g >= 1 and k >= 1, got g={g}, k={k}")


def nab_quotient_orientable(g: int, k: int) -> AbelianGroup:
    """Abelianised fiber modulo coinvariants for a genus-g orientable surface
    with k strands: basis {rho_r, tau_r (r <= g), C_m (m <= k-1)} of rank
    2g + k - 1, with the k-1 basis vectors C_m killed.  Result: Z^(2g).
    """
    _check_gk(g, k)
    rank = 2 * g + k - 1
    relations = []
    for m in range(k - 1):
        row = [0] * rank
        row[2 * g + m] = 1  # C_{m,k+1} is itself a basis vector
        relations.append(row)
    if not relations:
        relations = [[0] * rank]
    return cokernel(relations)


def nab_quotient_nonorientable(g: int, k: int) -> AbelianGroup:
    """Non-orientable analogue: basis {rho_r (r <= g), B_m (m <= k-1)}, with
    the B_m killed together with 2*(rho_1 + ... + rho_g).
    Result: Z^(g-1) + Z/2.
    """
    _check_gk(g, k)
    rank = g + (k - 1)
    relations = []
    for m in range(k - 1):
        row = [0] * rank
        row[g + m] = 1
        relations.append(row)
    relations.append([2] * g + [0] * (k - 1))
    return cokernel(relations)
