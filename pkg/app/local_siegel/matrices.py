"""
Integral reduction of half-integral matrices
"""
from core.exceptions import PreconditionError
from local_siegel.models import HalfIntegralMat


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _swap_columns(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _subtract_column(M, target, source, q):
    for row in M:
        row[target] -= q * row[source]


def column_echelon(G):
    """Unimodular column reduction G U = [H | 0] with H of full column rank.

    Returns (G U, U, rank). The trailing columns of U span the integral
    kernel of G.
    """
    n = len(G)
    A = [list(row) for row in G]
    U = identity(n)
    col = 0
    for r in range(n):
        if col >= n:
            break
        while True:
            nonzero = [j for j in range(col, n) if A[r][j]]
            if not nonzero:
                break
            j = min(nonzero, key=lambda j: abs(A[r][j]))
            if j != col:
                _swap_columns(A, col, j)
                _swap_columns(U, col, j)
            done = True
            for j in range(col + 1, n):
                q = A[r][j] // A[r][col]
                if q:
                    _subtract_column(A, j, col, q)
                    _subtract_column(U, j, col, q)
                if A[r][j]:
                    done = False
            if done:
                break
        if A[r][col]:
            col += 1
    return A, U, col


def nondegenerate_part(T):
    """(T~, U) with T[U] = T~ + 0 and T~ positive definite of size rank(T)."""
    if not T.is_psd:
        raise PreconditionError(f'{T!r} is not positive semidefinite')
    if T.n == 0 or T.is_positive_definite:
        return T, identity(T.n)
    _, U, m = column_echelon(T.G)
    transformed = T.transform(U)
    reduced = transformed.block(range(m))
    if transformed != reduced.with_zeros(T.n - m):
        raise PreconditionError(f'Kernel reduction of {T!r} did not split off a zero block')
    return reduced, U


def _mat_mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def reduce_binary(T):
    """Reduced representative (0 <= b <= a <= c) of a positive definite binary form.

    T = [[a, b/2], [b/2, c]]; returns the reduced matrix and U with T[U] equal to it.
    """
    if T.n != 2 or not T.is_positive_definite:
        raise PreconditionError(f'{T!r} is not a positive definite binary form')
    a, b, c = T.G[0][0] // 2, T.G[0][1], T.G[1][1] // 2
    U = identity(2)
    while True:
        if b > a or b <= -a:
            q = -((a - b) // (2 * a))
            a, b, c = a, b - 2 * a * q, a * q * q - b * q + c
            U = _mat_mul(U, [[1, -q], [0, 1]])
        if a > c:
            a, b, c = c, -b, a
            U = _mat_mul(U, [[0, -1], [1, 0]])
            continue
        break
    if b < 0:
        b = -b
        U = _mat_mul(U, [[1, 0], [0, -1]])
    return HalfIntegralMat([[2 * a, b], [b, 2 * c]]), U


def canonical_binary(T):
    """A fixed representative of the GL_2(Z)-class of a psd binary form."""
    if T.n != 2:
        raise PreconditionError('canonical_binary expects a 2x2 matrix')
    rank = T.rank
    if rank == 2:
        return reduce_binary(T)[0]
    if rank == 0:
        return T
    reduced, _ = nondegenerate_part(T)
    return reduced.with_zeros(1)
