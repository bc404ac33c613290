"""Exact linear algebra over the integers and rationals.

Matrices are sequences of row sequences, vectors are flat sequences.
Rationals are `fractions.Fraction` (always reduced, positive denominator),
integers are plain Python ints, so everything is arbitrary precision and
nothing is ever rounded.  The matrices in this package are tiny (at most
about 10 x 10), so the algorithms favour clarity over asymptotics.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def mat_vec(A, v):
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def det(A):
    """Exact determinant via rational Gaussian elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    sign = 1
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            sign = -sign
        out *= M[c][c]
        inv = Fraction(1) / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return sign * out


def rank(A):
    """Rank over the rationals."""
    if not A:
        return 0
    m, n = len(A), len(A[0])
    M = [[Fraction(x) for x in row] for row in A]
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = Fraction(1) / M[r][c]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def smith_normal_form(A):
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns (S, U, V) with U*A*V == S, U and V unimodular, and S diagonal
    with d1 | d2 | ... and di >= 0.  Pivots are chosen by minimal absolute
    value; when a pivot fails to divide the trailing submatrix its row is
    augmented and reduction resumes, which makes the divisibility chain
    hold on termination.
    """
    m, n = len(A), len(A[0])
    S = [[int(x) for x in row] for row in A]
    U = identity(m)
    V = identity(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(m):
            S[r][i] -= q * S[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])
        while True:
            if S[t][t] < 0:
                S[t] = [-x for x in S[t]]
                U[t] = [-x for x in U[t]]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    row_op(i, t, S[i][t] // S[t][t])
                    if S[i][t]:
                        row_swap(t, i)
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    col_op(j, t, S[t][j] // S[t][t])
                    if S[t][j]:
                        col_swap(t, j)
                        clean = False
            if not clean:
                continue
            d = S[t][t]
            bad_row = None
            for i in range(t + 1, m):
                if any(S[i][j] % d for j in range(t + 1, n)):
                    bad_row = i
                    break
            if bad_row is None:
                break
            row_op(t, bad_row, -1)
        t += 1
    return S, U, V


def integer_kernel_basis(A):
    """Lattice basis of {x integer : A x = 0}, as a list of tuples.

    Columns of the Smith transform V matching zero diagonal entries form
    the basis; it is empty when the kernel is trivial.
    """
    m, n = len(A), len(A[0])
    S, _, V = smith_normal_form(A)
    ker = []
    for j in range(n):
        if j >= m or S[j][j] == 0:
            ker.append(tuple(V[i][j] for i in range(n)))
    for k in ker:
        assert all(dot(row, k) == 0 for row in A)
    return ker


def solve_exact(A, b):
    """Solve A x = b over the rationals.

    Returns None when the system is inconsistent, otherwise a pair
    (x, nullspace) where x is one solution and nullspace is a (possibly
    empty) list of vectors spanning ker(A).
    """
    m, n = len(A), len(A[0])
    M = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = Fraction(1) / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
    if any(M[i][n] for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for k, c in enumerate(piv_cols):
        x[c] = M[k][n]
    nullspace = []
    for free in range(n):
        if free in piv_cols:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for k, c in enumerate(piv_cols):
            v[c] = -M[k][free]
        nullspace.append(tuple(v))
    return tuple(x), nullspace


def solve_integer(A, b):
    """One integer solution of A x = b, or None when none exists."""
    m, n = len(A), len(A[0])
    S, U, _V = smith_normal_form(A)
    c = [dot(U[i], b) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = S[i][i] if i < n else 0
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    return tuple(dot(_V[i], y) for i in range(n))
