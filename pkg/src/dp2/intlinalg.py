"""Small exact linear algebra over the integers and over the field with two elements.

Matrices are lists of rows of Python ints, so nothing here ever overflows or
rounds.  The workhorse is a column echelon reduction H = M*U with U unimodular,
which yields integer kernels, column-space bases, and membership/solution tests
for M*x = b over the integers.  Elementary divisors come from a textbook Smith
reduction.  All inputs in this package are at most 8x8, so no attention is paid
to asymptotics; correctness is cross-checked against sympy in the test suite.
"""

from __future__ import annotations

Matrix = list[list[int]]
Vector = list[int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def column_echelon(m: Matrix) -> tuple[Matrix, Matrix, list[tuple[int, int]]]:
    """Reduce by unimodular column operations.

    Returns (h, u, pivots) with h = m*u, u unimodular, and pivots a list of
    (row, col) pairs with strictly increasing rows and cols 0,1,2,...  Columns
    past the last pivot are identically zero, and every pivot has only zeros
    above it and to its right within its row.
    """
    rows, cols = len(m), len(m[0])
    h = [row[:] for row in m]
    u = identity(cols)

    def combine(c1: int, c2: int, a: int, b: int, c: int, d: int) -> None:
        # (col_c1, col_c2) <- (a*col_c1 + b*col_c2, c*col_c1 + d*col_c2)
        for mat in (h, u):
            for row in mat:
                v1, v2 = row[c1], row[c2]
                row[c1] = a * v1 + b * v2
                row[c2] = c * v1 + d * v2

    pivots: list[tuple[int, int]] = []
    col = 0
    for row in range(rows):
        if col >= cols:
            break
        support = [j for j in range(col, cols) if h[row][j] != 0]
        if not support:
            continue
        lead = support[0]
        if lead != col:
            combine(col, lead, 0, 1, 1, 0)
        for j in range(col + 1, cols):
            if h[row][j] == 0:
                continue
            a, b = h[row][col], h[row][j]
            g, x, y = xgcd(a, b)
            combine(col, j, x, y, -(b // g), a // g)
        pivots.append((row, col))
        col += 1
    # normalise pivot signs (pure column negation keeps u unimodular)
    for row, c in pivots:
        if h[row][c] < 0:
            for mat in (h, u):
                for r in mat:
                    r[c] = -r[c]
    return h, u, pivots


def kernel_basis(m: Matrix) -> list[Vector]:
    """A basis of the full integer kernel lattice {x : m*x = 0}."""
    _, u, pivots = column_echelon(m)
    cols = len(m[0])
    first_free = len(pivots)
    return [[u[i][j] for i in range(cols)] for j in range(first_free, cols)]


def column_space_basis(m: Matrix) -> list[Vector]:
    """A basis (echelon columns) of the lattice spanned by the columns of m."""
    h, _, pivots = column_echelon(m)
    rows = len(m)
    return [[h[i][c] for i in range(rows)] for _, c in pivots]


def solve(m: Matrix, b: Vector) -> Vector | None:
    """One integer solution of m*x = b, or None when none exists."""
    h, u, pivots = column_echelon(m)
    rows, cols = len(m), len(m[0])
    residual = list(b)
    y = [0] * cols
    for row, c in pivots:
        num, den = residual[row], h[row][c]
        if num % den != 0:
            return None
        y[c] = num // den
        if y[c] != 0:
            for i in range(rows):
                residual[i] -= y[c] * h[i][c]
    if any(residual):
        return None
    return mat_vec(u, y)


def det(m: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_elementary_divisors(m: Matrix) -> list[int]:
    """The nonzero diagonal of the Smith normal form, each dividing the next."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0

    def submatrix_nonzero(t: int) -> tuple[int, int] | None:
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    divisors: list[int] = []
    t = 0
    while t < min(rows, cols):
        pos = submatrix_nonzero(t)
        if pos is None:
            break
        i, j = pos
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        # clear row and column t; restart whenever a remainder shrinks the pivot
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] % pivot != 0:
                    q = a[i][t] // pivot
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    a[t], a[i] = a[i], a[t]
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j] % pivot != 0:
                    q = a[t][j] // pivot
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    dirty = True
                    break
            if dirty:
                continue
            for i in range(t + 1, rows):
                q = a[i][t] // pivot
                if q:
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
            for j in range(t + 1, cols):
                q = a[t][j] // pivot
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
            break
        # enforce divisibility towards the remaining block
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t] != 0:
                    offender = j
                    break
            if offender is not None:
                break
        if offender is not None:
            for i in range(rows):
                a[i][t] += a[i][offender]
            continue
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors


def gf2_solve(a: Matrix, b: Vector) -> Vector | None:
    """One solution of a*x = b over the two-element field, or None."""
    rows, cols = len(a), len(a[0]) if a else 0
    aug = [[a[i][j] & 1 for j in range(cols)] + [b[i] & 1] for i in range(rows)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        for i in range(rows):
            if i != r and aug[i][c]:
                aug[i] = [x ^ y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols]:
            return None
    x = [0] * cols
    for i, c in enumerate(pivot_cols):
        x[c] = aug[i][cols]
    return x
