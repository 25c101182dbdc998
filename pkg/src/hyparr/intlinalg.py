"""Exact linear algebra over the integers and rationals.

Matrices are sequences of equal-length rows of Python ints (arbitrary
precision).  Ranks and determinants come from fraction-free Bareiss
elimination, lattice computations (saturated kernels, quotient maps) from a
row-style Hermite normal form with a tracked unimodular transform, and the
one feasibility question we need (existence of a strictly positive rational
dependency) from a phase-one simplex on exact fractions.  No floating point
anywhere.
"""

from fractions import Fraction


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def transpose(rows, ncols=None):
    """Transpose a rectangular matrix given as a list of rows."""
    if not rows:
        return [[] for _ in range(ncols)] if ncols else []
    return [[row[j] for row in rows] for j in range(len(rows[0]))]


def mat_rank(rows):
    """Rank over the rationals of an integer matrix, by Bareiss elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                # 2x2 determinant update; division by the previous pivot is exact
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_det(rows):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return 0
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def row_hnf(rows, ncols=None):
    """Row Hermite normal form with unimodular transform.

    Returns (H, U) with U * M = H, U unimodular, pivots positive, entries
    above each pivot reduced into [0, pivot), nonzero rows first with
    strictly increasing pivot columns.  H is the canonical representative of
    M under left multiplication by GL(Z).
    """
    H = [list(r) for r in rows]
    m = len(H)
    if ncols is None:
        ncols = len(H[0]) if H else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if H[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            H[r], H[pivot] = H[pivot], H[r]
            U[r], U[pivot] = U[pivot], U[r]
        for i in range(r + 1, m):
            if not H[i][c]:
                continue
            g, x, y = xgcd(H[r][c], H[i][c])
            a, b = H[r][c] // g, H[i][c] // g
            hr, hi, ur, ui = H[r], H[i], U[r], U[i]
            H[r] = [x * p + y * q for p, q in zip(hr, hi)]
            H[i] = [a * q - b * p for p, q in zip(hr, hi)]
            U[r] = [x * p + y * q for p, q in zip(ur, ui)]
            U[i] = [a * q - b * p for p, q in zip(ur, ui)]
        if H[r][c] < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [p - q * s for p, s in zip(H[i], H[r])]
                U[i] = [p - q * s for p, s in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return [tuple(row) for row in H], [tuple(row) for row in U]


def right_kernel_basis(rows, ncols):
    """Lattice basis of the saturated integer kernel {x : M x = 0}.

    `rows` is the matrix M with `ncols` columns; the result is a tuple of
    integer rows spanning the full kernel lattice (not a finite-index
    sublattice).
    """
    t = [[row[j] for row in rows] for j in range(ncols)]
    H, U = row_hnf(t, len(rows))
    return tuple(tuple(U[i]) for i in range(ncols) if not any(H[i]))


def lattice_quotient_map(kill_vectors, dim):
    """Integer coordinate map onto the quotient by the span of `kill_vectors`.

    Returns rows Q such that v -> Q v is a surjection of Z^dim onto
    Z^(dim - r) with kernel the saturation of the span; Q is empty when the
    vectors already span.
    """
    return right_kernel_basis(list(kill_vectors), dim)


def apply_map(q_rows, vector):
    """Image of a vector under a matrix given by rows."""
    return tuple(sum(r[j] * vector[j] for j in range(len(vector))) for r in q_rows)


def saturation_basis(vectors, dim):
    """Basis of the saturation of the span of `vectors` inside Z^dim."""
    q = lattice_quotient_map(vectors, dim)
    return right_kernel_basis(list(q), dim)


def solve_rational(rows, rhs):
    """One rational solution of M x = rhs, or None when inconsistent.

    Free variables are set to zero, so the answer is unique whenever M has
    full column rank.
    """
    m = len(rows)
    ncols = len(rows[0]) if m else 0
    aug = [[Fraction(v) for v in rows[i]] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, m) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][ncols]
    return tuple(x)


def in_row_lattice(basis_rows, vector):
    """Whether `vector` lies in the integer row span of `basis_rows`."""
    if not basis_rows:
        return not any(vector)
    coeffs = solve_rational(transpose(basis_rows), vector)
    return coeffs is not None and all(c.denominator == 1 for c in coeffs)


def rank_mod_p(rows, p):
    """Rank of an integer matrix over the prime field F_p."""
    m = [[v % p for v in row] for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(v - f * w) % p for v, w in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_info_mod_p(rows, rhs, p):
    """Return (rank, consistent) for the linear system M x = rhs over F_p."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    aug = [[v % p for v in rows[i]] + [rhs[i] % p] for i in range(nrows)]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = pow(aug[rank][col], p - 2, p)
        aug[rank] = [(v * inv) % p for v in aug[rank]]
        for i in range(nrows):
            if i != rank and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[rank])]
        rank += 1
        if rank == nrows:
            break
    consistent = all(not aug[i][ncols] for i in range(rank, nrows))
    return rank, consistent


def is_prime(n):
    """Primality by trial division; counts are only taken at small primes."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def nonneg_solution_exists(rows, rhs):
    """Decide feasibility of A x = b with x >= 0 over the rationals.

    Phase-one simplex with Bland's rule on exact fractions; terminates on
    every input.  Sizes here are tiny (a handful of equations), so the
    naive reduced-cost scan is fine.
    """
    m = len(rows)
    if m == 0:
        return True
    n = len(rows[0]) if rows else 0
    tableau = []
    basis = []
    for i in range(m):
        row = [Fraction(v) for v in rows[i]]
        b = Fraction(rhs[i])
        if b < 0:
            row = [-v for v in row]
            b = -b
        art = [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        tableau.append(row + art + [b])
        basis.append(n + i)
    total = n + m
    while True:
        entering = -1
        for j in range(total):
            cj = 1 if j >= n else 0
            zj = sum(tableau[i][j] for i in range(m) if basis[i] >= n)
            if cj - zj < 0:
                entering = j
                break
        if entering < 0:
            break
        leaving = -1
        best = None
        for i in range(m):
            if tableau[i][entering] > 0:
                ratio = tableau[i][-1] / tableau[i][entering]
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leaving])):
                    best = ratio
                    leaving = i
        if leaving < 0:
            raise ArithmeticError("phase-one objective unbounded")
        piv = tableau[leaving][entering]
        tableau[leaving] = [v / piv for v in tableau[leaving]]
        for i in range(m):
            if i != leaving and tableau[i][entering]:
                f = tableau[i][entering]
                tableau[i] = [v - f * w for v, w in zip(tableau[i], tableau[leaving])]
        basis[leaving] = entering
    residue = sum(tableau[i][-1] for i in range(m) if basis[i] >= n)
    return residue == 0


def strictly_positive_dependency_exists(vectors):
    """Whether some strictly positive rational combination of `vectors` is zero.

    Equivalent (Stiemke) to: no linear functional is nonnegative on all the
    vectors and positive on at least one.  The empty collection qualifies.
    """
    vectors = list(vectors)
    if not vectors:
        return True
    k = len(vectors[0])
    if k == 0:
        return True
    # c >= 1 componentwise with sum c_i v_i = 0; substitute c = 1 + s, s >= 0
    rows = [[v[r] for v in vectors] for r in range(k)]
    rhs = [-sum(v[r] for v in vectors) for r in range(k)]
    return nonneg_solution_exists(rows, rhs)
