"""Property tests for the exact linear algebra kernel.

Instances are either exhaustively small or constructed together with a
certificate (a feasible point or a Farkas separator), so every expected
answer is known independently of the code under test.
"""

import random
from fractions import Fraction
from itertools import product

from hyparr.intlinalg import (
    in_row_lattice,
    mat_det,
    mat_rank,
    nonneg_solution_exists,
    rank_mod_p,
    right_kernel_basis,
    row_hnf,
    solve_rational,
    strictly_positive_dependency_exists,
    transpose,
    xgcd,
)


def random_matrix(rng, rows, cols, bound=4):
    return [[rng.randint(-bound, bound) for _ in range(cols)]
            for _ in range(rows)]


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


class TestBasics:
    def test_xgcd(self):
        rng = random.Random(0)
        for _ in range(200):
            a, b = rng.randint(-99, 99), rng.randint(-99, 99)
            g, x, y = xgcd(a, b)
            assert g == x * a + y * b
            assert g >= 0
            if a or b:
                assert a % g == 0 and b % g == 0

    def test_rank_against_fraction_elimination(self):
        rng = random.Random(1)
        for _ in range(100):
            m = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
            # reference: count pivots in plain fraction elimination
            ref = [[Fraction(v) for v in row] for row in m]
            rank = 0
            for col in range(len(ref[0])):
                piv = next((i for i in range(rank, len(ref)) if ref[i][col]), None)
                if piv is None:
                    continue
                ref[rank], ref[piv] = ref[piv], ref[rank]
                for i in range(len(ref)):
                    if i != rank and ref[i][col]:
                        f = ref[i][col] / ref[rank][col]
                        ref[i] = [v - f * w for v, w in zip(ref[i], ref[rank])]
                rank += 1
            assert mat_rank(m) == rank

    def test_det_multiplicativity(self):
        rng = random.Random(2)
        for _ in range(50):
            n = rng.randint(1, 4)
            a = random_matrix(rng, n, n, 3)
            b = random_matrix(rng, n, n, 3)
            assert mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b)


class TestHermiteForm:
    def test_transform_identity_and_unimodularity(self):
        rng = random.Random(3)
        for _ in range(100):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            m = random_matrix(rng, rows, cols)
            h, u = row_hnf(m, cols)
            assert [list(r) for r in mat_mul(u, m)] == [list(r) for r in h]
            assert abs(mat_det(u)) == 1

    def test_shape(self):
        rng = random.Random(4)
        for _ in range(100):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            h, _ = row_hnf(random_matrix(rng, rows, cols), cols)
            pivots = []
            for row in h:
                nz = next((j for j, v in enumerate(row) if v), None)
                if nz is None:
                    continue
                pivots.append((nz, row[nz]))
            cols_seen = [c for c, _ in pivots]
            assert cols_seen == sorted(cols_seen)
            for idx, (c, p) in enumerate(pivots):
                assert p > 0
                for above in range(idx):
                    assert 0 <= h[above][c] < p

    def test_canonical_under_left_action(self):
        # left-multiplying by a unimodular matrix must not change the form
        rng = random.Random(5)
        for _ in range(50):
            rows, cols = rng.randint(1, 3), rng.randint(1, 4)
            m = random_matrix(rng, rows, cols)
            u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
            for _ in range(6):  # random elementary row operations
                i, j = rng.randrange(rows), rng.randrange(rows)
                if i != j:
                    c = rng.randint(-2, 2)
                    u[i] = [a + c * b for a, b in zip(u[i], u[j])]
            assert row_hnf(m, cols)[0] == row_hnf(mat_mul(u, m), cols)[0]


class TestKernel:
    def test_kernel_annihilates_and_has_right_rank(self):
        rng = random.Random(6)
        for _ in range(100):
            rows, cols = rng.randint(1, 3), rng.randint(1, 5)
            m = random_matrix(rng, rows, cols, 3)
            basis = right_kernel_basis(m, cols)
            assert len(basis) == cols - mat_rank(m)
            for vec in basis:
                for row in m:
                    assert sum(a * b for a, b in zip(row, vec)) == 0
            if basis:
                assert mat_rank(basis) == len(basis)

    def test_kernel_is_saturated(self):
        # every small integer kernel vector must lie in the basis lattice
        rng = random.Random(7)
        for _ in range(40):
            rows, cols = rng.randint(1, 2), rng.randint(1, 4)
            m = random_matrix(rng, rows, cols, 2)
            basis = right_kernel_basis(m, cols)
            for vec in product(range(-3, 4), repeat=cols):
                if all(sum(a * b for a, b in zip(row, vec)) == 0 for row in m):
                    assert in_row_lattice(basis, vec), (m, vec)


class TestSolvers:
    def test_solve_rational_on_constructed_systems(self):
        rng = random.Random(8)
        for _ in range(100):
            rows, cols = rng.randint(1, 4), rng.randint(1, 4)
            m = random_matrix(rng, rows, cols)
            x = [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                 for _ in range(cols)]
            rhs = [sum(m[i][j] * x[j] for j in range(cols)) for i in range(rows)]
            got = solve_rational(m, rhs)
            assert got is not None
            for i in range(rows):
                assert sum(m[i][j] * got[j] for j in range(cols)) == rhs[i]

    def test_solve_rational_detects_inconsistency(self):
        assert solve_rational([[1, 1], [2, 2]], [1, 3]) is None

    def test_rank_mod_p_matches_det(self):
        rng = random.Random(9)
        for _ in range(100):
            n = rng.randint(1, 3)
            m = random_matrix(rng, n, n, 4)
            for p in (2, 3, 5):
                full = rank_mod_p(m, p) == n
                assert full == (mat_det(m) % p != 0)


class TestFeasibility:
    def test_feasible_by_construction(self):
        rng = random.Random(10)
        for _ in range(100):
            rows, cols = rng.randint(1, 3), rng.randint(1, 5)
            m = random_matrix(rng, rows, cols, 3)
            x = [rng.randint(0, 4) for _ in range(cols)]
            b = [sum(m[i][j] * x[j] for j in range(cols)) for i in range(rows)]
            assert nonneg_solution_exists(m, b)

    def test_infeasible_by_farkas_certificate(self):
        # y with yA >= 0 and yb < 0 proves Ax = b, x >= 0 has no solution
        rng = random.Random(11)
        found = 0
        while found < 100:
            rows, cols = rng.randint(1, 3), rng.randint(1, 4)
            m = random_matrix(rng, rows, cols, 3)
            y = [rng.randint(-3, 3) for _ in range(rows)]
            combo = [sum(y[i] * m[i][j] for i in range(rows))
                     for j in range(cols)]
            if any(v < 0 for v in combo):
                continue
            b = [rng.randint(-4, 4) for _ in range(rows)]
            if sum(y[i] * b[i] for i in range(rows)) >= 0:
                continue
            found += 1
            assert not nonneg_solution_exists(m, b)


class TestPositiveDependency:
    def test_scalar_closed_form(self):
        # in one dimension: possible iff no nonzero entries, or both signs occur
        rng = random.Random(12)
        for _ in range(300):
            vals = [(rng.randint(-3, 3),) for _ in range(rng.randint(0, 5))]
            signs = {1 if v[0] > 0 else (-1 if v[0] < 0 else 0) for v in vals}
            expected = (1 in signs) == (-1 in signs)
            assert strictly_positive_dependency_exists(vals) == expected

    def test_constructed_positive_dependencies(self):
        rng = random.Random(13)
        for _ in range(100):
            k, m = rng.randint(1, 3), rng.randint(1, 4)
            vecs = [tuple(rng.randint(-3, 3) for _ in range(k))
                    for _ in range(m)]
            closing = tuple(-sum(v[i] for v in vecs) for i in range(k))
            assert strictly_positive_dependency_exists(vecs + [closing])

    def test_separated_sets_fail(self):
        rng = random.Random(14)
        found = 0
        while found < 100:
            k, m = rng.randint(1, 3), rng.randint(1, 4)
            y = tuple(rng.randint(-3, 3) for _ in range(k))
            if not any(y):
                continue
            vecs = []
            for _ in range(m):
                v = tuple(rng.randint(-3, 3) for _ in range(k))
                if sum(a * b for a, b in zip(y, v)) > 0:
                    vecs.append(v)
            if not vecs:
                continue
            found += 1
            assert not strictly_positive_dependency_exists(vecs)
