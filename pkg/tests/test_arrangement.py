"""Structural queries: rank, closure, flats, circuits, minors, flags."""

from itertools import combinations

import pytest

from hyparr import Arrangement, NotAFlatError
from hyparr.fixtures import random_central_batch
from hyparr.intlinalg import in_row_lattice, mat_rank


def members(flats):
    return [f.members for f in flats]


class TestRank:
    def test_k3_full(self, k3):
        assert k3.rank((1, 2, 3)) == 2

    def test_empty_set(self, all_fixtures):
        for arr in all_fixtures.values():
            assert arr.rank(()) == 0

    def test_rep4_parallel_pair(self, rep4):
        assert rep4.rank((2, 3)) == 1

    def test_submodularity_exhaustive(self, all_fixtures):
        for arr in all_fixtures.values():
            for s in range(1 << arr.n):
                for t in range(1 << arr.n):
                    lhs = arr.rank_mask(s | t) + arr.rank_mask(s & t)
                    rhs = arr.rank_mask(s) + arr.rank_mask(t)
                    assert lhs <= rhs


class TestClosure:
    def test_k3_spanning_pair(self, k3):
        assert k3.closure((1, 2)).members == (1, 2, 3)

    def test_empty_closure_is_empty(self, all_fixtures):
        for arr in all_fixtures.values():
            assert arr.closure(()).members == ()

    def test_rep4_parallel(self, rep4):
        assert rep4.closure((2,)).members == (2, 3)

    def test_idempotent_and_extensive(self, all_fixtures):
        for arr in all_fixtures.values():
            for mask in range(1 << arr.n):
                cl = arr.closure(mask)
                assert cl.mask & mask == mask
                again = arr.closure(cl.mask)
                assert again.mask == cl.mask
                assert arr.is_flat(cl.mask)
                assert arr.rank_mask(cl.mask) == arr.rank_mask(mask)


class TestFlats:
    def test_b2_boolean(self, b2):
        assert members(b2.flats()) == [(), (1,), (2,), (1, 2)]

    def test_k3_five_flats(self, k3):
        assert members(k3.flats()) == [(), (1,), (2,), (3,), (1, 2, 3)]

    def test_rep4_five_flats(self, rep4):
        got = set(members(rep4.flats()))
        assert got == {(), (1,), (2, 3), (4,), (1, 2, 3, 4)}

    def test_rank_corank_sum(self, all_fixtures):
        for arr in all_fixtures.values():
            for f in arr.flats():
                assert f.rank + f.corank == arr.d

    def test_closed_under_intersection(self, all_fixtures):
        for arr in all_fixtures.values():
            lattice = arr.flats()
            for f in lattice:
                for g in lattice:
                    meet = arr.closure(f.mask & g.mask)
                    assert lattice.contains_mask(meet.mask)

    def test_moebius_defining_recursion(self, all_fixtures):
        for arr in all_fixtures.values():
            lattice = arr.flats()
            for f in lattice:
                for g in lattice:
                    if f.mask & g.mask != f.mask:
                        continue
                    total = sum(lattice.moebius_pair(h, g)
                                for h in lattice.interval(f, g))
                    assert total == (1 if f.mask == g.mask else 0)

    def test_one_arg_moebius_matches_pair(self, all_fixtures):
        for arr in all_fixtures.values():
            lattice = arr.flats()
            for f in lattice:
                assert lattice.moebius_value(f) == \
                    lattice.moebius_pair(lattice.bottom, f)


class TestCircuits:
    def test_k3_single(self, k3):
        (c,) = k3.circuits()
        assert c.members == (1, 2, 3)
        assert c.coeffs == (1, 1, -1)

    def test_b2_none(self, b2):
        assert b2.circuits() == ()

    def test_rep4_three(self, rep4):
        got = {c.members: c.coeffs for c in rep4.circuits()}
        assert got == {
            (2, 3): (1, -1),
            (1, 2, 4): (1, 1, -1),
            (1, 3, 4): (1, 1, -1),
        }

    def test_sign_normalization(self, all_fixtures):
        from math import gcd
        for arr in all_fixtures.values():
            for c in arr.circuits():
                assert c.coeffs[0] > 0
                g = 0
                for v in c.coeffs:
                    g = gcd(g, abs(v))
                assert g == 1

    def test_dependency_identity(self, all_fixtures):
        for arr in all_fixtures.values():
            for c in arr.circuits():
                for r in range(arr.d):
                    total = sum(lam * arr.columns[i - 1][r]
                                for i, lam in zip(c.members, c.coeffs))
                    assert total == 0

    def test_minimality(self, all_fixtures):
        for arr in all_fixtures.values():
            for c in arr.circuits():
                assert arr.rank_mask(c.mask) == len(c.members) - 1
                for i in c.members:
                    sub = c.mask ^ (1 << (i - 1))
                    assert arr.rank_mask(sub) == sub.bit_count()


class TestColoops:
    def test_b2_both(self, b2):
        assert b2.coloops(b2.closure((1, 2))) == (1, 2)

    def test_k3_none(self, k3):
        assert k3.coloops(k3.closure((1, 2, 3))) == ()

    def test_rep4_singleton(self, rep4):
        assert rep4.coloops(rep4.closure((1,))) == (1,)

    def test_flag_matches_top_flat(self, all_fixtures):
        for arr in all_fixtures.values():
            top = arr.flats().top
            assert arr.classify().is_coloop_free == (arr.coloops(top) == ())


class TestMinors:
    def test_restriction_k3_singleton(self, k3):
        res = k3.restriction(k3.closure((1,)))
        assert res.d == 1
        assert res.columns[0] == res.columns[1]
        assert any(res.columns[0])
        assert res.parent_map == (2, 3)

    def test_restriction_empty_is_identity(self, all_fixtures):
        for arr in all_fixtures.values():
            assert arr.restriction(arr.closure(())) == arr

    def test_restriction_rep4_pair(self, rep4):
        res = rep4.restriction(rep4.closure((2, 3)))
        assert res.d == 1 and res.n == 2
        assert res.columns[0] == res.columns[1]
        assert res.parent_map == (1, 4)

    def test_localization_top_is_unimodular_copy(self, k3):
        loc = k3.localization(k3.closure((1, 2, 3)))
        assert loc.d == k3.d and loc.n == k3.n
        # same matroid up to an integral change of basis
        for mask in range(1 << 3):
            assert loc.rank_mask(mask) == k3.rank_mask(mask)
        assert loc.classify().is_unimodular

    def test_localization_rep4_pair(self, rep4):
        loc = rep4.localization(rep4.closure((2, 3)))
        assert loc.d == 1 and loc.n == 2
        assert loc.columns[0] == loc.columns[1]

    def test_localization_empty(self, k3):
        loc = k3.localization(k3.closure(()))
        assert loc.n == 0 and loc.d == 0

    def test_not_a_flat_errors(self, k3):
        with pytest.raises(NotAFlatError):
            k3.restriction((1, 3))
        with pytest.raises(NotAFlatError):
            k3.localization((1, 3))

    def test_rank_additivity(self, all_fixtures):
        for arr in all_fixtures.values():
            for f in arr.flats():
                loc = arr.localization(f)
                res = arr.restriction(f)
                assert loc.d + res.d == arr.d
                assert loc.d == f.rank and res.d == f.corank

    def test_unimodularity_preserved(self, k3, k4):
        for arr in (k3, k4):
            assert arr.classify().is_unimodular
            for f in arr.flats():
                assert arr.restriction(f).classify().is_unimodular
                assert arr.localization(f).classify().is_unimodular


class TestKernel:
    def test_k3(self, k3):
        basis = k3.kernel_basis()
        assert len(basis) == 1
        assert basis[0] in ((1, 1, -1), (-1, -1, 1))

    def test_b2_empty(self, b2):
        assert b2.kernel_basis() == ()

    def test_rep4_lattice(self, rep4):
        basis = rep4.kernel_basis()
        assert len(basis) == 2
        for row in ((0, 1, -1, 0), (1, 1, 0, -1)):
            assert in_row_lattice(basis, row)

    def test_kernel_property(self, all_fixtures):
        for arr in all_fixtures.values():
            basis = arr.kernel_basis()
            assert len(basis) == arr.k
            assert mat_rank(basis) == arr.k
            for row in basis:
                for r in range(arr.d):
                    assert sum(row[i] * arr.columns[i][r]
                               for i in range(arr.n)) == 0


class TestClassify:
    def test_k3(self, k3):
        flags = k3.classify()
        assert flags.is_central
        assert flags.is_unimodular
        assert flags.is_coloop_free
        assert flags.kernel_torus_connected
        assert not flags.is_simple  # triple point at the origin

    def test_nu4_not_unimodular(self, nu4):
        assert not nu4.classify().is_unimodular
        assert nu4.classify().kernel_torus_connected

    def test_b2(self, b2):
        flags = b2.classify()
        assert flags.is_simple
        assert not flags.is_coloop_free


class TestGenericOffsets:
    def test_k3_becomes_simple(self, k3):
        tilde = k3.generic_offsets(seed=1)
        assert tilde.classify().is_simple
        assert tilde.columns == k3.columns

    def test_b2_any_seed(self, b2):
        assert b2.generic_offsets(seed=0).classify().is_simple

    def test_rep4_separates_parallels(self, rep4):
        tilde = rep4.generic_offsets(seed=1)
        assert tilde.classify().is_simple
        assert tilde.offsets[1] != tilde.offsets[2]

    def test_deterministic(self, k3):
        assert k3.generic_offsets(seed=9).offsets == \
            k3.generic_offsets(seed=9).offsets


class TestValidation:
    def test_ground_set_cap(self):
        cols = [(1,)] * 21
        with pytest.raises(ValueError):
            Arrangement(cols)

    def test_zero_column_rejected(self):
        with pytest.raises(ValueError):
            Arrangement([(1, 0), (0, 0)])

    def test_rank_deficient_rejected(self):
        with pytest.raises(ValueError):
            Arrangement([(1, 0), (2, 0)])

    def test_offsets_length(self):
        with pytest.raises(ValueError):
            Arrangement([(1,), (2,)], offsets=(1,))

    def test_json_round_trip(self, all_fixtures):
        for arr in all_fixtures.values():
            assert Arrangement.from_dict(arr.to_dict()) == arr


class TestRandomInstances:
    def test_submodularity_on_random(self):
        for arr in random_central_batch(10, seed=3):
            for s, t in combinations(range(1 << arr.n), 2):
                if (s + t) % 17:  # sampled pairs keep this quick
                    continue
                assert (arr.rank_mask(s | t) + arr.rank_mask(s & t)
                        <= arr.rank_mask(s) + arr.rank_mask(t))
