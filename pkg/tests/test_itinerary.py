import itertools

import numpy as np
import pytest
from mpmath import mp, mpc, mpf, workdps

from orbitgrowth import (
    ItineraryConfig,
    NonConvergenceError,
    UnicriticalMap,
    count_periodic,
    itinerary_point,
)
from orbitgrowth.itinerary import branch_root

M6 = UnicriticalMap(2, -6 + 0j)


def fk_minus_z_coeffs(k: int, c: int) -> list[int]:
    """Integer coefficients (highest degree first) of f^k(z) - z, exact."""
    poly = [1, 0]  # z
    for _ in range(k):
        poly = list(np.polymul(np.array(poly, dtype=object), np.array(poly, dtype=object)))
        poly[-1] += c
    poly[-2] -= 1
    return poly


class TestBranchRoot:
    def test_positive_branch(self):
        with workdps(40):
            z = branch_root(mpc(9), 2, 1, mpf("1e-30"))
            assert abs(z - 3) < 1e-30

    def test_negative_branch(self):
        with workdps(40):
            z = branch_root(mpc(9), 2, 2, mpf("1e-30"))
            assert abs(z + 3) < 1e-30

    def test_snap_resolves_boundary_tie(self):
        # noise below the snap threshold must not flip the sector
        with workdps(40):
            noisy = mpc(9, mpf("1e-35"))
            assert abs(branch_root(noisy, 2, 2, mpf("1e-30")) + 3) < 1e-30
            noisy = mpc(9, mpf("-1e-35"))
            assert abs(branch_root(noisy, 2, 2, mpf("1e-30")) + 3) < 1e-30

    def test_sector_assignment_cubic(self):
        with workdps(40):
            roots = [branch_root(mpc(8), 3, i, mpf("1e-30")) for i in (1, 2, 3)]
        args = [float(mp.arg(r)) % (2 * 3.141592653589793) for r in roots]
        for i, a in enumerate(args):
            lo = 2 * 3.141592653589793 * i / 3
            assert lo - 1e-12 <= a < lo + 2 * 3.141592653589793 / 3

    def test_branch_index_validated(self):
        with pytest.raises(ValueError):
            branch_root(mpc(1), 2, 3, mpf("1e-30"))


class TestItineraryPoint:
    def test_fixed_point_positive_branch(self):
        res = itinerary_point(M6, (1,), radius=4.0)
        assert res.converged
        assert abs(complex(res.point) - 3.0) < 1e-12

    def test_fixed_point_negative_branch(self):
        res = itinerary_point(M6, (2,), radius=4.0)
        assert res.converged
        assert abs(complex(res.point) - (-2.0)) < 1e-12

    def test_genuine_period_two(self):
        # fixed points of f^2 besides 3, -2: roots of z^2 + z - 5
        res = itinerary_point(M6, (1, 2), radius=4.0)
        with workdps(40):
            expected = (-1 + mp.sqrt(21)) / 2
            assert abs(res.point - expected) < mpf("1e-30")
        swapped = itinerary_point(M6, (2, 1), radius=4.0)
        with workdps(40):
            expected = (-1 - mp.sqrt(21)) / 2
            assert abs(swapped.point - expected) < mpf("1e-30")

    def test_residual_tiny(self):
        res = itinerary_point(M6, (1, 2, 2), radius=4.0)
        assert res.converged
        assert res.residual < 1e-12

    def test_word_symbols_validated(self):
        with pytest.raises(ValueError):
            itinerary_point(M6, (0,), radius=4.0)
        with pytest.raises(ValueError):
            itinerary_point(M6, (3,), radius=4.0)
        with pytest.raises(ValueError):
            itinerary_point(M6, (), radius=4.0)

    def test_hypothesis_gate(self):
        with pytest.raises(ValueError, match="hypothesis"):
            itinerary_point(UnicriticalMap(2, -1 + 0j), (1,), radius=4.0)

    def test_contraction_after_burn_in(self):
        # successive cycle displacements shrink strictly once iteration settles
        with workdps(40):
            c = mpc(-6)
            z = mpc(0)
            displacements = []
            for _ in range(12):
                prev = z
                z = branch_root(z - c, 2, 1, mpf("1e-30"))
                displacements.append(abs(z - prev))
            for a, b in zip(displacements[1:], displacements[2:]):
                assert b < a

    def test_to_dict(self):
        d = itinerary_point(M6, (1, 2), radius=4.0).to_dict()
        assert d["word"] == [1, 2]
        assert d["converged"] is True


class TestCountPeriodic:
    def test_fixed_points(self):
        res = count_periodic(M6, 1, radius=4.0)
        assert res.count == 2
        pts = sorted(complex(p).real for p in res.points)
        assert pts == pytest.approx([-2.0, 3.0], abs=1e-12)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_counts_match_global_rootfinding(self, k):
        res = count_periodic(M6, k, radius=4.0)
        assert res.count == 2**k
        roots = np.roots(np.array(fk_minus_z_coeffs(k, -6), dtype=np.float64))
        computed = np.array([complex(p) for p in res.points])
        for r in roots:
            assert np.min(np.abs(computed - r)) < 1e-8

    def test_residuals_certified(self):
        res = count_periodic(M6, 5, radius=4.0)
        assert res.max_residual < 1e-12

    def test_points_stay_inside_disk(self):
        for k in (1, 3, 5):
            res = count_periodic(M6, k, radius=4.0)
            assert all(abs(complex(p)) < 4.0 for p in res.points)

    def test_word_point_bijection(self):
        res = count_periodic(M6, 6, radius=4.0)
        assert res.count == 64 == 2**6

    def test_k_validated(self):
        with pytest.raises(ValueError):
            count_periodic(M6, 0, radius=4.0)

    def test_nonconvergence_propagates(self):
        tight = ItineraryConfig(max_cycles=1)
        with pytest.raises(NonConvergenceError):
            count_periodic(M6, 1, radius=4.0, config=tight)

    def test_config_validated(self):
        with pytest.raises(ValueError):
            ItineraryConfig(dps=5)
        with pytest.raises(ValueError):
            ItineraryConfig(residual_tol=-1.0)

    def test_all_words_distinct_points(self):
        res = count_periodic(M6, 4, radius=4.0)
        pts = [complex(p) for p in res.points]
        for i, j in itertools.combinations(range(len(pts)), 2):
            assert abs(pts[i] - pts[j]) > 1e-8
