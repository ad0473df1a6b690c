"""
Tests for the closed formulas and explicit bounds.
"""
import math

import pytest
from mpmath import mp, mpf
from sympy import primerange

from src import config
from src.group_core.abelian import AbelianType
from src.theory_checks.formulas import (
    BoundReport,
    aut_order_upper_bound,
    check_rosser_schoenfeld,
    chebyshev_theta,
    gm_commutator_bound,
    hillar_rhea_aut_order,
    hr_lower_bound,
    log_A,
    log_aut_order_upper_bound,
    prime_sieve,
    maol_order_bound,
    theta_ratio_maximum,
)


class TestAbelianAutomorphismCounts:

    @pytest.mark.parametrize("prime, exponents, expected", [
        (2, [1], 1),
        (5, [1], 4),
        (2, [3], 4),
        (2, [1, 1], 6),
        (2, [1, 2], 8),
        (3, [1, 1], 48),
        (2, [2, 2], 96),
        (2, [1, 1, 1], 168),
    ])
    def test_hillar_rhea(self, prime, exponents, expected):
        """Test |Aut| of abelian p-groups."""
        assert hillar_rhea_aut_order(AbelianType(prime, exponents)) == expected

    def test_lower_bound(self):
        """Test the lower bound on |Aut| of abelian p-groups."""
        assert hr_lower_bound(AbelianType(2, [3])) == 4
        assert hr_lower_bound(AbelianType(7, [1])) == 6
        assert hr_lower_bound(AbelianType(2, [1, 2])) <= hillar_rhea_aut_order(AbelianType(2, [1, 2]))

    def test_lower_bound_needs_nontrivial_group(self):
        """Test that the trivial group is rejected."""
        with pytest.raises(ValueError):
            hr_lower_bound(AbelianType(2, []))


class TestPrimes:

    def test_sieve(self):
        """Test the prime sieve."""
        assert prime_sieve(10).tolist() == [2, 3, 5, 7]
        assert prime_sieve(1).tolist() == []
        assert len(prime_sieve(1000)) == 168

    def test_sieve_limit(self):
        """Test the sieve limit."""
        with pytest.raises(ValueError):
            prime_sieve(200, sieve_limit=100)

    def test_theta_of_ten(self):
        """Test theta(10) = log(210)."""
        with mp.workdps(50):
            assert abs(chebyshev_theta(10) - mp.log(210)) < mpf("1e-12")
        assert chebyshev_theta(1) == 0

    def test_ratio_maximum(self):
        """theta(p) / p peaks below 1 at p = 59797 up to 10^5."""
        ratio, prime = theta_ratio_maximum(10 ** 5)
        assert prime == 59797
        assert 0.9981 < ratio < 0.9982

    def test_ratio_maximum_matches_primerange(self):
        """The sieve-based maximum agrees with an independent sum over sympy primes."""
        theta, best = 0.0, (0.0, 0)
        for p in primerange(2, 2001):
            theta += math.log(p)
            best = max(best, (theta / p, p))
        ratio, prime = theta_ratio_maximum(2000)
        assert prime == best[1]
        assert ratio == pytest.approx(best[0], rel=1e-12)

    def test_rosser_schoenfeld(self):
        """The bound holds up to 10^5 and a constant below the true maximum is rejected."""
        assert check_rosser_schoenfeld(10 ** 5)
        assert check_rosser_schoenfeld(10 ** 5, constant="1.0")
        assert not check_rosser_schoenfeld(10 ** 5, constant="0.99")

    def test_rosser_schoenfeld_ratio_exceeds_constant(self):
        """theta(3) / 3 = log(6) / 3 is about 0.597, so a constant of one half fails at x = 3."""
        assert not check_rosser_schoenfeld(3, constant="0.5")
        assert check_rosser_schoenfeld(3, constant="0.6")

    @pytest.mark.slow
    def test_rosser_schoenfeld_to_ten_million(self):
        """Test the bound up to 10^7."""
        assert check_rosser_schoenfeld(10 ** 7)


class TestBounds:

    def test_commutator_bound(self):
        """Test the commutator subgroup bound."""
        assert gm_commutator_bound(1) == 1
        assert gm_commutator_bound(2) > 2 ** 3.5
        with pytest.raises(ValueError):
            gm_commutator_bound(0)

    def test_aut_order_bound(self):
        """Test the automorphism order bound."""
        assert abs(aut_order_upper_bound(2) - 2) < mpf("1e-30")
        assert abs(aut_order_upper_bound(4) - 16) < mpf("1e-30")
        assert log_aut_order_upper_bound(1) == 0
        with pytest.raises(ValueError):
            aut_order_upper_bound(0)

    def test_base_case(self):
        """c = d = 1 gives 1.01624 * 2 exactly at working precision."""
        report = maol_order_bound(1, 1)
        with mp.workdps(config.MP_DPS):
            assert abs(report.log_order_bound - mpf("2.03248")) < mpf("1e-30")
        assert report.A == 1
        assert report.admits(7)
        assert not report.admits(8)

    def test_log_A_vanishes_for_c_one(self):
        """Test that log A is 0 when c = 1."""
        assert log_A(1, 1) == 0
        assert log_A(1, 5) == 0

    def test_large_A_has_no_integer(self):
        """Test that a huge A is reported as None."""
        report = maol_order_bound(24, 3)
        assert report.A is None
        assert report.admits(60)

    def test_monotone_in_c(self):
        """Test that the bound grows strictly with c."""
        values = [maol_order_bound(c, 2).log_order_bound for c in range(1, 6)]
        assert values == sorted(values)
        assert len(set(values)) == len(values)

    def test_invalid_parameters(self):
        """Test that nonpositive parameters are rejected."""
        with pytest.raises(ValueError):
            maol_order_bound(0, 1)
        with pytest.raises(ValueError):
            maol_order_bound(1, 0)

    def test_report_dict(self):
        """Test serialising a bound report."""
        data = maol_order_bound(2, 1).to_dict()
        assert set(data) == {"c", "d", "log_A", "log_order_bound", "A"}
        assert isinstance(maol_order_bound(2, 1), BoundReport)
