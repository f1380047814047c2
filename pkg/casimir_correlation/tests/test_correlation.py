# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import numpy as np

from casimir_box import bulk_density, total_density_cycles
from casimir_numerics.exceptions import DomainError

from ..correlation import (
    condensate_correlation,
    correlation_direct,
    correlation_profile,
    correlation_theta,
)
from .common import CorrelationCommonTestCase


class CorrelationTestCase(CorrelationCommonTestCase):
    def test_origin_is_density(self):
        for geom in self.geometries:
            with self.subTest(alpha=geom.alpha):
                box, tp = self._solved(geom, 2e3)
                sigma = correlation_theta(tp, box, (0.0, 0.0, 0.0)).value
                density = total_density_cycles(tp, box).value
                self.assertRelClose(sigma, density, rel=1e-12)

    def test_periodic_and_even(self):
        box, tp = self._solved(self.type_iii, 2e3)
        L = np.array(box.side_lengths)
        X = np.array([3.1, 0.7, 1.2])
        ref = correlation_theta(tp, box, X).value
        origin = correlation_theta(tp, box, np.zeros(3)).value
        self.assertRelClose(correlation_theta(tp, box, L).value, origin, rel=1e-12)
        self.assertRelClose(correlation_theta(tp, box, -X).value, ref, rel=1e-12)
        self.assertRelClose(correlation_theta(tp, box, X + L).value, ref, rel=1e-12)

    def test_theta_matches_mode_sum(self):
        rng = np.random.default_rng(7)
        for trial in range(30):
            geom = self.geometries[trial % 3]
            volume = (1e3, 2e3, 4e3)[(trial // 3) % 3]
            box, tp = self._solved(geom, volume)
            X = rng.uniform(0.0, 0.5, size=3) * np.array(box.side_lengths)
            with self.subTest(alpha=geom.alpha, V=volume, X=tuple(X)):
                theta = correlation_theta(tp, box, X)
                direct = correlation_direct(tp, box, X)
                slack = theta.tail_bound + direct.tail_bound + 1e-9 * tp.rho
                self.assertLessEqual(abs(theta.value - direct.value), slack)

    def test_monotone_on_half_period(self):
        for geom in self.geometries:
            box, tp = self._solved(geom, 4e3)
            for axis in range(3):
                with self.subTest(alpha=geom.alpha, axis=axis):
                    half = box.side_lengths[axis] / 2.0
                    points = np.zeros((21, 3))
                    points[:, axis] = np.linspace(0.0, half, 21)
                    profile = correlation_profile(tp, box, points)
                    self.assertTrue(np.all(np.diff(profile.values) <= 1e-13 * tp.rho))
                    self.assertTrue(np.all(profile.values > 0))
                    self.assertRelClose(profile.values[0], profile.density, rel=1e-12)

    def test_profile(self):
        box, tp = self._solved(self.type_i, 1e3)
        profile = correlation_profile(tp, box, [(0, 0, 0), (1.0, 0, 0), (0, 2.0, 0)])
        self.assertEqual(len(profile), 3)
        self.assertEqual(profile.normalised[0], 1.0)
        rows = list(profile)
        self.assertEqual(rows[1][0], (1.0, 0.0, 0.0))
        self.assertLess(profile.max_bound(), 1e-12)

    def test_condensate_part(self):
        box, tp = self._solved(self.type_iii, 4e3)
        got = condensate_correlation(tp, box, (0.0, 0.0, 0.0))
        expected = tp.rho - bulk_density(tp.beta_mu, 1.0).value
        self.assertRelClose(got, expected, rel=1e-12)
        self.assertGreater(got, self.rho0)
        far = condensate_correlation(tp, box, (box.side_lengths[0] / 4, 0.0, 0.0))
        self.assertGreater(far, 0.0)
        self.assertLess(far, got)

    def test_domain(self):
        box, tp = self._solved(self.type_i, 1e3)
        with self.assertRaises(DomainError):
            correlation_theta(tp, box, (1.0, 2.0))
        with self.assertRaises(DomainError):
            correlation_theta(tp, box, (1.0, float("nan"), 0.0))
