# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from casimir_box import BoxGeometry
from casimir_numerics.exceptions import DomainError

from ..fragmentation import fragmentation_report
from ..models.reports import FragmentationReport
from .common import ZETA_3_2, CondensateCommonTestCase


class FragmentationTestCase(CondensateCommonTestCase):
    def _check_invariants(self, report):
        self.assertGreaterEqual(report.M, 0)
        self.assertLessEqual(sum(report.occupations), report.N0 * (1 + 1e-9))
        self.assertEqual(
            list(report.occupations), sorted(report.occupations, reverse=True)
        )

    def test_type_i_single_mode(self):
        report = fragmentation_report(self.type_i, 1.0, self.rho, 1e5)
        self._check_invariants(report)
        self.assertEqual(report.participation, 1)
        self.assertEqual(tuple(report.top_modes[0][0]), (0, 0, 0))
        self.assertGreater(report.fraction, 0.7)

    def test_type_i_one_macroscopic_mode(self):
        V = 1e6
        report = fragmentation_report(self.type_i, 1.0, self.rho, V, threshold=0.01)
        self._check_invariants(report)
        self.assertEqual(report.M, 1)
        self.assertEqual(tuple(report.top_modes[0][0]), (0, 0, 0))
        self.assertAlmostEqual(report.N0, self.rho0 * V, delta=0.3 * self.rho0 * V)
        self.assertLessEqual(report.N0, self.rho * V)

    def test_type_ii_finite(self):
        small = fragmentation_report(self.type_ii, 1.0, self.rho, 1e4)
        large = fragmentation_report(self.type_ii, 1.0, self.rho, 1e6)
        self._check_invariants(large)
        self.assertLessEqual(large.participation, 5)
        self.assertLessEqual(abs(large.participation - small.participation), 2)
        self.assertGreaterEqual(large.M, 3)
        self.assertLessEqual(large.M, 20)
        for index, _number in large.top_modes[:3]:
            self.assertEqual((index.n2, index.n3), (0, 0))

    def test_type_iii_spreads(self):
        small = fragmentation_report(self.type_iii, 1.0, self.rho, 1e4)
        large = fragmentation_report(self.type_iii, 1.0, self.rho, 1e6)
        self._check_invariants(large)
        self.assertGreater(small.participation, 10)
        self.assertGreater(large.participation, 2 * small.participation)
        self.assertLessEqual(len(large.occupations), 50)

    def test_type_iii_top_mode_growth(self):
        geom = BoxGeometry((0.6, 0.2, 0.2), 1e3)
        small = fragmentation_report(geom, 1.0, self.rho, 1e4)
        large = fragmentation_report(geom, 1.0, self.rho, 1e6)
        slope = math.log(large.occupations[0] / small.occupations[0]) / math.log(100)
        self.assertAlmostEqual(slope, 0.8, delta=0.05)
        # the top mode holds a vanishing fraction of the particles
        self.assertLess(
            large.occupations[0] / (self.rho * 1e6),
            small.occupations[0] / (self.rho * 1e4),
        )

    def test_no_condensate(self):
        report = fragmentation_report(self.type_i, 1.0, ZETA_3_2 / 2, 1e4)
        self.assertEqual(report.M, 0)
        self.assertEqual(report.N0, 0.0)
        self.assertEqual(report.occupations, ())
        self.assertEqual(report.fraction, 0.0)
        self.assertLess(report.beta_mu, 0.0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            fragmentation_report(self.type_i, 1.0, self.rho, 1e4, quantile=0.0)
        with self.assertRaises(DomainError):
            fragmentation_report(self.type_i, 1.0, self.rho, 1e4, threshold=1.5)
        with self.assertRaises(DomainError):
            FragmentationReport(
                V=1.0,
                beta_mu=-1.0,
                rho0=1.0,
                N0=1.0,
                M=0,
                threshold=1e-3,
                occupations=(2.0,),
            )
        with self.assertRaises(DomainError):
            FragmentationReport(
                V=1.0, beta_mu=-1.0, rho0=1.0, N0=1.0, M=-1, threshold=1e-3
            )
