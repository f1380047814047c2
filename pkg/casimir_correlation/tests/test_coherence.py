# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from casimir_numerics.exceptions import DomainError

from ..models.coherence_report import CoherenceKind
from ..odlro import coherence_length, coherence_point
from .common import CorrelationCommonTestCase


class CoherenceTestCase(CorrelationCommonTestCase):
    def test_type_i_macroscopic(self):
        report = coherence_length(self.type_i, 1.0, self.rho, self.volumes)
        self.assertEqual(report.kinds, (CoherenceKind.MACROSCOPIC,) * 3)
        self.assertTrue(report.conclusive)
        self.assertEqual([a.exponent for a in report.axes], [0.4, 0.3, 0.3])
        self.assertGreater(report[0].half_period_limit, 0.9 * self.rho0)

    def test_type_iii_first_axis_microscopic(self):
        report = coherence_length(self.type_iii, 1.0, self.rho, self.volumes)
        first = report[0]
        self.assertEqual(first.kind, CoherenceKind.MICROSCOPIC)
        self.assertAlmostEqual(first.expected, 0.4, places=12)
        self.assertAlmostEqual(first.exponent, 0.4, delta=0.06)
        self.assertEqual(len(first.evidence["coherence_lengths"]), len(self.volumes))
        self.assertEqual(report[1].kind, CoherenceKind.MACROSCOPIC)
        self.assertEqual(report[2].kind, CoherenceKind.MACROSCOPIC)
        data = report.as_dict()
        self.assertEqual(data["axes"][0]["kind"], "microscopic")

    def test_coherence_point(self):
        small = coherence_point(self.type_iii, 1.0, self.rho, 1e3, 0)
        large = coherence_point(self.type_iii, 1.0, self.rho, 1.6e4, 0)
        self.assertGreater(small, 0.0)
        self.assertGreater(large, small)
        self.assertLess(large, self.type_iii.at_volume(1.6e4).side_lengths[0] / 2)
        # the condensate spreads over the whole box
        self.assertIsNone(coherence_point(self.type_i, 1.0, self.rho, 1e3, 0))

    def test_domain(self):
        with self.assertRaises(DomainError):
            coherence_length(self.type_i, 1.0, 2.0, self.volumes)
        with self.assertRaises(DomainError):
            coherence_length(self.type_i, 1.0, self.rho, self.volumes[:3])
