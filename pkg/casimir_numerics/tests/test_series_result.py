# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import unittest

from ..exceptions import DomainError
from ..models.series_result import SeriesResult, SeriesTolerance


class SeriesResultTestCase(unittest.TestCase):
    def test_add(self):
        total = SeriesResult(1.0, 1e-10, 5) + SeriesResult(2.0, 2e-10, 3)
        self.assertEqual(total.value, 3.0)
        self.assertAlmostEqual(total.tail_bound, 3e-10, places=20)
        self.assertEqual(total.terms_used, 8)
        self.assertEqual(float(total), 3.0)

    def test_scaled(self):
        res = SeriesResult(2.0, 1e-3, 1).scaled(-2)
        self.assertEqual(res.value, -4.0)
        self.assertEqual(res.tail_bound, 2e-3)

    def test_invariants(self):
        with self.assertRaises(DomainError):
            SeriesResult(1.0, -1.0, 1)
        with self.assertRaises(DomainError):
            SeriesResult(1.0, 0.0, 0)
        with self.assertRaises(DomainError):
            SeriesTolerance(abs_tol=0.0, rel_tol=0.0)

    def test_tolerance_reached(self):
        tol = SeriesTolerance(abs_tol=1e-10, rel_tol=1e-6)
        self.assertTrue(tol.reached(1e-7, 1.0))
        self.assertFalse(tol.reached(1e-5, 1.0))
        self.assertTrue(tol.reached(1e-11, 0.0))
