# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

import numpy as np

from casimir_box import bulk_correlation
from casimir_condensate import critical_density
from casimir_numerics import lattice_lorentz_cosine_sum
from casimir_numerics.exceptions import DomainError, PathViolationError

from ..models.separation_path import SeparationPath
from ..odlro import odlro_profile, path_limit
from .common import CorrelationCommonTestCase


class SeparationPathTestCase(CorrelationCommonTestCase):
    def test_along(self):
        path = SeparationPath.along(0, 0.5, 0.4)
        self.assertEqual(path.coefficients, (0.5, 0.0, 0.0))
        self.assertEqual(path.exponents, (0.4, 0.0, 0.0))
        np.testing.assert_allclose(path.at(1e5), [0.5 * 1e2, 0.0, 0.0], rtol=1e-12)

    def test_fraction_is_valid_up_to_half(self):
        path = SeparationPath.fraction(self.type_i, (0.5, 0.5, 0.5))
        path.validate(self.type_i, self.volumes)
        with self.assertRaises(PathViolationError):
            SeparationPath.fraction(self.type_i, (0.5, 0.51, 0.0)).validate(
                self.type_i, self.volumes
            )

    def test_rejects_beyond_half_period(self):
        path = SeparationPath.along(0, 0.6, 0.4)
        with self.assertRaises(PathViolationError) as err:
            path.validate(self.type_i, self.volumes)
        self.assertIn("axis 1", str(err.exception))
        self.assertIsInstance(err.exception, DomainError)
        # nothing is evaluated for a rejected path
        with self.assertRaises(PathViolationError):
            odlro_profile(self.type_i, 1.0, self.rho, path, self.volumes)

    def test_type_iii_growth_faster_than_side(self):
        # V^0.5 exceeds L1 / 2 = V^0.6 / 2 below V = 1024
        path = SeparationPath.along(0, 1.0, 0.5)
        with self.assertRaises(PathViolationError):
            path.validate(self.type_iii, self.volumes)
        path.validate(self.type_iii, self.volumes[1:])

    def test_negative_coefficient(self):
        with self.assertRaises(DomainError):
            SeparationPath((-1.0, 0.0, 0.0))


class PathLimitTestCase(CorrelationCommonTestCase):
    def test_fixed_separation_keeps_bulk(self):
        path = SeparationPath((1.0, 0.0, 0.0))
        expected = bulk_correlation(0.0, 1.0, 1.0).value + self.rho0
        self.assertRelClose(
            path_limit(self.type_i, 1.0, self.rho, path), expected, rel=1e-9
        )

    def test_diverging_path_below_critical(self):
        path = SeparationPath.along(0, 0.5, 0.4)
        self.assertEqual(path_limit(self.type_i, 1.0, 2.0, path), 0.0)

    def test_regimes(self):
        cases = (
            (self.type_i, SeparationPath.along(0, 0.5, 0.4), self.rho0),
            (self.type_iii, SeparationPath.along(0, 1.0, 0.4), math.exp(-2 * math.pi)),
            (self.type_iii, SeparationPath.along(0, 1.0, 0.3), self.rho0),
            (self.type_iii, SeparationPath.along(0, 1.0, 0.5), 0.0),
            (self.type_iii, SeparationPath.along(1, 0.5, 0.2), self.rho0),
        )
        for geom, path, expected in cases:
            with self.subTest(alpha=geom.alpha, path=path.label()):
                self.assertRelClose(
                    path_limit(geom, 1.0, self.rho, path), expected, rel=1e-9
                )

    def test_type_ii_quarter_side(self):
        path = SeparationPath.along(0, 0.25, 0.5)
        got = path_limit(self.type_ii, 1.0, self.rho, path)
        self.assertGreater(got, 0.0)
        self.assertLess(got, self.rho0)


class OdlroProfileTestCase(CorrelationCommonTestCase):
    def test_type_i_keeps_condensate(self):
        path = SeparationPath.along(0, 0.5, 0.4)
        series = odlro_profile(self.type_i, 1.0, self.rho, path, self.wide_volumes)
        self.assertTrue(series.converged)
        self.assertEqual(series.annotations["analytic_limit"], self.rho0)
        self.assertAlmostEqual(
            series.extrapolated_limit, self.rho0, delta=0.01 * self.rho0
        )

    def test_type_ii_quarter_side(self):
        path = SeparationPath.along(0, 0.25, 0.5)
        series = odlro_profile(self.type_ii, 1.0, self.rho, path, self.wide_volumes)
        expected = series.annotations["analytic_limit"]
        self.assertAlmostEqual(
            series.extrapolated_limit, expected, delta=0.02 * expected
        )

    def test_type_iii_coherence_scale(self):
        path = SeparationPath.along(0, 1.0, 0.4)
        series = odlro_profile(self.type_iii, 1.0, self.rho, path, self.wide_volumes)
        expected = math.exp(-2 * math.pi)
        self.assertRelClose(series.annotations["analytic_limit"], expected, rel=1e-9)
        self.assertAlmostEqual(
            series.extrapolated_limit, expected, delta=0.05 * expected
        )

    def test_type_iii_beyond_coherence_scale(self):
        path = SeparationPath.along(0, 1.0, 0.5)
        series = odlro_profile(self.type_iii, 1.0, self.rho, path, self.volumes[1:])
        self.assertEqual(series.annotations["analytic_limit"], 0.0)
        self.assertLess(series.values[-1], 1e-4)

    def test_below_critical_decays(self):
        rho = 0.8 * critical_density(1.0)
        series = odlro_profile(
            self.type_i, 1.0, rho, SeparationPath.along(0, 0.5, 0.4), self.volumes
        )
        self.assertEqual(series.annotations["analytic_limit"], 0.0)
        self.assertLess(series.values[-1], 1e-3)
        self.assertLess(series.values[-1], series.values[0])

    def test_never_above_condensate_density(self):
        paths = (
            (self.type_i, SeparationPath.along(0, 0.5, 0.4)),
            (self.type_ii, SeparationPath.along(0, 0.25, 0.5)),
            (self.type_iii, SeparationPath.along(0, 1.0, 0.4)),
            (self.type_iii, SeparationPath.along(1, 0.5, 0.2)),
        )
        for geom, path in paths:
            for rho in (self.rho, 0.8 * critical_density(1.0)):
                with self.subTest(alpha=geom.alpha, path=path.label(), rho=rho):
                    series = odlro_profile(geom, 1.0, rho, path, self.volumes)
                    sigma = max(rho - critical_density(1.0), 0.0)
                    self.assertGreaterEqual(series.extrapolated_limit, -1e-3)
                    self.assertLessEqual(series.extrapolated_limit, sigma + 1e-3)
