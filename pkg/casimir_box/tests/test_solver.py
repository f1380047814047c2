# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
from casimir_numerics.exceptions import DomainError

from ..bulk import bulk_chemical_potential
from ..density import total_density_cycles
from ..solver import solve_chemical_potential
from ..sweeps import chemical_potential_series
from .common import ZETA_3_2, BoxCommonTestCase


class SolverTestCase(BoxCommonTestCase):
    def test_residual(self):
        for geom in self.geometries:
            for rho in (0.5, ZETA_3_2, ZETA_3_2 + 1.0):
                with self.subTest(alpha=geom.alpha, rho=rho):
                    tp = solve_chemical_potential(geom, 1.0, rho)
                    self.assertLess(tp.beta_mu, 0.0)
                    self.assertEqual(tp.rho, rho)
                    got = total_density_cycles(tp, geom).value
                    self.assertRelClose(got, rho, rel=1e-10)

    def test_condensed_beta_mu_vanishes(self):
        values = [
            -solve_chemical_potential(
                self.type_i.at_volume(v), 1.0, ZETA_3_2 + 1.0
            ).beta_mu
            for v in (1e3, 1e4, 1e5)
        ]
        self.assertEqual(values, sorted(values, reverse=True))
        self.assertLess(values[-1], 1e-3)

    def test_dilute_gas_reaches_bulk_root(self):
        rho = 2.0
        tp = solve_chemical_potential(self.cube.at_volume(1e5), 1.0, rho)
        self.assertAlmostEqual(tp.beta_mu, bulk_chemical_potential(1.0, rho), places=9)

    def test_lambda_scaling(self):
        # only rho lambda^3 matters in the bulk
        tp1 = solve_chemical_potential(self.cube.at_volume(1e5), 1.0, 1.0)
        tp2 = solve_chemical_potential(self.cube.at_volume(1e5 * 8.0), 2.0, 1.0 / 8.0)
        self.assertAlmostEqual(tp1.beta_mu, tp2.beta_mu, places=9)

    def test_series(self):
        series = chemical_potential_series(
            self.type_i, 1.0, ZETA_3_2 - 1.0, (1e3, 2e3, 4e3, 8e3, 1.6e4)
        )
        self.assertTrue(series.converged)
        self.assertAlmostEqual(
            -series.extrapolated_limit,
            bulk_chemical_potential(1.0, ZETA_3_2 - 1.0),
            places=5,
        )

    def test_domain(self):
        with self.assertRaises(DomainError):
            solve_chemical_potential(self.cube, 1.0, 0.0)
        with self.assertRaises(DomainError):
            solve_chemical_potential(self.cube, -1.0, 1.0)
