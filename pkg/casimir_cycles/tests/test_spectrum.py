# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from casimir_box import (
    ThermoPoint,
    bulk_cycle_density,
    mode_density,
    mode_energy_beta,
    total_density_cycles,
)
from casimir_numerics.exceptions import CostModelWarning, DomainError

from ..spectrum import cycle_density, cycle_spectrum, mode_cycle_densities
from .common import CyclesCommonTestCase


class CycleDensityTestCase(CyclesCommonTestCase):
    def test_continuum_limit(self):
        box = self.cube.at_volume(1e6)
        tp = ThermoPoint(lam=1.0, rho=None, beta_mu=-1e-3, V=box.V)
        for j in (1, 2, 5):
            with self.subTest(j=j):
                self.assertRelClose(
                    cycle_density(tp, box, j),
                    bulk_cycle_density(-1e-3, 1.0, j),
                    rel=1e-9,
                )

    def test_positive_and_decreasing(self):
        box, tp = self._solved(self.type_iii, 1e4)
        values = [cycle_density(tp, box, j) for j in (1, 10, 100, 1000, 10**5, 10**6)]
        self.assertTrue(all(v > 0 for v in values))
        self.assertEqual(values, sorted(values, reverse=True))

    def test_domain(self):
        box, tp = self._solved(self.cube, 1e3)
        with self.assertRaises(DomainError):
            cycle_density(tp, box, 0)
        with self.assertRaises(DomainError):
            cycle_density(tp, self.cube.at_volume(2e3), 1)


class CycleSpectrumTestCase(CyclesCommonTestCase):
    def test_partition(self):
        for geom in (self.type_i, self.type_ii, self.type_iii):
            with self.subTest(alpha=geom.alpha):
                box, tp = self._solved(geom, 4e3)
                spectrum = cycle_spectrum(tp, box)
                expected = total_density_cycles(tp, box).value
                self.assertRelClose(spectrum.total, expected, rel=1e-12)
                self.assertLess(spectrum.tail, 1e-10 * expected)

    def test_explicit_j_max(self):
        box, tp = self._solved(self.type_i, 1e3)
        spectrum = cycle_spectrum(tp, box, j_max=100)
        self.assertEqual(len(spectrum), 100)
        self.assertRelClose(spectrum.density(7), cycle_density(tp, box, 7), rel=1e-14)
        total = total_density_cycles(tp, box).value
        self.assertRelClose(spectrum.total, total, rel=1e-12)
        with self.assertRaises(DomainError):
            spectrum.density(101)

    def test_cost_model(self):
        box, tp = self._solved(self.type_iii, 1e5)
        with self.assertLogs("casimir_cycles.spectrum", level="WARNING"):
            with self.assertWarns(CostModelWarning):
                spectrum = cycle_spectrum(tp, box, j_max=10**7, max_cost=100)
        self.assertEqual(len(spectrum), 100)
        # the closed tail keeps the partition exact
        self.assertRelClose(
            spectrum.total, total_density_cycles(tp, box).value, rel=1e-12
        )

    def test_mode_cycles_sum_to_occupation(self):
        box, tp = self._solved(self.type_ii, 1e4)
        for n in ((0, 0, 0), (1, 0, 0), (2, 1, 0)):
            with self.subTest(n=n):
                J = 5000
                cycles = mode_cycle_densities(tp, box, n, J)
                gap = mode_energy_beta(box, 1.0, n) - tp.beta_mu
                tail = math.exp(-(J + 1) * gap) / -math.expm1(-gap) / box.V
                self.assertRelClose(
                    cycles.sum() + tail, mode_density(tp, box, n), rel=1e-13
                )
