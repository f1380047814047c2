# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

import mpmath
import numpy as np

from ..exceptions import DomainError
from ..theta import _direct, _dual, theta3, theta3_tau
from .common import NumericsCommonTestCase


class ThetaTestCase(NumericsCommonTestCase):
    def test_origin_small_nome(self):
        self.assertRelClose(theta3(0, 0.5), 2.128936827211877, rel=1e-13)

    def test_zero_nome(self):
        self.assertEqual(theta3(1.234, 0.0), 1.0)

    def test_against_mpmath(self):
        for q in (1e-3, 0.04, 0.2, 0.5, 0.9):
            for u in (0.0, 0.3, 1.0, math.pi / 2, 2.5, -4.0):
                with self.subTest(q=q, u=u):
                    self.assertRelClose(theta3(u, q), self._mp_theta3(u, q), rel=1e-12)

    def test_both_branches_agree_at_switch(self):
        tau = np.array([math.pi * (1 - 1e-12), math.pi])
        values = theta3_tau(0.7, tau)
        self.assertRelClose(values[0], values[1], rel=1e-11)

    def test_branches_agree(self):
        u = np.array([0.0, 0.4, 1.0, math.pi / 2])
        for q in (0.1, 0.3, math.exp(-math.pi), 0.9, 0.99):
            tau = np.full(len(u), -math.log(q))
            direct, dual = _direct(u, tau), _dual(u, tau)
            self.assertRelClose(direct[0], dual[0], rel=1e-12)
            for k in range(len(u)):
                with self.subTest(q=q, u=u[k]):
                    oracle = self._mp_theta3(u[k], q)
                    self.assertRelClose(dual[k], oracle, rel=1e-12)
                    self.assertRelClose(theta3(u[k], q), oracle, rel=1e-12)
                    # the direct series cancels badly once q is large
                    if q <= math.exp(-math.pi) * (1 + 1e-12):
                        self.assertRelClose(direct[k], oracle, rel=1e-12)

    def test_close_to_unit_nome(self):
        q = 1.0 - 1e-6
        for u in (0.0, 5e-4, 1.5e-3, math.pi - 1e-3):
            with self.subTest(u=u):
                self.assertRelClose(theta3(u, q), self._mp_theta3(u, q), rel=1e-12)

    def test_at_largest_nome(self):
        # mpmath refuses q this close to 1, sum the direct series instead
        tau = 1e-9
        q = math.exp(-tau)
        n_max = int(math.sqrt(46.0 / tau)) + 1
        for u in (0.0, 1e-5, 3e-5):
            with self.subTest(u=u):
                with mpmath.workdps(25):
                    t, x = -mpmath.log(mpmath.mpf(q)), mpmath.mpf(u)
                    oracle = 1 + 2 * mpmath.fsum(
                        mpmath.exp(-t * n * n) * mpmath.cos(2 * n * x)
                        for n in range(1, n_max)
                    )
                self.assertRelClose(theta3(u, q), float(oracle), rel=1e-12)

    def test_periodic_and_even(self):
        for u in (0.1, 0.9, 2.0):
            self.assertRelClose(theta3(u + math.pi, 0.3), theta3(u, 0.3), rel=1e-13)
            self.assertRelClose(theta3(-u, 0.3), theta3(u, 0.3), rel=1e-13)

    def test_positive_near_unit_nome(self):
        # theta_3(pi/2, q) = theta_4(0, q) is tiny but positive
        value = theta3(math.pi / 2, 0.9)
        self.assertGreater(value, 0.0)
        self.assertRelClose(value, self._mp_theta3(math.pi / 2, 0.9), rel=1e-9)

    def test_vectorised(self):
        tau = np.array([0.01, 1.0, 10.0])
        values = theta3_tau(np.zeros(3), tau)
        for t, v in zip(tau, values):
            self.assertRelClose(v, self._mp_theta3(0.0, math.exp(-t)), rel=1e-12)

    def test_domain(self):
        with self.assertRaises(DomainError):
            theta3(0.0, 1.0)
        with self.assertRaises(DomainError):
            theta3(0.0, -0.2)
        with self.assertRaises(DomainError):
            theta3_tau(0.0, 0.0)
