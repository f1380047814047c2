# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
import unittest

import mpmath


class NumericsTestMixin(object):
    @classmethod
    def _setup_precision(cls, dps=30):
        cls._saved_dps = mpmath.mp.dps
        mpmath.mp.dps = dps

    @classmethod
    def _restore_precision(cls):
        mpmath.mp.dps = cls._saved_dps

    @staticmethod
    def _mp_polylog(s, z):
        return float(mpmath.polylog(s, z))

    @staticmethod
    def _mp_theta3(u, q):
        return float(mpmath.jtheta(3, u, q))

    @staticmethod
    def _mp_lorentz(B, lam):
        """Independent direct summation of sum_n 1 / (B + pi lam^2 n^2)."""
        B = mpmath.mpf(B)
        lam = mpmath.mpf(lam)
        tail = mpmath.nsum(
            lambda n: 1 / (B + mpmath.pi * lam**2 * n**2), [1, mpmath.inf]
        )
        return float(1 / B + 2 * tail)

    def assertRelClose(self, a, b, rel=1e-12, abs_=0.0, msg=None):
        tol = max(abs_, rel * max(abs(a), abs(b)))
        if not math.isclose(a, b, rel_tol=0.0, abs_tol=tol):
            self.fail(msg or "%r != %r within rel=%g abs=%g" % (a, b, rel, abs_))


class NumericsCommonTestCase(unittest.TestCase, NumericsTestMixin):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls._setup_precision()

    @classmethod
    def tearDownClass(cls):
        cls._restore_precision()
        super().tearDownClass()
