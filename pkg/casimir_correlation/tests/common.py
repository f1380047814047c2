# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
import unittest

from casimir_box import BoxGeometry, solve_chemical_potential
from casimir_scaling import volume_sequence

ZETA_3_2 = 2.612375348685488


class CorrelationTestMixin(object):
    @classmethod
    def _setup_geometries(cls):
        cls.type_i = BoxGeometry((0.4, 0.3, 0.3), 1e3)
        cls.type_ii = BoxGeometry((0.5, 0.25, 0.25), 1e3)
        cls.type_iii = BoxGeometry((0.6, 0.2, 0.2), 1e3)
        cls.geometries = (cls.type_i, cls.type_ii, cls.type_iii)
        cls.rho0 = 1.0
        cls.rho = ZETA_3_2 + cls.rho0

    @classmethod
    def _setup_volumes(cls, k_max=8):
        cls.volumes = volume_sequence(1e3, k_max)
        cls.wide_volumes = volume_sequence(1e3, 10)

    def _solved(self, geom, volume, rho=None):
        box = geom.at_volume(volume)
        return box, solve_chemical_potential(box, 1.0, rho or self.rho)

    def assertRelClose(self, a, b, rel=1e-12, abs_=0.0, msg=None):
        tol = max(abs_, rel * max(abs(a), abs(b)))
        if not math.isclose(a, b, rel_tol=0.0, abs_tol=tol):
            self.fail(msg or "%r != %r within rel=%g abs=%g" % (a, b, rel, abs_))


class CorrelationCommonTestCase(unittest.TestCase, CorrelationTestMixin):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls._setup_geometries()
        cls._setup_volumes()
