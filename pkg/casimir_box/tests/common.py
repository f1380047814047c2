# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math
import unittest

from casimir_numerics import polylog

from ..models.box_geometry import BoxGeometry
from ..models.thermo_point import ThermoPoint

ZETA_3_2 = 2.612375348685488


class BoxTestMixin(object):
    @classmethod
    def _setup_geometries(cls, V=1000.0):
        cls.cube = BoxGeometry((1 / 3, 1 / 3, 1 / 3), V)
        cls.type_i = BoxGeometry((0.4, 0.3, 0.3), V)
        cls.type_ii = BoxGeometry((0.5, 0.25, 0.25), V)
        cls.type_iii = BoxGeometry((0.6, 0.2, 0.2), V)
        cls.geometries = (cls.cube, cls.type_i, cls.type_ii, cls.type_iii)

    @staticmethod
    def _point(geom, beta_mu, lam=1.0):
        return ThermoPoint(lam=lam, rho=None, beta_mu=beta_mu, V=geom.V)

    @staticmethod
    def _bulk(beta_mu, s=1.5):
        return polylog(s, math.exp(beta_mu)).value

    def assertRelClose(self, a, b, rel=1e-12, abs_=0.0, msg=None):
        tol = max(abs_, rel * max(abs(a), abs(b)))
        if not math.isclose(a, b, rel_tol=0.0, abs_tol=tol):
            self.fail(msg or "%r != %r within rel=%g abs=%g" % (a, b, rel, abs_))


class BoxCommonTestCase(unittest.TestCase, BoxTestMixin):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls._setup_geometries()
