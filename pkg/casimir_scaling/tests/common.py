# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import unittest

from ..models.scaling_series import ScalingSettings
from ..sweep import volume_sequence


class ScalingTestMixin(object):
    @classmethod
    def _setup_volumes(cls):
        cls.volumes = volume_sequence(1e2, 9)
        cls.settings = ScalingSettings()

    @staticmethod
    def _power_law(limit, amplitude, exponent):
        def observable(volume):
            return limit + amplitude * volume**-exponent

        return observable


class ScalingCommonTestCase(unittest.TestCase, ScalingTestMixin):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls._setup_volumes()
