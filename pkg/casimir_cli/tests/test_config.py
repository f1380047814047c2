# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import math

from casimir_condensate import critical_density

from ..config import ConfigReader, load_config, parse_config
from ..exceptions import ConfigError
from .common import CliCommonTestCase

CONFIG = """{
  "alpha": [0.4, 0.3, 0.3],
  "lambda": 1.0,
  "rho_offset": 1.0,
  "volumes": [1e3, 2e3, 4e3, 8e3, 1.6e4],
  "classify": {"fraction_tol": 0.2},
  "cycles": {
    "windows": [{"x": 0.5, "y": "inf"}],
    "hierarchy": {"quantile": 0.5}
  },
  "correlate": {
    "paths": [
      {"fractions": [0.5, 0.0, 0.0]},
      {"axis": 2, "x": 0.25, "s": 0.3},
      {"coefficients": [1.0, 0.0, 0.0]}
    ],
    "coherence": true
  }
}
"""


class ConfigTestCase(CliCommonTestCase):
    def _parse(self, text):
        return parse_config(ConfigReader.from_text(text, source="exp.json"))

    def _error(self, text):
        with self.assertRaises(ConfigError) as err:
            self._parse(text)
        return err.exception

    def test_parse(self):
        config = self._parse(CONFIG)
        self.assertEqual(config.alpha, (0.4, 0.3, 0.3))
        self.assertEqual(config.volumes, (1e3, 2e3, 4e3, 8e3, 1.6e4))
        self.assertRelClose(config.rho, critical_density(1.0) + 1.0)
        self.assertRelClose(config.rho0, 1.0, rel=1e-14)
        self.assertEqual(config.classify.fraction_tol, 0.2)
        self.assertEqual(config.classify.separation, 0.1)
        self.assertTrue(math.isinf(config.windows[0].y))
        self.assertEqual(config.hierarchy.quantile, 0.5)
        self.assertEqual(config.paths[0].exponents, (0.4, 0.3, 0.3))
        self.assertEqual(config.paths[1].coefficients, (0.0, 0.25, 0.0))
        self.assertEqual(config.paths[2].exponents, (0.0, 0.0, 0.0))
        self.assertIsNotNone(config.coherence)
        self.assertIsNone(config.delta)
        self.assertEqual(config.out, "out")

    def test_volume_sequence(self):
        config = self._config(volumes={"v0": "1e3", "k_max": "5"})
        self.assertEqual(len(config.volumes), 6)
        self.assertEqual(config.volumes[-1], 3.2e4)

    def test_alpha_error_has_line(self):
        err = self._error(CONFIG.replace("[0.4, 0.3, 0.3]", "[0.5, 0.3, 0.3]"))
        self.assertEqual(err.line, 2)
        self.assertTrue(str(err).startswith("exp.json:2: "))
        self.assertIn("sum to 1", str(err))

    def test_nested_error_has_line(self):
        err = self._error(CONFIG.replace('"y": "inf"', '"y": 0.1'))
        self.assertEqual(err.line, 8)
        err = self._error(CONFIG.replace('"axis": 2', '"axis": 4'))
        self.assertEqual(err.line, 14)
        err = self._error(CONFIG.replace('"fraction_tol"', '"fraction_tolerance"'))
        self.assertEqual(err.line, 6)
        self.assertIn("unknown setting", str(err))

    def test_density(self):
        with self.assertRaises(ConfigError):
            self._config(rho="1.0")
        config = self._config(rho_offset=None, rho="1.3")
        self.assertEqual(config.rho, 1.3)
        self.assertLess(config.rho0, 0.0)
        with self.assertRaises(ConfigError):
            self._config(rho_offset=None)
        with self.assertRaises(ConfigError):
            self._config(rho_offset=None, rho=-1.0)

    def test_volumes(self):
        for volumes in ([], [1e3, 2e3, 4e3], [1e3, 4e3, 2e3, 8e3], "abc", {"v0": 1e3}):
            with self.subTest(volumes=volumes):
                with self.assertRaises(ConfigError):
                    self._config(volumes=volumes)

    def test_syntax_error(self):
        err = self._error('{\n  "alpha": [0.4, 0.3, 0.3],\n  "lambda": 1.0,,\n}')
        self.assertIsNotNone(err.line)
        self.assertIn("cannot parse", str(err))

    def test_overrides(self):
        path = self._write_config("override.json", text=CONFIG)
        config = load_config(
            path,
            [
                ("alpha", ["0.5", "0.25", "0.25"], "--alpha"),
                ("volumes", {"v0": "2e3", "k_max": "4"}, "--volumes"),
            ],
        )
        self.assertEqual(config.alpha, (0.5, 0.25, 0.25))
        self.assertEqual(config.volumes[0], 2e3)
        self.assertEqual(config.source, path)
        with self.assertRaises(ConfigError) as err:
            load_config(path, [("alpha", ["0.5", "0.3", "0.3"], "--alpha")])
        self.assertTrue(str(err.exception).startswith("--alpha: "))

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            load_config("/nonexistent/casimir.json")
