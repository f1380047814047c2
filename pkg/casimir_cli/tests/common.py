# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
import json
import math
import os
import shutil
import tempfile
import unittest

from ..config import ConfigReader, parse_config

ZETA_3_2 = 2.612375348685488


class CliTestMixin(object):
    @classmethod
    def _setup_tmpdir(cls):
        cls.tmpdir = tempfile.mkdtemp(prefix="casimir-cli-")

    @classmethod
    def _teardown_tmpdir(cls):
        shutil.rmtree(cls.tmpdir, ignore_errors=True)

    @classmethod
    def _base_config(cls, **kw):
        data = {
            "alpha": [0.4, 0.3, 0.3],
            "lambda": 1.0,
            "rho_offset": 1.0,
            "volumes": {"v0": "1e3", "k_max": 4},
        }
        data.update(kw)
        return data

    @classmethod
    def _config(cls, **kw):
        text = json.dumps(cls._base_config(**kw), indent=2)
        return parse_config(ConfigReader.from_text(text, source="test.json"))

    def _write_config(self, name, data=None, text=None):
        path = os.path.join(self.tmpdir, name)
        with open(path, "w", encoding="utf-8") as fp:
            fp.write(text if text is not None else json.dumps(data, indent=2))
        return path

    def assertRelClose(self, a, b, rel=1e-12, abs_=0.0, msg=None):
        tol = max(abs_, rel * max(abs(a), abs(b)))
        if not math.isclose(a, b, rel_tol=0.0, abs_tol=tol):
            self.fail(msg or "%r != %r within rel=%g abs=%g" % (a, b, rel, abs_))


class CliCommonTestCase(unittest.TestCase, CliTestMixin):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls._setup_tmpdir()

    @classmethod
    def tearDownClass(cls):
        cls._teardown_tmpdir()
        super().tearDownClass()
