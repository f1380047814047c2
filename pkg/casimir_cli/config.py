# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""Experiment configuration files.

A configuration is one JSON document. It is read with PyYAML, JSON being
a subset of YAML, so that node marks give the line of every value.
"""
import dataclasses
import logging
import math

import yaml

from casimir_box import BoxGeometry
from casimir_condensate import ClassifySettings, density_from_offset
from casimir_correlation import CoherenceSettings, SeparationPath
from casimir_cycles import CycleWindow, HierarchySettings
from casimir_cycles.spectrum import DEFAULT_MAX_COST
from casimir_numerics.exceptions import DomainError
from casimir_scaling import ScalingSettings, volume_sequence

from .exceptions import ConfigError
from .models.experiment_config import ExperimentConfig

_logger = logging.getLogger(__name__)

_MISSING = object()


def _collect_marks(node, path, marks):
    marks[path] = node.start_mark.line + 1
    if isinstance(node, yaml.MappingNode):
        for key_node, value_node in node.value:
            _collect_marks(value_node, path + (key_node.value,), marks)
    elif isinstance(node, yaml.SequenceNode):
        for pos, item in enumerate(node.value):
            _collect_marks(item, path + (pos,), marks)


def _dotted(path):
    return ".".join(str(p) for p in path) or "<root>"


class ConfigReader(object):
    """Raw configuration with the line of every value.

    Values set from the command line are reported against their flag.
    """

    def __init__(self, data, marks=None, source="<config>"):
        if data is None:
            data = {}
        self.data = data
        self.marks = marks or {}
        self.source = source
        self.flags = {}
        if not isinstance(data, dict):
            raise self.error((), "configuration must be a mapping")

    @classmethod
    def from_text(cls, text, source="<config>"):
        try:
            node = yaml.compose(text, Loader=yaml.SafeLoader)
            data = yaml.safe_load(text)
        except yaml.YAMLError as err:
            mark = getattr(err, "problem_mark", None)
            line = mark.line + 1 if mark else None
            raise ConfigError(
                "cannot parse configuration: %s" % getattr(err, "problem", err),
                line=line,
                source=source,
            ) from err
        marks = {}
        if node is not None:
            _collect_marks(node, (), marks)
        return cls(data, marks, source)

    @classmethod
    def from_file(cls, path):
        try:
            with open(path, encoding="utf-8") as fp:
                text = fp.read()
        except OSError as err:
            raise ConfigError(
                "cannot read configuration: %s" % err, source=path
            ) from err
        return cls.from_text(text, source=str(path))

    def override(self, key, value, flag):
        self.data[key] = value
        self.flags[(key,)] = flag

    def error(self, path, message):
        for size in range(len(path), 0, -1):
            flag = self.flags.get(tuple(path[:size]))
            if flag:
                return ConfigError(message, source=flag)
        line = None
        for size in range(len(path), -1, -1):
            line = self.marks.get(tuple(path[:size]))
            if line:
                break
        return ConfigError(message, line=line, source=self.source)

    def has(self, path):
        return self.get(path, None) is not None

    def get(self, path, default=_MISSING):
        value = self.data
        for key in path:
            if isinstance(value, dict) and key in value:
                value = value[key]
            elif isinstance(value, list) and isinstance(key, int) and key < len(value):
                value = value[key]
            else:
                if default is _MISSING:
                    raise self.error(path, "missing required field %s" % _dotted(path))
                return default
        return value

    def number(self, path, default=_MISSING, positive=False, value=_MISSING):
        if value is _MISSING:
            value = self.get(path, default)
        if value is default and default is not _MISSING:
            return default
        try:
            if isinstance(value, bool):
                raise ValueError()
            # YAML 1.1 leaves exponents without a dot, like 1e3, as strings
            number = float(value.strip() if isinstance(value, str) else value)
        except (TypeError, ValueError):
            raise self.error(
                path, "%s must be a number, got %r" % (_dotted(path), value)
            )
        if math.isnan(number) or (positive and not number > 0):
            raise self.error(path, "%s must be > 0, got %r" % (_dotted(path), value))
        return number

    def integer(self, path, default=_MISSING, minimum=None, value=_MISSING):
        number = self.number(path, default, value=value)
        if number is default and default is not _MISSING:
            return default
        if not (math.isfinite(number) and number == int(number)):
            raise self.error(
                path, "%s must be an integer, got %r" % (_dotted(path), number)
            )
        if minimum is not None and number < minimum:
            raise self.error(
                path, "%s must be >= %d, got %d" % (_dotted(path), minimum, number)
            )
        return int(number)

    def numbers(self, path, length=None, default=_MISSING):
        values = self.get(path, default)
        if values is default and default is not _MISSING:
            return default
        if isinstance(values, str):
            values = [v for v in values.split(",") if v.strip()]
        if not isinstance(values, (list, tuple)):
            raise self.error(path, "%s must be a list of numbers" % _dotted(path))
        if length is not None and len(values) != length:
            raise self.error(
                path,
                "%s needs %d values, got %d" % (_dotted(path), length, len(values)),
            )
        return tuple(self.number(path + (i,), value=v) for i, v in enumerate(values))

    def boolean(self, path, default=False):
        value = self.get(path, default)
        if not isinstance(value, bool):
            raise self.error(
                path, "%s must be true or false, got %r" % (_dotted(path), value)
            )
        return value

    def section(self, path):
        value = self.get(path, None)
        if value is None:
            return {}
        if not isinstance(value, dict):
            raise self.error(path, "%s must be a mapping" % _dotted(path))
        return value

    def settings(self, path, base):
        """Copy of the settings dataclass ``base`` with the section's values."""
        section = self.section(path)
        known = {f.name: getattr(base, f.name) for f in dataclasses.fields(base)}
        changes = {}
        for key in section:
            key_path = path + (key,)
            current = known.get(key, _MISSING)
            if current is _MISSING or dataclasses.is_dataclass(current):
                raise self.error(key_path, "unknown setting %s" % _dotted(key_path))
            if isinstance(current, bool):
                changes[key] = self.boolean(key_path)
            elif isinstance(current, int):
                changes[key] = self.integer(key_path)
            elif isinstance(current, tuple):
                changes[key] = self.numbers(key_path)
            else:
                changes[key] = self.number(key_path)
        try:
            return dataclasses.replace(base, **changes)
        except DomainError as err:
            raise self.error(path, str(err)) from err


def _volumes(reader, min_points):
    path = ("volumes",)
    raw = reader.get(path)
    if isinstance(raw, dict):
        for key in raw:
            if key not in ("v0", "k_max", "ratio"):
                raise reader.error(path + (key,), "unknown setting volumes.%s" % key)
        try:
            volumes = volume_sequence(
                reader.number(path + ("v0",), positive=True),
                reader.integer(path + ("k_max",), minimum=0),
                reader.number(path + ("ratio",), default=2.0),
            )
        except DomainError as err:
            raise reader.error(path, str(err)) from err
    else:
        volumes = reader.numbers(path)
    if not volumes:
        raise reader.error(path, "volumes must not be empty")
    if any(not (v > 0 and math.isfinite(v)) for v in volumes):
        raise reader.error(path, "volumes must be finite and > 0")
    if any(b <= a for a, b in zip(volumes, volumes[1:])):
        raise reader.error(path, "volumes must be strictly increasing")
    if len(volumes) < min_points:
        raise reader.error(
            path,
            "a sweep needs at least %d volumes, got %d" % (min_points, len(volumes)),
        )
    return volumes


def _density(reader, lam):
    has_rho = reader.has(("rho",))
    has_offset = reader.has(("rho_offset",))
    if has_rho and has_offset:
        raise reader.error(("rho_offset",), "give either rho or rho_offset, not both")
    if has_offset:
        rho = density_from_offset(lam, reader.number(("rho_offset",)))
        path = ("rho_offset",)
    elif has_rho:
        rho = reader.number(("rho",))
        path = ("rho",)
    else:
        raise reader.error((), "one of rho or rho_offset is required")
    if not rho > 0:
        raise reader.error(path, "the density must be > 0, got %r" % rho)
    return rho


def _windows(reader):
    path = ("cycles", "windows")
    items = reader.get(path, [])
    if not isinstance(items, list):
        raise reader.error(path, "cycles.windows must be a list")
    windows = []
    for pos in range(len(items)):
        item = path + (pos,)
        try:
            windows.append(
                CycleWindow(
                    reader.number(item + ("x",)),
                    reader.number(item + ("y",)),
                    exponent=reader.number(item + ("exponent",), default=1.0),
                    coefficient=reader.number(item + ("coefficient",), default=1.0),
                )
            )
        except DomainError as err:
            raise reader.error(item, str(err)) from err
    return tuple(windows)


def _paths(reader, geometry):
    path = ("correlate", "paths")
    items = reader.get(path, [])
    if not isinstance(items, list):
        raise reader.error(path, "correlate.paths must be a list")
    paths = []
    for pos, raw in enumerate(items):
        item = path + (pos,)
        if not isinstance(raw, dict):
            raise reader.error(item, "a separation path must be a mapping")
        try:
            if "fractions" in raw:
                sep = SeparationPath.fraction(
                    geometry, reader.numbers(item + ("fractions",), length=3)
                )
            elif "axis" in raw:
                sep = SeparationPath.along(
                    reader.integer(item + ("axis",), minimum=1) - 1,
                    reader.number(item + ("x",)),
                    reader.number(item + ("s",), default=0.0),
                )
            else:
                sep = SeparationPath(
                    reader.numbers(item + ("coefficients",), length=3),
                    reader.numbers(
                        item + ("exponents",), length=3, default=(0.0, 0.0, 0.0)
                    ),
                )
        except (DomainError, IndexError) as err:
            raise reader.error(item, str(err)) from err
        paths.append(sep)
    return tuple(paths)


def _optional_settings(reader, path, base):
    value = reader.get(path, None)
    if value is None or value is False:
        return None
    if value is True:
        return base
    return reader.settings(path, base)


def parse_config(reader):
    """Validate a ``ConfigReader`` into an ``ExperimentConfig``."""
    alpha = reader.numbers(("alpha",), length=3)
    lam = reader.number(("lambda",), default=1.0, positive=True)
    rho = _density(reader, lam)
    scaling = reader.settings(("scaling",), ScalingSettings())
    volumes = _volumes(reader, scaling.min_points)
    try:
        geometry = BoxGeometry(alpha, volumes[0])
    except DomainError as err:
        raise reader.error(("alpha",), str(err)) from err
    delta = reader.get(("solve_mu", "delta"), None)
    config = ExperimentConfig(
        geometry=geometry,
        lam=lam,
        rho=rho,
        volumes=volumes,
        out=str(reader.get(("out",), "out")),
        source=reader.source,
        scaling=scaling,
        delta=None if delta is None else reader.number(("solve_mu", "delta")),
        classify=reader.settings(("classify",), ClassifySettings()),
        short_lengths=tuple(
            reader.integer(("cycles", "short_lengths", i), value=v, minimum=1)
            for i, v in enumerate(reader.get(("cycles", "short_lengths"), []))
        ),
        long_exponents=tuple(
            reader.number(("cycles", "long_exponents", i), value=v, positive=True)
            for i, v in enumerate(reader.get(("cycles", "long_exponents"), []))
        ),
        windows=_windows(reader),
        hierarchy=_optional_settings(
            reader, ("cycles", "hierarchy"), HierarchySettings()
        ),
        spectrum_j_max=reader.integer(
            ("cycles", "spectrum_j_max"), default=None, minimum=1
        ),
        max_cost=reader.number(
            ("cycles", "max_cost"), default=DEFAULT_MAX_COST, positive=True
        ),
        paths=_paths(reader, geometry),
        coherence=_optional_settings(
            reader, ("correlate", "coherence"), CoherenceSettings()
        ),
    )
    _logger.debug("configuration %s: alpha=%s rho=%g", reader.source, alpha, rho)
    return config


def load_config(path, overrides=None):
    """Read, override and validate a configuration file.

    :param overrides: list of ``(key, value, flag)`` applied before validation
    :return: ``ExperimentConfig``
    """
    if path:
        reader = ConfigReader.from_file(path)
    else:
        reader = ConfigReader({}, source="<flags>")
    for key, value, flag in overrides or ():
        reader.override(key, value, flag)
    return parse_config(reader)
