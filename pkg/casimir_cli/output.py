# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""CSV tables and JSON sidecars.

Floats are written with 17 significant digits so that reading a table
back gives the same doubles. Sidecar keys are sorted and carry no
timestamp: identical runs give identical bytes.
"""
import dataclasses
import enum
import json
import logging
import math
import os

import numpy as np
import pandas as pd

_logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"

HEADERS = {
    "solve-mu": ["V", "beta_mu", "scaled_beta_mu"],
    "classify": ["series", "V", "value"],
    "cycles": ["quantity", "V", "value"],
    "correlate": [
        "path",
        "V",
        "X1",
        "X2",
        "X3",
        "sigma",
        "density",
        "status",
        "reason",
    ],
}


def make_table(command, rows):
    return pd.DataFrame(rows, columns=HEADERS[command])


def _jsonable(value):
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if hasattr(value, "fit_metadata"):
        return value.fit_metadata()
    if hasattr(value, "as_dict"):
        return value.as_dict()
    if dataclasses.is_dataclass(value):
        return dataclasses.asdict(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError("%r is not serializable" % type(value))


def _finite(value):
    # JSON has no inf / nan: write them as strings
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _finite(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite(v) for v in value]
    return value


def dump_metadata(metadata):
    plain = json.loads(json.dumps(metadata, default=_jsonable))
    return json.dumps(_finite(plain), sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_report(out_dir, command, table, metadata):
    """Write ``<command>.csv`` and ``<command>.json`` into ``out_dir``.

    :return: (csv path, json path)
    """
    os.makedirs(out_dir, exist_ok=True)
    csv_path = os.path.join(out_dir, "%s.csv" % command)
    json_path = os.path.join(out_dir, "%s.json" % command)
    table.to_csv(
        csv_path,
        index=False,
        float_format=FLOAT_FORMAT,
        lineterminator="\n",
        encoding="utf-8",
    )
    with open(json_path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(dump_metadata(metadata))
    _logger.info("%s: %d rows written to %s", command, len(table), csv_path)
    return csv_path, json_path


def read_table(path):
    """Read a table written by ``write_report`` back, bit for bit."""
    return pd.read_csv(
        path, float_precision="round_trip", keep_default_na=False, na_values=[""]
    )
