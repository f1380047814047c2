# Copyright 2026 Casimir Lab
# License LGPL-3.0 or later (http://www.gnu.org/licenses/lgpl).
"""``casimir-lab`` command line.

Exit status: 0 on success, 1 when the numerics do not converge, 2 for
configuration and usage errors.
"""
import argparse
import logging
import os
import sys

from casimir_numerics.exceptions import (
    ConvergenceError,
    DomainError,
    InconclusiveError,
    NoComponentError,
    SweepError,
)

from .commands import COMMANDS
from .config import load_config
from .exceptions import ConfigError
from .output import write_report

_logger = logging.getLogger(__name__)

LOG_LEVEL_ENV = "CASIMIR_LOG_LEVEL"

EXIT_OK = 0
EXIT_NUMERICS = 1
EXIT_CONFIG = 2


def _csv_list(raw):
    return [v.strip() for v in raw.split(",") if v.strip()]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="casimir-lab",
        description="Finite-size experiments on the perfect Bose gas in Casimir boxes.",
    )
    parser.add_argument(
        "--log-level",
        default=None,
        help="logging level, defaults to $%s or WARNING" % LOG_LEVEL_ENV,
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for name, func in COMMANDS.items():
        sub = subparsers.add_parser(name, help=((func.__doc__ or "").splitlines() or [""])[0])
        sub.add_argument("--config", help="JSON experiment configuration")
        sub.add_argument("--alpha", help="box exponents a1,a2,a3")
        density = sub.add_mutually_exclusive_group()
        density.add_argument("--rho-offset", help="rho - rho_c")
        density.add_argument("--rho", help="total density")
        sub.add_argument("--lambda", dest="lam", help="thermal wavelength")
        sub.add_argument("--volumes", help="sweep v0,K: volumes v0 2^k for k = 0 .. K")
        sub.add_argument("--out", help="output directory")
        sub.add_argument(
            "--log-level", default=argparse.SUPPRESS, help=argparse.SUPPRESS
        )
    return parser


def _overrides(args):
    res = []
    if args.alpha is not None:
        res.append(("alpha", _csv_list(args.alpha), "--alpha"))
    if args.rho_offset is not None:
        res.append(("rho_offset", args.rho_offset, "--rho-offset"))
        res.append(("rho", None, "--rho-offset"))
    if args.rho is not None:
        res.append(("rho", args.rho, "--rho"))
        res.append(("rho_offset", None, "--rho"))
    if args.lam is not None:
        res.append(("lambda", args.lam, "--lambda"))
    if args.volumes is not None:
        parts = _csv_list(args.volumes)
        if len(parts) != 2:
            raise ConfigError(
                "expected v0,K, got %r" % args.volumes, source="--volumes"
            )
        res.append(("volumes", {"v0": parts[0], "k_max": parts[1]}, "--volumes"))
    if args.out is not None:
        res.append(("out", args.out, "--out"))
    return res


def setup_logging(level=None):
    level = (level or os.environ.get(LOG_LEVEL_ENV) or "WARNING").upper()
    numeric = logging.getLevelName(level)
    if not isinstance(numeric, int):
        raise ConfigError("unknown log level %r" % level, source="--log-level")
    logging.basicConfig(
        level=numeric,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(numeric)


def run(args):
    config = load_config(args.config, _overrides(args))
    _logger.info("%s on alpha=%s rho=%g", args.command, config.alpha, config.rho)
    table, metadata = COMMANDS[args.command](config)
    return write_report(config.out, args.command, table, metadata)


def _config_exceptions():
    return (ConfigError, DomainError, NoComponentError)


def _numerics_exceptions():
    return (ConvergenceError, SweepError, InconclusiveError)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code
    try:
        setup_logging(args.log_level)
        run(args)
    except _config_exceptions() as err:
        print("casimir-lab: error: %s" % err, file=sys.stderr)
        return EXIT_CONFIG
    except _numerics_exceptions() as err:
        _logger.error("%s failed: %s", args.command, err)
        diagnostics = getattr(err, "diagnostics", None)
        if diagnostics:
            _logger.error("diagnostics: %s", diagnostics)
        print("casimir-lab: numerics failed: %s" % err, file=sys.stderr)
        return EXIT_NUMERICS
    return EXIT_OK
