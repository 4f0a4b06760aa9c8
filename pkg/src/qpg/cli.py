"""Command-line front end: qpg run | sweep | presets.

Exit codes: 0 success, 2 scenario parse error, 3 validation error,
4 numeric/window error during execution.  Failures emit a single
machine-readable JSON object on stderr: {"error": {"code", "message"}}.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import QpgError, ScenarioError, ScenarioParseError
from .presets import PRESETS
from .scenario import (
    load_scenario_file,
    preset_text,
    run_scenario,
    sweep_scenario,
    validate_scenario,
)

EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_NUMERIC = 4


def _emit_error(code, message):
    sys.stderr.write(json.dumps({"error": {"code": code, "message": message}}) + "\n")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qpg",
        description="Spectrally engineered SFG pulse-gate simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute one scenario file")
    run.add_argument("scenario", help="path to the scenario file")
    run.add_argument("--out-dir", default=".", help="directory for artifacts")
    run.add_argument("--resolution", type=int, default=None,
                     help="override n_points on every grid")

    sweep = sub.add_parser("sweep", help="run a scenario once per parameter value")
    sweep.add_argument("scenario", help="path to the scenario file")
    sweep.add_argument("--param", required=True, help="parameter path, e.g. material.length_mm")
    sweep.add_argument("--values", required=True,
                       help="comma-separated list of values")
    sweep.add_argument("--out-dir", default=".", help="directory for artifacts")
    sweep.add_argument("--resolution", type=int, default=None,
                       help="override n_points on every grid")

    presets = sub.add_parser("presets", help="list or emit shipped scenario presets")
    presets.add_argument("action", choices=["list", "emit"])
    presets.add_argument("name", nargs="?", default=None)
    presets.add_argument("--out", default=None, help="write the preset here instead of stdout")
    return parser


def _cmd_run(args):
    raw = load_scenario_file(args.scenario)
    scn = validate_scenario(raw)
    for path in run_scenario(scn, args.out_dir, resolution=args.resolution):
        print(path)
    return 0


def _cmd_sweep(args):
    raw = load_scenario_file(args.scenario)
    values = [v.strip() for v in args.values.split(",") if v.strip()]
    for path in sweep_scenario(raw, args.param, values, args.out_dir,
                               resolution=args.resolution):
        print(path)
    return 0


def _cmd_presets(args):
    if args.action == "list":
        for name in sorted(PRESETS):
            print(name)
        return 0
    if args.name is None:
        raise ScenarioError("missing_preset_name", "presets emit requires a name")
    text = preset_text(args.name)
    if args.out:
        Path(args.out).write_text(text)
        print(args.out)
    else:
        sys.stdout.write(text)
    return 0


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        return _cmd_presets(args)
    except ScenarioParseError as exc:
        _emit_error(exc.code, str(exc))
        return EXIT_PARSE
    except ScenarioError as exc:
        _emit_error(exc.code, str(exc))
        return EXIT_VALIDATION
    except QpgError as exc:
        _emit_error(type(exc).__name__.lower(), str(exc))
        return EXIT_NUMERIC
    except (FloatingPointError, np.linalg.LinAlgError) as exc:
        _emit_error("numeric_error", str(exc))
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
