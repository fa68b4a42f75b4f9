#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Main entry point for UPB Lab application.

This module handles command line arguments and config files, builds the
requested computation (optimal pump, sweep, g2(tau) or figure preset) and
hands the resulting tables to the selected emitters.
"""

import importlib
import math
import os
import argparse
from pathlib import Path
import sys
from typing import Dict, List, Optional, Tuple

from colorama import Fore, Style

import src.emitters._IEmitter as IEmitter
from src.correlations import default_tau_grid, g2_tau_for_params
from src.errors import InvalidConfig, InvalidParams, UnknownPreset, UPBError
from src.info import NAME, VERSION
from src.model import SystemParams
from src.optimal import optimal_pump
from src.presets import PRESET_NAMES, PresetRunner
from src.SweepRunner import QUANTITIES, ResultTable, SweepAxis, SweepSpec, params_metadata, run_sweep
from src.utils import (
    eprint,
    filler,
    format_number,
    get_all_process_types,
    parse_axis,
    parse_bool,
    parse_config_file,
    parse_float,
    parse_int,
    parse_list,
    status,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID_CONFIG = 2
EXIT_POINT_FAILURES = 3

FLOAT_KEYS = ("delta", "delta_c", "delta_a", "chi", "lambda", "phi", "phi_over_pi", "omega", "gamma", "optimal_at", "tau_max")
INT_KEYS = ("n_max", "tau_points", "workers")
BOOL_KEYS = ("use_optimal_pump",)
TEXT_KEYS = ("drive", "axis1", "axis2", "quantities")


def common_parser(emitter_types: List[str]) -> argparse.ArgumentParser:
    """Options shared by every subcommand."""
    parser = argparse.ArgumentParser(add_help=False)

    parser.add_argument('-o', '--out', help='Output path without extension (default: upb_<command>)')
    parser.add_argument('--config', help='Config file with key = value lines; flags override it')
    parser.add_argument('--n-max', type=int, help='Fock truncation (default: 10)')
    parser.add_argument('--reproducible', action='store_true', help='Omit the timestamp line from outputs')
    parser.add_argument('--workers', type=int, help='Worker processes for sweeps (default: 1)')
    parser.add_argument('-q', '--quiet', action='store_true', help='Suppress progress output')
    parser.add_argument(
        '-e', '--emitter',
        default="csv.table" if "csv.table" in emitter_types else emitter_types[0],
        help=f"Comma separated emitters. Currently available: {', '.join(emitter_types)}"
    )

    params = parser.add_argument_group('system parameters (units of kappa)')
    params.add_argument('--drive', choices=['cavity', 'atom'], help='Coherent drive target')
    params.add_argument('--delta', type=float, help='Common detuning, sets delta_c = delta_a')
    params.add_argument('--delta-c', type=float, help='Cavity-drive detuning')
    params.add_argument('--delta-a', type=float, help='Atom-drive detuning')
    params.add_argument('--chi', type=float, help='Cavity-atom coupling')
    params.add_argument('--lambda', dest='lambda', type=float, help='Parametric gain')
    params.add_argument('--phi', type=float, help='Parametric phase (radians)')
    params.add_argument('--phi-over-pi', type=float, help='Parametric phase in units of pi')
    params.add_argument('--omega', type=float, help='Coherent drive strength')
    params.add_argument('--gamma', type=float, help='Atomic decay rate')

    return parser


def build_parser(emitter_types: List[str]) -> Tuple[argparse.ArgumentParser, Dict[str, argparse.ArgumentParser]]:
    """Main parser and the subparser of every command."""
    common = common_parser(emitter_types)

    parser = argparse.ArgumentParser(
        prog="upb-lab",
        description="Unconventional photon blockade in a parametrically pumped cavity QED system",
        epilog='Example: upb-lab figure fig3a -o fig3a --reproducible -e csv.table,svg.line',
    )
    parser.add_argument('--version', action='version', version=f"{NAME} {VERSION}")
    commands = parser.add_subparsers(dest='command', required=True)

    optimal = commands.add_parser('optimal', parents=[common], help='Print the optimal parametric gain and phase')

    sweep = commands.add_parser('sweep', parents=[common], help='Run a parameter sweep')
    sweep.add_argument('--axis1', help='First axis as name,start,stop,count (e.g. delta,-3,3,301)')
    sweep.add_argument('--axis2', help='Optional second axis')
    sweep.add_argument('--quantities', help=f"Comma separated subset of {', '.join(QUANTITIES)}")
    sweep.add_argument('--use-optimal-pump', action='store_const', const='true',
                       help='Recompute the optimal pump at every grid point')
    sweep.add_argument('--optimal-at', type=float,
                       help='Hold the pump at the optimum of this detuning')

    g2tau = commands.add_parser('g2tau', parents=[common], help='Two-time correlation g2(tau)')
    g2tau.add_argument('--tau-max', type=float, help='Largest delay in 1/kappa (default: 50)')
    g2tau.add_argument('--tau-points', type=int, help='Number of delays (default: 1001)')
    g2tau.add_argument('--optimal-at', type=float,
                       help='Use the optimal pump of this detuning')

    figure = commands.add_parser('figure', parents=[common], help='Run a figure preset')
    figure.add_argument('name', help=f"Preset: {', '.join(PRESET_NAMES)}")
    figure.add_argument('--points', type=int, help='Override the number of points on every axis')

    return parser, {"optimal": optimal, "sweep": sweep, "g2tau": g2tau, "figure": figure}


def collect_settings(args: argparse.Namespace) -> Dict[str, object]:
    """
    Merge config file values with command line flags.

    Raises:
        InvalidConfig: On unknown keys or malformed values
    """
    raw = parse_config_file(args.config) if args.config else {}
    settings: Dict[str, object] = {}

    for key, value in raw.items():
        if key in FLOAT_KEYS:
            settings[key] = parse_float(value, key)
        elif key in INT_KEYS:
            settings[key] = parse_int(value, key)
        elif key in BOOL_KEYS:
            settings[key] = parse_bool(value, key)
        elif key in TEXT_KEYS:
            settings[key] = value
        else:
            raise InvalidConfig(f"unknown config key '{key}'")

    for key in FLOAT_KEYS + INT_KEYS + TEXT_KEYS + BOOL_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = parse_bool(value, key) if key in BOOL_KEYS else value

    return settings


def system_params(settings: Dict[str, object]) -> SystemParams:
    """SystemParams from merged settings; unspecified fields keep their defaults."""
    fields = {}
    if "delta" in settings:
        fields["delta_c"] = fields["delta_a"] = settings["delta"]
    for key in ("delta_c", "delta_a", "chi", "omega", "gamma", "drive", "n_max"):
        if key in settings:
            fields[key] = settings[key]
    if "lambda" in settings:
        fields["lam"] = settings["lambda"]
    if "phi" in settings:
        fields["phi"] = settings["phi"]
    if "phi_over_pi" in settings:
        fields["phi"] = settings["phi_over_pi"] * math.pi

    try:
        return SystemParams(**fields)
    except ValueError as e:
        raise InvalidParams(str(e)) from e


def with_optimal_at(params: SystemParams, settings: Dict[str, object]) -> SystemParams:
    if "optimal_at" not in settings:
        return params
    pump = optimal_pump(params.with_detuning(settings["optimal_at"]))
    return pump.apply(params)


def run_optimal(args: argparse.Namespace, settings: Dict[str, object]) -> Dict[str, ResultTable]:
    params = system_params(settings)
    pump = optimal_pump(params)

    print(f"🔍 {Fore.GREEN}Optimal pump ({params.drive.value}-driven, "
          f"delta_c = {params.delta_c:g}, delta_a = {params.delta_a:g}, chi = {params.chi:g}){Style.RESET_ALL}")
    lam = filler(f"{pump.lambda_opt:.6e}", 13)
    phi = filler(f"{pump.phi_opt / math.pi:+.6f}", 13)
    print(f"   {Fore.LIGHTBLUE_EX}lambda_opt / kappa = {Fore.LIGHTCYAN_EX}{lam}{Style.RESET_ALL}")
    print(f"   {Fore.LIGHTBLUE_EX}phi_opt / pi       = {Fore.LIGHTCYAN_EX}{phi}{Style.RESET_ALL}")

    if args.out is None:
        return {}

    table = ResultTable(
        columns=["lambda_opt_over_kappa", "phi_opt_over_pi"],
        rows=[[pump.lambda_opt, pump.phi_opt / math.pi]],
        metadata=params_metadata(params, args.reproducible),
        shape=(1,),
    )
    return {"": table}


def run_sweep_command(args: argparse.Namespace, settings: Dict[str, object]) -> Dict[str, ResultTable]:
    if "axis1" not in settings:
        raise InvalidConfig("sweep needs axis1 (flag --axis1 or config key axis1)")

    params = with_optimal_at(system_params(settings), settings)
    axes = [SweepAxis(*parse_axis(settings[key], key)) for key in ("axis1", "axis2") if key in settings]
    spec = SweepSpec(
        base=params,
        axis1=axes[0],
        axis2=axes[1] if len(axes) > 1 else None,
        quantities=tuple(parse_list(settings.get("quantities", "g2_numeric"))),
        use_optimal_pump=bool(settings.get("use_optimal_pump", False)),
    )

    table = run_sweep(spec, int(settings.get("workers", 1)), not args.quiet, args.reproducible)
    return {"": table}


def run_g2tau(args: argparse.Namespace, settings: Dict[str, object]) -> Dict[str, ResultTable]:
    params = with_optimal_at(system_params(settings), settings)
    grid = default_tau_grid(float(settings.get("tau_max", 50.0)), int(settings.get("tau_points", 1001)))

    if not args.quiet:
        status("🚀", "g2(tau) points", len(grid))
    series = g2_tau_for_params(params, grid)

    table = series.to_table()
    table.metadata = {**params_metadata(params, args.reproducible), **table.metadata}
    table.metadata["oscillations_tau_le_20"] = str(series.oscillation_count(20.0))

    if not args.quiet:
        status("✅", "g2(0) =", format_number(series.g2_zero))
    return {"": table}


def run_figure(args: argparse.Namespace, settings: Dict[str, object]) -> Dict[str, ResultTable]:
    runner = PresetRunner(
        n_max=int(settings.get("n_max", 10)),
        workers=int(settings.get("workers", 1)),
        progress=not args.quiet,
        reproducible=args.reproducible,
        points=args.points,
    )
    return runner.run(args.name)


COMMANDS = {
    "optimal": run_optimal,
    "sweep": run_sweep_command,
    "g2tau": run_g2tau,
    "figure": run_figure,
}


def output_path(base: str, label: str, extension: str, kind: str = "") -> str:
    stem = base[: -len(extension) - 1] if base.endswith("." + extension) else base
    parts = [part for part in (stem, label, kind) if part]
    return "_".join(parts) + "." + extension


def output_paths(base: str, label: str, names: List[str], extensions: List[str]) -> List[str]:
    """One path per emitter; emitters sharing an extension get their kind appended."""
    return [
        output_path(base, label, ext, name.rsplit(".", 1)[-1] if extensions.count(ext) > 1 else "")
        for name, ext in zip(names, extensions)
    ]


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main program function.

    Parses arguments, runs the selected subcommand and writes its tables with
    every selected emitter.

    Returns:
        int: Exit code (0 success, 1 error, 2 invalid config, 3 per-point failures)
    """
    emitter_types = get_all_process_types(os.path.join(Path(__file__).parent, "emitters"))
    parser, subparsers = build_parser(emitter_types)
    pre_args = parser.parse_known_args(argv)[0]

    selected = parse_list(pre_args.emitter)
    unknown = [name for name in selected if name not in emitter_types]
    if unknown or not selected:
        eprint(f"❌ Invalid emitter: {', '.join(unknown) or '(none)'}")
        print("Available emitters:")

        for emitter_type in emitter_types:
            module = importlib.import_module("src.emitters." + emitter_type)
            print(f" - {emitter_type}")
            print(f"    {module.help()}")

        return EXIT_INVALID_CONFIG

    emitters = [importlib.import_module("src.emitters." + name) for name in selected]
    for emitter in emitters:
        emitter.setup_args(subparsers[pre_args.command])

    args = parser.parse_args(argv)

    try:
        settings = collect_settings(args)
        tables = COMMANDS[args.command](args, settings)

        base = args.out or f"upb_{args.command}"
        extensions = [emitter.file_extention() for emitter in emitters]
        for label, table in tables.items():
            paths = output_paths(base, label, selected, extensions)
            for emitter, path in zip(emitters, paths):
                eclass: IEmitter.IEmitter = emitter.get_class()(args, path)
                eclass.create(table)

    except (InvalidConfig, InvalidParams, UnknownPreset) as e:
        eprint(f"❌ {type(e).__name__}: {e}")
        return EXIT_INVALID_CONFIG

    except UPBError as e:
        eprint(f"💥 {type(e).__name__}: {e}")
        return EXIT_ERROR

    failures = sum(table.failures for table in tables.values())
    if failures:
        eprint(f"⚠️ | {failures} grid point(s) failed (see error_code column)")
        return EXIT_POINT_FAILURES

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
