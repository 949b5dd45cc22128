"""Command-line front end.

    cvchannel run   [--scenario FILE | --preset NAME] [field flags] [--out DIR]
    cvchannel sweep --axis NAME --values V1,V2,... [field flags] [--out DIR]

Field flags override values from the scenario file, which override the
defaults.  Exit status 0 on success, 2 on bad configuration, 1 on runtime
failure; diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .scenarios import PRESETS, Scenario, preset, run_scenario, sweep

_FIELD_FLAGS = (
    ("--n", "n", float, "bath exponent (1 Ohmic, <1 sub-Ohmic, >1 super-Ohmic)"),
    ("--eta", "eta", float, "dimensionless bath coupling"),
    ("--omega-c", "omega_c", float, "bath cutoff frequency (units of the field frequency)"),
    ("--kappa", "kappa", float, "beam-splitter coupling between the modes"),
    ("--r", "r", float, "initial two-mode squeezing parameter"),
    ("--t-max", "t_max", float, "integration horizon (units of 1/field frequency)"),
    ("--dt", "dt", float, "uniform grid step"),
    ("--out", "out", str, "output directory"),
    ("--stride", "stride", int, "emit every stride-th grid sample"),
)


def _add_field_flags(p: argparse.ArgumentParser) -> None:
    for flag, dest, typ, help_ in _FIELD_FLAGS:
        p.add_argument(flag, dest=dest, type=typ, default=None, help=help_)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvchannel",
        description="Entanglement dynamics of a two-mode squeezed channel "
                    "in a common structured vacuum",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one scenario (or a figure preset)")
    run_p.add_argument("--scenario", metavar="FILE", default=None,
                       help="flat JSON scenario document")
    run_p.add_argument("--preset", choices=PRESETS, default=None,
                       help="bundled figure parameter set (runs its bath-exponent sweep)")
    _add_field_flags(run_p)

    sweep_p = sub.add_parser("sweep", help="run a scenario once per value of one field")
    sweep_p.add_argument("--axis", required=True, help="scenario field to sweep")
    sweep_p.add_argument("--values", required=True,
                         help="comma-separated values for the axis")
    sweep_p.add_argument("--scenario", metavar="FILE", default=None,
                         help="flat JSON scenario document for the base")
    _add_field_flags(sweep_p)

    return parser


def _resolve_scenario(args: argparse.Namespace, base: Scenario) -> Scenario:
    if args.scenario is not None:
        base = Scenario.from_json(args.scenario)
    overrides = {
        dest: getattr(args, dest)
        for _, dest, _, _ in _FIELD_FLAGS
        if getattr(args, dest) is not None
    }
    return dataclasses.replace(base, **overrides)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            if args.preset is not None:
                base, axis, values = preset(args.preset)
                sc = _resolve_scenario(args, base)
                records = sweep(sc, axis, values)
                for rec in records:
                    print(rec.files["run"])
            else:
                sc = _resolve_scenario(args, Scenario())
                rec = run_scenario(sc)
                print(rec.files["run"])
                if not rec.dt_convergence["converged"]:
                    print(
                        f"warning: dt-halving convergence estimate "
                        f"{rec.dt_convergence['estimated_halving_change']:.2e} "
                        f"exceeds target; consider a smaller --dt",
                        file=sys.stderr,
                    )
        else:
            sc = _resolve_scenario(args, Scenario())
            try:
                values = [float(x) for x in args.values.split(",") if x.strip()]
            except ValueError as exc:
                raise ValueError(f"bad --values list '{args.values}': {exc}") from exc
            if not values:
                raise ValueError("--values must contain at least one number")
            records = sweep(sc, args.axis, values)
            for rec in records:
                print(rec.files["run"])
    except (ValueError, json.JSONDecodeError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, FloatingPointError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
