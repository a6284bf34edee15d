"""Command-line interface.

Subcommands read a JSON state file (path argument, or '-' / omitted for
stdin) and write JSON or CSV to stdout; diagnostics go to stderr.

Exit status: 0 success, 1 validation error (bad input or state schema),
2 numerical failure (degenerate spectrum, finite-difference step leaving
the domain), 3 verification-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .core import (
    ActionAnglePoint,
    NumericConfig,
    NumericalError,
    PhaseSpacePoint,
    ValidationError,
    parse_state,
    state_to_dict,
)
from .duality import backward_map, forward_map
from .dynamics import evolve, scattering_data
from .lax import build_dual, build_lax, momentum_map_residual
from .poisson import verification_sweep
from .spectral import sklyanin_coordinates, theorem_residual

__all__ = ["main"]


class _UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors, which this interface
    # reserves for numerical failures; remap to a validation error.
    def error(self, message):
        raise _UsageError(message)


def _read_state(path):
    if path in (None, "-"):
        text = sys.stdin.read()
        source = "stdin"
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValidationError(f"cannot read state file: {exc}") from exc
        source = path
    try:
        return parse_state(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"malformed JSON in {source}: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from exc


def _require_phase_point(state, command):
    if not isinstance(state, PhaseSpacePoint):
        raise ValidationError(f"'{command}' expects a (q, p) state, got a (lambda, phi) state")
    return state


def _complex_matrix(m):
    return [[[float(entry.real), float(entry.imag)] for entry in row] for row in np.asarray(m)]


def _emit(payload):
    json.dump(payload, sys.stdout)
    sys.stdout.write("\n")


def _cmd_lax(args, config):
    state = _read_state(args.state)
    pair = build_lax(state) if isinstance(state, PhaseSpacePoint) else build_dual(state)
    _emit(
        {
            "gauge": pair.gauge.value,
            "n": pair.n,
            "g": pair.g,
            "x_like": _complex_matrix(pair.x_like),
            "p_like": _complex_matrix(pair.p_like),
            "momentum_map_residual": momentum_map_residual(pair),
        }
    )
    return 0


def _identity_check_grid(lam, count):
    """Deterministic complex evaluation points on a ring around the spectrum."""
    center = float(np.mean(lam))
    radius = 0.5 * float(lam[0] - lam[-1]) + 1.0
    angles = 2.0 * np.pi * np.arange(count) / count
    return center + radius * np.exp(1j * angles)


def _cmd_spectral(args, config):
    state = _require_phase_point(_read_state(args.state), "spectral")
    sc = sklyanin_coordinates(state, config)
    grid = _identity_check_grid(sc.lam, args.z_samples)
    residual_max = max(theorem_residual(state, z, config) for z in grid)
    _emit(
        {
            "lambda": sc.lam.tolist(),
            "mu": sc.mu.tolist(),
            "theta": [[float(t.real), float(t.imag)] for t in sc.theta],
            "f_im": sc.f_im.tolist(),
            "theorem_residual_max": residual_max,
        }
    )
    return 0


def _cmd_map(args, config):
    state = _read_state(args.state)
    if isinstance(state, PhaseSpacePoint):
        out = forward_map(state, config)
    else:
        out = backward_map(state, config)
    _emit(state_to_dict(out))
    return 0


def _cmd_evolve(args, config):
    state = _require_phase_point(_read_state(args.state), "evolve")
    if args.samples < 1:
        raise ValidationError("--samples must be >= 1")
    fmt = args.format
    if fmt == "auto":
        fmt = "state" if args.samples == 1 else "csv"
    times = [args.t] if args.samples == 1 else np.linspace(0.0, args.t, args.samples).tolist()
    points = [evolve(state, t, k=args.k, config=config) for t in times]
    if fmt == "state":
        _emit(state_to_dict(points[-1]))
    elif fmt == "csv":
        n = state.n
        header = ["t"] + [f"q_{j + 1}" for j in range(n)] + [f"p_{j + 1}" for j in range(n)]
        sys.stdout.write(",".join(header) + "\n")
        for t, pt in zip(times, points):
            row = [repr(float(t))] + [repr(v) for v in pt.q.tolist() + pt.p.tolist()]
            sys.stdout.write(",".join(row) + "\n")
    else:
        _emit(
            {
                "k": args.k,
                "trajectory": [
                    {"t": float(t), "q": pt.q.tolist(), "p": pt.p.tolist()}
                    for t, pt in zip(times, points)
                ],
            }
        )
    return 0


def _cmd_scatter(args, config):
    state = _require_phase_point(_read_state(args.state), "scatter")
    momenta, offsets = scattering_data(state, args.t_large, config)
    _emit(
        {
            "t_large": args.t_large,
            "momenta": momenta.tolist(),
            "offsets": offsets.tolist(),
        }
    )
    return 0


def _cmd_verify(args, config):
    report = verification_sweep(
        seed=args.seed,
        trials=args.trials,
        n=args.n,
        g_range=args.g_range,
        mode=args.mode,
        min_gap=args.min_gap,
        tol=args.tol,
        config=config,
    )
    _emit(report)
    if not report["pass"]:
        print(
            f"verification failed: max deviation {report['max_deviation']:.3e} "
            f"exceeds tolerance {args.tol:.3e}",
            file=sys.stderr,
        )
        return 3
    return 0


def _add_state_argument(parser):
    parser.add_argument(
        "state",
        nargs="?",
        default=None,
        help="path to a JSON state file; '-' or omitted reads stdin",
    )


def _build_parser():
    parser = _Parser(
        prog="calogero",
        description="Spectral toolkit for the rational Calogero-Moser system.",
    )
    parser.add_argument("--eig-gap-tol", type=float, default=None, help="relative eigenvalue gap floor")
    parser.add_argument("--fd-step", type=float, default=None, help="finite-difference step scale")
    parser.add_argument("--identity-tol", type=float, default=None, help="identity residual tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    p_lax = sub.add_parser("lax", help="dump the Lax pair of a state as [re, im] matrices")
    _add_state_argument(p_lax)
    p_lax.set_defaults(handler=_cmd_lax)

    p_spec = sub.add_parser("spectral", help="spectral coordinates and identity residual of a (q, p) state")
    _add_state_argument(p_spec)
    p_spec.add_argument("--z-samples", type=int, default=20, help="evaluation points for the residual check")
    p_spec.set_defaults(handler=_cmd_spectral)

    p_map = sub.add_parser("map", help="apply the duality map; emits the state of the other kind")
    _add_state_argument(p_map)
    p_map.set_defaults(handler=_cmd_map)

    p_evolve = sub.add_parser("evolve", help="evolve a (q, p) state under the H_k flow")
    _add_state_argument(p_evolve)
    p_evolve.add_argument("--t", type=float, required=True, help="evolution time")
    p_evolve.add_argument("--k", type=int, default=2, help="flow index (1..n)")
    p_evolve.add_argument("--samples", type=int, default=1, help="number of output times in [0, t]")
    p_evolve.add_argument(
        "--format",
        choices=("auto", "state", "csv", "json"),
        default="auto",
        help="auto: state for a single sample, CSV for a trajectory",
    )
    p_evolve.set_defaults(handler=_cmd_evolve)

    p_scatter = sub.add_parser("scatter", help="finite-time scattering momenta and offsets")
    _add_state_argument(p_scatter)
    p_scatter.add_argument("--t-large", type=float, default=1e4, help="probe time")
    p_scatter.set_defaults(handler=_cmd_scatter)

    p_verify = sub.add_parser("verify", help="canonical-bracket verification sweep")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--n", type=int, default=4, help="particles per trial")
    p_verify.add_argument("--g-range", type=float, default=3.0, help="coupling drawn from [-g, g]")
    p_verify.add_argument("--min-gap", type=float, default=0.5, help="minimum position gap of trial points")
    p_verify.add_argument("--mode", choices=("fast", "extrapolated"), default="extrapolated")
    p_verify.add_argument("--tol", type=float, default=1e-5, help="per-trial max deviation tolerance")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def _config_from_args(args):
    defaults = NumericConfig()
    return NumericConfig(
        eig_gap_tol=args.eig_gap_tol if args.eig_gap_tol is not None else defaults.eig_gap_tol,
        fd_step=args.fd_step if args.fd_step is not None else defaults.fd_step,
        identity_tol=args.identity_tol if args.identity_tol is not None else defaults.identity_tol,
    )


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        return args.handler(args, config)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
