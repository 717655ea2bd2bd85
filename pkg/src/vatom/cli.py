"""Command-line front end: simulations, comparisons, steady states, sweeps.

All commands read parameters from an optional key=value config file plus
per-parameter override flags, and write CSV only; plotting is left to
external tools. Numeric output is in units of gamma_c (rates) and
1/gamma_c (times), as stated in every file header.

Exit codes: 0 success, 1 runtime or integration failure, 2 bad
configuration or parameter domain.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .bare import integrate_bare
from .density import (BARE, DRESSED, BasisMismatchError, DensityMatrix,
                      StateValidationError, Trajectory)
from .dressed import dressed_steady_state, integrate_dressed
from .integrate import DegenerateSteadyStateError, IntegrationError, StepControl
from .params import ConfigError, SystemParams, derive_rates, params_from_config
from .regimes import analytic_gain_conditions, classify_steady_state, sweep_regimes
from .secular import (coherence_transient, fit_mode_constants,
                      improved_population_transient, population_transient)
from .spectral import dominant_angular_frequency
from .transform import build_dressed_basis, to_bare, to_dressed

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_CONFIG = 2

OUT_DIR_ENV = "VATOM_OUT_DIR"


def _tol_pair(text: str) -> tuple[float, float]:
    try:
        abs_s, rel_s = text.split(",")
        return float(abs_s), float(rel_s)
    except ValueError:
        raise argparse.ArgumentTypeError("expected --tol ABS,REL (e.g. 1e-10,1e-8)")


def _axis_spec(text: str) -> tuple[str, np.ndarray]:
    """Parse NAME=START:STOP:N into (name, grid)."""
    try:
        name, _, rng = text.partition("=")
        start_s, stop_s, n_s = rng.split(":")
        name = name.strip()
        n = int(n_s)
        if not name or n < 1:
            raise ValueError
        return name, np.linspace(float(start_s), float(stop_s), n)
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected NAME=START:STOP:N (e.g. lambda_pump=0:5:26)")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key = value parameter file")
    common.add_argument("--out", metavar="PATH", help="output file path")
    common.add_argument("--fixed-step", type=float, metavar="DT",
                        help="fixed RK4 step for bit-reproducible output")
    common.add_argument("--tol", type=_tol_pair, metavar="ABS,REL",
                        default=(1e-10, 1e-8), help="adaptive tolerances (default 1e-10,1e-8)")
    for flag, key in (("--omega", "omega"), ("--g-probe", "g_probe"),
                      ("--delta1", "delta1"), ("--delta2", "delta2"),
                      ("--gamma-b", "gamma_b"), ("--gamma-c", "gamma_c"),
                      ("--lambda-pump", "lambda_pump")):
        common.add_argument(flag, dest=key, type=float, default=None,
                            help=f"override {key}")

    parser = argparse.ArgumentParser(
        prog="vatom",
        description="Driven three-level V-system simulator (units: gamma_c = 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", parents=[common],
                           help="integrate the equations of motion and write a trajectory CSV")
    p_sim.add_argument("--basis", choices=(BARE, DRESSED), default=DRESSED)
    p_sim.add_argument("--t-end", type=float, default=30.0)
    p_sim.add_argument("--samples", type=int, default=601)

    p_cmp = sub.add_parser("compare", parents=[common],
                           help="exact integration vs closed-form approximations")
    p_cmp.add_argument("--target", choices=("fig3", "fig4", "fig5"), required=True,
                       help="fig3: populations; fig4: coherences; fig5: improved transient")
    p_cmp.add_argument("--t-end", type=float, default=30.0)

    sub.add_parser("steady", parents=[common],
                   help="exact steady state and transition regime table")

    p_swp = sub.add_parser("sweep", parents=[common],
                           help="two-parameter regime map")
    p_swp.add_argument("--axis1", type=_axis_spec, required=True, metavar="NAME=START:STOP:N")
    p_swp.add_argument("--axis2", type=_axis_spec, required=True, metavar="NAME=START:STOP:N")
    p_swp.add_argument("--source", choices=("numeric", "analytic"), default="numeric")

    sub.add_parser("conditions", parents=[common],
                   help="evaluate the analytic gain conditions")
    return parser


def _params(args) -> SystemParams:
    return params_from_config(
        args.config,
        omega=args.omega, g_probe=args.g_probe,
        delta1=args.delta1, delta2=args.delta2,
        gamma_b=args.gamma_b, gamma_c=args.gamma_c,
        lambda_pump=args.lambda_pump)


def _ctrl(args) -> StepControl:
    atol, rtol = args.tol
    return StepControl(atol=atol, rtol=rtol, fixed_dt=args.fixed_step)


def _out_path(args, default_name: str) -> Path:
    if args.out:
        return Path(args.out)
    return Path(os.environ.get(OUT_DIR_ENV, ".")) / default_name


def _initial_states(p: SystemParams) -> tuple[DensityMatrix, DensityMatrix]:
    """Default initial condition: atom in the bare ground state."""
    rho_bare = DensityMatrix.ground_state()
    return rho_bare, to_dressed(rho_bare, build_dressed_basis(p))


def _write_csv(path: Path, header_comment: str, columns: list[str],
               rows: np.ndarray) -> None:
    lines = ["# " + header_comment + "; times in 1/gamma_c, rates in gamma_c",
             ",".join(columns)]
    for row in rows:
        lines.append(",".join(f"{x:.12e}" for x in row))
    path.write_text("\n".join(lines) + "\n")


def cmd_simulate(args) -> int:
    p = _params(args)
    ctrl = _ctrl(args)
    if args.basis == BARE:
        traj = integrate_bare(DensityMatrix.ground_state(), p, args.t_end,
                              ctrl, args.samples)
    else:
        _, rho0 = _initial_states(p)
        traj = integrate_dressed(rho0, derive_rates(p), args.t_end,
                                 ctrl, args.samples, params=p)
    path = _out_path(args, f"trajectory_{args.basis}.csv")
    traj.to_csv(path)
    pops = traj.final_state.populations
    print(f"wrote {path}")
    print(f"final populations ({args.basis}): "
          + ", ".join(f"{x:.6f}" for x in pops))
    print(f"trace drift: {traj.trace_drift:.3e}")
    return EXIT_OK


def _compare_fig3(p, traj: Trajectory, rates) -> tuple[list[str], np.ndarray, list[str]]:
    t = traj.times
    exact = np.stack([traj.states[:, k, k].real for k in range(3)], axis=1)
    diag0 = traj.states[0].diagonal().real
    approx = np.stack(population_transient(t, diag0, rates), axis=1)
    rows = np.column_stack([t, exact, approx, exact - approx])
    cols = (["t"]
            + [f"exact_rho_{n}_{n}" for n in ("alpha", "beta", "gamma")]
            + [f"approx_rho_{n}_{n}" for n in ("alpha", "beta", "gamma")]
            + [f"diff_rho_{n}_{n}" for n in ("alpha", "beta", "gamma")])
    summary = [f"max |exact - approx| rho_{n}{n}: {np.abs(exact[:, k] - approx[:, k]).max():.4e}"
               for k, n in enumerate(("alpha", "beta", "gamma"))]
    return cols, rows, summary


def _compare_fig4(p, traj: Trajectory, rates) -> tuple[list[str], np.ndarray, list[str]]:
    t = traj.times
    exact_ab = traj.element(0, 1)
    exact_bg = traj.element(1, 2)
    constants = fit_mode_constants(traj.state(0), rates)
    approx_ab, _, approx_bg = coherence_transient(t, constants, rates)
    rows = np.column_stack([
        t,
        exact_ab.real, exact_ab.imag, approx_ab.real, approx_ab.imag,
        (exact_ab - approx_ab).real, (exact_ab - approx_ab).imag,
        exact_bg.real, exact_bg.imag, approx_bg.real, approx_bg.imag,
        (exact_bg - approx_bg).real, (exact_bg - approx_bg).imag,
    ])
    cols = (["t"]
            + [f"{p_}_{k}_alpha_beta" for k in ("exact", "approx", "diff") for p_ in ("re", "im")]
            + [f"{p_}_{k}_beta_gamma" for k in ("exact", "approx", "diff") for p_ in ("re", "im")])
    steady = dressed_steady_state(rates).matrix
    w_ab = dominant_angular_frequency(t, exact_ab, subtract=steady[0, 1])
    w_bg = dominant_angular_frequency(t, exact_bg, subtract=steady[1, 2])
    ratio = abs(steady[1, 2]) / abs(steady[0, 1]) if abs(steady[0, 1]) > 0 else float("inf")
    summary = [
        f"reference frequencies: R = {rates.r:.6g}, 2R = {2 * rates.r:.6g}",
        f"dominant |omega| of rho_alpha_beta: {w_ab:.6g}",
        f"dominant |omega| of rho_beta_gamma: {w_bg:.6g}",
        f"steady |rho_beta_gamma| / |rho_alpha_beta|: {ratio:.4g}",
    ]
    return cols, rows, summary


def _compare_fig5(p, traj: Trajectory, rates) -> tuple[list[str], np.ndarray, list[str]]:
    t = traj.times
    exact = traj.states[:, 0, 0].real
    diag0 = traj.states[0].diagonal().real
    plain = population_transient(t, diag0, rates)[0]
    improved = improved_population_transient(t, traj.state(0), rates)[0]
    rows = np.column_stack([t, exact, plain, improved, exact - plain, exact - improved])
    cols = ["t", "exact_rho_alpha_alpha", "secular_rho_alpha_alpha",
            "improved_rho_alpha_alpha", "diff_secular", "diff_improved"]
    err_plain = np.abs(exact - plain).max()
    err_improved = np.abs(exact - improved).max()
    summary = [f"max |exact - secular|: {err_plain:.4e}",
               f"max |exact - improved|: {err_improved:.4e}",
               f"improved is {'better' if err_improved < err_plain else 'NOT better'}"]
    return cols, rows, summary


def cmd_compare(args) -> int:
    p = _params(args)
    rates = derive_rates(p)
    _, rho0 = _initial_states(p)
    n_samples = 2048 if args.target == "fig4" else 601
    traj = integrate_dressed(rho0, rates, args.t_end, _ctrl(args), n_samples, params=p)
    builder = {"fig3": _compare_fig3, "fig4": _compare_fig4, "fig5": _compare_fig5}[args.target]
    cols, rows, summary = builder(p, traj, rates)
    path = _out_path(args, f"compare_{args.target}.csv")
    _write_csv(path, f"exact vs closed-form comparison, target={args.target}", cols, rows)
    print(f"wrote {path}")
    for line in summary:
        print(line)
    return EXIT_OK


def cmd_steady(args) -> int:
    p = _params(args)
    rates = derive_rates(p)
    rho_d = dressed_steady_state(rates)
    rho_b = to_bare(rho_d, build_dressed_basis(p))
    reports = classify_steady_state(rho_d, rho_b)
    print("dressed steady populations: "
          + ", ".join(f"rho_{n}_{n} = {v:.6f}" for n, v in
                      zip(("alpha", "beta", "gamma"), rho_d.populations)))
    print("bare steady populations:    "
          + ", ".join(f"rho_{n}{n} = {v:.6f}" for n, v in
                      zip(("a", "b", "c"), rho_b.populations)))
    print(f"{'transition':<14}{'sideband':<12}{'Im coherence':>16}{'pop diff':>14}  regime")
    for r in reports:
        print(f"{r.transition:<14}{r.sideband:<12}{r.im_coherence:>16.6e}"
              f"{r.pop_difference:>14.6e}  {r.regime}")
    if args.out:
        lines = ["# steady-state transition classification; rates in gamma_c",
                 "transition,sideband,regime,im_coherence,pop_difference"]
        for r in reports:
            lines.append(f"{r.transition},{r.sideband},{r.regime},"
                         f"{r.im_coherence:.12e},{r.pop_difference:.12e}")
        Path(args.out).write_text("\n".join(lines) + "\n")
        print(f"wrote {args.out}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    p = _params(args)
    regime_map = sweep_regimes(p, args.axis1, args.axis2, source=args.source)
    path = _out_path(args, "regime_map.csv")
    regime_map.to_csv(path)
    n_cells = args.axis1[1].size * args.axis2[1].size
    print(f"wrote {path} ({n_cells} cells, {len(regime_map.errors)} errors)")
    return EXIT_OK


def cmd_conditions(args) -> int:
    p = _params(args)
    report = analytic_gain_conditions(p)
    print(report)
    payload = json.dumps(report.to_dict(), indent=2)
    print(payload)
    if args.out:
        Path(args.out).write_text(payload + "\n")
        print(f"wrote {args.out}")
    return EXIT_OK


_COMMANDS = {
    "simulate": cmd_simulate,
    "compare": cmd_compare,
    "steady": cmd_steady,
    "sweep": cmd_sweep,
    "conditions": cmd_conditions,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ConfigError, StateValidationError, BasisMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (IntegrationError, DegenerateSteadyStateError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
