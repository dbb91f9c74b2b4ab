"""Command-line front end: steady states, spectra, figure data, self checks.

Exit codes: 0 success, 1 check failure, 2 usage error. CSV output uses a
single header row, 12-significant-digit floats and the literal ``NaN``
for failed points; JSON carries the same rounded values.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .dynamics import (
    DensityMatrix,
    analytic_steady_state,
    build_liouvillian,
    lamb_dicke_limit_state,
    propagate,
    restrict_triplet,
    solve_steady_state,
    triplet_steady_state,
    vec,
)
from .entanglement import (
    admixture_concurrence,
    argmax_concurrence,
    closed_form_concurrence,
    eof_from_concurrence,
    singlet_projector,
    wootters_concurrence,
)
from .errors import DipolePairError
from .linalg import BasisTag, general_eig, hermitian_eig
from .model import (
    AtomPairConfig,
    Couplings,
    DriveScaling,
    build_effective_hamiltonian,
    cross_decay,
    dipole_coupling,
    k0r_for_tau,
)
from .spectral import pure_concurrence, triplet_cubic_roots

TAU_PEAK = 2.0 + 2.0 * math.sqrt(13.0)
C_PEAK = 2.0 / (math.sqrt(13.0) + 1.0)

AXIS_NAMES = ("k0r", "efield", "omega", "delta", "tau")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- formatting


def _fmt(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "NaN"
    return f"{x:.12g}"


def _round12(x: float) -> float:
    if isinstance(x, float) and math.isnan(x):
        return x
    return float(f"{x:.12g}")


def _write_rows(columns, rows, fmt: str, out) -> None:
    rows = [[_round12(float(v)) for v in row] for row in rows]
    if fmt == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        out.write(json.dumps(payload, indent=1))
        out.write("\n")
    else:
        out.write(",".join(columns) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v) for v in row) + "\n")


def _open_out(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w"), True


def _print_matrix(m: np.ndarray, labels, out) -> None:
    width = 22
    out.write(" " * 6 + "".join(f"{lab:>{width}}" for lab in labels) + "\n")
    for lab, row in zip(labels, m):
        cells = "".join(f"{v.real:+.6f}{v.imag:+.6f}j".rjust(width) for v in row)
        out.write(f"{lab:>6}{cells}\n")


# ---------------------------------------------------------------- arguments


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--delta", type=float, default=None, help="detuning / gamma")
    common.add_argument("--efield", type=float, default=None, help="drive / gamma")
    common.add_argument("--omega", type=float, default=None, help="dipole coupling / gamma")
    common.add_argument("--gamma12", type=float, default=None, help="cross decay / gamma")
    common.add_argument("--k0r", type=float, default=None, help="dimensionless distance")
    common.add_argument(
        "--mu-dot-rhat", type=float, default=None, dest="mu_dot_rhat",
        help="dipole projection on the axis, in [0, 1]",
    )
    common.add_argument("--tau", type=float, default=None, help="omega / efield^2")
    common.add_argument(
        "--lamb-dicke", action="store_const", const=True, default=None,
        dest="lamb_dicke", help="force gamma12 = gamma and delta = 0",
    )
    common.add_argument("--format", choices=("text", "csv", "json"), default=None)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--config", default=None, help="key=value defaults file")

    parser = argparse.ArgumentParser(
        prog="dipolepair",
        description="Steady-state entanglement of two dipole-coupled driven atoms",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("steady", parents=[common],
                   help="steady state at one parameter point")
    sub.add_parser("spectrum", parents=[common],
                   help="eigenvalues of the Hamiltonian and its damped counterpart")
    fig1 = sub.add_parser("fig1", parents=[common],
                          help="distance giving maximal entanglement vs photon number")
    fig1.add_argument("--q", type=float, default=None, help="atomic quality factor")
    fig1.add_argument("--nbar-min", type=float, default=None, dest="nbar_min")
    fig1.add_argument("--nbar-max", type=float, default=None, dest="nbar_max")
    fig1.add_argument("--points", type=int, default=None)
    fig2 = sub.add_parser("fig2", parents=[common],
                          help="concurrence over a distance x drive grid")
    fig2.add_argument("--k0r-range", default=None, dest="k0r_range", help="START:STOP")
    fig2.add_argument("--efield-range", default=None, dest="efield_range",
                      help="START:STOP")
    fig2.add_argument("--points", type=int, default=None, help="points per axis")
    sweep = sub.add_parser("sweep", parents=[common],
                           help="general one- or two-axis parameter sweep")
    sweep.add_argument("--axis", action="append", default=None,
                       help="NAME=START:STOP:COUNT (repeat for a second axis)")
    sweep.add_argument("--mode", choices=("geometric", "direct"), default=None)
    sub.add_parser("check", parents=[common], help="run the numeric self checks")
    return parser


def _load_config(path: str) -> dict:
    values = {}
    try:
        with open(path) as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"bad config line: {raw.strip()!r}")
                key, text = (part.strip() for part in line.split("=", 1))
                key = key.replace("-", "_")
                if text.lower() in ("true", "false"):
                    values[key] = text.lower() == "true"
                else:
                    try:
                        values[key] = float(text)
                    except ValueError:
                        values[key] = text
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    return values


def _resolve(ns, config: dict, key: str, fallback):
    value = getattr(ns, key, None)
    if value is None:
        value = config.get(key, fallback)
    return value


# ---------------------------------------------------------------- parameters


def _point_parameters(ns, config):
    """Shared flag resolution for steady/spectrum: one parameter point."""
    delta = float(_resolve(ns, config, "delta", 0.0))
    mu = float(_resolve(ns, config, "mu_dot_rhat", 0.0))
    efield = _resolve(ns, config, "efield", None)
    omega = _resolve(ns, config, "omega", None)
    gamma12 = _resolve(ns, config, "gamma12", None)
    k0r = _resolve(ns, config, "k0r", None)
    tau = _resolve(ns, config, "tau", None)
    lamb_dicke = bool(_resolve(ns, config, "lamb_dicke", False))
    if efield is not None and efield < 0:
        raise UsageError("drive must be >= 0")
    if lamb_dicke:
        delta = 0.0
    return delta, mu, efield, omega, gamma12, k0r, tau, lamb_dicke


def _derive_couplings(omega, gamma12, k0r, mu, lamb_dicke) -> Couplings:
    if (omega is None) == (k0r is None):
        raise UsageError("supply exactly one of --k0r or --omega")
    if k0r is not None:
        if omega is not None or gamma12 is not None:
            raise UsageError("--k0r conflicts with --omega/--gamma12")
        omega = dipole_coupling(k0r, mu)
        gamma12 = 1.0 if lamb_dicke else cross_decay(k0r)
    else:
        if gamma12 is None:
            gamma12 = 1.0 if lamb_dicke else 0.0
    if lamb_dicke:
        gamma12 = 1.0
    return Couplings(omega=float(omega), gamma12=float(gamma12))


# ---------------------------------------------------------------- commands


def _cmd_steady(ns, config) -> int:
    delta, mu, efield, omega, gamma12, k0r, tau, lamb_dicke = _point_parameters(
        ns, config
    )
    fmt = _resolve(ns, config, "format", "text")
    if lamb_dicke and tau is not None:
        state = lamb_dicke_limit_state(float(tau))
        inputs = {"tau": float(tau), "delta": 0.0, "gamma12": 1.0}
    else:
        if efield is None:
            raise UsageError("supply --efield (or --tau with --lamb-dicke)")
        couplings = _derive_couplings(omega, gamma12, k0r, mu, lamb_dicke)
        inputs = {
            "delta": delta,
            "efield": float(efield),
            "omega": couplings.omega,
            "gamma12": couplings.gamma12,
        }
        if k0r is not None:
            inputs["k0r"] = float(k0r)
        if lamb_dicke:
            state = analytic_steady_state(couplings.omega, float(efield))
        else:
            cfg = AtomPairConfig(
                delta=delta, drive=float(efield),
                k0r=float(k0r) if k0r is not None else 1.0, mu_dot_rhat=mu,
            )
            state = solve_steady_state(cfg, couplings)
    coupled = state.to_basis(BasisTag.COUPLED)
    report = wootters_concurrence(state)
    evals, _ = hermitian_eig(coupled.matrix)
    pops = coupled.matrix.diagonal().real
    out, close = _open_out(_resolve(ns, config, "out", None))
    try:
        if fmt == "json":
            payload = dict(inputs)
            payload.update(
                {
                    "populations": [_round12(p) for p in pops],
                    "eigenvalues": [_round12(v) for v in evals],
                    "concurrence": _round12(report.concurrence),
                    "eof": _round12(report.eof),
                    "matrix_re": [[_round12(v.real) for v in row] for row in coupled.matrix],
                    "matrix_im": [[_round12(v.imag) for v in row] for row in coupled.matrix],
                }
            )
            out.write(json.dumps(payload, indent=1) + "\n")
        elif fmt == "csv":
            cols = list(inputs) + ["pop_plus1", "pop_zero", "pop_minus1",
                                   "singlet_weight", "concurrence", "eof"]
            row = list(inputs.values()) + list(pops) + [report.concurrence, report.eof]
            _write_rows(cols, [row], "csv", out)
        else:
            for key, val in inputs.items():
                out.write(f"{key} = {_fmt(float(val))}\n")
            out.write("steady state (basis |+1>, |0>, |-1>, |A>):\n")
            _print_matrix(coupled.matrix, ("|+1>", "|0>", "|-1>", "|A>"), out)
            out.write("eigenvalues: " + "  ".join(_fmt(v) for v in evals) + "\n")
            out.write(
                "populations: "
                + "  ".join(f"{lab}={_fmt(p)}" for lab, p in
                            zip(("+1", "0", "-1", "A"), pops))
                + "\n"
            )
            out.write(f"concurrence = {_fmt(report.concurrence)}\n")
            out.write(f"entanglement of formation = {_fmt(report.eof)} ebit\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_spectrum(ns, config) -> int:
    delta, mu, efield, omega, gamma12, k0r, _tau, lamb_dicke = _point_parameters(
        ns, config
    )
    efield = 0.0 if efield is None else float(efield)
    couplings = _derive_couplings(omega, gamma12, k0r, mu, lamb_dicke)
    cfg = AtomPairConfig(
        delta=delta, drive=efield,
        k0r=float(k0r) if k0r is not None else 1.0, mu_dot_rhat=mu,
    )
    roots = triplet_cubic_roots(delta, couplings.omega, efield)
    heff = build_effective_hamiltonian(cfg, couplings)
    heff_evals = general_eig(heff)
    fmt = _resolve(ns, config, "format", "text")
    out, close = _open_out(_resolve(ns, config, "out", None))
    try:
        rows = [("triplet", float(r), float("nan")) for r in roots]
        rows.append(("singlet", -couplings.omega, cfg.gamma - couplings.gamma12))
        rows += [("damped", v.real, -2.0 * v.imag) for v in heff_evals]
        if fmt == "json":
            payload = [
                {"branch": b, "energy": _round12(e), "decay": _round12(d)}
                for b, e, d in rows
            ]
            out.write(json.dumps(payload, indent=1) + "\n")
        elif fmt == "csv":
            out.write("branch,energy,decay\n")
            for b, e, d in rows:
                out.write(f"{b},{_fmt(e)},{_fmt(d)}\n")
        else:
            out.write(f"triplet eigenvalues: {'  '.join(_fmt(float(r)) for r in roots)}\n")
            out.write(
                f"singlet eigenvalue:  {_fmt(-couplings.omega)}"
                f"  (decay {_fmt(cfg.gamma - couplings.gamma12)})\n"
            )
            out.write("damped spectrum (energy, decay rate):\n")
            for v in heff_evals:
                out.write(f"  {_fmt(v.real):>18}  {_fmt(-2.0 * v.imag):>18}\n")
    finally:
        if close:
            out.close()
    return 0


def _cmd_fig1(ns, config) -> int:
    q = float(_resolve(ns, config, "q", 1e6))
    tau = float(_resolve(ns, config, "tau", TAU_PEAK))
    nbar_min = float(_resolve(ns, config, "nbar_min", 1.0))
    nbar_max = float(_resolve(ns, config, "nbar_max", 1e4))
    points = int(_resolve(ns, config, "points", 50))
    try:
        DriveScaling(tau=tau, q_factor=q, nbar_v=nbar_min)
    except DipolePairError as exc:
        raise UsageError(str(exc)) from exc
    if points < 2:
        raise UsageError("--points must be >= 2")
    if nbar_min >= nbar_max:
        raise UsageError("--nbar-min must be below --nbar-max")
    grid = np.logspace(math.log10(nbar_min), math.log10(nbar_max), points)
    rows = [(nv, k0r_for_tau(tau, q, nv)) for nv in grid]
    fmt = _resolve(ns, config, "format", "csv")
    out, close = _open_out(_resolve(ns, config, "out", None))
    try:
        _write_rows(("nbar_v", "k0r"), rows, fmt, out)
    finally:
        if close:
            out.close()
    return 0


def _parse_range(text: str, flag: str) -> tuple[float, float]:
    try:
        lo, hi = (float(p) for p in text.split(":"))
    except ValueError as exc:
        raise UsageError(f"{flag} expects START:STOP, got {text!r}") from exc
    if not lo < hi:
        raise UsageError(f"{flag}: start must be below stop")
    return lo, hi


def _cmd_fig2(ns, config) -> int:
    k0r_lo, k0r_hi = _parse_range(
        str(_resolve(ns, config, "k0r_range", "0.05:2.0")), "--k0r-range"
    )
    e_lo, e_hi = _parse_range(
        str(_resolve(ns, config, "efield_range", "0.0:10.0")), "--efield-range"
    )
    points = int(_resolve(ns, config, "points", 20))
    delta = float(_resolve(ns, config, "delta", 0.0))
    mu = float(_resolve(ns, config, "mu_dot_rhat", 0.0))
    if points < 2:
        raise UsageError("--points must be >= 2")
    if k0r_lo <= 0:
        raise UsageError("--k0r-range must be positive")
    if e_lo < 0:
        raise UsageError("drive must be >= 0")
    k0rs = np.linspace(k0r_lo, k0r_hi, points)
    efields = np.linspace(e_lo, e_hi, points)
    rows = []
    failures = 0
    for x in k0rs:
        omega = dipole_coupling(float(x), mu)
        gamma12 = cross_decay(float(x))
        for e in efields:
            try:
                cfg = AtomPairConfig(delta=delta, drive=float(e), k0r=float(x),
                                     mu_dot_rhat=mu)
                state = solve_steady_state(cfg, Couplings(omega, gamma12))
                conc = wootters_concurrence(state).concurrence
            except (DipolePairError, np.linalg.LinAlgError):
                conc = float("nan")
                failures += 1
            rows.append((float(x), float(e), omega, gamma12, conc))
    if failures:
        print(f"warning: {failures} grid point(s) failed, recorded as NaN",
              file=sys.stderr)
    if failures == len(rows):
        return 1
    fmt = _resolve(ns, config, "format", "csv")
    out, close = _open_out(_resolve(ns, config, "out", None))
    try:
        _write_rows(("k0r", "efield", "omega", "gamma12", "concurrence"),
                    rows, fmt, out)
    finally:
        if close:
            out.close()
    return 0


def _parse_axis(text: str):
    if "=" not in text:
        raise UsageError(f"--axis expects NAME=START:STOP:COUNT, got {text!r}")
    name, rest = text.split("=", 1)
    name = name.strip().replace("-", "_")
    if name == "drive":
        name = "efield"
    if name not in AXIS_NAMES:
        raise UsageError(f"unknown axis {name!r}; choose from {AXIS_NAMES}")
    parts = rest.split(":")
    if len(parts) != 3:
        raise UsageError(f"--axis expects NAME=START:STOP:COUNT, got {text!r}")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad axis numbers in {text!r}") from exc
    if count < 2:
        raise UsageError("axis count must be >= 2")
    if not start < stop:
        raise UsageError("axis start must be below stop")
    return name, np.linspace(start, stop, count)


def _sweep_point(params: dict, mode: str, mu: float):
    """One sweep evaluation; returns (populations, singlet, concurrence, eof)."""
    delta = params.get("delta", 0.0)
    efield = params.get("efield")
    if efield is None:
        raise UsageError("sweep needs --efield or an efield axis")
    if efield < 0:
        raise UsageError("drive must be >= 0")
    if "tau" in params:
        if delta != 0.0:
            raise UsageError("a tau axis requires delta = 0")
        omega = params["tau"] * efield**2
        state = analytic_steady_state(omega, efield).to_basis(BasisTag.COUPLED)
        params["omega"] = omega
        params["gamma12"] = 1.0
    else:
        if mode == "geometric":
            x = params.get("k0r")
            if x is None:
                raise UsageError("geometric sweep needs --k0r or a k0r axis")
            params["omega"] = dipole_coupling(x, mu)
            params["gamma12"] = cross_decay(x)
        else:
            if params.get("omega") is None:
                raise UsageError("direct sweep needs --omega or an omega axis")
            params.setdefault("gamma12", 0.0)
        cfg = AtomPairConfig(delta=delta, drive=efield,
                             k0r=params.get("k0r", 1.0), mu_dot_rhat=mu)
        state = solve_steady_state(
            cfg, Couplings(params["omega"], params["gamma12"])
        )
    report = wootters_concurrence(state)
    pops = state.matrix.diagonal().real
    return pops, report.concurrence, report.eof


def _cmd_sweep(ns, config) -> int:
    axis_specs = ns.axis or config.get("axis") or []
    if isinstance(axis_specs, str):
        axis_specs = [axis_specs]
    if not 1 <= len(axis_specs) <= 2:
        raise UsageError("supply one or two --axis options")
    axes = [_parse_axis(a) for a in axis_specs]
    names = [name for name, _ in axes]
    if len(set(names)) != len(names):
        raise UsageError("axis names must be distinct")
    fixed = {}
    for key in ("delta", "efield", "omega", "gamma12", "k0r", "tau"):
        val = _resolve(ns, config, key, None)
        if val is not None:
            if key in names:
                raise UsageError(f"{key} is an axis and cannot also be fixed")
            fixed[key] = float(val)
    mu = float(_resolve(ns, config, "mu_dot_rhat", 0.0))
    mode = _resolve(ns, config, "mode", None)
    if mode is None:
        mode = "geometric" if ("k0r" in names or "k0r" in fixed) else "direct"
    if bool(_resolve(ns, config, "lamb_dicke", False)):
        fixed["gamma12"] = 1.0
        fixed["delta"] = 0.0

    grids = [list(values) for _, values in axes]
    mesh = [(a,) for a in grids[0]] if len(axes) == 1 else [
        (a, b) for a in grids[0] for b in grids[1]
    ]
    input_cols = names + [k for k in ("k0r", "delta", "efield", "omega",
                                      "gamma12", "tau")
                          if k in fixed and k not in names]
    out_cols = ("pop_plus1", "pop_zero", "pop_minus1", "singlet_weight",
                "concurrence", "eof")
    rows = []
    for values in mesh:
        params = dict(fixed)
        params.update(dict(zip(names, (float(v) for v in values))))
        pops, conc, eof = _sweep_point(dict(params), mode, mu)
        rows.append([params[k] for k in input_cols] + list(pops) + [conc, eof])
    fmt = _resolve(ns, config, "format", "csv")
    out, close = _open_out(_resolve(ns, config, "out", None))
    try:
        _write_rows(tuple(input_cols) + out_cols, rows, fmt, out)
    finally:
        if close:
            out.close()
    return 0


# ---------------------------------------------------------------- self check


def _check_lines():
    """Run the numeric self checks; yields (name, computed, expected, tol)."""
    # exact steady state sits in the kernel of the triplet generator
    worst_res = 0.0
    worst_match = 0.0
    for omega in np.linspace(0.1, 20.0, 20):
        for efield in np.linspace(0.1, 10.0, 20):
            cfg = AtomPairConfig(delta=0.0, drive=float(efield))
            liouv = build_liouvillian(cfg, Couplings(float(omega), 1.0))
            l9 = restrict_triplet(liouv)
            exact = analytic_steady_state(float(omega), float(efield))
            worst_res = max(worst_res, float(np.abs(l9 @ vec(exact.matrix)).max()))
            numeric = triplet_steady_state(liouv)
            worst_match = max(
                worst_match, float(np.linalg.norm(numeric.matrix - exact.matrix))
            )
    yield ("kernel_residual_max", worst_res, 0.0, 1e-9)
    yield ("steady_numeric_match", worst_match, 0.0, 1e-9)

    worst = 0.0
    for tau in (2.0, 3.0, 5.0, 9.21, 20.0, 50.0):
        got = wootters_concurrence(lamb_dicke_limit_state(tau)).concurrence
        worst = max(worst, abs(got - closed_form_concurrence(tau)))
    yield ("concurrence_law_max_err", worst, 0.0, 1e-9)

    tau_star, c_star = argmax_concurrence()
    yield ("tau_at_max", tau_star, TAU_PEAK, 1e-6)
    yield ("C_max", c_star, C_PEAK, 1e-6)
    yield ("E_max", eof_from_concurrence(c_star), 0.2846, 1e-3)

    worst = 0.0
    for tau in (5.0, 9.21, 20.0):
        cfg = AtomPairConfig(delta=0.0, drive=100.0)
        liouv = build_liouvillian(cfg, Couplings(tau * 1e4, 1.0))
        got = wootters_concurrence(triplet_steady_state(liouv)).concurrence
        worst = max(worst, abs(got - closed_form_concurrence(tau)))
    yield ("strong_drive_convergence", worst, 0.0, 1e-3)

    worst = 0.0
    ground = np.diag([0.0, 0.0, 0.0, 1.0]).astype(complex)
    for omega in (0.1, 1.0, 10.0):
        for x in (0.1, 1.0, 3.0):
            cfg = AtomPairConfig(delta=0.0, drive=0.0, k0r=x)
            state = solve_steady_state(cfg, Couplings(omega, cross_decay(x)))
            comp = state.to_basis(BasisTag.COMPUTATIONAL)
            worst = max(worst, float(np.abs(comp.matrix - ground).max()))
    yield ("undriven_limit_state_err", worst, 0.0, 1e-8)

    proj = singlet_projector()
    cfg = AtomPairConfig(delta=0.2, drive=1.0)
    liouv = build_liouvillian(cfg, Couplings(2.0, 1.0))
    rho0 = DensityMatrix(
        0.4 * proj + 0.6 * ground, BasisTag.COMPUTATIONAL
    )
    _, states = propagate(liouv, rho0, 50.0, 0.01)
    weights = [s.singlet_weight() for s in states]
    drift = max(abs(w - weights[0]) for w in weights)
    yield ("singlet_conservation_drift", drift, 0.0, 1e-8)

    worst = 0.0
    for delta, omega, efield in ((0.5, 1.3, 0.8), (-1.0, 2.0, 0.1), (0.0, 5.0, 2.0)):
        roots = triplet_cubic_roots(delta, omega, efield)
        worst = max(
            worst,
            abs(roots.sum() - omega),
            abs(roots.prod() - (-(delta**2) * omega)),
            abs(
                roots[0] * roots[1] + roots[0] * roots[2] + roots[1] * roots[2]
                - (-(delta**2) - 4 * efield**2)
            ),
        )
    yield ("triplet_roots_vieta", worst, 0.0, 1e-9)

    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        mixed = wootters_concurrence(np.outer(psi, psi.conj())).concurrence
        worst = max(worst, abs(mixed - pure_concurrence(psi)))
    yield ("pure_vs_mixed_oracle", worst, 0.0, 1e-9)

    rho_s = lamb_dicke_limit_state(TAU_PEAK)
    rho_s4 = rho_s.to_basis(BasisTag.COMPUTATIONAL).matrix
    worst = 0.0
    for p in (0.0, 0.05, 0.2, 0.8):
        direct = wootters_concurrence(
            p * proj + (1.0 - p) * rho_s4
        ).concurrence
        worst = max(worst, abs(direct - admixture_concurrence(p, rho_s)))
    yield ("admixture_rule_max_err", worst, 0.0, 1e-9)


def _cmd_check(ns, config) -> int:
    out, close = _open_out(_resolve(ns, config, "out", None))
    failures = 0
    try:
        for name, computed, expected, tolerance in _check_lines():
            ok = abs(computed - expected) <= tolerance
            failures += 0 if ok else 1
            out.write(
                f"{name}: computed {computed:.4g} expected {expected:.4g} "
                f"tol {tolerance:.0e} {'PASS' if ok else 'FAIL'}\n"
            )
        out.write("all checks passed\n" if failures == 0
                  else f"{failures} check(s) failed\n")
    finally:
        if close:
            out.close()
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------- entry point


_COMMANDS = {
    "steady": _cmd_steady,
    "spectrum": _cmd_spectrum,
    "fig1": _cmd_fig1,
    "fig2": _cmd_fig2,
    "sweep": _cmd_sweep,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        config = _load_config(ns.config) if ns.config else {}
        return _COMMANDS[ns.command](ns, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DipolePairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
