"""Deterministic command-line front end producing CSV or JSON tables.

Subcommands map one-to-one onto library operation families (see
SUBCOMMAND_COVERAGE): eval samples the lattice and continuum plane waves and
cross-checks the one-step recursions, density and flux sweep the closed-form
observables, converge runs a continuum-limit schedule with fitted orders,
commutator runs the operator-identity suites, and continuity reports the
discrete continuity residual.

Identical invocations produce byte-identical output.  CSV is UTF-8 with a
mandatory header, comma separators, and LF line endings; row order is
ascending (j_x, j_t).  JSON is one object with config, rows, and summary
keys, numbers serialized so that re-parsing recovers them exactly.  Sweeps
default to rectangular arithmetic and fall back to the log-domain columns
row by row on overflow (note column says "overflow"); --log-domain switches
the whole sweep to log columns.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import random
import re
import sys
from pathlib import Path

from .commutators import (
    MOMENTUM_FORM_RTOL,
    commutator_continuum_on_plane_wave,
    commutator_qst_apply,
    momentum_form_identity_check,
    shift_identity_check,
)
from .errors import (
    AmplitudeOverflowError,
    DegenerateFitError,
    DomainError,
    UnsupportedWaveError,
    ValidationError,
)
from .lattice import LatticeFunction
from .limits import (
    DEFAULT_STEPS,
    LimitSchedule,
    WaveFamily,
    convergence_order,
    error_pairs,
    limit_error,
    monotone_from,
    observable_limit_check,
)
from .logpolar import complex_ipow
from .observables import (
    ObservableSample,
    continuity_residual,
    continuity_residual_log,
    density_continuum,
    density_qst,
    density_qst_log,
    flux_continuum,
    flux_qst_closed,
    flux_qst_closed_log,
    flux_qst_from_definition,
    predicted_continuity_residual,
)
from .operators import forward_difference, second_difference
from .params import (
    LatticePoint,
    PhysicalConstants,
    QstParams,
    WaveSpec,
    make_params,
    params_from_products,
)
from .waves import (
    QstWave,
    continuum_superposition,
    qst_plane_wave,
    qst_plane_wave_log,
    space_factor,
    step_space_recursion,
    step_time_recursion,
    time_factor,
    wave_window,
)

MAX_INDEX = 10**7
MAX_ROWS = 10**7

# Which library operations each subcommand drives; kept disjoint and total so
# every closed form, identity, and diagnostic is reachable from exactly one
# place.  The integration tests assert this map against the public API.
SUBCOMMAND_COVERAGE: dict[str, tuple[str, ...]] = {
    "eval": (
        "qst_plane_wave",
        "qst_plane_wave_log",
        "time_factor",
        "time_factor_log",
        "space_factor",
        "space_factor_log",
        "continuum_plane_wave",
        "continuum_superposition",
        "step_time_recursion",
        "step_space_recursion",
        "forward_difference",
        "second_difference",
    ),
    "density": ("density_qst", "density_qst_log", "density_continuum"),
    "flux": (
        "flux_qst_closed",
        "flux_qst_closed_log",
        "flux_qst_from_definition",
        "flux_continuum",
    ),
    "continuity": (
        "continuity_residual",
        "continuity_residual_log",
        "predicted_continuity_residual",
    ),
    "commutator": (
        "commutator_qst_apply",
        "commutator_continuum_on_plane_wave",
        "shift_identity_check",
        "momentum_form_identity_check",
        "shift",
        "momentum_apply",
        "position_apply",
    ),
    "converge": ("limit_error", "convergence_order", "observable_limit_check"),
}

_OVERFLOW_NOTE = "overflow"


class _SingleLineParser(argparse.ArgumentParser):
    """argparse variant that reports errors as one machine-parsable line."""

    def error(self, message):
        print(f"error: invalid-config: {message}", file=sys.stderr)
        raise SystemExit(2)


def _parse_range(text: str, flag: str) -> tuple[int, int]:
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not match:
        raise ValidationError(f"{flag} must look like LO..HI, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        raise ValidationError(f"{flag} range [{lo}, {hi}] is empty")
    if max(abs(lo), abs(hi)) > MAX_INDEX:
        raise ValidationError(f"{flag} indices must satisfy |j| <= {MAX_INDEX}")
    return lo, hi


def _parse_complex(text: str, flag: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError as exc:
        raise ValidationError(f"{flag} must be a complex literal like 1, -2.5, or 1+2j; got {text!r}") from exc


def _parse_steps(text: str) -> tuple[int, ...]:
    try:
        steps = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValidationError(f"--steps must be comma-separated integers, got {text!r}") from exc
    return steps


def _resolve_params(args) -> QstParams:
    dimensionless = args.k_lambda is not None or args.omega_tau is not None
    physical = any(
        getattr(args, name) is not None for name in ("hbar", "mass", "light_speed", "lam", "energy")
    )
    if dimensionless and physical:
        raise ValidationError("choose either dimensionless (--k-lambda/--omega-tau) or physical parameters, not both")
    if dimensionless:
        if args.k_lambda is None or args.omega_tau is None:
            raise ValidationError("--k-lambda and --omega-tau must be given together")
        return params_from_products(args.k_lambda, args.omega_tau)
    constants = PhysicalConstants(
        hbar=args.hbar if args.hbar is not None else 1.0,
        mass=args.mass if args.mass is not None else 1.0,
        light_speed=args.light_speed if args.light_speed is not None else 1.0,
    )
    lam = args.lam if args.lam is not None else 1.0
    energy = args.energy if args.energy is not None else 0.5
    return make_params(constants, lam, energy)


def _resolve_spec(args) -> WaveSpec:
    return WaveSpec(
        a_amp=_parse_complex(args.amp_a, "--amp-a"),
        b_amp=_parse_complex(args.amp_b, "--amp-b"),
        t0=_parse_complex(args.t0, "--t0"),
    )


def _grid(args) -> tuple[tuple[int, int], tuple[int, int]]:
    jx = _parse_range(args.jx, "--jx")
    jt = _parse_range(args.jt, "--jt")
    rows = (jx[1] - jx[0] + 1) * (jt[1] - jt[0] + 1)
    if rows > MAX_ROWS:
        raise ValidationError(f"grid has {rows} points; at most {MAX_ROWS} are allowed")
    return jx, jt


def _grid_points(jx: tuple[int, int], jt: tuple[int, int]):
    for j_x in range(jx[0], jx[1] + 1):
        for j_t in range(jt[0], jt[1] + 1):
            yield LatticePoint(j_x, j_t)


def _params_config(params: QstParams) -> dict:
    c = params.constants
    return {
        "hbar": c.hbar,
        "mass": c.mass,
        "light_speed": c.light_speed,
        "lam": params.lam,
        "tau": params.tau,
        "energy": params.energy,
        "k": params.k,
        "omega": params.omega,
        "k_lam": params.k_lam,
        "omega_tau": params.omega_tau,
    }


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (config, columns, rows, summary, exit code)
# ---------------------------------------------------------------------------


def _max_rel_residual(residuals, scale: float) -> float:
    if scale == 0.0:
        return 0.0
    return max(residuals, default=0.0) / scale


def _eval_diagnostics(params: QstParams, spec: WaveSpec, jx: tuple[int, int], jt: tuple[int, int]) -> dict:
    """Recursion and difference-equation residuals over the requested grid."""
    out = {
        "time_step_residual": None,
        "space_step_residual": None,
        "time_difference_residual": None,
        "space_difference_residual": None,
    }
    try:
        t_vals = [time_factor(params, spec.t0, j) for j in range(jt[0], jt[1] + 1)]
        u_vals = [space_factor(params, spec, j) for j in range(jx[0], jx[1] + 1)]
    except AmplitudeOverflowError:
        return out
    omega_tau = params.omega_tau
    k_lam = params.k_lam
    t_scale = max((abs(v) for v in t_vals), default=0.0)
    u_scale = max((abs(v) for v in u_vals), default=0.0)
    if len(t_vals) >= 2:
        steps = [abs(t_vals[i + 1] - step_time_recursion(params, t_vals[i])) for i in range(len(t_vals) - 1)]
        out["time_step_residual"] = _max_rel_residual(steps, t_scale)
        window = LatticeFunction(jt[0], tuple(t_vals))
        diff = forward_difference(window)
        residuals = [abs(d + 1j * omega_tau * v) for d, v in zip(diff.values, window.values)]
        out["time_difference_residual"] = _max_rel_residual(residuals, t_scale)
    if len(u_vals) >= 3:
        steps = [
            abs(u_vals[i + 2] - step_space_recursion(params, u_vals[i], u_vals[i + 1]))
            for i in range(len(u_vals) - 2)
        ]
        out["space_step_residual"] = _max_rel_residual(steps, u_scale)
        window = LatticeFunction(jx[0], tuple(u_vals))
        diff2 = second_difference(window)
        residuals = [abs(d + (k_lam * k_lam) * v) for d, v in zip(diff2.values, window.values)]
        out["space_difference_residual"] = _max_rel_residual(residuals, u_scale)
    return out


def _run_eval(args):
    params = _resolve_params(args)
    spec = _resolve_spec(args)
    jx, jt = _grid(args)
    wave = QstWave(params, spec)
    log_only = args.log_domain
    if log_only:
        columns = ["j_x", "j_t", "log_mag_psi", "phase_psi", "re_psi_cont", "im_psi_cont"]
    else:
        columns = [
            "j_x", "j_t", "re_psi", "im_psi",
            "log_mag_psi", "phase_psi", "re_psi_cont", "im_psi_cont", "note",
        ]
    rows = []
    overflow_rows = 0
    for p in _grid_points(jx, jt):
        log_value = qst_plane_wave_log(wave, p)
        cont = continuum_superposition(params, spec, p.j_x * params.lam, p.j_t * params.tau)
        row = {
            "j_x": p.j_x,
            "j_t": p.j_t,
            "log_mag_psi": log_value.log_mag,
            "phase_psi": log_value.phase,
            "re_psi_cont": cont.real,
            "im_psi_cont": cont.imag,
        }
        if not log_only:
            try:
                value = qst_plane_wave(wave, p)
                row["re_psi"], row["im_psi"], row["note"] = value.real, value.imag, ""
            except AmplitudeOverflowError:
                row["re_psi"], row["im_psi"], row["note"] = None, None, _OVERFLOW_NOTE
                overflow_rows += 1
        rows.append(row)
    summary = {"points": len(rows), "overflow_rows": overflow_rows}
    summary.update(_eval_diagnostics(params, spec, jx, jt))
    config = {
        "subcommand": "eval", "log_domain": log_only,
        "a_amp": _complex_pair(spec.a_amp), "b_amp": _complex_pair(spec.b_amp),
        "t0": _complex_pair(spec.t0), "jx": list(jx), "jt": list(jt),
    }
    config.update(_params_config(params))
    return config, columns, rows, summary, 0


def _run_density(args):
    params = _resolve_params(args)
    spec = _resolve_spec(args)
    jx, jt = _grid(args)
    wave = QstWave(params, spec)
    cont = density_continuum(spec.a_amp * spec.t0)
    log_only = args.log_domain
    if log_only:
        columns = ["j_x", "j_t", "log_density", "density_cont"]
    else:
        columns = ["j_x", "j_t", "density", "density_cont", "log_density", "note"]
    rows = []
    overflow_rows = 0
    for p in _grid_points(jx, jt):
        sample_log = density_qst_log(wave, p)
        if log_only:
            sample = ObservableSample(p, None, None, log_density=sample_log)
            rows.append({"j_x": p.j_x, "j_t": p.j_t, "log_density": sample.log_density, "density_cont": cont})
            continue
        note = ""
        try:
            value = density_qst(wave, p)
        except AmplitudeOverflowError:
            value, note = None, _OVERFLOW_NOTE
            overflow_rows += 1
        sample = ObservableSample(p, value, None, log_density=sample_log)
        rows.append({
            "j_x": p.j_x, "j_t": p.j_t, "density": sample.density,
            "density_cont": cont, "log_density": sample.log_density, "note": note,
        })
    summary = {"points": len(rows), "overflow_rows": overflow_rows, "density_cont": cont}
    config = {
        "subcommand": "density", "log_domain": log_only,
        "a_amp": _complex_pair(spec.a_amp), "b_amp": _complex_pair(spec.b_amp),
        "t0": _complex_pair(spec.t0), "jx": list(jx), "jt": list(jt),
    }
    config.update(_params_config(params))
    return config, columns, rows, summary, 0


def _run_flux(args):
    params = _resolve_params(args)
    spec = _resolve_spec(args)
    jx, jt = _grid(args)
    wave = QstWave(params, spec)
    cont = flux_continuum(params, spec.a_amp * spec.t0)
    log_only = args.log_domain
    if log_only:
        columns = ["j_x", "j_t", "log_flux", "flux_sign", "flux_cont"]
    else:
        columns = ["j_x", "j_t", "flux", "flux_def", "flux_cont", "def_rel_err", "log_flux", "flux_sign", "note"]
    rows = []
    overflow_rows = 0
    max_def_rel_err = 0.0
    for p in _grid_points(jx, jt):
        log_flux, sign = flux_qst_closed_log(wave, p)
        if log_only:
            rows.append({"j_x": p.j_x, "j_t": p.j_t, "log_flux": log_flux, "flux_sign": sign, "flux_cont": cont})
            continue
        note = ""
        closed = definition = rel = None
        try:
            closed = flux_qst_closed(wave, p)
            definition = flux_qst_from_definition(wave, p)
            rel = abs(definition - closed) / abs(closed) if closed != 0 else abs(definition)
            max_def_rel_err = max(max_def_rel_err, rel)
        except AmplitudeOverflowError:
            closed = definition = rel = None
            note = _OVERFLOW_NOTE
            overflow_rows += 1
        sample = ObservableSample(p, None, closed, log_flux=log_flux, flux_sign=sign)
        rows.append({
            "j_x": p.j_x, "j_t": p.j_t, "flux": sample.flux, "flux_def": definition,
            "flux_cont": cont, "def_rel_err": rel,
            "log_flux": sample.log_flux, "flux_sign": sample.flux_sign, "note": note,
        })
    summary = {
        "points": len(rows), "overflow_rows": overflow_rows,
        "flux_cont": cont, "max_def_rel_err": None if log_only else max_def_rel_err,
    }
    config = {
        "subcommand": "flux", "log_domain": log_only,
        "a_amp": _complex_pair(spec.a_amp), "b_amp": _complex_pair(spec.b_amp),
        "t0": _complex_pair(spec.t0), "jx": list(jx), "jt": list(jt),
    }
    config.update(_params_config(params))
    return config, columns, rows, summary, 0


def _run_continuity(args):
    params = _resolve_params(args)
    spec = _resolve_spec(args)
    jx, jt = _grid(args)
    wave = QstWave(params, spec)
    log_only = args.log_domain
    if log_only:
        columns = ["j_x", "j_t", "log_residual"]
    else:
        columns = ["j_x", "j_t", "residual", "residual_predicted", "rel_diff", "log_residual", "note"]
    rows = []
    overflow_rows = 0
    max_rel_diff = 0.0
    for p in _grid_points(jx, jt):
        log_residual = continuity_residual_log(wave, p)
        if log_only:
            rows.append({"j_x": p.j_x, "j_t": p.j_t, "log_residual": log_residual})
            continue
        note = ""
        residual = predicted = rel = None
        try:
            residual = continuity_residual(wave, p)
            predicted = predicted_continuity_residual(wave, p)
            rel = abs(residual - predicted) / abs(predicted) if predicted != 0 else abs(residual)
            max_rel_diff = max(max_rel_diff, rel)
        except AmplitudeOverflowError:
            residual = predicted = rel = None
            note = _OVERFLOW_NOTE
            overflow_rows += 1
        rows.append({
            "j_x": p.j_x, "j_t": p.j_t, "residual": residual, "residual_predicted": predicted,
            "rel_diff": rel, "log_residual": log_residual, "note": note,
        })
    summary = {
        "points": len(rows), "overflow_rows": overflow_rows,
        "max_rel_diff": None if log_only else max_rel_diff,
    }
    config = {
        "subcommand": "continuity", "log_domain": log_only,
        "a_amp": _complex_pair(spec.a_amp), "b_amp": _complex_pair(spec.b_amp),
        "t0": _complex_pair(spec.t0), "jx": list(jx), "jt": list(jt),
    }
    config.update(_params_config(params))
    return config, columns, rows, summary, 0


def _run_converge(args):
    constants = PhysicalConstants(
        hbar=args.hbar if args.hbar is not None else 1.0,
        mass=args.mass if args.mass is not None else 1.0,
        light_speed=args.light_speed if args.light_speed is not None else 1.0,
    )
    a_amp = _parse_complex(args.amp_a, "--amp-a")
    family = WaveFamily.from_wavenumber(constants, args.k, a_amp)
    schedule = LimitSchedule(args.x, args.t, _parse_steps(args.steps))
    psi_samples = limit_error(family, schedule)
    report = observable_limit_check(family, schedule)
    columns = ["n", "lam", "j_t", "time_residual", "psi_error", "density_error", "flux_error"]
    rows = []
    for psi, dens, flux in zip(psi_samples, report.density_samples, report.flux_samples):
        rows.append({
            "n": psi.n, "lam": psi.lam, "j_t": psi.j_t, "time_residual": psi.time_residual,
            "psi_error": psi.error, "density_error": dens.error, "flux_error": flux.error,
        })
    summary = {
        "psi_order": convergence_order(error_pairs(psi_samples)),
        "density_order": report.density_order,
        "flux_order": report.flux_order,
        "final_psi_error": psi_samples[-1].error,
        "final_density_error": report.final_density_error,
        "final_flux_error": report.final_flux_error,
        "density_target": report.density_target,
        "flux_target": report.flux_target,
        "monotone_from_n": monotone_from(psi_samples),
    }
    config = {
        "subcommand": "converge",
        "hbar": constants.hbar, "mass": constants.mass, "light_speed": constants.light_speed,
        "k": args.k, "x": args.x, "t": args.t,
        "steps": list(schedule.steps), "a_amp": _complex_pair(a_amp),
    }
    return config, columns, rows, summary, 0


def _shift_check_cases(params: QstParams, window: tuple[int, int], trials: int, rng: random.Random):
    lo, hi = window
    mid = (lo + hi) // 2
    right_root = complex(1.0, params.k_lam)
    yield "delta", LatticeFunction.delta(mid, lo, hi)
    yield "constant", LatticeFunction.tabulate(lambda j: 1.0 + 0j, lo, hi)
    yield "linear", LatticeFunction.tabulate(lambda j: complex(j), lo, hi)
    yield "geometric", LatticeFunction.tabulate(lambda j: complex_ipow(right_root, j), lo, hi)
    for i in range(trials):
        values = tuple(complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) for _ in range(hi - lo + 1))
        yield f"random-{i:03d}", LatticeFunction(lo, values)


def _run_commutator(args):
    params = _resolve_params(args)
    window = _parse_range(args.window, "--window")
    hbar = params.constants.hbar
    if args.check == "shift":
        if args.trials < 0:
            raise ValidationError(f"--trials must be nonnegative, got {args.trials}")
        rng = random.Random(args.seed)
        columns = ["case", "max_deviation", "scale", "tolerance", "ok"]
        rows = []
        worst_ratio = 0.0
        all_ok = True
        for name, f in _shift_check_cases(params, window, args.trials, rng):
            report = shift_identity_check(params, f)
            rows.append({
                "case": name, "max_deviation": report.max_deviation, "scale": report.scale,
                "tolerance": report.tolerance, "ok": report.passed,
            })
            if report.scale > 0.0:
                worst_ratio = max(worst_ratio, report.max_deviation / (hbar * report.scale))
            all_ok = all_ok and report.passed
        summary = {
            "check": "shift", "cases": len(rows), "trials": args.trials, "seed": args.seed,
            "worst_deviation_ratio": worst_ratio, "all_ok": all_ok,
        }
    else:
        spec = _resolve_spec(args)
        wave = QstWave(params, spec)
        report = momentum_form_identity_check(wave, window[0], window[1])
        columns = ["j", "re_psi", "im_psi", "re_comm", "im_comm", "rel_err"]
        rows = []
        f = wave_window(wave, window[0], window[1])
        comm = commutator_qst_apply(params, f)
        for j, value in comm.items():
            target = report.constant * f.value_at(j)
            rel = abs(value - target) / abs(target) if target != 0 else abs(value)
            rows.append({
                "j": j, "re_psi": f.value_at(j).real, "im_psi": f.value_at(j).imag,
                "re_comm": value.real, "im_comm": value.imag, "rel_err": rel,
            })
        # continuum reference: (px - xp) psi / psi = -i hbar, the k*lam -> 0 value
        continuum_ratio = commutator_continuum_on_plane_wave(params, spec.a_amp, 0.0, 0.0) / spec.a_amp
        summary = {
            "check": "momentum",
            "expected_re": report.constant.real, "expected_im": report.constant.imag,
            "max_rel_error": report.max_rel_error, "tolerance": MOMENTUM_FORM_RTOL,
            "ok": report.passed,
            "continuum_re": continuum_ratio.real, "continuum_im": continuum_ratio.imag,
        }
        all_ok = report.passed
    config = {
        "subcommand": "commutator", "check": args.check,
        "window": list(window), "trials": args.trials, "seed": args.seed,
        "a_amp": _complex_pair(_parse_complex(args.amp_a, "--amp-a")),
        "b_amp": _complex_pair(_parse_complex(args.amp_b, "--amp-b")),
        "t0": _complex_pair(_parse_complex(args.t0, "--t0")),
    }
    config.update(_params_config(params))
    return config, columns, rows, summary, 0 if all_ok else 1


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _csv_text(columns, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt_cell(row.get(col)) for col in columns])
    return buffer.getvalue()


def _summary_line(summary: dict) -> str:
    parts = [f"{key}={_fmt_cell(value) if value is not None else 'null'}" for key, value in summary.items()]
    return "summary: " + " ".join(parts)


def _emit(args, config, columns, rows, summary) -> None:
    if args.format == "json":
        payload = {"config": config, "rows": rows, "summary": summary}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _csv_text(columns, rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.format == "csv":
        print(_summary_line(summary), file=sys.stderr)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_output_args(parser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    parser.add_argument("--out", default=None, help="write the table to this path instead of stdout")


def _add_param_args(parser) -> None:
    parser.add_argument("--k-lambda", type=float, default=None, help="dimensionless k*lam (with --omega-tau)")
    parser.add_argument("--omega-tau", type=float, default=None, help="dimensionless omega*tau (with --k-lambda)")
    parser.add_argument("--hbar", type=float, default=None, help="reduced Planck constant (default 1)")
    parser.add_argument("--mass", type=float, default=None, help="particle mass (default 1)")
    parser.add_argument("--light-speed", type=float, default=None, help="light speed (default 1)")
    parser.add_argument("--lam", type=float, default=None, help="lattice length (default 1)")
    parser.add_argument("--energy", type=float, default=None, help="particle energy (default 0.5)")


def _add_amp_args(parser) -> None:
    parser.add_argument("--amp-a", default="1", help="right-mover amplitude A (complex literal)")
    parser.add_argument("--amp-b", default="0", help="left-mover amplitude B (complex literal)")
    parser.add_argument("--t0", default="1", help="time normalization T(0) (complex literal)")


def _add_grid_args(parser) -> None:
    parser.add_argument("--jx", default="0..10", help="inclusive space-index range LO..HI")
    parser.add_argument("--jt", default="0..0", help="inclusive time-index range LO..HI")
    parser.add_argument("--log-domain", action="store_true", help="emit log-domain columns only")


def build_parser() -> argparse.ArgumentParser:
    parser = _SingleLineParser(prog="qstlattice", description="Quantized space-time free-particle toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_SingleLineParser)

    p_eval = sub.add_parser("eval", help="sample the lattice and continuum plane waves")
    for add in (_add_param_args, _add_amp_args, _add_grid_args, _add_output_args):
        add(p_eval)
    p_eval.set_defaults(handler=_run_eval)

    p_density = sub.add_parser("density", help="sweep the lattice probability density")
    for add in (_add_param_args, _add_amp_args, _add_grid_args, _add_output_args):
        add(p_density)
    p_density.set_defaults(handler=_run_density)

    p_flux = sub.add_parser("flux", help="sweep the lattice flux and cross-check its definition")
    for add in (_add_param_args, _add_amp_args, _add_grid_args, _add_output_args):
        add(p_flux)
    p_flux.set_defaults(handler=_run_flux)

    p_cont = sub.add_parser("continuity", help="sweep the discrete continuity residual")
    for add in (_add_param_args, _add_amp_args, _add_grid_args, _add_output_args):
        add(p_cont)
    p_cont.set_defaults(handler=_run_continuity)

    p_conv = sub.add_parser("converge", help="run a continuum-limit schedule and fit orders")
    p_conv.add_argument("--k", type=float, default=1.0, help="wavenumber (energy is derived)")
    p_conv.add_argument("--x", type=float, default=1.0, help="position target")
    p_conv.add_argument("--t", type=float, default=0.0, help="time target")
    p_conv.add_argument("--steps", default=",".join(str(n) for n in DEFAULT_STEPS), help="comma-separated refinement steps")
    p_conv.add_argument("--amp-a", default="1", help="right-mover amplitude A (complex literal)")
    p_conv.add_argument("--hbar", type=float, default=None)
    p_conv.add_argument("--mass", type=float, default=None)
    p_conv.add_argument("--light-speed", type=float, default=None)
    _add_output_args(p_conv)
    p_conv.set_defaults(handler=_run_converge)

    p_comm = sub.add_parser("commutator", help="run the commutator identity suites")
    p_comm.add_argument("--check", choices=("shift", "momentum"), default="shift")
    p_comm.add_argument("--window", default="-5..5", help="inclusive index window LO..HI")
    p_comm.add_argument("--trials", type=int, default=100, help="random windows for the shift suite")
    p_comm.add_argument("--seed", type=int, default=0, help="seed for the random windows")
    for add in (_add_param_args, _add_amp_args, _add_output_args):
        add(p_comm)
    p_comm.set_defaults(handler=_run_commutator)

    return parser


# Flags whose values may begin with "-" (ranges, negative complex literals);
# argparse would otherwise read the value as an option string.
_VALUE_FLAGS = ("--window", "--jx", "--jt", "--amp-a", "--amp-b", "--t0")


def _absorb_negative_values(argv: list[str]) -> list[str]:
    merged = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if token in _VALUE_FLAGS and nxt is not None and re.match(r"-[\d.(]", nxt):
            merged.append(f"{token}={nxt}")
            skip = True
        else:
            merged.append(token)
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = parser.parse_args(_absorb_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config, columns, rows, summary, code = args.handler(args)
        _emit(args, config, columns, rows, summary)
        return code
    except AmplitudeOverflowError as exc:
        print(f"error: overflow: {exc}; rerun with --log-domain", file=sys.stderr)
        return 1
    except UnsupportedWaveError as exc:
        print(f"error: unsupported-wave: {exc}", file=sys.stderr)
        return 2
    except DegenerateFitError as exc:
        print(f"error: degenerate-fit: {exc}", file=sys.stderr)
        return 2
    except (ValidationError, DomainError) as exc:
        print(f"error: invalid-config: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
