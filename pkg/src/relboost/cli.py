"""Command line interface.

Subcommands:

``amplitudes``
    Joint amplitude matrix per (model, gamma): complex entries and the
    normalized probability grid, optional PNG heatmap.
``table``
    Metric table over a gamma grid, aligned text plus a JSON twin.
``sweep``
    Metric curves over a gamma grid to CSV, for external plotting.
``marginals``
    Single-photon OAM distributions P(k) and P(m) per point.
``schmidt``
    Schmidt spectra with cumulative sums per point.
``verify``
    Self-check battery (``quick`` under a minute, ``full`` adds the
    partial-transpose cross-check and the whole reference table).

Gamma values below 1 are usage errors (exit status 2).  All output files
are deterministic; reruns with identical arguments are byte-identical.
"""

from __future__ import annotations

import argparse
import math
import sys
import tempfile
import time
from pathlib import Path

import numpy as np

from .amplitudes import (
    BoostModel,
    amplitude,
    build_matrix,
    nz2_axis_closed_form,
    zero_rm_closed_form,
)
from .engine import SweepRequest, compute_point, default_gamma_grid, run_sweep
from .entanglement import (
    joint_probability,
    metrics,
    negativity,
    negativity_partial_transpose,
    normalize,
)
from .kinematics import boost_angle, boost_jacobian, inverse_boost_angle
from .quadrature import QuadratureSpec, integrate_periodic
from .reference import (
    DEVIANT_NEGATIVITY,
    GAMMA_SET,
    MI_TYPO_CELLS,
    REFERENCE_TABLE,
)
from .reporting import (
    render_heatmap,
    write_amplitude_csv,
    write_joint_csv,
    write_json,
    write_marginals_csv,
    write_schmidt_csv,
    write_sidecar,
    write_sweep_csv,
    write_table_files,
)

__all__ = ["main", "build_parser"]

_MODEL_ORDER = (BoostModel.ZERO_RM, BoostModel.NON_ZERO_RM1, BoostModel.NON_ZERO_RM2)


class CLIError(Exception):
    """Bad command line input; reported through argparse as exit status 2."""


def _parse_gammas(raw, default):
    if not raw:
        return tuple(default)
    values = []
    for item in raw:
        for piece in item.split(","):
            piece = piece.strip()
            if not piece:
                continue
            try:
                value = float(piece)
            except ValueError:
                raise CLIError(f"invalid gamma {piece!r}") from None
            if not math.isfinite(value) or value < 1.0:
                raise CLIError(f"gamma must be finite and >= 1, got {piece}")
            values.append(value)
    if not values:
        raise CLIError("no gamma values given")
    return tuple(sorted(set(values)))


def _parse_models(raw):
    if not raw:
        return _MODEL_ORDER
    picked = []
    for name in raw:
        model = BoostModel(name)
        if model not in picked:
            picked.append(model)
    return tuple(picked)


def _quad_spec(args):
    if args.tol <= 0:
        raise CLIError("tolerance must be positive")
    return QuadratureSpec(abs_tol=args.tol)


def _check_lmax(args):
    if args.lmax < 0:
        raise CLIError("lmax must be non-negative")
    return args.lmax


def _run(args, keep_joint=False):
    request = SweepRequest(
        models=_parse_models(args.model),
        gamma_grid=_parse_gammas(args.gamma, getattr(args, "default_gammas", GAMMA_SET)),
        lmax=_check_lmax(args),
        spec=_quad_spec(args),
        keep_joint=keep_joint,
    )
    result = run_sweep(request, threads=args.threads)
    for model, gamma, message in result.failures:
        print(f"error: {model.value} gamma={gamma:g}: {message}", file=sys.stderr)
    return request, result


def _emit(paths):
    for path in paths:
        print(path)


def _gtag(gamma):
    return format(gamma, "g")


def cmd_amplitudes(args):
    lmax = _check_lmax(args)
    spec = _quad_spec(args)
    models = _parse_models(args.model)
    gammas = _parse_gammas(args.gamma, (5.0,))
    out = Path(args.out)
    written = []
    for model in models:
        for gamma in gammas:
            grid = build_matrix(model, gamma, lmax, spec)
            joint = joint_probability(normalize(grid.entries))
            tag = f"{model.value}_g{_gtag(gamma)}"
            if args.format == "json":
                written.append(
                    write_json(
                        out / f"amplitudes_{tag}.json",
                        {
                            "model": model.value,
                            "gamma": gamma,
                            "lmax": lmax,
                            "re": grid.entries.real.tolist(),
                            "im": grid.entries.imag.tolist(),
                            "joint": joint.tolist(),
                        },
                    )
                )
            else:
                written.append(
                    write_amplitude_csv(out / f"amplitudes_{tag}.csv", grid.entries, lmax)
                )
                written.append(write_joint_csv(out / f"joint_{tag}.csv", joint, lmax))
            if args.heatmap:
                written.append(
                    render_heatmap(
                        out / f"heatmap_{tag}.png", joint, lmax, log_scale=args.log_scale
                    )
                )
    written.append(
        write_sidecar(
            out,
            "amplitudes",
            {
                "models": [m.value for m in models],
                "gammas": list(gammas),
                "lmax": lmax,
                "tol": args.tol,
                "format": args.format,
                "heatmap": bool(args.heatmap),
                "log_scale": bool(args.log_scale),
            },
        )
    )
    _emit(written)
    return 0


def cmd_table(args):
    request, result = _run(args)
    if result.failures:
        return 1
    out = Path(args.out)
    written = write_table_files(out, result.points, request.lmax)
    written.append(
        write_sidecar(
            out,
            "table",
            {
                "models": [m.value for m in request.models],
                "gammas": list(request.gamma_grid),
                "lmax": request.lmax,
                "tol": request.spec.abs_tol,
            },
        )
    )
    _emit(written)
    return 0


def cmd_sweep(args):
    if args.gamma and args.grid is not None:
        raise CLIError("--gamma and --grid are mutually exclusive")
    if args.grid is not None:
        args.default_gammas = tuple(default_gamma_grid(args.grid))
    else:
        args.default_gammas = tuple(default_gamma_grid(9))
    request, result = _run(args)
    if result.failures:
        return 1
    out = Path(args.out)
    written = []
    if args.format == "json":
        rows = [
            {
                "model": p.model.value,
                "gamma": p.gamma,
                "entropy_bits": p.metrics.entropy_bits,
                "purity": p.metrics.purity,
                "negativity": p.metrics.negativity,
                "d_eff": p.metrics.d_eff,
                "mi_bits": p.metrics.mutual_info_bits,
            }
            for p in result.points
        ]
        written.append(write_json(out / "sweep.json", {"lmax": request.lmax, "rows": rows}))
    else:
        written.append(write_sweep_csv(out / "sweep.csv", result.points))
    written.append(
        write_sidecar(
            out,
            "sweep",
            {
                "models": [m.value for m in request.models],
                "gammas": list(request.gamma_grid),
                "lmax": request.lmax,
                "tol": request.spec.abs_tol,
                "format": args.format,
            },
        )
    )
    _emit(written)
    return 0


def cmd_marginals(args):
    request, result = _run(args)
    if result.failures:
        return 1
    out = Path(args.out)
    written = []
    if args.format == "json":
        rows = [
            {
                "model": p.model.value,
                "gamma": p.gamma,
                "p_k": p.marginal_k.tolist(),
                "p_m": p.marginal_m.tolist(),
            }
            for p in result.points
        ]
        written.append(
            write_json(out / "marginals.json", {"lmax": request.lmax, "rows": rows})
        )
    else:
        written.append(
            write_marginals_csv(
                out / "marginals_k.csv",
                [(p.model, p.gamma, p.marginal_k) for p in result.points],
                request.lmax,
            )
        )
        written.append(
            write_marginals_csv(
                out / "marginals_m.csv",
                [(p.model, p.gamma, p.marginal_m) for p in result.points],
                request.lmax,
            )
        )
    written.append(
        write_sidecar(
            out,
            "marginals",
            {
                "models": [m.value for m in request.models],
                "gammas": list(request.gamma_grid),
                "lmax": request.lmax,
                "tol": request.spec.abs_tol,
                "format": args.format,
            },
        )
    )
    _emit(written)
    return 0


def cmd_schmidt(args):
    request, result = _run(args)
    if result.failures:
        return 1
    out = Path(args.out)
    written = []
    if args.format == "json":
        rows = [
            {
                "model": p.model.value,
                "gamma": p.gamma,
                "p": p.spectrum.probabilities.tolist(),
                "cumulative": p.spectrum.cumulative.tolist(),
            }
            for p in result.points
        ]
        written.append(
            write_json(out / "schmidt.json", {"lmax": request.lmax, "rows": rows})
        )
    else:
        written.append(
            write_schmidt_csv(
                out / "schmidt.csv",
                [(p.model, p.gamma, p.spectrum) for p in result.points],
            )
        )
    written.append(
        write_sidecar(
            out,
            "schmidt",
            {
                "models": [m.value for m in request.models],
                "gammas": list(request.gamma_grid),
                "lmax": request.lmax,
                "tol": request.spec.abs_tol,
                "format": args.format,
            },
        )
    )
    _emit(written)
    return 0


class _CheckLog:
    """Collects pass/fail lines; ok* marks a pass with a caveat note."""

    def __init__(self):
        self.count = 0
        self.failed = 0

    def add(self, ok, name, detail="", note=""):
        self.count += 1
        if not ok:
            self.failed += 1
        mark = "FAIL" if not ok else ("ok*" if note else "ok")
        line = f"{mark:<5}{name}"
        if detail:
            line += f": {detail}"
        if note:
            line += f"  [{note}]"
        print(line)


def _verify_reference_points(log, points):
    labels = ("S", "P", "MI", "N", "D_eff")
    for point in points:
        key = (point.model, float(point.gamma))
        ref = REFERENCE_TABLE[key]
        got = (
            point.metrics.entropy_bits,
            point.metrics.purity,
            point.metrics.mutual_info_bits,
            point.metrics.negativity,
            point.metrics.d_eff,
        )
        for label, want, have in zip(labels, ref, got):
            name = f"table {point.model.value} gamma={point.gamma:g} {label}"
            if want is None:
                # Reference prints N in this MI slot; the self-consistent
                # value is 2S, which metrics() guarantees by construction.
                ok = abs(have - 2.0 * point.metrics.entropy_bits) <= 1e-12
                log.add(ok, name, f"{have:.4f}", note="reference MI cell inconsistent; checked MI = 2S")
                continue
            if label == "N" and key in DEVIANT_NEGATIVITY:
                printed, converged = DEVIANT_NEGATIVITY[key]
                ok = abs(have - converged) <= 1e-3
                log.add(
                    ok,
                    name,
                    f"{have:.6f} vs converged {converged:.6f}",
                    note=f"documented deviation; reference prints {printed:.4f}",
                )
                continue
            tol = max(0.01, 0.01 * abs(want))
            log.add(abs(have - want) <= tol, name, f"{have:.4f} vs {want:.4f}")


def _verify_quick(log, spec, threads):
    got = boost_angle(3 * math.pi / 4, 5.0)
    log.add(abs(got - 1.7682) <= 5e-5, "kinematics branch", f"boost_angle(3pi/4, 5) = {got:.6f}")

    # boost_angle(pi, gamma) amplifies sin(pi) rounding by gamma, so the
    # drift floor at gamma = 1e4 is ~1.2e-12; 1e-11 still catches branch bugs
    worst = max(
        abs(boost_angle(math.pi, g) - math.pi) + abs(boost_angle(0.0, g))
        for g in GAMMA_SET
    )
    log.add(worst <= 1e-11, "kinematics fixed points", f"max drift {worst:.2e}")

    phi = np.linspace(0.0, 2.0 * math.pi, 2001)
    worst = 0.0
    for g in (5.0, 100.0):
        diff = np.abs(inverse_boost_angle(boost_angle(phi, g), g) - phi)
        diff = np.minimum(diff, 2.0 * math.pi - diff)
        worst = max(worst, float(diff.max()))
    log.add(worst <= 1e-11, "kinematics inverse pair", f"max |inv(boost) - id| {worst:.2e}")

    worst = max(
        abs(integrate_periodic(lambda p, g=g: boost_jacobian(p, g), g, spec) - 1.0)
        for g in (5.0, 100.0)
    )
    log.add(worst <= 1e-10, "jacobian mean", f"max |mean - 1| {worst:.2e}")

    null = abs(integrate_periodic(lambda p: np.exp(-7j * p), 5.0, spec))
    log.add(null <= 1e-12, "quadrature harmonic null", f"|<e^-i7phi>| {null:.2e}")

    want = zero_rm_closed_form(100.0, 2)
    got = integrate_periodic(
        lambda p: boost_jacobian(p, 100.0) * np.exp(-2j * p), 100.0, spec
    )
    log.add(abs(got - want) <= 1e-9, "weighted harmonic", f"{got.real:.9f} vs {want.real:.9f}")

    worst = 0.0
    for g in (1.0, 5.0, 20.0):
        for s in range(0, 13, 2):
            err = abs(amplitude(BoostModel.ZERO_RM, g, s, 0, spec) - zero_rm_closed_form(g, s))
            worst = max(worst, err)
        worst = max(worst, abs(amplitude(BoostModel.ZERO_RM, g, 7, 0, spec)))
    log.add(worst <= 1e-9, "zero-rm closed form", f"max err {worst:.2e}")

    worst = max(
        abs(amplitude(BoostModel.NON_ZERO_RM2, 5.0, k, 0, spec) - nz2_axis_closed_form(5.0, k))
        for k in range(0, 9, 2)
    )
    log.add(worst <= 1e-8, "nz2 axis closed form (even k)", f"max err {worst:.2e}")

    grids = [build_matrix(model, 1.0, 8, spec).entries for model in _MODEL_ORDER]
    anti = np.eye(17)[:, ::-1].astype(complex)
    worst = max(float(np.abs(g - anti).max()) for g in grids)
    same = all(np.array_equal(grids[0], g) for g in grids[1:])
    log.add(worst <= 1e-11 and same, "rest frame identity", f"max |A - antidiag| {worst:.2e}, bitwise equal {same}")

    psi = normalize(build_matrix(BoostModel.ZERO_RM, 1.0, 20, spec).entries)
    m = metrics(psi)
    ok = (
        abs(m.entropy_bits - math.log2(41)) <= 1e-9
        and abs(m.purity - 1.0 / 41.0) <= 1e-12
        and abs(m.negativity - 20.0) <= 1e-9
        and abs(m.d_eff - 41.0) <= 1e-7
    )
    log.add(ok, "rest frame metrics", f"S={m.entropy_bits:.6f} P={m.purity:.6f} N={m.negativity:.6f} D={m.d_eff:.4f}")

    worst = 0.0
    for model in _MODEL_ORDER:
        psi = normalize(build_matrix(model, 5.0, 6, spec).entries)
        worst = max(worst, abs(negativity(psi) - negativity_partial_transpose(psi)))
    log.add(worst <= 1e-8, "negativity dual path (lmax=6)", f"max gap {worst:.2e}")

    request = SweepRequest(models=_MODEL_ORDER, gamma_grid=(1.0, 5.0, 20.0), lmax=20, spec=spec)
    result = run_sweep(request, threads=threads)
    if result.failures:
        log.add(False, "reference rows gamma<=20", f"{len(result.failures)} point(s) failed")
    else:
        _verify_reference_points(log, result.points)


def _verify_full(log, spec, threads):
    request = SweepRequest(models=_MODEL_ORDER, gamma_grid=GAMMA_SET, lmax=20, spec=spec)
    result = run_sweep(request, threads=threads)
    if result.failures:
        log.add(False, "full reference table", f"{len(result.failures)} point(s) failed")
    else:
        _verify_reference_points(log, result.points)

    worst = 0.0
    for model in _MODEL_ORDER:
        for g in (1.0, 5.0, 20.0):
            psi = normalize(build_matrix(model, g, 8, spec).entries)
            worst = max(worst, abs(negativity(psi) - negativity_partial_transpose(psi)))
    log.add(worst <= 1e-8, "negativity dual path (lmax=8 battery)", f"max gap {worst:.2e}")

    psi = normalize(build_matrix(BoostModel.ZERO_RM, 5.0, 20, spec).entries)
    gap = abs(negativity(psi) - negativity_partial_transpose(psi))
    log.add(gap <= 1e-8, "negativity dual path (lmax=20)", f"gap {gap:.2e}")

    point = compute_point(BoostModel.NON_ZERO_RM1, 10000.0, 20, spec)
    pk = point.marginal_k
    sym = abs(pk[20 - 2] - pk[20 + 2])
    total = abs(pk.sum() - 1.0)
    log.add(
        sym <= 1e-3 and total <= 1e-12,
        "marginal symmetry",
        f"|P(-2) - P(2)| {sym:.2e}, |sum - 1| {total:.2e}",
    )

    small = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, 10, spec).entries
    large = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, 20, spec).entries
    mass_small = float(np.sum(np.abs(small[:, 10]) ** 2))
    mass_large = float(np.sum(np.abs(large[:, 20]) ** 2))
    ok = mass_small <= mass_large + 1e-12 and mass_large <= 1.0 + 1e-12
    log.add(ok, "column mass growth", f"lmax 10: {mass_small:.9f}, lmax 20: {mass_large:.9f}")

    first = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, 8, spec).entries
    second = build_matrix(BoostModel.NON_ZERO_RM1, 5.0, 8, spec).entries
    log.add(np.array_equal(first, second), "rebuild determinism", "bitwise equal")

    with tempfile.TemporaryDirectory() as tmp:
        a = write_sweep_csv(Path(tmp) / "a.csv", result.points)
        b = write_sweep_csv(Path(tmp) / "b.csv", result.points)
        same = a.read_bytes() == b.read_bytes()
    log.add(same, "csv rerun byte identity", f"{len(result.points)} rows")


def cmd_verify(args):
    spec = _quad_spec(args)
    log = _CheckLog()
    start = time.perf_counter()
    _verify_quick(log, spec, args.threads)
    if args.level == "full":
        _verify_full(log, spec, args.threads)
    elapsed = time.perf_counter() - start
    status = "PASS" if log.failed == 0 else "FAIL"
    print(f"{status}: {log.count - log.failed}/{log.count} checks passed in {elapsed:.1f}s")
    return 0 if log.failed == 0 else 1


def _add_output_options(sub, default_format="csv"):
    sub.add_argument("--out", default="out", help="output directory (default: ./out)")
    sub.add_argument(
        "--format",
        choices=("csv", "json"),
        default=default_format,
        help="output format (default: %(default)s)",
    )


def _add_compute_options(sub, with_threads=True):
    sub.add_argument(
        "--model",
        action="append",
        choices=[m.value for m in _MODEL_ORDER],
        help="observer-motion model; repeatable (default: all three)",
    )
    sub.add_argument(
        "--gamma",
        action="append",
        metavar="G[,G...]",
        help="Lorentz factor(s), >= 1; repeatable or comma separated",
    )
    sub.add_argument("--lmax", type=int, default=20, help="OAM cutoff (default: %(default)s)")
    sub.add_argument(
        "--tol", type=float, default=1e-10, help="quadrature tolerance (default: %(default)s)"
    )
    if with_threads:
        sub.add_argument(
            "--threads",
            type=int,
            default=None,
            help="worker processes (default: RELBOOST_THREADS or cpu count)",
        )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="relboost",
        description="Boosted two-photon OAM joint amplitudes and entanglement metrics.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("amplitudes", help="joint amplitude matrices per (model, gamma)")
    _add_compute_options(sub, with_threads=False)
    _add_output_options(sub)
    sub.add_argument("--heatmap", action="store_true", help="also render a PNG heatmap")
    sub.add_argument(
        "--log-scale", action="store_true", help="log color scale for the heatmap"
    )
    sub.set_defaults(func=cmd_amplitudes)

    sub = subs.add_parser("table", help="metric table over a gamma grid")
    _add_compute_options(sub)
    sub.add_argument("--out", default="out", help="output directory (default: ./out)")
    sub.set_defaults(func=cmd_table, default_gammas=GAMMA_SET)

    sub = subs.add_parser("sweep", help="metric curves over a gamma grid")
    _add_compute_options(sub)
    _add_output_options(sub)
    sub.add_argument(
        "--grid",
        type=int,
        default=None,
        help="use a geometric gamma grid of this many points from 1 to 1e4",
    )
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("marginals", help="single-photon OAM distributions")
    _add_compute_options(sub)
    _add_output_options(sub)
    sub.set_defaults(func=cmd_marginals, default_gammas=GAMMA_SET)

    sub = subs.add_parser("schmidt", help="Schmidt spectra with cumulative sums")
    _add_compute_options(sub)
    _add_output_options(sub)
    sub.set_defaults(func=cmd_schmidt, default_gammas=GAMMA_SET)

    sub = subs.add_parser("verify", help="self-check battery")
    sub.add_argument(
        "level", nargs="?", choices=("quick", "full"), default="quick",
        help="quick runs under a minute; full adds the reference table and PT battery",
    )
    sub.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    sub.add_argument("--threads", type=int, default=None, help="worker processes")
    sub.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as err:
        parser.error(str(err))


if __name__ == "__main__":
    raise SystemExit(main())
