"""End-to-end acceptance gate: nine numbered criteria.

Each test prints one PASS/FAIL line.  Criteria 3, 6, and 8 assert the
reference values and structural clauses exactly as stated; the cells and
clauses that cannot be met by a converged computation are allowed to fail
here and are analyzed in the README section "Known deviations" (the
failure messages carry the measured numbers).
"""

import csv
import math
import time

import numpy as np
import pytest

from relboost import (
    BoostModel,
    QuadratureSpec,
    amplitude,
    build_matrix,
    compute_point,
    metrics,
    negativity,
    negativity_partial_transpose,
    normalize,
    zero_rm_closed_form,
)
from relboost.cli import main
from relboost.reference import DEVIANT_NEGATIVITY, GAMMA_SET, REFERENCE_TABLE

MODELS = (BoostModel.ZERO_RM, BoostModel.NON_ZERO_RM1, BoostModel.NON_ZERO_RM2)


def _report(criterion, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")
    return ok


def test_criterion_1_rest_frame_exactness():
    start = time.perf_counter()
    rows = [metrics(normalize(build_matrix(m, 1.0, 20).entries)) for m in MODELS]
    elapsed = time.perf_counter() - start
    problems = []
    for model, m in zip(MODELS, rows):
        for label, got, want, tol in (
            ("S", m.entropy_bits, 5.3576, 1e-3),
            ("P", m.purity, 0.0244, 1e-4),
            ("MI", m.mutual_info_bits, 10.7151, 2e-3),
            ("N", m.negativity, 20.0000, 1e-3),
            ("D_eff", m.d_eff, 41.00, 0.01),
        ):
            if abs(got - want) > tol:
                problems.append(f"{model.value} {label}={got:.6f} want {want}+-{tol}")
    if elapsed >= 5.0:
        problems.append(f"runtime {elapsed:.2f}s >= 5s")
    ok = _report(1, not problems, f"rest frame exact, {elapsed:.2f}s")
    assert ok, "; ".join(problems)


def test_criterion_2_zero_rm_closed_form_oracle():
    start = time.perf_counter()
    worst = 0.0
    for gamma in GAMMA_SET:
        for s in range(-40, 41, 2):
            got = amplitude(BoostModel.ZERO_RM, gamma, s, 0)
            worst = max(worst, abs(got - zero_rm_closed_form(gamma, s)))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-9 and elapsed < 10.0
    _report(2, ok, f"max |quadrature - closed form| = {worst:.2e}, {elapsed:.2f}s")
    assert worst <= 1e-9, f"oracle gap {worst:.2e} exceeds 1e-9"
    assert elapsed < 10.0, f"runtime {elapsed:.2f}s exceeds 10s"


def test_criterion_3_reference_table_reproduction(table_sweep):
    result, elapsed = table_sweep
    labels = ("S", "P", "MI", "N", "D_eff")
    misses = []
    for point in result.points:
        key = (point.model, point.gamma)
        ref = REFERENCE_TABLE[key]
        got = (
            point.metrics.entropy_bits,
            point.metrics.purity,
            point.metrics.mutual_info_bits,
            point.metrics.negativity,
            point.metrics.d_eff,
        )
        for label, want, have in zip(labels, ref, got):
            if want is None:
                # reference prints its negativity value in this MI slot;
                # the self-consistent check is MI = 2S
                if abs(have - 2.0 * point.metrics.entropy_bits) > 1e-9:
                    misses.append(f"{point.model.value} g={point.gamma:g} MI != 2S")
                continue
            tol = max(0.01, 0.01 * abs(want))
            if abs(have - want) > tol:
                note = ""
                if label == "N" and key in DEVIANT_NEGATIVITY:
                    printed, converged = DEVIANT_NEGATIVITY[key]
                    note = (
                        f" (quadrature-converged value {converged:.6f}; two independent"
                        f" integration schemes agree to 6 digits and are mesh-stable"
                        f" to <1e-14, so the printed {printed:.4f} is unreachable;"
                        f" see README, Known deviations)"
                    )
                misses.append(
                    f"{point.model.value} g={point.gamma:g} {label}: got {have:.6f},"
                    f" reference {want:.4f}, tol {tol:.4f}{note}"
                )
    ok = not misses and elapsed < 600.0
    _report(
        3,
        ok,
        f"reference table: {len(misses)} cell(s) out of tolerance, {elapsed:.1f}s",
    )
    assert elapsed < 600.0, f"table runtime {elapsed:.1f}s exceeds 10 min"
    assert not misses, "reference-table mismatches:\n  " + "\n  ".join(misses)


def test_criterion_4_nz2_separability_limit(table_sweep):
    result, _ = table_sweep
    m = result.point(BoostModel.NON_ZERO_RM2, 10000.0).metrics
    problems = []
    if not (1.00 - 1e-9 <= m.d_eff <= 1.01):
        problems.append(f"D_eff {m.d_eff:.6f} outside [1.00, 1.01]")
    if m.purity < 0.998:
        problems.append(f"purity {m.purity:.6f} < 0.998")
    if m.entropy_bits > 0.01:
        problems.append(f"S {m.entropy_bits:.6f} > 0.01")
    if m.negativity > 0.02:
        problems.append(f"N {m.negativity:.6f} > 0.02")
    ok = _report(
        4,
        not problems,
        f"separability limit: D_eff={m.d_eff:.4f} P={m.purity:.4f} "
        f"S={m.entropy_bits:.4f} N={m.negativity:.4f}",
    )
    assert ok, "; ".join(problems)


def test_criterion_5_stationary_asymptotic_floors(table_sweep):
    result, _ = table_sweep
    problems = []
    for model in (BoostModel.ZERO_RM, BoostModel.NON_ZERO_RM1):
        m = result.point(model, 10000.0).metrics
        if not (0.99 <= m.entropy_bits <= 1.02):
            problems.append(f"{model.value} S {m.entropy_bits:.6f} outside [0.99, 1.02]")
        if not (0.49 <= m.purity <= 0.51):
            problems.append(f"{model.value} P {m.purity:.6f} outside [0.49, 0.51]")
    ok = _report(5, not problems, "entropy/purity floors at gamma=1e4")
    assert ok, "; ".join(problems)


def test_criterion_6_parity_and_symmetry_suite(matrices20):
    ks = np.arange(-20, 21)
    odd_mask = (ks[:, None] + ks[None, :]) % 2 != 0
    parity_worst = {}
    conj_worst = 0.0
    for (model, gamma), grid in matrices20.items():
        a = grid.entries
        parity_worst[(model, gamma)] = float(np.abs(a[odd_mask]).max())
        conj_worst = max(conj_worst, float(np.abs(a - np.conj(a[::-1, ::-1])).max()))
    rest = [matrices20[(m, 1.0)].entries for m in MODELS]
    identity_worst = max(
        float(np.abs(rest[0] - other).max()) for other in rest[1:]
    )
    anti = np.eye(41)[:, ::-1].astype(complex)
    identity_worst = max(identity_worst, max(float(np.abs(r - anti).max()) for r in rest))

    parity_misses = {
        key: value for key, value in parity_worst.items() if value > 1e-10
    }
    problems = []
    if parity_misses:
        sample = ", ".join(
            f"{m.value} g={g:g}: {v:.3f}" for (m, g), v in sorted(
                parity_misses.items(), key=lambda kv: str(kv[0])
            )[:6]
        )
        problems.append(
            f"odd-(k+m) clause: {len(parity_misses)} matrices carry O(1) odd-sum"
            f" entries (e.g. {sample}).  The principal-branch phase convention"
            f" that reproduces the reference table makes the boosted factor"
            f" pi-periodic, which zeroes odd rows (rm1) or odd columns (rm2)"
            f" instead of odd diagonals; the reference marginal structure at"
            f" gamma=1e4 requires these entries.  See README, Known deviations."
        )
    if conj_worst > 1e-10:
        problems.append(f"conjugation symmetry worst {conj_worst:.2e} > 1e-10")
    if identity_worst > 1e-11:
        problems.append(f"rest-frame identity worst {identity_worst:.2e} > 1e-11")
    ok = _report(
        6,
        not problems,
        f"parity worst {max(parity_worst.values()):.2e}, conjugation {conj_worst:.2e},"
        f" rest-frame {identity_worst:.2e}",
    )
    assert ok, "\n".join(problems)


def test_criterion_7_negativity_dual_path():
    worst = 0.0
    for model in MODELS:
        for gamma in (1.0, 5.0, 20.0):
            psi = normalize(build_matrix(model, gamma, 8).entries)
            gap = abs(negativity(psi) - negativity_partial_transpose(psi))
            worst = max(worst, gap)
    ok = worst <= 1e-8
    _report(7, ok, f"Schmidt shortcut vs partial transpose, max gap {worst:.2e}")
    assert ok, f"dual-path gap {worst:.2e} exceeds 1e-8"


def test_criterion_8_marginal_three_mode_structure():
    point = compute_point(BoostModel.NON_ZERO_RM1, 10000.0, 20, QuadratureSpec())
    structured = point.marginal_k  # the peaked single-photon distribution
    flat = point.marginal_m
    center = 20
    mass = float(structured[center - 2] + structured[center] + structured[center + 2])
    sym = abs(float(structured[center - 2] - structured[center + 2]))
    top3 = {int(v) for v in np.argsort(structured)[-3:] - center}
    other_mass = float(flat[center - 2] + flat[center] + flat[center + 2])
    problems = []
    if top3 != {-2, 0, 2}:
        problems.append(f"dominant modes {sorted(top3)} != [-2, 0, 2]")
    if sym > 1e-3:
        problems.append(f"|P(-2) - P(2)| = {sym:.2e} > 1e-3")
    if mass < 0.95:
        problems.append(
            f"three-mode mass {mass:.4f} < 0.95.  The converged value at"
            f" lmax=20, gamma=1e4 is {mass:.4f} (gamma->inf limit 0.9309,"
            f" lmax->inf limit 0.9053); the other marginal is near-uniform"
            f" ({other_mass:.4f} on the same modes), so no index convention"
            f" reaches 0.95.  See README, Known deviations."
        )
    ok = _report(
        8,
        not problems,
        f"three-mode mass {mass:.4f}, symmetry gap {sym:.2e}, peaks {sorted(top3)}",
    )
    assert ok, "\n".join(problems)


def test_criterion_9_figure_data_emission(tmp_path, capsys):
    base = ["--gamma", "1,5", "--lmax", "4", "--threads", "1"]
    runs = {
        "sweep": ["sweep"] + base,
        "marginals": ["marginals"] + base,
        "schmidt": ["schmidt"] + base,
        "amplitudes": ["amplitudes", "--model", "zero-rm", "--gamma", "5", "--lmax", "4"],
    }
    problems = []
    for name, args in runs.items():
        a_dir = tmp_path / f"{name}_a"
        b_dir = tmp_path / f"{name}_b"
        assert main(args + ["--out", str(a_dir)]) == 0
        assert main(args + ["--out", str(b_dir)]) == 0
        for path in sorted(a_dir.iterdir()):
            twin = b_dir / path.name
            if path.read_bytes() != twin.read_bytes():
                problems.append(f"{name}/{path.name} differs between identical runs")
    capsys.readouterr()

    # round trip: serialized joint grid equals the in-memory matrix
    joint_mem = np.abs(
        normalize(build_matrix(BoostModel.ZERO_RM, 5.0, 4).entries)
    ) ** 2
    with open(tmp_path / "amplitudes_a" / "joint_zero-rm_g5.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    parsed = np.array([[float(v) for v in r[1:]] for r in rows[1:]])
    if not np.allclose(parsed, joint_mem, rtol=5e-12, atol=1e-300):
        problems.append("joint CSV round trip lost precision")
    ok = _report(9, not problems, "CSV round trip exact, reruns byte-identical")
    assert ok, "; ".join(problems)
