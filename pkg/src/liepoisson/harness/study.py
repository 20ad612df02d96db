"""Trajectory runs, convergence-order and Poisson-defect studies, comparisons."""
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .. import __version__
from ..errors import ConfigError, ConvergenceError, DegenerateStudyError
from ..integrators import make_integrator
from ..models import Trajectory, reference_flow
from ..poisson import poisson_defect

ERROR_FLOOR = 1e-13
DEFECT_FLOOR = 1e-8
RUN_COLUMNS = ("step", "t", "mu1", "mu2", "mu3", "H", "C", "orbit_err")


@dataclass
class StudyReport:
    config: dict
    columns: tuple
    rows: list
    summary: dict = field(default_factory=dict)

    @property
    def slope(self):
        return self.summary.get("slope")

    def to_dict(self):
        return {"config": self.config, "rows": self.rows, "summary": self.summary}


def _provenance(cfg, **more):
    d = cfg.to_dict()
    d["version"] = __version__
    d.update(more)
    return d


def fit_loglog(xs, ys, floor):
    """Least-squares slope of ``log y`` against ``log x`` over points with ``y >= floor``.

    Returns ``(slope, rms_residual)``; raises DegenerateStudyError with fewer
    than three usable points.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    keep = np.isfinite(ys) & (ys >= floor)
    if keep.sum() < 3:
        raise DegenerateStudyError(
            f"only {int(keep.sum())} of {len(ys)} values above the fit floor {floor:g}"
        )
    lx, ly = np.log(xs[keep]), np.log(ys[keep])
    coef, *_ = np.polyfit(lx, ly, 1, full=True)
    resid = ly - np.polyval(coef, lx)
    return float(coef[0]), float(np.sqrt(np.mean(resid**2)))


def _integrate(cfg, step_map, h, steps):
    """Internal-state integration; returns the read-out states and wall time of stepping."""
    s = step_map.lift(np.asarray(cfg.mu0, dtype=float))
    out = [step_map.readout(s)]
    t0 = time.perf_counter()
    for k in range(steps):
        try:
            s = step_map.stepper(s, h)
        except ConvergenceError as exc:
            exc.step_index = k
            raise
        out.append(step_map.readout(s))
    return np.array(out), time.perf_counter() - t0


def _diagnostics(system, states):
    H = np.array([system.hamiltonian(z) for z in states])
    if system.casimirs:
        C = np.array([system.casimirs[0][0](z) for z in states])
        radius = np.linalg.norm(states, axis=1)
        orbit = radius - radius[0]
    else:
        C = np.full(len(states), np.nan)
        orbit = np.full(len(states), np.nan)
    return H, C, orbit


def _max_abs(values):
    values = np.asarray(values, dtype=float)
    if values.size == 0 or np.all(np.isnan(values)):
        return None
    return float(np.nanmax(np.abs(values)))


def _run(cfg):
    system, body = cfg.build_model()
    step_map = make_integrator(cfg.integrator, system, body, cfg.solver_settings(), cfg.scaling)
    states, wall = _integrate(cfg, step_map, cfg.h, cfg.steps)
    times = cfg.h * np.arange(cfg.steps + 1)
    H, C, orbit = _diagnostics(system, states)
    traj = Trajectory(times, states, {"H": H, "C": C, "orbit_err": orbit})
    return system, traj, wall


def run_trajectory(cfg):
    """Integrate ``cfg.steps`` steps of size ``cfg.h``; returns ``(Trajectory, StudyReport)``."""
    _, traj, _ = _run(cfg)
    d = traj.diagnostics
    dim = traj.states.shape[1]
    columns = ("step", "t") + tuple(f"mu{i + 1}" for i in range(dim)) + ("H", "C", "orbit_err")
    rows = []
    for k, (t, z) in enumerate(zip(traj.times, traj.states)):
        row = {"step": k, "t": float(t)}
        row.update({f"mu{i + 1}": float(v) for i, v in enumerate(z)})
        row.update(H=float(d["H"][k]), C=float(d["C"][k]), orbit_err=float(d["orbit_err"][k]))
        rows.append(row)
    summary = {
        "h_drift_max": _max_abs(d["H"] - d["H"][0]),
        "casimir_drift_max": _max_abs(d["C"] - d["C"][0]),
        "orbit_err_max": _max_abs(d["orbit_err"]),
    }
    return traj, StudyReport(_provenance(cfg, kind="run"), columns, rows, summary)


def _steps_for(t_final, h):
    n = int(round(t_final / h))
    if n < 1 or abs(n * h - t_final) > 1e-9 * max(1.0, t_final):
        raise ConfigError(f"h={h:g} does not divide t_final={t_final:g}")
    return n


def convergence_order(cfg, h_list=None):
    """Fit the order of the terminal error at ``cfg.t_final`` against the reference flow."""
    h_list = tuple(cfg.h_list if h_list is None else h_list)
    if len(h_list) < 3:
        raise ConfigError("an order study needs at least three step sizes")
    system, body = cfg.build_model()
    step_map = make_integrator(cfg.integrator, system, body, cfg.solver_settings(), cfg.scaling)
    ref = reference_flow(system, cfg.mu0, cfg.t_final, cfg.ref_tol)
    rows = []
    for h in h_list:
        n = _steps_for(cfg.t_final, h)
        states, _ = _integrate(cfg, step_map, h, n)
        rows.append({"h": h, "steps": n, "error": float(np.linalg.norm(states[-1] - ref))})
    slope, resid = fit_loglog(h_list, [r["error"] for r in rows], ERROR_FLOOR)
    H, C, orbit = _diagnostics(system, states)
    summary = {
        "h_drift_max": _max_abs(H - H[0]),
        "casimir_drift_max": _max_abs(C - C[0]),
        "orbit_err_max": _max_abs(orbit),
        "slope": slope,
        "slope_residual": resid,
    }
    cfg_echo = _provenance(cfg, kind="order", h_list=list(h_list))
    return StudyReport(cfg_echo, ("h", "steps", "error"), rows, summary)


def defect_study(cfg, h_list=None):
    """Poisson-map defect at ``cfg.mu0`` for each step size, with a log-log slope.

    When fewer than three defects exceed the noise floor (a Poisson map) the
    slope is reported as None.
    """
    h_list = tuple(cfg.h_list if h_list is None else h_list)
    if len(h_list) < 3:
        raise ConfigError("a defect study needs at least three step sizes")
    system, body = cfg.build_model()
    step_map = make_integrator(cfg.integrator, system, body, cfg.solver_settings(), cfg.scaling)
    z = np.asarray(cfg.mu0, dtype=float)
    rows = [{"h": h, "defect": poisson_defect(step_map, z, h, cfg.fd_step)} for h in h_list]
    summary = {"h_drift_max": None, "casimir_drift_max": None, "orbit_err_max": None}
    try:
        slope, resid = fit_loglog(h_list, [r["defect"] for r in rows], DEFECT_FLOOR)
        summary.update(slope=slope, slope_residual=resid, floor=False)
    except DegenerateStudyError:
        summary.update(slope=None, slope_residual=None, floor=True)
    summary["defect_max"] = max(r["defect"] for r in rows)
    return StudyReport(_provenance(cfg, kind="defect", h_list=list(h_list)), ("h", "defect"), rows, summary)


COMPARE_COLUMNS = (
    "integrator",
    "h",
    "steps",
    "terminal_error",
    "h_drift_max",
    "casimir_drift_max",
    "orbit_err_max",
    "wall_time",
)


def _compare_row(cfg):
    system, traj, wall = _run(cfg)
    ref = reference_flow(system, cfg.mu0, cfg.h * cfg.steps, cfg.ref_tol)
    d = traj.diagnostics
    return {
        "integrator": cfg.integrator,
        "h": cfg.h,
        "steps": cfg.steps,
        "terminal_error": float(np.linalg.norm(traj.states[-1] - ref)),
        "h_drift_max": _max_abs(d["H"] - d["H"][0]),
        "casimir_drift_max": _max_abs(d["C"] - d["C"][0]),
        "orbit_err_max": _max_abs(d["orbit_err"]),
        "wall_time": wall,
    }


def compare(cfgs, workers=1):
    """Side-by-side run of several configs sharing model and initial state."""
    cfgs = list(cfgs)
    if not cfgs:
        raise ConfigError("compare needs at least one config")
    first = cfgs[0]
    for c in cfgs[1:]:
        if (c.model, c.inertia, c.mu0) != (first.model, first.inertia, first.mu0):
            raise ConfigError("compared configs must share model, inertia and initial state")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_compare_row, cfgs))
    else:
        rows = [_compare_row(c) for c in cfgs]
    summary = {
        key: max((r[key] for r in rows if r[key] is not None), default=None)
        for key in ("h_drift_max", "casimir_drift_max", "orbit_err_max")
    }
    echo = _provenance(first, kind="compare", integrators=[c.integrator for c in cfgs])
    return StudyReport(echo, COMPARE_COLUMNS, rows, summary)
