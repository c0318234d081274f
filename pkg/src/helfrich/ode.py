"""Adaptive integration of the disc profile system with event detection.

The governing first-order system for the unit-speed profile (minus branch) is

    r'   = cos(phi)
    z'   = sin(phi)
    phi' = -2 cos(phi)/z - sin(phi)/r - 2 c_o

started on the rotation axis with r(0) = 0, z(0) = z_o, phi(0) = 0.  The
system is singular at r = 0, so integration starts from a Taylor expansion at
sigma = eps_axis.  Stepping is done by the selected kernel backend; dense
output between accepted steps uses cubic Hermite interpolation, and events
are located by bisection on the interpolant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .errors import BlowUpError, DomainError, NoEventError
from .geometry import (CurvatureSample, EnergyParams, ProfileState,
                       axis_limit_curvature, curvatures)

# Stop-event kinds.
EV_Z_ZERO = "z_crosses_zero"
EV_PHI_HALF_PI = "phi_reaches_half_pi"
EV_R_TARGET = "r_reaches_target"
EV_SIGMA_MAX = "sigma_max"
EV_BLOW_UP = "blow_up"

_R_FLOOR = 1e-9


@dataclass(frozen=True)
class IntegratorConfig:
    rel_tol: float = 1e-11
    abs_tol: float = 1e-13
    eps_axis: float = 1e-6
    max_sigma: float = 30.0
    dense_samples: int = 1500
    eps_z: float = 1e-8
    max_steps: int = 40000

    def __post_init__(self):
        if not (0.0 < self.eps_axis <= 1e-4):
            raise DomainError("eps_axis must lie in (0, 1e-4]")
        if not (0.0 < self.rel_tol <= 1e-3 and 0.0 < self.abs_tol <= 1e-3):
            raise DomainError("tolerances must lie in (0, 1e-3]")
        if self.dense_samples < 16:
            raise DomainError("dense_samples must be at least 16")


@dataclass(frozen=True)
class StopEvent:
    kind: str
    sigma_stop: float
    target: float | None = None


def rhs(state: ProfileState, params: EnergyParams):
    """Right-hand side (r', z', phi') of the profile system.

    Only the curvature-offset term carries the branch sign: the plus branch
    (the z -> -z mirror of the minus branch) has phi' = -2cos(phi)/z
    - sin(phi)/r + 2 c_o.
    """
    if state.r <= 0.0:
        raise DomainError("rhs needs r > 0")
    if state.z == 0.0:
        raise DomainError("rhs undefined at z = 0")
    cphi = math.cos(state.phi)
    sphi = math.sin(state.phi)
    sc = -1.0 if params.sign_branch == "minus" else 1.0
    dphi = -2.0 * cphi / state.z - sphi / state.r + sc * 2.0 * params.c_o
    return cphi, sphi, dphi


def series_start(z_o: float, config: IntegratorConfig,
                 params: EnergyParams) -> ProfileState:
    """Taylor-expanded state at sigma = eps_axis regularizing the axis.

    r = eps, phi = phi1*eps, z = z_o + phi1*eps^2/2 with phi1 the axis limit
    of phi'; dropped terms are O(eps^3).
    """
    if z_o == 0.0:
        raise DomainError("series start requires z_o != 0")
    phi1 = axis_limit_curvature(z_o, params)
    eps = config.eps_axis
    return ProfileState(sigma=eps, r=eps, z=z_o + 0.5 * phi1 * eps * eps,
                        phi=phi1 * eps)


def _hermite(t, y0, f0, y1, f1, h):
    """Cubic Hermite basis combination; t in [0,1] within a step of width h."""
    t2 = t * t
    t3 = t2 * t
    return ((2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * h * f0
            + (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * h * f1)


class StepInterpolant:
    """Piecewise cubic Hermite interpolant over accepted integrator steps."""

    def __init__(self, sig, ys, fs):
        self.sig = sig
        self.ys = ys
        self.fs = fs

    @property
    def sigma_min(self):
        return self.sig[0]

    @property
    def sigma_max(self):
        return self.sig[-1]

    def __call__(self, s):
        """State vector(s) at arc length s (scalar or array)."""
        s_arr = np.atleast_1d(np.asarray(s, dtype=float))
        idx = np.clip(np.searchsorted(self.sig, s_arr, side="right") - 1,
                      0, len(self.sig) - 2)
        h = self.sig[idx + 1] - self.sig[idx]
        t = ((s_arr - self.sig[idx]) / h)[:, None]
        out = _hermite(t, self.ys[idx], self.fs[idx], self.ys[idx + 1],
                       self.fs[idx + 1], h[:, None])
        if np.isscalar(s) or np.ndim(s) == 0:
            return out[0]
        return out


class Trajectory:
    """Sampled solution of the profile system up to a stop event.

    Dense samples are uniform in sigma on [eps_axis, sigma_stop]; the stored
    phi' at each sample is the right-hand side evaluated at the sampled
    state, so cos(phi)^2 + sin(phi)^2 = 1 holds identically along the dense
    output.
    """

    def __init__(self, params: EnergyParams, z_o: float, interp: StepInterpolant,
                 event: StopEvent, config: IntegratorConfig):
        self.params = params
        self.z_o = z_o
        self.interp = interp
        self.event = event
        self.config = config
        n = config.dense_samples
        self.sigma = np.linspace(interp.sigma_min, event.sigma_stop, n)
        states = interp(self.sigma)
        self.r = states[:, 0]
        self.z = states[:, 1]
        self.phi = states[:, 2]
        self.phiprime = self.rhs_phi(self.r, self.z, self.phi)

    def rhs_phi(self, r, z, phi):
        sc = -1.0 if self.params.sign_branch == "minus" else 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            return (-2.0 * np.cos(phi) / z - np.sin(phi) / r
                    + sc * 2.0 * self.params.c_o)

    def __len__(self):
        return len(self.sigma)

    def state(self, i: int) -> ProfileState:
        return ProfileState(sigma=self.sigma[i], r=self.r[i], z=self.z[i],
                            phi=self.phi[i])

    def samples(self):
        """Iterate over (ProfileState, phi') pairs."""
        for i in range(len(self.sigma)):
            yield self.state(i), self.phiprime[i]

    def curvature(self, i: int) -> CurvatureSample:
        return curvatures(self.state(i), self.phiprime[i], self.params)

    def eval(self, s):
        """(r, z, phi) at arbitrary arc length(s) via the step interpolant."""
        return self.interp(s)

    def mean_curvature_offset(self):
        """Array of H + c_o along the dense samples."""
        kn = np.sin(self.phi) / self.r
        return 0.5 * (self.phiprime + kn) + self.params.c_o


def _locate_event(interp, lo, hi, gfun, tol):
    """Bisect a sign change of gfun(state) on [lo, hi] of the interpolant."""
    glo = gfun(interp(lo))
    ghi = gfun(interp(hi))
    if glo == 0.0:
        return lo
    if ghi == 0.0:
        return hi
    if glo * ghi > 0.0:
        return None
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo <= max(tol, 4e-16 * abs(mid)):
            return mid
        gm = gfun(interp(mid))
        if gm == 0.0:
            return mid
        if glo * gm < 0.0:
            hi = mid
        else:
            lo, glo = mid, gm
    return 0.5 * (lo + hi)


def _normalize_stop(stop_spec):
    spec = []
    for item in stop_spec:
        if isinstance(item, str):
            spec.append((item, None))
        else:
            kind, value = item
            spec.append((kind, float(value)))
    kinds = [k for k, _ in spec]
    for k in kinds:
        if k not in (EV_Z_ZERO, EV_PHI_HALF_PI, EV_R_TARGET, EV_SIGMA_MAX):
            raise DomainError(f"unknown stop event {k!r}")
    return spec


def integrate(z_o: float, params: EnergyParams, config: IntegratorConfig,
              stop_spec, allow_blowup: bool = False,
              backend=None) -> Trajectory:
    """Integrate a disc profile from the axis until the first stop event.

    stop_spec is an ordered list of event kinds, e.g.
    [EV_PHI_HALF_PI, EV_SIGMA_MAX] or [(EV_R_TARGET, 0.7)].  When several
    events trigger within one step the earliest sigma wins, ties broken by
    list order.  BlowUpError / NoEventError carry the partial trajectory
    unless the corresponding stop was requested or allow_blowup is set.
    """
    if backend is None:
        backend = _kernel.backend
    spec = _normalize_stop(stop_spec)
    if not spec:
        raise DomainError("stop_spec must name at least one event")
    kinds = [k for k, _ in spec]

    start = series_start(z_o, config, params)
    sign = -1.0 if params.sign_branch == "minus" else 1.0
    # The kernel integrates the minus-branch system; the plus branch is its
    # z -> -z, phi -> -phi pullback.
    if params.sign_branch == "minus":
        y0 = np.array([start.r, start.z, start.phi])
    else:
        y0 = np.array([start.r, -start.z, -start.phi])

    want_z = EV_Z_ZERO in kinds
    want_phi = EV_PHI_HALF_PI in kinds
    r_target = next((v for k, v in spec if k == EV_R_TARGET), None)

    ev_z_eps = config.eps_z if want_z else math.nan
    z_sign = math.copysign(1.0, y0[1])
    blow_thr = 1.0 / config.abs_tol

    sig, ys, fs, status = backend.integrate_raw(
        3, y0, start.sigma, params.c_o, 0.0, config.rel_tol, config.abs_tol,
        config.max_sigma, ev_z_eps, z_sign, want_phi,
        math.nan if r_target is None else float(r_target), _R_FLOOR,
        blow_thr, config.max_steps)

    if params.sign_branch == "plus":
        ys = ys.copy()
        fs = fs.copy()
        ys[:, 1] *= -1.0
        ys[:, 2] *= -1.0
        fs[:, 1] *= -1.0
        fs[:, 2] *= -1.0
    interp = StepInterpolant(sig, ys, fs)

    # In model coordinates the z event reads sign(z_o) * z <= eps_z for both
    # sign branches.
    event = _resolve_event(interp, status, spec, config,
                           math.copysign(1.0, z_o))
    traj = Trajectory(params, z_o, interp, event, config)

    if event.kind == EV_BLOW_UP and not allow_blowup:
        raise BlowUpError(f"integration diverged at sigma = {event.sigma_stop:.6g}",
                          trajectory=traj)
    if event.kind == EV_SIGMA_MAX and EV_SIGMA_MAX not in kinds:
        raise NoEventError("no requested event before max_sigma", trajectory=traj)
    return traj


def _resolve_event(interp, status, spec, config, z_sign):
    """Map a coarse kernel status to a precisely located StopEvent."""
    sig = interp.sig
    if status in (_kernel.ST_R_FLOOR, _kernel.ST_BLOWUP, _kernel.ST_STALL,
                  _kernel.ST_MAXSTEPS):
        return StopEvent(EV_BLOW_UP, sig[-1])
    if status == _kernel.ST_SIGMA_MAX and not any(
            k in (EV_Z_ZERO, EV_PHI_HALF_PI, EV_R_TARGET) for k, _ in spec):
        return StopEvent(EV_SIGMA_MAX, sig[-1])

    # Search the final step for the earliest requested crossing.
    lo = sig[-2] if len(sig) >= 2 else sig[-1]
    hi = sig[-1]
    tol = max(config.abs_tol, 1e-14)
    candidates = []
    for order, (kind, value) in enumerate(spec):
        if kind == EV_Z_ZERO:
            g = lambda st: z_sign * st[1] - config.eps_z
        elif kind == EV_PHI_HALF_PI:
            g = lambda st: math.cos(st[2])
        elif kind == EV_R_TARGET:
            g = lambda st, v=value: st[0] - v
        else:
            continue
        s_ev = _locate_event(interp, lo, hi, g, tol)
        if s_ev is not None:
            candidates.append((s_ev, order, kind, value))
    if candidates:
        candidates.sort(key=lambda c: (c[0], c[1]))
        s_ev, _, kind, value = candidates[0]
        return StopEvent(kind, s_ev, target=value)
    if status == _kernel.ST_SIGMA_MAX:
        return StopEvent(EV_SIGMA_MAX, sig[-1])
    # Kernel flagged an event endpoint but no crossing was bracketed in the
    # final step (can happen if the condition held from the start).
    return StopEvent(EV_BLOW_UP, sig[-1])
