"""Annular critical patches with nonzero parallel flux.

Away from the rotation axis the axisymmetric shape equation admits a first
integral along parallels with a flux constant A_bar; discs force A_bar = 0,
but annuli do not.  Writing zeta = phi', the profile system extends to

    r'    = cos(phi)
    z'    = sin(phi)
    phi'  = zeta
    zeta' = 2 (H + c_o)(H + c_o - zeta) tan(phi)
            + 2 (H - zeta) cos(phi)/r - 2 A_bar / (r cos(phi))

with H = (zeta + sin(phi)/r) / 2.  The right-hand side degenerates at
cos(phi) = 0 and r = 0; integration stops there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernel
from .checks import shape_equation_residual
from .errors import BlowUpError, DomainError, NoEventError
from .geometry import EnergyParams
from .ode import (EV_PHI_HALF_PI, EV_SIGMA_MAX, IntegratorConfig, StepInterpolant,
                  StopEvent, _locate_event)


@dataclass(frozen=True)
class AnnulusState:
    """One point of an annular profile; zeta is the tangent-angle rate phi'."""

    sigma: float
    r: float
    z: float
    phi: float
    zeta: float


def annulus_rhs(state: AnnulusState, a_bar: float, params: EnergyParams):
    """Right-hand side (r', z', phi', zeta') of the annulus system."""
    if state.r <= 0.0:
        raise DomainError("annulus rhs needs r > 0")
    cphi = math.cos(state.phi)
    if cphi == 0.0:
        raise DomainError("annulus rhs undefined at cos(phi) = 0")
    sphi = math.sin(state.phi)
    H = 0.5 * (state.zeta + sphi / state.r)
    u = H + params.c_o
    dzeta = (2.0 * u * (u - state.zeta) * (sphi / cphi)
             + 2.0 * (H - state.zeta) * cphi / state.r
             - 2.0 * a_bar / (state.r * cphi))
    return cphi, sphi, state.zeta, dzeta


class AnnulusTrajectory:
    """Densely sampled annulus solution up to a stop event."""

    def __init__(self, params: EnergyParams, a_bar: float,
                 interp: StepInterpolant, event: StopEvent,
                 config: IntegratorConfig):
        self.params = params
        self.a_bar = a_bar
        self.interp = interp
        self.event = event
        self.config = config
        self.sigma = np.linspace(interp.sigma_min, event.sigma_stop,
                                 config.dense_samples)
        st = interp(self.sigma)
        self.r = st[:, 0]
        self.z = st[:, 1]
        self.phi = st[:, 2]
        self.zeta = st[:, 3]

    def __len__(self):
        return len(self.sigma)

    def state(self, i: int) -> AnnulusState:
        return AnnulusState(self.sigma[i], self.r[i], self.z[i], self.phi[i],
                            self.zeta[i])

    def eval(self, s):
        return self.interp(s)

    def mean_curvature(self):
        return 0.5 * (self.zeta + np.sin(self.phi) / self.r)


def integrate_annulus(init: AnnulusState, a_bar: float, params: EnergyParams,
                      config: IntegratorConfig, sigma_max: float | None = None,
                      allow_blowup: bool = False,
                      backend=None) -> AnnulusTrajectory:
    """Integrate the annulus system until cos(phi) -> 0, r -> 0 or sigma_max.

    Existence is only short-time; the cos(phi) = 0 event is always armed
    because the right-hand side degenerates there.
    """
    annulus_rhs(init, a_bar, params)  # validate the initial state
    if backend is None:
        backend = _kernel.backend
    if sigma_max is None:
        sigma_max = config.max_sigma
    y0 = np.array([init.r, init.z, init.phi, init.zeta])
    blow_thr = 1.0 / config.abs_tol
    sig, ys, fs, status = backend.integrate_raw(
        4, y0, init.sigma, params.c_o, a_bar, config.rel_tol, config.abs_tol,
        init.sigma + sigma_max, math.nan, 1.0, True, math.nan, 1e-9,
        blow_thr, config.max_steps)
    interp = StepInterpolant(sig, ys, fs)

    if status == _kernel.ST_SIGMA_MAX:
        event = StopEvent(EV_SIGMA_MAX, sig[-1])
    elif status == _kernel.ST_EV_COSPHI:
        lo = sig[-2] if len(sig) >= 2 else sig[-1]
        s_ev = _locate_event(interp, lo, sig[-1],
                             lambda st: math.cos(st[2]), config.abs_tol)
        # stop a hair before the degeneracy so the samples stay evaluable
        s_ev = lo + 0.999 * ((s_ev if s_ev is not None else sig[-1]) - lo)
        event = StopEvent(EV_PHI_HALF_PI, s_ev)
    else:
        event = StopEvent("blow_up", sig[-1])

    traj = AnnulusTrajectory(params, a_bar, interp, event, config)
    if event.kind == "blow_up" and not allow_blowup:
        raise BlowUpError(
            f"annulus integration diverged at sigma = {event.sigma_stop:.6g}",
            trajectory=traj)
    return traj


def flux_values(traj: AnnulusTrajectory):
    """Parallel flux r*(u*nu3' - nu3*H' + u^2 z') along the samples.

    nu3' = -sin(phi) zeta is exact per sample; H' is re-derived by finite
    differences of the sampled mean curvature, so constancy of the returned
    values at the imposed A_bar checks the integrated trajectory, not the
    algebra of the right-hand side.
    """
    from .checks import fd_derivative

    H = traj.mean_curvature()
    u = H + traj.params.c_o
    h = traj.sigma[1] - traj.sigma[0]
    Hp = fd_derivative(H, h)
    nu3 = np.cos(traj.phi)
    dnu3 = -np.sin(traj.phi) * traj.zeta
    return traj.r * (u * dnu3 - nu3 * Hp + u * u * np.sin(traj.phi))


def shape_residual(traj: AnnulusTrajectory, n_coarse: int | None = None,
                   margin: int = 4) -> float:
    """Interior residual of the fourth-order shape equation on the annulus.

    H = (zeta + sin(phi)/r)/2 involves no singular quotient here, so a
    coarse uniform resampling gives well-conditioned finite differences.
    """
    from .checks import coarse_sample_count

    if n_coarse is None:
        n_coarse = coarse_sample_count(traj)
    s = np.linspace(traj.sigma[0], traj.sigma[-1], n_coarse)
    st = traj.eval(s)
    r, z, phi, zeta = st[:, 0], st[:, 1], st[:, 2], st[:, 3]
    kn = np.sin(phi) / r
    H = 0.5 * (zeta + kn)
    K = zeta * kn
    return shape_equation_residual(s, r, phi, H, K, traj.params.c_o,
                                   margin=margin)
