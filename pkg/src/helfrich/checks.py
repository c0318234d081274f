"""Identity evaluators used to audit integrated trajectories.

Two flavours are provided.

* Algebraic evaluators use the stored phi' (the governing right-hand side at
  each sample).  With that choice the reduced-equation identity
  (H + c_o) z + nu3 = 0 and the vanishing of the parallel flux are exact
  consequences of the formulas, so these checks detect sign or formula
  mismatches between modules, not integration error.

* Finite-difference evaluators re-derive derivatives from the sampled values
  alone (fourth-order stencils on the uniform dense grid) and therefore test
  that the sampled curve actually satisfies the equations; they are limited
  by the dense-output interpolation error.
"""

from __future__ import annotations

import math

import numpy as np


def fd_derivative(values, h):
    """Fourth-order first derivative of uniformly sampled values."""
    v = np.asarray(values, dtype=float)
    n = len(v)
    if n < 7:
        return np.gradient(v, h)
    d = np.empty_like(v)
    d[2:-2] = (v[:-4] - 8.0 * v[1:-3] + 8.0 * v[3:-1] - v[4:]) / (12.0 * h)
    # one-sided fourth-order stencils at the ends
    c = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / (12.0 * h)
    d[0] = c @ v[:5]
    d[1] = c @ v[1:6]
    d[-1] = -(c @ v[-1:-6:-1])
    d[-2] = -(c @ v[-2:-7:-1])
    return d


def fd_second_derivative(values, h):
    """Fourth-order second derivative of uniformly sampled values."""
    v = np.asarray(values, dtype=float)
    n = len(v)
    if n < 9:
        return np.gradient(np.gradient(v, h), h)
    d = np.empty_like(v)
    d[2:-2] = (-v[:-4] + 16.0 * v[1:-3] - 30.0 * v[2:-2] + 16.0 * v[3:-1]
               - v[4:]) / (12.0 * h * h)
    c = np.array([45.0, -154.0, 214.0, -156.0, 61.0, -10.0]) / (12.0 * h * h)
    d[0] = c @ v[:6]
    d[1] = c @ v[1:7]
    d[-1] = c @ v[-1:-7:-1]
    d[-2] = c @ v[-2:-8:-1]
    return d


def profile_curvature_arrays(traj):
    """(u, H, K, kn, nu3) along the dense samples using the stored phi'.

    u is the reduced-equation curvature offset: H + c_o on the minus branch
    and H - c_o on the plus branch, so u = -nu3 / z on disc trajectories of
    either branch.
    """
    kn = np.sin(traj.phi) / traj.r
    H = 0.5 * (traj.phiprime + kn)
    sc = -1.0 if traj.params.sign_branch == "minus" else 1.0
    u = H - sc * traj.params.c_o
    K = traj.phiprime * kn
    return u, H, K, kn, np.cos(traj.phi)


def reduced_equation_residual(traj):
    """Max |u z + nu3| along the samples, u the branch curvature offset."""
    u, _, _, _, nu3 = profile_curvature_arrays(traj)
    return float(np.max(np.abs(u * traj.z + nu3)))


def flux_values(traj):
    """Parallel flux r*(u * nu3' - nu3 * H' + u^2 * z') along the samples.

    nu3' follows from the stored phi'; H' is the derivative of the stored
    mean curvature along the flow (chain rule through the governing system),
    so on an exact trajectory of the disc system this vanishes identically.
    """
    u, H, K, kn, nu3 = profile_curvature_arrays(traj)
    r, z, phi, pp = traj.r, traj.z, traj.phi, traj.phiprime
    sphi = np.sin(phi)
    cphi = np.cos(phi)
    # phi'' = d/dsigma of the right-hand side along the flow; the offset
    # term is constant, so this is branch independent
    phi2 = (sphi * cphi / r ** 2 + 2.0 * sphi * cphi / z ** 2
            + (2.0 * sphi / z - cphi / r) * pp)
    Hp = 0.5 * (phi2 + pp * cphi / r - sphi * cphi / r ** 2)
    dnu3 = -sphi * pp
    return r * (u * dnu3 - nu3 * Hp + u * u * sphi)


def flux_values_fd(traj):
    """Flux evaluated with H' and nu3' re-derived by finite differences.

    Meaningful only where the stored mean curvature is well conditioned;
    combine with interior_mask to skip samples next to a z = 0 boundary.
    """
    u, H, K, kn, nu3 = profile_curvature_arrays(traj)
    h = traj.sigma[1] - traj.sigma[0]
    Hp = fd_derivative(H, h)
    dnu3 = fd_derivative(nu3, h)
    return traj.r * (u * dnu3 - nu3 * Hp + u * u * np.sin(traj.phi))


def interior_mask(traj, z_floor=1e-6, margin=3):
    """Samples away from the grid ends and from the z = 0 singular set."""
    n = len(traj.sigma)
    mask = np.abs(traj.z) > z_floor
    mask[:margin] = False
    if margin:
        mask[-margin:] = False
    return mask


def reduced_equation_residual_fd(traj, mask=None):
    """Reduced-equation residual with phi' re-derived by finite differences."""
    h = traj.sigma[1] - traj.sigma[0]
    pp = fd_derivative(traj.phi, h)
    kn = np.sin(traj.phi) / traj.r
    sc = -1.0 if traj.params.sign_branch == "minus" else 1.0
    u = 0.5 * (pp + kn) - sc * traj.params.c_o
    res = np.abs(u * traj.z + np.cos(traj.phi))
    if mask is not None:
        res = res[mask]
    return float(np.max(res))


def unit_speed_residual(traj):
    """Max |r'^2 + z'^2 - 1| with (r', z') = (cos phi, sin phi) at samples."""
    c = np.cos(traj.phi)
    s = np.sin(traj.phi)
    return float(np.max(np.abs(c * c + s * s - 1.0)))


def gauss_curvature_consistency(traj):
    """Max |K r + r''| with r'' from finite differences of sampled r."""
    h = traj.sigma[1] - traj.sigma[0]
    rpp = fd_second_derivative(traj.r, h)
    _, _, K, _, _ = profile_curvature_arrays(traj)
    m = slice(3, -3)
    return float(np.max(np.abs(K[m] * traj.r[m] + rpp[m])))


def shape_equation_residual(sigma, r, phi, H, K, c_o, margin=4, mask=None):
    """Interior residual of the fourth-order shape equation

        Delta H + 2 (H + c_o) * (H (H - c_o) - K) = 0

    with the surface Laplacian of a profile function f given by
    Delta f = f'' + (r'/r) f'.  Derivatives of H come from finite
    differences on the (uniform) sigma grid; the first and last `margin`
    samples are excluded, plus anything excluded by `mask`.

    The second-derivative stencil amplifies dense-output interpolation
    wiggle by 1/h^2, so callers should evaluate this on a coarse uniform
    resampling (a few hundred points), not on the full dense grid.
    """
    h = sigma[1] - sigma[0]
    Hp = fd_derivative(H, h)
    Hpp = fd_second_derivative(H, h)
    lap = Hpp + np.cos(phi) / r * Hp
    res = lap + 2.0 * (H + c_o) * (H * (H - c_o) - K)
    keep = np.ones(len(sigma), dtype=bool)
    keep[:margin] = False
    if margin:
        keep[-margin:] = False
    if mask is not None:
        keep &= mask
    return float(np.max(np.abs(res[keep])))


def coarse_sample_count(traj, n_max=240, per_steps=3):
    """Resampling count keeping roughly `per_steps` integrator steps per
    sample, so FD second derivatives do not amplify interpolation wiggle."""
    n_steps = max(len(traj.interp.sig) - 1, 8)
    return int(min(n_max, max(24, n_steps // per_steps)))


def disc_shape_equation_residual(traj, n_coarse=None, z_floor=1e-6, margin=4):
    """Shape-equation residual of a disc trajectory on a coarse resampling.

    H is taken from the reduced form -(cos phi)/z + c_o (branch signed),
    which stays well conditioned away from z = 0; samples with |z| below
    z_floor are masked out.
    """
    if n_coarse is None:
        n_coarse = coarse_sample_count(traj)
    s = np.linspace(traj.sigma[0], traj.sigma[-1], n_coarse)
    st = traj.eval(s)
    r, z, phi = st[:, 0], st[:, 1], st[:, 2]
    sc = -1.0 if traj.params.sign_branch == "minus" else 1.0
    ok = np.abs(z) > z_floor
    zsafe = np.where(ok, z, 1.0)
    H = -np.cos(phi) / zsafe + sc * traj.params.c_o
    pp = 2.0 * H - np.sin(phi) / r  # from H = (phi' + kn)/2
    K = pp * np.sin(phi) / r
    # dilate the masked zone so no FD stencil touches an invalid sample
    bad = ~ok
    for shift in range(1, 4):
        bad[shift:] |= ~ok[:-shift]
        bad[:-shift] |= ~ok[shift:]
    return shape_equation_residual(s, r, phi, H, K, traj.params.c_o,
                                   margin=margin, mask=~bad)
