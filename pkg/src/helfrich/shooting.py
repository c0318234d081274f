"""Two-point boundary-value solver for axially symmetric critical discs.

A disc profile is determined by the initial height z_o and the arc length L
of the generating curve.  Each admissible boundary regime supplies two
scalar residuals (R1, R2) that vanish at critical discs:

  b0_geodesic      b = 0; boundary is a geodesic parallel (cos(phi) = 0)
                   whose radius is selected by the normal-derivative
                   condition (alpha/r^2 - beta) kn - a H' = 0.
  geodesic_z0      b != 0; geodesic parallel in the plane z = 0.  L is fixed
                   by the z = 0 crossing, leaving a single residual
                   (a+b) sin(phi) + 2 a c_o r in z_o alone.
  balanced_radius  b != 0; non-geodesic parallel of radius sqrt(alpha/beta),
                   subject to the admissibility restriction
                   c_o^2 < (a+b)^2 beta / (4 a^2 alpha).
  mixed            b != 0; non-geodesic parallel of radius != sqrt(alpha/beta)
                   along which a r cos(phi) - b z sin(phi) = 0 holds, with
                   phi'(L) pinned by the tangential boundary condition.

shoot() scans z_o over a bracket, seeds candidate boundary lengths from
crossings of the case's locator function along each trajectory, and polishes
(z_o, L) by a damped two-variable Newton iteration (scalar bisection/secant
for geodesic_z0).  All isolated roots in the bracket are returned.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (DivergedError, DomainError, InadmissibleError,
                     NoRootError, NoZeroCrossingError, WrongCaseError)
from .geometry import CurvatureSample, EnergyParams
from .ode import (EV_SIGMA_MAX, EV_Z_ZERO, IntegratorConfig, Trajectory,
                  integrate)
from . import ode as _ode
from .errors import BlowUpError, NoEventError

logger = logging.getLogger("helfrich")

CASE_B0 = "b0_geodesic"
CASE_GEODESIC_Z0 = "geodesic_z0"
CASE_BALANCED = "balanced_radius"
CASE_MIXED = "mixed"
ALL_CASES = (CASE_B0, CASE_GEODESIC_Z0, CASE_BALANCED, CASE_MIXED)

RESIDUAL_TOL = 1e-8
_POLISH_TOL = 1e-11
_Z_SAFE = 1e-5
_MAX_CANDIDATES = 8


@dataclass(frozen=True)
class BoundaryCase:
    """Boundary regime tag plus the target radius where one applies."""

    tag: str
    target_radius: float | None = None

    def __post_init__(self):
        if self.tag not in ALL_CASES:
            raise DomainError(f"unknown boundary case {self.tag!r}")

    def validate(self, params: EnergyParams):
        if self.tag == CASE_B0 and params.b != 0.0:
            raise WrongCaseError("b0_geodesic requires b = 0")
        if self.tag != CASE_B0 and params.b == 0.0:
            raise WrongCaseError(f"{self.tag} requires b != 0")
        if self.tag == CASE_GEODESIC_Z0 and params.a + params.b == 0.0:
            raise WrongCaseError(
                "no critical discs with a + b = 0 in the geodesic_z0 regime")
        if self.tag == CASE_BALANCED:
            lim = (params.a + params.b) ** 2 * params.beta / (
                4.0 * params.a ** 2 * params.alpha)
            if params.c_o ** 2 >= lim:
                raise InadmissibleError(
                    f"balanced_radius needs c_o^2 < (a+b)^2 beta/(4 a^2 alpha)"
                    f" = {lim:.6g}, got c_o^2 = {params.c_o ** 2:.6g}")

    def radius(self, params: EnergyParams) -> float | None:
        if self.tag == CASE_BALANCED:
            return (self.target_radius if self.target_radius is not None
                    else params.balanced_radius)
        return self.target_radius


def make_case(tag: str, params: EnergyParams) -> BoundaryCase:
    case = BoundaryCase(tag, params.balanced_radius
                        if tag == CASE_BALANCED else None)
    case.validate(params)
    return case


@dataclass(frozen=True)
class BoundarySample:
    """Terminal quantities of a trajectory at sigma = L.

    For boundaries on the z = 0 plane, phi', u = H + c_o and H' are obtained
    by quadratic extrapolation from inside |z| > 1e-5, where the reduced
    quotient -cos(phi)/z is well conditioned.
    """

    sigma: float
    r: float
    z: float
    phi: float
    phi_prime: float
    u: float
    H: float
    H_prime: float
    K: float
    kappa_g: float
    kappa_n: float
    nu3: float
    S: float

    def curvature_sample(self) -> CurvatureSample:
        return CurvatureSample(H=self.H, K=self.K, kappa_g=self.kappa_g,
                               kappa_n=self.kappa_n, nu3=self.nu3, S=self.S,
                               H_alt=self.H)


def _sample_at(traj: Trajectory, s: float):
    st = traj.eval(s)
    return float(st[0]), float(st[1]), float(st[2])


def boundary_sample(traj: Trajectory, L: float) -> BoundarySample:
    """Terminal curvature data of a (minus-branch) trajectory at sigma = L."""
    params = traj.params
    c_o = params.c_o
    r, z, phi = _sample_at(traj, L)
    sphi, cphi = math.sin(phi), math.cos(phi)
    kn = sphi / r

    if abs(z) >= _Z_SAFE:
        pp = -2.0 * cphi / z - kn - 2.0 * c_o
        u = -cphi / z
        Hp = sphi * (pp * z + cphi) / (z * z)
    else:
        # quadratic extrapolation from three interior points
        d = max(8.0 * _Z_SAFE, 4.0 * (traj.sigma[1] - traj.sigma[0]))
        vals = []
        for j in (1, 2, 3):
            rj, zj, phij = _sample_at(traj, L - j * d)
            sj, cj = math.sin(phij), math.cos(phij)
            ppj = -2.0 * cj / zj - sj / rj - 2.0 * c_o
            uj = -cj / zj
            Hpj = sj * (ppj * zj + cj) / (zj * zj)
            vals.append((ppj, uj, Hpj))
        pp, u, Hp = (3.0 * a - 3.0 * b + c for a, b, c in zip(*vals))

    H = u - c_o
    K = pp * kn
    S = 0.5 * (pp - kn)
    return BoundarySample(sigma=L, r=r, z=z, phi=phi, phi_prime=pp, u=u, H=H,
                          H_prime=Hp, K=K, kappa_g=-cphi / r, kappa_n=kn,
                          nu3=cphi, S=S)


def _z0_boundary(traj: Trajectory) -> BoundarySample:
    """Boundary sample at the extrapolated z = 0 crossing of an event-stopped
    trajectory."""
    s = traj.event.sigma_stop
    s_hi = traj.interp.sigma_max
    for _ in range(3):
        r, z, phi = _sample_at(traj, s)
        sphi = math.sin(phi)
        if sphi == 0.0:
            break
        s = min(s_hi, s - z / sphi)
    bs = boundary_sample(traj, s)
    return bs


# ---------------------------------------------------------------------------
# residual functions


def residuals_b0(traj: Trajectory, params: EnergyParams, L: float | None = None):
    """Geodesic condition and the radius-selecting normal-derivative
    condition for b = 0."""
    if params.b != 0.0:
        raise WrongCaseError("residuals_b0 requires b = 0")
    bs = boundary_sample(traj, traj.event.sigma_stop if L is None else L)
    R1 = bs.nu3
    R2 = ((params.alpha / bs.r ** 2 - params.beta) * bs.kappa_n
          - params.a * bs.H_prime)
    return R1, R2


def residuals_geodesic_z0(traj: Trajectory, params: EnergyParams):
    """Boundary residuals for a geodesic parallel in the plane z = 0.

    R1 (geodesic condition) vanishes automatically at the crossing and is a
    diagnostic; R2 = (a+b) sin(phi) + 2 a c_o r is the shooting residual.
    """
    if params.b == 0.0:
        raise WrongCaseError("geodesic_z0 requires b != 0")
    if params.a + params.b == 0.0:
        raise WrongCaseError("no geodesic_z0 discs exist for a = -b")
    if traj.event.kind != EV_Z_ZERO:
        raise NoZeroCrossingError(
            f"trajectory stopped by {traj.event.kind}, not a z = 0 crossing")
    bs = _z0_boundary(traj)
    R1 = bs.nu3
    R2 = (params.a + params.b) * math.sin(bs.phi) + 2.0 * params.a * params.c_o * bs.r
    return R1, R2


def residuals_balanced(traj: Trajectory, params: EnergyParams,
                       L: float | None = None):
    """Radius pin r(L) = sqrt(alpha/beta) plus the shared angular condition."""
    case = BoundaryCase(CASE_BALANCED)
    case.validate(params)
    bs = boundary_sample(traj, traj.event.sigma_stop if L is None else L)
    R1 = bs.r - params.balanced_radius
    R2 = (params.a + params.b) * math.sin(bs.phi) + 2.0 * params.a * params.c_o * bs.r
    return R1, R2


def residuals_mixed(traj: Trajectory, params: EnergyParams,
                    L: float | None = None):
    """Boundary residuals of the remaining (non-geodesic, unbalanced) case."""
    if params.b == 0.0:
        raise WrongCaseError("mixed requires b != 0")
    bs = boundary_sample(traj, traj.event.sigma_stop if L is None else L)
    R1 = params.a * bs.r * bs.nu3 - params.b * bs.z * math.sin(bs.phi)
    rhs_pp = (2.0 * (params.alpha / bs.r ** 2 - params.beta) * bs.z
              / (params.a * bs.r) + bs.kappa_n + 2.0 * params.c_o)
    R2 = bs.phi_prime - rhs_pp
    return R1, R2


def diagnostic_d1(bs: BoundarySample, params: EnergyParams) -> float:
    """Residual of the angular-rate boundary identity
    phi'(L) = sin(phi)/r + 2 c_o, automatic at converged geodesic_z0 and
    balanced_radius solutions."""
    return bs.phi_prime - bs.kappa_n - 2.0 * params.c_o


def diagnostic_el2(bs: BoundarySample, params: EnergyParams) -> float:
    """Residual of a (H + c_o) + b kn = 0 at the boundary."""
    return params.a * bs.u + params.b * bs.kappa_n


def _residual_pair(tag, traj, params, L):
    if tag == CASE_B0:
        return residuals_b0(traj, params, L)
    if tag == CASE_BALANCED:
        return residuals_balanced(traj, params, L)
    if tag == CASE_MIXED:
        return residuals_mixed(traj, params, L)
    raise WrongCaseError(tag)


# ---------------------------------------------------------------------------
# solutions


@dataclass
class DiscSolution:
    """Converged shooting result for one boundary regime."""

    params: EnergyParams
    case: BoundaryCase
    z_o: float
    L: float
    trajectory: Trajectory
    residuals: dict
    diagnostics: dict
    boundary: CurvatureSample
    boundary_sample: BoundarySample

    @property
    def boundary_radius(self) -> float:
        return self.boundary_sample.r


def _candidate_lengths(traj: Trajectory, locator, skip: float):
    """All sign-change locations of the locator along the dense samples."""
    g = locator.dense(traj)
    s = traj.sigma
    idx = np.nonzero((g[:-1] * g[1:] <= 0.0) & (s[:-1] > skip)
                     & np.isfinite(g[:-1]) & np.isfinite(g[1:]))[0]
    out = []
    for i in idx[:_MAX_CANDIDATES]:
        loc = _ode._locate_event(traj.interp, s[i], s[i + 1],
                                 locator.pointwise, 1e-13)
        if loc is not None:
            out.append(float(loc))
    return out


class _Locator:
    """Case-specific function whose zeros along sigma seed candidate L."""

    def __init__(self, tag, params):
        self.tag = tag
        self.params = params

    def dense(self, traj):
        if self.tag == CASE_B0:
            return np.cos(traj.phi)
        if self.tag == CASE_BALANCED:
            return traj.r - self.params.balanced_radius
        return (self.params.a * traj.r * np.cos(traj.phi)
                - self.params.b * traj.z * np.sin(traj.phi))

    def pointwise(self, st):
        r, z, phi = st[0], st[1], st[2]
        if self.tag == CASE_B0:
            return math.cos(phi)
        if self.tag == CASE_BALANCED:
            return r - self.params.balanced_radius
        return (self.params.a * r * math.cos(phi)
                - self.params.b * z * math.sin(phi))


def default_bracket(params: EnergyParams):
    m = max(abs(params.c_o), params.beta / params.alpha, 1.0)
    return 1e-3, 10.0 / m


def _scan_grid(bracket, n):
    lo, hi = bracket
    half = max(n // 2, 8)
    pos = np.linspace(lo, hi, half)
    return np.concatenate([-pos[::-1], pos])


def shoot(case: BoundaryCase | str, params: EnergyParams,
          z_o_bracket=None, config: IntegratorConfig | None = None,
          scan_points: int = 200) -> list:
    """Find all critical discs of one boundary regime in the bracket.

    z_o_bracket is (lo, hi) with 0 < lo < hi; both signs of z_o are scanned.
    Returns the list of converged DiscSolution, sorted by z_o; raises
    NoRootError when the scan isolates no candidate.
    """
    if isinstance(case, str):
        case = make_case(case, params)
    case.validate(params)
    if params.sign_branch != "minus":
        raise DomainError("shoot operates on the canonical minus branch; "
                          "mirror plus-branch solutions with z -> -z")
    config = config or IntegratorConfig()
    bracket = z_o_bracket or default_bracket(params)
    grid = _scan_grid(bracket, scan_points)

    if case.tag == CASE_GEODESIC_Z0:
        roots = _shoot_scalar(case, params, grid, config)
    else:
        roots = _shoot_newton(case, params, grid, config)

    solutions = []
    for z_o, L in roots:
        sol = _package(case, params, z_o, L, config)
        if sol is not None:
            solutions.append(sol)
    solutions = _dedupe(solutions)
    if not solutions:
        raise NoRootError(
            f"no {case.tag} solution in z_o bracket {bracket} "
            f"for parameters {params}")
    solutions.sort(key=lambda s: s.z_o)
    return solutions


# -- scalar path (geodesic at z = 0) ----------------------------------------


def _scalar_residual(params, config):
    def F(z_o):
        try:
            traj = integrate(z_o, params, config, [EV_Z_ZERO])
        except (BlowUpError, NoEventError, DomainError):
            return None, None
        try:
            _, R2 = residuals_geodesic_z0(traj, params)
        except (NoZeroCrossingError, DomainError):
            return None, None
        return R2, traj
    return F


def _shoot_scalar(case, params, grid, config):
    F = _scalar_residual(params, config)
    vals = [F(z)[0] for z in grid]
    roots = []
    for i in range(len(grid) - 1):
        f0, f1 = vals[i], vals[i + 1]
        if f0 is None or f1 is None or f0 * f1 > 0.0:
            continue
        root = _bisect_secant(lambda z: F(z)[0], grid[i], grid[i + 1], f0, f1)
        if root is not None:
            traj = F(root)[1]
            if traj is not None:
                roots.append((root, traj.event.sigma_stop))
    return roots


def _bisect_secant(f, lo, hi, flo, fhi, tol=_POLISH_TOL, max_iter=200):
    """Bracketed bisection refined by secant steps; returns the abscissa."""
    x0, x1, f0, f1 = lo, hi, flo, fhi
    for _ in range(max_iter):
        if abs(f1) < tol:
            return x1
        if abs(f0) < tol:
            return x0
        # secant proposal, falling back to bisection when outside or invalid
        denom = f1 - f0
        x2 = x1 - f1 * (x1 - x0) / denom if denom != 0.0 else None
        if x2 is None or not (min(lo, hi) < x2 < max(lo, hi)):
            x2 = 0.5 * (lo + hi)
        f2 = f(x2)
        if f2 is None:
            x2 = 0.5 * (lo + hi)
            f2 = f(x2)
            if f2 is None:
                return None
        if flo * f2 <= 0.0:
            hi, fhi = x2, f2
        else:
            lo, flo = x2, f2
        x0, f0, x1, f1 = x1, f1, x2, f2
        if abs(hi - lo) < 1e-15 * max(1.0, abs(hi)):
            return x2 if abs(f2) < 1e-6 else None
    return None


# -- two-variable path -------------------------------------------------------


def _shoot_newton(case, params, grid, config):
    locator = _Locator(case.tag, params)
    cache = {}

    def traj_for(z_o):
        if z_o in cache:
            return cache[z_o]
        try:
            t = integrate(z_o, params, config, [EV_SIGMA_MAX],
                          allow_blowup=True)
        except DomainError:
            t = None
        if len(cache) > 64:
            cache.clear()
        cache[z_o] = t
        return t

    def reduced(z_o):
        """Candidate lengths and the second residual at each."""
        t = traj_for(z_o)
        if t is None or len(t.interp.sig) < 4:
            return [], []
        ls = _candidate_lengths(t, locator, skip=4.0 * config.eps_axis)
        vals = []
        for L in ls:
            try:
                _, R2 = _residual_pair(case.tag, t, params, L)
            except (DomainError, WrongCaseError, InadmissibleError):
                R2 = math.nan
            vals.append(R2)
        return ls, vals

    seeds = []
    prev = None
    for z_o in grid:
        ls, vals = reduced(z_o)
        cur = (z_o, ls, vals)
        if prev is not None and math.copysign(1, prev[0]) == math.copysign(1, z_o):
            for k in range(min(len(prev[1]), len(ls))):
                v0, v1 = prev[2][k], vals[k]
                if (math.isfinite(v0) and math.isfinite(v1)
                        and v0 * v1 <= 0.0):
                    seeds.append((prev[0], z_o, k))
        prev = cur

    def Ffun(x):
        z_o, L = x
        t = traj_for(z_o)
        if t is None or t.interp.sigma_max < L or L <= 4.0 * config.eps_axis:
            return None
        try:
            return np.array(_residual_pair(case.tag, t, params, L))
        except (DomainError, WrongCaseError):
            return None

    roots = []
    for z0_lo, z0_hi, k in seeds:
        z_mid = 0.5 * (z0_lo + z0_hi)
        ls, _ = reduced(z_mid)
        if k >= len(ls):
            ls0, _ = reduced(z0_lo)
            if k >= len(ls0):
                continue
            z_mid, ls = z0_lo, ls0
        x0 = np.array([z_mid, ls[k]])
        sol = _newton2(Ffun, x0, z_sign=math.copysign(1.0, z_mid))
        if sol is not None:
            roots.append((sol[0], sol[1]))
    return roots


def _newton2(Ffun, x0, z_sign, tol=_POLISH_TOL, max_iter=100, max_halvings=20):
    """Damped Newton on (z_o, L) with a central finite-difference Jacobian."""
    x = np.asarray(x0, dtype=float)
    F = Ffun(x)
    if F is None:
        return None
    for _ in range(max_iter):
        n0 = float(np.max(np.abs(F)))
        if n0 < tol:
            return x
        hz = 1e-6 * max(1.0, abs(x[0]))
        hl = 1e-6 * max(1.0, abs(x[1]))
        Fz0, Fz1 = Ffun(x + [hz, 0.0]), Ffun(x - [hz, 0.0])
        Fl0, Fl1 = Ffun(x + [0.0, hl]), Ffun(x - [0.0, hl])
        if any(v is None for v in (Fz0, Fz1, Fl0, Fl1)):
            return None
        J = np.column_stack([(Fz0 - Fz1) / (2.0 * hz), (Fl0 - Fl1) / (2.0 * hl)])
        try:
            dx = np.linalg.solve(J, -F)
        except np.linalg.LinAlgError:
            return None
        lam = 1.0
        for _ in range(max_halvings):
            xt = x + lam * dx
            if xt[1] > 0.0 and math.copysign(1.0, xt[0]) == z_sign:
                Ft = Ffun(xt)
                if Ft is not None and float(np.max(np.abs(Ft))) < n0:
                    x, F = xt, Ft
                    break
            lam *= 0.5
        else:
            return None
    return None


# -- packaging ----------------------------------------------------------------


def _package(case, params, z_o, L, config):
    """Re-integrate at the converged parameters and assemble the solution."""
    import dataclasses

    try:
        if case.tag == CASE_GEODESIC_Z0:
            traj = integrate(z_o, params, config, [EV_Z_ZERO])
            bs = _z0_boundary(traj)
            L = bs.sigma
        else:
            cfg = dataclasses.replace(config, max_sigma=L)
            traj = integrate(z_o, params, cfg, [EV_SIGMA_MAX])
            bs = boundary_sample(traj, L)
    except (BlowUpError, NoEventError, DomainError):
        return None

    tag = case.tag
    if tag == CASE_GEODESIC_Z0:
        R1 = bs.nu3
        R2 = (params.a + params.b) * math.sin(bs.phi) + 2.0 * params.a * params.c_o * bs.r
        residuals = {"geodesic": R1, "angular": R2,
                     "boundary_height": bs.z}
    elif tag == CASE_B0:
        R1, R2 = residuals_b0(traj, params, L)
        residuals = {"geodesic": R1, "radius_select": R2}
    elif tag == CASE_BALANCED:
        R1, R2 = residuals_balanced(traj, params, L)
        residuals = {"radius": R1, "angular": R2}
    else:
        R1, R2 = residuals_mixed(traj, params, L)
        residuals = {"tangential": R1, "angular_rate": R2}

    diagnostics = {
        "d1": diagnostic_d1(bs, params),
        "el2": diagnostic_el2(bs, params),
        "eps_z": config.eps_z,
        "reduced_eq_max": _reduced_max(traj),
    }
    if tag == CASE_MIXED:
        diagnostics["radius_gap"] = bs.r - params.balanced_radius
        diagnostics["kappa_g"] = bs.kappa_g

    sol = DiscSolution(params=params, case=case, z_o=float(z_o), L=float(L),
                       trajectory=traj, residuals=residuals,
                       diagnostics=diagnostics,
                       boundary=bs.curvature_sample(), boundary_sample=bs)

    if any(abs(v) > RESIDUAL_TOL for v in residuals.values()):
        logger.info("dropping root z_o=%.6g L=%.6g: residuals %s", z_o, L,
                    residuals)
        return None
    return _exclusivity(sol, params, config)


def _reduced_max(traj):
    from .checks import reduced_equation_residual
    return reduced_equation_residual(traj)


def _exclusivity(sol, params, config):
    """Reject or retag roots that degenerately satisfy another regime."""
    tag = sol.case.tag
    bs = sol.boundary_sample
    if tag == CASE_MIXED:
        if abs(bs.r - params.balanced_radius) <= 1e-4:
            return _retag(sol, CASE_BALANCED, params, config)
        if abs(bs.kappa_g) <= 1e-4:
            logger.info("mixed root at z_o=%.6g is degenerately geodesic; "
                        "dropped", sol.z_o)
            return None
    if tag == CASE_B0 and abs(bs.z) <= 1e-4:
        # EL2 is 0/0 at a z = 0 geodesic; cannot certify criticality
        logger.info("b0 root with boundary on z = 0 dropped (z_o=%.6g)",
                    sol.z_o)
        return None
    return sol


def _retag(sol, new_tag, params, config):
    try:
        case = make_case(new_tag, params)
    except (WrongCaseError, InadmissibleError):
        return None
    logger.info("reclassifying root z_o=%.6g L=%.6g as %s", sol.z_o, sol.L,
                new_tag)
    return _package(case, params, sol.z_o, sol.L, config)


def _dedupe(solutions):
    out = []
    for sol in solutions:
        dup = False
        for kept in out:
            if (abs(sol.z_o - kept.z_o) < 1e-6 * max(1.0, abs(kept.z_o))
                    and abs(sol.L - kept.L) < 1e-6 * max(1.0, kept.L)):
                dup = True
                break
        if not dup:
            out.append(sol)
    return out


# ---------------------------------------------------------------------------
# closed-form constant-mean-curvature candidates


@dataclass(frozen=True)
class CMCCandidate:
    """Spherical cap or flat disc with H = -c_o bounded by the optimal circle.

    Caps are critical only for b = 0 (a nonzero saddle-splay modulus forces
    kn = 0 on the boundary, impossible on a sphere); the flat disc at
    c_o = 0 is critical for any b.
    """

    kind: str  # "flat_disc", "small_cap", "big_cap"
    boundary_radius: float
    sphere_radius: float | None
    energy: float
    is_critical: bool


def classify_cmc(params: EnergyParams) -> list:
    """Explicit constant-mean-curvature disc candidates, possibly empty."""
    rho = params.balanced_radius
    base = 4.0 * math.pi * math.sqrt(params.alpha * params.beta)
    if params.c_o == 0.0:
        return [CMCCandidate("flat_disc", rho, None, base, True)]
    if params.c_o ** 2 > params.beta / params.alpha:
        return []
    sph = 1.0 / abs(params.c_o)
    ct = math.sqrt(1.0 - params.c_o ** 2 * params.alpha / params.beta)
    two_pi_b = 2.0 * math.pi * params.b
    critical = params.b == 0.0
    return [
        CMCCandidate("small_cap", rho, sph, two_pi_b * (1.0 - ct) + base,
                     critical),
        CMCCandidate("big_cap", rho, sph, two_pi_b * (1.0 + ct) + base,
                     critical),
    ]
