"""Pure-Python fallback stepper.

Statement-for-statement mirror of helfrich._kernel._speed (the compiled
backend); any change here must be made there as well.  Used automatically
when the extension module is not built, or when HELFRICH_PURE is set.
"""

from __future__ import annotations

import math

import numpy as np

ST_SIGMA_MAX = 0
ST_EV_Z = 1
ST_EV_COSPHI = 2
ST_EV_RTARGET = 3
ST_R_FLOOR = 4
ST_BLOWUP = 5
ST_STALL = 6
ST_MAXSTEPS = 7

_SAFETY = 0.9
_FACMIN = 0.2
_FACMAX = 5.0
_PI_ALPHA = 0.7 / 5.0
_PI_BETA = 0.4 / 5.0

_A21 = 1.0 / 5.0
_A31, _A32 = 3.0 / 40.0, 9.0 / 40.0
_A41, _A42, _A43 = 44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0
_A51, _A52 = 19372.0 / 6561.0, -25360.0 / 2187.0
_A53, _A54 = 64448.0 / 6561.0, -212.0 / 729.0
_A61, _A62 = 9017.0 / 3168.0, -355.0 / 33.0
_A63, _A64 = 46732.0 / 5247.0, 49.0 / 176.0
_A65 = -5103.0 / 18656.0
_A71, _A73, _A74 = 35.0 / 384.0, 500.0 / 1113.0, 125.0 / 192.0
_A75, _A76 = -2187.0 / 6784.0, 11.0 / 84.0
_E1, _E3, _E4 = 71.0 / 57600.0, -71.0 / 16695.0, 71.0 / 1920.0
_E5, _E6, _E7 = -17253.0 / 339200.0, 22.0 / 525.0, -1.0 / 40.0

_INF = float("inf")


def _rhs(sys, c_o, a_bar, y, out):
    try:
        if sys == 3:
            cphi = math.cos(y[2])
            sphi = math.sin(y[2])
            out[0] = cphi
            out[1] = sphi
            out[2] = -2.0 * cphi / y[1] - sphi / y[0] - 2.0 * c_o
        else:
            cphi = math.cos(y[2])
            sphi = math.sin(y[2])
            zeta = y[3]
            H = 0.5 * (zeta + sphi / y[0])
            u = H + c_o
            out[0] = cphi
            out[1] = sphi
            out[2] = zeta
            out[3] = (2.0 * u * (u - zeta) * (sphi / cphi)
                      + 2.0 * (H - zeta) * cphi / y[0]
                      - 2.0 * a_bar / (y[0] * cphi))
    except ZeroDivisionError:
        for i in range(len(out)):
            out[i] = _INF


def integrate_raw(sys, y0, sigma0, c_o, a_bar, rel_tol, abs_tol, sigma_max,
                  ev_z_eps, z_sign, ev_cosphi, ev_r_target, r_floor,
                  blow_thr, max_steps):
    """See helfrich._kernel._speed.integrate_raw."""
    n = 3 if sys == 3 else 4
    rng = range(n)
    sig_list = []
    y_list = []
    f_list = []

    y = [float(v) for v in y0]
    f = [0.0] * n
    k2, k3, k4, k5 = [0.0] * n, [0.0] * n, [0.0] * n, [0.0] * n
    k6, k7 = [0.0] * n, [0.0] * n
    yt, ynew = [0.0] * n, [0.0] * n
    sigma = float(sigma0)
    _rhs(sys, c_o, a_bar, y, f)

    sig_list.append(sigma)
    y_list.append(list(y))
    f_list.append(list(f))

    prev_cos = math.cos(y[2])
    prev_rt = y[0] - ev_r_target
    errold = 1e-4
    h = 1e-4
    if h > sigma_max - sigma:
        h = sigma_max - sigma
    status = ST_MAXSTEPS

    for _ in range(max_steps):
        last = False
        if sigma + h >= sigma_max:
            h = sigma_max - sigma
            last = True
        hmin = 1e-14 * (1.0 + abs(sigma))
        if h < hmin:
            status = ST_STALL
            break

        for i in rng:
            yt[i] = y[i] + h * (_A21 * f[i])
        _rhs(sys, c_o, a_bar, yt, k2)
        for i in rng:
            yt[i] = y[i] + h * (_A31 * f[i] + _A32 * k2[i])
        _rhs(sys, c_o, a_bar, yt, k3)
        for i in rng:
            yt[i] = y[i] + h * (_A41 * f[i] + _A42 * k2[i] + _A43 * k3[i])
        _rhs(sys, c_o, a_bar, yt, k4)
        for i in rng:
            yt[i] = y[i] + h * (_A51 * f[i] + _A52 * k2[i] + _A53 * k3[i]
                                + _A54 * k4[i])
        _rhs(sys, c_o, a_bar, yt, k5)
        for i in rng:
            yt[i] = y[i] + h * (_A61 * f[i] + _A62 * k2[i] + _A63 * k3[i]
                                + _A64 * k4[i] + _A65 * k5[i])
        _rhs(sys, c_o, a_bar, yt, k6)
        for i in rng:
            ynew[i] = y[i] + h * (_A71 * f[i] + _A73 * k3[i] + _A74 * k4[i]
                                  + _A75 * k5[i] + _A76 * k6[i])
        _rhs(sys, c_o, a_bar, ynew, k7)

        err = 0.0
        ok = True
        for i in rng:
            e = h * (_E1 * f[i] + _E3 * k3[i] + _E4 * k4[i] + _E5 * k5[i]
                     + _E6 * k6[i] + _E7 * k7[i])
            sc = abs_tol + rel_tol * max(abs(y[i]), abs(ynew[i]))
            err += (e / sc) * (e / sc)
            if not (math.isfinite(ynew[i]) and math.isfinite(k7[i])):
                ok = False
        err = math.sqrt(err / n)
        if not ok or not math.isfinite(err):
            err = 1e300

        if err <= 1.0:
            sigma = sigma + h
            for i in rng:
                y[i] = ynew[i]
                f[i] = k7[i]
            sig_list.append(sigma)
            y_list.append(list(y))
            f_list.append(list(f))

            if last:
                status = ST_SIGMA_MAX
                break
            if ev_z_eps == ev_z_eps and z_sign * y[1] <= ev_z_eps:
                status = ST_EV_Z
                break
            cphi = math.cos(y[2])
            if ev_cosphi and prev_cos * cphi <= 0.0:
                status = ST_EV_COSPHI
                break
            prev_cos = cphi
            if ev_r_target == ev_r_target and prev_rt * (y[0] - ev_r_target) <= 0.0:
                status = ST_EV_RTARGET
                break
            prev_rt = y[0] - ev_r_target
            if y[0] <= r_floor:
                status = ST_R_FLOOR
                break
            if abs(f[n - 1]) >= blow_thr:
                status = ST_BLOWUP
                break

            if err < 1e-10:
                err = 1e-10
            fac = _SAFETY * err ** (-_PI_ALPHA) * errold ** _PI_BETA
            if fac < _FACMIN:
                fac = _FACMIN
            if fac > _FACMAX:
                fac = _FACMAX
            h = h * fac
            errold = err
        else:
            fac = _SAFETY * err ** (-0.2)
            if fac < _FACMIN:
                fac = _FACMIN
            if fac > 1.0:
                fac = 1.0
            h = h * fac

    sig = np.asarray(sig_list, dtype=np.float64)
    ys = np.asarray(y_list, dtype=np.float64)
    fs = np.asarray(f_list, dtype=np.float64)
    return sig, ys, fs, status
