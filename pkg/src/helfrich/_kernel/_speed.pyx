# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled adaptive stepper for the profile systems.

Dormand-Prince 5(4) with PI step-size control.  The loop mirrors
helfrich._kernel.pure statement for statement; any change here must be made
there as well (the test suite asserts agreement between the two backends).

Steps are only terminated at accepted step endpoints; precise event location
on the dense output happens in the shared Python wrapper.
"""

from libc.math cimport cos, sin, sqrt, fabs, pow, isfinite

import numpy as np

# Termination statuses (keep in sync with helfrich._kernel.pure).
ST_SIGMA_MAX = 0
ST_EV_Z = 1
ST_EV_COSPHI = 2
ST_EV_RTARGET = 3
ST_R_FLOOR = 4
ST_BLOWUP = 5
ST_STALL = 6
ST_MAXSTEPS = 7

cdef double SAFETY = 0.9
cdef double FACMIN = 0.2
cdef double FACMAX = 5.0
cdef double PI_ALPHA = 0.7 / 5.0
cdef double PI_BETA = 0.4 / 5.0

# Dormand-Prince coefficients.
cdef double A21 = 1.0 / 5.0
cdef double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0
cdef double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0
cdef double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0
cdef double A53 = 64448.0 / 6561.0, A54 = -212.0 / 729.0
cdef double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0
cdef double A63 = 46732.0 / 5247.0, A64 = 49.0 / 176.0
cdef double A65 = -5103.0 / 18656.0
cdef double A71 = 35.0 / 384.0, A73 = 500.0 / 1113.0, A74 = 125.0 / 192.0
cdef double A75 = -2187.0 / 6784.0, A76 = 11.0 / 84.0
cdef double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0
cdef double E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0


cdef inline void _rhs(int sys, double c_o, double a_bar, double* y,
                      double* out) noexcept nogil:
    cdef double cphi, sphi, H, u, zeta
    if sys == 3:
        cphi = cos(y[2])
        sphi = sin(y[2])
        out[0] = cphi
        out[1] = sphi
        out[2] = -2.0 * cphi / y[1] - sphi / y[0] - 2.0 * c_o
    else:
        cphi = cos(y[2])
        sphi = sin(y[2])
        zeta = y[3]
        H = 0.5 * (zeta + sphi / y[0])
        u = H + c_o
        out[0] = cphi
        out[1] = sphi
        out[2] = zeta
        out[3] = (2.0 * u * (u - zeta) * (sphi / cphi)
                  + 2.0 * (H - zeta) * cphi / y[0]
                  - 2.0 * a_bar / (y[0] * cphi))


def integrate_raw(int sys, double[::1] y0, double sigma0, double c_o,
                  double a_bar, double rel_tol, double abs_tol,
                  double sigma_max, double ev_z_eps, double z_sign,
                  bint ev_cosphi, double ev_r_target, double r_floor,
                  double blow_thr, int max_steps):
    """Step from (sigma0, y0) until a coarse stop condition holds.

    Returns (sig, ys, fs, status) where sig/ys/fs hold all accepted nodes
    including the start point, and fs holds the right-hand side there.
    """
    cdef int n = 3 if sys == 3 else 4
    cdef int cap = max_steps + 2
    sig_arr = np.empty(cap, dtype=np.float64)
    y_arr = np.empty((cap, n), dtype=np.float64)
    f_arr = np.empty((cap, n), dtype=np.float64)
    cdef double[::1] sig = sig_arr
    cdef double[:, ::1] ys = y_arr
    cdef double[:, ::1] fs = f_arr

    cdef double y[4]
    cdef double f[4]
    cdef double k2[4]
    cdef double k3[4]
    cdef double k4[4]
    cdef double k5[4]
    cdef double k6[4]
    cdef double k7[4]
    cdef double yt[4]
    cdef double ynew[4]
    cdef double sigma = sigma0
    cdef double h, err, sc, e, fac, errold, prev_cos, prev_rt, cphi
    cdef double hmin
    cdef int i, m, nacc, status
    cdef bint ok, last

    for i in range(n):
        y[i] = y0[i]
    _rhs(sys, c_o, a_bar, y, f)

    nacc = 0
    sig[0] = sigma
    for i in range(n):
        ys[0, i] = y[i]
        fs[0, i] = f[i]

    prev_cos = cos(y[2])
    prev_rt = y[0] - ev_r_target
    errold = 1e-4
    h = 1e-4
    if h > sigma_max - sigma:
        h = sigma_max - sigma
    status = ST_MAXSTEPS

    for m in range(max_steps):
        last = False
        if sigma + h >= sigma_max:
            h = sigma_max - sigma
            last = True
        hmin = 1e-14 * (1.0 + fabs(sigma))
        if h < hmin:
            status = ST_STALL
            break

        # stages (FSAL: k1 = f)
        for i in range(n):
            yt[i] = y[i] + h * (A21 * f[i])
        _rhs(sys, c_o, a_bar, yt, k2)
        for i in range(n):
            yt[i] = y[i] + h * (A31 * f[i] + A32 * k2[i])
        _rhs(sys, c_o, a_bar, yt, k3)
        for i in range(n):
            yt[i] = y[i] + h * (A41 * f[i] + A42 * k2[i] + A43 * k3[i])
        _rhs(sys, c_o, a_bar, yt, k4)
        for i in range(n):
            yt[i] = y[i] + h * (A51 * f[i] + A52 * k2[i] + A53 * k3[i]
                                + A54 * k4[i])
        _rhs(sys, c_o, a_bar, yt, k5)
        for i in range(n):
            yt[i] = y[i] + h * (A61 * f[i] + A62 * k2[i] + A63 * k3[i]
                                + A64 * k4[i] + A65 * k5[i])
        _rhs(sys, c_o, a_bar, yt, k6)
        for i in range(n):
            ynew[i] = y[i] + h * (A71 * f[i] + A73 * k3[i] + A74 * k4[i]
                                  + A75 * k5[i] + A76 * k6[i])
        _rhs(sys, c_o, a_bar, ynew, k7)

        err = 0.0
        ok = True
        for i in range(n):
            e = h * (E1 * f[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i]
                     + E6 * k6[i] + E7 * k7[i])
            sc = abs_tol + rel_tol * max(fabs(y[i]), fabs(ynew[i]))
            err += (e / sc) * (e / sc)
            if not isfinite(ynew[i]) or not isfinite(k7[i]):
                ok = False
        err = sqrt(err / n)
        if not ok or not isfinite(err):
            err = 1e300

        if err <= 1.0:
            sigma = sigma + h
            for i in range(n):
                y[i] = ynew[i]
                f[i] = k7[i]
            nacc += 1
            sig[nacc] = sigma
            for i in range(n):
                ys[nacc, i] = y[i]
                fs[nacc, i] = f[i]

            # coarse stop checks at the accepted endpoint
            if last:
                status = ST_SIGMA_MAX
                break
            if ev_z_eps == ev_z_eps and z_sign * y[1] <= ev_z_eps:
                status = ST_EV_Z
                break
            cphi = cos(y[2])
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
            if fabs(f[n - 1]) >= blow_thr:
                status = ST_BLOWUP
                break

            if err < 1e-10:
                err = 1e-10
            fac = SAFETY * pow(err, -PI_ALPHA) * pow(errold, PI_BETA)
            if fac < FACMIN:
                fac = FACMIN
            if fac > FACMAX:
                fac = FACMAX
            h = h * fac
            errold = err
        else:
            fac = SAFETY * pow(err, -0.2)
            if fac < FACMIN:
                fac = FACMIN
            if fac > 1.0:
                fac = 1.0
            h = h * fac

    return sig_arr[:nacc + 1], y_arr[:nacc + 1], f_arr[:nacc + 1], status
