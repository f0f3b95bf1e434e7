"""Bessel functions J_nu, Y_nu for real order in [0, 1/2].

Algorithm: ascending power series for x below the switchover, Hankel
(P, Q) asymptotic sums above it.  The series is accumulated in extended
precision on the upper part of its range where alternating-term
cancellation costs digits; the switchover (x = 13) was validated by
overlap agreement between the two routes.

Y_nu for non-integer order comes from the connection formula
Y_v = (J_v cos(v pi) - J_{-v}) / sin(v pi); the integer orders 0 and 1
(needed for the limiting case nu = 0 and for derivatives) use their
logarithmic series.

Internal helpers accept any order in [-1, 1.5] so that derivative
recurrences work; the public functions enforce the supported order
range [0, 1/2].
"""

from __future__ import annotations

import numpy as np

from ..errors import DomainError
from .gamma import reciprocal_gamma

_SWITCH = 13.0
_SERIES_TERMS = 44
_EULER_GAMMA = 0.5772156649015328606

# Highest order of the asymptotic a_k(v) coefficients kept (P gets the
# even ones, Q the odd ones).  At x = 13 the first omitted term is ~1e-12.
_ASYM_TERMS = 21


def _check_order(nu):
    if not (0.0 <= nu <= 0.5):
        raise DomainError(f"order nu={nu} outside supported range [0, 1/2]")


def _series_coeffs(v):
    """c_k = (-1)^k / (k! Gamma(v+k+1)) in long double, k < _SERIES_TERMS.

    Built by the exact ratio recurrence c_{k+1} = -c_k/((k+1)(v+k+1)) so
    that only the leading coefficient carries the float64 gamma rounding
    (a harmless global scale).  Handles the Gamma pole at v = -1.
    """
    c = np.zeros(_SERIES_TERMS, dtype=np.longdouble)
    vl = np.longdouble(v)
    k0 = 0
    r0 = reciprocal_gamma(v + 1.0).real
    if r0 == 0.0:  # v = -1: series starts at k = 1
        k0 = 1
        c[1] = -np.longdouble(reciprocal_gamma(v + 2.0).real)
    else:
        c[0] = np.longdouble(r0)
    for k in range(k0, _SERIES_TERMS - 1):
        c[k + 1] = -c[k] / ((k + 1) * (vl + k + 1))
    return c


def _j_series(v, x):
    """Ascending series for J_v, x <= _SWITCH (x array).

    Accumulates in long double above x = 8 where the alternating series
    loses ~4 digits in float64.
    """
    c = _series_coeffs(v)
    q = 0.25 * x * x
    big = x > 8.0
    out = np.empty_like(x)
    if np.any(~big):
        qs = q[~big]
        acc = np.zeros_like(qs)
        for ck in c[::-1].astype(np.float64):
            acc = acc * qs + ck
        out[~big] = acc
    if np.any(big):
        qs = q[big].astype(np.longdouble)
        acc = np.zeros_like(qs)
        for ck in c[::-1]:
            acc = acc * qs + ck
        out[big] = acc.astype(np.float64)
    return out * (0.5 * x) ** v


def _asym_a(v):
    """Hankel expansion coefficients a_k(v), k = 0.._ASYM_TERMS-1."""
    a = np.empty(_ASYM_TERMS)
    a[0] = 1.0
    mu = 4.0 * v * v
    for k in range(_ASYM_TERMS - 1):
        a[k + 1] = a[k] * (mu - (2 * k + 1) ** 2) / (8.0 * (k + 1))
    return a


def _pq(v, x):
    """P(v,x), Q(v,x) of the Hankel asymptotic expansion, x array."""
    a = _asym_a(v)
    ix2 = 1.0 / (x * x)
    p = np.zeros_like(x)
    for m in range((_ASYM_TERMS - 1) // 2, -1, -1):
        p = p * ix2 + ((-1.0) ** m) * a[2 * m]
    qsum = np.zeros_like(x)
    for m in range((_ASYM_TERMS - 2) // 2, -1, -1):
        qsum = qsum * ix2 + ((-1.0) ** m) * a[2 * m + 1]
    return p, qsum / x


def _jy_asym(v, x):
    """(J_v, Y_v) from the asymptotic expansion, x >= _SWITCH."""
    p, q = _pq(v, x)
    chi = x - (2.0 * v + 1.0) * np.pi / 4.0
    amp = np.sqrt(2.0 / (np.pi * x))
    c, s = np.cos(chi), np.sin(chi)
    return amp * (p * c - q * s), amp * (p * s + q * c)


def _y0_series(x):
    # Y_0 = (2/pi)[(ln(x/2) + gamma) J_0 + sum_{m>=1} (-1)^{m+1} H_m q^m / (m!)^2]
    k = np.arange(1, _SERIES_TERMS, dtype=np.longdouble)
    h = np.cumsum(1.0 / k)
    inv_fact2 = np.cumprod(1.0 / k) ** 2
    q = (0.25 * x * x).astype(np.longdouble)
    acc = np.zeros_like(q)
    qp = np.ones_like(q)
    for m in range(1, _SERIES_TERMS):
        qp = qp * q
        sgn = 1.0 if m % 2 == 1 else -1.0
        acc += sgn * h[m - 1] * inv_fact2[m - 1] * qp
    j0 = _j_series(0.0, x)
    return (2.0 / np.pi) * ((np.log(0.5 * x) + _EULER_GAMMA) * j0 + acc.astype(np.float64))


def _y1_series(x):
    # Y_1 = (2/pi) ln(x/2) J_1 - 2/(pi x)
    #       - (x/(2 pi)) sum_m (-1)^m (psi(m+1)+psi(m+2)) q^m / (m!(m+1)!)
    # written with psi(m+1) = H_m - gamma.
    k = np.arange(1, _SERIES_TERMS + 1)
    h = np.concatenate(([0.0], np.cumsum(1.0 / k)))  # h[m] = H_m
    q = 0.25 * x * x
    acc = np.zeros_like(x)
    qp = np.ones_like(x)
    coef = 1.0  # 1/(m!(m+1)!)
    for m in range(_SERIES_TERMS - 1):
        if m > 0:
            coef /= m * (m + 1)
            qp = qp * q
        acc += ((-1.0) ** m) * (h[m] + h[m + 1] - 2.0 * _EULER_GAMMA) * coef * qp
    j1 = _j_series(1.0, x)
    return ((2.0 / np.pi) * np.log(0.5 * x) * j1 - 2.0 / (np.pi * x)
            - (x / (2.0 * np.pi)) * acc)


def _j_raw(v, x):
    """J_v(x) for any v in [-1, 1.5], x > 0 array."""
    out = np.empty_like(x)
    lo = x < _SWITCH
    if np.any(lo):
        out[lo] = _j_series(v, x[lo])
    if np.any(~lo):
        out[~lo] = _jy_asym(v, x[~lo])[0]
    return out


def _y_raw(v, x):
    """Y_v(x) for v in [-1, 1.5], x > 0 array (integer v in {-1, 0, 1})."""
    out = np.empty_like(x)
    lo = x < _SWITCH
    if np.any(lo):
        xs = x[lo]
        if v == 0.0:
            out[lo] = _y0_series(xs)
        elif v == 1.0:
            out[lo] = _y1_series(xs)
        elif v == -1.0:
            out[lo] = -_y1_series(xs)
        else:
            sv, cv = np.sin(np.pi * v), np.cos(np.pi * v)
            out[lo] = (_j_series(v, xs) * cv - _j_series(-v, xs)) / sv
    if np.any(~lo):
        out[~lo] = _jy_asym(v, x[~lo])[1]
    return out


def _as_array(x):
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.0) or not np.all(np.isfinite(xa)):
        raise DomainError("bessel argument must be finite and > 0")
    return xa


def bessel_j(nu, x):
    """J_nu(x) for nu in [0, 1/2], x > 0 (scalar or array)."""
    _check_order(nu)
    xa = _as_array(x)
    res = _j_raw(float(nu), np.atleast_1d(xa))
    return float(res[0]) if np.ndim(x) == 0 else res.reshape(np.shape(x))


def bessel_y(nu, x):
    """Y_nu(x) for nu in [0, 1/2], x > 0 (scalar or array)."""
    _check_order(nu)
    xa = _as_array(x)
    res = _y_raw(float(nu), np.atleast_1d(xa))
    return float(res[0]) if np.ndim(x) == 0 else res.reshape(np.shape(x))


def bessel_j_deriv(nu, x):
    """d/dx J_nu(x) via the downward recurrence J' = J_{nu-1} - (nu/x) J_nu."""
    _check_order(nu)
    xa = np.atleast_1d(_as_array(x))
    v = float(nu)
    res = _j_raw(v - 1.0, xa) - (v / xa) * _j_raw(v, xa)
    return float(res[0]) if np.ndim(x) == 0 else res.reshape(np.shape(x))


def bessel_y_deriv(nu, x):
    """d/dx Y_nu(x) via Y' = Y_{nu-1} - (nu/x) Y_nu."""
    _check_order(nu)
    xa = np.atleast_1d(_as_array(x))
    v = float(nu)
    res = _y_raw(v - 1.0, xa) - (v / xa) * _y_raw(v, xa)
    return float(res[0]) if np.ndim(x) == 0 else res.reshape(np.shape(x))


def bessel_jy(nu, x):
    """(J_nu(x), Y_nu(x)) with shared order handling; array-friendly."""
    return bessel_j(nu, x), bessel_y(nu, x)
