"""Truncated vertical-line contour integration.

Computes (1/2pi) * int_{-T}^{T} F(mu + i tau) dtau, i.e. the
1/(2 pi i) ds convention with the i folded in.  The half-height T starts
at the line's t_height and doubles until a sampled decay model puts the
tail below tol/10 (or a hard cap is reached, in which case the result is
flagged unconverged and the tail bound lands in the error estimate).

For integrands with F(conj s) = conj F(s) (images of real functions) set
symmetric=True to integrate one half-line and double the real part.
"""

from __future__ import annotations

import numpy as np

from .adaptive import integrate_adaptive
from .base import QuadratureResult, VerticalLine

_MAX_HEIGHT = 4.0e9
_ABS_FLOOR = 1e-305


def _tail_model(F, mu, t):
    """Sampled local decay: |F| at t and 2t -> (bound, exponent).

    bound estimates |int_t^inf F dtau| assuming |F| ~ C tau^q with
    q < -1; returns (inf, q) when the samples do not decay.
    """
    f1 = np.abs(complex(np.asarray(F(np.array([mu + 1j * t])), dtype=complex)[0]))
    f2 = np.abs(complex(np.asarray(F(np.array([mu + 2j * t])), dtype=complex)[0]))
    if f1 < _ABS_FLOOR and f2 < _ABS_FLOOR:
        return 0.0, -np.inf
    if f2 >= f1 or f1 == 0.0:
        return np.inf, 0.0
    q = np.log(f2 / f1) / np.log(2.0)
    if q >= -1.0:
        return np.inf, q
    return f1 * t / (-q - 1.0), q


def integrate_vertical_line(F, line, tol, symmetric=False, max_height=_MAX_HEIGHT):
    """Contour integral (1/2pi) int F(mu + i tau) dtau over the line.

    F must be vectorized over complex arrays.  The reported error
    estimate combines panel errors with the sampled tail bound.
    """
    mu = line.mu
    t_cap = max_height

    # grow T until the sampled tail is negligible
    t = max(line.t_height, 1.0)
    tail, q = _tail_model(F, mu, t)
    while tail > 0.1 * tol and t < t_cap:
        t *= 2.0
        tail, q = _tail_model(F, mu, t)
    tail_ok = tail <= 0.1 * tol or tail == 0.0
    if not tail_ok and not np.isfinite(tail):
        from ..errors import QuadratureError

        raise QuadratureError(
            f"integrand does not decay on the line (local exponent {q:.3g} at T={t:.3g})")

    def g_pos(tau):
        return np.asarray(F(mu + 1j * tau), dtype=complex)

    def g_neg(tau):
        return np.asarray(F(mu - 1j * tau), dtype=complex)

    # geometric segments resolve both the near-axis structure and the
    # slowly decaying far field without wasted points
    edges = [0.0, 1.0]
    while edges[-1] < t:
        edges.append(min(2.0 * edges[-1], t))
    total = 0.0 + 0.0j
    err = 0.0
    evals = 0
    seg_tol = tol / max(len(edges), 4)
    for a, b in zip(edges[:-1], edges[1:]):
        r = integrate_adaptive(g_pos, a, b, seg_tol, tol_abs=seg_tol * 0.1)
        total += r.value
        err += r.error_estimate
        evals += r.evaluations
    if symmetric:
        total = 2.0 * total.real + 0.0j
    else:
        for a, b in zip(edges[:-1], edges[1:]):
            r = integrate_adaptive(g_neg, a, b, seg_tol, tol_abs=seg_tol * 0.1)
            total += r.value
            err += r.error_estimate
            evals += r.evaluations
    value = total / (2.0 * np.pi)
    err = (err + (tail if np.isfinite(tail) else 0.0)) / (2.0 * np.pi)
    return QuadratureResult(value, float(err), max(evals, 1), bool(tail_ok))
