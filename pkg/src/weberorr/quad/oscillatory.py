"""Semi-infinite oscillatory quadrature.

The improper integral of a decaying oscillation f(xi) ~ A sin(w xi + phi)
xi^{-p} is split into half-period panels between the phase zeros
xi_k = (k pi - phi)/w.  Panel sums form a (modulated) alternating
sequence; the limit is estimated two independent ways:

* Euler transform (iterated averaging) of the partial sums, and
* truncation at the policy cutoff plus an analytic tail from repeated
  integration by parts (three terms, with an explicit remainder bound).

The returned value is the estimate with the smaller claimed error; the
two routes also cross-check each other, and the reported error includes
the accumulated panel quadrature errors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import QuadratureError
from .adaptive import gk_panel, integrate_adaptive
from .base import QuadratureResult, TruncationPolicy
from .tanhsinh import integrate_de

_MIN_PANELS = 8
_MAX_PANELS = 20000
_NEGLIGIBLE_RUN = 3


@dataclass(frozen=True)
class OscillatoryTail:
    """Asymptotic model f(xi) ~ amplitude * sin(freq xi + phase) * xi^-decay.

    decay may be complex (a power xi^{-p} with complex p); frequency and
    phase are taken from the integrate_oscillatory call.
    """

    amplitude: complex
    decay: complex


def euler_transform(partials):
    """Limit estimate for the partial sums of an alternating (possibly
    slowly modulated) series by iterated averaging.

    Returns (estimate, error_estimate); the error is the stabilization
    level of the averaged table.
    """
    row = np.asarray(partials, dtype=complex)
    if len(row) < 3:
        return row[-1], abs(row[-1] - row[0]) if len(row) > 1 else float("inf")
    best = row[-1]
    best_err = abs(row[-1] - row[-2])
    while len(row) > 2:
        row = 0.5 * (row[:-1] + row[1:])
        err = abs(row[-1] - row[-2])
        if err < best_err:
            best, best_err = row[-1], err
    return best, float(best_err)


def _tail_by_parts(tail, freq, phase, n):
    """Three integration-by-parts terms of int_n^inf A sin(w x + phi) x^-p dx
    and a remainder bound."""
    w = freq
    p = complex(tail.decay)
    c = np.cos(w * n + phase)
    s = np.sin(w * n + phase)
    t1 = c * n ** (-p) / w
    t2 = p * s * n ** (-p - 1) / w ** 2
    t3 = -p * (p + 1) * c * n ** (-p - 2) / w ** 3
    rem = (abs(p * (p + 1) * (p + 2)) * n ** (-p.real - 2)
           / (abs(w) ** 3 * max(p.real + 2, 1e-9)))
    return tail.amplitude * (t1 + t2 + t3), abs(tail.amplitude) * rem


def integrate_oscillatory(f, phase_freq, lo, tol, policy=None, phase_offset=0.0,
                          tail=None, first_panel="de"):
    """Integrate f over [lo, inf) for an integrand oscillating like
    sin(phase_freq * xi + phase_offset) with a decaying envelope.

    The panel up to the first phase zero past lo is integrated with an
    endpoint-tolerant rule ("de" or "adaptive"); subsequent half-period
    panels use a fixed Gauss-Kronrod pair.  Panels stop early once
    negligible (absolutely convergent case), otherwise at the policy
    cutoff where acceleration / tail correction take over.
    """
    if phase_freq == 0.0:
        raise QuadratureError("phase_freq must be nonzero")
    if policy is None:
        policy = TruncationPolicy()
    w = abs(phase_freq)
    if phase_freq < 0:
        phase_offset = -phase_offset

    def zero(k):
        return (k * np.pi - phase_offset) / w

    k0 = int(np.floor((lo * w + phase_offset) / np.pi)) + 1
    while zero(k0) <= lo + 1e-15 * (1.0 + abs(lo)):
        k0 += 1

    evals = 0
    quad_err = 0.0
    if zero(k0) > lo:
        if first_panel == "de":
            r0 = integrate_de(f, lo, zero(k0), tol)
        else:
            r0 = integrate_adaptive(f, lo, zero(k0), tol)
        base = r0.value
        evals += r0.evaluations
        quad_err += r0.error_estimate
    else:
        base = 0.0

    n_target = max(policy.n_cut, zero(k0 + _MIN_PANELS))
    k_end = max(int(np.ceil((n_target * w + phase_offset) / np.pi)), k0 + _MIN_PANELS)
    k_end = min(k_end, k0 + _MAX_PANELS)

    partials = []
    total = base
    scale = abs(base)
    negligible = 0
    for k in range(k0, k_end):
        v, e = gk_panel(f, zero(k), zero(k + 1))
        evals += 15
        quad_err += e
        total = total + v
        scale = max(scale, abs(total))
        partials.append(total)
        if abs(v) < 0.25 * tol * max(scale, 1e-300):
            negligible += 1
            if negligible >= _NEGLIGIBLE_RUN and k - k0 + 1 >= _MIN_PANELS:
                return QuadratureResult(total, float(quad_err + abs(v)), evals, True)
        else:
            negligible = 0

    acc_val, acc_err = euler_transform(partials)
    candidates = [(acc_err, 0, acc_val)]
    if tail is not None:
        t_val, t_rem = _tail_by_parts(tail, w, phase_offset, zero(k_end))
        candidates.append((float(t_rem), 1, total + t_val))
    claimed, _, value = min(candidates)
    if tail is not None:
        diff = abs(candidates[0][2] - candidates[1][2])
        claims = candidates[0][0] + candidates[1][0]
        if diff > 10.0 * claims:
            # routes disagree beyond their own claims: distrust both
            claimed = diff
    err = float(quad_err + claimed)
    converged = err <= 50.0 * tol * max(abs(value), scale, 1e-300)
    return QuadratureResult(value, err, evals, bool(converged))
