"""Minsky shift-and-add generators and their closed-form models.

Four inner-loop variants are provided: the circle generator stepping forward
and in reverse, and the hyperbolic generator stepping forward and in reverse.
Each reverse step is the exact integer inverse of its forward step.

The step functions only use ``-``, ``+`` and ``>>``, so they accept plain
ints as well as numpy int64 arrays (``k`` may be an array too).

The closed forms are floating-point oracles.  For the circle generator the
true per-step angle ``alpha`` satisfies ``sin(alpha/2) = eps/2``; for the
hyperbolic generator the per-step hyperbolic angle ``a`` satisfies
``sinh(a/2) = eps/2``, and after ``n`` steps

    u_n = u0 cosh(na) + (v0 - eps/2 u0) / sqrt(1 + eps^2/4) * sinh(na)
    v_n = v0 cosh(na) + (u0 + eps/2 v0) / sqrt(1 + eps^2/4) * sinh(na)

which follows from ``M^n = a_n M + b_n I`` with the one-step matrix
``[[1, eps], [eps, 1 + eps^2]]`` and eigenvalues ``exp(+-a)``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .fixed import Fixed

KMAX_SHIFT = 15


class GenState(NamedTuple):
    u: Fixed
    v: Fixed


def check_k(k: int) -> int:
    if not 0 <= k <= KMAX_SHIFT:
        raise ValueError(f"angular increment exponent k={k} must satisfy 0 <= k < 16")
    return k


def circle_step_forward(s: GenState, k) -> GenState:
    u = s.u - (s.v >> k)
    v = s.v + (u >> k)
    return GenState(u, v)


def circle_step_reverse(s: GenState, k) -> GenState:
    v = s.v - (s.u >> k)
    u = s.u + (v >> k)
    return GenState(u, v)


def hyper_step_forward(s: GenState, k) -> GenState:
    u = s.u + (s.v >> k)
    v = s.v + (u >> k)
    return GenState(u, v)


def hyper_step_reverse(s: GenState, k) -> GenState:
    v = s.v - (s.u >> k)
    u = s.u - (v >> k)
    return GenState(u, v)


def initial_value(u0: Fixed, v0: Fixed, k: int) -> Fixed:
    """Corrected start value ``U0`` for the circle generator.

    Computes ``u0 (1 - e^2/8 - e^4/128 - e^6/1024) + v0 e/2`` with
    ``e = 2**-k`` using only shifts, dropping the 8th-order term and beyond.
    """
    shift = 2 * k + 3
    w = u0 >> shift
    U0 = u0 - w + (v0 >> (k + 1))
    w >>= shift + 1
    U0 -= w
    w >>= shift
    U0 -= w
    return U0


def hyper_initial_value(u0: Fixed, v0: Fixed, k: int) -> Fixed:
    """Corrected start value for the hyperbolic generator.

    ``u0 sqrt(1 + e^2/4) - v0 e/2``, with the square root expanded as
    ``1 + e^2/8 - e^4/128 + e^6/1024`` (same shifts as :func:`initial_value`,
    alternating signs).
    """
    shift = 2 * k + 3
    w = u0 >> shift
    U0 = u0 + w - (v0 >> (k + 1))
    w >>= shift + 1
    U0 -= w
    w >>= shift
    U0 += w
    return U0


def circle_alpha(eps: float) -> float:
    """Exact per-step angle of the circle generator."""
    return 2.0 * math.asin(eps / 2.0)


def hyper_alpha(eps: float) -> float:
    """Exact per-step hyperbolic angle of the hyperbolic generator."""
    return 2.0 * math.asinh(eps / 2.0)


def closed_form_circle(u0: float, v0: float, eps: float, n: int) -> tuple[float, float]:
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must lie in (0, 1]")
    alpha = circle_alpha(eps)
    c = math.sqrt(1.0 - 0.25 * eps * eps)
    sn, cn = math.sin(n * alpha), math.cos(n * alpha)
    u = u0 * cn - (v0 - 0.5 * eps * u0) / c * sn
    v = (u0 - 0.5 * eps * v0) / c * sn + v0 * cn
    return u, v


def closed_form_hyper(u0: float, v0: float, eps: float, n: int) -> tuple[float, float]:
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must lie in (0, 1]")
    a = hyper_alpha(eps)
    c = math.sqrt(1.0 + 0.25 * eps * eps)
    sn, cn = math.sinh(n * a), math.cosh(n * a)
    u = u0 * cn + (v0 - 0.5 * eps * u0) / c * sn
    v = v0 * cn + (u0 + 0.5 * eps * v0) / c * sn
    return u, v


def circle_matrix(eps: float) -> list[list[float]]:
    return [[1.0, -eps], [eps, 1.0 - eps * eps]]


def hyper_matrix(eps: float) -> list[list[float]]:
    return [[1.0, eps], [eps, 1.0 + eps * eps]]


def mat2_pow(m, n: int) -> list[list[float]]:
    """``m**n`` for a 2x2 matrix via the Cayley-Hamilton recurrence.

    ``M^n = a_n M + b_n I`` where ``a_n = a2 a_{n-1} + b_{n-1}``,
    ``b_n = a_{n-1} b2``, ``a2`` is the trace and ``b2 = -det(M)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    (m11, m12), (m21, m22) = m
    a2 = m11 + m22
    b2 = m12 * m21 - m11 * m22
    # (a_0, b_0) = (0, 1) gives I, (a_1, b_1) = (1, 0) gives M
    a, b = 0, 1
    for _ in range(n):
        a, b = a2 * a + b, a * b2
    return [[a * m11 + b, a * m12], [a * m21, a * m22 + b]]
