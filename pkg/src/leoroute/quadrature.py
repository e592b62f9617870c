"""Adaptive Simpson quadrature for the package's smooth 1-D integrands.

A small, dependency-free implementation is kept in-package because the
analysis and efficiency contracts pin specific absolute tolerances for
every integral they evaluate.
"""

from __future__ import annotations

from typing import Callable


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-10,
    max_depth: int = 60,
) -> float:
    """Integrate ``f`` over [a, b] to absolute tolerance ``tol``.

    Classic recursive adaptive Simpson with Richardson extrapolation;
    suitable for smooth bounded integrands.

    Args:
        f: Scalar integrand.
        a: Lower bound.
        b: Upper bound (may be below ``a``; the sign flips accordingly).
        tol: Absolute error tolerance.
        max_depth: Recursion cap; reaching it returns the current estimate.

    Returns:
        The integral estimate.
    """
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m, fm, whole = _simpson_step(f, a, fa, b, fb)
    return _recurse(f, a, fa, b, fb, tol, whole, m, fm, max_depth)


def _simpson_step(f, a, fa, b, fb):
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _recurse(f, a, fa, b, fb, tol, whole, m, fm, depth):
    lm, flm, left = _simpson_step(f, a, fa, m, fm)
    rm, frm, right = _simpson_step(f, m, fm, b, fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    half = 0.5 * tol
    return _recurse(f, a, fa, m, fm, half, left, lm, flm, depth - 1) + _recurse(
        f, m, fm, b, fb, half, right, rm, frm, depth - 1
    )
