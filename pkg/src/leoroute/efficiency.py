"""Closed-form efficiency approximations and the measured efficiency ratio.

Efficiency compares a route against the ideal equal-hop optimum: the
ratio of the ideal latency to the achieved latency, in (0, 1]. Two
approximations predict it from the constellation density alone:

* the *contour* form, which scales the ideal hop chord by the mean
  stretch a nearest-satellite displacement induces
  (:func:`mean_hop_stretch`), and
* the *binomial* form, which replaces the hop chord by the mean span of a
  hop whose endpoints are both displaced (:func:`mean_hop_span`).

Both take half the hop dome angle as their argument; pass
``full_hop_angle=True`` to probe the alternative convention.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .analysis import contact_pdf
from .errors import InternalConsistencyError, InvalidInputError
from .quadrature import adaptive_simpson

#: Default quadrature tolerances: outer integral, inner integral.
OUTER_TOL = 1e-8
INNER_TOL = 1e-9


@dataclass(frozen=True)
class EfficiencyEstimates:
    """The two approximations, optionally alongside a measured value.

    Attributes:
        e1_contour: Contour-form efficiency estimate.
        e2_binomial: Binomial-form efficiency estimate.
        e_measured: Monte Carlo measured efficiency, when available.
        arc_angle: Endpoint separation the estimates refer to.
        n_min: Ideal hop count.
        n_hat: Planned hop count.
        n_sat: Constellation size.
        theta_max: Maximum hop dome angle.
    """

    e1_contour: float
    e2_binomial: float
    e_measured: Optional[float]
    arc_angle: float
    n_min: int
    n_hat: int
    n_sat: int
    theta_max: float

    def __post_init__(self) -> None:
        if self.e1_contour <= 0.0 or self.e2_binomial <= 0.0:
            raise InvalidInputError("efficiency estimates must be positive")
        if self.e_measured is not None:
            if self.e_measured <= 0.0:
                raise InvalidInputError("measured efficiency must be positive")
            if self.e_measured > 1.0 + 1e-9:
                raise InvalidInputError(
                    "measured efficiency cannot exceed 1 (ideal is a lower bound)"
                )


def _validate_hop_angle(theta_h: float) -> None:
    if not 0.0 < theta_h < math.pi:
        raise InvalidInputError(f"theta_h must be in (0, pi), got {theta_h}")


#: Probability levels whose contact-angle quantiles split the integration
#: domain. Dense shells concentrate the contact density in a spike whose
#: width shrinks like 1/sqrt(n_sat); without mass-aware panel boundaries a
#: fixed-node first pass can miss the spike entirely and terminate early.
_QUANTILE_LEVELS = (0.1, 0.5, 0.9, 1.0 - 1e-3, 1.0 - 1e-6, 1.0 - 1e-9, 1.0 - 1e-12)


def _contact_quantile(p: float, n_sat: int) -> float:
    """Angle below which a fraction ``p`` of contact angles falls."""
    x = 2.0 * (1.0 - p) ** (1.0 / n_sat) - 1.0
    return math.acos(min(1.0, max(-1.0, x)))


def _density_aware_integral(f, n_sat: int, upper: float, tol: float) -> float:
    """Integrate ``f`` over [0, upper] with panels split at density quantiles."""
    cuts = [0.0]
    for p in _QUANTILE_LEVELS:
        q = _contact_quantile(p, n_sat)
        if cuts[-1] + 1e-15 < q < upper - 1e-15:
            cuts.append(q)
    cuts.append(upper)
    per_panel = tol / (len(cuts) - 1)
    return sum(
        adaptive_simpson(f, a, b, tol=per_panel) for a, b in zip(cuts, cuts[1:])
    )


def mean_hop_stretch(theta_h: float, n_sat: int, theta_max: float) -> float:
    """Mean factor by which a displaced relay stretches a hop chord.

    Averages, over the contact-angle law and a uniform azimuth, the
    length of a chord whose far endpoint is displaced by the contact
    angle, normalized by the undisplaced chord. Approaches 1 as the
    constellation densifies.
    """
    _validate_hop_angle(theta_h)
    if theta_max <= 0.0:
        raise InvalidInputError(f"theta_max must be positive, got {theta_max}")
    sin_half = math.sin(theta_h / 2.0)
    cos_h = math.cos(theta_h)
    sin_h = math.sin(theta_h)
    prefactor = math.sqrt(2.0) / (2.0 * math.pi * sin_half)

    def outer(theta: float) -> float:
        density = float(contact_pdf(theta, n_sat))
        if density == 0.0:
            return 0.0
        a = 1.0 - math.cos(theta) * cos_h
        b = math.sin(theta) * sin_h

        def inner(phi: float) -> float:
            return math.sqrt(max(a - b * math.cos(phi), 0.0))

        return density * adaptive_simpson(inner, 0.0, math.pi, tol=INNER_TOL)

    return prefactor * _density_aware_integral(outer, n_sat, theta_max, OUTER_TOL)


def mean_hop_span(theta_h: float, n_sat: int, theta_max: float) -> float:
    """Mean half-chord of a hop with both endpoints displaced along the arc.

    Averages, over two independent contact angles, the sine terms a hop
    of dome angle ``theta_h`` picks up when its endpoints slide by the
    contact angles. Approaches sin(theta_h) as the constellation
    densifies.
    """
    _validate_hop_angle(theta_h)
    if theta_max <= 0.0:
        raise InvalidInputError(f"theta_max must be positive, got {theta_max}")

    def outer(theta1: float) -> float:
        density1 = float(contact_pdf(theta1, n_sat))
        if density1 == 0.0:
            return 0.0

        def inner(theta2: float) -> float:
            spans = (
                math.sin(theta_h - theta1 - theta2)
                + math.sin(theta_h + theta1 - theta2)
                + math.sin(theta_h - theta1 + theta2)
                + math.sin(theta_h + theta1 + theta2)
            )
            return float(contact_pdf(theta2, n_sat)) * spans

        return density1 * _density_aware_integral(inner, n_sat, theta_max, INNER_TOL)

    return 0.25 * _density_aware_integral(outer, n_sat, theta_max, OUTER_TOL)


def _ideal_chord_ratio(arc_angle: float, n_min: int, n_hat: int) -> float:
    """sin-weighted hop-count ratio shared by both approximations."""
    if not 0.0 < arc_angle <= math.pi:
        raise InvalidInputError(f"arc_angle must be in (0, pi], got {arc_angle}")
    if not 1 <= n_min <= n_hat:
        raise InvalidInputError("require 1 <= n_min <= n_hat")
    return n_min * math.sin(arc_angle / (2.0 * n_min))


def efficiency_contour(
    arc_angle: float,
    n_min: int,
    n_hat: int,
    n_sat: int,
    theta_max: float,
    full_hop_angle: bool = False,
) -> float:
    """Contour-form efficiency estimate.

    Ratio of the ideal total chord to the planned total chord stretched
    by the mean relay displacement. ``full_hop_angle`` switches the
    stretch argument from half the hop dome angle (the default
    convention) to the full one.
    """
    numer = _ideal_chord_ratio(arc_angle, n_min, n_hat)
    theta_h = arc_angle / n_hat if full_hop_angle else arc_angle / (2.0 * n_hat)
    stretch = mean_hop_stretch(theta_h, n_sat, theta_max)
    return numer / (
        n_hat * math.sin(arc_angle / (2.0 * n_hat)) * (2.0 * stretch - 1.0)
    )


def efficiency_binomial(
    arc_angle: float,
    n_min: int,
    n_hat: int,
    n_sat: int,
    theta_max: float,
    full_hop_angle: bool = False,
) -> float:
    """Binomial-form efficiency estimate.

    Ratio of the ideal total chord to the planned hop count times the
    mean displaced hop span.
    """
    numer = _ideal_chord_ratio(arc_angle, n_min, n_hat)
    theta_h = arc_angle / n_hat if full_hop_angle else arc_angle / (2.0 * n_hat)
    return numer / (n_hat * mean_hop_span(theta_h, n_sat, theta_max))


def measured_efficiency(ideal_latency_ms: float, achieved_latency_ms: float) -> float:
    """Measured efficiency: ideal latency over achieved latency.

    Raises:
        InternalConsistencyError: If the achieved latency undercuts the
            ideal one (beyond rounding), which a correct route cannot do.
    """
    if ideal_latency_ms <= 0.0 or achieved_latency_ms <= 0.0:
        raise InvalidInputError("latencies must be positive")
    if achieved_latency_ms < ideal_latency_ms - 1e-9:
        raise InternalConsistencyError(
            "achieved latency undercuts the ideal lower bound: "
            f"{achieved_latency_ms} < {ideal_latency_ms}"
        )
    return ideal_latency_ms / achieved_latency_ms


def estimate_efficiencies(
    arc_angle: float,
    n_min: int,
    n_hat: int,
    n_sat: int,
    theta_max: float,
    e_measured: Optional[float] = None,
    full_hop_angle: bool = False,
) -> EfficiencyEstimates:
    """Bundle both approximations (and optionally a measurement)."""
    return EfficiencyEstimates(
        e1_contour=efficiency_contour(
            arc_angle, n_min, n_hat, n_sat, theta_max, full_hop_angle
        ),
        e2_binomial=efficiency_binomial(
            arc_angle, n_min, n_hat, n_sat, theta_max, full_hop_angle
        ),
        e_measured=e_measured,
        arc_angle=arc_angle,
        n_min=n_min,
        n_hat=n_hat,
        n_sat=n_sat,
        theta_max=theta_max,
    )
