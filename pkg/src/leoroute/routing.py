"""Multi-hop route construction between two satellites.

Four strategies are provided:

* :func:`route_ideal` — the latency floor: equally spaced relay positions
  on the great-circle arc, ignoring where real satellites are.
* :func:`route_equal_interval` — snap each equally spaced target to its
  nearest real satellite, then repair any hop that breaks the distance or
  visibility constraints.
* :func:`route_min_deflection` — greedy baseline that always picks the
  admissible satellite deviating least from the great-circle arc.
* :func:`route_max_stepsize` — greedy baseline that always picks the
  farthest admissible satellite inside a belt around the arc.

A hop is admissible when its chord is at most min(d_max, line-of-sight
limit). Routes never fail with an exception: infeasibility is reported as
``type2_interrupted`` status.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import AbstractSet, Callable, Optional

import numpy as np

from .analysis import (
    LinkSpec,
    HopPlan,
    ideal_latency,
    max_hop_angle,
    n_min_ideal,
    plan_hops,
)
from .constellation import Constellation, nearest
from .errors import (
    DegenerateArcError,
    InternalConsistencyError,
    InvalidInputError,
    NoCandidateError,
    RepairFailedError,
)
from .geometry import (
    ANTIPODAL_THRESHOLD,
    PhysicalConstants,
    SpherePoint,
    chord_distance,
    dome_angle,
    los_chord_limit,
    slerp,
)


class RouteStatus(Enum):
    """How route construction ended."""

    OK = "ok"
    REPAIRED = "repaired"
    TYPE2_INTERRUPTED = "type2_interrupted"


@dataclass(frozen=True)
class Route:
    """A materialized route through the constellation.

    Attributes:
        hops: Satellite IDs in visit order (first = src; last = dst unless
            construction was interrupted, in which case this is the prefix
            reached before failing).
        hop_distances: Chord length in km of each consecutive hop.
        latency: Propagation latency in ms of the hops listed.
        status: ``ok``, ``repaired`` (at least one hop was repaired), or
            ``type2_interrupted`` (no admissible continuation existed).
        relay_targets: The ideal relay positions the hops were snapped to,
            kept for diagnostics (empty for the greedy strategies).
        direct_hop: True when the route is the single-hop shortcut taken
            because the endpoints can reach each other directly.
    """

    hops: tuple[int, ...]
    hop_distances: tuple[float, ...]
    latency: float
    status: RouteStatus
    relay_targets: tuple[SpherePoint, ...] = ()
    direct_hop: bool = False

    def __post_init__(self) -> None:
        if len(self.hops) < 1:
            raise InvalidInputError("a route must contain at least its source")
        if len(self.hop_distances) != len(self.hops) - 1:
            raise InvalidInputError("need exactly one distance per hop")
        if len(set(self.hops)) != len(self.hops):
            raise InvalidInputError("a route may not visit a satellite twice")

    @property
    def interrupted(self) -> bool:
        """True when construction failed (type-II interruption)."""
        return self.status is RouteStatus.TYPE2_INTERRUPTED

    @property
    def n_hops(self) -> int:
        """Number of hops actually materialized."""
        return len(self.hop_distances)


def _hop_chord_limit(radius: float, link: LinkSpec) -> float:
    """Longest admissible hop chord in km."""
    return min(link.d_max, los_chord_limit(radius, link.constants.r_earth))


def _resolve_endpoint(c: Constellation, point: SpherePoint, role: str) -> int:
    """ID of the satellite sitting at ``point`` (must match exactly)."""
    sat = nearest(c, point)
    gap = float(np.linalg.norm(c.unit_vectors[sat] - point.unit_vector()))
    if gap > 1e-9 or abs(point.r - c.radius) > 1e-9 * c.radius:
        raise InvalidInputError(
            f"{role} endpoint is not a satellite of the constellation"
        )
    return sat


def _arc_parametrization(
    src: SpherePoint, dst: SpherePoint
) -> tuple[Callable[[float], np.ndarray], np.ndarray]:
    """Unit-vector curve t -> point on the src-dst arc, plus the arc's normal.

    Antipodal endpoints have no unique connecting arc; we pick the half
    great circle through the +z pole (through +x when the endpoints are
    the poles themselves) so results stay deterministic.
    """
    a = src.unit_vector()
    b = dst.unit_vector()
    arc = dome_angle(src, dst)
    if arc < ANTIPODAL_THRESHOLD:
        raise DegenerateArcError("endpoints coincide; no arc to follow")
    if arc < math.pi - ANTIPODAL_THRESHOLD:
        normal = np.cross(a, b)
        normal /= np.linalg.norm(normal)
        sin_arc = math.sin(arc)

        def point(t: float) -> np.ndarray:
            return (
                math.sin((1.0 - t) * arc) * a + math.sin(t * arc) * b
            ) / sin_arc

        return point, normal
    pole = np.array([0.0, 0.0, 1.0])
    if abs(float(a @ pole)) > 1.0 - 1e-9:
        pole = np.array([1.0, 0.0, 0.0])
    u = pole - float(pole @ a) * a
    u /= np.linalg.norm(u)
    normal = np.cross(a, u)

    def point(t: float) -> np.ndarray:
        ang = t * math.pi
        return math.cos(ang) * a + math.sin(ang) * u

    return point, normal


def arc_waypoints(
    src: SpherePoint, dst: SpherePoint, n_hops: int
) -> tuple[SpherePoint, ...]:
    """``n_hops + 1`` equally spaced points along the src-dst arc.

    Unlike plain slerp this resolves antipodal endpoints with the same
    deterministic half-great-circle convention the routing strategies
    use, so it works for any separation in (0, pi].
    """
    if n_hops < 1:
        raise InvalidInputError(f"n_hops must be >= 1, got {n_hops}")
    point, _ = _arc_parametrization(src, dst)
    return tuple(
        SpherePoint.from_unit_vector(point(i / n_hops), src.r)
        for i in range(n_hops + 1)
    )


def _materialize(
    c: Constellation,
    hops: list[int],
    constants: PhysicalConstants,
    status: RouteStatus,
    relay_targets: tuple[SpherePoint, ...] = (),
    direct_hop: bool = False,
) -> Route:
    distances = tuple(
        chord_distance(c.position(a), c.position(b)) for a, b in zip(hops, hops[1:])
    )
    return Route(
        hops=tuple(hops),
        hop_distances=distances,
        latency=sum(distances) / constants.c,
        status=status,
        relay_targets=relay_targets,
        direct_hop=direct_hop,
    )


def route_ideal(
    src_pos: SpherePoint,
    dst_pos: SpherePoint,
    d_max: float = 3000.0,
    constants: Optional[PhysicalConstants] = None,
) -> tuple[tuple[SpherePoint, ...], float]:
    """Latency-optimal relay positions, unconstrained by real satellites.

    Splits the great-circle arc into the minimum feasible number of equal
    hops. Returns the hop endpoints (including src and dst) and the total
    propagation latency in ms; every hop spans the same dome angle.

    Raises:
        DegenerateArcError: If the endpoints coincide or are antipodal
            (the connecting arc is not unique).
    """
    consts = constants or PhysicalConstants()
    if abs(src_pos.r - dst_pos.r) > 1e-9 * src_pos.r:
        raise InvalidInputError("endpoints must share a sphere radius")
    arc = dome_angle(src_pos, dst_pos)
    if arc >= math.pi - ANTIPODAL_THRESHOLD:
        raise DegenerateArcError("antipodal endpoints: ideal arc is not unique")
    theta_max = max_hop_angle(src_pos.r, consts.r_earth, d_max)
    n = n_min_ideal(arc, theta_max)
    positions = tuple(slerp(src_pos, dst_pos, i / n) for i in range(n + 1))
    return positions, ideal_latency(arc, n, src_pos.r, consts)


def hop_repair(
    c: Constellation,
    from_id: int,
    to_id: int,
    link: LinkSpec,
    exclude: AbstractSet[int] = frozenset(),
) -> list[int]:
    """Intermediate satellites making an inadmissible hop admissible.

    Walks greedily from ``from_id``: each step takes the satellite that is
    admissible from the current one, strictly closer to ``to_id`` (by dome
    angle), not excluded, and deviates least from the from->to arc. Stops
    once ``to_id`` is one admissible hop away. Returns the intermediates
    in visit order (empty when the hop was already admissible).

    Raises:
        RepairFailedError: If at some step no satellite qualifies.
    """
    radius = c.radius
    limit = _hop_chord_limit(radius, link)
    cos_admissible = 1.0 - (limit * limit) / (2.0 * radius * radius)
    units = c.unit_vectors
    to_vec = units[to_id]

    cur = from_id
    cur_dot_to = float(units[cur] @ to_vec)
    if cur_dot_to >= cos_admissible:
        return []

    try:
        _, normal = _arc_parametrization(c.position(from_id), c.position(to_id))
    except DegenerateArcError as exc:
        raise RepairFailedError(
            f"cannot repair hop {from_id}->{to_id}: no reference arc"
        ) from exc

    blocked = np.zeros(c.n_sat, dtype=bool)
    for i in exclude:
        if 0 <= i < c.n_sat:
            blocked[i] = True
    blocked[from_id] = True
    blocked[to_id] = True

    deflection = np.abs(np.arcsin(np.clip(units @ normal, -1.0, 1.0)))
    dots_to = units @ to_vec
    result: list[int] = []
    for _ in range(c.n_sat):
        eligible = (
            ~blocked
            & (units @ units[cur] >= cos_admissible)
            & (dots_to > cur_dot_to)
        )
        if not eligible.any():
            raise RepairFailedError(
                f"no admissible satellite advances hop {from_id}->{to_id}"
            )
        step = int(np.argmin(np.where(eligible, deflection, np.inf)))
        result.append(step)
        blocked[step] = True
        cur = step
        cur_dot_to = float(dots_to[cur])
        if cur_dot_to >= cos_admissible:
            return result
    raise InternalConsistencyError(
        f"hop repair for {from_id}->{to_id} exceeded the satellite count"
    )


def route_equal_interval(
    c: Constellation,
    link: LinkSpec,
    plan: HopPlan,
    allow_direct: bool = True,
) -> Route:
    """Route by snapping equally spaced arc targets to nearest satellites.

    Stage 1 places ``plan.n_hat - 1`` relay targets at equal intervals on
    the shortest arc between the link's endpoints. Stage 2 snaps each
    target to its nearest satellite, excluding the endpoints and any
    satellite already chosen (so no relay is reused). Stage 3 repairs
    every hop that violates the distance or visibility constraint via
    :func:`hop_repair`; a failed repair ends the route with
    ``type2_interrupted`` status.

    The plan is used mechanically: callers that want the planned
    reliability guarantee should check ``plan.type1_interrupted`` first.

    Args:
        allow_direct: When True and the endpoints can reach each other in
            one admissible hop, return that single-hop route (flagged
            ``direct_hop``) instead of the planned multi-hop one.
    """
    src_id = _resolve_endpoint(c, link.src, "src")
    dst_id = _resolve_endpoint(c, link.dst, "dst")
    if src_id == dst_id:
        raise InvalidInputError("src and dst must be different satellites")
    consts = link.constants
    radius = c.radius
    limit = _hop_chord_limit(radius, link)
    arc = link.arc_angle
    theta_max = max_hop_angle(radius, consts.r_earth, link.d_max)

    if (
        allow_direct
        and arc <= theta_max
        and chord_distance(c.position(src_id), c.position(dst_id)) <= limit
    ):
        return _materialize(
            c, [src_id, dst_id], consts, RouteStatus.OK, direct_hop=True
        )

    point_at, _ = _arc_parametrization(c.position(src_id), c.position(dst_id))
    n = plan.n_hat
    targets = tuple(
        SpherePoint.from_unit_vector(point_at(i / n), radius) for i in range(1, n)
    )

    chosen: list[int] = []
    taken: set[int] = {src_id, dst_id}
    for target in targets:
        try:
            relay = nearest(c, target, exclude=taken)
        except NoCandidateError:
            return _materialize(
                c,
                [src_id, *chosen],
                consts,
                RouteStatus.TYPE2_INTERRUPTED,
                relay_targets=targets,
            )
        chosen.append(relay)
        taken.add(relay)

    planned = [src_id, *chosen, dst_id]
    used = set(planned)
    full: list[int] = [src_id]
    repaired = False
    for a, b in zip(planned, planned[1:]):
        if chord_distance(c.position(a), c.position(b)) <= limit:
            full.append(b)
            continue
        try:
            mids = hop_repair(c, a, b, link, exclude=used)
        except RepairFailedError:
            return _materialize(
                c, full, consts, RouteStatus.TYPE2_INTERRUPTED, relay_targets=targets
            )
        used.update(mids)
        full.extend(mids)
        full.append(b)
        repaired = repaired or bool(mids)

    status = RouteStatus.REPAIRED if repaired else RouteStatus.OK
    return _materialize(c, full, consts, status, relay_targets=targets)


def _route_greedy(
    c: Constellation,
    link: LinkSpec,
    pick_farthest: bool,
    belt_halfwidth: Optional[float],
    max_hops: Optional[int],
) -> Route:
    """Shared greedy walk for the two baseline strategies."""
    src_id = _resolve_endpoint(c, link.src, "src")
    dst_id = _resolve_endpoint(c, link.dst, "dst")
    if src_id == dst_id:
        raise InvalidInputError("src and dst must be different satellites")
    consts = link.constants
    radius = c.radius
    limit = _hop_chord_limit(radius, link)
    theta_max = max_hop_angle(radius, consts.r_earth, link.d_max)

    plan = plan_hops(link.arc_angle, theta_max, c.n_sat, link.epsilon)
    cap = max_hops if max_hops is not None else 4 * plan.n_hat
    belt = belt_halfwidth if belt_halfwidth is not None else plan.reliable_angle

    _, normal = _arc_parametrization(c.position(src_id), c.position(dst_id))
    units = c.unit_vectors
    cos_admissible = 1.0 - (limit * limit) / (2.0 * radius * radius)
    dots_dst = units @ units[dst_id]
    blocked = np.zeros(c.n_sat, dtype=bool)
    blocked[src_id] = True
    if pick_farthest:
        deflection = np.abs(np.arcsin(np.clip(units @ normal, -1.0, 1.0)))
        in_belt = deflection <= belt
    else:
        score = np.abs(np.arcsin(np.clip(units @ normal, -1.0, 1.0)))

    hops = [src_id]
    cur = src_id
    while len(hops) - 1 < cap:
        dots_cur = units @ units[cur]
        if float(dots_cur[dst_id]) >= cos_admissible:
            hops.append(dst_id)
            return _materialize(c, hops, consts, RouteStatus.OK)
        eligible = (
            ~blocked & (dots_cur >= cos_admissible) & (dots_dst > dots_dst[cur])
        )
        if pick_farthest:
            eligible &= in_belt
        if not eligible.any():
            break
        if pick_farthest:
            # Farthest admissible hop = smallest dot with the current satellite.
            step = int(np.argmin(np.where(eligible, dots_cur, np.inf)))
        else:
            step = int(np.argmin(np.where(eligible, score, np.inf)))
        hops.append(step)
        blocked[step] = True
        cur = step
    return _materialize(c, hops, consts, RouteStatus.TYPE2_INTERRUPTED)


def route_min_deflection(
    c: Constellation, link: LinkSpec, max_hops: Optional[int] = None
) -> Route:
    """Greedy baseline: hug the great-circle arc.

    From each satellite, move to the admissible satellite that is strictly
    closer to the destination and deviates least from the src->dst arc;
    take the destination directly as soon as it is admissible. Runs out of
    candidates or exceeds ``max_hops`` (default 4x the planned hop count)
    -> ``type2_interrupted``.
    """
    return _route_greedy(
        c, link, pick_farthest=False, belt_halfwidth=None, max_hops=max_hops
    )


def route_max_stepsize(
    c: Constellation,
    link: LinkSpec,
    belt_halfwidth: Optional[float] = None,
    max_hops: Optional[int] = None,
) -> Route:
    """Greedy baseline: longest admissible hop inside a belt around the arc.

    Candidates must lie within ``belt_halfwidth`` (dome angle) of the
    src->dst arc — default: the planned reliable angle — be admissible
    from the current satellite, and be strictly closer to the destination;
    among them the farthest is taken. Same termination rules as
    :func:`route_min_deflection`.
    """
    return _route_greedy(
        c,
        link,
        pick_farthest=True,
        belt_halfwidth=belt_halfwidth,
        max_hops=max_hops,
    )
