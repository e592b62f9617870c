"""Command-line front end: analysis, single routes, summary table, sweeps.

Exit codes form a stable scripting contract:

* 0 — success
* 1 — usage or configuration error
* 2 — planning failed (no hop count satisfies the interruption budget)
* 3 — routing failed (no admissible relay continuation was found)

Angles are radians (the literal ``pi`` and forms like ``pi/2`` or
``0.5pi`` are accepted), distances km, latencies ms. All randomness flows
from ``--seed``.
"""

from __future__ import annotations

import json
import math
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import click

from .analysis import (
    contact_mean,
    ideal_latency,
    iteration_bound,
    latency_floor,
    max_hop_angle,
    min_sats_grid_minimum,
    n_min_ideal,
    plan_hops,
    LinkSpec,
)
from .constellation import (
    PRESET_PARAMS,
    load_constellation,
    sample_bpp,
)
from .errors import DegenerateArcError, InvalidInputError
from .experiments import (
    SCHEMA_VERSION,
    STRATEGIES,
    SweepSpec,
    make_endpoints,
    run_table1,
    sweep as run_sweep,
    table1_rows,
    write_records_csv,
    write_records_json,
    write_table1_csv,
    write_table1_json,
)
from .routing import (
    arc_waypoints,
    route_equal_interval,
    route_max_stepsize,
    route_min_deflection,
)

__version__ = "0.1.0"

_R_EARTH_KM = 6371.0

_ANGLE_PATTERN = re.compile(
    r"(?:(\d+(?:\.\d*)?|\.\d+)\s*\*?\s*)?pi(?:\s*/\s*(\d+(?:\.\d*)?|\.\d+))?"
)


def parse_angle(text: str) -> float:
    """Parse an angle in radians, allowing ``pi`` literals.

    Accepts plain floats plus forms like ``pi``, ``2pi``, ``pi/3``,
    ``0.5*pi``, ``2pi/3``.
    """
    s = str(text).strip().lower()
    try:
        return float(s)
    except ValueError:
        pass
    m = _ANGLE_PATTERN.fullmatch(s)
    if m is None:
        raise InvalidInputError(f"cannot parse angle {text!r}")
    numerator = float(m.group(1)) if m.group(1) else 1.0
    denominator = float(m.group(2)) if m.group(2) else 1.0
    return numerator * math.pi / denominator


@dataclass(frozen=True)
class RunConfig:
    """Resolved common settings of a CLI invocation."""

    preset: Optional[str]
    n_sat: int
    altitude_km: float
    d_max_km: float
    epsilon: float
    seed: int
    trials: int

    def __post_init__(self) -> None:
        if self.n_sat < 1:
            raise InvalidInputError("n_sat must be >= 1")
        if self.altitude_km <= 0 or self.d_max_km <= 0:
            raise InvalidInputError("altitude and d_max must be positive")
        if not 0.0 < self.epsilon < 1.0:
            raise InvalidInputError("epsilon must be in (0, 1)")
        if self.trials < 1:
            raise InvalidInputError("trials must be >= 1")

    @property
    def radius(self) -> float:
        return _R_EARTH_KM + self.altitude_km

    @property
    def theta_max(self) -> float:
        return max_hop_angle(self.radius, _R_EARTH_KM, self.d_max_km)


def _load_config_file(path: Optional[str]) -> dict:
    if path is None:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInputError(f"cannot read config file {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise InvalidInputError(f"config file {path} must hold a JSON object")
    return data


def _merge(flag_value, config: dict, key: str, default):
    """Flag beats config file beats hard default."""
    if flag_value is not None:
        return flag_value
    if key in config:
        return config[key]
    return default


def _resolve_config(
    preset: Optional[str],
    n_sat: Optional[int],
    altitude: Optional[float],
    d_max: Optional[float],
    epsilon: Optional[float],
    seed: Optional[int],
    trials: Optional[int],
    config_path: Optional[str],
    default_trials: int = 10_000,
    allow_no_constellation: bool = False,
) -> RunConfig:
    config = _load_config_file(config_path)
    preset = _merge(preset, config, "preset", None)
    n_sat = _merge(n_sat, config, "n_sat", None)
    altitude = _merge(altitude, config, "altitude_km", None)
    explicit = n_sat is not None or altitude is not None
    if preset is not None and explicit:
        raise InvalidInputError("give either --preset or --n-sat/--altitude, not both")
    if preset is not None:
        if preset not in PRESET_PARAMS:
            raise InvalidInputError(
                f"unknown preset {preset!r}; choose from {sorted(PRESET_PARAMS)}"
            )
        altitude, n_sat = PRESET_PARAMS[preset]
    elif n_sat is None or altitude is None:
        if not allow_no_constellation:
            raise InvalidInputError(
                "constellation unspecified: give --preset or both --n-sat and --altitude"
            )
        n_sat, altitude = 1, 550.0  # placeholder; caller uses a file instead
    return RunConfig(
        preset=preset,
        n_sat=int(n_sat),
        altitude_km=float(altitude),
        d_max_km=float(_merge(d_max, config, "d_max_km", 3000.0)),
        epsilon=float(_merge(epsilon, config, "epsilon", 0.01)),
        seed=int(_merge(seed, config, "seed", 0)),
        trials=int(_merge(trials, config, "trials", default_trials)),
    )


def _constellation_options(f):
    f = click.option(
        "--preset",
        type=click.Choice(sorted(PRESET_PARAMS)),
        default=None,
        help="Named constellation shell.",
    )(f)
    f = click.option("--n-sat", type=int, default=None, help="Satellite count.")(f)
    f = click.option(
        "--altitude", type=float, default=None, help="Shell altitude in km."
    )(f)
    f = click.option(
        "--d-max", type=float, default=None, help="Max hop chord in km (default 3000)."
    )(f)
    f = click.option(
        "--epsilon",
        type=float,
        default=None,
        help="Interruption budget in (0, 1) (default 0.01).",
    )(f)
    f = click.option(
        "--config",
        "config_path",
        type=click.Path(),
        default=None,
        help="JSON file with defaults; flags override it.",
    )(f)
    return f


def _print_version(ctx: click.Context, _param, value: bool) -> None:
    if not value or ctx.resilient_parsing:
        return
    click.echo(f"leoroute {__version__} (output schema v{SCHEMA_VERSION})")
    ctx.exit(0)


@click.group()
@click.option(
    "--version",
    is_flag=True,
    expose_value=False,
    is_eager=True,
    callback=_print_version,
    help="Print version and output schema version.",
)
def cli() -> None:
    """Minimum-latency multi-hop routing between satellites on a sphere."""


@cli.command()
@_constellation_options
@click.option(
    "--dome-angle",
    default="pi",
    show_default=True,
    help="Endpoint separation in radians (pi literals allowed).",
)
def analyze(preset, n_sat, altitude, d_max, epsilon, config_path, dome_angle) -> None:
    """Closed-form link analysis: hop plan, contact law, feasibility."""
    cfg = _resolve_config(
        preset, n_sat, altitude, d_max, epsilon, None, None, config_path
    )
    arc = parse_angle(dome_angle)
    if not 0.0 < arc <= math.pi:
        raise InvalidInputError(f"dome angle must be in (0, pi], got {arc}")
    theta_max = cfg.theta_max
    plan = plan_hops(arc, theta_max, cfg.n_sat, cfg.epsilon)
    mean = contact_mean(cfg.n_sat)
    bound = iteration_bound(cfg.epsilon, theta_max, cfg.n_sat)
    click.echo(f"max_hop_angle_rad = {theta_max:.6f}")
    click.echo(f"n_min_hops = {n_min_ideal(arc, theta_max)}")
    click.echo(f"n_hat_hops = {plan.n_hat}")
    click.echo(f"reliable_angle_rad = {plan.reliable_angle:.6f}")
    click.echo(f"type1_interrupted = {'yes' if plan.type1_interrupted else 'no'}")
    click.echo(f"iterations_used = {plan.iterations_used}")
    click.echo(f"contact_mean_rad = {mean.quadrature:.6f}")
    click.echo(
        f"min_sats_sufficient = {min_sats_grid_minimum(arc, theta_max, cfg.epsilon)}"
    )
    bound_text = f"{bound:.3f}" if bound < 1e6 else f"{bound:.6g}"
    click.echo(f"iteration_bound = {bound_text}")
    if plan.type1_interrupted:
        raise click.exceptions.Exit(2)


def _route_payload_base(strategy: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "strategy": strategy}


@cli.command()
@_constellation_options
@click.option(
    "--dome-angle",
    default="pi",
    show_default=True,
    help="Endpoint separation in radians (pi literals allowed).",
)
@click.option(
    "--strategy",
    type=click.Choice(list(STRATEGIES)),
    default="equal-interval",
    show_default=True,
)
@click.option("--seed", type=int, default=None, help="Constellation seed (default 0).")
@click.option(
    "--belt",
    type=float,
    default=None,
    help="Belt half-width in rad for max-stepsize (default: planned reliable angle).",
)
@click.option(
    "--constellation",
    "constellation_path",
    type=click.Path(),
    default=None,
    help="Load satellites from a JSON file instead of sampling.",
)
@click.option(
    "--out",
    type=click.Path(),
    default=None,
    help="Write the route JSON here instead of stdout.",
)
def route(
    preset,
    n_sat,
    altitude,
    d_max,
    epsilon,
    config_path,
    dome_angle,
    strategy,
    seed,
    belt,
    constellation_path,
    out,
) -> None:
    """Build one route between endpoints at the given separation."""
    cfg = _resolve_config(
        preset,
        n_sat,
        altitude,
        d_max,
        epsilon,
        seed,
        None,
        config_path,
        allow_no_constellation=constellation_path is not None,
    )
    arc = parse_angle(dome_angle)
    if not 0.0 < arc <= math.pi:
        raise InvalidInputError(f"dome angle must be in (0, pi], got {arc}")

    if constellation_path is not None:
        base = load_constellation(constellation_path)
    else:
        base = sample_bpp(cfg.n_sat, _R_EARTH_KM, cfg.altitude_km, cfg.seed)
    radius = base.radius
    theta_max = max_hop_angle(radius, base.r_earth, cfg.d_max_km)
    src, dst = make_endpoints(radius, arc)

    payload = _route_payload_base(strategy)
    exit_code = 0
    if strategy == "ideal":
        # Equivalent to route_ideal away from antipodal, but resolves the
        # antipodal ambiguity with the routing convention so the default
        # half-circle separation works for every strategy.
        n_hops = n_min_ideal(arc, theta_max)
        positions = arc_waypoints(src, dst, n_hops)
        payload.update(
            {
                "relay_positions": [
                    {"theta_rad": p.theta, "phi_rad": p.phi} for p in positions
                ],
                "n_hops": n_hops,
                "latency_ms": ideal_latency(arc, n_hops, radius),
                "status": "ok",
            }
        )
    else:
        c = base.with_extra_points([src, dst])
        link = LinkSpec(src=src, dst=dst, d_max=cfg.d_max_km, epsilon=cfg.epsilon)
        plan = plan_hops(arc, theta_max, base.n_sat, cfg.epsilon)
        route_obj = None
        if strategy == "equal-interval":
            payload.update(
                {
                    "n_hat": plan.n_hat,
                    "reliable_angle_rad": plan.reliable_angle,
                    "type1_interrupted": plan.type1_interrupted,
                }
            )
            if plan.type1_interrupted and plan.iterations_used == 1:
                payload["status"] = "type2_interrupted"
                payload["hops"] = []
                exit_code = 2
            else:
                route_obj = route_equal_interval(c, link, plan)
                if plan.type1_interrupted:
                    exit_code = 2
        elif strategy == "min-deflection":
            route_obj = route_min_deflection(c, link)
        else:
            route_obj = route_max_stepsize(c, link, belt_halfwidth=belt)
        if route_obj is not None:
            payload.update(
                {
                    "hops": list(route_obj.hops),
                    "hop_distances_km": list(route_obj.hop_distances),
                    "latency_ms": (
                        None if route_obj.interrupted else route_obj.latency
                    ),
                    "status": route_obj.status.value,
                    "direct_hop": route_obj.direct_hop,
                }
            )
            if route_obj.interrupted and exit_code == 0:
                exit_code = 3
        payload["ideal_latency_ms"] = ideal_latency(
            arc, n_min_ideal(arc, theta_max), radius
        )
        payload["latency_floor_ms"] = latency_floor(arc, theta_max, radius)

    text = json.dumps(payload, indent=2)
    if out is not None:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)
    if exit_code:
        raise click.exceptions.Exit(exit_code)


def _write_pair(fmt: str, out_base: str, write_csv, write_json) -> list[str]:
    paths = []
    if fmt in ("csv", "both"):
        path = f"{out_base}.csv"
        write_csv(path)
        paths.append(path)
    if fmt in ("json", "both"):
        path = f"{out_base}.json"
        write_json(path)
        paths.append(path)
    return paths


@cli.command()
@click.option("--trials", type=int, default=None, help="Trials per cell (default 10000).")
@click.option("--seed", type=int, default=None, help="Base seed (default 0).")
@click.option("--threads", type=int, default=1, show_default=True, help="Worker processes.")
@click.option("--out", default="table1", show_default=True, help="Output base path.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json", "both"]),
    default="both",
    show_default=True,
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(),
    default=None,
    help="JSON file with defaults; flags override it.",
)
def table1(trials, seed, threads, out, fmt, config_path) -> None:
    """Monte Carlo summary table over the three preset constellations."""
    config = _load_config_file(config_path)
    trials = int(_merge(trials, config, "trials", 10_000))
    seed = int(_merge(seed, config, "seed", 0))
    if trials < 1:
        raise InvalidInputError("trials must be >= 1")
    result = run_table1(trials=trials, base_seed=seed, threads=threads)
    paths = _write_pair(
        fmt,
        out,
        lambda p: write_table1_csv(result, p),
        lambda p: write_table1_json(result, p),
    )
    header = ["metric"] + [col.preset for col in result.columns]
    widths = [max(len(header[i]), 22) for i in range(len(header))]
    click.echo("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in table1_rows(result):
        click.echo("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    for path in paths:
        click.echo(f"wrote {path}")


_SWEEP_VARS = {"distance": "distance_km", "altitude": "altitude_km", "n-sat": "n_sat"}


@cli.command(name="sweep")
@click.option(
    "--var",
    type=click.Choice(sorted(_SWEEP_VARS)),
    required=True,
    help="Quantity to sweep.",
)
@click.option("--from", "start", type=float, required=True, help="First swept value.")
@click.option("--to", "stop", type=float, required=True, help="Last swept value (inclusive).")
@click.option("--step", type=float, required=True, help="Increment between values.")
@click.option("--preset", type=click.Choice(sorted(PRESET_PARAMS)), default=None)
@click.option("--n-sat", type=int, default=None, help="Fixed satellite count.")
@click.option("--altitude", type=float, default=None, help="Fixed altitude in km.")
@click.option("--distance", type=float, default=None, help="Fixed endpoint distance in km.")
@click.option("--d-max", type=float, default=None, help="Max hop chord in km (default 3000).")
@click.option("--epsilon", type=float, default=None, help="Interruption budget (default 0.01).")
@click.option("--trials", type=int, default=None, help="Trials per cell (default 1000).")
@click.option("--seed", type=int, default=None, help="Base seed (default 0).")
@click.option("--threads", type=int, default=1, show_default=True, help="Worker processes.")
@click.option(
    "--strategies",
    default=",".join(STRATEGIES),
    show_default=True,
    help="Comma-separated strategy subset.",
)
@click.option("--out", default="sweep", show_default=True, help="Output base path.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json", "both"]),
    default="both",
    show_default=True,
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(),
    default=None,
    help="JSON file with defaults; flags override it.",
)
def sweep_cmd(
    var,
    start,
    stop,
    step,
    preset,
    n_sat,
    altitude,
    distance,
    d_max,
    epsilon,
    trials,
    seed,
    threads,
    strategies,
    out,
    fmt,
    config_path,
) -> None:
    """Sweep one parameter and record per-strategy aggregates."""
    config = _load_config_file(config_path)
    variable = _SWEEP_VARS[var]
    if step <= 0 or stop < start:
        raise InvalidInputError("need step > 0 and --to >= --from")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = tuple(start + i * step for i in range(count))

    explicit = {"n_sat": n_sat, "altitude_km": altitude, "distance_km": distance}
    if explicit.get(variable) is not None:
        raise InvalidInputError(f"cannot fix the swept variable {var!r}")
    if preset is not None and (n_sat is not None or altitude is not None):
        raise InvalidInputError("give either --preset or --n-sat/--altitude, not both")
    if preset is not None:
        preset_altitude, preset_n = PRESET_PARAMS[preset]
        n_sat = preset_n if n_sat is None else n_sat
        altitude = preset_altitude if altitude is None else altitude

    fixed = {
        "n_sat": _merge(n_sat, config, "n_sat", None),
        "altitude_km": _merge(altitude, config, "altitude_km", None),
        "distance_km": _merge(distance, config, "distance_km", None),
        "d_max_km": float(_merge(d_max, config, "d_max_km", 3000.0)),
        "epsilon": float(_merge(epsilon, config, "epsilon", 0.01)),
    }
    # A preset- or config-supplied value for the swept slot is just a default;
    # drop it rather than reject it.
    fixed.pop(variable, None)
    missing = [k for k, v in fixed.items() if v is None]
    if missing:
        raise InvalidInputError(f"missing fixed parameters: {missing}")
    trials = int(_merge(trials, config, "trials", 1000))
    seed = int(_merge(seed, config, "seed", 0))

    chosen = tuple(s.strip() for s in strategies.split(",") if s.strip())
    spec = SweepSpec(
        variable=variable,
        values=values,
        fixed=fixed,
        trials=trials,
        base_seed=seed,
    )
    records = run_sweep(spec, strategies=chosen, threads=threads)
    paths = _write_pair(
        fmt,
        out,
        lambda p: write_records_csv(records, p),
        lambda p: write_records_json(records, p),
    )
    click.echo(
        f"swept {variable} over {len(values)} values x {len(chosen)} strategies "
        f"({trials} trials each)"
    )
    for path in paths:
        click.echo(f"wrote {path}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI, mapping failures onto the documented exit codes.

    In non-standalone mode click swallows ``Exit`` and hands back its code as
    the return value, so deliberate exits (type-I -> 2, type-II -> 3) arrive
    here as integers rather than exceptions.
    """
    try:
        result = cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except (InvalidInputError, DegenerateArcError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return result if isinstance(result, int) else 0


def entrypoint() -> None:
    """Console-script entry point."""
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
