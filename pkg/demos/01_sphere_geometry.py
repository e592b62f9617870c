"""Spherical primitives: points, arcs, interpolation, and hop limits.

Walks through the geometric vocabulary the rest of the library builds
on: dome angles and chords between satellites, great-circle
interpolation, deflection from a reference arc, and the line-of-sight
limit that caps how far a single hop may reach.
"""

import math

from leoroute import (
    PhysicalConstants,
    SpherePoint,
    deflection_angle,
    chord_distance,
    dome_angle,
    los_chord_limit,
    max_hop_angle,
    slerp,
)

R_EARTH = 6371.0
RADIUS = R_EARTH + 550.0  # a 550 km shell

# Two satellites a quarter turn apart on the same parallel.
a = SpherePoint(r=RADIUS, theta=math.pi / 3, phi=0.0)
b = SpherePoint(r=RADIUS, theta=math.pi / 3, phi=math.pi / 2)

print("dome angle a-b   :", f"{dome_angle(a, b):.6f} rad")
print("chord distance   :", f"{chord_distance(a, b):.1f} km")

# Great-circle interpolation: the midpoint sits at half the dome angle.
mid = slerp(a, b, 0.5)
print("midpoint dome to a:", f"{dome_angle(a, mid):.6f} rad (half of a-b)")

# Deflection measures how far a candidate satellite strays from the
# reference arc; a point on the arc itself has deflection zero.
off_arc = SpherePoint(r=RADIUS, theta=math.pi / 3 - 0.1, phi=math.pi / 4)
print("deflection of mid :", f"{deflection_angle(mid, a, b):.2e} rad")
print("deflection off-arc:", f"{deflection_angle(off_arc, a, b):.4f} rad")

# A hop is admissible only below the line-of-sight chord (the Earth
# otherwise blocks the link) and below the hardware range d_max.
consts = PhysicalConstants()
los = los_chord_limit(RADIUS, R_EARTH)
print("line-of-sight cap :", f"{los:.1f} km")
for d_max in (3000.0, 8000.0):
    theta = max_hop_angle(RADIUS, R_EARTH, d_max)
    cap = "d_max" if d_max < los else "horizon"
    print(
        f"max hop angle (d_max={d_max:.0f} km): {theta:.6f} rad  [{cap}-limited]"
    )

# Latency is pure propagation: chord length over the speed of light.
print("one 3000 km hop  :", f"{3000.0 / consts.c:.3f} ms")
