#!/usr/bin/env python3
"""Regenerates the scenario files in data/ from local-plane layouts in nmi.

Run from the repository root: python3 tools/make_fixtures.py
"""

import json
import math
from datetime import datetime, timedelta, timezone
from pathlib import Path

R = 3440.065  # nmi
DATA = Path(__file__).resolve().parent.parent / "data"


def to_geo(origin, ref_lat, x, y):
    lat0, lon0 = origin
    lat = lat0 + math.degrees(y / R)
    lon = lon0 + math.degrees(x / (R * math.cos(math.radians(ref_lat))))
    return round(lat, 6), round(lon, 6)


def planar_nmi(a, b, ref_lat):
    dx = R * math.radians(b[1] - a[1]) * math.cos(math.radians(ref_lat))
    dy = R * math.radians(b[0] - a[0])
    return math.hypot(dx, dy)


def great_circle_nmi(a, b):
    p1, p2 = math.radians(a[0]), math.radians(b[0])
    dp, dl = p2 - p1, math.radians(b[1] - a[1])
    h = math.sin(dp / 2) ** 2 + math.cos(p1) * math.cos(p2) * math.sin(dl / 2) ** 2
    return 2 * R * math.asin(math.sqrt(h))


def iso(t):
    return t.strftime("%Y-%m-%dT%H:%M:%SZ")


def timed(points, start, speed_kn, dist, names=None, waits=None):
    """Waypoints sailed at a constant speed, ETAs rounded to the second."""
    out, t = [], start
    for i, p in enumerate(points):
        if i > 0:
            t += timedelta(seconds=round(dist(points[i - 1], p) / speed_kn * 3600.0))
        wp = {"lat": p[0], "lon": p[1], "eta": iso(t)}
        wait = (waits or {}).get(i, 0)
        if wait:
            wp["etd"] = iso(t + timedelta(seconds=wait))
            t += timedelta(seconds=wait)
        if names and names[i]:
            wp = {"name": names[i], **wp}
        out.append(wp)
    return out


def ring(origin, ref_lat, pts):
    coords = [[to_geo(origin, ref_lat, x, y)[1], to_geo(origin, ref_lat, x, y)[0]] for x, y in pts]
    return coords + [coords[0]]


def polygon(name, kind, coords):
    return {
        "type": "Feature",
        "properties": {"kind": kind, "name": name},
        "geometry": {"type": "Polygon", "coordinates": [coords]},
    }


def costa():
    origin, ref = (42.115, 11.45), 42.3
    speed = 15.94
    planned_xy = [(0.0, 0.0), (-13.99995, 12.05757), (-26.99997, 19.32762), (-40.0, 24.0)]
    actual_xy = [
        (0.0, 0.0), (-4.63372, 2.40759), (-8.82036, 6.19597), (-13.75633, 8.02867), (-16.27029, 10.90719),
        (-20.18425, 12.70809), (-18.31640, 11.40375), (-21.08414, 10.34512), (-22.38662, 9.56946),
        (-22.6, 9.6), (-40.0, 24.0),
    ]
    planned = [to_geo(origin, ref, *p) for p in planned_xy]
    actual = [to_geo(origin, ref, *p) for p in actual_xy]
    dist = lambda a, b: planar_nmi(a, b, ref)
    start_p = datetime(2012, 1, 6, 18, 10, tzinfo=timezone.utc)
    start_a = datetime(2012, 1, 13, 18, 10, tzinfo=timezone.utc)
    rocks = [(-22.55, 9.62), (-22.5, 9.45), (-22.7, 9.4), (-22.75, 9.55)]
    island = [(-22.9, 9.3), (-23.3, 6.2), (-24.5, 5.0), (-26.2, 5.7), (-26.5, 8.2), (-25.2, 10.2), (-23.6, 10.0)]
    return {
        "id": "costa-concordia-2012",
        "provenance": (
            "Waypoints placed by hand where the 6 and 13 January 2012 tracks change direction; "
            "coordinates are approximate. Safety values are assumed, not estimated: 1.0 for the "
            "planned route, falling linearly to 0.5 for routes sailed through the grounding point."
        ),
        "geometry": {"model": "planar", "reference_lat": ref},
        "ship": {"v_max_kn": 20.0, "positional_sigma_nmi": 0.05},
        "planned": {
            "id": "planned-2012-01-06",
            "waypoints": timed(planned, start_p, speed, dist, ["A", "P1", "P2", "B"]),
        },
        "actual": {
            "id": "actual-2012-01-13",
            "waypoints": timed(
                actual, start_a, speed, dist, ["A'", "c1", "c2", "c3", "c4", "c5", "3'", "4'", "5'", "6'", "B'"]
            ),
        },
        "correspondence": [[0, 0], [3, 1], [6, 2], [10, 3]],
        "safety_annotation": {
            "planned_s": 1.0,
            "from_index": 5,
            "to_index": 9,
            "s_from": 1.0,
            "s_to": 0.5,
            "note": "assumed collision odds of one half for the route through the grounding point",
        },
        "whatif_turns": ["3'", "4'", "5'", "6'"],
        "obstacles": {
            "type": "FeatureCollection",
            "features": [
                polygon("Le Scole", "shallow", ring(origin, ref, rocks)),
                polygon("Isola del Giglio", "land", ring(origin, ref, island)),
            ],
        },
    }


def early_warning():
    origin, ref = (60.4, 26.9), 60.4
    speed = 12.0
    dist = lambda a, b: planar_nmi(a, b, ref)
    planned = [to_geo(origin, ref, *p) for p in [(0, 0), (5, 3), (10, 3), (15, 0), (20, 0)]]
    actual = [to_geo(origin, ref, *p) for p in [(0, 0), (5, 5)]]
    start = datetime(2024, 5, 14, 6, 0, tzinfo=timezone.utc)
    land = [(12.0, 2.6), (14.0, 2.6), (14.0, 4.6), (12.0, 4.6)]
    return {
        "id": "early-warning",
        "provenance": "Synthetic: a 2 nmi set to the north at the first waypoint, held thereafter, runs onto an island.",
        "geometry": {"model": "planar", "reference_lat": ref},
        "ship": {"v_max_kn": 14.0, "positional_sigma_nmi": 0.1},
        "planned": {"id": "planned", "waypoints": timed(planned, start, speed, dist, ["A", "1", "2", "3", "B"])},
        "actual": {"id": "actual", "waypoints": timed(actual, start, speed, dist, ["A'", "1'"])},
        "correspondence": [[0, 0], [1, 1]],
        "obstacles": {"type": "FeatureCollection", "features": [polygon("island", "land", ring(origin, ref, land))]},
    }


def zero_deviation():
    # Great-circle passage across the Gulf of Finland with a harbour stop.
    planned = [(60.15, 24.95), (59.95, 24.9), (59.7, 24.8), (59.46, 24.76)]
    start = datetime(2024, 6, 1, 8, 0, tzinfo=timezone.utc)
    wps = timed(planned, start, 14.0, great_circle_nmi, ["Helsinki", "W1", "W2", "Tallinn"], {1: 600})
    island = [[25.3, 59.8], [25.5, 59.8], [25.5, 59.9], [25.3, 59.9], [25.3, 59.8]]
    return {
        "id": "zero-deviation",
        "provenance": "Synthetic: the actual route follows the plan exactly through W2.",
        "geometry": {"model": "great-circle"},
        "ship": {"v_max_kn": 16.0, "positional_sigma_nmi": 0.1},
        "planned": {"id": "planned", "waypoints": wps},
        "actual": {"id": "actual", "waypoints": wps[:3]},
        "obstacles": {"type": "FeatureCollection", "features": [polygon("skerry", "land", island)]},
    }


def detour():
    # The plan zig-zags; the ship holds a straight line and each later
    # return route is shorter.
    origin, ref = (54.5, 12.0), 54.5
    speed = 12.0
    dist = lambda a, b: planar_nmi(a, b, ref)
    planned = [to_geo(origin, ref, *p) for p in [(0, 0), (10, 8), (20, -8), (30, 0)]]
    actual = [to_geo(origin, ref, *p) for p in [(0, 0), (10, 0), (20, 0)]]
    start = datetime(2024, 7, 2, 4, 0, tzinfo=timezone.utc)
    return {
        "id": "detour",
        "provenance": "Synthetic: straight-line sailing against a zig-zag plan.",
        "geometry": {"model": "planar", "reference_lat": ref},
        "ship": {"v_max_kn": 15.0, "positional_sigma_nmi": 0.1},
        "planned": {"id": "planned", "waypoints": timed(planned, start, speed, dist, ["A", "P1", "P2", "B"])},
        "actual": {"id": "actual", "waypoints": timed(actual, start, speed, dist, ["A'", "1'", "2'"])},
        "whatif_turns": ["1'", "2'"],
        "obstacles": {"type": "FeatureCollection", "features": []},
    }


def main():
    DATA.mkdir(exist_ok=True)
    for name, doc in [
        ("costa_concordia.json", costa()),
        ("early_warning.json", early_warning()),
        ("zero_deviation.json", zero_deviation()),
        ("detour.json", detour()),
    ]:
        (DATA / name).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
