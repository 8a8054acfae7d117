"""JSON document shapes shared by the CLI and the HTTP service.

Every number crosses the wire as a string in the scalar grammar, so no value
is ever mangled by a float round-trip.  Dumps are key-sorted and compact,
which makes repeated runs byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .analysis import BhCertificate, BhVerdict, UVPartition
from .bhg import GProfile, ProbeReport
from .errors import ScalarSyntaxError
from .repair import RepairReport
from .scalars import Magnitude, check_backend, format_scalar, parse_scalar
from .sumset import RepresentationProfile
from .vectors import Vector


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def vector_to_doc(v: Vector, label: Optional[str] = None) -> dict:
    doc = {"backend": v.backend, "elements": [format_scalar(c) for c in v.coords]}
    if label is not None:
        doc["label"] = label
    return doc


def doc_to_vector(doc: dict) -> Vector:
    """Parse a vector document {"backend": ..., "elements": [...]}."""
    if not isinstance(doc, dict):
        raise ScalarSyntaxError("vector document must be a JSON object")
    backend = check_backend(doc.get("backend", "rational"))
    elements = doc.get("elements")
    if not isinstance(elements, list) or not elements:
        raise ScalarSyntaxError("vector document needs a nonempty 'elements' list")
    return Vector(tuple(parse_scalar(e, backend) for e in elements), backend)


def elements_of(v: Vector) -> list[str]:
    return [format_scalar(c) for c in v.coords]


def magnitude_to_str(m: Magnitude) -> str:
    value = m.value
    return format_scalar(value if isinstance(value, float) else Fraction(value))


def verdict_to_doc(verdict: BhVerdict) -> dict:
    return {
        "is_bh": verdict.is_bh,
        "has_distinct_coords": verdict.has_distinct_coords,
        "collision_witness": (
            [list(verdict.collision_witness[0]), list(verdict.collision_witness[1])]
            if verdict.collision_witness is not None
            else None
        ),
    }


def certificate_to_doc(cert: BhCertificate) -> dict:
    return {
        "delta": magnitude_to_str(cert.delta),
        "radius": magnitude_to_str(cert.radius),
        "squared": cert.delta.squared,
    }


def margin_to_doc(delta: Magnitude, h: int) -> dict:
    return {
        "delta": magnitude_to_str(delta),
        "radius": magnitude_to_str(delta.divided_by(h)),
        "squared": delta.squared,
    }


def profile_to_doc(profile: RepresentationProfile) -> dict:
    return {
        "h": profile.h,
        "sums": [
            {"value": format_scalar(e.value), "reps": [list(c) for c in e.reps]}
            for e in profile.entries
        ],
        "g_max": max(len(e.reps) for e in profile.entries),
    }


def uv_to_doc(part: UVPartition) -> dict:
    return {
        "delta_u": magnitude_to_str(part.delta_u),
        "squared": part.delta_u.squared,
        "v_pairs": [[list(x), list(y)] for x, y in part.v_pairs],
        "u_nonempty": part.u_nonempty,
    }


def repair_to_doc(report: RepairReport) -> dict:
    return {
        "c": elements_of(report.repaired),
        "lambda": format_scalar(report.scale) if report.scale is not None else "0",
        "delta_u": (
            magnitude_to_str(report.delta_u) if report.delta_u is not None else None
        ),
        "verified": report.verified,
    }


def gprofile_to_doc(gp: GProfile) -> dict:
    return {
        "h": gp.h,
        "g_max": gp.g_max,
        "histogram": {str(k): v for k, v in gp.histogram.items()},
    }


def probe_to_doc(report: ProbeReport) -> dict:
    return {
        "kind": "evidence",
        "center": elements_of(report.center),
        "backend": report.center.backend,
        "h": report.h,
        "g": report.g,
        "samples": report.samples,
        "radius": format_scalar(report.radius),
        "seed": report.seed,
        "frequencies": {str(k): v for k, v in report.frequencies.items()},
        "observed_min": report.observed_min,
        "observed_max": report.observed_max,
        "counterexamples": [elements_of(v) for v in report.counterexamples],
    }
