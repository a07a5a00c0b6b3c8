"""JSON encodings shared by the CLI and the verification reports.

Field elements are ``[c0, c1]``; polynomials are lists of field elements,
lowest degree first.  Everything is integers and strings, so dumps with
``sort_keys=True`` are byte-stable.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import BadInput
from .ff import FieldElement, FieldParams, field
from .halving import SignVector, SqrtProfile
from .jacobian import INFINITY, AffinePoint, Curve, MumfordDivisor, curve_new
from .poly import Poly


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def fe_to_json(x: FieldElement) -> list[int]:
    return [x.c0, x.c1]


def fe_from_json(F: FieldParams, v) -> FieldElement:
    if isinstance(v, bool):
        raise BadInput(f"bad field element {v!r}")
    if isinstance(v, int):
        return F(v)
    if isinstance(v, list) and 1 <= len(v) <= 2 and all(isinstance(c, int) and not isinstance(c, bool) for c in v):
        return F(v[0], v[1] if len(v) == 2 else 0)
    raise BadInput(f"bad field element {v!r}")


def poly_to_json(f: Poly) -> list[list[int]]:
    return [fe_to_json(c) for c in f.coeffs]


def poly_from_json(F: FieldParams, v) -> Poly:
    if not isinstance(v, list):
        raise BadInput(f"bad polynomial {v!r}")
    return Poly(F, [fe_from_json(F, c) for c in v])


def divisor_to_json(D: MumfordDivisor) -> dict:
    return {"U": poly_to_json(D.U), "V": poly_to_json(D.V)}


def divisor_from_json(F: FieldParams, v) -> MumfordDivisor:
    try:
        return MumfordDivisor(poly_from_json(F, v["U"]), poly_from_json(F, v["V"]))
    except (KeyError, TypeError) as exc:
        raise BadInput(f"bad Mumford divisor {v!r}") from exc


def curve_to_json(c: Curve) -> dict:
    return {"p": c.p, "g": c.g, "roots": [r.c0 for r in c.roots]}


def curve_from_json(v) -> Curve:
    try:
        p, g, roots = v["p"], v["g"], v["roots"]
    except (KeyError, TypeError) as exc:
        raise BadInput(f"bad curve {v!r}") from exc
    if not isinstance(p, int) or not isinstance(g, int) or not isinstance(roots, list):
        raise BadInput(f"bad curve {v!r}")
    F = field(p)
    return curve_new(p, g, [fe_from_json(F, r) for r in roots])


def point_to_json(P: AffinePoint):
    if P.is_infinity:
        return "infinity"
    return {"a": fe_to_json(P.a), "b": fe_to_json(P.b)}


def point_from_json(F: FieldParams, v) -> AffinePoint:
    if v == "infinity":
        return INFINITY
    try:
        return AffinePoint(fe_from_json(F, v["a"]), fe_from_json(F, v["b"]))
    except (KeyError, TypeError) as exc:
        raise BadInput(f"bad point {v!r}") from exc


def profile_to_json(r: SqrtProfile) -> dict:
    return {"point": point_to_json(r.base_point), "values": [fe_to_json(x) for x in r.values]}


def profile_from_json(F: FieldParams, v) -> tuple[AffinePoint, list[FieldElement]]:
    """Decode to (point, values); validate with ``halving.profile_new``."""
    try:
        return point_from_json(F, v["point"]), [fe_from_json(F, x) for x in v["values"]]
    except (KeyError, TypeError) as exc:
        raise BadInput(f"bad profile {v!r}") from exc


def sign_to_json(phi: SignVector) -> str:
    return str(phi)
