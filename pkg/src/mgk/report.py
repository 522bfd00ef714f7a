"""Structure reports: one solved structure with its invariant panel,
serializable to a stable versioned JSON document."""

import json
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from . import cusp_invariants as ci
from .commensurability_xk import XkSignature, abc
from .deformation import (
    FillingSpec,
    GKSignature,
    dehn_coefficients,
    residuals,
    uv,
)
from .hyptrig import DomainError

SCHEMA = "mgk/1"


@dataclass
class CuspReport:
    u: complex
    v: complex
    coefficients: Optional[Tuple[float, float]]
    complex_length: Optional[complex]
    modulus: Optional[complex]


@dataclass
class StructureReport:
    g: int
    k: int
    filling: tuple
    coords: List[float]
    residual_max: float
    cusps: List[CuspReport]
    return_path_length: float
    homology_rank: int
    heegaard_genus: int
    abc: Optional[Tuple[float, float, float]] = None


def build_report(
    sig: GKSignature,
    spec: FillingSpec,
    x: np.ndarray,
    residual_tol: float = 1e-9,
    complete_tol: float = 1e-8,
) -> StructureReport:
    """Assemble the invariant panel of a solved structure.  Refuses to
    report anything whose residual norm exceeds `residual_tol`."""
    res = float(np.max(np.abs(residuals(sig, x))))
    if not res < residual_tol:
        raise DomainError("residual norm %g above reporting tolerance %g" % (res, residual_tol))
    cusps = []
    for c, pq in enumerate(spec.pairs):
        u, v = uv(x, c)
        coeffs = dehn_coefficients(x, c)
        if pq is None:
            cl = None
            modulus = ci.cusp_modulus(x, c, complete_tol=complete_tol)
        else:
            modulus = None
            p, q = pq
            if float(p).is_integer() and float(q).is_integer():
                cl = ci.complex_length(x, c, (int(p), int(q)))
            else:
                cl = None
        cusps.append(
            CuspReport(u=u, v=v, coefficients=coeffs, complex_length=cl, modulus=modulus)
        )
    h = spec.filled_count
    report = StructureReport(
        g=sig.g,
        k=sig.k,
        filling=spec.pairs,
        coords=[float(v) for v in x],
        residual_max=res,
        cusps=cusps,
        return_path_length=ci.return_path_length(x),
        homology_rank=ci.homology_rank(sig, h),
        heegaard_genus=ci.heegaard_genus(sig),
    )
    if sig.k % 2 == 1 and sig.g == sig.k + 1:
        inv = abc(x, XkSignature(sig.k))
        report.abc = (inv.a, inv.b, inv.c)
    return report


# --- JSON serialization -----------------------------------------------------
#
# Floats are emitted with 17 significant digits so documents reproduce
# bit-identically across runs and parse back to the same doubles.  The
# stdlib encoder offers no float-format hook, so the (small, fixed-shape)
# document is rendered by hand.


def _dumps(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            raise DomainError("non-finite value %r in report" % obj)
        return format(obj, ".17g")
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = ",\n".join(pad + "  " + _dumps(v, indent + 1) for v in obj)
        return "[\n%s\n%s]" % (inner, pad)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            "%s  %s: %s" % (pad, json.dumps(str(k)), _dumps(v, indent + 1))
            for k, v in obj.items()
        )
        return "{\n%s\n%s}" % (inner, pad)
    raise DomainError("cannot serialize %r" % type(obj))


def _c2j(z: Optional[complex]):
    return None if z is None else [z.real, z.imag]


def report_to_dict(rep: StructureReport) -> dict:
    return {
        "schema": SCHEMA,
        "signature": {"g": rep.g, "k": rep.k},
        "filling": [
            "inf" if pq is None else [float(pq[0]), float(pq[1])] for pq in rep.filling
        ],
        "coords": list(rep.coords),
        "residual_max": rep.residual_max,
        "cusps": [
            {
                "u": _c2j(c.u),
                "v": _c2j(c.v),
                "coefficients": "inf" if c.coefficients is None else list(c.coefficients),
                "complex_length": _c2j(c.complex_length),
                "modulus": _c2j(c.modulus),
            }
            for c in rep.cusps
        ],
        "return_path_length": rep.return_path_length,
        "homology_rank": rep.homology_rank,
        "heegaard_genus": rep.heegaard_genus,
        "abc": None if rep.abc is None else list(rep.abc),
    }


def report_to_json(rep: StructureReport) -> str:
    return _dumps(report_to_dict(rep))


def _j2c(v) -> Optional[complex]:
    return None if v is None else complex(v[0], v[1])


def report_from_dict(doc: dict) -> StructureReport:
    if doc.get("schema") != SCHEMA:
        raise DomainError("unknown schema %r" % doc.get("schema"))
    cusps = [
        CuspReport(
            u=_j2c(c["u"]),
            v=_j2c(c["v"]),
            coefficients=None if c["coefficients"] == "inf" else tuple(c["coefficients"]),
            complex_length=_j2c(c["complex_length"]),
            modulus=_j2c(c["modulus"]),
        )
        for c in doc["cusps"]
    ]
    return StructureReport(
        g=doc["signature"]["g"],
        k=doc["signature"]["k"],
        filling=tuple(None if f == "inf" else (f[0], f[1]) for f in doc["filling"]),
        coords=list(doc["coords"]),
        residual_max=doc["residual_max"],
        cusps=cusps,
        return_path_length=doc["return_path_length"],
        homology_rank=doc["homology_rank"],
        heegaard_genus=doc["heegaard_genus"],
        abc=None if doc["abc"] is None else tuple(doc["abc"]),
    )


def report_from_json(text: str) -> StructureReport:
    return report_from_dict(json.loads(text))
