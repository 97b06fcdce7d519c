"""JSON documents and human-readable renderings of relation vectors."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .qseries import GradedQSeries
from .relations import RelationSpec, RelationVector

__all__ = [
    "rational_to_str",
    "rational_from_str",
    "vector_to_document",
    "vector_from_document",
    "dumps_document",
    "render_relation",
    "residual_summary",
]


def rational_to_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ValueError(f"rationals are serialized as strings 'p/q', got {text!r}")
    return Fraction(text)


def vector_to_document(vec: RelationVector) -> dict[str, Any]:
    source = None
    if vec.source is not None:
        source = {"r": vec.source.r, "s": vec.source.s, "t": vec.source.t}
    return {
        "weight": vec.weight,
        "g_coeff": rational_to_str(vec.g_coeff),
        "p_coeffs": [
            {"i": i, "j": j, "c": rational_to_str(c)} for (i, j), c in vec.p_coeffs.items()
        ],
        "source": source,
    }


def vector_from_document(doc: dict[str, Any]) -> RelationVector:
    try:
        weight = int(doc["weight"])
        g = rational_from_str(doc["g_coeff"])
        p = {}
        for entry in doc["p_coeffs"]:
            key = (int(entry["i"]), int(entry["j"]))
            p[key] = p.get(key, Fraction(0)) + rational_from_str(entry["c"])
        src = doc.get("source")
        spec = RelationSpec(int(src["r"]), int(src["s"]), int(src["t"])) if src else None
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed relation document: {exc!r}") from exc
    return RelationVector(weight, g, p, spec)


def dumps_document(doc: Any) -> str:
    return json.dumps(doc, ensure_ascii=False) + "\n"


def _g(weight: int, latex: bool) -> str:
    if latex and weight >= 10:
        return f"G_{{{weight}}}"
    return f"G_{weight}"


def _product(i: int, j: int, latex: bool) -> str:
    if i == 2:
        # quasimodular correction present, not a plain product
        return f"P_{{{i},{j}}}"
    if i == j:
        return f"{_g(i, latex)}^2"
    sep = "" if latex else " "
    return f"{_g(i, latex)}{sep}{_g(j, latex)}"


def _coeff(c: Fraction, latex: bool) -> str:
    if c == 1:
        return ""
    if c.denominator == 1:
        return f"{c.numerator}" if latex else f"{c.numerator} "
    if latex:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"({c}) "


def render_relation(vec: RelationVector, style: str = "text", normalize: bool = True) -> str:
    """Render g G_k = sum p P_{i,j}, by default after integer normalization.

    ``style`` is "text" or "latex". P_{2,j} is printed as P since it carries
    a derivative term.
    """
    latex = style == "latex"
    if style not in ("text", "latex"):
        raise ValueError(f"unknown style {style!r}")
    if normalize:
        vec = vec.integer_normalized()
    g = vec.g_coeff
    if g == 0:
        lhs = "0"
    else:
        lhs = ("-" if g < 0 else "") + _coeff(abs(g), latex) + _g(vec.weight, latex)
    parts = []
    for n, ((i, j), c) in enumerate(vec.p_coeffs.items()):
        sign = "-" if c < 0 else "+"
        body = _coeff(abs(c), latex) + _product(i, j, latex)
        if n == 0:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    rhs = "".join(parts) or "0"
    return f"{lhs} = {rhs}"


def residual_summary(residual: GradedQSeries) -> dict[str, Any]:
    """Where a residual fails to vanish: per grade, the first nonzero q-power and its coefficient."""
    grades = []
    for grade, series in residual.components.items():
        nz = [n for n, c in enumerate(series) if c]
        grades.append(
            {
                "grade": grade,
                "nonzero_count": len(nz),
                "first_index": nz[0],
                "first_value": rational_to_str(series[nz[0]]),
            }
        )
    return {"precision": residual.precision, "zero": residual.is_zero(), "grades": grades}
