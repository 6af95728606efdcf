"""Exact JSON encodings for reports and the parsing of CLI inputs.

Every mathematical value crosses the JSON boundary as a string in exact
form: base rationals as "p/q" (or "p"), extension elements as coefficient
lists "[c0, c1, ...]" in ascending powers of the generator.  Plain JSON
integers are reserved for structural data (dimensions, counts, indices).
Map keys are emitted sorted so identical inputs give byte-identical
reports.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .analysis import CensusReport, PredicateValue, Witness
from .field import FieldContext, FieldElement, make_context
from .linalg import Matrix
from .poly import Polynomial
from .reps import Representation, RepSpec
from .spectral import SpectralReport

__all__ = [
    "encode_rational",
    "parse_rational",
    "encode_element",
    "parse_element",
    "encode_poly",
    "encode_matrix",
    "encode_context",
    "parse_modulus",
    "context_from_spec",
    "encode_spec",
    "encode_rep",
    "encode_predicate",
    "encode_witness",
    "encode_spectral",
    "encode_census",
    "canonical_dumps",
]


def encode_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    return Fraction(num, den)


def encode_element(e: FieldElement) -> str:
    if e.is_rational():
        return encode_rational(e.rational_value())
    return "[" + ", ".join(encode_rational(c) for c in e.coeffs) + "]"


def parse_element(ctx: FieldContext, obj) -> FieldElement:
    """Accepts "p/q", an int, "[c0, c1, ...]" or a JSON list of coefficients."""
    if isinstance(obj, str) and obj.strip().startswith("["):
        inner = obj.strip()[1:-1].strip()
        parts = [p for p in inner.split(",") if p.strip()] if inner else []
        coeffs = [parse_rational(p) for p in parts]
        return ctx.element(coeffs)
    if isinstance(obj, (list, tuple)):
        return ctx.element([parse_rational(c) for c in obj])
    return ctx.from_rational(parse_rational(obj))


def encode_poly(p: Polynomial) -> list[str]:
    return [encode_element(c) for c in p.coeffs]


def encode_matrix(m: Matrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [encode_element(e) for e in m.entries],
    }


def encode_context(ctx: FieldContext) -> dict:
    return {"modulus": [encode_rational(c) for c in ctx.modulus]}


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+(?:\s*/\s*\d+)?)\s*\*?\s*)?"
    r"(?P<var>t(?:\s*\^\s*(?P<exp>\d+))?)?"
)


def parse_modulus(spec) -> tuple[Fraction, ...]:
    """Modulus from "t^2-24"-style text or a JSON coefficient list (ascending)."""
    if isinstance(spec, (list, tuple)):
        return tuple(parse_rational(c) for c in spec)
    text = str(spec).strip()
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"cannot parse modulus near {text[pos:]!r}")
        if m.group("sign") is None and not first:
            raise ValueError(f"missing +/- before {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = (
            parse_rational(m.group("coeff").replace(" ", ""))
            if m.group("coeff")
            else Fraction(1)
        )
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
        pos = m.end()
        first = False
    degree = max(coeffs)
    return tuple(coeffs.get(k, Fraction(0)) for k in range(degree + 1))


def context_from_spec(spec) -> FieldContext:
    """Field context from a modulus expression, coefficient list, or None (Q)."""
    if spec is None:
        return make_context((Fraction(0), Fraction(1)))
    return make_context(parse_modulus(spec))


def encode_spec(spec: RepSpec) -> dict:
    out = {
        "dim": spec.dim,
        "X": [encode_element(v) for v in spec.params.values],
    }
    if spec.h is not None:
        out["h"] = encode_element(spec.h)
    if spec.f is not None:
        out["f"] = encode_element(spec.f)
    if spec.variant is not None:
        out["variant"] = spec.variant
    if spec.subset is not None:
        out["subset"] = list(spec.subset)
    return out


def encode_rep(rep: Representation) -> dict:
    return {
        "spec": encode_spec(rep.spec),
        "g1": encode_matrix(rep.g1),
        "g2": encode_matrix(rep.g2),
        "multiplicities": list(rep.multiplicities),
    }


def encode_predicate(p: PredicateValue) -> dict:
    out = {
        "name": p.name,
        "family": p.family,
        "indices": list(p.indices),
        "value": encode_element(p.value),
        "zero": p.is_zero,
        "quantified": p.quantified,
    }
    if p.subset is not None:
        out["subset"] = list(p.subset)
    if p.affects_variant is not None:
        out["affects_variant"] = p.affects_variant
    return out


def encode_witness(w: Witness | None) -> dict | None:
    if w is None:
        return None
    out = {"Y": list(w.index_set), "complement_found": w.complement_found}
    if w.extra_line is not None:
        out["line"] = [encode_element(c) for c in w.extra_line]
    return out


def encode_spectral(r: SpectralReport) -> dict:
    out = {
        "C_rho": encode_element(r.C_rho),
        "C_expected": encode_element(r.C_expected),
        "trA": encode_element(r.trA),
        "trA_expected": encode_element(r.trA_expected),
        "trA2": encode_element(r.trA2),
        "trA2_expected": encode_element(r.trA2_expected),
        "trB": encode_element(r.trB),
        "trB_expected": encode_element(r.trB_expected),
        "all_ok": r.all_ok,
        "checks": {name: ok for name, ok in r.checks},
    }
    if r.charpoly_A is not None:
        out["charpoly_A"] = encode_poly(r.charpoly_A)
        out["charpoly_A_expected"] = encode_poly(r.charpoly_A_expected)
        out["charpoly_B"] = encode_poly(r.charpoly_B)
        out["charpoly_B_expected"] = encode_poly(r.charpoly_B_expected)
        out["det_constraint_ok"] = r.det_constraint_ok
    return out


def encode_census(r: CensusReport) -> dict:
    return {
        "mode": r.mode,
        "algebra_dim": r.algebra_dim,
        "sum_of_squares": r.sum_of_squares,
        "semisimple_verdict": r.semisimple_verdict,
        "failing": [encode_predicate(p) for p in r.failing_predicates],
        "entries": [
            {
                "spec": encode_spec(e.spec),
                "probe": [encode_element(v) for v in e.probe],
                "class_id": e.class_id,
            }
            for e in r.entries
        ],
        "deferred": [
            {
                "subset": list(d.subset),
                "dim": d.dim,
                "root_order": d.root_order,
                "radicand": encode_element(d.radicand),
                "count": d.count,
                "suggested_modulus": encode_poly(d.suggested_modulus),
            }
            for d in r.deferred
        ],
    }


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
