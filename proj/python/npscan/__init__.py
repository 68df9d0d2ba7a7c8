"""Newton polygons of exponential sums across primes.

Thin wrappers over the compiled ``_core`` module that trade the string
encoding of rationals for :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import _core
from ._core import NpscanError

Number = Union[int, Fraction, str]
Polygon = list[tuple[Fraction, Fraction]]

__all__ = [
    "NpscanError",
    "parse_polynomial",
    "np_at_prime",
    "hodge_polygon",
    "vertical_gap",
    "lies_above",
    "lower_hull",
    "l_polynomial",
    "p1_polynomial",
    "dickson",
    "recognize_dickson",
    "is_admissible",
    "gpp_over_q",
    "decompose",
    "scan",
    "crosscheck",
]


def _enc(x: Number) -> str:
    return str(Fraction(x))


def _coeffs(f: Union[str, Sequence[Number]]) -> list[str]:
    if isinstance(f, str):
        return _core.parse_polynomial(f)
    return [_enc(c) for c in f]


def _fracs(cs: Iterable[str]) -> list[Fraction]:
    return [Fraction(c) for c in cs]


def _poly(vs) -> Polygon:
    return [(Fraction(x), Fraction(y)) for x, y in vs]


def _unpoly(p: Polygon) -> list[tuple[str, str]]:
    return [(_enc(x), _enc(y)) for x, y in p]


def parse_polynomial(text: str) -> list[Fraction]:
    """Coefficients, constant term first."""
    return _fracs(_core.parse_polynomial(text))


def np_at_prime(f, p: int, c: int = 1, budget: int = 10**8) -> Polygon:
    return _poly(_core.np_at_prime(_coeffs(f), p, c, budget))


def hodge_polygon(d: int) -> Polygon:
    return _poly(_core.hodge_polygon(d))


def vertical_gap(upper: Polygon, lower: Polygon) -> Fraction:
    return Fraction(_core.vertical_gap(_unpoly(upper), _unpoly(lower)))


def lies_above(upper: Polygon, lower: Polygon) -> bool:
    return _core.lies_above(_unpoly(upper), _unpoly(lower))


def lower_hull(points: Iterable[tuple[Number, Number]]) -> Polygon:
    return _poly(_core.lower_hull([(_enc(x), _enc(y)) for x, y in points]))


def l_polynomial(residues: Sequence[int], p: int, c: int = 1, degree: int = 1) -> list[list[int]]:
    """Coefficients of L(f, chi_c, t) in the basis 1, zeta, ..., zeta^(p-2)."""
    return [[int(x) for x in a] for a in _core.l_polynomial(list(residues), p, c, degree)]


def p1_polynomial(residues: Sequence[int], p: int, degree: int = 1) -> list[int]:
    return [int(x) for x in _core.p1_polynomial(list(residues), p, degree)]


def dickson(n: int, a: Number) -> list[Fraction]:
    return _fracs(_core.dickson(n, _enc(a)))


def recognize_dickson(u) -> Optional[dict]:
    form = _core.recognize_dickson(_coeffs(u))
    if form is None:
        return None
    return {k: (v if k == "n" else Fraction(v)) for k, v in form.items()}


def is_admissible(p: int, a: Number, n: int) -> bool:
    return _core.is_admissible(p, _enc(a), n)


def gpp_over_q(n: int, a: Number) -> bool:
    return _core.gpp_over_q(n, _enc(a))


def decompose(f) -> list[tuple[str, list[Fraction]]]:
    return [(kind, _fracs(cs)) for kind, cs in _core.decompose(_coeffs(f))]


def scan(f, p_max: int = 100, jobs: int = 1, c: int = 1, budget: int = 10**8):
    """Returns (records, summary, violations); records and summary are plain dicts."""
    rows, summary, violations = _core.scan(_coeffs(f), p_max, jobs, c, budget)
    return [json.loads(r) for r in rows], json.loads(summary), list(violations)


def crosscheck(f, p: int) -> list[tuple[str, str, str]]:
    return list(_core.crosscheck(_coeffs(f), p))
