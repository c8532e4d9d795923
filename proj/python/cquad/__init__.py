"""Exact computations on spaces of complete quadrics.

Rationals are returned as ``fractions.Fraction``. Matrices and divisor
coefficients may be given as ints, Fractions or strings such as ``"3/4"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from . import _cquad

__all__ = [
    "compound",
    "chow_eval",
    "chow_limit",
    "count_degenerations",
    "count_tangencies",
    "bk_number",
    "direct_table_counts",
    "divisor",
    "convert",
    "canonical",
    "is_fano",
    "cone_membership",
    "pair",
    "table_x3",
    "xi",
    "classify",
    "classify_segment",
    "chamber_census",
    "schubert",
    "schubert_pair",
    "grassmannian_degree",
    "run_acceptance",
]


def _rat_out(x: Any) -> Any:
    return Fraction(x) if isinstance(x, str) else x


def _enc(value: Any) -> str:
    def conv(v: Any) -> Any:
        if isinstance(v, dict):
            return {k: conv(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [conv(x) for x in v]
        if isinstance(v, Fraction):
            return str(v)
        return v

    return json.dumps(conv(value))


def _matrix(text: str) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in json.loads(text)]


def _divisor_out(text: str) -> dict:
    d = json.loads(text)
    d["coeffs"] = [Fraction(c) for c in d["coeffs"]]
    return d


def divisor(coeffs: Sequence[Any], basis: str = "H", n: int | None = None) -> dict:
    """Divisor class on X_n given by coefficients in the H, E or mixed basis."""
    return {"n": n if n is not None else len(coeffs), "basis": basis, "coeffs": [str(Fraction(c)) for c in coeffs]}


def compound(form: Sequence[Sequence[Any]], k: int) -> list[list[Fraction]]:
    return _matrix(_cquad.compound(_enc(form), k))


def chow_eval(form: Sequence[Sequence[Any]], k: int, plane: Sequence[Sequence[Any]]) -> Fraction:
    """Value of the k-th compound quadric on the Plucker vector of a (k-1)-plane (basis in columns)."""
    return Fraction(_cquad.chow_eval(_enc(form), k, _enc(plane)))


def chow_limit(q0: Sequence[Sequence[Any]], q1: Sequence[Sequence[Any]], k: int) -> dict:
    out = json.loads(_cquad.chow_limit(_enc(q0), _enc(q1), k))
    out["form"] = [[Fraction(x) for x in row] for row in out["form"]]
    return out


def count_degenerations(q0, q1) -> dict:
    return json.loads(_cquad.count_degenerations(_enc(q0), _enc(q1)))


def count_tangencies(q0, q1, basis) -> dict:
    return json.loads(_cquad.count_tangencies(_enc(q0), _enc(q1), _enc(basis)))


def bk_number(n: int, k: int, seed: int = 1) -> int:
    return _cquad.bk_number(n, k, seed)


def direct_table_counts(seed: int = 1) -> list[dict]:
    return json.loads(_cquad.direct_table_counts(seed))


def convert(d: dict, basis: str) -> dict:
    return _divisor_out(_cquad.convert(_enc(d), basis))


def canonical(n: int, method: str = "nefbasis") -> dict:
    return _divisor_out(_cquad.canonical(n, method))


def is_fano(n: int) -> bool:
    return _cquad.is_fano(n)


def cone_membership(d: dict, cone: str) -> tuple[bool, bool]:
    """(member, interior) for cone in {"nef", "eff", "mov"}."""
    return tuple(_cquad.cone_membership(_enc(d), cone))


def pair(curve: str, d: dict) -> Fraction:
    return Fraction(_cquad.pair(curve, _enc(d)))


def table_x3() -> list[dict]:
    rows = json.loads(_cquad.table_x3())
    for r in rows:
        r["values"] = [Fraction(v) for v in r["values"]]
    return rows


def xi(d: dict) -> dict:
    return _divisor_out(_cquad.xi(_enc(d)))


def _report(text: str) -> dict:
    r = json.loads(text)
    if r.get("certificate"):
        r["certificate"]["pairing"] = _rat_out(r["certificate"]["pairing"])
    return r


def classify(d: dict) -> dict:
    return _report(_cquad.classify(_enc(d)))


def classify_segment(t: Any) -> dict:
    return _report(_cquad.classify_segment(str(Fraction(t))))


def chamber_census(samples: int, seed: int = 1) -> dict:
    return json.loads(_cquad.chamber_census(samples, seed))


def schubert(k: int, n: int, expr: str) -> dict[str, int]:
    """Terms of a Schubert expression on G(k,n), keyed by comma-separated partitions."""
    return {p: int(c) for p, c in json.loads(_cquad.schubert(k, n, expr))["terms"].items()}


def schubert_pair(k: int, n: int, a: str, b: str) -> int:
    return int(_cquad.schubert_pair(k, n, a, b))


def grassmannian_degree(k: int, n: int) -> int:
    return int(_cquad.grassmannian_degree(k, n))


def run_acceptance(seed: int = 1) -> list[dict]:
    return json.loads(_cquad.run_acceptance(seed))
