"""JSON encodings for circuits, matrices, weights, flags, and cell summaries.

Rationals travel as strings ``"p/q"`` in lowest terms (``"p"`` when q = 1).
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InputError
from .initial import Flag
from .om import OrientedMatroid, SignedSet


def frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise InputError(f"rationals must be integers or 'p/q' strings, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {x!r}") from exc


def _require(data, *keys):
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    for k in keys:
        if k not in data:
            raise InputError(f"missing key {k!r}")


def circuits_to_json(M):
    return {
        "n": M.n,
        "circuits": [{"pos": sorted(c.pos), "neg": sorted(c.neg)} for c in M.circuits],
    }


def signed_sets_from_json(data):
    """The literal list of signed sets in a circuit file (no canonicalization)."""
    _require(data, "n", "circuits")
    n = data["n"]
    if not isinstance(n, int) or n < 0:
        raise InputError("'n' must be a non-negative integer")
    out = []
    for item in data["circuits"]:
        _require(item, "pos", "neg")
        if any(not isinstance(e, int) or not 1 <= e <= n for e in item["pos"] + item["neg"]):
            raise InputError(f"circuit {item} leaves the ground set [1..{n}]")
        out.append(SignedSet.from_parts(n, item["pos"], item["neg"]))
    return n, out


def circuits_from_json(data):
    n, sets = signed_sets_from_json(data)
    return OrientedMatroid(n, sets)


def matrix_from_json(data):
    _require(data, "n", "rows")
    n = data["n"]
    rows = [[parse_rational(x) for x in row] for row in data["rows"]]
    for row in rows:
        if len(row) != n:
            raise InputError(f"matrix row has {len(row)} entries, expected {n}")
    return rows, n


def matrix_to_json(rows, n):
    return {"n": n, "rows": [[frac_str(x) for x in row] for row in rows]}


def weight_from_json(data):
    _require(data, "w")
    return tuple(parse_rational(x) for x in data["w"])


def weight_to_json(w):
    return {"w": [frac_str(x) for x in w]}


def flag_from_json(data, n):
    _require(data, "chain")
    return Flag(n, tuple(frozenset(F) for F in data["chain"]))


def flag_to_json(flag):
    return {"chain": [sorted(F) for F in flag.chain]}


def summary_to_json(summary):
    out = {
        "f_vector": summary.f_vector,
        "euler_char": summary.euler_char,
        "maximal_cells": len(summary.maximal),
    }
    if summary.coarse_cells is not None:
        out["coarse_cells"] = [
            {
                "mw_circuits": circuits_to_json(c.mw)["circuits"],
                "flags": [flag_to_json(f)["chain"] for f in c.flags],
                "full_dimensional": c.full_dimensional,
            }
            for c in summary.coarse_cells
        ]
        out["full_dimensional_coarse_cells"] = len(summary.full_dimensional_coarse)
    return out


def dumps(obj):
    """Canonical serialization: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
