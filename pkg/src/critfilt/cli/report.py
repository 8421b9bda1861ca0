"""JSON encoding for exact values. Rationals become "num/den" strings."""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from ..exactnum import AlgExt, Poly, RatFunc, Surd
from ..ratmap import RatMap, is_inf

SCHEMA = 1


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def encode(obj):
    """Convert exact objects into JSON-ready values with deterministic ordering."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return rat(obj)
    if isinstance(obj, float):
        return obj
    if is_inf(obj):
        return "oo"
    if isinstance(obj, Surd):
        if obj.b == 0:
            return rat(obj.a)
        return {"a": rat(obj.a), "b": rat(obj.b), "D": obj.D}
    if isinstance(obj, Poly):
        return obj.format("c") if obj.degree >= 0 else "0"
    if isinstance(obj, RatFunc):
        return ratfunc_text(obj)
    if isinstance(obj, (RatMap, AlgExt)):
        return str(obj)
    if isinstance(obj, dict):
        return {key_text(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: encode(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    return str(obj)


def ratfunc_text(r: RatFunc) -> str:
    """A rational function in the expression grammar with integer coefficients."""
    if r.num.is_zero():
        return "0"
    return RatMap(r.num, r.den, allow_constant=True).format(r.symbol)


def key_text(k) -> str:
    v = encode(k)
    if isinstance(v, dict):
        b = v["b"]
        sign = "-" if b.startswith("-") else "+"
        return f"{v['a']}{sign}{b.lstrip('-')}*sqrt({v['D']})"
    return v if isinstance(v, str) else json.dumps(v)


def partition_list(part) -> list[int]:
    return [int(x) for x in part]


def dumps(command: str, inputs: dict, results, passed: bool | None = None, notes: list | None = None) -> str:
    out = {"schema": SCHEMA, "command": command, "inputs": encode(inputs), "results": encode(results)}
    if notes:
        out["notes"] = notes
    if passed is not None:
        out["passed"] = passed
    return json.dumps(out, indent=2)
