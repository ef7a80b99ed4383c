"""Exact serialization of rationals and report objects.

Rationals always serialize as ``"p/q"`` strings (``"40/1"`` included).
Decimal renderings are a presentation extra and are labelled approximate
wherever they appear.
"""

from __future__ import annotations

import dataclasses
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction


def exact(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def approx(x, digits: int) -> str:
    """Round ``x`` to ``digits`` decimal places, half-to-even."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = len(str(abs(x.numerator))) + len(str(x.denominator)) + digits + 10
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits), rounding=ROUND_HALF_EVEN))


def jsonable(obj):
    """Convert dataclasses, Fractions, tuples and dicts into JSON-ready values."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return exact(obj)
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if hasattr(obj, "_asdict"):
        return {k: jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def tree(obj):
    """Like :func:`jsonable` but keeps Fractions, so renderers can still approximate them."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: tree(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if hasattr(obj, "_asdict"):
        return {k: tree(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {k: tree(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [tree(v) for v in obj]
    return obj


def cell(value) -> str:
    """Single CSV/human cell; ``None`` renders as an empty string."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return exact(value)
    if isinstance(value, (list, tuple)):
        return " ".join(cell(v) for v in value)
    return str(value)
