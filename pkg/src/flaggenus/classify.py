"""Which genus bound applies to a triple (d, s, t) with s <= t^2 - t."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

from flaggenus.bounds import ci_genus, genus_bound_G
from flaggenus.core import in_p_band, st_split, validate_d, validate_st
from flaggenus.errors import PreconditionError, RangeError

STRICT_G = "StrictG"
G_PLUS_SLACK = "GPlusSlack"


@dataclass(frozen=True)
class CaseLabel:
    theorem1_case: str
    d0: int
    d0_row: int
    d_above_threshold: bool
    bound_value: Fraction
    strict: bool
    slack: int
    theorem2_applicable: bool
    theorem2_band: int


def threshold_d0(s: int, t: int) -> tuple[int, int]:
    """Return ``(d0, row)``; rows are tried in listed order, first match wins."""
    alpha, beta = st_split(s, t)
    if s <= 2 * t - 3:
        return 32 * t**4, 1
    if beta < t - alpha - 2:
        return 8 * s * t**4, 2
    return max(12 * (s + 1) ** 2, s**3), 3


def epsilon_window(s: int, t: int, epsilon: int) -> bool:
    """The epsilon condition under which ``G(d, s, tau) = G(d, s, t)``.

    ``s-eps-1 < gap`` or ``beta*gap <= s-eps-1 < (beta+1)*gap`` with
    ``gap = alpha + beta + 2 - t``.
    """
    alpha, beta = st_split(s, t)
    gap = alpha + beta + 2 - t
    r = s - epsilon - 1
    return r < gap or beta * gap <= r < (beta + 1) * gap


def is_strict_case(s: int, t: int, epsilon: int) -> bool:
    alpha, beta = st_split(s, t)
    if s <= 2 * t - 3:
        return True
    if beta < t - alpha - 2:
        return True
    return beta > t - alpha - 2 and epsilon_window(s, t, epsilon)


def classify(d: int, s: int, t: int) -> CaseLabel:
    validate_d(d)
    validate_st(s, t)
    if s > t * t - t:
        raise RangeError(
            f"s<=t^2-t violated (s={s}, t={t}); that regime is covered by "
            "the classical bound for s > t^2-t and is not handled here"
        )
    epsilon = (d - 1) % s
    d0, row = threshold_d0(s, t)
    G = genus_bound_G(d, s, t)
    strict_g = is_strict_case(s, t, epsilon)
    slack = 0 if strict_g else 4 * t**3
    return CaseLabel(
        theorem1_case=STRICT_G if strict_g else G_PLUS_SLACK,
        d0=d0,
        d0_row=row,
        d_above_threshold=d > d0,
        bound_value=G + slack,
        # both alternatives are strict inequalities g < bound
        strict=True,
        slack=slack,
        theorem2_applicable=in_p_band(s, t) and d > s**4,
        theorem2_band=2 * t**3 + s**3,
    )


class Theorem2Estimate(NamedTuple):
    center: Fraction
    band: int
    sharp: Optional[int]


def theorem2_estimate(d: int, s: int, t: int) -> Theorem2Estimate:
    """Maximal genus in the extremal band: ``G - (d/s)(beta-1)`` up to ``2t^3 + s^3``.

    ``sharp`` is the exact maximum (the complete-intersection genus) when
    ``s`` divides ``d``, else ``None``.
    """
    validate_d(d)
    validate_st(s, t)
    if not in_p_band(s, t):
        raise RangeError(
            f"t^2-2t+3<=s<=t^2-t violated (s={s}, t={t})"
        )
    if d <= s**4:
        raise PreconditionError(f"d>s^4 violated (d={d}, s^4={s**4})")
    _, beta = st_split(s, t)
    center = genus_bound_G(d, s, t) - Fraction(d, s) * (beta - 1)
    sharp = ci_genus(d, s, t) if d % s == 0 else None
    return Theorem2Estimate(center, 2 * t**3 + s**3, sharp)
