"""Closed-form genus bounds and their constant terms.

Notation follows the usual Castelnuovo-Halphen conventions:

* ``s - 1 = alpha*t + beta`` and ``d - 1 = m*s + epsilon``;
* ``tau = alpha + 1`` and ``s - 1 = alpha'*tau + beta'``;
* ``s - 1 = 2w + w1`` and ``pi = w(w - 1 + w1)``.

``H``, ``rho`` and ``A`` are also evaluated at the reduced degree ``tau``,
which can be as small as 1, so those functions accept any ``t >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from flaggenus.core import (
    in_p_band,
    require_band,
    restricted_binomial,
    st_split,
    validate_d,
    validate_epsilon,
    validate_st,
)
from flaggenus.errors import (
    DomainAuditError,
    FormulaMismatchError,
    PreconditionError,
    ValidationError,
)

HIGH_EPSILON = "HighEpsilon"
LOW_EPSILON = "LowEpsilon"
SMALL_EPSILON = "SmallEpsilon"
LARGE_EPSILON = "LargeEpsilon"


def _validate_s_general_t(s: int, t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise ValidationError(f"t>=1 violated (t={t})")
    if not isinstance(s, int) or s < 3:
        raise ValidationError(f"s>=3 violated (s={s})")


@dataclass(frozen=True)
class RhoCaseData:
    case_tag: str
    u: int
    v: int


@dataclass(frozen=True)
class RCaseData:
    case_tag: str
    k: int
    delta: int
    pi: int


def halphen_H(s: int, t: int) -> Fraction:
    """Halphen's number ``H(s, t)``.

    Evaluated from the defining expression and from the integer form of
    ``2H`` in terms of ``alpha, beta``; the two must agree.
    """
    _validate_s_general_t(s, t)
    alpha, beta = st_split(s, t)
    value = (
        Fraction(s * s, 2 * t)
        + Fraction(s * (t - 4), 2)
        - Fraction((t - 1 - beta) * (1 + beta) * (t - 1), 2 * t)
        + 1
    )
    twice = (
        alpha * t * t
        + (alpha * alpha - 4 * alpha) * t
        + beta * beta
        + 2 * alpha
        + (2 * alpha - 1) * beta
    )
    if 2 * value != twice:
        raise FormulaMismatchError("H disagrees with its 2H form", s=s, t=t)
    return value


def rho(s: int, t: int, epsilon: int) -> tuple[Fraction, RhoCaseData]:
    """Constant term ``rho(s, t, epsilon)`` of ``G(d, s, t)``, with its branch data.

    The high-epsilon branch uses the factor ``(t - beta - 3)``; the
    ``(alpha - beta - 6)`` found in older printings is a misprint.
    """
    _validate_s_general_t(s, t)
    validate_epsilon(s, epsilon)
    alpha, beta = st_split(s, t)
    gap = alpha + beta + 2 - t
    lead = Fraction(s - 1 - epsilon, s) * halphen_H(s, t) + Fraction(
        (1 + epsilon) * (s - epsilon + 1), 2 * s
    )
    if epsilon >= s - (beta + 1) * gap:
        if gap <= 0:
            # unreachable: gap <= 0 forces s - (beta+1)*gap >= s > epsilon
            raise DomainAuditError(
                "high-epsilon branch selected with non-positive divisor",
                s=s, t=t, epsilon=epsilon, divisor=gap,
            )
        u, v = divmod(s - epsilon - 1, gap)
        value = (
            lead
            + restricted_binomial(u + v + 1, 2)
            - Fraction((alpha + beta) * (2 * v + u * alpha + u * beta - u * u), 2)
            + Fraction(u * (t - 1) * (t - beta - 3), 2)
            - 1
        )
        return value, RhoCaseData(HIGH_EPSILON, u, v)
    u, v = divmod(epsilon, alpha + beta + 1)
    value = (
        lead
        - Fraction((alpha + beta) * (t - u - 1) * (alpha + t + u - 3), 2)
        + Fraction(beta * (t - 1) * (2 * alpha - 6), 2)
        - 1
    )
    return value, RhoCaseData(LOW_EPSILON, u, v)


def rho_value(s: int, t: int, epsilon: int) -> Fraction:
    return rho(s, t, epsilon)[0]


def duke_pi(s: int) -> int:
    w, w1 = divmod(s - 1, 2)
    return w * (w - 1 + w1)


def R_const(s: int, epsilon: int) -> tuple[Fraction, RCaseData]:
    """Constant term ``R(s, epsilon)`` of the bound for curves off surfaces of degree < s."""
    if not isinstance(s, int) or s < 3:
        raise ValidationError(f"s>=3 violated (s={s})")
    validate_epsilon(s, epsilon)
    w, w1 = divmod(s - 1, 2)
    pi = w * (w - 1 + w1)
    if epsilon < (3 - w1) * w:
        k, delta = divmod(epsilon, w)
        tag = SMALL_EPSILON
    else:
        k, delta = divmod(epsilon + 2 - w1, w + 1)
        tag = LARGE_EPSILON
    value = (
        Fraction((1 + epsilon) * (s + 1 - epsilon - 2 * pi), 2 * s)
        + w * (epsilon - delta)
        - k * restricted_binomial(w + 1, 2)
        + restricted_binomial(delta, 2)
    )
    return value, RCaseData(tag, k, delta, pi)


def coeff_A(s: int, t: int) -> Fraction:
    """Coefficient of ``d/2`` in ``G(d, s, t)``."""
    _validate_s_general_t(s, t)
    _, beta = st_split(s, t)
    return (
        Fraction(s, t)
        + t
        - 5
        - Fraction((t - 1 - beta) * (1 + beta) * (t - 1), s * t)
    )


def coeff_A_tau(s: int, t: int) -> Fraction:
    """Coefficient of ``d/2`` in ``G(d, s, tau)``, ``tau = alpha + 1``."""
    validate_st(s, t)
    alpha, _ = st_split(s, t)
    return coeff_A(s, alpha + 1)


def coeff_A_duke(s: int) -> Fraction:
    """Coefficient of ``d/2`` in the bound for curves off surfaces of degree < s."""
    if not isinstance(s, int) or s < 3:
        raise ValidationError(f"s>=3 violated (s={s})")
    return Fraction(2 * duke_pi(s) - 2, s) - 1


def _G(d: int, s: int, t: int) -> Fraction:
    epsilon = (d - 1) % s
    r = rho_value(s, t, epsilon)
    value = Fraction(d * d, 2 * s) + Fraction(d, 2) * coeff_A(s, t) + r + 1
    via_H = Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * halphen_H(s, t) - 2 - s) + r + 1
    if value != via_H:
        raise FormulaMismatchError("G disagrees with its H-form", d=d, s=s, t=t)
    return value


def genus_bound_G(d: int, s: int, t: int) -> Fraction:
    """``G(d, s, t)``.

    Checked against the reassembly through ``H`` and, in the extremal band
    ``t^2-2t+3 <= s <= t^2-t``, through ``P``.
    """
    validate_d(d)
    validate_st(s, t)
    value = _G(d, s, t)
    if in_p_band(s, t):
        _, beta = st_split(s, t)
        epsilon = (d - 1) % s
        via_P = (
            Fraction(d * d, 2 * s)
            + Fraction(d, 2 * s) * (2 * extremal_space_genus_P(s, t) - 2 - s)
            + Fraction(d, s) * (beta - 1)
            + rho_value(s, t, epsilon)
            + 1
        )
        if value != via_P:
            raise FormulaMismatchError("G disagrees with its P-form", d=d, s=s, t=t)
    return value


def genus_bound_G_tau(d: int, s: int, t: int) -> Fraction:
    """``G(d, s, tau)``: the same bound taken at ``tau = alpha + 1``."""
    validate_d(d)
    validate_st(s, t)
    alpha, _ = st_split(s, t)
    return _G(d, s, alpha + 1)


def genus_bound_duke(d: int, s: int) -> Fraction:
    validate_d(d)
    if not isinstance(s, int) or s < 3:
        raise ValidationError(f"s>=3 violated (s={s})")
    epsilon = (d - 1) % s
    return (
        Fraction(d * d, 2 * s)
        + Fraction(d, 2) * (Fraction(2 * duke_pi(s) - 2, s) - 1)
        + R_const(s, epsilon)[0]
    )


def extremal_space_genus_P(s: int, t: int) -> int:
    """Maximal genus ``P(s, t)`` of a space curve of degree s off surfaces of degree < t."""
    require_band(s, t)
    _, beta = st_split(s, t)
    twice = 2 * t**3 - 10 * t * t + 2 * (beta + 7) * t + beta * beta - 7 * beta - 2
    if twice % 2:
        raise FormulaMismatchError("P is not an integer", s=s, t=t)
    return twice // 2


def ci_genus(d: int, s: int, t: int) -> int:
    """Arithmetic genus of a complete intersection of the extremal surface with a hypersurface."""
    validate_d(d)
    require_band(s, t)
    if d % s:
        raise PreconditionError(f"d divisible by s violated (d={d}, s={s})")
    P = extremal_space_genus_P(s, t)
    value = Fraction(d * d, 2 * s) + Fraction(d, 2 * s) * (2 * P - 2 - s) + 1
    _, beta = st_split(s, t)
    if value != genus_bound_G(d, s, t) - Fraction(d, s) * (beta - 1):
        raise FormulaMismatchError("CI genus disagrees with G - (d/s)(beta-1)", d=d, s=s, t=t)
    if value.denominator != 1:
        raise FormulaMismatchError("CI genus is not an integer", d=d, s=s, t=t)
    return int(value)


def speciality_bounds(d: int, s: int, t: int) -> tuple[Fraction, Optional[Fraction]]:
    """Return ``(e1, e2)``; ``e2`` is ``None`` unless ``s`` divides ``d``."""
    validate_d(d)
    validate_st(s, t)
    e1 = Fraction(d, s) + Fraction(s, t) + t - 5
    e2 = Fraction(d, s) + 2 * t - 7 if d % s == 0 else None
    return e1, e2


@dataclass(frozen=True)
class BoundReport:
    d: int
    s: int
    t: int
    G: Fraction
    G_tau: Fraction
    G_duke: Fraction
    H: Fraction
    H_tau: Fraction
    P: Optional[int]
    rho: Fraction
    rho_p: Fraction
    R: Fraction
    A: Fraction
    A_p: Fraction
    A_pp: Fraction
    rho_case: RhoCaseData
    rho_p_case: RhoCaseData
    R_case: RCaseData


def bound_report(d: int, s: int, t: int) -> BoundReport:
    validate_d(d)
    validate_st(s, t)
    alpha, _ = st_split(s, t)
    tau = alpha + 1
    epsilon = (d - 1) % s
    r, r_case = rho(s, t, epsilon)
    rp, rp_case = rho(s, tau, epsilon)
    big_r, big_r_case = R_const(s, epsilon)
    return BoundReport(
        d=d, s=s, t=t,
        G=genus_bound_G(d, s, t),
        G_tau=genus_bound_G_tau(d, s, t),
        G_duke=genus_bound_duke(d, s),
        H=halphen_H(s, t),
        H_tau=halphen_H(s, tau),
        P=extremal_space_genus_P(s, t) if in_p_band(s, t) else None,
        rho=r,
        rho_p=rp,
        R=big_r,
        A=coeff_A(s, t),
        A_p=coeff_A(s, tau),
        A_pp=coeff_A_duke(s),
        rho_case=r_case,
        rho_p_case=rp_case,
        R_case=big_r_case,
    )
