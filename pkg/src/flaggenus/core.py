"""Parameter validation, Euclidean decompositions and the truncated binomial.

All quantities are Python ints; rational results elsewhere in the package
are :class:`fractions.Fraction`.  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

from flaggenus.errors import FormulaMismatchError, RangeError, ValidationError


def validate_st(s: int, t: int) -> None:
    for name, value in (("s", s), ("t", t)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValidationError(f"{name} must be an integer, got {value!r}")
    if t < 3:
        raise ValidationError(f"t>=3 violated (t={t})")
    if s < 3:
        raise ValidationError(f"s>=3 violated (s={s})")


def validate_d(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool):
        raise ValidationError(f"d must be an integer, got {d!r}")
    if d < 1:
        raise ValidationError(f"d>=1 violated (d={d})")


def validate_epsilon(s: int, epsilon: int) -> None:
    if not isinstance(epsilon, int) or not 0 <= epsilon < s:
        raise ValidationError(f"0<=epsilon<s violated (epsilon={epsilon}, s={s})")


@dataclass(frozen=True)
class FlagParams:
    """The triple (d, s, t): curve degree, surface-degree floor, hypersurface-degree floor."""

    d: int
    s: int
    t: int

    def __post_init__(self):
        validate_d(self.d)
        validate_st(self.s, self.t)


@dataclass(frozen=True)
class Decomposition:
    alpha: int
    beta: int
    m: int
    epsilon: int
    tau: int
    alpha_p: int
    beta_p: int
    x: int
    w: int
    w1: int
    nu: int


def st_split(s: int, t: int) -> tuple[int, int]:
    """Return ``(alpha, beta)`` with ``s - 1 = alpha*t + beta``, ``0 <= beta < t``."""
    return divmod(s - 1, t)


def find_x(alpha: int, beta: int, t: int) -> int:
    """The unique ``0 <= x <= t-1`` with ``t-(x+1)(alpha+1) <= beta < t-x(alpha+1)``.

    Found by scanning, so uniqueness is checked rather than assumed.
    """
    hits = [x for x in range(t) if t - (x + 1) * (alpha + 1) <= beta < t - x * (alpha + 1)]
    if len(hits) != 1:
        raise FormulaMismatchError(
            f"expected exactly one x, found {hits}", alpha=alpha, beta=beta, t=t
        )
    return hits[0]


def decompose(p: FlagParams) -> Decomposition:
    d, s, t = p.d, p.s, p.t
    alpha, beta = st_split(s, t)
    m, epsilon = divmod(d - 1, s)
    tau = alpha + 1
    alpha_p, beta_p = divmod(s - 1, tau)
    x = find_x(alpha, beta, t)
    if alpha_p != t - 1 - x or beta_p != beta - (t - (x + 1) * (alpha + 1)):
        raise FormulaMismatchError(
            "tau-division disagrees with the x-based formulas",
            s=s, t=t, alpha_p=alpha_p, beta_p=beta_p, x=x,
        )
    w, w1 = divmod(s - 1, 2)
    nu = s - (t * t - 2 * t + 3)
    return Decomposition(
        alpha=alpha, beta=beta, m=m, epsilon=epsilon, tau=tau,
        alpha_p=alpha_p, beta_p=beta_p, x=x, w=w, w1=w1, nu=nu,
    )


def restricted_binomial(a: int, b: int) -> int:
    """``binom(a, b)`` for ``b`` in {0, 1, 2}, taken to be 0 whenever ``a < b``."""
    if b not in (0, 1, 2):
        raise ValueError(f"restricted_binomial only supports b in {{0,1,2}}, got {b}")
    if a < b:
        return 0
    if b == 0:
        return 1
    if b == 1:
        return a
    return a * (a - 1) // 2


def in_p_band(s: int, t: int) -> bool:
    """True when ``t^2-2t+3 <= s <= t^2-t``, the range of the extremal-curve formulas."""
    return t * t - 2 * t + 3 <= s <= t * t - t


def require_band(s: int, t: int) -> None:
    validate_st(s, t)
    if not in_p_band(s, t):
        raise RangeError(
            f"t^2-2t+3<=s<=t^2-t violated (s={s}, t={t}; band is "
            f"[{t * t - 2 * t + 3}, {t * t - t}])"
        )
