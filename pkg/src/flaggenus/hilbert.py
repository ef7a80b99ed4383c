"""Hilbert functions of extremal space curves and of their complete intersections.

For ``t^2-2t+3 <= s <= t^2-t`` the general plane section of an extremal
space curve of degree ``s`` has a fixed caractère numérique, and every
quantity below is read off from it.  ``h`` is the Hilbert function of that
plane section; ``h_sigma`` is its running sum, which is the Hilbert function
of the (a.C.M.) space curve itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from flaggenus.bounds import extremal_space_genus_P
from flaggenus.core import require_band, restricted_binomial, validate_d
from flaggenus.errors import FormulaMismatchError, PreconditionError


@dataclass(frozen=True)
class HilbertProfile:
    s: int
    t: int
    nu: int
    caractere: tuple[int, ...]
    stabilization_index: int

    def h(self, n: int) -> int:
        return plane_section_h(self.s, self.t, n)

    def h_table(self) -> list[int]:
        """``h(0), ..., h(stabilization_index)``."""
        return [self.h(n) for n in range(self.stabilization_index + 1)]


@lru_cache(maxsize=None)
def caractere(s: int, t: int) -> tuple[int, ...]:
    """The caractère numérique ``(n_0, ..., n_{t-1})``, in index order."""
    require_band(s, t)
    nu = s - (t * t - 2 * t + 3)
    out = []
    for i in range(t):
        if i == t - 1:
            out.append(t)
        elif i <= t - 3 - nu:
            out.append(2 * t - 3 - i)
        else:
            out.append(2 * t - 2 - i)
    return tuple(out)


def _h_from_caractere(chars: tuple[int, ...], n: int) -> int:
    return sum(max(0, n - i + 1) - max(0, n - ni + 1) for i, ni in enumerate(chars))


def _h_closed(t: int, nu: int, n: int) -> int:
    b = restricted_binomial
    return (
        b(n + 2, 2)
        - 2 * b(n + 2 - t, 2)
        + b(n - 2 * t + 4, 2)
        - b(n + 1 - t, 1)
        - b(n + 1 - t - nu, 1)
    )


@lru_cache(maxsize=None)
def plane_section_h(s: int, t: int, n: int) -> int:
    """``h(n)``, computed from the caractère and from the binomial closed form.

    Raises :class:`FormulaMismatchError` if the two disagree.
    """
    chars = caractere(s, t)
    by_sum = _h_from_caractere(chars, n)
    by_closed = _h_closed(t, s - (t * t - 2 * t + 3), n)
    if by_sum != by_closed:
        raise FormulaMismatchError(
            f"h(n): caractere sum {by_sum} != closed form {by_closed}", s=s, t=t, n=n
        )
    return by_sum


def hilbert_profile(s: int, t: int) -> HilbertProfile:
    chars = caractere(s, t)
    n = 0
    while plane_section_h(s, t, n) != s:
        n += 1
    return HilbertProfile(
        s=s,
        t=t,
        nu=s - (t * t - 2 * t + 3),
        caractere=chars,
        stabilization_index=n,
    )


def _stable_from(s: int, t: int) -> int:
    # h(n) = s for n >= 2t-4 (largest caractère entry is 2t-3)
    n0 = 2 * t - 4
    if plane_section_h(s, t, n0) != s or plane_section_h(s, t, n0 + 1) != s:
        raise FormulaMismatchError("h has not stabilized at 2t-4", s=s, t=t)
    return n0


def genus_from_hilbert(s: int, t: int) -> int:
    """``sum_{i>=1} (s - h(i))``, checked against the closed form of ``P(s, t)``."""
    top = _stable_from(s, t)
    total = sum(s - plane_section_h(s, t, i) for i in range(1, top + 1))
    closed = extremal_space_genus_P(s, t)
    if total != closed:
        raise FormulaMismatchError(
            f"Hilbert sum {total} != closed form {closed}", s=s, t=t
        )
    return total


@lru_cache(maxsize=None)
def cumulative_h_sigma(s: int, t: int, n: int) -> int:
    """``h(0) + ... + h(n)``; zero for negative ``n``."""
    require_band(s, t)
    if n < 0:
        return 0
    top = 2 * t - 4
    head = sum(plane_section_h(s, t, i) for i in range(min(n, top) + 1))
    return head + s * max(0, n - top)


def _ci_m(d: int, s: int, t: int) -> int:
    validate_d(d)
    require_band(s, t)
    if d % s:
        raise PreconditionError(f"d divisible by s violated (d={d}, s={s})")
    return d // s - 1


def ci_hilbert(d: int, s: int, t: int, n: int) -> int:
    """Hilbert function ``h_{B'}(n)`` of the plane section of a complete intersection of degree ``d``."""
    m = _ci_m(d, s, t)
    return cumulative_h_sigma(s, t, n) - cumulative_h_sigma(s, t, n - m - 1)


def ci_speciality(d: int, s: int, t: int) -> int:
    """Speciality index ``max{n : h_{B'}(n) < d} - 1`` of the complete intersection.

    Checked against ``d/s + 2t - 7``.
    """
    m = _ci_m(d, s, t)
    top = 2 * t - 4 + m + 2
    if ci_hilbert(d, s, t, top) != d or ci_hilbert(d, s, t, top - 1) != d:
        raise FormulaMismatchError("h_B' has not stabilized", d=d, s=s, t=t)
    n = top
    while ci_hilbert(d, s, t, n) >= d:
        n -= 1
    value = n - 1
    if value != Fraction(d, s) + 2 * t - 7:
        raise FormulaMismatchError(
            f"speciality {value} != d/s+2t-7", d=d, s=s, t=t
        )
    return value


def tail_deficiency(d: int, s: int, t: int, n: int) -> int:
    """``s - h(n-m-1)`` for ``n >= m``.

    This is the function ``F_{a,b}(n)`` with ``a = t-1``, ``b = m+t`` used to
    write ``h_{B'}`` as a sum once ``h`` is stable from ``m`` on.
    """
    m = _ci_m(d, s, t)
    if n < m:
        raise PreconditionError(f"n>=m violated (n={n}, m={m})")
    return s - plane_section_h(s, t, n - m - 1)
