from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from flaggenus import (
    FormulaMismatchError,
    PreconditionError,
    RangeError,
    caractere,
    ci_genus,
    ci_hilbert,
    ci_speciality,
    cumulative_h_sigma,
    extremal_space_genus_P,
    genus_from_hilbert,
    halphen_H,
    hilbert_profile,
    plane_section_h,
    speciality_bounds,
    tail_deficiency,
)
from flaggenus import hilbert as hilbert_mod

band_points = [(s, t) for t in range(3, 21) for s in range(t * t - 2 * t + 3, t * t - t + 1)]
band = st.sampled_from(band_points)


def h_by_enumeration(chars, n):
    # Delta h(j) = #{i : i <= j < n_i}; count lattice points instead of summing ramps
    return sum(1 for i, ni in enumerate(chars) for j in range(i, ni) if j <= n)


def test_caractere_worked():
    assert caractere(11, 4) == (5, 4, 4, 4)
    assert caractere(12, 4) == (5, 5, 4, 4)
    assert caractere(6, 3) == (3, 3, 3)


def test_caractere_out_of_band():
    with pytest.raises(RangeError):
        caractere(11, 5)


@pytest.mark.parametrize("n,expected", [(-2, 0), (-1, 0), (0, 1), (1, 3), (2, 6), (3, 10), (4, 11), (9, 11)])
def test_h_worked(n, expected):
    assert plane_section_h(11, 4, n) == expected


@given(band, st.integers(-5, 80))
def test_h_matches_enumeration_oracle(st_pair, n):
    s, t = st_pair
    assert plane_section_h(s, t, n) == h_by_enumeration(caractere(s, t), n)


def test_h_dual_formula_mismatch_is_reported(monkeypatch):
    plane_section_h.cache_clear()
    monkeypatch.setattr(hilbert_mod, "_h_closed", lambda t, nu, n: -1)
    try:
        with pytest.raises(FormulaMismatchError) as info:
            plane_section_h(11, 4, 2)
        assert info.value.point == {"s": 11, "t": 4, "n": 2}
    finally:
        plane_section_h.cache_clear()


@given(band)
def test_profile_invariants(st_pair):
    s, t = st_pair
    prof = hilbert_profile(s, t)
    assert sum(ni - i for i, ni in enumerate(prof.caractere)) == s
    assert prof.nu == s - (t * t - 2 * t + 3)
    assert prof.stabilization_index == 2 * t - 4
    values = [plane_section_h(s, t, n) for n in range(-3, 3 * t + 2)]
    assert values == sorted(values)
    assert plane_section_h(s, t, 0) == 1
    assert plane_section_h(s, t, 2 * t - 4) == s


def test_fh2_first_identity_only_fails_at_top_of_band():
    for s, t in band_points:
        if t < 4:
            continue
        expected = s - 2 if s == t * t - t else s - 1
        assert plane_section_h(s, t, 2 * t - 5) == expected, (s, t)


def test_t3_anomaly():
    # the only point with t=3: h(1)=3 while s-1=5
    assert [plane_section_h(6, 3, n) for n in range(4)] == [1, 3, 6, 6]


@pytest.mark.parametrize("s,t,expected", [(11, 4, 14), (12, 4, 17), (6, 3, 3)])
def test_genus_from_hilbert(s, t, expected):
    assert genus_from_hilbert(s, t) == expected


def test_genus_from_hilbert_matches_closed_form_and_H():
    for s, t in band_points:
        P = genus_from_hilbert(s, t)
        assert P == extremal_space_genus_P(s, t)
        assert halphen_H(s, t) == P + (s - 1) % t - 1


@pytest.mark.parametrize("n,expected", [(2, 10), (-1, 0), (5, 42), (0, 1), (12, 42 + 7 * 11)])
def test_cumulative(n, expected):
    assert cumulative_h_sigma(11, 4, n) == expected


@pytest.mark.parametrize("n,expected", [(4, 21), (5, 22), (3, 16), (-1, 0), (0, 1), (40, 22)])
def test_ci_hilbert_worked(n, expected):
    assert ci_hilbert(22, 11, 4, n) == expected


@given(band, st.integers(0, 12), st.integers(-4, 70))
def test_ci_hilbert_window_sum_and_difference(st_pair, m, n):
    s, t = st_pair
    d = (m + 1) * s
    window = sum(plane_section_h(s, t, j) for j in range(n - m, n + 1))
    assert ci_hilbert(d, s, t, n) == window
    delta = ci_hilbert(d, s, t, n) - ci_hilbert(d, s, t, n - 1)
    assert delta == plane_section_h(s, t, n) - plane_section_h(s, t, n - m - 1)


def test_ci_hilbert_requires_multiple():
    with pytest.raises(PreconditionError):
        ci_hilbert(23, 11, 4, 3)


@pytest.mark.parametrize("d,expected", [(22, 3), (33, 4), (11, 2)])
def test_ci_speciality(d, expected):
    assert ci_speciality(d, 11, 4) == expected
    assert ci_speciality(d, 11, 4) == Fraction(d, 11) + 2 * 4 - 7


def test_ci_speciality_matches_e2_everywhere_in_band():
    for s, t in band_points:
        for m in range(0, 5):
            d = (m + 1) * s
            assert ci_speciality(d, s, t) == speciality_bounds(d, s, t)[1]


def test_acm_genus_of_complete_intersection():
    for s, t in band_points[:40]:
        for m in range(0, 4):
            d = (m + 1) * s
            deficiency = sum(d - ci_hilbert(d, s, t, i) for i in range(1, 2 * t + m + 2))
            assert deficiency == ci_genus(d, s, t)


@pytest.mark.parametrize("n,expected", [(1, 11), (5, 1), (6, 0), (2, 10)])
def test_tail_deficiency(n, expected):
    assert tail_deficiency(22, 11, 4, n) == expected


def test_tail_deficiency_precondition():
    with pytest.raises(PreconditionError):
        tail_deficiency(33, 11, 4, 1)
