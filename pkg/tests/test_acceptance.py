"""Acceptance gate: one test per criterion at its stated range and tolerance.

Run ``pytest tests/test_acceptance.py -v`` and read the "acceptance criteria"
section at the end of the session for one PASS/FAIL line per criterion.
"""

import time
from fractions import Fraction

import pytest

from flaggenus import (
    caractere,
    ci_genus,
    ci_speciality,
    extremal_space_genus_P,
    genus_bound_G,
    halphen_H,
    rho,
)
from flaggenus.cli import main
from flaggenus.verify import CAMPAIGNS, LatticeSpec, run_campaign


def assert_clean(rep, seconds=None, elapsed=None):
    shown = [(f.relation, f.inputs) for f in rep.failures[:5]]
    assert rep.points_checked > 0
    assert rep.passed, f"{len(rep.failures)} failures, first: {shown}"
    if seconds is not None:
        assert elapsed < seconds, f"took {elapsed:.1f}s"


def timed(name, spec):
    start = time.perf_counter()
    rep = run_campaign(name, spec)
    return rep, time.perf_counter() - start


def relations(rep):
    return set(rep.statistics.get("relations", {})) | {f.relation for f in rep.failures}


@pytest.mark.criterion(1, "rho and rho' bounded by 2t^3, t in 3..12")
def test_rho_sweep():
    rep, elapsed = timed("rho", LatticeSpec(t_range=(3, 12)))
    assert rep.points_checked == sum(sum(range(3, t * t - t + 1)) for t in range(3, 13))
    assert_clean(rep, 120, elapsed)


@pytest.mark.criterion(2, "|R| <= s^2, s in 3..300")
def test_R_sweep():
    rep, elapsed = timed("R", LatticeSpec(s_range=(3, 300)))
    assert rep.points_checked == sum(range(3, 301))
    assert_clean(rep, 60, elapsed)


@pytest.mark.criterion(3, "A' vs A classification, t in 3..30")
def test_A_classification():
    rep, _ = timed("A", LatticeSpec(t_range=(3, 30)))
    assert rep.points_checked == sum(t * t - t - 2 for t in range(3, 31))
    assert_clean(rep)


@pytest.mark.criterion(4, "G(d,s,tau) vs G(d,s,t) cases at d=8st^4+1, t <= 12")
def test_tau_comparison_cases():
    rep, _ = timed("lemma1", LatticeSpec(t_range=(3, 12)))
    assert_clean(rep)
    assert rep.checks > rep.points_checked


@pytest.mark.criterion(5, "Duke-type bound below G at d=32t^4+1, t <= 12")
def test_duke_bound_below_G():
    rep, _ = timed("lemma2", LatticeSpec(t_range=(3, 12)))
    assert rep.points_checked == sum(sum(range(3, 2 * t - 2)) for t in range(3, 13))
    assert_clean(rep)


@pytest.mark.criterion(6, "A'' vs A above 2t-3 (t in 3..30); rho'-rho=2(t+1) for t in 6..20")
def test_A_duke_position_and_rho_gap_family():
    rep, _ = timed("remark", LatticeSpec(t_range=(3, 30)))
    assert_clean(rep)
    skipped = {o["inputs"]["t"] for o in rep.observations if o["kind"] == "inapplicable"}
    assert skipped.isdisjoint(range(6, 21))
    for t in range(6, 21):
        s = t * t - 2 * t + 6
        eps = s - 25
        a = (s - 1) // t
        assert rho(s, a + 1, eps)[0] - rho(s, t, eps)[0] == 2 * (t + 1)


@pytest.mark.criterion(7, "Hilbert oracle equivalence, t in 4..25 (t=3 observed)")
def test_hilbert_oracle():
    rep, elapsed = timed("hilbert", LatticeSpec(t_range=(3, 25)))
    assert [o["inputs"]["t"] for o in rep.observations if o["kind"] == "fh2-anomaly"] == [3]
    assert all(f.inputs["t"] >= 4 for f in rep.failures)
    assert_clean(rep, 60, elapsed)


@pytest.mark.criterion(8, "worked triple (22,11,4)")
def test_worked_triple():
    d, s, t = 22, 11, 4
    beta = (s - 1) % t
    G = genus_bound_G(d, s, t)
    assert G == 40
    assert extremal_space_genus_P(s, t) == 14
    assert sum(s - h for h in _h_values(s, t)) == 14
    assert halphen_H(s, t) == 15
    assert rho(s, t, (d - 1) % s)[0] == 0
    assert ci_genus(d, s, t) == 38 == G - Fraction(d, s) * (beta - 1)
    assert ci_speciality(d, s, t) == 3 == Fraction(d, s) + 2 * t - 7
    assert caractere(s, t) == (5, 4, 4, 4)


def _h_values(s, t):
    from flaggenus import plane_section_h
    return [plane_section_h(s, t, n) for n in range(1, 2 * t - 3)]


@pytest.mark.criterion(9, "verify reports byte-identical across consecutive runs")
def test_determinism(capsys):
    for name in sorted(CAMPAIGNS):
        outputs = []
        for _ in range(2):
            main(["verify", name, "--format", "json"])
            outputs.append(capsys.readouterr().out)
        assert outputs[0] == outputs[1], name
        assert outputs[0].strip()
