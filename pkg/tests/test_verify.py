import json
from fractions import Fraction

import pytest

from flaggenus import verify
from flaggenus.verify import (
    CAMPAIGNS,
    LatticeSpec,
    VerifyReport,
    run_campaign,
    verify_A_classification,
    verify_hilbert,
    verify_lemma1,
    verify_lemma2,
    verify_R_bound,
    verify_remark,
    verify_rho_bound,
)

small = LatticeSpec(t_range=(3, 6))


@pytest.mark.parametrize(
    "func", [verify_rho_bound, verify_A_classification, verify_lemma1, verify_lemma2, verify_remark]
)
def test_small_lattice_passes(func):
    rep = func(small)
    assert rep.passed, rep.failures[:3]
    assert rep.points_checked > 0 and rep.checks > 0


def test_single_point_rho():
    rep = verify_rho_bound(LatticeSpec(t_range=(6, 6), s_range=(30, 30), epsilon_range=(5, 5)))
    assert rep.points_checked == 1 and rep.passed


def test_R_small():
    rep = verify_R_bound(LatticeSpec(s_range=(3, 40)))
    assert rep.passed
    assert rep.points_checked == sum(range(3, 41))
    assert rep.statistics["max|R|/s^2"]["value"] <= 1


def test_remark_logs_small_t():
    rep = verify_remark(LatticeSpec(t_range=(3, 7)))
    assert rep.passed
    assert [o["inputs"]["t"] for o in rep.observations if o["kind"] == "inapplicable"] == [3, 4, 5]


def test_hilbert_reports_top_of_band_and_t3_observation():
    rep = verify_hilbert(LatticeSpec(t_range=(3, 9)))
    assert not rep.passed
    assert [(f.inputs["t"], f.inputs["s"]) for f in rep.failures] == [(t, t * t - t) for t in range(4, 10)]
    assert {f.relation for f in rep.failures} == {"h(2t-5)=s-1, h(2t-4)=s"}
    assert [o["kind"] for o in rep.observations] == ["fh2-anomaly"]
    assert rep.points_checked == sum(t - 2 for t in range(3, 10))


def test_hilbert_passes_below_top_of_band():
    for t in range(4, 10):
        rep = verify_hilbert(LatticeSpec(t_range=(t, t), s_range=(1, t * t - t - 1)))
        assert rep.passed


def test_explicit_d_mode():
    rep = verify_lemma1(LatticeSpec(t_range=(4, 5), d_values=(10, 8 * 30 * 5**4 + 7)))
    assert rep.passed
    assert any(o["kind"] == "below-threshold" for o in rep.observations)
    rep = verify_lemma2(LatticeSpec(t_range=(4, 5), d_values=(32 * 5**4 + 1, 32 * 5**4 + 2)))
    assert rep.passed


def test_failures_are_captured_not_raised(monkeypatch):
    real = verify.rho

    def inflated(s, t, eps):
        value, case = real(s, t, eps)
        return value + 3 * t**3, case

    monkeypatch.setattr(verify, "rho", inflated)
    rep = verify_rho_bound(LatticeSpec(t_range=(3, 4)))
    assert not rep.passed
    # every point visited despite failures
    assert rep.points_checked == sum(range(3, 7)) + sum(range(3, 13))
    keys = [f.sort_key() for f in rep.failures]
    assert keys == sorted(keys)


def test_misprinted_rho_factor_is_detected(monkeypatch):
    from flaggenus import bounds

    def misprinted(s, t, eps):
        value, case = bounds.rho(s, t, eps)
        if case.case_tag == bounds.HIGH_EPSILON:
            a, b = divmod(s - 1, t)
            value += Fraction(case.u * (t - 1) * ((a - b - 6) - (t - b - 3)), 2)
        return value, case

    monkeypatch.setattr(verify, "rho", misprinted)
    rep = verify_lemma1(LatticeSpec(t_range=(3, 8)))
    assert not rep.passed


def test_failure_sort_order():
    rep = VerifyReport("x")
    rep.check(False, "r", {"t": 5, "s": 4})
    rep.check(False, "r", {"t": 3, "s": 9, "epsilon": 2})
    rep.check(False, "r", {"t": 3, "s": 9, "epsilon": 1})
    rep.finish()
    assert [f.inputs for f in rep.failures] == [
        {"t": 3, "s": 9, "epsilon": 1}, {"t": 3, "s": 9, "epsilon": 2}, {"t": 5, "s": 4}
    ]


@pytest.mark.parametrize("name", sorted(CAMPAIGNS))
def test_deterministic(name):
    spec = LatticeSpec(t_range=(3, 5), s_range=(3, 20)) if name != "R" else LatticeSpec(s_range=(3, 30))
    a = json.dumps(run_campaign(name, spec).to_dict())
    b = json.dumps(run_campaign(name, spec).to_dict())
    assert a == b


def test_lattice_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(t_range=(5, 4))
    with pytest.raises(ValueError):
        LatticeSpec(s_range=(10, 3))
    with pytest.raises(ValueError):
        LatticeSpec(d_values=())
    with pytest.raises(KeyError):
        run_campaign("nope")


def test_report_serialization_is_exact():
    doc = verify_rho_bound(LatticeSpec(t_range=(3, 3))).to_dict()
    value = doc["statistics"]["max|rho|/t^3"]["value"]
    assert isinstance(value, str) and "/" in value
