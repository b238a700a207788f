"""Acceptance suite: every headline quantitative claim at its stated tolerance.

Each test prints one PASS line when its criterion holds (run with ``-v`` or
``-s`` to see them); any assertion failure marks the criterion failed.
"""

import itertools
import math

import numpy as np
import pytest

from kcbs_msr import (
    MsrPair,
    Regime,
    ScanConfig,
    chsh_max,
    classify_s,
    compute_scan,
    concurrence_msr,
    concurrence_symmetric,
    concurrence_threshold,
    expectation_value,
    kcbs_operator_diagonal,
    kcbs_operator_from_frame,
    msr_to_qutrit,
    numeric_extremal_search,
    pentagram_vectors,
    s_closed_form,
    s_min_for_concurrence,
    s_min_from_beta,
    s_rational_form,
    s_via_concurrence,
    sample_pairs,
    write_scan,
)

SQRT5 = math.sqrt(5.0)
S_MIN = 5.0 - 4.0 * SQRT5
S_MAX = 2.0 * SQRT5 - 5.0
C_GRID = [k / 10.0 for k in range(11)]


def _report(number: int, name: str) -> None:
    print(f"[criterion {number:02d}] {name}: PASS")


def test_c01_maximal_violation():
    for dphi in (0.0, 0.5, 1.0, math.pi, 5.0):
        pair = MsrPair.from_angles(math.pi, dphi, 0.0, 0.0)
        assert abs(s_closed_form(pair) - S_MIN) <= 1e-12
    assert round(S_MIN, 2) == -3.94
    _report(1, "maximal violation equals 5 - 4*sqrt(5)")


def test_c02_classical_bound():
    values = [
        sum(x[j] * x[(j + 1) % 5] for j in range(5))
        for x in itertools.product((-1, 1), repeat=5)
    ]
    assert len(values) == 32
    assert min(values) == -3
    _report(2, "exhaustive classical bound is exactly -3")


def test_c03_operator_cross_construction():
    built = kcbs_operator_from_frame(pentagram_vectors())
    expected = np.diag([S_MAX, S_MIN, S_MAX])
    assert np.max(np.abs(built - expected)) <= 1e-10
    _report(3, "pentagram operator equals the diagonal closed form")


def test_c04_minimum_law_oracle():
    for c in C_GRID:
        found = numeric_extremal_search(c, "minimize", grid_n=128, refine_iters=8)
        assert abs(found.s_star - s_min_for_concurrence(c)) <= 1e-6
    assert abs(s_min_for_concurrence(0.0) - (-SQRT5)) <= 1e-12
    assert abs(s_min_for_concurrence(1.0) - S_MIN) <= 1e-12
    _report(4, "numeric search matches (5 - 3*sqrt(5)) c - sqrt(5)")


def test_c05_maximum_constancy():
    for c in C_GRID:
        found = numeric_extremal_search(c, "maximize", grid_n=128, refine_iters=8)
        assert abs(found.s_star - S_MAX) <= 1e-6
    assert abs(S_MAX - (-0.53)) <= 0.005
    _report(5, "numeric maximum is the constant 2*sqrt(5) - 5 for every c")


def test_c06_contextuality_threshold():
    c_star = concurrence_threshold()
    assert abs(c_star - 1.0 / SQRT5) <= 1e-12
    assert abs(c_star - 0.447) <= 5e-4
    assert abs(s_min_for_concurrence(c_star) - (-3.0)) <= 1e-12
    _report(6, "threshold concurrence is 1/sqrt(5)")


def test_c07_form_equivalences():
    worst_s = 0.0
    worst_c = 0.0
    for pair in sample_pairs(1000):
        qutrit = msr_to_qutrit(pair)
        forms = (
            s_closed_form(pair),
            s_rational_form(pair),
            s_via_concurrence(pair),
            expectation_value(qutrit, kcbs_operator_diagonal()),
        )
        worst_s = max(worst_s, max(forms) - min(forms))
        worst_c = max(
            worst_c, abs(concurrence_msr(pair) - concurrence_symmetric(qutrit))
        )
    assert worst_s <= 1e-12
    assert worst_c <= 1e-12
    _report(7, "four S forms and both concurrence forms agree to 1e-12")


def test_c08_chsh_composition():
    assert abs(chsh_max(0.0) - 2.0) <= 1e-12
    assert abs(chsh_max(1.0) - 2.0 * math.sqrt(2.0)) <= 1e-12
    for c in C_GRID:
        assert abs(s_min_from_beta(chsh_max(c)) - s_min_for_concurrence(c)) <= 1e-12
    expected_ratio = (5.0 - 3.0 * SQRT5) / 2.0
    for beta in np.linspace(2.0 + 1e-9, 2.0 * math.sqrt(2.0), 101):
        ratio = (s_min_from_beta(float(beta)) + SQRT5) / math.sqrt(
            beta * beta - 4.0
        )
        assert abs(ratio - expected_ratio) <= 1e-10
    _report(8, "CHSH composition and offset proportionality hold")


def test_c09_dominance_and_classification():
    threshold = concurrence_threshold()
    for pair in sample_pairs(10_000):
        s = s_closed_form(pair)
        c = concurrence_msr(pair)
        assert s >= s_min_for_concurrence(c) - 1e-10
        assert s <= S_MAX + 1e-10
        if c < threshold:
            assert classify_s(s) is not Regime.CONTEXTUAL_NONLOCAL
    _report(9, "every sampled state respects the minimum law and threshold")


def test_c10_scan_regression(tmp_path):
    paths = [tmp_path / "scan_a.csv", tmp_path / "scan_b.csv"]
    for p in paths:
        write_scan(ScanConfig(resolution=32, output_path=p))
    assert paths[0].read_bytes() == paths[1].read_bytes()

    records = compute_scan(32)
    labels = {r.regime for r in records}
    assert Regime.CONTEXTUAL_NONLOCAL.value in labels
    assert Regime.LOCAL.value in labels

    best = min(records, key=lambda r: r.s)
    step = math.pi / 32
    lo, hi = 0.5 * step, math.pi - 0.5 * step
    assert (best.theta1, best.theta2) in (
        pytest.approx((hi, lo)),
        pytest.approx((lo, hi)),
    )
    _report(10, "resolution-32 scan is deterministic with extremes at the corners")
