"""Predictors vs certified numerics: expansions, the 12-branch table, proof quantities."""

import math

import pytest
from mpmath import mp, mpf, workprec

from cubicthue.asymptotics import (
    Branch,
    check_error_products,
    classify_case,
    compute_proof_quantities,
    fit_error_exponent,
    predict_logdiff,
    predict_power,
    predict_root_expansion,
    run_ubar,
    run_wbar,
    st_box,
    true_logdiffs,
)
from cubicthue.errors import DegenerateTwist, ExactMatch, InsufficientSamples
from cubicthue.roots import compute_roots

# Pairs on which the gap-product bounds and the w_bar absorption genuinely
# fail at every n (the doubled branches with |s| or |t| too small); measured,
# see notes in the repository history.  Within |s|,|t| <= 5 they are:
GAP_BOUND_VIOLATORS = {(1, 2), (2, 4), (-2, -1), (-4, -2)}


def test_root_expansion_formulas():
    n = 1000
    with workprec(96):
        v0, l0 = predict_root_expansion(n, 0)
        assert abs(v0.value - (n + 2 / mpf(n))) < 1e-12
        assert abs(l0.value - (mp.log(n) + 2 / mpf(n) ** 2)) < 1e-12
        v1, l1 = predict_root_expansion(n, 1)
        assert abs(v1.value - (-1 / mpf(n) + 1 / mpf(n) ** 2)) < 1e-15
        assert abs(l1.value - (-mp.log(n) - 1 / mpf(n) - 3 / (2 * mpf(n) ** 2))) < 1e-12
        v2, l2 = predict_root_expansion(n, 2)
        assert abs(v2.value - (-1 - 1 / mpf(n))) < 1e-15
        assert abs(l2.value - (1 / mpf(n) - 1 / (2 * mpf(n) ** 2))) < 1e-15


def test_root_expansion_residual_scale():
    # lam0 - (n + 2/n) = -1/n^2 + O(n^-3)
    for n in (10**3, 10**4):
        rs = compute_roots(n, 128)
        with workprec(160):
            v0, _ = predict_root_expansion(n, 0)
            assert abs(float(rs.lambda0 - v0.value) * n * n + 1.0) < 0.02


def test_predict_power_formulas():
    n = 500
    with workprec(96):
        p = predict_power(n, 3, 0)
        assert abs(p.value - (mpf(n) ** 3 + 6 * mpf(n))) < 1e-9
        assert predict_power(n, 0, 2).value == 1
        p11 = predict_power(n, 1, 1)
        assert abs(p11.value - (-(1 / mpf(n) - 1 / mpf(n) ** 2))) < 1e-15


def test_predict_power_accuracy():
    rs = compute_roots(2000, 160)
    with workprec(192):
        for a in (2, -3):
            for which in (0, 1, 2):
                pred = predict_power(2000, a, which)
                true = rs.lambdas[which] ** a
                assert abs((true - pred.value) / true) < 1e-5


def test_classify_examples():
    c12, c13 = classify_case(3, 1)
    assert c12.branch is Branch.WIDE_ABOVE       # 2s = 6 > t+1 = 2
    assert c13.branch is Branch.EDGE_ABOVE       # s = 3 = 2t+1 exactly
    c12, c13 = classify_case(2, 4)
    assert c12.branch is Branch.DOUBLED_EVEN     # 2s = t, s even
    assert c13.branch is Branch.WIDE_BELOW       # s = 2 < 2t-1 = 7
    c12, c13 = classify_case(1, 1)
    assert c12.branch is Branch.EDGE_ABOVE
    assert c13.branch is Branch.EDGE_BELOW       # s = 2t-1


def test_classification_partitions_the_plane():
    # independent re-statement of the six mutually exclusive conditions
    def memberships(u, v, parity_of):
        return [u > v + 1, u == v + 1, u == v and parity_of % 2 == 1,
                u == v and parity_of % 2 == 0, u == v - 1, u < v - 1]

    for s in range(-50, 51):
        for t in range(-50, 51):
            m12 = memberships(2 * s, t, s)
            m13 = memberships(s, 2 * t, t)
            assert sum(m12) == 1 and sum(m13) == 1
            c12, c13 = classify_case(s, t)
            assert m12[list(Branch).index(c12.branch)]
            assert m13[list(Branch).index(c13.branch)]


def test_predict_logdiff_wide_branch():
    n = 10**4
    with workprec(96):
        p12, p13 = predict_logdiff(n, 3, 1)
        assert abs(p12.value - (2 * mp.log(n) - 1 / mpf(n))) < 1e-12
        # second difference sits on the boundary s = 2t+1: correction -(t+1)/n
        assert abs(p13.value - (2 * mp.log(n) - 2 / mpf(n))) < 1e-12


def test_predict_logdiff_doubled_even_branch():
    # (s,t) = (2,4): |a1 - a2| = 6 n^-3 (1 - 3/(2n) + ...); the coefficient is
    # |s + t| = 6, not |s| = 2 (measured; the 400-bit oracle below agrees)
    n = 10**4
    with workprec(160):
        p12, _ = predict_logdiff(n, 2, 4)
        expected = -3 * mp.log(n) + mp.log(6) - mpf(3) / (2 * n)
        assert abs(p12.value - expected) < 1e-12
    l12, _, _, _ = true_logdiffs(n, 2, 4, 160)
    assert abs(float(l12 - p12.value)) * n * n < 10


@pytest.mark.parametrize("s,t", sorted(set(
    [(2, 1), (1, 1), (1, 2), (2, 4), (1, 3), (1, 4),
     (4, 1), (3, 1), (4, 2), (3, 2), (-1, -1), (-2, -1),
     (-4, -2), (-1, -3), (-2, 2), (2, -2), (5, 3)])))
def test_logdiff_residuals_quadratic_decay(s, t):
    # every branch: residual * n^2 stays bounded (checked at two scales)
    vals = []
    for n in (10**3, 10**4):
        l12, l13, _, _ = true_logdiffs(n, s, t, 192)
        with workprec(224):
            p12, p13 = predict_logdiff(n, s, t)
            vals.append((abs(float(l12 - p12.value)) * n * n,
                         abs(float(l13 - p13.value)) * n * n))
    for r12, r13 in vals:
        assert r12 < 20 and r13 < 20


def test_predict_logdiff_rejects_degenerate():
    with pytest.raises(DegenerateTwist):
        predict_logdiff(100, 0, 1)


def test_error_products_pass_cases():
    rep = check_error_products(10**4, 2, 1)
    assert rep.margin_product >= 1 and rep.margin_min >= 1 and rep.margin_max >= 1
    assert rep.passed
    rep = check_error_products(10**4, -1, -3)
    assert rep.passed


def test_error_products_exemption():
    for st in ((1, 1), (-1, -1)):
        rep = check_error_products(10**4, *st)
        assert rep.exempt_first
        assert rep.margin_product < 1          # the exempted bound really does fail
        assert rep.margin_min >= 1 and rep.margin_max >= 1
        assert rep.passed


def test_error_products_known_violators():
    # these pairs genuinely violate the product and min bounds at every n;
    # the max bound still holds
    for st in sorted(GAP_BOUND_VIOLATORS):
        rep = check_error_products(10**4, *st)
        assert rep.margin_product < 1
        assert rep.margin_min < 1
        assert rep.margin_max >= 1
        assert not rep.passed


def test_proof_quantities_definitions():
    q = compute_proof_quantities(10**4, 2, 1)
    with workprec(400):
        assert abs(q.u_bar + q.u1 + q.u2) < mpf(2) ** -150
        assert abs(q.w_bar + q.w1 + q.w2) < mpf(2) ** -150 * abs(q.w_bar)
        assert abs(q.v_bar - (q.b0 * q.regulator - q.v1 - q.v2)) < mpf(2) ** -100
        assert 0 < q.v_bar < q.regulator


def test_ubar_limit():
    q = compute_proof_quantities(10**6, 2, 1)
    assert abs(float(q.u_bar) * 10**6 - 3.0) < 1e-3
    res = run_ubar(n_grid=[10**2, 10**3, 10**4, 10**5, 10**6])
    assert res.passed


def test_vbar_good_pairs():
    # mixed-branch pairs obey the log(n)/n lower bound with the window intact
    for (s, t) in [(2, 1), (1, 1), (-1, -1), (3, 1), (2, -2)]:
        for n in (10**4, 10**6):
            q = compute_proof_quantities(n, s, t)
            assert 0 < q.v_bar < q.regulator
            assert float(q.v_bar) * n / math.log(n) >= 0.5
            assert float(q.regulator - q.v_bar) / math.log(n) > 0.3


def test_vbar_collapse_pairs_documented():
    # inside the doubly-dominated cone (2s < t-1 and s < 2t-1) the v1+v2
    # combination collapses onto an exact multiple of R and v_bar degenerates
    # to O(log n / n^2) from one side of the window or the other
    q = compute_proof_quantities(10**4, -2, 1)
    assert 0 < q.v_bar < q.regulator
    assert float(q.v_bar) * 10**4 / math.log(10**4) < 0.01      # far below 0.5
    q = compute_proof_quantities(10**4, 1, 4)
    assert 0 < q.v_bar < q.regulator
    assert float(q.regulator - q.v_bar) / math.log(10**4) < 0.01


def test_wbar_absorption_split():
    res = run_wbar(n_grid=[10**4], st_bound=2)
    failing = {(r["s"], r["t"]) for r in res.rows if not r["ok"]}
    assert failing == {p for p in GAP_BOUND_VIOLATORS if max(map(abs, p)) <= 2}
    assert not res.passed  # the honest overall verdict on the full box


def test_fit_error_exponent_recovers_slope():
    samples = [(n, 3.7 * n ** -2.2) for n in (100, 300, 1000, 30000, 100000)]
    fit = fit_error_exponent(samples)
    assert abs(fit.slope + 2.2) < 1e-9
    assert fit.r_squared > 0.999999


def test_fit_error_exponent_guards():
    with pytest.raises(InsufficientSamples):
        fit_error_exponent([(100, 1.0), (1000, 0.5)])
    with pytest.raises(InsufficientSamples):
        fit_error_exponent([(100 + i, 1.0 / (100 + i)) for i in range(6)])
    with pytest.raises(ExactMatch):
        fit_error_exponent([(10**k, 0.0) for k in range(2, 7)])


def test_proof_quantities_reject_degenerate():
    with pytest.raises(DegenerateTwist):
        compute_proof_quantities(100, 1, 0)


def test_st_box_order_and_content():
    box = st_box(1)
    assert box == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
