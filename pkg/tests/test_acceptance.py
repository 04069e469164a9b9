"""Acceptance suite: one test per criterion, exact integer equality
throughout (tolerance 0).  Each test prints a single pass line; run with
`pytest tests/test_acceptance.py -v -s` to see them.
"""

import random

from conftest import degree_sequences, random_ideal
from cbtk.bounds import (
    best_threshold,
    bound_codim3,
    bound_delta2,
    bound_engheta_hmmcs,
    bound_phi_chain,
    bound_symmetric,
    egh_conjectural,
)
from cbtk.lpp import AciParams, c_sequence, lpp_monomial, lpp_multiplicity, phi, sigma
from cbtk.monomials import (
    ci_hilbert,
    hilbert_function,
    pure_power_ideal,
    standard_monomials,
)
from cbtk.verify import (
    CampaignConfig,
    check_linkage_symmetry,
    exhaustive_monomial_max,
    run_campaign,
)


def _passed(num, text):
    print(f"criterion {num:>2} PASS: {text}")


def test_criterion_01_c_sequences():
    assert c_sequence((4, 4, 4), 4) == (1, 3, 4)
    assert c_sequence((3, 3, 3), 3) == (1, 2, 3)
    _passed(1, "c(4,4,4;4) == (1,3,4) and c(3,3,3;3) == (1,2,3)")


def test_criterion_02_p3_closed_form():
    for D in range(2, 7):
        report = best_threshold(AciParams((D, D, D), D))
        assert report.threshold == D**3 - D**2 + D + 1, D
    _passed(2, "threshold((D,D,D);D) == D^3 - D^2 + D + 1 for D = 2..6")


def test_criterion_03_four_cubics_in_p4():
    report = best_threshold(AciParams((3, 3, 3, 3), 3))
    assert report.threshold == 70
    assert report.selected_tag == "symmetric"
    _passed(3, "threshold(3,3,3,3;3) == 70 via the symmetric bound")


def test_criterion_04_example_4_4_4_10():
    p = AciParams((4, 4, 4, 10), 4)
    report = best_threshold(p)
    assert report.threshold == 532
    assert report.selected_tag == "delta2"
    assert bound_symmetric(p) + 1 == 612
    assert report.egh_conjectural + 1 == 521
    _passed(4, "(4,4,4,10;4): delta2 threshold 532, phi-route value 612, conjectural 521")


def test_criterion_05_cubics_in_even_projective_space():
    for n in (2, 3, 4):
        d = (3,) * (2 * n)
        report = best_threshold(AciParams(d, 3))
        assert report.threshold == 3 ** (2 * n) - (6 * n * n - 8 * n + 3), n
        assert sum(phi(d, m) for m in range(4, 2 * n + 2)) == 3 * n * n - 4 * n + 1, n
    _passed(5, "cubics in P^{2n}: threshold and phi sums match for n = 2, 3, 4")


def test_criterion_06_quadrics():
    for n in range(3, 9):
        for D in range(1, n):
            report = best_threshold(AciParams((2,) * n, D))
            assert report.threshold == 2**n - (3 * (n - D) ** 2 + 1) // 4, (n, D)
    _passed(6, "threshold(n quadrics; D) == 2^n - floor((3(n-D)^2+1)/4), n = 3..8, D < n")


def test_criterion_07_colon_identity():
    checked = 0
    for d in degree_sequences(5, 4):
        h = len(d)
        xd = pure_power_ideal(d, h)
        for D in range(1, sigma(d) + 1):
            c = c_sequence(d, D)
            assert xd.colon(lpp_monomial(d, D)) == pure_power_ideal(c, h), (d, D)
            checked += 1
    assert checked > 500
    _passed(7, f"colon((x^d), U_D) == (x^c) on {checked} cases (entries <= 5, h <= 4)")


def test_criterion_08_oracle_equivalence():
    rng = random.Random(88)
    cases = 0
    # splitting recursion vs enumeration on random monomial ideals
    for _ in range(100):
        ideal = random_ideal(rng, max_exp=8)
        bound = rng.randint(0, 8)
        table = hilbert_function(ideal, bound)
        for m in range(bound + 1):
            assert table.values[m] == len(standard_monomials(ideal, m)), (ideal, m)
        cases += 1
    # splitting recursion vs power series (and enumeration) on pure power ideals
    for _ in range(100):
        h = rng.randint(1, 5)
        n = rng.randint(h, 5)
        d = tuple(sorted(rng.randint(1, 8) for _ in range(h)))
        xd = pure_power_ideal(d, n)
        top = min(sigma(d) + 1, 10)
        series = ci_hilbert(d, n, top)
        table = hilbert_function(xd, top)
        assert series.values == table.values, (d, n)
        m = rng.randint(0, min(top, 8))
        assert table.values[m] == len(standard_monomials(xd, m)), (d, n, m)
        cases += 1
    _passed(8, f"splitting HF == enumeration HF == series HF on {cases} randomized cases")


def test_criterion_09_exhaustive_monomial_egh():
    checked = 0
    for d in degree_sequences(4, 4):
        for D in range(1, sigma(d) + 1):
            best, argmax = exhaustive_monomial_max(d, D)  # raises on any mismatch
            assert best == lpp_multiplicity(d, D)
            assert lpp_monomial(d, D) in argmax
            checked += 1
    assert checked > 200
    _passed(9, f"monomial maximum == lpp_multiplicity with U_D maximal on {checked} cases")


def test_criterion_10_linkage_symmetry():
    checked = 0
    for d in degree_sequences(5, 4):
        for D in range(1, sigma(d) + 1):
            result = check_linkage_symmetry(d, D, lpp_monomial(d, D))
            assert result.passed, (d, D, result.mismatches)
            checked += 1
    _passed(10, f"Gorenstein symmetry and linkage identity on {checked} monomial cases")


def _campaign_seed(d, D):
    seed = D
    for x in d:
        seed = seed * 10 + x
    return seed


def test_criterion_11a_random_campaigns_h3_artinian():
    pairs = 0
    for d in degree_sequences(4, 3, min_h=3):
        for D in range(1, sigma(d) + 1):
            config = CampaignConfig(d, D, 3, 101, trials=200, seed=_campaign_seed(d, D))
            report = run_campaign(config)
            assert report.failed == 0, (d, D, report.failures)
            assert report.certified == report.attempted == 200
            pairs += 1
    assert pairs == 90
    _passed(11, f"(a) h = n = 3 sweep: {pairs} campaigns x 200 trials, zero failures")


def test_criterion_11b_random_campaign_nonartinian():
    config = CampaignConfig((3, 3, 3), 3, 4, 101, trials=100, seed=11)
    report = run_campaign(config)
    assert report.failed == 0, report.failures
    assert report.certified == 100
    again = run_campaign(config)
    assert again.to_dict() == report.to_dict()
    _passed(11, "(b) (3,3,3;3) in 4 variables, 100 trials, zero failures, deterministic")


def test_criterion_11c_random_campaign_h4():
    config = CampaignConfig((3, 3, 3, 3), 3, 4, 101, trials=100, seed=23)
    report = run_campaign(config)
    assert report.failed == 0, report.failures
    assert report.certified == 100
    assert best_threshold(AciParams((3, 3, 3, 3), 3)).best_bound == 69
    again = run_campaign(config)
    assert again.to_dict() == report.to_dict()
    _passed(11, "(c) (3,3,3,3;3): HF <= HF(x^d) - phi_m for 3 < m <= 8 and e <= 69, "
                "100 trials, zero failures, deterministic")


def test_criterion_12_bound_ordering():
    checked = 0
    for d in degree_sequences(6, 5):
        s = sigma(d)
        for D in range(1, s + 1):
            p = AciParams(d, D)
            egh = egh_conjectural(p)
            chain = bound_phi_chain(p)
            assert chain <= bound_engheta_hmmcs(p), (d, D)
            assert chain >= egh and bound_engheta_hmmcs(p) >= egh, (d, D)
            if D < s:
                sym = bound_symmetric(p)
                assert sym <= chain and sym >= egh, (d, D)
            if p.h == 3:
                assert bound_codim3(p) >= egh, (d, D)
            if p.h >= 4 and D < d[3] and D < s:
                assert bound_delta2(p) >= egh, (d, D)
            checked += 1
    assert checked > 4000
    _passed(12, f"symmetric <= phi_chain <= engheta_hmmcs and proven >= conjectural "
                f"on {checked} parameter sets (entries <= 6, h <= 5)")


def test_criterion_13_phi_positive_non_increasing():
    checked = 0
    for d in degree_sequences(6, 5):
        s = sigma(d)
        for m in range(2, s):
            assert phi(d, m) > 0, (d, m)
            assert phi(d, m) >= phi(d, m + 1), (d, m)
            checked += 1
    _passed(13, f"phi_m > 0 and phi_m >= phi_(m+1) for 2 <= m < sigma on {checked} pairs")
