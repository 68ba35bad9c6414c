import math
from fractions import Fraction

import pytest

import ratgamma


def test_exact_numbers():
    assert ratgamma.stirling_s1(8, 5) == -1960
    assert sum(ratgamma.stirling_row(9)) == 0
    assert ratgamma.gregory(6) == Fraction(-863, 60480)
    assert ratgamma.cauchy2(4) == Fraction(251, 30)
    assert ratgamma.binet_K(6) == Fraction(11153, 42)


def test_term_stream():
    terms = ratgamma.term_stream("lngamma1", z_num=1, count=8)
    assert terms[-1] == Fraction(157, 46080)
    assert ratgamma.term_stream("psi_k_2", z_half=1, count=2) == [Fraction(1, 4), Fraction(1, 16)]


def test_region_and_errors():
    assert ratgamma.region(1 / math.pi) == "converges"
    assert ratgamma.region(1 / (2 * math.pi)) == "diverges"
    with pytest.raises(ratgamma.RegionError):
        ratgamma.evaluate("lngamma1", z=1 / (2 * math.pi), N=5)
    with pytest.raises(ValueError):
        ratgamma.gregory(0)


def test_evaluate_against_reference():
    tr = ratgamma.evaluate("lngamma1", z=1 / math.pi, N=300, bits=128)
    assert tr["region"] == "converges"
    assert abs(tr["value"] - math.lgamma(1 / math.pi)) < 1e-3
    assert tr["rel_error"][-1] < tr["rel_error"][0]
    assert abs(ratgamma.lngamma_ref(2.5) - math.lgamma(2.5)) < 1e-14
    # ln Gamma(1 + i)
    assert abs(ratgamma.lngamma_ref(1 + 1j) - complex(-0.6509231993018563, -0.3016403204675331)) < 1e-14


def test_series_and_identities():
    assert ratgamma.series_coeffs("SINH_LN", nmax=3) == [0, 1, Fraction(-1, 2), Fraction(1, 2)]
    assert "zeta_k1" in ratgamma.identity_ids()
    r = ratgamma.run_identity("zeta_k1", [100, 1000])
    assert r["pass"] and len(r["rows"]) == 2
