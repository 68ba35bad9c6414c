"""Exact and high-precision series for ln Gamma and polygamma functions."""

from fractions import Fraction

from . import _ratgamma
from ._ratgamma import (
    DomainError,
    RangeError,
    RegionError,
    evaluate,
    identity_ids,
    lngamma_ref,
    region,
    run_identity,
)

__all__ = [
    "DomainError",
    "RangeError",
    "RegionError",
    "binet_I",
    "binet_Iprime",
    "binet_K",
    "cauchy2",
    "evaluate",
    "gregory",
    "identity_ids",
    "lngamma_ref",
    "region",
    "run_identity",
    "series_coeffs",
    "stirling_row",
    "stirling_s1",
    "term_stream",
]


def stirling_s1(n, l):
    return int(_ratgamma.stirling_s1(n, l))


def stirling_row(n):
    return [int(x) for x in _ratgamma.stirling_row(n)]


def gregory(n):
    return Fraction(_ratgamma.gregory(n))


def cauchy2(n):
    return Fraction(_ratgamma.cauchy2(n))


def binet_I(n):
    return Fraction(_ratgamma.binet_I(n))


def binet_Iprime(n):
    return Fraction(_ratgamma.binet_Iprime(n))


def binet_K(n):
    return Fraction(_ratgamma.binet_K(n))


def term_stream(family, k=0, z_half=0, z_num="1", count=8, force=False):
    """Exact bracket terms of a series at z = z_half/2 + z_num/pi."""
    return [Fraction(x) for x in _ratgamma.term_stream(family, k, z_half, str(z_num), count, force)]


def series_coeffs(kind, m=0, nmax=10):
    return [Fraction(x) for x in _ratgamma.series_coeffs(kind, m, nmax)]
