from fractions import Fraction as F

import pytest
from doubles import FlippedStirling

from daehee_kit.algebra import RationalPolynomial
from daehee_kit.verify import (
    DESCRIPTIONS,
    IdentityId,
    check_all,
    check_identity,
    recompute,
)


def test_catalogue_is_complete():
    names = {i.value for i in IdentityId}
    assert names == {
        "T1", "C2", "T3a", "T3b", "T4", "T5", "T6", "T7", "T8", "T9",
        "T10", "T11", "T12", "E36", "E4", "E9", "E12", "E19",
    }
    assert set(DESCRIPTIONS) == set(IdentityId)


def test_t1_full_grid():
    report = check_identity("T1", 20, 6)
    assert report.passed and report.points == 21 * 6


def test_t4_degenerate_grid():
    report = check_identity(IdentityId.T4, 0, 3)
    assert report.passed and report.points == 3


def test_t12_including_n_zero():
    report = check_identity("T12", 12, 4, [0, 1, -1, F(1, 2)])
    assert report.passed


def test_check_all_small():
    reports = check_all(6, 2, [0, 1])
    assert len(reports) == 18
    assert [r.identity for r in reports] == list(IdentityId)
    assert all(r.passed for r in reports), [r for r in reports if not r.passed]


def test_check_all_degenerate():
    assert all(r.passed for r in check_all(0, 1, [0]))


def test_unknown_identity_rejected():
    with pytest.raises(ValueError):
        check_identity("BOGUS", 2, 1)


def test_fault_injection_t1_first_failure():
    report = check_identity("T1", 6, 3, stirling=FlippedStirling(6 + 3 + 2))
    assert not report.passed
    assert report.first_failure.indices == {"n": 1, "k": 2}
    assert report.first_failure.lhs == -1
    assert report.first_failure.rhs == 1


def test_fault_injection_t3b_fails():
    report = check_identity("T3b", 6, 3, stirling=FlippedStirling(11))
    assert not report.passed
    assert report.first_failure.indices["n"] == 3
    assert report.first_failure.lhs != report.first_failure.rhs


def test_failure_record_reproduces():
    cache = FlippedStirling(11)
    for ident in ("T1", "T3b", "T5", "T10"):
        report = check_identity(ident, 6, 3, [0, 1], stirling=cache)
        assert not report.passed
        f = report.first_failure
        lhs, rhs = recompute(report.identity, f.indices, 6, 3, [0, 1], stirling=cache)
        assert (lhs, rhs) == (f.lhs, f.rhs)


def test_polynomial_failures_are_coefficientwise():
    report = check_identity("T5", 6, 3, [0], stirling=FlippedStirling(11))
    assert isinstance(report.first_failure.lhs, RationalPolynomial)


def test_deterministic():
    a = check_all(8, 3, [0, F(1, 2)])
    b = check_all(8, 3, [0, F(1, 2)])
    assert a == b  # elapsed is excluded from comparison


def test_parallel_matches_serial():
    serial = check_all(5, 2, [0, 1])
    parallel = check_all(5, 2, [0, 1], jobs=2)
    assert serial == parallel
