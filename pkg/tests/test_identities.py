"""Identity registry: defaults pass, negative controls fail, params validate."""
from fractions import Fraction as F

import pytest

from binomring.identities import (
    IdentityReport,
    build_symmetric_function,
    check,
    registered_names,
    run_all,
)
from binomring.seqcore import TruncSeq, deviation
from binomring.special import bernoulli, euler1

EXPECTED_NAMES = {
    "eq3", "eq9", "eq9-k0-a", "eq9-k0-b", "faulhaber", "powersum-sigma-form",
    "carlitz", "gould12", "eq13", "thm5-forward", "thm5-converse", "eq15",
    "eq16", "eq18", "eq19", "eq20", "eq21", "eq22", "eq23", "tuenter", "eq24",
    "cor9", "prop10", "eq31", "eq32", "eq25-iso", "eq29",
}


def corrupt(seq: TruncSeq, k: int) -> TruncSeq:
    vals = list(seq.values)
    vals[k] = vals[k] + 1
    return TruncSeq(vals)


def test_registry_is_complete():
    assert set(registered_names()) == EXPECTED_NAMES


def test_all_defaults_pass_depth_12():
    for report in run_all(depth=12):
        assert report.passed, (report.name, report.first_failure)


def test_unknown_name():
    with pytest.raises(KeyError):
        check("nosuch")


def test_carlitz_value():
    report = check("carlitz", {"m": 1, "n": 2})
    assert report.passed
    # both sides equal B(1) + 2 B(2) + B(3) = -1/6
    from binomring.seqcore import binom

    B = bernoulli(3)
    lhs = F(-1) ** 2 * sum(binom(2, i) * B[1 + i] for i in range(3))
    assert lhs == F(-1, 6)


def test_eq9_higher_orders():
    for n in (1, 2, 3):
        assert check("eq9", {"n": n}, depth=10).passed


def test_negative_control_carlitz():
    report = check("carlitz", {"m": 1, "n": 2, "bernoulli": corrupt(bernoulli(3), 2)})
    assert not report.passed
    assert report.first_failure is not None
    assert report.first_failure.lhs != report.first_failure.rhs


def test_negative_control_eq3():
    report = check("eq3", {"bernoulli": corrupt(bernoulli(12), 1)}, depth=12)
    assert not report.passed and report.first_failure.index == 1


def test_negative_control_eq16():
    report = check("eq16", {"euler1": corrupt(euler1(10), 3)}, depth=10)
    assert not report.passed


def test_negative_control_faulhaber():
    report = check("faulhaber", {"n": 5, "bernoulli": corrupt(bernoulli(10), 0)}, depth=10)
    assert not report.passed


def test_negative_control_gould12_mismatched_pair():
    from binomring.seqcore import bullet, make_named

    f = bernoulli(10)
    F_wrong = corrupt(bullet(make_named("I", 10), f), 9)
    report = check("gould12", {"m": 3, "n": 6, "f": f, "F": F_wrong}, depth=10)
    assert not report.passed


def test_negative_control_eq31():
    f = bernoulli(10)
    report = check("eq31", {"m": 1, "n": 1, "f": f, "F": corrupt(f, 4)}, depth=10)
    assert not report.passed


def test_negative_control_eq15():
    report = check("eq15", {"f": corrupt(bernoulli(11), 5)}, depth=11)
    assert not report.passed


def test_every_default_perturbation_detected():
    # perturbing any single Bernoulli coefficient must break eq3
    B = bernoulli(8)
    for k in range(9):
        report = check("eq3", {"bernoulli": corrupt(B, k)}, depth=8)
        assert not report.passed, k


def test_eq23_precondition_rejected():
    # a = b makes the denominator vanish for every n
    with pytest.raises(ValueError):
        check("eq23", {"a": F(2), "b": F(2), "c": F(1)}, depth=6)


def test_eq23_printed_form_only_at_c0():
    r = check("eq23", {"a": F(2), "b": F(3), "c": F(0)}, depth=8)
    assert r.passed and r.params["printed_form_holds"] == "True"
    r = check("eq23", {"a": F(2), "b": F(3), "c": F(1, 2)}, depth=8)
    assert r.passed and r.params["printed_form_holds"] == "False"


def test_eq22_printed_form_flags():
    r = check("eq22", {"a": F(2), "b": F(3), "c": F(0)}, depth=8)
    assert r.passed and r.params["printed_form_holds"] == "True"
    r = check("eq22", {"a": F(2), "b": F(3), "c": F(5, 2)}, depth=8)
    assert r.passed and r.params["printed_form_holds"] == "False"


def test_tuenter_exact():
    r = check("tuenter", {"a": F(2), "b": F(5, 2)}, depth=10)
    assert r.passed


def test_thm5_constructed_function_is_symmetric():
    f = build_symmetric_function([F(1), F(2, 3), F(-1, 5), F(4)], 7)
    assert deviation(f) == TruncSeq([0] * 8)


def test_eq29_failure_reporting_shape():
    r = check("eq29", {"n": 12, "k": 3})
    assert r.passed and r.params["n"] == "12"


def test_report_structure():
    r = check("eq3", depth=6)
    assert isinstance(r, IdentityReport)
    assert r.depth == 6 and r.passed and r.first_failure is None


def test_seeded_checks_are_deterministic():
    a = check("gould12", {"seed": 7}, depth=10)
    b = check("gould12", {"seed": 7}, depth=10)
    assert a == b
