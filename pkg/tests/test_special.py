import logging
import time
from fractions import Fraction

import pytest

from knot.skein.homfly._errors import BudgetExceeded, NotAKnot, NotRepresentable
from knot.skein.homfly.algebra import DELTA, QFraction, QLaurent, S, V, qint
from knot.skein.homfly.braids import analyze_closure, resolve_link
from knot.skein.homfly.colored import ColoredLink
from knot.skein.homfly.special import (
    SpecializationReport,
    exact_report,
    framing_exponent,
    kashaev,
    links_gould,
    links_gould_direct,
    m_invariant,
    modified_dimension,
    numeric_report,
    verify_cut_independence,
    verify_dimension_identity,
    verify_dkash,
    verify_idempotent_minimal,
    verify_kashaev_determinant,
    verify_lg2alex,
    verify_lg2k,
    verify_lg_paths,
    verify_lpsi,
    verify_m2alex,
    verify_qbinom_vanishing,
    verify_quantum_dimension,
    verify_theta_psi,
    verify_unknot_axiom,
)
from knot.skein.homfly.young import Partition

logger = logging.getLogger(__name__)


def _link(name):
    return analyze_closure(resolve_link(name))


def _all_passed(reports):
    for report in reports:
        assert report.passed, report.to_json()


def test_modified_dimension():
    """d(V_a) for sl(2|1) and sl(3|1)."""
    q = QLaurent.qnum
    assert modified_dimension(2, 1) == QFraction(1, q(1) * q(2))
    assert modified_dimension(3, 2) == QFraction(1, q(2) * q(3) * q(4))


def test_kashaev_of_the_unknot(bits):
    """K_N(unknot) = 1."""
    for N in (2, 3, 4):
        value = kashaev(_link("unknot"), N, bits=bits)
        assert abs(value.value - 1) < 1e-30


def test_kashaev_arguments():
    """N must be at least 2 and the cable must fit the budget."""
    with pytest.raises(ValueError):
        kashaev(_link("trefoil"), 1)
    with pytest.raises(BudgetExceeded):
        kashaev(_link("trefoil"), 6, max_strands=8)


def test_kashaev_at_two_is_the_determinant(bits):
    """|K_2| is the knot determinant."""
    for name, det in (("trefoil", 3), ("figure-eight", 5)):
        value = kashaev(_link(name), 2, bits=bits)
        assert abs(abs(value) - det) < 1e-20
        report = verify_kashaev_determinant(_link(name), name, bits=bits)
        assert report.passed, report.to_json()


@pytest.mark.timeout(600)
def test_kashaev_figure_eight_at_three(bits):
    """K_3 of the figure-eight knot has modulus 13."""
    value = kashaev(_link("figure-eight"), 3, bits=bits)
    assert abs(abs(value) - 13) < 1e-20


def test_framing_exponent():
    """Exponent of the framing monomial for knots and links."""
    trefoil = _link("trefoil")
    assert framing_exponent(trefoil, 2, (1,)) == 2 * 3 + 2 * 3
    hopf = _link("hopf")
    assert framing_exponent(hopf, 3, (1, 2)) == 3 * 3 + Fraction(3, 2) * 4


def test_m_invariant_of_the_unknot():
    """M^0(unknot) is the modified dimension."""
    for m, a in ((2, 1), (2, 2), (3, 1)):
        value = m_invariant(_link("unknot"), m, (a,))
        assert value.value == modified_dimension(m, a)
        assert value.framing_exponent == 0
        assert value.to_json()["cut"] == 1


def test_m_invariant_arguments():
    """Rank, color count and typicality are checked."""
    hopf = _link("hopf")
    with pytest.raises(ValueError):
        m_invariant(hopf, 1, (1, 1))
    with pytest.raises(ValueError):
        m_invariant(hopf, 2, (1,))
    with pytest.raises(NotRepresentable):
        m_invariant(hopf, 2, (1, 0))


@pytest.mark.timeout(300)
def test_m_invariant_of_links_is_laurent():
    """Link values have no denominator."""
    for name in ("hopf", "torus-2-4"):
        for colors in ((1, 1), (1, 2)):
            value = m_invariant(_link(name), 2, colors)
            assert value.value.is_laurent
            assert value.to_json()["colors"] == list(colors)


@pytest.mark.timeout(300)
def test_cut_independence():
    """Cutting either component of a link gives the same M^0."""
    for name in ("hopf", "torus-2-4"):
        report = verify_cut_independence(_link(name), 2, (1, 2), name)
        assert report.passed, report.to_json()
    with pytest.raises(ValueError):
        verify_cut_independence(_link("trefoil"), 2, (1,))


@pytest.mark.timeout(300)
def test_links_gould_paths():
    """Both routes to the Links-Gould invariant agree."""
    for name in ("unknot", "trefoil", "hopf", "figure-eight"):
        report = verify_lg_paths(_link(name), 2, 1, name)
        assert report.passed, report.to_json()
    unknot = links_gould(_link("unknot"), 2, 1)
    assert unknot.is_laurent
    assert unknot == QFraction(1)
    assert links_gould_direct(_link("unknot"), 2, 1) == QFraction(1)


@pytest.mark.timeout(300)
def test_links_gould_recovers_alexander(bits):
    """LG^(m|1) at a root of unity is an Alexander value."""
    trefoil = _link("trefoil")
    for a in (1, 2):
        report = verify_lg2alex(trefoil, 2, a, "trefoil", bits=bits)
        assert report.passed, report.to_json()
    with pytest.raises(NotAKnot):
        verify_lg2alex(_link("hopf"), 2, 1)


@pytest.mark.timeout(300)
def test_m_invariant_recovers_alexander(bits):
    """M^0 of sl(m|1) at its pole is an Alexander value."""
    cases = (
        ("trefoil", (1,)),
        ("trefoil", (2,)),
        ("hopf", (1, 1)),
        ("hopf", (1, 2)),
    )
    for name, colors in cases:
        report = verify_m2alex(_link(name), 2, colors, name, bits=bits)
        assert report.passed, report.to_json()


def test_m_invariant_of_the_unknot_at_its_pole(bits):
    """(t - 1/t) M^0(unknot) recovers Delta = 1, with cm/a = 2, 1 and 3."""
    for m, a in ((2, 1), (2, 2), (3, 1)):
        report = verify_m2alex(_link("unknot"), m, (a,), "unknot", bits=bits)
        assert report.passed, report.to_json()
        assert abs(report.lhs.value - 1) < 1e-30


@pytest.mark.timeout(120)
def test_idempotent_minimal_reports():
    reports = verify_idempotent_minimal(Partition((2, 1)), samples=2, seed=7)
    assert [r.identity for r in reports] == ["idempotent_minimal"] * 2
    _all_passed(reports)


@pytest.mark.timeout(600)
def test_links_gould_recovers_kashaev(bits):
    """K_3 from the sl(2|1) route at the conjugate root."""
    for name in ("unknot", "trefoil"):
        report = verify_lg2k(_link(name), 3, name, bits=bits)
        assert report.passed, report.to_json()
    with pytest.raises(ValueError):
        verify_lg2k(_link("trefoil"), 2)


def test_theta_and_psi_commute(bits):
    """Theta then psi_delta equals psi_(N-delta) at the conjugate root."""
    for x in (DELTA, qint(3) * V**2, S**2 - V**-1):
        for delta, N in ((1, 3), (2, 5), (3, 4)):
            report = verify_theta_psi(x, delta, N, bits=bits)
            assert report.passed, report.to_json()
    with pytest.raises(ValueError):
        verify_theta_psi(DELTA, 3, 3, bits=bits)


def test_level_rank_psi(bits):
    """Reduced polynomials of conjugate colors at complementary ranks."""
    for name in ("trefoil", "hopf"):
        cl = ColoredLink.uniform(_link(name), Partition((1,)))
        for delta, N in ((2, 3), (2, 4)):
            report = verify_lpsi(cl, delta, N, name=name, bits=bits)
            assert report.passed, report.to_json()


def test_unknot_and_dimension_identities(bits):
    """Checks that do not involve a link."""
    for m in (2, 3, 4):
        _all_passed(verify_unknot_axiom(m, bits=bits))
        _all_passed(verify_dimension_identity(m, bits=bits))
        _all_passed(verify_qbinom_vanishing(m, bits=bits))
    for N in (3, 4, 5):
        report = verify_dkash(N, bits=bits)
        assert report.passed, report.to_json()


def test_quantum_dimension_reports():
    """psi_m of colored unknots."""
    for m in (2, 3):
        for parts in ((1,), (2,), (1, 1), (2, 1)):
            report = verify_quantum_dimension(Partition(parts), m)
            assert report.passed, report.to_json()


def test_report_json():
    """Reports carry identity, parameters, values and the verdict."""
    report = numeric_report(
        "example", "unknot", {"N": 3}, 1.0, 1.0 + 1e-12, 1e-9, time.perf_counter()
    )
    data = report.to_json()
    assert data["identity"] == "example"
    assert data["link"] == "unknot"
    assert data["N"] == 3
    assert data["pass"] is True
    assert data["tolerance"] == 1e-9
    assert "runtime" not in data
    assert isinstance(report, SpecializationReport)


def test_report_up_to_sign():
    """Sign-blind comparison accepts opposite values."""
    start = time.perf_counter()
    assert not numeric_report("x", "l", {}, 2.0, -2.0, 1e-9, start).passed
    assert numeric_report(
        "x", "l", {}, 2.0, -2.0, 1e-9, start, up_to_sign=True
    ).passed


def test_exact_report_failure():
    """A failed exact comparison has no deviation."""
    report = exact_report("x", "l", {}, DELTA, S, time.perf_counter())
    assert not report.passed
    assert report.deviation is None
    assert report.to_json()["pass"] is False
