import logging
import random
from fractions import Fraction

import pytest

from knot.skein.homfly._errors import (
    IntegralityViolation,
    PoleAtRoot,
    ScalarDivisionError,
    SpecializationPole,
)
from knot.skein.homfly.algebra import (
    A,
    DELTA,
    ONE,
    S,
    V,
    ZERO,
    QFraction,
    QLaurent,
    Scalar,
    eval_root,
    psi_delta,
    qbinom,
    qbinom_product,
    qfact,
    qint,
    theta_involution,
)

logger = logging.getLogger(__name__)

TOL = 1e-25


def _one() -> QLaurent:
    return QLaurent({0: 1})


def _random_scalar(rng: random.Random, with_den: bool = True) -> Scalar:
    num = {}
    for _ in range(rng.randint(1, 3)):
        e = tuple(rng.randint(-2, 2) for _ in range(3))
        num[e] = Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    den = None
    if with_den and rng.random() < 0.5:
        den = {(0, 1, 0): 1, (0, -1, 0): rng.choice([1, 2, -3])}
    return Scalar.from_terms(num, den)


def test_qint():
    """Quantum integers are symmetric Laurent polynomials in s."""
    assert qint(1) == ONE
    assert qint(0) == ZERO
    assert qint(3) == S**2 + 1 + S**-2
    assert qint(-3) == -qint(3)
    assert qint(2) * (S - S**-1) == S**2 - S**-2


def test_qfact_and_qbinom():
    """qfact and qbinom agree with their definitions."""
    assert qfact(0) == ONE
    assert qfact(3) == qint(2) * qint(3)
    assert qbinom(4, 2) == qint(4) * qint(3) / qint(2)
    assert qbinom(4, 2).is_polynomial
    assert qbinom(3, 5) == ZERO
    with pytest.raises(ValueError):
        qfact(-1)
    with pytest.raises(ValueError):
        qbinom(-1, 0)


def test_qbinom_product_form():
    """The box product form equals the factorial form."""
    for m in range(1, 6):
        for l in range(m + 1):
            assert qbinom(m, l) == qbinom_product(m, l)


def test_qbinom_vanishes_at_root():
    """[m choose l] is zero at s = exp(i pi/m) for 0 < l < m."""
    for m in range(2, 6):
        for l in range(1, m):
            value = eval_root(psi_delta(qbinom(m, l), 1), m)
            assert abs(value) < TOL


def test_ring_axioms(seed):
    """Associativity, commutativity and distributivity hold exactly."""
    rng = random.Random(seed)
    for _ in range(50):
        x, y, w = (_random_scalar(rng) for _ in range(3))
        assert (x + y) + w == x + (y + w)
        assert (x * y) * w == x * (y * w)
        assert x * y == y * x
        assert x * (y + w) == x * y + x * w
        assert x - x == 0


def test_monomials_are_cancelled():
    """Monomial factors end up in the shift, never in the polynomials."""
    x = Scalar.from_terms({(2, 1, 0): 1, (2, 3, 0): 1}, {(1, 1, 0): 1})
    assert x.shift == (1, 0, 0)
    assert x == A * (1 + S**2)
    y = (A**3 * S) / (A * S**2)
    assert y.is_monomial
    assert y == A**2 * S**-1


def test_equality_by_cross_multiplication():
    """Different representatives of one fraction compare equal."""
    x = (S**2 - 1) / (S - 1)
    assert x == S + 1
    assert (S**2 - S**-2) / (S - S**-1) == S + S**-1
    assert x != S


def test_division_by_zero():
    """Division by the zero Scalar raises."""
    with pytest.raises(ScalarDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_fdeg_and_a_free():
    """The framing degree is the a-degree of homogeneous values."""
    assert (A**3 * DELTA).fdeg == 3
    assert DELTA.is_a_free
    assert (A + 1).fdeg is None
    assert ZERO.fdeg is None


def test_theta_involution(seed):
    """Theta flips s, a and v and is an involution."""
    assert theta_involution(A * S**2) == -(A * S**-2)
    assert theta_involution(DELTA) == DELTA
    rng = random.Random(seed)
    for _ in range(100):
        x = _random_scalar(rng)
        assert x.theta().theta() == x
    for _ in range(20):
        x, y = _random_scalar(rng), _random_scalar(rng)
        assert (x * y).theta() == x.theta() * y.theta()
        assert (x + y).theta() == x.theta() + y.theta()


def test_classical_value():
    """a, s, v -> 1."""
    assert qint(4).classical_value() == 4
    assert (qint(2) * A * V).classical_value() == 2
    with pytest.raises(ScalarDivisionError):
        (ONE / (S - 1)).classical_value()


def test_json_format():
    """Scalars serialize with sorted exponent vectors and p/q strings."""
    x = Scalar.from_terms({(1, 0, 0): Fraction(1, 2), (0, 2, -1): 3})
    data = x.to_json()
    assert data["vars"] == ["a", "s", "v"]
    assert data["num"] == [
        {"e": [0, 2, -1], "c": "3/1"},
        {"e": [1, 0, 0], "c": "1/2"},
    ]
    assert data["den"] == [{"e": [0, 0, 0], "c": "1/1"}]
    assert Scalar.from_json(data) == x
    bad = dict(data, num=[{"e": [0, 0, 0], "c": "0.5"}])
    with pytest.raises(ValueError):
        Scalar.from_json(bad)


def test_psi_delta_examples():
    """The assignments s -> q, v -> q^-delta, a -> q^(-1/delta)."""
    assert psi_delta(S * V, 2) == QLaurent.monomial(-1)
    assert psi_delta(A, 3) == QLaurent.monomial(Fraction(-1, 3))
    value = psi_delta(DELTA, 2)
    assert value.is_laurent
    assert value == QLaurent.from_exponents({1: 1, -1: 1})
    with pytest.raises(ValueError):
        psi_delta(A, 0)


def test_psi_delta_pole():
    """A denominator that specializes to zero is reported."""
    x = ONE / (S - V**-1)
    with pytest.raises(SpecializationPole):
        psi_delta(x, 1)
    assert not psi_delta(x, 2).is_laurent


def test_psi_delta_is_a_homomorphism(seed):
    """psi_delta respects sums and products."""
    rng = random.Random(seed)
    for _ in range(20):
        x = _random_scalar(rng, with_den=False)
        y = _random_scalar(rng, with_den=False)
        for delta in (1, 2, -3):
            assert psi_delta(x * y, delta) == psi_delta(x, delta) * psi_delta(
                y, delta
            )
            assert psi_delta(x + y, delta) == psi_delta(x, delta) + psi_delta(
                y, delta
            )


def test_qlaurent_shared_denominator():
    """Sums rescale to the lcm of the exponent denominators."""
    x = QLaurent.monomial(Fraction(1, 2)) + QLaurent.monomial(Fraction(1, 3))
    assert x.denom == 6
    assert sorted(x.terms) == [2, 3]
    assert (QLaurent.monomial(Fraction(1, 2)) ** 2) == QLaurent.monomial(1)
    assert QLaurent({0: 0, 1: 2}).terms == {1: 2}


def test_qlaurent_inverse_of_non_monomial():
    """Only monomials have Laurent inverses."""
    with pytest.raises(IntegralityViolation):
        QLaurent.qnum(1) ** -1


def test_qfraction_reduces():
    """Common factors are cancelled by univariate gcd."""
    x = QFraction(QLaurent.qnum(2), QLaurent.qnum(1))
    assert x.is_laurent
    assert x.as_laurent() == QLaurent.from_exponents({1: 1, -1: 1})
    y = QFraction(1, QLaurent.qnum(1))
    assert not y.is_laurent
    with pytest.raises(IntegralityViolation):
        y.as_laurent()
    with pytest.raises(SpecializationPole):
        QFraction(1, QLaurent())


def test_eval_root_examples(bits):
    """Values at q = exp(i pi/N)."""
    q = QLaurent.monomial
    assert abs(eval_root(q(1) + q(-1), 2, bits=bits)) < TOL
    for m in (2, 3, 4):
        assert abs(eval_root(QLaurent.qnum(m), m, bits=bits)) < TOL
    assert abs(eval_root(psi_delta(qint(3), 1), 3, bits=bits)) < TOL
    value = eval_root(q(1), 4, conjugate=True, bits=bits)
    assert abs(value.value - complex(2**-0.5, -(2**-0.5))) < 1e-12


def test_eval_root_pole(bits):
    """A denominator vanishing at the root raises PoleAtRoot."""
    with pytest.raises(PoleAtRoot):
        eval_root(QFraction(1, QLaurent.qnum(3)), 3, bits=bits)
    with pytest.raises(ValueError):
        eval_root(_one(), 1)
    with pytest.raises(ValueError):
        eval_root(_one(), 3, bits=64)


def test_eval_root_integrality():
    """Fractional exponents are refused when integrality is required."""
    x = QLaurent.monomial(Fraction(1, 2))
    with pytest.raises(IntegralityViolation):
        eval_root(x, 3, require_integral=True)
    assert abs(abs(eval_root(x, 3)) - 1) < TOL
