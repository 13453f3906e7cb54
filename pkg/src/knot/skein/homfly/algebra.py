"""

Exact scalars of the framed HOMFLY-PT skein theory and their
specializations.

Scalar
    A fraction of Laurent polynomials in ``a, s, v`` with rational
    coefficients. Numerator and denominator live in the sparse polynomial
    ring ``QQ[a, s, v]`` of sympy; the Laurent part is a separate monomial
    shift, so both stored polynomials never carry a monomial factor.
QLaurent
    A Laurent polynomial in ``q`` whose exponents are ``k/D`` for one
    shared positive integer ``D``.
QFraction
    A quotient of two QLaurent values, kept reduced by univariate gcd.
RootValue
    The complex value of a QFraction at ``q = exp(+-i pi/N)``, computed
    with mpmath at a configurable precision.

Equality of Scalars is decided by cross multiplication. Full multivariate
gcd cancellation is only used by :meth:`Scalar.canonical`, which is meant
for reporting and integrality checks.

"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Mapping, Tuple, Union

import mpmath
from sympy import Rational, Symbol
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from knot.skein.homfly._errors import (
    IntegralityViolation,
    PoleAtRoot,
    ScalarDivisionError,
    SpecializationPole,
)
from knot.skein.homfly._logger import get_homfly_logger

# pylint: disable=C0103 # allow non-snake case variable names

logger = get_homfly_logger()

Monomial = Tuple[int, int, int]
Number = Union[int, Fraction]

VARIABLES = ("a", "s", "v")
DEFAULT_BITS = 192
POLE_THRESHOLD = "1e-30"

_RING, _A, _S, _V = ring("a,s,v", QQ)
_S_RING, _ = ring("s", QQ)
_X_RING, _X = ring("x", QQ)
_NO_SHIFT: Monomial = (0, 0, 0)


def _qq(value: Number):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _coeff_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _parse_coeff(text: str) -> Fraction:
    if not isinstance(text, str) or "." in text or "e" in text.lower():
        raise ValueError(f"Coefficient must be a 'p/q' string: {text!r}")
    return Fraction(text)


def _add_monomials(m1, m2):
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])


def _strip(poly):
    """Split poly into (rest, m) with poly = x^m * rest."""
    if not poly:
        return poly, _NO_SHIFT
    m = poly.tail_degrees()
    if m == _NO_SHIFT:
        return poly, _NO_SHIFT
    return (
        poly.new(
            [
                ((e[0] - m[0], e[1] - m[1], e[2] - m[2]), c)
                for e, c in poly.items()
            ]
        ),
        m,
    )


def _lift(poly, shift, base):
    delta = (shift[0] - base[0], shift[1] - base[1], shift[2] - base[2])
    if delta == _NO_SHIFT:
        return poly
    return poly.mul_monom(delta)


def _is_s_only(poly) -> bool:
    return all(e[0] == 0 and e[2] == 0 for e in poly.itermonoms())


def _s_content_gcd(num, den):
    """gcd of den (a polynomial in s) with every s-coefficient of num."""
    g = _S_RING.from_dict({(e[1],): c for e, c in den.items()})
    groups: Dict[Tuple[int, int], dict] = {}
    for e, c in num.items():
        groups.setdefault((e[0], e[2]), {})[(e[1],)] = c
    for terms in groups.values():
        g = g.gcd(_S_RING.from_dict(terms))
        if g.is_ground:
            return None
    return _RING.from_dict({(0, e[0], 0): c for e, c in g.items()})


def _cancel_light(num, den):
    """Cheap cancellation: exact division, then s-content when possible."""
    if den.is_ground or not num:
        return num, den
    quotient, remainder = divmod(num, den)
    if not remainder:
        return quotient, _RING.one
    if _is_s_only(den):
        g = _s_content_gcd(num, den)
        if g is not None:
            return num.exquo(g), den.exquo(g)
    return num, den


class Scalar:
    """An element of the coefficient ring QQ(a, s, v).

    Instances are immutable. Arithmetic accepts ints and Fractions on either
    side. Scalars are deliberately unhashable: equality is a ring
    computation, not a structural comparison.

    Example:
        >>> from knot.skein.homfly.algebra import A, S, DELTA
        >>> (A * S - A * S) == 0
        True
        >>> DELTA.theta() == DELTA
        True
    """

    __slots__ = ("_num", "_den", "_shift")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, value: Number = 0):
        self._num = _RING.ground_new(_qq(value))
        self._den = _RING.one
        self._shift = _NO_SHIFT

    @classmethod
    def _new(cls, num, den, shift: Monomial) -> "Scalar":
        obj = object.__new__(cls)
        if not num:
            obj._num, obj._den, obj._shift = _RING.zero, _RING.one, _NO_SHIFT
            return obj
        if not den:
            raise ScalarDivisionError("Scalar with zero denominator")
        num, m_num = _strip(num)
        den, m_den = _strip(den)
        lc = den.LC
        if lc != QQ.one:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        obj._num = num
        obj._den = den
        obj._shift = (
            shift[0] + m_num[0] - m_den[0],
            shift[1] + m_num[1] - m_den[1],
            shift[2] + m_num[2] - m_den[2],
        )
        return obj

    @classmethod
    def from_terms(
        cls,
        numerator: Mapping[Monomial, Number],
        denominator: Mapping[Monomial, Number] = None,
    ) -> "Scalar":
        """Build a Scalar from exponent-vector -> coefficient maps.

        Exponents may be negative.

        Args:
            numerator: terms of the numerator.
            denominator: terms of the denominator (default 1).
        """
        num, num_shift = _laurent_to_poly(numerator)
        if denominator is None:
            return cls._new(num, _RING.one, num_shift)
        den, den_shift = _laurent_to_poly(denominator)
        if not den:
            raise ScalarDivisionError("Scalar with zero denominator")
        shift = (
            num_shift[0] - den_shift[0],
            num_shift[1] - den_shift[1],
            num_shift[2] - den_shift[2],
        )
        num, den = _cancel_light(num, den)
        return cls._new(num, den, shift)

    @classmethod
    def monomial(cls, a: int = 0, s: int = 0, v: int = 0, coeff=1):
        """The monomial coeff * a^a s^s v^v."""
        return cls._new(_RING.ground_new(_qq(coeff)), _RING.one, (a, s, v))

    # Properties

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_monomial(self) -> bool:
        return self._den == _RING.one and len(self._num) == 1

    @property
    def shift(self) -> Monomial:
        return self._shift

    def numerator_terms(self) -> Dict[Monomial, Fraction]:
        """Numerator terms with the monomial shift folded in."""
        return {
            _add_monomials(e, self._shift): _fraction(c)
            for e, c in self._num.items()
        }

    def denominator_terms(self) -> Dict[Monomial, Fraction]:
        return {tuple(e): _fraction(c) for e, c in self._den.items()}

    def canonical(self) -> "Scalar":
        """The gcd-reduced form. Expensive; for reporting only."""
        if self._den.is_ground:
            return self
        num, den = self._num.cancel(self._den)
        return Scalar._new(num, den, self._shift)

    @property
    def is_polynomial(self) -> bool:
        """True if the value is a Laurent polynomial."""
        return self.canonical()._den.is_ground

    def _a_free_parts(self) -> bool:
        return all(e[0] == 0 for e in self._num.itermonoms()) and all(
            e[0] == 0 for e in self._den.itermonoms()
        )

    @property
    def fdeg(self):
        """Framing degree (the a-degree) if homogeneous, else None."""
        if self.is_zero:
            return None
        x = self if self._a_free_parts() else self.canonical()
        if x._a_free_parts():
            return x._shift[0]
        return None

    @property
    def is_a_free(self) -> bool:
        return self.fdeg == 0

    # Arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        base = (
            min(self._shift[0], other._shift[0]),
            min(self._shift[1], other._shift[1]),
            min(self._shift[2], other._shift[2]),
        )
        n1 = _lift(self._num, self._shift, base)
        n2 = _lift(other._num, other._shift, base)
        if self._den == other._den:
            return Scalar._new(n1 + n2, self._den, base)
        if other._den.is_ground:
            return Scalar._new(n1 + n2 * self._den, self._den, base)
        if self._den.is_ground:
            return Scalar._new(n1 * other._den + n2, other._den, base)
        num, den = _cancel_light(
            n1 * other._den + n2 * self._den, self._den * other._den
        )
        return Scalar._new(num, den, base)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(Scalar)
        obj._num, obj._den, obj._shift = -self._num, self._den, self._shift
        return obj

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        shift = _add_monomials(self._shift, other._shift)
        if self._den.is_ground and other._den.is_ground:
            return Scalar._new(self._num * other._num, _RING.one, shift)
        n1, d2 = _cancel_light(self._num, other._den)
        n2, d1 = _cancel_light(other._num, self._den)
        return Scalar._new(n1 * n2, d1 * d2, shift)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ScalarDivisionError("division of a Scalar by zero")
        return Scalar._new(
            self._den,
            self._num,
            (-self._shift[0], -self._shift[1], -self._shift[2]),
        )

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._shift == other._shift and self._den == other._den:
            return self._num == other._num
        if self.is_zero or other.is_zero:
            return False
        base = (
            min(self._shift[0], other._shift[0]),
            min(self._shift[1], other._shift[1]),
            min(self._shift[2], other._shift[2]),
        )
        n1 = _lift(self._num, self._shift, base)
        n2 = _lift(other._num, other._shift, base)
        return n1 * other._den == n2 * self._den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    # Involutions and evaluation

    def theta(self) -> "Scalar":
        """Apply the ring involution s -> 1/s, a -> -a, v -> -v."""
        if self.is_zero:
            return self
        num, top_num = _theta_poly(self._num)
        den, top_den = _theta_poly(self._den)
        sa, ss, sv = self._shift
        if (sa + sv) % 2:
            num = -num
        return Scalar._new(num, den, (sa, -ss - top_num + top_den, sv))

    def classical_value(self) -> Fraction:
        """The value at a = s = v = 1."""
        x = self
        den = x._den(1, 1, 1)
        if not den:
            x = self.canonical()
            den = x._den(1, 1, 1)
            if not den:
                raise ScalarDivisionError("pole at a = s = v = 1")
        return _fraction(x._num(1, 1, 1)) / _fraction(den)

    def to_expr(self):
        """A sympy expression for display."""
        a, s, v = (Symbol(name) for name in VARIABLES)
        sa, ss, sv = self._shift
        return (
            self._num.as_expr(a, s, v)
            * a**sa
            * s**ss
            * v**sv
            / self._den.as_expr(a, s, v)
        )

    def to_json(self) -> dict:
        return {
            "vars": list(VARIABLES),
            "num": _terms_to_json(self.numerator_terms()),
            "den": _terms_to_json(self.denominator_terms()),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Scalar":
        if list(data.get("vars", VARIABLES)) != list(VARIABLES):
            raise ValueError(f"Unsupported variables {data.get('vars')}")
        return cls.from_terms(
            _terms_from_json(data["num"]), _terms_from_json(data["den"])
        )

    def __str__(self):
        return str(self.to_expr())

    def __repr__(self):
        return f"Scalar({self})"


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Scalar(value)
    if isinstance(value, Rational):
        return Scalar(Fraction(int(value.p), int(value.q)))
    return NotImplemented


def _laurent_to_poly(terms: Mapping[Monomial, Number]):
    terms = {tuple(e): c for e, c in terms.items() if c}
    if not terms:
        return _RING.zero, _NO_SHIFT
    base = tuple(min(e[i] for e in terms) for i in range(3))
    poly = _RING.from_dict(
        {
            (e[0] - base[0], e[1] - base[1], e[2] - base[2]): _qq(c)
            for e, c in terms.items()
        }
    )
    return poly, base


def _theta_poly(poly):
    top = max(e[1] for e in poly.itermonoms())
    terms = {}
    for (i, j, k), c in poly.items():
        terms[(i, top - j, k)] = -c if (i + k) % 2 else c
    return _RING.from_dict(terms), top


def _terms_to_json(terms: Mapping[Monomial, Fraction]) -> list:
    return [
        {"e": list(e), "c": _coeff_str(terms[e])} for e in sorted(terms)
    ]


def _terms_from_json(items: list) -> Dict[Monomial, Fraction]:
    return {tuple(item["e"]): _parse_coeff(item["c"]) for item in items}


ZERO = Scalar(0)
ONE = Scalar(1)
A = Scalar.monomial(a=1)
S = Scalar.monomial(s=1)
V = Scalar.monomial(v=1)
Z = S - S ** -1
DELTA = (V ** -1 - V) / Z
CURL = A * V ** -1


def theta_involution(x: Scalar) -> Scalar:
    """Rank-level duality involution on scalars: s -> 1/s, a -> -a, v -> -v."""
    return x.theta()


def qint(k: int) -> Scalar:
    """The quantum integer (s^k - s^-k)/(s - 1/s) as a Laurent polynomial."""
    if k == 0:
        return ZERO
    if k < 0:
        return -qint(-k)
    return Scalar.from_terms({(0, k - 1 - 2 * t, 0): 1 for t in range(k)})


def qfact(k: int) -> Scalar:
    """Quantum factorial qint(1) * ... * qint(k)."""
    if k < 0:
        raise ValueError(f"qfact of a negative number: {k}")
    result = ONE
    for j in range(2, k + 1):
        result = result * qint(j)
    return result


def qbinom(m: int, l: int) -> Scalar:
    """Quantum binomial qfact(m) / (qfact(l) qfact(m - l))."""
    if m < 0 or l < 0:
        raise ValueError(f"qbinom with a negative argument: ({m}, {l})")
    if l > m:
        return ZERO
    value = qfact(m) / (qfact(l) * qfact(m - l))
    if not value.is_polynomial:
        raise IntegralityViolation(f"qbinom({m}, {l}) is not a polynomial")
    return value.canonical()


def qbinom_product(m: int, l: int) -> Scalar:
    """Quantum binomial as a product over the cells of an l x (m-l) box."""
    value = ONE
    for i in range(1, l + 1):
        for j in range(l + 1, m + 1):
            value = value * qint(j - i + 1) / qint(j - i)
    return value


class QLaurent:
    """Laurent polynomial in q with exponents k/D.

    ``terms`` maps the integer numerator k of each exponent to its rational
    coefficient. Zero coefficients are never stored.
    """

    __slots__ = ("_denom", "_terms")

    def __init__(self, terms: Mapping[int, Number] = None, denom: int = 1):
        if denom < 1:
            raise ValueError(f"Exponent denominator must be positive: {denom}")
        self._denom = int(denom)
        self._terms = {
            int(k): Fraction(c) for k, c in (terms or {}).items() if c
        }

    @classmethod
    def from_exponents(cls, terms: Mapping[Fraction, Number]) -> "QLaurent":
        """Build from a map of rational exponent -> coefficient."""
        terms = {Fraction(e): c for e, c in terms.items() if c}
        denom = 1
        for e in terms:
            denom = denom * e.denominator // gcd(denom, e.denominator)
        return cls({int(e * denom): c for e, c in terms.items()}, denom)

    @classmethod
    def monomial(cls, exponent=0, coeff: Number = 1) -> "QLaurent":
        return cls.from_exponents({Fraction(exponent): coeff})

    @classmethod
    def qnum(cls, k) -> "QLaurent":
        """q^k - q^-k."""
        return cls.from_exponents({Fraction(k): 1, -Fraction(k): -1})

    @property
    def denom(self) -> int:
        return self._denom

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_integral(self) -> bool:
        """True if every exponent is an integer."""
        return all(k % self._denom == 0 for k in self._terms)

    def exponents(self) -> Dict[Fraction, Fraction]:
        return {Fraction(k, self._denom): c for k, c in self._terms.items()}

    def rescale(self, denom: int) -> "QLaurent":
        if denom % self._denom:
            raise ValueError(f"{denom} is not a multiple of {self._denom}")
        factor = denom // self._denom
        return QLaurent(
            {k * factor: c for k, c in self._terms.items()}, denom
        )

    def reduced(self) -> "QLaurent":
        """The same value over the smallest exponent denominator."""
        g = self._denom
        for k in self._terms:
            g = gcd(g, k)
        if g == 1:
            return self
        return QLaurent(
            {k // g: c for k, c in self._terms.items()}, self._denom // g
        )

    def _common(self, other: "QLaurent"):
        denom = self._denom * other._denom // gcd(self._denom, other._denom)
        return self.rescale(denom), other.rescale(denom), denom

    def __add__(self, other):
        other = _coerce_q(other)
        if other is NotImplemented:
            return NotImplemented
        x, y, denom = self._common(other)
        terms = dict(x._terms)
        for k, c in y._terms.items():
            terms[k] = terms.get(k, 0) + c
        return QLaurent(terms, denom)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent({k: -c for k, c in self._terms.items()}, self._denom)

    def __sub__(self, other):
        other = _coerce_q(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_q(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, QFraction):
            return NotImplemented
        other = _coerce_q(other)
        if other is NotImplemented:
            return NotImplemented
        x, y, denom = self._common(other)
        terms: Dict[int, Fraction] = {}
        for k1, c1 in x._terms.items():
            for k2, c2 in y._terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return QLaurent(terms, denom)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            if len(self._terms) != 1:
                raise IntegralityViolation(
                    "only monomials have Laurent inverses"
                )
            ((k, c),) = self._terms.items()
            return QLaurent({-k: 1 / c}, self._denom) ** (-exponent)
        result = QLaurent({0: 1})
        for _ in range(exponent):
            result = result * self
        return result

    def __truediv__(self, other):
        return QFraction(self, _coerce_q(other))

    def __eq__(self, other):
        other = _coerce_q(other)
        if other is NotImplemented:
            return NotImplemented
        x, y = self.reduced(), other.reduced()
        return x._denom == y._denom and x._terms == y._terms

    def __hash__(self):
        x = self.reduced()
        return hash((x._denom, frozenset(x._terms.items())))

    def invert_q(self) -> "QLaurent":
        """Substitute q -> 1/q."""
        return QLaurent({-k: c for k, c in self._terms.items()}, self._denom)

    def evaluate(self, N: int, conjugate: bool = False, bits=DEFAULT_BITS):
        """Value at q = exp(+-i pi/N) as an mpmath complex."""
        ctx = root_context(bits)
        return _evaluate_terms(ctx, self, N, conjugate)

    def to_json(self) -> dict:
        return {
            "var": "q",
            "D": self._denom,
            "terms": [
                {"e": k, "c": _coeff_str(self._terms[k])}
                for k in sorted(self._terms)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QLaurent":
        return cls(
            {item["e"]: _parse_coeff(item["c"]) for item in data["terms"]},
            data["D"],
        )

    def to_expr(self):
        q = Symbol("q")
        return sum(
            (
                Rational(c.numerator, c.denominator)
                * q ** Rational(k, self._denom)
                for k, c in sorted(self._terms.items())
            ),
            Rational(0),
        )

    def __str__(self):
        return str(self.to_expr())

    def __repr__(self):
        return f"QLaurent({self})"


def _coerce_q(value):
    if isinstance(value, QLaurent):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return QLaurent({0: value})
    return NotImplemented


def _to_x_poly(x: QLaurent):
    low = min(x._terms)
    return _X_RING.from_dict(
        {(k - low,): _qq(c) for k, c in x._terms.items()}
    ), low


def _from_x_poly(poly, low: int, denom: int) -> QLaurent:
    return QLaurent(
        {e[0] + low: _fraction(c) for e, c in poly.items()}, denom
    )


class QFraction:
    """A quotient num/den of QLaurent values.

    The pair is kept reduced: common factors are cancelled by univariate
    gcd in q^(1/D) and the denominator is monic with lowest exponent 0,
    so an exact Laurent polynomial always has denominator 1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _coerce_q(num) if not isinstance(num, QLaurent) else num
        den = _coerce_q(den) if not isinstance(den, QLaurent) else den
        if den.is_zero:
            raise SpecializationPole("denominator specializes to zero")
        if num.is_zero:
            self.num, self.den = QLaurent(), QLaurent({0: 1})
            return
        num, den, denom = num._common(den)
        p, p_low = _to_x_poly(num)
        d, d_low = _to_x_poly(den)
        g = p.gcd(d)
        if not g.is_ground:
            p, d = p.exquo(g), d.exquo(g)
        lc = d.LC
        p, d = p.quo_ground(lc), d.quo_ground(lc)
        self.num = _from_x_poly(p, p_low - d_low, denom)
        self.den = _from_x_poly(d, 0, denom)

    @property
    def is_laurent(self) -> bool:
        return self.den == 1

    def as_laurent(self) -> QLaurent:
        """The value as a QLaurent, or IntegralityViolation."""
        if not self.is_laurent:
            raise IntegralityViolation(
                f"{self} is not a Laurent polynomial in q"
            )
        return self.num

    @property
    def is_integral(self) -> bool:
        return self.num.is_integral and self.den.is_integral

    def _pair(self, other):
        if isinstance(other, QFraction):
            return other
        other = _coerce_q(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(other)

    def __add__(self, other):
        other = self._pair(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return QFraction(-self.num, self.den)

    def __sub__(self, other):
        other = self._pair(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._pair(other)
        if other is NotImplemented:
            return NotImplemented
        return QFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._pair(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero:
            raise ScalarDivisionError("division of a QFraction by zero")
        return QFraction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._pair(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._pair(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def invert_q(self) -> "QFraction":
        return QFraction(self.num.invert_q(), self.den.invert_q())

    def evaluate(self, N: int, conjugate: bool = False, bits=DEFAULT_BITS):
        return eval_root(self, N, conjugate=conjugate, bits=bits).value

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "QFraction":
        return cls(
            QLaurent.from_json(data["num"]), QLaurent.from_json(data["den"])
        )

    def to_expr(self):
        return self.num.to_expr() / self.den.to_expr()

    def __str__(self):
        if self.is_laurent:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QFraction({self})"


def _specialize(terms: Mapping[Monomial, Fraction], delta: int) -> QLaurent:
    denom = abs(delta)
    out: Dict[int, Fraction] = {}
    for (alpha, gamma, beta), c in terms.items():
        # exponent of q is -alpha/delta - delta*beta + gamma
        k = Fraction(-alpha * denom, delta) + denom * (gamma - delta * beta)
        out[int(k)] = out.get(int(k), 0) + c
    return QLaurent(out, denom)


def psi_delta(x: Scalar, delta: int) -> QFraction:
    """Specialize s -> q, v -> q^-delta, a -> q^(-1/delta).

    Numerator and denominator are specialized separately and the quotient
    is reduced.

    Raises:
        ValueError: if delta is zero.
        SpecializationPole: if the denominator specializes to zero.
    """
    if delta == 0:
        raise ValueError("psi_delta needs a nonzero delta")
    num = _specialize(x.numerator_terms(), delta)
    den = _specialize(x.denominator_terms(), delta)
    if den.is_zero:
        raise SpecializationPole(
            f"denominator of {x} vanishes under psi_{delta}"
        )
    return QFraction(num, den)


@dataclass(frozen=True)
class RootValue:
    """A complex number obtained at q = exp(+-i pi/N)."""

    value: mpmath.mpc
    N: int
    D: int
    conjugate: bool
    bits: int

    def __complex__(self):
        return complex(self.value)

    def __abs__(self):
        return abs(self.value)

    def to_json(self) -> dict:
        digits = max(15, int(self.bits * 0.30103) - 5)
        ctx = root_context(self.bits)
        return {
            "re": ctx.nstr(ctx.mpf(self.value.real), digits),
            "im": ctx.nstr(ctx.mpf(self.value.imag), digits),
            "N": self.N,
            "conjugate": self.conjugate,
        }


def root_context(bits: int) -> mpmath.MPContext:
    """A fresh mpmath context at the given binary precision."""
    ctx = mpmath.MPContext()
    ctx.prec = int(bits)
    return ctx


def _evaluate_terms(ctx, x: QLaurent, N: int, conjugate: bool):
    sign = -1 if conjugate else 1
    total = ctx.mpc(0)
    for k, c in x._terms.items():
        phase = ctx.expjpi(ctx.mpf(sign * k) / (N * x._denom))
        total += ctx.mpf(c.numerator) / c.denominator * phase
    return total


def _largest_coefficient(ctx, x: QLaurent):
    return max(
        (abs(ctx.mpf(c.numerator) / c.denominator) for c in x._terms.values()),
        default=ctx.mpf(0),
    )


def eval_root(
    x,
    N: int,
    conjugate: bool = False,
    bits: int = DEFAULT_BITS,
    require_integral: bool = False,
) -> RootValue:
    """Evaluate x at q = exp(i pi/N), or at its conjugate.

    Fractional powers q^(k/D) use the principal branch exp(i pi k/(N D)).

    Args:
        x: a QFraction, QLaurent or number.
        N: the root parameter, at least 2.
        conjugate: evaluate at exp(-i pi/N) instead.
        bits: working precision, at least 128.
        require_integral: refuse values with fractional exponents.

    Raises:
        PoleAtRoot: if the denominator vanishes at the root.
        IntegralityViolation: if require_integral and an exponent is
            fractional.
    """
    if N < 2:
        raise ValueError(f"Root parameter must be at least 2: {N}")
    if bits < 128:
        raise ValueError(f"Precision must be at least 128 bits: {bits}")
    if not isinstance(x, QFraction):
        x = QFraction(x)
    if require_integral and not x.is_integral:
        raise IntegralityViolation(
            f"fractional exponents in {x}; the branch would matter"
        )
    ctx = root_context(bits)
    num = _evaluate_terms(ctx, x.num, N, conjugate)
    den = _evaluate_terms(ctx, x.den, N, conjugate)
    scale = _largest_coefficient(ctx, x.den)
    if abs(den) < ctx.mpf(POLE_THRESHOLD) * scale:
        raise PoleAtRoot(f"denominator of {x} vanishes at q = exp(i pi/{N})")
    denom = x.num.denom * x.den.denom // gcd(x.num.denom, x.den.denom)
    return RootValue(num / den, N, denom, conjugate, bits)
