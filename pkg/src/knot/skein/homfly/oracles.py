"""

Independent cross-checks for the Hecke engine.

naive_skein_homfly
    Resolves the crossings of the closed braid diagram with the skein
    relation until every diagram is descending, then values the trivial
    links with the curl and circle relations.
alexander_polynomial, alexander_knot, conway_knot
    One-variable Alexander and Conway polynomials from the reduced Burau
    representation.
multivariable_alexander
    The multivariable Alexander polynomial from Fox derivatives of the Artin
    action, defined up to multiplication by +-(monomial).

"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import (
    Expr,
    Integer,
    Matrix,
    Poly,
    Symbol,
    cancel,
    eye,
    fraction,
    symbols,
)

from knot.skein.homfly._errors import BudgetExceeded, NotAKnot
from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.algebra import A, CURL, DELTA, Z, Scalar
from knot.skein.homfly.braids import BraidWord, LinkPresentation, analyze_closure

logger = get_homfly_logger()

MAX_SKEIN_CROSSINGS = 12
T = Symbol("t")


# Naive skein resolution


def _first_bad_crossing(b: BraidWord, link: LinkPresentation):
    """Index of the first crossing first met from below, or None."""
    visited = [False] * len(b.letters)
    for strands in link.components:
        start = strands[0]
        p = start
        while True:
            for t, g in enumerate(b.letters):
                i = abs(g) - 1
                if p not in (i, i + 1):
                    continue
                entering_left = p == i
                if not visited[t]:
                    visited[t] = True
                    if entering_left != (g > 0):
                        return t
                p = i + 1 if entering_left else i
            if p == start:
                break
    return None


def naive_skein_homfly(b: BraidWord) -> Scalar:
    """Framed HOMFLY-PT of a braid closure by direct skein resolution.

    Raises:
        BudgetExceeded: for more than 12 crossings.
    """
    if len(b.letters) > MAX_SKEIN_CROSSINGS:
        raise BudgetExceeded(
            f"{len(b.letters)} crossings exceed the skein oracle limit "
            f"of {MAX_SKEIN_CROSSINGS}"
        )
    memo: Dict[Tuple[int, ...], Scalar] = {}
    a2 = A * A
    az = A * Z
    a_inv2 = A ** -2
    a_inv_z = (A ** -1) * Z

    def value(letters: Tuple[int, ...]) -> Scalar:
        if letters in memo:
            return memo[letters]
        word = BraidWord(b.strands, letters)
        link = analyze_closure(word)
        t = _first_bad_crossing(word, link)
        if t is None:
            writhe = sum(link.linking_matrix[c][c] for c in range(len(link.components)))
            result = DELTA ** len(link.components) * CURL ** writhe
        else:
            g = letters[t]
            switched = letters[:t] + (-g,) + letters[t + 1 :]
            smoothed = letters[:t] + letters[t + 1 :]
            if g > 0:
                result = a2 * value(switched) + az * value(smoothed)
            else:
                result = a_inv2 * value(switched) - a_inv_z * value(smoothed)
        memo[letters] = result
        return result

    result = value(b.letters)
    logger.debug("Skein oracle resolved %s diagrams for %s", len(memo), b)
    return result


# Alexander polynomials


@dataclass(frozen=True)
class AlexanderValue:
    """A (multivariable) Alexander or Conway invariant as a sympy expression.

    ``normalized`` is True when the representative is exact (knots), False
    when it is only defined up to +-(monomial).
    """

    variables: Tuple[Symbol, ...]
    expr: Expr
    normalized: bool

    def __call__(self, *values):
        return self.expr.subs(dict(zip(self.variables, values)))

    def terms(self) -> Dict[Fraction, Fraction]:
        """Exponent -> coefficient of a one-variable value."""
        if len(self.variables) != 1:
            raise ValueError("terms() needs a one-variable value")
        return _laurent_terms(self.expr, self.variables[0])

    def __str__(self):
        return str(self.expr)

    def to_json(self) -> dict:
        return {
            "vars": [str(v) for v in self.variables],
            "expr": str(self.expr),
            "normalized": self.normalized,
        }


def _laurent_terms(expr, var) -> Dict[Fraction, Fraction]:
    num, den = fraction(cancel(expr))
    den_terms = Poly(den, var).terms()
    if len(den_terms) != 1:
        raise ValueError(f"{expr} is not a Laurent polynomial in {var}")
    ((shift,), scale) = den_terms[0]
    out = {}
    if num == 0:
        return out
    for (e,), c in Poly(num, var).terms():
        out[Fraction(e - shift)] = Fraction(int(c.p), int(c.q)) / Fraction(
            int(scale.p), int(scale.q)
        )
    return out


def _from_terms(terms: Dict[Fraction, Fraction], var) -> Expr:
    total = Integer(0)
    for e, c in sorted(terms.items()):
        total += Integer(c.numerator) / c.denominator * var ** e
    return total


def _burau_generator(strands: int, g: int) -> Matrix:
    size = strands - 1
    k = abs(g) - 1
    M = eye(size)
    M[k, k] = -T
    if k >= 1:
        M[k - 1, k] = T
    if k + 1 < size:
        M[k + 1, k] = 1
    if g < 0:
        M = M.inv().applyfunc(cancel)
    return M


def burau_matrix(b: BraidWord) -> Matrix:
    """Reduced Burau matrix of a braid."""
    B = eye(b.strands - 1)
    for g in b.letters:
        B = (B * _burau_generator(b.strands, g)).applyfunc(cancel)
    return B


def alexander_polynomial(b: BraidWord) -> AlexanderValue:
    """One-variable Alexander polynomial of the closure, up to units."""
    if b.strands == 1:
        return AlexanderValue((T,), Integer(1), False)
    B = burau_matrix(b)
    det = (eye(b.strands - 1) - B).det()
    expr = cancel(det * (T - 1) / (T ** b.strands - 1))
    terms = _laurent_terms(expr, T)
    if terms:
        low = min(terms)
        terms = {e - low: c for e, c in terms.items()}
        if terms[max(terms)] < 0:
            terms = {e: -c for e, c in terms.items()}
    return AlexanderValue((T,), _from_terms(terms, T), False)


def alexander_knot(b: BraidWord) -> AlexanderValue:
    """Alexander polynomial of a knot, symmetric with value 1 at t = 1.

    Raises:
        NotAKnot: if the closure has several components.
    """
    if not analyze_closure(b).is_knot:
        raise NotAKnot(f"{b} closes to a link, not a knot")
    terms = alexander_polynomial(b).terms()
    center = (min(terms) + max(terms)) / 2
    terms = {e - center: c for e, c in terms.items()}
    if sum(terms.values()) < 0:
        terms = {e: -c for e, c in terms.items()}
    return AlexanderValue((T,), _from_terms(terms, T), True)


def conway_knot(b: BraidWord) -> AlexanderValue:
    """Conway function Delta(t^2) / (t - 1/t) of a knot."""
    delta = alexander_knot(b).expr
    return AlexanderValue(
        (T,), cancel(delta.subs(T, T ** 2) / (T - 1 / T)), True
    )


def determinant(b: BraidWord) -> int:
    """|Delta(-1)|."""
    return abs(int(alexander_polynomial(b).expr.subs(T, -1)))


def _reduce(word: List[int]) -> List[int]:
    out: List[int] = []
    for letter in word:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return out


def _invert(word: List[int]) -> List[int]:
    return [-x for x in reversed(word)]


def artin_images(b: BraidWord) -> List[List[int]]:
    """Images of the free generators x_1..x_n under the braid.

    Words are lists of signed 1-based generator indices.
    """
    images = [[j + 1] for j in range(b.strands)]
    for g in b.letters:
        i = abs(g) - 1
        left, right = images[i], images[i + 1]
        if g > 0:
            images[i] = _reduce(left + right + _invert(left))
            images[i + 1] = left
        else:
            images[i] = right
            images[i + 1] = _reduce(_invert(right) + left + right)
    return images


def _fox_row(word: Sequence[int], weights: Sequence) -> List:
    prefix = Integer(1)
    row = [Integer(0)] * len(weights)
    for letter in word:
        k = abs(letter) - 1
        if letter > 0:
            row[k] += prefix
            prefix = prefix * weights[k]
        else:
            prefix = prefix / weights[k]
            row[k] -= prefix
    return row


def multivariable_alexander(link: LinkPresentation) -> AlexanderValue:
    """Multivariable Alexander polynomial, one variable per component.

    The value is only defined up to +-(monomial).
    """
    k = link.num_components
    variables = symbols(f"t1:{k + 1}")
    owner = link.strand_components
    weights = [variables[c] for c in owner]
    n = link.braid.strands
    images = artin_images(link.braid)
    J = Matrix([_fox_row(images[j], weights) for j in range(n)])
    minor = (J - eye(n))[: n - 1, : n - 1]
    D = cancel(minor.det()) if n > 1 else Integer(1)
    if k == 1:
        return AlexanderValue(variables, D, False)
    value = cancel(D / (weights[n - 1] - 1))
    return AlexanderValue(variables, value, False)


def unit_equivalent(x, y, variables: Sequence[Symbol]) -> bool:
    """True if x / y is +-(monomial) in the given variables."""
    x, y = cancel(x), cancel(y)
    if x == 0 or y == 0:
        return x == y
    num, den = fraction(cancel(x / y))
    num_terms = Poly(num, *variables).terms()
    den_terms = Poly(den, *variables).terms()
    if len(num_terms) != 1 or len(den_terms) != 1:
        return False
    return abs(num_terms[0][1]) == abs(den_terms[0][1])
