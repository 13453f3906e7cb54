"""

The Hecke algebra H_n in the basis of positive permutation braids.

A permutation is a one-line tuple ``pi`` of 0-based labels: ``pi[p]`` is
the top label of the strand that ends at bottom position ``p``. Appending
the generator sigma_i at the bottom swaps entries ``i`` and ``i + 1``.

The skein relation gives the quadratic relation

    sigma_i^2 = a z sigma_i + a^2,   z = s - 1/s,

so w_pi sigma_i = w_(pi s_i) when pi[i] < pi[i+1] and
w_pi sigma_i = a z w_pi + a^2 w_(pi s_i) otherwise.

"""

from __future__ import annotations

from itertools import permutations
from time import perf_counter
from typing import Dict, Iterable, List, Optional, Tuple

from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.algebra import A, CURL, DELTA, ONE, Z, Scalar

logger = get_homfly_logger()

Permutation = Tuple[int, ...]
Terms = Dict[Permutation, Scalar]

_AZ = A * Z
_A2 = A * A
_A_INV2 = A ** -2
_A_INV_Z = -(A ** -1) * Z


def identity_permutation(n: int) -> Permutation:
    return tuple(range(n))


def length(pi: Permutation) -> int:
    """Number of inversions, the crossing count of w_pi."""
    return sum(
        1
        for i in range(len(pi))
        for j in range(i + 1, len(pi))
        if pi[i] > pi[j]
    )


def _swap(pi: Permutation, i: int) -> Permutation:
    out = list(pi)
    out[i], out[i + 1] = out[i + 1], out[i]
    return tuple(out)


def reduced_word(pi: Permutation) -> List[int]:
    """0-based generator positions i_1..i_l with w_pi = sigma_i1...sigma_il."""
    current = list(pi)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(current) - 1):
            if current[i] > current[i + 1]:
                current[i], current[i + 1] = current[i + 1], current[i]
                swaps.append(i)
                changed = True
    return swaps[::-1]


def _accumulate(out: Terms, key: Permutation, value: Scalar):
    if key in out:
        total = out[key] + value
        if total.is_zero:
            del out[key]
        else:
            out[key] = total
    elif not value.is_zero:
        out[key] = value


def _mul_generator(terms: Terms, i: int, inverse: bool = False) -> Terms:
    out: Terms = {}
    for pi, c in terms.items():
        swapped = _swap(pi, i)
        ascent = pi[i] < pi[i + 1]
        if not inverse:
            if ascent:
                _accumulate(out, swapped, c)
            else:
                _accumulate(out, pi, c * _AZ)
                _accumulate(out, swapped, c * _A2)
        elif ascent:
            _accumulate(out, swapped, c * _A_INV2)
            _accumulate(out, pi, c * _A_INV_Z)
        else:
            _accumulate(out, swapped, c)
    return out


class HeckeElement:
    """A sparse linear combination of positive permutation braids.

    Args:
        strands: the n of H_n.
        terms: map from permutation to coefficient; zero coefficients are
            dropped.
    """

    __slots__ = ("strands", "_terms")

    def __init__(self, strands: int, terms: Optional[Dict] = None):
        if strands < 1:
            raise ValueError(f"H_n needs n >= 1: {strands}")
        self.strands = strands
        self._terms: Terms = {}
        for pi, c in (terms or {}).items():
            pi = tuple(pi)
            if sorted(pi) != list(range(strands)):
                raise ValueError(f"{pi} is not a permutation of {strands}")
            c = c if isinstance(c, Scalar) else Scalar(c)
            _accumulate(self._terms, pi, c)

    @classmethod
    def _wrap(cls, strands: int, terms: Terms) -> "HeckeElement":
        obj = cls.__new__(cls)
        obj.strands = strands
        obj._terms = terms
        return obj

    @classmethod
    def identity(cls, strands: int) -> "HeckeElement":
        return cls._wrap(strands, {identity_permutation(strands): ONE})

    @classmethod
    def basis(cls, pi: Iterable[int]) -> "HeckeElement":
        pi = tuple(pi)
        return cls(len(pi), {pi: ONE})

    @classmethod
    def generator(cls, strands: int, i: int) -> "HeckeElement":
        """sigma_i for a 1-based generator index, negative for the inverse."""
        return cls.identity(strands).mul_letter(i)

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def coefficient(self, pi: Iterable[int]) -> Scalar:
        return self._terms.get(tuple(pi), Scalar(0))

    # Multiplication by generators

    def mul_generator(self, i: int, inverse: bool = False) -> "HeckeElement":
        """Right multiplication by sigma_(i+1) for a 0-based position i."""
        if not 0 <= i < self.strands - 1:
            raise IndexError(f"generator position {i} out of range")
        return HeckeElement._wrap(
            self.strands, _mul_generator(self._terms, i, inverse)
        )

    def mul_letter(self, g: int) -> "HeckeElement":
        return self.mul_generator(abs(g) - 1, inverse=g < 0)

    def mul_word(self, letters: Iterable[int]) -> "HeckeElement":
        terms = self._terms
        for g in letters:
            if not 0 < abs(g) < self.strands:
                raise IndexError(f"generator {g} out of range")
            terms = _mul_generator(terms, abs(g) - 1, g < 0)
        return HeckeElement._wrap(self.strands, terms)

    # Ring structure

    def _check(self, other: "HeckeElement"):
        if other.strands != self.strands:
            raise ValueError(
                f"elements of H_{self.strands} and H_{other.strands}"
            )

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        terms = dict(self._terms)
        for pi, c in other._terms.items():
            _accumulate(terms, pi, c)
        return HeckeElement._wrap(self.strands, terms)

    def __neg__(self):
        return HeckeElement._wrap(
            self.strands, {pi: -c for pi, c in self._terms.items()}
        )

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = c if isinstance(c, Scalar) else Scalar(c)
        if c.is_zero:
            return HeckeElement._wrap(self.strands, {})
        return HeckeElement._wrap(
            self.strands, {pi: x * c for pi, x in self._terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        self._check(other)
        products: Dict[Permutation, Terms] = {
            identity_permutation(self.strands): self._terms
        }

        def times_basis(tau: Permutation) -> Terms:
            if tau not in products:
                i = next(j for j in range(len(tau) - 1) if tau[j] > tau[j + 1])
                products[tau] = _mul_generator(times_basis(_swap(tau, i)), i)
            return products[tau]

        out: Terms = {}
        for tau, c in other._terms.items():
            for pi, x in times_basis(tau).items():
                _accumulate(out, pi, x * c)
        return HeckeElement._wrap(self.strands, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int) -> "HeckeElement":
        result = HeckeElement.identity(self.strands)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if other.strands != self.strands:
            return False
        if self._terms.keys() != other._terms.keys():
            return False
        return all(c == other._terms[pi] for pi, c in self._terms.items())

    __hash__ = None  # type: ignore[assignment]

    def ratio_to(self, other: "HeckeElement") -> Optional[Scalar]:
        """The Scalar c with self = c * other, or None."""
        self._check(other)
        if self._terms.keys() != other._terms.keys():
            return None
        if not self._terms:
            return ONE
        key = next(iter(sorted(other._terms)))
        ratio = self._terms[key] / other._terms[key]
        for pi, c in self._terms.items():
            if c != ratio * other._terms[pi]:
                return None
        return ratio

    def tensor(self, other: "HeckeElement") -> "HeckeElement":
        """Side-by-side product, other placed to the right."""
        shift = self.strands
        out: Terms = {}
        for pi, c in self._terms.items():
            for tau, d in other._terms.items():
                out[pi + tuple(t + shift for t in tau)] = c * d
        return HeckeElement._wrap(self.strands + other.strands, out)

    # Gradings and involutions

    def apply_theta(self) -> "HeckeElement":
        return HeckeElement._wrap(
            self.strands, {pi: c.theta() for pi, c in self._terms.items()}
        )

    @property
    def fdeg(self) -> Optional[int]:
        """Framing degree if the element is homogeneous, else None."""
        degrees = set()
        for pi, c in self._terms.items():
            d = c.fdeg
            if d is None:
                return None
            degrees.add(d + length(pi))
            if len(degrees) > 1:
                return None
        return degrees.pop() if degrees else None

    def markov_eval(self) -> Scalar:
        return markov_eval(self)

    def to_json(self) -> dict:
        return {
            "n": self.strands,
            "terms": [
                {"perm": [p + 1 for p in pi], "c": self._terms[pi].to_json()}
                for pi in sorted(self._terms)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "HeckeElement":
        return cls(
            int(data["n"]),
            {
                tuple(p - 1 for p in item["perm"]): Scalar.from_json(item["c"])
                for item in data["terms"]
            },
        )

    def __repr__(self):
        body = " + ".join(
            f"({c})*w{[p + 1 for p in pi]}" for pi, c in sorted(self._terms.items())
        )
        return f"HeckeElement({self.strands}: {body or 0})"


def hecke_from_braid(b) -> HeckeElement:
    """The image of a braid word in H_n."""
    return HeckeElement.identity(b.strands).mul_word(b.letters)


def inverse_basis(pi: Iterable[int]) -> HeckeElement:
    """The Hecke inverse of w_pi, expanded letter by letter."""
    pi = tuple(pi)
    word = reduced_word(pi)
    return HeckeElement.identity(len(pi)).mul_word(
        -(i + 1) for i in reversed(word)
    )


def all_permutations(n: int) -> List[Permutation]:
    return list(permutations(range(n)))


def _reduce_level(levels: Dict[int, Terms], n: int) -> Dict[int, Terms]:
    """One conditional expectation H_n -> H_(n-1) on delta-graded terms."""
    top = n - 1
    out: Dict[int, Terms] = {}
    for power, terms in levels.items():
        groups: Dict[int, Terms] = {}
        for pi, c in terms.items():
            k = pi.index(top)
            alpha = pi[:k] + pi[k + 1 :]
            _accumulate(groups.setdefault(k, {}), alpha, c)
        for k, group in groups.items():
            if k == top:
                _merge(out.setdefault(power + 1, {}), group)
                continue
            reduced = {alpha: c * CURL for alpha, c in group.items()}
            for i in range(n - 3, k - 1, -1):
                reduced = _mul_generator(reduced, i)
            _merge(out.setdefault(power, {}), reduced)
    return {p: t for p, t in out.items() if t}


def _merge(out: Terms, terms: Terms):
    for pi, c in terms.items():
        _accumulate(out, pi, c)


def markov_eval(x: HeckeElement) -> Scalar:
    """The framed HOMFLY-PT value of the closure of x.

    Iterates the conditional expectation H_n -> H_(n-1), which sends
    x to delta*x for x in H_(n-1) and x sigma_(n-1) y to (a/v) x y for
    x, y in H_(n-1). Powers of delta are kept apart until the end so
    intermediate coefficients stay Laurent polynomials.
    """
    start = perf_counter()
    levels: Dict[int, Terms] = {0: dict(x._terms)}
    for n in range(x.strands, 1, -1):
        levels = _reduce_level(levels, n)
        logger.debug(
            "Trace level %s: %s terms",
            n - 1, sum(len(t) for t in levels.values()),
        )
    total = Scalar(0)
    for power, terms in levels.items():
        for c in terms.values():
            total = total + c * DELTA ** (power + 1)
    logger.debug(
        "Markov trace on %s strands in %.3fs", x.strands, perf_counter() - start
    )
    return total
