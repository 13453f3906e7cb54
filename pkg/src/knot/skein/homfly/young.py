"""

Young diagrams and the idempotents of the Hecke algebra they label.

The minimal idempotent of type lambda is built as

    E = F * w_rho * G * w_rho^-1

where F is the product of row symmetrizers placed side by side in
row-reading order, G the product of column antisymmetrizers in
column-reading order and w_rho the permutation braid carrying each cell
from its row-reading position to its column-reading position. E is a
quasi-idempotent, E^2 = alpha E, and y = E / alpha. Unnormalized
symmetrizers are used throughout so that E has Laurent coefficients.

"""

from __future__ import annotations

import json
import os
import threading
import warnings
from dataclasses import dataclass, field
from math import factorial
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from knot.skein.homfly._errors import DegenerateIdempotent, NotRepresentable
from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.algebra import (
    ONE,
    Scalar,
    qfact,
    qint,
)
from knot.skein.homfly.hecke import (
    HeckeElement,
    Permutation,
    all_permutations,
    inverse_basis,
    length,
)

logger = get_homfly_logger()

CACHE_ENV = "SKEIN_CACHE_DIR"


@dataclass(frozen=True)
class Partition:
    """A partition, stored as its nonzero parts in weakly decreasing order.

    Example:
        >>> Partition((2, 1)).conjugate
        Partition(parts=(2, 1))
        >>> Partition((3,)).n
        3
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"Negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(p for p in parts if p))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse '2,1' or '[2, 1]'."""
        text = text.strip().strip("[]")
        if not text:
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))

    def __len__(self):
        return len(self.parts)

    def part(self, i: int) -> int:
        """lambda_i for a 1-based row index, 0 past the last row."""
        return self.parts[i - 1] if 0 < i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(
                sum(1 for p in self.parts if p > j)
                for j in range(self.parts[0])
            )
        )

    @property
    def cells(self) -> List[Tuple[int, int]]:
        """0-based (row, column) cells in row-reading order."""
        return [(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def content(self, cell: Tuple[int, int]) -> int:
        return cell[1] - cell[0]

    def hook(self, cell: Tuple[int, int]) -> int:
        i, j = cell
        return self.parts[i] + self.conjugate.parts[j] - i - j - 1

    @property
    def hook_lengths(self) -> List[int]:
        conj = self.conjugate.parts
        return [
            self.parts[i] + conj[j] - i - j - 1 for i, j in self.cells
        ]

    @property
    def n(self) -> int:
        """Sum of the contents of all cells."""
        return sum(j - i for i, j in self.cells)

    def n_from_parts(self) -> int:
        """The content sum as sum_i i (lambda'_i - lambda_i)."""
        conj = self.conjugate
        rows = max(len(self.parts), len(conj.parts))
        return sum(
            i * (conj.part(i) - self.part(i)) for i in range(1, rows + 1)
        )

    @property
    def dimension(self) -> int:
        """Dimension of the irreducible symmetric group module."""
        product = 1
        for h in self.hook_lengths:
            product *= h
        return factorial(self.size) // product

    def quantum_hook_product(self) -> Scalar:
        value = ONE
        for h in self.hook_lengths:
            value = value * qint(h)
        return value

    def row_positions(self) -> Dict[Tuple[int, int], int]:
        return {cell: p for p, cell in enumerate(self.cells)}

    def column_positions(self) -> Dict[Tuple[int, int], int]:
        conj = self.conjugate
        return {
            (i, j): p
            for p, (j, i) in enumerate(conj.cells)
        }

    def to_json(self) -> list:
        return list(self.parts)

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def partitions_of_size(r: int) -> List[Partition]:
    """All partitions of r, in reverse lexicographic order."""
    if r < 0:
        raise ValueError(f"No partitions of a negative number: {r}")

    def _below(rest: int, largest: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in _below(rest - first, first):
                yield (first,) + tail

    return [Partition(parts) for parts in _below(r, r)]


def symmetrizer(r: int, normalized: bool = True) -> HeckeElement:
    """The row symmetrizer f_r in H_r.

    Unnormalized, this is sum over pi of (a/s)^-l(pi) w_pi, which squares
    to s^(r(r-1)/2) [r]! times itself.
    """
    if r < 1:
        raise ValueError(f"symmetrizer needs r >= 1: {r}")
    terms = {
        pi: Scalar.monomial(a=-length(pi), s=length(pi))
        for pi in all_permutations(r)
    }
    element = HeckeElement(r, terms)
    if not normalized:
        return element
    return element.scale(Scalar.monomial(s=-r * (r - 1) // 2) / qfact(r))


def antisymmetrizer(r: int, normalized: bool = True) -> HeckeElement:
    """The column antisymmetrizer g_r in H_r, the Theta image of f_r."""
    if r < 1:
        raise ValueError(f"antisymmetrizer needs r >= 1: {r}")
    terms = {
        pi: Scalar.monomial(
            a=-length(pi), s=-length(pi), coeff=(-1) ** length(pi)
        )
        for pi in all_permutations(r)
    }
    element = HeckeElement(r, terms)
    if not normalized:
        return element
    return element.scale(Scalar.monomial(s=r * (r - 1) // 2) / qfact(r))


def _side_by_side(blocks: Sequence[HeckeElement]) -> HeckeElement:
    result = blocks[0]
    for block in blocks[1:]:
        result = result.tensor(block)
    return result


def _conjugating_permutation(partition: Partition) -> Permutation:
    rows = partition.row_positions()
    columns = partition.column_positions()
    rho = [0] * partition.size
    for cell, p in columns.items():
        rho[p] = rows[cell]
    return tuple(rho)


@dataclass
class Idempotent:
    """The minimal idempotent y of a partition.

    ``unnormalized`` is the quasi-idempotent E with Laurent coefficients
    and ``alpha`` the scalar with E^2 = alpha E, so that y = E / alpha.
    """

    partition: Partition
    unnormalized: HeckeElement
    alpha: Scalar
    _element: Optional[HeckeElement] = field(default=None, repr=False)

    @property
    def element(self) -> HeckeElement:
        if self._element is None:
            self._element = self.unnormalized.scale(self.alpha.inverse())
        return self._element

    @property
    def strands(self) -> int:
        return self.partition.size

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "alpha": self.alpha.to_json(),
            "unnormalized": self.unnormalized.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "Idempotent":
        return cls(
            Partition(tuple(data["partition"])),
            HeckeElement.from_json(data["unnormalized"]),
            Scalar.from_json(data["alpha"]),
        )


def _construct(partition: Partition) -> Idempotent:
    if not partition.parts:
        raise ValueError("The empty partition has no idempotent")
    r = partition.size
    rows = _side_by_side(
        [symmetrizer(p, normalized=False) for p in partition.parts]
    )
    columns = _side_by_side(
        [
            antisymmetrizer(p, normalized=False)
            for p in partition.conjugate.parts
        ]
    )
    rho = _conjugating_permutation(partition)
    E = (
        rows
        * HeckeElement.basis(rho)
        * columns
        * inverse_basis(rho)
    )
    alpha = (E * E).ratio_to(E)
    if alpha is None or alpha.is_zero or E.is_zero:
        raise DegenerateIdempotent(
            f"E^2 is not a nonzero multiple of E for {partition}"
        )
    logger.debug(
        "Built idempotent %s on %s strands with %s terms", partition, r, len(E)
    )
    return Idempotent(partition, E, alpha)


_CACHE: Dict[Tuple[int, ...], Idempotent] = {}
_CACHE_LOCK = threading.Lock()


def _cache_file(cache_dir, partition: Partition) -> Path:
    name = "_".join(str(p) for p in partition.parts)
    return Path(cache_dir) / f"idempotent_{name}.json"


def _read_cached(path: Path) -> Optional[Idempotent]:
    try:
        with open(path, "r", encoding="utf-8") as stream:
            return Idempotent.from_json(json.load(stream))
    except (OSError, ValueError, KeyError, TypeError) as err:
        logger.warning("Ignoring unreadable idempotent cache %s: %s", path, err)
        return None


def _write_cached(path: Path, idempotent: Idempotent):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as stream:
            json.dump(idempotent.to_json(), stream)
        tmp.replace(path)
    except OSError as err:
        logger.warning("Could not write idempotent cache %s: %s", path, err)


def build_idempotent(partition, cache_dir=None) -> Idempotent:
    """The minimal idempotent of type partition.

    Results are cached in memory and, when a cache directory is given or
    SKEIN_CACHE_DIR is set, as JSON files.

    Args:
        partition: a Partition or a sequence of parts.
        cache_dir: directory for the file cache.

    Raises:
        DegenerateIdempotent: if E^2 is not a nonzero multiple of E.
    """
    if not isinstance(partition, Partition):
        partition = Partition(tuple(partition))
    key = partition.parts
    with _CACHE_LOCK:
        cached = _CACHE.get(key)
    if cached is not None:
        logger.debug("Idempotent cache hit for %s", partition)
        return cached

    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    idempotent = None
    if cache_dir:
        path = _cache_file(cache_dir, partition)
        if path.exists():
            idempotent = _read_cached(path)
    if idempotent is None:
        idempotent = _construct(partition)
        if cache_dir:
            _write_cached(_cache_file(cache_dir, partition), idempotent)

    with _CACHE_LOCK:
        return _CACHE.setdefault(key, idempotent)


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()


def twist_eigenvalue(partition: Partition) -> Scalar:
    """theta = a^(|lambda|^2) v^(-|lambda|) s^(2 n(lambda))."""
    r = partition.size
    return Scalar.monomial(a=r * r, s=2 * partition.n, v=-r)


def full_twist_word(strands: int) -> List[int]:
    return [i for _ in range(strands) for i in range(1, strands)]


def twist_action(partition: Partition) -> Scalar:
    """The scalar by which the full positive twist acts on y_lambda.

    Computed in H_|lambda|, not from a closed formula.
    """
    idempotent = build_idempotent(partition)
    E = idempotent.unnormalized
    ratio = E.mul_word(full_twist_word(partition.size)).ratio_to(E)
    if ratio is None:
        raise DegenerateIdempotent(
            f"The full twist does not act by a scalar on {partition}"
        )
    return ratio


def partition_to_weight(partition: Partition, m: int, n: int):
    """Highest weight of the sl(m|n) module cut out by y_lambda.

    Returns None when the module is zero, that is when lambda_(m+1) > n.
    For n = 0 the sl(m) weight (lambda_1 - lambda_2, ...) is returned.
    """
    if m < 1 or n < 0:
        raise ValueError(f"Need m >= 1 and n >= 0, got ({m}, {n})")
    lam = partition.part
    if lam(m + 1) > n:
        return None
    head = [lam(i) - lam(i + 1) for i in range(1, m)]
    if n == 0:
        return tuple(head)
    conj = partition.conjugate.part
    if lam(m) >= n:
        tail = [lam(m) - conj(1) + m] + [
            conj(i) - conj(i + 1) for i in range(1, n)
        ]
    else:
        dd = [0] + [max(conj(i) - m, 0) for i in range(1, n + 1)]
        tail = [lam(m) - dd[1]] + [dd[i] - dd[i + 1] for i in range(1, n)]
    return tuple(head + tail)


def partition_for_color(m: int, n: int, c: Sequence[int], a: int) -> Partition:
    """The partition whose idempotent gives the module of weight nu^c_a.

    With l' - l = a - n + sum(c[m-1:]), the smallest nonnegative pair is
    chosen and

        lambda = [(n + l', ..., n + l') + mu_1] + [n] * l + mu_2'

    Raises:
        NotRepresentable: for n < 1, for atypical colors with c = 0, or if
            the construction gives the empty partition.
    """
    c = tuple(int(x) for x in c)
    if n < 1:
        raise NotRepresentable(f"Colors need a super part, got n = {n}")
    if len(c) != m + n - 2:
        raise ValueError(f"Expected {m + n - 2} entries in c, got {len(c)}")
    if any(x < 0 for x in c):
        raise ValueError(f"Negative entry in c: {c}")
    if not any(c):
        if a < 1:
            raise NotRepresentable(
                f"Color {a} is atypical for sl({m}|{n}) with c = 0"
            )
    else:
        warnings.warn(
            f"Typicality of color {a} with c = {c} is not decided",
            stacklevel=2,
        )
    excess = a - n + sum(c[m - 1 :])
    l_prime, l = (excess, 0) if excess >= 0 else (0, -excess)
    mu1 = [sum(c[i - 1 : m - 1]) for i in range(1, m + 1)]
    mu2 = [sum(c[m - 2 + i :]) for i in range(1, n + 1)]
    rows = [n + l_prime + x for x in mu1] + [n] * l
    rows += list(Partition(tuple(x for x in mu2 if x)).conjugate.parts)
    partition = Partition(tuple(rows))
    if not partition.parts:
        raise NotRepresentable(f"No partition for color {a} and c = {c}")
    return partition


def quantum_dimension(partition: Partition, m: int) -> Scalar:
    """The sl(m) quantum dimension prod <m + content> / <hook> in s."""
    value = ONE
    for cell, h in zip(partition.cells, partition.hook_lengths):
        value = value * qint(m + partition.content(cell)) / qint(h)
    return value.canonical()


def group_algebra_product(x: Dict, y: Dict) -> Dict:
    """Product in the group algebra of S_r, in the convention of hecke."""
    out: Dict = {}
    for pi, c in x.items():
        for tau, d in y.items():
            key = tuple(pi[t] for t in tau)
            out[key] = out.get(key, 0) + c * d
    return {k: c for k, c in out.items() if c}


def classical_limit(x) -> Dict:
    """Image under a, s, v -> 1 in the group algebra of S_r.

    Accepts a HeckeElement or an Idempotent; the latter is evaluated from
    its Laurent form.
    """
    if isinstance(x, Idempotent):
        scale = 1 / x.alpha.classical_value()
        x = x.unnormalized
    else:
        scale = 1
    out = {}
    for pi, c in x.terms.items():
        value = c.classical_value() * scale
        if value:
            out[pi] = value
    return out
