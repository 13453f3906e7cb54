"""

Specializations of colored HOMFLY-PT polynomials and the checks that tie
them together.

kashaev
    The Kashaev invariant K_N from the reduced HOMFLY-PT colored by the
    one-row partition [N-1], specialized with psi_2 at q = exp(i pi/N).
m_invariant
    The sl(m|1) multivariable invariant at integer colors a_i, computed
    from the reduced HOMFLY-PT colored by the m x a_i rectangles.
links_gould, links_gould_direct
    The Links-Gould invariant LG^(m|1)(q^-a, q) by two independent paths.

The ``verify_*`` functions compare two computations of one quantity and
return a SpecializationReport. Root-of-unity comparisons use a relative
tolerance; the others are exact.

"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter
from typing import Dict, List, Optional, Sequence, Tuple

from knot.skein.homfly._errors import BudgetExceeded, IntegralityViolation, NotAKnot
from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.algebra import (
    DEFAULT_BITS,
    ZERO,
    QFraction,
    QLaurent,
    RootValue,
    Scalar,
    eval_root,
    psi_delta,
    qbinom,
    root_context,
)
from knot.skein.homfly.braids import LinkPresentation
from knot.skein.homfly.colored import (
    ColoredLink,
    colored_homfly,
    colored_unknot,
    conjugate_coloring,
    reduced_colored_homfly,
)
from knot.skein.homfly.hecke import HeckeElement
from knot.skein.homfly.oracles import (
    alexander_knot,
    determinant,
    multivariable_alexander,
)
from knot.skein.homfly.young import (
    Partition,
    build_idempotent,
    partition_for_color,
    quantum_dimension,
    twist_eigenvalue,
)

logger = get_homfly_logger()

DEFAULT_MAX_STRANDS = 8
DEFAULT_TOLERANCE = 1e-9

_A_INV_V = Scalar.monomial(a=-1, v=1)


def modified_dimension(m: int, a) -> QFraction:
    """d(V_a) = 1 / prod_(i<m) (q^(a+i) - q^-(a+i))."""
    product = QLaurent({0: 1})
    for i in range(m):
        product = product * QLaurent.qnum(Fraction(a) + i)
    return QFraction(1, product)


def _check_budget(cl: ColoredLink, max_strands: Optional[int]):
    if max_strands is not None and cl.cabled_strands > max_strands:
        raise BudgetExceeded(
            f"cable of {cl.cabled_strands} strands exceeds {max_strands}"
        )


def kashaev(
    link: LinkPresentation,
    N: int,
    bits: int = DEFAULT_BITS,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> RootValue:
    """Kashaev's invariant K_N of a braid closure.

    Raises:
        BudgetExceeded: if the [N-1] cable has too many strands.
        PoleAtRoot: if the specialization has a pole at exp(i pi/N).
    """
    if N < 2:
        raise ValueError(f"Kashaev's invariant needs N >= 2: {N}")
    cl = ColoredLink.uniform(link, Partition((N - 1,)))
    _check_budget(cl, max_strands)
    reduced = reduced_colored_homfly(cl, 0, max_strands=max_strands)
    unframed = reduced * twist_eigenvalue(cl.colors[0]) ** (-link.fdeg)
    return eval_root(psi_delta(unframed, 2), N, bits=bits, require_integral=True)


@dataclass(frozen=True)
class MInvariantValue:
    """M^0 of sl(m|1) at q_i = q^(a_i).

    ``framing_exponent`` is the exponent of the monomial that turns F' into
    M^0; it has denominator dividing m - 1.
    """

    m: int
    colors: Tuple[int, ...]
    value: QFraction
    framing_exponent: Fraction
    cut: int = 0

    def evaluate(self, N: Optional[int] = None, bits: int = DEFAULT_BITS):
        """Value at q = exp(i pi/N), N defaulting to m."""
        return eval_root(self.value, N or self.m, bits=bits)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "colors": list(self.colors),
            "cut": self.cut + 1,
            "framing_exponent": str(self.framing_exponent),
            "value": self.value.to_json(),
        }


def _rectangles(m: int, colors: Sequence[int]) -> Tuple[Partition, ...]:
    return tuple(
        partition_for_color(m, 1, (0,) * (m - 1), a) for a in colors
    )


def framing_exponent(link: LinkPresentation, m: int, colors) -> Fraction:
    """m sum lk_ij a_i - r sum lk_ij a_i a_j, r = m / (1 - m).

    Both sums run over all ordered pairs, diagonal included.
    """
    r = Fraction(m, 1 - m)
    k = link.num_components
    lk = link.linking_matrix
    linear = sum(lk[i][j] * colors[i] for i in range(k) for j in range(k))
    return m * linear - r * link.framing_form(colors)


def m_invariant(
    link: LinkPresentation,
    m: int,
    colors: Sequence[int],
    cut: int = 0,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> MInvariantValue:
    """M^0 of sl(m|1) at integer colors.

    Args:
        link: the link.
        m: rank, at least 2.
        colors: one color a_i >= 1 per component.
        cut: 0-based component used for the reduced polynomial.

    Raises:
        NotRepresentable: for atypical colors.
        IntegralityViolation: if a link value is not a Laurent polynomial.
    """
    if m < 2:
        raise ValueError(f"sl(m|1) needs m >= 2: {m}")
    colors = tuple(int(a) for a in colors)
    if len(colors) != link.num_components:
        raise ValueError(
            f"{len(colors)} colors for {link.num_components} components"
        )
    cl = ColoredLink(link, _rectangles(m, colors))
    _check_budget(cl, max_strands)
    start = perf_counter()
    reduced = reduced_colored_homfly(cl, cut, max_strands=max_strands)
    exponent = framing_exponent(link, m, colors)
    value = (
        psi_delta(reduced, m - 1)
        * modified_dimension(m, colors[cut])
        * QLaurent.monomial(exponent)
    )
    if link.num_components >= 2 and not value.is_laurent:
        raise IntegralityViolation(
            f"M^0 of a {link.num_components}-component link is not a "
            f"Laurent polynomial: {value}"
        )
    logger.info(
        "M^0 for sl(%s|1) at colors %s in %.3fs",
        m, colors, perf_counter() - start,
    )
    return MInvariantValue(m, colors, value, exponent, cut)


def links_gould(
    link: LinkPresentation,
    m: int,
    a: int,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> QFraction:
    """LG^(m|1)(q^-a, q) as prod (q^(a+i) - q^-(a+i)) times M^0."""
    colors = (a,) * link.num_components
    value = m_invariant(link, m, colors, max_strands=max_strands).value
    return value / modified_dimension(m, a)


def links_gould_direct(
    link: LinkPresentation,
    m: int,
    a: int,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> QFraction:
    """LG^(m|1)(q^-a, q) as psi_(m-1) of the unframed reduced polynomial."""
    cl = ColoredLink.uniform(link, _rectangles(m, (a,))[0])
    _check_budget(cl, max_strands)
    reduced = reduced_colored_homfly(cl, 0, max_strands=max_strands)
    unframed = reduced * twist_eigenvalue(cl.colors[0]) ** (-link.fdeg)
    return psi_delta(unframed, m - 1)


# Reports


@dataclass
class SpecializationReport:
    """Two computations of one quantity and how far apart they are.

    ``deviation`` is None for exact comparisons that failed.
    """

    identity: str
    link: str
    params: Dict[str, object]
    lhs: object
    rhs: object
    deviation: Optional[float]
    relative: Optional[float]
    tolerance: float
    passed: bool
    runtime: float = field(default=0.0, compare=False)

    def to_json(self) -> dict:
        data = {"identity": self.identity, "link": self.link}
        data.update(self.params)
        data.update(
            {
                "lhs": _json_value(self.lhs),
                "rhs": _json_value(self.rhs),
                "dev": self.deviation,
                "rel": self.relative,
                "tolerance": self.tolerance,
                "pass": self.passed,
            }
        )
        return data


def _json_value(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if hasattr(value, "imag"):
        ctx = root_context(DEFAULT_BITS)
        return {
            "re": ctx.nstr(ctx.mpf(value.real), 30),
            "im": ctx.nstr(ctx.mpf(value.imag), 30),
        }
    return str(value)


def _numeric(value):
    return value.value if isinstance(value, RootValue) else value


def numeric_report(
    identity: str,
    link: str,
    params: dict,
    lhs,
    rhs,
    tolerance: float,
    start: float,
    up_to_sign: bool = False,
) -> SpecializationReport:
    x, y = _numeric(lhs), _numeric(rhs)
    deviation = abs(x - y)
    if up_to_sign:
        deviation = min(deviation, abs(x + y))
    relative = deviation / max(1, abs(x), abs(y))
    report = SpecializationReport(
        identity,
        link,
        params,
        lhs,
        rhs,
        float(deviation),
        float(relative),
        tolerance,
        bool(relative <= tolerance),
        perf_counter() - start,
    )
    _log_report(report)
    return report


def exact_report(
    identity: str, link: str, params: dict, lhs, rhs, start: float
) -> SpecializationReport:
    passed = bool(lhs == rhs)
    report = SpecializationReport(
        identity,
        link,
        params,
        lhs,
        rhs,
        0.0 if passed else None,
        0.0 if passed else None,
        0.0,
        passed,
        perf_counter() - start,
    )
    _log_report(report)
    return report


def _log_report(report: SpecializationReport):
    if report.passed:
        logger.info(
            "%s on %s passed in %.3fs",
            report.identity, report.link, report.runtime,
        )
    else:
        logger.warning(
            "%s on %s failed: deviation %s",
            report.identity, report.link, report.deviation,
        )


def _name(link: LinkPresentation, name: Optional[str]) -> str:
    return name or str(link.braid)


# Identity checks


def verify_lg2k(
    link: LinkPresentation,
    N: int,
    name: Optional[str] = None,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> SpecializationReport:
    """Kashaev's invariant against the sl(N-1|1) route at the conjugate root.

    Path A is N e^(i pi (N-1)/2) d(V_1) psi_(N-2)(theta^-w H') at
    q = exp(-i pi/N), H' colored by the column [1^(N-1)]; path B is
    kashaev(link, N).
    """
    if N < 3:
        raise ValueError(f"The column route needs N >= 3: {N}")
    start = perf_counter()
    cl = ColoredLink.uniform(link, Partition((1,) * (N - 1)))
    _check_budget(cl, max_strands)
    reduced = reduced_colored_homfly(cl, 0, max_strands=max_strands)
    unframed = reduced * twist_eigenvalue(cl.colors[0]) ** (-link.fdeg)
    column = eval_root(
        psi_delta(unframed, N - 2),
        N,
        conjugate=True,
        bits=bits,
        require_integral=True,
    )
    dimension = eval_root(
        modified_dimension(N - 1, 1), N, conjugate=True, bits=bits
    )
    ctx = root_context(bits)
    path_a = N * ctx.expjpi(ctx.mpf(N - 1) / 2) * dimension.value * column.value
    path_b = kashaev(link, N, bits=bits, max_strands=max_strands)
    return numeric_report(
        "lg_kashaev",
        _name(link, name),
        {"N": N},
        path_a,
        path_b,
        tolerance,
        start,
    )


def verify_theta_psi(
    x: Scalar,
    delta: int,
    N: int,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
    name: str = "scalar",
) -> SpecializationReport:
    """psi_delta(Theta(x)) at exp(i pi/N) against psi_(N-delta)(x) at the
    conjugate root, for x free of a."""
    if not x.is_a_free:
        raise ValueError("The duality check needs a value free of a")
    if delta in (0, N):
        raise ValueError(f"delta must differ from 0 and N: {delta}")
    start = perf_counter()
    lhs = eval_root(psi_delta(x.theta(), delta), N, bits=bits)
    rhs = eval_root(psi_delta(x, N - delta), N, conjugate=True, bits=bits)
    return numeric_report(
        "theta_psi", name, {"delta": delta, "N": N}, lhs, rhs, tolerance, start
    )


def verify_lpsi(
    cl: ColoredLink,
    delta: int,
    N: int,
    cut: int = 0,
    name: Optional[str] = None,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SpecializationReport:
    """(a^-1 v)^w H'(colors) under psi_delta at exp(i pi/N) against
    (a^-1 v)^w H'(conjugate colors) under psi_(N-delta) at the conjugate
    root, with w the framing degree of the cable.
    """
    if any(c.size >= N for c in cl.colors):
        raise ValueError(f"Colors must have fewer than {N} cells")
    if delta in (0, N):
        raise ValueError(f"delta must differ from 0 and N: {delta}")
    start = perf_counter()
    correction = _A_INV_V ** cl.framing_degree
    x = correction * reduced_colored_homfly(cl, cut)
    y = correction * reduced_colored_homfly(conjugate_coloring(cl), cut)
    lhs = eval_root(psi_delta(x, delta), N, bits=bits, require_integral=True)
    rhs = eval_root(
        psi_delta(y, N - delta),
        N,
        conjugate=True,
        bits=bits,
        require_integral=True,
    )
    params = {
        "delta": delta,
        "N": N,
        "colors": [c.to_json() for c in cl.colors],
    }
    return numeric_report(
        "level_rank_psi", _name(cl.link, name), params, lhs, rhs, tolerance, start
    )


def _alexander_at_root(link: LinkPresentation, power: int, N: int, bits: int):
    """Delta(t) at t = q^power, q = exp(i pi/N)."""
    terms = alexander_knot(link.braid).terms()
    x = QLaurent.from_exponents({e * power: c for e, c in terms.items()})
    return eval_root(x, N, bits=bits)


def verify_lg2alex(
    link: LinkPresentation,
    m: int,
    a: int,
    name: Optional[str] = None,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> SpecializationReport:
    """Delta(tau^(2m)) at tau = exp(-i pi a/m) against LG at q = exp(i pi/m).

    Raises:
        NotAKnot: for links.
    """
    if not link.is_knot:
        raise NotAKnot("The Alexander comparison is made on knots")
    start = perf_counter()
    lhs = _alexander_at_root(link, -2 * m * a, m, bits)
    rhs = eval_root(
        links_gould_direct(link, m, a, max_strands=max_strands), m, bits=bits
    )
    return numeric_report(
        "lg_alexander",
        _name(link, name),
        {"m": m, "a": a},
        lhs,
        rhs,
        tolerance,
        start,
    )


def verify_m2alex(
    link: LinkPresentation,
    m: int,
    colors: Sequence[int],
    name: Optional[str] = None,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> SpecializationReport:
    """The Conway function at t_i = q_i^m against e^(i pi (m-1)/2) M^0.

    At q = exp(i pi/m) every t_i is +-1. For knots both sides have a pole
    there, so the left side is Delta(t^2) and the right side is
    (t - 1/t) M^0 with t = q^(ma), reduced as a QFraction before it is
    evaluated. On the line q_1 = q^a the vanishing factor of d(V_a) is
    q^(cm) - q^-(cm), cm the multiple of m in [a, a + m), which contributes
    the constant cm/a.

    For links the multivariable Alexander polynomial is known up to units,
    which are +-1 at these points, so the comparison is up to sign.
    """
    start = perf_counter()
    colors = tuple(int(a) for a in colors)
    value = m_invariant(link, m, colors, max_strands=max_strands)
    params = {"m": m, "colors": list(colors)}
    if link.is_knot:
        (a,) = colors
        lhs = _alexander_at_root(link, 2 * m * a, m, bits)
        c = -(-a // m)
        regularized = value.value * QLaurent.qnum(m * a)
        ctx = root_context(bits)
        rhs = (
            ctx.expjpi(ctx.mpf(m - 1) / 2)
            * ctx.mpf(c * m) / a
            * eval_root(regularized, m, bits=bits).value
        )
        return numeric_report(
            "m_alexander", _name(link, name), params, lhs, rhs, tolerance, start
        )
    ctx = root_context(bits)
    rhs = ctx.expjpi(ctx.mpf(m - 1) / 2) * eval_root(
        value.value, m, bits=bits
    ).value
    alexander = multivariable_alexander(link)
    points = [(-1) ** a for a in colors]
    lhs = ctx.mpf(int(alexander(*[t * t for t in points])))
    return numeric_report(
        "m_alexander",
        _name(link, name),
        params,
        lhs,
        rhs,
        tolerance,
        start,
        up_to_sign=True,
    )


def _sample_points(ctx, samples: int):
    return [ctx.expj(ctx.mpf(3 * k + 1) / 7) for k in range(samples)]


def verify_unknot_axiom(
    m: int,
    samples: int = 3,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
):
    """e^(i pi (m-1)/2) M^0(unknot)(e^(i pi/m), q_1) = 1/(q_1^m - q_1^-m)."""
    ctx = root_context(bits)
    reports = []
    for q1 in _sample_points(ctx, samples):
        start = perf_counter()
        xi = ctx.expjpi(ctx.mpf(1) / m)
        product = ctx.mpc(1)
        for i in range(m):
            product *= q1 * xi**i - 1 / (q1 * xi**i)
        lhs = ctx.expjpi(ctx.mpf(m - 1) / 2) / product
        rhs = 1 / (q1**m - q1 ** (-m))
        reports.append(
            numeric_report(
                "unknot_axiom",
                "unknot",
                {"m": m, "q1": _json_value(q1)},
                lhs,
                rhs,
                tolerance,
                start,
            )
        )
    return reports


def verify_dimension_identity(
    m: int,
    samples: int = 3,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
):
    """prod (q_1 xi^i - q_1^-1 xi^-i) = e^(i pi (m-1)/2)(q_1^m - q_1^-m)."""
    ctx = root_context(bits)
    xi = ctx.expjpi(ctx.mpf(1) / m)
    reports = []
    for q1 in _sample_points(ctx, samples):
        start = perf_counter()
        lhs = ctx.mpc(1)
        for i in range(m):
            lhs *= q1 * xi**i - 1 / (q1 * xi**i)
        rhs = ctx.expjpi(ctx.mpf(m - 1) / 2) * (q1**m - q1 ** (-m))
        reports.append(
            numeric_report(
                "dimension_identity",
                "unknot",
                {"m": m, "q1": _json_value(q1)},
                lhs,
                rhs,
                tolerance,
                start,
            )
        )
    return reports


def verify_dkash(
    N: int, bits: int = DEFAULT_BITS, tolerance: float = DEFAULT_TOLERANCE
) -> SpecializationReport:
    """d(V_1) of sl(N-1|1) at exp(i pi/N) equals e^(-i pi (N-1)/2)/N."""
    start = perf_counter()
    d = modified_dimension(N - 1, 1)
    product = QLaurent({0: 1})
    for i in range(1, N):
        product = product * QLaurent.qnum(i)
    if d != QFraction(1, product):
        return exact_report(
            "modified_dimension", "unknot", {"N": N}, d, product, start
        )
    ctx = root_context(bits)
    lhs = eval_root(d, N, bits=bits)
    rhs = ctx.expjpi(-ctx.mpf(N - 1) / 2) / N
    return numeric_report(
        "modified_dimension", "unknot", {"N": N}, lhs, rhs, tolerance, start
    )


def verify_qbinom_vanishing(
    m: int, bits: int = DEFAULT_BITS, tolerance: float = DEFAULT_TOLERANCE
):
    """The quantum binomials [m choose l], 0 < l < m, vanish at exp(i pi/m)."""
    reports = []
    for l in range(1, m):
        start = perf_counter()
        value = eval_root(psi_delta(qbinom(m, l), 1), m, bits=bits)
        reports.append(
            numeric_report(
                "qbinom_vanishing",
                "unknot",
                {"m": m, "l": l},
                value,
                0,
                tolerance,
                start,
            )
        )
    return reports


def verify_cut_independence(
    link: LinkPresentation,
    m: int,
    colors: Sequence[int],
    name: Optional[str] = None,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> SpecializationReport:
    """M^0 cut on the first component equals M^0 cut on the second."""
    if link.num_components < 2:
        raise ValueError("Cut independence needs at least two components")
    start = perf_counter()
    first = m_invariant(link, m, colors, 0, max_strands=max_strands)
    second = m_invariant(link, m, colors, 1, max_strands=max_strands)
    return exact_report(
        "cut_independence",
        _name(link, name),
        {"m": m, "colors": list(colors)},
        first.value,
        second.value,
        start,
    )


def verify_lg_paths(
    link: LinkPresentation,
    m: int,
    a: int,
    name: Optional[str] = None,
    max_strands: Optional[int] = DEFAULT_MAX_STRANDS,
) -> SpecializationReport:
    """links_gould and links_gould_direct agree exactly."""
    start = perf_counter()
    return exact_report(
        "links_gould_paths",
        _name(link, name),
        {"m": m, "a": a},
        links_gould(link, m, a, max_strands=max_strands),
        links_gould_direct(link, m, a, max_strands=max_strands),
        start,
    )


def verify_duality(
    cl: ColoredLink, name: Optional[str] = None
) -> SpecializationReport:
    """Theta(H(L, colors)) = H(L, conjugate colors), exactly."""
    start = perf_counter()
    return exact_report(
        "rank_level_duality",
        _name(cl.link, name),
        {"colors": [c.to_json() for c in cl.colors]},
        colored_homfly(cl).theta(),
        colored_homfly(conjugate_coloring(cl)),
        start,
    )


def verify_kashaev_determinant(
    link: LinkPresentation,
    name: Optional[str] = None,
    bits: int = DEFAULT_BITS,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SpecializationReport:
    """|K_2| equals the determinant |Delta(-1)|."""
    start = perf_counter()
    lhs = abs(kashaev(link, 2, bits=bits).value)
    rhs = determinant(link.braid)
    return numeric_report(
        "kashaev_determinant",
        _name(link, name),
        {"N": 2},
        lhs,
        rhs,
        tolerance,
        start,
    )


def verify_quantum_dimension(
    partition: Partition, m: int
) -> SpecializationReport:
    """psi_m of the colored unknot is the sl(m) quantum dimension."""
    start = perf_counter()
    lhs = psi_delta(colored_homfly(colored_unknot(partition)), m)
    rhs = psi_delta(quantum_dimension(partition, m), m)
    return exact_report(
        "quantum_dimension",
        "unknot",
        {"m": m, "partition": partition.to_json()},
        lhs,
        rhs,
        start,
    )



def _random_hecke(rng: random.Random, strands: int, terms: int = 4):
    out = {}
    for _ in range(terms):
        pi = tuple(rng.sample(range(strands), strands))
        c = Scalar.monomial(s=rng.randint(-2, 2), coeff=rng.randint(1, 3))
        out[pi] = out.get(pi, ZERO) + c
    return HeckeElement(strands, out)


def verify_idempotent_minimal(
    partition: Partition, samples: int = 10, seed: int = 0
) -> List[SpecializationReport]:
    """E z E is a scalar multiple of E for random z in H_r.

    The scalar is allowed to be zero.
    """
    E = build_idempotent(partition).unnormalized
    rng = random.Random(f"{seed}:{partition}")
    reports = []
    for k in range(samples):
        start = perf_counter()
        z = _random_hecke(rng, partition.size)
        sandwich = E * z * E
        ratio = ZERO if sandwich.is_zero else sandwich.ratio_to(E)
        reports.append(
            exact_report(
                "idempotent_minimal",
                str(partition),
                {"sample": k},
                sandwich,
                None if ratio is None else E.scale(ratio),
                start,
            )
        )
    return reports
