"""

The verification suites behind ``skein_homfly verify``.

Each suite runs a family of checks on the standard links and returns a
list of SpecializationReports. Suites are independent and run in a
thread pool; the summary is ordered by suite name.

"""

import random
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from knot.skein.homfly._config import Settings
from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.algebra import (
    A,
    CURL,
    DELTA,
    V,
    Z,
    Scalar,
    qbinom,
    qbinom_product,
)
from knot.skein.homfly.braids import (
    STANDARD_LINKS,
    BraidWord,
    LinkPresentation,
    analyze_closure,
    parse_braid,
)
from knot.skein.homfly.colored import ColoredLink
from knot.skein.homfly.hecke import HeckeElement, hecke_from_braid, markov_eval
from knot.skein.homfly.oracles import (
    T,
    conway_knot,
    multivariable_alexander,
    naive_skein_homfly,
    unit_equivalent,
)
from knot.skein.homfly.special import (
    SpecializationReport,
    exact_report,
    kashaev,
    m_invariant,
    modified_dimension,
    numeric_report,
    verify_cut_independence,
    verify_dimension_identity,
    verify_dkash,
    verify_duality,
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
from knot.skein.homfly.young import (
    build_idempotent,
    classical_limit,
    partitions_of_size,
    twist_action,
    twist_eigenvalue,
)

logger = get_homfly_logger()

SEED = 20240917
RANDOM_WORDS = 20


def _link(name: str) -> LinkPresentation:
    return analyze_closure(parse_braid(STANDARD_LINKS[name]))


def _random_word(rng: random.Random) -> BraidWord:
    strands = rng.randint(2, 4)
    letters = []
    for _ in range(rng.randint(1, 8)):
        g = rng.randint(1, strands - 1)
        letters.append(g if rng.random() < 0.5 else -g)
    return BraidWord(strands, tuple(letters))


def _random_a_free(rng: random.Random) -> Scalar:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        e = (0, rng.randint(-3, 3), rng.randint(-2, 2))
        terms[e] = rng.randint(-3, 3) or 1
    return Scalar.from_terms(terms)


def _start() -> float:
    return time.perf_counter()


# Suites


def skein_oracle(settings: Settings) -> List[SpecializationReport]:
    """Markov trace against direct skein resolution, and the skein axioms."""
    reports = []
    words = {name: parse_braid(text) for name, text in STANDARD_LINKS.items()}
    rng = random.Random(SEED)
    for k in range(RANDOM_WORDS):
        words[f"random-{k}"] = _random_word(rng)
    for name, b in sorted(words.items()):
        start = _start()
        reports.append(
            exact_report(
                "skein_oracle",
                name,
                {"braid": str(b)},
                markov_eval(hecke_from_braid(b)),
                naive_skein_homfly(b),
                start,
            )
        )

    start = _start()
    reports.append(
        exact_report(
            "circle_value",
            "unknot",
            {},
            markov_eval(HeckeElement.identity(1)),
            DELTA,
            start,
        )
    )
    start = _start()
    reports.append(
        exact_report(
            "curl_value",
            "unknot",
            {},
            markov_eval(HeckeElement.generator(2, 1)),
            CURL * DELTA,
            start,
        )
    )
    for k in range(5):
        b = _random_word(rng)
        t = rng.randrange(len(b.letters))
        g = abs(b.letters[t])
        plus = b.letters[:t] + (g,) + b.letters[t + 1 :]
        minus = b.letters[:t] + (-g,) + b.letters[t + 1 :]
        zero = b.letters[:t] + b.letters[t + 1 :]

        def _trace(letters):
            return markov_eval(hecke_from_braid(BraidWord(b.strands, letters)))

        start = _start()
        reports.append(
            exact_report(
                "skein_relation",
                f"random-skein-{k}",
                {"braid": str(b), "crossing": t + 1},
                A ** -1 * _trace(plus) - A * _trace(minus),
                Z * _trace(zero),
                start,
            )
        )
    return reports


def idempotents(settings: Settings) -> List[SpecializationReport]:
    """Square, minimality, framing degree, twist and classical trace."""
    reports = []
    for r in range(1, 5):
        for partition in partitions_of_size(r):
            name = str(partition)
            idempotent = build_idempotent(partition)
            E = idempotent.unnormalized
            start = _start()
            reports.append(
                exact_report(
                    "idempotent_square",
                    name,
                    {},
                    E * E,
                    E.scale(idempotent.alpha),
                    start,
                )
            )
            reports += verify_idempotent_minimal(partition, seed=SEED)
            start = _start()
            reports.append(
                exact_report("idempotent_fdeg", name, {}, E.fdeg, 0, start)
            )
            start = _start()
            theta = twist_action(partition) * (A * V ** -1) ** r
            reports.append(
                exact_report(
                    "twist_eigenvalue",
                    name,
                    {},
                    theta,
                    twist_eigenvalue(partition),
                    start,
                )
            )
            start = _start()
            identity = tuple(range(r))
            limit = classical_limit(idempotent)
            total = 1
            for j in range(2, r + 1):
                total *= j
            reports.append(
                exact_report(
                    "classical_trace",
                    name,
                    {},
                    limit.get(identity, 0) * total,
                    partition.dimension,
                    start,
                )
            )
    return reports


def rank_level_duality(settings: Settings) -> List[SpecializationReport]:
    """Theta of the colored polynomial is the conjugate-colored polynomial."""
    colors = [p for r in range(1, 4) for p in partitions_of_size(r)]
    reports = []
    trefoil = _link("trefoil")
    for c in colors:
        reports.append(verify_duality(ColoredLink(trefoil, (c,)), "trefoil"))
    hopf = _link("hopf")
    for c1 in colors:
        for c2 in colors:
            reports.append(verify_duality(ColoredLink(hopf, (c1, c2)), "hopf"))
    return reports


def theta_psi(settings: Settings) -> List[SpecializationReport]:
    """Theta against the psi_delta / psi_(N-delta) exchange of roots."""
    rng = random.Random(SEED + 1)
    reports = []
    for k in range(10):
        x = _random_a_free(rng)
        for delta, N in ((1, 3), (2, 3), (2, 4), (1, 4)):
            reports.append(
                verify_theta_psi(
                    x,
                    delta,
                    N,
                    bits=settings.bits,
                    tolerance=settings.tolerance,
                    name=f"random-{k}",
                )
            )
    for name in ("trefoil", "hopf"):
        link = _link(name)
        cl = ColoredLink.uniform(link, (1,))
        for delta, N in ((2, 3), (2, 4)):
            reports.append(
                verify_lpsi(
                    cl,
                    delta,
                    N,
                    name=name,
                    bits=settings.bits,
                    tolerance=settings.tolerance,
                )
            )
    return reports


def kashaev_suite(settings: Settings) -> List[SpecializationReport]:
    """K_N of the unknot and |K_2| against the determinant."""
    reports = []
    unknot = _link("unknot")
    for N in (2, 3, 4):
        start = _start()
        value = kashaev(
            unknot, N, bits=settings.bits, max_strands=settings.max_strands
        )
        reports.append(
            numeric_report(
                "kashaev_unknot",
                "unknot",
                {"N": N},
                value,
                1,
                settings.tolerance,
                start,
            )
        )
    for name in ("trefoil", "figure-eight"):
        reports.append(
            verify_kashaev_determinant(
                _link(name),
                name,
                bits=settings.bits,
                tolerance=settings.tolerance,
            )
        )
    return reports


def lg_kashaev(settings: Settings) -> List[SpecializationReport]:
    """Kashaev's invariant through the sl(N-1|1) column route."""
    return [
        verify_lg2k(
            _link(name),
            3,
            name,
            bits=settings.bits,
            tolerance=settings.tolerance,
            max_strands=settings.max_strands,
        )
        for name in ("unknot", "trefoil", "figure-eight")
    ]


def links_gould_paths(settings: Settings) -> List[SpecializationReport]:
    """The product formula and the direct psi_(m-1) route agree."""
    return [
        verify_lg_paths(
            _link(name), 2, 1, name, max_strands=settings.max_strands
        )
        for name in ("unknot", "trefoil", "hopf", "figure-eight")
    ]


def lg_alexander(settings: Settings) -> List[SpecializationReport]:
    """Alexander polynomial against the Links-Gould value at exp(i pi/m)."""
    cases = (("trefoil", 1), ("trefoil", 2), ("figure-eight", 1))
    return [
        verify_lg2alex(
            _link(name),
            2,
            a,
            name,
            bits=settings.bits,
            tolerance=settings.tolerance,
            max_strands=settings.max_strands,
        )
        for name, a in cases
    ]


def m_alexander(settings: Settings) -> List[SpecializationReport]:
    """Conway function against M^0 at q = exp(i pi/m)."""
    cases = (
        ("trefoil", (1,)),
        ("trefoil", (2,)),
        ("hopf", (1, 1)),
        ("hopf", (1, 2)),
        ("torus-2-4", (1, 1)),
        ("torus-2-4", (1, 2)),
    )
    return [
        verify_m2alex(
            _link(name),
            2,
            colors,
            name,
            bits=settings.bits,
            tolerance=settings.tolerance,
            max_strands=settings.max_strands,
        )
        for name, colors in cases
    ]


def unknot_axiom(settings: Settings) -> List[SpecializationReport]:
    reports = []
    for m in range(2, 6):
        reports += verify_unknot_axiom(
            m, bits=settings.bits, tolerance=settings.tolerance
        )
    return reports


def dimension_identity(settings: Settings) -> List[SpecializationReport]:
    reports = []
    for m in range(2, 6):
        reports += verify_dimension_identity(
            m, bits=settings.bits, tolerance=settings.tolerance
        )
    return reports


def modified_dimension_suite(settings: Settings) -> List[SpecializationReport]:
    """M^0 of the unknot and the value of d(V_1) at exp(i pi/N)."""
    reports = []
    unknot = _link("unknot")
    for m, a in ((2, 1), (2, 2), (3, 1)):
        start = _start()
        reports.append(
            exact_report(
                "unknot_m_invariant",
                "unknot",
                {"m": m, "a": a},
                m_invariant(unknot, m, (a,)).value,
                modified_dimension(m, a),
                start,
            )
        )
    for N in range(3, 7):
        reports.append(
            verify_dkash(N, bits=settings.bits, tolerance=settings.tolerance)
        )
    return reports


def qbinom_vanishing(settings: Settings) -> List[SpecializationReport]:
    """Quantum binomials vanish at exp(i pi/m) and match the box product."""
    reports = []
    for m in range(2, 6):
        reports += verify_qbinom_vanishing(
            m, bits=settings.bits, tolerance=settings.tolerance
        )
        for l in range(m + 1):
            start = _start()
            reports.append(
                exact_report(
                    "qbinom_product",
                    "unknot",
                    {"m": m, "l": l},
                    qbinom(m, l),
                    qbinom_product(m, l),
                    start,
                )
            )
    return reports


def cut_independence(settings: Settings) -> List[SpecializationReport]:
    return [
        verify_cut_independence(
            _link(name), 2, (1, 2), name, max_strands=settings.max_strands
        )
        for name in ("hopf", "torus-2-4")
    ]


def integrality(settings: Settings) -> List[SpecializationReport]:
    """M^0 of two-component links is a Laurent polynomial."""
    reports = []
    for name in ("hopf", "torus-2-4"):
        link = _link(name)
        for colors in ((1, 1), (1, 2), (2, 2)):
            start = _start()
            value = m_invariant(
                link, 2, colors, max_strands=settings.max_strands
            )
            reports.append(
                exact_report(
                    "integrality",
                    name,
                    {"m": 2, "colors": list(colors)},
                    value.value.is_laurent,
                    True,
                    start,
                )
            )
    return reports


def quantum_dimension_suite(settings: Settings) -> List[SpecializationReport]:
    return [
        verify_quantum_dimension(partition, m)
        for m in (2, 3)
        for r in range(1, 4)
        for partition in partitions_of_size(r)
    ]


def conway_identity(settings: Settings) -> List[SpecializationReport]:
    """Conway(trefoil) - Conway(unknot) = (t - 1/t) Conway(Hopf)."""
    start = _start()
    trefoil = conway_knot(parse_braid(STANDARD_LINKS["trefoil"])).expr
    unknot = conway_knot(parse_braid(STANDARD_LINKS["unknot"])).expr
    hopf = multivariable_alexander(_link("hopf"))
    hopf_diagonal = hopf(T, T)
    lhs = (trefoil - unknot) / (T - 1 / T)
    return [
        exact_report(
            "conway_identity",
            "trefoil",
            {},
            unit_equivalent(lhs, hopf_diagonal, (T,)),
            True,
            start,
        )
    ]


SUITES: Dict[str, Callable[[Settings], List[SpecializationReport]]] = {
    "conway_identity": conway_identity,
    "cut_independence": cut_independence,
    "dimension_identity": dimension_identity,
    "idempotents": idempotents,
    "integrality": integrality,
    "kashaev": kashaev_suite,
    "lg_alexander": lg_alexander,
    "lg_kashaev": lg_kashaev,
    "links_gould_paths": links_gould_paths,
    "m_alexander": m_alexander,
    "modified_dimension": modified_dimension_suite,
    "qbinom_vanishing": qbinom_vanishing,
    "quantum_dimension": quantum_dimension_suite,
    "rank_level_duality": rank_level_duality,
    "skein_oracle": skein_oracle,
    "theta_psi": theta_psi,
    "unknot_axiom": unknot_axiom,
}


def _run_suite(args) -> dict:
    """Run one suite and classify it."""
    name, settings = args
    start = time.perf_counter()
    try:
        reports = SUITES[name](settings)
    except Exception as err:
        logger.error("Suite %s raised %s: %s", name, type(err).__name__, err)
        return {
            "suite": name,
            "status": "error",
            "error": {
                "kind": getattr(err, "kind", type(err).__name__),
                "message": str(err),
            },
        }
    status = "ok" if all(r.passed for r in reports) else "failed"
    logger.info(
        "Suite %s: %s (%s checks) in %.2fs",
        name, status, len(reports), time.perf_counter() - start,
    )
    return {
        "suite": name,
        "status": status,
        "reports": [r.to_json() for r in reports],
    }


def run_suites(
    names: Optional[Sequence[str]] = None, settings: Optional[Settings] = None
) -> dict:
    """Run verification suites in parallel.

    Args:
        names: suite names; None or ["all"] runs every suite.
        settings: run settings, defaults if omitted.

    Returns:
        A dict with the suite results sorted into "ok", "failed" and
        "error" lists, each ordered by suite name.

    Raises:
        ValueError: for an unknown suite name.
    """
    settings = settings or Settings()
    if not names or "all" in names:
        names = sorted(SUITES)
    unknown = sorted(set(names) - set(SUITES))
    if unknown:
        raise ValueError(f"Unknown verification suite(s): {', '.join(unknown)}")
    names = sorted(set(names))

    _t0 = time.perf_counter()
    with ThreadPoolExecutor(settings.threads) as executor:
        results = list(
            executor.map(_run_suite, [(name, settings) for name in names])
        )

    ok_suites = []
    failed_suites = []
    error_suites = []
    for r in results:
        status = r.get("status")
        if status == "ok":
            ok_suites.append(r)
        elif status == "failed":
            failed_suites.append(r)
        else:
            error_suites.append(r)

    _dt = time.perf_counter() - _t0
    logger.info("Summary:")
    logger.info("Suites run: %s", len(results))
    logger.info("OK: %s", len(ok_suites))
    logger.info("Failed: %s", len(failed_suites))
    logger.info("Error: %s", len(error_suites))
    logger.info("Wall time: %.2f sec", _dt)

    return {
        "ok": ok_suites,
        "failed": failed_suites,
        "error": error_suites,
    }
