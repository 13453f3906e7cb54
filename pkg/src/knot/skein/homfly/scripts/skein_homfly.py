#!/usr/bin/env python

"""Compute colored HOMFLY-PT polynomials and their specializations."""

import argparse
import json
import logging
import os
import sys
import warnings
from typing import List, Optional

from knot.skein.homfly._config import Settings, load_settings
from knot.skein.homfly._errors import (
    GeneratorIndexError,
    MixedColors,
    NotAKnot,
    NotRepresentable,
    ParseError,
    SkeinError,
)
from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly._verify import SUITES, run_suites
from knot.skein.homfly.braids import analyze_closure, resolve_link
from knot.skein.homfly.colored import (
    ColoredLink,
    colored_homfly,
    reduced_colored_homfly,
)
from knot.skein.homfly.oracles import (
    alexander_knot,
    conway_knot,
    multivariable_alexander,
)
from knot.skein.homfly.special import (
    kashaev,
    links_gould,
    links_gould_direct,
    m_invariant,
    verify_quantum_dimension,
)
from knot.skein.homfly.young import CACHE_ENV, Partition

logger = get_homfly_logger()

RECOMMENDED_BITS = 192

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_VERIFICATION = 3

_USAGE_ERRORS = (
    ParseError,
    GeneratorIndexError,
    NotAKnot,
    NotRepresentable,
    MixedColors,
)

DESCRIPTION = """Exact colored HOMFLY-PT polynomials of braid closures, and
their specializations to Kashaev's invariant, the sl(m|1) invariants at
integer colors and the Links-Gould invariant.

Links are given as braid words ``BR[n; g1 g2 ...]`` or by one of the names
unknot, hopf, trefoil, figure-eight, torus-2-4. Results are written as JSON.
"""


def main() -> None:
    """Entry point from command line."""
    sys.exit(run(sys.argv[1:]))


def run(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit code.

    0 on success, 1 on a computation error, 2 on a usage error and 3 when
    a verification suite does not pass.
    """
    parser = _get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK

    logger.setLevel(logging.WARNING)
    if args.verbose:
        logger.setLevel(logging.INFO)
    if args.debug:
        logger.setLevel(logging.DEBUG)

    try:
        _check_arguments(args)
        settings = load_settings(
            args.config,
            bits=args.bits,
            threads=args.threads,
        )
        if settings.cache_dir:
            os.environ[CACHE_ENV] = settings.cache_dir
        if args.command == "verify" and args.list:
            _write({"suites": sorted(SUITES)}, args.out)
            return EXIT_OK
        data = _COMMANDS[args.command](args, settings)
    except _USAGE_ERRORS as err:
        return _fail(err, EXIT_USAGE, args.out)
    except SkeinError as err:
        return _fail(err, EXIT_COMPUTATION, args.out)
    except (ValueError, IndexError) as err:
        return _fail(err, EXIT_USAGE, args.out)
    except ArithmeticError as err:
        return _fail(
            err, EXIT_COMPUTATION, args.out, kind="arithmetic_error"
        )

    _write(data, args.out)
    if args.command == "verify" and (data["failed"] or data["error"]):
        return EXIT_VERIFICATION
    return EXIT_OK


def _fail(
    err: Exception,
    code: int,
    out: Optional[str],
    kind: Optional[str] = None,
) -> int:
    kind = kind or getattr(err, "kind", "usage_error")
    logger.error("%s: %s", kind, err)
    _write({"error": {"kind": kind, "message": str(err)}}, out)
    return code


def _write(data: dict, out: Optional[str]):
    text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as stream:
            stream.write(text)
        logger.info("Wrote %s", out)
    else:
        sys.stdout.write(text)


def _parse_colors(text: str) -> List[Partition]:
    """'2,1;1' -> [Partition((2, 1)), Partition((1,))]."""
    colors = [Partition.parse(part) for part in text.split(";")]
    if any(not c.parts for c in colors):
        raise ValueError(f"Empty partition in colors {text!r}")
    return colors


def _parse_integers(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as err:
        raise ValueError(f"Expected comma separated integers: {text!r}") from err


def _colored_link(args) -> ColoredLink:
    link = analyze_closure(resolve_link(args.braid))
    colors = _parse_colors(args.colors)
    if len(colors) == 1:
        return ColoredLink.uniform(link, colors[0])
    return ColoredLink(link, tuple(colors))


# Commands


def _homfly(args, settings: Settings) -> dict:
    b = resolve_link(args.braid)
    link = analyze_closure(b)
    value = colored_homfly(
        ColoredLink.uniform(link, Partition((1,))),
        max_strands=settings.max_strands,
    ).canonical()
    return {
        "braid": b.to_json(),
        "link": link.to_json(),
        "fdeg": value.fdeg,
        "homfly": value.to_json(),
    }


def _colored(args, settings: Settings) -> dict:
    cl = _colored_link(args)
    value = colored_homfly(
        cl, absorb=args.absorb, max_strands=settings.max_strands
    ).canonical()
    data = cl.to_json()
    data.update({"fdeg": value.fdeg, "homfly": value.to_json()})
    return data


def _reduced(args, settings: Settings) -> dict:
    cl = _colored_link(args)
    value = reduced_colored_homfly(
        cl,
        args.cut - 1,
        absorb=args.absorb,
        max_strands=settings.max_strands,
    )
    data = cl.to_json()
    data.update({"cut": args.cut, "fdeg": value.fdeg, "reduced": value.to_json()})
    return data


def _kashaev(args, settings: Settings) -> dict:
    b = resolve_link(args.braid)
    value = kashaev(
        analyze_closure(b),
        args.N,
        bits=settings.bits,
        max_strands=settings.max_strands,
    )
    return {
        "braid": b.to_json(),
        "N": args.N,
        "kashaev": value.to_json(),
        "abs": str(abs(value)),
    }


def _msl(args, settings: Settings) -> dict:
    b = resolve_link(args.braid)
    link = analyze_closure(b)
    colors = _parse_integers(args.colors)
    if len(colors) == 1:
        colors = colors * link.num_components
    value = m_invariant(
        link, args.m, colors, args.cut - 1, max_strands=settings.max_strands
    )
    return {"braid": b.to_json(), "m_invariant": value.to_json()}


def _lg(args, settings: Settings) -> dict:
    b = resolve_link(args.braid)
    link = analyze_closure(b)
    compute = links_gould_direct if args.direct else links_gould
    value = compute(link, args.m, args.a, max_strands=settings.max_strands)
    return {
        "braid": b.to_json(),
        "m": args.m,
        "a": args.a,
        "links_gould": value.to_json(),
    }


def _alexander(args, settings: Settings) -> dict:
    b = resolve_link(args.braid)
    link = analyze_closure(b)
    if link.is_knot:
        return {
            "braid": b.to_json(),
            "alexander": alexander_knot(b).to_json(),
            "conway": conway_knot(b).to_json(),
        }
    return {
        "braid": b.to_json(),
        "alexander": multivariable_alexander(link).to_json(),
    }


def _qdim(args, settings: Settings) -> dict:
    report = verify_quantum_dimension(Partition.parse(args.partition), args.m)
    return report.to_json()


def _verify(args, settings: Settings) -> dict:
    return run_suites(args.suites, settings)


_COMMANDS = {
    "homfly": _homfly,
    "colored": _colored,
    "reduced": _reduced,
    "kashaev": _kashaev,
    "msl": _msl,
    "lg": _lg,
    "alexander": _alexander,
    "qdim": _qdim,
    "verify": _verify,
}


def _get_parser() -> argparse.ArgumentParser:
    """Construct parser object for skein_homfly."""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", type=str, help="YAML settings file", default=None
    )
    common.add_argument(
        "--threads", type=int, help="Set number of threads to use.", default=None
    )
    common.add_argument(
        "--bits",
        type=int,
        help="Precision of root-of-unity evaluation in bits (default 192)",
        default=None,
    )
    common.add_argument(
        "--out", type=str, help="Write JSON here instead of stdout"
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Verbose output"
    )
    common.add_argument(
        "--debug",
        action="store_true",
        help="Debug output, more verbose than --verbose",
    )

    parser = argparse.ArgumentParser(
        prog="skein_homfly",
        description=DESCRIPTION,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", parents=[common], help="HOMFLY-PT polynomial")
    p.add_argument("braid", type=str, help="braid word or link name")

    for name, helptext in (
        ("colored", "colored HOMFLY-PT polynomial"),
        ("reduced", "reduced colored HOMFLY-PT polynomial"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("braid", type=str, help="braid word or link name")
        p.add_argument(
            "--colors",
            type=str,
            required=True,
            help="partitions per component, e.g. '2,1;1'",
        )
        p.add_argument(
            "--absorb",
            action="store_true",
            help="one idempotent per component instead of per strand",
        )
        if name == "reduced":
            p.add_argument(
                "--cut", type=int, default=1, help="1-based cut component"
            )

    p = sub.add_parser("kashaev", parents=[common], help="Kashaev invariant")
    p.add_argument("braid", type=str, help="braid word or link name")
    p.add_argument("--N", type=int, required=True, help="root parameter")

    p = sub.add_parser(
        "msl", parents=[common], help="sl(m|1) invariant at integer colors"
    )
    p.add_argument("braid", type=str, help="braid word or link name")
    p.add_argument("--m", type=int, required=True, help="rank m >= 2")
    p.add_argument(
        "--colors", type=str, required=True, help="colors a_i, e.g. '1,2'"
    )
    p.add_argument(
        "--cut", type=int, default=1, help="1-based cut component"
    )

    p = sub.add_parser("lg", parents=[common], help="Links-Gould invariant")
    p.add_argument("braid", type=str, help="braid word or link name")
    p.add_argument("--m", type=int, required=True, help="rank m >= 2")
    p.add_argument("--a", type=int, required=True, help="color a >= 1")
    p.add_argument(
        "--direct",
        action="store_true",
        help="use psi_(m-1) of the unframed polynomial",
    )

    p = sub.add_parser(
        "alexander", parents=[common], help="Alexander polynomial"
    )
    p.add_argument("braid", type=str, help="braid word or link name")

    p = sub.add_parser(
        "qdim", parents=[common], help="quantum dimension check"
    )
    p.add_argument("partition", type=str, help="partition, e.g. '2,1'")
    p.add_argument("--m", type=int, required=True, help="rank m")

    p = sub.add_parser(
        "verify", parents=[common], help="run verification suites"
    )
    p.add_argument(
        "suites", nargs="*", default=["all"], help="suite names or 'all'"
    )
    p.add_argument(
        "--list", action="store_true", help="list the suite names"
    )

    return parser


def _check_arguments(args) -> None:
    """Do sanity check of the input arguments."""

    logger.debug("Running check_arguments()")
    logger.debug("Arguments are: %s", str(vars(args)))

    if args.bits is not None and args.bits < RECOMMENDED_BITS:
        warnings.warn(
            f"Precision of {args.bits} bits is below the recommended "
            f"{RECOMMENDED_BITS}"
        )

    if getattr(args, "N", None) is not None and args.N < 2:
        raise ValueError(f"--N must be at least 2: {args.N}")
    if getattr(args, "m", None) is not None and args.m < 2:
        raise ValueError(f"--m must be at least 2: {args.m}")
    if getattr(args, "a", None) is not None and args.a < 1:
        raise ValueError(f"--a must be at least 1: {args.a}")
    if getattr(args, "cut", None) is not None and args.cut < 1:
        raise ValueError(f"--cut is 1-based: {args.cut}")
    if args.command == "verify" and not args.list:
        unknown = sorted(
            set(args.suites) - set(SUITES) - {"all"}
        )
        if unknown:
            raise ValueError(f"Unknown suite(s): {', '.join(unknown)}")

    logger.debug("check_arguments() has ended")


if __name__ == "__main__":
    main()
