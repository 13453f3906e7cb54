import logging

import pytest

from knot.skein.homfly._errors import BudgetExceeded, MixedColors
from knot.skein.homfly.algebra import A, DELTA, ONE, S, V
from knot.skein.homfly.braids import (
    analyze_closure,
    parse_braid,
    resolve_link,
    split_union,
)
from knot.skein.homfly.colored import (
    ColoredLink,
    colored_homfly,
    colored_homfly_of,
    colored_unknot,
    conjugate_coloring,
    reduced_colored_homfly,
    unframe,
)
from knot.skein.homfly.hecke import hecke_from_braid, markov_eval
from knot.skein.homfly.special import verify_duality
from knot.skein.homfly.young import Partition

logger = logging.getLogger(__name__)

ONE_BOX = Partition((1,))
ROW = Partition((2,))
COLUMN = Partition((1, 1))


def _link(name):
    return analyze_closure(resolve_link(name))


def test_colored_link_validation():
    """One nonempty partition per component."""
    hopf = _link("hopf")
    cl = ColoredLink(hopf, ((1,), (2,)))
    assert cl.colors == (ONE_BOX, ROW)
    assert cl.widths == (1, 2)
    assert cl.cabled_strands == 3
    assert cl.framing_degree == 4
    assert cl.to_json() == {"braid": {"n": 2, "word": [1, 1]}, "colors": [[1], [2]]}
    with pytest.raises(ValueError):
        ColoredLink(hopf, (ONE_BOX,))
    with pytest.raises(ValueError):
        ColoredLink.uniform(hopf, Partition(()))


def test_colored_unknot():
    """Unknot values are products over cells."""
    assert colored_homfly(colored_unknot(ONE_BOX)) == DELTA
    expected = DELTA * (V**-1 * S - V * S**-1) / (S**2 - S**-2)
    assert colored_homfly(colored_unknot(ROW)) == expected
    assert colored_homfly(colored_unknot(COLUMN)) == expected.theta()


def test_fundamental_color_is_the_markov_trace():
    """Coloring by a single box changes nothing."""
    for name in ("trefoil", "figure-eight", "hopf", "torus-2-4"):
        link = _link(name)
        expected = markov_eval(hecke_from_braid(link.braid))
        assert colored_homfly(ColoredLink.uniform(link, ONE_BOX)) == expected


@pytest.mark.timeout(120)
def test_absorbed_idempotents_agree():
    """One idempotent per component gives the same value."""
    for name, color in (("trefoil", ROW), ("hopf", ROW), ("trefoil", COLUMN)):
        cl = ColoredLink.uniform(_link(name), color)
        assert colored_homfly(cl, absorb=True) == colored_homfly(cl)


@pytest.mark.timeout(120)
def test_colored_framing_degree():
    """The colored trefoil has framing degree 12 for a two-box color."""
    cl = ColoredLink.uniform(_link("trefoil"), ROW)
    assert cl.framing_degree == 12
    assert colored_homfly(cl).fdeg == 12


def test_reduced_colored_homfly():
    """Dividing out the colored unknot."""
    trefoil = _link("trefoil")
    value = reduced_colored_homfly(ColoredLink.uniform(trefoil, ONE_BOX))
    assert value == A**3 * (V**-1 * S**2 + V**-1 * S**-2 - V)
    unknot = reduced_colored_homfly(colored_unknot(ROW))
    assert unknot == ONE
    hopf = ColoredLink(_link("hopf"), (ONE_BOX, ROW))
    first = reduced_colored_homfly(hopf, component=0)
    second = reduced_colored_homfly(hopf, component=1)
    full = colored_homfly(hopf)
    assert first * colored_homfly(colored_unknot(ONE_BOX)) == full
    assert second * colored_homfly(colored_unknot(ROW)) == full
    with pytest.raises(IndexError):
        reduced_colored_homfly(hopf, component=2)


def test_unframe():
    """The unframed trefoil is the usual HOMFLY-PT polynomial."""
    cl = ColoredLink.uniform(_link("trefoil"), ONE_BOX)
    value = unframe(reduced_colored_homfly(cl), cl)
    assert value.is_a_free
    assert value == V**2 * S**2 + V**2 * S**-2 - V**4
    mixed = ColoredLink(_link("hopf"), (ONE_BOX, ROW))
    with pytest.raises(MixedColors):
        unframe(colored_homfly(mixed), mixed)


def test_strand_budget():
    """Cables above the strand budget are refused."""
    cl = ColoredLink.uniform(_link("trefoil"), ROW)
    with pytest.raises(BudgetExceeded):
        colored_homfly(cl, max_strands=3)


def test_colored_homfly_of():
    """A single color is spread over all components."""
    b = parse_braid("BR[2; 1 1]")
    assert colored_homfly_of(b, [ONE_BOX]) == colored_homfly(
        ColoredLink.uniform(analyze_closure(b), ONE_BOX)
    )


@pytest.mark.timeout(120)
def test_conjugate_colors_are_dual():
    """Theta exchanges a coloring with its conjugate."""
    for cl in (
        ColoredLink.uniform(_link("trefoil"), ROW),
        ColoredLink(_link("hopf"), (ONE_BOX, ROW)),
        ColoredLink(_link("hopf"), (COLUMN, ROW)),
    ):
        assert conjugate_coloring(conjugate_coloring(cl)) == cl
        report = verify_duality(cl)
        assert report.passed, report.to_json()


def test_split_union_is_multiplicative():
    """H(L + unknot colored mu) = H(L) H(unknot, mu)."""
    trefoil = resolve_link("trefoil")
    for mu in (ONE_BOX, ROW):
        union = analyze_closure(split_union(trefoil, parse_braid("BR[1; ]")))
        value = colored_homfly(ColoredLink(union, (ONE_BOX, mu)))
        expected = colored_homfly(
            ColoredLink.uniform(_link("trefoil"), ONE_BOX)
        ) * colored_homfly(colored_unknot(mu))
        assert value == expected
