import logging

import pytest

from knot.skein.homfly._errors import (
    GeneratorIndexError,
    ParseError,
    WidthMismatch,
)
from knot.skein.homfly.braids import (
    STANDARD_LINKS,
    BraidWord,
    analyze_closure,
    cable_braid,
    parse_braid,
    resolve_link,
    split_union,
)

logger = logging.getLogger(__name__)

TREFOIL = "BR[2; 1 1 1]"
FIGURE_EIGHT = "BR[3; 1 -2 1 -2]"
HOPF = "BR[2; 1 1]"


def test_parse_braid():
    """Braid text with spaces or commas."""
    b = parse_braid(TREFOIL)
    assert b.strands == 2
    assert b.letters == (1, 1, 1)
    assert parse_braid("BR[3;1,-2 , 1,-2]") == parse_braid(FIGURE_EIGHT)
    assert parse_braid("BR[1; ]").letters == ()
    assert str(parse_braid(FIGURE_EIGHT)) == FIGURE_EIGHT


def test_parse_errors_carry_position():
    """Malformed text raises ParseError with the offending position."""
    with pytest.raises(ParseError) as err:
        parse_braid("BR[2; 1 x]")
    assert err.value.position == 8
    with pytest.raises(ParseError):
        parse_braid("BR[0; ]")
    with pytest.raises(ParseError):
        parse_braid("BR[2; 0]")
    with pytest.raises(ParseError):
        parse_braid("BR[2; 1] trailing")
    with pytest.raises(ParseError):
        parse_braid("[2; 1]")
    with pytest.raises(ValueError):
        parse_braid("BR[2; 1")


def test_generator_out_of_range():
    """Letters must name generators 1..n-1."""
    with pytest.raises(GeneratorIndexError):
        parse_braid("BR[2; 2]")
    with pytest.raises(IndexError):
        BraidWord(3, (1, -3))


def test_resolve_link_names():
    """Standard link names resolve to their braids."""
    for name, text in STANDARD_LINKS.items():
        assert resolve_link(name) == parse_braid(text)
    assert resolve_link(" Trefoil ") == parse_braid(TREFOIL)
    assert resolve_link("BR[2; -1]").letters == (-1,)


def test_word_operations():
    """Writhe, permutation, mirror, inverse and products."""
    b = parse_braid(FIGURE_EIGHT)
    assert b.writhe == 0
    assert parse_braid(TREFOIL).writhe == 3
    assert parse_braid(TREFOIL).permutation == (1, 0)
    assert parse_braid(HOPF).permutation == (0, 1)
    assert b.mirror().letters == (-1, 2, -1, 2)
    assert b.inverse().letters == (2, -1, 2, -1)
    assert len(b * b.inverse()) == 8
    with pytest.raises(ValueError):
        b * parse_braid(TREFOIL)


def test_braid_json():
    """Braids serialize to n and word."""
    b = parse_braid(FIGURE_EIGHT)
    assert b.to_json() == {"n": 3, "word": [1, -2, 1, -2]}
    assert BraidWord.from_json(b.to_json()) == b


def test_analyze_knots():
    """Knots have one component and the writhe on the diagonal."""
    trefoil = analyze_closure(parse_braid(TREFOIL))
    assert trefoil.is_knot
    assert trefoil.linking_matrix == ((3,),)
    assert trefoil.fdeg == 3
    figure_eight = analyze_closure(parse_braid(FIGURE_EIGHT))
    assert figure_eight.components == ((0, 1, 2),)
    assert figure_eight.fdeg == 0


def test_analyze_links():
    """Linking numbers off the diagonal, self-writhe on it."""
    hopf = analyze_closure(parse_braid(HOPF))
    assert hopf.num_components == 2
    assert hopf.components == ((0,), (1,))
    assert hopf.linking_matrix == ((0, 1), (1, 0))
    assert hopf.framing_form((1, 1)) == 2
    torus = analyze_closure(resolve_link("torus-2-4"))
    assert torus.linking_matrix == ((0, 2), (2, 0))
    assert torus.to_json() == {
        "components": [[1], [2]],
        "lk": [[0, 2], [2, 0]],
        "fdeg": 4,
    }
    unlink = analyze_closure(BraidWord(2))
    assert unlink.linking_matrix == ((0, 0), (0, 0))


def test_cable_framing_degree():
    """The writhe of a cable is w^t . lk . w."""
    for text, widths in (
        (TREFOIL, (2,)),
        (TREFOIL, (3,)),
        (HOPF, (1, 2)),
        (HOPF, (2, 2)),
        (FIGURE_EIGHT, (2,)),
        ("BR[2; -1 -1]", (2, 1)),
    ):
        link = analyze_closure(parse_braid(text))
        cable = cable_braid(link, widths)
        assert cable.writhe == link.framing_form(widths)
        logger.debug("Cable of %s by %s: %s", text, widths, cable)


def test_cable_preserves_components():
    """A cable of a knot by r has r components when r > 1."""
    link = analyze_closure(parse_braid(TREFOIL))
    cable = cable_braid(link, (2,))
    assert cable.strands == 4
    assert len(cable) == 12
    assert analyze_closure(cable).num_components == 2
    assert cable_braid(link, (1,)) == parse_braid(TREFOIL)


def test_cable_widths():
    """Widths per component or per strand; strands of one component agree."""
    link = analyze_closure(parse_braid(TREFOIL))
    assert cable_braid(link, (2, 2)) == cable_braid(link, (2,))
    with pytest.raises(WidthMismatch):
        cable_braid(link, (1, 2))
    with pytest.raises(ValueError):
        cable_braid(link, (0,))
    with pytest.raises(ValueError):
        cable_braid(link, (1, 1, 1))


def test_split_union():
    """The distant union shifts the second braid to the right."""
    b = split_union(parse_braid(TREFOIL), parse_braid("BR[2; -1]"))
    assert b == parse_braid("BR[4; 1 1 1 -3]")
    link = analyze_closure(b)
    assert link.num_components == 2
    assert link.linking_matrix == ((3, 0), (0, -1))
