"""

Colored and reduced colored HOMFLY-PT polynomials of braid closures.

A coloring puts one partition on each component. The link is cabled with
the size of its color on every strand, the quasi-idempotent E of the color
is stacked on top of each block and the closure is evaluated with the
Markov trace. The normalizing scalars alpha are divided out at the end so
that the Hecke computation only sees Laurent coefficients.

"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Optional, Sequence, Tuple

from knot.skein.homfly._errors import BudgetExceeded, FramingError, MixedColors
from knot.skein.homfly._logger import get_homfly_logger
from knot.skein.homfly.algebra import ONE, Scalar
from knot.skein.homfly.braids import (
    BraidWord,
    LinkPresentation,
    analyze_closure,
    cable_braid,
)
from knot.skein.homfly.hecke import HeckeElement, markov_eval
from knot.skein.homfly.young import (
    Partition,
    build_idempotent,
    twist_eigenvalue,
)

logger = get_homfly_logger()


@dataclass(frozen=True)
class ColoredLink:
    """A braid closure with one partition per component."""

    link: LinkPresentation
    colors: Tuple[Partition, ...]

    def __post_init__(self):
        colors = tuple(
            c if isinstance(c, Partition) else Partition(tuple(c))
            for c in self.colors
        )
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.link.num_components:
            raise ValueError(
                f"{len(colors)} colors for "
                f"{self.link.num_components} components"
            )
        if any(not c.parts for c in colors):
            raise ValueError("Colors must be nonempty partitions")

    @classmethod
    def uniform(cls, link: LinkPresentation, color) -> "ColoredLink":
        if not isinstance(color, Partition):
            color = Partition(tuple(color))
        return cls(link, (color,) * link.num_components)

    @property
    def widths(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.colors)

    @property
    def framing_degree(self) -> int:
        """Framing degree of the cabled closure, w^t . lk . w."""
        return self.link.framing_form(self.widths)

    @property
    def cabled_strands(self) -> int:
        owner = self.link.strand_components
        return sum(self.colors[c].size for c in owner)

    def to_json(self) -> dict:
        return {
            "braid": self.link.braid.to_json(),
            "colors": [c.to_json() for c in self.colors],
        }


def colored_unknot(color) -> ColoredLink:
    return ColoredLink.uniform(analyze_closure(BraidWord(1)), color)


def conjugate_coloring(cl: ColoredLink) -> ColoredLink:
    """The same link colored by the conjugate partitions."""
    return ColoredLink(cl.link, tuple(c.conjugate for c in cl.colors))


def colored_homfly(
    cl: ColoredLink,
    absorb: bool = False,
    max_strands: Optional[int] = None,
) -> Scalar:
    """The colored HOMFLY-PT polynomial H(L, colors).

    Args:
        cl: the colored link.
        absorb: put one idempotent per component instead of one per strand.
        max_strands: refuse cables with more strands.

    Raises:
        BudgetExceeded: if the cable has more than max_strands strands.
        FramingError: if the result does not have the framing degree of the
            cable.
    """
    start = perf_counter()
    if max_strands is not None and cl.cabled_strands > max_strands:
        raise BudgetExceeded(
            f"cable of {cl.cabled_strands} strands exceeds {max_strands}"
        )
    owner = cl.link.strand_components
    cabled = cable_braid(cl.link, cl.widths)

    seen = set()
    blocks = []
    normalization = ONE
    for c in owner:
        color = cl.colors[c]
        if absorb and c in seen:
            blocks.append(HeckeElement.identity(color.size))
            continue
        seen.add(c)
        idempotent = build_idempotent(color)
        blocks.append(idempotent.unnormalized)
        normalization = normalization * idempotent.alpha

    top = blocks[0]
    for block in blocks[1:]:
        top = top.tensor(block)
    logger.debug(
        "Colored evaluation on %s strands, %s letters, %s top terms",
        cabled.strands, len(cabled), len(top),
    )
    value = markov_eval(top.mul_word(cabled.letters)) / normalization

    expected = cl.framing_degree
    if not value.is_zero and value.fdeg != expected:
        raise FramingError(
            f"colored value has framing degree {value.fdeg}, "
            f"expected {expected}"
        )
    logger.info(
        "Colored HOMFLY-PT of %s with colors %s in %.3fs",
        cl.link.braid,
        ";".join(str(c) for c in cl.colors),
        perf_counter() - start,
    )
    return value


def reduced_colored_homfly(
    cl: ColoredLink,
    component: int = 0,
    absorb: bool = False,
    max_strands: Optional[int] = None,
) -> Scalar:
    """H'(L, colors, L_i) = H(L, colors) / H(unknot, color of L_i).

    Args:
        cl: the colored link.
        component: 0-based index of the cut component.
    """
    if not 0 <= component < cl.link.num_components:
        raise IndexError(f"No component {component + 1} in the link")
    value = colored_homfly(cl, absorb=absorb, max_strands=max_strands)
    unknot = colored_homfly(colored_unknot(cl.colors[component]))
    return (value / unknot).canonical()


def unframe(x: Scalar, cl: ColoredLink) -> Scalar:
    """theta^-w x for a link whose components share one color.

    Raises:
        MixedColors: if the components carry different colors.
        FramingError: if the result still depends on a.
    """
    if len(set(cl.colors)) != 1:
        raise MixedColors(
            "unframing is defined only when all components share a color"
        )
    theta = twist_eigenvalue(cl.colors[0])
    value = x * theta ** (-cl.link.fdeg)
    if not value.is_zero and not value.is_a_free:
        raise FramingError(f"unframed value {value} depends on a")
    return value


def colored_homfly_of(
    b: BraidWord, colors: Sequence, absorb: bool = False
) -> Scalar:
    """Shortcut: color a braid closure and evaluate it."""
    link = analyze_closure(b)
    if len(colors) == 1 and link.num_components > 1:
        cl = ColoredLink.uniform(link, colors[0])
    else:
        cl = ColoredLink(link, tuple(colors))
    return colored_homfly(cl, absorb=absorb)
