"""Top-level package for knot.skein.homfly"""

try:
    from ._version import version

    __version__ = version
except ImportError:
    __version__ = "0.0.0"

from knot.skein.homfly._config import Settings, load_settings
from knot.skein.homfly._errors import SkeinError
from knot.skein.homfly.algebra import (
    A,
    CURL,
    DELTA,
    S,
    V,
    Z,
    QFraction,
    QLaurent,
    RootValue,
    Scalar,
    eval_root,
    psi_delta,
    qbinom,
    qfact,
    qint,
    theta_involution,
)
from knot.skein.homfly.braids import (
    STANDARD_LINKS,
    BraidWord,
    LinkPresentation,
    analyze_closure,
    cable_braid,
    parse_braid,
    resolve_link,
    split_union,
)
from knot.skein.homfly.colored import (
    ColoredLink,
    colored_homfly,
    reduced_colored_homfly,
    unframe,
)
from knot.skein.homfly.hecke import HeckeElement, hecke_from_braid, markov_eval
from knot.skein.homfly.oracles import (
    alexander_knot,
    conway_knot,
    multivariable_alexander,
    naive_skein_homfly,
)
from knot.skein.homfly.special import (
    MInvariantValue,
    SpecializationReport,
    kashaev,
    links_gould,
    links_gould_direct,
    m_invariant,
    modified_dimension,
)
from knot.skein.homfly.young import (
    Partition,
    build_idempotent,
    partition_for_color,
    partition_to_weight,
    twist_eigenvalue,
)
