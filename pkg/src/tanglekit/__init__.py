"""Tanglegrams built from caterpillar trees and permutations.

The package builds tanglegrams, decides when one sits inside another as an
induced subtanglegram, verifies that a built-in permutation family is
pairwise incomparable under that order, tests layouts for planarity, and
renders crossing-minimal drawings.
"""

from .antichain import (
    AntichainReport,
    ChainCheck,
    ChainReport,
    PatternCheck,
    pi_seq,
    rho,
    verify_antichain,
    verify_chain,
)
from .errors import BudgetExceededError, InvalidLayoutError, TangleError
from .layout import (
    DEFAULT_SIZE_CAP,
    Layout,
    count_crossings,
    count_inversions,
    crossing_number,
    excluded_tanglegrams,
    is_planar,
    is_planar_catergram,
    layout_permutation,
    min_crossing_layout,
    planar_layout,
    rho_layout,
)
from .perm import (
    Permutation,
    bar_members,
    bar_set,
    contains_pattern,
    entries_preceded_by_larger,
    hat,
    is_cater_good,
    is_unimodal,
    restrict,
    standardize,
    star,
    tilde,
    upside_down,
)
from .render import DrawingSpec, to_svg, to_text, to_tikz
from .tanglegram import (
    DistancePairMultiset,
    Tanglegram,
    catergram,
    catergram_permutation,
    canonical_form,
    distance_pairs,
    enumerate_tanglegrams,
    equal,
    format_tanglegram,
    induced_on_left,
    induced_subtanglegram,
    is_catergram,
    is_induced_sub,
    parse_tanglegram,
)
from .trees import RootedBinaryTree, caterpillar

__version__ = "0.1.0"

__all__ = [
    "AntichainReport",
    "BudgetExceededError",
    "ChainCheck",
    "ChainReport",
    "DEFAULT_SIZE_CAP",
    "DistancePairMultiset",
    "DrawingSpec",
    "InvalidLayoutError",
    "Layout",
    "PatternCheck",
    "Permutation",
    "RootedBinaryTree",
    "TangleError",
    "Tanglegram",
    "bar_members",
    "bar_set",
    "canonical_form",
    "catergram",
    "catergram_permutation",
    "caterpillar",
    "contains_pattern",
    "count_crossings",
    "count_inversions",
    "crossing_number",
    "distance_pairs",
    "entries_preceded_by_larger",
    "enumerate_tanglegrams",
    "equal",
    "excluded_tanglegrams",
    "format_tanglegram",
    "hat",
    "induced_on_left",
    "induced_subtanglegram",
    "is_catergram",
    "is_cater_good",
    "is_induced_sub",
    "is_planar",
    "is_planar_catergram",
    "is_unimodal",
    "layout_permutation",
    "min_crossing_layout",
    "parse_tanglegram",
    "pi_seq",
    "planar_layout",
    "restrict",
    "rho",
    "rho_layout",
    "standardize",
    "star",
    "tilde",
    "to_svg",
    "to_text",
    "to_tikz",
    "upside_down",
    "verify_antichain",
    "verify_chain",
]
