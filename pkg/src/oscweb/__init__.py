"""Generalized oscillating tableaux, promotion, and rotation of webs.

The package follows one chain of ideas: a tableau records a walk of
generalized partitions; for three rows the walk is a signature/state string;
a dominant string grows into an irreducible web; promotion of the tableau
rotates the web one boundary vertex.  Enumeration and a cyclic sieving
check for rectangles round it out, with a CLI (``oscweb``) on top.
"""

from .errors import (
    BadStart,
    BadStep,
    ContainsIdentityWeb,
    IndexOutOfRange,
    InexactDivision,
    InternalError,
    LeavesChamber,
    NoMatch,
    NoReturn,
    NoRuleApplicable,
    NotAllBlack,
    NotBalanced,
    NotBoundaryVertex,
    NotDominant,
    NotLatticeWord,
    NotWeaklyDecreasing,
    ValidationError,
)
from .tableaux import (
    BULLET,
    GeneralizedOscillatingTableau,
    GeneralizedPartition,
    GrowthDiagram,
    PromotionTrace,
    SetValuedFilling,
    StandardYoungTableau,
    bullet_tableau_at_step,
    check_prime_parity,
    classical_promotion,
    classical_promotion_growth,
    from_set_valued,
    got_from_syt,
    promote_growth,
    promote_tableau,
    syt_from_got,
    to_set_valued,
    validate_got,
)
from .strings import (
    BLACK,
    STATES,
    WHITE,
    all_black,
    first_return_by_counting,
    first_return_indices,
    fork_extend_string,
    format_word,
    got_from_string,
    in_chamber,
    is_dominant,
    parse_word,
    path_from_string,
    string_from_got,
    string_from_json,
    string_of_word,
    string_to_json,
    syt_from_word,
    validate_string,
    word_from_syt,
    word_of,
)
from .webs import (
    POLICIES,
    Face,
    Web,
    boundary_string,
    canonical_form,
    contains_identity_component,
    faces,
    fork_extend,
    grow_order_independent,
    grow_web,
    left_cut,
    right_cut,
    rotate_web,
    validate_web,
    webs_equal,
)
from .rotation import (
    RotationReport,
    promotion_order,
    rotate_string,
    rotate_string_oracle,
    rotate_word_allblack,
    verify_main_theorem,
)
from .sieving import (
    CspReport,
    IntPolynomial,
    count_dominant_strings,
    csp_check,
    enumerate_dominant_strings,
    enumerate_got,
    enumerate_syt,
    hook_lengths_rectangle,
    promotion_cycle_lengths,
    q_factorial,
    q_hook_rectangle,
    q_int,
)
from .render import layout_web, parse_dot, render_dot, render_svg

__version__ = "0.1.0"

__all__ = [
    "BadStart",
    "BadStep",
    "ContainsIdentityWeb",
    "IndexOutOfRange",
    "InexactDivision",
    "InternalError",
    "LeavesChamber",
    "NoMatch",
    "NoReturn",
    "NoRuleApplicable",
    "NotAllBlack",
    "NotBalanced",
    "NotBoundaryVertex",
    "NotDominant",
    "NotLatticeWord",
    "NotWeaklyDecreasing",
    "ValidationError",
    "BULLET",
    "GeneralizedOscillatingTableau",
    "GeneralizedPartition",
    "GrowthDiagram",
    "PromotionTrace",
    "SetValuedFilling",
    "StandardYoungTableau",
    "bullet_tableau_at_step",
    "check_prime_parity",
    "classical_promotion",
    "classical_promotion_growth",
    "from_set_valued",
    "got_from_syt",
    "promote_growth",
    "promote_tableau",
    "syt_from_got",
    "to_set_valued",
    "validate_got",
    "BLACK",
    "STATES",
    "WHITE",
    "all_black",
    "first_return_by_counting",
    "first_return_indices",
    "fork_extend_string",
    "format_word",
    "got_from_string",
    "in_chamber",
    "is_dominant",
    "parse_word",
    "path_from_string",
    "string_from_got",
    "string_from_json",
    "string_of_word",
    "string_to_json",
    "syt_from_word",
    "validate_string",
    "word_from_syt",
    "word_of",
    "POLICIES",
    "Face",
    "Web",
    "boundary_string",
    "canonical_form",
    "contains_identity_component",
    "faces",
    "fork_extend",
    "grow_order_independent",
    "grow_web",
    "left_cut",
    "right_cut",
    "rotate_web",
    "validate_web",
    "webs_equal",
    "RotationReport",
    "promotion_order",
    "rotate_string",
    "rotate_string_oracle",
    "rotate_word_allblack",
    "verify_main_theorem",
    "CspReport",
    "IntPolynomial",
    "count_dominant_strings",
    "csp_check",
    "enumerate_dominant_strings",
    "enumerate_got",
    "enumerate_syt",
    "hook_lengths_rectangle",
    "promotion_cycle_lengths",
    "q_factorial",
    "q_hook_rectangle",
    "q_int",
    "layout_web",
    "parse_dot",
    "render_dot",
    "render_svg",
    "__version__",
]
