"""Gray codes for the shelling types of the boundary of the n-cube.

Standard signed permutations of {+-1, ..., +-n} pick one facet enumeration
from each orbit of the cube's symmetry group; the sign-connected ones are the
shelling types. This package converts between their encodings, enumerates
both classes as adjacent-transposition Gray codes, and checks shellings.
"""

__version__ = "0.1.0"

from .connectivity import (
    ComponentSplit,
    components,
    count_connected,
    count_standard,
    is_sign_connected,
    is_sign_connected_standard,
    is_word_connected,
)
from .core import (
    ArcDiagram,
    ArcWord,
    DimensionMismatchError,
    DoubleOccurrenceWord,
    EncodingBoundsError,
    FppInvolution,
    InvalidObjectError,
    NotStandardError,
    SignedPermutation,
    StandardPermutation,
    arcs_to_word,
    dow_to_permutation,
    involution_to_permutation,
    permutation_to_dow,
    permutation_to_involution,
    permutation_to_word,
    word_to_arcs,
    word_to_permutation,
)
from .graycode import (
    GrayCursor,
    RunDescriptor,
    connected_code,
    connected_code_next,
    cursor_at,
    full_code,
    full_code_next,
    full_code_start,
    is_adjacent_transposition,
    rank,
    run_descriptor,
    runs,
    unrank,
)
from .shelling import (
    FacetLabel,
    ShellingReport,
    enumerate_shellings,
    is_shelling,
    shelling_report,
)
from .symmetry import SignedRelabeling, apply, canonicalize, equivalent
