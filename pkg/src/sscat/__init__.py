"""Finite simplicial sets, fundamental categories, covers and finite preorders."""

from .category import FiniteCategory, find_isomorphism
from .covers import (
    CoverReport,
    Representation,
    fibre,
    is_cover,
    is_left_cover,
    is_right_cover,
    pi1_cover_correspondence,
    reconstruct,
    universal_left_cover,
    verify_recfib,
)
from .errors import BudgetExceeded, CapError, NonFunctorialError, NotACoverError, PresentationError
from .fpcat import (
    CatPresentation,
    Decision,
    MorphismWord,
    RewriteSystem,
    Verdict,
    complete_rewriting,
    dpi1_surrogate,
    equivalent_to_terminal,
    free_category,
    fundamental_category,
    groupoidify,
    hom_set,
    localize,
    realize_finite,
    split_monos,
    tau_nerve_roundtrip,
    words_equal,
)
from .ordinal import OrdinalMap
from .preorder import (
    FiniteTopology,
    Poset,
    Preorder,
    Relation,
    alexandroff_opens,
    closure,
    condense,
    cosieve,
    exit_path_of_poset,
    join_structure,
    meet_structure,
    sieve,
    specialisation,
)
from .sset import (
    SimplexRef,
    SimplicialMap,
    SimplicialSet,
    boundary,
    circle,
    coproduct,
    evaluate,
    ez_normalize,
    horn,
    is_isomorphic,
    nerve,
    opposite,
    pi0,
    product,
    pullback,
    pushout,
    skeleton,
    spine,
    standard_simplex,
    validate,
    walking_retraction,
)

__version__ = "0.1.0"
