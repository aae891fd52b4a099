"""flatbasket: flat basket codes for links.

A flat basket surface is a disk with flat untwisted bands attached over
chords, bands stacked by label; its boundary is a link, and the surface
is determined by the double-occurrence word of chord labels read
counter-clockwise around the disk. This package converts braid words into
such codes, decodes codes back into link diagrams with exact integer
invariants, enumerates and classifies small codes up to the symmetries of
the disk, and renders chord diagrams.
"""

from .basket import (
    ComponentTrace,
    Crossing,
    FlatBasketCode,
    FlatBasketDiagram,
    LinkDiagram,
    chords_interleave,
    code_to_diagram,
    diagram_to_link,
    interleaving_pairs,
    lenient_relabel,
    link_of_code,
    trace_components,
    validate_code,
)
from .braid import (
    BraidWord,
    closure_component_count,
    closure_permutation,
    free_reduce,
    parse_braid,
    to_tw_form,
    tw_prefix,
)
from .coder import (
    IntermediateCode,
    LetterLabeling,
    encode,
    encode_word,
    expand_positive,
    intermediate_code,
    letter_labels,
)
from .enumeration import (
    CanonicalCode,
    ClassRecord,
    SearchResult,
    canonicalize,
    classify,
    compare_codes,
    dihedral_orbit,
    enumerate_codes,
    search_min_code,
)
from .errors import (
    BraidError,
    BudgetError,
    CodeError,
    FlatBasketError,
    LinkError,
)
from .invariants import (
    Fingerprint,
    LaurentPolynomial,
    SeifertMatrix,
    alexander,
    determinant_invariant,
    fingerprint,
    linking_number,
    pairwise_linking_abs,
    seifert_matrix,
    signature,
)
from .render import RenderSpec, render_svg

__version__ = "0.1.0"

__all__ = [
    "BraidError",
    "BraidWord",
    "BudgetError",
    "CanonicalCode",
    "ClassRecord",
    "CodeError",
    "ComponentTrace",
    "Crossing",
    "Fingerprint",
    "FlatBasketCode",
    "FlatBasketDiagram",
    "FlatBasketError",
    "IntermediateCode",
    "LaurentPolynomial",
    "LetterLabeling",
    "LinkDiagram",
    "LinkError",
    "RenderSpec",
    "SearchResult",
    "SeifertMatrix",
    "alexander",
    "canonicalize",
    "chords_interleave",
    "classify",
    "closure_component_count",
    "closure_permutation",
    "code_to_diagram",
    "compare_codes",
    "determinant_invariant",
    "diagram_to_link",
    "dihedral_orbit",
    "encode",
    "encode_word",
    "enumerate_codes",
    "expand_positive",
    "fingerprint",
    "free_reduce",
    "interleaving_pairs",
    "intermediate_code",
    "lenient_relabel",
    "letter_labels",
    "link_of_code",
    "linking_number",
    "pairwise_linking_abs",
    "parse_braid",
    "render_svg",
    "search_min_code",
    "seifert_matrix",
    "signature",
    "to_tw_form",
    "trace_components",
    "tw_prefix",
    "validate_code",
]
