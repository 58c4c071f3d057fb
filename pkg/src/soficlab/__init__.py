"""Sofic shifts, their syntactic semigroups, and flow-invariance checks."""

from .errors import (
    AlphabetMismatch,
    CapExceeded,
    EmptyShift,
    InputError,
    NotIdempotent,
    NotPrimitive,
    ParseError,
    ResourceError,
    SearchTimeout,
    SoficlabError,
    SymbolClash,
    TooShort,
    UAbsent,
    UnknownEdge,
    UnknownObject,
    UnknownSymbol,
)
from .shift import (
    EXPANSION_SYMBOL,
    Alphabet,
    BlockMap,
    DyckGraph,
    Presentation,
    Substitution,
    Word,
    apply_block_map,
    blocks,
    contains_block,
    higher_block,
    incidence_matrix,
    is_full_shift,
    is_irreducible,
    is_primitive,
    load_dyck_graph,
    load_presentation,
    markov_dyck_member,
    parse_dyck_word,
    parse_substitution,
    recurrence_bound,
    render_presentation,
    shift_from_forbidden,
    substitution_blocks,
    symbol_expansion,
    trim_essential,
)
from .semigroups import (
    Dfa,
    FiniteSemigroup,
    GreenJ,
    SemigroupMorphism,
    determinize_minimal,
    green_j,
    idempotents,
    is_aperiodic,
    is_plus_free,
    maximal_subgroup,
    minimize,
    parse_cayley_table,
    recognize,
    relation_semigroup,
    render_cayley_table,
    render_word,
    syntactic_oracle,
    syntactic_semigroup,
    transition_semigroup,
)
from .karoubi import (
    FiniteCategory,
    categories_equivalent,
    categories_isomorphic,
    dump_category,
    hom_size_matrix,
    karoubi_envelope,
    objects_isomorphic,
    skeleton,
)
from .flowlab import (
    FlowVerdict,
    HigherBlock,
    InvariantReport,
    Move,
    SymbolExpand,
    Verdict,
    apply_move,
    expansion_invariance_check,
    flow_compare,
    invariant_report,
    markov_dyck_flow_compare,
    random_presentation,
    random_proper_presentations,
)

from . import presets

__all__ = [name for name in dir() if not name.startswith("_")]
