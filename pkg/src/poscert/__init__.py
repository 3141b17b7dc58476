"""poscert: machine-checkable cofibrancy certificates for finite posets.

The package builds and independently verifies derivation trees showing that
finite posets are cofibrant in the Thomason model structure and that their
minimum inclusions are cofibrations; it also enumerates posets up to
isomorphism and reproduces the small-poset catalog counts.
"""

from .catalog import CatalogEntry, certify_all, counts_table, enumerate_posets
from .certificates import (
    CofibrantCertificate,
    CofibrationCertificate,
    VerificationReport,
    deserialize,
    serialize,
    verify,
    verify_cofibrant,
)
from .colimits import (
    PushoutResult,
    Span,
    coproduct_of_maps,
    mediating_map,
    pushout,
    sequential_colimit,
)
from .formats import parse_poset_file, write_poset_file
from .functors import (
    chains_map,
    chains_poset,
    power_lattice,
    sd2_boundary,
    sd2_simplex,
    sd_boundary,
    sd_simplex,
    vertex_inclusion,
)
from .poset import (
    CanonicalForm,
    MonotoneMap,
    Poset,
    antichain,
    canonical_form,
    chain,
    compose,
    connected_components,
    coproduct,
    down_set,
    empty_poset,
    from_covers,
    from_relation,
    identity,
    is_monotone,
    opposite,
    singleton,
    up_set,
)
from .recognize import (
    Classification,
    classify,
    is_chain,
    is_join_semilattice,
    is_meet_semilattice,
    is_tree_poset,
    is_zigzag,
    tree_rank,
)
from .search import RetractionQuery, retraction_search
from .smallcat import lemma_retpush, small_poset_witness
from .witnesses import (
    WitnessReport,
    bool_minus_top_formula_maps,
    bool_minus_top_witness,
    chain_witness,
    semilattice_witness,
    tree_witness,
    zigzag_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
