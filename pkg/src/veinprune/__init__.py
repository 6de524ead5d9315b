"""Finite posets, veins, the pruning order, and irreducible elements.

The library half: build a :class:`Poset` from relation pairs, ask for its
veins (irreducible convex chains), prune it (keep x below y only when some
maximal chain of [x, y] dodges every strict vein), and profile which
elements are irreducible. Every structural fact ships in two routes, a
definition-level oracle and a fast cover-graph algorithm, selected with a
``mode`` argument and played against each other by the property suite.

The tool half lives in :mod:`veinprune.cli` as the ``veinprune`` command.
"""

from . import irreducibles as _irreducibles
from . import pruning as _pruning
from . import veins as _veins
from .connectivity import SetFamily
from .errors import (
    CycleDetected,
    DuplicateLabel,
    EmptySet,
    InternalOrderViolation,
    InvalidSpec,
    MemberNotSubset,
    NotAChain,
    NotAConnectivity,
    NotComparable,
    NotConditionallyComplete,
    ParseError,
    PreconditionViolated,
    TooLarge,
    UnknownLabel,
    VeinpruneError,
)
from .families import (
    FIXTURE_NAMES,
    KINDS,
    GenSpec,
    antichain_poset,
    boolean_poset,
    chain_poset,
    downset_corpus,
    downset_lattice,
    fence_poset,
    fixtures,
    generate,
    random_corpus,
    random_poset,
)
from .formats import (
    PosetDocument,
    emit_dot,
    emit_json,
    emit_text,
    load_document,
    parse_json,
    parse_text,
)
from .irreducibles import (
    IrreducibilityProfile,
    PreservationReport,
    coirreducibles,
    doubly_irreducibles,
    is_coirreducible,
    is_irreducible,
    is_irreducible_via_meet,
    irreducibles,
    preservation_report,
    profiles,
)
from .poset import Poset
from .pruning import (
    PruneIteration,
    PruneReport,
    PruneWitness,
    cover_inheritance_check,
    iterate_prune,
    prune,
    pruning_leq,
    pruning_witness,
    star_chain_check,
)
from .suite import CheckOutcome, SuiteResult, Violation, run_suite
from .veins import (
    all_chains,
    bridge_edges,
    check_covering_characterization,
    irreducible_chain_family,
    is_irreducible_chain,
    is_vein,
    maximal_irreducible_chains,
    maximal_veins,
    strict_veins,
    vein_family,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memoized per-poset table.

    The caches are keyed by poset value, so value-equal posets share
    entries; clear them when timing the fast and oracle routes against
    each other, or to release memory after a large run.
    """
    _veins._maximal_chain_masks.cache_clear()
    _veins._bridge_pairs_ix.cache_clear()
    _veins._bridge_paths_ix.cache_clear()
    _pruning._strict_vein_masks.cache_clear()
    _pruning._star_above.cache_clear()
    _irreducibles._proper_meets.cache_clear()
