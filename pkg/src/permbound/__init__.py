"""Diameters of permutation families cut out by restriction graphs."""

from .errors import (
    CyclicGraph,
    InternalInconsistency,
    LimitExceeded,
    NonUniqueExtremes,
    NotABijection,
    NotAdmissible,
    ParseError,
    SizeMismatch,
    VertexOutOfRange,
)
from .extremal import (
    DiameterReport,
    Realizer2,
    dimension_at_most_two,
    greedy_construct,
    kendall_diameter,
    kendall_extremal_pair,
    kendall_upper_bound,
    linf_diameter,
    linf_diameter_bound,
    linf_extremal_pair,
    transitive_orientation,
)
from .graph import (
    Poset,
    Reachability,
    RestrictionGraph,
    induced_subgraph,
    inverse_reachable_set,
    is_acyclic,
    parse_graph,
    reachable_set,
    to_poset,
    transitive_closure,
)
from .permutation import (
    Permutation,
    from_linear_extension,
    inversion_number,
    kendall_distance,
    linf_distance,
    satisfies,
)

__version__ = "0.1.0"
