"""Knot projections on the sphere: flat moves, circle arrangements, census."""
from .errors import (
    InvalidArc,
    LimitExceeded,
    MalformedCode,
    NotDoubleOccurrence,
    NotSpherical,
    RealizationFailed,
    ShadowError,
    StaleSite,
)
from .projection import (
    FULL,
    ORIENTED,
    TRIVIAL,
    Arc,
    CanonicalCode,
    KnotProjection,
    canonical_code,
    closed_intervals,
    connected_sum,
    faces,
    is_isotopic,
    is_prime,
    is_spherical,
    mirror,
    parse_gauss,
    serialize_gauss,
    to_record,
)
from .moves import (
    MoveSite,
    apply_move,
    connect_search,
    find_moves,
    full_equiv,
    inflate,
    random_moves,
    reduce,
    strong_equiv,
    weak_equiv,
)
from .circles import (
    CircleArrangement,
    ahu_code,
    arrangement_name,
    circle_number,
    glue_trees,
    non_seifert_resolve,
    parse_tree,
    trees_with_edges,
    x_invariant,
)
from .realization import gadget_library, primify, realize_arrangement, realize_prime
from .census import InvariantRecord, enumerate_projections, invariant_record, tabulate

__version__ = "0.1.0"
