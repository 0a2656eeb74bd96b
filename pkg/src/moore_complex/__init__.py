"""Facet-path metrics on simplicial complexes and Moore-type degree-diameter bounds."""

from .bounds import (
    BoundReport,
    check_bounds,
    diameter_lower_bound_int,
    diameter_lower_bound_real,
    moore_ball,
    theorem2_eccentricity_limit,
    theorem2_radius_bound,
)
from .combinatorics import Simplex, binomial, colex_rank, colex_unrank, faces
from .complex import (
    Complex,
    DegreeProfile,
    connected_components,
    degree,
    degree_profile,
    facet_neighbors,
    new_complex,
)
from .documents import analysis_document, parse_complex, serialize_complex
from .errors import (
    CapacityError,
    ComplexError,
    DimensionError,
    DomainError,
    InvalidEdgeError,
    InvalidSimplexError,
    ParameterError,
    ParseError,
    RankRangeError,
    UndefinedBaseError,
)
from .generators import complete, graph_import, named_graph, near_regular, random_uniform
from .metric import (
    UNREACHABLE,
    all_pairs_oracle,
    ball_growth,
    bfs_distances,
    diameter,
    eccentricity,
    metric_report,
)

__version__ = "0.1.0"
