"""Topological obstructions to skeleton-preserving projections of product-like polytopes."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    ConsistencyError,
    InputError,
    PolyObstructError,
    ResourceLimitError,
    SpecParseError,
)
from .kneser import (  # noqa: E402
    chromatic_number_exact,
    kneser_graph,
    lovasz_kneser_chi,
    sarkaria_index,
)
from .polytopes import (  # noqa: E402
    FaceType,
    PolygonType,
    ProductType,
    SimplexType,
    WedgeProductType,
    coskeleton,
    coskeleton_product,
    cotype_complex,
    face_types,
    faces_of_dim,
    wedge_special_faces,
    wedge_surface,
)
from .reports import Query, Report, run_query  # noqa: E402
from .simplicial import (  # noqa: E402
    SimplicialComplex,
    f_vector,
    join,
    make_complex,
    minimal_non_faces,
    skeleton,
    union,
)
from .spec_language import parse_spec, render  # noqa: E402
