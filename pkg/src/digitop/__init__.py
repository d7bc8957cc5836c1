"""digitop: digital topology on the integer lattice.

k(t, n) adjacencies of Z^n, subset-relative digital neighborhoods, simple
closed k-curves, and exhaustive certification of C-compatible and normal
adjacencies for digital products.
"""

from .curves import (
    Admissibility,
    CurveSequence,
    admissible_length,
    canonical,
    canonical_names,
    iter_curves,
    length_rule_note,
    recognize_curve,
    search_curve,
    validate_curve,
)
from .errors import (
    DigitalTopologyError,
    DimensionMismatchError,
    FormatError,
    MembershipError,
    NotACurveError,
    ParameterError,
    UnknownAdjacencyError,
)
from .lattice import (
    AdjacencySpec,
    Point,
    adjacent,
    as_point,
    k_value,
    lattice_neighbors,
    t_from_k,
)
from .neighborhood import (
    DigitalImage,
    components,
    is_connected,
    neighborhood,
    neighborhood_1,
    path_length,
)
from .product import (
    CertOutcome,
    Certification,
    ProductImage,
    ProductReport,
    Witness,
    WitnessSide,
    analyze,
    certify_c_compatible,
    certify_normal,
    induced_c_adjacent,
    induced_n_adjacent,
    product,
)

__version__ = "0.1.0"
