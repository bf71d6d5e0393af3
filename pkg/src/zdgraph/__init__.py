"""Zero-divisor graphs of finite commutative rings, divisor-graph
recognition by transitive orientation, and integer labeling synthesis."""

from .divisor import (
    CapExceededError,
    LabelingVerdict,
    Orientation,
    VertexRole,
    brute_force_recognize,
    classify_roles,
    divisor_graph_of_set,
    first_primes,
    forbidden_pattern,
    is_transitive_relation,
    orientation_from_labeling,
    recognize,
    synthesize_labeling,
    validate_labeling,
    validate_orientation,
)
from .graphs import (
    Diameter,
    Graph,
    GraphFormatError,
    build_graph,
    complement,
    connected_components,
    decode_edge_list,
    decode_graph6,
    diameter,
    encode_dot,
    encode_edge_list,
    encode_graph6,
    find_induced_embedding,
    graph_io,
    induced_subgraph,
    is_complete_bipartite,
    is_induced_embedding,
)
from .poly import (
    ContentDecomposition,
    ContentProductReport,
    Poly,
    constant_annihilator,
    content_decompose,
    content_product_check,
    fragment_polynomials,
    lift_orientation,
    parse_poly,
    poly_arithmetic,
    zero_divisor_fragment_graph,
)
from .rings import (
    Elem,
    FiniteRing,
    IdealSet,
    LocalStructure,
    MixedRingError,
    ProductSpec,
    QuotientPolySpec,
    RingSpecError,
    TableSpec,
    ZnSpec,
    annihilator,
    associated_primes,
    build_ring,
    is_prime_ideal,
    is_von_neumann_regular_elem,
    local_structure,
    parse_ring_spec,
    render_ring_spec,
    units_of,
    zero_divisors_of,
)
from .zdg import (
    Report,
    RoleCensus,
    THEOREM_KEYS,
    TheoremCheck,
    gamma,
    gamma_complement,
    gamma_diameter_tag,
    load_default_suite,
    local_orientation,
    prod_diam00_labeling,
    prod_diam01_labeling,
    prod_diam02_orientation,
    role_census,
    verify_theorem,
)

__version__ = "0.1.0"
